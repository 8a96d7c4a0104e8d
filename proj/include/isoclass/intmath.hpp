#pragma once

#include "isoclass/rational.hpp"

#include <utility>
#include <vector>

namespace isoclass {

long long isqrt_ll(long long n);  // floor(sqrt(n)), n >= 0
bool is_prime_ll(long long n);

// Ascending primes <= bound. Sieves are cached per bound (thread safe); the
// returned reference stays valid for the lifetime of the process.
const std::vector<long long>& primes_up_to(long long bound);

// (prime, exponent) pairs in ascending prime order; n >= 1.
std::vector<std::pair<long long, int>> factorize(long long n);

std::vector<long long> divisors(long long n);  // ascending, n >= 1

// true iff q = p^e for a prime p and e >= 1; fills p and e.
bool prime_power(long long q, long long& p, int& e);

// v_ell(x); infinite exactly when x = 0.
struct PadicValuation {
    long long ell = 0;
    long long v = 0;
    bool infinite = false;

    Rational abs_value() const;  // ell^{-v}; throws std::domain_error when infinite
};

PadicValuation valuation(const BigInt& x, long long ell);
PadicValuation valuation(const Rational& x, long long ell);
long long valuation_ll(long long x, long long ell);  // x != 0

// Full Kronecker symbol (D|n) for n >= 0: completely multiplicative in n,
// (D|2) by the mod-8 rule, (D|0) = [|D| = 1]. Equals the Legendre symbol for
// odd prime n not dividing D.
int kronecker_symbol(long long D, long long n);

}  // namespace isoclass
