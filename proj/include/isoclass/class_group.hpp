#pragma once

#include "isoclass/rational.hpp"

#include <vector>

namespace isoclass {

// Delta = a^2 - 4q factored as conductor^2 * delta_K with delta_K fundamental.
struct QuadraticFieldData {
    long long delta;      // negative, 0 or 1 mod 4
    long long delta_K;    // fundamental discriminant, negative
    long long conductor;  // f with delta = f^2 * delta_K

    // The quadratic character of the field: kronecker(delta_K, n).
    int chi(long long n) const;
};

// Splits a negative discriminant into (delta_K, conductor); throws
// std::invalid_argument unless delta < 0 and delta = 0 or 1 mod 4.
QuadraticFieldData quadratic_field(long long delta);

// Number of reduced primitive positive-definite forms (A, B, C) with
// B^2 - 4AC = D, |B| <= A <= C, gcd(A, B, C) = 1, and B >= 0 when |B| = A or
// A = C. Exhaustive enumeration over A <= sqrt(|D|/3); results are cached
// behind a shared lock, so concurrent callers are fine.
long long class_number(long long D);

// 6 for D = -3, 4 for D = -4, 2 otherwise (unit count of the order).
int unit_count(long long D);

// W(Delta) = sum over all d | f of h(d^2 delta_K) / w(d^2 delta_K): the
// weighted count of classes across every order between Z[gamma] and the
// maximal order. Equals the weighted isogeny class size for ordinary classes.
Rational weighted_class_number(long long delta);

// L(1, chi) = 2*pi * rational_part / sqrt(radicand), held symbolically so the
// archimedean factors can cancel exactly downstream.
struct L1ExactValue {
    Rational rational_part;  // h_K / w_K
    long long radicand;      // |delta_K|
};
L1ExactValue l1_exact(const QuadraticFieldData& K);

// Truncated Euler product prod_{ell <= bound} (1 - chi(ell)/ell)^{-1}, folded
// in ascending prime order; converges (conditionally) to l1_exact's value.
double l1_truncated(const QuadraticFieldData& K, long long prime_bound);

}  // namespace isoclass
