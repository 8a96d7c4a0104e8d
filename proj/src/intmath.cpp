#include "isoclass/intmath.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace isoclass {

long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

const std::vector<long long>& primes_up_to(long long bound) {
    if (bound < 0) bound = 0;
    static std::mutex mtx;
    static std::map<long long, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;

    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    std::vector<long long> primes;
    for (long long i = 2; i <= bound; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (long long j = i * i; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return cache.emplace(bound, std::move(primes)).first->second;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::domain_error("factorize requires n >= 1");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const size_t base = out.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool prime_power(long long q, long long& p, int& e) {
    if (q < 2) return false;
    auto fac = factorize(q);
    if (fac.size() != 1) return false;
    p = fac[0].first;
    e = fac[0].second;
    return true;
}

Rational PadicValuation::abs_value() const {
    if (infinite) throw std::domain_error("absolute value of zero has no finite l-adic exponent");
    return pow_rational(Rational(ell), static_cast<long>(-v));
}

PadicValuation valuation(const BigInt& x, long long ell) {
    if (ell < 2) throw std::invalid_argument("valuation requires a prime ell");
    if (x == 0) return PadicValuation{ell, 0, true};
    BigInt t = x;
    long long v = 0;
    while (t % ell == 0) { t /= ell; ++v; }
    return PadicValuation{ell, v, false};
}

PadicValuation valuation(const Rational& x, long long ell) {
    if (x == 0) return PadicValuation{ell, 0, true};
    const PadicValuation vn = valuation(num(x), ell);
    const PadicValuation vd = valuation(den(x), ell);
    return PadicValuation{ell, vn.v - vd.v, false};
}

long long valuation_ll(long long x, long long ell) {
    if (x == 0) throw std::domain_error("valuation_ll of zero");
    long long v = 0;
    while (x % ell == 0) { x /= ell; ++v; }
    return v;
}

int kronecker_symbol(long long D, long long n) {
    if (n < 0) throw std::invalid_argument("kronecker_symbol requires n >= 0");
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        const long long r = ((D % 8) + 8) % 8;
        if (r % 2 == 0) return 0;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (D|n) for odd n >= 1
    long long a = D % n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace isoclass
