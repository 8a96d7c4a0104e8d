#include "isoclass/class_group.hpp"

#include "isoclass/intmath.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace isoclass {

int QuadraticFieldData::chi(long long n) const { return kronecker_symbol(delta_K, n); }

QuadraticFieldData quadratic_field(long long delta) {
    if (delta >= 0) throw std::invalid_argument("discriminant must be negative, got " + std::to_string(delta));
    const long long r4 = ((delta % 4) + 4) % 4;
    if (r4 != 0 && r4 != 1)
        throw std::invalid_argument("discriminant must be 0 or 1 mod 4, got " + std::to_string(delta));

    // delta = s * t^2 with s squarefree and negative
    long long s = -1, t = 1;
    for (const auto& [p, e] : factorize(-delta)) {
        if (e % 2 == 1) s *= p;
        for (int i = 0; i < e / 2; ++i) t *= p;
    }
    if (((s % 4) + 4) % 4 == 1) return QuadraticFieldData{delta, s, t};
    // s = 2 or 3 mod 4 forces t even, otherwise delta itself were 2 or 3 mod 4
    if (t % 2 != 0) throw std::logic_error("squarefree kernel inconsistent with discriminant congruence");
    return QuadraticFieldData{delta, 4 * s, t / 2};
}

namespace {

long long class_number_uncached(long long D) {
    if (D >= 0) throw std::invalid_argument("class number needs a negative discriminant, got " + std::to_string(D));
    const long long r4 = ((D % 4) + 4) % 4;
    if (r4 != 0 && r4 != 1)
        throw std::invalid_argument("class number needs D = 0 or 1 mod 4, got " + std::to_string(D));

    const long long parity = ((D % 2) + 2) % 2;
    const long long amax = isqrt_ll((-D) / 3);
    long long h = 0;
    for (long long A = 1; A <= amax; ++A) {
        for (long long B = -A; B <= A; ++B) {
            if (((B % 2) + 2) % 2 != parity) continue;
            const long long numc = B * B - D;
            if (numc % (4 * A) != 0) continue;
            const long long C = numc / (4 * A);
            if (C < A) continue;
            if (std::gcd(std::gcd(A, std::abs(B)), C) != 1) continue;
            if (B < 0 && (-B == A || A == C)) continue;
            ++h;
        }
    }
    return h;
}

}  // namespace

long long class_number(long long D) {
    static std::shared_mutex mtx;
    static std::map<long long, long long> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(D);
        if (it != cache.end()) return it->second;
    }
    const long long h = class_number_uncached(D);
    std::unique_lock lock(mtx);
    cache.emplace(D, h);
    return h;
}

int unit_count(long long D) {
    if (D == -3) return 6;
    if (D == -4) return 4;
    return 2;
}

Rational weighted_class_number(long long delta) {
    const QuadraticFieldData K = quadratic_field(delta);
    Rational W = 0;
    for (long long d : divisors(K.conductor)) {
        const long long D = d * d * K.delta_K;
        W += Rational(class_number(D)) / Rational(unit_count(D));
    }
    return W;
}

L1ExactValue l1_exact(const QuadraticFieldData& K) {
    return L1ExactValue{Rational(class_number(K.delta_K)) / Rational(unit_count(K.delta_K)), -K.delta_K};
}

double l1_truncated(const QuadraticFieldData& K, long long prime_bound) {
    if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
    double prod = 1.0;
    for (long long ell : primes_up_to(prime_bound)) {
        const int c = K.chi(ell);
        if (c != 0) prod *= static_cast<double>(ell) / static_cast<double>(ell - c);
    }
    return prod;
}

}  // namespace isoclass
