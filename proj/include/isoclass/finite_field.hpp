#pragma once

#include <vector>

namespace isoclass {

// F_q for q = p^e <= 64. An element is its index in 0..q-1, read as the base-p
// digit vector of a polynomial c_0 + c_1 X + ... + c_{e-1} X^{e-1}; all
// operations are table lookups built once in the constructor. The reduction
// modulus is the first monic irreducible of degree e in ascending order of the
// coefficient encoding, so the representation is deterministic across runs.
class FiniteField {
public:
    FiniteField(long long p, int e);
    static FiniteField from_order(long long q);  // factors q; rejects non prime powers

    long long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }

    int add(int x, int y) const { return add_[idx(x, y)]; }
    int sub(int x, int y) const { return add_[idx(x, neg_[static_cast<size_t>(y)])]; }
    int mul(int x, int y) const { return mul_[idx(x, y)]; }
    int neg(int x) const { return neg_[static_cast<size_t>(x)]; }
    int inv(int x) const;          // throws std::domain_error on 0
    int pow(int x, long long k) const;

    int from_int(long long n) const;  // image of n in the prime subfield

    // The q elements in their canonical index order.
    std::vector<int> elements() const;

    // Coefficients of the monic reduction modulus, modulus()[i] multiplying X^i,
    // size e + 1 with modulus()[e] = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    static constexpr long long max_order = 64;

private:
    long long p_;
    int e_;
    long long q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;

    size_t idx(int x, int y) const { return static_cast<size_t>(x) * static_cast<size_t>(q_) + static_cast<size_t>(y); }
};

}  // namespace isoclass
