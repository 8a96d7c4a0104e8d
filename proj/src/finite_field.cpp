#include "isoclass/finite_field.hpp"

#include "isoclass/intmath.hpp"

#include <stdexcept>
#include <string>

namespace isoclass {

namespace {

// Dense polynomials over F_p, coefficient at index = degree.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by a monic divisor g.
Poly poly_rem(Poly f, const Poly& g, long long p) {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
        const int c = f[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            auto& slot = f[static_cast<size_t>(i - dg + j)];
            slot = static_cast<int>((((slot - static_cast<long long>(c) * g[static_cast<size_t>(j)]) % p) + p) % p);
        }
    }
    f.resize(static_cast<size_t>(dg));
    trim(f);
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    return r;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of m; ascending m orders candidates lexicographically from the top degree down.
Poly encode_monic(long long m, int d, long long p) {
    Poly f(static_cast<size_t>(d) + 1, 0);
    f[static_cast<size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) {
        f[static_cast<size_t>(i)] = static_cast<int>(m % p);
        m /= p;
    }
    return f;
}

bool is_irreducible(const Poly& f, long long p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            if (poly_rem(f, encode_monic(m, dd, p), p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(long long p, int e) : p_(p), e_(e) {
    if (!is_prime_ll(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("field degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > max_order)
            throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                        " exceeds the enumeration cap of " + std::to_string(max_order));
    }

    long long count = q_;  // p^e candidates for the lower coefficients
    for (long long m = 0; m < count; ++m) {
        Poly f = encode_monic(m, e, p);
        if (is_irreducible(f, p)) {
            modulus_ = std::move(f);
            break;
        }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");  // cannot happen

    const size_t q = static_cast<size_t>(q_);
    auto digits = [&](int x) {
        Poly d(static_cast<size_t>(e_), 0);
        for (int i = 0; i < e_; ++i) {
            d[static_cast<size_t>(i)] = static_cast<int>(x % p_);
            x = static_cast<int>(x / p_);
        }
        return d;
    };
    auto encode = [&](const Poly& f) {
        long long v = 0;
        for (size_t i = f.size(); i-- > 0;) v = v * p_ + f[i];
        return static_cast<int>(v);
    };

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    for (int x = 0; x < q_; ++x) {
        const Poly dx = digits(x);
        Poly nx = dx;
        for (auto& c : nx) c = static_cast<int>((p_ - c) % p_);
        neg_[static_cast<size_t>(x)] = encode(nx);
        for (int y = 0; y < q_; ++y) {
            const Poly dy = digits(y);
            Poly s(static_cast<size_t>(e_), 0);
            for (int i = 0; i < e_; ++i)
                s[static_cast<size_t>(i)] = static_cast<int>((dx[static_cast<size_t>(i)] + dy[static_cast<size_t>(i)]) % p_);
            add_[idx(x, y)] = encode(s);
            Poly prod = poly_rem(poly_mul(dx, dy, p_), modulus_, p_);
            prod.resize(static_cast<size_t>(e_), 0);
            mul_[idx(x, y)] = encode(prod);
        }
    }

    inv_.assign(q, -1);
    for (int x = 1; x < q_; ++x) {
        for (int y = 1; y < q_; ++y) {
            if (mul_[idx(x, y)] == 1) {
                inv_[static_cast<size_t>(x)] = y;
                break;
            }
        }
    }
}

FiniteField FiniteField::from_order(long long q) {
    long long p;
    int e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("field order must be a prime power, got " + std::to_string(q));
    return FiniteField(p, e);
}

int FiniteField::inv(int x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return inv_[static_cast<size_t>(x)];
}

int FiniteField::pow(int x, long long k) const {
    if (k < 0) {
        x = inv(x);
        k = -k;
    }
    int r = 1;
    while (k > 0) {
        if (k & 1) r = mul(r, x);
        x = mul(x, x);
        k >>= 1;
    }
    return r;
}

int FiniteField::from_int(long long n) const {
    return static_cast<int>(((n % p_) + p_) % p_);
}

std::vector<int> FiniteField::elements() const {
    std::vector<int> out(static_cast<size_t>(q_));
    for (int i = 0; i < q_; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

}  // namespace isoclass
