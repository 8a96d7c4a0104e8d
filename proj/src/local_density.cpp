#include "isoclass/local_density.hpp"

#include "isoclass/intmath.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isoclass {

namespace {

// ell^n, or -1 when it would pass the iteration cap.
long long checked_modulus(long long ell, int n) {
    long long m = 1;
    for (int i = 0; i < n; ++i) {
        if (m > density_modulus_cap / ell) return -1;
        m *= ell;
    }
    return m;
}

long long bc_pairs_at(long long m, long long ell, long long mod, int n) {
    if (m == 0) return (n + 1) * mod - n * (mod / ell);
    int k = 0;
    while (m % ell == 0) {
        m /= ell;
        ++k;
    }
    return (k + 1) * (ell - 1) * (mod / ell);
}

}  // namespace

long long count_bc_pairs(long long m, long long ell, int n) {
    if (n < 1) throw std::invalid_argument("count_bc_pairs needs n >= 1");
    if (ell < 2) throw std::invalid_argument("count_bc_pairs needs a prime ell");
    const long long mod = checked_modulus(ell, n);
    if (mod < 0)
        throw std::invalid_argument("modulus " + std::to_string(ell) + "^" + std::to_string(n) +
                                    " exceeds the counting cap");
    m %= mod;
    if (m < 0) m += mod;
    return bc_pairs_at(m, ell, mod, n);
}

long long count_charpoly_matrices(long long a, long long d, long long ell, int n, MatrixRing ring) {
    if (n < 1) throw std::invalid_argument("count_charpoly_matrices needs n >= 1");
    if (ell < 2) throw std::invalid_argument("count_charpoly_matrices needs a prime ell");
    const long long mod = checked_modulus(ell, n);
    if (mod < 0)
        throw std::invalid_argument("modulus " + std::to_string(ell) + "^" + std::to_string(n) +
                                    " exceeds the counting cap");
    a %= mod;
    if (a < 0) a += mod;
    d %= mod;
    if (d < 0) d += mod;
    if (ring == MatrixRing::GL2 && d % ell == 0)
        throw std::invalid_argument("GL2 mode needs a unit determinant target, got v_ell(d) > 0");

    long long total = 0;
    for (long long alpha = 0; alpha < mod; ++alpha) {
        const long long delta = (a - alpha + mod) % mod;
        long long m = (alpha * delta - d) % mod;
        if (m < 0) m += mod;
        total += bc_pairs_at(m, ell, mod, n);
    }
    return total;
}

DensityLadder nu_ell(long long a, long long q, long long ell, int n_max) {
    if (!is_prime_ll(ell)) throw std::invalid_argument("ell must be prime, got " + std::to_string(ell));
    long long p;
    int e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    const long long delta = a * a - 4 * q;
    if (delta >= 0)
        throw std::domain_error("a^2 must be smaller than 4q (imaginary quadratic discriminant), got a = " +
                                std::to_string(a) + ", q = " + std::to_string(q));

    const long long v = valuation_ll(delta, ell);
    if (n_max <= 0) n_max = static_cast<int>(2 * v + 4);

    DensityLadder out;
    out.a = a;
    out.q = q;
    out.ell = ell;
    out.ring = (ell == p) ? MatrixRing::M2 : MatrixRing::GL2;

    const BigInt ell_big(ell);
    for (int n = 1; n <= n_max; ++n) {
        if (checked_modulus(ell, n) < 0) {
            out.capped = true;
            break;
        }
        const long long s = count_charpoly_matrices(a, q, ell, n, out.ring);
        // denominator (ell^2 - 1) ell^{2n-2}
        const BigInt denom = (ell_big * ell_big - 1) * boost::multiprecision::pow(ell_big, static_cast<unsigned>(2 * n - 2));
        out.rows.push_back(DensityLadder::Row{n, s, Rational(BigInt(s)) / Rational(denom)});
    }

    if (!out.rows.empty()) {
        out.nu_ell = out.rows.back().nu;
        size_t start = out.rows.size() - 1;
        while (start > 0 && out.rows[start - 1].nu == out.nu_ell) --start;
        const int tail_first = out.rows[start].n;
        const int last_n = out.rows.back().n;
        // constant tail of length >= 2 whose final pair sits past v_ell(delta)
        if (last_n - tail_first >= 1 && last_n >= v + 2) {
            out.stabilized = true;
            out.stabilized_at = tail_first;
        }
    }
    return out;
}

double ArchimedeanFactor::value() const {
    return std::sqrt(static_cast<double>(radicand)) / (std::acos(-1.0) * std::sqrt(static_cast<double>(q)));
}

ArchimedeanFactor nu_infinity(long long a, long long q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    const long long radicand = 4 * q - a * a;
    if (radicand < 0) throw std::domain_error("nu_infinity needs a^2 <= 4q");
    return ArchimedeanFactor{a, q, radicand};
}

}  // namespace isoclass
