#pragma once

#include "isoclass/rational.hpp"

#include <vector>

namespace isoclass {

// Which matrix ring the counting runs over: GL2 requires the determinant
// target to be a unit (every prime ell != p); M2 is the ell = p case.
enum class MatrixRing { GL2, M2 };

// Largest modulus ell^n a single counting pass will iterate over.
inline constexpr long long density_modulus_cap = 1LL << 26;

// #{(b, c) in (Z/ell^n)^2 : b*c = m}. Equals (k+1)(ell-1)ell^{n-1} when
// v_ell(m) = k < n and (n+1)ell^n - n*ell^{n-1} when m = 0; both branches are
// pinned against the brute-force pair count in the tests.
long long count_bc_pairs(long long m, long long ell, int n);

// S_n = #{2x2 matrices mod ell^n : trace = a, det = d}, computed by fibering
// over the diagonal (alpha free, delta = a - alpha, then the (b, c) pairs with
// b*c = alpha*delta - d). GL2 mode throws std::invalid_argument when d is not
// a unit mod ell; in that mode every counted matrix has unit determinant, so
// the same fiber formula serves both rings.
long long count_charpoly_matrices(long long a, long long d, long long ell, int n, MatrixRing ring);

// The ladder nu_{ell,n} = S_n / ((ell^2-1) ell^{2n-2}) for n = 1..n_max and its
// stabilized limit.
struct DensityLadder {
    long long a = 0, q = 0, ell = 0;
    MatrixRing ring = MatrixRing::GL2;

    struct Row {
        int n;
        long long count;  // S_n
        Rational nu;
    };
    std::vector<Row> rows;

    bool stabilized = false;
    int stabilized_at = -1;  // first n of the constant tail when stabilized
    Rational nu_ell;         // stable value; the last computed value otherwise
    bool capped = false;     // the modulus cap truncated the requested ladder
};

// Computes the ladder for one prime; ring is M2 when ell = p and GL2 otherwise.
// n_max <= 0 selects the default 2*v_ell(a^2-4q) + 4. Stabilization means the
// values form a constant tail of length >= 2 reaching past v_ell(a^2-4q) + 1;
// failure to stabilize is reported in the result, never thrown.
DensityLadder nu_ell(long long a, long long q, long long ell, int n_max = 0);

// nu_infinity = (2/pi) sqrt(1 - a^2/4q) = sqrt(4q - a^2) / (pi sqrt(q)),
// stored by its radicand so the downstream assembly can cancel it exactly.
struct ArchimedeanFactor {
    long long a = 0, q = 0;
    long long radicand = 0;  // 4q - a^2

    double value() const;
};
ArchimedeanFactor nu_infinity(long long a, long long q);

}  // namespace isoclass
