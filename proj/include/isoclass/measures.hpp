#pragma once

#include "isoclass/class_group.hpp"
#include "isoclass/local_density.hpp"
#include "isoclass/rational.hpp"

#include <vector>

namespace isoclass {

enum class SplittingType { split, inert, ramified };

// split / inert / ramified according to chi(ell) = 1 / -1 / 0; ramified
// happens exactly at ell | delta_K.
SplittingType splitting_type(const QuadraticFieldData& K, long long ell);
const char* splitting_name(SplittingType t);

// zeta_ell(2) = (1 - ell^{-2})^{-1}.
Rational zeta_ell_2(long long ell);

// Local L-factor of the quadratic character: (1 - chi(ell)/ell)^{-1} at
// unramified ell, and 1 at ramified ell where the character vanishes.
Rational local_l_factor(const QuadraticFieldData& K, long long ell);

// Volumes of the canonical measures:
//   vol_G = (1 - 1/ell)(1 - 1/ell^2)  for GL2(Z_ell)
//   vol_T = sqrt(|delta_K|_ell) * {(1-1/ell)^2 split, (1-1/ell^2) inert,
//           (1-1/ell) ramified}
// The ell-adic square root is kept symbolic: vol_T = rational * ell^{-sqrt_power/2}.
struct LocalVolumes {
    Rational vol_G;
    Rational vol_T_rational;
    int vol_T_sqrt_power;  // v_ell(delta_K); odd exactly at odd ramified primes
};
LocalVolumes local_volumes(long long ell, const QuadraticFieldData& K);

// O_geom = nu_ell / zeta_ell(2); requires a stabilized nu.
Rational geometric_orbital(const Rational& nu, long long ell);

// O_can = sqrt(|delta_K|_ell / |delta|_ell) * zeta_ell(2) / L_ell * O_geom
//       = ell^{v_ell(conductor)} * zeta_ell(2) * O_geom / L_ell.
// The valuation difference v_ell(delta) - v_ell(delta_K) must be even (it is
// 2 v_ell(conductor)); a parity violation is an upstream bug and throws.
Rational canonical_orbital(const Rational& o_geom, long long ell, const QuadraticFieldData& K);

// h_K / w_K, the volume of the global torus quotient.
Rational global_volume(const QuadraticFieldData& K);

// One prime's worth of assembled data.
struct PrimeFactorData {
    long long ell;
    SplittingType type;
    DensityLadder ladder;
    Rational nu;  // stabilized value (after any test-hook perturbation)
    Rational l_factor;
    Rational o_geom;
    Rational o_can;
};

// Both global products for one ordinary class:
//   lk_value      = (h_K/w_K) * prod_{ell | q*delta} O_can(ell)
//   gekeler_exact = conductor * (h_K/w_K) * prod_{ell | q*delta} nu_ell / L_ell,
//     the product formula after sqrt(4q - a^2) = f*sqrt(|delta_K|) and
//     L(1, chi) = 2*pi*h_K/(w_K*sqrt(|delta_K|)) cancel all transcendentals
//   gekeler_float = sqrt(4q - a^2)/(2*pi) * prod_{ell <= bound} nu_ell, folded
//     in ascending order (the product converges only conditionally), with
//     counted values at ell | q*delta and Euler factors elsewhere
struct GlobalAssembly {
    long long a = 0, q = 0;
    QuadraticFieldData field{};
    ArchimedeanFactor archimedean{};
    Rational global_vol;
    std::vector<PrimeFactorData> factors;  // ascending ell | q*delta
    bool all_stabilized = true;
    Rational lk_value;
    Rational gekeler_exact;
    double gekeler_float = 0.0;  // only when a prime bound was supplied
    long long prime_bound = 0;
};

// The product of canonical orbital integrals against the global volume; exact
// routes only. perturb_ell > 0 doubles that prime's nu (test hook for the
// verification failure path).
GlobalAssembly assemble_lk(long long a, long long q, long long perturb_ell = 0);

// Same assembly plus the truncated float product; prime_bound must reach the
// largest prime dividing q * delta.
GlobalAssembly assemble_gekeler(long long a, long long q, long long prime_bound, long long perturb_ell = 0);

// One row of the triple-equality verification.
struct VerificationRow {
    long long a = 0, q = 0;
    Rational census_value;
    Rational weighted_cn;
    Rational lk_value;
    Rational gekeler_exact;
    double gekeler_float = 0.0;
    bool stabilized = true;
    bool ok = false;
    std::vector<long long> primes;  // the primes entering the local products
};

struct VerificationReport {
    long long q_max = 0;
    long long prime_bound = 0;
    std::vector<VerificationRow> rows;  // q ascending, a ascending
    bool all_ok = false;
};

// Runs census = weighted class number = LK product = exact Gekeler product over
// every ordinary (a, q) with q <= q_max (within the census caps).
VerificationReport verify_range(long long q_max, long long prime_bound, int jobs, long long perturb_ell = 0);

}  // namespace isoclass
