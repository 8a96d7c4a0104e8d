#include "isoclass/measures.hpp"

#include "isoclass/census.hpp"
#include "isoclass/intmath.hpp"
#include "isoclass/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace isoclass {

SplittingType splitting_type(const QuadraticFieldData& K, long long ell) {
    int c = K.chi(ell);
    if (c == 0) return SplittingType::ramified;
    return c > 0 ? SplittingType::split : SplittingType::inert;
}

const char* splitting_name(SplittingType t) {
    switch (t) {
        case SplittingType::split: return "split";
        case SplittingType::inert: return "inert";
        case SplittingType::ramified: return "ramified";
    }
    return "?";
}

Rational zeta_ell_2(long long ell) {
    BigInt l2 = BigInt(ell) * ell;
    return Rational(l2, l2 - 1);
}

Rational local_l_factor(const QuadraticFieldData& K, long long ell) {
    int c = K.chi(ell);
    if (c == 0) return Rational(1);
    // (1 - c/ell)^{-1} = ell / (ell - c)
    return Rational(ell, ell - c);
}

LocalVolumes local_volumes(long long ell, const QuadraticFieldData& K) {
    LocalVolumes v;
    Rational one_minus_inv(ell - 1, ell);
    BigInt l2 = BigInt(ell) * ell;
    Rational one_minus_inv2(l2 - 1, l2);
    v.vol_G = one_minus_inv * one_minus_inv2;
    switch (splitting_type(K, ell)) {
        case SplittingType::split: v.vol_T_rational = one_minus_inv * one_minus_inv; break;
        case SplittingType::inert: v.vol_T_rational = one_minus_inv2; break;
        case SplittingType::ramified: v.vol_T_rational = one_minus_inv; break;
    }
    v.vol_T_sqrt_power = valuation_ll(K.delta_K, ell);
    return v;
}

Rational geometric_orbital(const Rational& nu, long long ell) {
    return nu / zeta_ell_2(ell);
}

Rational canonical_orbital(const Rational& o_geom, long long ell, const QuadraticFieldData& K) {
    int vf = valuation_ll(K.conductor, ell);
    return pow_rational(Rational(ell), vf) * zeta_ell_2(ell) * o_geom / local_l_factor(K, ell);
}

Rational global_volume(const QuadraticFieldData& K) {
    return Rational(class_number(K.delta_K), unit_count(K.delta_K));
}

namespace {

// The primes where the local factor can differ from the Euler factor: p and
// every divisor of delta. Sorted ascending.
std::vector<long long> support_primes(long long a, long long q) {
    long long p = 0;
    int e = 0;
    prime_power(q, p, e);
    long long delta = a * a - 4 * q;
    std::set<long long> s;
    s.insert(p);
    for (auto [ell, mult] : factorize(-delta)) {
        (void)mult;
        s.insert(ell);
    }
    return std::vector<long long>(s.begin(), s.end());
}

GlobalAssembly assemble(long long a, long long q, long long prime_bound, bool want_float,
                        long long perturb_ell) {
    long long p = 0;
    int e = 0;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power");
    if (a % p == 0) throw std::invalid_argument("trace divisible by p: class is not ordinary");
    long long delta = a * a - 4 * q;
    if (delta >= 0) throw std::invalid_argument("trace violates the Hasse bound");

    GlobalAssembly g;
    g.a = a;
    g.q = q;
    g.field = quadratic_field(delta);
    g.archimedean = nu_infinity(a, q);
    g.global_vol = global_volume(g.field);
    g.prime_bound = prime_bound;

    Rational counted_product(1);   // prod nu_ell over the support
    Rational orbital_product(1);   // prod O_can over the support
    Rational l_product(1);         // prod L_ell over the support

    for (long long ell : support_primes(a, q)) {
        PrimeFactorData f;
        f.ell = ell;
        f.type = splitting_type(g.field, ell);
        int v = valuation_ll(delta, ell);
        f.ladder = nu_ell(a, q, ell, v + 2);
        if (!f.ladder.stabilized) g.all_stabilized = false;
        f.nu = f.ladder.nu_ell;
        if (ell == perturb_ell) f.nu *= 2;
        f.l_factor = local_l_factor(g.field, ell);
        f.o_geom = geometric_orbital(f.nu, ell);
        f.o_can = canonical_orbital(f.o_geom, ell, g.field);
        counted_product *= f.nu;
        orbital_product *= f.o_can;
        l_product *= f.l_factor;
        g.factors.push_back(std::move(f));
    }

    g.lk_value = g.global_vol * orbital_product;
    g.gekeler_exact = Rational(g.field.conductor) * g.global_vol * counted_product / l_product;

    if (want_float) {
        const auto& support = g.factors;
        if (!support.empty() && prime_bound < support.back().ell)
            throw std::invalid_argument("prime bound " + std::to_string(prime_bound) +
                                        " does not reach the largest bad prime " +
                                        std::to_string(support.back().ell));
        double prod = g.archimedean.value() * std::sqrt((double)q) / 2.0;
        std::size_t si = 0;
        for (long long ell : primes_up_to(prime_bound)) {
            if (si < support.size() && support[si].ell == ell) {
                prod *= to_double(support[si].nu);
                ++si;
            } else {
                int c = g.field.chi(ell);
                prod *= (double)ell / (double)(ell - c);
            }
        }
        g.gekeler_float = prod;
    }
    return g;
}

}  // namespace

GlobalAssembly assemble_lk(long long a, long long q, long long perturb_ell) {
    return assemble(a, q, 0, false, perturb_ell);
}

GlobalAssembly assemble_gekeler(long long a, long long q, long long prime_bound, long long perturb_ell) {
    return assemble(a, q, prime_bound, true, perturb_ell);
}

VerificationReport verify_range(long long q_max, long long prime_bound, int jobs, long long perturb_ell) {
    VerificationReport rep;
    rep.q_max = q_max;
    rep.prime_bound = prime_bound;

    struct Pair {
        long long a, q;
        const CensusResult* census;
    };
    std::vector<CensusResult> censuses;
    for (long long q : supported_census_orders())
        if (q <= q_max) censuses.push_back(census(q, jobs));

    std::vector<Pair> pairs;
    for (const auto& c : censuses)
        for (long long a : ordinary_traces(c.q)) pairs.push_back({a, c.q, &c});

    rep.rows.resize(pairs.size());
    parallel_for_index((long long)pairs.size(), jobs, [&](long long i) {
        const auto& pr = pairs[(std::size_t)i];
        VerificationRow row;
        row.a = pr.a;
        row.q = pr.q;
        row.census_value = pr.census->weighted.at(pr.a);
        long long delta = pr.a * pr.a - 4 * pr.q;
        row.weighted_cn = weighted_class_number(delta);
        GlobalAssembly g = assemble_gekeler(pr.a, pr.q, prime_bound, perturb_ell);
        row.lk_value = g.lk_value;
        row.gekeler_exact = g.gekeler_exact;
        row.gekeler_float = g.gekeler_float;
        row.stabilized = g.all_stabilized;
        for (const auto& f : g.factors) row.primes.push_back(f.ell);
        row.ok = row.stabilized && row.census_value == row.weighted_cn &&
                 row.census_value == row.lk_value && row.census_value == row.gekeler_exact;
        rep.rows[(std::size_t)i] = std::move(row);
    });

    std::sort(rep.rows.begin(), rep.rows.end(), [](const VerificationRow& x, const VerificationRow& y) {
        return x.q != y.q ? x.q < y.q : x.a < y.a;
    });
    rep.all_ok = std::all_of(rep.rows.begin(), rep.rows.end(),
                             [](const VerificationRow& r) { return r.ok; });
    return rep;
}

}  // namespace isoclass
