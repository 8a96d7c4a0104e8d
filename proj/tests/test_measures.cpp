#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isoclass/census.hpp"
#include "isoclass/class_group.hpp"
#include "isoclass/local_density.hpp"
#include "isoclass/measures.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

using namespace isoclass;

TEST_CASE("splitting types for delta = -7") {
    QuadraticFieldData K = quadratic_field(-7);
    CHECK(splitting_type(K, 2) == SplittingType::split);
    CHECK(splitting_type(K, 3) == SplittingType::inert);
    CHECK(splitting_type(K, 7) == SplittingType::ramified);
    CHECK(std::strcmp(splitting_name(SplittingType::split), "split") == 0);
    CHECK(std::strcmp(splitting_name(SplittingType::inert), "inert") == 0);
    CHECK(std::strcmp(splitting_name(SplittingType::ramified), "ramified") == 0);
}

TEST_CASE("local zeta and L factors") {
    CHECK(zeta_ell_2(2) == Rational(4, 3));
    CHECK(zeta_ell_2(3) == Rational(9, 8));
    QuadraticFieldData K = quadratic_field(-7);
    CHECK(local_l_factor(K, 2) == Rational(2));       // split: (1 - 1/2)^{-1}
    CHECK(local_l_factor(K, 3) == Rational(3, 4));    // inert: (1 + 1/3)^{-1}
    CHECK(local_l_factor(K, 7) == Rational(1));       // ramified
}

TEST_CASE("canonical measure volumes") {
    QuadraticFieldData K = quadratic_field(-7);
    LocalVolumes v2 = local_volumes(2, K);
    CHECK(v2.vol_G == Rational(3, 8));            // (1/2)(3/4)
    CHECK(v2.vol_T_rational == Rational(1, 4));   // split: (1 - 1/2)^2
    CHECK(v2.vol_T_sqrt_power == 0);
    LocalVolumes v3 = local_volumes(3, K);
    CHECK(v3.vol_T_rational == Rational(8, 9));   // inert: 1 - 1/9
    LocalVolumes v7 = local_volumes(7, K);
    CHECK(v7.vol_T_rational == Rational(6, 7));   // ramified: 1 - 1/7
    CHECK(v7.vol_T_sqrt_power == 1);              // carries sqrt(1/7)
}

TEST_CASE("orbital integral conversion for a = 1, q = 2") {
    QuadraticFieldData K = quadratic_field(-7);
    // ell = 2: nu = 2, O_geom = nu / zeta_2(2) = 3/2, O_can = zeta * O_geom / L = 1
    Rational o2 = geometric_orbital(Rational(2), 2);
    CHECK(o2 == Rational(3, 2));
    CHECK(canonical_orbital(o2, 2, K) == Rational(1));
    // ell = 7 ramified: nu = 1, L = 1, O_can = zeta * (nu / zeta) = 1
    Rational o7 = geometric_orbital(Rational(1), 7);
    CHECK(o7 == Rational(48, 49));
    CHECK(canonical_orbital(o7, 7, K) == Rational(1));
}

TEST_CASE("conductor prime gets the ell^{v(f)} correction") {
    // a = 4, q = 7: delta = -12 = 2^2 * (-3), conductor 2
    QuadraticFieldData K = quadratic_field(-12);
    Rational o_geom = geometric_orbital(Rational(4, 3), 2);
    CHECK(o_geom == Rational(1));
    CHECK(canonical_orbital(o_geom, 2, K) == Rational(4));  // 2 * zeta / L = 2 * (4/3) / (2/3)
}

TEST_CASE("unramified primes convert to a trivial canonical orbital") {
    // spec of the pipeline on good primes: nu = L, so O_can = 1
    QuadraticFieldData K = quadratic_field(-7);
    for (long long ell : {3, 5, 11, 13, 17}) {
        DensityLadder lad = nu_ell(1, 2, ell, 2);
        REQUIRE(lad.stabilized);
        CHECK(lad.nu_ell == local_l_factor(K, ell));
        Rational o_can = canonical_orbital(geometric_orbital(lad.nu_ell, ell), ell, K);
        CAPTURE(ell);
        CHECK(o_can == Rational(1));
    }
}

TEST_CASE("global volume") {
    CHECK(global_volume(quadratic_field(-4)) == Rational(1, 4));
    CHECK(global_volume(quadratic_field(-3)) == Rational(1, 6));
    CHECK(global_volume(quadratic_field(-7)) == Rational(1, 2));
    // conductors do not change the global torus volume
    CHECK(global_volume(quadratic_field(-12)) == Rational(1, 6));
}

TEST_CASE("assembly for a = 1, q = 2") {
    GlobalAssembly g = assemble_lk(1, 2);
    CHECK(g.field.delta == -7);
    CHECK(g.field.conductor == 1);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].ell == 2);
    CHECK(g.factors[0].nu == Rational(2));
    CHECK(g.factors[0].o_can == Rational(1));
    CHECK(g.factors[1].ell == 7);
    CHECK(g.factors[1].nu == Rational(1));
    CHECK(g.factors[1].o_can == Rational(1));
    CHECK(g.all_stabilized);
    CHECK(g.lk_value == Rational(1, 2));
    CHECK(g.gekeler_exact == Rational(1, 2));
}

TEST_CASE("assembly for a = 4, q = 7 hits the conductor case") {
    GlobalAssembly g = assemble_lk(4, 7);
    CHECK(g.field.delta == -12);
    CHECK(g.field.delta_K == -3);
    CHECK(g.field.conductor == 2);
    REQUIRE(g.factors.size() == 3);  // 2, 3, 7
    CHECK(g.factors[0].ell == 2);
    CHECK(g.factors[0].o_can == Rational(4));
    CHECK(g.factors[1].ell == 3);
    CHECK(g.factors[1].type == SplittingType::ramified);
    CHECK(g.factors[1].o_can == Rational(1));
    CHECK(g.factors[2].ell == 7);
    CHECK(g.factors[2].o_can == Rational(1));
    CHECK(g.lk_value == Rational(2, 3));
    CHECK(g.gekeler_exact == Rational(2, 3));
    CHECK(g.lk_value == weighted_class_number(-12));
}

TEST_CASE("assemblies agree with the census everywhere they can be compared") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
        CensusResult c = census(q);
        for (long long a : ordinary_traces(q)) {
            GlobalAssembly g = assemble_lk(a, q);
            CAPTURE(q);
            CAPTURE(a);
            CHECK(g.lk_value == c.weighted.at(a));
            CHECK(g.gekeler_exact == c.weighted.at(a));
        }
    }
}

TEST_CASE("float product lands near the exact value") {
    GlobalAssembly g = assemble_gekeler(1, 2, 10000);
    CHECK(g.gekeler_float > 0.0);
    double exact = to_double(g.gekeler_exact);
    CHECK(std::abs(g.gekeler_float - exact) / exact < 0.02);

    GlobalAssembly g2 = assemble_gekeler(4, 7, 10000);
    CHECK(std::abs(g2.gekeler_float - to_double(g2.gekeler_exact)) /
              to_double(g2.gekeler_exact) <
          0.02);
}

TEST_CASE("assembly input validation") {
    CHECK_THROWS_AS(assemble_lk(2, 2), std::invalid_argument);   // p | a
    CHECK_THROWS_AS(assemble_lk(7, 49), std::invalid_argument);  // p | a
    CHECK_THROWS_AS(assemble_lk(1, 6), std::invalid_argument);   // q not a prime power
    CHECK_THROWS_AS(assemble_lk(5, 4), std::invalid_argument);   // above the Hasse bound
    CHECK_THROWS_AS(assemble_gekeler(1, 2, 5), std::invalid_argument);  // bound below 7
}

TEST_CASE("the perturbation hook really breaks one prime") {
    GlobalAssembly g = assemble_lk(1, 2, 7);
    CHECK(g.factors[1].nu == Rational(2));  // doubled from 1
    CHECK(g.lk_value != Rational(1, 2));
    // a prime outside the support changes nothing
    GlobalAssembly g2 = assemble_lk(1, 2, 11);
    CHECK(g2.lk_value == Rational(1, 2));
}

TEST_CASE("verification over q <= 7") {
    VerificationReport rep = verify_range(7, 10000, 2);
    CHECK(rep.all_ok);
    CHECK(rep.rows.size() == 28);  // 2 + 4 + 4 + 8 + 10 ordinary classes
    for (const auto& row : rep.rows) {
        CAPTURE(row.q);
        CAPTURE(row.a);
        CHECK(row.ok);
        CHECK(row.census_value == row.weighted_cn);
        CHECK(row.census_value == row.lk_value);
        CHECK(row.census_value == row.gekeler_exact);
        CHECK(std::abs(row.gekeler_float - to_double(row.census_value)) /
                  to_double(row.census_value) <
              0.02);
    }
    // spot check one row: q = 5, a = 2
    bool found = false;
    for (const auto& row : rep.rows)
        if (row.q == 5 && row.a == 2) {
            found = true;
            CHECK(row.census_value == Rational(3, 4));
        }
    CHECK(found);
}

TEST_CASE("verification is deterministic across worker counts") {
    VerificationReport r1 = verify_range(5, 10000, 1);
    VerificationReport r2 = verify_range(5, 10000, 3);
    REQUIRE(r1.rows.size() == r2.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r1.rows[i].a == r2.rows[i].a);
        CHECK(r1.rows[i].q == r2.rows[i].q);
        CHECK(r1.rows[i].census_value == r2.rows[i].census_value);
    }
}

TEST_CASE("a perturbed prime fails exactly the classes it divides") {
    VerificationReport rep = verify_range(7, 10000, 2, 7);
    CHECK_FALSE(rep.all_ok);
    for (const auto& row : rep.rows) {
        bool involves7 = false;
        for (long long ell : row.primes) involves7 |= ell == 7;
        CAPTURE(row.q);
        CAPTURE(row.a);
        CHECK(row.ok == !involves7);
    }
}
