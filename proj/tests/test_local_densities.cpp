#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isoclass/intmath.hpp"
#include "isoclass/local_density.hpp"
#include "isoclass/rational.hpp"

#include "oracles.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

using namespace isoclass;

TEST_CASE("pair counting matches brute force") {
    for (long long ell : {2, 3, 5, 7}) {
        for (int n = 1; n <= (ell == 2 ? 5 : 3); ++n) {
            long long m = 1;
            for (int i = 0; i < n; ++i) m *= ell;
            for (long long target = 0; target < m; ++target) {
                CAPTURE(ell);
                CAPTURE(n);
                CAPTURE(target);
                CHECK(count_bc_pairs(target, ell, n) == oracle::bc_pairs(target, m));
            }
        }
    }
}

TEST_CASE("fibered matrix counting matches exhaustive tallies") {
    struct Modulus {
        long long ell;
        int n;
    };
    for (const Modulus& mod :
         std::vector<Modulus>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
        long long m = 1;
        for (int i = 0; i < mod.n; ++i) m *= mod.ell;
        std::vector<long long> m2 = oracle::charpoly_tally(m, false);
        std::vector<long long> gl2 = oracle::charpoly_tally(m, true);
        for (long long a = 0; a < m; ++a)
            for (long long d = 0; d < m; ++d) {
                CAPTURE(m);
                CAPTURE(a);
                CAPTURE(d);
                CHECK(count_charpoly_matrices(a, d, mod.ell, mod.n, MatrixRing::M2) ==
                      m2[a * m + d]);
                if (std::gcd(d, m) == 1)
                    CHECK(count_charpoly_matrices(a, d, mod.ell, mod.n, MatrixRing::GL2) ==
                          gl2[a * m + d]);
            }
    }
}

TEST_CASE("matrix counts reduce the targets modulo ell^n") {
    CHECK(count_charpoly_matrices(1, 2, 7, 1, MatrixRing::GL2) ==
          count_charpoly_matrices(8, 9, 7, 1, MatrixRing::GL2));
    CHECK(count_charpoly_matrices(-1, 3, 5, 2, MatrixRing::M2) ==
          count_charpoly_matrices(24, 28, 5, 2, MatrixRing::M2));
}

TEST_CASE("GL2 counting rejects a non-unit determinant") {
    CHECK_THROWS_AS(count_charpoly_matrices(1, 2, 2, 2, MatrixRing::GL2), std::invalid_argument);
    CHECK_THROWS_AS(count_charpoly_matrices(0, 0, 3, 1, MatrixRing::GL2), std::invalid_argument);
}

TEST_CASE("ramified ladder for a = 1, q = 2 at ell = 7") {
    DensityLadder lad = nu_ell(1, 2, 7, 3);
    REQUIRE(lad.rows.size() == 3);
    CHECK(lad.ring == MatrixRing::GL2);
    CHECK(lad.rows[0].count == 49);
    CHECK(lad.rows[0].nu == Rational(49, 48));
    CHECK(lad.rows[1].count == 2352);
    CHECK(lad.rows[1].nu == Rational(1));
    CHECK(lad.rows[2].count == 115248);
    CHECK(lad.rows[2].nu == Rational(1));
    CHECK(lad.stabilized);
    CHECK(lad.stabilized_at == 2);
    CHECK(lad.nu_ell == Rational(1));
    CHECK_FALSE(lad.capped);
}

TEST_CASE("ell = p ladder runs over M2 and is flat") {
    DensityLadder lad = nu_ell(1, 2, 2, 3);
    CHECK(lad.ring == MatrixRing::M2);
    REQUIRE(lad.rows.size() == 3);
    CHECK(lad.rows[0].count == 6);
    CHECK(lad.rows[1].count == 24);
    CHECK(lad.rows[2].count == 96);
    for (const auto& r : lad.rows) CHECK(r.nu == Rational(2));
    CHECK(lad.stabilized);
    CHECK(lad.stabilized_at == 1);

    DensityLadder lad4 = nu_ell(1, 4, 2, 3);
    CHECK(lad4.ring == MatrixRing::M2);
    CHECK(lad4.rows[0].count == 6);
    CHECK(lad4.rows[1].count == 24);
    CHECK(lad4.nu_ell == Rational(2));

    DensityLadder lad49 = nu_ell(1, 49, 7, 2);
    CHECK(lad49.ring == MatrixRing::M2);
    CHECK(lad49.rows[0].count == 56);
    CHECK(lad49.nu_ell == Rational(7, 6));  // (1 - 1/7)^{-1}
}

TEST_CASE("conductor prime ladder for a = 4, q = 7 at ell = 2") {
    DensityLadder lad = nu_ell(4, 7, 2, 5);
    REQUIRE(lad.rows.size() == 5);
    long long want_counts[] = {4, 20, 64, 256, 1024};
    Rational want_nu[] = {Rational(4, 3), Rational(5, 3), Rational(4, 3), Rational(4, 3),
                          Rational(4, 3)};
    for (int i = 0; i < 5; ++i) {
        CHECK(lad.rows[i].count == want_counts[i]);
        CHECK(lad.rows[i].nu == want_nu[i]);
    }
    CHECK(lad.stabilized);
    CHECK(lad.stabilized_at == 3);  // within v_2(-12) + 2 = 4
    CHECK(lad.nu_ell == Rational(4, 3));
}

TEST_CASE("unramified ladders sit at the Euler factor from the start") {
    // a = 1, q = 2, delta = -7: chi(3) = -1 (inert), chi(11) = 1 (split)
    DensityLadder inert = nu_ell(1, 2, 3, 0);
    CHECK(inert.rows.size() == 4);  // default depth 2 v + 4 with v = 0
    CHECK(inert.rows[0].count == 6);
    for (const auto& r : inert.rows) CHECK(r.nu == Rational(3, 4));
    CHECK(inert.stabilized);
    CHECK(inert.stabilized_at == 1);

    DensityLadder split = nu_ell(1, 2, 11, 2);
    for (const auto& r : split.rows) CHECK(r.nu == Rational(11, 10));
    CHECK(split.stabilized);
}

TEST_CASE("every ladder satisfies the denominator identity") {
    for (long long ell : {2, 3, 5, 7, 11}) {
        DensityLadder lad = nu_ell(3, 5, ell, 0);  // delta = -11
        for (const auto& r : lad.rows) {
            BigInt denom = (BigInt(ell) * ell - 1) * pow(BigInt(ell), 2 * (unsigned)r.n - 2);
            CAPTURE(ell);
            CAPTURE(r.n);
            CHECK(r.nu * Rational(denom) == Rational(BigInt(r.count)));
        }
    }
}

TEST_CASE("deep ladders hit the modulus cap and say so") {
    DensityLadder lad = nu_ell(1, 2, 2, 30);
    CHECK(lad.capped);
    CHECK(lad.rows.size() == 26);  // 2^26 is the largest allowed modulus
    CHECK(lad.stabilized);
    CHECK(lad.nu_ell == Rational(2));
}

TEST_CASE("density input validation") {
    CHECK_THROWS_AS(nu_ell(1, 2, 4, 2), std::invalid_argument);   // ell not prime
    CHECK_THROWS_AS(nu_ell(1, 6, 5, 2), std::invalid_argument);   // q not a prime power
    CHECK_THROWS_AS(nu_ell(5, 4, 3, 2), std::domain_error);       // delta = 9 >= 0
    CHECK_THROWS_AS(nu_ell(4, 4, 3, 2), std::domain_error);       // delta = 0
}

TEST_CASE("archimedean factor") {
    ArchimedeanFactor inf = nu_infinity(1, 2);
    CHECK(inf.radicand == 7);
    double pi = std::acos(-1.0);
    CHECK(inf.value() == doctest::Approx(std::sqrt(7.0) / (pi * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(nu_infinity(4, 4).radicand == 0);
    CHECK(nu_infinity(4, 4).value() == 0.0);
    CHECK_THROWS_AS(nu_infinity(5, 4), std::domain_error);
}

TEST_CASE("matrices with unit discriminant are all conjugate to the companion matrix") {
    // The ell = p density counts charpoly fibers in M2; the orbital integral
    // counts a single conjugacy class. They agree because a matrix whose
    // discriminant a^2 - 4d is a unit has a cyclic vector mod ell, hence is
    // conjugate to the companion matrix of its characteristic polynomial.
    struct Case {
        long long a, d, m, ell;
        int n;
    };
    for (const Case& c : std::vector<Case>{{1, 2, 2, 2, 1},
                                           {1, 2, 4, 2, 2},
                                           {1, 3, 3, 3, 1},
                                           {1, 3, 9, 3, 2},
                                           {2, 3, 9, 3, 2}}) {
        CAPTURE(c.m);
        CAPTURE(c.a);
        CAPTURE(c.d);
        long long disc = c.a * c.a - 4 * c.d;
        REQUIRE(std::gcd(((disc % c.m) + c.m) % c.m, c.m) == 1);
        oracle::Mat companion{0, ((-c.d % c.m) + c.m) % c.m, 1, ((c.a % c.m) + c.m) % c.m};
        std::vector<oracle::Mat> candidates = oracle::matrices_with_charpoly(c.a, c.d, c.m);
        CHECK((long long)candidates.size() ==
              count_charpoly_matrices(c.a, c.d, c.ell, c.n, MatrixRing::M2));
        for (const oracle::Mat& x : candidates) CHECK(oracle::similar_to(x, companion, c.m));
    }
}
