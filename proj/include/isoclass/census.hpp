#pragma once

#include "isoclass/finite_field.hpp"
#include "isoclass/rational.hpp"

#include <map>
#include <vector>

namespace isoclass {

struct WeierstrassEquation {
    const FiniteField* field;
    int a1, a2, a3, a4, a6;  // element indices
};

// Discriminant via the b-invariants, valid in every characteristic:
// b2 = a1^2 + 4 a2, b4 = 2 a4 + a1 a3, b6 = a3^2 + 4 a6,
// b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2,
// disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
// Zero iff the equation is singular.
int weierstrass_discriminant(const WeierstrassEquation& eq);

// Projective points including the point at infinity; throws std::domain_error
// on a singular equation. Brute force over all (x, y), so intended for
// spot checks and oracles rather than bulk enumeration.
long long point_count(const WeierstrassEquation& eq);

struct CensusResult {
    long long q = 0;
    // trace a -> weighted isogeny class size, every trace that occurs
    // (ordinary or not); each weight is (#equations with trace a) / #Gamma
    // for the family acting group Gamma.
    std::map<long long, Rational> weighted;

    Rational total_mass() const;  // equals q for every supported order
};

// All a with a^2 <= 4q and p not dividing a, ascending.
std::vector<long long> ordinary_traces(long long q);

// Orders the census accepts: q <= 49 for p >= 5, q <= 27 for p in {2, 3}.
std::vector<long long> supported_census_orders();

// Weighted census via the family natural to the characteristic:
//   p >= 5: y^2 = x^3 + Ax + B           (q^2 equations, Gamma of order q-1)
//   p = 3:  y^2 = x^3 + a2x^2 + a4x + a6 (q^3 equations, Gamma of order q(q-1))
//   p = 2:  full five-coefficient form   (q^5 equations, Gamma of order q^3(q-1))
// Each isomorphism class is an orbit of size #Gamma / #Aut(E), so the tally
// divided by #Gamma is exactly sum 1/#Aut(E); no per-curve automorphism
// computation is needed. Results are independent of the worker count.
CensusResult census(long long q, int jobs = 1);

// The five-coefficient family for any characteristic (q <= 16); used to
// cross-check the reduced families above against an independent weighting.
CensusResult census_full_family(long long q, int jobs = 1);

}  // namespace isoclass
