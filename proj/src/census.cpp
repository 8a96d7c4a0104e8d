#include "isoclass/census.hpp"

#include "isoclass/intmath.hpp"
#include "isoclass/parallel.hpp"

#include <stdexcept>
#include <string>

namespace isoclass {

namespace {

// #{y : y^2 + Ly = r} for every (L, r); row L = 0 is the plain square count
// used by the odd-characteristic families.
std::vector<long long> solution_table(const FiniteField& F) {
    const long long q = F.q();
    std::vector<long long> sol(static_cast<size_t>(q * q), 0);
    for (int L = 0; L < q; ++L)
        for (int y = 0; y < q; ++y) {
            const int r = F.add(F.mul(y, y), F.mul(L, y));
            ++sol[static_cast<size_t>(L) * q + r];
        }
    return sol;
}

struct TraceTally {
    long long amax;
    std::vector<long long> counts;  // index a + amax

    explicit TraceTally(long long q) : amax(isqrt_ll(4 * q)), counts(static_cast<size_t>(2 * amax + 1), 0) {}

    void add(long long q, long long npoints) {
        const long long a = q + 1 - npoints;
        if (a < -amax || a > amax) throw std::logic_error("trace " + std::to_string(a) + " violates the Hasse bound");
        ++counts[static_cast<size_t>(a + amax)];
    }

    void merge(const TraceTally& other) {
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    }
};

CensusResult finish(long long q, const TraceTally& tally, long long group_order) {
    CensusResult res;
    res.q = q;
    for (long long a = -tally.amax; a <= tally.amax; ++a) {
        const long long c = tally.counts[static_cast<size_t>(a + tally.amax)];
        if (c != 0) res.weighted[a] = Rational(c) / Rational(group_order);
    }
    return res;
}

// y^2 = x^3 + Ax + B, p >= 5; singular exactly when 4A^3 + 27B^2 = 0.
CensusResult census_short(const FiniteField& F, int jobs) {
    const long long q = F.q();
    const auto sol = solution_table(F);
    std::vector<int> cube(static_cast<size_t>(q));
    for (int x = 0; x < q; ++x) cube[static_cast<size_t>(x)] = F.mul(x, F.mul(x, x));
    const int four = F.from_int(4), twenty7 = F.from_int(27);

    std::vector<TraceTally> parts(static_cast<size_t>(normalize_jobs(jobs)), TraceTally(q));
    parallel_blocks(q, jobs, [&](long long begin, long long end, int w) {
        TraceTally& t = parts[static_cast<size_t>(w)];
        for (int A = static_cast<int>(begin); A < static_cast<int>(end); ++A) {
            const int fourA3 = F.mul(four, cube[static_cast<size_t>(A)]);
            for (int B = 0; B < q; ++B) {
                if (F.add(fourA3, F.mul(twenty7, F.mul(B, B))) == 0) continue;
                long long n = 1;
                for (int x = 0; x < q; ++x)
                    n += sol[static_cast<size_t>(F.add(F.add(cube[static_cast<size_t>(x)], F.mul(A, x)), B))];
                t.add(q, n);
            }
        }
    });
    TraceTally total(q);
    for (const auto& part : parts) total.merge(part);
    return finish(q, total, q - 1);
}

// y^2 = x^3 + a2 x^2 + a4 x + a6, p = 3; Gamma is generated by x -> u^2 x + r.
CensusResult census_char3(const FiniteField& F, int jobs) {
    const long long q = F.q();
    const auto sol = solution_table(F);
    std::vector<int> cube(static_cast<size_t>(q)), square(static_cast<size_t>(q));
    for (int x = 0; x < q; ++x) {
        square[static_cast<size_t>(x)] = F.mul(x, x);
        cube[static_cast<size_t>(x)] = F.mul(x, square[static_cast<size_t>(x)]);
    }

    std::vector<TraceTally> parts(static_cast<size_t>(normalize_jobs(jobs)), TraceTally(q));
    parallel_blocks(q, jobs, [&](long long begin, long long end, int w) {
        TraceTally& t = parts[static_cast<size_t>(w)];
        for (int a2 = static_cast<int>(begin); a2 < static_cast<int>(end); ++a2)
            for (int a4 = 0; a4 < q; ++a4)
                for (int a6 = 0; a6 < q; ++a6) {
                    const WeierstrassEquation eq{&F, 0, a2, 0, a4, a6};
                    if (weierstrass_discriminant(eq) == 0) continue;
                    long long n = 1;
                    for (int x = 0; x < q; ++x) {
                        const int rhs = F.add(F.add(cube[static_cast<size_t>(x)], F.mul(a2, square[static_cast<size_t>(x)])),
                                              F.add(F.mul(a4, x), a6));
                        n += sol[static_cast<size_t>(rhs)];
                    }
                    t.add(q, n);
                }
    });
    TraceTally total(q);
    for (const auto& part : parts) total.merge(part);
    return finish(q, total, q * (q - 1));
}

// Full (a1, a2, a3, a4, a6) family, any characteristic.
CensusResult census_full(const FiniteField& F, int jobs) {
    const long long q = F.q();
    const auto sol = solution_table(F);
    std::vector<int> cube(static_cast<size_t>(q)), square(static_cast<size_t>(q));
    for (int x = 0; x < q; ++x) {
        square[static_cast<size_t>(x)] = F.mul(x, x);
        cube[static_cast<size_t>(x)] = F.mul(x, square[static_cast<size_t>(x)]);
    }

    std::vector<TraceTally> parts(static_cast<size_t>(normalize_jobs(jobs)), TraceTally(q));
    parallel_blocks(q, jobs, [&](long long begin, long long end, int w) {
        TraceTally& t = parts[static_cast<size_t>(w)];
        std::vector<int> lin(static_cast<size_t>(q)), base(static_cast<size_t>(q));
        for (int a1 = static_cast<int>(begin); a1 < static_cast<int>(end); ++a1)
            for (int a3 = 0; a3 < q; ++a3) {
                for (int x = 0; x < q; ++x) lin[static_cast<size_t>(x)] = F.add(F.mul(a1, x), a3);
                for (int a2 = 0; a2 < q; ++a2)
                    for (int a4 = 0; a4 < q; ++a4) {
                        for (int x = 0; x < q; ++x)
                            base[static_cast<size_t>(x)] = F.add(cube[static_cast<size_t>(x)],
                                                                 F.add(F.mul(a2, square[static_cast<size_t>(x)]), F.mul(a4, x)));
                        for (int a6 = 0; a6 < q; ++a6) {
                            const WeierstrassEquation eq{&F, a1, a2, a3, a4, a6};
                            if (weierstrass_discriminant(eq) == 0) continue;
                            long long n = 1;
                            for (int x = 0; x < q; ++x)
                                n += sol[static_cast<size_t>(lin[static_cast<size_t>(x)]) * q +
                                         F.add(base[static_cast<size_t>(x)], a6)];
                            t.add(q, n);
                        }
                    }
            }
    });
    TraceTally total(q);
    for (const auto& part : parts) total.merge(part);
    return finish(q, total, q * q * q * (q - 1));
}

}  // namespace

int weierstrass_discriminant(const WeierstrassEquation& eq) {
    const FiniteField& F = *eq.field;
    const int a1 = eq.a1, a2 = eq.a2, a3 = eq.a3, a4 = eq.a4, a6 = eq.a6;
    const int b2 = F.add(F.mul(a1, a1), F.mul(F.from_int(4), a2));
    const int b4 = F.add(F.mul(F.from_int(2), a4), F.mul(a1, a3));
    const int b6 = F.add(F.mul(a3, a3), F.mul(F.from_int(4), a6));
    int b8 = F.add(F.mul(F.mul(a1, a1), a6), F.mul(F.mul(F.from_int(4), a2), a6));
    b8 = F.add(b8, F.neg(F.mul(F.mul(a1, a3), a4)));
    b8 = F.add(b8, F.mul(a2, F.mul(a3, a3)));
    b8 = F.add(b8, F.neg(F.mul(a4, a4)));
    const int t1 = F.neg(F.mul(F.mul(b2, b2), b8));
    const int t2 = F.neg(F.mul(F.from_int(8), F.mul(b4, F.mul(b4, b4))));
    const int t3 = F.neg(F.mul(F.from_int(27), F.mul(b6, b6)));
    const int t4 = F.mul(F.from_int(9), F.mul(b2, F.mul(b4, b6)));
    return F.add(F.add(t1, t2), F.add(t3, t4));
}

long long point_count(const WeierstrassEquation& eq) {
    if (weierstrass_discriminant(eq) == 0) throw std::domain_error("point count of a singular equation");
    const FiniteField& F = *eq.field;
    const long long q = F.q();
    long long n = 1;
    for (int x = 0; x < q; ++x) {
        const int x2 = F.mul(x, x);
        const int rhs = F.add(F.add(F.mul(x, x2), F.mul(eq.a2, x2)), F.add(F.mul(eq.a4, x), eq.a6));
        const int lin = F.add(F.mul(eq.a1, x), eq.a3);
        for (int y = 0; y < q; ++y)
            if (F.add(F.mul(y, y), F.mul(lin, y)) == rhs) ++n;
    }
    return n;
}

Rational CensusResult::total_mass() const {
    Rational s = 0;
    for (const auto& [a, w] : weighted) s += w;
    return s;
}

std::vector<long long> ordinary_traces(long long q) {
    long long p;
    int e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    std::vector<long long> out;
    const long long amax = isqrt_ll(4 * q);
    for (long long a = -amax; a <= amax; ++a)
        if (a % p != 0) out.push_back(a);
    return out;
}

std::vector<long long> supported_census_orders() {
    std::vector<long long> out;
    for (long long q = 2; q <= 49; ++q) {
        long long p;
        int e;
        if (!prime_power(q, p, e)) continue;
        if (p <= 3 && q > 27) continue;
        out.push_back(q);
    }
    return out;
}

CensusResult census(long long q, int jobs) {
    long long p;
    int e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    if ((p >= 5 && q > 49) || (p <= 3 && q > 27))
        throw std::invalid_argument("census cap exceeded for q = " + std::to_string(q) +
                                    " (q <= 49 for p >= 5, q <= 27 for p in {2, 3})");
    const FiniteField F(p, e);
    if (p >= 5) return census_short(F, jobs);
    if (p == 3) return census_char3(F, jobs);
    return census_full(F, jobs);
}

CensusResult census_full_family(long long q, int jobs) {
    long long p;
    int e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    if (q > 16)
        throw std::invalid_argument("full-family census cap is q <= 16, got " + std::to_string(q));
    const FiniteField F(p, e);
    return census_full(F, jobs);
}

}  // namespace isoclass
