// Acceptance gate: one line per criterion, exit 0 only when every criterion
// holds within its time budget. All comparisons are exact unless a tolerance
// is stated on the line.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mns/criteria.hpp"
#include "mns/norms.hpp"
#include "mns/representation.hpp"

using namespace mns;

namespace {

IntVec vec(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

IntMatrix twin_dragon() { return IntMatrix{{1, 1}, {-1, 1}}; }

IntMatrix quartic_base() {
    return IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 2}, {-1, 0, -1, 1}};
}

std::vector<IntMatrix> worked_bases() {
    return {IntMatrix{{2}}, IntMatrix{{-2}}, twin_dragon(), quartic_base()};
}

struct Pipeline {
    DigitSet ds;
    BoundsReport br;
    PseudodigitTable table;
};

Pipeline pipeline(const IntMatrix& A) {
    DigitSet ds = digit_set(A);
    BoundsReport br = bounds_report(make_norm_evaluator(A));
    PseudodigitTable table = pseudodigits(ds, br);
    return {std::move(ds), std::move(br), std::move(table)};
}

IntMatrix random_matrix(std::mt19937_64& rng, int n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = Int(dist(rng));
    }
    return m;
}

bool contains_point(const std::vector<IntVec>& pts, const IntVec& x) {
    return std::find(pts.begin(), pts.end(), x) != pts.end();
}

#define REQUIRE_MSG(cond, msg)      \
    do {                            \
        if (!(cond)) {              \
            detail = (msg);         \
            return false;           \
        }                           \
    } while (0)

// 1. scalar base 2: digits {-1, 0}, pseudodigit set {1}, search region
//    covering {-1, 0, 1}.
bool crit_base2(std::string& detail) {
    auto p = pipeline(IntMatrix{{2}});
    REQUIRE_MSG((p.ds.digits() == std::vector<IntVec>{vec({-1}), vec({0})}), "digit set");
    REQUIRE_MSG((p.table.S == std::vector<IntVec>{vec({1})}), "pseudodigit set");
    for (long c : {-1L, 0L, 1L}) {
        REQUIRE_MSG(contains_point(p.table.search_points, vec({c})), "search region");
    }
    return true;
}

// 2. scalar base -2: empty pseudodigit set; 1 encodes as radix (-1, -1) and
//    decodes back to 1.
bool crit_base_neg2(std::string& detail) {
    auto p = pipeline(IntMatrix{{-2}});
    REQUIRE_MSG(p.table.S.empty(), "pseudodigit set not empty");
    auto rep = represent(p.ds, p.table, vec({1}));
    REQUIRE_MSG(rep.kind == RepKind::Radix, "kind");
    REQUIRE_MSG(rep.digits == (std::vector<IntVec>{vec({-1}), vec({-1})}), "digit string");
    REQUIRE_MSG(evaluate(p.ds, rep) == vec({1}), "decode");
    return true;
}

// 3. twin dragon: digits {(-1,0), (0,0)}, a single cycle containing (0,1),
//    not a radix system.
bool crit_twin(std::string& detail) {
    auto p = pipeline(twin_dragon());
    REQUIRE_MSG(p.ds.digits() == (std::vector<IntVec>{vec({-1, 0}), vec({0, 0})}), "digit set");
    REQUIRE_MSG(p.table.cycles.size() == 1, "cycle count");
    REQUIRE_MSG(contains_point(p.table.cycles[0].elements, vec({0, 1})), "cycle member");
    REQUIRE_MSG(!yields_radix(p.table), "yields_radix");
    return true;
}

// 4. quartic base: det 2, digits {(0,0,-1,-1), 0}, exactly two nonzero
//    cycles with (0,1,0,0) and (-1,0,0,0) in different ones.
bool crit_quartic(std::string& detail) {
    IntMatrix A = quartic_base();
    REQUIRE_MSG(det(A) == 2, "determinant");
    auto p = pipeline(A);
    REQUIRE_MSG(p.ds.digits() ==
                    (std::vector<IntVec>{vec({0, 0, -1, -1}), vec({0, 0, 0, 0})}),
                "digit set");
    REQUIRE_MSG(p.table.cycles.size() == 2, "cycle count");
    int home1 = -1, home2 = -1;
    for (int i = 0; i < int(p.table.cycles.size()); ++i) {
        if (contains_point(p.table.cycles[size_t(i)].elements, vec({0, 1, 0, 0}))) home1 = i;
        if (contains_point(p.table.cycles[size_t(i)].elements, vec({-1, 0, 0, 0}))) home2 = i;
    }
    REQUIRE_MSG(home1 >= 0, "(0,1,0,0) not in any cycle");
    REQUIRE_MSG(home2 >= 0, "(-1,0,0,0) not in any cycle");
    REQUIRE_MSG(home1 != home2, "members share a cycle");
    return true;
}

// 5. diag(2,2): mu exceeds 2 fails exactly at the boundary, and the
//    pseudodigit set is nonempty.
bool crit_boundary(std::string& detail) {
    IntMatrix A{{2, 0}, {0, 2}};
    REQUIRE_MSG(!mu_exceeds(A, Rat(4)), "mu boundary not strict");
    REQUIRE_MSG(mu_exceeds(A, Rat(399, 100)), "mu lower bound");
    auto p = pipeline(A);
    REQUIRE_MSG(!p.table.S.empty(), "pseudodigit set empty");
    return true;
}

// 6. partition: on test boxes every vector round-trips and takes exactly one
//    form; twin-dragon atlas at depth 6 has 128 radix points, 127 pseudo
//    entries, and disjoint point sets.
bool crit_partition(std::string& detail) {
    for (const IntMatrix& A : {IntMatrix{{2}}, IntMatrix{{-2}}}) {
        auto p = pipeline(A);
        for (long x = -20; x <= 20; ++x) {
            auto rep = represent(p.ds, p.table, vec({x}));
            REQUIRE_MSG(evaluate(p.ds, rep) == vec({x}), "round trip (1-d)");
            auto cls = classify(p.ds, p.table, vec({x}));
            REQUIRE_MSG(cls.kind == rep.kind && cls.pseudodigit == rep.pseudodigit,
                        "ambiguous form (1-d)");
        }
    }
    auto p = pipeline(twin_dragon());
    for (long x = -20; x <= 20; ++x) {
        for (long y = -20; y <= 20; ++y) {
            auto rep = represent(p.ds, p.table, vec({x, y}));
            REQUIRE_MSG(evaluate(p.ds, rep) == vec({x, y}), "round trip (2-d)");
            auto cls = classify(p.ds, p.table, vec({x, y}));
            REQUIRE_MSG(cls.kind == rep.kind && cls.pseudodigit == rep.pseudodigit,
                        "ambiguous form (2-d)");
        }
    }
    auto at = atlas(p.ds, p.table, 6);
    REQUIRE_MSG(at.radix_points.size() == 128, "radix point count");
    REQUIRE_MSG(at.pseudo_entries.size() == 127, "pseudo entry count");
    std::set<IntVec> radix(at.radix_points.begin(), at.radix_points.end());
    for (const IntVec& q : at.pseudo_points) {
        REQUIRE_MSG(!radix.count(q), "radix and pseudo points overlap");
    }
    return true;
}

// 7. property suite: 50 random bases (n <= 3, entries in [-6,6]) that are
//    dilations with mu > 2 all have empty pseudodigit sets.
bool crit_mu_property(std::string& detail) {
    std::mt19937_64 rng(2024);
    int accepted = 0;
    for (int attempt = 0; attempt < 100000 && accepted < 50; ++attempt) {
        const int n = 1 + int(rng() % 3);
        IntMatrix A = random_matrix(rng, n, -6, 6);
        if (!verify_dilation(A)) continue;
        if (!mu_exceeds(A, Rat(4))) continue;
        ++accepted;
        auto p = pipeline(A);
        REQUIRE_MSG(p.table.S.empty(),
                    "counterexample: mu > 2 with nonempty pseudodigit set (" + A.str() + ")");
    }
    REQUIRE_MSG(accepted == 50, "sample budget exhausted before 50 accepted matrices");
    return true;
}

// 8. power search terminates on all worked bases; twin dragon gives beta = 3
//    under the mu > 2 threshold, minimal among j < 3.
bool crit_power(std::string& detail) {
    for (const IntMatrix& A : worked_bases()) {
        auto pr = find_power(A, MuThreshold::MuGt2);
        REQUIRE_MSG(pr.beta >= 1, "no exponent found");
    }
    auto pr = find_power(twin_dragon(), MuThreshold::MuGt2);
    REQUIRE_MSG(pr.beta == 3, "twin dragon exponent");
    for (unsigned j = 1; j < 3; ++j) {
        REQUIRE_MSG(!mu_exceeds(twin_dragon().pow(j), Rat(4)), "minimality");
    }
    return true;
}

// 9. norm certification at tol 1e-9: enclosures contain the closed-form
//    values 2/sqrt(3) (bases +-2, vector 1) and sqrt(2) (twin dragon, (1,0)).
bool crit_norms(std::string& detail) {
    const Rat tol(1, 1000000000);
    for (const IntMatrix& A : {IntMatrix{{2}}, IntMatrix{{-2}}}) {
        auto ev = make_norm_evaluator(A);
        auto iv = ev.norm_prime(vec({1}), tol);
        // value^2 = 4/3
        REQUIRE_MSG(iv.lo * iv.lo <= Rat(4, 3), "lower bound misses 2/sqrt(3)");
        REQUIRE_MSG(iv.hi * iv.hi >= Rat(4, 3), "upper bound misses 2/sqrt(3)");
        REQUIRE_MSG(iv.width() <= tol, "interval wider than 1e-9");
    }
    auto ev = make_norm_evaluator(twin_dragon());
    auto iv = ev.norm_prime(vec({1, 0}), tol);
    REQUIRE_MSG(iv.lo * iv.lo <= 2, "lower bound misses sqrt(2)");
    REQUIRE_MSG(iv.hi * iv.hi >= 2, "upper bound misses sqrt(2)");
    REQUIRE_MSG(iv.width() <= tol, "interval wider than 1e-9");
    return true;
}

// 10. soundness: every cycle element of the worked bases and of 50 random
//     dilations (n <= 3, desk-scale cap R_upper <= 32) lies in the l2 ball
//     of radius R_upper. Exact membership.
bool crit_ball(std::string& detail) {
    auto check_table = [&detail](const Pipeline& p) {
        const Rat r_sq = p.br.R_upper * p.br.R_upper;
        for (const Cycle& c : p.table.cycles) {
            for (const IntVec& e : c.elements) {
                if (Rat(quad_l2(e)) > r_sq) {
                    detail = "cycle element outside the certified ball";
                    return false;
                }
            }
        }
        return true;
    };
    for (const IntMatrix& A : worked_bases()) {
        if (!check_table(pipeline(A))) return false;
    }
    std::mt19937_64 rng(4096);
    int accepted = 0;
    for (int attempt = 0; attempt < 100000 && accepted < 50; ++attempt) {
        const int n = 1 + int(rng() % 3);
        IntMatrix A = random_matrix(rng, n, -6, 6);
        if (!verify_dilation(A)) continue;
        DigitSet ds = digit_set(A);
        BoundsReport br = bounds_report(make_norm_evaluator(A));
        if (br.R_upper > 32) continue;  // desk-scale cap on the enumeration
        ++accepted;
        Pipeline p{std::move(ds), std::move(br), {}};
        p.table = pseudodigits(p.ds, p.br);
        if (!check_table(p)) return false;
    }
    REQUIRE_MSG(accepted == 50, "sample budget exhausted before 50 accepted matrices");
    return true;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    bool (*run)(std::string&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "base-2-goldens", 1.0, crit_base2},
        {2, "base-neg2-goldens", 1.0, crit_base_neg2},
        {3, "twin-dragon-goldens", 5.0, crit_twin},
        {4, "quartic-base-goldens", 60.0, crit_quartic},
        {5, "mu-boundary-sharpness", 5.0, crit_boundary},
        {6, "partition-round-trip", 30.0, crit_partition},
        {7, "mu-condition-property", 300.0, crit_mu_property},
        {8, "power-search", 5.0, crit_power},
        {9, "norm-certification", 1.0, crit_norms},
        {10, "ball-soundness", 300.0, crit_ball},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && elapsed > c.budget_s) {
            ok = false;
            detail = "over time budget";
        }
        if (ok) {
            std::printf("PASS %2d %-24s (%.2f s)\n", c.id, c.name, elapsed);
        } else {
            std::printf("FAIL %2d %-24s (%.2f s): %s\n", c.id, c.name, elapsed,
                        detail.empty() ? "assertion failed" : detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %d criteria passed\n", int(criteria.size()));
        return 0;
    }
    std::printf("%d of %d criteria failed\n", failures, int(criteria.size()));
    return 1;
}
