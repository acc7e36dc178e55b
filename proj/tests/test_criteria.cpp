#include <doctest.h>

#include <random>

#include "mns/criteria.hpp"
#include "mns/errors.hpp"
#include "test_support.hpp"

using namespace mns;
using mns_test::random_matrix;

TEST_CASE("check_conditions on known bases") {
    // 3I: mu = 3 > 2 sqrt(2) > 2
    auto r3 = check_conditions(IntMatrix{{3, 0}, {0, 3}});
    CHECK(r3.is_dilation);
    CHECK(r3.mu_gt_2);
    CHECK(r3.mu_gt_2sqrtn);
    CHECK(r3.verdict == Verdict::GuaranteedRadix);

    // scalar 3 in one dimension: mu = 3 > 2 = 2 sqrt(1)
    auto s3 = check_conditions(IntMatrix{{3}});
    CHECK(s3.mu_gt_2);
    CHECK(s3.mu_gt_2sqrtn);
    CHECK(s3.verdict == Verdict::GuaranteedRadix);

    // diag(2,2): mu = 2 exactly, strict tests fail
    auto d22 = check_conditions(IntMatrix{{2, 0}, {0, 2}});
    CHECK(d22.is_dilation);
    CHECK(!d22.mu_gt_2);
    CHECK(!d22.mu_gt_2sqrtn);
    CHECK(d22.verdict == Verdict::Inconclusive);

    // scalar 2: mu = 2, boundary again
    auto s2 = check_conditions(IntMatrix{{2}});
    CHECK(!s2.mu_gt_2);
    CHECK(s2.verdict == Verdict::Inconclusive);
    auto sneg = check_conditions(IntMatrix{{-2}});
    CHECK(!sneg.mu_gt_2);
    CHECK(sneg.verdict == Verdict::Inconclusive);

    // twin dragon: mu = sqrt(2), and both column conditions fail
    auto tw = check_conditions(mns_test::twin_dragon());
    CHECK(tw.is_dilation);
    CHECK(!tw.mu_gt_2);
    CHECK(!tw.mu_gt_2sqrtn);
    CHECK(!tw.jeong_C_in_AU);
    CHECK(!tw.jeong_C_in_AF);
    CHECK(tw.verdict == Verdict::Inconclusive);

    // non-dilation
    auto id = check_conditions(IntMatrix::identity(2));
    CHECK(!id.is_dilation);
    CHECK(id.verdict == Verdict::Inconclusive);

    CHECK(verdict_name(Verdict::GuaranteedRadix) == "guaranteed_radix");
    CHECK(verdict_name(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("column condition detects shifted-box membership") {
    // 4I: +-A^-1 e_i = +-e_i / 4, interior to both boxes
    auto r4 = check_conditions(IntMatrix{{4, 0}, {0, 4}});
    CHECK(r4.jeong_C_in_AU);
    CHECK(r4.jeong_C_in_AF);

    // diag(2,2): +-A^-1 e_i = +-e_i / 2 lands on the box boundary; the
    // symmetric candidate set makes a boundary hit fatal for both boxes,
    // matching the fact that diag(2,2) has nonzero fixed points
    auto d22 = check_conditions(IntMatrix{{2, 0}, {0, 2}});
    CHECK(!d22.jeong_C_in_AU);
    CHECK(!d22.jeong_C_in_AF);
    CHECK(d22.verdict == Verdict::Inconclusive);

    // the symmetric set forces the two flags to agree
    std::mt19937_64 rng(59);
    for (int t = 0; t < 40; ++t) {
        IntMatrix A = random_matrix(rng, 2, -5, 5);
        if (det(A) == 0) continue;
        auto r = check_conditions(A);
        CHECK(r.jeong_C_in_AU == r.jeong_C_in_AF);
    }
}

TEST_CASE("mu_gt_2sqrtn implies mu_gt_2 for n >= 1") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + int(rng() % 3);
        IntMatrix A = random_matrix(rng, n, -5, 5);
        if (det(A) == 0) continue;
        auto r = check_conditions(A);
        if (r.mu_gt_2sqrtn) CHECK(r.mu_gt_2);
        if (r.verdict == Verdict::GuaranteedRadix) CHECK(r.is_dilation);
    }
}

TEST_CASE("find_power on known bases") {
    auto p2 = find_power(IntMatrix{{2}}, MuThreshold::MuGt2);
    CHECK(p2.beta == 2);
    CHECK(p2.trace.size() == 2);

    auto p3 = find_power(IntMatrix{{3, 0}, {0, 3}}, MuThreshold::MuGt2);
    CHECK(p3.beta == 1);

    auto pt = find_power(mns_test::twin_dragon(), MuThreshold::MuGt2);
    CHECK(pt.beta == 3);
    CHECK(pt.threshold == MuThreshold::MuGt2);
    CHECK(pt.certificate.is_dilation);

    auto pt2 = find_power(mns_test::twin_dragon(), MuThreshold::MuGt2SqrtN);
    CHECK(pt2.beta == 4);

    // minimality: no smaller power passes the threshold
    IntMatrix tw = mns_test::twin_dragon();
    for (unsigned j = 1; j < 3; ++j) {
        CHECK(!mu_exceeds(tw.pow(j), Rat(4)));
    }
    CHECK(mu_exceeds(tw.pow(3), Rat(4)));

    CHECK(threshold_name(MuThreshold::MuGt2) == "mu_gt_2");
    CHECK(threshold_name(MuThreshold::MuGt2SqrtN) == "mu_gt_2sqrtn");
}

TEST_CASE("find_power error paths") {
    CHECK_THROWS_AS(find_power(IntMatrix::identity(2), MuThreshold::MuGt2), NotDilationError);
    CHECK_THROWS_AS(find_power(mns_test::twin_dragon(), MuThreshold::MuGt2, 2),
                    OrbitBudgetError);
    CHECK_THROWS_AS(find_power(IntMatrix{{2}}, MuThreshold::MuGt2, 0), DimensionError);
}

TEST_CASE("cross validation") {
    // guaranteed and empty pseudodigit set
    auto cv3 = cross_validate(IntMatrix{{3, 0}, {0, 3}});
    CHECK(cv3.report.verdict == Verdict::GuaranteedRadix);
    CHECK(cv3.yields_radix);
    CHECK(cv3.consistent);

    // inconclusive with a nonempty pseudodigit set: consistent (one-sided test)
    auto cv2 = cross_validate(IntMatrix{{2}});
    CHECK(cv2.report.verdict == Verdict::Inconclusive);
    CHECK(!cv2.yields_radix);
    CHECK(cv2.consistent);

    // inconclusive but actually radix: still consistent
    auto cvn = cross_validate(IntMatrix{{-2}});
    CHECK(cvn.report.verdict == Verdict::Inconclusive);
    CHECK(cvn.yields_radix);
    CHECK(cvn.consistent);

    // diag(2,2): inconclusive, and indeed three nonzero fixed points
    auto cvd = cross_validate(IntMatrix{{2, 0}, {0, 2}});
    CHECK(cvd.report.verdict == Verdict::Inconclusive);
    CHECK(!cvd.yields_radix);
    CHECK(cvd.consistent);

    // 4I: guaranteed by both routes
    auto cv4 = cross_validate(IntMatrix{{4, 0}, {0, 4}});
    CHECK(cv4.report.verdict == Verdict::GuaranteedRadix);
    CHECK(cv4.yields_radix);
    CHECK(cv4.consistent);

    // a fabricated contradiction must throw
    auto guaranteed = check_conditions(IntMatrix{{3, 0}, {0, 3}});
    CHECK_THROWS_AS(cross_validate_with(guaranteed, false), InconsistencyError);
    auto ok = cross_validate_with(guaranteed, true);
    CHECK(ok.consistent);
}
