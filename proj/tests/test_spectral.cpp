#include <doctest.h>

#include <random>

#include "mns/errors.hpp"
#include "mns/spectral.hpp"
#include "test_support.hpp"

#ifdef HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace mns;
using mns_test::random_matrix;

TEST_CASE("verify_dilation on known matrices") {
    CHECK(verify_dilation(IntMatrix{{2}}));
    CHECK(verify_dilation(IntMatrix{{-2}}));
    CHECK(verify_dilation(mns_test::twin_dragon()));
    CHECK(verify_dilation(mns_test::quartic_det2()));
    CHECK(verify_dilation(IntMatrix{{0, 2}, {-2, 0}}));
    CHECK(verify_dilation(IntMatrix{{3, 0}, {0, 3}}));

    CHECK(!verify_dilation(IntMatrix::identity(2)));
    CHECK(!verify_dilation(IntMatrix{{1}}));
    CHECK(!verify_dilation(IntMatrix{{0}}));
    // eigenvalues 2 +- sqrt(2): one inside the unit circle
    CHECK(!verify_dilation(IntMatrix{{2, -2}, {-1, 2}}));
    // eigenvalues 0, 5
    CHECK(!verify_dilation(IntMatrix{{1, 2}, {2, 4}}));
    // eigenvalues 1, 2
    CHECK(!verify_dilation(IntMatrix{{1, 1}, {0, 2}}));
}

TEST_CASE("dilation_report flags unit-modulus eigenvalues") {
    auto r1 = dilation_report(IntMatrix::identity(2));
    CHECK(!r1.is_dilation);
    CHECK(r1.unit_modulus_eigenvalue);

    // rotation by 90 degrees: eigenvalues +-i
    auto r2 = dilation_report(IntMatrix{{0, -1}, {1, 0}});
    CHECK(!r2.is_dilation);
    CHECK(r2.unit_modulus_eigenvalue);

    auto r3 = dilation_report(mns_test::twin_dragon());
    CHECK(r3.is_dilation);
    CHECK(!r3.unit_modulus_eigenvalue);
    CHECK(r3.char_poly == std::vector<Int>{Int(2), Int(-2), Int(1)});

    // eigenvalues 2 +- sqrt(2): fails, but nothing on the circle
    auto r4 = dilation_report(IntMatrix{{2, -2}, {-1, 2}});
    CHECK(!r4.is_dilation);
    CHECK(!r4.unit_modulus_eigenvalue);
}

TEST_CASE("sigma_bounds sandwich the singular values") {
    auto s = sigma_bounds(IntMatrix{{2}});
    CHECK(s.sigma_min_lb <= 2);
    CHECK(s.sigma_min_ub >= 2);
    CHECK(s.sigma_max_ub >= 2);

    // twin dragon: both singular values sqrt(2)
    auto t = sigma_bounds(mns_test::twin_dragon());
    CHECK(t.sigma_min_lb * t.sigma_min_lb <= 2);
    CHECK(t.sigma_min_ub * t.sigma_min_ub >= 2);
    CHECK(t.sigma_max_ub * t.sigma_max_ub >= 2);
    CHECK(t.sigma_min_lb > 0);
    CHECK(t.sigma_min_lb <= t.sigma_min_ub);
    CHECK(t.sigma_min_ub <= t.sigma_max_ub);
}

TEST_CASE("mu_exceeds is strict at the boundary") {
    // diag(2, 2): mu^2 = 4 exactly
    IntMatrix d22{{2, 0}, {0, 2}};
    CHECK(!mu_exceeds(d22, Rat(4)));
    CHECK(mu_exceeds(d22, Rat(399, 100)));
    CHECK(!mu_exceeds(d22, Rat(401, 100)));

    // twin dragon: mu^2 = 2 exactly
    CHECK(!mu_exceeds(mns_test::twin_dragon(), Rat(2)));
    CHECK(mu_exceeds(mns_test::twin_dragon(), Rat(199, 100)));

    // A^4 = -4 I for the twin dragon: mu^2 = 16 > 8 = 4n
    IntMatrix a4 = mns_test::twin_dragon().pow(4);
    CHECK(mu_exceeds(a4, Rat(8)));
    CHECK(!mu_exceeds(mns_test::twin_dragon().pow(3), Rat(8)));
}

TEST_CASE("spectral_cert aggregates the pieces") {
    auto cert = spectral_cert(mns_test::twin_dragon(), {Rat(4), Rat(1)});
    CHECK(cert.q_abs_det == 2);
    CHECK(cert.is_dilation);
    CHECK(!cert.unit_modulus_eigenvalue);
    CHECK(cert.mu_exceeds_results.at(rat_string(Rat(4))) == false);
    CHECK(cert.mu_exceeds_results.at(rat_string(Rat(1))) == true);
}

TEST_CASE("eigenvalue enclosures") {
    // diag(2, 5) is symmetric with spectrum {2, 5}
    IntMatrix d{{2, 0}, {0, 5}};
    auto lo = min_eigenvalue_enclosure(d, Rat(1, 1000));
    auto hi = max_eigenvalue_enclosure(d, Rat(1, 1000));
    CHECK(lo.lo <= 2);
    CHECK(lo.hi >= 2);
    CHECK(hi.lo <= 5);
    CHECK(hi.hi >= 5);
    CHECK(lo.hi - lo.lo <= Rat(1, 1000));
    CHECK(hi.hi - hi.lo <= Rat(1, 1000));

    // [[2,1],[1,2]]: eigenvalues 1 and 3
    IntMatrix m{{2, 1}, {1, 2}};
    auto l2 = min_eigenvalue_enclosure(m, Rat(1, 1 << 20));
    auto h2 = max_eigenvalue_enclosure(m, Rat(1, 1 << 20));
    CHECK(l2.lo <= 1);
    CHECK(l2.hi >= 1);
    CHECK(h2.lo <= 3);
    CHECK(h2.hi >= 3);

    // [[1,1],[1,2]]: eigenvalues (3 +- sqrt(5)) / 2, irrational
    IntMatrix g{{1, 1}, {1, 2}};
    auto lg = min_eigenvalue_enclosure(g, Rat(1, 1 << 30));
    // (3 - sqrt(5)) / 2 = 0.381966...
    CHECK(lg.lo <= Rat(38197, 100000));
    CHECK(lg.hi >= Rat(38196, 100000));
}

TEST_CASE("rational_spectrum") {
    std::vector<std::pair<Rat, int>> spec;
    CHECK(rational_spectrum(IntMatrix{{2, 1}, {1, 2}}, spec));
    REQUIRE(spec.size() == 2);
    CHECK(spec[0] == std::pair<Rat, int>{Rat(1), 1});
    CHECK(spec[1] == std::pair<Rat, int>{Rat(3), 1});

    spec.clear();
    CHECK(rational_spectrum(IntMatrix{{3, 0}, {0, 3}}, spec));
    REQUIRE(spec.size() == 1);
    CHECK(spec[0] == std::pair<Rat, int>{Rat(3), 2});

    // [[1,1],[1,2]]: irrational spectrum
    spec.clear();
    CHECK(!rational_spectrum(IntMatrix{{1, 1}, {1, 2}}, spec));
}

#ifdef HAVE_EIGEN
TEST_CASE("verify_dilation agrees with a floating-point eigensolver") {
    std::mt19937_64 rng(12345);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 100; ++t) {
        const int n = 1 + int(rng() % 4);
        IntMatrix m = random_matrix(rng, n, -5, 5);
        Eigen::MatrixXd em(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) em(i, j) = m.at(i, j).get_d();
        }
        Eigen::VectorXcd ev = em.eigenvalues();
        double min_mod = 1e300;
        for (int i = 0; i < n; ++i) min_mod = std::min(min_mod, std::abs(ev(i)));
        // skip cases too close to the unit circle for float arithmetic to call
        if (std::abs(min_mod - 1.0) < 1e-6) continue;
        ++checked;
        CHECK(verify_dilation(m) == (min_mod > 1.0));
    }
    CHECK(checked >= 50);
}
#endif
