#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dmv/quadrature.hpp"
#include "dmv/specfun.hpp"

using namespace dmv;
using std::numbers::pi;

namespace {

// frozen 30-digit oracle values
constexpr double kI0_2 = 2.2795853023360672674;
constexpr double kI1_2 = 1.5906368546373290634;   // a_bullet(2)
constexpr double kJ1_2 = 0.5767248077568733872;   // disc-mean coefficient 2 J1(2)/2
constexpr double kA_2 = 0.63979265116803363372;   // a(2)
constexpr double kABullet_1 = 1.1303182079849700544;
// Integral over the unit square about its centroid of log(r0/|y|), r0 = 1/sqrt(pi)
constexpr double kSquareLogMean = 0.48881048395782425802;

const ScalarField kOne = harmonic_poly(0, HarmonicPart::Real);

}  // namespace

TEST_CASE("spec validation and refinement") {
    CHECK_THROWS_AS(QuadratureSpec{.n_theta = 15}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec{.n_theta = 17}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec{.radial_order = 1}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec{.radial_order = 65}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec{.n_radial_panels = 0}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec{.grading = 1.0}.validate(), std::invalid_argument);
    const QuadratureSpec fine = QuadratureSpec{}.refined();
    CHECK(fine.n_theta == 512);
    CHECK(fine.radial_order == 32);
    CHECK(QuadratureSpec{.radial_order = 64}.refined().radial_order == 64);
}

TEST_CASE("circle mean") {
    CHECK(circle_mean(kOne, {0.3, 0.8}, 2.0).value == 1.0);
    const ScalarField v = plane_panharmonic(2.0, 0.0);
    CHECK(std::abs(circle_mean(v, {0, 0}, 1.0).value - kI0_2) < 1e-10 * kI0_2);
    const ScalarField h = harmonic_poly(3, HarmonicPart::Real);
    const Point x{0.4, -0.2};
    CHECK(std::abs(circle_mean(h, x, 0.7).value - h.evaluate(x)) < 1e-11);
    CHECK_THROWS_AS(circle_mean(v, {0, 0}, 0.0), std::invalid_argument);
}

TEST_CASE("disc mean") {
    CHECK(std::abs(disc_mean(kOne, {-0.4, 0.1}, 1.3).value - 1.0) < 1e-14);
    const ScalarField v = plane_panharmonic(2.0, 0.0);
    CHECK(std::abs(disc_mean(v, {0, 0}, 1.0).value - kI1_2) < 1e-10 * kI1_2);
    // Helmholtz analogue: coefficient 2 J1(t)/t
    const ScalarField u = radial_helmholtz(2.0, {0, 0});
    CHECK(std::abs(disc_mean(u, {0, 0}, 1.0).value - kJ1_2) < 1e-9);
}

TEST_CASE("weighted disc mean") {
    CHECK(std::abs(weighted_disc_mean(kOne, {0.7, -0.3}, 0.8).value - 0.5) < 1e-12);
    const ScalarField v = plane_panharmonic(2.0, 0.0);
    CHECK(std::abs(weighted_disc_mean(v, {0, 0}, 1.0).value - kA_2) < 1e-8);
    const ScalarField odd = harmonic_poly(1, HarmonicPart::Real);
    CHECK(std::abs(weighted_disc_mean(odd, {0, 0}, 1.0).value) < 1e-12);
}

TEST_CASE("domain mean") {
    const Domain square = PolygonDomain({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Point{0.5, 0.5});
    CHECK(std::abs(domain_mean(kOne, square).value - 1.0) < 1e-13);
    const Domain star = StarDomain({0.2, -0.3}, 1.0, {0.1, 0.05}, {0.0, 0.1});
    CHECK(std::abs(domain_mean(kOne, star).value - 1.0) < 1e-12);
    const Domain disc = Disc({0, 0}, 1.0);
    const ScalarField v = plane_panharmonic(1.0, 0.0);
    CHECK(std::abs(domain_mean(v, disc).value - kABullet_1) < 1e-9);
    // polygon mean of a non-constant field: square about the origin, odd integrand
    const Domain sym = PolygonDomain({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, Point{0, 0});
    CHECK(std::abs(domain_mean(harmonic_poly(1, HarmonicPart::Real), sym).value) < 1e-13);
}

TEST_CASE("weighted domain mean") {
    const Point x0{0.3, 0.5};
    const Domain disc = Disc(x0, 1.0);
    CHECK(std::abs(weighted_domain_mean(kOne, disc, x0, 1.0).value - 0.5) < 1e-12);
    const ScalarField v = radial_panharmonic(2.0, x0);
    CHECK(std::abs(weighted_domain_mean(v, disc, x0, 1.0).value - kA_2) < 1e-8);

    // unit-area square about its centroid with the equal-area radius: the
    // geometric mean drops strictly below 1/2
    const Domain square =
        PolygonDomain({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}, Point{0, 0});
    const double r0 = 1.0 / std::sqrt(pi);
    const double mean = weighted_domain_mean(kOne, square, {0, 0}, r0).value;
    CHECK(std::abs(mean - kSquareLogMean) < 1e-10);
    CHECK(mean < 0.5);

    // star center precondition
    const Domain star = StarDomain({0, 0}, 1.0, {0.1}, {});
    CHECK_THROWS_AS(weighted_domain_mean(kOne, star, {0.2, 0.0}, 0.5), std::invalid_argument);
    // a disc written in star form goes through the star path and still
    // reproduces the harmonic identity
    const Domain star_disc = StarDomain({0.3, 0.5}, 1.0, {}, {});
    CHECK(std::abs(weighted_domain_mean(kOne, star_disc, {0.3, 0.5}, 1.0).value - 0.5) < 1e-12);

    // any interior point works for a disc; outside throws
    CHECK_NOTHROW(weighted_domain_mean(kOne, disc, {0.5, 0.7}, 1.0));
    CHECK_THROWS_AS(weighted_domain_mean(kOne, disc, {2.0, 0.0}, 1.0), std::invalid_argument);
    // polygon requires fan visibility
    CHECK_THROWS_AS(weighted_domain_mean(kOne, square, {0.7, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("weighted mean about an off-center point") {
    // identity check in disguise: for a disc that is an admissible neighborhood
    // of x0 the weighted mean over D_r(x0) equals a(mu r) v(x0); computing it
    // through the off-center machinery of the surrounding disc must agree.
    const Domain big = Disc({0, 0}, 2.0);
    const ScalarField v = radial_panharmonic(1.0, {0, 0});
    const Point x0{0.4, -0.1};
    // same integrand integrated over the big disc both ways
    const double direct = weighted_domain_mean(v, big, x0, 1.0).value;
    const double engine = weighted_mean_about(v, big, x0, 1.0, QuadratureSpec{});
    CHECK(direct == engine);
    // star-domain written disc agrees with the disc path from an off-center x0
    const Domain star_disc = StarDomain({0, 0}, 2.0, {0.0, 0.0, 0.0}, {});
    const double via_star = weighted_mean_about(v, star_disc, x0, 1.0, QuadratureSpec{});
    CHECK(std::abs(via_star - direct) < 1e-10);
}

TEST_CASE("green identity residual") {
    CHECK(std::abs(green_identity_residual(quadratic_nonsolution(), {0, 0}, 1.0)) < 1e-10);
    const ScalarField h = harmonic_poly(4, HarmonicPart::Real);
    CHECK(std::abs(green_identity_residual(h, {0.4, -0.3}, 0.5)) < 1e-10);
    const ScalarField v = plane_panharmonic(1.0, 0.0);
    CHECK(std::abs(green_identity_residual(v, {0, 0}, 1.0)) < 1e-9);
    const ScalarField u = plane_helmholtz(2.0, 0.4);
    CHECK(std::abs(green_identity_residual(u, {0.2, 0.3}, 0.5)) < 1e-9);
}

TEST_CASE("panharmonic identity grid") {
    const Point xs[] = {{0, 0}, {0.4, -0.3}, {-1.1, 0.7}};
    for (double mu : {0.5, 1.0, 2.0, 4.0}) {
        const ScalarField fields[] = {plane_panharmonic(mu, 0.3),
                                      radial_panharmonic(mu, {0.1, -0.2}),
                                      separable_panharmonic(mu / std::numbers::sqrt2,
                                                            mu / std::numbers::sqrt2)};
        for (const ScalarField& v : fields) {
            for (Point x : xs) {
                for (double r : {0.25, 0.5, 1.0}) {
                    const double value = v.evaluate(x);
                    const double t = mu * r;
                    CHECK(std::abs(circle_mean(v, x, r).value - specfun::coeff_a_circ(t) * value) <=
                          1e-9 * std::abs(value));
                    CHECK(std::abs(disc_mean(v, x, r).value - specfun::coeff_a_bullet(t) * value) <=
                          1e-9 * std::abs(value));
                    CHECK(std::abs(weighted_disc_mean(v, x, r).value -
                                   specfun::coeff_a(t) * value) <= 1e-7 * std::abs(value));
                }
            }
        }
    }
}

TEST_CASE("helmholtz identity grid spans past the first zero of J1") {
    const Point xs[] = {{0, 0}, {0.3, 0.2}, {-0.5, 0.4}};
    const double r = 1.0;
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        const ScalarField fields[] = {plane_helmholtz(lambda, 0.7),
                                      radial_helmholtz(lambda, {0.1, -0.2})};
        for (const ScalarField& u : fields) {
            for (Point x : xs) {
                const double value = u.evaluate(x);
                const double want = specfun::coeff_a_tilde(lambda * r) * value;
                CHECK(std::abs(weighted_disc_mean(u, x, r).value - want) <=
                      1e-7 * std::max(1.0, std::abs(value)));
            }
        }
    }
    // lambda r = 5 sits past j_{1,1}: the unweighted coefficient has gone
    // negative there while the weighted one stays positive
    CHECK(specfun::bessel_j1(5.0) < 0.0);
    CHECK(specfun::coeff_a_tilde(5.0) > 0.0);
}

TEST_CASE("harmonic weighted identity") {
    const Point xs[] = {{0, 0}, {0.4, -0.3}, {-1.1, 0.7}};
    for (int k = 0; k <= 6; ++k) {
        for (auto part : {HarmonicPart::Real, HarmonicPart::Imaginary}) {
            const ScalarField v = harmonic_poly(k, part);
            for (Point x : xs) {
                for (double r : {0.5, 1.0}) {
                    const double resid =
                        weighted_disc_mean(v, x, r).value - 0.5 * v.evaluate(x);
                    CHECK(std::abs(resid) <= 1e-9);
                }
            }
        }
    }
    CHECK(std::abs(weighted_disc_mean(kOne, {0.2, 0.1}, 0.7).value - 0.5) <= 1e-12);
}

TEST_CASE("strict inequality for positive panharmonic fields") {
    for (double mu : {0.5, 1.0, 2.0}) {
        const ScalarField v = plane_panharmonic(mu, 1.1);
        for (double r : {0.25, 0.5, 1.0}) {
            const Point x{0.3, -0.2};
            const double value = v.evaluate(x);
            const double mean = weighted_disc_mean(v, x, r).value;
            const double margin = (specfun::coeff_a(mu * r) - 0.5) * value - 1e-7;
            CHECK(mean - 0.5 * value >= margin);
            CHECK(mean > 0.5 * value);
        }
    }
}

TEST_CASE("refinement reduces the weighted residual to the floor") {
    const ScalarField v = plane_panharmonic(2.0, 0.3);
    const Point x{0.1, -0.15};
    auto residual = [&](const QuadratureSpec& spec) {
        return std::abs(weighted_disc_mean(v, x, 1.0, spec).value -
                        specfun::coeff_a(2.0) * v.evaluate(x)) /
               v.evaluate(x);
    };
    QuadratureSpec spec{.n_theta = 16, .n_radial_panels = 8, .radial_order = 4, .grading = 0.25};
    double prev = residual(spec);
    for (int step = 0; step < 3; ++step) {
        spec = spec.refined();
        const double cur = residual(spec);
        const bool at_floor = cur <= 1e-12;
        if (!at_floor) CHECK(cur <= prev / 100.0);
        prev = cur;
        if (at_floor) break;
    }
    CHECK(residual(QuadratureSpec{}) <= 1e-12);
}

TEST_CASE("refinement error estimate bounds the true residual") {
    const ScalarField v = plane_panharmonic(2.0, 0.3);
    const Point x{0.1, -0.15};
    const double exact = specfun::coeff_a(2.0) * v.evaluate(x);
    const QuadratureSpec coarse{.n_theta = 16, .n_radial_panels = 4, .radial_order = 4,
                                .grading = 0.25};
    const MeanResult estimated = with_refinement(
        [&](const QuadratureSpec& s) { return weighted_disc_mean(v, x, 1.0, s).value; }, coarse);
    CHECK(std::abs(estimated.value - exact) <= 10.0 * std::max(estimated.est_error, 1e-13));
}
