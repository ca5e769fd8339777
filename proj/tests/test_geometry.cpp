#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dmv/geometry.hpp"

using namespace dmv;
using std::numbers::pi;

namespace {

PolygonDomain unit_square() {
    return PolygonDomain({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Point{0.5, 0.5});
}

}  // namespace

TEST_CASE("area") {
    CHECK(std::abs(area(Disc({0, 0}, 1.0)) - pi) < 1e-14);
    CHECK(std::abs(area(StarDomain({0, 0}, 1.0, {}, {})) - pi) < 1e-13);
    CHECK(area(unit_square()) == 1.0);
    // ellipse-like star: area = pi (c0^2 + a2^2/2)
    const StarDomain ellipse({0, 0}, 1.0, {0.0, 0.2}, {});
    CHECK(std::abs(area(ellipse) - pi * (1.0 + 0.02)) < 1e-12);
}

TEST_CASE("contains") {
    const Disc d({0, 0}, 1.0);
    CHECK(contains(d, {0.5, 0}));
    CHECK(!contains(d, {1.5, 0}));
    CHECK(!contains(d, {1.0, 0}));  // boundary is outside the open disc
    const PolygonDomain sq = unit_square();
    CHECK(contains(sq, {0.5, 0.5}));
    CHECK(!contains(sq, {1.5, 0.5}));
    CHECK(!contains(sq, {-0.1, 0.2}));
}

TEST_CASE("star contains agrees with the analytic radius test") {
    const StarDomain star({0.3, -0.1}, 1.0, {0.1, 0.2}, {0.0, 0.05});
    std::mt19937_64 rng(12345);
    auto coord = [&rng] { return -2.0 + 4.0 * ((rng() >> 11) * 0x1.0p-53); };
    for (int i = 0; i < 10000; ++i) {
        const Point p{coord(), coord()};
        const double dx = p.x1 - 0.3;
        const double dy = p.x2 + 0.1;
        const double rho = std::hypot(dx, dy);
        const bool expected = rho < star.radius(std::atan2(dy, dx));
        CHECK(contains(star, p) == expected);
    }
}

TEST_CASE("validation rejects bad shapes") {
    CHECK_THROWS_AS(Disc({0, 0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Disc({0, 0}, -1.0), std::invalid_argument);
    // bowtie: self-intersecting
    CHECK_THROWS_AS(PolygonDomain({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, Point{0.5, 0.5}),
                    std::invalid_argument);
    // clockwise
    CHECK_THROWS_AS(PolygonDomain({{0, 0}, {0, 1}, {1, 1}, {1, 0}}, Point{0.5, 0.5}),
                    std::invalid_argument);
    // anchor outside
    CHECK_THROWS_AS(PolygonDomain({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Point{2.0, 0.5}),
                    std::invalid_argument);
    // anchor from which a reflex vertex hides part of the boundary
    CHECK_THROWS_AS(PolygonDomain({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}}, Point{0.5, 2.0}),
                    std::invalid_argument);
    // boundary radius dips below zero
    CHECK_THROWS_AS(StarDomain({0, 0}, 1.0, {1.5}, {}), std::invalid_argument);
    // too many harmonics
    CHECK_THROWS_AS(StarDomain({0, 0}, 1.0, std::vector<double>(17, 0.01), {}),
                    std::invalid_argument);
}

TEST_CASE("admissibility") {
    const Domain unit_disc = Disc({0, 0}, 1.0);
    CHECK(is_admissible(Disc({0, 0}, 0.5), unit_disc));
    CHECK(!is_admissible(Disc({0, 0}, 1.0), unit_disc));  // closure touches
    CHECK(!is_admissible(Disc({0.6, 0}, 0.5), unit_disc));
    const Domain sq = unit_square();
    CHECK(is_admissible(Disc({0.5, 0.5}, 0.3), sq));
    CHECK(!is_admissible(Disc({0.3, 0.5}, 0.3), sq));    // tangent to the left side
    CHECK(!is_admissible(Disc({0.5, 0.5}, 0.5), sq));    // tangent to all four
    CHECK(!is_admissible(Disc({1.5, 0.5}, 0.1), sq));    // center outside
    const Domain star = StarDomain({0, 0}, 1.0, {0.0, 0.2}, {});
    CHECK(is_admissible(Disc({0, 0}, 0.5), star));
    CHECK(!is_admissible(Disc({0, 0}, 0.95), star));     // R(pi/2) = 0.8
}

TEST_CASE("scale_to_area") {
    const Domain d = scale_to_area(Disc({0.2, -0.1}, 1.0), 4.0 * pi);
    CHECK(std::get<Disc>(d).radius == 2.0);
    CHECK(std::get<Disc>(d).center.x1 == 0.2);

    const Domain sq = scale_to_area(unit_square(), pi);
    CHECK(std::abs(area(sq) - pi) < 1e-13 * pi);
    const auto& poly = std::get<PolygonDomain>(sq);
    const double side = poly.vertices()[1].x1 - poly.vertices()[0].x1;
    CHECK(std::abs(side - std::sqrt(pi)) < 1e-13);

    const StarDomain star({0, 0}, 1.0, {0.1}, {0.05});
    const Domain same = scale_to_area(star, area(star));
    CHECK(std::get<StarDomain>(same).c0() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::get<StarDomain>(same).cos_coeffs()[0] == doctest::Approx(0.1).epsilon(1e-14));

    for (const Domain& dom :
         {Domain(Disc({0.3, 0.4}, 0.7)), Domain(StarDomain({0, 0}, 1.0, {0.1, 0.2}, {})),
          Domain(unit_square())}) {
        const double target = 2.37;
        CHECK(std::abs(area(scale_to_area(dom, target)) - target) < 1e-12 * target);
    }
}

TEST_CASE("radial extent") {
    const Disc d({0.5, 0.0}, 1.0);
    // from the center the extent is the radius in every direction
    CHECK(radial_extent(d, {0.5, 0.0}, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // off-center chord: from origin toward +x the boundary sits at 1.5
    CHECK(radial_extent(d, {0, 0}, 1.0, 0.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(radial_extent(d, {0, 0}, -1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(radial_extent(d, {2.0, 0.0}, 1.0, 0.0), std::invalid_argument);

    // star domain, off-center ray recovers the boundary point by bisection
    const StarDomain star({0, 0}, 1.0, {0.1, 0.2}, {0.0, 0.05});
    const Point x0{0.2, 0.1};
    for (double theta : {0.0, 0.7, 2.1, 4.0, 5.9}) {
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        const double len = radial_extent(star, x0, ct, st);
        const Point b{x0.x1 + len * ct, x0.x2 + len * st};
        const double rho = std::hypot(b.x1, b.x2);
        CHECK(std::abs(rho - star.radius(std::atan2(b.x2, b.x1))) < 1e-12);
    }
}

TEST_CASE("polygon star visibility") {
    const PolygonDomain sq = unit_square();
    CHECK(star_visible_from(sq, {0.5, 0.5}));
    CHECK(star_visible_from(sq, {0.1, 0.9}));
    CHECK(!star_visible_from(sq, {1.5, 0.5}));
    CHECK(!star_visible_from(sq, {1.0, 0.5}));  // on the boundary
}

TEST_CASE("domain JSON round trip") {
    const auto disc_json = nlohmann::json::parse(R"({"type":"disc","center":[0,0],"radius":1.0})");
    const Domain disc = domain_from_json(disc_json);
    CHECK(std::get<Disc>(disc).radius == 1.0);
    CHECK(domain_to_json(disc) == disc_json);

    const auto star_json = nlohmann::json::parse(
        R"({"type":"star","center":[0,0],"c0":1.0,"cos":[0.1,0.0],"sin":[0.0,0.05]})");
    const Domain star = domain_from_json(star_json);
    CHECK(std::get<StarDomain>(star).radius(0.0) == doctest::Approx(1.1));
    CHECK(domain_to_json(star) == star_json);

    const auto poly_json = nlohmann::json::parse(
        R"({"type":"polygon","anchor":[0.5,0.5],"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    const Domain poly = domain_from_json(poly_json);
    CHECK(area(poly) == 1.0);
    CHECK(domain_to_json(poly) == poly_json);

    CHECK_THROWS_AS(domain_from_json(nlohmann::json::parse(R"({"type":"blob"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(domain_from_json(nlohmann::json::parse(R"([1,2,3])")), std::invalid_argument);
    CHECK_THROWS_AS(domain_from_json(nlohmann::json::parse(
                        R"({"type":"disc","center":[0],"radius":1.0})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_domain_file("/nonexistent/domain.json"), std::runtime_error);
}

TEST_CASE("reference points") {
    CHECK(reference_point(Disc({1, 2}, 0.5)).x1 == 1.0);
    CHECK(reference_point(StarDomain({3, 4}, 1.0, {}, {})).x2 == 4.0);
    CHECK(reference_point(unit_square()).x1 == 0.5);
}
