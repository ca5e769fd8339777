#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace dmv {

struct Point {
    double x1 = 0.0;
    double x2 = 0.0;
};

inline double distance(Point a, Point b) { return std::hypot(a.x1 - b.x1, a.x2 - b.x2); }

// Open disc |y - center| < radius.
struct Disc {
    Disc(Point center, double radius);
    Point center;
    double radius;
};

// Region star-shaped about `center`, boundary radius given by the
// trigonometric polynomial R(theta) = c0 + sum_k a_k cos(k theta) + b_k sin(k theta).
// Validation requires R > 0 on a 4096-point grid and at most 16 harmonics.
class StarDomain {
public:
    StarDomain(Point center, double c0, std::vector<double> cos_coeffs,
               std::vector<double> sin_coeffs);

    double radius(double theta) const;
    Point center() const { return center_; }
    double c0() const { return c0_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }
    // upper bound on R(theta)
    double max_radius() const;

private:
    Point center_;
    double c0_;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

// Simple counterclockwise polygon, star-shaped about `anchor` (each fan
// triangle (anchor, v_i, v_{i+1}) must be positively oriented).
class PolygonDomain {
public:
    PolygonDomain(std::vector<Point> vertices, Point anchor);

    const std::vector<Point>& vertices() const { return vertices_; }
    Point anchor() const { return anchor_; }

private:
    std::vector<Point> vertices_;
    Point anchor_;
};

using Domain = std::variant<Disc, StarDomain, PolygonDomain>;

// Strict-containment clearance used by admissibility checks.
inline constexpr double kAdmissibleClearance = 1e-12;

double area(const Disc& d);
double area(const StarDomain& s);
double area(const PolygonDomain& p);
double area(const Domain& d);

bool contains(const Disc& d, Point p);
bool contains(const StarDomain& s, Point p);
bool contains(const PolygonDomain& poly, Point p);
bool contains(const Domain& d, Point p);

// Distance from an interior point to the boundary; exact for discs and
// polygons, sampled (4096 boundary points) for star domains.
double boundary_clearance(const Domain& d, Point p);

// True iff the closed disc lies strictly inside omega.
bool is_admissible(const Disc& disc, const Domain& omega);

// Homothety about the center/anchor to the requested area.
Domain scale_to_area(const Domain& d, double target_area);

// Star center, star center, or polygon anchor.
Point reference_point(const Domain& d);

// Distance from x0 to the boundary along direction (cos_t, sin_t); requires
// x0 inside. For discs this is the chord formula; for star domains off the
// center it is found by bracketed bisection on the boundary equation.
double radial_extent(const Disc& d, Point x0, double cos_t, double sin_t);
double radial_extent(const StarDomain& s, Point x0, double cos_t, double sin_t);

// True iff every fan triangle (x0, v_i, v_{i+1}) is positively oriented,
// i.e. the polygon is star-shaped about x0 and x0 is strictly inside.
bool star_visible_from(const PolygonDomain& poly, Point x0);

// One JSON object per domain, e.g.
//   {"type":"disc","center":[0,0],"radius":1.0}
//   {"type":"star","center":[0,0],"c0":1.0,"cos":[0.1,0.0],"sin":[0.0,0.05]}
//   {"type":"polygon","anchor":[0.5,0.5],"vertices":[[0,0],[1,0],[1,1],[0,1]]}
Domain domain_from_json(const nlohmann::json& j);
nlohmann::json domain_to_json(const Domain& d);
Domain load_domain_file(const std::string& path);

}  // namespace dmv
