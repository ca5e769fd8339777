#include "dmv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dmv {

namespace {

constexpr int kStarGrid = 4096;

double cross(Point o, Point a, Point b) {
    return (a.x1 - o.x1) * (b.x2 - o.x2) - (a.x2 - o.x2) * (b.x1 - o.x1);
}

double dot(Point a, Point b) { return a.x1 * b.x1 + a.x2 * b.x2; }

bool finite(Point p) { return std::isfinite(p.x1) && std::isfinite(p.x2); }

// Proper or improper intersection of closed segments ab and cd.
bool segments_intersect(Point a, Point b, Point c, Point d) {
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    auto on_segment = [](Point p, Point q, Point r) {
        return std::min(p.x1, r.x1) <= q.x1 && q.x1 <= std::max(p.x1, r.x1) &&
               std::min(p.x2, r.x2) <= q.x2 && q.x2 <= std::max(p.x2, r.x2);
    };
    if (d1 == 0 && on_segment(c, a, d)) return true;
    if (d2 == 0 && on_segment(c, b, d)) return true;
    if (d3 == 0 && on_segment(a, c, b)) return true;
    if (d4 == 0 && on_segment(a, d, b)) return true;
    return false;
}

double point_segment_distance(Point p, Point a, Point b) {
    const Point ab{b.x1 - a.x1, b.x2 - a.x2};
    const Point ap{p.x1 - a.x1, p.x2 - a.x2};
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(ap, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point q{a.x1 + t * ab.x1, a.x2 + t * ab.x2};
    return distance(p, q);
}

}  // namespace

Disc::Disc(Point c, double r) : center(c), radius(r) {
    if (!finite(c) || !(r > 0.0)) throw std::invalid_argument("Disc: radius must be positive");
}

StarDomain::StarDomain(Point center, double c0, std::vector<double> cos_coeffs,
                       std::vector<double> sin_coeffs)
    : center_(center), c0_(c0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    if (!finite(center) || !std::isfinite(c0))
        throw std::invalid_argument("StarDomain: non-finite parameters");
    if (cos_.size() > 16 || sin_.size() > 16)
        throw std::invalid_argument("StarDomain: at most 16 harmonics supported");
    for (int j = 0; j < kStarGrid; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / kStarGrid;
        if (!(radius(theta) > 0.0))
            throw std::invalid_argument("StarDomain: boundary radius must stay positive");
    }
}

double StarDomain::radius(double theta) const {
    double r = c0_;
    for (std::size_t k = 0; k < cos_.size(); ++k) r += cos_[k] * std::cos((k + 1) * theta);
    for (std::size_t k = 0; k < sin_.size(); ++k) r += sin_[k] * std::sin((k + 1) * theta);
    return r;
}

double StarDomain::max_radius() const {
    double r = std::abs(c0_);
    for (double c : cos_) r += std::abs(c);
    for (double s : sin_) r += std::abs(s);
    return r;
}

PolygonDomain::PolygonDomain(std::vector<Point> vertices, Point anchor)
    : vertices_(std::move(vertices)), anchor_(anchor) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw std::invalid_argument("PolygonDomain: need at least 3 vertices");
    if (!finite(anchor)) throw std::invalid_argument("PolygonDomain: non-finite anchor");
    for (Point v : vertices_)
        if (!finite(v)) throw std::invalid_argument("PolygonDomain: non-finite vertex");
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % n];
        twice_area += a.x1 * b.x2 - b.x1 * a.x2;
    }
    if (!(twice_area > 0.0))
        throw std::invalid_argument("PolygonDomain: vertices must be counterclockwise");
    // simplicity: no two non-adjacent edges may intersect
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j],
                                   vertices_[(j + 1) % n]))
                throw std::invalid_argument("PolygonDomain: edges intersect (not simple)");
        }
    }
    // star-shaped about the anchor: every fan triangle positively oriented
    for (std::size_t i = 0; i < n; ++i) {
        if (!(cross(anchor_, vertices_[i], vertices_[(i + 1) % n]) > 0.0))
            throw std::invalid_argument(
                "PolygonDomain: polygon is not star-shaped about the anchor");
    }
}

double area(const Disc& d) { return std::numbers::pi * d.radius * d.radius; }

double area(const StarDomain& s) {
    // midpoint rule in theta, exact for trigonometric polynomials of the
    // degrees the representation allows
    constexpr int n = 2048;
    const double h = 2.0 * std::numbers::pi / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double r = s.radius((j + 0.5) * h);
        sum += r * r;
    }
    return 0.5 * sum * h;
}

double area(const PolygonDomain& p) {
    const auto& v = p.vertices();
    double twice_area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        twice_area += a.x1 * b.x2 - b.x1 * a.x2;
    }
    return 0.5 * twice_area;
}

double area(const Domain& d) {
    return std::visit([](const auto& g) { return area(g); }, d);
}

bool contains(const Disc& d, Point p) { return distance(p, d.center) < d.radius; }

bool contains(const StarDomain& s, Point p) {
    const double dx = p.x1 - s.center().x1;
    const double dy = p.x2 - s.center().x2;
    const double rho = std::hypot(dx, dy);
    if (rho == 0.0) return true;
    return rho < s.radius(std::atan2(dy, dx));
}

bool contains(const PolygonDomain& poly, Point p) {
    // winding number
    const auto& v = poly.vertices();
    int wn = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        if (a.x2 <= p.x2) {
            if (b.x2 > p.x2 && cross(a, b, p) > 0.0) ++wn;
        } else if (b.x2 <= p.x2 && cross(a, b, p) < 0.0) {
            --wn;
        }
    }
    return wn != 0;
}

bool contains(const Domain& d, Point p) {
    return std::visit([p](const auto& g) { return contains(g, p); }, d);
}

double boundary_clearance(const Domain& d, Point p) {
    if (const auto* disc = std::get_if<Disc>(&d)) return disc->radius - distance(p, disc->center);
    if (const auto* star = std::get_if<StarDomain>(&d)) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < kStarGrid; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / kStarGrid;
            const double r = star->radius(theta);
            const Point b{star->center().x1 + r * std::cos(theta),
                          star->center().x2 + r * std::sin(theta)};
            best = std::min(best, distance(p, b));
        }
        return best;
    }
    const auto& poly = std::get<PolygonDomain>(d);
    double best = std::numeric_limits<double>::infinity();
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
    return best;
}

bool is_admissible(const Disc& disc, const Domain& omega) {
    if (!contains(omega, disc.center)) return false;
    return boundary_clearance(omega, disc.center) > disc.radius + kAdmissibleClearance;
}

Domain scale_to_area(const Domain& d, double target_area) {
    if (!(target_area > 0.0)) throw std::invalid_argument("scale_to_area: area must be positive");
    const double s = std::sqrt(target_area / area(d));
    if (const auto* disc = std::get_if<Disc>(&d)) return Disc(disc->center, disc->radius * s);
    if (const auto* star = std::get_if<StarDomain>(&d)) {
        auto scale = [s](std::vector<double> v) {
            for (double& x : v) x *= s;
            return v;
        };
        return StarDomain(star->center(), star->c0() * s, scale(star->cos_coeffs()),
                          scale(star->sin_coeffs()));
    }
    const auto& poly = std::get<PolygonDomain>(d);
    std::vector<Point> vertices = poly.vertices();
    const Point a = poly.anchor();
    for (Point& v : vertices) v = Point{a.x1 + s * (v.x1 - a.x1), a.x2 + s * (v.x2 - a.x2)};
    return PolygonDomain(std::move(vertices), a);
}

Point reference_point(const Domain& d) {
    if (const auto* disc = std::get_if<Disc>(&d)) return disc->center;
    if (const auto* star = std::get_if<StarDomain>(&d)) return star->center();
    return std::get<PolygonDomain>(d).anchor();
}

double radial_extent(const Disc& d, Point x0, double cos_t, double sin_t) {
    const Point m{d.center.x1 - x0.x1, d.center.x2 - x0.x2};
    const double m2 = dot(m, m);
    if (!(m2 < d.radius * d.radius))
        throw std::invalid_argument("radial_extent: point not inside the disc");
    const double b = m.x1 * cos_t + m.x2 * sin_t;
    return b + std::sqrt(b * b + d.radius * d.radius - m2);
}

double radial_extent(const StarDomain& s, Point x0, double cos_t, double sin_t) {
    const double off = distance(x0, s.center());
    if (off < 1e-14) {
        return s.radius(std::atan2(sin_t, cos_t));
    }
    // signed boundary defect along the ray; negative strictly inside
    auto defect = [&](double rho) {
        const double qx = x0.x1 + rho * cos_t - s.center().x1;
        const double qy = x0.x2 + rho * sin_t - s.center().x2;
        return std::hypot(qx, qy) - s.radius(std::atan2(qy, qx));
    };
    double lo = 0.0;
    double hi = off + s.max_radius() + 1.0;
    if (!(defect(0.0) < 0.0))
        throw std::invalid_argument("radial_extent: point not inside the star domain");
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (defect(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

bool star_visible_from(const PolygonDomain& poly, Point x0) {
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(cross(x0, v[i], v[(i + 1) % v.size()]) > 0.0)) return false;
    return true;
}

namespace {

Point point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("domain file: point must be [x1, x2]");
    return Point{j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> coeffs_from_json(const nlohmann::json& j) {
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) throw std::invalid_argument("domain file: coefficient must be a number");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

Domain domain_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("domain file: expected an object with a \"type\" field");
    const std::string type = j.at("type").get<std::string>();
    if (type == "disc") {
        return Disc(point_from_json(j.at("center")), j.at("radius").get<double>());
    }
    if (type == "star") {
        return StarDomain(point_from_json(j.at("center")), j.at("c0").get<double>(),
                          j.contains("cos") ? coeffs_from_json(j.at("cos")) : std::vector<double>{},
                          j.contains("sin") ? coeffs_from_json(j.at("sin")) : std::vector<double>{});
    }
    if (type == "polygon") {
        std::vector<Point> vertices;
        for (const auto& v : j.at("vertices")) vertices.push_back(point_from_json(v));
        return PolygonDomain(std::move(vertices), point_from_json(j.at("anchor")));
    }
    throw std::invalid_argument("domain file: unknown type \"" + type + "\"");
}

nlohmann::json domain_to_json(const Domain& d) {
    nlohmann::json j;
    if (const auto* disc = std::get_if<Disc>(&d)) {
        j["type"] = "disc";
        j["center"] = {disc->center.x1, disc->center.x2};
        j["radius"] = disc->radius;
        return j;
    }
    if (const auto* star = std::get_if<StarDomain>(&d)) {
        j["type"] = "star";
        j["center"] = {star->center().x1, star->center().x2};
        j["c0"] = star->c0();
        j["cos"] = star->cos_coeffs();
        j["sin"] = star->sin_coeffs();
        return j;
    }
    const auto& poly = std::get<PolygonDomain>(d);
    j["type"] = "polygon";
    j["anchor"] = {poly.anchor().x1, poly.anchor().x2};
    auto verts = nlohmann::json::array();
    for (Point v : poly.vertices()) verts.push_back({v.x1, v.x2});
    j["vertices"] = verts;
    return j;
}

Domain load_domain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open domain file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("domain file " + path + ": " + e.what());
    }
    return domain_from_json(j);
}

}  // namespace dmv
