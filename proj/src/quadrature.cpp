#include "dmv/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dmv/gauss.hpp"
#include "dmv/numeric.hpp"

namespace dmv {

void QuadratureSpec::validate() const {
    if (n_theta < 16 || n_theta % 2 != 0)
        throw std::invalid_argument("QuadratureSpec: n_theta must be even and >= 16");
    if (radial_order < 2 || radial_order > 64)
        throw std::invalid_argument("QuadratureSpec: radial_order must lie in [2, 64]");
    if (n_radial_panels < 1)
        throw std::invalid_argument("QuadratureSpec: need at least one radial panel");
    if (!(grading > 0.0 && grading < 1.0))
        throw std::invalid_argument("QuadratureSpec: grading must lie in (0, 1)");
}

QuadratureSpec QuadratureSpec::refined() const {
    QuadratureSpec fine = *this;
    fine.n_theta *= 2;
    fine.radial_order = std::min(2 * radial_order, 64);
    return fine;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Gauss-Legendre nodes on [0, 1] over panels [0, g^{P-1}], [g^{P-1}, g^{P-2}],
// ..., [g, 1]. Scale-free: multiply nodes and weights by the radial limit.
struct RadialRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

RadialRule unit_radial_rule(const QuadratureSpec& spec) {
    const GaussRule& g = gauss_legendre(spec.radial_order);
    const int panels = spec.n_radial_panels;
    std::vector<double> brk(panels + 1);
    brk[0] = 0.0;
    brk[panels] = 1.0;
    for (int p = 1; p < panels; ++p) brk[p] = std::pow(spec.grading, panels - p);
    RadialRule rule;
    rule.nodes.reserve(panels * spec.radial_order);
    rule.weights.reserve(panels * spec.radial_order);
    for (int p = 0; p < panels; ++p) {
        const double mid = 0.5 * (brk[p] + brk[p + 1]);
        const double half = 0.5 * (brk[p + 1] - brk[p]);
        for (int i = 0; i < spec.radial_order; ++i) {
            rule.nodes.push_back(mid + half * g.nodes[i]);
            rule.weights.push_back(half * g.weights[i]);
        }
    }
    return rule;
}

// Integral over the star-parameterized region about x0 of f(y, rho) rho drho dtheta.
// `limit` yields the boundary distance along (cos_t, sin_t). Node order is
// fixed (theta outer, rho inner ascending) and accumulation is compensated.
template <class Limit, class F>
double polar_integral(Point x0, const QuadratureSpec& spec, Limit&& limit, F&& f) {
    const RadialRule rr = unit_radial_rule(spec);
    KahanSum total;
    for (int j = 0; j < spec.n_theta; ++j) {
        const double theta = kTwoPi * j / spec.n_theta;
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        const double len = limit(ct, st, theta);
        for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
            const double rho = len * rr.nodes[i];
            const Point y{x0.x1 + rho * ct, x0.x2 + rho * st};
            total.add(len * rr.weights[i] * rho * f(y, rho));
        }
    }
    return total.value() * (kTwoPi / spec.n_theta);
}

// Integral over the polygon, fan-decomposed from x0, of f(y, |y-x0|) dy.
// Each triangle (x0, v_i, v_{i+1}) maps from the unit square by the
// collapsed-edge transform y = x0 + s[(1-t) e_i + t e_{i+1}], Jacobian 2A s;
// the s factor cancels the log singularity at x0 and the graded s-panels
// absorb the remaining s log s roughness.
template <class F>
double fan_integral(const PolygonDomain& poly, Point x0, const QuadratureSpec& spec, F&& f) {
    const RadialRule rr = unit_radial_rule(spec);
    const GaussRule& gt = gauss_legendre(spec.radial_order);
    const auto& v = poly.vertices();
    KahanSum total;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a{v[i].x1 - x0.x1, v[i].x2 - x0.x2};
        const Point b{v[(i + 1) % v.size()].x1 - x0.x1, v[(i + 1) % v.size()].x2 - x0.x2};
        const double twice_area = a.x1 * b.x2 - a.x2 * b.x1;
        if (!(twice_area > 0.0))
            throw std::invalid_argument("fan_integral: polygon not star-shaped about x0");
        for (int ti = 0; ti < spec.radial_order; ++ti) {
            const double t = 0.5 + 0.5 * gt.nodes[ti];
            const double wt = 0.5 * gt.weights[ti];
            const double ex = (1.0 - t) * a.x1 + t * b.x1;
            const double ey = (1.0 - t) * a.x2 + t * b.x2;
            const double elen = std::hypot(ex, ey);
            for (std::size_t si = 0; si < rr.nodes.size(); ++si) {
                const double s = rr.nodes[si];
                const Point y{x0.x1 + s * ex, x0.x2 + s * ey};
                total.add(twice_area * wt * rr.weights[si] * s * f(y, s * elen));
            }
        }
    }
    return total.value();
}

double check_radius(double r, const char* who) {
    if (!(r > 0.0)) throw std::invalid_argument(std::string(who) + ": radius must be positive");
    return r;
}

}  // namespace

MeanResult circle_mean(const ScalarField& v, Point x, double r, const QuadratureSpec& spec) {
    spec.validate();
    check_radius(r, "circle_mean");
    KahanSum sum;
    for (int j = 0; j < spec.n_theta; ++j) {
        const double theta = kTwoPi * j / spec.n_theta;
        sum.add(v.evaluate(Point{x.x1 + r * std::cos(theta), x.x2 + r * std::sin(theta)}));
    }
    return MeanResult{sum.value() / spec.n_theta, spec, 0.0};
}

MeanResult disc_mean(const ScalarField& v, Point x, double r, const QuadratureSpec& spec) {
    spec.validate();
    check_radius(r, "disc_mean");
    const double integral = polar_integral(
        x, spec, [r](double, double, double) { return r; },
        [&v](Point y, double) { return v.evaluate(y); });
    return MeanResult{integral / (std::numbers::pi * r * r), spec, 0.0};
}

MeanResult weighted_disc_mean(const ScalarField& v, Point x, double r, const QuadratureSpec& spec) {
    spec.validate();
    check_radius(r, "weighted_disc_mean");
    const double log_r = std::log(r);
    const double integral = polar_integral(
        x, spec, [r](double, double, double) { return r; },
        [&v, log_r](Point y, double rho) { return v.evaluate(y) * (log_r - std::log(rho)); });
    return MeanResult{integral / (std::numbers::pi * r * r), spec, 0.0};
}

namespace {

// Unweighted and log-weighted integrals over a domain about a star point;
// shared by domain_mean / weighted_mean_about. weight_r <= 0 means unweighted.
double domain_integral(const ScalarField& v, const Domain& omega, Point x0, double weight_r,
                       const QuadratureSpec& spec) {
    const bool weighted = weight_r > 0.0;
    const double log_r = weighted ? std::log(weight_r) : 0.0;
    auto integrand = [&v, weighted, log_r](Point y, double dist) {
        const double val = v.evaluate(y);
        return weighted ? val * (log_r - std::log(dist)) : val;
    };
    if (const auto* disc = std::get_if<Disc>(&omega)) {
        if (!contains(*disc, x0))
            throw std::invalid_argument("domain integral: x0 must lie inside the disc");
        return polar_integral(
            x0, spec,
            [disc, x0](double ct, double st, double) { return radial_extent(*disc, x0, ct, st); },
            integrand);
    }
    if (const auto* star = std::get_if<StarDomain>(&omega)) {
        if (!contains(*star, x0))
            throw std::invalid_argument("domain integral: x0 must lie inside the star domain");
        return polar_integral(
            x0, spec,
            [star, x0](double ct, double st, double) { return radial_extent(*star, x0, ct, st); },
            integrand);
    }
    const auto& poly = std::get<PolygonDomain>(omega);
    if (!star_visible_from(poly, x0))
        throw std::invalid_argument("domain integral: polygon not star-shaped about x0");
    return fan_integral(poly, x0, spec, integrand);
}

}  // namespace

MeanResult domain_mean(const ScalarField& v, const Domain& omega, const QuadratureSpec& spec) {
    spec.validate();
    const double integral = domain_integral(v, omega, reference_point(omega), 0.0, spec);
    return MeanResult{integral / area(omega), spec, 0.0};
}

double weighted_mean_about(const ScalarField& v, const Domain& omega, Point x0, double r,
                           const QuadratureSpec& spec) {
    spec.validate();
    check_radius(r, "weighted_mean_about");
    return domain_integral(v, omega, x0, r, spec) / area(omega);
}

MeanResult weighted_domain_mean(const ScalarField& v, const Domain& omega, Point x0, double r,
                                const QuadratureSpec& spec) {
    if (const auto* star = std::get_if<StarDomain>(&omega)) {
        if (distance(x0, star->center()) > 1e-12)
            throw std::invalid_argument("weighted_domain_mean: x0 must be the star center");
    } else if (const auto* poly = std::get_if<PolygonDomain>(&omega)) {
        if (!star_visible_from(*poly, x0))
            throw std::invalid_argument(
                "weighted_domain_mean: polygon must be star-shaped about x0");
    }
    return MeanResult{weighted_mean_about(v, omega, x0, r, spec), spec, 0.0};
}

double green_identity_residual(const ScalarField& w, Point x, double r,
                               const QuadratureSpec& spec) {
    spec.validate();
    check_radius(r, "green_identity_residual");
    ScalarField lap;
    lap.evaluate = w.laplacian;
    lap.kind = FieldKind::General;
    const double circle = circle_mean(w, x, r, spec).value;
    const double volume = weighted_disc_mean(lap, x, r, spec).value;
    return w.evaluate(x) - circle + 0.5 * r * r * volume;
}

}  // namespace dmv
