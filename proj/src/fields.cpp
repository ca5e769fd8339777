#include "dmv/fields.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "dmv/specfun.hpp"

namespace dmv {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

ScalarField plane_panharmonic(double mu, double direction_angle) {
    if (!(mu > 0.0)) throw std::invalid_argument("plane_panharmonic: mu must be positive");
    const double dx = std::cos(direction_angle);
    const double dy = std::sin(direction_angle);
    const double mu2 = mu * mu;
    ScalarField f;
    f.evaluate = [mu, dx, dy](Point p) { return std::exp(mu * (p.x1 * dx + p.x2 * dy)); };
    f.laplacian = [mu, dx, dy, mu2](Point p) {
        return mu2 * std::exp(mu * (p.x1 * dx + p.x2 * dy));
    };
    f.kind = FieldKind::Panharmonic;
    f.frequency = mu;
    f.positive = true;
    f.descriptor = "plane-mhh:mu=" + fmt(mu) + ",theta=" + fmt(direction_angle);
    return f;
}

ScalarField radial_panharmonic(double mu, Point center) {
    if (!(mu > 0.0)) throw std::invalid_argument("radial_panharmonic: mu must be positive");
    const double mu2 = mu * mu;
    auto value = [mu, center](Point p) { return specfun::bessel_i0(mu * distance(p, center)); };
    ScalarField f;
    f.evaluate = value;
    // Laplacian from the defining equation; exact, no differencing involved.
    f.laplacian = [mu2, value](Point p) { return mu2 * value(p); };
    f.kind = FieldKind::Panharmonic;
    f.frequency = mu;
    f.positive = true;
    f.descriptor = "radial-mhh:mu=" + fmt(mu) + ",cx=" + fmt(center.x1) + ",cy=" + fmt(center.x2);
    return f;
}

ScalarField separable_panharmonic(double alpha, double beta) {
    if (alpha == 0.0 && beta == 0.0)
        throw std::invalid_argument("separable_panharmonic: (alpha, beta) must be nonzero");
    const double mu2 = alpha * alpha + beta * beta;
    ScalarField f;
    f.evaluate = [alpha, beta](Point p) { return std::cosh(alpha * p.x1) * std::cosh(beta * p.x2); };
    f.laplacian = [alpha, beta, mu2](Point p) {
        return mu2 * std::cosh(alpha * p.x1) * std::cosh(beta * p.x2);
    };
    f.kind = FieldKind::Panharmonic;
    f.frequency = std::sqrt(mu2);
    f.positive = true;
    f.descriptor = "sep-mhh:alpha=" + fmt(alpha) + ",beta=" + fmt(beta);
    return f;
}

ScalarField harmonic_poly(int k, HarmonicPart part) {
    if (k < 0 || k > 12) throw std::invalid_argument("harmonic_poly: k must lie in [0, 12]");
    const bool real_part = (part == HarmonicPart::Real);
    ScalarField f;
    f.evaluate = [k, real_part](Point p) {
        // (re, im) of (x1 + i x2)^k by the real recurrence
        double re = 1.0, im = 0.0;
        for (int j = 0; j < k; ++j) {
            const double re2 = re * p.x1 - im * p.x2;
            im = re * p.x2 + im * p.x1;
            re = re2;
        }
        return real_part ? re : im;
    };
    f.laplacian = [](Point) { return 0.0; };
    f.kind = FieldKind::Harmonic;
    f.frequency = 0.0;
    f.positive = (k == 0 && real_part);
    f.descriptor = "harm-poly:k=" + std::to_string(k) + ",part=" + (real_part ? "re" : "im");
    return f;
}

ScalarField plane_helmholtz(double lambda, double direction_angle) {
    if (!(lambda > 0.0)) throw std::invalid_argument("plane_helmholtz: lambda must be positive");
    const double dx = std::cos(direction_angle);
    const double dy = std::sin(direction_angle);
    const double l2 = lambda * lambda;
    ScalarField f;
    f.evaluate = [lambda, dx, dy](Point p) { return std::cos(lambda * (p.x1 * dx + p.x2 * dy)); };
    f.laplacian = [lambda, dx, dy, l2](Point p) {
        return -l2 * std::cos(lambda * (p.x1 * dx + p.x2 * dy));
    };
    f.kind = FieldKind::Helmholtz;
    f.frequency = lambda;
    f.positive = false;
    f.descriptor = "plane-hh:lambda=" + fmt(lambda) + ",theta=" + fmt(direction_angle);
    return f;
}

ScalarField radial_helmholtz(double lambda, Point center) {
    if (!(lambda > 0.0)) throw std::invalid_argument("radial_helmholtz: lambda must be positive");
    const double l2 = lambda * lambda;
    auto value = [lambda, center](Point p) { return specfun::bessel_j0(lambda * distance(p, center)); };
    ScalarField f;
    f.evaluate = value;
    f.laplacian = [l2, value](Point p) { return -l2 * value(p); };
    f.kind = FieldKind::Helmholtz;
    f.frequency = lambda;
    f.positive = false;
    f.descriptor = "radial-hh:lambda=" + fmt(lambda) + ",cx=" + fmt(center.x1) + ",cy=" + fmt(center.x2);
    return f;
}

ScalarField quadratic_nonsolution() {
    ScalarField f;
    f.evaluate = [](Point p) { return p.x1 * p.x1 + p.x2 * p.x2; };
    f.laplacian = [](Point) { return 4.0; };
    f.kind = FieldKind::General;
    f.frequency = 0.0;
    f.positive = false;
    f.descriptor = "quad";
    return f;
}

namespace {

std::map<std::string, double> parse_params(const std::string& s, const std::string& who) {
    std::map<std::string, double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("field descriptor " + who + ": expected key=value, got \"" +
                                        item + "\"");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (key == "part") {
            if (val == "re")
                out[key] = 0.0;
            else if (val == "im")
                out[key] = 1.0;
            else
                throw std::invalid_argument("field descriptor " + who + ": part must be re or im");
        } else {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(val, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("field descriptor " + who + ": bad number \"" + val + "\"");
            }
            if (used != val.size() || !std::isfinite(x))
                throw std::invalid_argument("field descriptor " + who + ": bad number \"" + val + "\"");
            out[key] = x;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

double need(const std::map<std::string, double>& params, const std::string& key,
            const std::string& who) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("field descriptor " + who + ": missing parameter " + key);
    return it->second;
}

double get_or(const std::map<std::string, double>& params, const std::string& key, double dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

}  // namespace

ScalarField parse_field(const std::string& descriptor) {
    const std::size_t colon = descriptor.find(':');
    const std::string name = descriptor.substr(0, colon);
    const auto params = colon == std::string::npos
                            ? std::map<std::string, double>{}
                            : parse_params(descriptor.substr(colon + 1), name);
    if (name == "plane-mhh") return plane_panharmonic(need(params, "mu", name), get_or(params, "theta", 0.0));
    if (name == "radial-mhh")
        return radial_panharmonic(need(params, "mu", name),
                                  Point{get_or(params, "cx", 0.0), get_or(params, "cy", 0.0)});
    if (name == "sep-mhh")
        return separable_panharmonic(need(params, "alpha", name), need(params, "beta", name));
    if (name == "harm-poly") {
        const double k = need(params, "k", name);
        if (k != std::floor(k)) throw std::invalid_argument("field descriptor harm-poly: k must be an integer");
        return harmonic_poly(static_cast<int>(k), get_or(params, "part", 0.0) == 0.0
                                                      ? HarmonicPart::Real
                                                      : HarmonicPart::Imaginary);
    }
    if (name == "plane-hh")
        return plane_helmholtz(need(params, "lambda", name), get_or(params, "theta", 0.0));
    if (name == "radial-hh")
        return radial_helmholtz(need(params, "lambda", name),
                                Point{get_or(params, "cx", 0.0), get_or(params, "cy", 0.0)});
    if (name == "quad") return quadratic_nonsolution();
    throw std::invalid_argument("unknown field family \"" + name + "\"");
}

}  // namespace dmv
