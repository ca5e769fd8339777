#include "dmv/verify.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dmv/specfun.hpp"

namespace dmv {

namespace {

const std::array<Point, 3> kCenters{{{0.0, 0.0}, {0.4, -0.3}, {-1.1, 0.7}}};
const std::array<double, 3> kRadii{0.25, 0.5, 1.0};
const std::array<double, 4> kMus{0.5, 1.0, 2.0, 4.0};
// (lambda, r) pairs giving lambda r in {0.5, 1, 2, 5} at two radii
const std::array<std::pair<double, double>, 8> kHelmholtzGrid{
    {{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}, {1.0, 0.5}, {2.0, 0.5}, {4.0, 0.5}, {10.0, 0.5}}};
const Point kFieldCenter{0.1, -0.2};

std::vector<double> grid_or(const std::optional<double>& v, const auto& dflt) {
    if (v) return {*v};
    return std::vector<double>(dflt.begin(), dflt.end());
}

std::vector<double> radius_grid(const SuiteOptions& o) { return grid_or(o.r, kRadii); }

std::vector<ScalarField> panharmonic_fields(const SuiteOptions& o) {
    std::vector<ScalarField> fields;
    if (!o.fields.empty()) {
        for (const ScalarField& f : o.fields)
            if (f.kind == FieldKind::Panharmonic) fields.push_back(f);
        return fields;
    }
    for (double mu : grid_or(o.mu, kMus)) {
        fields.push_back(plane_panharmonic(mu, 0.3));
        fields.push_back(radial_panharmonic(mu, kFieldCenter));
        const double c = mu / std::numbers::sqrt2;
        fields.push_back(separable_panharmonic(c, c));
    }
    return fields;
}

std::vector<ScalarField> harmonic_fields(const SuiteOptions& o) {
    std::vector<ScalarField> fields;
    if (!o.fields.empty()) {
        for (const ScalarField& f : o.fields)
            if (f.kind == FieldKind::Harmonic) fields.push_back(f);
        return fields;
    }
    for (int k = 0; k <= 6; ++k) {
        fields.push_back(harmonic_poly(k, HarmonicPart::Real));
        if (k > 0) fields.push_back(harmonic_poly(k, HarmonicPart::Imaginary));
    }
    return fields;
}

IdentityRow make_row(std::string identity, const ScalarField& field, Point x, double r,
                     double freq, double lhs, double rhs, double scale, double tol) {
    IdentityRow row;
    row.identity = std::move(identity);
    row.field = field.descriptor;
    row.x = x;
    row.r = r;
    row.freq = freq;
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = rhs - lhs;
    row.relative = std::abs(row.residual) / scale;
    row.tol = tol;
    row.pass = row.relative <= tol;
    return row;
}

template <class MeanFn, class CoeffFn>
std::vector<IdentityRow> panharmonic_suite(const char* name, const SuiteOptions& o, MeanFn mean,
                                           CoeffFn coeff, double tol) {
    std::vector<IdentityRow> rows;
    for (const ScalarField& v : panharmonic_fields(o)) {
        for (Point x : kCenters) {
            for (double r : radius_grid(o)) {
                const double value = v.evaluate(x);
                const double lhs = coeff(v.frequency * r) * value;
                const double rhs = mean(v, x, r, o.spec);
                rows.push_back(make_row(name, v, x, r, v.frequency, lhs, rhs,
                                        std::max(std::abs(value), 1e-300), tol));
            }
        }
    }
    return rows;
}

}  // namespace

std::vector<IdentityRow> suite_circle(const SuiteOptions& o) {
    return panharmonic_suite(
        "circle-mhh", o,
        [](const ScalarField& v, Point x, double r, const QuadratureSpec& s) {
            return circle_mean(v, x, r, s).value;
        },
        specfun::coeff_a_circ, kTolCircleRel);
}

std::vector<IdentityRow> suite_disc(const SuiteOptions& o) {
    return panharmonic_suite(
        "disc-mhh", o,
        [](const ScalarField& v, Point x, double r, const QuadratureSpec& s) {
            return disc_mean(v, x, r, s).value;
        },
        specfun::coeff_a_bullet, kTolDiscRel);
}

std::vector<IdentityRow> suite_weighted(const SuiteOptions& o, double tol_rel) {
    return panharmonic_suite(
        "weighted-mhh", o,
        [](const ScalarField& v, Point x, double r, const QuadratureSpec& s) {
            return weighted_disc_mean(v, x, r, s).value;
        },
        specfun::coeff_a, tol_rel);
}

std::vector<IdentityRow> suite_harmonic(const SuiteOptions& o) {
    std::vector<IdentityRow> rows;
    for (const ScalarField& v : harmonic_fields(o)) {
        const bool constant = v.positive;  // k = 0, real part
        for (Point x : kCenters) {
            for (double r : radius_grid(o)) {
                const double lhs = 0.5 * v.evaluate(x);
                const double rhs = weighted_disc_mean(v, x, r, o.spec).value;
                rows.push_back(make_row("weighted-harm", v, x, r, 0.0, lhs, rhs, 1.0,
                                        constant ? kTolConstantAbs : kTolHarmonicAbs));
            }
        }
    }
    return rows;
}

std::vector<IdentityRow> suite_helmholtz(const SuiteOptions& o) {
    const std::array<Point, 3> centers{{{0.0, 0.0}, {0.3, 0.2}, {-0.5, 0.4}}};
    std::vector<std::pair<double, double>> grid;
    for (auto [lambda, r] : kHelmholtzGrid) {
        if (o.lambda && *o.lambda != lambda) continue;
        if (o.r && *o.r != r) continue;
        grid.emplace_back(lambda, r);
    }
    std::vector<IdentityRow> rows;
    for (auto [lambda, r] : grid) {
        std::vector<ScalarField> fields;
        if (!o.fields.empty()) {
            for (const ScalarField& f : o.fields)
                if (f.kind == FieldKind::Helmholtz) fields.push_back(f);
        } else {
            fields.push_back(plane_helmholtz(lambda, 0.7));
            fields.push_back(radial_helmholtz(lambda, kFieldCenter));
        }
        for (const ScalarField& u : fields) {
            for (Point x : centers) {
                const double value = u.evaluate(x);
                const double lhs = specfun::coeff_a_tilde(u.frequency * r) * value;
                const double rhs = weighted_disc_mean(u, x, r, o.spec).value;
                rows.push_back(make_row("weighted-hh", u, x, r, u.frequency, lhs, rhs,
                                        std::max(1.0, std::abs(value)), kTolHelmholtzRel));
            }
        }
    }
    return rows;
}

std::vector<IdentityRow> suite_green(const SuiteOptions& o) {
    std::vector<ScalarField> fields = o.fields;
    if (fields.empty()) {
        fields.push_back(quadratic_nonsolution());
        fields.push_back(harmonic_poly(4, HarmonicPart::Real));
        fields.push_back(plane_panharmonic(o.mu.value_or(1.0), 0.3));
    }
    const std::array<std::pair<Point, double>, 5> combos{{{{0.0, 0.0}, 0.5},
                                                          {{0.0, 0.0}, 1.0},
                                                          {{0.4, -0.3}, 0.5},
                                                          {{-1.1, 0.7}, 0.25},
                                                          {{0.3, 0.2}, 1.0}}};
    std::vector<IdentityRow> rows;
    for (const ScalarField& w : fields) {
        for (auto [x, r] : combos) {
            if (o.r && *o.r != r) continue;
            const double resid = green_identity_residual(w, x, r, o.spec);
            rows.push_back(make_row("green", w, x, r, w.frequency, 0.0, resid,
                                    std::max(1.0, std::abs(w.evaluate(x))), kTolGreenRel));
        }
    }
    return rows;
}

std::vector<IdentityRow> suite_corollary(const SuiteOptions& o) {
    std::vector<IdentityRow> rows;
    for (const ScalarField& v : panharmonic_fields(o)) {
        for (Point x : kCenters) {
            for (double r : radius_grid(o)) {
                const double value = v.evaluate(x);
                const double lhs = 0.5 * value;
                const double rhs = weighted_disc_mean(v, x, r, o.spec).value;
                const double margin =
                    (specfun::coeff_a(v.frequency * r) - 0.5) * value - kCorollarySlack;
                IdentityRow row = make_row("corollary", v, x, r, v.frequency, lhs, rhs,
                                           std::max(std::abs(value), 1e-300), margin);
                row.pass = row.residual >= margin;  // strict excess over v(x)/2
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::vector<IdentityRow> suite_field_pde(const SuiteOptions& o) {
    std::vector<ScalarField> fields = o.fields;
    if (fields.empty()) {
        fields.push_back(plane_panharmonic(2.0, 0.3));
        fields.push_back(radial_panharmonic(1.0, kFieldCenter));
        fields.push_back(separable_panharmonic(1.0, 1.0));
        fields.push_back(harmonic_poly(3, HarmonicPart::Imaginary));
        fields.push_back(plane_helmholtz(2.0, 0.7));
        fields.push_back(radial_helmholtz(2.0, kFieldCenter));
        fields.push_back(quadratic_nonsolution());
    }
    std::mt19937_64 rng(o.seed);
    auto coordinate = [&rng] { return -2.0 + 4.0 * ((rng() >> 11) * 0x1.0p-53); };
    std::vector<IdentityRow> rows;
    for (const ScalarField& f : fields) {
        for (int i = 0; i < 100; ++i) {
            const Point p{coordinate(), coordinate()};
            const double value = f.evaluate(p);
            double expected = 0.0;
            switch (f.kind) {
                case FieldKind::Panharmonic: expected = f.frequency * f.frequency * value; break;
                case FieldKind::Harmonic: expected = 0.0; break;
                case FieldKind::Helmholtz: expected = -f.frequency * f.frequency * value; break;
                case FieldKind::General: expected = f.laplacian(p); break;
            }
            IdentityRow row = make_row("field-pde", f, p, 0.0, f.frequency, expected,
                                       f.laplacian(p), std::max(1.0, std::abs(expected)),
                                       kTolFieldPdeRel);
            if (f.positive && !(value > 0.0)) row.pass = false;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<IdentityRow> run_suites(const std::string& identity, const SuiteOptions& options) {
    std::vector<IdentityRow> rows;
    auto want = [&identity](const char* name) { return identity.empty() || identity == name; };
    bool known = identity.empty();
    auto append = [&rows, &known](std::vector<IdentityRow> more) {
        known = true;
        rows.insert(rows.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
    };
    if (want("circle-mhh")) append(suite_circle(options));
    if (want("disc-mhh")) append(suite_disc(options));
    if (want("weighted-mhh")) append(suite_weighted(options));
    if (want("weighted-harm")) append(suite_harmonic(options));
    if (want("weighted-hh")) append(suite_helmholtz(options));
    if (want("green")) append(suite_green(options));
    if (want("corollary")) append(suite_corollary(options));
    if (want("field-pde")) append(suite_field_pde(options));
    if (!known) throw std::invalid_argument("unknown identity \"" + identity + "\"");
    return rows;
}

}  // namespace dmv
