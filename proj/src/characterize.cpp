#include "dmv/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "dmv/nelder_mead.hpp"
#include "dmv/numeric.hpp"
#include "dmv/specfun.hpp"

namespace dmv {

namespace {

constexpr double kAreaSlack = 1e-12;       // relative slack on |omega| >= pi r^2
constexpr double kEqualAreaTol = 1e-10;    // relative, for the equal-area hypothesis
constexpr double kRecoverMinRadius = 1e-6;
constexpr double kRecoverDiameterTol = 1e-9;
constexpr double kRecoverRmsTol = 1e-11;   // rms residual at which a fit counts as exact

void check_area_at_least(const Domain& omega, double r, const char* who) {
    const double target = std::numbers::pi * r * r;
    if (!(area(omega) >= target * (1.0 - kAreaSlack)))
        throw HypothesisError(std::string(who) + ": requires |omega| >= pi r^2");
}

void check_positive_solution(const ScalarField& v, double mu, const char* who) {
    if (!v.positive)
        throw HypothesisError(std::string(who) + ": field must be strictly positive");
    if (mu == 0.0) {
        if (v.kind != FieldKind::Harmonic)
            throw HypothesisError(std::string(who) + ": mu = 0 requires a harmonic field");
        return;
    }
    if (v.kind != FieldKind::Panharmonic ||
        std::abs(v.frequency - mu) > 1e-12 * std::max(1.0, std::abs(mu)))
        throw HypothesisError(std::string(who) + ": field frequency does not match mu");
}

ResidualReport make_report(std::string theorem, double lhs, const MeanResult& rhs) {
    ResidualReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs.value;
    rep.residual = rhs.value - lhs;
    rep.relative = std::abs(rep.residual) / std::max(std::abs(lhs), 1e-300);
    rep.theorem = std::move(theorem);
    rep.quadrature_floor = rhs.est_error;
    return rep;
}

}  // namespace

std::string to_string(DiscConclusion c) {
    switch (c) {
        case DiscConclusion::ConsistentWithDisc: return "consistent-with-disc";
        case DiscConclusion::NotADisc: return "not-a-disc";
        case DiscConclusion::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ResidualReport residual_t4(const Domain& omega, Point x0, double r, double mu,
                           const ScalarField& v, const QuadratureSpec& spec) {
    if (!(mu > 0.0)) throw HypothesisError("residual_t4: mu must be positive");
    check_area_at_least(omega, r, "residual_t4");
    check_positive_solution(v, mu, "residual_t4");
    const double lhs = specfun::coeff_a(mu * r) * v.evaluate(x0);
    const MeanResult rhs = with_refinement(
        [&](const QuadratureSpec& s) { return weighted_mean_about(v, omega, x0, r, s); }, spec);
    return make_report("T4-panharmonic", lhs, rhs);
}

ResidualReport residual_t5(const Domain& omega, Point x0, double r, const QuadratureSpec& spec) {
    check_area_at_least(omega, r, "residual_t5");
    const ScalarField one = harmonic_poly(0, HarmonicPart::Real);
    const MeanResult rhs = with_refinement(
        [&](const QuadratureSpec& s) { return weighted_mean_about(one, omega, x0, r, s); }, spec);
    return make_report("T5-harmonic", 0.5, rhs);
}

ResidualReport residual_t2(const Domain& omega, Point x0, double r, double mu,
                           const ScalarField& v, const QuadratureSpec& spec) {
    const double target = std::numbers::pi * r * r;
    if (std::abs(area(omega) - target) > kEqualAreaTol * target)
        throw HypothesisError("residual_t2: requires |omega| = pi r^2");
    check_positive_solution(v, mu, "residual_t2");
    const double lhs = specfun::coeff_a_bullet(mu * r) * v.evaluate(x0);
    const MeanResult rhs =
        with_refinement([&](const QuadratureSpec& s) { return domain_mean(v, omega, s).value; }, spec);
    return make_report("T2-unweighted", lhs, rhs);
}

SignCertificate sign_certificate(const Domain& omega, Point x0, double r, double mu,
                                 const QuadratureSpec& spec, const ThresholdPolicy& policy) {
    if (!(mu > 0.0)) throw HypothesisError("sign_certificate: mu must be positive");
    check_area_at_least(omega, r, "sign_certificate");
    const ScalarField big_v = radial_panharmonic(mu, x0);
    const double domain_area = area(omega);
    const MeanResult mean = with_refinement(
        [&](const QuadratureSpec& s) { return weighted_mean_about(big_v, omega, x0, r, s); }, spec);

    SignCertificate cert;
    cert.deviation = domain_area * mean.value -
                     std::numbers::pi * r * r * specfun::coeff_a(mu * r);
    cert.quadrature_floor = domain_area * mean.est_error;
    cert.threshold = std::max(10.0 * cert.quadrature_floor, policy.absolute);
    if (cert.deviation < -cert.threshold)
        cert.conclusion = DiscConclusion::NotADisc;
    else if (std::abs(cert.deviation) <= cert.threshold)
        cert.conclusion = DiscConclusion::ConsistentWithDisc;
    else
        cert.conclusion = DiscConclusion::Inconclusive;  // positive deviation: numerical fault
    return cert;
}

namespace {

bool star_parameterizable_about(const Domain& omega, Point x0) {
    if (const auto* poly = std::get_if<PolygonDomain>(&omega)) return star_visible_from(*poly, x0);
    return contains(omega, x0);
}

}  // namespace

RecoverResult recover_disc(const Domain& omega, double mu, std::span<const ScalarField> fields,
                           const QuadratureSpec& spec, Point init_center, double init_radius,
                           int max_iterations) {
    if (!(mu > 0.0)) throw std::invalid_argument("recover_disc: mu must be positive");
    spec.validate();
    std::vector<ScalarField> family(fields.begin(), fields.end());
    const bool default_family = family.empty();
    if (default_family) {
        for (int k = 0; k < 4; ++k)
            family.push_back(plane_panharmonic(mu, k * std::numbers::pi / 4.0));
    }
    for (const ScalarField& v : family) {
        if (!v.positive || v.kind != FieldKind::Panharmonic ||
            std::abs(v.frequency - mu) > 1e-12 * std::max(1.0, mu))
            throw std::invalid_argument("recover_disc: fields must be positive panharmonic with the given mu");
    }
    // The log weight vanishes on the trial circle, which makes the weighted
    // residuals only second-order sensitive to the trial center. The plain
    // disc-mean residuals are first-order there and vanish on the same disc,
    // so both enter the objective; the unweighted domain means do not depend
    // on the trial parameters and are integrated once up front.
    std::vector<double> plain_mean(family.size());
    for (std::size_t j = 0; j < family.size(); ++j)
        plain_mean[j] = domain_mean(family[j], omega, spec).value;

    const std::size_t n_residuals = 2 * family.size() + (default_family ? 1 : 0);
    const Point ref = reference_point(omega);

    auto objective = [&](const std::vector<double>& p) {
        const Point x0{p[0], p[1]};
        const double r = p[2];
        if (!(r > kRecoverMinRadius) || !star_parameterizable_about(omega, x0))
            return 1e6 + distance(x0, ref) + std::max(0.0, kRecoverMinRadius - r);
        const double coeff_weighted = specfun::coeff_a(mu * r);
        const double coeff_plain = specfun::coeff_a_bullet(mu * r);
        KahanSum sum;
        for (std::size_t j = 0; j < family.size(); ++j) {
            const double value = family[j].evaluate(x0);
            const double weighted = weighted_mean_about(family[j], omega, x0, r, spec) -
                                    coeff_weighted * value;
            const double plain = plain_mean[j] - coeff_plain * value;
            sum.add(weighted * weighted);
            sum.add(plain * plain);
        }
        if (default_family) {
            // radial solution about the trial center; value 1 there
            const ScalarField v = radial_panharmonic(mu, x0);
            const double resid = weighted_mean_about(v, omega, x0, r, spec) - coeff_weighted;
            sum.add(resid * resid);
        }
        return sum.value();
    };

    const double step = std::max(0.25 * init_radius, 0.05);
    const NelderMeadResult nm =
        nelder_mead(objective, {init_center.x1, init_center.x2, init_radius}, step, max_iterations,
                    kRecoverDiameterTol, n_residuals * kRecoverRmsTol * kRecoverRmsTol);

    RecoverResult result;
    result.center = Point{nm.x[0], nm.x[1]};
    result.radius = nm.x[2];
    result.final_residual = std::sqrt(std::max(nm.fx, 0.0) / n_residuals);
    result.iterations = nm.iterations;
    result.converged = nm.converged;
    return result;
}

}  // namespace dmv
