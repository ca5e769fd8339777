#pragma once

#include <cmath>

#include "dmv/fields.hpp"
#include "dmv/geometry.hpp"

namespace dmv {

// Accuracy knobs shared by every integral. Angular integration is the
// trapezoidal rule (spectral for the periodic analytic integrands here);
// radial integration is Gauss-Legendre on panels graded geometrically toward
// the singular center so the log weight's derivative blow-up stays resolved.
struct QuadratureSpec {
    int n_theta = 256;
    int n_radial_panels = 8;
    int radial_order = 16;
    double grading = 0.25;

    void validate() const;
    // One refinement step: doubled angular nodes and radial order (capped at 64).
    QuadratureSpec refined() const;
};

struct MeanResult {
    double value = 0.0;
    QuadratureSpec spec_used;
    double est_error = 0.0;
};

// Mean of v over the circle of radius r about x.
MeanResult circle_mean(const ScalarField& v, Point x, double r, const QuadratureSpec& spec = {});

// Mean of v over the disc of radius r about x.
MeanResult disc_mean(const ScalarField& v, Point x, double r, const QuadratureSpec& spec = {});

// (1/pi r^2) Integral over the disc of v(y) log(r/|x-y|).
MeanResult weighted_disc_mean(const ScalarField& v, Point x, double r,
                              const QuadratureSpec& spec = {});

// Mean of v over the domain.
MeanResult domain_mean(const ScalarField& v, const Domain& omega, const QuadratureSpec& spec = {});

// (1/|omega|) Integral over omega of v(y) log(r/|x0-y|). x0 must be the star
// center (star domain) or anchor (polygon); any interior point for a disc.
MeanResult weighted_domain_mean(const ScalarField& v, const Domain& omega, Point x0, double r,
                                const QuadratureSpec& spec = {});

// w(x) - M(w, S_r(x)) + (r^2/2) * weighted_disc_mean(lap w); identically zero
// for any C^2 field, up to quadrature error. Uses the field's exact Laplacian.
double green_identity_residual(const ScalarField& w, Point x, double r,
                               const QuadratureSpec& spec = {});

// Engine behind weighted_domain_mean without the center/anchor precondition:
// accepts any x0 the domain is star-parameterizable about (disc: interior
// point; polygon: interior with full fan visibility; star: interior, boundary
// ray found by bisection). The recovery fitter probes trial centers with it.
double weighted_mean_about(const ScalarField& v, const Domain& omega, Point x0, double r,
                           const QuadratureSpec& spec);

// Evaluate f(spec) and f(spec.refined()); the difference is the error
// estimate attached to the refined value.
template <class Fn>
MeanResult with_refinement(Fn&& f, const QuadratureSpec& spec) {
    const double coarse = f(spec);
    const QuadratureSpec fine = spec.refined();
    const double value = f(fine);
    return MeanResult{value, fine, std::abs(value - coarse)};
}

}  // namespace dmv
