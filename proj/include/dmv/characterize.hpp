#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "dmv/fields.hpp"
#include "dmv/geometry.hpp"
#include "dmv/quadrature.hpp"

namespace dmv {

// A theorem hypothesis does not hold for the given inputs (area condition,
// positivity, equation mismatch). Distinct from plain invalid arguments so
// the CLI can map it to its own exit code.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ResidualReport {
    double lhs = 0.0;       // coefficient x v(x0) side
    double rhs = 0.0;       // mean side
    double residual = 0.0;  // rhs - lhs
    double relative = 0.0;
    std::string theorem;    // T2-unweighted | T4-panharmonic | T5-harmonic
    double quadrature_floor = 0.0;
};

enum class DiscConclusion { ConsistentWithDisc, NotADisc, Inconclusive };

std::string to_string(DiscConclusion c);

// deviation = Integral_omega V log(r/|x0-y|) - pi r^2 a(mu r), where
// V = I0(mu |y - x0|). Zero iff omega is the disc D_r(x0); strictly negative
// for any other domain of at least equal area; a positive value can only be
// numerical fault and is reported inconclusive.
struct SignCertificate {
    double deviation = 0.0;
    DiscConclusion conclusion = DiscConclusion::Inconclusive;
    double threshold = 0.0;
    double quadrature_floor = 0.0;
};

struct ThresholdPolicy {
    double absolute = 1e-8;
};

// Log-weighted identity residual: a(mu r) v(x0) vs the weighted domain mean.
// Requires |omega| >= pi r^2, v positive and panharmonic with frequency mu.
ResidualReport residual_t4(const Domain& omega, Point x0, double r, double mu,
                           const ScalarField& v, const QuadratureSpec& spec = {});

// Purely geometric residual: 1/2 vs (1/|omega|) Integral log(r/|x0-y|).
// Requires |omega| >= pi r^2.
ResidualReport residual_t5(const Domain& omega, Point x0, double r,
                           const QuadratureSpec& spec = {});

// Unweighted residual: a_bullet(mu r) v(x0) vs the plain domain mean.
// Requires |omega| = pi r^2 (within 1e-10 relative); mu = 0 admits a positive
// harmonic v as the limiting case.
ResidualReport residual_t2(const Domain& omega, Point x0, double r, double mu,
                           const ScalarField& v, const QuadratureSpec& spec = {});

// Disc certificate built from the canonical radial solution about x0.
// threshold = max(10 x measured quadrature floor, policy.absolute).
SignCertificate sign_certificate(const Domain& omega, Point x0, double r, double mu,
                                 const QuadratureSpec& spec = {},
                                 const ThresholdPolicy& policy = {});

struct RecoverResult {
    Point center;
    double radius = 0.0;
    double final_residual = 0.0;  // rms identity residual over the field family
    int iterations = 0;
    bool converged = false;
};

// Fit a disc D_r(x0) to omega by minimizing the sum of squared mean value
// identity residuals (log-weighted plus plain disc means) over a family of
// positive panharmonic fields; the default family is the radial solution
// about the trial center plus four plane waves at angles k pi/4. Nelder-Mead
// over (cx, cy, r); trial centers the domain is not star-parameterizable
// about are penalized, not rejected. Both residual sets vanish exactly when
// omega = D_r(x0), so the zero set is the true disc.
RecoverResult recover_disc(const Domain& omega, double mu, std::span<const ScalarField> fields,
                           const QuadratureSpec& spec, Point init_center, double init_radius,
                           int max_iterations = 500);

}  // namespace dmv
