#pragma once

#include <functional>
#include <string>

#include "dmv/geometry.hpp"

namespace dmv {

enum class FieldKind { Panharmonic, Harmonic, Helmholtz, General };

// An exact PDE solution (or deliberate non-solution): point evaluation plus
// the analytic Laplacian, tagged with the equation it solves. Immutable after
// construction; evaluation is pure.
struct ScalarField {
    std::function<double(Point)> evaluate;
    std::function<double(Point)> laplacian;
    FieldKind kind = FieldKind::General;
    double frequency = 0.0;  // mu (Panharmonic) or lambda (Helmholtz), else 0
    bool positive = false;   // strictly positive everywhere
    std::string descriptor;
};

// v(x) = exp(mu x.d), d = (cos theta, sin theta); Laplacian mu^2 v.
ScalarField plane_panharmonic(double mu, double direction_angle);

// V(x) = I0(mu |x - center|); Laplacian mu^2 V, V(center) = 1.
ScalarField radial_panharmonic(double mu, Point center);

// v(x) = cosh(alpha x1) cosh(beta x2); Laplacian (alpha^2 + beta^2) v.
ScalarField separable_panharmonic(double alpha, double beta);

// Re or Im of (x1 + i x2)^k via the real two-term recurrence; harmonic.
enum class HarmonicPart { Real, Imaginary };
ScalarField harmonic_poly(int k, HarmonicPart part);

// u(x) = cos(lambda x.d); Laplacian -lambda^2 u.
ScalarField plane_helmholtz(double lambda, double direction_angle);

// u(x) = J0(lambda |x - center|); Laplacian -lambda^2 u.
ScalarField radial_helmholtz(double lambda, Point center);

// w(x) = |x|^2 with Laplacian identically 4; solves none of the equations.
ScalarField quadratic_nonsolution();

// Descriptor syntax, e.g. "plane-mhh:mu=2,theta=0.3", "radial-mhh:mu=1,cx=0,cy=0",
// "sep-mhh:alpha=1,beta=1", "harm-poly:k=2,part=re", "plane-hh:lambda=2,theta=0",
// "radial-hh:lambda=2,cx=0,cy=0", "quad".
ScalarField parse_field(const std::string& descriptor);

}  // namespace dmv
