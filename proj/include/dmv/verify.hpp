#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmv/fields.hpp"
#include "dmv/quadrature.hpp"

namespace dmv {

// Identity-suite tolerances. The weighted identities carry the singular log
// weight, so their default-spec budget is looser; one refinement step is
// expected to push them to kTolWeightedRefinedRel.
inline constexpr double kTolCircleRel = 1e-9;
inline constexpr double kTolDiscRel = 1e-9;
inline constexpr double kTolWeightedRel = 1e-7;
inline constexpr double kTolWeightedRefinedRel = 1e-10;
inline constexpr double kTolHarmonicAbs = 1e-9;
inline constexpr double kTolConstantAbs = 1e-12;
inline constexpr double kTolHelmholtzRel = 1e-7;
inline constexpr double kTolGreenRel = 1e-9;
inline constexpr double kCorollarySlack = 1e-7;
inline constexpr double kTolFieldPdeRel = 1e-11;

struct IdentityRow {
    std::string identity;
    std::string field;
    Point x;
    double r = 0.0;
    double freq = 0.0;  // mu or lambda; 0 for harmonic fields
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // rhs - lhs
    double relative = 0.0;  // |residual| / identity-specific scale
    double tol = 0.0;
    bool pass = false;
};

struct SuiteOptions {
    QuadratureSpec spec{};
    std::optional<double> mu;      // restrict the frequency grid
    std::optional<double> lambda;  // restrict the Helmholtz frequency grid
    std::optional<double> r;       // restrict the radius grid
    std::vector<ScalarField> fields;  // replace the default families (kind-filtered)
    std::uint64_t seed = 42;
};

// Circle means of panharmonic fields against a_circ(mu r) v(x).
std::vector<IdentityRow> suite_circle(const SuiteOptions& options = {});
// Disc means against a_bullet(mu r) v(x).
std::vector<IdentityRow> suite_disc(const SuiteOptions& options = {});
// Log-weighted disc means against a(mu r) v(x).
std::vector<IdentityRow> suite_weighted(const SuiteOptions& options = {},
                                        double tol_rel = kTolWeightedRel);
// Log-weighted disc means of harmonic polynomials against v(x)/2 (absolute).
std::vector<IdentityRow> suite_harmonic(const SuiteOptions& options = {});
// Log-weighted disc means of Helmholtz solutions against a_tilde(lambda r) u(x).
std::vector<IdentityRow> suite_helmholtz(const SuiteOptions& options = {});
// Second-Green-identity residual; zero for any C^2 field. pass means
// |residual| <= tol * max(1, |w(x)|).
std::vector<IdentityRow> suite_green(const SuiteOptions& options = {});
// Strict inequality for positive panharmonic fields: the weighted mean must
// exceed v(x)/2 by at least (a(mu r) - 1/2) v(x) - slack. For these rows
// `tol` holds the required margin and pass means residual >= tol.
std::vector<IdentityRow> suite_corollary(const SuiteOptions& options = {});
// Laplacian/kind consistency and positivity at seeded sample points.
std::vector<IdentityRow> suite_field_pde(const SuiteOptions& options = {});

// All suites above, in a fixed order. `identity` filters to one suite name:
// circle-mhh, disc-mhh, weighted-mhh, weighted-harm, weighted-hh, green,
// corollary, field-pde. Throws std::invalid_argument for unknown names.
std::vector<IdentityRow> run_suites(const std::string& identity, const SuiteOptions& options);

}  // namespace dmv
