#include "dmv/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmv/characterize.hpp"
#include "dmv/specfun.hpp"
#include "dmv/verify.hpp"

namespace dmv::cli {

namespace {

constexpr double kConvergeFinestTol = 1e-10;

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Rows carry typed cells; CSV formats doubles as %.17g, JSON keeps them as
// numbers. Output is emitted in construction order, never reordered.
struct Table {
    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;

    nlohmann::ordered_json& append() {
        rows.emplace_back(nlohmann::ordered_json::object());
        return rows.back();
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) os << ',';
            const auto& cell = row.at(table.columns[i]);
            if (cell.is_number_float())
                os << fmt_num(cell.get<double>());
            else if (cell.is_string())
                os << csv_escape(cell.get<std::string>());
            else
                os << cell.dump();
        }
        os << '\n';
    }
}

void write_table(const Table& table, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) j.push_back(row);
        body << j.dump(2) << '\n';
    } else {
        write_csv(table, body);
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path, std::ios::trunc | std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << body.str();
    }
}

struct CommonFlags {
    std::string domain_path;
    std::string identity;
    std::vector<std::string> field_descriptors;
    std::optional<double> mu;
    std::optional<double> lambda;
    std::optional<double> r;
    bool equal_area = false;
    QuadratureSpec spec{};
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 42;
};

void add_spec_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--ntheta", flags.spec.n_theta, "angular nodes (even, >= 16)");
    cmd->add_option("--panels", flags.spec.n_radial_panels, "radial panels");
    cmd->add_option("--order", flags.spec.radial_order, "Gauss-Legendre points per panel");
    cmd->add_option("--grading", flags.spec.grading, "geometric panel ratio toward the center");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags.out_path, "output file (default stdout)");
    cmd->add_option("--seed", flags.seed, "seed for sampled spot checks");
}

SuiteOptions suite_options(const CommonFlags& flags) {
    SuiteOptions options;
    options.spec = flags.spec;
    options.mu = flags.mu;
    options.lambda = flags.lambda;
    options.r = flags.r;
    options.seed = flags.seed;
    for (const std::string& d : flags.field_descriptors) options.fields.push_back(parse_field(d));
    return options;
}

void fill_identity_row(nlohmann::ordered_json& cell, const IdentityRow& row) {
    cell["identity"] = row.identity;
    cell["field"] = row.field;
    cell["x1"] = row.x.x1;
    cell["x2"] = row.x.x2;
    cell["r"] = row.r;
    cell["freq"] = row.freq;
    cell["lhs"] = row.lhs;
    cell["rhs"] = row.rhs;
    cell["residual"] = row.residual;
    cell["relative"] = row.relative;
    cell["tol"] = row.tol;
    cell["pass"] = static_cast<int>(row.pass);
}

const std::vector<std::string> kIdentityColumns{"identity", "field",    "x1",  "x2",
                                                "r",        "freq",     "lhs", "rhs",
                                                "residual", "relative", "tol", "pass"};

int run_verify(const CommonFlags& flags) {
    const std::vector<IdentityRow> rows = run_suites(flags.identity, suite_options(flags));
    Table table;
    table.columns = kIdentityColumns;
    bool all_pass = true;
    for (const IdentityRow& row : rows) {
        fill_identity_row(table.append(), row);
        all_pass = all_pass && row.pass;
    }
    write_table(table, flags.format, flags.out_path);
    return all_pass ? kExitOk : kExitToleranceFailure;
}

// Residual of one identity at one spec; used by the convergence sweep.
double converge_residual(const std::string& identity, double mu, double lambda, double r,
                         const QuadratureSpec& spec) {
    const Point x{0.1, -0.15};
    if (identity == "circle-mhh") {
        const ScalarField v = plane_panharmonic(mu, 0.3);
        return std::abs(circle_mean(v, x, r, spec).value -
                        specfun::coeff_a_circ(mu * r) * v.evaluate(x)) /
               v.evaluate(x);
    }
    if (identity == "disc-mhh") {
        const ScalarField v = plane_panharmonic(mu, 0.3);
        return std::abs(disc_mean(v, x, r, spec).value -
                        specfun::coeff_a_bullet(mu * r) * v.evaluate(x)) /
               v.evaluate(x);
    }
    if (identity == "weighted-mhh") {
        const ScalarField v = plane_panharmonic(mu, 0.3);
        return std::abs(weighted_disc_mean(v, x, r, spec).value -
                        specfun::coeff_a(mu * r) * v.evaluate(x)) /
               v.evaluate(x);
    }
    if (identity == "weighted-harm") {
        const ScalarField v = harmonic_poly(3, HarmonicPart::Real);
        return std::abs(weighted_disc_mean(v, x, r, spec).value - 0.5 * v.evaluate(x));
    }
    if (identity == "const") {
        // constant field under the plain disc mean: exact at every spec
        const ScalarField v = harmonic_poly(0, HarmonicPart::Real);
        return std::abs(disc_mean(v, x, r, spec).value - 1.0);
    }
    if (identity == "weighted-hh") {
        const ScalarField u = plane_helmholtz(lambda, 0.7);
        return std::abs(weighted_disc_mean(u, x, r, spec).value -
                        specfun::coeff_a_tilde(lambda * r) * u.evaluate(x)) /
               std::max(1.0, std::abs(u.evaluate(x)));
    }
    if (identity == "green") {
        const ScalarField w = plane_panharmonic(mu, 0.3);
        return std::abs(green_identity_residual(w, x, r, spec)) /
               std::max(1.0, std::abs(w.evaluate(x)));
    }
    throw std::invalid_argument("unknown identity \"" + identity + "\" for converge");
}

int run_converge(const CommonFlags& flags) {
    const std::string identity = flags.identity.empty() ? "weighted-mhh" : flags.identity;
    const double mu = flags.mu.value_or(2.0);
    const double lambda = flags.lambda.value_or(2.0);
    const double r = flags.r.value_or(1.0);
    const double freq = identity == "weighted-hh" ? lambda : mu;

    Table table;
    table.columns = {"identity", "freq", "r", "ntheta", "panels", "order", "grading", "residual"};
    double coarsest = 0.0;
    double finest = 0.0;
    for (int n_theta : {16, 32, 64, 128, 256, 512}) {
        for (int order : {4, 8, 16, 32}) {
            QuadratureSpec spec = flags.spec;
            spec.n_theta = n_theta;
            spec.radial_order = order;
            const double residual = converge_residual(identity, mu, lambda, r, spec);
            auto& cell = table.append();
            cell["identity"] = identity;
            cell["freq"] = freq;
            cell["r"] = r;
            cell["ntheta"] = n_theta;
            cell["panels"] = spec.n_radial_panels;
            cell["order"] = order;
            cell["grading"] = spec.grading;
            cell["residual"] = residual;
            if (n_theta == 16 && order == 4) coarsest = residual;
            if (n_theta == 512 && order == 32) finest = residual;
        }
    }
    write_table(table, flags.format, flags.out_path);
    if (finest > kConvergeFinestTol) return kExitToleranceFailure;
    // refinement must not make things worse once the residual is above floor
    if (coarsest > 1e-11 && coarsest < finest) return kExitToleranceFailure;
    return kExitOk;
}

struct DomainSetup {
    Domain domain;
    Point x0;
    double r = 0.0;
    double domain_area = 0.0;
};

DomainSetup load_domain_setup(const CommonFlags& flags) {
    if (flags.domain_path.empty())
        throw std::invalid_argument("--domain <file> is required for this command");
    DomainSetup setup{load_domain_file(flags.domain_path), {}, 0.0, 0.0};
    setup.x0 = reference_point(setup.domain);
    setup.domain_area = area(setup.domain);
    if (flags.equal_area)
        setup.r = std::sqrt(setup.domain_area / std::numbers::pi);
    else if (flags.r)
        setup.r = *flags.r;
    else
        throw std::invalid_argument("pass --r <radius> or --equal-area");
    return setup;
}

void fill_report_row(nlohmann::ordered_json& cell, const ResidualReport& rep, double mu, double r,
                     double domain_area, const std::string& conclusion) {
    cell["theorem"] = rep.theorem;
    cell["mu"] = mu;
    cell["r"] = r;
    cell["area"] = domain_area;
    cell["lhs"] = rep.lhs;
    cell["rhs"] = rep.rhs;
    cell["residual"] = rep.residual;
    cell["relative"] = rep.relative;
    cell["floor"] = rep.quadrature_floor;
    cell["conclusion"] = conclusion;
}

int run_characterize(const CommonFlags& flags) {
    const DomainSetup setup = load_domain_setup(flags);
    const double mu = flags.mu.value_or(1.0);
    const ScalarField big_v = radial_panharmonic(mu, setup.x0);

    Table table;
    table.columns = {"theorem", "mu",       "r",        "area",  "lhs",
                     "rhs",     "residual", "relative", "floor", "conclusion"};
    const ResidualReport t4 = residual_t4(setup.domain, setup.x0, setup.r, mu, big_v, flags.spec);
    fill_report_row(table.append(), t4, mu, setup.r, setup.domain_area, "");
    const ResidualReport t5 = residual_t5(setup.domain, setup.x0, setup.r, flags.spec);
    fill_report_row(table.append(), t5, 0.0, setup.r, setup.domain_area, "");
    const double equal_area = std::numbers::pi * setup.r * setup.r;
    if (std::abs(setup.domain_area - equal_area) <= 1e-10 * equal_area) {
        const ResidualReport t2 =
            residual_t2(setup.domain, setup.x0, setup.r, mu, big_v, flags.spec);
        fill_report_row(table.append(), t2, mu, setup.r, setup.domain_area, "");
    }
    const SignCertificate cert = sign_certificate(setup.domain, setup.x0, setup.r, mu, flags.spec);
    ResidualReport cert_row;
    cert_row.theorem = "sign-certificate";
    cert_row.lhs = std::numbers::pi * setup.r * setup.r * specfun::coeff_a(mu * setup.r);
    cert_row.rhs = cert_row.lhs + cert.deviation;
    cert_row.residual = cert.deviation;
    cert_row.relative = std::abs(cert.deviation) / std::max(std::abs(cert_row.lhs), 1e-300);
    cert_row.quadrature_floor = cert.quadrature_floor;
    fill_report_row(table.append(), cert_row, mu, setup.r, setup.domain_area,
                    to_string(cert.conclusion));
    write_table(table, flags.format, flags.out_path);

    switch (cert.conclusion) {
        case DiscConclusion::ConsistentWithDisc: return kExitOk;
        case DiscConclusion::NotADisc: return kExitNotADisc;
        case DiscConclusion::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int run_recover(const CommonFlags& flags, std::optional<double> init_cx,
                std::optional<double> init_cy, std::optional<double> init_r) {
    if (flags.domain_path.empty())
        throw std::invalid_argument("--domain <file> is required for this command");
    const Domain domain = load_domain_file(flags.domain_path);
    const double mu = flags.mu.value_or(1.0);
    const Point ref = reference_point(domain);
    const double equal_area_radius = std::sqrt(area(domain) / std::numbers::pi);
    const Point init_center{init_cx.value_or(ref.x1), init_cy.value_or(ref.x2)};
    const double init_radius = init_r.value_or(0.5 * equal_area_radius);

    std::vector<ScalarField> fields;
    for (const std::string& d : flags.field_descriptors) fields.push_back(parse_field(d));
    const RecoverResult result =
        recover_disc(domain, mu, fields, flags.spec, init_center, init_radius);

    Table table;
    table.columns = {"cx", "cy", "radius", "final_residual", "iterations", "converged"};
    auto& cell = table.append();
    cell["cx"] = result.center.x1;
    cell["cy"] = result.center.x2;
    cell["radius"] = result.radius;
    cell["final_residual"] = result.final_residual;
    cell["iterations"] = result.iterations;
    cell["converged"] = static_cast<int>(result.converged);
    write_table(table, flags.format, flags.out_path);
    return result.converged ? kExitOk : kExitNoConvergence;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"mean value identities for planar PDE solutions and disc characterization"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::optional<double> init_cx, init_cy, init_r;

    auto add_common = [&flags](CLI::App* cmd, bool with_domain) {
        if (with_domain) {
            cmd->add_option("--domain", flags.domain_path, "domain file (JSON)");
            cmd->add_flag("--equal-area", flags.equal_area, "derive r from |omega| = pi r^2");
        }
        cmd->add_option("--field", flags.field_descriptors,
                        "field descriptor, e.g. plane-mhh:mu=2,theta=0.3 (repeatable)");
        cmd->add_option("--mu", flags.mu, "frequency mu");
        cmd->add_option("--lambda", flags.lambda, "frequency lambda");
        cmd->add_option("--r", flags.r, "disc radius");
        add_spec_flags(cmd, flags);
    };

    CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
    verify->add_option("--identity", flags.identity,
                       "one of circle-mhh disc-mhh weighted-mhh weighted-harm weighted-hh green "
                       "corollary field-pde (default: all)");
    add_common(verify, false);

    CLI::App* converge = app.add_subcommand("converge", "quadrature convergence sweep");
    converge->add_option("--identity", flags.identity, "identity to sweep (default weighted-mhh)");
    add_common(converge, false);

    CLI::App* characterize = app.add_subcommand("characterize", "disc characterization residuals");
    add_common(characterize, true);

    CLI::App* recover = app.add_subcommand("recover", "fit a disc by residual minimization");
    add_common(recover, true);
    recover->add_option("--init-cx", init_cx, "initial center x1");
    recover->add_option("--init-cy", init_cy, "initial center x2");
    recover->add_option("--init-r", init_r, "initial radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(flags);
        if (app.got_subcommand(converge)) return run_converge(flags);
        if (app.got_subcommand(characterize)) return run_characterize(flags);
        if (app.got_subcommand(recover)) return run_recover(flags, init_cx, init_cy, init_r);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitConfigError;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full{"discmean"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace dmv::cli
