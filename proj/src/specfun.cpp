#include "dmv/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dmv/numeric.hpp"

namespace dmv::specfun {

namespace {

void check_range(double t, const char* who) {
    if (!(std::abs(t) <= kTMax))
        throw std::domain_error(std::string(who) + ": |t| exceeds supported range 30");
}

// I series, sum_{k>=0} (t/2)^{2k+nu} / (k! (k+nu)!), nu in {0,1}. All terms
// positive: plain double terms with compensated accumulation suffice.
double bessel_i_series(double t, int nu) {
    const double q = (t * t) / 4.0;
    double term = (nu == 0) ? 1.0 : t / 2.0;
    KahanSum sum;
    sum.add(term);
    for (int k = 1; k <= kSeriesMaxTerms; ++k) {
        term *= q / (static_cast<double>(k) * (k + nu));
        sum.add(term);
        if (std::abs(term) <= kSeriesRelCutoff * std::abs(sum.value())) return sum.value();
    }
    throw std::runtime_error("bessel_i_series: no convergence within 120 terms");
}

// J series, alternating; summed in double-double so the cancellation budget
// (~13 digits at t = 30) still leaves full double accuracy.
double bessel_j_series(double t, int nu) {
    DD q = dd_div_d(two_prod(t, t), 4.0);
    DD term = (nu == 0) ? DD{1.0, 0.0} : dd_div_d(DD{t, 0.0}, 2.0);
    DD sum = term;
    for (int k = 1; k <= kSeriesMaxTerms; ++k) {
        term = dd_mul(term, q);
        term = dd_div_d(term, -static_cast<double>(k) * (k + nu));
        sum = dd_add(sum, term);
        if (std::abs(term.hi) <= kSeriesRelCutoff * std::abs(sum.hi)) return sum.hi;
    }
    throw std::runtime_error("bessel_j_series: no convergence within 120 terms");
}

void check_coeff_range(double t, const char* who) {
    if (!(t >= 0.0 && t <= kTMax))
        throw std::domain_error(std::string(who) + ": t must lie in [0, 30]");
}

}  // namespace

double bessel_i0(double t) {
    check_range(t, "bessel_i0");
    return bessel_i_series(t, 0);
}

double bessel_i1(double t) {
    check_range(t, "bessel_i1");
    return bessel_i_series(t, 1);
}

double bessel_j0(double t) {
    check_range(t, "bessel_j0");
    return bessel_j_series(t, 0);
}

double bessel_j1(double t) {
    check_range(t, "bessel_j1");
    return bessel_j_series(t, 1);
}

double coeff_a_circ(double t) {
    check_coeff_range(t, "coeff_a_circ");
    return bessel_i0(t);
}

double coeff_a_bullet(double t) {
    check_coeff_range(t, "coeff_a_bullet");
    if (t >= 0.5) return 2.0 * bessel_i1(t) / t;
    // 2 I1(t)/t = sum_{k>=0} (t/2)^{2k} / (k! (k+1)!), division-free
    const double q = (t * t) / 4.0;
    double term = 1.0;
    KahanSum sum;
    sum.add(term);
    for (int k = 1; k <= kSeriesMaxTerms; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum.add(term);
        if (std::abs(term) <= kSeriesRelCutoff * std::abs(sum.value())) return sum.value();
    }
    throw std::runtime_error("coeff_a_bullet: no convergence within 120 terms");
}

namespace detail {

double coeff_a_series(double t) {
    // 2 [I0(t) - 1]/t^2 = sum_{k>=1} t^{2k-2} / (2^{2k-1} (k!)^2)
    const double q = (t * t) / 4.0;
    double term = 0.5;
    KahanSum sum;
    sum.add(term);
    for (int k = 2; k <= kSeriesMaxTerms; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum.add(term);
        if (std::abs(term) <= kSeriesRelCutoff * std::abs(sum.value())) return sum.value();
    }
    throw std::runtime_error("coeff_a_series: no convergence within 120 terms");
}

double coeff_a_direct(double t) { return 2.0 * (bessel_i0(t) - 1.0) / (t * t); }

double coeff_a_tilde_series(double t) {
    // 2 [1 - J0(t)]/t^2 = sum_{k>=1} (-1)^{k-1} t^{2k-2} / (2^{2k-1} (k!)^2)
    const double q = (t * t) / 4.0;
    double term = 0.5;
    KahanSum sum;
    sum.add(term);
    for (int k = 2; k <= kSeriesMaxTerms; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum.add(term);
        if (std::abs(term) <= kSeriesRelCutoff * std::abs(sum.value())) return sum.value();
    }
    throw std::runtime_error("coeff_a_tilde_series: no convergence within 120 terms");
}

double coeff_a_tilde_direct(double t) { return 2.0 * (1.0 - bessel_j0(t)) / (t * t); }

}  // namespace detail

double coeff_a(double t) {
    check_coeff_range(t, "coeff_a");
    return (t < 1.0) ? detail::coeff_a_series(t) : detail::coeff_a_direct(t);
}

double coeff_a_tilde(double t) {
    check_coeff_range(t, "coeff_a_tilde");
    return (t < 1.0) ? detail::coeff_a_tilde_series(t) : detail::coeff_a_tilde_direct(t);
}

double poisson_i0(double t) {
    check_coeff_range(t, "poisson_i0");
    double prev = 0.0;
    bool have_prev = false;
    for (int n = 8; n <= (1 << 16); n *= 2) {
        const double h = (std::numbers::pi / 2.0) / n;
        KahanSum s;
        for (int j = 0; j < n; ++j) {
            const double theta = (j + 0.5) * h;
            s.add(std::cosh(t * std::cos(theta)));
        }
        const double value = s.value() * h * 2.0 / std::numbers::pi;
        if (have_prev && std::abs(value - prev) <= 1e-13 * std::max(1.0, std::abs(value)))
            return value;
        prev = value;
        have_prev = true;
    }
    throw std::runtime_error("poisson_i0: midpoint refinement did not settle");
}

double first_zero_j1() {
    double lo = 3.0;
    double hi = 4.5;
    double f_lo = bessel_j1(lo);
    if (!(f_lo > 0.0 && bessel_j1(hi) < 0.0))
        throw std::runtime_error("first_zero_j1: no sign change in (3, 4.5)");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = bessel_j1(mid);
        if ((f_lo > 0.0) == (f_mid > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace dmv::specfun
