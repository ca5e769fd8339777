#pragma once

#include <cmath>

namespace dmv {

// Compensated (Kahan) accumulator. All reductions in this library add in a
// fixed order, so results are bit-reproducible run to run.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Double-double arithmetic (~31 significant digits). The alternating Bessel
// series accumulate |terms| that exceed the final value by roughly t/ln10
// digits, so the working precision has to carry that budget.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_normalize(double hi, double lo) {
    const double s = hi + lo;
    return {s, lo - (s - hi)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return dd_normalize(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return dd_normalize(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_mul_d(DD a, double b) {
    DD p = two_prod(a.hi, b);
    return dd_normalize(p.hi, p.lo + a.lo * b);
}

inline DD dd_div_d(DD a, double b) {
    const double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    const double q2 = ((a.hi - p.hi) + (a.lo - p.lo)) / b;
    return dd_normalize(q1, q2);
}

}  // namespace dmv
