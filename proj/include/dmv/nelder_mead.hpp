#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace dmv {

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Downhill simplex with the classic coefficients (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5). Stops when the simplex diameter drops below
// diameter_tol, when the best value reaches f_tol, or after max_iter
// iterations (converged = false in that case).
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& start, double step, int max_iter,
                                    double diameter_tol, double f_tol) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> x(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += step;
    std::vector<double> fx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fx[i] = f(x[i]);

    auto order = [&] {
        for (std::size_t i = 1; i <= n; ++i) {  // insertion sort, simplex is tiny
            auto xi = x[i];
            auto fi = fx[i];
            std::size_t j = i;
            for (; j > 0 && fx[j - 1] > fi; --j) {
                x[j] = x[j - 1];
                fx[j] = fx[j - 1];
            }
            x[j] = std::move(xi);
            fx[j] = fi;
        }
    };
    auto diameter = [&] {
        double d = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += (x[i][k] - x[j][k]) * (x[i][k] - x[j][k]);
                d = std::max(d, s);
            }
        return std::sqrt(d);
    };

    NelderMeadResult result;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();
        if (fx[0] <= f_tol || diameter() < diameter_tol) {
            result.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += x[i][k] / n;
        auto blend = [&](const std::vector<double>& p, double c) {
            std::vector<double> q(n);
            for (std::size_t k = 0; k < n; ++k) q[k] = centroid[k] + c * (p[k] - centroid[k]);
            return q;
        };
        const auto reflected = blend(x[n], -1.0);
        const double f_reflected = f(reflected);
        if (f_reflected < fx[0]) {
            const auto expanded = blend(x[n], -2.0);
            const double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                x[n] = expanded;
                fx[n] = f_expanded;
            } else {
                x[n] = reflected;
                fx[n] = f_reflected;
            }
        } else if (f_reflected < fx[n - 1]) {
            x[n] = reflected;
            fx[n] = f_reflected;
        } else {
            const bool outside = f_reflected < fx[n];
            const auto contracted = outside ? blend(x[n], -0.5) : blend(x[n], 0.5);
            const double f_contracted = f(contracted);
            if (f_contracted < (outside ? f_reflected : fx[n])) {
                x[n] = contracted;
                fx[n] = f_contracted;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t k = 0; k < n; ++k) x[i][k] = x[0][k] + 0.5 * (x[i][k] - x[0][k]);
                    fx[i] = f(x[i]);
                }
            }
        }
    }
    order();
    result.x = x[0];
    result.fx = fx[0];
    result.iterations = iter;
    return result;
}

}  // namespace dmv
