#pragma once

#include <vector>

namespace dmv {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes by Newton iteration on the Legendre recurrence; cached per order.
// Valid for n in [2, 64]. Thread-safe.
const GaussRule& gauss_legendre(int n);

}  // namespace dmv
