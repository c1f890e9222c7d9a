#pragma once

#include <vector>

namespace npn {

/// Gauss-Hermite rule for the weight exp(-x^2) on (-inf, inf).
/// Weights are stored as logarithms: for large node counts the extreme
/// weights fall below the double underflow threshold, and the coupled
/// bivariate integrands need the exponent before exponentiation.
struct HermiteRule {
    std::vector<double> node;
    std::vector<double> logw;
    [[nodiscard]] int size() const { return static_cast<int>(node.size()); }
};

/// Cached, thread-safe lookup. Nodes by Newton iteration on the scaled
/// orthonormal recurrence, stable up to n ~ 1000.
const HermiteRule& hermite_rule(int n);

/// Gauss-Legendre rule on [-1, 1].
struct LegendreRule {
    std::vector<double> node;
    std::vector<double> weight;
    [[nodiscard]] int size() const { return static_cast<int>(node.size()); }
};

const LegendreRule& legendre_rule(int n);

} // namespace npn
