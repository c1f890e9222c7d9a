#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "npn/errors.hpp"

namespace npn {

/// Validated covariance of the underlying Gaussian vector X ~ N(0, Sigma).
/// Immutable after construction; the Cholesky factor is cached for sampling.
class GaussianSpec {
public:
    /// Validates symmetry (exact, as stored) and positive definiteness
    /// (Cholesky success). Throws NotSymmetric or NotPositiveDefinite.
    explicit GaussianSpec(Eigen::MatrixXd sigma);

    [[nodiscard]] int dim() const { return static_cast<int>(sigma_.rows()); }
    [[nodiscard]] const Eigen::MatrixXd& sigma() const { return sigma_; }
    [[nodiscard]] const Eigen::MatrixXd& cholesky_factor() const { return chol_; }

    [[nodiscard]] double operator()(int i, int j) const { return sigma_(i, j); }

    /// d = sigma_ii*sigma_jj - sigma_ij^2, positive for every i != j.
    [[nodiscard]] double pair_determinant(int i, int j) const {
        return sigma_(i, i) * sigma_(j, j) - sigma_(i, j) * sigma_(i, j);
    }

private:
    Eigen::MatrixXd sigma_;
    Eigen::MatrixXd chol_; // lower-triangular L with L L^T = sigma
};

/// Convenience wrapper matching the validation entry point name used
/// throughout the tests.
GaussianSpec validate_gaussian(const Eigen::MatrixXd& sigma);

/// Truncation controls for all series evaluations.
struct SeriesControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_terms = 200;

    void validate() const {
        if (!(rel_tol > 0) || !(abs_tol > 0) || max_terms < 2)
            throw ConfigError("SeriesControl: rel_tol > 0, abs_tol > 0, max_terms >= 2 required");
    }
};

/// Controls for the Monte Carlo oracle.
struct McControl {
    long long samples = 1'000'000;
    std::uint64_t seed = 0;
    bool antithetic = false;

    void validate() const {
        if (samples < 2) throw ConfigError("McControl: samples >= 2 required");
    }
};

/// Node-doubling tensor quadrature controls shared by the transform and
/// oracle modules.
struct QuadratureControl {
    int initial_nodes = 120;
    int max_nodes = 960;
    double rel_tol = 1e-10;
};

enum class Method {
    series,
    fourier_integral,
    fourier_series,
    laplace,
    quadrature,
    monte_carlo,
    catalog,
};

std::string method_name(Method m);

/// Result of a full-matrix moment computation: mean vector nu, covariance
/// tau, and per-entry provenance.
struct MomentReport {
    Eigen::VectorXd nu;
    Eigen::MatrixXd tau;
    std::vector<Method> nu_method;            // length dim
    std::vector<std::vector<Method>> tau_method; // dim x dim
    Eigen::VectorXd nu_error;
    Eigen::MatrixXd tau_error;
    std::string rng_algorithm; // set by the MC sampler, empty otherwise

    /// Symmetry, nonnegative diagonal, and PSD up to 1e-9 * ||tau||.
    void check_invariants() const;
};

} // namespace npn
