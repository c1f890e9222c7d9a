#include "npn/types.hpp"

#include <Eigen/Eigenvalues>

namespace npn {

GaussianSpec::GaussianSpec(Eigen::MatrixXd sigma) : sigma_(std::move(sigma)) {
    if (sigma_.rows() != sigma_.cols() || sigma_.rows() < 1)
        throw ConfigError("covariance matrix must be square and nonempty");
    for (int i = 0; i < sigma_.rows(); ++i)
        for (int j = i + 1; j < sigma_.cols(); ++j)
            if (sigma_(i, j) != sigma_(j, i))
                throw NotSymmetric("covariance matrix is not symmetric at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");

    Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
    if (llt.info() != Eigen::Success) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma_, Eigen::EigenvaluesOnly);
        double lam_min = es.eigenvalues().minCoeff();
        throw NotPositiveDefinite(
            "covariance matrix is not positive definite (smallest eigenvalue " +
                std::to_string(lam_min) + ")",
            lam_min);
    }
    chol_ = llt.matrixL();

    // PD implies sigma_ii*sigma_jj - sigma_ij^2 > 0 for i != j; assert it
    // independently since the bivariate integral formula requires d > 0.
    for (int i = 0; i < sigma_.rows(); ++i)
        for (int j = 0; j < sigma_.cols(); ++j)
            if (i != j && !(pair_determinant(i, j) > 0))
                throw NotPositiveDefinite("pair determinant d <= 0 at (" + std::to_string(i) + "," +
                                              std::to_string(j) + ")",
                                          0.0);
}

GaussianSpec validate_gaussian(const Eigen::MatrixXd& sigma) { return GaussianSpec(sigma); }

std::string method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::fourier_integral: return "fourier_integral";
        case Method::fourier_series: return "fourier_series";
        case Method::laplace: return "laplace";
        case Method::quadrature: return "quadrature";
        case Method::monte_carlo: return "monte_carlo";
        case Method::catalog: return "catalog";
    }
    return "unknown";
}

void MomentReport::check_invariants() const {
    const int d = static_cast<int>(nu.size());
    if (tau.rows() != d || tau.cols() != d)
        throw Error("MomentReport: tau dimension mismatch");
    for (int i = 0; i < d; ++i) {
        if (tau(i, i) < 0) throw Error("MomentReport: negative diagonal entry");
        for (int j = i + 1; j < d; ++j)
            if (tau(i, j) != tau(j, i)) throw Error("MomentReport: tau not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tau, Eigen::EigenvaluesOnly);
    const double scale = tau.norm();
    if (es.eigenvalues().minCoeff() < -1e-9 * scale)
        throw Error("MomentReport: tau is not positive semidefinite");
}

} // namespace npn
