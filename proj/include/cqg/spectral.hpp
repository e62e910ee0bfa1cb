#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cqg/rep_data.hpp"

namespace cqg {

/// Spectral projection rho_U(t) as an index set over the descending basis.
struct SpectralProjection {
    double value = 0.0;
    std::vector<std::size_t> indices;

    std::size_t dim() const { return indices.size(); }
};

/// Distinct eigenvalues with multiplicities, grouped on the log scale.
struct EigenClass {
    double value = 0.0;
    std::vector<std::size_t> indices;
};
std::vector<EigenClass> eigen_classes(const RhoSpectrum& s, const Tolerance& tol = {});

/// Indices a with lambda_a == t (log-scale grouping). Throws PreconditionError for t <= 0.
SpectralProjection spectral_projection(const RhoSpectrum& s, double t, const Tolerance& tol = {});

/// The projection as a dense 0/1 diagonal matrix.
Eigen::MatrixXcd projection_matrix(const RhoSpectrum& s, double t, const Tolerance& tol = {});

struct ProjectionPair {
    double t_left = 0.0;   // t' in Sp(rho_U)
    double t_right = 0.0;  // t / t' in Sp(rho_V)
    std::size_t dim = 0;   // dim H_U(t') * dim H_V(t/t')
};

/// Eigenvalue pairs contributing to rho_{U (x) V}(t).
std::vector<ProjectionPair> tensor_projection_pairs(const RhoSpectrum& u, const RhoSpectrum& v, double t,
                                                    const Tolerance& tol = {});

struct GridPoint {
    double s = 0.0;
    double t = 0.0;
    bool probe = false;  // off-grid: both sides must vanish
};

/// All (s, t) with t in Sp(rho_beta) and s t in Sp(rho_alpha), followed by
/// `probes` deterministic off-grid points.
std::vector<GridPoint> spectral_grid(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta,
                                     int probes = 4, const Tolerance& tol = {});

struct Theorem53Result {
    IrrepLabel alpha, beta;
    double s = 0.0, t = 0.0;
    /// Operator-norm residuals of both identities.
    double residual_eq1 = 0.0, residual_eq2 = 0.0;
    /// Residuals divided by max(1, ||rhs||).
    double relative_eq1 = 0.0, relative_eq2 = 0.0;
    double lhs_norm_eq1 = 0.0, rhs_norm_eq1 = 0.0;
    double lhs_norm_eq2 = 0.0, rhs_norm_eq2 = 0.0;
    bool truncated_eq1 = false, truncated_eq2 = false;
    bool truncated() const { return truncated_eq1 || truncated_eq2; }
};

/// Evaluates both sides of
///   eq1: sum_{gamma,i} d_gamma V(a, g (x) b, i)^* (rho_g(s) (x) rho_b(t)) V(...) = (d_a / t) dim H_b(t) rho_a(st)
///   eq2: sum_{gamma,i} d_gamma V(a, b (x) g, i)^* (rho_b(t) (x) rho_g(s)) V(...) = d_a t dim H_b(t) rho_a(st)
/// with d the quantum dimension d_1. The contributing gamma are the components
/// of a (x) conj(b) (eq1) and conj(b) (x) a (eq2); when one of those pairs or
/// any needed CG tensor is outside the fragment the sum is partial and
/// flagged. Throws CgUnavailable when the model has no CG data.
Theorem53Result verify_theorem_5_3(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta, double s,
                                   double t, const Tolerance& tol = {});

}  // namespace cqg
