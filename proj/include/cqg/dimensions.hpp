#pragma once

#include <vector>

#include "cqg/rep_data.hpp"

namespace cqg {

/// Forward and backward eigenvalue lists of a rho-operator.
struct EigenLists {
    std::vector<double> forward;   // descending eigenvalues of rho
    std::vector<double> backward;  // descending eigenvalues of rho^{-1}
};

/// d_t = sum_i lambda_i^t. Evaluated with the largest term factored out, so
/// large |t| does not overflow before the final exponentiation.
double dim_t(const RhoSpectrum& s, double t);
/// ln d_t, finite for any t even when d_t itself would overflow.
double log_dim_t(const RhoSpectrum& s, double t);

/// Largest eigenvalue (operator norm of rho).
double gamma(const RhoSpectrum& s);

EigenLists eigen_lists(const RhoSpectrum& s);

/// True iff the forward and backward lists agree entrywise on the log scale.
bool symmetry_check(const RhoSpectrum& s, const Tolerance& tol = {});

enum class SymmetryVerdict { forced_symmetric, no_conclusion };

struct SymmetryByConjugate {
    SymmetryVerdict verdict = SymmetryVerdict::no_conclusion;
    bool symmetric = false;  // symmetry_check on the irrep's spectrum
    /// forced_symmetric but the spectrum is not symmetric.
    bool violation = false;
};

/// A self-conjugate irrep must have a symmetric spectrum.
SymmetryByConjugate symmetry_by_conjugate(const QGModel& m, const IrrepLabel& alpha,
                                          const Tolerance& tol = {});

/// Compares power sums sum a_i^t and sum b_j^t on every grid point.
/// Throws PreconditionError on empty input or a grid with fewer than
/// |a| + |b| distinct values > 1.
bool power_sum_uniqueness(const std::vector<double>& a, const std::vector<double>& b,
                          const std::vector<double>& t_grid, const Tolerance& tol = {});

struct GrowthReport {
    IrrepLabel alpha;
    int n = 0;
    double t = 0.0;
    int p_n = 0;
    double d_t = 0.0;
    double d_minus_t = 0.0;
    /// d_t(alpha)^n <= P_n^{t-1} d_{-t}(alpha)^n
    double lhs_forward = 0.0, rhs_forward = 0.0;
    /// d_{-t}(alpha)^n <= P_n^{t-1} d_t(alpha)^n
    double lhs_backward = 0.0, rhs_backward = 0.0;
    /// d_t of the decomposed tensor power, for multiplicativity.
    double d_t_power = 0.0;
    bool pass = false;
};

/// Throws TruncationError when alpha^{(x)n} leaves the ingested table.
GrowthReport growth_inequality_check(const QGModel& m, const IrrepLabel& alpha, int n, double t,
                                     const Tolerance& tol = {});

/// Default t-grid used by symmetry and growth sweeps.
std::vector<double> default_t_grid();

}  // namespace cqg
