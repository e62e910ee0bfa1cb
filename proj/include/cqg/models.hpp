#pragma once

#include <string>
#include <vector>

#include "cqg/rep_data.hpp"

namespace cqg {

/// SU_q(2) with irreps 0..max_level. Fusion pairs (n, m) with n + m <= max_level
/// are ingested, together with lazily built CG data. Throws PreconditionError
/// for q <= 0 or max_level < 0.
QGModel builtin_su_q_2(double q, int max_level);

/// Dual of a finite group: "s3" (irreps triv, sign, std) or "cyclic_<n>" /
/// "z<n>" (irreps "0".."n-1"). Throws PreconditionError on anything else.
QGModel builtin_finite_group_dual(const std::string& spec);

/// Fundamental representation of O_F^+ for diagonal F: rho proportional to
/// F^2, normalized. A separate conjugate irrep "u_bar" is added only when the
/// spectrum is asymmetric. Only products with the trivial irrep are ingested.
QGModel builtin_free_orthogonal_fund(const std::vector<double>& f_diag);

/// Trace balance sum(lambda) = sum(1/lambda), the defining normalization of
/// rho on an irreducible (end_dim = 1). Throws PreconditionError for end_dim != 1.
bool rho_defining_property_oracle(const RhoSpectrum& candidate, int end_dim = 1, const Tolerance& tol = {});

struct BuiltinInfo {
    std::string name;
    std::string description;
};
std::vector<BuiltinInfo> builtin_catalog();

}  // namespace cqg
