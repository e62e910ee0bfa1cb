#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "cqg/types.hpp"

namespace cqg {

/// One Clebsch-Gordan isometry V(alpha, beta (x) gamma, i).
///
/// `coeffs` is the operator H_alpha -> H_beta (x) H_gamma in Kronecker order:
/// row b * n_gamma + c, column a (all 0-based) holds V^{b,c}_a. Every basis is
/// the descending-rho eigenbasis of the respective irrep.
struct CGTensor {
    IrrepLabel alpha;
    IrrepLabel beta;
    IrrepLabel gamma;
    int copy = 1;  // 1..m(alpha, beta (x) gamma)
    Eigen::MatrixXcd coeffs;

    std::complex<double> at(int a, int b, int c, int dim_gamma) const {
        return coeffs(b * dim_gamma + c, a);
    }
};

using CgList = std::vector<CGTensor>;

/// Source of CG data for a model. Implementations must be safe for
/// concurrent `tensors` calls and must return identical data for identical
/// arguments. A null result means no CG data exists for the pair.
class CgProvider {
public:
    virtual ~CgProvider() = default;
    virtual std::shared_ptr<const CgList> tensors(const IrrepLabel& beta,
                                                  const IrrepLabel& gamma) const = 0;
};

}  // namespace cqg
