#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cqg/cg_tensor.hpp"

namespace cqg::uq_sl2 {

/// Symmetric q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
double q_integer(int n, double q);

/// Weight module of U_q(sl_2) with highest weight `label` (dim label + 1).
///
/// K acts as q^H and coincides with the rho-operator of the SU_q(2) irrep.
/// E, F carry the symmetric ladder coefficients sqrt([j][n-j+1]) so that
/// E^* = F. All matrices are written in the descending-rho basis; `weight_index`
/// maps a basis position to the index j of the weight vector (weight n - 2j).
struct WeightModule {
    int label = 0;
    double q = 1.0;
    std::vector<int> weight_index;
    Eigen::MatrixXd E, F, K, K_half, K_half_inv;

    int dim() const { return label + 1; }
};

WeightModule weight_module(int label, double q);

enum class Generator { E, F, K };

/// Action of Delta(X) on H_b (x) H_c for the symmetric coproduct
///   Delta(K) = K (x) K,  Delta(E) = E (x) K^{1/2} + K^{-1/2} (x) E,
///   Delta(F) = F (x) K^{1/2} + K^{-1/2} (x) F.
Eigen::MatrixXd coproduct(const WeightModule& b, const WeightModule& c, Generator g);

/// Orthonormal CG isometries V(a, b (x) c) for a = |b-c|, ..., b+c, built by
/// completing highest-weight vectors and lowering with Delta(F). The first
/// nonzero coefficient of each highest-weight vector (lexicographic in the
/// rho basis) is positive.
CgList clebsch_gordan(int b, int c, double q);

/// Lazily builds and memoizes CG data for pairs (b, c) with b + c <= max_level.
class CgCache : public CgProvider {
public:
    CgCache(double q, int max_level) : q_(q), max_level_(max_level) {}
    std::shared_ptr<const CgList> tensors(const IrrepLabel& beta,
                                          const IrrepLabel& gamma) const override;

private:
    double q_;
    int max_level_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const CgList>> cache_;
};

}  // namespace cqg::uq_sl2
