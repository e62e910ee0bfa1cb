#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cqg/rep_data.hpp"

namespace cqg {

/// Finitely supported element of c_00 of the dual: one n_alpha x n_alpha
/// matrix per irrep in the support, in the matrix-unit basis e^alpha_{i,j}.
struct C00Element {
    std::map<IrrepLabel, Eigen::MatrixXcd> blocks;

    /// e^alpha_{a,a'} with 0-based indices.
    static C00Element unit(const QGModel& m, const IrrepLabel& alpha, int a, int a_prime);
};

/// CG isometries for beta (x) gamma. Throws CgUnavailable.
CgList cg_set(const QGModel& m, const IrrepLabel& beta, const IrrepLabel& gamma);

struct UnitarityReport {
    double isometry = 0.0;       // max_i ||V_i^* V_i - 1||
    double orthogonality = 0.0;  // max_{i != j} ||V_i^* V_j||
    double completeness = 0.0;   // ||sum_i V_i V_i^* - 1||
    double max() const;
};

/// Residuals of the unitarity of the stacked map V(beta, gamma). All tensors
/// must share (beta, gamma).
UnitarityReport verify_cg_unitarity(const CgList& tensors);

/// Largest |ln(lambda_b lambda_c) - ln(lambda_a)| over nonzero coefficients
/// V^{b,c}_a, i.e. how far V is from intertwining rho_beta (x) rho_gamma with rho_alpha.
double cg_rho_intertwining_residual(const QGModel& m, const CgList& tensors, double zero_cut = 1e-12);

/// Block (gamma, beta) of Delta(x) for x supported on alpha: an operator on
/// H_gamma (x) H_beta (gamma in the FIRST leg). Throws CgUnavailable.
Eigen::MatrixXcd delta_hat_block(const QGModel& m, const IrrepLabel& alpha, const Eigen::MatrixXcd& x,
                                 const IrrepLabel& beta, const IrrepLabel& gamma);

struct DeltaBlock {
    IrrepLabel first;   // gamma
    IrrepLabel second;  // beta
    Eigen::MatrixXcd value;
};

/// Delta(e^alpha_{a,a'}) restricted to the requested (beta, gamma) pairs
/// (indices 0-based). Pairs where alpha does not occur give a zero block.
std::vector<DeltaBlock> delta_hat(const QGModel& m, const IrrepLabel& alpha, int a, int a_prime,
                                  const std::vector<FusionTable::Pair>& support);

/// h(x) = sum_alpha d_alpha Tr(rho_alpha x_alpha).
std::complex<double> haar_weight(const QGModel& m, const C00Element& x);

struct BlockResidual {
    IrrepLabel block;
    double residual = 0.0;
    bool truncated = false;
};

struct ModularReport {
    IrrepLabel alpha;
    /// (id (x) h) Delta = h(.) (+)_gamma rho_gamma^{-2}, per gamma block.
    std::vector<BlockResidual> left;
    /// (h (x) id) Delta = h(.) 1, per beta block.
    std::vector<BlockResidual> right;
    /// Max over complete (non-truncated) blocks.
    double max_complete_residual() const;
    std::size_t complete_blocks() const;
};

/// Evaluates both modular identities on every matrix unit e^alpha_{a,a'},
/// blockwise over `blocks` (all irreps when empty). A block is truncated when
/// some contributing pair lies outside the ingested fragment; its residual is
/// reported but not counted as complete.
ModularReport verify_modular(const QGModel& m, const IrrepLabel& alpha,
                             const std::vector<IrrepLabel>& blocks = {});

struct CoassociativityReport {
    IrrepLabel alpha;
    std::size_t complete_blocks = 0;
    std::size_t skipped_blocks = 0;
    double max_residual = 0.0;
};

/// (Delta (x) id) Delta = (id (x) Delta) Delta on the matrix units of alpha,
/// over triple blocks drawn from `blocks` whose sums are complete.
CoassociativityReport verify_coassociativity(const QGModel& m, const IrrepLabel& alpha,
                                             const std::vector<IrrepLabel>& blocks = {});

/// Spectral (largest singular value) norm.
double operator_norm(const Eigen::MatrixXcd& x);

/// Diagonal matrix of a rho spectrum in the descending basis.
Eigen::MatrixXcd rho_matrix(const RhoSpectrum& s, double power = 1.0);

/// Matrix of the flip H_b (x) H_c -> H_c (x) H_b.
Eigen::MatrixXcd flip(int nb, int nc);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y);

}  // namespace cqg
