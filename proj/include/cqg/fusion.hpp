#pragma once

#include <utility>
#include <vector>

#include "cqg/rep_data.hpp"

namespace cqg {

/// Multiset of irreducible components, ordered by the model's irrep order.
struct Decomposition {
    std::vector<std::pair<IrrepLabel, int>> components;

    int multiplicity(const IrrepLabel& l) const;
    bool operator==(const Decomposition&) const = default;
};

/// Components of beta (x) gamma. Throws TruncationError when the pair was
/// not ingested.
Decomposition decompose(const QGModel& m, const IrrepLabel& beta, const IrrepLabel& gamma);

/// (sum_i m_i alpha_i) (x) right, expanded through the fusion table.
Decomposition decompose_product(const QGModel& m, const Decomposition& left, const IrrepLabel& right);

/// alpha^{(x)n}, left-associated. Throws TruncationError naming the first
/// missing pair.
Decomposition tensor_power_decompose(const QGModel& m, const IrrepLabel& alpha, int n);

int max_component_dim(const QGModel& m, const Decomposition& d);

/// P_n(alpha): largest irreducible dimension inside alpha^{(x)n}.
int p_n(const QGModel& m, const IrrepLabel& alpha, int n);

struct GammaTop {
    std::vector<std::pair<IrrepLabel, int>> components;
    /// No component reaches Gamma(alpha) Gamma(beta); the model is inconsistent.
    bool violation = false;
};

/// Components gamma of alpha (x) beta with Gamma(gamma) = Gamma(alpha) Gamma(beta).
GammaTop gamma_top_components(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta,
                              const Tolerance& tol = {});

struct FrobeniusReport {
    std::size_t triples_checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// m(alpha, beta (x) gamma) = m(beta, alpha (x) conj gamma) = m(gamma, conj beta (x) alpha)
/// on every triple whose pairs are all ingested.
FrobeniusReport frobenius_check(const QGModel& m);

}  // namespace cqg
