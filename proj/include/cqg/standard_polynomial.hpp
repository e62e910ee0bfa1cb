#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cqg/types.hpp"

namespace cqg {

/// Element of a finite direct sum of matrix algebras, one block per irrep.
template <class Scalar>
struct BlockElement {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    std::map<IrrepLabel, Matrix> blocks;

    bool is_zero() const {
        for (const auto& [l, b] : blocks)
            if (!(b.array() == Scalar(0)).all()) return false;
        return true;
    }
    bool operator==(const BlockElement& o) const {
        if (blocks.size() != o.blocks.size()) return false;
        for (const auto& [l, b] : blocks) {
            auto it = o.blocks.find(l);
            if (it == o.blocks.end() || it->second.rows() != b.rows() || !(it->second.array() == b.array()).all())
                return false;
        }
        return true;
    }
};

using IntBlockElement = BlockElement<std::int64_t>;

/// S_r(x_1, ..., x_r) = sum over S_r of sgn(pi) x_pi(1) ... x_pi(r), blockwise.
///
/// Uses the Laplace-type expansion S(T) = sum_{j in T} (-1)^{pos(j)} x_j S(T \ {j})
/// with memoization over subsets T, so the cost is r 2^{r-1} block products
/// instead of r! r. Throws PreconditionError for r < 2 or mismatched blocks.
template <class Scalar>
BlockElement<Scalar> standard_polynomial(const std::vector<BlockElement<Scalar>>& xs);

/// Direct r!-term evaluation (permutations in lexicographic order).
template <class Scalar>
BlockElement<Scalar> standard_polynomial_naive(const std::vector<BlockElement<Scalar>>& xs);

/// Single-matrix variants used by the kernel.
template <class Matrix>
Matrix standard_polynomial_matrix(const std::vector<Matrix>& xs);

}  // namespace cqg
