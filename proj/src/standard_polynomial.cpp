#include "cqg/standard_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <numeric>

namespace cqg {

template <class Matrix>
Matrix standard_polynomial_matrix(const std::vector<Matrix>& xs) {
    const int r = static_cast<int>(xs.size());
    if (r < 2) throw PreconditionError("standard polynomial needs at least two arguments");
    if (r > 20) throw PreconditionError("standard polynomial degree too large");
    const auto n = xs.front().rows();
    for (const auto& x : xs)
        if (x.rows() != n || x.cols() != n) throw PreconditionError("standard polynomial: block size mismatch");

    // S(T) for every subset T, built by increasing size. For T with elements
    // t_0 < t_1 < ... the first factor is x_{t_k} with sign (-1)^k, because
    // moving t_k to the front of the sorted word costs k transpositions.
    const std::uint32_t full = (1u << r) - 1;
    std::vector<Matrix> table(std::size_t(1) << r);
    std::vector<std::uint32_t> order(full);
    std::iota(order.begin(), order.end(), 1u);
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t set : order) {
        if (std::popcount(set) == 1) {
            table[set] = xs[std::countr_zero(set)];
            continue;
        }
        Matrix acc = Matrix::Zero(n, n);
        int k = 0;
        for (std::uint32_t rest = set; rest; rest &= rest - 1, ++k) {
            const int j = std::countr_zero(rest);
            const Matrix term = xs[j] * table[set & ~(1u << j)];
            if (k % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        table[set] = std::move(acc);
    }
    return table[full];
}

namespace {

template <class Scalar>
void check_blocks(const std::vector<BlockElement<Scalar>>& xs) {
    if (xs.size() < 2) throw PreconditionError("standard polynomial needs at least two arguments");
    for (const auto& x : xs) {
        if (x.blocks.size() != xs.front().blocks.size())
            throw PreconditionError("standard polynomial arguments live in different algebras");
        for (const auto& [l, b] : x.blocks) {
            auto it = xs.front().blocks.find(l);
            if (it == xs.front().blocks.end() || it->second.rows() != b.rows())
                throw PreconditionError("standard polynomial arguments live in different algebras");
        }
    }
}

}  // namespace

template <class Scalar>
BlockElement<Scalar> standard_polynomial(const std::vector<BlockElement<Scalar>>& xs) {
    check_blocks(xs);
    BlockElement<Scalar> out;
    for (const auto& [label, block] : xs.front().blocks) {
        std::vector<typename BlockElement<Scalar>::Matrix> ms;
        ms.reserve(xs.size());
        for (const auto& x : xs) ms.push_back(x.blocks.at(label));
        out.blocks.emplace(label, standard_polynomial_matrix(ms));
    }
    return out;
}

template <class Scalar>
BlockElement<Scalar> standard_polynomial_naive(const std::vector<BlockElement<Scalar>>& xs) {
    check_blocks(xs);
    const int r = static_cast<int>(xs.size());
    BlockElement<Scalar> out;
    for (const auto& [label, block] : xs.front().blocks) {
        using Matrix = typename BlockElement<Scalar>::Matrix;
        const auto n = block.rows();
        Matrix acc = Matrix::Zero(n, n);
        std::vector<int> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) inversions += perm[i] > perm[j];
            Matrix prod = xs[perm[0]].blocks.at(label);
            for (int i = 1; i < r; ++i) prod = prod * xs[perm[i]].blocks.at(label);
            if (inversions % 2 == 0)
                acc += prod;
            else
                acc -= prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.blocks.emplace(label, std::move(acc));
    }
    return out;
}

template BlockElement<std::int64_t> standard_polynomial(const std::vector<BlockElement<std::int64_t>>&);
template BlockElement<std::complex<double>> standard_polynomial(
    const std::vector<BlockElement<std::complex<double>>>&);
template BlockElement<std::int64_t> standard_polynomial_naive(const std::vector<BlockElement<std::int64_t>>&);
template BlockElement<std::complex<double>> standard_polynomial_naive(
    const std::vector<BlockElement<std::complex<double>>>&);
template Eigen::Matrix<std::int64_t, -1, -1> standard_polynomial_matrix(
    const std::vector<Eigen::Matrix<std::int64_t, -1, -1>>&);
template Eigen::MatrixXcd standard_polynomial_matrix(const std::vector<Eigen::MatrixXcd>&);

}  // namespace cqg
