#include "cqg/uq_sl2.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace cqg::uq_sl2 {

double q_integer(int n, double q) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += std::pow(q, n - 1 - 2 * k);
    return acc;
}

WeightModule weight_module(int label, double q) {
    const int d = label + 1;
    WeightModule w;
    w.label = label;
    w.q = q;
    w.weight_index.resize(d);
    for (int p = 0; p < d; ++p) w.weight_index[p] = q < 1.0 ? label - p : p;
    std::vector<int> position(d);
    for (int p = 0; p < d; ++p) position[w.weight_index[p]] = p;

    w.E = Eigen::MatrixXd::Zero(d, d);
    w.F = Eigen::MatrixXd::Zero(d, d);
    w.K = Eigen::MatrixXd::Zero(d, d);
    w.K_half = Eigen::MatrixXd::Zero(d, d);
    w.K_half_inv = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        const int p = position[j];
        const int weight = label - 2 * j;
        w.K(p, p) = std::pow(q, weight);
        w.K_half(p, p) = std::pow(q, 0.5 * weight);
        w.K_half_inv(p, p) = std::pow(q, -0.5 * weight);
        if (j + 1 < d) {
            const double c = std::sqrt(q_integer(j + 1, q) * q_integer(label - j, q));
            w.F(position[j + 1], p) = c;
            w.E(p, position[j + 1]) = c;
        }
    }
    return w;
}

Eigen::MatrixXd coproduct(const WeightModule& b, const WeightModule& c, Generator g) {
    auto kron = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
        Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j)
                out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        return out;
    };
    switch (g) {
    case Generator::K:
        return kron(b.K, c.K);
    case Generator::E:
        return kron(b.E, c.K_half) + kron(b.K_half_inv, c.E);
    case Generator::F:
        return kron(b.F, c.K_half) + kron(b.K_half_inv, c.F);
    }
    return {};
}

CgList clebsch_gordan(int b, int c, double q) {
    const WeightModule mb = weight_module(b, q);
    const WeightModule mc = weight_module(c, q);
    const Eigen::MatrixXd lower = coproduct(mb, mc, Generator::F);
    const int nb = b + 1, nc = c + 1, n = nb * nc;

    // Weight of each product basis vector.
    std::vector<int> weight(n);
    for (int pb = 0; pb < nb; ++pb)
        for (int pc = 0; pc < nc; ++pc)
            weight[pb * nc + pc] = (b - 2 * mb.weight_index[pb]) + (c - 2 * mc.weight_index[pc]);

    std::vector<Eigen::VectorXd> generated;
    CgList out;
    for (int a = b + c; a >= std::abs(b - c); a -= 2) {
        // Highest-weight vector: the orthogonal complement, inside the weight-a
        // space, of everything generated by the higher components.
        Eigen::VectorXd hw;
        double best = -1.0;
        for (int k = 0; k < n; ++k) {
            if (weight[k] != a) continue;
            Eigen::VectorXd v = Eigen::VectorXd::Unit(n, k);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : generated) v -= u.dot(v) * u;
            if (v.norm() > best) {
                best = v.norm();
                hw = v;
            }
        }
        hw.normalize();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : generated) hw -= u.dot(hw) * u;
            hw.normalize();
        }
        const double scale = hw.cwiseAbs().maxCoeff();
        for (int k = 0; k < n; ++k)
            if (std::abs(hw[k]) > 1e-10 * scale) {
                if (hw[k] < 0) hw = -hw;
                break;
            }

        // Lower: column j holds the weight vector a - 2j.
        const WeightModule ma = weight_module(a, q);
        std::vector<Eigen::VectorXd> by_weight{hw};
        for (int j = 0; j < a; ++j)
            by_weight.push_back(lower * by_weight.back() /
                                std::sqrt(q_integer(j + 1, q) * q_integer(a - j, q)));
        for (const auto& v : by_weight) generated.push_back(v);

        CGTensor t;
        t.alpha = std::to_string(a);
        t.beta = std::to_string(b);
        t.gamma = std::to_string(c);
        t.copy = 1;
        t.coeffs = Eigen::MatrixXcd::Zero(n, a + 1);
        for (int p = 0; p <= a; ++p) t.coeffs.col(p) = by_weight[ma.weight_index[p]].cast<std::complex<double>>();
        out.push_back(std::move(t));
    }
    // Ascending target label, matching model order.
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

std::optional<int> parse_level(const IrrepLabel& l) {
    int v = 0;
    const auto* first = l.id.data();
    const auto* last = first + l.id.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v < 0) return std::nullopt;
    return v;
}

}  // namespace

std::shared_ptr<const CgList> CgCache::tensors(const IrrepLabel& beta, const IrrepLabel& gamma) const {
    const auto b = parse_level(beta), c = parse_level(gamma);
    if (!b || !c || *b + *c > max_level_) return nullptr;
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find({*b, *c}); it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const CgList>(clebsch_gordan(*b, *c, q_));
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::make_pair(*b, *c), std::move(built)).first->second;
}

}  // namespace cqg::uq_sl2
