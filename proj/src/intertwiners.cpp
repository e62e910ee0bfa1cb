#include "cqg/intertwiners.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cqg/dimensions.hpp"
#include "cqg/fusion.hpp"

namespace cqg {

using cd = std::complex<double>;

double operator_norm(const Eigen::MatrixXcd& x) {
    if (x.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x);
    return svd.singularValues()(0);
}

Eigen::MatrixXcd rho_matrix(const RhoSpectrum& s, double power) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r(i, i) = std::pow(s[i], power);
    return r;
}

Eigen::MatrixXcd flip(int nb, int nc) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(nb * nc, nb * nc);
    for (int b = 0; b < nb; ++b)
        for (int c = 0; c < nc; ++c) s(c * nb + b, b * nc + c) = 1.0;
    return s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

C00Element C00Element::unit(const QGModel& m, const IrrepLabel& alpha, int a, int a_prime) {
    const int n = m.irrep(alpha).dim;
    if (a < 0 || a >= n || a_prime < 0 || a_prime >= n)
        throw PreconditionError("matrix unit index out of range for '" + alpha.id + "'");
    C00Element e;
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n, n);
    block(a, a_prime) = 1.0;
    e.blocks.emplace(alpha, std::move(block));
    return e;
}

CgList cg_set(const QGModel& m, const IrrepLabel& beta, const IrrepLabel& gamma) {
    m.irrep(beta);
    m.irrep(gamma);
    auto t = m.cg_tensors(beta, gamma);
    if (!t)
        throw CgUnavailable("no CG data for (" + beta.id + ", " + gamma.id + ") in model '" +
                            m.name() + "'");
    return *t;
}

double UnitarityReport::max() const { return std::max({isometry, orthogonality, completeness}); }

UnitarityReport verify_cg_unitarity(const CgList& tensors) {
    UnitarityReport r;
    if (tensors.empty()) return r;
    const auto n = tensors.front().coeffs.rows();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < tensors.size(); ++i) {
        const auto& v = tensors[i].coeffs;
        if (v.rows() != n) throw PreconditionError("CG tensors do not share (beta, gamma)");
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(v.cols(), v.cols());
        r.isometry = std::max(r.isometry, operator_norm(v.adjoint() * v - id));
        for (std::size_t j = 0; j < tensors.size(); ++j)
            if (j != i) r.orthogonality = std::max(r.orthogonality, operator_norm(v.adjoint() * tensors[j].coeffs));
        sum += v * v.adjoint();
    }
    r.completeness = operator_norm(sum - Eigen::MatrixXcd::Identity(n, n));
    return r;
}

double cg_rho_intertwining_residual(const QGModel& m, const CgList& tensors, double zero_cut) {
    double worst = 0.0;
    for (const auto& t : tensors) {
        const auto& ra = m.irrep(t.alpha).rho;
        const auto& rb = m.irrep(t.beta).rho;
        const auto& rc = m.irrep(t.gamma).rho;
        const int nc = static_cast<int>(rc.size());
        const double scale = t.coeffs.cwiseAbs().maxCoeff();
        for (int row = 0; row < t.coeffs.rows(); ++row)
            for (int a = 0; a < t.coeffs.cols(); ++a) {
                if (std::abs(t.coeffs(row, a)) <= zero_cut * std::max(1.0, scale)) continue;
                const double lhs = std::log(rb[row / nc]) + std::log(rc[row % nc]);
                worst = std::max(worst, std::abs(lhs - std::log(ra[a])));
            }
    }
    return worst;
}

namespace {

/// sum_i V_i x V_i^* over the copies of alpha in beta (x) gamma, on H_beta (x) H_gamma.
Eigen::MatrixXcd conjugate_by_cg(const CgList& tensors, const IrrepLabel& alpha, const Eigen::MatrixXcd& x) {
    Eigen::MatrixXcd out;
    for (const auto& t : tensors) {
        if (t.alpha != alpha) continue;
        Eigen::MatrixXcd term = t.coeffs * x * t.coeffs.adjoint();
        if (out.size() == 0)
            out = std::move(term);
        else
            out += term;
    }
    if (out.size() == 0 && !tensors.empty()) {
        const auto n = tensors.front().coeffs.rows();
        out = Eigen::MatrixXcd::Zero(n, n);
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd delta_hat_block(const QGModel& m, const IrrepLabel& alpha, const Eigen::MatrixXcd& x,
                                 const IrrepLabel& beta, const IrrepLabel& gamma) {
    const int nb = m.irrep(beta).dim, nc = m.irrep(gamma).dim;
    auto tensors = m.cg_tensors(beta, gamma);
    if (!tensors)
        throw CgUnavailable("no CG data for (" + beta.id + ", " + gamma.id + ") in model '" +
                            m.name() + "'");
    if (tensors->empty()) return Eigen::MatrixXcd::Zero(nb * nc, nb * nc);
    const Eigen::MatrixXcd s = flip(nb, nc);
    return s * conjugate_by_cg(*tensors, alpha, x) * s.adjoint();
}

std::vector<DeltaBlock> delta_hat(const QGModel& m, const IrrepLabel& alpha, int a, int a_prime,
                                  const std::vector<FusionTable::Pair>& support) {
    const C00Element e = C00Element::unit(m, alpha, a, a_prime);
    std::vector<DeltaBlock> out;
    for (const auto& [beta, gamma] : support)
        out.push_back({gamma, beta, delta_hat_block(m, alpha, e.blocks.at(alpha), beta, gamma)});
    return out;
}

std::complex<double> haar_weight(const QGModel& m, const C00Element& x) {
    cd acc = 0.0;
    for (const auto& [label, block] : x.blocks) {
        const auto& rho = m.irrep(label).rho;
        if (block.rows() != static_cast<long>(rho.size()) || block.cols() != block.rows())
            throw PreconditionError("block size does not match dim of '" + label.id + "'");
        cd tr = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) tr += rho[i] * block(i, i);
        acc += rho.trace() * tr;
    }
    return acc;
}

double ModularReport::max_complete_residual() const {
    double worst = 0.0;
    for (const auto* side : {&left, &right})
        for (const auto& b : *side)
            if (!b.truncated) worst = std::max(worst, b.residual);
    return worst;
}

std::size_t ModularReport::complete_blocks() const {
    std::size_t n = 0;
    for (const auto* side : {&left, &right})
        for (const auto& b : *side) n += b.truncated ? 0 : 1;
    return n;
}

namespace {

std::vector<IrrepLabel> block_labels(const QGModel& m, const std::vector<IrrepLabel>& blocks) {
    if (!blocks.empty()) {
        for (const auto& l : blocks) m.irrep(l);
        return blocks;
    }
    std::vector<IrrepLabel> all;
    for (const auto& ir : m.irreps()) all.push_back(ir.label);
    return all;
}

/// True when every irrep that can pair with `fixed` to contain alpha is known:
/// `pair` must be ingested and each of its components must have CG data.
template <class CgLookup>
bool contributing_complete(const QGModel& m, const FusionTable::Pair& pair, CgLookup&& has_cg) {
    const auto* comps = m.fusion().find(pair.first, pair.second);
    if (!comps) return false;
    for (const auto& [lab, mult] : *comps)
        if (!has_cg(lab)) return false;
    return true;
}

}  // namespace

ModularReport verify_modular(const QGModel& m, const IrrepLabel& alpha, const std::vector<IrrepLabel>& blocks) {
    if (!m.cg()) throw CgUnavailable("model '" + m.name() + "' carries no CG data");
    const Irrep& a_irrep = m.irrep(alpha);
    const int na = a_irrep.dim;
    const double d_alpha = a_irrep.rho.trace();
    const auto labels = block_labels(m, blocks);

    ModularReport r;
    r.alpha = alpha;

    // (id (x) h) Delta, block gamma: sum over the second leg beta.
    for (const auto& gamma : labels) {
        const Irrep& g = m.irrep(gamma);
        const int nc = g.dim;
        const bool complete = contributing_complete(m, {alpha, g.conjugate}, [&](const IrrepLabel& beta) {
            return m.cg_tensors(beta, gamma) != nullptr;
        });
        double worst = 0.0;
        for (int a = 0; a < na; ++a)
            for (int ap = 0; ap < na; ++ap) {
                Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(na, na);
                x(a, ap) = 1.0;
                Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(nc, nc);
                for (const auto& b_irrep : m.irreps()) {
                    auto tensors = m.cg_tensors(b_irrep.label, gamma);
                    if (!tensors) continue;
                    const int nb = b_irrep.dim;
                    const Eigen::MatrixXcd block = delta_hat_block(m, alpha, x, b_irrep.label, gamma);
                    const double d_beta = b_irrep.rho.trace();
                    for (int c = 0; c < nc; ++c)
                        for (int cp = 0; cp < nc; ++cp)
                            for (int b = 0; b < nb; ++b)
                                lhs(c, cp) += d_beta * b_irrep.rho[b] * block(c * nb + b, cp * nb + b);
                }
                const cd h = a == ap ? cd(d_alpha * a_irrep.rho[a]) : cd(0.0);
                const Eigen::MatrixXcd rhs = h * rho_matrix(g.rho, -2.0);
                worst = std::max(worst, operator_norm(lhs - rhs) / std::max(1.0, operator_norm(rhs)));
            }
        r.left.push_back({gamma, worst, !complete});
    }

    // (h (x) id) Delta, block beta: sum over the first leg gamma.
    for (const auto& beta : labels) {
        const Irrep& b_irrep = m.irrep(beta);
        const int nb = b_irrep.dim;
        const bool complete = contributing_complete(m, {b_irrep.conjugate, alpha}, [&](const IrrepLabel& gamma) {
            return m.cg_tensors(beta, gamma) != nullptr;
        });
        double worst = 0.0;
        for (int a = 0; a < na; ++a)
            for (int ap = 0; ap < na; ++ap) {
                Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(na, na);
                x(a, ap) = 1.0;
                Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(nb, nb);
                for (const auto& g : m.irreps()) {
                    auto tensors = m.cg_tensors(beta, g.label);
                    if (!tensors) continue;
                    const int nc = g.dim;
                    const Eigen::MatrixXcd block = delta_hat_block(m, alpha, x, beta, g.label);
                    const double d_gamma = g.rho.trace();
                    for (int b = 0; b < nb; ++b)
                        for (int bp = 0; bp < nb; ++bp)
                            for (int c = 0; c < nc; ++c)
                                lhs(b, bp) += d_gamma * g.rho[c] * block(c * nb + b, c * nb + bp);
                }
                const cd h = a == ap ? cd(d_alpha * a_irrep.rho[a]) : cd(0.0);
                const Eigen::MatrixXcd rhs = h * Eigen::MatrixXcd::Identity(nb, nb);
                worst = std::max(worst, operator_norm(lhs - rhs) / std::max(1.0, operator_norm(rhs)));
            }
        r.right.push_back({beta, worst, !complete});
    }
    return r;
}

namespace {

/// Sum over gamma of (T (x) 1) Delta(x)_{gamma, z} (T (x) 1)^*, T = flip . V(gamma, y (x) x).
/// Returns nullopt when the sum is not complete.
std::optional<Eigen::MatrixXcd> left_iterate(const QGModel& m, const IrrepLabel& alpha, const Eigen::MatrixXcd& x,
                                             const IrrepLabel& bx, const IrrepLabel& by, const IrrepLabel& bz) {
    const auto* comps = m.fusion().find(by, bx);
    auto inner_cg = m.cg_tensors(by, bx);
    if (!comps || !inner_cg) return std::nullopt;
    const int nx = m.irrep(bx).dim, ny = m.irrep(by).dim, nz = m.irrep(bz).dim;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nx * ny * nz, nx * ny * nz);
    const Eigen::MatrixXcd s = flip(ny, nx);
    const Eigen::MatrixXcd id_z = Eigen::MatrixXcd::Identity(nz, nz);
    for (const auto& [gamma, mult] : *comps) {
        if (!m.cg_tensors(bz, gamma)) return std::nullopt;
        const Eigen::MatrixXcd outer = delta_hat_block(m, alpha, x, bz, gamma);  // on H_gamma (x) H_z
        for (const auto& t : *inner_cg) {
            if (t.alpha != gamma) continue;
            const Eigen::MatrixXcd lift = kron(s * t.coeffs, id_z);
            out += lift * outer * lift.adjoint();
        }
    }
    return out;
}

/// Sum over beta of (1 (x) T') Delta(x)_{x, beta} (1 (x) T')^*, T' = flip . V(beta, z (x) y).
std::optional<Eigen::MatrixXcd> right_iterate(const QGModel& m, const IrrepLabel& alpha, const Eigen::MatrixXcd& x,
                                              const IrrepLabel& bx, const IrrepLabel& by, const IrrepLabel& bz) {
    const auto* comps = m.fusion().find(bz, by);
    auto inner_cg = m.cg_tensors(bz, by);
    if (!comps || !inner_cg) return std::nullopt;
    const int nx = m.irrep(bx).dim, ny = m.irrep(by).dim, nz = m.irrep(bz).dim;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nx * ny * nz, nx * ny * nz);
    const Eigen::MatrixXcd s = flip(nz, ny);
    const Eigen::MatrixXcd id_x = Eigen::MatrixXcd::Identity(nx, nx);
    for (const auto& [beta, mult] : *comps) {
        if (!m.cg_tensors(beta, bx)) return std::nullopt;
        const Eigen::MatrixXcd outer = delta_hat_block(m, alpha, x, beta, bx);  // on H_x (x) H_beta
        for (const auto& t : *inner_cg) {
            if (t.alpha != beta) continue;
            const Eigen::MatrixXcd lift = kron(id_x, s * t.coeffs);
            out += lift * outer * lift.adjoint();
        }
    }
    return out;
}

}  // namespace

CoassociativityReport verify_coassociativity(const QGModel& m, const IrrepLabel& alpha,
                                             const std::vector<IrrepLabel>& blocks) {
    if (!m.cg()) throw CgUnavailable("model '" + m.name() + "' carries no CG data");
    const int na = m.irrep(alpha).dim;
    const auto labels = block_labels(m, blocks);
    CoassociativityReport r;
    r.alpha = alpha;
    for (const auto& bx : labels)
        for (const auto& by : labels)
            for (const auto& bz : labels) {
                bool complete = true;
                double worst = 0.0;
                for (int a = 0; a < na && complete; ++a)
                    for (int ap = 0; ap < na && complete; ++ap) {
                        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(na, na);
                        x(a, ap) = 1.0;
                        auto lhs = left_iterate(m, alpha, x, bx, by, bz);
                        auto rhs = right_iterate(m, alpha, x, bx, by, bz);
                        if (!lhs || !rhs) {
                            complete = false;
                            break;
                        }
                        worst = std::max(worst, operator_norm(*lhs - *rhs));
                    }
                if (complete) {
                    ++r.complete_blocks;
                    r.max_residual = std::max(r.max_residual, worst);
                } else {
                    ++r.skipped_blocks;
                }
            }
    return r;
}

}  // namespace cqg
