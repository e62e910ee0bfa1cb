#include "cqg/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/intertwiners.hpp"

namespace cqg {

namespace {

bool same_value(double a, double b, const Tolerance& tol) {
    return std::abs(std::log(a) - std::log(b)) <= tol.eigen_group;
}

bool in_spectrum(const RhoSpectrum& s, double t, const Tolerance& tol) {
    return std::any_of(s.values().begin(), s.values().end(), [&](double v) { return same_value(v, t, tol); });
}

}  // namespace

std::vector<EigenClass> eigen_classes(const RhoSpectrum& s, const Tolerance& tol) {
    std::vector<EigenClass> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!out.empty() && same_value(out.back().value, s[i], tol)) {
            out.back().indices.push_back(i);
            continue;
        }
        out.push_back({s[i], {i}});
    }
    return out;
}

SpectralProjection spectral_projection(const RhoSpectrum& s, double t, const Tolerance& tol) {
    if (!(t > 0)) throw PreconditionError("spectral projection needs t > 0");
    SpectralProjection p;
    p.value = t;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (same_value(s[i], t, tol)) p.indices.push_back(i);
    return p;
}

Eigen::MatrixXcd projection_matrix(const RhoSpectrum& s, double t, const Tolerance& tol) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(s.size(), s.size());
    for (auto i : spectral_projection(s, t, tol).indices) p(i, i) = 1.0;
    return p;
}

std::vector<ProjectionPair> tensor_projection_pairs(const RhoSpectrum& u, const RhoSpectrum& v, double t,
                                                    const Tolerance& tol) {
    if (!(t > 0)) throw PreconditionError("tensor projection pairs need t > 0");
    std::vector<ProjectionPair> out;
    for (const auto& cls : eigen_classes(u, tol)) {
        const auto right = spectral_projection(v, t / cls.value, tol);
        if (right.dim() == 0) continue;
        out.push_back({cls.value, t / cls.value, cls.indices.size() * right.dim()});
    }
    return out;
}

std::vector<GridPoint> spectral_grid(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta, int probes,
                                     const Tolerance& tol) {
    const auto& ra = m.irrep(alpha).rho;
    const auto& rb = m.irrep(beta).rho;
    std::vector<GridPoint> out;
    for (const auto& tb : eigen_classes(rb, tol))
        for (const auto& ta : eigen_classes(ra, tol)) out.push_back({ta.value / tb.value, tb.value, false});

    // Off-grid probes: the first is a point far from every spectrum, the rest
    // keep t on Sp(rho_beta) but move s t off Sp(rho_alpha).
    const auto classes_b = eigen_classes(rb, tol);
    int added = 0;
    for (int k = 0; added < probes && k < 16 * (probes + 1); ++k) {
        GridPoint p;
        p.probe = true;
        if (k == 0) {
            p.s = 7.0;
            p.t = 11.0;
        } else {
            p.t = classes_b[k % classes_b.size()].value;
            p.s = std::pow(1.6180339887, k) * std::sqrt(ra[0]) / p.t;
        }
        if (in_spectrum(rb, p.t, tol) && in_spectrum(ra, p.s * p.t, tol)) continue;
        out.push_back(p);
        ++added;
    }
    return out;
}

Theorem53Result verify_theorem_5_3(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta, double s,
                                   double t, const Tolerance& tol) {
    if (!m.cg()) throw CgUnavailable("model '" + m.name() + "' carries no CG data");
    if (!(s > 0) || !(t > 0)) throw PreconditionError("theorem 5.3 needs s, t > 0");
    const Irrep& a = m.irrep(alpha);
    const Irrep& b = m.irrep(beta);
    const int na = a.dim;
    const double d_alpha = a.rho.trace();
    const Eigen::MatrixXcd proj_b = projection_matrix(b.rho, t, tol);
    const double dim_hb = proj_b.real().trace();
    const Eigen::MatrixXcd proj_a = projection_matrix(a.rho, s * t, tol);

    Theorem53Result r;
    r.alpha = alpha;
    r.beta = beta;
    r.s = s;
    r.t = t;

    // eq1: gamma on the left, V(alpha, gamma (x) beta, i); contributors are the components of alpha (x) conj(beta).
    {
        Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(na, na);
        const auto* contributors = m.fusion().find(alpha, b.conjugate);
        r.truncated_eq1 = contributors == nullptr;
        for (const auto& g : m.irreps()) {
            auto tensors = m.cg_tensors(g.label, beta);
            if (!tensors) {
                if (contributors && contributors->count(g.label)) r.truncated_eq1 = true;
                continue;
            }
            const Eigen::MatrixXcd op = kron(projection_matrix(g.rho, s, tol), proj_b);
            for (const auto& v : *tensors)
                if (v.alpha == alpha) lhs += g.rho.trace() * v.coeffs.adjoint() * op * v.coeffs;
        }
        const Eigen::MatrixXcd rhs = (d_alpha / t) * dim_hb * proj_a;
        r.residual_eq1 = operator_norm(lhs - rhs);
        r.lhs_norm_eq1 = operator_norm(lhs);
        r.rhs_norm_eq1 = operator_norm(rhs);
        r.relative_eq1 = r.residual_eq1 / std::max(1.0, r.rhs_norm_eq1);
    }
    // eq2: gamma on the right, V(alpha, beta (x) gamma, i); contributors are the components of conj(beta) (x) alpha.
    {
        Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(na, na);
        const auto* contributors = m.fusion().find(b.conjugate, alpha);
        r.truncated_eq2 = contributors == nullptr;
        for (const auto& g : m.irreps()) {
            auto tensors = m.cg_tensors(beta, g.label);
            if (!tensors) {
                if (contributors && contributors->count(g.label)) r.truncated_eq2 = true;
                continue;
            }
            const Eigen::MatrixXcd op = kron(proj_b, projection_matrix(g.rho, s, tol));
            for (const auto& v : *tensors)
                if (v.alpha == alpha) lhs += g.rho.trace() * v.coeffs.adjoint() * op * v.coeffs;
        }
        const Eigen::MatrixXcd rhs = d_alpha * t * dim_hb * proj_a;
        r.residual_eq2 = operator_norm(lhs - rhs);
        r.lhs_norm_eq2 = operator_norm(lhs);
        r.rhs_norm_eq2 = operator_norm(rhs);
        r.relative_eq2 = r.residual_eq2 / std::max(1.0, r.rhs_norm_eq2);
    }
    return r;
}

}  // namespace cqg
