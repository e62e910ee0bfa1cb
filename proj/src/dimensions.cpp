#include "cqg/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cqg/fusion.hpp"

namespace cqg {

double log_dim_t(const RhoSpectrum& s, double t) {
    if (s.empty()) return -INFINITY;
    double top = -INFINITY;
    for (double v : s.values()) top = std::max(top, t * std::log(v));
    double acc = 0.0;
    for (double v : s.values()) acc += std::exp(t * std::log(v) - top);
    return top + std::log(acc);
}

double dim_t(const RhoSpectrum& s, double t) {
    if (t == 0.0) return static_cast<double>(s.size());
    if (t == 1.0) return s.trace();
    return std::exp(log_dim_t(s, t));
}

double gamma(const RhoSpectrum& s) { return s.empty() ? 0.0 : s[0]; }

EigenLists eigen_lists(const RhoSpectrum& s) {
    return {s.values(), conjugate_spectrum(s).values()};
}

bool symmetry_check(const RhoSpectrum& s, const Tolerance& tol) {
    const EigenLists l = eigen_lists(s);
    for (std::size_t i = 0; i < l.forward.size(); ++i)
        if (std::abs(std::log(l.forward[i]) - std::log(l.backward[i])) > tol.eigen_group)
            return false;
    return true;
}

SymmetryByConjugate symmetry_by_conjugate(const QGModel& m, const IrrepLabel& alpha,
                                          const Tolerance& tol) {
    const Irrep& ir = m.irrep(alpha);
    SymmetryByConjugate out;
    out.symmetric = symmetry_check(ir.rho, tol);
    out.verdict = ir.conjugate == ir.label ? SymmetryVerdict::forced_symmetric
                                           : SymmetryVerdict::no_conclusion;
    out.violation = out.verdict == SymmetryVerdict::forced_symmetric && !out.symmetric;
    return out;
}

bool power_sum_uniqueness(const std::vector<double>& a, const std::vector<double>& b,
                          const std::vector<double>& t_grid, const Tolerance& tol) {
    if (a.empty() || b.empty()) throw PreconditionError("power_sum_uniqueness: empty multiset");
    std::set<double> distinct;
    for (double t : t_grid)
        if (t > 1) distinct.insert(t);
    if (distinct.size() < a.size() + b.size())
        throw PreconditionError("power_sum_uniqueness: grid needs at least |a|+|b| distinct t > 1");
    const RhoSpectrum sa = RhoSpectrum::from_values(a);
    const RhoSpectrum sb = RhoSpectrum::from_values(b);
    for (double t : distinct) {
        const double x = dim_t(sa, t), y = dim_t(sb, t);
        if (std::abs(x - y) > tol.abs + tol.rel * std::max(x, y)) return false;
    }
    return true;
}

GrowthReport growth_inequality_check(const QGModel& m, const IrrepLabel& alpha, int n, double t,
                                     const Tolerance& tol) {
    if (n < 1) throw PreconditionError("growth check needs n >= 1");
    if (!(t > 1)) throw PreconditionError("growth check needs t > 1");
    const Irrep& a = m.irrep(alpha);
    const Decomposition power = tensor_power_decompose(m, alpha, n);

    GrowthReport r;
    r.alpha = alpha;
    r.n = n;
    r.t = t;
    r.p_n = max_component_dim(m, power);
    r.d_t = dim_t(a.rho, t);
    r.d_minus_t = dim_t(a.rho, -t);
    for (const auto& [lab, mult] : power.components) r.d_t_power += mult * dim_t(m.irrep(lab).rho, t);
    r.lhs_forward = std::pow(r.d_t, n);
    r.rhs_forward = std::pow(double(r.p_n), t - 1) * std::pow(r.d_minus_t, n);
    r.lhs_backward = std::pow(r.d_minus_t, n);
    r.rhs_backward = std::pow(double(r.p_n), t - 1) * std::pow(r.d_t, n);
    auto le = [&](double x, double y) { return x <= y + tol.abs + tol.rel * std::abs(y); };
    r.pass = le(r.lhs_forward, r.rhs_forward) && le(r.lhs_backward, r.rhs_backward);
    return r;
}

std::vector<double> default_t_grid() { return {-3, -2, -1, 1, 2, 3}; }

}  // namespace cqg
