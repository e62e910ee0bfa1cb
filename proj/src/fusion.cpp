#include "cqg/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cqg/dimensions.hpp"

namespace cqg {

namespace {

Decomposition from_map(const QGModel& m, const std::map<IrrepLabel, int>& acc) {
    Decomposition d;
    for (const auto& [l, mult] : acc)
        if (mult > 0) d.components.emplace_back(l, mult);
    std::sort(d.components.begin(), d.components.end(), [&](const auto& x, const auto& y) {
        return m.index_of(x.first) < m.index_of(y.first);
    });
    return d;
}

}  // namespace

int Decomposition::multiplicity(const IrrepLabel& l) const {
    for (const auto& [lab, mult] : components)
        if (lab == l) return mult;
    return 0;
}

Decomposition decompose(const QGModel& m, const IrrepLabel& beta, const IrrepLabel& gamma) {
    m.irrep(beta);
    m.irrep(gamma);
    const auto* comps = m.fusion().find(beta, gamma);
    if (!comps) throw TruncationError(beta, gamma);
    return from_map(m, *comps);
}

Decomposition decompose_product(const QGModel& m, const Decomposition& left, const IrrepLabel& right) {
    std::map<IrrepLabel, int> acc;
    for (const auto& [lab, mult] : left.components) {
        const auto* comps = m.fusion().find(lab, right);
        if (!comps) throw TruncationError(lab, right);
        for (const auto& [c, k] : *comps) acc[c] += mult * k;
    }
    return from_map(m, acc);
}

Decomposition tensor_power_decompose(const QGModel& m, const IrrepLabel& alpha, int n) {
    if (n < 1) throw PreconditionError("tensor power needs n >= 1");
    m.irrep(alpha);
    Decomposition d;
    d.components.emplace_back(alpha, 1);
    for (int k = 2; k <= n; ++k) d = decompose_product(m, d, alpha);
    return d;
}

int max_component_dim(const QGModel& m, const Decomposition& d) {
    int best = 0;
    for (const auto& [lab, mult] : d.components) best = std::max(best, m.irrep(lab).dim);
    return best;
}

int p_n(const QGModel& m, const IrrepLabel& alpha, int n) {
    return max_component_dim(m, tensor_power_decompose(m, alpha, n));
}

GammaTop gamma_top_components(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta,
                              const Tolerance& tol) {
    const Decomposition d = decompose(m, alpha, beta);
    const double target = std::log(gamma(m.irrep(alpha).rho)) + std::log(gamma(m.irrep(beta).rho));
    GammaTop out;
    for (const auto& [lab, mult] : d.components)
        if (std::abs(std::log(gamma(m.irrep(lab).rho)) - target) <= tol.eigen_group)
            out.components.emplace_back(lab, mult);
    out.violation = out.components.empty();
    return out;
}

FrobeniusReport frobenius_check(const QGModel& m) {
    FrobeniusReport r;
    const auto& fusion = m.fusion();
    for (const auto& [pair, comps] : fusion.entries()) {
        const auto& [beta, gamma] = pair;
        for (const auto& a : m.irreps()) {
            const int m0 = fusion.multiplicity(a.label, beta, gamma).value_or(0);
            if (auto m1 = fusion.multiplicity(beta, a.label, m.conjugate(gamma))) {
                ++r.triples_checked;
                if (*m1 != m0)
                    r.violations.push_back({"frobenius", {a.label, beta, gamma}, double(std::abs(*m1 - m0)),
                                            "m(alpha, beta (x) gamma) != m(beta, alpha (x) conj(gamma))"});
            }
            if (auto m2 = fusion.multiplicity(gamma, m.conjugate(beta), a.label)) {
                ++r.triples_checked;
                if (*m2 != m0)
                    r.violations.push_back({"frobenius", {a.label, beta, gamma}, double(std::abs(*m2 - m0)),
                                            "m(alpha, beta (x) gamma) != m(gamma, conj(beta) (x) alpha)"});
            }
        }
    }
    return r;
}

}  // namespace cqg
