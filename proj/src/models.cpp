#include "cqg/models.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <memory>

#include <unsupported/Eigen/KroneckerProduct>

#include "cqg/dimensions.hpp"
#include "cqg/uq_sl2.hpp"

namespace cqg {

bool rho_defining_property_oracle(const RhoSpectrum& candidate, int end_dim, const Tolerance& tol) {
    if (end_dim != 1) throw PreconditionError("oracle is only defined for irreducible representations");
    const double a = candidate.trace(), b = candidate.inverse_trace();
    return std::abs(a - b) <= tol.abs + tol.rel * std::max(a, b);
}

namespace {

void certify(const QGModel& m) {
    for (const auto& ir : m.irreps())
        if (!rho_defining_property_oracle(ir.rho, 1, Tolerance::uniform(1e-10)))
            throw ConsistencyError("built-in spectrum of '" + ir.label.id + "' fails trace balance");
}

}  // namespace

QGModel builtin_su_q_2(double q, int max_level) {
    if (!(q > 0) || !std::isfinite(q)) throw PreconditionError("su_q_2 needs q > 0");
    if (max_level < 0) throw PreconditionError("su_q_2 needs max_level >= 0");

    QGModel::Data d;
    d.name = "su_q_2";
    d.parameters = {{"q", q}, {"max_level", double(max_level)}};
    d.truncated = true;
    d.truncation_note = "irreps 0.." + std::to_string(max_level) + "; fusion pairs (n, m) with n + m <= " +
                        std::to_string(max_level);
    d.trivial = "0";
    for (int n = 0; n <= max_level; ++n) {
        std::vector<double> spec;
        for (int j = 0; j <= n; ++j) spec.push_back(std::pow(q, n - 2 * j));
        const std::string l = std::to_string(n);
        d.irreps.push_back({l, n + 1, RhoSpectrum::from_values(std::move(spec)), l});
    }
    for (int n = 0; n <= max_level; ++n)
        for (int m = 0; n + m <= max_level; ++m) {
            FusionTable::Components c;
            for (int k = std::abs(n - m); k <= n + m; k += 2) c[std::to_string(k)] = 1;
            d.fusion.set(std::to_string(n), std::to_string(m), std::move(c));
        }
    d.cg = std::make_shared<uq_sl2::CgCache>(q, max_level);
    QGModel model(std::move(d));
    certify(model);
    return model;
}

namespace {

using Rep = std::vector<Eigen::MatrixXcd>;  // one matrix per group element

struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<Rep> reps;
    std::vector<std::string> conjugates;
};

FiniteGroup cyclic(int n) {
    FiniteGroup g;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < n; ++k) {
        g.labels.push_back(std::to_string(k));
        g.conjugates.push_back(std::to_string((n - k) % n));
        Rep r;
        for (int e = 0; e < n; ++e) {
            Eigen::MatrixXcd m(1, 1);
            m(0, 0) = std::polar(1.0, 2.0 * pi * k * e / n);
            r.push_back(m);
        }
        g.reps.push_back(std::move(r));
    }
    return g;
}

FiniteGroup s3() {
    // Elements: rotations by 0, 120, 240 degrees, then the three reflections.
    const double c = -0.5, s = std::sqrt(3.0) / 2.0;
    const std::array<std::array<double, 4>, 6> std_rep{{
        {1, 0, 0, 1},
        {c, -s, s, c},
        {c, s, -s, c},
        {1, 0, 0, -1},
        {c, s, s, -c},
        {c, -s, -s, -c},
    }};
    FiniteGroup g;
    g.labels = {"triv", "sign", "std"};
    g.conjugates = g.labels;
    Rep triv, sign, two;
    for (int e = 0; e < 6; ++e) {
        triv.push_back(Eigen::MatrixXcd::Ones(1, 1));
        sign.push_back(Eigen::MatrixXcd::Constant(1, 1, e < 3 ? 1.0 : -1.0));
        Eigen::MatrixXcd m(2, 2);
        m << std_rep[e][0], std_rep[e][1], std_rep[e][2], std_rep[e][3];
        two.push_back(m);
    }
    g.reps = {triv, sign, two};
    return g;
}

std::complex<double> character_inner(const Rep& a, const Rep& b) {
    std::complex<double> acc = 0;
    for (std::size_t e = 0; e < a.size(); ++e) acc += std::conj(a[e].trace()) * b[e].trace();
    return acc / double(a.size());
}

// Isometry H_alpha -> H_beta (x) H_gamma intertwining D_alpha with D_beta (x) D_gamma,
// from the projectors P_{a,0} = (n / |G|) sum_g conj(D_alpha(g)_{a,0}) D(g).
Eigen::MatrixXcd group_cg(const Rep& alpha, const Rep& prod) {
    const auto n = alpha.front().rows();
    const auto big = prod.front().rows();
    const double order = double(alpha.size());
    std::vector<Eigen::MatrixXcd> proj(n, Eigen::MatrixXcd::Zero(big, big));
    for (std::size_t e = 0; e < alpha.size(); ++e)
        for (Eigen::Index a = 0; a < n; ++a) proj[a] += std::conj(alpha[e](a, 0)) * prod[e];
    for (auto& p : proj) p *= double(n) / order;

    Eigen::Index col = 0;
    proj[0].colwise().norm().maxCoeff(&col);
    Eigen::VectorXcd v0 = proj[0].col(col);
    v0.normalize();
    for (Eigen::Index i = 0; i < v0.size(); ++i)
        if (std::abs(v0(i)) > 1e-12) {
            v0 *= std::abs(v0(i)) / v0(i);
            break;
        }
    Eigen::MatrixXcd v(big, n);
    for (Eigen::Index a = 0; a < n; ++a) v.col(a) = proj[a] * v0;
    return v;
}

QGModel from_group(const std::string& name, const FiniteGroup& g) {
    QGModel::Data d;
    d.name = name;
    d.trivial = g.labels.front();
    d.truncation_note = "complete";
    const std::size_t k = g.labels.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int dim = int(g.reps[i].front().rows());
        d.irreps.push_back({g.labels[i], dim, RhoSpectrum::from_values(std::vector<double>(dim, 1.0)),
                            g.conjugates[i]});
    }
    std::map<FusionTable::Pair, CgList> cg;
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
            Rep prod;
            for (std::size_t e = 0; e < g.reps[b].size(); ++e)
                prod.push_back(kroneckerProduct(g.reps[b][e], g.reps[c][e]));
            FusionTable::Components comps;
            CgList list;
            for (std::size_t a = 0; a < k; ++a) {
                const int mult = int(std::lround(character_inner(g.reps[a], prod).real()));
                if (mult == 0) continue;
                if (mult > 1) throw ConsistencyError("group CG with multiplicity > 1 is not supported");
                comps[g.labels[a]] = mult;
                list.push_back({g.labels[a], g.labels[b], g.labels[c], 1, group_cg(g.reps[a], prod)});
            }
            d.fusion.set(g.labels[b], g.labels[c], std::move(comps));
            cg[{g.labels[b], g.labels[c]}] = std::move(list);
        }
    d.cg = std::make_shared<TableCgProvider>(std::move(cg));
    QGModel model(std::move(d));
    certify(model);
    return model;
}

}  // namespace

QGModel builtin_finite_group_dual(const std::string& spec) {
    if (spec == "s3") return from_group("s3", s3());
    std::string digits;
    if (spec.rfind("cyclic_", 0) == 0)
        digits = spec.substr(7);
    else if (spec.size() > 1 && spec[0] == 'z')
        digits = spec.substr(1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 4) {
        const int n = std::stoi(digits);
        if (n >= 1) {
            QGModel m = from_group("cyclic_" + digits, cyclic(n));
            auto data = m.data();
            data.parameters["n"] = n;
            return QGModel(std::move(data));
        }
    }
    throw PreconditionError("unsupported finite group '" + spec + "' (use s3 or cyclic_<n>)");
}

QGModel builtin_free_orthogonal_fund(const std::vector<double>& f_diag) {
    if (f_diag.empty()) throw PreconditionError("F_diag needs at least one entry");
    std::vector<double> sq;
    for (double f : f_diag) {
        if (!(f > 0) || !std::isfinite(f)) throw PreconditionError("F_diag entries must be positive");
        sq.push_back(f * f);
    }
    const NormalizedRho rho = normalize_rho(sq);
    QGModel::Data d;
    d.name = "free_orthogonal";
    for (std::size_t i = 0; i < f_diag.size(); ++i) d.parameters["f" + std::to_string(i + 1)] = f_diag[i];
    d.truncated = true;
    d.truncation_note = "fundamental representation only; products beyond the trivial irrep unavailable";
    d.trivial = "triv";
    d.irreps.push_back({"triv", 1, RhoSpectrum::from_values({1.0}), "triv"});
    const bool symmetric = symmetry_check(rho.spectrum, Tolerance::uniform(1e-12));
    const int n = int(f_diag.size());
    if (symmetric) {
        d.irreps.push_back({"u", n, rho.spectrum, "u"});
    } else {
        d.irreps.push_back({"u", n, rho.spectrum, "u_bar"});
        d.irreps.push_back({"u_bar", n, conjugate_spectrum(rho.spectrum), "u"});
    }
    std::map<FusionTable::Pair, CgList> cg;
    for (const auto& ir : d.irreps) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(ir.dim, ir.dim);
        d.fusion.set("triv", ir.label, {{ir.label, 1}});
        cg[{"triv", ir.label}] = {{ir.label, "triv", ir.label, 1, id}};
        if (ir.label != "triv") {
            d.fusion.set(ir.label, "triv", {{ir.label, 1}});
            cg[{ir.label, "triv"}] = {{ir.label, ir.label, "triv", 1, id}};
        }
    }
    d.cg = std::make_shared<TableCgProvider>(std::move(cg));
    QGModel model(std::move(d));
    certify(model);
    return model;
}

std::vector<BuiltinInfo> builtin_catalog() {
    return {
        {"su_q_2", "SU_q(2); --q, --max-level"},
        {"s3", "dual of the symmetric group S_3"},
        {"cyclic_<n>", "dual of the cyclic group Z_n (alias z<n>)"},
        {"free_orthogonal", "fundamental of O_F^+ for diagonal F; --f-diag"},
    };
}

}  // namespace cqg
