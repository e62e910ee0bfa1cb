#include "cqg/kac_degree.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "cqg/dimensions.hpp"
#include "cqg/fusion.hpp"

namespace cqg {

namespace {

bool rel_ge_one(double v, const Tolerance& tol) { return v >= 1.0 - tol.rel; }

double log_sum_exp(const std::vector<double>& xs) {
    double top = -INFINITY;
    for (double x : xs) top = std::max(top, x);
    if (!std::isfinite(top)) return top;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - top);
    return top + std::log(acc);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double ratio_d1_top(const Irrep& ir, const Tolerance& tol) {
    return ir.rho.trace() / double(top_eigenspace_dim(ir.rho, tol));
}

}  // namespace

KacVerdict is_kac(const QGModel& m, const Tolerance& tol) {
    KacVerdict v{true, true, true};
    double max_gamma = 1.0;
    for (const auto& ir : m.irreps()) {
        for (double x : ir.rho.values())
            if (std::abs(std::log(x)) > tol.eigen_group) v.by_spectra = false;
        max_gamma = std::max(max_gamma, gamma(ir.rho));
        if (std::abs(ir.rho.trace() - ir.dim) > tol.abs + tol.rel * ir.dim) v.by_qdim = false;
    }
    v.by_gamma = std::log(max_gamma) <= tol.eigen_group;
    return v;
}

DegreeBound n_G(const QGModel& m) {
    DegreeBound b;
    for (const auto& ir : m.irreps()) b.value = std::max(b.value, ir.dim);
    b.lower_bound = m.truncated();
    return b;
}

// ---------------------------------------------------------------- identities

IdentityVerdict identity_check(const std::vector<std::pair<IrrepLabel, int>>& blocks, int r,
                               IdentityStrategy strategy, std::uint64_t trials, std::uint64_t seed,
                               unsigned threads) {
    if (r < 2) throw PreconditionError("identity check needs r >= 2");
    if (blocks.empty()) throw PreconditionError("identity check needs at least one block");
    int max_n = 0;
    std::vector<std::tuple<IrrepLabel, int, int>> units;
    for (const auto& [l, n] : blocks) {
        if (n < 1) throw PreconditionError("block size must be positive");
        max_n = std::max(max_n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) units.emplace_back(l, i, j);
    }
    // Entry bound of S_r: r! * n^{r-1} * c^r with c the entry bound of the inputs.
    const double c = strategy == IdentityStrategy::random ? 3.0 : 1.0;
    const double log_bound = std::lgamma(r + 1.0) + (r - 1) * std::log(double(max_n)) + r * std::log(c);
    if (log_bound > std::log(9.0e18)) throw PreconditionError("identity check would overflow int64");

    std::uint64_t total = trials;
    if (strategy == IdentityStrategy::exhaustive) {
        const double count = std::pow(double(units.size()), r);
        if (count > 1e6) throw PreconditionError("exhaustive identity check exceeds 1e6 tuples");
        total = 1;
        for (int i = 0; i < r; ++i) total *= units.size();
    }

    auto zero_element = [&] {
        IntBlockElement e;
        for (const auto& [l, n] : blocks) e.blocks[l] = IntBlockElement::Matrix::Zero(n, n);
        return e;
    };
    auto make_args = [&](std::uint64_t idx) {
        std::vector<IntBlockElement> xs(r, zero_element());
        if (strategy == IdentityStrategy::exhaustive) {
            for (int a = r - 1; a >= 0; --a) {
                const auto& [l, i, j] = units[idx % units.size()];
                idx /= units.size();
                xs[a].blocks[l](i, j) = 1;
            }
        } else {
            std::mt19937_64 gen(splitmix64(seed ^ splitmix64(idx)));
            for (auto& x : xs)
                for (auto& [l, b] : x.blocks)
                    for (int i = 0; i < b.rows(); ++i)
                        for (int j = 0; j < b.cols(); ++j) b(i, j) = std::int64_t(gen() % 7) - 3;
        }
        return xs;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = unsigned(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 64)));
    constexpr std::uint64_t chunk = 64;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t start = next.fetch_add(chunk);
            if (start >= total || start > best.load()) return;
            const std::uint64_t stop = std::min(total, start + chunk);
            for (std::uint64_t idx = start; idx < stop; ++idx) {
                if (idx > best.load()) break;
                if (!standard_polynomial(make_args(idx)).is_zero()) {
                    std::uint64_t cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    break;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    IdentityVerdict v;
    const std::uint64_t w = best.load();
    if (w == std::numeric_limits<std::uint64_t>::max()) {
        v.tuples_checked = total;
        return v;
    }
    v.holds = false;
    v.tuples_checked = w + 1;
    v.witness_index = w;
    const auto xs = make_args(w);
    v.value = standard_polynomial(xs);
    std::uint64_t idx = w;
    v.witness.resize(r);
    for (int a = r - 1; a >= 0; --a) {
        if (strategy == IdentityStrategy::exhaustive) {
            const auto& [l, i, j] = units[idx % units.size()];
            idx /= units.size();
            v.witness[a].label = l;
            v.witness[a].row = i;
            v.witness[a].col = j;
        }
        v.witness[a].element = xs[a];
    }
    return v;
}

IdentityVerdict bounded_degree_identity_check(const QGModel& m, int r, IdentityStrategy strategy,
                                              std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    std::vector<std::pair<IrrepLabel, int>> blocks;
    for (const auto& ir : m.irreps()) blocks.emplace_back(ir.label, ir.dim);
    return identity_check(blocks, r, strategy, trials, seed, threads);
}

// ------------------------------------------------------------ Gamma calculus

std::size_t top_eigenspace_dim(const RhoSpectrum& s, const Tolerance& tol) {
    if (s.empty()) return 0;
    const double top = std::log(s[0]);
    std::size_t n = 0;
    for (double v : s.values())
        if (top - std::log(v) <= tol.eigen_group) ++n;
    return n;
}

Prop62Result prop_6_2_check(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta,
                            const IrrepLabel& gamma_label, const Tolerance& tol) {
    const Irrep& a = m.irrep(alpha);
    const Irrep& b = m.irrep(beta);
    const Irrep& g = m.irrep(gamma_label);
    const Decomposition d = decompose(m, alpha, beta);
    if (d.multiplicity(gamma_label) == 0)
        throw PreconditionError("hypothesis failed: " + gamma_label.id + " is not a component of " + alpha.id +
                                " (x) " + beta.id);
    const GammaTop top = gamma_top_components(m, alpha, beta, tol);
    const bool in_top = std::any_of(top.components.begin(), top.components.end(),
                                    [&](const auto& c) { return c.first == gamma_label; });
    if (!in_top) throw PreconditionError("hypothesis failed: Gamma(" + gamma_label.id + ") != Gamma(alpha) Gamma(beta)");
    const double mine = ratio_d1_top(g, tol);
    for (const auto& [l, mult] : top.components)
        if (ratio_d1_top(m.irrep(l), tol) > mine * (1.0 + tol.rel))
            throw PreconditionError("hypothesis failed: " + gamma_label.id +
                                    " does not maximize d_1 / dim H(Gamma); " + l.id + " does");

    Prop62Result r;
    r.value = g.rho.trace() * double(top_eigenspace_dim(a.rho, tol)) /
              (a.rho.trace() * gamma(b.rho) * double(top_eigenspace_dim(g.rho, tol)));
    r.pass = rel_ge_one(r.value, tol);
    return r;
}

RhoSpectrum ThetaForm::reconstruct() const {
    std::vector<double> v;
    if (kac_marker) return RhoSpectrum::from_values(std::vector<double>(size, 1.0));
    const double lg = std::log(gamma);
    for (double th : thetas) {
        v.push_back(std::exp(th * lg));
        v.push_back(std::exp(-th * lg));
    }
    if (odd) v.push_back(1.0);
    return RhoSpectrum::from_values(std::move(v));
}

ThetaForm theta_normal_form(const RhoSpectrum& s, const Tolerance& tol) {
    if (s.empty()) throw PreconditionError("theta normal form of an empty spectrum");
    if (!symmetry_check(s, tol)) throw PreconditionError("theta normal form needs a symmetric spectrum");
    ThetaForm f;
    f.size = s.size();
    f.odd = s.size() % 2 == 1;
    f.gamma = gamma(s);
    const double lg = std::log(f.gamma);
    if (lg <= tol.eigen_group) {
        f.kac_marker = true;
        f.gamma = 1.0;
        return f;
    }
    for (std::size_t j = 0; j < s.size() / 2; ++j)
        f.thetas.push_back(j == 0 ? 1.0 : std::clamp(std::log(s[j]) / lg, 0.0, 1.0));
    return f;
}

std::vector<SequenceStep> main_theorem_sequence(const QGModel& m, const IrrepLabel& alpha0, int steps,
                                                const Tolerance& tol) {
    if (steps < 0) throw PreconditionError("steps must be non-negative");
    const Irrep& a0 = m.irrep(alpha0);
    if (std::log(gamma(a0.rho)) <= tol.eigen_group)
        throw PreconditionError("sequence construction needs Gamma(alpha) > 1");

    auto make_step = [&](int k, const Irrep& ir) {
        SequenceStep s;
        s.k = k;
        s.label = ir.label;
        s.gamma = gamma(ir.rho);
        s.log_gamma = std::log(s.gamma);
        s.d1 = ir.rho.trace();
        s.dim_top = top_eigenspace_dim(ir.rho, tol);
        s.dim = ir.dim;
        return s;
    };
    std::vector<SequenceStep> seq{make_step(1, a0)};
    for (int k = 1; k <= steps; ++k) {
        const IrrepLabel& cur = seq.back().label;
        const GammaTop top = gamma_top_components(m, cur, cur, tol);
        if (top.violation)
            throw ConsistencyError("no component of " + cur.id + " (x) " + cur.id + " reaches Gamma^2");
        const Irrep* best = nullptr;
        double best_ratio = 0.0;
        for (const auto& [l, mult] : top.components) {
            const Irrep& c = m.irrep(l);
            const double ratio = ratio_d1_top(c, tol);
            bool take = best == nullptr || ratio > best_ratio * (1.0 + tol.rel);
            if (!take && ratio >= best_ratio * (1.0 - tol.rel))
                take = c.dim < best->dim || (c.dim == best->dim && c.label < best->label);
            if (take) {
                best = &c;
                best_ratio = std::max(best_ratio, ratio);
            }
        }
        seq.push_back(make_step(k + 1, *best));
    }
    return seq;
}

std::vector<Lemma63Entry> lemma_6_3_check(const std::vector<SequenceStep>& seq, const std::vector<int>& k_indices,
                                          double gamma_alpha, const Tolerance& tol) {
    for (std::size_t i = 0; i < k_indices.size(); ++i) {
        if (k_indices[i] < 1 || k_indices[i] > int(seq.size()))
            throw PreconditionError("k index out of range");
        if (i > 0 && k_indices[i] <= k_indices[i - 1]) throw PreconditionError("k indices must increase strictly");
    }
    const double lg = std::log(gamma_alpha);
    std::vector<Lemma63Entry> out;
    for (std::size_t i = 0; i + 1 < k_indices.size(); ++i) {
        const SequenceStep& a = seq[k_indices[i] - 1];
        const SequenceStep& b = seq[k_indices[i + 1] - 1];
        const double expo = std::ldexp(1.0, a.k - 1) - std::ldexp(1.0, b.k - 1);
        Lemma63Entry e;
        e.k_from = a.k;
        e.k_to = b.k;
        e.value = std::exp(std::log(b.d1) + std::log(double(a.dim_top)) - std::log(a.d1) -
                           std::log(double(b.dim_top)) + expo * lg);
        e.pass = rel_ge_one(e.value, tol);
        out.push_back(e);
    }
    return out;
}

RefineResult subsequence_refine(const QGModel& m, const std::vector<SequenceStep>& seq, double gamma_alpha,
                                std::size_t budget, const Tolerance& tol) {
    RefineResult r;
    std::vector<ThetaForm> thetas;
    for (const auto& s : seq) {
        r.dims.push_back(s.dim);
        thetas.push_back(theta_normal_form(m.irrep(s.label).rho, tol));
    }
    const double lg = std::log(gamma_alpha);

    // Exponent condition between positions i < j, in units of ln Gamma(alpha).
    auto dominated = [&](std::size_t i, std::size_t j) {
        const double pa = std::ldexp(1.0, seq[i].k - 1), pb = std::ldexp(1.0, seq[j].k - 1);
        const std::size_t half = thetas[i].thetas.size();
        for (std::size_t t = 0; t < half; ++t) {
            const double lhs = pb * thetas[j].thetas[t];
            const double rhs = pb - pa + pa * thetas[i].thetas[t];
            if ((lhs - rhs) * lg > tol.eigen_group) return false;
        }
        return true;
    };

    bool any_pair = false;
    const std::size_t n = seq.size();
    // longest[i]: longest valid chain starting at i, and its successor.
    std::vector<int> longest(n, 1), succ(n, -1);
    for (std::size_t i = n; i-- > 0;) {
        if (seq[i].dim < 2 || thetas[i].kac_marker) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (seq[j].dim != seq[i].dim || seq[j].k - seq[i].k < 2) continue;
            any_pair = true;
            if (++r.nodes_visited > budget) {
                r.outcome = RefineOutcome::exhausted;
                return r;
            }
            if (dominated(i, j) && longest[j] + 1 > longest[i]) {
                longest[i] = longest[j] + 1;
                succ[i] = int(j);
            }
        }
    }
    if (!any_pair) {
        r.outcome = RefineOutcome::dimension_escape;
        return r;
    }
    const auto start = std::max_element(longest.begin(), longest.end()) - longest.begin();
    if (longest[start] < 2) {
        r.outcome = RefineOutcome::exhausted;
        return r;
    }
    r.outcome = RefineOutcome::refined;
    r.dimension = seq[start].dim;
    for (int i = int(start); i >= 0; i = succ[i]) r.k_indices.push_back(seq[i].k);
    return r;
}

NierownoscResult nierownosc_eval(const StepWithTheta& a, const StepWithTheta& b, double gamma_alpha, int n_dim) {
    if (a.step.dim != n_dim || b.step.dim != n_dim || int(a.theta.size) != n_dim || int(b.theta.size) != n_dim)
        throw PreconditionError("both steps must have dimension N");
    if (a.theta.kac_marker || b.theta.kac_marker) throw PreconditionError("Kac step in the inequality chain");
    if (b.step.k - a.step.k < 2) throw PreconditionError("steps must be at least two apart");
    if (!(gamma_alpha > 1.0)) throw PreconditionError("Gamma(alpha) must exceed 1");

    const double lg = std::log(gamma_alpha);
    const double pa = std::ldexp(1.0, a.step.k - 1), pb = std::ldexp(1.0, b.step.k - 1);
    const double shift = pa - pb;
    const std::size_t half = std::size_t(n_dim) / 2;
    const bool odd = n_dim % 2 == 1;

    // Exponents of Gamma(alpha); the t-term contributes exponent 0 (or shift).
    std::vector<double> num_mid, den, num_final;
    for (std::size_t j = 0; j < half; ++j) {
        const double tb = b.theta.thetas[j], ta = a.theta.thetas[j];
        num_mid.push_back(pb * tb * lg);
        num_mid.push_back(-pb * tb * lg);
        den.push_back(pa * ta * lg);
        den.push_back(-pa * ta * lg);
        num_final.push_back(pa * ta * lg);
        num_final.push_back((pa - pb * (tb + 1.0)) * lg);
    }
    if (odd) {
        num_mid.push_back(0.0);
        den.push_back(0.0);
        num_final.push_back(shift * lg);
    }
    NierownoscResult r;
    const double log_den = log_sum_exp(den);
    r.lower_bound_value = std::exp(log_sum_exp(num_mid) - log_den + shift * lg);
    r.final_bound_value = std::exp(log_sum_exp(num_final) - log_den);
    return r;
}

ProbeResult corollary_6_5_probe(const QGModel& m, const std::vector<ProbeWord>& u, int bound, int budget,
                                const Tolerance& tol) {
    if (u.empty()) throw PreconditionError("empty word");
    // U as a list of irreducible tensor factors; conj(U) reverses and conjugates.
    std::vector<IrrepLabel> factors;
    double log_gamma_u = 0.0;
    for (const auto& w : u) {
        if (w.power == 0) continue;
        const IrrepLabel l = w.power > 0 ? w.label : m.conjugate(w.label);
        for (int i = 0; i < std::abs(w.power); ++i) {
            factors.push_back(l);
            log_gamma_u += std::log(gamma(m.irrep(l).rho));
        }
    }
    if (factors.empty()) throw PreconditionError("empty word");
    if (log_gamma_u <= tol.eigen_group) throw PreconditionError("Gamma(U) = 1; the probe needs Gamma(U) > 1");
    std::vector<IrrepLabel> conj_factors;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) conj_factors.push_back(m.conjugate(*it));

    ProbeResult r;
    std::set<FusionTable::Pair> missing;
    auto multiply = [&](const std::set<IrrepLabel>& from, const std::vector<IrrepLabel>& word) {
        std::set<IrrepLabel> cur = from;
        for (const auto& f : word) {
            std::set<IrrepLabel> next;
            for (const auto& l : cur) {
                const auto* comps = m.fusion().find(l, f);
                if (!comps) {
                    missing.insert({l, f});
                    continue;
                }
                for (const auto& [c, k] : *comps)
                    if (k > 0) next.insert(c);
            }
            cur = std::move(next);
        }
        return cur;
    };

    std::set<IrrepLabel> level{m.trivial()};
    for (int k = 1; k <= budget; ++k) {
        std::set<IrrepLabel> next = multiply(level, factors);
        for (const auto& l : multiply(level, conj_factors)) next.insert(l);
        level = std::move(next);
        const Irrep* best = nullptr;
        for (const auto& l : level) {
            const Irrep& ir = m.irrep(l);
            if (ir.dim > bound && (!best || ir.dim < best->dim || (ir.dim == best->dim && ir.label < best->label)))
                best = &ir;
        }
        if (best) {
            r.witness = best->label;
            r.witness_dim = best->dim;
            r.factors_used = k;
            break;
        }
        if (level.empty()) break;
    }
    r.truncations.assign(missing.begin(), missing.end());
    return r;
}

TrapReport consistency_trap(const QGModel& m, int sequence_steps, std::uint64_t seed, const Tolerance& tol) {
    TrapReport t;
    t.validated = !m.truncated() && validate_model(m, tol).ok();
    const DegreeBound nb = n_G(m);
    const int r = 2 * nb.value;
    std::size_t units = 0;
    for (const auto& ir : m.irreps()) units += std::size_t(ir.dim) * ir.dim;
    try {
        const bool exhaustive = std::pow(double(units), r) <= 1e6;
        t.bounded_degree = bounded_degree_identity_check(m, r,
                                                         exhaustive ? IdentityStrategy::exhaustive
                                                                    : IdentityStrategy::random,
                                                         200, seed)
                               .holds;
    } catch (const PreconditionError&) {
        t.bounded_degree = false;
    }
    if (is_kac(m, tol).kac()) return t;

    for (const auto& ir : m.irreps()) {
        if (std::log(gamma(ir.rho)) <= tol.eigen_group) continue;
        try {
            const auto seq = main_theorem_sequence(m, ir.label, sequence_steps, tol);
            const RefineResult ref = subsequence_refine(m, seq, gamma(ir.rho), 100000, tol);
            if (ref.outcome != RefineOutcome::refined) continue;
            for (std::size_t i = 0; i + 1 < ref.k_indices.size(); ++i) {
                const SequenceStep& a = seq[ref.k_indices[i] - 1];
                const SequenceStep& b = seq[ref.k_indices[i + 1] - 1];
                const NierownoscResult n = nierownosc_eval({a, theta_normal_form(m.irrep(a.label).rho, tol)},
                                                           {b, theta_normal_form(m.irrep(b.label).rho, tol)},
                                                           gamma(ir.rho), ref.dimension);
                if (n.lower_bound_value >= 1.0 - tol.rel && n.final_bound_value < 1.0)
                    t.refined_and_contradictory = true;
            }
        } catch (const Error&) {
            continue;
        }
    }
    return t;
}

}  // namespace cqg
