#include "cqg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cqg/dimensions.hpp"
#include "cqg/fusion.hpp"
#include "cqg/intertwiners.hpp"
#include "cqg/kac_degree.hpp"
#include "cqg/models.hpp"
#include "cqg/report.hpp"
#include "cqg/spectral.hpp"

namespace cqg::cli {

QGModel resolve_model(const ModelOptions& o) {
    std::string name = o.model;
    const bool explicit_builtin = name.rfind("builtin:", 0) == 0;
    if (explicit_builtin) name = name.substr(8);
    if (!explicit_builtin && (std::filesystem::exists(name) || name.ends_with(".json")))
        return load_model_file(name, o.tol);
    if (name == "su_q_2" || name == "suq2") return builtin_su_q_2(o.q, o.max_level);
    if (name == "free_orthogonal" || name == "o_f") return builtin_free_orthogonal_fund(o.f_diag);
    return builtin_finite_group_dual(name);
}

namespace {

struct Options {
    ModelOptions model;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    std::uint64_t trials = 1000;
    std::string format = "table";
    std::string out;
    std::vector<double> t;
    int r = 0;
    std::string strategy = "auto";
    std::string alpha, beta, gamma;
    int n = 3;
    int steps = 3;
    int bound = 20;
    int budget = 20;
    unsigned threads = 0;
};

ojson labels_json(const std::vector<IrrepLabel>& ls) {
    ojson a = ojson::array();
    for (const auto& l : ls) a.push_back(l.id);
    return a;
}

ojson violation_json(const Violation& v) {
    ojson j;
    j["kind"] = v.kind;
    j["labels"] = labels_json(v.labels);
    j["residual"] = v.residual;
    j["detail"] = v.detail;
    return j;
}

ojson pair_json(const FusionTable::Pair& p) {
    ojson j;
    j["left"] = p.first.id;
    j["right"] = p.second.id;
    return j;
}

std::string spectrum_string(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : ";") + format_number(x);
    return s;
}

std::vector<IrrepLabel> selected(const QGModel& m, const std::string& label) {
    if (!label.empty()) {
        m.irrep(label);
        return {label};
    }
    std::vector<IrrepLabel> out;
    for (const auto& ir : m.irreps()) out.push_back(ir.label);
    return out;
}

using Handler = std::function<int(const Options&, Report&)>;

int cmd_models(const Options&, Report& r) {
    for (const auto& b : builtin_catalog()) r.results.push_back({{"name", b.name}, {"description", b.description}});
    return pass;
}

int cmd_dims(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const std::vector<double> ts = o.t.empty() ? std::vector<double>{0, 1, 2} : o.t;
    r.parameters["t"] = ts;
    for (const auto& ir : m.irreps()) {
        ojson row;
        row["label"] = ir.label.id;
        for (double t : ts) row["d_" + format_number(t)] = dim_t(ir.rho, t);
        r.results.push_back(row);
    }
    return pass;
}

int cmd_spectra(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const Tolerance tol = Tolerance::uniform(o.tol);
    for (const auto& ir : m.irreps()) {
        const EigenLists l = eigen_lists(ir.rho);
        ojson row;
        row["label"] = ir.label.id;
        row["dim"] = ir.dim;
        row["conjugate"] = ir.conjugate.id;
        row["gamma"] = gamma(ir.rho);
        row["d_1"] = ir.rho.trace();
        row["forward"] = spectrum_string(l.forward);
        row["backward"] = spectrum_string(l.backward);
        row["symmetric"] = symmetry_check(ir.rho, tol);
        r.results.push_back(row);
    }
    return pass;
}

int cmd_fusion(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    for (const auto& [pair, comps] : m.fusion().entries()) {
        if (!o.alpha.empty() && pair.first.id != o.alpha) continue;
        if (!o.beta.empty() && pair.second.id != o.beta) continue;
        const Decomposition d = decompose(m, pair.first, pair.second);
        std::string s;
        for (const auto& [l, k] : d.components) s += (s.empty() ? "" : " + ") + (k > 1 ? std::to_string(k) + "*" : "") + l.id;
        r.results.push_back({{"left", pair.first.id}, {"right", pair.second.id}, {"components", s}});
    }
    return pass;
}

int cmd_cg(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    if (o.beta.empty() || o.gamma.empty()) throw CLI::ValidationError("cg needs --beta and --gamma");
    r.parameters["beta"] = o.beta;
    r.parameters["gamma"] = o.gamma;
    const CgList list = cg_set(m, o.beta, o.gamma);
    const int ng = m.irrep(o.gamma).dim;
    for (const auto& v : list)
        for (int a = 0; a < v.coeffs.cols(); ++a)
            for (int row = 0; row < v.coeffs.rows(); ++row) {
                const auto c = v.coeffs(row, a);
                if (std::abs(c) < 1e-14) continue;
                r.results.push_back({{"alpha", v.alpha.id}, {"copy", v.copy}, {"a", a + 1}, {"b", row / ng + 1},
                                     {"c", row % ng + 1}, {"re", c.real()}, {"im", c.imag()}});
            }
    const UnitarityReport u = verify_cg_unitarity(list);
    const double intertwining = cg_rho_intertwining_residual(m, list);
    r.parameters["unitarity_residual"] = u.max();
    r.parameters["rho_intertwining_residual"] = intertwining;
    if (u.max() > o.tol || intertwining > o.tol) {
        r.violations.push_back({{"kind", "cg_unitarity"}, {"residual", std::max(u.max(), intertwining)}});
        return finding;
    }
    return pass;
}

int cmd_theorem_5_3(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const Tolerance tol = Tolerance::uniform(o.tol);
    r.parameters["tol"] = o.tol;
    int status = pass;
    for (const auto& a : selected(m, o.alpha))
        for (const auto& b : selected(m, o.beta))
            for (const auto& p : spectral_grid(m, a, b, 4, tol)) {
                const Theorem53Result res = verify_theorem_5_3(m, a, b, p.s, p.t, tol);
                ojson row{{"alpha", a.id}, {"beta", b.id}, {"s", p.s},       {"t", p.t},
                          {"probe", p.probe}, {"rel_eq1", res.relative_eq1}, {"rel_eq2", res.relative_eq2}};
                if (res.truncated()) {
                    r.truncations.push_back({{"alpha", a.id}, {"beta", b.id}, {"s", p.s}, {"t", p.t},
                                             {"eq1", res.truncated_eq1}, {"eq2", res.truncated_eq2}});
                    continue;
                }
                r.results.push_back(row);
                const bool ok = p.probe ? std::max({res.lhs_norm_eq1, res.rhs_norm_eq1, res.lhs_norm_eq2,
                                                    res.rhs_norm_eq2}) <= o.tol
                                        : std::max(res.relative_eq1, res.relative_eq2) <= o.tol;
                if (!ok) {
                    r.violations.push_back({{"kind", "theorem_5_3"}, {"alpha", a.id}, {"beta", b.id}, {"s", p.s},
                                            {"t", p.t}, {"residual", std::max(res.relative_eq1, res.relative_eq2)}});
                    status = finding;
                }
            }
    return status;
}

int cmd_haar_modular(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    int status = pass;
    for (const auto& a : selected(m, o.alpha)) {
        const ModularReport mod = verify_modular(m, a);
        auto emit = [&](const std::vector<BlockResidual>& blocks, const char* side) {
            for (const auto& b : blocks) {
                if (b.truncated) {
                    r.truncations.push_back({{"alpha", a.id}, {"identity", side}, {"block", b.block.id}});
                    continue;
                }
                r.results.push_back({{"alpha", a.id}, {"identity", side}, {"block", b.block.id},
                                     {"residual", b.residual}});
                if (b.residual > o.tol) {
                    r.violations.push_back({{"kind", std::string("modular_") + side}, {"alpha", a.id},
                                            {"block", b.block.id}, {"residual", b.residual}});
                    status = finding;
                }
            }
        };
        emit(mod.left, "left");
        emit(mod.right, "right");
        const CoassociativityReport co = verify_coassociativity(m, a);
        r.results.push_back({{"alpha", a.id}, {"identity", "coassociativity"}, {"block", "*"},
                             {"residual", co.max_residual}, {"complete_blocks", co.complete_blocks},
                             {"skipped_blocks", co.skipped_blocks}});
        if (co.max_residual > o.tol) {
            r.violations.push_back({{"kind", "coassociativity"}, {"alpha", a.id}, {"residual", co.max_residual}});
            status = finding;
        }
    }
    return status;
}

int cmd_symmetry(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const Tolerance tol = Tolerance::uniform(o.tol);
    int status = pass;
    for (const auto& a : selected(m, o.alpha)) {
        const SymmetryByConjugate s = symmetry_by_conjugate(m, a, tol);
        const EigenLists l = eigen_lists(m.irrep(a).rho);
        r.results.push_back({{"label", a.id},
                             {"forward", spectrum_string(l.forward)},
                             {"backward", spectrum_string(l.backward)},
                             {"symmetric", s.symmetric},
                             {"verdict", s.verdict == SymmetryVerdict::forced_symmetric ? "forced_symmetric"
                                                                                        : "no_conclusion"}});
        if (s.violation) {
            r.violations.push_back({{"kind", "symmetry"}, {"label", a.id}});
            status = finding;
        }
    }
    return status;
}

int cmd_frobenius(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const ValidationReport v = validate_model(m, Tolerance::uniform(o.tol));
    r.results.push_back({{"check", "validate_model"},
                         {"frobenius_triples_checked", v.frobenius_triples_checked},
                         {"violations", v.violations.size()}});
    for (const auto& x : v.violations) r.violations.push_back(violation_json(x));
    return v.ok() ? pass : finding;
}

int cmd_growth(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const Tolerance tol = Tolerance::uniform(o.tol);
    const std::vector<double> ts = o.t.empty() ? std::vector<double>{2, 3} : o.t;
    r.parameters["t"] = ts;
    r.parameters["n"] = o.n;
    int status = pass;
    for (const auto& a : selected(m, o.alpha))
        for (int n = 1; n <= o.n; ++n)
            for (double t : ts) {
                try {
                    const GrowthReport g = growth_inequality_check(m, a, n, t, tol);
                    r.results.push_back({{"alpha", a.id}, {"n", n}, {"t", t}, {"P_n", g.p_n},
                                         {"lhs_forward", g.lhs_forward}, {"rhs_forward", g.rhs_forward},
                                         {"lhs_backward", g.lhs_backward}, {"rhs_backward", g.rhs_backward},
                                         {"pass", g.pass}});
                    if (!g.pass) {
                        r.violations.push_back({{"kind", "growth"}, {"alpha", a.id}, {"n", n}, {"t", t}});
                        status = finding;
                    }
                } catch (const TruncationError& e) {
                    r.truncations.push_back({{"alpha", a.id}, {"n", n}, {"t", t}, {"left", e.left().id},
                                             {"right", e.right().id}});
                }
            }
    return status;
}

int cmd_kac(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const KacVerdict k = is_kac(m, Tolerance::uniform(o.tol));
    const DegreeBound nb = n_G(m);
    r.results.push_back({{"kac", k.kac()},
                         {"by_spectra", k.by_spectra},
                         {"by_gamma", k.by_gamma},
                         {"by_qdim", k.by_qdim},
                         {"N_G", nb.value},
                         {"N_G_lower_bound", nb.lower_bound}});
    if (!k.consistent()) {
        r.violations.push_back({{"kind", "kac_predicates_disagree"}});
        return finding;
    }
    return pass;
}

ojson witness_json(const IdentityVerdict& v, bool exhaustive) {
    ojson a = ojson::array();
    for (const auto& w : v.witness) {
        if (exhaustive) {
            a.push_back({{"label", w.label.id}, {"row", w.row + 1}, {"col", w.col + 1}});
            continue;
        }
        ojson blocks = ojson::object();
        for (const auto& [l, b] : w.element.blocks) {
            ojson rows = ojson::array();
            for (int i = 0; i < b.rows(); ++i) {
                ojson row = ojson::array();
                for (int j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
                rows.push_back(row);
            }
            blocks[l.id] = rows;
        }
        a.push_back(blocks);
    }
    return a;
}

int cmd_bounded_degree(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const DegreeBound nb = n_G(m);
    const int deg = o.r > 0 ? o.r : 2 * nb.value;
    std::size_t units = 0;
    for (const auto& ir : m.irreps()) units += std::size_t(ir.dim) * ir.dim;
    IdentityStrategy strat;
    if (o.strategy == "exhaustive")
        strat = IdentityStrategy::exhaustive;
    else if (o.strategy == "random")
        strat = IdentityStrategy::random;
    else if (o.strategy == "auto")
        strat = std::pow(double(units), deg) <= 1e6 ? IdentityStrategy::exhaustive : IdentityStrategy::random;
    else
        throw CLI::ValidationError("--strategy must be exhaustive, random or auto");
    const bool exhaustive = strat == IdentityStrategy::exhaustive;
    r.parameters = {{"r", deg}, {"strategy", exhaustive ? "exhaustive" : "random"}};
    if (!exhaustive) {
        r.parameters["trials"] = o.trials;
        r.parameters["seed"] = o.seed;
    }
    const IdentityVerdict v = bounded_degree_identity_check(m, deg, strat, o.trials, o.seed, o.threads);
    r.results.push_back({{"r", deg}, {"N_G", nb.value}, {"holds", v.holds}, {"tuples_checked", v.tuples_checked}});
    if (v.holds) return pass;
    ojson value = ojson::object();
    for (const auto& [l, b] : v.value.blocks) {
        ojson rows = ojson::array();
        for (int i = 0; i < b.rows(); ++i) {
            ojson row = ojson::array();
            for (int j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
            rows.push_back(row);
        }
        value[l.id] = rows;
    }
    r.violations.push_back({{"kind", "standard_polynomial_nonzero"},
                            {"tuple_index", *v.witness_index},
                            {"witness", witness_json(v, exhaustive)},
                            {"value", value}});
    return finding;
}

int cmd_main_theorem(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const Tolerance tol = Tolerance::uniform(o.tol);
    IrrepLabel alpha = o.alpha;
    if (alpha.id.empty())
        for (const auto& ir : m.irreps())
            if (std::log(gamma(ir.rho)) > tol.eigen_group) {
                alpha = ir.label;
                break;
            }
    if (alpha.id.empty()) throw PreconditionError("no irrep with Gamma > 1; the model is of Kac type");
    r.parameters = {{"alpha", alpha.id}, {"steps", o.steps}, {"budget", o.budget}};
    const auto seq = main_theorem_sequence(m, alpha, o.steps, tol);
    const double ga = seq.front().gamma;
    for (const auto& s : seq)
        r.results.push_back({{"k", s.k}, {"label", s.label.id}, {"Gamma", s.gamma}, {"log_Gamma", s.log_gamma},
                             {"d_1", s.d1}, {"dim_top", s.dim_top}, {"dim", s.dim}});
    std::vector<int> ks;
    for (const auto& s : seq) ks.push_back(s.k);
    int status = pass;
    ojson lemma = ojson::array();
    for (const auto& e : lemma_6_3_check(seq, ks, ga, tol)) {
        lemma.push_back({{"k_from", e.k_from}, {"k_to", e.k_to}, {"value", e.value}, {"pass", e.pass}});
        if (!e.pass) {
            r.violations.push_back({{"kind", "lemma_6_3"}, {"k_from", e.k_from}, {"k_to", e.k_to}, {"value", e.value}});
            status = finding;
        }
    }
    r.parameters["lemma_6_3"] = lemma;
    const RefineResult ref = subsequence_refine(m, seq, ga, std::size_t(std::max(o.budget, 0)) * 1000, tol);
    const char* names[] = {"refined", "dimension_escape", "exhausted"};
    r.parameters["refine_outcome"] = names[int(ref.outcome)];
    r.parameters["dims"] = ref.dims;
    if (ref.outcome == RefineOutcome::refined) {
        r.parameters["k_indices"] = ref.k_indices;
        for (std::size_t i = 0; i + 1 < ref.k_indices.size(); ++i) {
            const SequenceStep& a = seq[ref.k_indices[i] - 1];
            const SequenceStep& b = seq[ref.k_indices[i + 1] - 1];
            const NierownoscResult n = nierownosc_eval({a, theta_normal_form(m.irrep(a.label).rho, tol)},
                                                       {b, theta_normal_form(m.irrep(b.label).rho, tol)}, ga,
                                                       ref.dimension);
            r.violations.push_back({{"kind", "refined_subsequence"}, {"k_from", a.k}, {"k_to", b.k},
                                    {"lower_bound_value", n.lower_bound_value},
                                    {"final_bound_value", n.final_bound_value}});
        }
        status = finding;
    }
    return status;
}

int cmd_corollary_6_5(const Options& o, Report& r) {
    const QGModel m = resolve_model(o.model);
    r.model = model_summary(m);
    const Tolerance tol = Tolerance::uniform(o.tol);
    IrrepLabel u = o.alpha;
    if (u.id.empty())
        for (const auto& ir : m.irreps())
            if (std::log(gamma(ir.rho)) > tol.eigen_group) {
                u = ir.label;
                break;
            }
    if (u.id.empty()) throw PreconditionError("no irrep with Gamma > 1; the model is of Kac type");
    r.parameters = {{"U", u.id}, {"bound", o.bound}, {"budget", o.budget}};
    const ProbeResult p = corollary_6_5_probe(m, {{u, 1}}, o.bound, o.budget, tol);
    for (const auto& t : p.truncations) r.truncations.push_back(pair_json(t));
    if (!p.witness) {
        r.results.push_back({{"witness", nullptr}, {"factors_used", o.budget}});
        r.violations.push_back({{"kind", "probe_exhausted"}, {"budget", o.budget}});
        return finding;
    }
    r.results.push_back({{"witness", p.witness->id}, {"dim", p.witness_dim}, {"factors_used", p.factors_used}});
    return pass;
}

int cmd_export(const Options& o, std::ostream& os) {
    const QGModel m = resolve_model(o.model);
    os << model_to_json(m).dump(2) << '\n';
    return pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation data toolkit for compact quantum groups", "cqg"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    std::string f_diag;

    app.add_option("--model", o.model.model, "builtin:<name>, a built-in name, or a model JSON file");
    app.add_option("--q", o.model.q, "deformation parameter for su_q_2");
    app.add_option("--max-level", o.model.max_level, "highest su_q_2 label")->check(CLI::NonNegativeNumber);
    app.add_option("--f-diag", o.model.f_diag, "diagonal of F for free_orthogonal")->delimiter(',');
    app.add_option("--tol", o.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--trials", o.trials, "random trials");
    app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
    app.add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", o.out, "write the report to this file");
    app.add_option("--t", o.t, "comma-separated t values")->delimiter(',');
    app.add_option("--r", o.r, "degree of the standard polynomial")->check(CLI::NonNegativeNumber);
    app.add_option("--strategy", o.strategy, "exhaustive, random or auto");
    app.add_option("--alpha", o.alpha, "irrep label");
    app.add_option("--beta", o.beta, "irrep label");
    app.add_option("--gamma", o.gamma, "irrep label");
    app.add_option("--n", o.n, "tensor power")->check(CLI::PositiveNumber);
    app.add_option("--steps", o.steps, "sequence steps")->check(CLI::NonNegativeNumber);
    app.add_option("--bound", o.bound, "dimension bound");
    app.add_option("--budget", o.budget, "search budget")->check(CLI::NonNegativeNumber);

    Handler handler;
    std::string command;
    bool export_cmd = false;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h,
                    const std::string& full) {
        parent->add_subcommand(name, desc)->callback([&, h, full] {
            handler = h;
            command = full;
        });
    };
    leaf(&app, "models", "list built-in models", cmd_models, "models");
    leaf(&app, "dims", "d_t table", cmd_dims, "dims");
    leaf(&app, "spectra", "rho spectra", cmd_spectra, "spectra");
    leaf(&app, "fusion", "fusion table", cmd_fusion, "fusion");
    leaf(&app, "cg", "Clebsch-Gordan coefficients for --beta (x) --gamma", cmd_cg, "cg");
    leaf(&app, "kac", "Kac-type predicates and N_G", cmd_kac, "kac");
    leaf(&app, "bounded-degree", "standard polynomial identity check", cmd_bounded_degree, "bounded-degree");
    auto* verify = app.add_subcommand("verify", "verification sweeps");
    verify->require_subcommand(1);
    leaf(verify, "theorem-5.3", "spectral identities for the Haar weight", cmd_theorem_5_3, "verify theorem-5.3");
    leaf(verify, "haar-modular", "modular identities and coassociativity", cmd_haar_modular, "verify haar-modular");
    leaf(verify, "symmetry", "forward/backward eigenvalue lists", cmd_symmetry, "verify symmetry");
    leaf(verify, "frobenius", "full model validation", cmd_frobenius, "verify frobenius");
    leaf(verify, "growth", "tensor power growth inequality", cmd_growth, "verify growth");
    auto* explore = app.add_subcommand("explore", "main theorem machinery");
    explore->require_subcommand(1);
    leaf(explore, "main-theorem", "sequence, lemma and subsequence search", cmd_main_theorem, "explore main-theorem");
    leaf(explore, "corollary-6.5", "search for large components of powers of U", cmd_corollary_6_5,
         "explore corollary-6.5");
    app.add_subcommand("export", "write the model as JSON")->callback([&] { export_cmd = true; });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return pass;
    } catch (const CLI::ParseError& e) {
        err << "cqg: " << e.what() << '\n';
        return usage;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "cqg: cannot open " << o.out << '\n';
            return usage;
        }
    }
    std::ostream& os = o.out.empty() ? out : file;
    o.model.tol = Tolerance::uniform(o.tol);
    try {
        if (export_cmd) return cmd_export(o, os);
        if (!handler) {
            err << "cqg: no command\n";
            return usage;
        }
        Report r;
        r.command = command;
        const int status = handler(o, r);
        render(r, parse_format(o.format), os);
        return status;
    } catch (const CLI::Error& e) {
        err << "cqg: " << e.what() << '\n';
        return usage;
    } catch (const ConsistencyError& e) {
        err << "cqg: " << e.what() << '\n';
        return finding;
    } catch (const std::exception& e) {
        err << "cqg: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace cqg::cli
