#include "cqg/rep_data.hpp"

#include "cqg/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace cqg {

bool valid(const Tolerance& tol) {
    return tol.abs >= 0 && tol.rel >= 0 && tol.eigen_group >= 0;
}

// ---------------------------------------------------------------- spectra

RhoSpectrum RhoSpectrum::from_values(std::vector<double> values) {
    for (double v : values) {
        if (!(v > 0) || !std::isfinite(v)) {
            std::ostringstream os;
            os << "rho eigenvalue " << v << " is not a positive finite number";
            throw ConsistencyError(os.str());
        }
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    RhoSpectrum s;
    s.values_ = std::move(values);
    return s;
}

double RhoSpectrum::trace() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double RhoSpectrum::inverse_trace() const {
    double acc = 0.0;
    for (double v : values_) acc += 1.0 / v;
    return acc;
}

double RhoSpectrum::trace_balance_residual() const {
    return std::abs(trace() - inverse_trace());
}

RhoSpectrum conjugate_spectrum(const RhoSpectrum& s) {
    std::vector<double> inv;
    inv.reserve(s.size());
    for (double v : s.values()) inv.push_back(1.0 / v);
    return RhoSpectrum::from_values(std::move(inv));
}

RhoSpectrum tensor(const RhoSpectrum& a, const RhoSpectrum& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a.values())
        for (double y : b.values()) out.push_back(x * y);
    return RhoSpectrum::from_values(std::move(out));
}

RhoSpectrum direct_sum(const RhoSpectrum& a, const RhoSpectrum& b) {
    std::vector<double> out = a.values();
    out.insert(out.end(), b.values().begin(), b.values().end());
    return RhoSpectrum::from_values(std::move(out));
}

NormalizedRho normalize_rho(const std::vector<double>& diag) {
    if (diag.empty()) throw ConsistencyError("normalize_rho: empty diagonal");
    double sum = 0.0, inv_sum = 0.0;
    for (double d : diag) {
        if (!(d > 0) || !std::isfinite(d))
            throw ConsistencyError("normalize_rho: entries must be positive");
        sum += d;
        inv_sum += 1.0 / d;
    }
    const double c = std::sqrt(inv_sum / sum);
    std::vector<double> scaled;
    scaled.reserve(diag.size());
    for (double d : diag) scaled.push_back(c * d);
    return {RhoSpectrum::from_values(std::move(scaled)), c};
}

bool same_multiset(const RhoSpectrum& a, const RhoSpectrum& b, double log_tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(std::log(a[i]) - std::log(b[i])) > log_tol) return false;
    return true;
}

// ----------------------------------------------------------------- fusion

void FusionTable::set(const IrrepLabel& beta, const IrrepLabel& gamma, Components components) {
    entries_[{beta, gamma}] = std::move(components);
}

bool FusionTable::ingested(const IrrepLabel& beta, const IrrepLabel& gamma) const {
    return entries_.count({beta, gamma}) != 0;
}

const FusionTable::Components* FusionTable::find(const IrrepLabel& beta,
                                                 const IrrepLabel& gamma) const {
    auto it = entries_.find({beta, gamma});
    return it == entries_.end() ? nullptr : &it->second;
}

std::optional<int> FusionTable::multiplicity(const IrrepLabel& alpha, const IrrepLabel& beta,
                                             const IrrepLabel& gamma) const {
    const Components* c = find(beta, gamma);
    if (!c) return std::nullopt;
    auto it = c->find(alpha);
    return it == c->end() ? 0 : it->second;
}

// ------------------------------------------------------------------ model

QGModel::QGModel(Data data) : data_(std::move(data)) {
    for (std::size_t i = 0; i < data_.irreps.size(); ++i) {
        const auto& ir = data_.irreps[i];
        if (ir.label.id.empty()) throw SchemaError("irrep with empty label");
        if (!index_.emplace(ir.label.id, i).second)
            throw SchemaError("duplicate irrep label '" + ir.label.id + "'");
        if (ir.dim < 1) throw SchemaError("irrep '" + ir.label.id + "' has dim < 1");
    }
    if (!contains(data_.trivial))
        throw SchemaError("trivial label '" + data_.trivial.id + "' is not an irrep");
    for (const auto& ir : data_.irreps)
        if (!contains(ir.conjugate))
            throw ConsistencyError("conjugate '" + ir.conjugate.id + "' of '" + ir.label.id +
                                   "' is not an irrep");
    for (const auto& [pair, comps] : data_.fusion.entries()) {
        if (!contains(pair.first) || !contains(pair.second))
            throw SchemaError("fusion pair (" + pair.first.id + ", " + pair.second.id +
                              ") names an unknown irrep");
        for (const auto& [lab, mult] : comps) {
            if (!contains(lab))
                throw SchemaError("fusion component '" + lab.id + "' is not an irrep");
            if (mult < 1) throw SchemaError("fusion multiplicities must be >= 1");
        }
    }
}

const Irrep& QGModel::irrep(const IrrepLabel& l) const {
    auto it = index_.find(l.id);
    if (it == index_.end()) throw UnknownLabel(l);
    return data_.irreps[it->second];
}

std::size_t QGModel::index_of(const IrrepLabel& l) const {
    auto it = index_.find(l.id);
    if (it == index_.end()) throw UnknownLabel(l);
    return it->second;
}

std::shared_ptr<const CgList> QGModel::cg_tensors(const IrrepLabel& beta,
                                                  const IrrepLabel& gamma) const {
    if (!data_.cg) return nullptr;
    return data_.cg->tensors(beta, gamma);
}

QGModel QGModel::with_cg(std::shared_ptr<const CgProvider> cg) const {
    Data d = data_;
    d.cg = std::move(cg);
    return QGModel(std::move(d));
}

TableCgProvider::TableCgProvider(std::map<FusionTable::Pair, CgList> table) {
    for (auto& [k, v] : table) table_.emplace(k, std::make_shared<const CgList>(std::move(v)));
}

std::shared_ptr<const CgList> TableCgProvider::tensors(const IrrepLabel& beta,
                                                       const IrrepLabel& gamma) const {
    auto it = table_.find({beta, gamma});
    return it == table_.end() ? nullptr : it->second;
}

// ------------------------------------------------------------- validation

namespace {

bool close(double a, double b, const Tolerance& tol) {
    return std::abs(a - b) <= tol.abs + tol.rel * std::max(std::abs(a), std::abs(b));
}

void add(ValidationReport& r, std::string kind, std::vector<IrrepLabel> labels, double residual,
         std::string detail) {
    r.violations.push_back({std::move(kind), std::move(labels), residual, std::move(detail)});
}

}  // namespace

ValidationReport validate_model(const QGModel& m, const Tolerance& tol) {
    ValidationReport r;
    const double log_tol = std::max(tol.eigen_group, tol.rel);

    for (const auto& ir : m.irreps()) {
        if (static_cast<int>(ir.rho.size()) != ir.dim) {
            add(r, "spectrum_length", {ir.label}, std::abs(double(ir.rho.size()) - ir.dim),
                "rho has " + std::to_string(ir.rho.size()) + " entries, dim is " +
                    std::to_string(ir.dim));
            continue;
        }
        if (!close(ir.rho.trace(), ir.rho.inverse_trace(), tol))
            add(r, "trace_balance", {ir.label}, ir.rho.trace_balance_residual(),
                "sum(rho) != sum(1/rho)");
        const Irrep& cj = m.irrep(ir.conjugate);
        if (cj.conjugate != ir.label)
            add(r, "conjugate_involution", {ir.label, cj.label}, 0.0,
                "conjugate of conjugate is '" + cj.conjugate.id + "'");
        if (cj.dim != ir.dim || !same_multiset(cj.rho, conjugate_spectrum(ir.rho), log_tol))
            add(r, "conjugate_spectrum", {ir.label, cj.label}, 0.0,
                "rho of the conjugate is not the inverse spectrum");
    }

    const Irrep& triv = m.irrep(m.trivial());
    if (triv.dim != 1 || triv.rho.size() != 1 || std::abs(triv.rho[0] - 1.0) > tol.abs ||
        triv.conjugate != triv.label)
        add(r, "trivial_irrep", {triv.label}, 0.0, "trivial irrep must be 1-dim, rho = 1, self-conjugate");

    const auto& fusion = m.fusion();
    for (const auto& [pair, comps] : fusion.entries()) {
        const auto& [beta, gamma] = pair;
        const Irrep& b = m.irrep(beta);
        const Irrep& g = m.irrep(gamma);
        long dim_sum = 0;
        double qdim_sum = 0.0;
        std::vector<double> union_spec;
        for (const auto& [alpha, mult] : comps) {
            const Irrep& a = m.irrep(alpha);
            dim_sum += static_cast<long>(mult) * a.dim;
            qdim_sum += mult * a.rho.trace();
            for (int k = 0; k < mult; ++k)
                union_spec.insert(union_spec.end(), a.rho.values().begin(), a.rho.values().end());
        }
        if (dim_sum != static_cast<long>(b.dim) * g.dim)
            add(r, "dimension_count", {beta, gamma}, std::abs(double(dim_sum - long(b.dim) * g.dim)),
                "sum m*n_alpha != n_beta*n_gamma");
        if (!close(qdim_sum, b.rho.trace() * g.rho.trace(), tol))
            add(r, "quantum_dimension_count", {beta, gamma},
                std::abs(qdim_sum - b.rho.trace() * g.rho.trace()), "sum m*d_1 != d_1*d_1");
        if (dim_sum == static_cast<long>(b.dim) * g.dim && b.rho.size() == std::size_t(b.dim) &&
            g.rho.size() == std::size_t(g.dim)) {
            bool lengths_ok = true;
            for (const auto& [alpha, mult] : comps)
                lengths_ok &= m.irrep(alpha).rho.size() == std::size_t(m.irrep(alpha).dim);
            if (lengths_ok &&
                !same_multiset(tensor(b.rho, g.rho), RhoSpectrum::from_values(union_spec), log_tol))
                add(r, "tensor_spectrum", {beta, gamma}, 0.0,
                    "rho spectrum of the product is not the union of component spectra");
        }
        if (beta == m.trivial() || gamma == m.trivial()) {
            const IrrepLabel& other = beta == m.trivial() ? gamma : beta;
            if (comps.size() != 1 || comps.begin()->first != other || comps.begin()->second != 1)
                add(r, "trivial_unit", {beta, gamma}, 0.0, "trivial must act as the fusion unit");
        }
        const int triv_mult = fusion.multiplicity(m.trivial(), beta, gamma).value_or(0);
        const int expected = gamma == m.conjugate(beta) ? 1 : 0;
        if (triv_mult != expected)
            add(r, "trivial_multiplicity", {beta, gamma}, std::abs(triv_mult - expected),
                "m(trivial, beta (x) gamma) must be 1 iff gamma is the conjugate of beta");
    }

    FrobeniusReport fr = frobenius_check(m);
    r.frobenius_triples_checked = fr.triples_checked;
    for (auto& v : fr.violations) r.violations.push_back(std::move(v));
    return r;
}

// ------------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int require_int(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::shared_ptr<const CgProvider> parse_cg(const json& arr, const std::vector<Irrep>& irreps) {
    if (!arr.is_array()) throw SchemaError("'cg' must be an array");
    std::map<std::string, int> dims;
    for (const auto& ir : irreps) dims[ir.label.id] = ir.dim;
    auto dim_of = [&](const std::string& l) {
        auto it = dims.find(l);
        if (it == dims.end()) throw SchemaError("cg entry names unknown irrep '" + l + "'");
        return it->second;
    };
    std::map<FusionTable::Pair, CgList> table;
    for (const auto& e : arr) {
        CGTensor t;
        t.alpha = require_string(e, "alpha");
        t.beta = require_string(e, "beta");
        t.gamma = require_string(e, "gamma");
        t.copy = e.contains("i") ? require_int(e, "i") : 1;
        const int na = dim_of(t.alpha.id), nb = dim_of(t.beta.id), nc = dim_of(t.gamma.id);
        t.coeffs = Eigen::MatrixXcd::Zero(nb * nc, na);
        const json& coeffs = require(e, "coeffs");
        if (!coeffs.is_array()) throw SchemaError("'coeffs' must be an array");
        for (const auto& c : coeffs) {
            if (!c.is_array() || c.size() < 4 || c.size() > 5)
                throw SchemaError("cg coefficient must be [a, b, c, re, im]");
            const int a = c[0].get<int>(), b = c[1].get<int>(), cc = c[2].get<int>();
            if (a < 1 || a > na || b < 1 || b > nb || cc < 1 || cc > nc)
                throw SchemaError("cg coefficient index out of range");
            const double re = c[3].get<double>();
            const double im = c.size() == 5 ? c[4].get<double>() : 0.0;
            t.coeffs((b - 1) * nc + (cc - 1), a - 1) = {re, im};
        }
        table[{t.beta, t.gamma}].push_back(std::move(t));
    }
    return std::make_shared<TableCgProvider>(std::move(table));
}

}  // namespace

QGModel load_model(const json& doc, const Tolerance& tol, ValidationReport* report) {
    if (!doc.is_object()) throw SchemaError("model document must be a JSON object");
    QGModel::Data d;
    d.name = require_string(doc, "name");
    d.trivial = require_string(doc, "trivial");
    if (auto it = doc.find("parameters"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("'parameters' must be an object");
        for (const auto& [k, v] : it->items()) {
            if (!v.is_number()) throw SchemaError("parameter '" + k + "' must be a number");
            d.parameters[k] = v.get<double>();
        }
    }
    if (auto it = doc.find("truncation_note"); it != doc.end()) {
        if (!it->is_string()) throw SchemaError("'truncation_note' must be a string");
        d.truncation_note = it->get<std::string>();
    }
    if (auto it = doc.find("truncated"); it != doc.end()) {
        if (!it->is_boolean()) throw SchemaError("'truncated' must be a boolean");
        d.truncated = it->get<bool>();
    }
    bool normalize = false;
    if (auto it = doc.find("normalize_rho"); it != doc.end()) {
        if (!it->is_boolean()) throw SchemaError("'normalize_rho' must be a boolean");
        normalize = it->get<bool>();
    }

    std::map<IrrepLabel, double> scales;
    const json& irreps = require(doc, "irreps");
    if (!irreps.is_array()) throw SchemaError("'irreps' must be an array");
    for (const auto& e : irreps) {
        if (!e.is_object()) throw SchemaError("irrep entry must be an object");
        Irrep ir;
        ir.label = require_string(e, "label");
        ir.dim = require_int(e, "dim");
        ir.conjugate = require_string(e, "conjugate");
        const json& rho = require(e, "rho");
        if (!rho.is_array()) throw SchemaError("'rho' must be an array");
        std::vector<double> vals;
        for (const auto& v : rho) {
            if (!v.is_number()) throw SchemaError("'rho' entries must be numbers");
            vals.push_back(v.get<double>());
        }
        if (vals.empty()) throw SchemaError("irrep '" + ir.label.id + "' has an empty rho");
        if (normalize) {
            auto n = normalize_rho(vals);
            ir.rho = n.spectrum;
            scales[ir.label] = n.scale;
        } else {
            ir.rho = RhoSpectrum::from_values(std::move(vals));
            scales[ir.label] = 1.0;
        }
        d.irreps.push_back(std::move(ir));
    }

    if (auto it = doc.find("fusion"); it != doc.end()) {
        if (!it->is_array()) throw SchemaError("'fusion' must be an array");
        for (const auto& e : *it) {
            const std::string left = require_string(e, "left");
            const std::string right = require_string(e, "right");
            const json& comps = require(e, "components");
            if (!comps.is_object()) throw SchemaError("'components' must be an object");
            FusionTable::Components c;
            for (const auto& [k, v] : comps.items()) {
                if (!v.is_number_integer()) throw SchemaError("multiplicities must be integers");
                const int mult = v.get<int>();
                if (mult < 0) throw SchemaError("multiplicities must be non-negative");
                if (mult > 0) c[k] = mult;
            }
            if (d.fusion.ingested(left, right))
                throw SchemaError("fusion pair (" + left + ", " + right + ") listed twice");
            d.fusion.set(left, right, std::move(c));
        }
    }
    if (auto it = doc.find("cg"); it != doc.end()) d.cg = parse_cg(*it, d.irreps);

    QGModel m(std::move(d));
    ValidationReport r = validate_model(m, tol);
    r.rho_scale = std::move(scales);
    if (!r.ok()) {
        std::ostringstream os;
        os << "model '" << m.name() << "' failed validation:";
        for (const auto& v : r.violations) {
            os << " [" << v.kind;
            for (const auto& l : v.labels) os << ' ' << l.id;
            os << ": " << v.detail << ']';
        }
        if (report) *report = r;
        throw ConsistencyError(os.str());
    }
    if (report) *report = std::move(r);
    return m;
}

QGModel load_model_file(const std::string& path, const Tolerance& tol, ValidationReport* report) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open model file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return load_model(doc, tol, report);
}

json model_to_json(const QGModel& m, bool include_cg) {
    json doc;
    doc["name"] = m.name();
    doc["parameters"] = json::object();
    for (const auto& [k, v] : m.parameters()) doc["parameters"][k] = v;
    doc["trivial"] = m.trivial().id;
    doc["truncated"] = m.truncated();
    if (!m.truncation_note().empty()) doc["truncation_note"] = m.truncation_note();
    doc["irreps"] = json::array();
    for (const auto& ir : m.irreps())
        doc["irreps"].push_back({{"label", ir.label.id},
                                 {"dim", ir.dim},
                                 {"rho", ir.rho.values()},
                                 {"conjugate", ir.conjugate.id}});
    doc["fusion"] = json::array();
    for (const auto& [pair, comps] : m.fusion().entries()) {
        json c = json::object();
        for (const auto& [l, mult] : comps) c[l.id] = mult;
        doc["fusion"].push_back({{"left", pair.first.id}, {"right", pair.second.id}, {"components", c}});
    }
    if (include_cg && m.cg()) {
        json cg = json::array();
        for (const auto& [pair, comps] : m.fusion().entries()) {
            auto tensors = m.cg_tensors(pair.first, pair.second);
            if (!tensors) continue;
            const int nc = m.irrep(pair.second).dim;
            for (const auto& t : *tensors) {
                json coeffs = json::array();
                for (int row = 0; row < t.coeffs.rows(); ++row)
                    for (int a = 0; a < t.coeffs.cols(); ++a) {
                        const auto v = t.coeffs(row, a);
                        if (v == std::complex<double>(0.0, 0.0)) continue;
                        coeffs.push_back({a + 1, row / nc + 1, row % nc + 1, v.real(), v.imag()});
                    }
                cg.push_back({{"alpha", t.alpha.id},
                              {"beta", t.beta.id},
                              {"gamma", t.gamma.id},
                              {"i", t.copy},
                              {"coeffs", coeffs}});
            }
        }
        doc["cg"] = cg;
    }
    return doc;
}

}  // namespace cqg
