#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cqg/cg_tensor.hpp"
#include "cqg/types.hpp"

namespace cqg {

/// Eigenvalue multiset of a rho-operator, stored in descending order.
class RhoSpectrum {
public:
    RhoSpectrum() = default;

    /// Sorts descending. Throws ConsistencyError on a non-positive or
    /// non-finite entry.
    static RhoSpectrum from_values(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    bool empty() const { return values_.empty(); }

    double trace() const;
    double inverse_trace() const;
    /// |sum(lambda) - sum(1/lambda)|.
    double trace_balance_residual() const;

    bool operator==(const RhoSpectrum&) const = default;

private:
    std::vector<double> values_;
};

/// Descending sort of the entrywise inverses.
RhoSpectrum conjugate_spectrum(const RhoSpectrum& s);
/// All pairwise products (spectrum of a tensor product).
RhoSpectrum tensor(const RhoSpectrum& a, const RhoSpectrum& b);
/// Multiset union (spectrum of a direct sum).
RhoSpectrum direct_sum(const RhoSpectrum& a, const RhoSpectrum& b);

struct NormalizedRho {
    RhoSpectrum spectrum;
    double scale = 1.0;
};

/// Rescales a positive diagonal by c = sqrt(sum(1/d) / sum(d)) so that the
/// trace balance holds.
NormalizedRho normalize_rho(const std::vector<double>& diag);

struct Irrep {
    IrrepLabel label;
    int dim = 0;
    RhoSpectrum rho;
    IrrepLabel conjugate;
};

/// Multiplicities m(alpha, beta (x) gamma) on the ingested pairs (beta, gamma).
class FusionTable {
public:
    using Components = std::map<IrrepLabel, int>;
    using Pair = std::pair<IrrepLabel, IrrepLabel>;

    void set(const IrrepLabel& beta, const IrrepLabel& gamma, Components components);

    bool ingested(const IrrepLabel& beta, const IrrepLabel& gamma) const;
    /// nullptr when the pair was not ingested.
    const Components* find(const IrrepLabel& beta, const IrrepLabel& gamma) const;
    /// nullopt when the pair was not ingested, 0 when alpha is absent.
    std::optional<int> multiplicity(const IrrepLabel& alpha, const IrrepLabel& beta,
                                    const IrrepLabel& gamma) const;

    const std::map<Pair, Components>& entries() const { return entries_; }

private:
    std::map<Pair, Components> entries_;
};

/// A compact quantum group presented as a finite fragment of its
/// representation data. Immutable once constructed.
class QGModel {
public:
    struct Data {
        std::string name;
        std::map<std::string, double> parameters;
        std::string truncation_note;
        bool truncated = false;
        IrrepLabel trivial;
        std::vector<Irrep> irreps;
        FusionTable fusion;
        std::shared_ptr<const CgProvider> cg;
    };

    /// Structural checks only (unique labels, trivial and conjugates known,
    /// spectrum lengths); numeric checks live in validate_model.
    explicit QGModel(Data data);

    const std::string& name() const { return data_.name; }
    const std::map<std::string, double>& parameters() const { return data_.parameters; }
    const std::string& truncation_note() const { return data_.truncation_note; }
    bool truncated() const { return data_.truncated; }
    const IrrepLabel& trivial() const { return data_.trivial; }
    const std::vector<Irrep>& irreps() const { return data_.irreps; }
    const FusionTable& fusion() const { return data_.fusion; }
    const std::shared_ptr<const CgProvider>& cg() const { return data_.cg; }

    bool contains(const IrrepLabel& l) const { return index_.count(l.id) != 0; }
    /// Throws UnknownLabel.
    const Irrep& irrep(const IrrepLabel& l) const;
    std::size_t index_of(const IrrepLabel& l) const;
    const IrrepLabel& conjugate(const IrrepLabel& l) const { return irrep(l).conjugate; }

    /// CG tensors for (beta, gamma), or nullptr.
    std::shared_ptr<const CgList> cg_tensors(const IrrepLabel& beta, const IrrepLabel& gamma) const;

    /// Returns a copy of the data with a different CG provider.
    QGModel with_cg(std::shared_ptr<const CgProvider> cg) const;
    const Data& data() const { return data_; }

private:
    Data data_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// CG data held in memory, keyed by (beta, gamma).
class TableCgProvider : public CgProvider {
public:
    explicit TableCgProvider(std::map<FusionTable::Pair, CgList> table);
    std::shared_ptr<const CgList> tensors(const IrrepLabel& beta,
                                          const IrrepLabel& gamma) const override;
    const std::map<FusionTable::Pair, std::shared_ptr<const CgList>>& table() const {
        return table_;
    }

private:
    std::map<FusionTable::Pair, std::shared_ptr<const CgList>> table_;
};

struct Violation {
    std::string kind;  // e.g. "trace_balance", "frobenius"
    std::vector<IrrepLabel> labels;
    double residual = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Scale factor applied by normalize_rho, per irrep (loader only).
    std::map<IrrepLabel, double> rho_scale;
    std::size_t frobenius_triples_checked = 0;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate_model(const QGModel& m, const Tolerance& tol = {});

/// Parses and validates a model document (see README for the schema).
/// Throws SchemaError for malformed input and ConsistencyError when
/// validation fails. `report`, when given, receives the validation report.
QGModel load_model(const nlohmann::json& doc, const Tolerance& tol = {},
                   ValidationReport* report = nullptr);
QGModel load_model_file(const std::string& path, const Tolerance& tol = {},
                        ValidationReport* report = nullptr);

/// Serializes a model to the same schema. CG tensors are written for the
/// ingested fusion pairs when the model has CG data.
nlohmann::json model_to_json(const QGModel& m, bool include_cg = true);

/// Same-multiset test under log-scale grouping.
bool same_multiset(const RhoSpectrum& a, const RhoSpectrum& b, double log_tol);

}  // namespace cqg
