#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqg/rep_data.hpp"
#include "cqg/standard_polynomial.hpp"

namespace cqg {

// ------------------------------------------------------------- Kac type

struct KacVerdict {
    bool by_spectra = false;  // every spectrum is all-ones
    bool by_gamma = false;    // max Gamma == 1
    bool by_qdim = false;     // d_1 == dim for every irrep
    bool kac() const { return by_spectra && by_gamma && by_qdim; }
    bool consistent() const { return by_spectra == by_gamma && by_gamma == by_qdim; }
};

KacVerdict is_kac(const QGModel& m, const Tolerance& tol = {});

struct DegreeBound {
    int value = 0;
    bool lower_bound = false;  // the model is a truncation
};

/// Largest ingested irrep dimension.
DegreeBound n_G(const QGModel& m);

// ------------------------------------------------ polynomial identities

enum class IdentityStrategy { exhaustive, random };

/// One argument of a witness tuple.
struct WitnessArgument {
    /// Exhaustive strategy: the matrix unit (label, row, col), 0-based.
    IrrepLabel label;
    int row = -1, col = -1;
    /// Random strategy: the full block element.
    IntBlockElement element;
};

struct IdentityVerdict {
    bool holds = true;
    std::uint64_t tuples_checked = 0;
    /// Index of the violating tuple in the enumeration / trial order.
    std::optional<std::uint64_t> witness_index;
    std::vector<WitnessArgument> witness;
    IntBlockElement value;  // S_r at the witness
};

/// Checks S_r == 0 on the block algebra with the given block sizes.
/// Exhaustive: every tuple of matrix units (requires units^r <= 1e6).
/// Random: `trials` tuples with integer entries in [-3, 3]; trial k draws from
/// a generator seeded by a counter-based hash of (seed, k), so the verdict does
/// not depend on `threads`. The first violating tuple in order is reported.
IdentityVerdict identity_check(const std::vector<std::pair<IrrepLabel, int>>& blocks, int r,
                               IdentityStrategy strategy, std::uint64_t trials, std::uint64_t seed,
                               unsigned threads = 0);

/// identity_check over the ingested algebra (+)_alpha M_{n_alpha} of a model.
IdentityVerdict bounded_degree_identity_check(const QGModel& m, int r, IdentityStrategy strategy,
                                              std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

// ------------------------------------------------------- Gamma calculus

struct Prop62Result {
    double value = 0.0;
    bool pass = false;
};

/// Right-hand side of 1 <= d_g dim H_a(Gamma(a)) / (d_a Gamma(b) dim H_g(Gamma(g))).
/// Verifies the hypotheses (g in a (x) b, Gamma(g) = Gamma(a) Gamma(b), g
/// maximizes d_1 / dim H(Gamma) among such components) and throws
/// PreconditionError naming the failed one.
Prop62Result prop_6_2_check(const QGModel& m, const IrrepLabel& alpha, const IrrepLabel& beta,
                            const IrrepLabel& gamma, const Tolerance& tol = {});

/// dim H_alpha(Gamma(alpha)).
std::size_t top_eigenspace_dim(const RhoSpectrum& s, const Tolerance& tol = {});

struct ThetaForm {
    bool kac_marker = false;  // Gamma == 1, thetas undefined
    double gamma = 1.0;
    std::vector<double> thetas;  // theta_1 = 1 >= theta_2 >= ... (floor(N/2) entries)
    std::size_t size = 0;        // N
    bool odd = false;

    /// {Gamma^{+-theta_j}} plus a middle 1 when odd, descending.
    RhoSpectrum reconstruct() const;
};

/// Throws PreconditionError on an asymmetric spectrum.
ThetaForm theta_normal_form(const RhoSpectrum& s, const Tolerance& tol = {});

struct SequenceStep {
    int k = 1;  // 1-based position in the sequence
    IrrepLabel label;
    double gamma = 1.0;
    double log_gamma = 0.0;
    double d1 = 0.0;
    std::size_t dim_top = 0;  // dim H(Gamma)
    int dim = 0;
};

/// alpha_1 = alpha0, alpha_{k+1} a component of alpha_k (x) alpha_k with
/// Gamma(alpha_{k+1}) = Gamma(alpha_k)^2 maximizing d_1 / dim H(Gamma); ties go
/// to the smaller dim, then the smaller label. Returns steps + 1 entries.
/// Throws PreconditionError for Gamma(alpha0) = 1 and TruncationError when a
/// square leaves the fragment.
std::vector<SequenceStep> main_theorem_sequence(const QGModel& m, const IrrepLabel& alpha0, int steps,
                                                const Tolerance& tol = {});

struct Lemma63Entry {
    int k_from = 0, k_to = 0;
    double value = 0.0;
    bool pass = false;
};

/// For consecutive k-indices (1-based into seq): value of
/// [d_1(a_{k'}) dimH_{a_k}] / [d_1(a_k) dimH_{a_{k'}}] Gamma_alpha^{2^{k-1} - 2^{k'-1}}.
std::vector<Lemma63Entry> lemma_6_3_check(const std::vector<SequenceStep>& seq, const std::vector<int>& k_indices,
                                          double gamma_alpha, const Tolerance& tol = {});

enum class RefineOutcome { refined, dimension_escape, exhausted };

struct RefineResult {
    RefineOutcome outcome = RefineOutcome::exhausted;
    std::vector<int> k_indices;  // refined: the subsequence (1-based)
    int dimension = 0;           // refined: the common dimension N
    std::vector<int> dims;       // dims along the input sequence
    std::size_t nodes_visited = 0;
};

/// Looks for k_1 < k_2 < ... with equal dimension N >= 2, gaps >= 2 and
///   2^{k'-1} theta^{k'}_j <= 2^{k'-1} - 2^{k-1} + 2^{k-1} theta^k_j   for every j
/// between consecutive entries (exponents of Gamma_alpha). `budget` caps the
/// number of search nodes. When every dimension occurs once the outcome is
/// dimension_escape. Throws PreconditionError on an asymmetric spectrum.
RefineResult subsequence_refine(const QGModel& m, const std::vector<SequenceStep>& seq, double gamma_alpha,
                                std::size_t budget, const Tolerance& tol = {});

struct StepWithTheta {
    SequenceStep step;
    ThetaForm theta;
};

struct NierownoscResult {
    double lower_bound_value = 0.0;  // must be >= 1 on genuine data
    double final_bound_value = 0.0;  // the theorem forces < 1
};

/// Evaluates the middle and the final expression of the closing inequality
/// chain for the pair (A, B) = (alpha_{k_n}, alpha_{k_{n+1}}). Throws
/// PreconditionError unless both have dim N, symmetric non-Kac spectra and
/// k_B - k_A >= 2.
NierownoscResult nierownosc_eval(const StepWithTheta& a, const StepWithTheta& b, double gamma_alpha, int n_dim);

struct ProbeWord {
    IrrepLabel label;
    int power = 1;  // negative powers use the conjugate
};

struct ProbeResult {
    std::optional<IrrepLabel> witness;
    int witness_dim = 0;
    int factors_used = 0;
    std::vector<FusionTable::Pair> truncations;
};

/// Searches components of words in U and conj(U), where U is the tensor
/// product of the given factors, by breadth-first search on the number of
/// U-factors (at most `budget`). Returns the first irrep with dim > bound
/// (smallest dim, then label, at the first level that has one).
/// Throws PreconditionError when Gamma(U) = 1.
ProbeResult corollary_6_5_probe(const QGModel& m, const std::vector<ProbeWord>& u, int bound, int budget,
                                const Tolerance& tol = {});

struct TrapReport {
    bool validated = false;
    bool bounded_degree = false;
    bool refined_and_contradictory = false;
    bool fired() const { return validated && bounded_degree && refined_and_contradictory; }
};

/// The three conditions that cannot hold together for a genuine compact
/// quantum group (bounded degree forces Kac type).
TrapReport consistency_trap(const QGModel& m, int sequence_steps, std::uint64_t seed, const Tolerance& tol = {});

}  // namespace cqg
