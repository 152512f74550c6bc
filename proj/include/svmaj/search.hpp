#pragma once

// Counterexample search for the final equivalent form and for the sigma
// inequality itself, with seeded per-trial streams, re-verification at higher
// precision and (d, p) sweeps.

#include "svmaj/exponent.hpp"
#include "svmaj/rng.hpp"
#include "svmaj/serialize.hpp"
#include "svmaj/theorems.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace svmaj {

/// premise_form: instances built so the premise of the final form holds with
/// equality (forward) or its conclusion does (reversed), scored by how far the
/// other side fails. direct_form: raw pairs scored by Ky Fan partial sums of
/// sigma(B^p A^p) against sigma((BA)^p).
enum class Objective { PremiseForm, DirectForm };

/// loguniform: D_kk log-uniform on (1e-3, 0.95); uniform: D_kk uniform on
/// (0.05, 0.95); both with complex normal psi. gram: Gram matrices of complex
/// normal factors (direct_form only).
enum class Sampler { LogUniform, Uniform, Gram };

std::string to_string(Objective o);
std::string to_string(Sampler s);
Objective parse_objective(const std::string& text);
Sampler parse_sampler(const std::string& text);

/// (D, psi) parameters of the Cauchy-kernel construction.
struct CandidateSpec {
    std::vector<Real> d;       ///< in (0, 1), pairwise distinct
    std::vector<Complex> psi;  ///< nonzero
    int digits = PrecisionConfig::kDefaultDigits;

    /// Throws DomainError when an invariant fails.
    void validate() const;
    [[nodiscard]] Json to_json() const;
    static CandidateSpec from_json(const Json& j);
};

CandidateSpec draw_spec(RngStream& rng, std::size_t dim, Sampler sampler, const PrecisionConfig& prec);

/// (psi_k conj(psi_l) / (1 - D_k D_l))_kl, certified positive definite.
Matrix cauchy_gram(const CandidateSpec& spec, const PrecisionConfig& prec);

/// A = (cauchy_gram)^1/2, B = c D with c = ||A^-1 D A^2 D A^-1||^-1/2, so that
/// (ABA)^2 <= A^4 holds with its boundary attained.
std::pair<Matrix, Matrix> construct_candidate(const CandidateSpec& spec, const PrecisionConfig& prec);

/// A as above, B = (c D)^p with c = ||A^-2p (ADA)^2p A^-2p||^(-1/2p), so that
/// (A B^1/p A)^2p <= A^4p holds with its boundary attained.
std::pair<Matrix, Matrix> construct_converse_candidate(const CandidateSpec& spec, const Exponent& p,
                                                       const PrecisionConfig& prec);

/// Original-form image of a final-form pair (C^1/2, D^(s p)): A = C^-1, B = C^1/2 D^s C^1/2.
/// s = 1/p mirrors construct_candidate, s = 1 mirrors construct_converse_candidate.
std::pair<Matrix, Matrix> construct_direct_candidate(const CandidateSpec& spec, const Exponent& s,
                                                     const PrecisionConfig& prec);

/// max eig((A B^1/p A)^2p - A^4p).
Real violation_margin(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec);
/// max eig((ABA)^2 - A^4).
Real converse_violation_margin(const Matrix& a, const Matrix& b, const PrecisionConfig& prec);
/// sum_{j<=k} sigma_j(B^p A^p) - sum_{j<=k} sigma_j((BA)^p), 1 <= k <= d.
Real direct_sigma_margin(const Matrix& a, const Matrix& b, const Exponent& p, std::size_t k,
                         const PrecisionConfig& prec);
/// All k at once.
std::vector<Real> direct_sigma_margins(const Matrix& a, const Matrix& b, const Exponent& p,
                                       const PrecisionConfig& prec);

struct SearchConfig {
    std::size_t dim = 3;
    Exponent p = Exponent(19, 20);
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    int digits = PrecisionConfig::kDefaultDigits;
    Objective objective = Objective::PremiseForm;
    Direction direction = Direction::Forward;
    Sampler sampler = Sampler::LogUniform;
    bool hill_climb = false;
    int hill_climb_steps = 50;
    unsigned workers = 1;

    /// Throws DomainError for dim < 2, trials < 1, p <= 0 or gram with premise_form.
    void validate() const;
    [[nodiscard]] Json to_json() const;
};

/// A searched pair. Spec-based samplers keep the spec, from which the pair is
/// rebuilt at any precision; gram pairs are kept as matrices.
struct Instance {
    std::optional<CandidateSpec> spec;
    Matrix a;
    Matrix b;
};

/// Objective value: positive means the inequality under test fails.
struct Evaluation {
    Real margin;
    Real scale;      ///< max(1, size of the compared quantities)
    std::size_t k;   ///< Ky Fan index for direct_form, 0 otherwise

    [[nodiscard]] Real relative() const { return margin / scale; }
    /// margin > 10 tau scale.
    [[nodiscard]] bool violates(const PrecisionConfig& prec) const;
};

Instance build_instance(const CandidateSpec& spec, const SearchConfig& config, const PrecisionConfig& prec);
Evaluation evaluate(const Instance& inst, const SearchConfig& config, const PrecisionConfig& prec);

struct CounterexampleRecord {
    SearchConfig config;
    Instance instance;
    std::uint64_t trial_index = 0;
    int hill_climb_steps = 0;  ///< accepted perturbations on top of the drawn trial
    Evaluation evaluation;
    int verified_digits = 0;
    Real verified_margin;

    [[nodiscard]] Json to_json() const;
    /// Throws ParseError on malformed input.
    static CounterexampleRecord from_json(const Json& j);
};

/// Rebuilds the instance of `record` at `digits` and evaluates it again.
Evaluation reevaluate(const CounterexampleRecord& record, int digits);

struct SearchResult {
    SearchConfig config;
    std::vector<CounterexampleRecord> records;  ///< descending margin, then trial index
    std::size_t rejected = 0;                   ///< trials whose instance failed to build
    std::size_t unverified = 0;                 ///< flagged at digits but not at digits + 20
    std::optional<Real> best_relative;          ///< largest relative objective over all trials

    [[nodiscard]] Json to_json() const;
};

/// Deterministic in (config minus workers): trial i always uses RngStream(seed, i).
SearchResult search_counterexamples(const SearchConfig& config);

struct SweepRow {
    Exponent p;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::optional<Real> max_margin;
    double seconds = 0;
};

std::vector<Exponent> exponent_grid(const Exponent& from, const Exponent& to, const Exponent& step);
/// `progress`, when set, is called after each row.
std::vector<SweepRow> sweep(const SearchConfig& base, const std::vector<Exponent>& grid,
                            const std::function<void(const SweepRow&)>& progress = {});
/// Columns p, trials, violations, max_margin, seconds. Rows without violations
/// read "none found in N trials" in max_margin. Without timing the seconds
/// column holds "NA" so that equal inputs give equal bytes.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_timing);

}  // namespace svmaj
