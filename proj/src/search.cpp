#include "svmaj/search.hpp"

#include "svmaj/errors.hpp"
#include "svmaj/numerics.hpp"
#include "svmaj/parallel.hpp"
#include "svmaj/random_matrices.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace svmaj {

std::string to_string(Objective o) { return o == Objective::PremiseForm ? "premise_form" : "direct_form"; }

std::string to_string(Sampler s) {
    switch (s) {
        case Sampler::LogUniform: return "loguniform";
        case Sampler::Uniform: return "uniform";
        case Sampler::Gram: return "gram";
    }
    return "?";
}

Objective parse_objective(const std::string& text) {
    if (text == "premise_form") return Objective::PremiseForm;
    if (text == "direct_form") return Objective::DirectForm;
    throw ParseError("objective must be premise_form or direct_form, got '" + text + "'");
}

Sampler parse_sampler(const std::string& text) {
    if (text == "loguniform") return Sampler::LogUniform;
    if (text == "uniform") return Sampler::Uniform;
    if (text == "gram") return Sampler::Gram;
    throw ParseError("sampler must be loguniform, uniform or gram, got '" + text + "'");
}

namespace {

constexpr int kVerifyExtraDigits = 20;
const char* const kSeparation = "1e-3";

Real parse_at(const char* text, Bits bits) { return Real::parse(text, bits); }

bool separated(const std::vector<Real>& d, bool logarithmic, Bits bits) {
    const Real floor = parse_at(kSeparation, bits);
    for (std::size_t k = 0; k < d.size(); ++k) {
        for (std::size_t l = k + 1; l < d.size(); ++l) {
            const Real gap = logarithmic ? abs(log(d[k]) - log(d[l])) : abs(d[k] - d[l]);
            if (gap < floor) return false;
        }
    }
    return true;
}

Complex nonzero_normal(RngStream& rng, Bits bits) {
    const Real floor = parse_at(kSeparation, bits);
    for (;;) {
        Complex z = rng.complex_normal(bits);
        if (abs(z) >= floor) return z;
    }
}

Matrix hermitian_power(const Matrix& h, const Real& p, const PrecisionConfig& prec) {
    return linalg::psd_power(h, p, prec);
}

Real frob_scale(const Matrix& l, const Matrix& r, const PrecisionConfig& prec) {
    return max(prec.one(), max(l.frobenius_norm(), r.frobenius_norm()));
}

struct PremiseSides {
    Matrix lhs;
    Matrix rhs;
};

PremiseSides forward_sides(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec) {
    const Real pv = p.value(prec.bits());
    const Matrix a_pd = linalg::certify_positive_definite(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    const Matrix inner = linalg::hermitian_part(a_pd * hermitian_power(b_psd, prec.one() / pv, prec) * a_pd);
    return {hermitian_power(inner, pv * 2L, prec), hermitian_power(a_pd, pv * 4L, prec)};
}

PremiseSides converse_sides(const Matrix& a, const Matrix& b, const PrecisionConfig& prec) {
    const Matrix a_pd = linalg::certify_positive_definite(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    const Matrix aba = linalg::hermitian_part(a_pd * b_psd * a_pd);
    const Matrix a2 = linalg::hermitian_part(a_pd * a_pd);
    return {linalg::hermitian_part(aba * aba), linalg::hermitian_part(a2 * a2)};
}

struct DirectSides {
    linalg::SingularValues product;  // sigma(B^p A^p)
    linalg::SingularValues power;    // sigma((BA)^p)
};

DirectSides direct_sides(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec) {
    if (!p.is_positive()) throw DomainError("direct form: exponent must be positive");
    const Real pv = p.value(prec.bits());
    const Matrix a_psd = linalg::certify_psd(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    DirectSides s;
    s.product = linalg::svd_values(hermitian_power(b_psd, pv, prec) * hermitian_power(a_psd, pv, prec), prec);
    const Decomposition dec = lemma_decompose(a_psd, b_psd, prec);
    std::vector<Real> powered;
    for (const auto& l : dec.lambdas) powered.push_back(real_power(l, pv));
    s.power = linalg::svd_values(dec.s_inv.adjoint() * Matrix::diagonal(powered) * dec.s.adjoint(), prec);
    return s;
}

std::vector<Real> partial_differences(const DirectSides& s) {
    std::vector<Real> out;
    Real acc = s.product[0] - s.power[0];
    out.push_back(acc);
    for (std::size_t k = 1; k < s.product.size(); ++k) {
        acc += s.product[k] - s.power[k];
        out.push_back(acc);
    }
    return out;
}

CandidateSpec widen(const CandidateSpec& spec, Bits bits) {
    CandidateSpec w = spec;
    for (auto& x : w.d) x = x.with_precision(bits);
    for (auto& z : w.psi) z = z.with_precision(bits);
    return w;
}

}  // namespace

// ---- candidate specs -----------------------------------------------------------------

void CandidateSpec::validate() const {
    if (d.empty() || d.size() != psi.size()) throw DomainError("candidate spec: D and psi must be nonempty and of equal length");
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (!(d[k] > 0L) || !(d[k] < 1L)) throw DomainError("candidate spec: D entries must lie in (0, 1)");
        if (psi[k].is_zero()) throw DomainError("candidate spec: psi entries must be nonzero");
        for (std::size_t l = 0; l < k; ++l) {
            if (d[k] == d[l]) throw DomainError("candidate spec: D entries must be distinct");
        }
    }
}

Json CandidateSpec::to_json() const {
    Json j = Json::object();
    j["digits"] = digits;
    j["D"] = to_json_strings(d);
    Json ps = Json::array();
    for (const auto& z : psi) ps.push_back(Json::array({z.re.to_string(), z.im.to_string()}));
    j["psi"] = ps;
    return j;
}

CandidateSpec CandidateSpec::from_json(const Json& j) {
    try {
        CandidateSpec s;
        s.digits = j.at("digits").get<int>();
        const Bits bits = bits_for_digits(s.digits);
        s.d = reals_from_json_strings(j.at("D"), bits);
        for (const auto& e : j.at("psi")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("candidate spec: psi entries are [re, im] pairs");
            s.psi.emplace_back(Real::parse(e[0].get<std::string>(), bits), Real::parse(e[1].get<std::string>(), bits));
        }
        s.validate();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("candidate spec: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

CandidateSpec draw_spec(RngStream& rng, std::size_t dim, Sampler sampler, const PrecisionConfig& prec) {
    if (sampler == Sampler::Gram) throw DomainError("draw_spec: the gram sampler has no spec");
    const Bits bits = prec.bits();
    const bool logarithmic = sampler == Sampler::LogUniform;
    const Real lo = logarithmic ? log(parse_at("1e-3", bits)) : parse_at("0.05", bits);
    const Real hi = logarithmic ? log(parse_at("0.95", bits)) : parse_at("0.95", bits);
    CandidateSpec s;
    s.digits = prec.digits();
    for (int attempt = 0;; ++attempt) {
        if (attempt == 1000) throw NumericError("draw_spec: could not separate D");
        s.d.clear();
        for (std::size_t k = 0; k < dim; ++k) {
            const Real u = rng.uniform(lo, hi);
            s.d.push_back(logarithmic ? exp(u) : u);
        }
        if (separated(s.d, logarithmic, bits)) break;
    }
    for (std::size_t k = 0; k < dim; ++k) s.psi.push_back(nonzero_normal(rng, bits));
    return s;
}

Matrix cauchy_gram(const CandidateSpec& spec, const PrecisionConfig& prec) {
    spec.validate();
    const CandidateSpec w = widen(spec, prec.bits());
    const std::size_t n = w.d.size();
    Matrix m(n, n, prec.bits());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            m(k, l) = w.psi[k] * conj(w.psi[l]) / (1L - w.d[k] * w.d[l]);
        }
    }
    return linalg::certify_positive_definite(m, prec);
}

std::pair<Matrix, Matrix> construct_candidate(const CandidateSpec& spec, const PrecisionConfig& prec) {
    const Matrix a2 = cauchy_gram(spec, prec);
    Matrix a = linalg::certify_positive_definite(hermitian_power(a2, prec.from(0.5), prec), prec);
    const Matrix a_inv = hermitian_power(a2, prec.from(-0.5), prec);
    const CandidateSpec w = widen(spec, prec.bits());
    const Matrix dm = Matrix::diagonal(w.d);
    const Real n = linalg::max_eigenvalue(linalg::hermitian_part(a_inv * dm * a2 * dm * a_inv), prec);
    const Real c = pow(n, prec.from(-0.5));
    std::vector<Real> scaled;
    for (const auto& x : w.d) scaled.push_back(c * x);
    return {std::move(a), Matrix::diagonal(scaled)};
}

std::pair<Matrix, Matrix> construct_converse_candidate(const CandidateSpec& spec, const Exponent& p,
                                                       const PrecisionConfig& prec) {
    if (!p.is_positive()) throw DomainError("construct_converse_candidate: exponent must be positive");
    const Real pv = p.value(prec.bits());
    const Matrix a2 = cauchy_gram(spec, prec);
    Matrix a = linalg::certify_positive_definite(hermitian_power(a2, prec.from(0.5), prec), prec);
    const Matrix a_m2p = hermitian_power(a2, -pv, prec);
    const CandidateSpec w = widen(spec, prec.bits());
    const Matrix ada = linalg::hermitian_part(a * Matrix::diagonal(w.d) * a);
    const Matrix lifted = hermitian_power(ada, pv * 2L, prec);
    const Real n = linalg::max_eigenvalue(linalg::hermitian_part(a_m2p * lifted * a_m2p), prec);
    const Real c = pow(n, -(prec.one() / (pv * 2L)));
    std::vector<Real> scaled;
    for (const auto& x : w.d) scaled.push_back(real_power(c * x, pv));
    return {std::move(a), Matrix::diagonal(scaled)};
}

std::pair<Matrix, Matrix> construct_direct_candidate(const CandidateSpec& spec, const Exponent& s,
                                                     const PrecisionConfig& prec) {
    if (!s.is_positive()) throw DomainError("construct_direct_candidate: exponent must be positive");
    const Matrix c = cauchy_gram(spec, prec);
    Matrix a = linalg::certify_positive_definite(hermitian_power(c, prec.from(-1L), prec), prec);
    const Matrix c_half = hermitian_power(c, prec.from(0.5), prec);
    const CandidateSpec w = widen(spec, prec.bits());
    std::vector<Real> ds;
    for (const auto& x : w.d) ds.push_back(real_power(x, s.value(prec.bits())));
    Matrix b = linalg::certify_psd(linalg::hermitian_part(c_half * Matrix::diagonal(ds) * c_half), prec);
    return {std::move(a), std::move(b)};
}

// ---- margins ---------------------------------------------------------------------------

Real violation_margin(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec) {
    const PremiseSides s = forward_sides(a, b, p, prec);
    return linalg::max_eigenvalue(linalg::hermitian_part(s.lhs - s.rhs), prec);
}

Real converse_violation_margin(const Matrix& a, const Matrix& b, const PrecisionConfig& prec) {
    const PremiseSides s = converse_sides(a, b, prec);
    return linalg::max_eigenvalue(linalg::hermitian_part(s.lhs - s.rhs), prec);
}

std::vector<Real> direct_sigma_margins(const Matrix& a, const Matrix& b, const Exponent& p,
                                       const PrecisionConfig& prec) {
    return partial_differences(direct_sides(a, b, p, prec));
}

Real direct_sigma_margin(const Matrix& a, const Matrix& b, const Exponent& p, std::size_t k,
                         const PrecisionConfig& prec) {
    if (k < 1 || k > a.rows()) throw DomainError("direct_sigma_margin: k must lie in 1..d");
    return direct_sigma_margins(a, b, p, prec)[k - 1];
}

// ---- configuration ------------------------------------------------------------------------

void SearchConfig::validate() const {
    if (dim < 2 || dim > 8) throw DomainError("search: dim must lie in 2..8");
    if (trials < 1) throw DomainError("search: trials must be at least 1");
    if (!p.is_positive()) throw DomainError("search: p must be positive");
    if (objective == Objective::PremiseForm && sampler == Sampler::Gram) {
        throw DomainError("search: the gram sampler needs direct_form");
    }
    if (hill_climb_steps < 0) throw DomainError("search: hill_climb_steps must be nonnegative");
    if (workers < 1) throw DomainError("search: workers must be at least 1");
    (void)PrecisionConfig(digits);
}

// workers is left out: it never changes the result.
Json SearchConfig::to_json() const {
    Json j = Json::object();
    j["dim"] = dim;
    j["p"] = p.to_string();
    j["trials"] = trials;
    j["seed"] = seed;
    j["digits"] = digits;
    j["objective"] = svmaj::to_string(objective);
    j["direction"] = svmaj::to_string(direction);
    j["sampler"] = svmaj::to_string(sampler);
    j["hill_climb"] = hill_climb;
    j["hill_climb_steps"] = hill_climb_steps;
    return j;
}

bool Evaluation::violates(const PrecisionConfig& prec) const { return margin > prec.tau(scale) * 10L; }

Instance build_instance(const CandidateSpec& spec, const SearchConfig& config, const PrecisionConfig& prec) {
    std::pair<Matrix, Matrix> ab;
    if (config.objective == Objective::DirectForm) {
        const bool forward = config.direction == Direction::Forward;
        ab = construct_direct_candidate(spec, forward ? config.p.reciprocal() : Exponent(1), prec);
    } else if (config.direction == Direction::Forward) {
        ab = construct_candidate(spec, prec);
    } else {
        ab = construct_converse_candidate(spec, config.p, prec);
    }
    return Instance{spec, std::move(ab.first), std::move(ab.second)};
}

Evaluation evaluate(const Instance& inst, const SearchConfig& config, const PrecisionConfig& prec) {
    const Matrix a = inst.a.with_precision(prec.bits());
    const Matrix b = inst.b.with_precision(prec.bits());
    if (config.objective == Objective::PremiseForm) {
        const PremiseSides s = config.direction == Direction::Forward ? forward_sides(a, b, config.p, prec)
                                                                      : converse_sides(a, b, prec);
        return Evaluation{linalg::max_eigenvalue(linalg::hermitian_part(s.lhs - s.rhs), prec),
                          frob_scale(s.lhs, s.rhs, prec), 0};
    }
    const DirectSides s = direct_sides(a, b, config.p, prec);
    const std::vector<Real> diffs = partial_differences(s);
    const bool forward = config.direction == Direction::Forward;
    std::size_t best = 0;
    for (std::size_t k = 1; k < diffs.size(); ++k) {
        const bool better = forward ? diffs[k] > diffs[best] : diffs[k] < diffs[best];
        if (better) best = k;
    }
    const Real scale = max(prec.one(), s.product.sum() + s.power.sum());
    return Evaluation{forward ? diffs[best] : -diffs[best], scale, best + 1};
}

// ---- records ------------------------------------------------------------------------------

Json CounterexampleRecord::to_json() const {
    Json j = Json::object();
    j["config"] = config.to_json();
    j["trial_index"] = trial_index;
    j["hill_climb_steps"] = hill_climb_steps;
    j["margin"] = evaluation.margin.to_string();
    j["scale"] = evaluation.scale.to_string();
    j["relative_margin"] = evaluation.relative().to_string(8);
    j["k"] = evaluation.k;
    j["verified_digits"] = verified_digits;
    j["verified_margin"] = verified_margin.to_string();
    if (instance.spec) j["spec"] = instance.spec->to_json();
    j["A"] = svmaj::to_json(instance.a);
    j["B"] = svmaj::to_json(instance.b);
    j["A_hash"] = matrix_hash(instance.a);
    j["B_hash"] = matrix_hash(instance.b);
    return j;
}

CounterexampleRecord CounterexampleRecord::from_json(const Json& j) {
    try {
        CounterexampleRecord r;
        const Json& c = j.at("config");
        r.config.dim = c.at("dim").get<std::size_t>();
        r.config.p = Exponent::parse(c.at("p").get<std::string>());
        r.config.trials = c.at("trials").get<std::size_t>();
        r.config.seed = c.at("seed").get<std::uint64_t>();
        r.config.digits = c.at("digits").get<int>();
        r.config.objective = parse_objective(c.at("objective").get<std::string>());
        r.config.direction = parse_direction(c.at("direction").get<std::string>());
        r.config.sampler = parse_sampler(c.at("sampler").get<std::string>());
        r.config.hill_climb = c.at("hill_climb").get<bool>();
        r.config.hill_climb_steps = c.at("hill_climb_steps").get<int>();
        r.trial_index = j.at("trial_index").get<std::uint64_t>();
        r.hill_climb_steps = j.at("hill_climb_steps").get<int>();
        const Bits bits = bits_for_digits(r.config.digits);
        r.evaluation.margin = Real::parse(j.at("margin").get<std::string>(), bits);
        r.evaluation.scale = Real::parse(j.at("scale").get<std::string>(), bits);
        r.evaluation.k = j.at("k").get<std::size_t>();
        r.verified_digits = j.at("verified_digits").get<int>();
        r.verified_margin = Real::parse(j.at("verified_margin").get<std::string>(), bits_for_digits(r.verified_digits));
        if (j.contains("spec")) r.instance.spec = CandidateSpec::from_json(j.at("spec"));
        r.instance.a = matrix_from_json(j.at("A"));
        r.instance.b = matrix_from_json(j.at("B"));
        if (r.instance.a.rows() != r.config.dim || r.instance.b.rows() != r.config.dim) {
            throw ParseError("record: matrix size does not match dim");
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("record: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("record: ") + e.what());
    }
}

Evaluation reevaluate(const CounterexampleRecord& record, int digits) {
    const PrecisionConfig prec(digits);
    if (record.instance.spec) {
        return evaluate(build_instance(*record.instance.spec, record.config, prec), record.config, prec);
    }
    return evaluate(record.instance, record.config, prec);
}

Json SearchResult::to_json() const {
    Json j = Json::object();
    j["config"] = config.to_json();
    j["found"] = records.size();
    j["rejected"] = rejected;
    j["unverified"] = unverified;
    j["best_relative"] = best_relative ? Json(best_relative->to_string(8)) : Json(nullptr);
    Json rs = Json::array();
    for (const auto& r : records) rs.push_back(r.to_json());
    j["records"] = rs;
    return j;
}

// ---- search -------------------------------------------------------------------------------

namespace {

struct TrialOutcome {
    bool built = false;
    Real relative;
    std::optional<CounterexampleRecord> record;
    bool unverified = false;
};

Instance draw_instance(RngStream& rng, const SearchConfig& config, const PrecisionConfig& prec) {
    if (config.sampler == Sampler::Gram) {
        Matrix a = linalg::certify_positive_definite(random_gram(rng, config.dim, prec.bits()), prec);
        Matrix b = linalg::certify_psd(random_gram(rng, config.dim, prec.bits()), prec);
        return Instance{std::nullopt, std::move(a), std::move(b)};
    }
    return build_instance(draw_spec(rng, config.dim, config.sampler, prec), config, prec);
}

// Relative Gaussian perturbation of size 1e-2.
Instance perturb(const Instance& inst, RngStream& rng, const SearchConfig& config, const PrecisionConfig& prec) {
    const Bits bits = prec.bits();
    const Real step = parse_at("0.01", bits);
    if (!inst.spec) {
        const auto nudge = [&](const Matrix& m) {
            Matrix t = Matrix::identity(config.dim, bits) + step * random_gaussian_matrix(rng, config.dim, bits);
            return linalg::hermitian_part(t * m * t.adjoint());
        };
        Matrix a = linalg::certify_positive_definite(nudge(inst.a), prec);
        Matrix b = linalg::certify_psd(nudge(inst.b), prec);
        return Instance{std::nullopt, std::move(a), std::move(b)};
    }
    CandidateSpec s = *inst.spec;
    for (auto& x : s.d) x = x * (step * rng.complex_normal(bits).re + 1L);
    for (auto& z : s.psi) z += rng.complex_normal(bits) * (step * abs(z));
    s.validate();
    return build_instance(s, config, prec);
}

std::optional<CounterexampleRecord> certify(const SearchConfig& config, Instance inst, const Evaluation& ev,
                                            std::uint64_t trial, int steps, bool& unverified) {
    const int vd = config.digits + kVerifyExtraDigits;
    CounterexampleRecord r{config, std::move(inst), trial, steps, ev, vd, Real()};
    Evaluation v;
    try {
        v = reevaluate(r, vd);
    } catch (const Error&) {
        unverified = true;
        return std::nullopt;
    }
    const Real agreement = abs(v.margin - ev.margin) / abs(v.margin);
    if (!v.violates(PrecisionConfig(vd)) || agreement > parse_at("1e-5", v.margin.precision())) {
        unverified = true;
        return std::nullopt;
    }
    r.verified_margin = v.margin;
    return r;
}

TrialOutcome run_trial(const SearchConfig& config, const PrecisionConfig& prec, std::uint64_t i) {
    TrialOutcome out;
    RngStream rng(config.seed, i);
    Instance inst;
    Evaluation ev;
    try {
        inst = draw_instance(rng, config, prec);
        ev = evaluate(inst, config, prec);
    } catch (const Error&) {
        return out;
    }
    out.built = true;
    out.relative = ev.relative();
    if (ev.violates(prec)) out.record = certify(config, std::move(inst), ev, i, 0, out.unverified);
    return out;
}

void hill_climb(const SearchConfig& config, const PrecisionConfig& prec, std::uint64_t origin, SearchResult& result) {
    RngStream base(config.seed, origin);
    Instance current = draw_instance(base, config, prec);
    Evaluation cur = evaluate(current, config, prec);
    RngStream rng(config.seed, (std::uint64_t{1} << 63U) | origin);
    int accepted = 0;
    for (int step = 0; step < config.hill_climb_steps; ++step) {
        try {
            Instance cand = perturb(current, rng, config, prec);
            Evaluation ev = evaluate(cand, config, prec);
            if (ev.relative() > cur.relative()) {
                current = std::move(cand);
                cur = std::move(ev);
                ++accepted;
            }
        } catch (const Error&) {
            continue;
        }
    }
    if (accepted == 0) return;
    if (!result.best_relative || cur.relative() > *result.best_relative) result.best_relative = cur.relative();
    if (!cur.violates(prec)) return;
    bool unverified = false;
    auto rec = certify(config, std::move(current), cur, origin, accepted, unverified);
    if (rec) result.records.push_back(std::move(*rec));
    if (unverified) ++result.unverified;
}

}  // namespace

SearchResult search_counterexamples(const SearchConfig& config) {
    config.validate();
    const PrecisionConfig prec(config.digits);
    std::vector<TrialOutcome> outcomes(config.trials);
    parallel_for(config.trials, config.workers, [&](std::size_t i) { outcomes[i] = run_trial(config, prec, i); });

    SearchResult result;
    result.config = config;
    std::optional<std::size_t> best_trial;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        TrialOutcome& o = outcomes[i];
        if (!o.built) {
            ++result.rejected;
            continue;
        }
        if (!result.best_relative || o.relative > *result.best_relative) {
            result.best_relative = o.relative;
            best_trial = i;
        }
        if (o.unverified) ++result.unverified;
        if (o.record) result.records.push_back(std::move(*o.record));
    }
    if (config.hill_climb && best_trial && config.hill_climb_steps > 0) hill_climb(config, prec, *best_trial, result);

    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
                         if (x.evaluation.margin != y.evaluation.margin) return x.evaluation.margin > y.evaluation.margin;
                         return x.trial_index < y.trial_index;
                     });
    return result;
}

// ---- sweeps ---------------------------------------------------------------------------------

std::vector<Exponent> exponent_grid(const Exponent& from, const Exponent& to, const Exponent& step) {
    if (!step.is_positive()) throw DomainError("exponent_grid: step must be positive");
    if (!from.is_positive()) throw DomainError("exponent_grid: exponents must be positive");
    if (to < from) throw DomainError("exponent_grid: empty range");
    std::vector<Exponent> grid;
    for (Exponent p = from; p <= to; p = p + step) grid.push_back(p);
    return grid;
}

std::vector<SweepRow> sweep(const SearchConfig& base, const std::vector<Exponent>& grid,
                            const std::function<void(const SweepRow&)>& progress) {
    std::vector<SweepRow> rows;
    for (const auto& p : grid) {
        SearchConfig config = base;
        config.p = p;
        const auto start = std::chrono::steady_clock::now();
        const SearchResult r = search_counterexamples(config);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        SweepRow row;
        row.p = p;
        row.trials = config.trials;
        row.violations = r.records.size();
        if (!r.records.empty()) row.max_margin = r.records.front().evaluation.margin;
        row.seconds = elapsed.count();
        if (progress) progress(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_timing) {
    std::ostringstream os;
    os << "p,trials,violations,max_margin,seconds\n";
    for (const auto& r : rows) {
        std::ostringstream p;
        p << std::setprecision(12) << r.p.value(64).to_double();
        os << p.str() << ',' << r.trials << ',' << r.violations << ',';
        if (r.max_margin) {
            os << r.max_margin->to_string(8);
        } else {
            os << "none found in " << r.trials << " trials";
        }
        os << ',';
        if (with_timing) {
            os << std::fixed << std::setprecision(3) << r.seconds << std::defaultfloat;
        } else {
            os << "NA";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace svmaj
