#include "svmaj/cli.hpp"

#include "svmaj/errors.hpp"
#include "svmaj/parallel.hpp"
#include "svmaj/random_matrices.hpp"
#include "svmaj/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace svmaj {

namespace {

class IoFailure : public Error {
public:
    using Error::Error;
};

const std::vector<std::string> kTargets = {"theorem1",        "theorem2",    "theorem3",   "lemma_fh",
                                           "lemma_decompose", "implication", "equivalence"};

struct Options {
    std::string target;
    std::string positional_direction;
    std::size_t dim = 3;
    std::string p;
    std::string p_from;
    std::string p_to;
    std::string p_step;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    int digits = PrecisionConfig::kDefaultDigits;
    unsigned workers = 1;
    std::string out;
    std::string format = "json";
    std::string replay;
    std::string direction;
    std::string objective;
    std::string sampler = "loguniform";
    bool hill_climb = false;
    int hill_climb_steps = 50;
    bool no_timing = false;
};

void write_output(const Options& o, const std::string& payload, std::ostream& out) {
    if (o.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw IoFailure("cannot open '" + o.out + "' for writing");
    f << payload;
    f.flush();
    if (!f) throw IoFailure("write to '" + o.out + "' failed");
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

Exponent required_exponent(const std::string& text, const char* flag) {
    if (text.empty()) throw DomainError(std::string("missing ") + flag);
    const Exponent e = Exponent::parse(text);
    if (!e.is_positive()) throw DomainError(std::string(flag) + " must be positive");
    return e;
}

Direction direction_or(const Options& o, Direction fallback) {
    if (!o.direction.empty() && !o.positional_direction.empty() && o.direction != o.positional_direction) {
        throw DomainError("conflicting directions '" + o.positional_direction + "' and '" + o.direction + "'");
    }
    if (!o.direction.empty()) return parse_direction(o.direction);
    if (!o.positional_direction.empty()) return parse_direction(o.positional_direction);
    return fallback;
}

// ---- check ------------------------------------------------------------------------------

struct CheckOutcome {
    bool verdict = true;
    bool condition = false;
    Real margin;
    Json report;
    [[nodiscard]] bool unexpected() const { return condition && !verdict; }
};

Json draw_check_instance(const std::string& target, RngStream& rng, std::size_t dim, const PrecisionConfig& prec) {
    Json j = Json::object();
    const Bits bits = prec.bits();
    if (target == "theorem3") {
        j["S"] = to_json(random_gaussian_matrix(rng, dim, bits));
        std::vector<Real> lambda;
        for (std::size_t k = 0; k < dim; ++k) lambda.push_back(rng.uniform(prec.zero(), prec.from(2L)));
        j["lambda"] = to_json_strings(lambda);
    } else if (target == "lemma_fh") {
        std::vector<Real> lambda;
        for (std::size_t k = 0; k < dim; ++k) lambda.push_back(rng.uniform(prec.zero(), prec.from(2L)));
        j["lambdas"] = to_json_strings(lambda);
    } else {
        j["A"] = to_json(random_gram(rng, dim, bits));
        j["B"] = to_json(random_gram(rng, dim, bits));
    }
    return j;
}

// B scaled so that (ABA)^2 <= A^4 (p <= 1) or (A B^1/p A)^2p <= A^4p (p > 1) is tight.
Matrix normalise_for_implication(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec) {
    const Real pv = p.value(prec.bits());
    if (p <= Exponent(1)) {
        const Matrix a_inv = linalg::psd_power(a, prec.from(-1L), prec);
        const Matrix a2 = linalg::hermitian_part(a * a);
        const Real n = linalg::max_eigenvalue(linalg::hermitian_part(a_inv * b * a2 * b * a_inv), prec);
        return linalg::certify_psd(pow(n, prec.from(-0.5)) * b, prec);
    }
    const Matrix inner = linalg::hermitian_part(a * linalg::psd_power(b, prec.one() / pv, prec) * a);
    const Matrix lifted = linalg::psd_power(inner, pv * 2L, prec);
    const Matrix a_m2p = linalg::psd_power(a, -(pv * 2L), prec);
    const Real n = linalg::max_eigenvalue(linalg::hermitian_part(a_m2p * lifted * a_m2p), prec);
    return linalg::certify_psd(pow(n, prec.from(-0.5)) * b, prec);
}

CheckOutcome run_check_instance(const std::string& target, const Json& inst, const Exponent& p, Direction direction,
                                const PrecisionConfig& prec) {
    try {
        if (target == "theorem3") {
            const Matrix s = matrix_from_json(inst.at("S")).with_precision(prec.bits());
            const auto lambda = reals_from_json_strings(inst.at("lambda"), prec.bits());
            const TheoremReport r = theorem3_check(s, Matrix::diagonal(lambda), p, prec);
            return {r.verdict(), r.condition_satisfied, r.majorisation.min_margin(), r.to_json()};
        }
        if (target == "lemma_fh") {
            const FHSpec spec{reals_from_json_strings(inst.at("lambdas"), prec.bits()), p};
            const PsdCheck c = fh_psd_check(spec, prec);
            Json rep = c.to_json();
            rep["integral_deviation"] = fh_integral_check(spec, prec).to_string(6);
            return {c.verdict, c.condition_satisfied, c.min_eig, rep};
        }
        const Matrix a = matrix_from_json(inst.at("A")).with_precision(prec.bits());
        const Matrix b = matrix_from_json(inst.at("B")).with_precision(prec.bits());
        if (target == "theorem1") {
            const TheoremReport r = theorem1_check(a, b, p, direction, prec);
            return {r.verdict(), r.condition_satisfied, r.majorisation.min_margin(), r.to_json()};
        }
        if (target == "theorem2") {
            const TheoremReport r = theorem2_check(a, b, p, prec);
            return {r.verdict(), true, r.majorisation.min_margin(), r.to_json()};
        }
        if (target == "lemma_decompose") {
            const Decomposition dec = lemma_decompose(a, b, prec);
            const Real tol = decomposition_tolerance(a, b, prec);
            const Real worst = max(dec.residual_a, max(dec.residual_ab, dec.residual_b));
            Json rep = dec.to_json();
            rep["tolerance"] = tol.to_string();
            return {worst <= tol, true, tol - worst, rep};
        }
        if (target == "implication") {
            const bool forward = p <= Exponent(1);
            const Matrix a_pd = linalg::certify_positive_definite(a, prec);
            const Matrix b_n = normalise_for_implication(a_pd, linalg::certify_psd(b, prec), p, prec);
            const ImplicationReport r = implication_check(a_pd, b_n, p, prec);
            Json rep = r.to_json();
            rep["tested"] = forward ? "premise => conclusion" : "conclusion => premise";
            const std::size_t d = a.rows();
            if (forward) return {!r.forward_violated(), theorem1_forward_holds(d, p), r.conclusion_margin, rep};
            return {!r.converse_violated(), theorem1_reversed_holds(d, p), r.premise_margin, rep};
        }
        if (target == "equivalence") {
            const EquivalenceReport r = equivalent_forms_check(a, b, p, prec);
            return {r.agree(), true, r.sigma_margin, r.to_json()};
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    throw DomainError("unknown target '" + target + "'");
}

Json check_entry(const std::string& target, std::uint64_t trial, const Exponent& p, Direction direction,
                 const PrecisionConfig& prec, const Json& inst, const CheckOutcome& o) {
    Json e = Json::object();
    e["target"] = target;
    e["trial"] = trial;
    e["p"] = p.to_string();
    e["direction"] = to_string(direction);
    e["digits"] = prec.digits();
    e["verdict"] = o.verdict;
    e["condition_satisfied"] = o.condition;
    e["unexpected"] = o.unexpected();
    e["instance"] = inst;
    e["report"] = o.report;
    return e;
}

Direction check_direction(const std::string& target, const Options& o, const Exponent& p) {
    const Direction natural = p <= Exponent(1) ? Direction::Forward : Direction::Reversed;
    if (target == "theorem1") return direction_or(o, natural);
    return natural;
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
    const Json doc = read_json_file(o.replay);
    std::vector<Json> entries;
    if (doc.contains("failures")) {
        for (const auto& e : doc.at("failures")) entries.push_back(e);
    } else if (doc.contains("instance")) {
        entries.push_back(doc);
    } else {
        throw ParseError("replay file holds neither a check report nor a check entry");
    }
    Json failures = Json::array();
    std::size_t unexpected = 0;
    for (const auto& e : entries) {
        try {
            const std::string target = e.at("target").get<std::string>();
            const Exponent p = Exponent::parse(e.at("p").get<std::string>());
            const Direction dir = parse_direction(e.at("direction").get<std::string>());
            const PrecisionConfig prec(e.at("digits").get<int>());
            const CheckOutcome r = run_check_instance(target, e.at("instance"), p, dir, prec);
            if (r.unexpected()) ++unexpected;
            failures.push_back(check_entry(target, e.at("trial").get<std::uint64_t>(), p, dir, prec, e.at("instance"), r));
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("replay entry: ") + ex.what());
        }
    }
    Json j = Json::object();
    j["command"] = "replay";
    j["source"] = o.replay;
    j["replayed"] = entries.size();
    j["unexpected"] = unexpected;
    j["failures"] = failures;
    write_output(o, pretty(j), out);
    err << "replayed " << entries.size() << " instance(s), " << unexpected << " unexpected\n";
    return unexpected > 0 ? kExitUnexpected : kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    if (!o.replay.empty()) return cmd_replay(o, out, err);
    if (o.target.empty()) throw DomainError("check needs a target");
    if (o.format != "json") throw DomainError("check writes json only");
    if (o.dim < 1 || o.dim > 8) throw DomainError("--dim must lie in 1..8");
    const Exponent p = required_exponent(o.p, "--p");
    if (o.target == "equivalence" && p > Exponent(1)) throw DomainError("equivalence needs 0 < p <= 1");
    const PrecisionConfig prec(o.digits);
    const std::size_t trials = o.trials == 0 ? 200 : o.trials;
    const Direction dir = check_direction(o.target, o, p);

    std::vector<Json> instances(trials);
    std::vector<CheckOutcome> outcomes(trials);
    parallel_for(trials, o.workers, [&](std::size_t i) {
        RngStream rng(o.seed, i);
        instances[i] = draw_check_instance(o.target, rng, o.dim, prec);
        outcomes[i] = run_check_instance(o.target, instances[i], p, dir, prec);
    });

    std::size_t failed = 0;
    std::size_t unexpected = 0;
    bool condition = false;
    std::optional<Real> worst;
    Json failures = Json::array();
    for (std::size_t i = 0; i < trials; ++i) {
        const CheckOutcome& r = outcomes[i];
        condition = condition || r.condition;
        if (!worst || r.margin < *worst) worst = r.margin;
        if (r.verdict) continue;
        ++failed;
        if (r.unexpected()) ++unexpected;
        failures.push_back(check_entry(o.target, i, p, dir, prec, instances[i], r));
    }

    Json j = Json::object();
    j["command"] = "check";
    j["target"] = o.target;
    j["dim"] = o.dim;
    j["p"] = p.to_string();
    j["direction"] = to_string(dir);
    j["digits"] = o.digits;
    j["seed"] = o.seed;
    j["trials"] = trials;
    j["condition_satisfied"] = condition;
    j["passed"] = trials - failed;
    j["failed"] = failed;
    j["unexpected"] = unexpected;
    j["worst_margin"] = worst->to_string(8);
    j["failures"] = failures;
    write_output(o, pretty(j), out);
    err << o.target << ": " << trials - failed << "/" << trials << " passed";
    if (failed > 0) err << (condition ? " (statement proven here)" : " (outside the proven range)");
    err << "\n";
    return unexpected > 0 ? kExitUnexpected : kExitOk;
}

// ---- search and sweep ---------------------------------------------------------------------------

SearchConfig search_config(const Options& o) {
    SearchConfig c;
    c.dim = o.dim;
    c.trials = o.trials == 0 ? 1000 : o.trials;
    c.seed = o.seed;
    c.digits = o.digits;
    c.direction = direction_or(o, Direction::Forward);
    c.objective = !o.objective.empty() ? parse_objective(o.objective)
                  : c.direction == Direction::Forward ? Objective::PremiseForm
                                                      : Objective::DirectForm;
    c.sampler = parse_sampler(o.sampler);
    c.hill_climb = o.hill_climb;
    c.hill_climb_steps = o.hill_climb_steps;
    c.workers = o.workers;
    return c;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    SearchConfig c = search_config(o);
    c.p = o.p.empty() ? Exponent(19, 20) : required_exponent(o.p, "--p");
    const SearchResult r = search_counterexamples(c);
    if (o.format == "json") {
        write_output(o, pretty(r.to_json()), out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "trial_index,hill_climb_steps,k,margin,relative_margin,verified_margin\n";
        for (const auto& rec : r.records) {
            os << rec.trial_index << ',' << rec.hill_climb_steps << ',' << rec.evaluation.k << ','
               << rec.evaluation.margin.to_string(12) << ',' << rec.evaluation.relative().to_string(8) << ','
               << rec.verified_margin.to_string(12) << '\n';
        }
        write_output(o, os.str(), out);
    } else {
        throw DomainError("--format must be json or csv");
    }
    err << "found " << r.records.size() << " violation(s) in " << c.trials << " trials (" << r.rejected
        << " rejected, " << r.unverified << " unverified)\n";
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    SearchConfig c = search_config(o);
    if (o.trials == 0) c.trials = 200;
    const auto grid = exponent_grid(required_exponent(o.p_from, "--p-from"), required_exponent(o.p_to, "--p-to"),
                                    required_exponent(o.p_step, "--p-step"));
    c.p = grid.front();
    c.validate();
    const auto rows = sweep(c, grid, [&](const SweepRow& row) {
        err << "p=" << row.p.to_string() << ": " << row.violations << "/" << row.trials << " violations\n";
    });
    if (o.format == "csv") {
        write_output(o, sweep_csv(rows, !o.no_timing), out);
    } else if (o.format == "json") {
        Json j = Json::object();
        j["config"] = c.to_json();
        j["config"].erase("p");
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json r = Json::object();
            r["p"] = row.p.to_string();
            r["trials"] = row.trials;
            r["violations"] = row.violations;
            r["max_margin"] = row.max_margin ? Json(row.max_margin->to_string(8)) : Json(nullptr);
            r["seconds"] = o.no_timing ? Json(nullptr) : Json(row.seconds);
            arr.push_back(r);
        }
        j["rows"] = arr;
        write_output(o, pretty(j), out);
    } else {
        throw DomainError("--format must be json or csv");
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--dim", o.dim, "matrix dimension");
    cmd->add_option("--trials", o.trials, "number of random instances");
    cmd->add_option("--seed", o.seed, "64-bit seed");
    cmd->add_option("--digits", o.digits, "working precision in decimal digits")->capture_default_str();
    cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--direction", o.direction, "forward or reversed")->check(CLI::IsMember({"forward", "reversed"}));
}

void add_search_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("which", o.positional_direction, "forward or reversed (same as --direction)")
        ->check(CLI::IsMember({"forward", "reversed"}));
    cmd->add_option("--objective", o.objective, "premise_form or direct_form")
        ->check(CLI::IsMember({"premise_form", "direct_form"}));
    cmd->add_option("--sampler", o.sampler, "loguniform, uniform or gram")
        ->check(CLI::IsMember({"loguniform", "uniform", "gram"}));
    cmd->add_flag("--hill-climb", o.hill_climb, "perturb the best trial and keep improvements");
    cmd->add_option("--hill-climb-steps", o.hill_climb_steps, "perturbations tried")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app("High-precision checks of singular-value majorisation inequalities", "svmaj");
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run a statement on seeded random instances");
    add_common(check, o);
    check->add_option("target", o.target, "statement to check")->check(CLI::IsMember(kTargets));
    check->add_option("--p", o.p, "exponent (alpha for lemma_fh), decimal or fraction");
    check->add_option("--replay", o.replay, "rerun the failures stored in a check report");

    auto* search_cmd = app.add_subcommand("search", "counterexample search");
    add_common(search_cmd, o);
    add_search_flags(search_cmd, o);
    search_cmd->add_option("--p", o.p, "exponent (default 0.95)");

    auto* sweep_cmd = app.add_subcommand("sweep", "counterexample search over a grid of exponents");
    add_common(sweep_cmd, o);
    add_search_flags(sweep_cmd, o);
    sweep_cmd->add_option("--p-from", o.p_from, "first exponent")->required();
    sweep_cmd->add_option("--p-to", o.p_to, "last exponent")->required();
    sweep_cmd->add_option("--p-step", o.p_step, "grid step")->required();
    sweep_cmd->add_flag("--no-timing", o.no_timing, "write NA for seconds so reruns are byte-identical");
    sweep_cmd->get_option("--format")->default_str("csv");

    bool format_given = false;
    try {
        app.parse(argc, argv);
        format_given = sweep_cmd->count("--format") > 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    if (sweep_cmd->parsed() && !format_given) o.format = "csv";

    try {
        if (check->parsed()) return cmd_check(o, out, err);
        if (search_cmd->parsed()) return cmd_search(o, out, err);
        return cmd_sweep(o, out, err);
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"svmaj"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace svmaj
