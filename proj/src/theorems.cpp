#include "svmaj/theorems.hpp"

#include "svmaj/errors.hpp"
#include "svmaj/numerics.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace svmaj {

using linalg::SingularValues;

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "reversed"; }

Direction parse_direction(const std::string& text) {
    if (text == "forward") return Direction::Forward;
    if (text == "reversed") return Direction::Reversed;
    throw ParseError("direction must be forward or reversed, got '" + text + "'");
}

namespace {

Exponent dim_minus(std::size_t d, std::int64_t k) { return Exponent(static_cast<std::int64_t>(d) - k); }

void require_positive(const Exponent& p, const char* what) {
    if (!p.is_positive()) throw DomainError(std::string(what) + ": exponent must be positive, got " + p.to_string());
}

void require_same_square(const Matrix& a, const Matrix& b, const char* what) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionMismatch(std::string(what) + ": matrices must be square of equal size");
    }
}

Matrix half_power(const Matrix& h, const PrecisionConfig& prec) { return linalg::psd_power(h, prec.from(0.5), prec); }

SingularValues product_values(const Matrix& x, const Matrix& y, const PrecisionConfig& prec) {
    return linalg::svd_values(x * y, prec);
}

Json margin_json(const Real& r) { return r.to_string(); }

TheoremReport make_report(std::string statement, Direction direction, const Exponent& p, std::size_t dim,
                          bool condition, const SingularValues& smaller, const SingularValues& larger,
                          const PrecisionConfig& prec) {
    TheoremReport r;
    r.statement = std::move(statement);
    r.direction = direction;
    r.p = p;
    r.dim = dim;
    r.condition_satisfied = condition;
    r.majorisation = weak_majorisation_leq(smaller, larger, prec);
    return r;
}

/// S diag(lambda^p) S^-1 from a certificate whose inverse is already known.
Matrix certified_power(const Matrix& s, const Matrix& s_inv, const std::vector<Real>& lambdas, const Real& p) {
    Matrix scaled = s;
    for (std::size_t j = 0; j < s.cols(); ++j) {
        const Real w = real_power(lambdas[j], p);
        for (std::size_t i = 0; i < s.rows(); ++i) scaled(i, j) *= w;
    }
    return scaled * s_inv;
}

TheoremReport theorem3_impl(const Matrix& s, const Matrix& s_inv, const std::vector<Real>& lambdas,
                            const Exponent& p, const PrecisionConfig& prec) {
    require_positive(p, "theorem3_check");
    const std::size_t d = s.rows();
    const Real pv = p.value(prec.bits());
    const SingularValues powered_sigma = linalg::svd_values(certified_power(s, s_inv, lambdas, prec.one()), prec).power(pv);
    const SingularValues sigma_of_power = linalg::svd_values(certified_power(s, s_inv, lambdas, pv), prec);
    const bool low = p <= Exponent(1);
    return make_report(low ? "sigma^p(X) <_w sigma(X^p)" : "sigma(X^p) <_w sigma^p(X)",
                       low ? Direction::Forward : Direction::Reversed, p, d, theorem3_holds(d, p),
                       low ? powered_sigma : sigma_of_power, low ? sigma_of_power : powered_sigma, prec);
}

/// Entry (1 - x^alpha)/(1 - x) for x >= 0.
Real fh_entry(const Real& x, const Real& alpha, const PrecisionConfig& prec) {
    if (x.is_zero()) return prec.one();
    const Real h = prec.one() - x;
    if (abs(h) <= prec.tau()) return alpha;
    return -expm1(alpha * log(x)) / h;
}

}  // namespace

// ---- conditions -----------------------------------------------------------------------

bool theorem1_forward_holds(std::size_t d, const Exponent& p) {
    if (!p.is_positive() || p > Exponent(1)) return false;
    if (d <= 2 || p <= Exponent(1, 2) || p.reciprocal_is_natural()) return true;
    return p.reciprocal() >= dim_minus(d, 1);
}

bool theorem1_reversed_holds(std::size_t d, const Exponent& p) {
    if (p < Exponent(1)) return false;
    return d <= 1 || p.is_natural() || p >= dim_minus(d, 1);
}

bool theorem3_holds(std::size_t d, const Exponent& p) {
    if (!p.is_positive()) return false;
    if (d <= 1) return true;
    if (p <= Exponent(1)) return p.reciprocal_is_natural() || p.reciprocal() >= dim_minus(d, 1);
    return p.is_natural() || p >= dim_minus(d, 1);
}

bool fh_condition(std::size_t d, const Exponent& alpha) {
    return alpha.is_natural() || alpha >= dim_minus(d, 1);
}

bool fitzgerald_horn_condition(std::size_t d, const Exponent& q) {
    return q.is_natural() || q >= dim_minus(d, 2);
}

// ---- decomposition ----------------------------------------------------------------------

Real decomposition_tolerance(const Matrix& a, const Matrix& b, const PrecisionConfig& prec) {
    return prec.tau() * (a.frobenius_norm() + 1L) * (b.frobenius_norm() + 1L);
}

Decomposition lemma_decompose(const Matrix& a, const Matrix& b, const PrecisionConfig& prec) {
    require_same_square(a, b, "lemma_decompose");
    const Matrix a_pd = linalg::certify_positive_definite(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    const Matrix a_half = half_power(a_pd, prec);
    const Matrix a_mhalf = linalg::psd_power(a_pd, prec.from(-0.5), prec);

    const Matrix m = linalg::hermitian_part(a_half * b_psd * a_half);
    linalg::EigResult eig = linalg::hermitian_eig(m, prec);
    const Real clamp = prec.tau(m.frobenius_norm());
    for (auto& v : eig.values) {
        if (v < -clamp) throw ContractViolation("lemma_decompose: A^1/2 B A^1/2 has a negative eigenvalue");
        if (v.sign() < 0) v = Real(v.precision());
    }

    Decomposition dec{a_half * eig.vectors, eig.vectors.adjoint() * a_mhalf, std::move(eig.values), {}, {}, {}};
    const Matrix lam = dec.lambda();
    dec.residual_a = (a_pd - dec.s * dec.s.adjoint()).frobenius_norm();
    dec.residual_ab = (a_pd * b_psd - dec.s * lam * dec.s_inv).frobenius_norm();
    dec.residual_b = (b_psd - dec.s_inv.adjoint() * lam * dec.s_inv).frobenius_norm();
    return dec;
}

Json Decomposition::to_json() const {
    Json j = Json::object();
    j["S"] = svmaj::to_json(s);
    j["lambdas"] = to_json_strings(lambdas);
    j["residual_A"] = margin_json(residual_a);
    j["residual_AB"] = margin_json(residual_ab);
    j["residual_B"] = margin_json(residual_b);
    return j;
}

// ---- majorisation theorems ----------------------------------------------------------------

Json TheoremReport::to_json() const {
    Json j = Json::object();
    j["statement"] = statement;
    j["direction"] = to_string(direction);
    j["p"] = p.to_string();
    j["dim"] = dim;
    j["condition_satisfied"] = condition_satisfied;
    j["perturbed"] = perturbed;
    j["unexpected"] = unexpected();
    j["majorisation"] = majorisation.to_json();
    return j;
}

TheoremReport theorem1_check(const Matrix& a, const Matrix& b, const Exponent& p, Direction direction,
                             const PrecisionConfig& prec) {
    require_same_square(a, b, "theorem1_check");
    require_positive(p, "theorem1_check");
    const std::size_t d = a.rows();

    Matrix a_use = linalg::certify_psd(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    bool perturbed = false;
    PrecisionConfig work = prec;
    if (!(linalg::min_eigenvalue(a_use, prec) > prec.tau(a_use.frobenius_norm()))) {
        // Continuity: A + eps I with eps = tau max(1, ||A||), evaluated with
        // doubled digits so that A^-1/2 ~ eps^-1/2 costs no accuracy.
        perturbed = true;
        work = prec.shifted(prec.digits());
        const Real eps = prec.tau(a_use.frobenius_norm());
        a_use = a_use.with_precision(work.bits());
        for (std::size_t i = 0; i < d; ++i) a_use(i, i).re += eps;
        a_use = linalg::certify_psd(a_use, work);
    }
    const Matrix b_use = b_psd.with_precision(work.bits());
    const Real pv = p.value(work.bits());

    const SingularValues sigma_product =
        product_values(linalg::psd_power(b_use, pv, work), linalg::psd_power(a_use, pv, work), work);

    const Decomposition dec = lemma_decompose(a_use, b_use, work);
    std::vector<Real> powered;
    for (const auto& l : dec.lambdas) powered.push_back(real_power(l, pv));
    const SingularValues sigma_power =
        linalg::svd_values(dec.s_inv.adjoint() * Matrix::diagonal(powered) * dec.s.adjoint(), work);

    const bool forward = direction == Direction::Forward;
    TheoremReport r = make_report(forward ? "sigma(B^p A^p) <_w sigma((BA)^p)" : "sigma((BA)^p) <_w sigma(B^p A^p)",
                                  direction, p, d,
                                  forward ? theorem1_forward_holds(d, p) : theorem1_reversed_holds(d, p),
                                  forward ? sigma_product : sigma_power, forward ? sigma_power : sigma_product, prec);
    r.perturbed = perturbed;
    return r;
}

TheoremReport theorem2_check(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec) {
    require_same_square(a, b, "theorem2_check");
    require_positive(p, "theorem2_check");
    const Matrix a_psd = linalg::certify_psd(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    const Real pv = p.value(prec.bits());
    const SingularValues sigma_powers =
        product_values(linalg::psd_power(a_psd, pv, prec), linalg::psd_power(b_psd, pv, prec), prec);
    const SingularValues powered_sigma = product_values(a_psd, b_psd, prec).power(pv);
    const bool low = p <= Exponent(1);
    return make_report(low ? "sigma(A^p B^p) <_w sigma^p(AB)" : "sigma^p(AB) <_w sigma(A^p B^p)",
                       low ? Direction::Forward : Direction::Reversed, p, a.rows(), true,
                       low ? sigma_powers : powered_sigma, low ? powered_sigma : sigma_powers, prec);
}

TheoremReport theorem3_check(const Matrix& s, const Matrix& lambda, const Exponent& p, const PrecisionConfig& prec) {
    require_same_square(s, lambda, "theorem3_check");
    const Matrix diag = lambda.has(Property::NonnegativeDiagonal) ? lambda : linalg::certify_nonnegative_diagonal(lambda);
    std::vector<Real> lambdas;
    for (const auto& z : diag.diagonal_entries()) lambdas.push_back(z.re);
    return theorem3_impl(s, linalg::inverse(s, prec), lambdas, p, prec);
}

TheoremReport theorem3_check(const Decomposition& dec, const Exponent& p, const PrecisionConfig& prec) {
    return theorem3_impl(dec.s, dec.s_inv, dec.lambdas, p, prec);
}

// ---- the interpolation lemma ------------------------------------------------------------------

Matrix fh_matrix(const FHSpec& spec, const PrecisionConfig& prec) {
    require_positive(spec.alpha, "fh_matrix");
    const std::size_t d = spec.lambdas.size();
    const Real alpha = spec.alpha.value(prec.bits());
    for (const auto& l : spec.lambdas) {
        if (l.sign() < 0) throw DomainError("fh_matrix: lambda must be nonnegative");
    }
    Matrix c(d, d, prec.bits());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const Real x = (spec.lambdas[i] * spec.lambdas[j]).with_precision(prec.bits());
            c(i, j) = Complex(fh_entry(x, alpha, prec));
            c(j, i) = c(i, j);
        }
    }
    return std::move(c).with_properties(Property::Hermitian);
}

Json PsdCheck::to_json() const {
    Json j = Json::object();
    j["verdict"] = verdict;
    j["min_eig"] = min_eig.to_string();
    j["condition_satisfied"] = condition_satisfied;
    j["unexpected"] = unexpected();
    return j;
}

PsdCheck fh_psd_check(const FHSpec& spec, const PrecisionConfig& prec) {
    const Matrix c = fh_matrix(spec, prec);
    PsdCheck r;
    r.min_eig = linalg::min_eigenvalue(c, prec);
    r.verdict = r.min_eig >= -prec.tau(c.frobenius_norm());
    r.condition_satisfied = fh_condition(spec.lambdas.size(), spec.alpha);
    return r;
}

Real fh_integral_entry(const Real& x, const Exponent& alpha, const PrecisionConfig& prec) {
    const Real a = alpha.value(prec.bits());
    const Real xw = x.with_precision(prec.bits());
    if (alpha == Exponent(1) || xw == 1L) return a;
    const Real am1 = a - 1L;
    const Real slope = prec.one() - xw;
    const Integrand f = [&](const Real& t) { return real_power(xw + slope * t, am1, true); };

    // The integrand t -> (x + t(1-x))^(alpha-1) is singular at t* = -x/(1-x),
    // outside [0, 1]. Intervals grow geometrically away from the endpoint
    // nearest t*, each as wide as its distance to t*.
    const bool toward_zero = xw < 1L;
    Real gap = toward_zero ? xw / slope : prec.one() / (xw - 1L);
    const Real floor_gap = pow10_neg(prec.digits(), prec.bits());
    if (gap < floor_gap) gap = floor_gap;

    std::vector<Real> cuts{prec.zero()};
    Real r = gap;
    while (r < 1L) {
        cuts.push_back(r);
        r = r * 2L + gap;
    }
    cuts.push_back(prec.one());
    if (!toward_zero) {
        for (auto& c : cuts) c = prec.one() - c;
        std::reverse(cuts.begin(), cuts.end());
    }

    const Real tol = prec.tau() / static_cast<long>(10 * cuts.size());
    Real sum = prec.zero();
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        sum += gauss_legendre_converged(f, cuts[k], cuts[k + 1], tol, prec, 16, 256);
    }
    return a * sum;
}

Real fh_integral_check(const FHSpec& spec, const PrecisionConfig& prec) {
    const Matrix c = fh_matrix(spec, prec);
    Real worst = prec.zero();
    const std::size_t d = spec.lambdas.size();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const Real x = spec.lambdas[i] * spec.lambdas[j];
            worst = max(worst, abs(c(i, j).re - fh_integral_entry(x, spec.alpha, prec)));
        }
    }
    return worst;
}

PsdCheck entrywise_power_psd_check(const Matrix& m, const Exponent& q, const PrecisionConfig& prec) {
    const Matrix h = linalg::certify_psd(m, prec);
    const std::size_t d = h.rows();
    const Real tol = prec.tau(h.frobenius_norm());
    const Real qv = q.value(prec.bits());
    Matrix powered(d, d, prec.bits());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Complex& z = h(i, j);
            if (abs(z.im) > tol || z.re < -tol) {
                throw DomainError("entrywise_power_psd_check: entry is not a nonnegative real");
            }
            const Real x = z.re.sign() < 0 ? prec.zero() : z.re;
            powered(i, j) = Complex(real_power(x, qv, true));
        }
    }
    PsdCheck r;
    r.min_eig = linalg::min_eigenvalue(powered, prec);
    r.verdict = r.min_eig >= -prec.tau(powered.frobenius_norm());
    r.condition_satisfied = fitzgerald_horn_condition(d, q);
    return r;
}

// ---- final form and the equivalence chain -----------------------------------------------------

Json ImplicationReport::to_json() const {
    Json j = Json::object();
    j["p"] = p.to_string();
    j["premise"] = premise;
    j["premise_margin"] = premise_margin.to_string();
    j["conclusion"] = conclusion;
    j["conclusion_margin"] = conclusion_margin.to_string();
    return j;
}

ImplicationReport implication_check(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec) {
    require_same_square(a, b, "implication_check");
    require_positive(p, "implication_check");
    const Matrix a_pd = linalg::certify_positive_definite(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);
    const Real pv = p.value(prec.bits());

    const Matrix a2 = linalg::hermitian_part(a_pd * a_pd);
    const Matrix aba = linalg::hermitian_part(a_pd * b_psd * a_pd);
    const linalg::LoewnerResult premise =
        linalg::loewner_leq(linalg::hermitian_part(aba * aba), linalg::hermitian_part(a2 * a2), prec);

    const Matrix inner = linalg::hermitian_part(a_pd * linalg::psd_power(b_psd, prec.one() / pv, prec) * a_pd);
    const linalg::LoewnerResult conclusion = linalg::loewner_leq(
        linalg::psd_power(inner, pv * 2L, prec), linalg::psd_power(a_pd, pv * 4L, prec), prec);

    return ImplicationReport{p, premise.verdict, premise.margin, conclusion.verdict, conclusion.margin};
}

Json EquivalenceReport::to_json() const {
    Json j = Json::object();
    j["p"] = p.to_string();
    j["agree"] = agree();
    j["sigma_form"] = sigma_form;
    j["c_form"] = c_form;
    j["final_form"] = final_form;
    j["sigma_margin"] = sigma_margin.to_string();
    j["c_margin"] = c_margin.to_string();
    j["final_margin"] = final_margin.to_string();
    j["boundary_scale"] = boundary_scale.to_string();
    return j;
}

EquivalenceReport equivalent_forms_check(const Matrix& a, const Matrix& b, const Exponent& p,
                                         const PrecisionConfig& prec) {
    require_same_square(a, b, "equivalent_forms_check");
    if (!p.is_positive() || p > Exponent(1)) throw DomainError("equivalent_forms_check: needs 0 < p <= 1");
    const Real pv = p.value(prec.bits());
    const Decomposition dec = lemma_decompose(a, b, prec);
    const Matrix a_pd = linalg::certify_positive_definite(a, prec);
    const Matrix b_psd = linalg::certify_psd(b, prec);

    EquivalenceReport r;
    r.p = p;

    // (i) ||B^p A^p|| <= ||(BA)^p|| with (BA)^p = S^-* Lambda^p S*.
    std::vector<Real> lam_p;
    for (const auto& l : dec.lambdas) lam_p.push_back(real_power(l, pv));
    const Matrix lam_p_m = Matrix::diagonal(lam_p);
    const Real lhs = linalg::operator_norm(linalg::psd_power(b_psd, pv, prec) * linalg::psd_power(a_pd, pv, prec), prec);
    const Real rhs = linalg::operator_norm(dec.s_inv.adjoint() * lam_p_m * dec.s.adjoint(), prec);
    r.sigma_margin = rhs - lhs;
    r.sigma_form = r.sigma_margin >= -prec.tau(rhs);

    // (ii) C = S^-1 S^-*; the premise Lambda^p C Lambda^p <= C holds with
    // equality after Lambda -> t* Lambda. The conclusion is then B^2p <= A^-2p
    // for the same rescaling of B.
    const Matrix c = linalg::certify_positive_definite(linalg::hermitian_part(dec.s_inv * dec.s_inv.adjoint()), prec);
    const Matrix c_mhalf = linalg::psd_power(c, prec.from(-0.5), prec);
    const Matrix premise_ratio = linalg::hermitian_part(c_mhalf * lam_p_m * c * lam_p_m * c_mhalf);
    const Real top = linalg::max_eigenvalue(premise_ratio, prec);
    if (!(top.sign() > 0)) throw SingularityError("equivalent_forms_check: B A is nilpotent, no premise boundary");
    r.boundary_scale = pow(top, -(prec.one() / (pv * 2L)));
    const linalg::LoewnerResult c_concl =
        linalg::loewner_leq(linalg::psd_power(r.boundary_scale * b_psd, pv * 2L, prec),
                            linalg::psd_power(a_pd, -(pv * 2L), prec), prec);
    r.c_form = c_concl.verdict;
    r.c_margin = c_concl.margin;

    // (iii) A_f = C^1/2, B_f = (t* Lambda)^p in (ABA)^2 <= A^4 => (A B^1/p A)^2p <= A^4p.
    std::vector<Real> scaled;
    for (const auto& l : dec.lambdas) scaled.push_back(real_power(r.boundary_scale * l, pv));
    const ImplicationReport fin = implication_check(half_power(c, prec), Matrix::diagonal(scaled), p, prec);
    r.final_form = fin.conclusion;
    r.final_margin = fin.conclusion_margin;
    return r;
}

std::pair<Matrix, Matrix> to_original_form(const Matrix& a_final, const Matrix& b_final, const Exponent& p,
                                           const PrecisionConfig& prec) {
    require_same_square(a_final, b_final, "to_original_form");
    require_positive(p, "to_original_form");
    const Matrix af = linalg::certify_positive_definite(a_final, prec);
    const Matrix lam = linalg::psd_power(b_final, prec.one() / p.value(prec.bits()), prec);
    Matrix a_orig = linalg::psd_power(af, prec.from(-2L), prec);
    Matrix b_orig = linalg::certify_psd(linalg::hermitian_part(af * lam * af), prec);
    return {std::move(a_orig), std::move(b_orig)};
}

std::string matrix_hash(const Matrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : to_json(m).dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace svmaj
