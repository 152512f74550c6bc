#pragma once

// One check per statement: each takes concrete matrices, evaluates both sides
// at the working precision and returns a report that says whether the
// statement holds on the instance and whether its validity condition applies.

#include "svmaj/exponent.hpp"
#include "svmaj/majorize.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace svmaj {

enum class Direction { Forward, Reversed };

std::string to_string(Direction d);
/// Accepts "forward" and "reversed"; throws ParseError otherwise.
Direction parse_direction(const std::string& text);

// ---- validity conditions (exact in p) -----------------------------------------

/// sigma(B^p A^p) <_w sigma((BA)^p): p <= 1/2, or d <= 2 and p <= 1, or
/// 1/p in N_0, or 1/p >= d-1.
bool theorem1_forward_holds(std::size_t d, const Exponent& p);
/// The reversed majorisation: p >= 1 with p in N_0 or p >= d-1.
bool theorem1_reversed_holds(std::size_t d, const Exponent& p);
/// sigma^p(X) <_w sigma(X^p) for p <= 1 needs 1/p in N_0 or 1/p >= d-1; for
/// p >= 1 the reversed majorisation needs p in N_0 or p >= d-1.
bool theorem3_holds(std::size_t d, const Exponent& p);
/// alpha in N_0 or alpha >= d-1.
bool fh_condition(std::size_t d, const Exponent& alpha);
/// q in N_0 or q >= d-2.
bool fitzgerald_horn_condition(std::size_t d, const Exponent& q);

// ---- decomposition A = S S*, AB = S Lambda S^-1 ---------------------------------

struct Decomposition {
    Matrix s;
    Matrix s_inv;
    std::vector<Real> lambdas;  ///< descending, >= 0
    Real residual_a;            ///< ||A - S S*||_F
    Real residual_ab;           ///< ||AB - S Lambda S^-1||_F
    Real residual_b;            ///< ||B - S^-* Lambda S^-1||_F

    [[nodiscard]] Matrix lambda() const { return Matrix::diagonal(lambdas); }
    [[nodiscard]] Json to_json() const;
};

/// Hermitian route, no nonsymmetric eigensolver: M = A^1/2 B A^1/2 = U Lambda U*,
/// S = A^1/2 U and S^-1 = U* A^-1/2. Throws ContractViolation unless A > 0 and B >= 0.
Decomposition lemma_decompose(const Matrix& a, const Matrix& b, const PrecisionConfig& prec);
/// Tolerance the decomposition residuals are held to: tau (1 + ||A||)(1 + ||B||).
Real decomposition_tolerance(const Matrix& a, const Matrix& b, const PrecisionConfig& prec);

// ---- majorisation theorems ---------------------------------------------------------

struct TheoremReport {
    std::string statement;
    Direction direction = Direction::Forward;
    Exponent p;
    std::size_t dim = 0;
    bool condition_satisfied = false;  ///< the statement is proven for (dim, p)
    bool perturbed = false;            ///< a singular A was replaced by A + eps I
    MajorisationReport majorisation;

    [[nodiscard]] bool verdict() const { return majorisation.verdict; }
    /// A failure where the statement is proven.
    [[nodiscard]] bool unexpected() const { return condition_satisfied && !verdict(); }
    [[nodiscard]] Json to_json() const;
};

/// Forward: sigma(B^p A^p) <_w sigma((BA)^p). Reversed: the opposite majorisation.
/// (BA)^p is evaluated as A^-1/2 M^p A^1/2 with M from lemma_decompose.
TheoremReport theorem1_check(const Matrix& a, const Matrix& b, const Exponent& p, Direction direction,
                             const PrecisionConfig& prec);

/// sigma(A^p B^p) <_w sigma^p(AB) for p <= 1, reversed for p > 1.
TheoremReport theorem2_check(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec);

/// X = S Lambda S^-1. For p <= 1: sigma^p(X) <_w sigma(X^p); for p > 1 reversed.
TheoremReport theorem3_check(const Matrix& s, const Matrix& lambda, const Exponent& p, const PrecisionConfig& prec);
/// X = AB for a PSD pair, using the decomposition as its certificate.
TheoremReport theorem3_check(const Decomposition& dec, const Exponent& p, const PrecisionConfig& prec);

// ---- the matrix C of the interpolation lemma ------------------------------------------

struct FHSpec {
    std::vector<Real> lambdas;  ///< >= 0
    Exponent alpha;             ///< > 0
};

/// C_ij = (1 - (l_i l_j)^alpha) / (1 - l_i l_j), evaluated through expm1/log1p;
/// alpha where |1 - l_i l_j| <= tau.
Matrix fh_matrix(const FHSpec& spec, const PrecisionConfig& prec);

struct PsdCheck {
    bool verdict = true;               ///< min_eig >= -tau * max(1, ||C||_F)
    Real min_eig;
    bool condition_satisfied = false;  ///< PSD is proven
    [[nodiscard]] bool unexpected() const { return condition_satisfied && !verdict; }
    [[nodiscard]] Json to_json() const;
};

PsdCheck fh_psd_check(const FHSpec& spec, const PrecisionConfig& prec);

/// Max over entries of |closed form - alpha * int_0^1 (t + (1-t) l_i l_j)^(alpha-1) dt|,
/// with the integral by composite Gauss-Legendre graded towards the integrand's
/// singularity at t = -x/(1-x).
Real fh_integral_check(const FHSpec& spec, const PrecisionConfig& prec);
/// One entry of the integral representation (exposed for tests).
Real fh_integral_entry(const Real& x, const Exponent& alpha, const PrecisionConfig& prec);

/// Min eigenvalue of the entrywise q-th power of an entrywise nonnegative PSD
/// matrix. Throws DomainError on a negative or non-real entry.
PsdCheck entrywise_power_psd_check(const Matrix& m, const Exponent& q, const PrecisionConfig& prec);

// ---- the final equivalent form ------------------------------------------------------------

struct ImplicationReport {
    Exponent p;
    bool premise = false;     ///< (ABA)^2 <= A^4
    Real premise_margin;      ///< min eig(A^4 - (ABA)^2)
    bool conclusion = false;  ///< (A B^1/p A)^2p <= A^4p
    Real conclusion_margin;   ///< min eig(A^4p - (A B^1/p A)^2p)
    /// Premise true and conclusion false.
    [[nodiscard]] bool forward_violated() const { return premise && !conclusion; }
    /// Conclusion true and premise false: a failure of the converse implication.
    [[nodiscard]] bool converse_violated() const { return conclusion && !premise; }
    [[nodiscard]] Json to_json() const;
};

ImplicationReport implication_check(const Matrix& a, const Matrix& b, const Exponent& p, const PrecisionConfig& prec);

struct EquivalenceReport {
    Exponent p;
    bool sigma_form = false;   ///< ||B^p A^p|| <= ||(BA)^p||
    bool c_form = false;       ///< conclusion of the C/Lambda form at the premise boundary
    bool final_form = false;   ///< conclusion of the (ABA)^2 form at the premise boundary
    Real sigma_margin;         ///< ||(BA)^p|| - ||B^p A^p||
    Real c_margin;
    Real final_margin;
    Real boundary_scale;       ///< t* putting Lambda^p C Lambda^p <= C on its boundary

    [[nodiscard]] bool agree() const { return sigma_form == c_form && c_form == final_form; }
    [[nodiscard]] Json to_json() const;
};

/// Evaluates the sigma_1 inequality for (A, B), then carries the instance
/// through the decomposition to C = S^-1 S^-* and Lambda, scales Lambda so the
/// premise sits on its boundary, and evaluates the conclusion in the C/Lambda
/// form and in the final form with A_f = C^1/2, B_f = (t* Lambda)^p.
/// Requires 0 < p <= 1.
EquivalenceReport equivalent_forms_check(const Matrix& a, const Matrix& b, const Exponent& p,
                                         const PrecisionConfig& prec);

/// Maps a final-form pair (A_f, B_f) to an original-form pair: A = A_f^-2,
/// B = A_f B_f^(1/p) A_f. The sigma_1 inequality for (A, B) is equivalent to
/// the final-form implication for (A_f, B_f).
std::pair<Matrix, Matrix> to_original_form(const Matrix& a_final, const Matrix& b_final, const Exponent& p,
                                           const PrecisionConfig& prec);

/// Stable 64-bit FNV-1a digest of a matrix's JSON form, as 16 hex digits.
std::string matrix_hash(const Matrix& m);

}  // namespace svmaj
