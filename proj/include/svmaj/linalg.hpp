#pragma once

// Dense extended-precision linear algebra for small matrices (d <= 8).

#include "svmaj/matrix.hpp"
#include "svmaj/precision.hpp"

#include <cstddef>
#include <vector>

namespace svmaj::linalg {

/// Eigendecomposition of a Hermitian matrix: H = V diag(values) V*.
struct EigResult {
    std::vector<Real> values;  ///< descending; ties keep the solver's index order
    Matrix vectors;            ///< unitary, columns are eigenvectors
    Real residual;             ///< ||H V - V diag(values)||_F
};

/// Singular values sigma_1 >= ... >= sigma_d >= 0.
class SingularValues {
public:
    SingularValues() = default;
    /// Throws ContractViolation if `values` is not descending and nonnegative.
    explicit SingularValues(std::vector<Real> values);

    [[nodiscard]] const std::vector<Real>& values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Real& operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] Real sum() const;
    /// Entrywise x -> x^p (order is preserved for p > 0).
    [[nodiscard]] SingularValues power(const Real& p) const;

private:
    std::vector<Real> values_;
};

struct LoewnerResult {
    bool verdict;  ///< X <= Y within tolerance
    Real margin;   ///< minimum eigenvalue of Y - X
};

// ---- certification -----------------------------------------------------------

/// Checks M = M* entrywise within tau*max(1,||M||_F), then returns the exact
/// Hermitian part (M + M*)/2 flagged Hermitian. Throws ContractViolation otherwise.
Matrix certify_hermitian(const Matrix& m, const PrecisionConfig& prec);
/// Hermitian and minimum eigenvalue >= -tau*max(1,||M||_F).
Matrix certify_psd(const Matrix& m, const PrecisionConfig& prec);
/// Hermitian and minimum eigenvalue > tau*max(1,||M||_F).
Matrix certify_positive_definite(const Matrix& m, const PrecisionConfig& prec);
/// Off-diagonal entries exactly zero and diagonal real and >= 0.
Matrix certify_nonnegative_diagonal(const Matrix& m);
/// (M + M*)/2 without any check, for products that are Hermitian in exact arithmetic.
Matrix hermitian_part(const Matrix& m);

// ---- operations -----------------------------------------------------------------

/// Cyclic complex Jacobi. H must be square and Hermitian within tolerance.
EigResult hermitian_eig(const Matrix& h, const PrecisionConfig& prec);
Real min_eigenvalue(const Matrix& h, const PrecisionConfig& prec);
Real max_eigenvalue(const Matrix& h, const PrecisionConfig& prec);

/// Square roots of the eigenvalues of X*X, evaluated at twice the working
/// precision so that small singular values keep absolute accuracy tau*||X||.
SingularValues svd_values(const Matrix& x, const PrecisionConfig& prec);
Real operator_norm(const Matrix& x, const PrecisionConfig& prec);

/// U diag(lambda^p) U* for PSD H. Eigenvalues of magnitude below tau*||H|| are
/// clamped to 0; more negative eigenvalues raise ContractViolation; a clamped
/// zero with p <= 0 raises SingularityError.
Matrix psd_power(const Matrix& h, const Real& p, const PrecisionConfig& prec);

/// S diag(lambda^p) S^-1 for invertible S and nonnegative lambda.
Matrix similarity_power(const Matrix& s, const std::vector<Real>& lambdas, const Real& p,
                        const PrecisionConfig& prec);
Matrix similarity_power(const Matrix& s, const Matrix& lambda, const Real& p, const PrecisionConfig& prec);

/// X <= Y in the Loewner order: margin = min eig(Y - X), verdict = margin >= -tau*max(1,||X||_F,||Y||_F).
LoewnerResult loewner_leq(const Matrix& x, const Matrix& y, const PrecisionConfig& prec);

/// k-th compound: the C(d,k) x C(d,k) matrix of k x k minors, rows and columns
/// indexed by lexicographically ordered index subsets.
Matrix compound(const Matrix& x, std::size_t k);
/// Lexicographic k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);
Complex determinant(const Matrix& x);

Matrix hadamard(const Matrix& x, const Matrix& y);

/// Inverse by Gauss-Jordan elimination with partial pivoting at 1.5x working
/// precision. Throws SingularityError for an exactly singular pivot and
/// IllConditioned when the 1-norm condition estimate exceeds 10^(digits/2).
Matrix inverse(const Matrix& x, const PrecisionConfig& prec);
/// 1-norm condition number ||X||_1 ||X^-1||_1 (infinite -> throws SingularityError).
Real condition_number(const Matrix& x, const PrecisionConfig& prec);

}  // namespace svmaj::linalg
