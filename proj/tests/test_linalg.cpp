#include <gtest/gtest.h>

#include "svmaj/errors.hpp"
#include "svmaj/linalg.hpp"
#include "svmaj/random_matrices.hpp"

#include <vector>

using namespace svmaj;
using namespace svmaj::linalg;

namespace {

Real distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }

Real scale_of(const Matrix& a) { return max(Real(1L, a.precision()), a.frobenius_norm()); }

// Roots of t^2 - tr t + det for a real symmetric 2x2; the independent oracle for 2x2 spectra.
std::pair<Real, Real> quadratic_roots(const Real& tr, const Real& det) {
    const Real disc = sqrt(tr * tr - det * 4L);
    return {(tr + disc) / 2L, (tr - disc) / 2L};
}

}  // namespace

TEST(HermitianEig, IdentityHasUnitEigenvalues) {
    const PrecisionConfig prec;
    const EigResult r = hermitian_eig(Matrix::identity(2, prec.bits()), prec);
    EXPECT_EQ(r.values[0], 1L);
    EXPECT_EQ(r.values[1], 1L);
    EXPECT_LE(distance(r.vectors.adjoint() * r.vectors, Matrix::identity(2, prec.bits())), prec.tau());
}

TEST(HermitianEig, DiagonalSortedDescending) {
    const PrecisionConfig prec;
    const EigResult r = hermitian_eig(Matrix::from_rows({{1, 0}, {0, 3}}, prec.bits()), prec);
    EXPECT_EQ(r.values[0], 3L);
    EXPECT_EQ(r.values[1], 1L);
}

TEST(HermitianEig, SymmetricTwoByTwo) {
    const PrecisionConfig prec;
    const EigResult r = hermitian_eig(Matrix::from_rows({{2, 1}, {1, 2}}, prec.bits()), prec);
    EXPECT_LE(abs(r.values[0] - 3L), prec.tau());
    EXPECT_LE(abs(r.values[1] - 1L), prec.tau());
    const Real inv_sqrt2 = prec.one() / sqrt(prec.from(2L));
    // Up to phase: |v_0 . (1,1)/sqrt2| = 1 and |v_1 . (1,-1)/sqrt2| = 1.
    const Complex a = (r.vectors(0, 0) + r.vectors(1, 0)) * inv_sqrt2;
    const Complex b = (r.vectors(0, 1) - r.vectors(1, 1)) * inv_sqrt2;
    EXPECT_LE(abs(abs(a) - 1L), prec.tau());
    EXPECT_LE(abs(abs(b) - 1L), prec.tau());
}

TEST(HermitianEig, RejectsNonHermitian) {
    const PrecisionConfig prec;
    EXPECT_THROW(hermitian_eig(Matrix::from_rows({{1, 2}, {0, 1}}, prec.bits()), prec), ContractViolation);
}

TEST(HermitianEig, ReconstructionOnSpreadSpectra) {
    for (int digits : {30, 60}) {
        const PrecisionConfig prec(digits);
        RngStream rng(21, static_cast<std::uint64_t>(digits));
        const Real gap = pow10_neg(digits / 2, prec.bits());
        for (std::size_t d : {2U, 3U, 5U, 8U}) {
            std::vector<Real> spectrum;
            for (std::size_t i = 0; i < d; ++i) spectrum.push_back(pow(prec.from(10L), static_cast<long>(i) - 3L));
            spectrum[1] = spectrum[0] + gap;  // a near-degenerate pair
            const Matrix h = random_hermitian_with_spectrum(rng, spectrum);
            const EigResult r = hermitian_eig(h, prec);
            const Matrix rebuilt = [&] {
                Matrix v = r.vectors;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) v(i, j) *= r.values[j];
                return v * r.vectors.adjoint();
            }();
            EXPECT_LE(distance(rebuilt, h), prec.tau(h.frobenius_norm())) << "d=" << d;
            EXPECT_LE(distance(r.vectors.adjoint() * r.vectors, Matrix::identity(d, prec.bits())), prec.tau());
            for (std::size_t i = 1; i < d; ++i) EXPECT_GE(r.values[i - 1], r.values[i]);
        }
    }
}

TEST(SvdValues, UnitaryHasUnitValues) {
    const PrecisionConfig prec;
    RngStream rng(1, 0);
    const SingularValues s = svd_values(random_unitary(rng, 4, prec.bits()), prec);
    for (const auto& v : s.values()) EXPECT_LE(abs(v - 1L), prec.tau());
}

TEST(SvdValues, NilpotentRankOne) {
    const PrecisionConfig prec;
    const SingularValues s = svd_values(Matrix::from_rows({{0, 1}, {0, 0}}, prec.bits()), prec);
    EXPECT_LE(abs(s[0] - 1L), prec.tau());
    EXPECT_LE(abs(s[1]), prec.tau());
}

TEST(SvdValues, ShearMatchesQuadraticOracle) {
    // X*X = [[1,1],[1,2]]: trace 3, determinant 1.
    const PrecisionConfig prec;
    const auto [hi, lo] = quadratic_roots(prec.from(3L), prec.one());
    const SingularValues s = svd_values(Matrix::from_rows({{1, 1}, {0, 1}}, prec.bits()), prec);
    EXPECT_LE(abs(s[0] - sqrt(hi)), prec.tau());
    EXPECT_LE(abs(s[1] - sqrt(lo)), prec.tau());
    // Frozen from the oracle: (1 + sqrt5) / 2.
    EXPECT_EQ(s[0].to_string(20).substr(0, 18), "1.6180339887498948");
}

TEST(SvdValues, UnitaryInvarianceAndScaling) {
    const PrecisionConfig prec;
    RngStream rng(2, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix x = random_gaussian_matrix(rng, 4, prec.bits());
        const Matrix u = random_unitary(rng, 4, prec.bits());
        const Matrix v = random_unitary(rng, 4, prec.bits());
        const SingularValues a = svd_values(x, prec);
        const SingularValues b = svd_values(u * x * v, prec);
        const Real c = rng.uniform(prec.zero(), prec.from(5L));
        const SingularValues sc = svd_values(c * x, prec);
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_LE(abs(a[i] - b[i]), prec.tau(a[0]));
            EXPECT_LE(abs(sc[i] - c * a[i]), prec.tau(c * a[0]));
        }
    }
}

TEST(SingularValuesType, RejectsUnsortedOrNegative) {
    const PrecisionConfig prec;
    EXPECT_THROW(SingularValues({prec.one(), prec.from(2L)}), ContractViolation);
    EXPECT_THROW(SingularValues({prec.one(), prec.from(-0.5)}), ContractViolation);
}

TEST(PsdPower, IdentityExponent) {
    const PrecisionConfig prec;
    RngStream rng(3, 0);
    const Matrix h = random_gram(rng, 3, prec.bits());
    EXPECT_LE(distance(psd_power(h, prec.one(), prec), h), prec.tau(h.frobenius_norm()));
}

TEST(PsdPower, DiagonalSquareRoot) {
    const PrecisionConfig prec;
    const Matrix r = psd_power(Matrix::from_rows({{4, 0}, {0, 9}}, prec.bits()), prec.from(0.5), prec);
    EXPECT_LE(distance(r, Matrix::from_rows({{2, 0}, {0, 3}}, prec.bits())), prec.tau());
}

TEST(PsdPower, TwoByTwoSquareRootMatchesOracle) {
    // Eigenpairs (3, (1,1)/sqrt2) and (1, (1,-1)/sqrt2) give entries (sqrt3 +- 1)/2.
    const PrecisionConfig prec;
    const Matrix h = Matrix::from_rows({{2, 1}, {1, 2}}, prec.bits());
    const Real s3 = sqrt(prec.from(3L));
    const Real diag = (s3 + 1L) / 2L;
    const Real off = (s3 - 1L) / 2L;
    const Matrix expected = Matrix::from_rows({{Complex(diag), Complex(off)}, {Complex(off), Complex(diag)}});
    const Matrix r = psd_power(h, prec.from(0.5), prec);
    EXPECT_LE(distance(r, expected), prec.tau());
    EXPECT_LE(distance(expected * expected, h), prec.tau());
}

TEST(PsdPower, ExponentAdditivity) {
    const PrecisionConfig prec;
    RngStream rng(4, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix h = random_gram(rng, 3, prec.bits());
        const Real p = rng.uniform(prec.from(-2L), prec.from(2L));
        const Real q = rng.uniform(prec.from(-2L), prec.from(2L));
        const Matrix lhs = psd_power(h, p + q, prec);
        const Matrix rhs = psd_power(h, p, prec) * psd_power(h, q, prec);
        EXPECT_LE(distance(lhs, rhs), prec.tau(lhs.frobenius_norm()) * 10L);
    }
}

TEST(PsdPower, ErrorsOnNegativeOrSingular) {
    const PrecisionConfig prec;
    EXPECT_THROW(psd_power(Matrix::from_rows({{1, 0}, {0, -1}}, prec.bits()), prec.from(0.5), prec),
                 ContractViolation);
    const Matrix singular = Matrix::from_rows({{1, 0}, {0, 0}}, prec.bits());
    EXPECT_THROW(psd_power(singular, prec.from(-0.5), prec), SingularityError);
    EXPECT_LE(distance(psd_power(singular, prec.from(0.3), prec), singular), prec.tau());
}

TEST(SimilarityPower, IdentityExponentAndTrivialSimilarity) {
    const PrecisionConfig prec;
    RngStream rng(5, 0);
    const Matrix s = random_gaussian_matrix(rng, 3, prec.bits());
    const std::vector<Real> lambdas{prec.from(2L), prec.from(0.5), prec.zero()};
    const Matrix lam = Matrix::diagonal(lambdas);
    const Matrix direct = s * lam * inverse(s, prec);
    EXPECT_LE(distance(similarity_power(s, lambdas, prec.one(), prec), direct), prec.tau(direct.frobenius_norm()));

    const Matrix trivial = similarity_power(Matrix::identity(3, prec.bits()), lam, prec.from(0.5), prec);
    EXPECT_LE(distance(trivial, Matrix::diagonal({sqrt(prec.from(2L)), sqrt(prec.from(0.5)), prec.zero()})),
              prec.tau());
}

TEST(SimilarityPower, SquareOfHalfPowerReproduces) {
    const PrecisionConfig prec;
    RngStream rng(6, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix s = random_gaussian_matrix(rng, 3, prec.bits());
        std::vector<Real> lambdas;
        for (int i = 0; i < 3; ++i) lambdas.push_back(rng.uniform(prec.zero(), prec.from(3L)));
        const Matrix half = similarity_power(s, lambdas, prec.from(0.5), prec);
        const Matrix full = similarity_power(s, lambdas, prec.one(), prec);
        EXPECT_LE(distance(half * half, full), prec.tau(full.frobenius_norm() * condition_number(s, prec)));
    }
}

TEST(SimilarityPower, IllConditionedSimilarity) {
    const PrecisionConfig prec(30);
    Matrix s = Matrix::from_rows({{1, 1}, {1, 1}}, prec.bits());
    s(1, 1) = Complex(prec.one() + pow10_neg(20, prec.bits()));
    EXPECT_THROW(similarity_power(s, {prec.one(), prec.one()}, prec.from(0.5), prec), IllConditioned);
}

TEST(Loewner, Examples) {
    const PrecisionConfig prec;
    const Matrix i2 = Matrix::identity(2, prec.bits());
    const LoewnerResult a = loewner_leq(i2, prec.from(2L) * i2, prec);
    EXPECT_TRUE(a.verdict);
    EXPECT_LE(abs(a.margin - 1L), prec.tau());

    const LoewnerResult b = loewner_leq(Matrix::from_rows({{1, 0}, {0, 3}}, prec.bits()),
                                        Matrix::from_rows({{2, 0}, {0, 2}}, prec.bits()), prec);
    EXPECT_FALSE(b.verdict);
    EXPECT_LE(abs(b.margin + 1L), prec.tau());

    RngStream rng(7, 0);
    const Matrix x = random_gram(rng, 3, prec.bits());
    const LoewnerResult c = loewner_leq(x, x, prec);
    EXPECT_TRUE(c.verdict);
    EXPECT_LE(abs(c.margin), prec.tau());

    EXPECT_THROW(loewner_leq(i2, Matrix::identity(3, prec.bits()), prec), DimensionMismatch);
}

TEST(Compound, FirstAndTopCompounds) {
    const PrecisionConfig prec;
    RngStream rng(8, 0);
    const Matrix x = random_gaussian_matrix(rng, 3, prec.bits());
    EXPECT_LE(distance(compound(x, 1), x), prec.tau());
    const Matrix top = compound(x, 3);
    ASSERT_EQ(top.rows(), 1U);
    const Complex det = determinant(x);
    EXPECT_LE(abs(top(0, 0) - det), prec.tau(abs(det)));
    EXPECT_THROW(compound(x, 0), DomainError);
    EXPECT_THROW(compound(x, 4), DomainError);
}

TEST(Compound, DiagonalMinors) {
    const PrecisionConfig prec;
    const Matrix c = compound(Matrix::diagonal({prec.from(2L), prec.from(3L), prec.from(5L)}), 2);
    EXPECT_LE(distance(c, Matrix::diagonal({prec.from(6L), prec.from(10L), prec.from(15L)})), prec.tau());
}

TEST(Compound, LexicographicSubsets) {
    const auto s = index_subsets(4, 2);
    const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    EXPECT_EQ(s, expected);
}

TEST(Compound, MultiplicativeAndTopSingularValue) {
    const PrecisionConfig prec;
    RngStream rng(9, 0);
    for (std::size_t d : {3U, 4U}) {
        const Matrix x = random_gaussian_matrix(rng, d, prec.bits());
        const Matrix y = random_gaussian_matrix(rng, d, prec.bits());
        const SingularValues sx = svd_values(x, prec);
        for (std::size_t k = 1; k <= d; ++k) {
            const Matrix lhs = compound(x * y, k);
            const Matrix rhs = compound(x, k) * compound(y, k);
            EXPECT_LE(distance(lhs, rhs), prec.tau(lhs.frobenius_norm())) << "d=" << d << " k=" << k;

            Real product = prec.one();
            for (std::size_t j = 0; j < k; ++j) product *= sx[j];
            EXPECT_LE(abs(operator_norm(compound(x, k), prec) - product), prec.tau(product)) << "d=" << d << " k=" << k;
        }
    }
}

TEST(Hadamard, OnesIsNeutral) {
    const PrecisionConfig prec;
    RngStream rng(10, 0);
    const Matrix x = random_gaussian_matrix(rng, 3, prec.bits());
    Matrix ones(3, 3, prec.bits());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = Complex(prec.one());
    EXPECT_EQ(distance(hadamard(x, ones), x), 0L);
    EXPECT_THROW(hadamard(x, Matrix::identity(2, prec.bits())), DimensionMismatch);
}

TEST(OperatorNorm, DiagonalExample) {
    const PrecisionConfig prec;
    EXPECT_LE(abs(operator_norm(Matrix::from_rows({{3, 0}, {0, -1}}, prec.bits()), prec) - 3L), prec.tau());
}

TEST(Inverse, RoundTripAndResidual) {
    const PrecisionConfig prec;
    RngStream rng(11, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix x = random_gaussian_matrix(rng, 4, prec.bits());
        const Matrix xi = inverse(x, prec);
        EXPECT_LE(distance(x * xi, Matrix::identity(4, prec.bits())), prec.tau(condition_number(x, prec)));
        EXPECT_LE(distance(inverse(xi, prec), x), prec.tau(x.frobenius_norm() * condition_number(x, prec)));
    }
}

TEST(Inverse, SingularMatrix) {
    const PrecisionConfig prec;
    EXPECT_THROW(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, prec.bits()), prec), SingularityError);
}

TEST(Certification, PsdAndDiagonalFlags) {
    const PrecisionConfig prec;
    const Matrix h = certify_psd(Matrix::from_rows({{2, 1}, {1, 2}}, prec.bits()), prec);
    EXPECT_TRUE(h.has(Property::Hermitian));
    EXPECT_TRUE(h.has(Property::Psd));
    EXPECT_THROW(certify_psd(Matrix::from_rows({{1, 2}, {2, 1}}, prec.bits()), prec), ContractViolation);
    EXPECT_THROW(certify_nonnegative_diagonal(Matrix::from_rows({{1, 1e-300}, {0, 1}}, prec.bits())),
                 ContractViolation);
    Matrix m = h;
    m(0, 0) = Complex(prec.one());
    EXPECT_FALSE(m.has(Property::Hermitian));
}
