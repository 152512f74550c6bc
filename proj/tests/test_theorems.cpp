#include <gtest/gtest.h>

#include "svmaj/errors.hpp"
#include "svmaj/random_matrices.hpp"
#include "svmaj/theorems.hpp"

using namespace svmaj;

namespace {

Real distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }

Matrix diag_of(const PrecisionConfig& prec, std::initializer_list<double> xs) {
    std::vector<Real> v;
    for (double x : xs) v.push_back(prec.from(x));
    return Matrix::diagonal(v);
}

// Gram matrix of a d x rank complex Gaussian factor; singular when rank < d.
Matrix random_psd(RngStream& rng, std::size_t d, std::size_t rank, Bits bits) {
    Matrix g = random_gaussian_matrix(rng, d, bits);
    for (std::size_t j = rank; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) g(i, j) = Complex(bits);
    return linalg::hermitian_part(g * g.adjoint());
}

// Singular values of a real 2x2 matrix [[a, b], [c, e]] in closed form.
std::pair<Real, Real> sigma_2x2(const Real& a, const Real& b, const Real& c, const Real& e) {
    const Real f2 = a * a + b * b + c * c + e * e;
    const Real det = a * e - b * c;
    const Real disc = sqrt(f2 * f2 - det * det * 4L);
    return {sqrt((f2 + disc) / 2L), sqrt((f2 - disc) / 2L)};
}

bool all_zero_within(const MajorisationReport& r, const Real& tol) {
    for (const auto& m : r.partial_margins)
        if (abs(m) > tol) return false;
    return true;
}

}  // namespace

// ---- conditions --------------------------------------------------------------------------

TEST(Conditions, TheoremOneForward) {
    EXPECT_TRUE(theorem1_forward_holds(5, Exponent(1, 2)));
    EXPECT_TRUE(theorem1_forward_holds(2, Exponent(9, 10)));
    EXPECT_FALSE(theorem1_forward_holds(3, Exponent(19, 20)));
    EXPECT_TRUE(theorem1_forward_holds(3, Exponent(1)));
    EXPECT_FALSE(theorem1_forward_holds(2, Exponent(3, 2)));
}

TEST(Conditions, TheoremOneReversed) {
    EXPECT_TRUE(theorem1_reversed_holds(4, Exponent(2)));
    EXPECT_TRUE(theorem1_reversed_holds(4, Exponent(7, 2)));
    EXPECT_FALSE(theorem1_reversed_holds(4, Exponent(5, 2)));
    EXPECT_FALSE(theorem1_reversed_holds(3, Exponent(23, 20)));
    EXPECT_FALSE(theorem1_reversed_holds(3, Exponent(1, 2)));
}

TEST(Conditions, TheoremThreeAndLemmas) {
    EXPECT_TRUE(theorem3_holds(4, Exponent(1, 2)));
    EXPECT_TRUE(theorem3_holds(4, Exponent(1, 3)));
    EXPECT_TRUE(theorem3_holds(4, Exponent(2, 7)));
    EXPECT_FALSE(theorem3_holds(4, Exponent(2, 5)));
    EXPECT_TRUE(theorem3_holds(4, Exponent(3)));
    EXPECT_FALSE(theorem3_holds(4, Exponent(5, 2)));
    EXPECT_TRUE(fh_condition(3, Exponent(5, 2)));
    EXPECT_FALSE(fh_condition(3, Exponent(3, 2)));
    EXPECT_TRUE(fh_condition(6, Exponent(0)));
    EXPECT_TRUE(fitzgerald_horn_condition(3, Exponent(1)));
    EXPECT_FALSE(fitzgerald_horn_condition(3, Exponent(1, 2)));
    EXPECT_TRUE(fitzgerald_horn_condition(4, Exponent(5, 2)));
}

// ---- decomposition ---------------------------------------------------------------------------

TEST(Decomposition, IdentityAndDiagonal) {
    const PrecisionConfig prec;
    const Decomposition dec = lemma_decompose(Matrix::identity(3, prec.bits()), diag_of(prec, {0.5, 2, 1}), prec);
    EXPECT_LE(distance(dec.s * dec.s.adjoint(), Matrix::identity(3, prec.bits())), prec.tau());
    EXPECT_EQ(dec.lambdas[0], 2L);
    EXPECT_EQ(dec.lambdas[1], 1L);
    EXPECT_LE(abs(dec.lambdas[2] - prec.from(0.5)), prec.tau());

    const Matrix a = diag_of(prec, {4, 1});
    const Decomposition d2 = lemma_decompose(a, Matrix::identity(2, prec.bits()), prec);
    EXPECT_LE(abs(d2.lambdas[0] - 4L), prec.tau());
    EXPECT_LE(abs(d2.lambdas[1] - 1L), prec.tau());
    EXPECT_LE(distance(d2.s * d2.s.adjoint(), a), prec.tau(prec.from(4L)));
}

TEST(Decomposition, ResidualsRecomputedAtDoublePrecision) {
    const PrecisionConfig prec;
    const Bits wide = 2 * prec.bits();
    RngStream rng(41, 0);
    for (std::size_t d : {2U, 3U, 5U}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix a = random_gram(rng, d, prec.bits());
            const Matrix b = random_psd(rng, d, trial % 2 == 0 ? d : d - 1, prec.bits());
            const Decomposition dec = lemma_decompose(a, b, prec);
            const Real tol = decomposition_tolerance(a, b, prec);
            EXPECT_LE(dec.residual_a, tol);
            EXPECT_LE(dec.residual_ab, tol);
            EXPECT_LE(dec.residual_b, tol);

            const Matrix s = dec.s.with_precision(wide);
            const Matrix si = dec.s_inv.with_precision(wide);
            const Matrix lam = dec.lambda().with_precision(wide);
            const Matrix aw = a.with_precision(wide);
            const Matrix bw = b.with_precision(wide);
            EXPECT_LE(distance(s * s.adjoint(), aw), tol);
            EXPECT_LE(distance(s * lam * si, aw * bw), tol);
            EXPECT_LE(distance(si.adjoint() * lam * si, bw), tol);
            for (const auto& l : dec.lambdas) EXPECT_GE(l, 0L);
        }
    }
}

TEST(Decomposition, RequiresPositiveDefiniteA) {
    const PrecisionConfig prec;
    EXPECT_THROW(lemma_decompose(diag_of(prec, {1, 0}), Matrix::identity(2, prec.bits()), prec), ContractViolation);
}

// ---- sigma(B^p A^p) vs sigma((BA)^p) ---------------------------------------------------------------------------------

TEST(TheoremOne, CommutingPairIsEquality) {
    const PrecisionConfig prec;
    const Matrix a = diag_of(prec, {2, 0.5, 3});
    const Matrix b = diag_of(prec, {0.25, 4, 1});
    for (const Exponent& p : {Exponent(1, 3), Exponent(19, 20), Exponent(5, 2)}) {
        for (Direction dir : {Direction::Forward, Direction::Reversed}) {
            const TheoremReport r = theorem1_check(a, b, p, dir, prec);
            EXPECT_TRUE(r.verdict());
            EXPECT_TRUE(all_zero_within(r.majorisation, prec.tau(prec.from(100L))));
        }
    }
}

TEST(TheoremOne, UnitExponentIsEquality) {
    const PrecisionConfig prec;
    RngStream rng(42, 0);
    const Matrix a = random_gram(rng, 3, prec.bits());
    const Matrix b = random_gram(rng, 3, prec.bits());
    for (Direction dir : {Direction::Forward, Direction::Reversed}) {
        const TheoremReport r = theorem1_check(a, b, Exponent(1), dir, prec);
        EXPECT_TRUE(r.verdict());
        EXPECT_TRUE(r.condition_satisfied);
        EXPECT_TRUE(all_zero_within(r.majorisation, prec.tau(r.majorisation.right.sum())));
    }
}

TEST(TheoremOne, TwoByTwoExtension) {
    const PrecisionConfig prec(40);
    RngStream rng(43, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const TheoremReport r = theorem1_check(random_gram(rng, 2, prec.bits()), random_gram(rng, 2, prec.bits()),
                                               Exponent(4, 5), Direction::Forward, prec);
        EXPECT_TRUE(r.condition_satisfied);
        EXPECT_TRUE(r.verdict()) << r.to_json().dump();
    }
}

TEST(TheoremOne, ForwardRangeOnRandomPairs) {
    const PrecisionConfig prec(40);
    RngStream rng(44, 0);
    for (std::size_t d : {2U, 3U, 4U, 5U}) {
        for (const Exponent& p : {Exponent(1, 10), Exponent(1, 4), Exponent(1, 2)}) {
            for (int trial = 0; trial < 4; ++trial) {
                const std::size_t rank = trial == 3 ? d - 1 : d;
                const TheoremReport r = theorem1_check(random_psd(rng, d, rank, prec.bits()),
                                                       random_gram(rng, d, prec.bits()), p, Direction::Forward, prec);
                EXPECT_TRUE(r.verdict()) << r.to_json().dump();
                EXPECT_EQ(r.perturbed, rank < d);
            }
        }
    }
}

TEST(TheoremOne, ReversedRangeOnRandomPairs) {
    const PrecisionConfig prec(40);
    RngStream rng(45, 0);
    for (std::size_t d : {3U, 4U}) {
        const auto di = static_cast<std::int64_t>(d);
        for (const Exponent& p : {Exponent(2), Exponent(3), Exponent(di - 1), Exponent(2 * di - 1, 2), Exponent(di)}) {
            for (int trial = 0; trial < 4; ++trial) {
                const TheoremReport r = theorem1_check(random_gram(rng, d, prec.bits()), random_gram(rng, d, prec.bits()),
                                                       p, Direction::Reversed, prec);
                EXPECT_TRUE(r.condition_satisfied);
                EXPECT_TRUE(r.verdict()) << r.to_json().dump();
            }
        }
    }
}

TEST(TheoremOne, HomogeneityPreservesVerdict) {
    const PrecisionConfig prec(40);
    RngStream rng(46, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = random_gram(rng, 3, prec.bits());
        const Matrix b = random_gram(rng, 3, prec.bits());
        const Real s = rng.uniform(prec.from(0.1), prec.from(10L));
        const Real t = rng.uniform(prec.from(0.1), prec.from(10L));
        for (const Exponent& p : {Exponent(1, 3), Exponent(19, 20), Exponent(3, 2)}) {
            for (Direction dir : {Direction::Forward, Direction::Reversed}) {
                const bool plain = theorem1_check(a, b, p, dir, prec).verdict();
                EXPECT_EQ(theorem1_check(s * a, t * b, p, dir, prec).verdict(), plain);
            }
            const bool plain2 = theorem2_check(a, b, p, prec).verdict();
            EXPECT_EQ(theorem2_check(s * a, t * b, p, prec).verdict(), plain2);
        }
    }
}

// ---- sigma(A^p B^p) vs sigma^p(AB) --------------------------------------------------------------------------------------

TEST(TheoremTwo, UnitExponentAndCommutingPairs) {
    const PrecisionConfig prec;
    RngStream rng(47, 0);
    const Matrix a = random_gram(rng, 3, prec.bits());
    const Matrix b = random_gram(rng, 3, prec.bits());
    const TheoremReport one = theorem2_check(a, b, Exponent(1), prec);
    EXPECT_TRUE(one.verdict());
    EXPECT_TRUE(all_zero_within(one.majorisation, prec.tau(one.majorisation.right.sum())));

    const Matrix da = diag_of(prec, {2, 0.5, 3});
    const Matrix db = diag_of(prec, {0.25, 4, 1});
    for (const Exponent& p : {Exponent(1, 4), Exponent(3)}) {
        const TheoremReport r = theorem2_check(da, db, p, prec);
        EXPECT_TRUE(r.verdict());
        EXPECT_TRUE(all_zero_within(r.majorisation, prec.tau(r.majorisation.right.sum())));
    }
}

TEST(TheoremTwo, AllExponentsOnRandomPairs) {
    const PrecisionConfig prec(40);
    RngStream rng(48, 0);
    for (std::size_t d : {2U, 3U, 4U}) {
        for (const Exponent& p : {Exponent(1, 4), Exponent(1, 2), Exponent(3, 4), Exponent(3, 2), Exponent(2), Exponent(3)}) {
            for (int trial = 0; trial < 3; ++trial) {
                const TheoremReport r =
                    theorem2_check(random_gram(rng, d, prec.bits()), random_gram(rng, d, prec.bits()), p, prec);
                EXPECT_TRUE(r.verdict()) << r.to_json().dump();
                EXPECT_EQ(r.direction, p <= Exponent(1) ? Direction::Forward : Direction::Reversed);
            }
        }
    }
}

TEST(TheoremTwo, HalfPowerHasNonnegativeMargins) {
    const PrecisionConfig prec;
    RngStream rng(49, 0);
    const TheoremReport r =
        theorem2_check(random_gram(rng, 3, prec.bits()), random_gram(rng, 3, prec.bits()), Exponent(1, 2), prec);
    EXPECT_TRUE(r.verdict());
    for (const auto& m : r.majorisation.partial_margins) EXPECT_GE(m, -prec.tau());
}

// ---- sigma^p(X) vs sigma(X^p) --------------------------------------------------------------------------------------

TEST(TheoremThree, NormalMatrixIsEquality) {
    const PrecisionConfig prec;
    RngStream rng(50, 0);
    const Matrix u = random_unitary(rng, 3, prec.bits());
    const Matrix lam = diag_of(prec, {3, 0.5, 0.1});
    for (const Exponent& p : {Exponent(2, 5), Exponent(1), Exponent(5, 2)}) {
        const TheoremReport r = theorem3_check(u, lam, p, prec);
        EXPECT_TRUE(r.verdict());
        EXPECT_TRUE(all_zero_within(r.majorisation, prec.tau(prec.from(10L))));
    }
}

TEST(TheoremThree, ShearExampleMatchesClosedForm) {
    // X = S diag(1, 1/4) S^-1 = [[1, -3/4], [0, 1/4]], X^1/2 = [[1, -1/2], [0, 1/2]].
    const PrecisionConfig prec;
    const Matrix s = Matrix::from_rows({{1, 1}, {0, 1}}, prec.bits());
    const TheoremReport r = theorem3_check(s, diag_of(prec, {1, 0.25}), Exponent(1, 2), prec);
    EXPECT_TRUE(r.condition_satisfied);
    EXPECT_TRUE(r.verdict());

    const auto [x1, x2] = sigma_2x2(prec.one(), prec.from(-0.75), prec.zero(), prec.from(0.25));
    const auto [h1, h2] = sigma_2x2(prec.one(), prec.from(-0.5), prec.zero(), prec.from(0.5));
    EXPECT_LE(abs(r.majorisation.left[0] - sqrt(x1)), prec.tau());
    EXPECT_LE(abs(r.majorisation.left[1] - sqrt(x2)), prec.tau());
    EXPECT_LE(abs(r.majorisation.right[0] - h1), prec.tau());
    EXPECT_LE(abs(r.majorisation.right[1] - h2), prec.tau());
    // Frozen from the oracle: sqrt(sigma_1(X)) = 1.122140397965233761...
    EXPECT_EQ(r.majorisation.left[0].to_string(20).substr(0, 18), "1.1221403979652337");
}

TEST(TheoremThree, HoldsWheneverConditionIsSet) {
    const PrecisionConfig prec(40);
    RngStream rng(51, 0);
    int flagged = 0;
    for (std::size_t d : {3U, 4U, 5U}) {
        const auto di = static_cast<std::int64_t>(d);
        for (const Exponent& p : {Exponent(1, 3), Exponent(1, 2), Exponent(1, di - 1), Exponent(2, 2 * di - 1),
                                  Exponent(2), Exponent(3), Exponent(di - 1), Exponent(di), Exponent(2, 3)}) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Real> lambdas;
                for (std::size_t i = 0; i < d; ++i) lambdas.push_back(rng.uniform(prec.zero(), prec.from(2L)));
                const TheoremReport r =
                    theorem3_check(random_gaussian_matrix(rng, d, prec.bits()), Matrix::diagonal(lambdas), p, prec);
                if (r.condition_satisfied) {
                    ++flagged;
                    EXPECT_TRUE(r.verdict()) << r.to_json().dump();
                }
            }
        }
    }
    EXPECT_GT(flagged, 50);
}

TEST(TheoremThree, FromDecomposition) {
    const PrecisionConfig prec;
    RngStream rng(52, 0);
    const Decomposition dec = lemma_decompose(random_gram(rng, 3, prec.bits()), random_gram(rng, 3, prec.bits()), prec);
    EXPECT_TRUE(theorem3_check(dec, Exponent(1, 2), prec).verdict());
}

// ---- the matrix C --------------------------------------------------------------------------------

TEST(FhMatrix, Examples) {
    const PrecisionConfig prec;
    const std::vector<Real> lambdas{prec.from(0.2), prec.from(0.5), prec.from(0.9)};
    const Matrix ones = fh_matrix({lambdas, Exponent(1)}, prec);
    const Matrix squares = fh_matrix({lambdas, Exponent(2)}, prec);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_LE(abs(ones(i, j).re - 1L), prec.tau());
            EXPECT_LE(abs(squares(i, j).re - (lambdas[i] * lambdas[j] + 1L)), prec.tau());
        }
    }
    const Matrix limit = fh_matrix({{prec.from(2L), prec.from(0.5)}, Exponent(5, 2)}, prec);
    EXPECT_EQ(limit(0, 1).re, prec.from(2.5));
}

TEST(FhMatrix, NearUnitProductKeepsAccuracy) {
    // x = 1 - 1e-30: (1 - x^3)/(1 - x) = 1 + x + x^2.
    const PrecisionConfig prec;
    const Real x = prec.one() - pow10_neg(30, prec.bits());
    const Matrix c = fh_matrix({{x, prec.one()}, Exponent(3)}, prec);
    EXPECT_LE(abs(c(0, 1).re - (x * x + x + 1L)), prec.tau());
}

TEST(FhPsd, ConditionImpliesPsd) {
    const PrecisionConfig prec;
    RngStream rng(53, 0);
    for (std::size_t d : {3U, 4U, 6U}) {
        const auto di = static_cast<std::int64_t>(d);
        for (const Exponent& alpha : {Exponent(1), Exponent(3), Exponent(di - 1), Exponent(10 * di - 7, 10)}) {
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Real> lambdas;
                for (std::size_t i = 0; i < d; ++i) lambdas.push_back(rng.uniform(prec.zero(), prec.from(3L)));
                const PsdCheck r = fh_psd_check({lambdas, alpha}, prec);
                EXPECT_TRUE(r.condition_satisfied);
                EXPECT_TRUE(r.verdict) << r.to_json().dump();
            }
        }
    }
}

TEST(FhPsd, FractionalAlphaReportsMinEig) {
    const PrecisionConfig prec;
    const PsdCheck r = fh_psd_check({{prec.from(0.2), prec.from(0.5), prec.from(0.9)}, Exponent(3, 2)}, prec);
    EXPECT_FALSE(r.condition_satisfied);
    EXPECT_TRUE(r.min_eig.is_finite());
}

TEST(FhIntegral, Examples) {
    const PrecisionConfig prec;
    EXPECT_EQ(fh_integral_entry(prec.from(0.25), Exponent(1), prec), 1L);
    EXPECT_LE(abs(fh_integral_entry(prec.from(0.25), Exponent(2), prec) - prec.from(1.25)), prec.tau());
    const Real dev = fh_integral_check({{prec.from(0.3), prec.from(0.7)}, Exponent(5, 2)}, prec);
    EXPECT_LE(dev, pow10_neg(45, prec.bits()));
}

TEST(FhIntegral, AgreesWithClosedFormOnRandomSpecs) {
    const PrecisionConfig prec;
    RngStream rng(54, 0);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Real> lambdas;
        for (int i = 0; i < 3; ++i) lambdas.push_back(rng.uniform(prec.from(1e-3), prec.from(2L)));
        const Exponent alpha(static_cast<std::int64_t>(1 + trial * 7), 4);
        EXPECT_LE(fh_integral_check({lambdas, alpha}, prec), prec.tau()) << alpha.to_string();
    }
}

TEST(EntrywisePower, IntegerExponentsStayPsd) {
    const PrecisionConfig prec;
    const Matrix m = Matrix::from_rows({{2, 1, 0.5}, {1, 2, 1}, {0.5, 1, 2}}, prec.bits());
    const PsdCheck one = entrywise_power_psd_check(m, Exponent(1), prec);
    EXPECT_TRUE(one.verdict);
    EXPECT_LE(abs(one.min_eig - linalg::min_eigenvalue(m, prec)), prec.tau());
    EXPECT_TRUE(entrywise_power_psd_check(m, Exponent(2), prec).verdict);
    EXPECT_THROW(entrywise_power_psd_check(Matrix::from_rows({{2, -1}, {-1, 2}}, prec.bits()), Exponent(1, 2), prec),
                 DomainError);
}

TEST(EntrywisePower, RandomSearchFindsNonPsdSquareRoot) {
    // M_ij = 1 + eps x_i x_j is PSD with nonnegative entries; its entrywise
    // square root is not PSD for small eps, which shows q >= d - 2 is needed.
    const PrecisionConfig prec;
    RngStream rng(55, 0);
    bool found = false;
    for (int trial = 0; trial < 50 && !found; ++trial) {
        const Real eps = rng.uniform(prec.from(0.01), prec.from(0.5));
        std::vector<Real> x;
        for (int i = 0; i < 3; ++i) x.push_back(rng.uniform(prec.zero(), prec.from(3L)));
        Matrix m(3, 3, prec.bits());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = Complex(eps * x[i] * x[j] + 1L);
        const PsdCheck r = entrywise_power_psd_check(m, Exponent(1, 2), prec);
        EXPECT_FALSE(r.condition_satisfied);
        found = !r.verdict && r.min_eig < -prec.tau() * 1000L;
    }
    EXPECT_TRUE(found);
}

// ---- implication and equivalence -------------------------------------------------------------------

namespace {

// Scales B so that (ABA)^2 <= A^4 holds with equality in norm.
Matrix premise_boundary(const Matrix& a, const Matrix& b, const PrecisionConfig& prec) {
    const Matrix ai = linalg::inverse(a, prec);
    const Real n = linalg::operator_norm(ai * b * a * a * b * ai, prec);
    return linalg::hermitian_part(pow(n, -prec.from(0.5)) * b);
}

}  // namespace

TEST(Implication, CommutingContraction) {
    const PrecisionConfig prec;
    const ImplicationReport r =
        implication_check(diag_of(prec, {2, 3, 0.5}), diag_of(prec, {0.5, 0.9, 1}), Exponent(19, 20), prec);
    EXPECT_TRUE(r.premise);
    EXPECT_TRUE(r.conclusion);
}

TEST(Implication, HalfAndBelowNeverViolated) {
    const PrecisionConfig prec(40);
    RngStream rng(56, 0);
    for (const Exponent& p : {Exponent(1, 2), Exponent(1, 3), Exponent(1, 5)}) {
        for (int trial = 0; trial < 6; ++trial) {
            const Matrix a = random_gram(rng, 3, prec.bits());
            const Matrix b = premise_boundary(a, random_gram(rng, 3, prec.bits()), prec);
            const ImplicationReport r = implication_check(a, b, p, prec);
            EXPECT_TRUE(r.premise) << r.to_json().dump();
            EXPECT_GE(r.conclusion_margin, -prec.tau(prec.from(100L))) << r.to_json().dump();
            EXPECT_FALSE(r.forward_violated());
        }
    }
}

TEST(Equivalence, CommutingPairAgrees) {
    const PrecisionConfig prec;
    const EquivalenceReport r =
        equivalent_forms_check(diag_of(prec, {2, 3, 0.5}), diag_of(prec, {0.5, 0.9, 1}), Exponent(3, 4), prec);
    EXPECT_TRUE(r.agree()) << r.to_json().dump();
    EXPECT_TRUE(r.sigma_form);
}

TEST(Equivalence, RandomInstancesAgree) {
    const PrecisionConfig prec(40);
    RngStream rng(57, 0);
    for (const Exponent& p : {Exponent(1, 2), Exponent(3, 4), Exponent(19, 20), Exponent(1)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const EquivalenceReport r = equivalent_forms_check(random_gram(rng, 3, prec.bits()),
                                                               random_gram(rng, 3, prec.bits()), p, prec);
            EXPECT_TRUE(r.agree()) << r.to_json().dump();
            if (p <= Exponent(1, 2)) EXPECT_TRUE(r.sigma_form);
        }
    }
}

TEST(Equivalence, OriginalFormRoundTrip) {
    // to_original_form followed by the decomposition recovers C = A_f^2 up to
    // unitary similarity, and Lambda = B_f^(1/p).
    const PrecisionConfig prec;
    RngStream rng(58, 0);
    const Matrix af = random_gram(rng, 3, prec.bits());
    const Matrix bf = diag_of(prec, {0.3, 0.1, 0.05});
    const auto [a, b] = to_original_form(af, bf, Exponent(3, 4), prec);
    const Decomposition dec = lemma_decompose(a, b, prec);
    const Matrix c = linalg::hermitian_part(dec.s_inv * dec.s_inv.adjoint());
    const auto c_eig = linalg::hermitian_eig(c, prec).values;
    const auto a_eig = linalg::hermitian_eig(linalg::hermitian_part(af * af), prec).values;
    const Real tol = prec.tau(linalg::condition_number(af, prec) * 100L);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(abs(c_eig[i] - a_eig[i]), tol * c_eig[0]);
    const Real inv_p = Exponent(4, 3).value(prec.bits());
    EXPECT_LE(abs(dec.lambdas[0] - pow(prec.from(0.3), inv_p)), tol);
    EXPECT_LE(abs(dec.lambdas[2] - pow(prec.from(0.05), inv_p)), tol);
}

TEST(Reports, JsonShape) {
    const PrecisionConfig prec;
    const TheoremReport r = theorem2_check(diag_of(prec, {1, 2}), diag_of(prec, {2, 1}), Exponent(1, 2), prec);
    const Json j = r.to_json();
    EXPECT_EQ(j["p"], "1/2");
    EXPECT_EQ(j["direction"], "forward");
    EXPECT_EQ(j["majorisation"]["margins"].size(), 2U);
    EXPECT_EQ(matrix_hash(Matrix::identity(2, prec.bits())).size(), 16U);
    EXPECT_EQ(matrix_hash(Matrix::identity(2, prec.bits())), matrix_hash(Matrix::identity(2, prec.bits())));
}
