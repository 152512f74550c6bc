#pragma once

#include "svmaj/real.hpp"

namespace svmaj {

/// Working precision and tolerance convention for one run.
///
/// Every approximate comparison uses tau = 10^-(digits - tol_exponent), scaled
/// by max(1, operand norm) at the call site. The defaults (60 digits, tolerance
/// exponent 10) give tau = 1e-50.
class PrecisionConfig {
public:
    static constexpr int kDefaultDigits = 60;
    static constexpr int kDefaultTolExponent = 10;

    /// Throws DomainError unless digits >= 20 and 5 <= tol_exponent <= digits/2.
    explicit PrecisionConfig(int digits = kDefaultDigits, int tol_exponent = kDefaultTolExponent);

    [[nodiscard]] int digits() const { return digits_; }
    [[nodiscard]] int tol_exponent() const { return tol_exponent_; }
    [[nodiscard]] Bits bits() const { return bits_for_digits(digits_); }

    /// Same tolerance exponent, digits shifted by `delta` (used for re-verification runs).
    [[nodiscard]] PrecisionConfig shifted(int delta) const;

    [[nodiscard]] Real zero() const { return Real(bits()); }
    [[nodiscard]] Real one() const { return Real(1L, bits()); }
    [[nodiscard]] Real from(double v) const { return Real(v, bits()); }
    [[nodiscard]] Real from(long v) const { return Real(v, bits()); }

    /// Unscaled tolerance 10^-(digits - tol_exponent).
    [[nodiscard]] Real tau() const;
    /// tau * max(1, scale).
    [[nodiscard]] Real tau(const Real& scale) const;
    /// Approximate unit roundoff 2^-(bits - 2) used as a convergence floor by iterations.
    [[nodiscard]] Real epsilon() const;

    friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;

private:
    int digits_;
    int tol_exponent_;
};

}  // namespace svmaj
