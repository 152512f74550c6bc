#include "svmaj/precision.hpp"

#include "svmaj/errors.hpp"

#include <algorithm>
#include <string>

namespace svmaj {

PrecisionConfig::PrecisionConfig(int digits, int tol_exponent) : digits_(digits), tol_exponent_(tol_exponent) {
    if (digits < 20) throw DomainError("digits must be >= 20, got " + std::to_string(digits));
    if (tol_exponent < 5 || 2 * tol_exponent > digits) {
        throw DomainError("tol_exponent must lie in [5, digits/2], got " + std::to_string(tol_exponent));
    }
}

PrecisionConfig PrecisionConfig::shifted(int delta) const {
    const int target = digits_ + delta;
    // Keep the tolerance exponent legal when shifting down to the minimum.
    const int tol = std::min(tol_exponent_, target / 2);
    return PrecisionConfig(target, tol);
}

Real PrecisionConfig::tau() const { return pow10_neg(digits_ - tol_exponent_, bits()); }

Real PrecisionConfig::tau(const Real& scale) const {
    Real t = tau();
    if (abs(scale) > 1L) t *= abs(scale);
    return t;
}

Real PrecisionConfig::epsilon() const { return ldexp(one(), -(static_cast<long>(bits()) - 2)); }

}  // namespace svmaj
