#pragma once

#include "svmaj/real.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace svmaj {

/// An exponent p held as an exact rational num/den (den > 0, lowest terms).
///
/// Validity conditions such as "p is a natural number" or "1/p >= d - 1" are
/// decided on the rational exactly, never with a tolerance. Decimal input
/// ("0.95") is read as the exact rational it denotes (19/20).
class Exponent {
public:
    Exponent(std::int64_t num = 1, std::int64_t den = 1);

    /// Accepts "3", "-2", "0.95", "1/3", "2.5/4".
    static Exponent parse(std::string_view text);

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    [[nodiscard]] Real value(Bits bits) const;
    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool is_positive() const { return num_ > 0; }
    /// p in N_0 = {0, 1, 2, ...}.
    [[nodiscard]] bool is_natural() const { return den_ == 1 && num_ >= 0; }
    /// 1/p in N_0 (p > 0 and num divides den).
    [[nodiscard]] bool reciprocal_is_natural() const { return num_ > 0 && den_ % num_ == 0; }

    [[nodiscard]] Exponent reciprocal() const;

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    friend Exponent operator*(const Exponent& a, const Exponent& b);

    friend bool operator==(const Exponent& a, const Exponent& b) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace svmaj
