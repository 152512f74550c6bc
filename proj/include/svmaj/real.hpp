#pragma once

// Extended-precision real and complex scalars backed by MPFR.
//
// Every Real owns its own mpfr_t and carries its own precision; there is no
// process-wide default. Binary operations produce a result at the larger of
// the two operand precisions, so raising the precision of the inputs raises
// the precision of everything computed from them.

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace svmaj {

using Bits = mpfr_prec_t;

/// Decimal digits <-> binary precision. digits_for_bits(bits_for_digits(d)) == d.
Bits bits_for_digits(int digits);
int digits_for_bits(Bits bits);

class Real {
public:
    /// Zero at 53 bits. Prefer the precision-taking constructors.
    Real();
    explicit Real(Bits bits);
    Real(double value, Bits bits);
    Real(long value, Bits bits);
    Real(int value, Bits bits) : Real(static_cast<long>(value), bits) {}

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    /// Parses a decimal (or "inf"/"nan"-free) numeric string, correctly rounded.
    static Real parse(std::string_view text, Bits bits);
    static Real pi(Bits bits);

    [[nodiscard]] Bits precision() const { return mpfr_get_prec(value_); }
    [[nodiscard]] Real with_precision(Bits bits) const;

    [[nodiscard]] double to_double() const;
    /// Shortest scientific decimal that parses back to the identical value at this precision.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string to_string(int significant_digits) const;

    [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
    [[nodiscard]] bool is_integer() const { return mpfr_integer_p(value_) != 0; }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator*=(long rhs);
    Real& operator/=(long rhs);

    friend Real operator-(const Real& x);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b);
    friend Real operator/(long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b);
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);
    friend bool operator==(const Real& a, long b);
    friend std::partial_ordering operator<=>(const Real& a, long b);

    friend Real abs(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real exp(const Real& x);
    friend Real log(const Real& x);
    friend Real expm1(const Real& x);
    friend Real log1p(const Real& x);
    friend Real cos(const Real& x);
    friend Real sin(const Real& x);
    friend Real pow(const Real& x, const Real& y);
    friend Real pow(const Real& x, long n);
    friend Real ldexp(const Real& x, long e);

    [[nodiscard]] mpfr_srcptr raw() const { return value_; }
    [[nodiscard]] mpfr_ptr raw() { return value_; }

private:
    mpfr_t value_;
};

Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// 10^(-n) at the given precision.
Real pow10_neg(long n, Bits bits);

/// Complex scalar as a pair of Reals.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    explicit Complex(Bits bits) : re(bits), im(bits) {}
    explicit Complex(Real real) : re(std::move(real)), im(re.precision()) {}
    Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}

    [[nodiscard]] Bits precision() const { return std::max(re.precision(), im.precision()); }
    [[nodiscard]] Complex with_precision(Bits bits) const {
        return {re.with_precision(bits), im.with_precision(bits)};
    }
    [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator*=(const Real& rhs);

    friend bool operator==(const Complex& a, const Complex& b) = default;
};

Complex operator-(const Complex& z);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Complex conj(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
/// Unit-modulus phase z/|z|; 1 for z = 0.
Complex phase(const Complex& z);
/// acc += a * conj(b)
void add_mul_conj(Complex& acc, const Complex& a, const Complex& b);
/// acc += a * b
void add_mul(Complex& acc, const Complex& a, const Complex& b);

std::ostream& operator<<(std::ostream& os, const Real& x);
std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace svmaj
