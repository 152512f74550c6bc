#include "svmaj/real.hpp"

#include <ostream>

#include "svmaj/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace svmaj {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
constexpr double kLog2Of10 = 3.32192809488736234787;

Bits wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Bits bits_for_digits(int digits) {
    return static_cast<Bits>(std::ceil(digits * kLog2Of10));
}

int digits_for_bits(Bits bits) {
    return static_cast<int>(std::floor(static_cast<double>(bits) / kLog2Of10));
}

Real::Real() : Real(Bits{53}) {}

Real::Real(Bits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, Bits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, kRnd);
}

Real::Real(long value, Bits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, kRnd);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, kRnd);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, Bits bits) {
    std::string buf(text);
    Real r(bits);
    char* end = nullptr;
    if (!buf.empty()) mpfr_strtofr(r.value_, buf.c_str(), &end, 10, kRnd);
    if (buf.empty() || end != buf.c_str() + buf.size()) throw ParseError("not a decimal number: '" + buf + "'");
    if (!r.is_finite()) throw ParseError("non-finite value: '" + buf + "'");
    return r;
}

Real Real::pi(Bits bits) {
    Real r(bits);
    mpfr_const_pi(r.value_, kRnd);
    return r;
}

Real Real::with_precision(Bits bits) const {
    Real r(bits);
    mpfr_set(r.value_, value_, kRnd);
    return r;
}

double Real::to_double() const { return mpfr_get_d(value_, kRnd); }

std::string Real::to_string() const {
    return to_string(static_cast<int>(mpfr_get_str_ndigits(10, precision())));
}

std::string Real::to_string(int significant_digits) const {
    if (is_zero()) return "0";
    mpfr_exp_t exponent = 0;
    char* raw_digits = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(significant_digits), value_, kRnd);
    std::string digits(raw_digits);
    mpfr_free_str(raw_digits);

    std::string out;
    if (digits.front() == '-') {
        out.push_back('-');
        digits.erase(0, 1);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    out.push_back(digits.front());
    if (digits.size() > 1) {
        out.push_back('.');
        out.append(digits, 1);
    }
    out.push_back('e');
    out.append(std::to_string(static_cast<long>(exponent) - 1));
    return out;
}

Real& Real::operator+=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRnd);
    mpfr_add(value_, value_, rhs.value_, kRnd);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRnd);
    mpfr_sub(value_, value_, rhs.value_, kRnd);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRnd);
    mpfr_mul(value_, value_, rhs.value_, kRnd);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRnd);
    mpfr_div(value_, value_, rhs.value_, kRnd);
    return *this;
}

Real& Real::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, kRnd);
    return *this;
}

Real& Real::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, kRnd);
    return *this;
}

Real operator-(const Real& x) {
    Real r(x.precision());
    mpfr_neg(r.value_, x.value_, kRnd);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.value_, a.value_, b.value_, kRnd);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, kRnd);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, kRnd);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.value_, a.value_, b.value_, kRnd);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.precision());
    mpfr_add_si(r.value_, a.value_, b, kRnd);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(a.precision());
    mpfr_sub_si(r.value_, a.value_, b, kRnd);
    return r;
}

Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.value_, a, b.value_, kRnd);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.value_, a.value_, b, kRnd);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.value_, a.value_, b, kRnd);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.value_, a, b.value_, kRnd);
    return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

std::partial_ordering operator<=>(const Real& a, long b) {
    if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
    Real r(x.precision());
    mpfr_abs(r.value_, x.value_, kRnd);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.precision());
    mpfr_sqrt(r.value_, x.value_, kRnd);
    return r;
}

Real exp(const Real& x) {
    Real r(x.precision());
    mpfr_exp(r.value_, x.value_, kRnd);
    return r;
}

Real log(const Real& x) {
    Real r(x.precision());
    mpfr_log(r.value_, x.value_, kRnd);
    return r;
}

Real expm1(const Real& x) {
    Real r(x.precision());
    mpfr_expm1(r.value_, x.value_, kRnd);
    return r;
}

Real log1p(const Real& x) {
    Real r(x.precision());
    mpfr_log1p(r.value_, x.value_, kRnd);
    return r;
}

Real cos(const Real& x) {
    Real r(x.precision());
    mpfr_cos(r.value_, x.value_, kRnd);
    return r;
}

Real sin(const Real& x) {
    Real r(x.precision());
    mpfr_sin(r.value_, x.value_, kRnd);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(wider(x, y));
    mpfr_pow(r.value_, x.value_, y.value_, kRnd);
    return r;
}

Real pow(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.value_, x.value_, n, kRnd);
    return r;
}

Real ldexp(const Real& x, long e) {
    Real r(x.precision());
    mpfr_mul_2si(r.value_, x.value_, e, kRnd);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pow10_neg(long n, Bits bits) {
    Real ten(10L, bits);
    return pow(ten, -n);
}

// ---- Complex ----

Complex& Complex::operator+=(const Complex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    Complex product = *this * rhs;
    *this = std::move(product);
    return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
}

Complex operator-(const Complex& z) { return {-z.re, -z.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    Real re = a.re * b.re;
    re -= a.im * b.im;
    Real im = a.re * b.im;
    im += a.im * b.re;
    return {std::move(re), std::move(im)};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }

Complex operator/(const Complex& a, const Complex& b) {
    const Real denom = norm(b);
    if (denom.is_zero()) throw SingularityError("complex division by zero");
    Complex num = a * conj(b);
    return {num.re / denom, num.im / denom};
}

Complex operator/(const Complex& a, const Real& b) {
    if (b.is_zero()) throw SingularityError("complex division by zero");
    return {a.re / b, a.im / b};
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm(const Complex& z) {
    Real r = z.re * z.re;
    r += z.im * z.im;
    return r;
}

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), kRnd);
    return r;
}

Complex phase(const Complex& z) {
    const Real m = abs(z);
    if (m.is_zero()) return Complex(Real(1L, z.precision()));
    return z / m;
}

void add_mul_conj(Complex& acc, const Complex& a, const Complex& b) {
    // (a.re + i a.im)(b.re - i b.im)
    acc.re += a.re * b.re;
    acc.re += a.im * b.im;
    acc.im += a.im * b.re;
    acc.im -= a.re * b.im;
}

void add_mul(Complex& acc, const Complex& a, const Complex& b) {
    acc.re += a.re * b.re;
    acc.re -= a.im * b.im;
    acc.im += a.re * b.im;
    acc.im += a.im * b.re;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re.to_string() << ", " << z.im.to_string() << ')';
}

}  // namespace svmaj
