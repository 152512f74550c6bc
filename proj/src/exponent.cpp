#include "svmaj/exponent.hpp"

#include "svmaj/errors.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace svmaj {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("exponent arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Exponent make(i128 num, i128 den) {
    if (den == 0) throw DomainError("exponent with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Exponent(narrow(num), narrow(den));
}

// Parses an unsigned-or-signed decimal literal into an exact fraction.
std::pair<i128, i128> parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    i128 num = 0;
    i128 den = 1;
    bool any_digit = false;
    bool after_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' && !after_point) {
            after_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad exponent literal '" + std::string(text) + "'");
        any_digit = true;
        num = num * 10 + (c - '0');
        if (after_point) den *= 10;
        if (num > (i128{1} << 100) || den > (i128{1} << 100)) throw ParseError("exponent literal too long");
    }
    if (!any_digit) throw ParseError("bad exponent literal '" + std::string(text) + "'");
    return {negative ? -num : num, den};
}

}  // namespace

Exponent::Exponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den <= 0) {
        *this = make(num, den);
        return;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Exponent Exponent::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const auto [n, d] = parse_decimal(text);
        return make(n, d);
    }
    const auto [n1, d1] = parse_decimal(text.substr(0, slash));
    const auto [n2, d2] = parse_decimal(text.substr(slash + 1));
    if (n2 == 0) throw ParseError("exponent with zero denominator");
    return make(n1 * d2, d1 * n2);
}

Real Exponent::value(Bits bits) const {
    Real r(static_cast<long>(num_), bits);
    r /= static_cast<long>(den_);
    return r;
}

std::string Exponent::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Exponent Exponent::reciprocal() const {
    if (num_ == 0) throw SingularityError("reciprocal of zero exponent");
    return make(den_, num_);
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    return make(i128{a.num_} * b.den_ + i128{b.num_} * a.den_, i128{a.den_} * b.den_);
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    return make(i128{a.num_} * b.den_ - i128{b.num_} * a.den_, i128{a.den_} * b.den_);
}

Exponent operator*(const Exponent& a, const Exponent& b) {
    return make(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    const i128 lhs = i128{a.num_} * b.den_;
    const i128 rhs = i128{b.num_} * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace svmaj
