#include "svmaj/serialize.hpp"

#include "svmaj/errors.hpp"

#include <string>

namespace svmaj {

namespace {

void annotate_precision(Json& j, Bits bits) {
    const int digits = digits_for_bits(bits);
    j["digits"] = digits;
    if (bits_for_digits(digits) != bits) j["bits"] = bits;
}

Bits precision_of(const Json& j) {
    if (!j.is_object() || !j.contains("digits") || !j["digits"].is_number_integer()) {
        throw ParseError("missing integer \"digits\"");
    }
    if (j.contains("bits")) {
        if (!j["bits"].is_number_integer()) throw ParseError("\"bits\" must be an integer");
        return j["bits"].get<Bits>();
    }
    const int digits = j["digits"].get<int>();
    if (digits < 1) throw ParseError("\"digits\" must be positive");
    return bits_for_digits(digits);
}

Real parse_string(const Json& j, Bits bits) {
    if (!j.is_string()) throw ParseError("expected a decimal string");
    return Real::parse(j.get<std::string>(), bits);
}

}  // namespace

Json to_json(const Real& x) { return to_json(Complex(x)); }

Json to_json(const Complex& z) {
    Json j = Json::object();
    annotate_precision(j, std::max(z.re.precision(), z.im.precision()));
    j["re"] = z.re.to_string();
    j["im"] = z.im.to_string();
    return j;
}

Json to_json(const Matrix& m) {
    Json j = Json::object();
    j["dim"] = Json::array({m.rows(), m.cols()});
    annotate_precision(j, m.precision());
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(Json::array({m(r, c).re.to_string(), m(r, c).im.to_string()}));
    j["entries"] = std::move(entries);
    return j;
}

Json to_json_strings(const std::vector<Real>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

Complex complex_from_json(const Json& j) {
    const Bits bits = precision_of(j);
    if (!j.contains("re")) throw ParseError("scalar without \"re\"");
    Complex z(parse_string(j["re"], bits));
    if (j.contains("im")) z.im = parse_string(j["im"], bits);
    return z;
}

Real real_from_json(const Json& j) {
    Complex z = complex_from_json(j);
    if (!z.im.is_zero()) throw ParseError("expected a real scalar");
    return std::move(z.re);
}

Matrix matrix_from_json(const Json& j) {
    const Bits bits = precision_of(j);
    if (!j.contains("dim") || !j["dim"].is_array() || j["dim"].size() != 2) throw ParseError("matrix needs \"dim\": [r, c]");
    const auto rows = j["dim"][0].get<std::size_t>();
    const auto cols = j["dim"][1].get<std::size_t>();
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows * cols) {
        throw ParseError("matrix \"entries\" must hold rows*cols pairs");
    }
    Matrix m(rows, cols, bits);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        const Json& e = j["entries"][k];
        if (!e.is_array() || e.size() != 2) throw ParseError("matrix entry must be [re, im]");
        m(k / cols, k % cols) = Complex(parse_string(e[0], bits), parse_string(e[1], bits));
    }
    return m;
}

std::vector<Real> reals_from_json_strings(const Json& j, Bits bits) {
    if (!j.is_array()) throw ParseError("expected an array of decimal strings");
    std::vector<Real> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(parse_string(e, bits));
    return out;
}

}  // namespace svmaj
