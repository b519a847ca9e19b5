#include "torzeta/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace torzeta {

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    if (value == 0.0) {
        value = 0.0; // drop the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_complex(std::complex<double> value) {
    return "[" + format_double(value.real()) + "," + format_double(value.imag()) + "]";
}

std::string json_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

namespace {

double parse_real(const std::string& text, const std::string& whole) {
    if (text.empty() || text == "+") {
        return 1.0;
    }
    if (text == "-") {
        return -1.0;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse complex number '" + whole + "'");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("cannot parse complex number '" + whole + "'");
    }
    return v;
}

} // namespace

std::complex<double> parse_complex(const std::string& raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            text += c;
        }
    }
    if (text.empty()) {
        throw std::invalid_argument("empty complex number");
    }
    if (text.back() != 'i') {
        return {parse_real(text, raw), 0.0};
    }
    text.pop_back();
    // Split at the last sign that is not the leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (text.empty()) {
            return {0.0, 1.0};
        }
        return {0.0, parse_real(text, raw)};
    }
    std::string re = text.substr(0, split);
    std::string im = text.substr(split);
    if (re.empty()) {
        throw std::invalid_argument("cannot parse complex number '" + raw + "'");
    }
    return {parse_real(re, raw), parse_real(im, raw)};
}

} // namespace torzeta
