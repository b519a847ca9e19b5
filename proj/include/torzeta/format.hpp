#pragma once

#include <complex>
#include <string>

namespace torzeta {

// Canonical float text: 17 significant digits, "%.17g". Non-finite values
// print as "null".
std::string format_double(double value);

// JSON array "[re,im]".
std::string format_complex(std::complex<double> value);

// Quoted JSON string with the minimal escapes.
std::string json_quote(const std::string& text);

// Parses "a", "a+bi", "a-bi", "bi", "a+i". Throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& text);

} // namespace torzeta
