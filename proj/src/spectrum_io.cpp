#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"
#include "torzeta/spectrum.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace torzeta {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(const std::string& text, std::size_t line, const char* what) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size() || !std::isfinite(v)) {
        throw SpectrumError(std::string("cannot parse ") + what + " at line " + std::to_string(line));
    }
    return v;
}

void check_entry(const GeodesicClass& e, std::size_t line, const char* unit) {
    const std::string where = std::string(" at ") + unit + " " + std::to_string(line);
    if (!(e.length > 0.0)) {
        throw SpectrumError("nonpositive length" + where);
    }
    if (!(e.holonomy >= 0.0 && e.holonomy < kTwoPi)) {
        throw SpectrumError("holonomy out of range [0, 2pi)" + where);
    }
    if (e.multiplicity < 1) {
        throw SpectrumError("multiplicity below 1" + where);
    }
}

std::int64_t as_multiplicity(double v, std::size_t line, const char* unit) {
    if (v != std::floor(v) || v < 1.0 || v > 9.0e15) {
        throw SpectrumError(std::string("multiplicity must be a positive integer at ") + unit + " " +
                            std::to_string(line));
    }
    return static_cast<std::int64_t>(v);
}

LengthSpectrum build(std::vector<GeodesicClass> entries, std::optional<double> cutoff,
                     double growth_constant, std::optional<double> volume) {
    double r = 0.0;
    if (cutoff) {
        r = *cutoff;
    } else if (!entries.empty()) {
        for (const auto& e : entries) {
            r = std::max(r, e.length);
        }
    } else {
        throw SpectrumError("empty spectrum needs an explicit cutoff");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].length > r) {
            throw SpectrumError("entry " + std::to_string(i + 1) + " with length " +
                                format_double(entries[i].length) + " lies beyond cutoff " +
                                format_double(r));
        }
    }
    return LengthSpectrum(std::move(entries), r, growth_constant, volume);
}

LengthSpectrum load_csv(std::istream& in, const LoadOptions& options) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<GeodesicClass> entries;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (!header_seen) {
            if (t != "length,theta,multiplicity") {
                throw SpectrumError("expected header 'length,theta,multiplicity' at line " +
                                    std::to_string(line_no));
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() < 2 || fields.size() > 3) {
            throw SpectrumError("expected 2 or 3 fields at line " + std::to_string(line_no));
        }
        GeodesicClass e;
        e.length = parse_field(fields[0], line_no, "length");
        e.holonomy = parse_field(fields[1], line_no, "theta");
        e.multiplicity = fields.size() == 3
                             ? as_multiplicity(parse_field(fields[2], line_no, "multiplicity"),
                                               line_no, "line")
                             : 1;
        check_entry(e, line_no, "line");
        if (options.cutoff && e.length > *options.cutoff) {
            throw SpectrumError("length beyond cutoff at line " + std::to_string(line_no));
        }
        entries.push_back(e);
    }
    if (!header_seen) {
        throw SpectrumError("missing header 'length,theta,multiplicity' at line 1");
    }
    return build(std::move(entries), options.cutoff, options.growth_constant, options.volume);
}

LengthSpectrum load_json(std::istream& in, const LoadOptions& options) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw SpectrumError(std::string("JSON parse error: ") + err.what());
    }
    if (!doc.is_object()) {
        throw SpectrumError("spectrum manifest must be a JSON object");
    }
    auto number = [&](const char* key) -> std::optional<double> {
        if (!doc.contains(key) || doc[key].is_null()) {
            return std::nullopt;
        }
        if (!doc[key].is_number()) {
            throw SpectrumError(std::string("key '") + key + "' must be a number");
        }
        return doc[key].get<double>();
    };
    const auto cutoff = number("cutoff");
    if (!cutoff) {
        throw SpectrumError("manifest is missing 'cutoff'");
    }
    const auto systole = number("systole");
    const double growth = number("growth_constant").value_or(options.growth_constant);
    auto volume = number("volume");
    if (options.volume) {
        volume = options.volume;
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw SpectrumError("manifest is missing the 'entries' array");
    }
    std::vector<GeodesicClass> entries;
    std::size_t index = 0;
    for (const auto& row : doc["entries"]) {
        ++index;
        if (!row.is_array() || row.size() < 2 || row.size() > 3) {
            throw SpectrumError("entry " + std::to_string(index) +
                                " must be [length, theta, multiplicity]");
        }
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw SpectrumError("entry " + std::to_string(index) + " has a non-numeric field");
            }
        }
        GeodesicClass e;
        e.length = row[0].get<double>();
        e.holonomy = row[1].get<double>();
        e.multiplicity = row.size() == 3 ? as_multiplicity(row[2].get<double>(), index, "entry") : 1;
        check_entry(e, index, "entry");
        entries.push_back(e);
    }
    LengthSpectrum spectrum = build(std::move(entries), cutoff, growth, volume);
    if (systole && !spectrum.empty()) {
        const double actual = spectrum.systole();
        if (std::abs(*systole - actual) > 1e-12 * std::max(1.0, actual)) {
            throw SpectrumError("declared systole " + format_double(*systole) +
                                " disagrees with minimal length " + format_double(actual));
        }
    }
    return spectrum;
}

} // namespace

LengthSpectrum load_spectrum(std::istream& in, SpectrumFormat format, const LoadOptions& options) {
    return format == SpectrumFormat::csv ? load_csv(in, options) : load_json(in, options);
}

LengthSpectrum load_spectrum_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw SpectrumError("cannot open spectrum file '" + path + "'");
    }
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return load_spectrum(in, csv ? SpectrumFormat::csv : SpectrumFormat::json, options);
}

std::string serialize_spectrum(const LengthSpectrum& spectrum) {
    std::string out = "{\n";
    out += "  \"cutoff\": " + format_double(spectrum.cutoff()) + ",\n";
    if (!spectrum.empty()) {
        out += "  \"systole\": " + format_double(spectrum.systole()) + ",\n";
    }
    out += "  \"growth_constant\": " + format_double(spectrum.growth_constant()) + ",\n";
    if (spectrum.volume()) {
        out += "  \"volume\": " + format_double(*spectrum.volume()) + ",\n";
    }
    out += "  \"entries\": [";
    const auto& entries = spectrum.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += i == 0 ? "\n    [" : ",\n    [";
        out += format_double(entries[i].length) + "," + format_double(entries[i].holonomy) + "," +
               std::to_string(entries[i].multiplicity) + "]";
    }
    out += entries.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

} // namespace torzeta
