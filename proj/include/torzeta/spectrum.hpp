#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace torzeta {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Reduces an angle into [0, 2*pi). Values within 1e-12 of either end snap to 0.
double reduce_angle(double theta);

// One primitive closed geodesic: length l0 and holonomy angle theta0 of its
// rotational part, with the number of distinct primitive classes sharing them.
struct GeodesicClass {
    double length = 0.0;
    double holonomy = 0.0;
    std::int64_t multiplicity = 1;

    friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
};

// A (primitive, power) pair: the conjugacy class of gamma0^power.
struct ClassTerm {
    double length = 0.0;    // power * primitive_length
    double holonomy = 0.0;  // power * theta0 mod 2*pi
    std::int64_t power = 1;
    double weight = 1.0;    // multiplicity of the primitive
    double primitive_length = 0.0;
};

// Finite multiset of primitive classes, complete up to `cutoff`.
//
// Invariants (checked on construction):
//   * entries sorted by (length, holonomy, multiplicity), every length in (0, cutoff]
//   * holonomy in [0, 2*pi), multiplicity >= 1
//   * counting(x) <= growth_constant * exp(2x) for every x <= cutoff
class LengthSpectrum {
public:
    LengthSpectrum() = default;

    // Throws SpectrumError if any invariant fails. Entries need not be sorted.
    LengthSpectrum(std::vector<GeodesicClass> entries, double cutoff,
                   double growth_constant = 10.0,
                   std::optional<double> volume = std::nullopt);

    const std::vector<GeodesicClass>& entries() const { return entries_; }
    double cutoff() const { return cutoff_; }
    double growth_constant() const { return growth_constant_; }
    const std::optional<double>& volume() const { return volume_; }
    bool empty() const { return entries_.empty(); }

    // Minimal length. For an empty spectrum no class is shorter than the
    // cutoff, so the cutoff is returned.
    double systole() const { return entries_.empty() ? cutoff_ : entries_.front().length; }

    std::int64_t total_multiplicity() const;

    // True when counting(x) <= growth_constant * exp(exponent * x) holds at
    // every jump point up to the cutoff.
    bool certifies_growth(double exponent) const;

    // Smallest C with counting(x) <= C * exp(exponent * x) for all x <= cutoff.
    double growth_sup(double exponent) const;

    // Same spectrum restricted to lengths <= new_cutoff.
    LengthSpectrum truncated(double new_cutoff) const;

    LengthSpectrum with_volume(std::optional<double> volume) const;

    friend bool operator==(const LengthSpectrum&, const LengthSpectrum&) = default;

private:
    std::vector<GeodesicClass> entries_;
    double cutoff_ = 1.0;
    double growth_constant_ = 10.0;
    std::optional<double> volume_;
};

enum class SpectrumFormat { csv, json };

struct LoadOptions {
    // CSV files carry no cutoff; without one the longest length is used.
    std::optional<double> cutoff;
    double growth_constant = 10.0;
    std::optional<double> volume;
};

LengthSpectrum load_spectrum(std::istream& in, SpectrumFormat format,
                             const LoadOptions& options = {});

// Reads a file, picking the format from the extension (.csv, otherwise JSON).
LengthSpectrum load_spectrum_file(const std::string& path, const LoadOptions& options = {});

// Canonical JSON manifest, 17 significant digits, byte-stable.
std::string serialize_spectrum(const LengthSpectrum& spectrum);

// Counting function: sum of multiplicities of entries with length <= x.
// Throws SpectrumError if x exceeds the cutoff.
std::int64_t counting_function(const LengthSpectrum& spectrum, double x);

// Every (primitive, power) pair with power * l0 <= length_limit, sorted by
// (length, power, holonomy, weight).
std::vector<ClassTerm> iterate_classes(const LengthSpectrum& spectrum, double length_limit);

// Synthetic spectra

enum class DensityKind { poisson_linear, capped_exponential };

struct DensityProfile {
    DensityKind kind = DensityKind::poisson_linear;
    double rate = 1.0;            // poisson-linear: expected classes per unit length
    double exponent = 2.0;        // capped-exponential: c <= 2
    std::int64_t max_count = 1'000'000;

    // "poisson-linear:RATE" or "capped-exp:C,MAX"
    static DensityProfile parse(const std::string& text);
};

// Expected number of classes the profile places in [systole, cutoff].
double expected_count(const DensityProfile& profile, double systole, double cutoff);

// Deterministic for a fixed seed. One class sits exactly at the systole; the
// rest follow an inhomogeneous Poisson process with the given intensity.
// Holonomies are uniform on [0, 2*pi). The reported growth constant is the
// smallest C with counting(x) <= C exp(2x) on [0, cutoff] (at least 1).
LengthSpectrum generate_synthetic(std::uint64_t seed, double systole, double cutoff,
                                  const DensityProfile& profile,
                                  std::optional<double> volume = std::nullopt);

} // namespace torzeta
