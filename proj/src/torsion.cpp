#include "torzeta/torsion.hpp"

#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace torzeta {

namespace {

constexpr double kRequiredTail = 1e-8;

struct FamilyStep {
    CharacterIndex q;
    double s;
    double volume_increment_factor; // increment / vol
};

// Evaluation point of the k-th factor: R(k, sigma_2k) or R(k + 1/2, sigma_2k+1).
FamilyStep step(Parity parity, int k) {
    if (parity == Parity::even) {
        return {CharacterIndex(2 * k), static_cast<double>(k), 2.0 * k / kPi};
    }
    return {CharacterIndex(2 * k + 1), k + 0.5, (2.0 * k + 1.0) / kPi};
}

int first_k(Parity parity) { return parity == Parity::even ? 3 : 2; }

int paper_index(Parity parity, int m) { return parity == Parity::even ? 2 * m : 2 * m + 1; }

// Cutoff at which the unseen-class tail of log R(s, .) drops below the target.
double required_cutoff(const LengthSpectrum& spectrum, double s, double a) {
    const double gap = s - a;
    double r = std::log(spectrum.growth_constant() * s / (gap * kRequiredTail)) / gap;
    r = std::max(r, 0.0);
    // One refinement for the geometric power factor.
    if (r > 0.0) {
        r = std::log(spectrum.growth_constant() * s / (gap * kRequiredTail * -std::expm1(-s * r))) / gap;
    }
    return r;
}

double resolve_volume(const ClassTable& table, std::optional<double> volume) {
    if (volume) {
        return *volume;
    }
    if (table.spectrum().volume()) {
        return *table.spectrum().volume();
    }
    throw std::invalid_argument("torsion ratios require a volume (--vol or manifest 'volume')");
}

} // namespace

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

ParityMix parse_parity_mix(const std::string& text) {
    if (text == "even") {
        return ParityMix::even;
    }
    if (text == "odd") {
        return ParityMix::odd;
    }
    if (text == "both") {
        return ParityMix::both;
    }
    throw std::invalid_argument("parity must be even, odd or both");
}

TorsionSeries torsion_series(const ClassTable& table, std::optional<double> volume, Parity parity,
                             int max_m, const EvalOptions& options) {
    const int k0 = first_k(parity);
    if (max_m < k0) {
        throw std::invalid_argument(to_string(parity) + " torsion ratios need m >= " + std::to_string(k0));
    }
    TorsionSeries series;
    series.parity = parity;
    series.base_index = parity == Parity::even ? 4 : 3;
    series.volume = resolve_volume(table, volume);
    const double a = growth_exponent(table.spectrum(), options);

    double cumulative = 0.0;
    double tails = 0.0;
    for (int k = k0; k <= max_m; ++k) {
        const FamilyStep st = step(parity, k);
        if (!(st.s > a)) {
            throw DivergenceError("torsion factor k = " + std::to_string(k) + " needs s = " +
                                  format_double(st.s) + " above the abscissa " + format_double(a));
        }
        const auto forward = log_ruelle(table, st.q, cplx(st.s, 0.0), options);
        const auto negated = log_ruelle_modulus_negated(table, series.volume, st.q, st.s, options);
        // -log of exp(-2 vol s / pi) |R(s)|, i.e. half the log of |R(s)| |R(-s)|.
        const double increment = -0.5 * (forward.value.real() + negated.value.real());
        cumulative += increment;
        tails += forward.tail_bound;

        TorsionRow row;
        row.family_index = k;
        row.paper_index = paper_index(parity, k);
        row.remainder = forward.value.real();
        row.increment = increment;
        row.cumulative = cumulative;
        row.tail_bound = tails;
        row.required_cutoff = required_cutoff(table.spectrum(), st.s, a);
        series.rows.push_back(row);
    }
    return series;
}

TorsionRow torsion_ratio_even(const ClassTable& table, std::optional<double> volume, int m,
                              const EvalOptions& options) {
    return torsion_series(table, volume, Parity::even, m, options).rows.back();
}

TorsionRow torsion_ratio_odd(const ClassTable& table, std::optional<double> volume, int m,
                             const EvalOptions& options) {
    return torsion_series(table, volume, Parity::odd, m, options).rows.back();
}

RemainderBound remainder_bound(const ClassTable& table, int m_max, Parity parity,
                               const EvalOptions& options) {
    RemainderBound out;
    const LengthSpectrum& spectrum = table.spectrum();
    if (spectrum.empty()) {
        return out;
    }
    const int k0 = first_k(parity);
    CompensatedSum sum;
    for (int k = k0; k <= m_max; ++k) {
        const FamilyStep st = step(parity, k);
        const auto value = log_ruelle(table, st.q, cplx(st.s, 0.0), options);
        sum.add(std::abs(value.value.real()));
        out.allowance += value.tail_bound;
    }
    out.sum_abs = sum.value();
    out.c1 = 1.0 / -std::expm1(-spectrum.systole());
    const double s0 = parity == Parity::even ? 3.0 : 2.5;
    const auto base = log_ruelle(table, CharacterIndex(0), cplx(s0, 0.0), options);
    out.bound = out.c1 * std::abs(base.value.real());
    out.allowance += out.c1 * base.tail_bound;
    out.pass = out.sum_abs <= out.bound + out.allowance;
    return out;
}

VolumeFit fit_volume(const ClassTable& table, double injected_volume, int m_min, int m_max,
                     ParityMix mix, const EvalOptions& options) {
    if (m_max < m_min) {
        throw std::invalid_argument("fit range is empty");
    }
    struct Point {
        int index;
        bool odd;
        double y;
    };
    std::vector<Point> points;
    auto collect = [&](Parity parity) {
        const int k0 = first_k(parity);
        int max_m = parity == Parity::even ? m_max / 2 : (m_max - 1) / 2;
        if (max_m < k0) {
            return;
        }
        const auto series = torsion_series(table, injected_volume, parity, max_m, options);
        for (const auto& row : series.rows) {
            if (row.paper_index >= m_min && row.paper_index <= m_max) {
                points.push_back({row.paper_index, parity == Parity::odd, row.cumulative});
            }
        }
    };
    if (mix != ParityMix::odd) {
        collect(Parity::even);
    }
    if (mix != ParityMix::even) {
        collect(Parity::odd);
    }
    if (points.size() < 8) {
        throw std::invalid_argument("fit range covers " + std::to_string(points.size()) +
                                    " indices; at least 8 are needed");
    }

    const bool both = mix == ParityMix::both;
    const Eigen::Index cols = both ? 4 : 3;
    Eigen::MatrixXd design(static_cast<Eigen::Index>(points.size()), cols);
    Eigen::VectorXd y(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        const double idx = points[i].index;
        Eigen::Index c = 0;
        if (both) {
            design(row, c++) = points[i].odd ? 0.0 : 1.0;
            design(row, c++) = points[i].odd ? 1.0 : 0.0;
        } else {
            design(row, c++) = 1.0;
        }
        design(row, c++) = idx;
        design(row, c++) = idx * idx;
        y(row) = points[i].y;
    }
    const auto qr = design.colPivHouseholderQr();
    if (qr.rank() < cols) {
        throw std::invalid_argument("degenerate fit design; widen the index range");
    }
    const Eigen::VectorXd coef = qr.solve(y);
    const Eigen::VectorXd residual = y - design * coef;

    VolumeFit fit;
    fit.intercept = coef(0);
    if (both) {
        fit.intercept_odd = coef(1);
    }
    fit.linear = coef(cols - 2);
    fit.slope = coef(cols - 1);
    fit.recovered_volume = 4.0 * kPi * fit.slope;
    fit.injected_volume = injected_volume;
    fit.rel_error = injected_volume != 0.0
                        ? std::abs(fit.recovered_volume - injected_volume) / std::abs(injected_volume)
                        : std::abs(fit.recovered_volume);
    fit.index_min = m_min;
    fit.index_max = m_max;
    fit.points = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double r = std::abs(residual(static_cast<Eigen::Index>(i)));
        fit.max_abs_residual = std::max(fit.max_abs_residual, r);
        fit.max_residual_over_index = std::max(fit.max_residual_over_index, r / points[i].index);
    }
    return fit;
}

} // namespace torzeta
