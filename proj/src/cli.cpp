#include "torzeta/cli.hpp"

#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"
#include "torzeta/identities.hpp"
#include "torzeta/spectrum.hpp"
#include "torzeta/torsion.hpp"
#include "torzeta/trace.hpp"
#include "torzeta/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace torzeta::cli {

namespace {

enum class OutputFormat { json, csv };

struct Globals {
    int threads = 0;
    std::string format = "json";

    OutputFormat output() const { return format == "csv" ? OutputFormat::csv : OutputFormat::json; }
};

// Spectrum source shared by every analysis subcommand.
struct SpectrumArgs {
    std::string path;
    std::optional<double> cutoff;
    std::optional<double> growth;
    std::optional<double> abscissa;

    void attach(CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--spectrum", path, "Spectrum file (.json manifest or .csv)");
        if (required) {
            opt->required();
        }
        cmd->add_option("--cutoff", cutoff, "Completeness radius for CSV input")->check(CLI::PositiveNumber);
        cmd->add_option("--growth", growth, "Growth constant C_g for CSV input")->check(CLI::PositiveNumber);
        cmd->add_option("--abscissa", abscissa, "Certified growth exponent (default 2)");
    }

    LengthSpectrum load() const {
        LoadOptions options;
        options.cutoff = cutoff;
        if (growth) {
            options.growth_constant = *growth;
        }
        return load_spectrum_file(path, options);
    }

    EvalOptions eval() const {
        EvalOptions options;
        options.abscissa = abscissa;
        return options;
    }
};

void write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open '" + *path + "' for writing");
    }
    file << text;
    if (!file) {
        throw std::invalid_argument("failed writing '" + *path + "'");
    }
}

std::string optional_number(const std::optional<double>& v) { return v ? format_double(*v) : "null"; }

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw std::invalid_argument(std::string("empty ") + what);
    }
    return values;
}

HighestWeight parse_weight(const std::string& text) {
    const auto values = parse_list(text, "weight");
    if (values.size() != 2) {
        throw std::invalid_argument("weight must be M,N");
    }
    HighestWeight w{static_cast<int>(values[0]), static_cast<int>(values[1])};
    if (w.m < 0 || w.n < 0 || w.m != values[0] || w.n != values[1]) {
        throw std::invalid_argument("weight entries must be nonnegative integers");
    }
    return w;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
    std::uint64_t seed = 0;
    double systole = 1.0;
    double cutoff = 8.0;
    std::string density;
    std::optional<double> volume;
    std::optional<std::string> out;
};

int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    const auto profile = DensityProfile::parse(a.density);
    const auto spectrum = generate_synthetic(a.seed, a.systole, a.cutoff, profile, a.volume);
    write_text(a.out, serialize_spectrum(spectrum), out);
    if (a.out) {
        err << "wrote " << spectrum.entries().size() << " classes to " << *a.out << "\n";
    }
    return kOk;
}

// ---- info -----------------------------------------------------------------

int run_info(const SpectrumArgs& s, const Globals& g, std::ostream& out) {
    const auto spectrum = s.load();
    const std::int64_t count = spectrum.total_multiplicity();
    if (g.output() == OutputFormat::csv) {
        out << "classes,rows,systole,cutoff,growth_constant,volume\n"
            << count << "," << spectrum.entries().size() << "," << format_double(spectrum.systole()) << ","
            << format_double(spectrum.cutoff()) << "," << format_double(spectrum.growth_constant()) << ","
            << (spectrum.volume() ? format_double(*spectrum.volume()) : "") << "\n";
        return kOk;
    }
    out << "{\"classes\":" << count << ",\"rows\":" << spectrum.entries().size()
        << ",\"systole\":" << format_double(spectrum.systole())
        << ",\"cutoff\":" << format_double(spectrum.cutoff())
        << ",\"growth_constant\":" << format_double(spectrum.growth_constant())
        << ",\"volume\":" << optional_number(spectrum.volume()) << "}\n";
    return kOk;
}

// ---- zeta -----------------------------------------------------------------

struct ZetaArgs {
    std::string kind;
    std::optional<int> k;
    std::optional<std::string> weight;
    std::string s;
    std::optional<double> volume;
    bool negated = false;
};

int run_zeta(const SpectrumArgs& sa, const ZetaArgs& a, const Globals& g, std::ostream& out) {
    const cplx s = parse_complex(a.s);
    const bool rep = a.kind == "ruelle-rep";
    if (rep && !a.weight) {
        throw std::invalid_argument("--kind ruelle-rep needs --weight M,N");
    }
    if (!rep && !a.k) {
        throw std::invalid_argument("--kind " + a.kind + " needs --k");
    }
    if (rep && a.k) {
        throw std::invalid_argument("--k does not apply to ruelle-rep; use --weight");
    }
    if (!rep && a.weight) {
        throw std::invalid_argument("--weight only applies to ruelle-rep");
    }
    if (a.negated && (a.kind == "selberg-sym" || rep)) {
        throw std::invalid_argument("--negated is available for ruelle and selberg only");
    }
    if (a.negated && s.imag() != 0.0) {
        throw std::invalid_argument("--negated needs a real s");
    }
    const HighestWeight w = rep ? parse_weight(*a.weight) : HighestWeight{};
    const CharacterIndex k(a.k.value_or(0));

    const ClassTable table(sa.load());
    const EvalOptions options = sa.eval();
    BoundedValue result;
    std::string kind = a.kind;
    if (a.negated) {
        // Reported as the modulus |F(-s)|.
        result = a.kind == "ruelle" ? ruelle_modulus_negated(table, a.volume, k, s.real(), options)
                                    : selberg_modulus_negated(table, a.volume, k, s.real(), options);
        kind += "-modulus-negated";
    } else if (a.kind == "ruelle") {
        result = log_ruelle(table, k, s, options);
        kind = "log-ruelle";
    } else if (a.kind == "selberg") {
        result = log_selberg(table, k, s, options);
        kind = "log-selberg";
    } else if (a.kind == "selberg-sym") {
        result = log_selberg_sym(table, k, s, options);
        kind = "log-selberg-sym";
    } else {
        result = log_ruelle_rep_direct(table, w, s, options);
        kind = "log-ruelle-rep";
    }

    if (g.output() == OutputFormat::csv) {
        out << "kind,k,m,n,s_re,s_im,value_re,value_im,tail_bound,abscissa\n" << kind << ",";
        if (rep) {
            out << "," << w.m << "," << w.n;
        } else {
            out << k.k << ",,";
        }
        out << "," << format_double(s.real()) << "," << format_double(s.imag()) << ","
            << format_double(result.value.real()) << "," << format_double(result.value.imag()) << ","
            << format_double(result.tail_bound) << "," << format_double(result.abscissa) << "\n";
        return kOk;
    }
    out << "{\"kind\":" << json_quote(kind);
    if (rep) {
        out << ",\"weight\":[" << w.m << "," << w.n << "]";
    } else {
        out << ",\"k\":" << k.k;
    }
    out << ",\"s\":" << format_complex(s) << ",\"value\":" << format_complex(result.value)
        << ",\"tail_bound\":" << format_double(result.tail_bound)
        << ",\"abscissa\":" << format_double(result.abscissa) << "}\n";
    return kOk;
}

// ---- identities -----------------------------------------------------------

struct IdentityArgs {
    std::string suite = "all";
    double tol = 1e-10;
    int samples = 1000;
    std::uint64_t seed = 1;
};

int emit_reports(const std::vector<SuiteReport>& reports, const Globals& g, std::ostream& out) {
    bool pass = true;
    if (g.output() == OutputFormat::csv) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            out << to_csv(reports[i], i == 0);
            pass = pass && reports[i].pass();
        }
    } else {
        out << "{\"suites\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            out << (i == 0 ? "" : ",\n") << to_json(reports[i]);
            pass = pass && reports[i].pass();
        }
        out << "],\"pass\":" << (pass ? "true" : "false") << "}\n";
    }
    return pass ? kOk : kResidualAboveTol;
}

int run_identities(const SpectrumArgs& sa, const IdentityArgs& a, const Globals& g, std::ostream& out,
                   std::ostream& err) {
    const std::string& suite = a.suite;
    const bool all = suite == "all";
    const bool needs_spectrum = all || suite == "ruelle-selberg" || suite == "decomposition" || suite == "trace";
    if (needs_spectrum && sa.path.empty()) {
        throw std::invalid_argument("suite " + suite + " needs --spectrum");
    }
    std::optional<ClassTable> table;
    if (needs_spectrum) {
        table.emplace(sa.load());
    }
    const EvalOptions options = sa.eval();
    std::vector<SuiteReport> reports;
    if (all || suite == "ruelle-selberg") {
        reports.push_back(ruelle_selberg_suite(*table, a.tol, options));
    }
    if (all || suite == "decomposition") {
        reports.push_back(decomposition_suite(*table, a.tol, options));
    }
    if (all || suite == "kostant") {
        reports.push_back(kostant_suite(a.samples, a.seed, a.tol));
    }
    if (all || suite == "casimir") {
        reports.push_back(casimir_suite());
    }
    if (all || suite == "trace") {
        reports.push_back(trace_suite(*table, a.tol, TraceSuiteConfig{}, options));
    }
    const int code = emit_reports(reports, g, out);
    for (const auto& r : reports) {
        err << r.suite << ": " << r.cases.size() << " cases, " << r.failures()
            << " above tolerance, max residual " << format_double(r.max_residual()) << "\n";
    }
    return code;
}

// ---- torsion --------------------------------------------------------------

struct TorsionArgs {
    std::optional<double> volume;
    std::string parity = "even";
    int max_m = 10;
    std::optional<std::string> out;
};

int run_torsion(const SpectrumArgs& sa, const TorsionArgs& a, const Globals& g, std::ostream& out) {
    const Parity parity = a.parity == "odd" ? Parity::odd : Parity::even;
    const ClassTable table(sa.load());
    const auto series = torsion_series(table, a.volume, parity, a.max_m, sa.eval());
    std::string text;
    if (g.output() == OutputFormat::csv) {
        text = "M,parity,remainder,cumulative_minus_base,tail_bound,m,required_cutoff\n";
        for (const auto& row : series.rows) {
            text += std::to_string(row.paper_index) + "," + to_string(parity) + "," +
                    format_double(row.remainder) + "," + format_double(row.cumulative) + "," +
                    format_double(row.tail_bound) + "," + std::to_string(row.family_index) + "," +
                    format_double(row.required_cutoff) + "\n";
        }
    } else {
        text = "{\"parity\":" + json_quote(to_string(parity)) + ",\"base_M\":" + std::to_string(series.base_index) +
               ",\"volume\":" + format_double(series.volume) + ",\"rows\":[";
        for (std::size_t i = 0; i < series.rows.size(); ++i) {
            const auto& row = series.rows[i];
            text += std::string(i == 0 ? "\n" : ",\n") + "{\"M\":" + std::to_string(row.paper_index) +
                    ",\"m\":" + std::to_string(row.family_index) + ",\"remainder\":" + format_double(row.remainder) +
                    ",\"cumulative_minus_base\":" + format_double(row.cumulative) +
                    ",\"tail_bound\":" + format_double(row.tail_bound) +
                    ",\"required_cutoff\":" + format_double(row.required_cutoff) + "}";
        }
        text += "\n]}\n";
    }
    write_text(a.out, text, out);
    return kOk;
}

// ---- fit ------------------------------------------------------------------

struct FitArgs {
    double volume = 0.0;
    int m_min = 20;
    int m_max = 80;
    std::string parity = "both";
};

int run_fit(const SpectrumArgs& sa, const FitArgs& a, const Globals& g, std::ostream& out) {
    const ClassTable table(sa.load());
    const auto fit = fit_volume(table, a.volume, a.m_min, a.m_max, parse_parity_mix(a.parity), sa.eval());
    // The even family grows like (vol/pi) m^2 in m = M/2, i.e. slope 4x against m^2.
    const double family_slope = 4.0 * fit.slope;
    if (g.output() == OutputFormat::csv) {
        out << "slope,slope_family_m,linear,intercept,intercept_odd,recovered_volume,injected_volume,rel_error,"
               "M_min,M_max,points,max_abs_residual,max_residual_over_M\n"
            << format_double(fit.slope) << "," << format_double(family_slope) << "," << format_double(fit.linear)
            << "," << format_double(fit.intercept) << ","
            << (fit.intercept_odd ? format_double(*fit.intercept_odd) : "") << ","
            << format_double(fit.recovered_volume) << "," << format_double(fit.injected_volume) << ","
            << format_double(fit.rel_error) << "," << fit.index_min << "," << fit.index_max << "," << fit.points
            << "," << format_double(fit.max_abs_residual) << "," << format_double(fit.max_residual_over_index)
            << "\n";
        return kOk;
    }
    out << "{\"slope\":" << format_double(fit.slope) << ",\"slope_family_m\":" << format_double(family_slope)
        << ",\"linear\":" << format_double(fit.linear) << ",\"intercept\":" << format_double(fit.intercept)
        << ",\"intercept_odd\":" << optional_number(fit.intercept_odd)
        << ",\"recovered_volume\":" << format_double(fit.recovered_volume)
        << ",\"injected_volume\":" << format_double(fit.injected_volume)
        << ",\"rel_error\":" << format_double(fit.rel_error) << ",\"M_range\":[" << fit.index_min << ","
        << fit.index_max << "],\"points\":" << fit.points
        << ",\"max_abs_residual\":" << format_double(fit.max_abs_residual)
        << ",\"max_residual_over_M\":" << format_double(fit.max_residual_over_index) << "}\n";
    return kOk;
}

// ---- trace-check ----------------------------------------------------------

struct TraceArgs {
    int k = 0;
    std::string grid = "3";
    double s0 = 4.0;
    double tol = 1e-6;
    std::optional<std::string> times;
    std::optional<double> volume;
};

int run_trace_check(const SpectrumArgs& sa, const TraceArgs& a, const Globals& g, std::ostream& out) {
    const auto grid = parse_list(a.grid, "grid");
    std::vector<double> times;
    if (a.times) {
        times = parse_list(*a.times, "time list");
    }
    const ClassTable table(sa.load());
    const EvalOptions options = sa.eval();
    const CharacterIndex k(a.k);

    SuiteReport report{"trace-check", a.tol, {}};
    for (double s : grid) {
        const auto r = resolvent_identity_residual(table, k, s, a.s0, options);
        IdentityCase c;
        c.label = "resolvent";
        c.params = {{"k", std::to_string(a.k)},
                    {"s", format_double(s)},
                    {"s0", format_double(a.s0)},
                    {"quadrature", format_double(r.quadrature)},
                    {"closed_form", format_double(r.closed_form)},
                    {"error_estimate", format_double(r.error_estimate)}};
        c.residual = r.residual;
        c.tolerance = a.tol;
        c.pass = r.residual <= a.tol;
        report.cases.push_back(c);
    }
    if (!times.empty()) {
        const std::optional<double> vol = a.volume ? a.volume : table.spectrum().volume();
        if (!vol) {
            throw std::invalid_argument("heat evaluation (--t) requires a volume");
        }
        for (double t : times) {
            const auto h = heat_geometric(table, k, t, *vol, options);
            IdentityCase c;
            c.label = "heat-geometric";
            c.params = {{"k", std::to_string(a.k)},
                        {"t", format_double(t)},
                        {"identity_term", format_double(h.identity_term)},
                        {"hyperbolic_term", format_double(h.hyperbolic_term)},
                        {"total", format_double(h.total)},
                        {"truncation_bound", format_double(h.truncation_bound)}};
            // The imaginary part of the symmetrized sum must vanish.
            c.residual = h.imaginary_part;
            c.tolerance = a.tol;
            c.pass = h.imaginary_part <= a.tol;
            report.cases.push_back(c);
        }
    }
    return emit_reports({report}, g, out);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted Ruelle/Selberg zeta functions and torsion ratios from length spectra", "torzeta"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--threads", g.threads, "Worker threads (fallback: TORZETA_THREADS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a synthetic spectrum");
    gen->add_option("--seed", gen_args.seed)->required();
    gen->add_option("--systole", gen_args.systole)->required();
    gen->add_option("--cutoff", gen_args.cutoff)->required();
    gen->add_option("--density", gen_args.density, "poisson-linear:RATE | capped-exp:C,MAX")->required();
    gen->add_option("--vol", gen_args.volume, "Volume recorded in the manifest");
    gen->add_option("--out", gen_args.out, "Output manifest (default stdout)");

    SpectrumArgs info_spec;
    auto* info = app.add_subcommand("info", "Summarize a spectrum");
    info->add_option("file", info_spec.path, "Spectrum file");
    info_spec.attach(info, false);

    SpectrumArgs zeta_spec;
    ZetaArgs zeta_args;
    auto* zeta = app.add_subcommand("zeta", "Evaluate a zeta function");
    zeta_spec.attach(zeta);
    zeta->add_option("--kind", zeta_args.kind)
        ->required()
        ->check(CLI::IsMember({"ruelle", "selberg", "selberg-sym", "ruelle-rep"}));
    zeta->add_option("--k", zeta_args.k);
    zeta->add_option("--weight", zeta_args.weight, "Highest weight M,N");
    zeta->add_option("--s", zeta_args.s, "Complex point a, a+bi or a-bi")->required();
    zeta->add_option("--vol", zeta_args.volume);
    zeta->add_flag("--negated", zeta_args.negated, "Modulus at -s via the functional equation");

    SpectrumArgs id_spec;
    IdentityArgs id_args;
    auto* identities = app.add_subcommand("identities", "Run identity verification suites");
    id_spec.attach(identities, false);
    identities->add_option("--suite", id_args.suite)
        ->check(CLI::IsMember({"ruelle-selberg", "decomposition", "kostant", "casimir", "trace", "all"}));
    identities->add_option("--tol", id_args.tol)->check(CLI::PositiveNumber);
    identities->add_option("--samples", id_args.samples)->check(CLI::PositiveNumber);
    identities->add_option("--seed", id_args.seed);

    SpectrumArgs tor_spec;
    TorsionArgs tor_args;
    auto* torsion = app.add_subcommand("torsion", "Torsion ratio table");
    tor_spec.attach(torsion);
    torsion->add_option("--vol", tor_args.volume);
    torsion->add_option("--parity", tor_args.parity)->check(CLI::IsMember({"even", "odd"}));
    torsion->add_option("--max-m", tor_args.max_m)->required();
    torsion->add_option("--out", tor_args.out);

    SpectrumArgs fit_spec;
    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Recover the volume from torsion growth");
    fit_spec.attach(fit);
    fit->add_option("--vol", fit_args.volume)->required();
    fit->add_option("--m-min", fit_args.m_min);
    fit->add_option("--m-max", fit_args.m_max);
    fit->add_option("--parity", fit_args.parity)->check(CLI::IsMember({"even", "odd", "both"}));

    SpectrumArgs tr_spec;
    TraceArgs tr_args;
    auto* trace = app.add_subcommand("trace-check", "Resolvent identity and heat-trace checks");
    tr_spec.attach(trace);
    trace->add_option("--k", tr_args.k)->required();
    trace->add_option("--grid", tr_args.grid, "Comma-separated s values");
    trace->add_option("--s0", tr_args.s0);
    trace->add_option("--tol", tr_args.tol)->check(CLI::PositiveNumber);
    trace->add_option("--t", tr_args.times, "Comma-separated heat times");
    trace->add_option("--vol", tr_args.volume);

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
    }

    const int threads = g.threads > 0 ? g.threads : threads_from_environment();
    struct ThreadGuard {
        int previous;
        ~ThreadGuard() { set_thread_count(previous); }
    } guard{set_thread_count(threads)};

    if (*gen) {
        return run_gen(gen_args, out, err);
    }
    if (*info) {
        if (info_spec.path.empty()) {
            throw std::invalid_argument("info needs a spectrum file");
        }
        return run_info(info_spec, g, out);
    }
    if (*zeta) {
        return run_zeta(zeta_spec, zeta_args, g, out);
    }
    if (*identities) {
        return run_identities(id_spec, id_args, g, out, err);
    }
    if (*torsion) {
        return run_torsion(tor_spec, tor_args, g, out);
    }
    if (*fit) {
        return run_fit(fit_spec, fit_args, g, out);
    }
    return run_trace_check(tr_spec, tr_args, g, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kDivergence;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return kDivergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

} // namespace torzeta::cli
