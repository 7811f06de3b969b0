#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "janus/analysis.hpp"
#include "janus/coherence.hpp"
#include "janus/fock_oracle.hpp"
#include "janus/io.hpp"
#include "janus/polynomials.hpp"
#include "janus/wigner.hpp"

namespace janus::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

enum class Format { json, csv };

struct Common {
    Format format{Format::json};
    std::string output;
};

struct AmplitudeArgs {
    double r{0.1};
    double s{0.1};
    double theta{0.0};
    double phi{0.0};
    double eta_abs{0.0};
    double delta{0.0};
    std::string chi{"auto"};
    std::optional<double> chi_abs;
};

// Failed self-checks (oracle-check, table-check) exit like domain errors.
class CheckFailed : public janus::Error {
public:
    using janus::Error::Error;
};

void add_common(CLI::App* sub, Common& common)
{
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
    sub->add_option("--format", common.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    sub->add_option("--output", common.output, "Output file (default: standard output)");
}

void add_amplitude_options(CLI::App* sub, AmplitudeArgs& a)
{
    sub->add_option("--r", a.r, "Squeezing magnitude of |xi>")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--s", a.s, "Squeezing magnitude of |zeta>")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--theta", a.theta, "Squeezing phase of |xi> (radians)")->capture_default_str();
    sub->add_option("--phi", a.phi, "Squeezing phase of |zeta> (radians)")->capture_default_str();
    sub->add_option("--eta-abs", a.eta_abs, "|eta|")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--delta", a.delta, "Phase of eta (radians)")->capture_default_str();
    auto* chi = sub->add_option("--chi", a.chi, "'auto' solves chi from normalization")->capture_default_str()->check(
        CLI::IsMember({"auto"}));
    sub->add_option("--chi-abs", a.chi_abs, "Explicit chi (real, >= 0)")->check(CLI::NonNegativeNumber)->excludes(chi);
}

JanusConfigd resolve(const AmplitudeArgs& a, double& chi_used)
{
    chi_used = a.chi_abs ? *a.chi_abs : solve_chi(a.eta_abs, a.delta, a.r, a.s, a.theta, a.phi);
    return JanusConfigd::from_polar(a.r, a.theta, a.s, a.phi, chi_used, a.eta_abs, a.delta);
}

Json amplitude_params(const AmplitudeArgs& a)
{
    Json p{{"r", a.r}, {"s", a.s}, {"theta", a.theta}, {"phi", a.phi}, {"eta_abs", a.eta_abs}, {"delta", a.delta}};
    if (a.chi_abs) {
        p["chi_abs"] = *a.chi_abs;
    } else {
        p["chi"] = a.chi;
    }
    return p;
}

std::string format_name(Format f) { return f == Format::json ? "json" : "csv"; }

Json meta(const std::string& command, const Common& common, Json params)
{
    params["format"] = format_name(common.format);
    params["output"] = common.output.empty() ? "-" : common.output;
    return Json{{"command", command}, {"params", std::move(params)}};
}

// CSV carries the resolved parameters as leading '#' comment lines.
void csv_meta(std::ostream& os, const Json& m)
{
    os << "# command=" << m["command"].get<std::string>() << '\n';
    for (const auto& [key, value] : m["params"].items()) {
        os << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

void emit_json(std::ostream& os, Json body, const Json& m)
{
    body["meta"] = m;
    os << body.dump() << '\n';
}

std::filesystem::path output_path(const std::string& requested)
{
    std::filesystem::path p(requested);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

int dispatch(const std::string& name, const Common& common, std::ostream& out,
             const std::function<void(std::ostream&)>& body)
{
    if (common.output.empty() || common.output == "-") {
        body(out);
        return kExitOk;
    }
    // Render fully before touching the file so a failed command leaves nothing behind.
    std::ostringstream buffer;
    body(buffer);
    const auto path = output_path(common.output);
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error(name + ": cannot open output file " + path.string());
    }
    file << buffer.str();
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Higher-order coherence of superposed squeezed vacua"};
    app.name("janus");
    app.require_subcommand(1);
    app.fallthrough(false);

    // poly
    Common poly_common;
    int poly_k = 0;
    auto* poly = app.add_subcommand("poly", "Exact coefficients of the squeezing polynomial P_k");
    poly->add_option("--k", poly_k, "Order")->required()->check(CLI::Range(0, kMaxPolynomialOrder));
    add_common(poly, poly_common);

    // single
    Common single_common;
    int single_k = 3;
    double single_r = 0.1;
    auto* single = app.add_subcommand("single", "g^(k) of a single squeezed vacuum");
    single->add_option("--k", single_k, "Order")->capture_default_str()->check(CLI::Range(2, kMaxPolynomialOrder));
    single->add_option("--r", single_r, "Squeezing magnitude")->capture_default_str()->check(CLI::NonNegativeNumber);
    add_common(single, single_common);

    // gk
    Common gk_common;
    int gk_k = 3;
    AmplitudeArgs gk_amp;
    auto* gk = app.add_subcommand("gk", "Closed-form moments and g^(k) of a superposition");
    gk->add_option("--k", gk_k, "Order")->capture_default_str()->check(CLI::Range(2, kMaxPolynomialOrder));
    add_amplitude_options(gk, gk_amp);
    add_common(gk, gk_common);

    // solve
    Common solve_common;
    double solve_target = 0.01;
    double solve_r = 0.1;
    double solve_s = 0.1;
    double solve_theta = kPi;
    double solve_phi = 0.0;
    double solve_delta = kPi;
    AmplitudeScan solve_scan;
    auto* solve = app.add_subcommand("solve", "Find |eta| (and chi) reaching a target g^(3)");
    solve->add_option("--target", solve_target, "Target g^(3)")->capture_default_str()->check(CLI::PositiveNumber);
    solve->add_option("--r", solve_r)->capture_default_str()->check(CLI::NonNegativeNumber);
    solve->add_option("--s", solve_s)->capture_default_str()->check(CLI::NonNegativeNumber);
    solve->add_option("--theta", solve_theta)->capture_default_str();
    solve->add_option("--phi", solve_phi)->capture_default_str();
    solve->add_option("--delta", solve_delta)->capture_default_str();
    solve->add_option("--eta-min", solve_scan.eta_min)->capture_default_str()->check(CLI::PositiveNumber);
    solve->add_option("--eta-max", solve_scan.eta_max)->capture_default_str()->check(CLI::PositiveNumber);
    solve->add_option("--samples", solve_scan.samples)->capture_default_str()->check(CLI::Range(2, 1000000));
    add_common(solve, solve_common);

    // scaling
    Common scaling_common;
    int scaling_k = 3;
    double scaling_theta = kPi;
    double scaling_phi = 0.0;
    double scaling_c = 1.0;
    double scaling_rmin = 1e-3;
    double scaling_rmax = 1e-2;
    int scaling_points = 21;
    auto* scaling = app.add_subcommand("scaling", "g^(k) along |eta| = c/r, s = r, delta = pi, with a log-log fit");
    scaling->add_option("--k", scaling_k)->capture_default_str()->check(CLI::Range(2, kMaxPolynomialOrder));
    scaling->add_option("--theta", scaling_theta)->capture_default_str();
    scaling->add_option("--phi", scaling_phi)->capture_default_str();
    scaling->add_option("--c", scaling_c, "Trajectory constant")->capture_default_str()->check(CLI::PositiveNumber);
    scaling->add_option("--r-min", scaling_rmin)->capture_default_str()->check(CLI::PositiveNumber);
    scaling->add_option("--r-max", scaling_rmax)->capture_default_str()->check(CLI::PositiveNumber);
    scaling->add_option("--n-points", scaling_points)->capture_default_str()->check(CLI::Range(2, 100000));
    add_common(scaling, scaling_common);

    // landscape
    Common land_common;
    LandscapeSpec land_spec;
    double land_theta = kPi;
    double land_phi = 0.0;
    std::optional<double> land_s;
    auto* land = app.add_subcommand("landscape", "g^(k) over an (r, |eta|) grid");
    land->add_option("--k", land_spec.k)->capture_default_str()->check(CLI::Range(2, kMaxPolynomialOrder));
    land->add_option("--theta", land_theta)->capture_default_str();
    land->add_option("--phi", land_phi)->capture_default_str();
    land->add_option("--delta", land_spec.delta)->capture_default_str();
    land->add_option("--r-min", land_spec.r_min)->capture_default_str()->check(CLI::PositiveNumber);
    land->add_option("--r-max", land_spec.r_max)->capture_default_str()->check(CLI::PositiveNumber);
    land->add_option("--eta-min", land_spec.eta_min)->capture_default_str()->check(CLI::PositiveNumber);
    land->add_option("--eta-max", land_spec.eta_max)->capture_default_str()->check(CLI::PositiveNumber);
    land->add_option("--nr", land_spec.nr)->capture_default_str()->check(CLI::Range(1, 100000));
    land->add_option("--neta", land_spec.neta)->capture_default_str()->check(CLI::Range(1, 100000));
    land->add_option("--s", land_s, "Fixed s (default: s = r per cell)")->check(CLI::NonNegativeNumber);
    add_common(land, land_common);

    // wigner
    Common wig_common;
    std::string wig_preset = "antisymmetric";
    AmplitudeArgs wig_amp;
    std::optional<double> wig_half_width;
    int wig_nx = 201;
    int wig_ny = 201;
    std::optional<int> wig_cutoff;
    std::optional<std::string> wig_slice_axis;
    double wig_slice_at = 0.0;
    auto* wig = app.add_subcommand("wigner", "Wigner function grid, negativity summary, or a slice");
    wig->add_option("--preset", wig_preset, "single, symmetric, antisymmetric, or custom (uses the amplitude flags)")
        ->capture_default_str()
        ->check(CLI::IsMember({"single", "symmetric", "antisymmetric", "custom"}));
    add_amplitude_options(wig, wig_amp);
    wig->add_option("--half-width", wig_half_width, "Grid half-width (default: 6 standard deviations)")
        ->check(CLI::PositiveNumber);
    wig->add_option("--nx", wig_nx)->capture_default_str()->check(CLI::Range(16, 100000));
    wig->add_option("--ny", wig_ny)->capture_default_str()->check(CLI::Range(16, 100000));
    wig->add_option("--cutoff", wig_cutoff, "Fock cutoff (default: adaptive)")->check(CLI::Range(0, kMaxCutoff));
    wig->add_option("--slice-axis", wig_slice_axis, "Emit a slice along x or p instead of the grid")
        ->check(CLI::IsMember({"x", "p"}));
    wig->add_option("--slice-at", wig_slice_at, "Fixed coordinate of the slice")->capture_default_str();
    add_common(wig, wig_common);

    // oracle-check
    Common oracle_common;
    int oracle_samples = 50;
    std::uint64_t oracle_seed = 20251015;
    int oracle_kmax = 6;
    double oracle_tol = 1e-8;
    auto* oracle = app.add_subcommand("oracle-check", "Closed-form N_k against the truncated Fock oracle");
    oracle->add_option("--samples", oracle_samples)->capture_default_str()->check(CLI::Range(1, 100000));
    oracle->add_option("--seed", oracle_seed)->capture_default_str();
    oracle->add_option("--k-max", oracle_kmax)->capture_default_str()->check(CLI::Range(0, 12));
    oracle->add_option("--tolerance", oracle_tol)->capture_default_str()->check(CLI::PositiveNumber);
    add_common(oracle, oracle_common);

    // table-check
    Common table_common;
    std::string table_rows = "all";
    auto* table = app.add_subcommand("table-check", "Reproduce the tabulated g^(3) reference values");
    table->add_option("--rows", table_rows)->capture_default_str()->check(
        CLI::IsMember({"all", "single", "superposition"}));
    add_common(table, table_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (poly->parsed()) {
            const auto& p = squeezing_polynomial(poly_k);
            const auto m = meta("poly", poly_common, Json{{"k", poly_k}});
            return dispatch("poly", poly_common, out, [&](std::ostream& os) {
                if (poly_common.format == Format::csv) {
                    csv_meta(os, m);
                    os << "power,coeff\n";
                    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
                        os << it->first << ',' << it->second.str() << '\n';
                    }
                } else {
                    emit_json(os, Json(p), m);
                }
            });
        }

        if (single->parsed()) {
            const double g = g_k_single(single_r, single_k);
            const auto m = meta("single", single_common, Json{{"k", single_k}, {"r", single_r}});
            return dispatch("single", single_common, out, [&](std::ostream& os) {
                if (single_common.format == Format::csv) {
                    csv_meta(os, m);
                    os.precision(10);
                    os << "k,r,g_k\n" << single_k << ',' << single_r << ',' << g << '\n';
                } else {
                    emit_json(os, Json{{"k", single_k}, {"r", single_r}, {"g_k", g}}, m);
                }
            });
        }

        if (gk->parsed()) {
            double chi = 0;
            const auto cfg = resolve(gk_amp, chi);
            const auto report = g_k(cfg, gk_k);
            const double residual = norm_residual(cfg);
            Json params = amplitude_params(gk_amp);
            params["k"] = gk_k;
            const auto m = meta("gk", gk_common, params);
            return dispatch("gk", gk_common, out, [&](std::ostream& os) {
                if (gk_common.format == Format::csv) {
                    csv_meta(os, m);
                    os.precision(10);
                    os << "k,n_k,n_1,g_k,imag_leak,chi_abs,norm_residual\n"
                       << report.k << ',' << report.n_k << ',' << report.n_1 << ',' << report.g_k << ','
                       << report.imag_leak << ',' << chi << ',' << residual << '\n';
                } else {
                    Json body = report;
                    body["chi_abs"] = chi;
                    body["norm_residual"] = residual;
                    emit_json(os, std::move(body), m);
                }
            });
        }

        if (solve->parsed()) {
            const auto result =
                solve_table_row(solve_target, solve_theta - solve_phi, solve_delta, solve_r, solve_s, solve_scan);
            const auto m = meta("solve", solve_common,
                                Json{{"target", solve_target},
                                     {"r", solve_r},
                                     {"s", solve_s},
                                     {"theta", solve_theta},
                                     {"phi", solve_phi},
                                     {"delta", solve_delta},
                                     {"eta_min", solve_scan.eta_min},
                                     {"eta_max", solve_scan.eta_max},
                                     {"samples", solve_scan.samples}});
            return dispatch("solve", solve_common, out, [&](std::ostream& os) {
                if (solve_common.format == Format::csv) {
                    csv_meta(os, m);
                    os.precision(10);
                    os << "eta_abs,chi,g3\n";
                    for (const auto& root : result.roots) {
                        os << root.eta_abs << ',' << root.chi << ',' << root.g3 << '\n';
                    }
                } else {
                    emit_json(os, Json(result), m);
                }
            });
        }

        if (scaling->parsed()) {
            const double Delta = scaling_theta - scaling_phi;
            const auto series = scaling_sweep(scaling_k, Delta, scaling_c, scaling_rmin, scaling_rmax, scaling_points);
            const auto fit = fit_loglog(series);
            const auto m = meta("scaling", scaling_common,
                                Json{{"k", scaling_k},
                                     {"theta", scaling_theta},
                                     {"phi", scaling_phi},
                                     {"delta", kPi},
                                     {"c", scaling_c},
                                     {"r_min", scaling_rmin},
                                     {"r_max", scaling_rmax},
                                     {"n_points", scaling_points}});
            return dispatch("scaling", scaling_common, out, [&](std::ostream& os) {
                if (scaling_common.format == Format::csv) {
                    csv_meta(os, m);
                    write_series_csv(os, series);
                } else {
                    Json points = Json::array();
                    for (const auto& p : series.points) {
                        points.push_back(Json{{"r", p.r}, {"g_k", p.g_k}, {"eta_abs", p.eta_abs}, {"chi", p.chi}});
                    }
                    emit_json(os,
                              Json{{"points", points},
                                   {"dropped_r", series.dropped_r},
                                   {"fit", fit},
                                   {"predicted_exponent", predicted_exponent(scaling_k, Delta)}},
                              m);
                }
            });
        }

        if (land->parsed()) {
            land_spec.Delta = land_theta - land_phi;
            land_spec.s = land_s;
            const auto result = landscape(land_spec);
            Json params{{"k", land_spec.k},         {"theta", land_theta},     {"phi", land_phi},
                        {"delta", land_spec.delta}, {"r_min", land_spec.r_min}, {"r_max", land_spec.r_max},
                        {"eta_min", land_spec.eta_min}, {"eta_max", land_spec.eta_max}, {"nr", land_spec.nr},
                        {"neta", land_spec.neta}};
            params["s"] = land_s ? Json(*land_s) : Json("r");
            const auto m = meta("landscape", land_common, params);
            return dispatch("landscape", land_common, out, [&](std::ostream& os) {
                if (land_common.format == Format::csv) {
                    csv_meta(os, m);
                    write_landscape_csv(os, result);
                } else {
                    const int feasible = result.feasible_count();
                    emit_json(os,
                              Json{{"feasible", feasible},
                                   {"cells", result.g.size()},
                                   {"min_g_k", feasible > 0 ? Json(result.min_feasible()) : Json(nullptr)},
                                   {"max_g_k", feasible > 0 ? Json(result.max_feasible()) : Json(nullptr)}},
                              m);
                }
            });
        }

        if (wig->parsed()) {
            JanusConfigd cfg;
            double chi = 0;
            Json params{{"preset", wig_preset}};
            if (wig_preset == "custom") {
                cfg = resolve(wig_amp, chi);
                params.update(amplitude_params(wig_amp));
            } else {
                cfg = preset_config(wig_preset == "single"      ? WignerPreset::single
                                    : wig_preset == "symmetric" ? WignerPreset::symmetric
                                                                : WignerPreset::antisymmetric);
                params.update(Json{{"r", cfg.r},
                                   {"s", cfg.s},
                                   {"theta", cfg.theta},
                                   {"phi", cfg.phi},
                                   {"eta_abs", std::abs(cfg.eta)},
                                   {"delta", cfg.delta()},
                                   {"chi_abs", std::abs(cfg.chi)}});
            }
            const int cutoff =
                wig_cutoff.value_or(adaptive_cutoff(cfg.r, cfg.s, std::abs(cfg.eta), kWignerTailTolerance));
            const auto state = janus_fock(cfg, cutoff);
            const auto q = quadrature_moments(state);
            const double half =
                wig_half_width.value_or(6.0 * std::sqrt(std::max(q.var_x, q.var_p)));
            const auto grid = wigner_grid(state, PhaseSpaceBounds::symmetric(half), wig_nx, wig_ny);
            params["cutoff"] = cutoff;
            params["half_width"] = half;
            params["nx"] = wig_nx;
            params["ny"] = wig_ny;
            if (wig_slice_axis) {
                params["slice_axis"] = *wig_slice_axis;
                params["slice_at"] = wig_slice_at;
            }
            const auto m = meta("wigner", wig_common, params);
            return dispatch("wigner", wig_common, out, [&](std::ostream& os) {
                if (wig_slice_axis) {
                    const Axis axis = *wig_slice_axis == "x" ? Axis::x : Axis::p;
                    const auto samples = slice(grid, axis, wig_slice_at);
                    if (wig_common.format == Format::csv) {
                        csv_meta(os, m);
                        write_slice_csv(os, axis, samples);
                    } else {
                        Json arr = Json::array();
                        for (const auto& [coord, w] : samples) {
                            arr.push_back(Json::array({coord, w}));
                        }
                        emit_json(os, Json{{"slice", arr}}, m);
                    }
                } else if (wig_common.format == Format::csv) {
                    csv_meta(os, m);
                    write_grid_csv(os, grid);
                } else {
                    Json body = WignerSummary::of(grid);
                    body["wigner_origin"] = wigner_origin(state);
                    emit_json(os, std::move(body), m);
                }
            });
        }

        if (oracle->parsed()) {
            std::mt19937_64 rng(oracle_seed);
            std::uniform_real_distribution<double> sq(0.01, 0.6);
            std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
            std::uniform_real_distribution<double> amp(0.0, 3.0);
            double worst = 0.0;
            int accepted = 0;
            int attempts = 0;
            Json rows = Json::array();
            while (accepted < oracle_samples) {
                if (++attempts > 1000 * oracle_samples) {
                    throw CheckFailed("could not draw enough feasible configurations");
                }
                const double r = sq(rng);
                const double s = sq(rng);
                const double theta = phase(rng);
                const double phi = phase(rng);
                const double eta_abs = amp(rng);
                const double delta = phase(rng);
                double chi = 0;
                try {
                    chi = solve_chi(eta_abs, delta, r, s, theta, phi);
                } catch (const NoRealAmplitude&) {
                    continue;
                }
                ++accepted;
                const auto cfg = JanusConfigd::from_polar(r, theta, s, phi, chi, eta_abs, delta);
                const auto state = janus_fock(cfg, adaptive_cutoff(r, s, eta_abs, kDefaultTailTolerance, oracle_kmax));
                double row_worst = 0.0;
                for (int k = 0; k <= oracle_kmax; ++k) {
                    const double closed = moment(cfg, k).n_k;
                    const double brute = oracle_moment(state, k);
                    row_worst = std::max(row_worst, std::abs(closed - brute) / std::max(std::abs(brute), 1e-300));
                }
                worst = std::max(worst, row_worst);
                rows.push_back(Json{{"r", r}, {"s", s}, {"theta", theta}, {"phi", phi}, {"eta_abs", eta_abs},
                                    {"delta", delta}, {"chi", chi}, {"max_rel_error", row_worst}});
            }
            const bool pass = worst <= oracle_tol;
            const auto m = meta("oracle-check", oracle_common,
                                Json{{"samples", oracle_samples},
                                     {"seed", oracle_seed},
                                     {"k_max", oracle_kmax},
                                     {"tolerance", oracle_tol}});
            dispatch("oracle-check", oracle_common, out, [&](std::ostream& os) {
                if (oracle_common.format == Format::csv) {
                    csv_meta(os, m);
                    os.precision(10);
                    os << "r,s,theta,phi,eta_abs,delta,chi,max_rel_error\n";
                    for (const auto& row : rows) {
                        os << row["r"].get<double>() << ',' << row["s"].get<double>() << ','
                           << row["theta"].get<double>() << ',' << row["phi"].get<double>() << ','
                           << row["eta_abs"].get<double>() << ',' << row["delta"].get<double>() << ','
                           << row["chi"].get<double>() << ',' << row["max_rel_error"].get<double>() << '\n';
                    }
                } else {
                    emit_json(os, Json{{"max_rel_error", worst}, {"pass", pass}, {"configs", rows}}, m);
                }
            });
            if (!pass) {
                throw CheckFailed("oracle disagreement " + std::to_string(worst) + " exceeds tolerance");
            }
            return kExitOk;
        }

        if (table->parsed()) {
            const auto checks = check_reference_table();
            Json rows = Json::array();
            std::vector<std::string> failing;
            int index = 0;
            for (const auto& c : checks) {
                ++index;
                if ((table_rows == "single" && !c.row.single_state) ||
                    (table_rows == "superposition" && c.row.single_state)) {
                    continue;
                }
                rows.push_back(Json{{"row", index},
                                    {"scenario", c.row.scenario},
                                    {"r", c.row.r},
                                    {"s", c.row.s},
                                    {"eta_abs", c.row.eta_abs},
                                    {"chi_abs", c.row.chi_abs},
                                    {"tabulated", c.row.g3},
                                    {"computed", c.computed},
                                    {"rel_error", c.rel_error},
                                    {"tolerance", c.tolerance},
                                    {"pass", c.pass}});
                if (!c.pass) {
                    failing.push_back(std::to_string(index) + " (" + c.row.scenario + ")");
                }
            }
            const auto m = meta("table-check", table_common, Json{{"rows", table_rows}});
            dispatch("table-check", table_common, out, [&](std::ostream& os) {
                if (table_common.format == Format::csv) {
                    csv_meta(os, m);
                    os.precision(10);
                    os << "row,scenario,tabulated,computed,rel_error,tolerance,status\n";
                    for (const auto& row : rows) {
                        os << row["row"].get<int>() << ',' << row["scenario"].get<std::string>() << ','
                           << row["tabulated"].get<double>() << ',' << row["computed"].get<double>() << ','
                           << row["rel_error"].get<double>() << ',' << row["tolerance"].get<double>() << ','
                           << (row["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
                    }
                } else {
                    emit_json(os,
                              Json{{"passed", rows.size() - failing.size()}, {"total", rows.size()}, {"rows", rows}},
                              m);
                }
            });
            if (!failing.empty()) {
                std::string list;
                for (const auto& f : failing) {
                    list += (list.empty() ? "" : ", ") + f;
                }
                throw CheckFailed("failing rows: " + list);
            }
            return kExitOk;
        }
    } catch (const janus::Error& e) {
        err << "janus: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "janus: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace janus::cli
