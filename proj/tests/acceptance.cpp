// Acceptance suite: one PASS/FAIL line per criterion, INFO lines for context.
//   janus_acceptance                 run all eight
//   janus_acceptance --criterion N   run one (exit status reflects it)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "janus/analysis.hpp"
#include "janus/coherence.hpp"
#include "janus/fock_oracle.hpp"
#include "janus/polynomials.hpp"
#include "janus/wigner.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct Report {
    bool pass{true};
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

void table_reproduction(Report& rep)
{
    for (const auto& c : janus::check_reference_table()) {
        rep.require(c.pass, fmt("%s g3=%.2f computed %.6f (rel %.2e > %.0e)", c.row.scenario.c_str(), c.row.g3,
                                c.computed, c.rel_error, c.tolerance));
        if (c.pass) {
            rep.info(fmt("%s g3=%.2f computed %.6f rel %.2e", c.row.scenario.c_str(), c.row.g3, c.computed,
                         c.rel_error));
        }
    }
}

void oracle_equivalence(Report& rep)
{
    std::mt19937_64 rng(20251015);
    std::uniform_real_distribution<double> squeeze(0.01, 0.6);
    std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
    std::uniform_real_distribution<double> amplitude(0.0, 3.0);
    int accepted = 0;
    double worst = 0;
    while (accepted < 50) {
        const double r = squeeze(rng), s = squeeze(rng), theta = phase(rng), phi = phase(rng);
        const double eta = amplitude(rng), delta = phase(rng);
        double chi = 0;
        try {
            chi = janus::solve_chi(eta, delta, r, s, theta, phi);
        } catch (const janus::NoRealAmplitude&) {
            continue;
        }
        ++accepted;
        const auto cfg = janus::JanusConfigd::from_polar(r, theta, s, phi, chi, eta, delta);
        const auto state = janus::janus_fock(cfg, janus::adaptive_cutoff(r, s, eta, janus::kDefaultTailTolerance, 6));
        for (int k = 0; k <= 6; ++k) {
            const double e = rel(janus::moment(cfg, k).n_k, janus::oracle_moment(state, k));
            worst = std::max(worst, e);
            rep.require(e <= 1e-8, fmt("config %d k=%d relative error %.2e", accepted, k, e));
        }
    }
    rep.info(fmt("50 configs, k = 0..6, worst relative error %.2e", worst));
}

void polynomial_identities(Report& rep)
{
    for (int k = 1; k <= 25; ++k) {
        const auto& p = janus::squeezing_polynomial(k);
        rep.require(p.evaluate_exact(1) == janus::odd_double_factorial(k), fmt("P_%d(1) != (2k-1)!!", k));
        rep.require(p.coeff(k) == janus::factorial(k), fmt("leading coefficient of P_%d != k!", k));
        rep.require(p.lowest_power() == (k + 1) / 2, fmt("lowest power of P_%d != ceil(k/2)", k));
    }
    double worst = 0;
    for (int k = 0; k <= 8; ++k) {
        const auto& p = janus::squeezing_polynomial(k);
        for (int n = (k + 1) / 2; n <= 12; ++n) {
            // Cauchy product of P_k with the binomial series of (1 - z)^{-(k + 1/2)}
            long double b = 1.0L, from_poly = 0.0L;
            std::vector<long double> binom{1.0L};
            for (int m = 0; m < n; ++m) {
                b *= (m + k + 0.5L) / (m + 1);
                binom.push_back(b);
            }
            for (const auto& [power, c] : p.coeffs()) {
                if (power <= n) {
                    from_poly += c.convert_to<long double>() * binom[n - power];
                }
            }
            const double e = rel(janus::series_coeff(k, n), double(from_poly));
            worst = std::max(worst, e);
            rep.require(e <= 1e-10, fmt("series coefficient k=%d n=%d relative error %.2e", k, n, e));
        }
    }
    rep.info(fmt("identities exact for k <= 25; series coefficients worst relative error %.2e", worst));
}

struct SlopeCase {
    int k;
    double Delta;
    int expected;
    const char* label;
};

const std::vector<SlopeCase> kSlopeMatrix{
    {3, kPi, 4, "pi"},       {3, kPi / 2, 2, "pi/2"}, {4, kPi, 4, "pi"},    {4, kPi / 2, 2, "pi/2"},
    {5, kPi / 2, 4, "pi/2"}, {6, kPi / 2, 4, "pi/2"}, {2, kPi, 0, "pi"},
};

void slopes_on_trajectory(Report& rep, double c, bool binding)
{
    for (const auto& sc : kSlopeMatrix) {
        const std::string tag = fmt("c=%.2g (k=%d, Delta=%s)", c, sc.k, sc.label);
        try {
            const auto fit = janus::fit_loglog(janus::scaling_sweep(sc.k, sc.Delta, c, 1e-3, 1e-2, 21));
            const bool ok = std::abs(fit.slope - sc.expected) <= 0.15;
            const auto line = fmt("%s slope %.3f, predicted %d", tag.c_str(), fit.slope, sc.expected);
            if (binding) {
                rep.require(ok, line);
                if (ok) {
                    rep.info(line);
                }
            } else {
                rep.info(line + (ok ? " (within 0.15)" : " (outside 0.15)"));
            }
        } catch (const janus::Error& e) {
            const auto line = fmt("%s: %s", tag.c_str(), e.what());
            if (binding) {
                rep.require(false, line);
            } else {
                rep.info(line);
            }
        }
    }
}

void scaling_slopes(Report& rep)
{
    slopes_on_trajectory(rep, 1.0, true);
    rep.info("on |eta| = c/r, s = r, delta = pi the normalization discriminant tends to "
             "4 - 4c^2 (1 - cos Delta), so c = 1 admits no real chi for these Delta");
    slopes_on_trajectory(rep, 0.5, false);
}

void second_order_plateau(Report& rep)
{
    const double target = 0.25;
    try {
        const auto series = janus::scaling_sweep(2, kPi, 1.0, 1e-3, 1e-2, 21);
        const auto fit = janus::fit_loglog(series);
        const double g2 = series.points.front().g_k;
        rep.require(series.points.front().r == 1e-3, "r = 1e-3 point dropped");
        rep.require(rel(g2, target) <= 0.10, fmt("g2(1e-3) = %.5f vs %.2f", g2, target));
        rep.require(std::abs(fit.slope) <= 0.05, fmt("slope %.4f", fit.slope));
    } catch (const janus::Error& e) {
        rep.require(false, fmt("c=1: %s", e.what()));
    }
    // same trajectory with a feasible constant, for context
    for (double c : {0.5, 0.3}) {
        try {
            const auto series = janus::scaling_sweep(2, kPi, c, 1e-3, 1e-2, 21);
            rep.info(fmt("c=%.1f: g2(1e-3) = %.5f, 1/(4c^2) = %.5f, slope %.4f", c, series.points.front().g_k,
                         1.0 / (4 * c * c), janus::fit_loglog(series).slope));
        } catch (const janus::Error& e) {
            rep.info(fmt("c=%.1f: %s", c, e.what()));
        }
    }
    rep.info("feasibility needs c <= 1/sqrt(2) at Delta = pi, and then 1/(4c^2) >= 0.5");
}

void single_state_closed_forms(Report& rep)
{
    double worst = 0;
    for (int i = 0; i <= 390; ++i) {
        const double r = 0.05 + i * (2.0 - 0.05) / 390;
        const double sh2 = std::pow(std::sinh(r), 2);
        const double e2 = rel(janus::g_k_single(r, 2), 3 + 1 / sh2);
        const double e3 = rel(janus::g_k_single(r, 3), 15 + 9 / sh2);
        worst = std::max({worst, e2, e3});
        rep.require(e2 <= 1e-10 && e3 <= 1e-10, fmt("r=%.4f g2 rel %.2e g3 rel %.2e", r, e2, e3));
    }
    rep.info(fmt("391 radii in [0.05, 2], worst relative error %.2e", worst));
}

janus::WignerGrid six_sigma(const janus::FockVectord& v)
{
    const auto q = janus::quadrature_moments(v);
    const double half = 6 * std::sqrt(std::max(q.var_x, q.var_p));
    return janus::wigner_grid(v, janus::PhaseSpaceBounds::symmetric(half), 201, 201);
}

janus::FockVectord fock_of(const janus::JanusConfigd& cfg)
{
    return janus::janus_fock(cfg,
                             janus::adaptive_cutoff(cfg.r, cfg.s, std::abs(cfg.eta), janus::kWignerTailTolerance));
}

void wigner_properties(Report& rep)
{
    const auto vacuum = janus::FockVectord::number_state(0, 0);
    const auto vg = six_sigma(vacuum);
    const double peak = vg.values(100, 100);
    rep.require(std::abs(peak - 1 / kPi) <= 1e-6, fmt("vacuum peak %.9f", peak));
    rep.require(std::abs(vg.integral - 1) <= 1e-3, fmt("vacuum integral %.6f", vg.integral));

    struct Named {
        std::string name;
        janus::JanusConfigd cfg;
    };
    std::vector<Named> states{{"single", janus::preset_config(janus::WignerPreset::single)},
                              {"symmetric", janus::preset_config(janus::WignerPreset::symmetric)},
                              {"anti-symmetric", janus::preset_config(janus::WignerPreset::antisymmetric)}};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> squeeze(0.05, 0.6);
    std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
    std::uniform_real_distribution<double> amplitude(0.0, 3.0);
    while (states.size() < 8) {
        const double r = squeeze(rng), s = squeeze(rng), theta = phase(rng), eta = amplitude(rng),
                     delta = phase(rng);
        try {
            const double chi = janus::solve_chi(eta, delta, r, s, theta, 0.0);
            states.push_back({fmt("random %zu", states.size() - 2),
                              janus::JanusConfigd::from_polar(r, theta, s, 0.0, chi, eta, delta)});
        } catch (const janus::NoRealAmplitude&) {
        }
    }

    double symmetric_min = 0, anti_min = 0;
    for (const auto& [name, cfg] : states) {
        const auto grid = six_sigma(fock_of(cfg));
        const double centre = grid.values(100, 100);
        rep.require(std::abs(grid.integral - 1) <= 1e-3, fmt("%s integral %.6f", name.c_str(), grid.integral));
        rep.require(std::abs(centre - 1 / kPi) <= 1e-6, fmt("%s W(0,0) = %.9f", name.c_str(), centre));
        rep.info(fmt("%s: integral %.6f, W(0,0) %.9f, min W %.5f", name.c_str(), grid.integral, centre,
                     grid.min_value));
        if (name == "symmetric") {
            symmetric_min = grid.min_value;
        } else if (name == "anti-symmetric") {
            anti_min = grid.min_value;
        }
    }
    rep.require(anti_min < -0.01, fmt("anti-symmetric min W %.5f", anti_min));
    rep.require(symmetric_min >= -1e-10, fmt("symmetric min W %.5f", symmetric_min));
    rep.info("a pure state has a non-negative Wigner function only if it is Gaussian; "
             "the symmetric superposition is not");
}

void trivial_interference(Report& rep)
{
    const std::vector<std::pair<double, const char*>> branches{
        {0.0, "0"}, {kPi / 2, "pi/2"}, {kPi, "pi"}, {3 * kPi / 2, "3pi/2"}};
    for (const auto& [delta, label] : branches) {
        janus::LandscapeSpec spec;
        spec.Delta = 0.0;
        spec.delta = delta;
        const auto land = janus::landscape(spec);
        const int feasible = land.feasible_count();
        rep.require(feasible > 0, fmt("delta=%s has no feasible cells", label));
        if (feasible > 0) {
            const double lo = land.min_feasible();
            rep.require(lo > 1.0, fmt("delta=%s min g3 %.5f", label, lo));
            rep.info(fmt("delta=%s: %d/%d feasible cells, min g3 %.4f", label, feasible, int(land.g.size()), lo));
        }
    }
    janus::LandscapeSpec unequal;
    unequal.Delta = 0.0;
    unequal.delta = kPi;
    unequal.s = 0.3;
    rep.info(fmt("with s fixed at 0.3 instead of s = r, delta=pi reaches min g3 %.4f",
                 janus::landscape(unequal).min_feasible()));
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Report&)> body;
};

const std::vector<Criterion> kCriteria{
    {1, "tabulated g3 reproduction", 1.0, table_reproduction},
    {2, "closed form vs Fock oracle", 10.0, oracle_equivalence},
    {3, "polynomial identities and series coefficients", 0.0, polynomial_identities},
    {4, "scaling-law slopes at c = 1", 30.0, scaling_slopes},
    {5, "g2 plateau at 0.25", 0.0, second_order_plateau},
    {6, "single-state closed forms", 0.0, single_state_closed_forms},
    {7, "Wigner properties", 30.0, wigner_properties},
    {8, "Delta = 0 shows no suppression", 0.0, trivial_interference},
};

bool run(const Criterion& c)
{
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.body(rep);
    } catch (const std::exception& e) {
        rep.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0) {
        rep.require(elapsed < c.budget_s, fmt("runtime %.2f s exceeds %.0f s", elapsed, c.budget_s));
    }
    for (const auto& n : rep.notes) {
        std::cout << "  INFO  [" << c.id << "] " << n << '\n';
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
              << fmt(" (%.2f s)", elapsed) << std::endl;
    return rep.pass;
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: janus_acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(kCriteria.size())) {
        std::cerr << "criterion must be in 1.." << kCriteria.size() << '\n';
        return 2;
    }
    int failed = 0;
    for (const auto& c : kCriteria) {
        if (only == 0 || only == c.id) {
            failed += run(c) ? 0 : 1;
        }
    }
    if (only == 0) {
        std::cout << (kCriteria.size() - failed) << "/" << kCriteria.size() << " criteria passed\n";
    }
    return failed == 0 ? 0 : 1;
}
