#include "janus/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace janus {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> log_space(double lo, double hi, int n)
{
    std::vector<double> out(static_cast<std::size_t>(n));
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = n == 1 ? lo : std::pow(10.0, a + (b - a) * i / (n - 1));
    }
    return out;
}

Eigen::VectorXd lin_space(double lo, double hi, int n)
{
    if (n == 1) {
        return Eigen::VectorXd::Constant(1, lo);
    }
    return Eigen::VectorXd::LinSpaced(n, lo, hi);
}

// g^(3) at a given |eta| with chi solved from normalization; nullopt when the
// point is infeasible or degenerate.
struct Evaluated {
    double chi;
    double g3;
};

std::optional<Evaluated> g3_at(double eta_abs, double Delta, double delta, double r, double s)
{
    try {
        const double chi = solve_chi(eta_abs, delta, r, s, Delta, 0.0);
        const auto cfg = JanusConfigd::from_polar(r, Delta, s, 0.0, chi, eta_abs, delta);
        return Evaluated{chi, g_k(cfg, 3).g_k};
    } catch (const NoRealAmplitude&) {
        return std::nullopt;
    } catch (const DegenerateState&) {
        return std::nullopt;
    }
}

} // namespace

ScalingSeries scaling_sweep(int k, double Delta, double c, double r_min, double r_max, int n_points)
{
    if (!(r_min > 0) || !(r_max > r_min)) {
        throw DomainError("scaling_sweep needs 0 < r_min < r_max");
    }
    if (n_points < 2) {
        throw DomainError("scaling_sweep needs at least two points");
    }
    if (!(c > 0)) {
        throw DomainError("trajectory constant c must be positive");
    }
    ScalingSeries series;
    series.k = k;
    series.Delta = Delta;
    series.c = c;
    for (double r : log_space(r_min, r_max, n_points)) {
        const double eta_abs = c / r;
        try {
            const double chi = solve_chi(eta_abs, series.delta, r, r, Delta, 0.0);
            const auto cfg = JanusConfigd::from_polar(r, Delta, r, 0.0, chi, eta_abs, series.delta);
            series.points.push_back({r, g_k(cfg, k).g_k, eta_abs, chi});
        } catch (const NoRealAmplitude&) {
            series.dropped_r.push_back(r);
        }
    }
    if (series.dropped_r.size() * 5 > static_cast<std::size_t>(n_points)) {
        throw SweepDegenerate(std::to_string(series.dropped_r.size()) + " of " + std::to_string(n_points) +
                              " points have no real chi on |eta| = " + std::to_string(c) + "/r");
    }
    return series;
}

ScalingFit fit_loglog(std::span<const double> r, std::span<const double> g)
{
    if (r.size() != g.size()) {
        throw DomainError("fit_loglog: abscissa and ordinate lengths differ");
    }
    const auto n = static_cast<Eigen::Index>(r.size());
    if (n < 5) {
        throw DegenerateFit("fit_loglog needs at least 5 points");
    }
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(r[i] > 0) || !(g[i] > 0)) {
            throw DegenerateFit("fit_loglog needs strictly positive data");
        }
        design(i, 0) = std::log10(r[i]);
        design(i, 1) = 1.0;
        rhs(i) = std::log10(g[i]);
    }
    if (design.col(0).maxCoeff() - design.col(0).minCoeff() < 0.5) {
        throw DegenerateFit("fit_loglog needs at least half a decade of span");
    }
    const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(rhs);
    return {beta(0), beta(1), (design * beta - rhs).cwiseAbs().maxCoeff()};
}

ScalingFit fit_loglog(const ScalingSeries& series)
{
    std::vector<double> r;
    std::vector<double> g;
    for (const auto& p : series.points) {
        r.push_back(p.r);
        g.push_back(p.g_k);
    }
    return fit_loglog(r, g);
}

const AmplitudeRoot& SolveResult::nearest(double eta_abs) const
{
    if (roots.empty()) {
        throw NoSolution("no roots");
    }
    return *std::min_element(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
        return std::abs(a.eta_abs - eta_abs) < std::abs(b.eta_abs - eta_abs);
    });
}

SolveResult solve_table_row(double target_g3, double Delta, double delta, double r, double s, const AmplitudeScan& scan)
{
    if (!(target_g3 > 0)) {
        throw DomainError("target g^(3) must be positive");
    }
    if (!(scan.eta_min > 0) || !(scan.eta_max > scan.eta_min) || scan.samples < 2) {
        throw DomainError("invalid |eta| scan range");
    }
    SolveResult result;
    const auto grid = log_space(scan.eta_min, scan.eta_max, scan.samples);
    std::vector<std::optional<Evaluated>> values;
    values.reserve(grid.size());
    for (double eta : grid) {
        values.push_back(g3_at(eta, Delta, delta, r, s));
        ++result.scanned;
        if (values.back()) {
            ++result.feasible;
        }
    }

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!values[i] || !values[i + 1]) {
            continue;
        }
        double lo = grid[i];
        double hi = grid[i + 1];
        double f_lo = values[i]->g3 - target_g3;
        const double f_hi = values[i + 1]->g3 - target_g3;
        if (f_lo == 0.0) {
            result.roots.push_back({lo, values[i]->chi, values[i]->g3, 0});
            continue;
        }
        if (f_lo * f_hi > 0 || f_hi == 0.0) {
            continue; // an exact hit at hi is recorded by the next bracket
        }
        ++result.brackets;
        Evaluated best = *values[i];
        double best_eta = lo;
        int iterations = 0;
        bool ok = true;
        for (; iterations < 200; ++iterations) {
            const double mid = 0.5 * (lo + hi);
            const auto v = g3_at(mid, Delta, delta, r, s);
            if (!v) {
                ok = false;
                break;
            }
            best = *v;
            best_eta = mid;
            const double f_mid = v->g3 - target_g3;
            if (std::abs(f_mid) <= 1e-10 * target_g3 || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) {
                break;
            }
            if ((f_mid < 0) == (f_lo < 0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        if (ok && std::abs(best.g3 - target_g3) <= 1e-8 * target_g3) {
            result.roots.push_back({best_eta, best.chi, best.g3, iterations});
        }
    }
    if (result.roots.empty()) {
        throw NoSolution("no |eta| in [" + std::to_string(scan.eta_min) + ", " + std::to_string(scan.eta_max) +
                         "] reaches g^(3) = " + std::to_string(target_g3));
    }
    return result;
}

int Landscape::feasible_count() const
{
    return static_cast<int>((status.array() == static_cast<int>(CellStatus::ok)).count());
}

double Landscape::min_feasible() const
{
    double m = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            if (status(i, j) == static_cast<int>(CellStatus::ok)) {
                m = std::min(m, g(i, j));
            }
        }
    }
    return m;
}

double Landscape::max_feasible() const
{
    double m = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            if (status(i, j) == static_cast<int>(CellStatus::ok)) {
                m = std::max(m, g(i, j));
            }
        }
    }
    return m;
}

Landscape landscape(const LandscapeSpec& spec)
{
    if (!(spec.r_min > 0) || !(spec.r_max >= spec.r_min) || !(spec.eta_min > 0) ||
        !(spec.eta_max >= spec.eta_min)) {
        throw DomainError("landscape ranges must be positive and ordered");
    }
    if (spec.nr < 1 || spec.neta < 1) {
        throw DomainError("landscape resolution must be positive");
    }
    if (spec.s && !(*spec.s >= 0)) {
        throw DomainError("landscape s must be non-negative");
    }
    Landscape land;
    land.spec = spec;
    land.r = lin_space(spec.r_min, spec.r_max, spec.nr);
    land.eta_abs = lin_space(spec.eta_min, spec.eta_max, spec.neta);
    land.g = Eigen::MatrixXd::Constant(spec.nr, spec.neta, kNaN);
    land.status = Eigen::MatrixXi::Constant(spec.nr, spec.neta, static_cast<int>(CellStatus::ok));

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < spec.nr; ++i) {
        const double r = land.r(i);
        const double s = spec.s.value_or(r);
        for (int j = 0; j < spec.neta; ++j) {
            const double eta = land.eta_abs(j);
            try {
                const double chi = solve_chi(eta, spec.delta, r, s, spec.Delta, 0.0);
                const auto cfg = JanusConfigd::from_polar(r, spec.Delta, s, 0.0, chi, eta, spec.delta);
                land.g(i, j) = g_k(cfg, spec.k).g_k;
            } catch (const NoRealAmplitude&) {
                land.status(i, j) = static_cast<int>(CellStatus::no_amplitude);
            } catch (const DegenerateState&) {
                land.status(i, j) = static_cast<int>(CellStatus::degenerate);
            }
        }
    }
    return land;
}

void write_landscape_csv(std::ostream& os, const Landscape& land)
{
    const auto old = os.precision(10);
    os << "r,eta_abs,g_k,feasible\n";
    for (Eigen::Index i = 0; i < land.g.rows(); ++i) {
        for (Eigen::Index j = 0; j < land.g.cols(); ++j) {
            const bool ok = land.status(i, j) == static_cast<int>(CellStatus::ok);
            os << land.r(i) << ',' << land.eta_abs(j) << ',';
            if (ok) {
                os << land.g(i, j);
            } else {
                os << "nan";
            }
            os << ',' << (ok ? 1 : 0) << '\n';
        }
    }
    os.precision(old);
}

void write_series_csv(std::ostream& os, const ScalingSeries& series)
{
    const auto old = os.precision(10);
    os << "r,g_k\n";
    for (const auto& p : series.points) {
        os << p.r << ',' << p.g_k << '\n';
    }
    os.precision(old);
}

const std::vector<TableRow>& reference_table()
{
    constexpr double pi = std::numbers::pi;
    static const std::vector<TableRow> rows{
        {"Symmetric Suppression", false, pi, pi, 0.100, 0.100, 3.7268, 4.5425, 0.01},
        {"Symmetric Suppression", false, pi, pi, 0.250, 0.250, 1.9536, 2.5934, 0.10},
        {"Asymmetric Suppression", false, pi, pi, 0.100, 0.150, 1.1369, 2.0996, 0.50},
        {"Asymmetric Anti-Symmetric", false, pi, pi, 0.100, 0.200, 0.5642, 1.5449, 5.00},
        {"Asymmetric Anti-Symmetric", false, pi, pi, 0.100, 0.250, 0.6121, 1.5831, 10.00},
        {"Single Squeezed State", true, 0.0, 0.0, 0.100, 0.100, 0.0, 1.0, 912.01},
        {"Single Squeezed State", true, 0.0, 0.0, 0.050, 0.050, 0.0, 1.0, 3612.00},
        {"Single Squeezed State", true, 0.0, 0.0, 0.010, 0.010, 0.0, 1.0, 90012.00},
    };
    return rows;
}

std::vector<TableRowCheck> check_reference_table()
{
    std::vector<TableRowCheck> out;
    for (const auto& row : reference_table()) {
        // theta = Delta, phi = 0; only the difference enters.
        const auto cfg = JanusConfigd::from_polar(row.r, row.Delta, row.s, 0.0, row.chi_abs, row.eta_abs, row.delta);
        const double computed = g_k(cfg, 3).g_k;
        const double tol = row.single_state ? 1e-4 : 1e-2;
        const double rel = std::abs(computed - row.g3) / row.g3;
        out.push_back({row, computed, rel, tol, rel <= tol});
    }
    return out;
}

} // namespace janus
