#ifndef JANUS_ANALYSIS_HPP
#define JANUS_ANALYSIS_HPP

#include <iosfwd>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "janus/coherence.hpp"

namespace janus {

// ---------------------------------------------------------------------------
// Scaling along the critically tuned trajectory |eta| = c / r, s = r,
// delta = pi, theta = Delta, phi = 0, chi from the normalization constraint.
// ---------------------------------------------------------------------------

struct ScalingPoint {
    double r;
    double g_k;
    double eta_abs;
    double chi;
};

struct ScalingSeries {
    int k{0};
    double Delta{0};
    double c{1};
    double delta{std::numbers::pi};
    std::vector<ScalingPoint> points;  // r increasing
    std::vector<double> dropped_r;     // no real chi at these r
};

struct ScalingFit {
    double slope{0};
    double intercept{0};
    double max_residual{0}; // log10 units
};

/// Exact g^(k) on n_points log-spaced r in [r_min, r_max]. Points without a
/// real chi are dropped and recorded; more than 20% dropped throws
/// SweepDegenerate.
ScalingSeries scaling_sweep(int k, double Delta, double c, double r_min, double r_max, int n_points);

/// Least squares of log10 g against log10 r. Needs >= 5 positive points and
/// half a decade of abscissa span, otherwise DegenerateFit.
ScalingFit fit_loglog(std::span<const double> r, std::span<const double> g);
ScalingFit fit_loglog(const ScalingSeries& series);

// ---------------------------------------------------------------------------
// Amplitude search for a target g^(3)
// ---------------------------------------------------------------------------

struct AmplitudeRoot {
    double eta_abs;
    double chi;
    double g3;
    int iterations;
};

struct SolveResult {
    std::vector<AmplitudeRoot> roots;
    int scanned{0};
    int feasible{0};
    int brackets{0};

    /// Root whose |eta| is closest to the given value.
    const AmplitudeRoot& nearest(double eta_abs) const;
};

struct AmplitudeScan {
    double eta_min{1e-3};
    double eta_max{1e3};
    int samples{4001};
};

/// All |eta| in the scan range (with chi from solve_chi) where g^(3) hits the
/// target. Every sign change of g^(3) - target between adjacent feasible scan
/// points is bisected until |g^(3) - target| <= 1e-8 target. Throws
/// NoSolution when no bracket exists.
SolveResult solve_table_row(double target_g3, double Delta, double delta, double r, double s,
                            const AmplitudeScan& scan = {});

// ---------------------------------------------------------------------------
// g^(k) landscapes over (r, |eta|)
// ---------------------------------------------------------------------------

struct LandscapeSpec {
    int k{3};
    double Delta{std::numbers::pi};
    double delta{std::numbers::pi};
    double r_min{0.02};
    double r_max{1.0};
    double eta_min{0.1};
    double eta_max{5.0};
    int nr{50};
    int neta{50};
    std::optional<double> s; // unset: s = r in every cell
};

enum class CellStatus { ok, no_amplitude, degenerate };

struct Landscape {
    LandscapeSpec spec;
    Eigen::VectorXd r;
    Eigen::VectorXd eta_abs;
    Eigen::MatrixXd g;  // NaN where infeasible
    Eigen::MatrixXi status; // CellStatus values

    CellStatus status_at(int i, int j) const { return static_cast<CellStatus>(status(i, j)); }

    int feasible_count() const;
    double min_feasible() const;
    double max_feasible() const;
};

Landscape landscape(const LandscapeSpec& spec);

void write_landscape_csv(std::ostream& os, const Landscape& land);
void write_series_csv(std::ostream& os, const ScalingSeries& series);

// ---------------------------------------------------------------------------
// Tabulated reference configurations for g^(3)
// ---------------------------------------------------------------------------

struct TableRow {
    std::string scenario;
    bool single_state;
    double Delta;
    double delta;
    double r;
    double s;
    double eta_abs;
    double chi_abs;
    double g3;
};

/// The eight parameterized rows: five superpositions, three single states.
const std::vector<TableRow>& reference_table();

struct TableRowCheck {
    TableRow row;
    double computed;
    double rel_error;
    double tolerance;
    bool pass;
};

/// Plugs each row's tabulated amplitudes into the closed form. Superposition
/// rows pass within 1%, single-state rows within 0.01%.
std::vector<TableRowCheck> check_reference_table();

} // namespace janus

#endif // JANUS_ANALYSIS_HPP
