#ifndef JANUS_WIGNER_HPP
#define JANUS_WIGNER_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "janus/coherence.hpp"
#include "janus/fock_oracle.hpp"

namespace janus {

// Phase-space convention: a = (x + i p)/sqrt(2), [x, p] = i, and W is
// normalized against dx dp. The vacuum is (1/pi) exp(-x^2 - p^2), so
// |W| <= 1/pi for every pure state and W(0,0) = parity/pi.

// Truncation errors enter W through c_m c_n^* cross terms, i.e. linearly in
// the dropped amplitudes, so cutoffs for grids are chosen on squared-amplitude
// tail mass well below double precision.
inline constexpr double kWignerTailTolerance = 1e-30;

struct PhaseSpaceBounds {
    double x_min{-5};
    double x_max{5};
    double p_min{-5};
    double p_max{5};

    static PhaseSpaceBounds symmetric(double half_width)
    {
        return {-half_width, half_width, -half_width, half_width};
    }
};

struct WignerGrid {
    PhaseSpaceBounds bounds;
    int nx{0};
    int ny{0};
    Eigen::MatrixXd values; // values(i, j) = W(x_i, p_j)
    double min_value{0};
    double integral{0};
    double negativity_volume{0};
    double imag_residue{0};

    double x_at(int i) const { return bounds.x_min + i * dx(); }
    double p_at(int j) const { return bounds.p_min + j * dp(); }
    double dx() const { return (bounds.x_max - bounds.x_min) / (nx - 1); }
    double dp() const { return (bounds.p_max - bounds.p_min) / (ny - 1); }
};

/// W(x, p) at a single phase-space point.
double wigner_point(const FockVectord& v, double x, double p);

/// W on an nx x ny grid (both >= 16) with trapezoidal integral, minimum and
/// negativity volume. Throws DomainError on bad bounds or resolution.
WignerGrid wigner_grid(const FockVectord& v, const PhaseSpaceBounds& bounds, int nx, int ny);

/// (1/pi) sum_n (-1)^n |c_n|^2.
double wigner_origin(const FockVectord& v);

enum class Axis { x, p };

/// Samples along the grid row/column nearest to `at` (no interpolation).
/// Throws DomainError when `at` lies outside the grid.
std::vector<std::pair<double, double>> slice(const WignerGrid& grid, Axis axis, double at);

struct QuadratureMoments {
    double var_x;
    double var_p;
    double cov_xp; // symmetrized
};

/// Quadrature second moments computed from the Fock amplitudes.
QuadratureMoments quadrature_moments(const FockVectord& v);

/// Marginal variances obtained by integrating the grid.
QuadratureMoments grid_moments(const WignerGrid& grid);

void write_grid_csv(std::ostream& os, const WignerGrid& grid);
void write_slice_csv(std::ostream& os, Axis axis, const std::vector<std::pair<double, double>>& samples);

// Figure-style presets. The paper gives no parameters; these are labeled
// choices: r = s = 0.5, theta = pi, phi = 0 (Delta = pi), |chi| = |eta|.
enum class WignerPreset { single, symmetric, antisymmetric };

/// Common magnitude a with |chi| = |eta| = a normalizing chi|xi> + a e^{i delta}|zeta>.
double equal_amplitude(double delta, double r, double s, double theta, double phi);

JanusConfigd preset_config(WignerPreset preset);

} // namespace janus

#endif // JANUS_WIGNER_HPP
