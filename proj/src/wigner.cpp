#include "janus/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace janus {

namespace {

struct PointValue {
    double w;
    double imag_residue;
};

// Coefficients rho_d[m] = (-1)^m c_m conj(c_{m+d}) of each Fock diagonal,
// with the recurrence weights below. Diagonals that vanish identically (odd d
// for even-parity states) are flagged so the point loop can skip them.
struct Diagonals {
    std::vector<std::vector<std::complex<double>>> rho;
    std::vector<std::vector<double>> lower; // sqrt(m (m+d))
    std::vector<std::vector<double>> scale; // 1 / sqrt((m+1)(m+d+1))
    std::vector<double> log_norm;           // -lgamma(d+1)/2
    std::vector<char> active;

    explicit Diagonals(const ComplexVector<double>& c)
    {
        const int size = static_cast<int>(c.size());
        rho.resize(static_cast<std::size_t>(size));
        lower.resize(static_cast<std::size_t>(size));
        scale.resize(static_cast<std::size_t>(size));
        log_norm.resize(static_cast<std::size_t>(size));
        active.assign(static_cast<std::size_t>(size), 0);
        for (int d = 0; d < size; ++d) {
            const auto n = static_cast<std::size_t>(size - d);
            auto& row = rho[static_cast<std::size_t>(d)];
            row.resize(n);
            lower[static_cast<std::size_t>(d)].resize(n);
            scale[static_cast<std::size_t>(d)].resize(n);
            log_norm[static_cast<std::size_t>(d)] = -0.5 * std::lgamma(d + 1.0);
            for (int m = 0; m + d < size; ++m) {
                const auto i = static_cast<std::size_t>(m);
                row[i] = (m % 2 == 0 ? 1.0 : -1.0) * c(m) * std::conj(c(m + d));
                lower[static_cast<std::size_t>(d)][i] = std::sqrt(double(m) * (m + d));
                scale[static_cast<std::size_t>(d)][i] = 1.0 / std::sqrt((m + 1.0) * (m + d + 1.0));
                if (row[i] != 0.0) {
                    active[static_cast<std::size_t>(d)] = 1;
                }
            }
        }
    }
};

// W = (1/pi) sum_d (2 - delta_d0) Re[e^{i d arg a} sum_m rho_d[m] t_m^(d)], with
//   t_m^(d) = sqrt(m!/(m+d)!) x^{d/2} e^{-x/2} L_m^(d)(x),  x = 4|a|^2,
// generated by the normalized Laguerre recurrence
//   t_{m+1} = [(2m + 1 + d - x) t_m - sqrt(m (m+d)) t_{m-1}] / sqrt((m+1)(m+d+1)).
// Every t stays below one in magnitude, and the forward recurrence is stable
// on the dominant branch, so large cutoffs far from the origin are safe.
PointValue evaluate_point(const Diagonals& diag, double x, double p)
{
    const int size = static_cast<int>(diag.rho.size());
    const double x4 = 2.0 * (x * x + p * p);
    const double log_x4 = std::log(x4);
    const std::complex<double> turn = x4 > 0 ? std::polar(1.0, std::atan2(p, x)) : 1.0;

    double w = 0.0;
    double residue = 0.0;
    std::complex<double> phase = 1.0;
    for (int d = 0; d < size; ++d, phase *= turn) {
        if (!diag.active[static_cast<std::size_t>(d)]) {
            continue;
        }
        const auto dd = static_cast<std::size_t>(d);
        const auto& rho = diag.rho[dd];
        const auto& lower = diag.lower[dd];
        const auto& scale = diag.scale[dd];
        double t = x4 > 0 ? std::exp(-0.5 * x4 + 0.5 * d * log_x4 + diag.log_norm[dd]) : (d == 0 ? 1.0 : 0.0);
        double t_prev = 0.0;
        double re = rho[0].real() * t;
        double im = rho[0].imag() * t;
        const std::size_t count = rho.size();
        double shift = 1.0 + d - x4;
        for (std::size_t m = 0; m + 1 < count; ++m, shift += 2.0) {
            const double next = (shift * t - lower[m] * t_prev) * scale[m];
            t_prev = t;
            t = next;
            re += rho[m + 1].real() * t;
            im += rho[m + 1].imag() * t;
        }
        const std::complex<double> sum(re, im);
        if (d == 0) {
            w += sum.real();
            residue = std::abs(sum.imag());
        } else {
            w += 2.0 * std::real(phase * sum);
        }
    }
    return {w / std::numbers::pi, residue / std::numbers::pi};
}

void check_bounds(const PhaseSpaceBounds& b)
{
    if (!(b.x_max > b.x_min) || !(b.p_max > b.p_min)) {
        throw DomainError("phase-space bounds must satisfy min < max");
    }
}

} // namespace

double wigner_point(const FockVectord& v, double x, double p)
{
    return evaluate_point(Diagonals(v.amps), x, p).w;
}

WignerGrid wigner_grid(const FockVectord& v, const PhaseSpaceBounds& bounds, int nx, int ny)
{
    check_bounds(bounds);
    if (nx < 16 || ny < 16) {
        throw DomainError("Wigner grid resolution must be at least 16 x 16");
    }
    WignerGrid g;
    g.bounds = bounds;
    g.nx = nx;
    g.ny = ny;
    g.values.resize(nx, ny);
    Eigen::MatrixXd residues(nx, ny);
    const Diagonals diag(v.amps);

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nx; ++i) {
        const double x = g.x_at(i);
        for (int j = 0; j < ny; ++j) {
            const auto pv = evaluate_point(diag, x, g.p_at(j));
            g.values(i, j) = pv.w;
            residues(i, j) = pv.imag_residue;
        }
    }

    g.imag_residue = residues.maxCoeff();
    if (g.imag_residue > 1e-10) {
        throw DomainError("Wigner kernel produced a non-negligible imaginary residue");
    }

    // trapezoid weights
    Eigen::VectorXd wx = Eigen::VectorXd::Constant(nx, g.dx());
    Eigen::VectorXd wp = Eigen::VectorXd::Constant(ny, g.dp());
    wx(0) *= 0.5;
    wx(nx - 1) *= 0.5;
    wp(0) *= 0.5;
    wp(ny - 1) *= 0.5;
    g.integral = wx.transpose() * g.values * wp;
    g.negativity_volume = wx.transpose() * (-g.values).cwiseMax(0.0) * wp;
    g.min_value = g.values.minCoeff();
    return g;
}

double wigner_origin(const FockVectord& v)
{
    return oracle_parity(v) / std::numbers::pi;
}

std::vector<std::pair<double, double>> slice(const WignerGrid& grid, Axis axis, double at)
{
    const bool along_x = axis == Axis::x;
    // A slice "along x" fixes p = at; one "along p" fixes x = at.
    const double lo = along_x ? grid.bounds.p_min : grid.bounds.x_min;
    const double hi = along_x ? grid.bounds.p_max : grid.bounds.x_max;
    if (!(at >= lo && at <= hi)) {
        throw DomainError("slice position outside grid bounds");
    }
    const double step = along_x ? grid.dp() : grid.dx();
    const int count = along_x ? grid.ny : grid.nx;
    const int index = std::clamp(static_cast<int>(std::lround((at - lo) / step)), 0, count - 1);

    std::vector<std::pair<double, double>> out;
    if (along_x) {
        for (int i = 0; i < grid.nx; ++i) {
            out.emplace_back(grid.x_at(i), grid.values(i, index));
        }
    } else {
        for (int j = 0; j < grid.ny; ++j) {
            out.emplace_back(grid.p_at(j), grid.values(index, j));
        }
    }
    return out;
}

QuadratureMoments quadrature_moments(const FockVectord& v)
{
    const auto& c = v.amps;
    const int size = static_cast<int>(c.size());
    std::complex<double> a1 = 0.0;
    std::complex<double> a2 = 0.0;
    double n = 0.0;
    for (int k = 0; k < size; ++k) {
        n += k * std::norm(c(k));
        if (k + 1 < size) {
            a1 += std::sqrt(double(k + 1)) * std::conj(c(k)) * c(k + 1);
        }
        if (k + 2 < size) {
            a2 += std::sqrt(double(k + 1) * double(k + 2)) * std::conj(c(k)) * c(k + 2);
        }
    }
    const double norm = v.norm_squared();
    a1 /= norm;
    a2 /= norm;
    n /= norm;
    const double mean_x = std::numbers::sqrt2 * a1.real();
    const double mean_p = std::numbers::sqrt2 * a1.imag();
    return {
        (2.0 * a2.real() + 2.0 * n + 1.0) / 2.0 - mean_x * mean_x,
        (-2.0 * a2.real() + 2.0 * n + 1.0) / 2.0 - mean_p * mean_p,
        a2.imag() - mean_x * mean_p,
    };
}

QuadratureMoments grid_moments(const WignerGrid& grid)
{
    double total = 0;
    double sx = 0;
    double sp = 0;
    double sxx = 0;
    double spp = 0;
    double sxp = 0;
    for (int i = 0; i < grid.nx; ++i) {
        const double wi = (i == 0 || i == grid.nx - 1) ? 0.5 : 1.0;
        const double x = grid.x_at(i);
        for (int j = 0; j < grid.ny; ++j) {
            const double wj = (j == 0 || j == grid.ny - 1) ? 0.5 : 1.0;
            const double p = grid.p_at(j);
            const double w = wi * wj * grid.values(i, j);
            total += w;
            sx += w * x;
            sp += w * p;
            sxx += w * x * x;
            spp += w * p * p;
            sxp += w * x * p;
        }
    }
    const double mx = sx / total;
    const double mp = sp / total;
    return {sxx / total - mx * mx, spp / total - mp * mp, sxp / total - mx * mp};
}

void write_grid_csv(std::ostream& os, const WignerGrid& grid)
{
    const auto old = os.precision(10);
    os << "x,p,w\n";
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            os << grid.x_at(i) << ',' << grid.p_at(j) << ',' << grid.values(i, j) << '\n';
        }
    }
    os.precision(old);
}

void write_slice_csv(std::ostream& os, Axis axis, const std::vector<std::pair<double, double>>& samples)
{
    const auto old = os.precision(10);
    os << (axis == Axis::x ? "x" : "p") << ",w\n";
    for (const auto& [coord, w] : samples) {
        os << coord << ',' << w << '\n';
    }
    os.precision(old);
}

double equal_amplitude(double delta, double r, double s, double theta, double phi)
{
    const auto d = derive(JanusConfigd{r, theta, s, phi, 1.0, 0.0});
    const double denom = 2.0 * (1.0 + std::real(std::polar(1.0, -delta) * d.overlap));
    if (!(denom > 0)) {
        throw NoRealAmplitude("equal-magnitude superposition cannot be normalized (states coincide)");
    }
    return 1.0 / std::sqrt(denom);
}

JanusConfigd preset_config(WignerPreset preset)
{
    constexpr double r = 0.5;
    constexpr double theta = std::numbers::pi;
    constexpr double phi = 0.0;
    switch (preset) {
    case WignerPreset::single:
        return JanusConfigd{r, theta, r, phi, 1.0, 0.0};
    case WignerPreset::symmetric: {
        const double a = equal_amplitude(0.0, r, r, theta, phi);
        return JanusConfigd::from_polar(r, theta, r, phi, a, a, 0.0);
    }
    case WignerPreset::antisymmetric: {
        const double a = equal_amplitude(std::numbers::pi, r, r, theta, phi);
        return JanusConfigd::from_polar(r, theta, r, phi, a, a, std::numbers::pi);
    }
    }
    throw DomainError("unknown Wigner preset");
}

} // namespace janus
