#ifndef JANUS_FOCK_ORACLE_HPP
#define JANUS_FOCK_ORACLE_HPP

// Brute-force truncated Fock-space reference. Deliberately plain: amplitudes
// are built term by term and moments are explicit sums over the number basis,
// so that nothing here shares a code path with the closed forms in
// coherence.hpp.

#include <cmath>
#include <complex>
#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "janus/coherence.hpp"
#include "janus/errors.hpp"

namespace janus {

inline constexpr int kMaxCutoff = 4096;
inline constexpr double kDefaultTailTolerance = 1e-16;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// Amplitudes c_0..c_N in the number basis, N = cutoff (inclusive).
template <typename Real>
struct FockVector {
    ComplexVector<Real> amps;

    FockVector() : amps(ComplexVector<Real>::Zero(1)) {}
    explicit FockVector(ComplexVector<Real> a) : amps(std::move(a)) {}

    static FockVector number_state(int n, int cutoff)
    {
        if (n < 0 || n > cutoff) {
            throw DomainError("number state index outside cutoff");
        }
        ComplexVector<Real> a = ComplexVector<Real>::Zero(cutoff + 1);
        a(n) = Real(1);
        return FockVector(std::move(a));
    }

    int cutoff() const { return static_cast<int>(amps.size()) - 1; }
    Real norm_squared() const { return amps.squaredNorm(); }

    /// |c_N|^2 + |c_{N-1}|^2
    Real tail_mass() const
    {
        const int n = cutoff();
        Real t = std::norm(amps(n));
        if (n >= 1) {
            t += std::norm(amps(n - 1));
        }
        return t;
    }

    /// Zero-padded copy with a larger cutoff.
    FockVector padded(int new_cutoff) const
    {
        if (new_cutoff < cutoff()) {
            throw DomainError("padded() cannot shrink a Fock vector");
        }
        ComplexVector<Real> a = ComplexVector<Real>::Zero(new_cutoff + 1);
        a.head(amps.size()) = amps;
        return FockVector(std::move(a));
    }
};

using FockVectord = FockVector<double>;

namespace detail {

template <typename Real>
void check_tail(const FockVector<Real>& v, Real tol, Real weight)
{
    if (v.tail_mass() * weight > tol * v.norm_squared()) {
        throw CutoffTooSmall("Fock cutoff " + std::to_string(v.cutoff()) +
                             " leaves tail mass " + std::to_string(double(v.tail_mass())));
    }
}

} // namespace detail

/// Squeezed vacuum with alpha = -tanh r e^{i theta}:
///   c_{2n} = (1 - |alpha|^2)^{1/4} sqrt((2n)!)/n! (-alpha/2)^n,
/// built with the ratio c_{2n+2}/c_{2n} = sqrt((2n+2)(2n+1))/(n+1) * (-alpha/2).
/// Throws CutoffTooSmall when the last two retained amplitudes carry more than
/// tail_tol of the norm.
template <typename Real>
FockVector<Real> squeezed_fock(Real r, Real theta, int cutoff, Real tail_tol = Real(kDefaultTailTolerance))
{
    if (!(r >= 0)) {
        throw DomainError("squeezing magnitude must be non-negative");
    }
    if (cutoff < 0 || cutoff % 2 != 0) {
        throw DomainError("cutoff must be even and non-negative");
    }
    ComplexVector<Real> a = ComplexVector<Real>::Zero(cutoff + 1);
    const std::complex<Real> half_minus_alpha = std::polar(std::tanh(r) / Real(2), theta);
    std::complex<Real> c = Real(1) / std::sqrt(std::cosh(r));
    for (int n = 0; 2 * n <= cutoff; ++n) {
        a(2 * n) = c;
        const Real m = Real(n);
        c *= std::sqrt((2 * m + 2) * (2 * m + 1)) / (m + 1) * half_minus_alpha;
    }
    FockVector<Real> v(std::move(a));
    // r = 0 is the exact vacuum; nothing is truncated.
    if (r > 0) {
        detail::check_tail(v, tail_tol, Real(1));
    }
    return v;
}

/// chi |xi> + eta |zeta> in the truncated basis.
template <typename Real>
FockVector<Real> janus_fock(const JanusConfig<Real>& cfg, int cutoff, Real tail_tol = Real(kDefaultTailTolerance))
{
    const auto xi = squeezed_fock(cfg.r, cfg.theta, cutoff, tail_tol);
    const auto zeta = squeezed_fock(cfg.s, cfg.phi, cutoff, tail_tol);
    return FockVector<Real>(ComplexVector<Real>(cfg.chi * xi.amps + cfg.eta * zeta.amps));
}

/// sum_n n(n-1)...(n-k+1) |c_n|^2
template <typename Real>
Real oracle_moment(const FockVector<Real>& v, int k)
{
    if (k < 0) {
        throw DomainError("moment order must be non-negative");
    }
    Real total = 0;
    for (int n = k; n <= v.cutoff(); ++n) {
        Real falling = 1;
        for (int j = 0; j < k; ++j) {
            falling *= Real(n - j);
        }
        total += falling * std::norm(v.amps(n));
    }
    return total;
}

/// <b|a> = sum_n conj(b_n) a_n; the shorter vector is zero-padded.
template <typename Real>
std::complex<Real> oracle_overlap(const FockVector<Real>& a, const FockVector<Real>& b)
{
    const int n = std::min(a.cutoff(), b.cutoff()) + 1;
    return b.amps.head(n).dot(a.amps.head(n)); // Eigen's dot conjugates the left operand
}

/// sum_n (-1)^n |c_n|^2
template <typename Real>
Real oracle_parity(const FockVector<Real>& v)
{
    Real total = 0;
    for (int n = 0; n <= v.cutoff(); ++n) {
        total += (n % 2 == 0 ? Real(1) : Real(-1)) * std::norm(v.amps(n));
    }
    return total;
}

/// Smallest even cutoff for which both squeezed constituents have tail mass
/// below tol / max(1, (|eta| + 1)^2). The amplitude bound uses
/// ||chi| - |eta|| <= 1, which the normalization constraint guarantees.
/// With moment_order k > 0 the tail is weighted by n^k as well, so falling
/// factorial moments up to order k converge to the same tolerance.
/// Returns 0 when both states are the vacuum; throws CutoffTooSmall past 4096.
inline int adaptive_cutoff(double r, double s, double eta_abs, double tol = kDefaultTailTolerance,
                           int moment_order = 0)
{
    if (!(tol > 0)) {
        throw DomainError("tolerance must be positive");
    }
    if (!(r >= 0) || !(s >= 0) || !(eta_abs >= 0)) {
        throw DomainError("adaptive_cutoff needs non-negative r, s, |eta|");
    }
    if (moment_order < 0) {
        throw DomainError("moment order must be non-negative");
    }
    const double weight = std::max(1.0, (eta_abs + 1.0) * (eta_abs + 1.0));
    auto needed = [&](double sq) {
        if (sq == 0) {
            return 0;
        }
        // |c_{2n}|^2 by recurrence; the norm of the full series is 1.
        const double t2 = std::tanh(sq) * std::tanh(sq) / 4.0;
        double mass = 1.0 / std::cosh(sq);
        for (int n = 0; 2 * n <= kMaxCutoff; ++n) {
            const double m = n;
            // Mass ratios stay below tanh^2 and the n^k growth factor only
            // shrinks, so the tail past 2n is bounded by a geometric series.
            const double grow = std::pow((2 * m + 2) / std::max(2 * m, 1.0), moment_order);
            const double bound = 4.0 * t2 * grow;
            const double term = mass * std::pow(std::max(2 * m, 1.0), moment_order);
            if (bound < 1.0 && term * weight / (1.0 - bound) <= tol) {
                return 2 * n;
            }
            mass *= (2 * m + 2) * (2 * m + 1) / ((m + 1) * (m + 1)) * t2;
        }
        throw CutoffTooSmall("adaptive cutoff exceeds " + std::to_string(kMaxCutoff));
    };
    return std::max(needed(r), needed(s));
}

/// Debug dump: n,re,im per row.
template <typename Real>
void write_csv(std::ostream& os, const FockVector<Real>& v)
{
    os << "n,re,im\n";
    os.precision(10);
    for (int n = 0; n <= v.cutoff(); ++n) {
        os << n << ',' << v.amps(n).real() << ',' << v.amps(n).imag() << '\n';
    }
}

} // namespace janus

#endif // JANUS_FOCK_ORACLE_HPP
