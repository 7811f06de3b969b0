#ifndef JANUS_COHERENCE_HPP
#define JANUS_COHERENCE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "janus/errors.hpp"
#include "janus/polynomials.hpp"

namespace janus {

/// Superposition chi|xi> + eta|zeta> of the squeezed vacua |xi> = |r e^{i theta}>
/// and |zeta> = |s e^{i phi}>.
///
/// Convention: chi carries the global phase and is real and non-negative;
/// the superposition phase delta lives entirely in eta = |eta| e^{i delta}.
/// chi is stored as a complex number so global-phase changes stay expressible.
template <typename Real>
struct JanusConfig {
    Real r{0};
    Real theta{0};
    Real s{0};
    Real phi{0};
    std::complex<Real> chi{1};
    std::complex<Real> eta{0};

    static JanusConfig from_polar(Real r, Real theta, Real s, Real phi, Real chi_abs, Real eta_abs,
                                  Real delta)
    {
        return {r, theta, s, phi, std::complex<Real>(chi_abs), std::polar(eta_abs, delta)};
    }

    /// Exchanges the roles of the two constituents.
    JanusConfig swapped() const { return {s, phi, r, theta, eta, chi}; }

    Real Delta() const { return theta - phi; }
    Real delta() const { return std::arg(eta) - std::arg(chi); }
};

template <typename Real>
struct DerivedParams {
    Real x;                   // tanh^2 r
    Real y;                   // tanh^2 s
    std::complex<Real> z;     // tanh r tanh s e^{i Delta}
    Real Delta;               // theta - phi
    Real delta;               // arg(eta)
    std::complex<Real> overlap; // <zeta|xi>
};

template <typename Real>
struct MomentReport {
    int k{0};
    Real n_k{0};
    Real n_1{0};
    Real g_k{0};
    Real imag_leak{0};
};

using JanusConfigd = JanusConfig<double>;
using DerivedParamsd = DerivedParams<double>;
using MomentReportd = MomentReport<double>;

namespace detail {

template <typename Real>
void require_squeezing(Real r, Real s)
{
    if (!(r >= 0) || !(s >= 0)) {
        throw DomainError("squeezing magnitudes r, s must be non-negative");
    }
}

// Neumaier compensated sum.
template <typename Real, std::size_t N>
Real compensated_sum(const std::array<Real, N>& terms)
{
    Real sum = 0;
    Real carry = 0;
    for (Real t : terms) {
        const Real next = sum + t;
        if (std::abs(sum) >= std::abs(t)) {
            carry += (sum - next) + t;
        } else {
            carry += (t - next) + sum;
        }
        sum = next;
    }
    return sum + carry;
}

// (1 - z)^{-p} on the principal branch.
template <typename Real>
std::complex<Real> inverse_power_one_minus(const std::complex<Real>& z, Real p)
{
    return std::exp(-p * std::log(std::complex<Real>(1) - z));
}

// <xi| a^{+k} a^k |xi> = P_k(x) / (1 - x)^k, using 1 - tanh^2 r = sech^2 r.
template <typename Real>
Real diagonal_term(Real r, int k)
{
    const Real t = std::tanh(r);
    const Real ch2 = std::cosh(r) * std::cosh(r);
    return squeezing_polynomial(k).evaluate(t * t) * std::pow(ch2, Real(k));
}

// <zeta| a^{+k} a^k |xi> = (1-x)^{1/4} (1-y)^{1/4} F_k(w), with w = z for this
// ordering and w = conj(z) for <xi|...|zeta>.
template <typename Real>
std::complex<Real> cross_term(Real r, Real s, const std::complex<Real>& w, int k)
{
    const Real prefactor = Real(1) / std::sqrt(std::cosh(r) * std::cosh(s));
    return prefactor * squeezing_polynomial(k).evaluate(w) *
           inverse_power_one_minus(w, Real(k) + Real(0.5));
}

} // namespace detail

/// x, y, z, the two phases and the overlap <zeta|xi> = (1-x)^{1/4}(1-y)^{1/4}(1-z)^{-1/2}.
template <typename Real>
DerivedParams<Real> derive(const JanusConfig<Real>& cfg)
{
    detail::require_squeezing(cfg.r, cfg.s);
    const Real tr = std::tanh(cfg.r);
    const Real ts = std::tanh(cfg.s);
    const Real Delta = cfg.Delta();
    const std::complex<Real> z = std::polar(tr * ts, Delta);
    const std::complex<Real> overlap =
        detail::inverse_power_one_minus(z, Real(0.5)) / std::sqrt(std::cosh(cfg.r) * std::cosh(cfg.s));
    return {tr * tr, ts * ts, z, Delta, cfg.delta(), overlap};
}

/// |chi|^2 + |eta|^2 + 2 Re[chi eta^* <zeta|xi>] - 1.
template <typename Real>
Real norm_residual(const JanusConfig<Real>& cfg)
{
    const auto d = derive(cfg);
    const std::array<Real, 4> terms{std::norm(cfg.chi), std::norm(cfg.eta),
                                    Real(2) * std::real(cfg.chi * std::conj(cfg.eta) * d.overlap),
                                    Real(-1)};
    return detail::compensated_sum(terms);
}

template <typename Real>
bool is_normalized(const JanusConfig<Real>& cfg, Real tol = Real(1e-10))
{
    return std::abs(norm_residual(cfg)) <= tol;
}

/// Largest non-negative real chi satisfying the normalization constraint for
/// the given eta = eta_abs e^{i delta}. Throws NoRealAmplitude when the
/// quadratic chi^2 + 2 eta_abs Re[e^{-i delta} <zeta|xi>] chi + eta_abs^2 - 1 = 0
/// has no non-negative real root.
template <typename Real>
Real solve_chi(Real eta_abs, Real delta, Real r, Real s, Real theta, Real phi)
{
    if (!(eta_abs >= 0)) {
        throw DomainError("eta_abs must be non-negative");
    }
    const auto d = derive(JanusConfig<Real>{r, theta, s, phi, Real(1), Real(0)});
    const Real b = Real(2) * eta_abs * std::real(std::polar(Real(1), -delta) * d.overlap);
    const Real c = (eta_abs - Real(1)) * (eta_abs + Real(1));
    const Real disc = b * b - Real(4) * c;
    if (disc < 0) {
        throw NoRealAmplitude("normalization has no real chi for |eta| = " + std::to_string(double(eta_abs)) +
                              " (discriminant " + std::to_string(double(disc)) + ")");
    }
    const Real sq = std::sqrt(disc);
    // Numerically stable pair of roots.
    const Real q = b >= 0 ? Real(-0.5) * (b + sq) : Real(-0.5) * (b - sq);
    Real hi = q;
    if (q != 0) {
        hi = std::max(q, c / q);
    } else {
        hi = Real(0.5) * sq;
    }
    if (hi < 0) {
        throw NoRealAmplitude("both normalization roots are negative for |eta| = " +
                              std::to_string(double(eta_abs)));
    }
    // One Newton step tidies the last bits for large amplitudes.
    const Real f = (hi + b) * hi + c;
    const Real fp = Real(2) * hi + b;
    if (fp != 0) {
        const Real polished = hi - f / fp;
        if (polished >= 0) {
            hi = polished;
        }
    }
    return hi;
}

/// N_k = <psi| a^{+k} a^k |psi> from the closed form. n_1 and g_k are left
/// zero; imag_leak is the imaginary residue of evaluating the two cross matrix
/// elements independently.
template <typename Real>
MomentReport<Real> moment(const JanusConfig<Real>& cfg, int k)
{
    if (k < 0) {
        throw DomainError("moment order must be non-negative");
    }
    const auto d = derive(cfg);
    const std::complex<Real> ce = cfg.chi * std::conj(cfg.eta);
    const std::complex<Real> forward = ce * detail::cross_term(cfg.r, cfg.s, d.z, k);
    const std::complex<Real> backward = std::conj(ce) * detail::cross_term(cfg.r, cfg.s, std::conj(d.z), k);
    const std::array<Real, 4> terms{std::norm(cfg.chi) * detail::diagonal_term(cfg.r, k),
                                    std::norm(cfg.eta) * detail::diagonal_term(cfg.s, k), forward.real(),
                                    backward.real()};
    MomentReport<Real> out;
    out.k = k;
    out.n_k = detail::compensated_sum(terms);
    out.imag_leak = std::abs(forward.imag() + backward.imag());
    return out;
}

/// g^(k) = N_k / N_1^k. Throws DegenerateState when N_1 <= 1e-14.
template <typename Real>
MomentReport<Real> g_k(const JanusConfig<Real>& cfg, int k)
{
    if (k < 2) {
        throw DomainError("g^(k) is defined here for k >= 2");
    }
    auto out = moment(cfg, k);
    const auto first = moment(cfg, 1);
    out.n_1 = first.n_k;
    if (!(out.n_1 > Real(1e-14))) {
        throw DegenerateState("mean photon number vanishes; g^(k) undefined");
    }
    out.g_k = out.n_k / std::pow(out.n_1, Real(k));
    out.imag_leak = std::max(out.imag_leak, first.imag_leak);
    return out;
}

/// Single squeezed vacuum: g^(k) = P_k(tanh^2 r) / tanh^{2k} r.
template <typename Real>
Real g_k_single(Real r, int k)
{
    if (k < 2) {
        throw DomainError("g^(k) is defined here for k >= 2");
    }
    if (r < 0) {
        throw DomainError("squeezing magnitude must be non-negative");
    }
    if (r == 0) {
        throw DegenerateState("vacuum has no photons; g^(k) undefined");
    }
    const Real t = std::tanh(r);
    const Real x = t * t;
    return squeezing_polynomial(k).evaluate(x) / std::pow(x, Real(k));
}

/// ceil(k/2), the lowest power present in P_k.
inline int lowest_power(int k) { return (k + 1) / 2; }

/// Exponent p in g^(k) ~ r^p along |eta| ~ 1/r, delta = pi.
/// Generic (l_k Delta != 0 mod 2pi): k - 1 for odd k, k - 2 for even k.
/// Special (l_k Delta == 0 mod 2pi, within 1e-9 rad): k + 1 odd, k even.
inline int predicted_exponent(int k, double Delta)
{
    if (k < 2) {
        throw DomainError("predicted_exponent needs k >= 2");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double angle = std::fmod(std::abs(lowest_power(k) * Delta), two_pi);
    const bool special = std::min(angle, two_pi - angle) <= 1e-9;
    const bool odd = (k % 2) == 1;
    if (special) {
        return odd ? k + 1 : k;
    }
    return odd ? k - 1 : k - 2;
}

/// Small-squeezing, large-amplitude approximation of g^(k) at delta = pi:
///   P_k^{(l_k)} eps^{2(l_k - k)} [1 + 2|chi||eta|(1 - cos l_k Delta)]
///                             / [1 + 2|chi||eta|(1 - cos Delta)]^k
/// where P_k^{(l_k)} is the lowest coefficient of P_k. Comparison use only.
inline double asymptotic_g_k(int k, double Delta, double chi_abs, double eta_abs, double eps)
{
    if (k < 1) {
        throw DomainError("asymptotic_g_k needs k >= 1");
    }
    const auto& p = squeezing_polynomial(k);
    const int l = p.lowest_power();
    const double lowest = p.coeff(l).convert_to<double>();
    const double product = chi_abs * eta_abs;
    const double num = 1.0 + 2.0 * product * (1.0 - std::cos(l * Delta));
    const double den = 1.0 + 2.0 * product * (1.0 - std::cos(Delta));
    return lowest * std::pow(eps, 2.0 * (l - k)) * num / std::pow(den, k);
}

} // namespace janus

#endif // JANUS_COHERENCE_HPP
