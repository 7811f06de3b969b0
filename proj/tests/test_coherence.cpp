#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "janus/analysis.hpp"
#include "janus/coherence.hpp"
#include "janus/fock_oracle.hpp"

using janus::JanusConfigd;

namespace {

constexpr double kPi = std::numbers::pi;

struct RandomConfig {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> squeeze{0.01, 0.6};
    std::uniform_real_distribution<double> phase{0.0, 2.0 * kPi};
    std::uniform_real_distribution<double> amplitude{0.0, 3.0};

    explicit RandomConfig(std::uint64_t seed) : rng(seed) {}

    // Draws until the normalization constraint admits a real chi.
    JanusConfigd next()
    {
        for (;;) {
            const double r = squeeze(rng), s = squeeze(rng), theta = phase(rng), phi = phase(rng);
            const double eta = amplitude(rng), delta = phase(rng);
            try {
                const double chi = janus::solve_chi(eta, delta, r, s, theta, phi);
                return JanusConfigd::from_polar(r, theta, s, phi, chi, eta, delta);
            } catch (const janus::NoRealAmplitude&) {
            }
        }
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST(Coherence, DerivedParameters)
{
    const JanusConfigd cfg{0.3, 1.1, 0.2, 0.4, 1.0, 0.0};
    const auto d = janus::derive(cfg);
    EXPECT_NEAR(d.x, std::pow(std::tanh(0.3), 2), 1e-15);
    EXPECT_NEAR(d.y, std::pow(std::tanh(0.2), 2), 1e-15);
    EXPECT_NEAR(std::abs(d.z - std::polar(std::tanh(0.3) * std::tanh(0.2), 0.7)), 0.0, 1e-15);
    EXPECT_NEAR(d.Delta, 0.7, 1e-15);
}

TEST(Coherence, OverlapAtOppositePhases)
{
    // Delta = pi, r = s: <zeta|xi> = 1/sqrt(cosh 2r)
    const auto d = janus::derive(JanusConfigd{0.1, kPi, 0.1, 0.0, 1.0, 0.0});
    EXPECT_NEAR(d.overlap.real(), 1.0 / std::sqrt(std::cosh(0.2)), 1e-14);
    EXPECT_NEAR(d.overlap.real(), 0.99011514362963, 1e-13);
    EXPECT_NEAR(d.overlap.imag(), 0.0, 1e-15);
}

TEST(Coherence, OverlapMatchesFockOracle)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> squeeze(0.0, 0.8);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    for (int t = 0; t < 30; ++t) {
        const double r = squeeze(rng), s = squeeze(rng), theta = phase(rng), phi = phase(rng);
        const auto d = janus::derive(JanusConfigd{r, theta, s, phi, 1.0, 0.0});
        const int cutoff = janus::adaptive_cutoff(r, s, 0.0, 1e-30);
        const auto brute = janus::oracle_overlap(janus::squeezed_fock(r, theta, cutoff),
                                                 janus::squeezed_fock(s, phi, cutoff));
        EXPECT_LT(std::abs(d.overlap - brute), 1e-13);
    }
}

TEST(Coherence, SingleStateClosedForms)
{
    for (double r = 0.05; r <= 2.0; r += 0.05) {
        const double sh2 = std::pow(std::sinh(r), 2);
        EXPECT_LT(rel(janus::g_k_single(r, 2), 3.0 + 1.0 / sh2), 1e-12) << r;
        EXPECT_LT(rel(janus::g_k_single(r, 3), 15.0 + 9.0 / sh2), 1e-12) << r;
    }
    EXPECT_THROW(janus::g_k_single(0.0, 3), janus::DegenerateState);
    EXPECT_THROW(janus::g_k_single(0.1, 1), janus::DomainError);
    EXPECT_THROW(janus::g_k_single(-0.1, 2), janus::DomainError);
}

TEST(Coherence, SingleStateViaGeneralFormula)
{
    for (double r : {0.05, 0.3, 1.2}) {
        const JanusConfigd cfg{r, 0.7, 0.4, 2.0, 1.0, 0.0};
        EXPECT_NEAR(janus::moment(cfg, 1).n_k, std::pow(std::sinh(r), 2), 1e-13);
        for (int k = 2; k <= 6; ++k) {
            EXPECT_LT(rel(janus::g_k(cfg, k).g_k, janus::g_k_single(r, k)), 1e-12);
        }
    }
}

TEST(Coherence, TabulatedSingleStates)
{
    EXPECT_NEAR(janus::g_k_single(0.1, 3), 912.01, 912.01 * 1e-4);
    EXPECT_NEAR(janus::g_k_single(0.05, 3), 3612.00, 3612.00 * 1e-4);
    EXPECT_NEAR(janus::g_k_single(0.01, 3), 90012.00, 90012.00 * 1e-4);
}

TEST(Coherence, ClosedFormMatchesOracleOnRandomConfigs)
{
    RandomConfig gen(2024);
    for (int t = 0; t < 60; ++t) {
        const auto cfg = gen.next();
        ASSERT_TRUE(janus::is_normalized(cfg));
        const auto state = janus::janus_fock(cfg, janus::adaptive_cutoff(cfg.r, cfg.s, std::abs(cfg.eta), 1e-16, 8));
        EXPECT_NEAR(state.norm_squared(), 1.0, 1e-12);
        for (int k = 0; k <= 8; ++k) {
            const auto report = janus::moment(cfg, k);
            EXPECT_LT(rel(report.n_k, janus::oracle_moment(state, k)), 1e-9) << "k=" << k;
            EXPECT_LT(report.imag_leak, 1e-10 * std::max(1.0, std::abs(report.n_k)));
        }
    }
}

TEST(Coherence, SwapAndGlobalPhaseInvariance)
{
    RandomConfig gen(99);
    for (int t = 0; t < 25; ++t) {
        const auto cfg = gen.next();
        auto rotated = cfg;
        const auto u = std::polar(1.0, 0.83);
        rotated.chi *= u;
        rotated.eta *= u;
        for (int k = 0; k <= 5; ++k) {
            const double base = janus::moment(cfg, k).n_k;
            EXPECT_LT(rel(janus::moment(cfg.swapped(), k).n_k, base), 1e-12);
            EXPECT_LT(rel(janus::moment(rotated, k).n_k, base), 1e-12);
        }
        EXPECT_NEAR(janus::norm_residual(cfg.swapped()), 0.0, 1e-12);
    }
}

TEST(Coherence, LongDoubleAgreesWithDouble)
{
    RandomConfig gen(5);
    for (int t = 0; t < 20; ++t) {
        const auto cfg = gen.next();
        const janus::JanusConfig<long double> wide{cfg.r, cfg.theta, cfg.s, cfg.phi,
                                                    std::complex<long double>(cfg.chi),
                                                    std::complex<long double>(cfg.eta)};
        for (int k = 2; k <= 6; ++k) {
            const double narrow = janus::g_k(cfg, k).g_k;
            EXPECT_LT(rel(narrow, double(janus::g_k(wide, k).g_k)), 1e-10);
        }
    }
}

TEST(Coherence, SolveChiNormalizes)
{
    RandomConfig gen(17);
    for (int t = 0; t < 100; ++t) {
        const auto cfg = gen.next();
        EXPECT_GE(cfg.chi.real(), 0.0);
        EXPECT_NEAR(janus::norm_residual(cfg), 0.0, 1e-13);
    }
    // large anti-symmetric amplitudes still normalize
    const double chi = janus::solve_chi(50.0, kPi, 0.01, 0.01, kPi, 0.0);
    const auto cfg = JanusConfigd::from_polar(0.01, kPi, 0.01, 0.0, chi, 50.0, kPi);
    EXPECT_NEAR(janus::norm_residual(cfg), 0.0, 1e-10);
}

TEST(Coherence, SolveChiReportsInfeasibleAmplitudes)
{
    // |eta| = 1/r along s = r, Delta = pi, delta = pi has no real chi
    EXPECT_THROW(janus::solve_chi(1000.0, kPi, 1e-3, 1e-3, kPi, 0.0), janus::NoRealAmplitude);
    // |eta| > 1 with orthogonal-ish constituents at delta = 0 cannot normalize
    EXPECT_THROW(janus::solve_chi(2.0, 0.0, 0.5, 0.5, kPi, 0.0), janus::NoRealAmplitude);
    EXPECT_THROW(janus::solve_chi(-1.0, 0.0, 0.5, 0.5, kPi, 0.0), janus::DomainError);
    EXPECT_THROW(janus::solve_chi(1.0, 0.0, -0.5, 0.5, kPi, 0.0), janus::DomainError);
}

TEST(Coherence, TabulatedSuperpositions)
{
    for (const auto& row : janus::reference_table()) {
        if (row.single_state) {
            continue;
        }
        const auto cfg = JanusConfigd::from_polar(row.r, row.Delta, row.s, 0.0, row.chi_abs, row.eta_abs, row.delta);
        EXPECT_NEAR(janus::norm_residual(cfg), 0.0, 2e-4) << row.scenario;
        EXPECT_LT(rel(janus::g_k(cfg, 3).g_k, row.g3), 1e-2) << row.scenario << " g3=" << row.g3;
    }
}

TEST(Coherence, DegenerateStates)
{
    EXPECT_THROW(janus::g_k(JanusConfigd{0.0, 0.0, 0.0, 0.0, 1.0, 0.0}, 2), janus::DegenerateState);
    EXPECT_THROW(janus::g_k(JanusConfigd{0.1, 0.0, 0.1, 0.0, 1.0, 0.0}, 1), janus::DomainError);
    EXPECT_THROW(janus::moment(JanusConfigd{0.1, 0.0, 0.1, 0.0, 1.0, 0.0}, -1), janus::DomainError);
}

TEST(Coherence, PredictedExponents)
{
    // l_3 = l_4 = 2, so Delta = pi is a special angle for k = 3, 4
    EXPECT_EQ(janus::predicted_exponent(3, kPi), 4);
    EXPECT_EQ(janus::predicted_exponent(3, kPi / 2), 2);
    EXPECT_EQ(janus::predicted_exponent(4, kPi), 4);
    EXPECT_EQ(janus::predicted_exponent(4, kPi / 2), 2);
    EXPECT_EQ(janus::predicted_exponent(5, kPi / 2), 4);
    EXPECT_EQ(janus::predicted_exponent(6, kPi / 2), 4);
    EXPECT_EQ(janus::predicted_exponent(2, kPi), 0);
    EXPECT_EQ(janus::predicted_exponent(3, 0.0), 4);
    EXPECT_EQ(janus::predicted_exponent(4, 0.0), 4);
    EXPECT_THROW(janus::predicted_exponent(1, kPi), janus::DomainError);
}

TEST(Coherence, AsymptoticFormInGenericCase)
{
    // small r along |eta| = c/r with chi from normalization
    const double c = 0.5;
    for (int k : {3, 5, 6}) {
        const double Delta = kPi / 2;
        const double r = 1e-3;
        const double eta = c / r;
        const double chi = janus::solve_chi(eta, kPi, r, r, Delta, 0.0);
        const auto cfg = JanusConfigd::from_polar(r, Delta, r, 0.0, chi, eta, kPi);
        const double exact = janus::g_k(cfg, k).g_k;
        const double approx = janus::asymptotic_g_k(k, Delta, chi, eta, r);
        EXPECT_LT(rel(approx, exact), 1e-2) << "k=" << k;
    }
}
