#include "janus/polynomials.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace janus {

SqueezingPolynomial::SqueezingPolynomial(int order, std::map<int, BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
    if (coeffs_.empty()) {
        throw DomainError("squeezing polynomial must have a nonzero coefficient");
    }
    dense_.assign(static_cast<std::size_t>(degree()) + 1, 0.0L);
    for (const auto& [power, c] : coeffs_) {
        dense_[static_cast<std::size_t>(power)] = c.convert_to<long double>();
    }
}

BigInt SqueezingPolynomial::coeff(int power) const
{
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt SqueezingPolynomial::evaluate_exact(const BigInt& z) const
{
    BigInt acc = 0;
    for (int p = degree(); p >= 0; --p) {
        acc = acc * z + coeff(p);
    }
    return acc;
}

SqueezingPolynomial next_polynomial(const SqueezingPolynomial& p)
{
    const int k = p.order();
    std::map<int, BigInt> out;
    for (const auto& [e, c] : p.coeffs()) {
        // ((3k+1) z - k) c z^e
        out[e + 1] += (3 * k + 1) * c;
        out[e] -= k * c;
        // 2 z (1 - z) e c z^{e-1}
        out[e] += 2 * e * c;
        out[e + 1] -= 2 * e * c;
    }
    return SqueezingPolynomial(k + 1, std::move(out));
}

SqueezingPolynomial build_poly(int k)
{
    if (k < 0 || k > kMaxPolynomialOrder) {
        throw DomainError("polynomial order must be in [0, " + std::to_string(kMaxPolynomialOrder) +
                          "], got " + std::to_string(k));
    }
    SqueezingPolynomial p;
    for (int i = 0; i < k; ++i) {
        p = next_polynomial(p);
    }
    return p;
}

namespace {

struct PolynomialCache {
    std::shared_mutex mutex;
    // deque keeps references stable across push_back
    std::deque<SqueezingPolynomial> table{SqueezingPolynomial()};
};

PolynomialCache& cache()
{
    static PolynomialCache instance;
    return instance;
}

} // namespace

const SqueezingPolynomial& squeezing_polynomial(int k)
{
    if (k < 0 || k > kMaxPolynomialOrder) {
        throw DomainError("polynomial order must be in [0, " + std::to_string(kMaxPolynomialOrder) +
                          "], got " + std::to_string(k));
    }
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (static_cast<std::size_t>(k) < c.table.size()) {
            return c.table[static_cast<std::size_t>(k)];
        }
    }
    std::unique_lock lock(c.mutex);
    while (c.table.size() <= static_cast<std::size_t>(k)) {
        c.table.push_back(next_polynomial(c.table.back()));
    }
    return c.table[static_cast<std::size_t>(k)];
}

std::complex<double> f_eval(int k, std::complex<double> z)
{
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("F_k(z) requires |z| < 1");
    }
    const auto& p = squeezing_polynomial(k);
    return p.evaluate(z) * std::exp(-(k + 0.5) * std::log(1.0 - z));
}

double series_coeff(int k, int n)
{
    if (k < 0) {
        throw DomainError("series_coeff: k must be non-negative");
    }
    if (n < (k + 1) / 2) {
        throw DomainError("series_coeff: n must be at least ceil(k/2)");
    }
    double falling = 1.0;
    for (int j = 0; j < k; ++j) {
        falling *= static_cast<double>(2 * n - j);
    }
    double ratio = 1.0;
    for (int j = 1; j <= n; ++j) {
        ratio *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
    }
    return falling * ratio;
}

BigInt odd_double_factorial(int k)
{
    BigInt acc = 1;
    for (int j = 1; j <= 2 * k - 1; j += 2) {
        acc *= j;
    }
    return acc;
}

BigInt factorial(int k)
{
    BigInt acc = 1;
    for (int j = 2; j <= k; ++j) {
        acc *= j;
    }
    return acc;
}

} // namespace janus
