#ifndef JANUS_POLYNOMIALS_HPP
#define JANUS_POLYNOMIALS_HPP

#include <complex>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "janus/errors.hpp"

namespace janus {

using BigInt = boost::multiprecision::cpp_int;

// Largest order the cache will build. P_64 has coefficients around 10^120,
// still cheap, and far beyond anything a double can use.
inline constexpr int kMaxPolynomialOrder = 64;

/// Squeezing polynomial P_k(z), defined through
///   F_k(z) = P_k(z) / (1 - z)^{k + 1/2},
/// where F_k is the generating function of <zeta| a^{+k} a^k |xi>. Built from
/// P_0 = 1 with
///   P_{k+1}(z) = ((3k + 1) z - k) P_k(z) + 2 z (1 - z) P_k'(z).
///
/// Coefficients are exact. Only nonzero powers are stored; for k >= 1 they lie
/// in [ceil(k/2), k], the leading one is k! and they sum to (2k - 1)!!.
class SqueezingPolynomial {
public:
    SqueezingPolynomial() : SqueezingPolynomial(0, {{0, BigInt(1)}}) {}
    SqueezingPolynomial(int order, std::map<int, BigInt> coeffs);

    int order() const { return order_; }
    const std::map<int, BigInt>& coeffs() const { return coeffs_; }

    /// l_k: smallest power with a nonzero coefficient.
    int lowest_power() const { return coeffs_.begin()->first; }
    int degree() const { return coeffs_.rbegin()->first; }

    /// Coefficient of z^power, zero when absent.
    BigInt coeff(int power) const;

    /// Horner evaluation with coefficients rounded to the scalar's precision.
    template <typename Scalar>
    Scalar evaluate(const Scalar& z) const;

    /// Exact value at an integer point.
    BigInt evaluate_exact(const BigInt& z) const;

    friend bool operator==(const SqueezingPolynomial&, const SqueezingPolynomial&) = default;

private:
    int order_;
    std::map<int, BigInt> coeffs_;
    // Dense coefficients in long double, index = power.
    std::vector<long double> dense_;
};

/// One application of the recurrence: P_k -> P_{k+1}.
SqueezingPolynomial next_polynomial(const SqueezingPolynomial& p);

/// Builds P_k by iterating the recurrence from P_0 (no caching).
SqueezingPolynomial build_poly(int k);

/// Memoized P_k. The returned reference stays valid for the life of the
/// process; concurrent readers are safe, inserts are serialized.
const SqueezingPolynomial& squeezing_polynomial(int k);

/// F_k(z) = P_k(z) exp(-(k + 1/2) Log(1 - z)), principal branch. Throws
/// DomainError unless |z| < 1.
std::complex<double> f_eval(int k, std::complex<double> z);

/// n-th Taylor coefficient of F_k computed straight from
///   (2n)! / (2n - k)! * (2n - 1)!! / (2n)!!.
/// Throws DomainError for n < ceil(k/2), where the series has no term.
double series_coeff(int k, int n);

/// (2k - 1)!! with (-1)!! = 1.
BigInt odd_double_factorial(int k);
BigInt factorial(int k);

template <typename Scalar>
Scalar SqueezingPolynomial::evaluate(const Scalar& z) const
{
    Scalar acc(0);
    for (auto it = dense_.rbegin(); it != dense_.rend(); ++it) {
        acc = acc * z + Scalar(static_cast<decltype(std::real(z))>(*it));
    }
    return acc;
}

} // namespace janus

#endif // JANUS_POLYNOMIALS_HPP
