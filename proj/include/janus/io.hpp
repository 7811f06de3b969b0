#ifndef JANUS_IO_HPP
#define JANUS_IO_HPP

// JSON mappings for the result types. Big-integer coefficients travel as
// decimal strings so they survive parsers that read numbers as doubles.

#include <string>

#include "json.hpp"

#include "janus/analysis.hpp"
#include "janus/coherence.hpp"
#include "janus/polynomials.hpp"
#include "janus/wigner.hpp"

namespace janus {

template <typename BasicJson>
void to_json(BasicJson& j, const SqueezingPolynomial& p)
{
    BasicJson coeffs = BasicJson::object();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        coeffs[std::to_string(it->first)] = it->second.str();
    }
    j = BasicJson{{"k", p.order()}, {"coeffs", coeffs}};
}

template <typename BasicJson>
void from_json(const BasicJson& j, SqueezingPolynomial& p)
{
    std::map<int, BigInt> coeffs;
    for (const auto& [power, value] : j.at("coeffs").items()) {
        coeffs.emplace(std::stoi(power), BigInt(value.template get<std::string>()));
    }
    p = SqueezingPolynomial(j.at("k").template get<int>(), std::move(coeffs));
}

template <typename BasicJson>
void to_json(BasicJson& j, const MomentReportd& m)
{
    j = BasicJson{{"k", m.k}, {"n_k", m.n_k}, {"n_1", m.n_1}, {"g_k", m.g_k}, {"imag_leak", m.imag_leak}};
}

template <typename BasicJson>
void from_json(const BasicJson& j, MomentReportd& m)
{
    j.at("k").get_to(m.k);
    j.at("n_k").get_to(m.n_k);
    j.at("n_1").get_to(m.n_1);
    j.at("g_k").get_to(m.g_k);
    j.at("imag_leak").get_to(m.imag_leak);
}

template <typename BasicJson>
void to_json(BasicJson& j, const ScalingFit& f)
{
    j = BasicJson{{"slope", f.slope}, {"intercept", f.intercept}, {"max_residual", f.max_residual}};
}

template <typename BasicJson>
void from_json(const BasicJson& j, ScalingFit& f)
{
    j.at("slope").get_to(f.slope);
    j.at("intercept").get_to(f.intercept);
    j.at("max_residual").get_to(f.max_residual);
}

template <typename BasicJson>
void to_json(BasicJson& j, const AmplitudeRoot& r)
{
    j = BasicJson{{"eta_abs", r.eta_abs}, {"chi", r.chi}, {"g3", r.g3}, {"iterations", r.iterations}};
}

template <typename BasicJson>
void from_json(const BasicJson& j, AmplitudeRoot& r)
{
    j.at("eta_abs").get_to(r.eta_abs);
    j.at("chi").get_to(r.chi);
    j.at("g3").get_to(r.g3);
    j.at("iterations").get_to(r.iterations);
}

template <typename BasicJson>
void to_json(BasicJson& j, const SolveResult& s)
{
    j = BasicJson{{"roots", s.roots}, {"scanned", s.scanned}, {"feasible", s.feasible}, {"brackets", s.brackets}};
}

template <typename BasicJson>
void from_json(const BasicJson& j, SolveResult& s)
{
    j.at("roots").get_to(s.roots);
    j.at("scanned").get_to(s.scanned);
    j.at("feasible").get_to(s.feasible);
    j.at("brackets").get_to(s.brackets);
}

/// Summary only; the grid itself goes to CSV.
struct WignerSummary {
    double min_value{0};
    double integral{0};
    double negativity_volume{0};

    static WignerSummary of(const WignerGrid& g) { return {g.min_value, g.integral, g.negativity_volume}; }
};

template <typename BasicJson>
void to_json(BasicJson& j, const WignerSummary& w)
{
    j = BasicJson{{"min_value", w.min_value}, {"integral", w.integral}, {"negativity_volume", w.negativity_volume}};
}

template <typename BasicJson>
void from_json(const BasicJson& j, WignerSummary& w)
{
    j.at("min_value").get_to(w.min_value);
    j.at("integral").get_to(w.integral);
    j.at("negativity_volume").get_to(w.negativity_volume);
}

} // namespace janus

#endif // JANUS_IO_HPP
