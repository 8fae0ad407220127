#include "emosc/model.hpp"

#include <cmath>
#include <limits>

namespace emosc {

const char* to_string(SystemKind k) {
    switch (k) {
        case SystemKind::TO: return "to";
        case SystemKind::TM: return "tm";
        case SystemKind::TQ: return "tq";
    }
    return "?";
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Over: return "over";
        case Regime::Critical: return "critical";
        case Regime::Under: return "under";
    }
    return "?";
}

const char* to_string(Sign s) { return s == Sign::Pos ? "pos" : "neg"; }

std::pair<Regime, double> classify_regime(double upsilon, double omega) {
    if (!(upsilon != 0.0) || !std::isfinite(upsilon))
        throw DomainError("upsilon must be nonzero and finite");
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw DomainError("omega must be positive and finite");

    const double u2 = upsilon * upsilon;
    const double w4 = 4.0 * omega * omega;
    if (std::abs(u2 - w4) <= 1e-12 * u2)
        return {Regime::Critical, 0.0};
    const double delta = std::sqrt(std::abs(1.0 - w4 / u2));
    return {u2 > w4 ? Regime::Over : Regime::Under, delta};
}

SystemSpec SystemSpec::make(double upsilon, double omega, double t0) {
    auto [regime, delta] = classify_regime(upsilon, omega);
    SystemSpec s;
    s.upsilon = upsilon;
    s.omega = omega;
    s.t0 = t0;
    s.regime = regime;
    s.sign = upsilon > 0 ? Sign::Pos : Sign::Neg;
    s.delta = delta;
    return s;
}

SystemSpec SystemSpec::make_forced(double upsilon, double omega, Regime regime, double t0) {
    SystemSpec s = make(upsilon, omega, t0);
    s.regime = regime;
    s.delta = regime == Regime::Critical
                  ? 0.0
                  : std::sqrt(std::abs(1.0 - 4.0 * omega * omega / (upsilon * upsilon)));
    return s;
}

double tm_to_to_time(const SystemSpec& spec, double dt) {
    if (!std::isfinite(dt)) throw DomainError("time offset must be finite");
    return std::expm1(spec.upsilon * dt) / spec.upsilon;
}

double tau_of(const SystemSpec& spec, double dtp) {
    const double tau = 1.0 + spec.upsilon * dtp;
    if (!(tau > 0.0))
        throw DomainError("tau = 1 + Upsilon (t'-t0') must stay positive (got tau = " +
                          std::to_string(tau) + ")");
    return tau;
}

double chi_of(const SystemSpec& spec, double dt) { return spec.upsilon * dt; }

bool in_domain(const SystemSpec& spec, const TimeCoord& tc) {
    if (!std::isfinite(tc.t)) return false;
    // TM/TQ are entire in t; TO needs tau > 0. The endpoint tau -> 0 is an open
    // boundary, not a physical state.
    if (tc.kind != SystemKind::TO) return true;
    return 1.0 + spec.upsilon * tc.t > 0.0;
}

void require_in_domain(const SystemSpec& spec, const TimeCoord& tc) {
    if (!in_domain(spec, tc))
        throw DomainError(std::string("time offset out of domain for system ") +
                          to_string(tc.kind));
}

} // namespace emosc
