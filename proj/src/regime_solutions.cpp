#include "emosc/regime_solutions.hpp"

#include <cmath>

#include "emosc/timefuncs.hpp"

namespace emosc {

namespace {

void require_positive(double s) {
    if (!(s > 0.0)) throw DomainError("Euler basis evaluated at s <= 0");
}

} // namespace

double RealBasis::w1(double s) const {
    require_positive(s);
    switch (regime) {
        case Regime::Over: return std::pow(s, 0.5 * (1.0 - delta));
        case Regime::Critical: return std::sqrt(s);
        case Regime::Under: return std::sqrt(s) * std::cos(0.5 * delta * std::log(s));
    }
    return 0.0;
}

double RealBasis::w2(double s) const {
    require_positive(s);
    switch (regime) {
        case Regime::Over: return std::pow(s, 0.5 * (1.0 + delta));
        case Regime::Critical: return std::sqrt(s) * std::log(s);
        case Regime::Under: return std::sqrt(s) * std::sin(0.5 * delta * std::log(s));
    }
    return 0.0;
}

double RealBasis::dw1(double s) const {
    require_positive(s);
    switch (regime) {
        case Regime::Over: return 0.5 * (1.0 - delta) * std::pow(s, 0.5 * (1.0 - delta) - 1.0);
        case Regime::Critical: return 0.5 / std::sqrt(s);
        case Regime::Under: {
            const double a = 0.5 * delta * std::log(s);
            return 0.5 / std::sqrt(s) * (std::cos(a) - delta * std::sin(a));
        }
    }
    return 0.0;
}

double RealBasis::dw2(double s) const {
    require_positive(s);
    switch (regime) {
        case Regime::Over: return 0.5 * (1.0 + delta) * std::pow(s, 0.5 * (1.0 + delta) - 1.0);
        case Regime::Critical: return (std::log(s) + 2.0) / (2.0 * std::sqrt(s));
        case Regime::Under: {
            const double a = 0.5 * delta * std::log(s);
            return 0.5 / std::sqrt(s) * (std::sin(a) + delta * std::cos(a));
        }
    }
    return 0.0;
}

RealBasis euler_basis(double A) {
    RealBasis b;
    const double disc = 1.0 - 4.0 * A;
    if (disc > 0.0) {
        b.regime = Regime::Over;
        b.delta = std::sqrt(disc);
        b.wronskian_const = b.delta;
    } else if (disc == 0.0) {
        b.regime = Regime::Critical;
        b.delta = 0.0;
        b.wronskian_const = 1.0;
    } else {
        b.regime = Regime::Under;
        b.delta = std::sqrt(-disc);
        b.wronskian_const = 0.5 * b.delta;
    }
    return b;
}

NormalizedPair normalize_pair(const SystemSpec& spec, const RealBasis& basis) {
    const double scale = spec.abs_upsilon() * basis.wronskian_const;
    if (!(scale > 0.0)) throw DegenerateError("Wronskian normalization impossible");
    NormalizedPair p;
    p.spec = spec;
    p.basis = basis;
    p.c1 = std::sqrt(1.0 / scale);
    p.c2 = spec.sign == Sign::Pos ? p.c1 : -p.c1;
    return p;
}

NormalizedPair normalize_pair(const SystemSpec& spec) {
    const double A = spec.omega * spec.omega / (spec.upsilon * spec.upsilon);
    RealBasis b = euler_basis(A);
    // When the spec was forced Critical within tolerance, keep the bases consistent.
    if (b.regime != spec.regime) {
        b.regime = spec.regime;
        b.delta = spec.delta;
        b.wronskian_const = spec.regime == Regime::Over      ? spec.delta
                            : spec.regime == Regime::Critical ? 1.0
                                                              : 0.5 * spec.delta;
    }
    return normalize_pair(spec, b);
}

double NormalizedPair::gamma1(double dtp) const { return c1 * basis.w1(tau_of(spec, dtp)); }
double NormalizedPair::gamma2(double dtp) const { return c2 * basis.w2(tau_of(spec, dtp)); }

// d/dt' = Upsilon d/dtau
double NormalizedPair::dgamma1(double dtp) const {
    return c1 * spec.upsilon * basis.dw1(tau_of(spec, dtp));
}
double NormalizedPair::dgamma2(double dtp) const {
    return c2 * spec.upsilon * basis.dw2(tau_of(spec, dtp));
}

std::complex<double> XiSolution::xi(double dtp) const {
    return eval_timefuncs(spec, SystemKind::TO, dtp).xi;
}

std::complex<double> XiSolution::xi_dot(double dtp) const {
    return eval_timefuncs(spec, SystemKind::TO, dtp).xi_dot;
}

XiSolution xi_closed_form(const SystemSpec& spec) { return XiSolution{spec}; }

} // namespace emosc
