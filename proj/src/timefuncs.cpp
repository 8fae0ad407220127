#include "emosc/timefuncs.hpp"

#include <cmath>

namespace emosc {

namespace {

constexpr cplx I{0.0, 1.0};

// One-table core: the six (regime, sign) variants as functions of u, with
// tau = e^u. Negative-sign columns fold into sgn = -1.
TimeFunctions bundle(const SystemSpec& spec, double u) {
    const double au = spec.abs_upsilon();
    const double sgn = spec.sign == Sign::Pos ? 1.0 : -1.0;
    const double d = spec.delta;
    const double eu = std::exp(u);
    const double eh = std::exp(0.5 * u); // sqrt(tau)

    TimeFunctions f;
    f.u = u;

    switch (spec.regime) {
        case Regime::Over: {
            const double em = std::exp(-0.5 * d * u); // tau^{-Delta/2}
            const double ep = std::exp(0.5 * d * u);  // tau^{+Delta/2}
            const double em2 = em * em, ep2 = ep * ep;
            f.xi = std::sqrt(1.0 / (2.0 * au * d)) * eh * cplx{em, sgn * ep};
            f.xi_dot = sgn * std::sqrt(au / (8.0 * d)) / eh *
                       cplx{(1.0 - d) * em, sgn * (1.0 + d) * ep};
            f.phi3 = (1.0 / (au * d)) * eu * (em2 + ep2);
            f.phi3_dot = sgn * (1.0 / d) * ((1.0 - d) * em2 + (1.0 + d) * ep2);
            f.phi3_ddot = (au / eu) * (-(1.0 - d) * em2 + (1.0 + d) * ep2);
            f.phi1 = (1.0 / (2.0 * au * d)) * eu * cplx{em2 - ep2, sgn * 2.0};
            f.phi1_dot = sgn * (0.5 / d) * cplx{(1.0 - d) * em2 - (1.0 + d) * ep2, sgn * 2.0};
            f.xi_arg = sgn * std::atan(ep2);
            break;
        }
        case Regime::Critical: {
            f.xi = std::sqrt(0.5 / au) * eh * cplx{1.0, sgn * u};
            f.xi_dot = sgn * std::sqrt(0.5 * au) / eh * cplx{0.5, sgn * (1.0 + 0.5 * u)};
            f.phi3 = (1.0 / au) * eu * (1.0 + u * u);
            f.phi3_dot = sgn * (1.0 + u) * (1.0 + u);
            f.phi3_ddot = 2.0 * au / eu * (1.0 + u);
            f.phi1 = (0.5 / au) * eu * cplx{1.0 - u * u, sgn * 2.0 * u};
            f.phi1_dot = sgn * 0.5 * cplx{1.0 - u * u - 2.0 * u, sgn * 2.0 * (1.0 + u)};
            f.xi_arg = sgn * std::atan(u);
            break;
        }
        case Regime::Under: {
            const cplx rot = std::exp(I * (sgn * 0.5 * d * u));
            const cplx rot2 = rot * rot;
            f.xi = std::sqrt(1.0 / (au * d)) * eh * rot;
            f.xi_dot = sgn * std::sqrt(au / (4.0 * d)) * cplx{1.0, sgn * d} / eh * rot;
            f.phi3 = (2.0 / (au * d)) * eu;
            f.phi3_dot = sgn * 2.0 / d;
            f.phi3_ddot = 0.0;
            f.phi1 = (1.0 / (au * d)) * eu * rot2;
            f.phi1_dot = sgn * (cplx{1.0, sgn * d} / d) * rot2;
            f.xi_arg = sgn * 0.5 * d * u;
            break;
        }
    }

    f.xi_bar = std::conj(f.xi);
    f.xi_bar_dot = std::conj(f.xi_dot);
    f.phi2 = std::conj(f.phi1);
    f.phi2_dot = std::conj(f.phi1_dot);
    return f;
}

} // namespace

TimeFunctions eval_timefuncs(const SystemSpec& spec, SystemKind kind, double t) {
    require_in_domain(spec, TimeCoord{kind, t});

    if (kind == SystemKind::TO) {
        const double tau = tau_of(spec, t);
        return bundle(spec, std::log(tau));
    }

    const double chi = chi_of(spec, t);
    TimeFunctions f = bundle(spec, chi);
    if (kind == SystemKind::TM) return f;

    // TQ block from the TM functions (kappa = 0 throughout).
    const double ehm = std::exp(-0.5 * chi);
    f.Xi_P = f.xi * ehm;
    f.Xi_X = f.xi_dot / ehm;
    f.Xi_P_bar = std::conj(f.Xi_P);
    f.Xi_X_bar = std::conj(f.Xi_X);
    f.C3_T = 2.0 * std::norm(f.Xi_P);

    const double au = spec.abs_upsilon();
    const double sgn = spec.sign == Sign::Pos ? 1.0 : -1.0;
    switch (spec.regime) {
        case Regime::Over:
            f.C3_D = sgn * std::sinh(spec.delta * chi);
            f.C3_X2 = -(au / 4.0) * (-(1.0 - spec.delta) * std::exp(-spec.delta * chi) +
                                     (1.0 + spec.delta) * std::exp(spec.delta * chi));
            break;
        case Regime::Critical:
            f.C3_D = sgn * chi;
            f.C3_X2 = -(au / 2.0) * (1.0 + chi);
            break;
        case Regime::Under:
            f.C3_D = 0.0;
            f.C3_X2 = 0.0;
            break;
    }
    return f;
}

LadderPair ladder_pair(const TimeFunctions& tf, SystemKind kind) {
    if (kind == SystemKind::TQ) return {tf.Xi_P, tf.Xi_X, tf.xi_arg};
    return {tf.xi, tf.xi_dot, tf.xi_arg};
}

} // namespace emosc
