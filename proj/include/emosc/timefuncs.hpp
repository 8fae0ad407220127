#pragma once

#include <complex>

#include "emosc/model.hpp"

namespace emosc {

using cplx = std::complex<double>;

// Evaluated bundle of the time-dependent functions of one system at one time.
//
// For TO the entries are functions of tau = 1 + Upsilon (t'-t0'); for TM the same
// closed forms with tau -> e^chi, chi = Upsilon (t-t0). Both cases are covered by
// one set of formulas in u, where u = ln tau (TO) or u = chi (TM/TQ).
//
// Dotted quantities carry the d/dt' convention throughout: for TM they are the
// t'-derivatives composed with the time map, so d xi/dt (TM) = xi_dot * e^chi.
//
// Identities relied on downstream (asserted in tests):
//   phi1 = xi^2,  phi2 = conj(phi1),  phi3 = 2 xi conj(xi) > 0,
//   W(xi, xi_bar) = xi xi_bar_dot - xi_dot xi_bar = -i,
//   Xi_P = xi e^{-chi/2},  Xi_X = xi_dot e^{+chi/2}   (TQ, kappa = 0),
//   C3_T = 2|Xi_P|^2,
//   C3_D = 2 Re(Xi_P conj(Xi_X)) - Upsilon |Xi_P|^2,
//   C3_X2 = omega^2 |Xi_P|^2 - |Xi_X|^2.
struct TimeFunctions {
    cplx xi, xi_bar, xi_dot, xi_bar_dot;
    cplx phi1, phi1_dot, phi2, phi2_dot;
    double phi3 = 0.0, phi3_dot = 0.0, phi3_ddot = 0.0;

    // TQ-only block; zero for TO/TM.
    cplx Xi_P, Xi_X, Xi_P_bar, Xi_X_bar;
    double C3_T = 0.0, C3_D = 0.0, C3_X2 = 0.0;

    double xi_arg = 0.0; ///< continuous argument of xi (equals arg Xi_P for TQ)
    double u = 0.0;      ///< ln tau (TO) or chi (TM/TQ)
};

/// Evaluate the full bundle for (kind, regime, sign) at the native time offset t
/// (t'-t0' for TO, t-t0 for TM/TQ). Throws DomainError when tau <= 0 for TO.
TimeFunctions eval_timefuncs(const SystemSpec& spec, SystemKind kind, double t);

/// The (A, B) pair that generates states and ladder operators for each system:
/// (xi, xi_dot) for TO/TM, (Xi_P, Xi_X) for TQ. Returns {A, B, continuous arg A}.
struct LadderPair {
    cplx A, B;
    double arg_a = 0.0;
};
LadderPair ladder_pair(const TimeFunctions& tf, SystemKind kind);

} // namespace emosc
