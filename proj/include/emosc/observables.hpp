#pragma once

#include <utility>

#include "emosc/model.hpp"

namespace emosc {

/// Mean position of coherent and squeezed states (identical for both) at the
/// native time offset t. Equals the classical trajectory through (x0, p0).
double mean_x(const SystemSpec& spec, SystemKind kind, double x0, double p0, double t);

/// Mean momentum, same conventions as mean_x.
double mean_p(const SystemSpec& spec, SystemKind kind, double x0, double p0, double t);

// Squeeze-transformed width/curvature pair behind the variance tables:
//   Q = |A_z|^2,  R = 2 Re(B_z conj(A_z)),
//   A_z = A cosh r + conj(A) e^{i theta} sinh r   (B_z likewise),
// with (A, B) the system's ladder pair. Then
//   (Dx)^2 = Q,  (Dp)^2 = (1 + R^2)/(4Q),  (Dx)^2 (Dp)^2 = (1 + R^2)/4.
// The tabulated Upsilon < 0 rule (Upsilon -> |Upsilon|, theta -> -theta) is a
// consequence of these forms, not an extra branch.
struct SqueezeQR {
    double Q = 0.0;
    double R = 0.0;
};

SqueezeQR squeeze_qr(const SystemSpec& spec, SystemKind kind, double r, double theta, double t);

double var_x(const SystemSpec& spec, SystemKind kind, double r, double theta, double t);
double var_p(const SystemSpec& spec, SystemKind kind, double r, double theta, double t);
double uncertainty_product(const SystemSpec& spec, SystemKind kind, double r, double theta,
                           double t);

/// One sampled row of an observable series.
struct ObservablePoint {
    TimeCoord t;
    double x_mean = 0.0, p_mean = 0.0;
    double x_var = 0.0, p_var = 0.0;
    double product = 0.0;
};

ObservablePoint observable_point(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                                 double r, double theta, double t);

struct ClassicalState {
    double x = 0.0, p = 0.0;
    TimeCoord t;
};

/// Hamilton right-hand sides (dx/dt, dp/dt) of the three classical systems:
///   TO: xdot = p,            pdot = -omega^2/tau^2 x
///   TM: xdot = e^chi p,      pdot = -omega^2 e^-chi x
///   TQ: xdot = p - U/2 x,    pdot = -omega^2 x + U/2 p
std::pair<double, double> classical_rhs(const SystemSpec& spec, SystemKind kind,
                                        const ClassicalState& state);

/// First sign change of mean_x after t_lo, located by bisection to width 1e-10.
/// Returns NaN when no crossing exists in [t_lo, t_hi] at the sampling density.
double first_mean_x_zero(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                         double t_lo, double t_hi, int scan_steps = 4096);

} // namespace emosc
