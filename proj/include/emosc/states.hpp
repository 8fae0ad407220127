#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "emosc/model.hpp"

namespace emosc {

struct Grid {
    double x_min = 0.0;
    double dx = 0.0;
    int n = 0;

    static Grid linspace(double x_min, double x_max, int n);
    double x(int i) const { return x_min + i * dx; }
    double x_max() const { return x_min + (n - 1) * dx; }
};

struct WavefunctionSample {
    Grid grid;
    std::vector<std::complex<double>> psi;
    SystemKind kind = SystemKind::TM;
    double t = 0.0;          ///< native time offset
    bool derived_case = false; ///< true outside the (Under, +) anchor cases
};

struct NumberFamily {
    int n = 0;
};
struct CoherentFamily {
    double x0 = 0.0, p0 = 0.0;
};
struct SqueezedFamily {
    double x0 = 0.0, p0 = 0.0;
    double r = 0.0, theta = 0.0;
};
using StateFamily = std::variant<NumberFamily, CoherentFamily, SqueezedFamily>;

struct StateSpec {
    SystemKind kind = SystemKind::TM;
    StateFamily family;
};

// Squeezed-state geometry at one time: width Q = (Dx)^2, phase curvature ratio
// R/Q, center Xplus = <x>, and the displaced phase slopes
//   Xminus = 2 Q <p> - R Xplus            (reduces to the r = 0 value at r = 0)
//   Yminus = (Xminus - Xminus|_{r=0} cosh 2r)/sinh 2r   expressed in closed form.
struct SqueezeGeometry {
    double Q = 0.0;
    double R_over_Q = 0.0;
    double Xplus = 0.0;
    double Xminus = 0.0;
    double Yminus = 0.0;
};

SqueezeGeometry squeeze_geometry(const SystemSpec& spec, SystemKind kind,
                                 const SqueezedFamily& fam, double t);

/// n-th number state sampled on the grid. n <= 60 (OverflowGuard beyond).
WavefunctionSample number_state(const SystemSpec& spec, SystemKind kind, int n, double t,
                                const Grid& grid);

WavefunctionSample coherent_state(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                                  double t, const Grid& grid);

WavefunctionSample squeezed_state(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                                  double r, double theta, double t, const Grid& grid);

WavefunctionSample evaluate_state(const SystemSpec& spec, const StateSpec& state, double t,
                                  const Grid& grid);

/// Grid covering center +- 10 sigma of the requested state, sigma from the
/// closed-form variance. n is forced odd for Simpson quadrature.
Grid default_grid(const SystemSpec& spec, const StateSpec& state, double t, int n = 2001);

/// Hn(u) by the recurrence H_{n+1} = 2u Hn - 2n H_{n-1}.
double hermite(int n, double u);

/// Hn(u)/sqrt(2^n n!), evaluated by a scaled recurrence that avoids factorial overflow.
double hermite_scaled(int n, double u);

} // namespace emosc
