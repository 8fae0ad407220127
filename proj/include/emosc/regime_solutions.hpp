#pragma once

#include <complex>

#include "emosc/model.hpp"

namespace emosc {

// Real solution pair of the Euler equation w'' + A s^-2 w = 0, s > 0:
//   1 - 4A > 0 : w1 = s^{(1-Delta)/2},          w2 = s^{(1+Delta)/2},          W = Delta
//   1 - 4A = 0 : w1 = sqrt(s),                  w2 = sqrt(s) ln s,             W = 1
//   1 - 4A < 0 : w1 = sqrt(s) cos(Delta/2 ln s), w2 = sqrt(s) sin(Delta/2 ln s), W = Delta/2
// with Delta^2 = |1 - 4A|. The Wronskian w1 w2' - w1' w2 is constant in s.
struct RealBasis {
    Regime regime = Regime::Under;
    double delta = 0.0;
    double wronskian_const = 0.0;

    double w1(double s) const;
    double w2(double s) const;
    double dw1(double s) const;
    double dw2(double s) const;
};

/// Basis for a given coefficient A; evaluation throws DomainError for s <= 0.
RealBasis euler_basis(double A);

// gamma_i(t') = C_i w_i(tau) normalized so that W_{t'}(gamma1, gamma2) = 1.
// The constants follow from C1 C2 * W_s(w1,w2) * Upsilon = 1 with the sign
// placed on C2, which reproduces every tabulated xi:
//   C1 = sqrt(1/(|Upsilon| Wc)),  C2 = sign(Upsilon) C1.
struct NormalizedPair {
    SystemSpec spec;
    RealBasis basis;
    double c1 = 0.0, c2 = 0.0;

    double gamma1(double dtp) const;
    double gamma2(double dtp) const;
    double dgamma1(double dtp) const; ///< d/dt'
    double dgamma2(double dtp) const;
};

NormalizedPair normalize_pair(const SystemSpec& spec, const RealBasis& basis);
NormalizedPair normalize_pair(const SystemSpec& spec);

/// Complex solution of gamma'' + omega^2/[1 + Upsilon(t'-t0')]^2 gamma = 0 with
/// W_{t'}(xi, conj xi) = -i, from the closed-form tables.
struct XiSolution {
    SystemSpec spec;
    std::complex<double> xi(double dtp) const;
    std::complex<double> xi_dot(double dtp) const;
};

XiSolution xi_closed_form(const SystemSpec& spec);

} // namespace emosc
