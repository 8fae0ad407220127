#pragma once

#include <complex>

#include "emosc/model.hpp"
#include "emosc/states.hpp"

namespace emosc {

enum class GeneratorName { Jminus, Jplus, M };

// Time-dependent coefficients of one symmetry generator over the operator
// basis {P, X, T, D, X^2, I} with
//   P = -i d/dx,  X = x,  T = i d/dt,  D = -i (x d/dx + 1/2),
// evaluated at one time. The ladder/number structure behind them:
//   J- = i (A P - B X),   J+ = i (-conj(A) P + conj(B) X),
//   M  = J+ J- + 1/2 on solutions, which reduces to first order as
//        TO: phi3 T' - (phi3_dot/2) D + (phi3_ddot/4) X^2
//        TM: phi3 e^-chi T - (phi3_dot/2) D + (phi3_ddot/4) X^2
//        TQ: C3_T T - C3_D D - C3_X2 X^2.
struct GeneratorCoeffs {
    GeneratorName name = GeneratorName::Jminus;
    std::complex<double> coeff_P, coeff_X, coeff_T, coeff_D, coeff_X2, coeff_I;
};

GeneratorCoeffs generator(const SystemSpec& spec, SystemKind kind, GeneratorName name, double t);

/// Apply sum(coeff_O O) to a sampled wavefunction. T uses the supplied time
/// derivative samples (same grid); x-derivatives use 4th-order central stencils
/// with one-sided stencils at the edges. Throws GridError below 5 points.
WavefunctionSample apply_generator(const GeneratorCoeffs& coeffs, const WavefunctionSample& psi,
                                   const WavefunctionSample& dpsi_dt);

} // namespace emosc
