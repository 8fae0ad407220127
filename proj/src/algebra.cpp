#include "emosc/algebra.hpp"

#include <cmath>

#include "detail/numerics.hpp"
#include "emosc/timefuncs.hpp"

namespace emosc {

namespace {
constexpr cplx I{0.0, 1.0};
} // namespace

GeneratorCoeffs generator(const SystemSpec& spec, SystemKind kind, GeneratorName name, double t) {
    const TimeFunctions tf = eval_timefuncs(spec, kind, t);
    const LadderPair lp = ladder_pair(tf, kind);

    GeneratorCoeffs g;
    g.name = name;
    switch (name) {
        case GeneratorName::Jminus:
            g.coeff_P = I * lp.A;
            g.coeff_X = -I * lp.B;
            break;
        case GeneratorName::Jplus:
            g.coeff_P = -I * std::conj(lp.A);
            g.coeff_X = I * std::conj(lp.B);
            break;
        case GeneratorName::M:
            switch (kind) {
                case SystemKind::TO:
                    g.coeff_T = tf.phi3;
                    g.coeff_D = -0.5 * tf.phi3_dot;
                    g.coeff_X2 = 0.25 * tf.phi3_ddot;
                    break;
                case SystemKind::TM:
                    g.coeff_T = tf.phi3 * std::exp(-tf.u);
                    g.coeff_D = -0.5 * tf.phi3_dot;
                    g.coeff_X2 = 0.25 * tf.phi3_ddot;
                    break;
                case SystemKind::TQ:
                    g.coeff_T = tf.C3_T;
                    g.coeff_D = -tf.C3_D;
                    g.coeff_X2 = -tf.C3_X2;
                    break;
            }
            break;
    }
    return g;
}

WavefunctionSample apply_generator(const GeneratorCoeffs& coeffs, const WavefunctionSample& psi,
                                   const WavefunctionSample& dpsi_dt) {
    const int n = psi.grid.n;
    if (n < 5 || psi.psi.size() != static_cast<std::size_t>(n))
        throw GridError("apply_generator needs a uniform grid with >= 5 points");
    if (dpsi_dt.psi.size() != psi.psi.size())
        throw GridError("time-derivative samples must share the wavefunction grid");

    const std::vector<cplx> dpsi = detail::d_dx(psi.psi, psi.grid.dx);

    WavefunctionSample out = psi;
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double x = psi.grid.x(i);
        const cplx p = -I * dpsi[k];
        const cplx d = -I * (x * dpsi[k] + 0.5 * psi.psi[k]);
        const cplx tt = I * dpsi_dt.psi[k];
        out.psi[k] = coeffs.coeff_P * p + coeffs.coeff_X * x * psi.psi[k] + coeffs.coeff_T * tt +
                     coeffs.coeff_D * d + coeffs.coeff_X2 * x * x * psi.psi[k] +
                     coeffs.coeff_I * psi.psi[k];
    }
    return out;
}

} // namespace emosc
