#include "emosc/observables.hpp"

#include <cmath>
#include <limits>

#include "emosc/timefuncs.hpp"

namespace emosc {

namespace {

// Shared evaluation point for the mean-value tables. u = ln tau (TO) or chi
// (TM/TQ); the TO and TM rows are the same functions of u up to the
// sqrt(tau) = e^{u/2} prefactors, and the TQ rows drop those prefactors.
struct MeanCtx {
    double u;      // ln tau or chi
    double up;     // e^{+u/2} prefactor (1 for TQ)
    double um;     // e^{-u/2} prefactor (1 for TQ)
    double U;      // Upsilon (sign included, as printed)
    double d;      // Delta
    double omega2;
};

MeanCtx mean_ctx(const SystemSpec& spec, SystemKind kind, double t) {
    MeanCtx c{};
    c.U = spec.upsilon;
    c.d = spec.delta;
    c.omega2 = spec.omega * spec.omega;
    c.u = kind == SystemKind::TO ? std::log(tau_of(spec, t)) : chi_of(spec, t);
    const bool scaled = kind != SystemKind::TQ;
    c.up = scaled ? std::exp(0.5 * c.u) : 1.0;
    c.um = scaled ? std::exp(-0.5 * c.u) : 1.0;
    return c;
}

} // namespace

double mean_x(const SystemSpec& spec, SystemKind kind, double x0, double p0, double t) {
    const MeanCtx c = mean_ctx(spec, kind, t);
    switch (spec.regime) {
        case Regime::Over: {
            const double a = 0.5 * c.d * c.u;
            return c.up * ((x0 / c.d) * (c.d * std::cosh(a) - std::sinh(a)) +
                           (2.0 * p0 / (c.U * c.d)) * std::sinh(a));
        }
        case Regime::Critical:
            return c.up * (x0 * (1.0 - 0.5 * c.u) + (p0 / c.U) * c.u);
        case Regime::Under: {
            const double a = 0.5 * c.d * c.u;
            return c.up * ((x0 / c.d) * (c.d * std::cos(a) - std::sin(a)) +
                           (2.0 * p0 / (c.U * c.d)) * std::sin(a));
        }
    }
    return 0.0;
}

double mean_p(const SystemSpec& spec, SystemKind kind, double x0, double p0, double t) {
    const MeanCtx c = mean_ctx(spec, kind, t);
    switch (spec.regime) {
        case Regime::Over: {
            const double a = 0.5 * c.d * c.u;
            return c.um * (-(2.0 * x0 * c.omega2 / (c.U * c.d)) * std::sinh(a) +
                           (p0 / c.d) * (c.d * std::cosh(a) + std::sinh(a)));
        }
        case Regime::Critical:
            return c.um * (-x0 * 0.25 * c.U * c.u + p0 * (1.0 + 0.5 * c.u));
        case Regime::Under: {
            const double a = 0.5 * c.d * c.u;
            return c.um * (-(2.0 * x0 * c.omega2 / (c.U * c.d)) * std::sin(a) +
                           (p0 / c.d) * (c.d * std::cos(a) + std::sin(a)));
        }
    }
    return 0.0;
}

SqueezeQR squeeze_qr(const SystemSpec& spec, SystemKind kind, double r, double theta, double t) {
    if (!(r >= 0.0)) throw DomainError("squeeze parameter r must be >= 0");
    const TimeFunctions tf = eval_timefuncs(spec, kind, t);
    const LadderPair lp = ladder_pair(tf, kind);
    const cplx ph = std::exp(cplx{0.0, theta});
    const double ch = std::cosh(r), sh = std::sinh(r);
    const cplx Az = lp.A * ch + std::conj(lp.A) * ph * sh;
    const cplx Bz = lp.B * ch + std::conj(lp.B) * ph * sh;
    SqueezeQR qr;
    qr.Q = std::norm(Az);
    qr.R = 2.0 * std::real(Bz * std::conj(Az));
    return qr;
}

double var_x(const SystemSpec& spec, SystemKind kind, double r, double theta, double t) {
    return squeeze_qr(spec, kind, r, theta, t).Q;
}

double var_p(const SystemSpec& spec, SystemKind kind, double r, double theta, double t) {
    const SqueezeQR qr = squeeze_qr(spec, kind, r, theta, t);
    return (1.0 + qr.R * qr.R) / (4.0 * qr.Q);
}

double uncertainty_product(const SystemSpec& spec, SystemKind kind, double r, double theta,
                           double t) {
    const SqueezeQR qr = squeeze_qr(spec, kind, r, theta, t);
    return 0.25 * (1.0 + qr.R * qr.R);
}

ObservablePoint observable_point(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                                 double r, double theta, double t) {
    ObservablePoint pt;
    pt.t = TimeCoord{kind, t};
    pt.x_mean = mean_x(spec, kind, x0, p0, t);
    pt.p_mean = mean_p(spec, kind, x0, p0, t);
    const SqueezeQR qr = squeeze_qr(spec, kind, r, theta, t);
    pt.x_var = qr.Q;
    pt.p_var = (1.0 + qr.R * qr.R) / (4.0 * qr.Q);
    pt.product = 0.25 * (1.0 + qr.R * qr.R);
    return pt;
}

std::pair<double, double> classical_rhs(const SystemSpec& spec, SystemKind kind,
                                        const ClassicalState& state) {
    const double w2 = spec.omega * spec.omega;
    switch (kind) {
        case SystemKind::TO: {
            const double tau = tau_of(spec, state.t.t);
            return {state.p, -w2 / (tau * tau) * state.x};
        }
        case SystemKind::TM: {
            const double echi = std::exp(chi_of(spec, state.t.t));
            return {echi * state.p, -w2 / echi * state.x};
        }
        case SystemKind::TQ:
            return {state.p - 0.5 * spec.upsilon * state.x,
                    -w2 * state.x + 0.5 * spec.upsilon * state.p};
    }
    return {0.0, 0.0};
}

double first_mean_x_zero(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                         double t_lo, double t_hi, int scan_steps) {
    auto f = [&](double t) { return mean_x(spec, kind, x0, p0, t); };
    double a = t_lo, fa = f(a);
    const double h = (t_hi - t_lo) / scan_steps;
    for (int i = 1; i <= scan_steps; ++i) {
        const double b = t_lo + i * h;
        const double fb = f(b);
        if (fa == 0.0) return a;
        if (fa * fb < 0.0) {
            double lo = a, hi = b;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
            }
            return 0.5 * (lo + hi);
        }
        a = b;
        fa = fb;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace emosc
