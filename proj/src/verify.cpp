#include "emosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <json.hpp>

#include "detail/numerics.hpp"
#include "emosc/algebra.hpp"
#include "emosc/observables.hpp"
#include "emosc/regime_solutions.hpp"
#include "emosc/timefuncs.hpp"

namespace emosc {

namespace {

using detail::cplx;
constexpr cplx I{0.0, 1.0};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::mt19937_64 rng_for(std::uint64_t seed, const std::string& check, const std::string& cs) {
    return std::mt19937_64(seed ^ fnv1a(check + "|" + cs));
}

std::string case_id(SystemKind kind, const SystemSpec& spec) {
    return std::string(to_string(kind)) + "," + to_string(spec.regime) + "," +
           to_string(spec.sign);
}

// In-domain sampling windows used by the randomized checks.
double random_time(const SystemSpec& spec, SystemKind kind, std::mt19937_64& rng, double lo_tau,
                   double hi_tau, double chi_span) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    if (kind == SystemKind::TO) {
        const double tau = spec.sign == Sign::Pos ? 1.0 + (hi_tau - 1.0) * u01(rng)
                                                  : lo_tau + (1.0 - lo_tau) * u01(rng);
        return (tau - 1.0) / spec.upsilon;
    }
    const double chi = chi_span * (2.0 * u01(rng) - 1.0);
    return chi / spec.upsilon;
}

std::function<WavefunctionSample(double)> state_builder(const SystemSpec& spec, SystemKind kind,
                                                        const StateFamily& family,
                                                        const Grid& grid) {
    return [spec, kind, family, grid](double t) {
        return evaluate_state(spec, StateSpec{kind, family}, t, grid);
    };
}

double sup_norm(const std::vector<cplx>& v, int lo, int hi) {
    double m = 0.0;
    for (int i = lo; i < hi; ++i) m = std::max(m, std::abs(v[static_cast<std::size_t>(i)]));
    return m;
}

} // namespace

OracleReport OracleReport::make(std::string check, std::string cs, double err, double tol) {
    OracleReport r;
    r.check = std::move(check);
    r.case_id = std::move(cs);
    r.max_abs_error = err;
    r.tolerance = tol;
    r.passed = err <= tol;
    return r;
}

std::string OracleReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["case"] = case_id;
    j["max_abs_error"] = max_abs_error;
    j["tolerance"] = tolerance;
    j["passed"] = passed;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = meta;
    return j.dump();
}

Tolerances Tolerances::scaled(double factor) const {
    Tolerances t = *this;
    t.wronskian *= factor;
    t.ode_sup *= factor;
    t.fd_relative *= factor;
    t.schrodinger *= factor;
    t.ladder *= factor;
    t.annihilation *= factor;
    t.moments *= factor;
    t.product_identity *= factor;
    t.eom *= factor;
    t.norm *= factor;
    t.heisenberg_slack *= factor;
    t.exact *= factor;
    return t;
}

Moments quadrature_moments(const WavefunctionSample& sample) {
    const int n = sample.grid.n;
    if (n < 5) throw GridError("quadrature needs at least 5 points");
    const double h = sample.grid.dx;
    const auto& psi = sample.psi;

    double peak = 0.0;
    for (const auto& v : psi) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(psi.front()), std::abs(psi.back()));
    if (edge > 1e-10 * peak)
        throw TailError("wavefunction has not decayed at the grid edge");

    const std::vector<cplx> dpsi = detail::d_dx(psi, h);
    auto abs2 = [&](int i) { return std::norm(psi[static_cast<std::size_t>(i)]); };

    Moments m;
    m.norm = detail::simpson(n, h, abs2);
    const double x_mean =
        detail::simpson(n, h, [&](int i) { return sample.grid.x(i) * abs2(i); }) / m.norm;
    const double x2 = detail::simpson(n, h, [&](int i) {
                          const double x = sample.grid.x(i);
                          return x * x * abs2(i);
                      }) /
                      m.norm;
    const double p_mean =
        detail::simpson(n, h,
                        [&](int i) {
                            const auto k = static_cast<std::size_t>(i);
                            return std::imag(std::conj(psi[k]) * dpsi[k]);
                        }) /
        m.norm;
    const double p2 = detail::simpson(n, h, [&](int i) {
                          return std::norm(dpsi[static_cast<std::size_t>(i)]);
                      }) /
                      m.norm;

    m.x_mean = x_mean;
    m.p_mean = p_mean;
    m.x_var = x2 - x_mean * x_mean;
    m.p_var = p2 - p_mean * p_mean;
    return m;
}

OracleReport schrodinger_residual(const SystemSpec& spec, SystemKind kind,
                                  const StateFamily& family, double t, const Grid& grid,
                                  DConvention conv, const Tolerances& tol) {
    auto build = state_builder(spec, kind, family, grid);
    const WavefunctionSample s0 = build(t);
    const double ht = 1e-6 * std::max(1.0, std::abs(t));
    const WavefunctionSample sp = build(t + ht);
    const WavefunctionSample sm = build(t - ht);

    const int n = grid.n;
    const double w2 = spec.omega * spec.omega;
    const std::vector<cplx> d1 = detail::d_dx(s0.psi, grid.dx);
    const std::vector<cplx> d2 = detail::d2_dx(s0.psi, grid.dx);

    std::vector<cplx> S(s0.psi.size()), H(s0.psi.size());
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double x = grid.x(i);
        const cplx psi = s0.psi[k];
        const cplx psit = (sp.psi[k] - sm.psi[k]) / (2.0 * ht);
        switch (kind) {
            case SystemKind::TO: {
                const double tau = tau_of(spec, t);
                const double g = w2 / (tau * tau);
                S[k] = d2[k] + 2.0 * I * psit - g * x * x * psi;
                H[k] = -0.5 * d2[k] + 0.5 * g * x * x * psi;
                break;
            }
            case SystemKind::TM: {
                const double echi = std::exp(chi_of(spec, t));
                S[k] = echi * d2[k] + 2.0 * I * psit - w2 / echi * x * x * psi;
                H[k] = -0.5 * echi * d2[k] + 0.5 * w2 / echi * x * x * psi;
                break;
            }
            case SystemKind::TQ: {
                const cplx dpart = conv == DConvention::Symmetric
                                       ? -I * (x * d1[k] + 0.5 * psi)
                                       : -I * x * d1[k];
                S[k] = d2[k] + 2.0 * I * psit + spec.upsilon * dpart - w2 * x * x * psi;
                H[k] = -0.5 * d2[k] - 0.5 * spec.upsilon * dpart + 0.5 * w2 * x * x * psi;
                break;
            }
        }
    }

    // interior points only; the one-sided edge stencils sit under the tails
    const double smax = sup_norm(S, 2, n - 2);
    const double hmax = sup_norm(H, 2, n - 2);
    OracleReport r = OracleReport::make("schrodinger_residual", case_id(kind, spec),
                                        smax / hmax, tol.schrodinger);
    r.metadata.emplace_back("grid_points", std::to_string(n));
    r.metadata.emplace_back("h_t", std::to_string(ht));
    return r;
}

OracleReport wronskian_check(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                             int samples, const Tolerances& tol) {
    auto rng = rng_for(seed, "wronskian", case_id(kind, spec));
    const NormalizedPair pair =
        kind == SystemKind::TO ? normalize_pair(spec) : NormalizedPair{};

    double err = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = random_time(spec, kind, rng, 0.02, 20.0, 3.0);
        const TimeFunctions tf = eval_timefuncs(spec, kind, t);
        const LadderPair lp = ladder_pair(tf, kind);
        const cplx w = lp.A * std::conj(lp.B) - lp.B * std::conj(lp.A);
        err = std::max(err, std::abs(w + I));
        if (kind == SystemKind::TO) {
            const double wg = pair.gamma1(t) * pair.dgamma2(t) - pair.dgamma1(t) * pair.gamma2(t);
            err = std::max(err, std::abs(wg - 1.0));
        }
    }
    OracleReport r =
        OracleReport::make("wronskian", case_id(kind, spec), err, tol.wronskian);
    r.metadata.emplace_back("samples", std::to_string(samples));
    return r;
}

OracleReport ode_residual_check(const SystemSpec& spec, const Tolerances& tol) {
    const XiSolution xi = xi_closed_form(spec);
    // max |xi'' + g xi| over the window, relative to max |xi''| there
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double tau = spec.sign == Sign::Pos ? 1.0 + 10.0 * i / 49.0
                                                  : 0.05 + 0.95 * i / 49.0;
        const double t = (tau - 1.0) / spec.upsilon;
        // tau is the local length scale of the Euler solutions, so an h
        // proportional to tau keeps truncation and roundoff bounded together
        const double h = 1e-4 * tau / spec.abs_upsilon();
        const cplx dd = (xi.xi(t + h) - 2.0 * xi.xi(t) + xi.xi(t - h)) / (h * h);
        const double g = spec.omega * spec.omega / (tau * tau);
        worst = std::max(worst, std::abs(dd + g * xi.xi(t)));
        scale = std::max(scale, g * std::abs(xi.xi(t)));
    }
    return OracleReport::make("ode_fd_residual", case_id(SystemKind::TO, spec), worst / scale,
                              tol.fd_relative);
}

OracleReport ode_rk4_check(const SystemSpec& spec, const Tolerances& tol) {
    const XiSolution sol = xi_closed_form(spec);
    const double t_end = spec.sign == Sign::Pos ? 3.0 / spec.upsilon
                                                : (1.0 - 0.05) / spec.upsilon; // tau: 1 -> 0.05
    const int steps = 40000;
    const double h = t_end / steps;

    auto accel = [&](double t, cplx y) {
        const double tau = 1.0 + spec.upsilon * t;
        return -spec.omega * spec.omega / (tau * tau) * y;
    };

    cplx y = sol.xi(0.0), v = sol.xi_dot(0.0);
    double t = 0.0, err = 0.0;
    for (int i = 0; i < steps; ++i) {
        const cplx k1y = v, k1v = accel(t, y);
        const cplx k2y = v + 0.5 * h * k1v, k2v = accel(t + 0.5 * h, y + 0.5 * h * k1y);
        const cplx k3y = v + 0.5 * h * k2v, k3v = accel(t + 0.5 * h, y + 0.5 * h * k2y);
        const cplx k4y = v + h * k3v, k4v = accel(t + h, y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        t = (i + 1) * h;
        if ((i + 1) % (steps / 50) == 0) err = std::max(err, std::abs(y - sol.xi(t)));
    }
    OracleReport r =
        OracleReport::make("ode_rk4", case_id(SystemKind::TO, spec), err, tol.ode_sup);
    r.metadata.emplace_back("steps", std::to_string(steps));
    r.metadata.emplace_back("t_end", std::to_string(t_end));
    return r;
}

OracleReport ode_check(const SystemSpec& spec, std::uint64_t seed, const Tolerances& tol) {
    const OracleReport w = wronskian_check(spec, SystemKind::TO, seed, 100, tol);
    const OracleReport f = ode_residual_check(spec, tol);
    const OracleReport r = ode_rk4_check(spec, tol);
    OracleReport agg = OracleReport::make("ode_check", case_id(SystemKind::TO, spec),
                                          std::max({w.max_abs_error / w.tolerance,
                                                    f.max_abs_error / f.tolerance,
                                                    r.max_abs_error / r.tolerance}),
                                          1.0);
    agg.metadata.emplace_back("wronskian", std::to_string(w.max_abs_error));
    agg.metadata.emplace_back("fd_residual", std::to_string(f.max_abs_error));
    agg.metadata.emplace_back("rk4_sup", std::to_string(r.max_abs_error));
    return agg;
}

OracleReport eom_check(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                       std::uint64_t seed, const Tolerances& tol) {
    auto rng = rng_for(seed, "eom", case_id(kind, spec));
    const double h = 1e-5;
    double err = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = random_time(spec, kind, rng, 0.15, 6.0, 2.0);
        const double dx_fd =
            (mean_x(spec, kind, x0, p0, t + h) - mean_x(spec, kind, x0, p0, t - h)) / (2.0 * h);
        const double dp_fd =
            (mean_p(spec, kind, x0, p0, t + h) - mean_p(spec, kind, x0, p0, t - h)) / (2.0 * h);
        ClassicalState st{mean_x(spec, kind, x0, p0, t), mean_p(spec, kind, x0, p0, t),
                          TimeCoord{kind, t}};
        const auto [dx, dp] = classical_rhs(spec, kind, st);
        err = std::max(err, std::abs(dx_fd - dx) / std::max(1.0, std::abs(dx)));
        err = std::max(err, std::abs(dp_fd - dp) / std::max(1.0, std::abs(dp)));
    }
    return OracleReport::make("eom", case_id(kind, spec), err, tol.eom);
}

namespace {

// ---- suite pieces used by run_verification ----------------------------------

SystemSpec case_spec(Regime regime, Sign sign) {
    const double mag = regime == Regime::Over ? 5.0 : regime == Regime::Critical ? 4.0 : 3.0;
    return SystemSpec::make(sign == Sign::Pos ? mag : -mag, 2.0);
}

double representative_time(const SystemSpec& spec, SystemKind kind) {
    if (kind == SystemKind::TO)
        return spec.sign == Sign::Pos ? 1.0 / spec.upsilon        // tau = 2
                                      : -0.5 / spec.upsilon;      // tau = 0.5
    return 0.8 / spec.upsilon; // chi = 0.8
}

OracleReport timefuncs_identities(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                                  const Tolerances& tol) {
    auto rng = rng_for(seed, "timefuncs_identities", case_id(kind, spec));
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t = random_time(spec, kind, rng, 0.05, 12.0, 2.5);
        const TimeFunctions f = eval_timefuncs(spec, kind, t);
        err = std::max(err, std::abs(f.phi1 - f.xi * f.xi) / std::abs(f.phi1));
        err = std::max(err, std::abs(f.phi3 - 2.0 * std::norm(f.xi)) / f.phi3);
        err = std::max(err, std::abs(f.phi2 - std::conj(f.phi1)));
        err = std::max(err, std::abs(f.phi1_dot - 2.0 * f.xi * f.xi_dot) /
                                std::max(1.0, std::abs(f.phi1_dot)));
        if (f.phi3 <= 0.0) err = std::max(err, 1.0);
        if (kind == SystemKind::TQ) {
            err = std::max(err, std::abs(f.C3_T - 2.0 * std::norm(f.Xi_P)));
            const double b = 2.0 * std::real(f.Xi_P * std::conj(f.Xi_X));
            err = std::max(err,
                           std::abs(f.C3_D - (b - spec.upsilon * std::norm(f.Xi_P))));
            err = std::max(err, std::abs(f.C3_X2 - (spec.omega * spec.omega * std::norm(f.Xi_P) -
                                                    std::norm(f.Xi_X))));
        }
    }
    return OracleReport::make("timefuncs_identities", case_id(kind, spec), err, tol.exact);
}

OracleReport timefuncs_fd(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                          const Tolerances& tol) {
    auto rng = rng_for(seed, "timefuncs_fd", case_id(kind, spec));
    double err = 0.0;
    auto rel = [](cplx fd, cplx closed) {
        return std::abs(fd - closed) / std::max(1.0, std::abs(closed));
    };
    for (int i = 0; i < 20; ++i) {
        const double t = random_time(spec, kind, rng, 0.1, 8.0, 2.0);
        const double h = std::max(1e-5, 1e-5 * std::abs(t));
        const TimeFunctions f = eval_timefuncs(spec, kind, t);
        const TimeFunctions fp = eval_timefuncs(spec, kind, t + h);
        const TimeFunctions fm = eval_timefuncs(spec, kind, t - h);
        // dotted entries carry d/dt'; in TM time that contributes e^chi
        const double jac = kind == SystemKind::TO ? 1.0 : std::exp(f.u);
        err = std::max(err, rel((fp.xi - fm.xi) / (2.0 * h), f.xi_dot * jac));
        err = std::max(err, rel((fp.phi1 - fm.phi1) / (2.0 * h), f.phi1_dot * jac));
        err = std::max(err, rel((fp.phi3 - fm.phi3) / (2.0 * h), f.phi3_dot * jac));
        err = std::max(err, rel((fp.phi3_dot - fm.phi3_dot) / (2.0 * h), f.phi3_ddot * jac));
        if (kind == SystemKind::TQ) {
            // TQ pair evolves by Xi_P' = Xi_X - (U/2) Xi_P, Xi_X' = -w^2 Xi_P + (U/2) Xi_X
            err = std::max(err, rel((fp.Xi_P - fm.Xi_P) / (2.0 * h),
                                    f.Xi_X - 0.5 * spec.upsilon * f.Xi_P));
            err = std::max(err, rel((fp.Xi_X - fm.Xi_X) / (2.0 * h),
                                    -spec.omega * spec.omega * f.Xi_P +
                                        0.5 * spec.upsilon * f.Xi_X));
        }
    }
    return OracleReport::make("timefuncs_fd", case_id(kind, spec), err, tol.fd_relative);
}

OracleReport composition_check(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                               const Tolerances& tol) {
    auto rng = rng_for(seed, "composition", case_id(kind, spec));
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t = random_time(spec, kind, rng, 0.05, 10.0, 2.5);
        const TimeFunctions f = eval_timefuncs(spec, kind, t);
        if (kind == SystemKind::TM) {
            const TimeFunctions g = eval_timefuncs(spec, SystemKind::TO, tm_to_to_time(spec, t));
            err = std::max(err, std::abs(f.xi - g.xi) / std::abs(g.xi));
            err = std::max(err, std::abs(f.xi_dot - g.xi_dot) / std::abs(g.xi_dot));
            err = std::max(err, std::abs(f.phi1 - g.phi1) / std::abs(g.phi1));
            err = std::max(err, std::abs(f.phi3 - g.phi3) / g.phi3);
            err = std::max(err, std::abs(f.phi3_dot - g.phi3_dot) /
                                    std::max(1.0, std::abs(g.phi3_dot)));
        } else if (kind == SystemKind::TQ) {
            const double em = std::exp(-0.5 * f.u);
            err = std::max(err, std::abs(f.Xi_P - f.xi * em) / std::abs(f.Xi_P));
            err = std::max(err, std::abs(f.Xi_X - f.xi_dot / em) / std::abs(f.Xi_X));
        }
    }
    return OracleReport::make("composition", case_id(kind, spec), err, tol.exact);
}

std::vector<StateFamily> suite_families() {
    return {NumberFamily{0}, NumberFamily{1}, NumberFamily{2}, CoherentFamily{1.0, 1.0},
            SqueezedFamily{1.0, 1.0, 0.5, 0.7}};
}

OracleReport state_norm_check(const SystemSpec& spec, SystemKind kind, const Tolerances& tol) {
    const double t = representative_time(spec, kind);
    double err = 0.0;
    for (const StateFamily& fam : suite_families()) {
        const StateSpec st{kind, fam};
        const Grid grid = default_grid(spec, st, t, 4001);
        const Moments m = quadrature_moments(evaluate_state(spec, st, t, grid));
        err = std::max(err, std::abs(m.norm - 1.0));
    }
    return OracleReport::make("state_norm", case_id(kind, spec), err, tol.norm);
}

OracleReport residual_suite(const SystemSpec& spec, SystemKind kind, const Tolerances& tol) {
    const double t = representative_time(spec, kind);
    double err = 0.0;
    for (const StateFamily& fam : suite_families()) {
        const StateSpec st{kind, fam};
        const Grid grid = default_grid(spec, st, t, 2001);
        err = std::max(err,
                       schrodinger_residual(spec, kind, fam, t, grid, DConvention::Symmetric, tol)
                           .max_abs_error);
    }
    OracleReport r =
        OracleReport::make("schrodinger_residual", case_id(kind, spec), err, tol.schrodinger);
    r.metadata.emplace_back("families", "n0,n1,n2,coherent,squeezed");
    return r;
}

struct LadderErrors {
    double lowering = 0.0, raising = 0.0, annihilation = 0.0, number = 0.0;
};

LadderErrors ladder_errors(const SystemSpec& spec, SystemKind kind) {
    const double t = representative_time(spec, kind);
    // +-8 sigma of the widest state involved, dense enough that the P stencil
    // error stays well below the 1e-5 ladder tolerance.
    const TimeFunctions tf = eval_timefuncs(spec, kind, t);
    const double sigma4 = std::sqrt(9.0 * std::norm(ladder_pair(tf, kind).A));
    const Grid grid = Grid::linspace(-8.0 * sigma4, 8.0 * sigma4, 4001);

    const double ht = 1e-6 * std::max(1.0, std::abs(t));
    std::vector<WavefunctionSample> psi, dpsi;
    for (int n = 0; n <= 4; ++n) {
        psi.push_back(number_state(spec, kind, n, t, grid));
        WavefunctionSample d = psi.back();
        const WavefunctionSample p = number_state(spec, kind, n, t + ht, grid);
        const WavefunctionSample m = number_state(spec, kind, n, t - ht, grid);
        for (std::size_t k = 0; k < d.psi.size(); ++k)
            d.psi[k] = (p.psi[k] - m.psi[k]) / (2.0 * ht);
        dpsi.push_back(std::move(d));
    }

    auto l2 = [&](const WavefunctionSample& a, const WavefunctionSample& b, double scale) {
        const double v = detail::simpson(grid.n, grid.dx, [&](int i) {
            const auto k = static_cast<std::size_t>(i);
            return std::norm(a.psi[k] - scale * b.psi[k]);
        });
        return std::sqrt(v);
    };

    const GeneratorCoeffs jm = generator(spec, kind, GeneratorName::Jminus, t);
    const GeneratorCoeffs jp = generator(spec, kind, GeneratorName::Jplus, t);
    const GeneratorCoeffs mm = generator(spec, kind, GeneratorName::M, t);

    LadderErrors e;
    e.annihilation = l2(apply_generator(jm, psi[0], dpsi[0]), psi[0], 0.0);
    for (int n = 1; n <= 3; ++n)
        e.lowering = std::max(
            e.lowering, l2(apply_generator(jm, psi[static_cast<std::size_t>(n)],
                                           dpsi[static_cast<std::size_t>(n)]),
                           psi[static_cast<std::size_t>(n - 1)], std::sqrt(double(n))));
    for (int n = 0; n <= 2; ++n)
        e.raising = std::max(
            e.raising, l2(apply_generator(jp, psi[static_cast<std::size_t>(n)],
                                          dpsi[static_cast<std::size_t>(n)]),
                          psi[static_cast<std::size_t>(n + 1)], std::sqrt(double(n + 1))));
    for (int n = 0; n <= 2; ++n)
        e.number = std::max(e.number, l2(apply_generator(mm, psi[static_cast<std::size_t>(n)],
                                                         dpsi[static_cast<std::size_t>(n)]),
                                         psi[static_cast<std::size_t>(n)], n + 0.5));
    return e;
}

OracleReport ladder_check(const SystemSpec& spec, SystemKind kind, const Tolerances& tol) {
    const LadderErrors e = ladder_errors(spec, kind);
    const double err = std::max({e.lowering, e.raising, e.number});
    OracleReport r = OracleReport::make("ladder", case_id(kind, spec), err, tol.ladder);
    r.metadata.emplace_back("lowering", std::to_string(e.lowering));
    r.metadata.emplace_back("raising", std::to_string(e.raising));
    r.metadata.emplace_back("number_op", std::to_string(e.number));
    return r;
}

OracleReport annihilation_check(const SystemSpec& spec, SystemKind kind, const Tolerances& tol) {
    const LadderErrors e = ladder_errors(spec, kind);
    return OracleReport::make("annihilation", case_id(kind, spec), e.annihilation,
                              tol.annihilation);
}

OracleReport moments_check(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                           const Tolerances& tol) {
    auto rng = rng_for(seed, "moments", case_id(kind, spec));
    double err = 0.0;
    const std::vector<StateFamily> fams{CoherentFamily{1.0, 1.0},
                                        SqueezedFamily{1.0, 1.0, 0.5, 0.7}};
    for (const StateFamily& fam : fams) {
        double r = 0.0, theta = 0.0;
        if (const auto* sq = std::get_if<SqueezedFamily>(&fam)) {
            r = sq->r;
            theta = sq->theta;
        }
        for (int i = 0; i < 10; ++i) {
            const double t = random_time(spec, kind, rng, 0.25, 4.0, 1.2);
            const StateSpec st{kind, fam};
            const Grid grid = default_grid(spec, st, t, 8001);
            const Moments m = quadrature_moments(evaluate_state(spec, st, t, grid));
            err = std::max(err, std::abs(m.x_mean - mean_x(spec, kind, 1.0, 1.0, t)));
            err = std::max(err, std::abs(m.p_mean - mean_p(spec, kind, 1.0, 1.0, t)));
            err = std::max(err, std::abs(m.x_var - var_x(spec, kind, r, theta, t)));
            err = std::max(err, std::abs(m.p_var - var_p(spec, kind, r, theta, t)));
        }
    }
    return OracleReport::make("moments", case_id(kind, spec), err, tol.moments);
}

OracleReport product_identity_check(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                                    const Tolerances& tol) {
    auto rng = rng_for(seed, "product_identity", case_id(kind, spec));
    std::uniform_real_distribution<double> ur(0.0, 2.0), uth(-3.0, 3.0);
    double err = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t = random_time(spec, kind, rng, 0.1, 10.0, 2.0);
        const double r = ur(rng), theta = uth(rng);
        const double prod = uncertainty_product(spec, kind, r, theta, t);
        err = std::max(err, std::abs(prod - var_x(spec, kind, r, theta, t) *
                                                var_p(spec, kind, r, theta, t)));
    }
    return OracleReport::make("product_identity", case_id(kind, spec), err,
                              tol.product_identity);
}

OracleReport heisenberg_check(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                              const Tolerances& tol) {
    auto rng = rng_for(seed, "heisenberg", case_id(kind, spec));
    std::uniform_real_distribution<double> ur(0.0, 2.0), uth(-3.0, 3.0);
    double shortfall = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double t = random_time(spec, kind, rng, 0.05, 15.0, 2.5);
        const double prod = uncertainty_product(spec, kind, ur(rng), uth(rng), t);
        shortfall = std::max(shortfall, 0.25 - prod);
    }
    return OracleReport::make("heisenberg", case_id(kind, spec), shortfall,
                              tol.heisenberg_slack);
}

// Negative controls: a deliberately broken input must be flagged. The report's
// max_abs_error is the shortfall below the required detection threshold, so
// passed means "the oracle caught it".
OracleReport control_report(const std::string& name, double measured, double required) {
    OracleReport r = OracleReport::make(name, "control", std::max(0.0, required - measured), 0.0);
    r.metadata.emplace_back("measured", std::to_string(measured));
    r.metadata.emplace_back("required_min", std::to_string(required));
    return r;
}

std::vector<OracleReport> negative_controls(const Tolerances& tol) {
    std::vector<OracleReport> out;
    const SystemSpec good = SystemSpec::make(3.0, 2.0);

    // wrong-width state: solves the omega' = 2.7 equation, tested against omega = 2
    {
        const SystemSpec wrong = SystemSpec::make(3.0, 2.7);
        const double t = 0.2;
        const StateSpec st{SystemKind::TO, CoherentFamily{1.0, 1.0}};
        const Grid grid = default_grid(wrong, st, t, 2001);
        auto build = state_builder(wrong, SystemKind::TO, st.family, grid);
        const double ht = 1e-6;
        const WavefunctionSample s0 = build(t), sp = build(t + ht), sm = build(t - ht);
        const std::vector<cplx> d2 = detail::d2_dx(s0.psi, grid.dx);
        const double tau = tau_of(good, t);
        const double g = good.omega * good.omega / (tau * tau);
        double smax = 0.0, hmax = 0.0;
        for (int i = 2; i < grid.n - 2; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const double x = grid.x(i);
            const cplx psit = (sp.psi[k] - sm.psi[k]) / (2.0 * ht);
            smax = std::max(smax,
                            std::abs(d2[k] + 2.0 * I * psit - g * x * x * s0.psi[k]));
            hmax = std::max(hmax, std::abs(-0.5 * d2[k] + 0.5 * g * x * x * s0.psi[k]));
        }
        out.push_back(control_report("negative_control_schrodinger", smax / hmax, 1e-1));
    }

    // scaled gamma2 must break the Wronskian normalization
    {
        const NormalizedPair p = normalize_pair(good);
        const double t = 0.1;
        const double w =
            p.gamma1(t) * (1.01 * p.dgamma2(t)) - p.dgamma1(t) * (1.01 * p.gamma2(t));
        out.push_back(control_report("negative_control_wronskian", std::abs(w - 1.0), 1e-4));
    }

    // perturbed initial slope must drift away from the closed form
    {
        const XiSolution sol = xi_closed_form(good);
        cplx y = sol.xi(0.0), v = sol.xi_dot(0.0) * 1.001;
        const int steps = 4000;
        const double h = (1.0 / good.upsilon) / steps;
        auto accel = [&](double tt, cplx yy) {
            const double tau = 1.0 + good.upsilon * tt;
            return -good.omega * good.omega / (tau * tau) * yy;
        };
        for (int i = 0; i < steps; ++i) {
            const double tt = i * h;
            const cplx k1y = v, k1v = accel(tt, y);
            const cplx k2y = v + 0.5 * h * k1v, k2v = accel(tt + 0.5 * h, y + 0.5 * h * k1y);
            const cplx k3y = v + 0.5 * h * k2v, k3v = accel(tt + 0.5 * h, y + 0.5 * h * k2y);
            const cplx k4y = v + h * k3v, k4v = accel(tt + h, y + h * k3y);
            y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
            v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
        out.push_back(control_report("negative_control_ode",
                                     std::abs(y - sol.xi(1.0 / good.upsilon)), 1e-5));
    }

    // sign-flipped momentum equation must violate the EOM match
    {
        double err = 0.0;
        const double h = 1e-5;
        for (double t : {0.1, 0.3, 0.5}) {
            const double dp_fd = (mean_p(good, SystemKind::TM, 1.0, 1.0, t + h) -
                                  mean_p(good, SystemKind::TM, 1.0, 1.0, t - h)) /
                                 (2.0 * h);
            ClassicalState st{mean_x(good, SystemKind::TM, 1.0, 1.0, t),
                              mean_p(good, SystemKind::TM, 1.0, 1.0, t),
                              TimeCoord{SystemKind::TM, t}};
            const auto [dx, dp] = classical_rhs(good, SystemKind::TM, st);
            (void)dx;
            err = std::max(err, std::abs(dp_fd - (-dp)) / std::max(1.0, std::abs(dp)));
        }
        out.push_back(control_report("negative_control_eom", err, 1e-2));
    }

    // de-normalized wavefunction must be reported off 1
    {
        const double t = 0.2;
        const StateSpec st{SystemKind::TM, CoherentFamily{1.0, 1.0}};
        const Grid grid = default_grid(good, st, t, 2001);
        WavefunctionSample s = evaluate_state(good, st, t, grid);
        for (auto& v : s.psi) v *= 1.001;
        const Moments m = quadrature_moments(s);
        out.push_back(
            control_report("negative_control_quadrature", std::abs(m.norm - 1.0), 1e-4));
    }

    (void)tol;
    return out;
}

OracleReport d_convention_check(const Tolerances& tol) {
    const SystemSpec spec = SystemSpec::make(3.0, 2.0);
    const double t = 0.25;
    const StateSpec st{SystemKind::TQ, NumberFamily{0}};
    const Grid grid = default_grid(spec, st, t, 2001);
    const double sym = schrodinger_residual(spec, SystemKind::TQ, st.family, t, grid,
                                            DConvention::Symmetric, tol)
                           .max_abs_error;
    const double plain = schrodinger_residual(spec, SystemKind::TQ, st.family, t, grid,
                                              DConvention::PlainScale, tol)
                             .max_abs_error;
    if (sym > tol.schrodinger && plain > tol.schrodinger)
        throw ConventionError("no dilation-operator convention satisfies the TQ equation");
    OracleReport r = OracleReport::make("d_convention", "global", sym, tol.schrodinger);
    r.metadata.emplace_back("symmetric_residual", std::to_string(sym));
    r.metadata.emplace_back("plain_scale_residual", std::to_string(plain));
    r.metadata.emplace_back("selected", "D = -i(x d/dx + 1/2)");
    return r;
}

} // namespace

std::vector<OracleReport> run_verification(const VerifyOptions& options) {
    const Tolerances tol = Tolerances{}.scaled(options.tolerance_scale);
    const std::uint64_t seed = options.seed;

    auto selected = [&](const std::string& cs) {
        if (options.cases.empty()) return true;
        return std::find(options.cases.begin(), options.cases.end(), cs) !=
               options.cases.end();
    };

    std::vector<OracleReport> reports;
    auto keep = [&](OracleReport r) {
        r.metadata.emplace_back("seed", std::to_string(seed));
        reports.push_back(std::move(r));
    };

    for (SystemKind kind : {SystemKind::TO, SystemKind::TM, SystemKind::TQ}) {
        for (Regime regime : {Regime::Over, Regime::Critical, Regime::Under}) {
            for (Sign sign : {Sign::Pos, Sign::Neg}) {
                const SystemSpec spec = case_spec(regime, sign);
                const std::string cs = case_id(kind, spec);
                if (!selected(cs)) continue;

                keep(timefuncs_identities(spec, kind, seed, tol));
                keep(timefuncs_fd(spec, kind, seed, tol));
                keep(wronskian_check(spec, kind, seed, 100, tol));
                if (kind != SystemKind::TO) keep(composition_check(spec, kind, seed, tol));
                if (kind == SystemKind::TO) {
                    keep(ode_residual_check(spec, tol));
                    keep(ode_rk4_check(spec, tol));
                }
                keep(state_norm_check(spec, kind, tol));
                keep(residual_suite(spec, kind, tol));
                keep(ladder_check(spec, kind, tol));
                keep(annihilation_check(spec, kind, tol));
                keep(moments_check(spec, kind, seed, tol));
                keep(product_identity_check(spec, kind, seed, tol));
                keep(heisenberg_check(spec, kind, seed, tol));
                keep(eom_check(spec, kind, 1.0, 1.0, seed, tol));
            }
        }
    }

    if (options.cases.empty()) {
        keep(d_convention_check(tol));
        for (OracleReport& r : negative_controls(tol)) keep(std::move(r));
    }

    std::sort(reports.begin(), reports.end(), [](const OracleReport& a, const OracleReport& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.case_id < b.case_id;
    });
    return reports;
}

} // namespace emosc
