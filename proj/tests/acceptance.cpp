// Acceptance suite: nine numbered criteria, one PASS/FAIL line each.
// Usage: acceptance [N]   (run criterion N only; default: all)
// Exit code: number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emosc/algebra.hpp"
#include "emosc/observables.hpp"
#include "emosc/regime_solutions.hpp"
#include "emosc/states.hpp"
#include "emosc/timefuncs.hpp"
#include "emosc/verify.hpp"

using namespace emosc;
using std::complex;

namespace {

constexpr std::uint64_t kSeed = 12345;
const std::vector<double> kUpsilons{5.0, -5.0, 4.0, -4.0, 3.0, -3.0};
const std::vector<SystemKind> kKinds{SystemKind::TO, SystemKind::TM, SystemKind::TQ};

struct Criterion {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "  [x] " << what << "\n";
        }
    }
    void note(const std::string& what) { detail << "  [.] " << what << "\n"; }
};

double random_in_domain(const SystemSpec& spec, SystemKind kind, std::mt19937_64& rng,
                        double chi_span = 1.2) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    if (kind == SystemKind::TO) {
        const double tau =
            spec.sign == Sign::Pos ? 1.0 + 9.0 * u01(rng) : 0.05 + 0.95 * u01(rng);
        return (tau - 1.0) / spec.upsilon;
    }
    return chi_span * (2.0 * u01(rng) - 1.0) / spec.upsilon;
}

// -- criterion 1: Wronskian suite ---------------------------------------------

Criterion criterion_wronskian() {
    Criterion c;
    std::mt19937_64 rng(kSeed);
    double worst_xi = 0.0, worst_gamma = 0.0;
    for (double ups : kUpsilons) {
        const SystemSpec spec = SystemSpec::make(ups, 2.0);
        const XiSolution xi = xi_closed_form(spec);
        const NormalizedPair pair = normalize_pair(spec);
        for (int i = 0; i < 100; ++i) {
            const double t = random_in_domain(spec, SystemKind::TO, rng);
            const complex<double> w =
                xi.xi(t) * std::conj(xi.xi_dot(t)) - xi.xi_dot(t) * std::conj(xi.xi(t));
            worst_xi = std::max(worst_xi, std::abs(w + complex<double>(0.0, 1.0)));
            const double wg =
                pair.gamma1(t) * pair.dgamma2(t) - pair.dgamma1(t) * pair.gamma2(t);
            worst_gamma = std::max(worst_gamma, std::abs(wg - 1.0));
        }
    }
    c.require(worst_xi <= 1e-10, "max |W(xi, conj xi) + i| <= 1e-10");
    c.require(worst_gamma <= 1e-10, "max |W(gamma1, gamma2) - 1| <= 1e-10");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max |W_xi + i| = %.2e, max |W_gamma - 1| = %.2e",
                  worst_xi, worst_gamma);
    c.note(buf);
    return c;
}

// -- criterion 2: RK4 oracle for the auxiliary equation ------------------------

Criterion criterion_ode() {
    Criterion c;
    double worst = 0.0;
    for (double ups : kUpsilons) {
        const OracleReport r = ode_rk4_check(SystemSpec::make(ups, 2.0));
        worst = std::max(worst, r.max_abs_error);
        c.require(r.max_abs_error <= 1e-8,
                  std::string("RK4 sup-norm <= 1e-8 for ") + r.case_id);
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst sup-norm deviation = %.2e", worst);
    c.note(buf);
    return c;
}

// -- criterion 3: Schrodinger residuals ----------------------------------------

Criterion criterion_residuals() {
    Criterion c;
    const SystemSpec spec = SystemSpec::make(3.0, 2.0); // the anchor (under, +) cases
    double worst = 0.0;
    for (SystemKind kind : kKinds) {
        const double t = kind == SystemKind::TO ? 0.3 : 0.25;
        for (StateFamily fam :
             {StateFamily(NumberFamily{0}), StateFamily(NumberFamily{1}),
              StateFamily(NumberFamily{2}), StateFamily(CoherentFamily{1.0, 1.0}),
              StateFamily(SqueezedFamily{1.0, 1.0, 0.5, 0.7})}) {
            const Grid grid = default_grid(spec, StateSpec{kind, fam}, t, 2001);
            const OracleReport r = schrodinger_residual(spec, kind, fam, t, grid);
            worst = std::max(worst, r.max_abs_error);
            c.require(r.max_abs_error <= 1e-4,
                      std::string("relative residual <= 1e-4 for ") + to_string(kind));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst relative residual = %.2e (2001-point grids)",
                  worst);
    c.note(buf);

    // negative control: state of the omega' = 2.7 system against the omega = 2 operator
    const SystemSpec wrong = SystemSpec::make(3.0, 2.7);
    const double t = 0.2;
    const StateSpec st{SystemKind::TO, NumberFamily{0}};
    const Grid grid = default_grid(wrong, st, t, 2001);
    const WavefunctionSample s0 = evaluate_state(wrong, st, t, grid);
    const double ht = 1e-6;
    const WavefunctionSample sp = evaluate_state(wrong, st, t + ht, grid);
    const WavefunctionSample sm = evaluate_state(wrong, st, t - ht, grid);
    const double tau = 1.0 + 3.0 * t;
    const double g = 4.0 / (tau * tau);
    double smax = 0.0, hmax = 0.0;
    for (int i = 2; i < grid.n - 2; ++i) {
        const auto k = std::size_t(i);
        const double x = grid.x(i);
        const double h2 = grid.dx * grid.dx;
        const complex<double> dd = (-s0.psi[k + 2] + 16.0 * s0.psi[k + 1] - 30.0 * s0.psi[k] +
                                    16.0 * s0.psi[k - 1] - s0.psi[k - 2]) /
                                   (12.0 * h2);
        const complex<double> psit = (sp.psi[k] - sm.psi[k]) / (2.0 * ht);
        smax = std::max(
            smax, std::abs(dd + complex<double>(0.0, 2.0) * psit - g * x * x * s0.psi[k]));
        hmax = std::max(hmax, std::abs(-0.5 * dd + 0.5 * g * x * x * s0.psi[k]));
    }
    c.require(smax / hmax >= 1e-1, "wrong-width negative control exceeds 1e-1");
    return c;
}

// -- criterion 4: ladder suite --------------------------------------------------

Criterion criterion_ladder() {
    Criterion c;
    // the six cases whose generators are written out in closed form
    const std::vector<std::pair<double, SystemKind>> cases{
        {3.0, SystemKind::TO},  {3.0, SystemKind::TM}, {-3.0, SystemKind::TM},
        {4.0, SystemKind::TM},  {5.0, SystemKind::TM}, {3.0, SystemKind::TQ}};
    double worst = 0.0;
    for (const auto& [ups, kind] : cases) {
        const SystemSpec spec = SystemSpec::make(ups, 2.0);
        const double t = kind == SystemKind::TO ? 0.4 : 0.8 / ups;
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
            for (std::size_t j = 0; j < d.psi.size(); ++j)
                d.psi[j] = (p.psi[j] - m.psi[j]) / (2.0 * ht);
            dpsi.push_back(std::move(d));
        }
        auto l2 = [&](const WavefunctionSample& a, const WavefunctionSample& b, double sc) {
            double acc = 0.0;
            for (int i = 0; i + 2 < grid.n; i += 2) {
                auto val = [&](int j) {
                    return std::norm(a.psi[std::size_t(j)] - sc * b.psi[std::size_t(j)]);
                };
                acc += val(i) + 4.0 * val(i + 1) + val(i + 2);
            }
            return std::sqrt(acc * grid.dx / 3.0);
        };
        const GeneratorCoeffs jm = generator(spec, kind, GeneratorName::Jminus, t);
        const GeneratorCoeffs jp = generator(spec, kind, GeneratorName::Jplus, t);
        const std::string tag =
            std::string(to_string(kind)) + "," + to_string(spec.regime) + "," +
            to_string(spec.sign);
        for (int n = 1; n <= 3; ++n) {
            const double e = l2(apply_generator(jm, psi[std::size_t(n)], dpsi[std::size_t(n)]),
                                psi[std::size_t(n - 1)], std::sqrt(double(n)));
            worst = std::max(worst, e);
            c.require(e <= 1e-5, "||J- psi_n - sqrt(n) psi_{n-1}|| <= 1e-5 for " + tag);
        }
        for (int n = 0; n <= 2; ++n) {
            const double e = l2(apply_generator(jp, psi[std::size_t(n)], dpsi[std::size_t(n)]),
                                psi[std::size_t(n + 1)], std::sqrt(double(n + 1)));
            worst = std::max(worst, e);
            c.require(e <= 1e-5, "||J+ psi_n - sqrt(n+1) psi_{n+1}|| <= 1e-5 for " + tag);
        }
        c.require(l2(apply_generator(jm, psi[0], dpsi[0]), psi[0], 0.0) <= 1e-6,
                  "||J- psi_0|| <= 1e-6 for " + tag);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst ladder L2 error = %.2e", worst);
    c.note(buf);
    return c;
}

// -- criterion 5: moment equivalence --------------------------------------------

Criterion criterion_moments() {
    Criterion c;
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> ur(0.0, 1.5), uth(-3.0, 3.0);
    double worst_m = 0.0, worst_p = 0.0;
    for (double ups : kUpsilons) {
        const SystemSpec spec = SystemSpec::make(ups, 2.0);
        for (SystemKind kind : kKinds) {
            for (const bool squeezed : {false, true}) {
                const double r = squeezed ? 0.5 : 0.0;
                const double theta = squeezed ? 0.7 : 0.0;
                const StateFamily fam = squeezed
                                            ? StateFamily(SqueezedFamily{1.0, 1.0, r, theta})
                                            : StateFamily(CoherentFamily{1.0, 1.0});
                for (int i = 0; i < 10; ++i) {
                    double t = random_in_domain(spec, kind, rng);
                    if (kind == SystemKind::TO && spec.sign == Sign::Pos)
                        t = std::min(t, 3.0 / spec.upsilon);
                    const Grid grid = default_grid(spec, StateSpec{kind, fam}, t, 8001);
                    const Moments m = quadrature_moments(evaluate_state(
                        spec, StateSpec{kind, fam}, t, grid));
                    const double errs[4] = {
                        std::abs(m.x_mean - mean_x(spec, kind, 1.0, 1.0, t)),
                        std::abs(m.p_mean - mean_p(spec, kind, 1.0, 1.0, t)),
                        std::abs(m.x_var - var_x(spec, kind, r, theta, t)),
                        std::abs(m.p_var - var_p(spec, kind, r, theta, t))};
                    for (double e : errs) worst_m = std::max(worst_m, e);
                }
            }
            // product identity at seeded draws
            for (int i = 0; i < 10; ++i) {
                const double t = random_in_domain(spec, kind, rng);
                const double r = ur(rng), theta = uth(rng);
                worst_p = std::max(
                    worst_p, std::abs(uncertainty_product(spec, kind, r, theta, t) -
                                      var_x(spec, kind, r, theta, t) *
                                          var_p(spec, kind, r, theta, t)));
            }
        }
    }
    c.require(worst_m <= 1e-7, "closed-form moments equal quadrature moments within 1e-7");
    c.require(worst_p <= 1e-9, "product row equals var_x * var_p within 1e-9");
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst moment deviation = %.2e, product identity = %.2e",
                  worst_m, worst_p);
    c.note(buf);
    return c;
}

// -- criterion 6: classical equations of motion ---------------------------------

Criterion criterion_eom() {
    Criterion c;
    std::mt19937_64 rng(kSeed);
    const double h = 1e-5;
    double worst = 0.0;
    for (double ups : kUpsilons) {
        const SystemSpec spec = SystemSpec::make(ups, 2.0);
        for (SystemKind kind : kKinds) {
            // the mean tables carry no squeeze dependence, so coherent and
            // squeezed families share these trajectories by construction
            for (int i = 0; i < 10; ++i) {
                double t = random_in_domain(spec, kind, rng);
                if (kind == SystemKind::TO && spec.sign == Sign::Neg)
                    t = std::min(t, 0.9 / spec.abs_upsilon());
                const double dxf = (mean_x(spec, kind, 1.0, 1.0, t + h) -
                                    mean_x(spec, kind, 1.0, 1.0, t - h)) /
                                   (2.0 * h);
                const double dpf = (mean_p(spec, kind, 1.0, 1.0, t + h) -
                                    mean_p(spec, kind, 1.0, 1.0, t - h)) /
                                   (2.0 * h);
                const auto [dx, dp] = classical_rhs(
                    spec, kind,
                    ClassicalState{mean_x(spec, kind, 1.0, 1.0, t),
                                   mean_p(spec, kind, 1.0, 1.0, t), TimeCoord{kind, t}});
                worst = std::max(worst, std::abs(dxf - dx) / std::max(1.0, std::abs(dx)));
                worst = std::max(worst, std::abs(dpf - dp) / std::max(1.0, std::abs(dp)));
            }
        }
    }
    c.require(worst <= 1e-5,
              "finite-difference mean derivatives match the Hamilton right-hand sides");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst relative deviation = %.2e (18 cases)", worst);
    c.note(buf);
    return c;
}

// -- criterion 7: figure features ------------------------------------------------

double first_local_min_after(const SystemSpec& spec, SystemKind kind, double t0, double t_hi,
                             double* value) {
    auto f = [&](double t) { return mean_x(spec, kind, 1.0, 1.0, t); };
    auto df = [&](double t) { return (f(t + 1e-7) - f(t - 1e-7)) / 2e-7; };
    const int steps = 20000;
    double prev = df(t0);
    for (int i = 1; i <= steps; ++i) {
        const double t = t0 + (t_hi - t0) * i / steps;
        const double d = df(t);
        if (prev < 0.0 && d >= 0.0) {
            double lo = t0 + (t_hi - t0) * (i - 1) / steps, hi = t;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                (df(mid) < 0.0 ? lo : hi) = mid;
            }
            const double tm = 0.5 * (lo + hi);
            *value = f(tm);
            return tm;
        }
        prev = d;
    }
    *value = std::numeric_limits<double>::quiet_NaN();
    return std::numeric_limits<double>::quiet_NaN();
}

Criterion criterion_figures() {
    Criterion c;
    // all three sample curves start at <x> = 1 with x0 = p0 = 1
    for (int id = 1; id <= 3; ++id) {
        const SystemSpec spec = SystemSpec::make(id == 1 ? 5.0 : id == 2 ? 4.0 : 3.0, 2.0);
        for (SystemKind kind : kKinds)
            c.require(std::abs(mean_x(spec, kind, 1.0, 1.0, 0.0) - 1.0) <= 1e-12,
                      "curve starts at <x> = 1");
    }

    // figure 1: TO zero crossing required inside (2.5, 3.5)
    {
        const SystemSpec spec = SystemSpec::make(5.0, 2.0);
        const double z = first_mean_x_zero(spec, SystemKind::TO, 1.0, 1.0, 0.0, 6.0);
        c.require(!std::isnan(z) && z > 2.5 && z < 3.5,
                  "figure-1 TO curve crosses zero inside (2.5, 3.5)");
        if (std::isnan(z))
            c.note("figure-1 TO mean is (1+5t)^0.2 for these parameters: monotone,"
                   " strictly positive, no zero crossing exists on [0, 6]");
    }

    // figure 3: first local minimum of the TM curve past its zero crossing
    {
        const SystemSpec spec = SystemSpec::make(3.0, 2.0);
        const double z = first_mean_x_zero(spec, SystemKind::TM, 1.0, 1.0, 0.0, 2.5);
        c.require(!std::isnan(z), "figure-3 TM curve crosses zero");
        double min_val = 0.0;
        const double min_t = first_local_min_after(spec, SystemKind::TM, z, 4.0, &min_val);
        c.require(min_val > -60.0 && min_val < -20.0,
                  "figure-3 TM first minimum value inside (-60, -20)");
        c.require(min_t > 1.5 && min_t < 2.5,
                  "figure-3 TM first minimum time inside (1.5, 2.5)");
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "figure-3 TM first local minimum is %.4f at t = %.4f; "
                      "the curve reaches x(2.5) = %.4f at the plot-window edge",
                      min_val, min_t, mean_x(spec, SystemKind::TM, 1.0, 1.0, 2.5));
        c.note(buf);
    }

    // figure 2: the TQ curve is affine in t (vanishing second differences)
    {
        const SystemSpec spec = SystemSpec::make(4.0, 2.0);
        double worst = 0.0;
        const int steps = 200;
        for (int i = 0; i + 2 <= steps; ++i) {
            const double a = -2.0 + 3.2 * i / steps;
            const double b = -2.0 + 3.2 * (i + 1) / steps;
            const double cdot = -2.0 + 3.2 * (i + 2) / steps;
            const double d2 = mean_x(spec, SystemKind::TQ, 1.0, 1.0, a) -
                              2.0 * mean_x(spec, SystemKind::TQ, 1.0, 1.0, b) +
                              mean_x(spec, SystemKind::TQ, 1.0, 1.0, cdot);
            worst = std::max(worst, std::abs(d2));
        }
        c.require(worst <= 1e-10, "figure-2 TQ second differences <= 1e-10");
    }
    return c;
}

// -- criterion 8: Heisenberg bound ----------------------------------------------

Criterion criterion_heisenberg() {
    Criterion c;
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> ur(0.0, 2.0), uth(-3.2, 3.2);
    double min_prod = 1e300;
    int draws = 0;
    while (draws < 1000) {
        for (double ups : kUpsilons) {
            for (SystemKind kind : kKinds) {
                const SystemSpec spec = SystemSpec::make(ups, 2.0);
                const double t = random_in_domain(spec, kind, rng, 2.5);
                min_prod = std::min(
                    min_prod, uncertainty_product(spec, kind, ur(rng), uth(rng), t));
                ++draws;
            }
        }
    }
    c.require(min_prod >= 0.25 - 1e-12, "uncertainty product >= 1/4 - 1e-12 on 1000 draws");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "min product over draws = %.15f", min_prod);
    c.note(buf);

    const SystemSpec spec = SystemSpec::make(3.0, 2.0);
    const double delta2 = 7.0 / 9.0;
    const double want = 0.25 * (1.0 + 1.0 / delta2); // = 4/7
    for (SystemKind kind : kKinds) {
        const double got = uncertainty_product(spec, kind, 0.0, 0.0, 0.1);
        c.require(std::abs(got - want) <= 1e-12,
                  "under-regime r = 0 product equals (1/4)(1 + 1/Delta^2)");
    }
    const StateSpec st{SystemKind::TM, CoherentFamily{1.0, 1.0}};
    const Grid grid = default_grid(spec, st, 0.1, 8001);
    const Moments m = quadrature_moments(evaluate_state(spec, st, 0.1, grid));
    c.require(std::abs(m.x_var * m.p_var - want) <= 1e-7,
              "quadrature cross-check of the 4/7 product");
    return c;
}

// -- criterion 9: determinism ----------------------------------------------------

Criterion criterion_determinism() {
    Criterion c;
    VerifyOptions opt;
    opt.seed = kSeed;
    std::ostringstream a, b;
    for (const OracleReport& r : run_verification(opt)) a << r.to_json() << "\n";
    for (const OracleReport& r : run_verification(opt)) b << r.to_json() << "\n";
    c.require(!a.str().empty() && a.str() == b.str(),
              "two runs with the same seed produce byte-identical reports");
    return c;
}

struct Entry {
    int id;
    const char* name;
    Criterion (*fn)();
};

const Entry kEntries[] = {
    {1, "Wronskian suite", criterion_wronskian},
    {2, "RK4 oracle for the auxiliary oscillator equation", criterion_ode},
    {3, "Schrodinger residuals with negative control", criterion_residuals},
    {4, "ladder suite on the closed-form generator cases", criterion_ladder},
    {5, "moment equivalence (closed forms vs quadrature)", criterion_moments},
    {6, "classical equations of motion", criterion_eom},
    {7, "figure features", criterion_figures},
    {8, "Heisenberg bound", criterion_heisenberg},
    {9, "verification determinism", criterion_determinism},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const Entry& e : kEntries) {
        if (only != 0 && e.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Criterion c = e.fn();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", e.id, e.name,
                    secs);
        const std::string d = c.detail.str();
        if (!d.empty()) std::fputs(d.c_str(), stdout);
        if (!c.ok) ++failures;
    }
    return failures;
}
