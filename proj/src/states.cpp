#include "emosc/states.hpp"

#include <cmath>
#include <numbers>

#include "emosc/observables.hpp"
#include "emosc/timefuncs.hpp"

namespace emosc {

namespace {

constexpr cplx I{0.0, 1.0};

double wrap_angle(double theta) {
    // into (-pi, pi]
    double t = std::remainder(theta, 2.0 * std::numbers::pi);
    if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
    return t;
}

void validate_family(const SqueezedFamily& fam) {
    if (!(fam.r >= 0.0)) throw DomainError("squeeze parameter r must be >= 0");
}

bool is_derived_case(const SystemSpec& spec) {
    // The (Under, +) states are the printed anchors; everything else is built
    // from the same ladder structure through the tabulated time functions.
    return !(spec.regime == Regime::Under && spec.sign == Sign::Pos);
}

// Squeeze-rotated ladder pair: A_z = A cosh r + conj(A) e^{i theta} sinh r,
// same for B. (A_z, B_z) keeps the Wronskian A B~ - B A~ = -i, so the whole
// state family is the ground-state construction applied to the rotated pair.
struct RotatedPair {
    cplx A, B;
    double arg_a; // continuous arg A_z
    double Q;     // |A_z|^2
    double R;     // 2 Re(B_z conj A_z)
};

RotatedPair rotate_pair(const LadderPair& lp, double r, double theta) {
    const double ch = std::cosh(r), sh = std::sinh(r);
    const cplx ph = std::exp(I * theta);
    RotatedPair rp;
    rp.A = lp.A * ch + std::conj(lp.A) * ph * sh;
    rp.B = lp.B * ch + std::conj(lp.B) * ph * sh;
    // arg A_z = arg A + arg(cosh r + e^{-i(2 arg A - theta)} sinh r); the second
    // factor has positive real part for every r, so its principal argument is
    // continuous in t and no unwrapping is needed.
    const cplx g = ch + std::exp(-I * (2.0 * lp.arg_a - theta)) * sh;
    rp.arg_a = lp.arg_a + std::arg(g);
    rp.Q = std::norm(rp.A);
    rp.R = 2.0 * std::real(rp.B * std::conj(rp.A));
    return rp;
}

WavefunctionSample make_sample(const SystemSpec& spec, SystemKind kind, double t,
                               const Grid& grid) {
    if (grid.n < 5) throw GridError("grid needs at least 5 points");
    WavefunctionSample s;
    s.grid = grid;
    s.psi.resize(static_cast<std::size_t>(grid.n));
    s.kind = kind;
    s.t = t;
    s.derived_case = is_derived_case(spec);
    return s;
}

} // namespace

Grid Grid::linspace(double x_min, double x_max, int n) {
    if (n < 2 || !(x_max > x_min)) throw GridError("bad grid bounds");
    Grid g;
    g.x_min = x_min;
    g.dx = (x_max - x_min) / (n - 1);
    g.n = n;
    return g;
}

double hermite(int n, double u) {
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * u;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * u * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

double hermite_scaled(int n, double u) {
    if (n == 0) return 1.0;
    double hm = 1.0;                    // ~H_0
    double h = std::sqrt(2.0) * u;      // ~H_1
    for (int k = 1; k < n; ++k) {
        const double next =
            std::sqrt(2.0 / (k + 1.0)) * u * h - std::sqrt(k / (k + 1.0)) * hm;
        hm = h;
        h = next;
    }
    return h;
}

WavefunctionSample number_state(const SystemSpec& spec, SystemKind kind, int n, double t,
                                const Grid& grid) {
    if (n < 0) throw DomainError("number state index must be >= 0");
    if (n > 60) throw OverflowGuard("number states supported up to n = 60");

    const TimeFunctions tf = eval_timefuncs(spec, kind, t);
    const LadderPair lp = ladder_pair(tf, kind);
    const double w2 = std::norm(lp.A);
    const double w = std::sqrt(w2);
    const cplx quad = 0.5 * I * (lp.B / lp.A); // x^2 coefficient of the exponent
    const double norm = std::pow(2.0 * std::numbers::pi * w2, -0.25);
    const cplx phase = std::exp(-I * ((n + 0.5) * lp.arg_a));

    WavefunctionSample s = make_sample(spec, kind, t, grid);
    const double uscale = 1.0 / (std::sqrt(2.0) * w);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double u = x * uscale;
        if (n > 0 && n * std::log10(std::max(2.0 * std::abs(u), 1.0)) > 280.0)
            throw OverflowGuard("Hermite argument too large for this n");
        s.psi[static_cast<std::size_t>(i)] =
            norm * hermite_scaled(n, u) * std::exp(quad * x * x) * phase;
    }
    return s;
}

SqueezeGeometry squeeze_geometry(const SystemSpec& spec, SystemKind kind,
                                 const SqueezedFamily& fam, double t) {
    validate_family(fam);
    const double theta = wrap_angle(fam.theta);
    const TimeFunctions tf = eval_timefuncs(spec, kind, t);
    const LadderPair lp = ladder_pair(tf, kind);
    const RotatedPair rp = rotate_pair(lp, fam.r, theta);

    SqueezeGeometry g;
    g.Q = rp.Q;
    g.R_over_Q = rp.R / rp.Q;
    g.Xplus = mean_x(spec, kind, fam.x0, fam.p0, t);
    const double pbar = mean_p(spec, kind, fam.x0, fam.p0, t);
    g.Xminus = 2.0 * rp.Q * pbar - rp.R * g.Xplus;
    // cosh 2r / sinh 2r split of Xminus; closed form so it stays finite at r = 0.
    const double w2 = std::norm(lp.A);
    g.Yminus = 2.0 * w2 * std::cos(2.0 * lp.arg_a - theta) * pbar -
               2.0 * std::real(lp.A * lp.B * std::exp(-I * theta)) * g.Xplus;
    return g;
}

WavefunctionSample squeezed_state(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                                  double r, double theta, double t, const Grid& grid) {
    SqueezedFamily fam{x0, p0, r, wrap_angle(theta)};
    validate_family(fam);

    const TimeFunctions tf = eval_timefuncs(spec, kind, t);
    const LadderPair lp = ladder_pair(tf, kind);
    const RotatedPair rp = rotate_pair(lp, fam.r, fam.theta);

    const double Q = rp.Q;
    const double xb = mean_x(spec, kind, x0, p0, t);
    const double pb = mean_p(spec, kind, x0, p0, t);
    const double xm = 2.0 * Q * pb - rp.R * xb; // Xminus(alpha, z)
    const cplx z{xb, xm};

    const cplx quad = 0.5 * I * (rp.B / rp.A);
    const cplx lin = z / (2.0 * Q);
    const cplx cst = -xb * z / (4.0 * Q);
    const cplx pref =
        std::pow(2.0 * std::numbers::pi * Q, -0.25) * std::exp(-0.5 * I * rp.arg_a);

    WavefunctionSample s = make_sample(spec, kind, t, grid);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        s.psi[static_cast<std::size_t>(i)] = pref * std::exp((quad * x + lin) * x + cst);
    }
    return s;
}

WavefunctionSample coherent_state(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                                  double t, const Grid& grid) {
    return squeezed_state(spec, kind, x0, p0, 0.0, 0.0, t, grid);
}

WavefunctionSample evaluate_state(const SystemSpec& spec, const StateSpec& state, double t,
                                  const Grid& grid) {
    return std::visit(
        [&](const auto& fam) -> WavefunctionSample {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, NumberFamily>)
                return number_state(spec, state.kind, fam.n, t, grid);
            else if constexpr (std::is_same_v<F, CoherentFamily>)
                return coherent_state(spec, state.kind, fam.x0, fam.p0, t, grid);
            else
                return squeezed_state(spec, state.kind, fam.x0, fam.p0, fam.r, fam.theta, t,
                                      grid);
        },
        state.family);
}

Grid default_grid(const SystemSpec& spec, const StateSpec& state, double t, int n) {
    if (n < 5) throw GridError("grid needs at least 5 points");
    if (n % 2 == 0) ++n; // Simpson wants an odd point count

    double center = 0.0;
    double sigma = 1.0;
    std::visit(
        [&](const auto& fam) {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, NumberFamily>) {
                const TimeFunctions tf = eval_timefuncs(spec, state.kind, t);
                const double w2 = std::norm(ladder_pair(tf, state.kind).A);
                sigma = std::sqrt((2.0 * fam.n + 1.0) * w2);
            } else if constexpr (std::is_same_v<F, CoherentFamily>) {
                center = mean_x(spec, state.kind, fam.x0, fam.p0, t);
                sigma = std::sqrt(var_x(spec, state.kind, 0.0, 0.0, t));
            } else {
                center = mean_x(spec, state.kind, fam.x0, fam.p0, t);
                sigma = std::sqrt(var_x(spec, state.kind, fam.r, fam.theta, t));
            }
        },
        state.family);
    return Grid::linspace(center - 10.0 * sigma, center + 10.0 * sigma, n);
}

} // namespace emosc
