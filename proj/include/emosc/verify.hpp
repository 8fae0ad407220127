#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emosc/model.hpp"
#include "emosc/states.hpp"

namespace emosc {

/// Result of one independent numerical check. passed <=> max_abs_error <= tolerance.
struct OracleReport {
    std::string check;
    std::string case_id;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> metadata;

    static OracleReport make(std::string check, std::string case_id, double err, double tol);
    std::string to_json() const; ///< one JSON object (used as a JSON line)
};

/// Central tolerance record; every check reads from here so a single scale
/// factor tightens or loosens the whole suite.
struct Tolerances {
    double wronskian = 1e-10;
    double ode_sup = 1e-8;        // RK4 vs closed form, sup norm
    double fd_relative = 1e-6;    // finite-difference derivative consistency
    double schrodinger = 1e-4;    // relative PDE residual
    double ladder = 1e-5;         // L2 ladder action
    double annihilation = 1e-6;   // ||J- psi_0||
    double moments = 1e-7;        // quadrature vs closed forms
    double product_identity = 1e-9;
    double eom = 1e-5;            // d<x>/dt vs Hamilton rhs, relative
    double norm = 1e-8;
    double heisenberg_slack = 1e-12;
    double exact = 1e-12;         // identities that hold to rounding

    Tolerances scaled(double factor) const;
};

struct Moments {
    double norm = 0.0;
    double x_mean = 0.0, p_mean = 0.0;
    double x_var = 0.0, p_var = 0.0;
};

/// Simpson quadrature of norm, <x>, <p>, (Dx)^2, (Dp)^2 on the sample's grid.
/// <p> uses psi-bar (-i d/dx) psi with 4th-order stencils; means and variances
/// are normalized by the computed norm. Throws TailError when |psi| at either
/// edge exceeds 1e-10 max|psi|.
Moments quadrature_moments(const WavefunctionSample& sample);

/// Which realization of D the Schrodinger operators use.
enum class DConvention { Symmetric, PlainScale }; // -i(x d/dx + 1/2) vs -i x d/dx

/// Relative PDE residual max|S psi| / max|H psi| for the closed-form state of
/// one family, with 4th-order x-stencils and one 2nd-order t-stencil.
OracleReport schrodinger_residual(const SystemSpec& spec, SystemKind kind,
                                  const StateFamily& family, double t, const Grid& grid,
                                  DConvention conv = DConvention::Symmetric,
                                  const Tolerances& tol = {});

/// Wronskian constancy of the closed-form pairs at seeded random in-domain times.
OracleReport wronskian_check(const SystemSpec& spec, SystemKind kind, std::uint64_t seed,
                             int samples = 100, const Tolerances& tol = {});

/// Finite-difference residual of the auxiliary oscillator equation for xi.
OracleReport ode_residual_check(const SystemSpec& spec, const Tolerances& tol = {});

/// RK4 integration of the auxiliary equation from closed-form initial data at
/// tau = 1, compared against the closed form over the regime's test window.
OracleReport ode_rk4_check(const SystemSpec& spec, const Tolerances& tol = {});

/// Aggregate of the Wronskian, finite-difference and RK4 checks.
OracleReport ode_check(const SystemSpec& spec, std::uint64_t seed = 12345,
                       const Tolerances& tol = {});

/// Finite-difference d<x>/dt, d<p>/dt against the classical right-hand sides.
OracleReport eom_check(const SystemSpec& spec, SystemKind kind, double x0, double p0,
                       std::uint64_t seed, const Tolerances& tol = {});

struct VerifyOptions {
    std::uint64_t seed = 12345;
    double tolerance_scale = 1.0;
    // empty = all cases; otherwise "kind,regime,sign" (e.g. "tm,under,pos")
    std::vector<std::string> cases;
};

/// The full 18-case suite plus global convention checks and negative controls.
/// Deterministic for a fixed seed; reports come back sorted by (case, check).
std::vector<OracleReport> run_verification(const VerifyOptions& options);

} // namespace emosc
