#pragma once

#include <string>
#include <utility>

#include "emosc/errors.hpp"

namespace emosc {

// Three related Schrodinger systems sharing one parameter set (Upsilon, omega):
//   TQ : {-P^2 + 2T + Upsilon D - omega^2 X^2} Phi = 0        (time-independent form)
//   TM : {-e^chi P^2 + 2T - omega^2 e^-chi X^2} Theta = 0,    chi = Upsilon (t - t0)
//   TO : {-P^2 + 2T' - omega^2/tau^2 X^2} Psi = 0,            tau = 1 + Upsilon (t' - t0')
// linked by the time map t' - t0' = (e^{Upsilon (t-t0)} - 1)/Upsilon, so tau = e^chi.
enum class SystemKind { TO, TM, TQ };

// Trichotomy on Upsilon^2 vs 4 omega^2, analogous to over/critical/under damping.
enum class Regime { Over, Critical, Under };

enum class Sign { Pos, Neg };

const char* to_string(SystemKind k);
const char* to_string(Regime r);
const char* to_string(Sign s);

/// Regime and discriminant Delta = sqrt(|1 - 4 omega^2 / Upsilon^2|).
/// Critical is detected with the relative tolerance |Upsilon^2 - 4 omega^2| <= 1e-12 Upsilon^2,
/// in which case Delta is exactly 0.
std::pair<Regime, double> classify_regime(double upsilon, double omega);

/// Physical parameter set shared by the three systems. Times are handled as
/// offsets (t - t0, t' - t0') everywhere in the library; t0 is kept for I/O only.
struct SystemSpec {
    double upsilon = 0.0; ///< growth/damping rate, nonzero
    double omega = 0.0;   ///< oscillator frequency, > 0
    double t0 = 0.0;
    Regime regime = Regime::Under;
    Sign sign = Sign::Pos;
    double delta = 0.0; ///< sqrt(|1 - 4 omega^2/Upsilon^2|), 0 exactly when Critical

    static SystemSpec make(double upsilon, double omega, double t0 = 0.0);
    /// Same, but with the regime forced by the caller (Delta recomputed; 0 when Critical).
    static SystemSpec make_forced(double upsilon, double omega, Regime regime, double t0 = 0.0);

    double abs_upsilon() const { return upsilon < 0 ? -upsilon : upsilon; }
};

/// A native time offset of one system: t' - t0' for TO, t - t0 for TM/TQ.
struct TimeCoord {
    SystemKind kind = SystemKind::TM;
    double t = 0.0;
};

/// Time map TM -> TO: returns t' - t0' = (e^{Upsilon dt} - 1)/Upsilon for dt = t - t0.
/// Strictly increasing; image is [0, inf) for Upsilon > 0 and [0, 1/|Upsilon|) for Upsilon < 0
/// when dt >= 0 is extended to all reals.
double tm_to_to_time(const SystemSpec& spec, double dt);

/// tau = 1 + Upsilon (t' - t0'); throws DomainError unless tau > 0.
double tau_of(const SystemSpec& spec, double dtp);

/// chi = Upsilon (t - t0).
double chi_of(const SystemSpec& spec, double dt);

/// True when the native offset lies in the system's valid domain.
bool in_domain(const SystemSpec& spec, const TimeCoord& tc);

/// Throws DomainError when the offset is out of domain.
void require_in_domain(const SystemSpec& spec, const TimeCoord& tc);

} // namespace emosc
