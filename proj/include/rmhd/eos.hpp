#pragma once

namespace rmhd {

// Polytropic closure p = exp(S) * rho^gamma_ad.
struct EosModel {
  double gamma_ad = 5.0 / 3.0;
};

struct Thermo {
  double rho = 0.0;  // proper rest-mass density
  double e = 0.0;    // specific internal energy
  double h = 0.0;    // relativistic specific enthalpy 1 + e + p/rho
  double a2 = 0.0;   // dp/drho at fixed S
  double cs2 = 0.0;  // a2 / h
};

/// Throws InvalidInput unless gamma_ad > 1 and finite.
void validate(const EosModel& eos);

/// rho(p, S). Throws NonPositivePressure for p <= 0.
double density(const EosModel& eos, double p, double S);

/// p(rho, S), the forward closure.
double pressure(const EosModel& eos, double rho, double S);

/// Same as thermo() without the causality check; used by admissibility reports.
Thermo thermo_unchecked(const EosModel& eos, double p, double S);

/// Full thermodynamic bundle. Throws NonPositivePressure or CausalityViolation (cs2 >= 1).
Thermo thermo(const EosModel& eos, double p, double S);

}  // namespace rmhd
