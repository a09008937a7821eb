#include "rmhd/eos.hpp"

#include <cmath>
#include <string>

#include "rmhd/errors.hpp"

namespace rmhd {

void validate(const EosModel& eos) {
  if (!std::isfinite(eos.gamma_ad) || eos.gamma_ad <= 1.0) {
    throw Error(ErrorKind::InvalidInput,
                "adiabatic exponent must exceed 1, got " + describe(eos.gamma_ad));
  }
}

double density(const EosModel& eos, double p, double S) {
  validate(eos);
  if (!(p > 0.0)) {
    throw Error(ErrorKind::NonPositivePressure, "pressure must be positive");
  }
  if (!std::isfinite(p) || !std::isfinite(S)) {
    throw Error(ErrorKind::InvalidInput, "pressure and entropy must be finite");
  }
  return std::pow(p * std::exp(-S), 1.0 / eos.gamma_ad);
}

double pressure(const EosModel& eos, double rho, double S) {
  validate(eos);
  return std::exp(S) * std::pow(rho, eos.gamma_ad);
}

Thermo thermo_unchecked(const EosModel& eos, double p, double S) {
  Thermo t;
  t.rho = density(eos, p, S);
  const double theta = p / t.rho;
  t.e = theta / (eos.gamma_ad - 1.0);
  t.h = 1.0 + t.e + theta;
  t.a2 = eos.gamma_ad * theta;
  t.cs2 = t.a2 / t.h;
  return t;
}

Thermo thermo(const EosModel& eos, double p, double S) {
  Thermo t = thermo_unchecked(eos, p, S);
  if (!(t.cs2 < 1.0)) {
    throw Error(ErrorKind::CausalityViolation,
                "sound speed squared " + describe(t.cs2) + " is not below 1");
  }
  return t;
}

}  // namespace rmhd
