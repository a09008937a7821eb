#include "rmhd/io.hpp"

#include <array>
#include <cmath>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "rmhd/errors.hpp"

namespace rmhd::io {
namespace {

constexpr std::array<const char*, 8> kOrdering{"p", "u1", "u2", "u3", "H1", "H2", "H3", "S"};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

void require_keys(const json& j, const std::set<std::string>& keys, const std::string& where) {
  if (!j.is_object()) invalid(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (keys.count(key) == 0) invalid("unknown field '" + key + "' in " + where);
  }
  for (const auto& key : keys) {
    if (!j.contains(key)) invalid("missing field '" + key + "' in " + where);
  }
}

double number(const json& j, const std::string& name) {
  if (!j.is_number()) invalid("field '" + name + "' must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) invalid("field '" + name + "' must be finite");
  return x;
}

Vec3 vector3(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 3) invalid("field '" + name + "' must be an array of 3 numbers");
  return Vec3(number(j[0], name), number(j[1], name), number(j[2], name));
}

// -0.0 prints as "-0.0"; fold it into +0.0 so dumps do not depend on sign of zero.
double clean(double x) { return x + 0.0; }

json nullable(double x) { return std::isfinite(x) ? json(clean(x)) : json(nullptr); }

json pair_json(const SidePair& p) { return json{{"plus", nullable(p.plus)}, {"minus", nullable(p.minus)}}; }

std::string row_json(const Mat8& m, int r) {
  json row = json::array();
  for (int c = 0; c < 8; ++c) row.push_back(clean(m(r, c)));
  return row.dump();
}

std::array<const Mat8*, 4> matrices_of(const MatrixQuadruple& q) {
  return {&q.A0, &q.A[0], &q.A[1], &q.A[2]};
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

PrimitiveState state_from_json(const json& j) {
  require_keys(j, {"p", "u", "H", "S", "eos"}, "state");
  require_keys(j["eos"], {"gamma"}, "eos");
  PrimitiveState U;
  U.p = number(j["p"], "p");
  U.u = vector3(j["u"], "u");
  U.H = vector3(j["H"], "H");
  U.S = number(j["S"], "S");
  U.eos.gamma_ad = number(j["eos"]["gamma"], "gamma");
  validate(U.eos);
  return U;
}

json state_to_json(const PrimitiveState& U) {
  return json{{"p", clean(U.p)},
              {"u", {clean(U.u.x()), clean(U.u.y()), clean(U.u.z())}},
              {"H", {clean(U.H.x()), clean(U.H.y()), clean(U.H.z())}},
              {"S", clean(U.S)},
              {"eos", {{"gamma", U.eos.gamma_ad}}}};
}

std::pair<PrimitiveState, PrimitiveState> sheet_pair_from_json(const json& j) {
  require_keys(j, {"plus", "minus"}, "sheet pair");
  return {state_from_json(j["plus"]), state_from_json(j["minus"])};
}

json to_json(const DerivedState& d, const AdmissibilityReport& r) {
  json out;
  out["admissible"] = r.ok();
  out["checks"] = json{{"density_positive", r.density_positive},
                       {"sound_speed_real", r.sound_speed_real},
                       {"causal", r.causal},
                       {"subluminal", r.subluminal}};
  out["failure"] = r.ok() ? json(nullptr) : json(r.failure);
  if (r.ok()) {
    out["derived"] = json{{"lorentz", clean(d.lorentz)},
                          {"v", {clean(d.v.x()), clean(d.v.y()), clean(d.v.z())}},
                          {"b0", clean(d.b0)},
                          {"b", {clean(d.b.x()), clean(d.b.y()), clean(d.b.z())}},
                          {"B2", clean(d.B2)},
                          {"rho", clean(d.rho)},
                          {"e", clean(d.e)},
                          {"h", clean(d.h)},
                          {"a2", clean(d.a2)},
                          {"cs2", clean(d.cs2)},
                          {"q", clean(d.q)}};
  } else {
    out["derived"] = nullptr;
  }
  return out;
}

json to_json(const StabilityReport& r) {
  return json{{"G", nullable(r.G)},
              {"stable", r.stable},
              {"nondegenerate", r.nondegenerate},
              {"windows_ok", r.windows_ok},
              {"det_tangential", nullable(r.det_tangential)},
              {"jump", nullable(r.jump)},
              {"gamma", pair_json(r.gamma)},
              {"lambda_tilde", pair_json(r.lambda_tilde)},
              {"lambda", pair_json(r.lambda)},
              {"bounds", pair_json(r.bounds)},
              {"angles",
               {{"cos_plus", nullable(r.angles.cos_plus)},
                {"sin_plus", nullable(r.angles.sin_plus)},
                {"cos_minus", nullable(r.angles.cos_minus)},
                {"sin_minus", nullable(r.angles.sin_minus)},
                {"sin_delta", nullable(r.angles.sin_delta)}}}};
}

json to_json(const ResidualReport& r) {
  return json{{"trials", r.trials},
              {"max_residual", nullable(r.max_residual)},
              {"mean_residual", nullable(r.mean_residual)},
              {"failures", r.failures},
              {"lambda", r.lambda ? nullable(*r.lambda) : json(nullptr)}};
}

std::string matrices_json(const MatrixQuadruple& quad, std::optional<double> lambda) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"symmetrization\": \"" << (lambda ? "secondary" : "primary") << "\",\n";
  out << "  \"lambda\": " << (lambda ? json(clean(*lambda)).dump() : "null") << ",\n";
  out << "  \"ordering\": " << json(kOrdering).dump() << ",\n";
  const auto mats = matrices_of(quad);
  for (int k = 0; k < 4; ++k) {
    out << "  \"A" << k << "\": [\n";
    for (int r = 0; r < 8; ++r) out << "    " << row_json(*mats[k], r) << (r < 7 ? ",\n" : "\n");
    out << "  ]" << (k < 3 ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{:.16e}", clean(x));
}

std::string matrices_csv(const MatrixQuadruple& quad, std::optional<double> lambda) {
  std::ostringstream out;
  out << "lambda,matrix,row";
  for (const char* name : kOrdering) out << ',' << name;
  out << '\n';
  const std::string lam = lambda ? format_number(*lambda) : "";
  const auto mats = matrices_of(quad);
  for (int k = 0; k < 4; ++k) {
    for (int r = 0; r < 8; ++r) {
      out << lam << ",A" << k << ',' << kOrdering[r];
      for (int c = 0; c < 8; ++c) out << ',' << format_number((*mats[k])(r, c));
      out << '\n';
    }
  }
  return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "dv,dphi,G,stable\n";
  for (const auto& row : rows) {
    out << format_number(row.dv) << ',' << format_number(row.dphi) << ',' << format_number(row.G)
        << ',' << (row.stable ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace rmhd::io
