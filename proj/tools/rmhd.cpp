// Command-line front end: state checks, matrix export, window bounds,
// current-vortex sheet verdicts, parameter sweeps and the equivalence oracle.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "rmhd/errors.hpp"
#include "rmhd/io.hpp"
#include "rmhd/kernels.hpp"
#include "rmhd/secondary.hpp"

namespace {

using rmhd::io::json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalid = 2, kNumerical = 3 };

struct RunConfig {
  std::string subcommand;
  std::string input = "-";
  bool input_given = false;
  std::string output = "-";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::optional<double> lambda;
  std::string format;  // empty: json, except csv for sweep
  double eps = 1e-12;
  std::string grid;
};

void configure_logging() {
  auto logger = spdlog::stderr_logger_mt("rmhd");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("RMHD_LOG");
  const std::string level = env ? env : "quiet";
  if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else {
    spdlog::set_level(spdlog::level::off);
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw rmhd::Error(rmhd::ErrorKind::InvalidInput, "cannot open input '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rmhd::Error(rmhd::ErrorKind::InvalidInput, "cannot open output '" + path + "'");
  out << text;
}

std::string format_of(const RunConfig& cfg, const std::string& natural, bool csv_allowed) {
  const std::string f = cfg.format.empty() ? natural : cfg.format;
  if (f != "json" && !(csv_allowed && f == "csv")) {
    throw rmhd::Error(rmhd::ErrorKind::InvalidInput,
                      "format '" + f + "' is not supported by " + cfg.subcommand);
  }
  return f;
}

int check_state(const RunConfig& cfg) {
  format_of(cfg, "json", false);
  const auto U = rmhd::io::state_from_json(rmhd::io::parse(read_input(cfg.input)));
  const auto report = rmhd::check_hyperbolic(U);
  const auto derived = report.ok() ? rmhd::derive(U) : rmhd::DerivedState{};
  write_output(cfg.output, rmhd::io::to_json(derived, report).dump(2) + "\n");
  return report.ok() ? kOk : kCheckFailed;
}

int matrices(const RunConfig& cfg) {
  const std::string fmt = format_of(cfg, "json", true);
  const auto U = rmhd::io::state_from_json(rmhd::io::parse(read_input(cfg.input)));
  const auto quad = cfg.lambda ? rmhd::build_secondary(U, *cfg.lambda).quadruple
                               : rmhd::build_primary(U);
  write_output(cfg.output, fmt == "csv" ? rmhd::io::matrices_csv(quad, cfg.lambda)
                                        : rmhd::io::matrices_json(quad, cfg.lambda));
  return kOk;
}

int window(const RunConfig& cfg) {
  format_of(cfg, "json", false);
  const auto U = rmhd::io::state_from_json(rmhd::io::parse(read_input(cfg.input)));
  const double m = rmhd::window_bound(U);
  json out;
  out["window_bound"] = m;
  if (cfg.lambda) {
    const auto kit = rmhd::build_secondary(U, *cfg.lambda);
    out["lambda"] = *cfg.lambda;
    out["inside"] = kit.inside_window();
    out["min_eigenvalue_A0"] = rmhd::min_eigenvalue(kit.quadruple.A0);
  } else {
    out["lambda"] = nullptr;
    out["inside"] = nullptr;
    out["min_eigenvalue_A0"] = rmhd::min_eigenvalue(rmhd::build_primary(U).A0);
  }
  write_output(cfg.output, out.dump(2) + "\n");
  return cfg.lambda && !out["inside"].get<bool>() ? kCheckFailed : kOk;
}

std::pair<rmhd::SheetSide, rmhd::SheetSide> read_sheet(const RunConfig& cfg) {
  const auto [plus, minus] = rmhd::io::sheet_pair_from_json(rmhd::io::parse(read_input(cfg.input)));
  return {rmhd::SheetSide::make(plus), rmhd::SheetSide::make(minus)};
}

int cvs(const RunConfig& cfg) {
  format_of(cfg, "json", false);
  const auto [plus, minus] = read_sheet(cfg);
  const auto report = rmhd::stability_margin(plus, minus, rmhd::SheetOptions{cfg.eps});
  spdlog::info("G = {} stable = {}", report.G, report.stable);
  write_output(cfg.output, rmhd::io::to_json(report).dump(2) + "\n");
  return report.stable ? kOk : kCheckFailed;
}

int sweep(const RunConfig& cfg) {
  const std::string fmt = format_of(cfg, "csv", true);
  if (cfg.grid.empty()) throw rmhd::Error(rmhd::ErrorKind::InvalidInput, "sweep needs --grid");
  const auto grid = rmhd::SweepGrid::parse(cfg.grid);
  const auto [plus, minus] = read_sheet(cfg);
  const auto rows = rmhd::sweep(plus, minus, grid, rmhd::SheetOptions{cfg.eps});
  spdlog::info("sweep evaluated {} grid points", rows.size());
  if (fmt == "csv") {
    write_output(cfg.output, rmhd::io::sweep_csv(rows));
  } else {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back(json{{"dv", r.dv},
                         {"dphi", r.dphi},
                         {"G", std::isfinite(r.G) ? json(r.G) : json(nullptr)},
                         {"stable", r.stable}});
    }
    write_output(cfg.output, out.dump(2) + "\n");
  }
  return kOk;
}

int verify(const RunConfig& cfg) {
  format_of(cfg, "json", false);
  rmhd::VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.trials = cfg.trials;
  vc.lambda = cfg.lambda;
  if (cfg.input_given) {
    vc.state = rmhd::io::state_from_json(rmhd::io::parse(read_input(cfg.input)));
  }
  const auto report = rmhd::verify(vc);
  spdlog::info("verify: {} trials, max residual {}", report.trials, report.max_residual);
  write_output(cfg.output, rmhd::io::to_json(report).dump(2) + "\n");
  return report.failures == 0 ? kOk : kCheckFailed;
}

int run(const RunConfig& cfg) {
  if (cfg.subcommand == "check-state") return check_state(cfg);
  if (cfg.subcommand == "matrices") return matrices(cfg);
  if (cfg.subcommand == "window") return window(cfg);
  if (cfg.subcommand == "cvs") return cvs(cfg);
  if (cfg.subcommand == "sweep") return sweep(cfg);
  if (cfg.subcommand == "verify") return verify(cfg);
  throw rmhd::Error(rmhd::ErrorKind::InvalidInput, "unknown subcommand " + cfg.subcommand);
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric forms of relativistic MHD and current-vortex sheet stability"};
  app.require_subcommand(1);

  RunConfig cfg;
  double lambda = 0.0;
  std::map<std::string, CLI::Option*> input_opts;
  std::map<std::string, CLI::Option*> lambda_opts;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"check-state", "Report hyperbolicity conditions and derived quantities of a state"},
      {"matrices", "Export the symmetric coefficient matrices of a state"},
      {"window", "Hyperbolicity window of the secondary symmetrization"},
      {"cvs", "Stability verdict for a planar current-vortex sheet"},
      {"sweep", "Stability margin over a grid of velocity jumps and field angles"},
      {"verify", "Equivalence oracle against the conservative form"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    input_opts[name] = sub->add_option("--input", cfg.input, "Input JSON file, '-' for stdin");
    sub->add_option("--output", cfg.output, "Output file, '-' for stdout");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--trials", cfg.trials, "Number of randomized trials");
    lambda_opts[name] = sub->add_option("--lambda", lambda, "Secondary symmetrization parameter");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--eps", cfg.eps, "Lower bound on |H2+ H3- - H3+ H2-|");
    sub->add_option("--grid", cfg.grid, "dv_min:dv_max:n,dphi_min:dphi_max:m");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("InvalidInput", e.what());
    return kInvalid;
  }

  configure_logging();
  for (const auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  cfg.input_given = input_opts[cfg.subcommand]->count() > 0;
  if (lambda_opts[cfg.subcommand]->count() > 0) cfg.lambda = lambda;
  spdlog::debug("subcommand {} seed {} trials {}", cfg.subcommand, cfg.seed, cfg.trials);

  try {
    return run(cfg);
  } catch (const rmhd::Error& e) {
    report_error(rmhd::to_string(e.kind()), e.what());
    return e.kind() == rmhd::ErrorKind::FiniteDifferenceUnstable ? kNumerical : kInvalid;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return kNumerical;
  }
}
