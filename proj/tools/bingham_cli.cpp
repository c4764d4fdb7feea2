// Command-line front end: Monte-Carlo filter comparison, figure-data CSV
// emitters, and the numeric self-check battery.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bingham/evalsuite.hpp"
#include "bingham/selftest.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kBadArguments = 1,
  kBadConfig = 2,
  kNumericFailure = 3,
};

enum class Verbosity { quiet, normal, verbose };

// All artifacts go through a temp file renamed on success, so a failed run
// leaves nothing behind.
void write_file_atomic(const std::string& path,
                       const std::function<void(std::ostream&)>& writer) {
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  try {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    writer(os);
    os.flush();
    if (!os) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    os.close();
    fs::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

bool parent_exists(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  return parent.empty() || fs::is_directory(parent);
}

int run_simulate(const std::string& config_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed_override, Verbosity verbosity) {
  bingham::ScenarioConfig cfg;
  {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file '" << config_path << "'\n";
      return kBadConfig;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
      cfg = bingham::parse_scenario(ss.str());
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kBadConfig;
    }
  }
  if (seed_override) cfg.seed = *seed_override;

  const bingham::SimulationResult result = bingham::simulate_detailed(cfg);
  write_file_atomic(out_path, [&](std::ostream& os) {
    bingham::write_errors_csv(os, result.errors);
  });

  if (verbosity != Verbosity::quiet) {
    std::printf("simulate: %d steps x %d runs (seed %llu)\n", cfg.steps, cfg.runs,
                static_cast<unsigned long long>(cfg.seed));
    std::printf("mean angular error: bingham %.6f rad, kalman %.6f rad\n",
                result.metrics.mean_err_bingham, result.metrics.mean_err_kalman);
    std::printf("wrote %s\n", out_path.c_str());
  }
  if (verbosity == Verbosity::verbose)
    std::printf("wallclock: %.3f s\n", result.metrics.wallclock);
  return kOk;
}

int run_figures(const std::vector<double>& z1_list, const std::string& out_path,
                bool kld, int resolution, Verbosity verbosity) {
  std::size_t rows = 0;
  if (kld) {
    const auto data = bingham::figure_kld_data(z1_list);
    write_file_atomic(out_path, [&](std::ostream& os) { bingham::write_kld_csv(os, data); });
    rows = data.size();
  } else {
    const auto data = bingham::figure_pdf_data(z1_list, resolution);
    write_file_atomic(out_path, [&](std::ostream& os) { bingham::write_pdf_csv(os, data); });
    rows = data.size();
  }
  if (verbosity != Verbosity::quiet)
    std::printf("wrote %s (%zu rows)\n", out_path.c_str(), rows);
  return kOk;
}

int run_selftest_cmd(std::uint64_t seed, Verbosity verbosity) {
  const auto results = bingham::run_selftest(seed);
  int passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    if (verbosity != Verbosity::quiet || !r.passed)
      std::printf("%-4s %-26s %s\n", r.passed ? "ok" : "FAIL", r.name.c_str(),
                  r.detail.c_str());
  }
  std::printf("selftest: %d/%zu checks passed\n", passed, results.size());
  return passed == static_cast<int>(results.size()) ? kOk : kNumericFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursive orientation filtering on S^1 with the Bingham distribution"};
  app.require_subcommand(1);

  bool quiet = false, verbose = false;
  app.add_flag("-q,--quiet", quiet, "only errors on stderr");
  app.add_flag("-v,--verbose", verbose, "extra progress output");

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo comparison against the Kalman baseline");
  std::string config_path, sim_out;
  std::uint64_t seed_value = 0;
  bool have_seed = false;
  sim->add_option("--config", config_path, "scenario file (key = value lines)")->required();
  sim->add_option("--out", sim_out, "per-step error CSV path")->required();
  sim->add_option("--seed", seed_value, "override the config seed");

  auto* fig = app.add_subcommand("figures", "emit density / divergence CSV data");
  std::vector<double> z1_list;
  std::string fig_out;
  bool kld = false;
  int resolution = 720;
  fig->add_option("--z1", z1_list, "concentration values (repeatable)")->required();
  fig->add_option("--out", fig_out, "output CSV path")->required();
  fig->add_flag("--kld", kld, "emit KL divergence to the matched Gaussian instead of pdf curves");
  fig->add_option("--resolution", resolution, "grid points over [0, 2pi) for pdf curves");

  auto* self = app.add_subcommand("selftest", "run the numeric self-check battery");
  std::uint64_t selftest_seed = 1;
  self->add_option("--seed", selftest_seed, "seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  const Verbosity verbosity =
      quiet ? Verbosity::quiet : (verbose ? Verbosity::verbose : Verbosity::normal);
  have_seed = sim->count("--seed") > 0;

  try {
    if (sim->parsed()) {
      if (!parent_exists(sim_out)) {
        std::cerr << "error: parent directory of '" << sim_out << "' does not exist\n";
        return kBadArguments;
      }
      return run_simulate(config_path, sim_out,
                          have_seed ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                          verbosity);
    }
    if (fig->parsed()) {
      if (!parent_exists(fig_out)) {
        std::cerr << "error: parent directory of '" << fig_out << "' does not exist\n";
        return kBadArguments;
      }
      for (double z1 : z1_list) {
        if (!std::isfinite(z1) || z1 > 0.0 || (kld && z1 == 0.0)) {
          std::cerr << "error: --z1 values must be " << (kld ? "< 0" : "<= 0") << "\n";
          return kBadArguments;
        }
      }
      return run_figures(z1_list, fig_out, kld, resolution, verbosity);
    }
    return run_selftest_cmd(selftest_seed, verbosity);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
}
