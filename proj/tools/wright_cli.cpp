// Batch front end: proofs, seed checks, multiplier reports and simulations.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wright/prover.hpp"
#include "wright/seed.hpp"
#include "wright/simulate.hpp"

namespace fs = std::filesystem;
using namespace wright;

namespace {

// Exit codes are part of the command contract.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitNoVerdict = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitCantCreate = 73;

constexpr const char* kCertFile = "certificates.jsonl";
constexpr const char* kReportFile = "floquet_report.csv";
constexpr const char* kTrajectoryFile = "trajectory.csv";
constexpr const char* kSeedFile = "seed_check.csv";

struct Manifest {
  std::string config;
  std::string out;  // empty: current directory, and no seed-check CSV
  int jobs = 1;
  std::optional<double> alpha_lo;
  std::optional<double> alpha_hi;
};

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitNoInput, "cannot read config file " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses the config, applies range overrides and validates the result.
ProofConfig load_config(const Manifest& m) {
  const std::string text = read_file(m.config);
  try {
    ProofConfig c = config_from_json(text);
    if (m.alpha_lo) c.alpha_lo = *m.alpha_lo;
    if (m.alpha_hi) c.alpha_hi = *m.alpha_hi;
    validate(c);
    return c;
  } catch (const InvalidConfig& e) {
    throw CliError{kExitUsage, std::string("invalid config: ") + e.what()};
  }
}

fs::path ensure_dir(std::string dir) {
  if (dir.empty()) dir = ".";
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw CliError{kExitCantCreate, "cannot create output directory " + dir};
  return fs::path(dir);
}

std::string worst_kind(const ProofCertificate& c) {
  if (!c.verdict) return "NoVerdict";
  if (c.regions.empty()) return "None";
  FloquetKind worst = FloquetKind::BoundedStable;
  for (const auto& r : c.regions)
    if (static_cast<int>(r.outcome.kind) > static_cast<int>(worst)) worst = r.outcome.kind;
  return std::string(to_string(worst));
}

std::string fmt(double v) {
  if (!std::isfinite(v)) return "inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int cmd_prove(const Manifest& m) {
  const ProofConfig cfg = load_config(m);
  const fs::path dir = ensure_dir(m.out);
  std::ofstream out(dir / kCertFile, std::ios::app);
  if (!out) throw CliError{kExitCantCreate, "cannot open " + (dir / kCertFile).string()};

  const SweepResult res = sweep(cfg, m.jobs, [&](const ProofCertificate& c) {
    out << certificate_to_json(c) << '\n';
    out.flush();
    std::cerr << "[" << fmt(c.alpha.lo()) << ", " << fmt(c.alpha.hi()) << "] verdict="
              << (c.verdict ? (*c.verdict ? "true" : "false") : "none") << " regions=" << c.regions.size()
              << " lambda_max=" << fmt(c.lambda_max_worst()) << " " << c.wall_seconds << "s"
              << (c.note.empty() ? "" : " note=" + c.note) << '\n';
  });
  if (!res.verdict) {
    std::cout << "verdict: none (resource limit)\n";
    return kExitNoVerdict;
  }
  std::cout << "verdict: " << (*res.verdict ? "true" : "false") << '\n';
  return *res.verdict ? kExitTrue : kExitFalse;
}

struct SeedCheckOptions {
  double lo = 1.57;
  double hi = 2.07;
  double width = 0.1;
  int pieces = 1;
};

int cmd_seed_check(const Manifest& m, SeedCheckOptions o) {
  AprioriParams ap;
  int n_time = 128;
  int n_period = 10;
  if (!m.config.empty()) {
    // Only the seed parameters are taken from the config; its range is ignored
    // because the check is meant to run below pi/2 as well.
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(m.config));
      ap.i0 = j.value("i0", ap.i0);
      ap.j0 = j.value("j0", ap.j0);
      n_time = j.value("n_time", n_time);
      n_period = j.value("n_period", n_period);
    } catch (const nlohmann::json::exception& e) {
      throw CliError{kExitUsage, std::string("invalid config: ") + e.what()};
    }
  }
  if (m.alpha_lo) o.lo = *m.alpha_lo;
  if (m.alpha_hi) o.hi = *m.alpha_hi;
  if (!(o.lo > 1.0) || !(o.hi > o.lo) || !std::isfinite(o.hi) || !(o.width > 0) || o.pieces < 1 || ap.i0 < 1 ||
      ap.j0 < 1 || n_time < 1 || n_period < 1)
    throw CliError{kExitUsage, "seed-check: need 1 < alpha-lo < alpha-hi, positive width, pieces and parameters"};

  std::ofstream csv;
  if (!m.out.empty()) {
    const fs::path dir = ensure_dir(m.out);
    csv.open(dir / kSeedFile);
    csv << "alpha_lo,alpha_hi,empty\n";
  }
  bool all_empty = true;
  for (const Interval& part : partition(o.lo, o.hi, o.width)) {
    const bool empty = o.pieces == 1 ? !seed_long(part, ap, n_time, n_period).has_value()
                                     : seed_long_empty_split(part, ap, n_time, n_period, o.pieces);
    all_empty = all_empty && empty;
    std::cout << "[" << fmt(part.lo()) << ", " << fmt(part.hi()) << "] " << (empty ? "Empty" : "NonEmpty") << '\n';
    if (csv) csv << fmt(part.lo()) << ',' << fmt(part.hi()) << ',' << (empty ? "true" : "false") << '\n';
  }
  return all_empty ? kExitTrue : kExitFalse;
}

int cmd_floquet_report(const Manifest& m) {
  const fs::path dir(m.out.empty() ? "." : m.out);
  const fs::path certs = dir / kCertFile;
  if (!fs::is_directory(dir) || !fs::exists(certs)) throw CliError{kExitNoInput, "no certificates in " + dir.string()};
  std::ifstream in(certs);
  std::ofstream out(dir / kReportFile);
  if (!out) throw CliError{kExitCantCreate, "cannot write " + (dir / kReportFile).string()};
  out << "alpha_lo,alpha_hi,lambda_max_worst,outcome_kind\n";
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ProofCertificate c;
    try {
      c = certificate_from_json(line);
    } catch (const std::exception& e) {
      throw CliError{kExitUsage, std::string("malformed certificate: ") + e.what()};
    }
    out << fmt(c.alpha.lo()) << ',' << fmt(c.alpha.hi()) << ',' << fmt(c.lambda_max_worst()) << ',' << worst_kind(c)
        << '\n';
    ++rows;
  }
  std::cout << "wrote " << rows << " rows to " << (dir / kReportFile).string() << '\n';
  return kExitTrue;
}

struct SimulateOptions {
  std::optional<double> alpha;
  double horizon = 400;
  double step = 1.0 / 256;
};

int cmd_simulate(const Manifest& m, const SimulateOptions& o) {
  const std::optional<double> alpha = o.alpha ? o.alpha : m.alpha_lo;
  if (!alpha || !(*alpha > 0) || !std::isfinite(*alpha)) throw CliError{kExitUsage, "simulate: need --alpha > 0"};
  if (!(o.horizon > 0) || !(o.step > 0)) throw CliError{kExitUsage, "simulate: horizon and step must be positive"};
  Trajectory tr;
  try {
    tr = integrate(*alpha, o.horizon, o.step);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what()};
  }
  const fs::path dir = ensure_dir(m.out);
  std::ofstream csv(dir / kTrajectoryFile);
  csv << "t,x\n";
  for (std::size_t k = 0; k < tr.t.size(); ++k) csv << fmt(tr.t[k]) << ',' << fmt(tr.x[k]) << '\n';

  try {
    const Simulation s = simulate_sops(*alpha, o.horizon, o.step);
    std::cout << "q=" << fmt(s.orbit.q()) << " qbar=" << fmt(s.orbit.qbar()) << " max=" << fmt(s.orbit.max_value())
              << " min=" << fmt(s.orbit.min_value()) << '\n';
    return kExitTrue;
  } catch (const std::invalid_argument&) {
    std::cout << "NonConvergence: alpha <= pi/2, no slowly oscillating cycle expected\n";
  } catch (const NonConvergence& e) {
    std::cout << "NonConvergence: " << e.what() << '\n';
  }
  return kExitNoVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify uniqueness of slowly oscillating periodic solutions of x'(t) = -a(e^{x(t-1)} - 1)"};
  app.require_subcommand(1);
  Manifest m;
  auto add_common = [&m](CLI::App* sub) {
    sub->add_option("--config", m.config, "JSON parameter file");
    sub->add_option("--out", m.out, "Output directory");
    sub->add_option("--jobs", m.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--alpha-lo", m.alpha_lo, "Override the lower end of the alpha range");
    sub->add_option("--alpha-hi", m.alpha_hi, "Override the upper end of the alpha range");
  };

  auto* prove = app.add_subcommand("prove", "Run the uniqueness proof over the configured alpha range");
  add_common(prove);
  auto* seed = app.add_subcommand("seed-check", "Check that no long-period region survives the seed stage");
  add_common(seed);
  SeedCheckOptions seed_opts;
  seed->add_option("--width", seed_opts.width, "Subinterval width");
  seed->add_option("--pieces", seed_opts.pieces, "Equal alpha pieces per subinterval");
  auto* report = app.add_subcommand("floquet-report", "Emit the multiplier-bound CSV from certificates in --out");
  add_common(report);
  auto* sim = app.add_subcommand("simulate", "Integrate numerically and write a trajectory CSV");
  add_common(sim);
  SimulateOptions sim_opts;
  sim->add_option("--alpha", sim_opts.alpha, "Parameter value (defaults to --alpha-lo)");
  sim->add_option("--horizon", sim_opts.horizon, "Final time");
  sim->add_option("--step", sim_opts.step, "Step size; must divide 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (prove->parsed()) {
      if (m.config.empty()) throw CliError{kExitUsage, "prove: --config is required"};
      return cmd_prove(m);
    }
    if (seed->parsed()) return cmd_seed_check(m, seed_opts);
    if (report->parsed()) return cmd_floquet_report(m);
    return cmd_simulate(m, sim_opts);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
}
