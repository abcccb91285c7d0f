#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wright/floquet.hpp"
#include "wright/region.hpp"

namespace wright {

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ProofConfig {
  double alpha_lo = 0;
  double alpha_hi = 0;
  double delta_alpha = 0.1;
  double eps1 = 0.05;
  double eps2 = 0.25;
  int n_time = 32;
  int i0 = 2;
  int j0 = 20;
  int n_period = 10;
  int n_prune = 4;
  int n_floquet = 20;
  int m_floquet = 5;
  // Resource caps; exceeding either yields a certificate without a verdict.
  std::int64_t max_pushes = 1'000'000;
  double wall_budget_seconds = 0;  // 0: unlimited
};

/// Throws InvalidConfig unless alpha_lo > pi/2, alpha_hi >= alpha_lo,
/// delta_alpha, eps1, eps2 > 0 and every count is positive.
void validate(const ProofConfig& cfg);

/// Preset parameter rows (1-based). Row 1 covers
/// [1.90, 1.96], row 2 [1.96, 2.10], row 3 [2.10, 6.00].
ProofConfig table_row(int row);

/// Config as a JSON object with exactly the field names above.
std::string config_to_json(const ProofConfig& cfg);
/// Parses a JSON object; unknown keys, wrong types and invalid values throw
/// InvalidConfig. Missing fields keep their defaults except alpha_lo/alpha_hi.
ProofConfig config_from_json(const std::string& text);
/// FNV-1a 64 of the canonical JSON form, as 16 hex digits.
std::string config_hash(const ProofConfig& cfg);

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PruneEvent { Popped, Discarded, Terminal, Split };

/// Called for each worklist event with the region as it stands at that point
/// (after pruning for Discarded/Terminal/Split, before it for Popped).
/// Discarded reports the region before the failing prune.
using PruneObserver = std::function<void(PruneEvent, const Region&)>;

struct PruneStats {
  std::int64_t pushes = 0;
  std::int64_t discarded = 0;
};

/// Worklist branch and prune from seed_pair(alpha). The returned terminal
/// set is sorted by box coordinates. Throws ResourceLimit when a cap is hit.
std::vector<Region> branch_and_prune(const Interval& alpha, const ProofConfig& cfg, int jobs = 1,
                                     const PruneObserver& observer = {}, PruneStats* stats = nullptr);

struct RegionRecord {
  Interval q;
  Interval qbar;
  Interval m;
  FloquetOutcome outcome;

  bool operator==(const RegionRecord& o) const;
};

struct ProofCertificate {
  Interval alpha;
  std::vector<RegionRecord> regions;
  std::optional<bool> verdict;  // nullopt: no verdict (resource limit)
  std::string note;             // "", "resource_limit: ...", or "empty_terminal_set"
  double wall_seconds = 0;
  std::string config_hash;
  std::int64_t pushes = 0;

  [[nodiscard]] double lambda_max_worst() const;
  /// Counts per outcome kind, in enum order.
  [[nodiscard]] std::vector<std::pair<FloquetKind, int>> outcome_histogram() const;
};

/// Branch and prune followed by the Floquet bound on every terminal region.
ProofCertificate prove_interval(const Interval& alpha, const ProofConfig& cfg, int jobs = 1);

/// Closed, endpoint-sharing subintervals of [alpha_lo, alpha_hi] of width
/// about delta_alpha; endpoints are rounded to 9 decimals.
std::vector<Interval> partition(double lo, double hi, double delta);

struct SweepResult {
  std::vector<ProofCertificate> certificates;  // in ascending alpha order
  std::optional<bool> verdict;                 // AND over subintervals, nullopt if any lacks one
};

/// Proves each subinterval independently; jobs workers share the subintervals.
/// on_done is called from one thread at a time as certificates complete.
SweepResult sweep(const ProofConfig& cfg, int jobs = 1,
                  const std::function<void(const ProofCertificate&)>& on_done = {});

/// One JSON line. Infinite lambda values serialize as null.
std::string certificate_to_json(const ProofCertificate& c, bool include_wall = true);
ProofCertificate certificate_from_json(const std::string& line);

}  // namespace wright
