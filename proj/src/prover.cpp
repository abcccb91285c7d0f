#include "wright/prover.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "wright/prune.hpp"
#include "wright/seed.hpp"

namespace wright {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* const kIntFields[] = {"n_time", "i0", "j0", "n_period", "n_prune", "n_floquet", "m_floquet", "max_pushes"};

double* real_field(ProofConfig& c, const std::string& k) {
  if (k == "alpha_lo") return &c.alpha_lo;
  if (k == "alpha_hi") return &c.alpha_hi;
  if (k == "delta_alpha") return &c.delta_alpha;
  if (k == "eps1") return &c.eps1;
  if (k == "eps2") return &c.eps2;
  if (k == "wall_budget_seconds") return &c.wall_budget_seconds;
  return nullptr;
}

json config_json(const ProofConfig& c) {
  return json{{"alpha_lo", c.alpha_lo},   {"alpha_hi", c.alpha_hi},     {"delta_alpha", c.delta_alpha},
              {"eps1", c.eps1},           {"eps2", c.eps2},             {"n_time", c.n_time},
              {"i0", c.i0},               {"j0", c.j0},                 {"n_period", c.n_period},
              {"n_prune", c.n_prune},     {"n_floquet", c.n_floquet},   {"m_floquet", c.m_floquet},
              {"max_pushes", c.max_pushes}, {"wall_budget_seconds", c.wall_budget_seconds}};
}

bool box_less(const Region& a, const Region& b) {
  auto key = [](const Region& r) {
    return std::make_tuple(r.q().lo(), r.q().hi(), r.qbar().lo(), r.qbar().hi(), r.m().lo(), r.m().hi());
  };
  return key(a) < key(b);
}

json interval_json(const Interval& x) { return json::array({x.lo(), x.hi()}); }

Interval interval_from(const json& j) { return Interval(j.at(0).get<double>(), j.at(1).get<double>()); }

json extended(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double extended_from(const json& j) { return j.is_null() ? kInf : j.get<double>(); }

}  // namespace

void validate(const ProofConfig& c) {
  if (!(c.alpha_lo > half_pi().hi())) throw InvalidConfig("alpha_lo must exceed pi/2");
  if (!(c.alpha_hi >= c.alpha_lo) || !std::isfinite(c.alpha_hi)) throw InvalidConfig("alpha_hi must be >= alpha_lo");
  if (!(c.delta_alpha > 0)) throw InvalidConfig("delta_alpha must be positive");
  if (!(c.eps1 > 0) || !(c.eps2 > 0)) throw InvalidConfig("eps1 and eps2 must be positive");
  for (int v : {c.n_time, c.i0, c.j0, c.n_period, c.n_prune, c.n_floquet, c.m_floquet})
    if (v <= 0) throw InvalidConfig("integer parameters must be positive");
  if (c.max_pushes <= 0) throw InvalidConfig("max_pushes must be positive");
  if (!(c.wall_budget_seconds >= 0)) throw InvalidConfig("wall_budget_seconds must be >= 0");
}

ProofConfig table_row(int row) {
  ProofConfig c;
  switch (row) {
    case 1: c.alpha_lo = 1.90; c.alpha_hi = 1.96; c.delta_alpha = 0.01; c.n_time = 128; c.eps1 = 0.02; break;
    case 2: c.alpha_lo = 1.96; c.alpha_hi = 2.10; c.delta_alpha = 0.01; c.n_time = 64; c.eps1 = 0.05; break;
    case 3: c.alpha_lo = 2.10; c.alpha_hi = 6.00; c.delta_alpha = 0.1; c.n_time = 32; c.eps1 = 0.05; break;
    default: throw InvalidConfig("table row must be 1, 2 or 3");
  }
  c.eps2 = 0.25;
  return c;
}

std::string config_to_json(const ProofConfig& cfg) { return config_json(cfg).dump(); }

ProofConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidConfig(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidConfig("config must be a JSON object");
  if (!j.contains("alpha_lo") || !j.contains("alpha_hi")) throw InvalidConfig("config needs alpha_lo and alpha_hi");
  ProofConfig c;
  for (const auto& [key, val] : j.items()) {
    if (double* d = real_field(c, key)) {
      if (!val.is_number()) throw InvalidConfig("field " + key + " must be a number");
      *d = val.get<double>();
      continue;
    }
    if (std::find(std::begin(kIntFields), std::end(kIntFields), key) == std::end(kIntFields))
      throw InvalidConfig("unknown config field: " + key);
    if (!val.is_number_integer()) throw InvalidConfig("field " + key + " must be an integer");
    const auto v = val.get<std::int64_t>();
    if (key == "max_pushes") {
      c.max_pushes = v;
      continue;
    }
    if (v < 1 || v > 1'000'000) throw InvalidConfig("field " + key + " out of range");
    const int iv = static_cast<int>(v);
    if (key == "n_time") c.n_time = iv;
    else if (key == "i0") c.i0 = iv;
    else if (key == "j0") c.j0 = iv;
    else if (key == "n_period") c.n_period = iv;
    else if (key == "n_prune") c.n_prune = iv;
    else if (key == "n_floquet") c.n_floquet = iv;
    else c.m_floquet = iv;
  }
  validate(c);
  return c;
}

std::string config_hash(const ProofConfig& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : config_to_json(cfg)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Region> branch_and_prune(const Interval& alpha, const ProofConfig& cfg, int jobs,
                                     const PruneObserver& observer, PruneStats* stats) {
  validate(cfg);
  const auto t0 = Clock::now();
  const AprioriParams ap{cfg.i0, cfg.j0};

  std::mutex mu;
  std::condition_variable cv;
  std::vector<Region> stack = seed_pair(alpha, ap, cfg.n_time, cfg.n_period);
  std::vector<Region> terminal;
  std::int64_t pushes = static_cast<std::int64_t>(stack.size());
  std::int64_t discarded = 0;
  int active = 0;
  std::string abort_reason;
  std::mutex observe_mu;

  auto notify = [&](PruneEvent e, const Region& r) {
    if (!observer) return;
    std::lock_guard<std::mutex> g(observe_mu);
    observer(e, r);
  };

  auto worker = [&] {
    std::unique_lock<std::mutex> lk(mu);
    for (;;) {
      cv.wait(lk, [&] { return !abort_reason.empty() || !stack.empty() || active == 0; });
      if (!abort_reason.empty() || stack.empty()) break;
      if (cfg.wall_budget_seconds > 0 && seconds_since(t0) > cfg.wall_budget_seconds) {
        abort_reason = "wall-clock budget exceeded";
        cv.notify_all();
        break;
      }
      Region r = std::move(stack.back());
      stack.pop_back();
      ++active;
      lk.unlock();

      notify(PruneEvent::Popped, r);
      Pruned p = prune(r, cfg.n_prune);
      std::optional<std::pair<Region, Region>> halves;
      bool is_term = false;
      if (!p) {
        notify(PruneEvent::Discarded, r);
      } else {
        fit_domain(*p);
        is_term = is_terminal(*p, cfg.eps1, cfg.eps2) || diameter(*p) == 0.0;
        notify(is_term ? PruneEvent::Terminal : PruneEvent::Split, *p);
        if (!is_term) halves = subdivide(*p);
      }

      lk.lock();
      --active;
      if (!p) {
        ++discarded;
      } else if (is_term) {
        terminal.push_back(std::move(*p));
      } else {
        stack.push_back(std::move(halves->second));
        stack.push_back(std::move(halves->first));
        pushes += 2;
        if (pushes > cfg.max_pushes) abort_reason = "worklist push cap exceeded";
      }
      cv.notify_all();
    }
  };

  const int n_workers = std::max(1, jobs);
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n_workers; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (stats) *stats = {pushes, discarded};
  if (!abort_reason.empty()) throw ResourceLimit(abort_reason);
  std::sort(terminal.begin(), terminal.end(), box_less);
  return terminal;
}

bool RegionRecord::operator==(const RegionRecord& o) const {
  return q == o.q && qbar == o.qbar && m == o.m && outcome.kind == o.outcome.kind &&
         (outcome.lambda_max == o.outcome.lambda_max ||
          (std::isnan(outcome.lambda_max) && std::isnan(o.outcome.lambda_max))) &&
         outcome.outer_iterations == o.outcome.outer_iterations;
}

double ProofCertificate::lambda_max_worst() const {
  double w = 0.0;
  for (const auto& r : regions) w = std::max(w, r.outcome.lambda_max);
  return w;
}

std::vector<std::pair<FloquetKind, int>> ProofCertificate::outcome_histogram() const {
  std::vector<std::pair<FloquetKind, int>> h = {
      {FloquetKind::BoundedStable, 0}, {FloquetKind::StableByContradiction, 0}, {FloquetKind::Inconclusive, 0}};
  for (const auto& r : regions) ++h[static_cast<std::size_t>(r.outcome.kind)].second;
  return h;
}

ProofCertificate prove_interval(const Interval& alpha, const ProofConfig& cfg, int jobs) {
  const auto t0 = Clock::now();
  ProofCertificate cert;
  cert.alpha = alpha;
  cert.config_hash = config_hash(cfg);

  std::vector<Region> terminal;
  PruneStats stats;
  try {
    terminal = branch_and_prune(alpha, cfg, jobs, {}, &stats);
  } catch (const ResourceLimit& e) {
    cert.pushes = stats.pushes;
    cert.note = std::string("resource_limit: ") + e.what();
    cert.wall_seconds = seconds_since(t0);
    return cert;
  }
  cert.pushes = stats.pushes;

  std::vector<FloquetOutcome> outcomes(terminal.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < terminal.size();)
      outcomes[k] = floquet_bound(terminal[k], cfg.n_floquet, cfg.m_floquet);
  };
  const int n_workers = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, terminal.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n_workers; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool all_stable = true;
  for (std::size_t k = 0; k < terminal.size(); ++k) {
    cert.regions.push_back({terminal[k].q(), terminal[k].qbar(), terminal[k].m(), outcomes[k]});
    all_stable = all_stable && outcomes[k].kind != FloquetKind::Inconclusive;
  }
  cert.verdict = all_stable;
  if (terminal.empty()) cert.note = "empty_terminal_set";
  cert.wall_seconds = seconds_since(t0);
  return cert;
}

std::vector<Interval> partition(double lo, double hi, double delta) {
  if (!(delta > 0) || !(hi >= lo)) throw std::invalid_argument("partition: bad range");
  const long count = std::max(1L, std::lround((hi - lo) / delta));
  auto edge = [&](long k) {
    if (k == count) return hi;
    return std::nearbyint((lo + static_cast<double>(k) * delta) * 1e9) / 1e9;
  };
  std::vector<Interval> out;
  for (long k = 0; k < count; ++k) out.emplace_back(k == 0 ? lo : edge(k), edge(k + 1));
  return out;
}

SweepResult sweep(const ProofConfig& cfg, int jobs, const std::function<void(const ProofCertificate&)>& on_done) {
  validate(cfg);
  const std::vector<Interval> parts = partition(cfg.alpha_lo, cfg.alpha_hi, cfg.delta_alpha);
  SweepResult res;
  res.certificates.resize(parts.size());
  const int outer = std::clamp(jobs, 1, static_cast<int>(parts.size()));
  const int inner = std::max(1, jobs / outer);
  std::atomic<std::size_t> next{0};
  std::mutex done_mu;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < parts.size();) {
      ProofCertificate c = prove_interval(parts[k], cfg, inner);
      std::lock_guard<std::mutex> g(done_mu);
      if (on_done) on_done(c);
      res.certificates[k] = std::move(c);
    }
  };
  if (outer == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < outer; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::optional<bool> v = true;
  for (const auto& c : res.certificates) {
    if (!c.verdict) {
      v.reset();
      break;
    }
    v = *v && *c.verdict;
  }
  res.verdict = v;
  return res;
}

std::string certificate_to_json(const ProofCertificate& c, bool include_wall) {
  json regions = json::array();
  for (const auto& r : c.regions) {
    regions.push_back({{"q", interval_json(r.q)},
                       {"qbar", interval_json(r.qbar)},
                       {"m", interval_json(r.m)},
                       {"lambda_max", extended(r.outcome.lambda_max)},
                       {"kind", std::string(to_string(r.outcome.kind))},
                       {"outer_iterations", r.outcome.outer_iterations}});
  }
  json hist = json::object();
  for (const auto& [k, n] : c.outcome_histogram()) hist[std::string(to_string(k))] = n;
  json j = {{"alpha_lo", c.alpha.lo()},
            {"alpha_hi", c.alpha.hi()},
            {"verdict", c.verdict ? json(*c.verdict) : json(nullptr)},
            {"region_count", c.regions.size()},
            {"lambda_max_worst", extended(c.lambda_max_worst())},
            {"outcome_histogram", hist},
            {"config_hash", c.config_hash},
            {"pushes", c.pushes},
            {"note", c.note},
            {"regions", regions}};
  if (include_wall) j["wall_seconds"] = c.wall_seconds;
  return j.dump();
}

ProofCertificate certificate_from_json(const std::string& line) {
  const json j = json::parse(line);
  ProofCertificate c;
  c.alpha = Interval(j.at("alpha_lo").get<double>(), j.at("alpha_hi").get<double>());
  if (!j.at("verdict").is_null()) c.verdict = j.at("verdict").get<bool>();
  c.note = j.value("note", "");
  c.wall_seconds = j.value("wall_seconds", 0.0);
  c.config_hash = j.at("config_hash").get<std::string>();
  c.pushes = j.value("pushes", std::int64_t{0});
  for (const auto& r : j.at("regions")) {
    FloquetOutcome o{floquet_kind_from_string(r.at("kind").get<std::string>()), extended_from(r.at("lambda_max")),
                     r.at("outer_iterations").get<int>()};
    c.regions.push_back({interval_from(r.at("q")), interval_from(r.at("qbar")), interval_from(r.at("m")), o});
  }
  return c;
}

}  // namespace wright
