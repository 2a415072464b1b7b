#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthent/critical.hpp"
#include "orthent/manifold.hpp"

namespace orthent {

/// One row of the multistart ledger.
struct RunSummary {
  int run = 0;               // 0-based start index
  std::uint64_t seed = 0;    // mix_seed(master_seed, run)
  int iterations = 0;
  double entropy = 0.0;      // Shannon entropy at the endpoint
  double grad_norm = 0.0;    // final objective-gradient norm
  bool converged = false;
  bool stalled = false;
  std::string fingerprint;   // empty unless converged
};

/// A distinct critical point found by at least one converged run.
struct CatalogPoint {
  CriticalPointRecord record;  // measured at the best representative
  int hits = 0;                // converged runs landing on this fingerprint
  int first_run = 0;           // smallest run index among them
};

/// Result of a multistart search: every run, plus converged endpoints
/// deduplicated by canonical fingerprint. Points are sorted by entropy
/// (descending), ties broken by fingerprint string, so the catalog is a
/// deterministic function of (n, restarts, master_seed, config).
struct Catalog {
  int n = 0;
  int restarts = 0;
  std::uint64_t master_seed = 0;
  OptimizerConfig config;
  std::vector<RunSummary> runs;
  std::vector<CatalogPoint> points;
  int converged_count = 0;
  int stalled_count = 0;
};

/// Run `restarts` gradient ascents from Haar-random starting points (stream
/// seeds mix_seed(master_seed, i)), deduplicate converged endpoints by
/// fingerprint, and classify one representative per point (the endpoint with
/// the smallest gradient norm; ties → smallest run index). Representatives
/// that fail the classifier's stationarity gate (possible when alpha ≠ 1,
/// whose stationary points need not be entropy-stationary) are catalogued as
/// unclassified. Throws std::invalid_argument for n < 2, restarts ≤ 0, or a
/// config that fails check(); throws ValidationError if no run converges.
Catalog multistart_search(int n, int restarts, std::uint64_t master_seed,
                          const OptimizerConfig& config = {},
                          const ClassifyConfig& classify = {});

}  // namespace orthent
