#include "orthent/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace orthent {

namespace {

struct Group {
  int hits = 0;
  int first_run = 0;
  int best_run = 0;
  double best_gnorm = 0.0;
  Eigen::MatrixXd best_matrix;
};

// Fallback record for a converged endpoint the classifier rejects (possible
// for alpha ≠ 1, where stationarity of the power sum does not imply
// stationarity of the entropy): catalogue it honestly as unclassified.
CriticalPointRecord unclassified_record(const OrthogonalMatrix& o, double quantum) {
  CriticalPointRecord rec;
  rec.n = static_cast<int>(o.n());
  rec.matrix = o.mat();
  rec.entropy = entropy_value(o.mat());
  rec.grad_norm = tangent_project(o, euclidean_gradient(o.mat())).norm();
  rec.classification = Classification::kUnclassified;
  rec.eigenvalues = Eigen::VectorXd();
  rec.non_smooth = o.mat().cwiseAbs().minCoeff() < 1e-3;
  rec.fingerprint = canonical_fingerprint(o.mat(), quantum);
  return rec;
}

}  // namespace

Catalog multistart_search(int n, int restarts, std::uint64_t master_seed,
                          const OptimizerConfig& config, const ClassifyConfig& classify) {
  if (n < 2) throw std::invalid_argument("search dimension must be at least 2");
  if (restarts <= 0) throw std::invalid_argument("restart count must be positive");
  config.check();

  Catalog cat;
  cat.n = n;
  cat.restarts = restarts;
  cat.master_seed = master_seed;
  cat.config = config;
  cat.runs.reserve(restarts);

  std::map<std::string, Group> groups;
  for (int run = 0; run < restarts; ++run) {
    const std::uint64_t seed = mix_seed(master_seed, static_cast<std::uint64_t>(run));
    const RunReport rep = maximize_entropy(haar_random_orthogonal(n, seed), config);

    RunSummary summary;
    summary.run = run;
    summary.seed = seed;
    summary.iterations = rep.iterations;
    summary.entropy = rep.final_entropy;
    summary.grad_norm = rep.final_grad_norm;
    summary.converged = rep.converged;
    summary.stalled = rep.stalled;
    if (rep.converged) {
      ++cat.converged_count;
      const std::string key = canonical_fingerprint(rep.final_matrix, classify.quantum).to_string();
      summary.fingerprint = key;
      auto [it, fresh] = groups.try_emplace(key);
      Group& g = it->second;
      if (fresh) {
        g.first_run = run;
        g.best_run = run;
        g.best_gnorm = rep.final_grad_norm;
        g.best_matrix = rep.final_matrix;
      } else if (rep.final_grad_norm < g.best_gnorm) {
        g.best_run = run;
        g.best_gnorm = rep.final_grad_norm;
        g.best_matrix = rep.final_matrix;
      }
      ++g.hits;
    }
    if (rep.stalled) ++cat.stalled_count;
    cat.runs.push_back(std::move(summary));
  }

  if (cat.converged_count == 0)
    throw ValidationError("no run converged: every trajectory stalled or ran out of iterations");

  cat.points.reserve(groups.size());
  for (const auto& [key, g] : groups) {
    const OrthogonalMatrix rep_point = OrthogonalMatrix::validate(g.best_matrix);
    CatalogPoint point;
    try {
      point.record = classify_critical_point(rep_point, classify);
    } catch (const ValidationError&) {
      point.record = unclassified_record(rep_point, classify.quantum);
    }
    point.hits = g.hits;
    point.first_run = g.first_run;
    cat.points.push_back(std::move(point));
  }
  std::sort(cat.points.begin(), cat.points.end(), [](const CatalogPoint& a, const CatalogPoint& b) {
    if (a.record.entropy != b.record.entropy) return a.record.entropy > b.record.entropy;
    return a.record.fingerprint.to_string() < b.record.fingerprint.to_string();
  });
  return cat;
}

}  // namespace orthent
