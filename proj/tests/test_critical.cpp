#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <set>

#include "orthent/critical.hpp"
#include "orthent/report.hpp"
#include "orthent/search.hpp"
#include "support.hpp"

using namespace orthent;
using testing::max_abs_diff;

namespace {

OrthogonalMatrix saddle3() {
  return OrthogonalMatrix::validate(testing::saddle_matrix_3());
}

}  // namespace

TEST_CASE("riemannian_hessian: 1x1 negative curvature at the 2x2 peak") {
  const TangentHessian h = riemannian_hessian(rescaled_hadamard(1));
  REQUIRE(h.dim == 1);
  CHECK(h.n == 2);
  CHECK(h.step == 1e-4);
  // f(θ) = −2(c² ln c² + s² ln s²) has f''(π/4) = −8 exactly.
  CHECK(h.h(0, 0) == doctest::Approx(-8.0).epsilon(1e-6));
  CHECK_THROWS_AS(static_cast<void>(riemannian_hessian(rescaled_hadamard(1), 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(riemannian_hessian(rescaled_hadamard(1), -1e-4)),
                  std::invalid_argument);
}

TEST_CASE("riemannian_hessian: definite at the 3x3 maximum, indefinite at the saddle") {
  const TangentHessian at_max = riemannian_hessian(family_matrix(3));
  REQUIRE(at_max.dim == 3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(at_max.h);
  CHECK(solver.eigenvalues().maxCoeff() < 0.0);
  CHECK(max_abs_diff(at_max.h, at_max.h.transpose()) == 0.0);  // symmetrized exactly
  CHECK(at_max.asymmetry <= 1e-3 * at_max.h.cwiseAbs().maxCoeff());

  const TangentHessian at_saddle = riemannian_hessian(saddle3());
  solver.compute(at_saddle.h);
  CHECK(solver.eigenvalues().minCoeff() < 0.0);
  CHECK(solver.eigenvalues().maxCoeff() > 0.0);
  CHECK(at_saddle.asymmetry <= 1e-3 * at_saddle.h.cwiseAbs().maxCoeff());
}

TEST_CASE("classify_critical_point: the 3x3 two-magnitude matrix is a maximum") {
  const CriticalPointRecord rec = classify_critical_point(family_matrix(3));
  CHECK(rec.classification == Classification::kMaximum);
  CHECK(classification_string(rec.classification, rec.index) == "maximum");
  CHECK(rec.index == 0);
  CHECK(rec.n == 3);
  CHECK(rec.grad_norm <= 1e-8);
  CHECK(rec.entropy == doctest::Approx(2.8948887690222831).epsilon(1e-14));
  CHECK(rec.eigenvalues.size() == 3);
  CHECK(rec.eigenvalues.maxCoeff() < 0.0);
  CHECK_FALSE(rec.non_smooth);  // smallest magnitude is 1/3
  // Sharp, isolated peak: every perturbation loses entropy.
  CHECK(rec.probes.count == 200);
  CHECK(rec.probes.increases == 0);
  CHECK(rec.probes.decreases == 200);
}

TEST_CASE("classify_critical_point: the identity is the minimum") {
  const CriticalPointRecord rec =
      classify_critical_point(OrthogonalMatrix::validate(Eigen::MatrixXd::Identity(3, 3)));
  CHECK(rec.classification == Classification::kMinimum);
  CHECK(classification_string(rec.classification, rec.index) == "minimum");
  CHECK(rec.index == 3);  // index = dim
  CHECK(rec.entropy == 0.0);
  CHECK(rec.non_smooth);  // zero entries: curvature values are step-sensitive
  CHECK(rec.probes.increases == 200);
  CHECK(rec.probes.decreases == 0);
}

TEST_CASE("classify_critical_point: the 3x3 saddle has mixed signs everywhere") {
  const CriticalPointRecord rec = classify_critical_point(saddle3());
  CHECK(rec.classification == Classification::kSaddle);
  CHECK(rec.index > 0);
  CHECK(rec.index < 3);
  CHECK(classification_string(rec.classification, rec.index) ==
        "saddle(" + std::to_string(rec.index) + ")");
  CHECK(rec.entropy == doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(rec.eigenvalues.minCoeff() < 0.0);
  CHECK(rec.eigenvalues.maxCoeff() > 0.0);
  CHECK(rec.non_smooth);  // the center entry is zero
  CHECK(rec.probes.increases > 0);
  CHECK(rec.probes.decreases > 0);
  CHECK(rec.probes.increases + rec.probes.decreases <= rec.probes.count);
}

TEST_CASE("classify_critical_point rejects non-stationary points") {
  CHECK_THROWS_WITH_AS(
      static_cast<void>(classify_critical_point(haar_random_orthogonal(3, 500))),
      doctest::Contains("not stationary"), ValidationError);
  ClassifyConfig bad;
  bad.zero_frac = 1.5;
  CHECK_THROWS_AS(static_cast<void>(classify_critical_point(family_matrix(3), bad)),
                  std::invalid_argument);
}

TEST_CASE("classification is invariant under signed permutations") {
  const CriticalPointRecord base = classify_critical_point(family_matrix(4));

  // Signed permutation on both sides: swap rows, flip a column's sign.
  Eigen::MatrixXd m = family_matrix(4).mat();
  m.row(0).swap(m.row(2));
  m.col(3) = -m.col(3);
  m.col(1).swap(m.col(0));
  const CriticalPointRecord moved =
      classify_critical_point(OrthogonalMatrix::validate(m));

  CHECK(moved.classification == base.classification);
  CHECK(moved.index == base.index);
  CHECK(moved.entropy == base.entropy);  // bitwise: sorted accumulation
  CHECK(moved.fingerprint == base.fingerprint);
}

TEST_CASE("classified maxima repel all probes at every landmark") {
  for (const auto& o : {family_matrix(5), rescaled_hadamard(2)}) {
    const CriticalPointRecord rec = classify_critical_point(o);
    CHECK(rec.classification == Classification::kMaximum);
    CHECK(rec.probes.increases == 0);
    CHECK(rec.probes.decreases == rec.probes.count);
  }
}

TEST_CASE("multistart_search catalogues the n=2 landscape") {
  const Catalog cat = multistart_search(2, 10, 42);
  CHECK(cat.n == 2);
  CHECK(cat.restarts == 10);
  CHECK(cat.master_seed == 42);
  REQUIRE(cat.runs.size() == 10);
  CHECK(cat.converged_count == 10);
  CHECK(cat.stalled_count == 0);
  REQUIRE(cat.points.size() == 1);
  const CatalogPoint& top = cat.points.front();
  CHECK(top.record.classification == Classification::kMaximum);
  CHECK(top.record.entropy == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(top.hits == 10);
  CHECK(top.first_run == 0);
}

TEST_CASE("multistart_search bookkeeping is consistent with its runs") {
  const Catalog cat = multistart_search(3, 25, 7);
  REQUIRE(cat.runs.size() == 25);

  int converged = 0;
  for (const RunSummary& r : cat.runs) {
    CHECK(r.seed == mix_seed(7, r.run));
    if (r.converged) {
      ++converged;
      CHECK_FALSE(r.fingerprint.empty());
      CHECK(r.grad_norm <= cat.config.grad_tol);
    } else {
      CHECK(r.fingerprint.empty());
    }
  }
  CHECK(converged == cat.converged_count);

  int hits = 0;
  std::set<std::string> fps;
  double prev_entropy = std::numeric_limits<double>::infinity();
  for (const CatalogPoint& p : cat.points) {
    hits += p.hits;
    CHECK(fps.insert(p.record.fingerprint.to_string()).second);  // unique
    CHECK(p.record.entropy <= prev_entropy);                     // sorted descending
    prev_entropy = p.record.entropy;
    // first_run is the earliest converged run with this fingerprint.
    int earliest = -1;
    for (const RunSummary& r : cat.runs)
      if (r.converged && r.fingerprint == p.record.fingerprint.to_string()) {
        earliest = r.run;
        break;
      }
    CHECK(p.first_run == earliest);
  }
  CHECK(hits == cat.converged_count);
}

TEST_CASE("multistart_search is deterministic end to end") {
  const Catalog a = multistart_search(3, 20, 99);
  const Catalog b = multistart_search(3, 20, 99);
  CHECK(catalog_json(a) == catalog_json(b));  // byte-for-byte
}

TEST_CASE("multistart_search catalogues unclassifiable endpoints honestly") {
  // An impossible stationarity gate forces the classifier to reject every
  // representative; the catalog must fall back to 'unclassified' rather
  // than misreport or drop the point.
  // (n=2 would not do here: its single skew coordinate can cancel to an
  // exact 0.0 gradient norm, which no positive gate rejects.)
  ClassifyConfig impossible;
  impossible.grad_tol = 1e-30;
  const Catalog cat = multistart_search(3, 5, 4, OptimizerConfig{}, impossible);
  REQUIRE(cat.points.size() >= 1);
  for (const CatalogPoint& p : cat.points) {
    CHECK(p.record.classification == Classification::kUnclassified);
    CHECK(classification_string(p.record.classification, p.record.index) == "unclassified");
    CHECK(p.record.eigenvalues.size() == 0);
  }
}

TEST_CASE("multistart_search input validation and total failure") {
  CHECK_THROWS_AS(static_cast<void>(multistart_search(1, 5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(multistart_search(3, 0, 0)), std::invalid_argument);
  OptimizerConfig strangled;
  strangled.max_iters = 1;
  CHECK_THROWS_AS(static_cast<void>(multistart_search(3, 3, 5, strangled)), ValidationError);
}
