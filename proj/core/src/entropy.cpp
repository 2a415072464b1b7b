#include "orthent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace orthent {

namespace {

// −x² ln x², continuously extended by 0 at x = 0.
double entropy_term(double x) {
  const double p = x * x;
  return p > 0.0 ? -p * std::log(p) : 0.0;
}

// Accumulate in ascending value order: the result depends only on the
// multiset of terms, so any symmetry that permutes entries (possibly
// flipping signs) leaves the sum bitwise unchanged.
double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  return std::accumulate(terms.begin(), terms.end(), 0.0);
}

}  // namespace

double entropy_value(const Eigen::MatrixXd& m) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) terms.push_back(entropy_term(m(i, j)));
  return sorted_sum(terms);
}

double entropy_bound(int n) {
  if (n <= 0) throw std::invalid_argument("dimension must be positive");
  return n * std::log(static_cast<double>(n));
}

Eigen::MatrixXd row_probabilities(const OrthogonalMatrix& o) {
  return o.mat().array().square();
}

EntropyReport shannon_entropy(const OrthogonalMatrix& o) {
  const Eigen::MatrixXd& m = o.mat();
  EntropyReport report;
  report.n = static_cast<int>(o.n());
  report.entropy = entropy_value(m);
  report.bound = entropy_bound(report.n);
  report.deficit = report.bound - report.entropy;
  report.per_row.reserve(report.n);
  std::vector<double> terms(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) terms[j] = entropy_term(m(i, j));
    report.per_row.push_back(sorted_sum(terms));
  }
  return report;
}

double renyi_power_sum(const OrthogonalMatrix& o, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("exponent must be positive and finite");
  const Eigen::MatrixXd& m = o.mat();
  // At a = 1 every squared row sums to 1 by orthogonality: the power sum is
  // n exactly, so return it exactly.
  if (alpha == 1.0) return static_cast<double>(o.n());
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      terms.push_back(std::pow(m(i, j) * m(i, j), alpha));
  return sorted_sum(terms);
}

Eigen::MatrixXd euclidean_gradient(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd g(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = m(i, j);
      g(i, j) = x == 0.0 ? 0.0 : -2.0 * x * (1.0 + std::log(x * x));
    }
  return g;
}

StationarityResidual stationarity_residual(const OrthogonalMatrix& o, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("exponent must be positive and finite");
  const Eigen::MatrixXd& m = o.mat();
  const Eigen::Index n = o.n();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  if (alpha == 1.0) {
    // Limiting form of the first-order condition: pairs with a zero entry
    // contribute nothing (the x² ln x² slope vanishes with x).
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index l = 0; l < n; ++l) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const double xj = m(i, j);
          if (xj != 0.0) acc += xj * m(i, l) * std::log(xj * xj);
        }
        s(j, l) = acc;
      }
  } else {
    // f(x) = sign(x)|x|^{2a−1} — the derivative of (x²)^a up to the factor 2a.
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index l = 0; l < n; ++l) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const double xj = m(i, j);
          if (xj != 0.0) acc += std::pow(xj * xj, alpha - 1.0) * xj * m(i, l);
        }
        s(j, l) = acc;
      }
  }
  StationarityResidual res;
  res.alpha = alpha;
  res.r = s - s.transpose();  // antisymmetric bit for bit
  res.max_abs = res.r.cwiseAbs().maxCoeff();
  return res;
}

}  // namespace orthent
