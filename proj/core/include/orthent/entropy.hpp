#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orthent/matrix.hpp"

namespace orthent {

/// H{M} = −Σ_ij (M_ij)² ln (M_ij)², in nats. Zero entries contribute zero.
/// Terms are accumulated in sorted order, so the value is bitwise invariant
/// under row/column permutations, sign flips, and transposition.
double entropy_value(const Eigen::MatrixXd& m);

/// n·ln n — the least upper bound of the entropy over O(n), attained exactly
/// when every entry magnitude equals n^{-1/2}. Throws std::invalid_argument
/// for n ≤ 0.
double entropy_bound(int n);

/// Squared entries of an orthogonal matrix: each row and column of the
/// result is a probability vector (doubly stochastic matrix).
Eigen::MatrixXd row_probabilities(const OrthogonalMatrix& o);

/// Entropy of one orthogonal matrix with its per-row decomposition.
struct EntropyReport {
  int n = 0;
  double entropy = 0.0;                // H{O}
  double bound = 0.0;                  // n ln n
  double deficit = 0.0;                // bound − entropy (≥ 0 up to roundoff)
  std::vector<double> per_row;         // −Σ_j (O_ij)² ln (O_ij)², per row i
};

EntropyReport shannon_entropy(const OrthogonalMatrix& o);

/// Power sum H_a = Σ_ij ((O_ij)²)^a. Monotone diagnostic for the same
/// landscape: minimizing it for a > 1 (maximizing for a < 1) flattens the
/// magnitude profile. a = 1 returns n exactly (every row sums to 1).
/// Throws std::invalid_argument for a ≤ 0.
double renyi_power_sum(const OrthogonalMatrix& o, double alpha);

/// Euclidean gradient of entropy_value: G_ij = −2 M_ij (1 + ln (M_ij)²),
/// with G_ij = 0 where M_ij = 0 (the functional is flat along an axis at a
/// zero entry; the one-sided derivative diverges only in the ignored
/// normal direction).
Eigen::MatrixXd euclidean_gradient(const Eigen::MatrixXd& m);

/// First-order stationarity defect of the power-sum family on O(n):
/// R = S − Sᵀ with S_jl = Σ_i f(O_ij) O_il, f(x) = sign(x)|x|^{2a−1}
/// (f(0) = 0). For a = 1 the limiting form S_jl = Σ_i O_ij O_il ln (O_ij)²
/// is used. R vanishes exactly at critical points.
struct StationarityResidual {
  double alpha = 0.0;
  Eigen::MatrixXd r;    // antisymmetric by construction
  double max_abs = 0.0; // max |R_jl|
};

StationarityResidual stationarity_residual(const OrthogonalMatrix& o, double alpha);

}  // namespace orthent
