#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orthent/entropy.hpp"
#include "orthent/matrix.hpp"

namespace orthent {

/// A tangent vector to O(n) at a point O, stored in the Lie algebra as a
/// skew-symmetric matrix A (the tangent vector itself is O·A). Antisymmetry
/// holds exactly as stored: A(j,i) is the negation of A(i,j) bit for bit.
class TangentDirection {
 public:
  /// Zero direction at dimension n.
  static TangentDirection zero(Eigen::Index n);

  /// Skew part (M − Mᵀ)/2, built entrywise so A + Aᵀ = 0 exactly.
  static TangentDirection skew_part(const Eigen::MatrixXd& m);

  /// Rebuild from strict-upper-triangle coordinates, row-major:
  /// (0,1), (0,2), …, (0,n−1), (1,2), …
  static TangentDirection from_coords(Eigen::Index n, const Eigen::VectorXd& x);

  const Eigen::MatrixXd& mat() const { return a_; }
  Eigen::Index n() const { return a_.rows(); }
  /// Strict-upper-triangle coordinates (see from_coords).
  Eigen::VectorXd coords() const;
  /// Frobenius norm of A — the Riemannian norm of O·A in the metric
  /// inherited from the embedding.
  double norm() const { return a_.norm(); }

 private:
  explicit TangentDirection(Eigen::MatrixXd a) : a_(std::move(a)) {}
  Eigen::MatrixXd a_;
};

/// Riemannian gradient direction at O for a Euclidean gradient G:
/// A = skew(Oᵀ G). The ascent curve is t ↦ retract(O, A, t).
TangentDirection tangent_project(const OrthogonalMatrix& o, const Eigen::MatrixXd& euclidean_grad);

/// Cayley retraction O·(I − tA/2)^{-1}(I + tA/2) — exactly orthogonal in
/// exact arithmetic for skew A, never singular. The result is re-certified
/// at tolerance 1e-12; if roundoff pushed it past that, it is
/// re-orthonormalized by QR (sign-corrected) and certified again.
/// t = 0 returns O unchanged. Throws std::invalid_argument for non-finite t.
OrthogonalMatrix retract(const OrthogonalMatrix& o, const TangentDirection& a, double t);

/// Gradient-ascent parameters. All fields validated by check().
struct OptimizerConfig {
  double alpha = 1.0;         // 1 → entropy; a<1 maximize / a>1 minimize power sum
  int max_iters = 10000;
  double grad_tol = 1e-10;    // stop when ‖skew(OᵀG)‖_F ≤ grad_tol
  double step_init = 1.0;     // t tried first each iteration
  double armijo_c = 1e-4;     // sufficient-increase fraction
  double armijo_shrink = 0.5; // backtracking factor

  /// Throws std::invalid_argument on any out-of-range field (alpha ≤ 0,
  /// max_iters ≤ 0, grad_tol ≤ 0, step_init ≤ 0, armijo_c ∉ (0,1),
  /// armijo_shrink ∉ (0,1)).
  void check() const;
};

/// One gradient-ascent trajectory.
struct RunReport {
  Eigen::MatrixXd final_matrix;
  double final_entropy = 0.0;    // Shannon entropy at the endpoint (any alpha)
  double final_objective = 0.0;  // the objective actually ascended
  double final_grad_norm = 0.0;  // Riemannian gradient norm of that objective
  int iterations = 0;            // accepted steps
  bool converged = false;        // final_grad_norm ≤ grad_tol
  bool stalled = false;          // line search hit the minimum step first
  std::vector<double> objective_trace;  // objective after 0,1,2,… steps; nondecreasing
};

/// Riemannian gradient ascent with backtracking line search. For
/// alpha = 1 the objective is the entropy; otherwise the power sum H_a,
/// negated for alpha > 1 so ascent always flattens the magnitude profile.
///
/// Line search: Armijo sufficient increase while objective differences are
/// resolvable in double precision, then (near the critical point, where the
/// per-step gain drowns in roundoff) steps are accepted when the objective
/// does not decrease beyond 2 ulp AND the gradient norm strictly drops.
/// A run that cannot find an acceptable step above t = 1e-16 stops with
/// stalled = true.
RunReport maximize_entropy(const OrthogonalMatrix& start, const OptimizerConfig& config = {});

}  // namespace orthent
