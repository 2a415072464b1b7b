#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "orthent/manifold.hpp"
#include "orthent/matrix.hpp"

namespace orthent {

/// Finite-difference Hessian of the entropy restricted to O(n) at a
/// stationary point, in the orthonormal tangent basis E_pq/√2 implied by
/// strict-upper-triangle coordinates. dim = n(n−1)/2.
struct TangentHessian {
  int n = 0;
  int dim = 0;
  double step = 0.0;       // finite-difference step h
  Eigen::MatrixXd h;       // symmetrized dim × dim matrix
  double asymmetry = 0.0;  // max |H_pq − H_qp| before symmetrization
};

/// Central second differences of f(x) = H{retract(O, A(x), 1)}: diagonal
/// from the 3-point stencil, off-diagonal from the 4-point cross stencil.
/// Both (p,q) orderings are evaluated; the gap is reported as `asymmetry`
/// and averaged away. Throws std::invalid_argument for step ≤ 0.
TangentHessian riemannian_hessian(const OrthogonalMatrix& o, double step = 1e-4);

enum class Classification {
  kMaximum,
  kMinimum,
  kSaddle,
  kDegenerate,
  kUnclassified,
};

/// "maximum", "minimum", "saddle(k)" (k = number of ascent directions),
/// "degenerate", "unclassified".
std::string classification_string(Classification c, int index);

/// Up/down tallies of the entropy under random tangent perturbations of
/// fixed norm — a stencil-free cross-check of the eigenvalue signs.
struct ProbeStats {
  int count = 0;
  int increases = 0;  // H(probe) >  H(O)
  int decreases = 0;  // H(probe) <  H(O)
};

/// Everything classify_critical_point measures at one stationary point.
struct CriticalPointRecord {
  int n = 0;
  Eigen::MatrixXd matrix;
  double entropy = 0.0;
  double grad_norm = 0.0;          // Riemannian entropy-gradient norm
  Classification classification = Classification::kUnclassified;
  int index = 0;                   // positive eigenvalues (ascent directions)
  Eigen::VectorXd eigenvalues;     // ascending
  double hessian_asymmetry = 0.0;
  ProbeStats probes;
  bool non_smooth = false;         // some |entry| < 1e-3: FD stencil straddles
                                   // the |x| ln|x| cusp, eigenvalues are suspect
  CanonicalFingerprint fingerprint;
};

/// Knobs for classify_critical_point.
struct ClassifyConfig {
  double grad_tol = 1e-6;    // stationarity gate
  double zero_frac = 1e-4;   // |λ| ≤ zero_frac·max|λ| counts as zero
  double step = 1e-4;        // Hessian finite-difference step
  int probe_count = 200;
  double probe_norm = 1e-3;
  std::uint64_t probe_seed = 0x9E3779B97F4A7C15ull;  // fixed → reports deterministic
  double quantum = 1e-6;     // fingerprint quantum
};

/// Classify a stationary point of the entropy by the sign pattern of its
/// tangent Hessian. Throws ValidationError (reporting the measured gradient
/// norm) if ‖grad‖ > grad_tol. Classification: degenerate if any eigenvalue
/// sits within zero_frac·max|λ| of zero; otherwise maximum (all negative),
/// minimum (all positive), or saddle with index = #positive.
CriticalPointRecord classify_critical_point(const OrthogonalMatrix& o,
                                            const ClassifyConfig& config = {});

}  // namespace orthent
