#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "orthent/matrix.hpp"

namespace orthent::testing {

/// The 3×3 saddle point: rows (1/2, 1/√2, 1/2), (1/√2, 0, −1/√2),
/// (1/2, −1/√2, 1/2). Entropy 4 ln 2, one zero entry.
inline Eigen::MatrixXd saddle_matrix_3() {
  const double r = std::sqrt(0.5);
  Eigen::MatrixXd m(3, 3);
  m << 0.5, r, 0.5,
       r, 0.0, -r,
       0.5, -r, 0.5;
  return m;
}

/// Largest absolute entrywise difference.
inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace orthent::testing
