#include "orthent/critical.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "format_util.hpp"

namespace orthent {

TangentHessian riemannian_hessian(const OrthogonalMatrix& o, double step) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw std::invalid_argument("finite-difference step must be positive and finite");
  const int n = static_cast<int>(o.n());
  const int dim = n * (n - 1) / 2;
  const double h = step;

  const auto feval = [&](const Eigen::VectorXd& x) {
    return entropy_value(retract(o, TangentDirection::from_coords(n, x), 1.0).mat());
  };
  const double f0 = entropy_value(o.mat());

  TangentHessian out;
  out.n = n;
  out.dim = dim;
  out.step = step;
  out.h = Eigen::MatrixXd::Zero(dim, dim);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
  for (int p = 0; p < dim; ++p) {
    x[p] = h;
    const double fp = feval(x);
    x[p] = -h;
    const double fm = feval(x);
    x[p] = 0.0;
    out.h(p, p) = (fp - 2.0 * f0 + fm) / (h * h);
  }

  // Off-diagonal cross stencil, each ordered pair evaluated on its own so a
  // genuine asymmetry (stencil bias, non-smoothness) is visible before we
  // average it away.
  const auto cross = [&](int p, int q) {
    x[p] = h;
    x[q] = h;
    const double fpp = feval(x);
    x[q] = -h;
    const double fpm = feval(x);
    x[p] = -h;
    x[q] = h;
    const double fmp = feval(x);
    x[q] = -h;
    const double fmm = feval(x);
    x[p] = 0.0;
    x[q] = 0.0;
    return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
  };
  double asym = 0.0;
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) {
      const double hpq = cross(p, q);
      const double hqp = cross(q, p);
      asym = std::max(asym, std::abs(hpq - hqp));
      const double mean = (hpq + hqp) / 2.0;
      out.h(p, q) = mean;
      out.h(q, p) = mean;
    }
  out.asymmetry = asym;
  return out;
}

std::string classification_string(Classification c, int index) {
  switch (c) {
    case Classification::kMaximum:
      return "maximum";
    case Classification::kMinimum:
      return "minimum";
    case Classification::kSaddle:
      return "saddle(" + std::to_string(index) + ")";
    case Classification::kDegenerate:
      return "degenerate";
    case Classification::kUnclassified:
      return "unclassified";
  }
  return "unclassified";
}

CriticalPointRecord classify_critical_point(const OrthogonalMatrix& o,
                                            const ClassifyConfig& config) {
  if (!(config.grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be positive");
  if (!(config.zero_frac >= 0.0) || !(config.zero_frac < 1.0))
    throw std::invalid_argument("zero_frac must lie in [0, 1)");
  if (config.probe_count < 0) throw std::invalid_argument("probe_count must be nonnegative");
  if (!(config.probe_norm > 0.0)) throw std::invalid_argument("probe_norm must be positive");

  const double gnorm = tangent_project(o, euclidean_gradient(o.mat())).norm();
  if (gnorm > config.grad_tol) {
    std::ostringstream os;
    os << "point is not stationary: gradient norm " << detail::fmt_g17(gnorm)
       << " exceeds tolerance " << detail::fmt_g17(config.grad_tol);
    throw ValidationError(os.str());
  }

  CriticalPointRecord rec;
  rec.n = static_cast<int>(o.n());
  rec.matrix = o.mat();
  rec.entropy = entropy_value(o.mat());
  rec.grad_norm = gnorm;
  rec.fingerprint = canonical_fingerprint(o.mat(), config.quantum);
  rec.non_smooth = o.mat().cwiseAbs().minCoeff() < 1e-3;

  const TangentHessian hess = riemannian_hessian(o, config.step);
  rec.hessian_asymmetry = hess.asymmetry;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hess.h);
  rec.eigenvalues = solver.eigenvalues();  // ascending
  const int dim = hess.dim;

  const double ev_scale = dim > 0 ? rec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  const double zero_band = config.zero_frac * ev_scale;
  bool degenerate = false;
  int positive = 0;
  for (int i = 0; i < dim; ++i) {
    if (std::abs(rec.eigenvalues[i]) <= zero_band) degenerate = true;
    if (rec.eigenvalues[i] > 0.0) ++positive;
  }
  rec.index = positive;
  if (degenerate)
    rec.classification = Classification::kDegenerate;
  else if (positive == 0)
    rec.classification = Classification::kMaximum;
  else if (positive == dim)
    rec.classification = Classification::kMinimum;
  else
    rec.classification = Classification::kSaddle;

  // Stencil-free corroboration: sample fixed-norm tangent perturbations and
  // tally which side of the base entropy they land on.
  rec.probes.count = dim > 0 ? config.probe_count : 0;
  if (dim > 0 && config.probe_count > 0) {
    std::mt19937_64 eng(config.probe_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double e0 = rec.entropy;
    for (int k = 0; k < config.probe_count; ++k) {
      Eigen::VectorXd x(dim);
      for (int i = 0; i < dim; ++i) x[i] = gauss(eng);
      // ‖A(x)‖_F = √2‖x‖₂, so scale coordinates to land on probe_norm.
      const double xnorm = x.norm();
      if (xnorm == 0.0) continue;
      x *= config.probe_norm / (std::sqrt(2.0) * xnorm);
      const double e1 =
          entropy_value(retract(o, TangentDirection::from_coords(rec.n, x), 1.0).mat());
      if (e1 > e0)
        ++rec.probes.increases;
      else if (e1 < e0)
        ++rec.probes.decreases;
    }
  }
  return rec;
}

}  // namespace orthent
