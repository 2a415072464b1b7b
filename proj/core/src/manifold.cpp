#include "orthent/manifold.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace orthent {

namespace {

constexpr double kMinStep = 1e-16;
constexpr double kRetractTol = 1e-12;

Eigen::MatrixXd orthonormalized(const Eigen::MatrixXd& m) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
  const Eigen::MatrixXd r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace

TangentDirection TangentDirection::zero(Eigen::Index n) {
  return TangentDirection(Eigen::MatrixXd::Zero(n, n));
}

TangentDirection TangentDirection::skew_part(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("skew part needs a square matrix");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double v = (m(i, j) - m(j, i)) / 2.0;
      a(i, j) = v;
      a(j, i) = -v;  // negation is exact: A + Aᵀ = 0 holds bit for bit
    }
  return TangentDirection(std::move(a));
}

TangentDirection TangentDirection::from_coords(Eigen::Index n, const Eigen::VectorXd& x) {
  if (x.size() != n * (n - 1) / 2)
    throw std::invalid_argument("coordinate vector length must be n(n-1)/2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = x[k];
      a(j, i) = -x[k];
      ++k;
    }
  return TangentDirection(std::move(a));
}

Eigen::VectorXd TangentDirection::coords() const {
  const Eigen::Index n = a_.rows();
  Eigen::VectorXd x(n * (n - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) x[k++] = a_(i, j);
  return x;
}

TangentDirection tangent_project(const OrthogonalMatrix& o, const Eigen::MatrixXd& euclidean_grad) {
  if (euclidean_grad.rows() != o.n() || euclidean_grad.cols() != o.n())
    throw std::invalid_argument("gradient shape does not match the base point");
  return TangentDirection::skew_part(o.mat().transpose() * euclidean_grad);
}

OrthogonalMatrix retract(const OrthogonalMatrix& o, const TangentDirection& a, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("retraction parameter must be finite");
  if (a.n() != o.n()) throw std::invalid_argument("direction shape does not match the base point");
  if (t == 0.0) return o;
  const Eigen::Index n = o.n();
  const Eigen::MatrixXd b = (t / 2.0) * a.mat();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  // (I − B) with B skew has singular values ≥ 1: the solve is always
  // well-conditioned, so the Cayley map itself cannot blow up.
  const Eigen::MatrixXd cayley = (eye - b).partialPivLu().solve(eye + b);
  Eigen::MatrixXd moved = o.mat() * cayley;
  try {
    return OrthogonalMatrix::validate(moved, kRetractTol);
  } catch (const ValidationError&) {
    return OrthogonalMatrix::validate(orthonormalized(moved), kRetractTol);
  }
}

void OptimizerConfig::check() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be positive and finite");
  if (max_iters <= 0) throw std::invalid_argument("max_iters must be positive");
  if (!(grad_tol > 0.0) || !std::isfinite(grad_tol))
    throw std::invalid_argument("grad_tol must be positive and finite");
  if (!(step_init > 0.0) || !std::isfinite(step_init))
    throw std::invalid_argument("step_init must be positive and finite");
  if (!(armijo_c > 0.0) || !(armijo_c < 1.0))
    throw std::invalid_argument("armijo_c must lie in (0, 1)");
  if (!(armijo_shrink > 0.0) || !(armijo_shrink < 1.0))
    throw std::invalid_argument("armijo_shrink must lie in (0, 1)");
}

namespace {

// Euclidean gradient of the ascended objective: entropy at alpha = 1,
// otherwise ±H_a (sign chosen so ascent flattens the magnitude profile).
Eigen::MatrixXd objective_gradient(const Eigen::MatrixXd& m, double alpha) {
  if (alpha == 1.0) return euclidean_gradient(m);
  const double sign = alpha < 1.0 ? 1.0 : -1.0;
  Eigen::MatrixXd g(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = m(i, j);
      g(i, j) = x == 0.0 ? 0.0 : sign * 2.0 * alpha * std::pow(x * x, alpha - 1.0) * x;
    }
  return g;
}

double objective_value(const OrthogonalMatrix& o, double alpha) {
  if (alpha == 1.0) return entropy_value(o.mat());
  return alpha < 1.0 ? renyi_power_sum(o, alpha) : -renyi_power_sum(o, alpha);
}

}  // namespace

RunReport maximize_entropy(const OrthogonalMatrix& start, const OptimizerConfig& config) {
  config.check();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double alpha = config.alpha;

  OrthogonalMatrix cur = start;
  double best = objective_value(cur, alpha);  // running max over accepted points
  TangentDirection dir = tangent_project(cur, objective_gradient(cur.mat(), alpha));
  double gnorm = dir.norm();

  RunReport rep;
  rep.objective_trace.reserve(static_cast<std::size_t>(config.max_iters) + 1);
  rep.objective_trace.push_back(best);

  int iters = 0;
  bool stalled = false;
  while (iters < config.max_iters && gnorm > config.grad_tol) {
    const double g2 = gnorm * gnorm;
    const double scale = std::max(1.0, std::abs(best));
    const double noise_floor = 64.0 * eps * scale;  // objective gains below this drown in roundoff
    const double slack = 2.0 * eps * scale;

    double t = config.step_init;
    bool accepted = false;
    while (t >= kMinStep) {
      OrthogonalMatrix cand = retract(cur, dir, t);
      double jc = objective_value(cand, alpha);
      if (config.armijo_c * t * g2 >= noise_floor) {
        // Value phase: classic Armijo sufficient increase, then keep halving
        // while the objective strictly improves — the first acceptable step
        // can sit on an oscillation resonance of the quadratic model, and a
        // shorter step that gains more is always the better move.
        if (jc >= best + config.armijo_c * t * g2) {
          while (t * config.armijo_shrink >= kMinStep) {
            OrthogonalMatrix probe = retract(cur, dir, t * config.armijo_shrink);
            const double jp = objective_value(probe, alpha);
            if (!(jp > jc)) break;
            t *= config.armijo_shrink;
            cand = std::move(probe);
            jc = jp;
          }
          cur = std::move(cand);
          dir = tangent_project(cur, objective_gradient(cur.mat(), alpha));
          gnorm = dir.norm();
          accepted = true;
          break;
        }
      } else {
        // Asymptotic phase: the predicted gain is below the resolution of
        // the objective, but the gradient norm is still computable to ~1e-15.
        // Accept any step that does not lose more than roundoff and strictly
        // shrinks the gradient.
        TangentDirection cand_dir = tangent_project(cand, objective_gradient(cand.mat(), alpha));
        const double cand_gnorm = cand_dir.norm();
        if (jc >= best - slack && cand_gnorm < gnorm) {
          cur = std::move(cand);
          dir = std::move(cand_dir);
          gnorm = cand_gnorm;
          accepted = true;
          break;
        }
      }
      t *= config.armijo_shrink;
    }

    if (!accepted) {
      stalled = true;
      break;
    }
    ++iters;
    best = std::max(best, objective_value(cur, alpha));
    rep.objective_trace.push_back(best);
  }

  rep.final_matrix = cur.mat();
  rep.final_entropy = entropy_value(cur.mat());
  rep.final_objective = objective_value(cur, alpha);
  rep.final_grad_norm = gnorm;
  rep.iterations = iters;
  rep.converged = gnorm <= config.grad_tol;
  rep.stalled = stalled;
  return rep;
}

}  // namespace orthent
