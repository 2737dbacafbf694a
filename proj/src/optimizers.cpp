#include "qclattice/optimizers.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcl {

std::string to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::Converged: return "converged";
    case TerminationReason::MaxIters: return "max_iters";
    case TerminationReason::Stalled: return "stalled";
  }
  return "unknown";
}

namespace {

std::string point_to_string(std::span<const double> x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

double checked_eval(const Objective& f, std::span<const double> x) {
  const double v = f(x);
  if (!std::isfinite(v))
    throw std::runtime_error("objective returned non-finite value at " + point_to_string(x));
  return v;
}

// Powell's COBYLA specialized to the unconstrained case: keep a simplex of
// d+1 points, interpolate a linear model of the objective through it, and
// step to the model minimizer on the trust-region boundary. Vertices that
// drift too far from the best point, or that make the simplex degenerate,
// are rebuilt by geometry steps.
class Cobyla {
 public:
  Cobyla(const Objective& f, std::span<const double> x0, const OptimizerSettings& s)
      : f_(f), settings_(s), dim_(static_cast<int>(x0.size())),
        x0_(x0.begin(), x0.end()) {}

  OptimizationTrace run() {
    const int d = dim_;
    rho_ = settings_.cobyla_rho_begin;
    verts_.assign(static_cast<std::size_t>(d) + 1, Eigen::VectorXd());
    fvals_.assign(static_cast<std::size_t>(d) + 1, 0.0);
    verts_[0] = Eigen::Map<const Eigen::VectorXd>(x0_.data(), d);
    fvals_[0] = eval(verts_[0]);
    for (int i = 1; i <= d; ++i) {
      verts_[static_cast<std::size_t>(i)] = verts_[0];
      verts_[static_cast<std::size_t>(i)](i - 1) += rho_;
      fvals_[static_cast<std::size_t>(i)] = eval(verts_[static_cast<std::size_t>(i)]);
    }

    int stall_guard = 0;
    while (true) {
      if (trace_.evaluations >= settings_.max_iters) {
        trace_.reason = TerminationReason::MaxIters;
        break;
      }
      if (stall_guard > 100 * (d + 1)) {
        trace_.reason = TerminationReason::Stalled;
        break;
      }
      promote_best();

      // rebuild any vertex that drifted outside the trust neighbourhood
      const int far = farthest_vertex();
      if (far > 0 &&
          (verts_[static_cast<std::size_t>(far)] - verts_[0]).norm() > kBeta * rho_) {
        geometry_step(far);
        ++stall_guard;
        continue;
      }

      Eigen::VectorXd g;
      const int bad = linear_model(g);
      if (bad > 0) {  // degenerate simplex: fix the offending vertex
        geometry_step(bad);
        ++stall_guard;
        continue;
      }

      const double gnorm = g.norm();
      if (gnorm * rho_ < 1e-14 * std::max(1.0, std::abs(fvals_[0]))) {
        if (!shrink()) {
          trace_.reason = TerminationReason::Converged;
          break;
        }
        continue;
      }

      // trust-region step: model minimizer on the rho-ball boundary
      const Eigen::VectorXd xnew = verts_[0] - (rho_ / gnorm) * g;
      const double fold = fvals_[0];
      const double fnew = eval(xnew);
      stall_guard = 0;

      int worst = 0;
      for (int i = 1; i <= d; ++i)
        if (fvals_[static_cast<std::size_t>(i)] > fvals_[static_cast<std::size_t>(worst)])
          worst = i;
      if (fnew < fvals_[static_cast<std::size_t>(worst)]) {
        verts_[static_cast<std::size_t>(worst)] = xnew;
        fvals_[static_cast<std::size_t>(worst)] = fnew;
      }

      const double actual = fold - fnew;
      const double predicted = rho_ * gnorm;
      if (actual <= 0.1 * predicted) {
        if (!shrink()) {
          trace_.reason = TerminationReason::Converged;
          break;
        }
      }
    }

    trace_.x.assign(best_x_.data(), best_x_.data() + d);
    trace_.final_cost = best_f_;
    return std::move(trace_);
  }

 private:
  static constexpr double kBeta = 2.1;  // vertex distance bound, in units of rho

  double eval(const Eigen::VectorXd& x) {
    const double v =
        checked_eval(f_, std::span<const double>(x.data(), static_cast<std::size_t>(dim_)));
    ++trace_.evaluations;
    if (trace_.costs.empty() || v < best_f_) {
      best_f_ = v;
      best_x_ = x;
    }
    trace_.costs.push_back(best_f_);
    return v;
  }

  void promote_best() {
    int best = 0;
    for (int i = 1; i <= dim_; ++i)
      if (fvals_[static_cast<std::size_t>(i)] < fvals_[static_cast<std::size_t>(best)])
        best = i;
    if (best != 0) {
      std::swap(verts_[0], verts_[static_cast<std::size_t>(best)]);
      std::swap(fvals_[0], fvals_[static_cast<std::size_t>(best)]);
    }
  }

  int farthest_vertex() const {
    int far = 1;
    double dist = 0.0;
    for (int i = 1; i <= dim_; ++i) {
      const double di = (verts_[static_cast<std::size_t>(i)] - verts_[0]).norm();
      if (di > dist) {
        dist = di;
        far = i;
      }
    }
    return far;
  }

  // Interpolate f(x) ~ f(x0) + g.(x - x0) through all vertices. Returns 0
  // on success, or the index of a vertex whose edge makes the system
  // near-singular.
  int linear_model(Eigen::VectorXd& g) {
    const int d = dim_;
    Eigen::MatrixXd S(d, d);
    Eigen::VectorXd df(d);
    for (int i = 1; i <= d; ++i) {
      S.row(i - 1) = (verts_[static_cast<std::size_t>(i)] - verts_[0]).transpose();
      df(i - 1) = fvals_[static_cast<std::size_t>(i)] - fvals_[0];
    }
    // modified Gram-Schmidt over the edge rows; the first row with a tiny
    // orthogonal residual names the vertex to rebuild
    Eigen::MatrixXd q(d, d);
    int cols = 0;
    for (int i = 1; i <= d; ++i) {
      Eigen::VectorXd r = S.row(i - 1).transpose();
      for (int c = 0; c < cols; ++c) r -= q.col(c).dot(r) * q.col(c);
      const double rn = r.norm();
      if (rn <= 1e-6 * rho_) return i;
      q.col(cols++) = r / rn;
    }
    g = S.partialPivLu().solve(df);
    last_gradient_ = g;
    return 0;
  }

  // Replace vertex j with x0 +/- rho * u, where u is a unit direction
  // orthogonal to all other simplex edges (keeps the simplex well-poised).
  void geometry_step(int j) {
    const int d = dim_;
    Eigen::MatrixXd edges(d, d - 1);
    int col = 0;
    for (int i = 1; i <= d; ++i) {
      if (i == j) continue;
      edges.col(col++) = verts_[static_cast<std::size_t>(i)] - verts_[0];
    }
    // u = least-significant left singular direction of the edge matrix
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges, Eigen::ComputeFullU);
    Eigen::VectorXd u = svd.matrixU().col(d - 1);

    // prefer the side where the linear model (if any) decreases
    Eigen::VectorXd g;
    if (last_gradient_.size() == d) g = last_gradient_;
    if (g.size() == d && u.dot(g) > 0) u = -u;

    verts_[static_cast<std::size_t>(j)] = verts_[0] + rho_ * u;
    fvals_[static_cast<std::size_t>(j)] = eval(verts_[static_cast<std::size_t>(j)]);
  }

  // Halve the trust radius; false once it falls below tol1.
  bool shrink() {
    rho_ *= 0.5;
    return rho_ >= settings_.tol1;
  }

  const Objective& f_;
  const OptimizerSettings& settings_;
  int dim_;
  std::vector<double> x0_;
  std::vector<Eigen::VectorXd> verts_;
  std::vector<double> fvals_;
  Eigen::VectorXd last_gradient_;
  double rho_ = 0.0;
  double best_f_ = 0.0;
  Eigen::VectorXd best_x_;
  OptimizationTrace trace_;
};

}  // namespace

OptimizationTrace cobyla_minimize(const Objective& objective, std::span<const double> x0,
                                  const OptimizerSettings& settings) {
  if (x0.empty()) throw std::invalid_argument("cobyla_minimize: empty start point");
  Cobyla c(objective, x0, settings);
  return c.run();
}

OptimizationTrace adam_minimize(const Objective& objective, const GradientFn& grad,
                                std::span<const double> x0,
                                const OptimizerSettings& settings) {
  if (x0.empty()) throw std::invalid_argument("adam_minimize: empty start point");
  const std::size_t d = x0.size();

  if (settings.verify_gradient) {
    const std::vector<double> g0 = grad(x0);
    std::vector<double> x(x0.begin(), x0.end());
    const double h = 1e-6;
    for (std::size_t k = 0; k < d; ++k) {
      const double saved = x[k];
      x[k] = saved + h;
      const double fp = objective(x);
      x[k] = saved - h;
      const double fm = objective(x);
      x[k] = saved;
      const double fd = (fp - fm) / (2 * h);
      if (std::abs(fd - g0[k]) > 1e-4 * std::max(1.0, std::abs(fd)))
        throw std::runtime_error("gradient check failed at component " + std::to_string(k) +
                                 ": analytic " + std::to_string(g0[k]) + " vs fd " +
                                 std::to_string(fd));
    }
  }

  OptimizationTrace trace;
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> m(d, 0.0), v(d, 0.0);
  double best = checked_eval(objective, x);
  std::vector<double> best_x = x;
  trace.costs.push_back(best);
  double prev = best;
  int window = 0;
  trace.reason = TerminationReason::MaxIters;

  double b1t = 1.0, b2t = 1.0;
  for (int it = 1; it <= settings.max_iters; ++it) {
    const std::vector<double> g = grad(x);
    for (double gi : g)
      if (!std::isfinite(gi))
        throw std::runtime_error("gradient returned non-finite value at " + point_to_string(x));

    b1t *= settings.adam_beta1;
    b2t *= settings.adam_beta2;
    for (std::size_t k = 0; k < d; ++k) {
      m[k] = settings.adam_beta1 * m[k] + (1.0 - settings.adam_beta1) * g[k];
      v[k] = settings.adam_beta2 * v[k] + (1.0 - settings.adam_beta2) * g[k] * g[k];
      const double mhat = m[k] / (1.0 - b1t);
      const double vhat = v[k] / (1.0 - b2t);
      x[k] -= settings.adam_lr * mhat / (std::sqrt(vhat) + settings.adam_eps);
    }

    const double c = checked_eval(objective, x);
    trace.evaluations = it;
    if (c < best) {
      best = c;
      best_x = x;
    }
    trace.costs.push_back(best);
    if (std::abs(c - prev) < settings.tol1) {
      if (++window >= 10) {
        trace.reason = TerminationReason::Converged;
        break;
      }
    } else {
      window = 0;
    }
    prev = c;
  }

  trace.x = std::move(best_x);
  trace.final_cost = best;
  return trace;
}

}  // namespace qcl
