#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qcl {

struct OptimizerSettings {
  int max_iters = 10000;          // objective evaluations (COBYLA) / iterations (Adam)
  double tol1 = 1e-4;             // convergence tolerance for both stages
  double cobyla_rho_begin = 0.5;  // initial trust-region radius
  double adam_lr = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  bool verify_gradient = false;   // debug: check grad against finite differences at x0
};

enum class TerminationReason { Converged, MaxIters, Stalled };

std::string to_string(TerminationReason r);

struct OptimizationTrace {
  // incumbent (best-so-far) cost after each objective evaluation/iteration;
  // non-increasing by construction
  std::vector<double> costs;
  TerminationReason reason = TerminationReason::MaxIters;
  std::vector<double> x;  // best point found
  double final_cost = 0.0;
  int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

// Derivative-free minimization by linear approximation over a simplex
// with a shrinking trust region (COBYLA, unconstrained case). Terminates
// when the trust-region radius falls below tol1 or after max_iters
// objective evaluations. Throws std::runtime_error if the objective
// returns a non-finite value (the diagnostic contains the offending point).
OptimizationTrace cobyla_minimize(const Objective& objective,
                                  std::span<const double> x0,
                                  const OptimizerSettings& settings);

// Adam with bias correction. Terminates once |cost_k - cost_{k-1}| stays
// below tol1 for a 10-iteration window, or after max_iters iterations.
OptimizationTrace adam_minimize(const Objective& objective, const GradientFn& grad,
                                std::span<const double> x0,
                                const OptimizerSettings& settings);

}  // namespace qcl
