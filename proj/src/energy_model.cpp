#include "qclattice/energy_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcl {

namespace {

constexpr double kConstancyEps = 1e-9;

void check_sizes(const CircuitParams& p, const Configuration& c) {
  if (p.n_sites != c.size())
    throw std::invalid_argument("parameter set sized for " + std::to_string(p.n_sites) +
                                " sites, configuration has " + std::to_string(c.size()));
  for (const LayerAngles& l : p.layers) {
    if (static_cast<int>(l.theta.size()) != p.n_sites ||
        static_cast<int>(l.theta_zz.size()) != p.n_sites - 1 ||
        static_cast<int>(l.phi.size()) != p.n_sites)
      throw std::invalid_argument("malformed layer angle arrays");
  }
}

}  // namespace

int param_count(int n_sites) {
  if (n_sites < 2)
    throw std::invalid_argument("energy model requires at least 2 sites, got " +
                                std::to_string(n_sites));
  return 6 * n_sites - 1;
}

CircuitParams CircuitParams::zeros(int n_sites) {
  param_count(n_sites);  // validates
  CircuitParams p;
  p.n_sites = n_sites;
  for (LayerAngles& l : p.layers) {
    l.theta.assign(static_cast<std::size_t>(n_sites), 0.0);
    l.theta_zz.assign(static_cast<std::size_t>(n_sites - 1), 0.0);
    l.phi.assign(static_cast<std::size_t>(n_sites), 0.0);
  }
  p.scale = 0.0;
  return p;
}

CircuitParams CircuitParams::random(int n_sites, Rng& rng, double scale_init) {
  CircuitParams p = zeros(n_sites);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (LayerAngles& l : p.layers) {
    for (double& a : l.theta) a = rng.uniform(0.0, two_pi);
    for (double& a : l.theta_zz) a = rng.uniform(0.0, two_pi);
    for (double& a : l.phi) a = rng.uniform(0.0, two_pi);
  }
  p.scale = scale_init;
  return p;
}

std::vector<double> CircuitParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(param_count(n_sites)));
  for (const LayerAngles& l : layers) {
    flat.insert(flat.end(), l.theta.begin(), l.theta.end());
    flat.insert(flat.end(), l.theta_zz.begin(), l.theta_zz.end());
    flat.insert(flat.end(), l.phi.begin(), l.phi.end());
  }
  flat.push_back(scale);
  return flat;
}

CircuitParams CircuitParams::unflatten(int n_sites, std::span<const double> flat) {
  const int expected = param_count(n_sites);
  if (static_cast<int>(flat.size()) != expected)
    throw std::invalid_argument("flat parameter vector has " + std::to_string(flat.size()) +
                                " entries, expected " + std::to_string(expected));
  CircuitParams p = zeros(n_sites);
  std::size_t o = 0;
  const std::size_t n = static_cast<std::size_t>(n_sites);
  for (LayerAngles& l : p.layers) {
    for (std::size_t j = 0; j < n; ++j) l.theta[j] = flat[o++];
    for (std::size_t j = 0; j + 1 < n; ++j) l.theta_zz[j] = flat[o++];
    for (std::size_t j = 0; j < n; ++j) l.phi[j] = flat[o++];
  }
  p.scale = flat[o];
  return p;
}

PauliString default_measurement(int n_sites) {
  if (n_sites < 2)
    throw std::invalid_argument("default measurement operator requires N >= 2");
  if (n_sites % 2 != 0)
    throw std::invalid_argument(
        "default measurement operator X1 Y2 ... X(N-1) YN requires even N, got " +
        std::to_string(n_sites));
  PauliString p;
  p.ops.reserve(static_cast<std::size_t>(n_sites));
  for (int j = 0; j < n_sites; ++j)
    p.ops.push_back(j % 2 == 0 ? PauliOp::X : PauliOp::Y);
  return p;
}

StateVector build_state(const CircuitParams& p, const Configuration& c, EntanglerMode mode) {
  check_sizes(p, c);
  const int n = p.n_sites;
  StateVector s(n);
  for (const LayerAngles& l : p.layers) {
    apply_hadamard_all(s);
    // diagonal Z block; terms commute, applied in ascending site order
    for (int j = 0; j < n; ++j)
      apply_exp_z(s, j, l.theta[static_cast<std::size_t>(j)] * c.at(j));
    for (int j = 0; j + 1 < n; ++j) {
      const double angle =
          l.theta_zz[static_cast<std::size_t>(j)] * c.at(j) * c.at(j + 1);
      if (mode == EntanglerMode::Diagonal) {
        apply_exp_zz(s, j, j + 1, angle);
      } else {
        apply_cnot(s, j, j + 1);
        apply_exp_z(s, j + 1, angle);
        apply_cnot(s, j, j + 1);
      }
    }
    for (int j = 0; j < n; ++j)
      apply_exp_x(s, j, l.phi[static_cast<std::size_t>(j)]);
  }
  return s;
}

double expectation_value(const CircuitParams& p, const Configuration& c,
                         const PauliString& m, EntanglerMode mode) {
  if (m.size() != c.size())
    throw std::invalid_argument("measurement operator length " + std::to_string(m.size()) +
                                " != site count " + std::to_string(c.size()));
  const StateVector s = build_state(p, c, mode);
  return expectation(s, m);
}

double predict_energy(const CircuitParams& p, const Configuration& c,
                      const PauliString& m, EntanglerMode mode) {
  return p.scale * expectation_value(p, c, m, mode);
}

std::vector<double> gradient(const CircuitParams& p, const Configuration& c,
                             const PauliString& m) {
  check_sizes(p, c);
  const int n_params = param_count(p.n_sites);
  const int n_angles = n_params - 1;
  std::vector<double> flat = p.flatten();
  std::vector<double> grad(static_cast<std::size_t>(n_params), 0.0);
  constexpr double shift = std::numbers::pi / 4.0;
  for (int k = 0; k < n_angles; ++k) {
    const double saved = flat[static_cast<std::size_t>(k)];
    flat[static_cast<std::size_t>(k)] = saved + shift;
    const double plus = predict_energy(CircuitParams::unflatten(p.n_sites, flat), c, m);
    flat[static_cast<std::size_t>(k)] = saved - shift;
    const double minus = predict_energy(CircuitParams::unflatten(p.n_sites, flat), c, m);
    flat[static_cast<std::size_t>(k)] = saved;
    grad[static_cast<std::size_t>(k)] = plus - minus;
  }
  grad[static_cast<std::size_t>(n_angles)] = expectation_value(p, c, m);
  return grad;
}

std::vector<double> gradient_fd(const CircuitParams& p, const Configuration& c,
                                const PauliString& m, double step) {
  check_sizes(p, c);
  const int n_params = param_count(p.n_sites);
  std::vector<double> flat = p.flatten();
  std::vector<double> grad(static_cast<std::size_t>(n_params), 0.0);
  for (int k = 0; k < n_params; ++k) {
    const double saved = flat[static_cast<std::size_t>(k)];
    flat[static_cast<std::size_t>(k)] = saved + step;
    const double plus = predict_energy(CircuitParams::unflatten(p.n_sites, flat), c, m);
    flat[static_cast<std::size_t>(k)] = saved - step;
    const double minus = predict_energy(CircuitParams::unflatten(p.n_sites, flat), c, m);
    flat[static_cast<std::size_t>(k)] = saved;
    grad[static_cast<std::size_t>(k)] = (plus - minus) / (2.0 * step);
  }
  return grad;
}

SweepResult sensitivity_sweep(const std::vector<Configuration>& configs,
                              std::span<const double> grid, const PauliString& m) {
  if (configs.empty()) throw std::invalid_argument("sensitivity_sweep: no configurations");
  if (grid.empty()) throw std::invalid_argument("sensitivity_sweep: empty angle grid");
  const int n = configs.front().size();
  for (const Configuration& c : configs)
    if (c.size() != n)
      throw std::invalid_argument("sensitivity_sweep: configurations of mixed size");
  const int n_angles = param_count(n) - 1;

  SweepResult result;
  result.n_angle_params = n_angles;
  result.rows.reserve(static_cast<std::size_t>(n_angles) * grid.size() * configs.size());

  std::vector<double> flat(static_cast<std::size_t>(n_angles), 1.0);
  flat.push_back(1.0);  // s = 1
  for (int k = 0; k < n_angles; ++k) {
    bool constant = true;
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (double angle : grid) {
        flat[static_cast<std::size_t>(k)] = angle;
        const double e = predict_energy(CircuitParams::unflatten(n, flat),
                                        configs[ci], m);
        result.rows.push_back({k, angle, static_cast<int>(ci), e});
        if (first) {
          lo = hi = e;
          first = false;
        } else {
          lo = std::min(lo, e);
          hi = std::max(hi, e);
        }
      }
      if (hi - lo >= kConstancyEps) constant = false;
    }
    flat[static_cast<std::size_t>(k)] = 1.0;
    if (constant) result.constant_params.push_back(k);
  }
  return result;
}

}  // namespace qcl
