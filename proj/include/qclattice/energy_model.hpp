#pragma once

#include <array>
#include <span>
#include <vector>

#include "qclattice/lattice.hpp"
#include "qclattice/statevector.hpp"
#include "qclattice/util.hpp"

namespace qcl {

// Angles of one circuit layer: a diagonal block of single-Z and
// nearest-neighbour ZZ phases followed by an X-rotation block.
struct LayerAngles {
  std::vector<double> theta;     // N single-Z angles
  std::vector<double> theta_zz;  // N-1 nearest-neighbour ZZ angles
  std::vector<double> phi;       // N X-rotation angles
};

// Full parameter set of the two-layer circuit plus the trainable energy
// scale s: 2*(3N-1) + 1 = 6N-1 real numbers.
//
// Canonical flat ordering (fixed; used for optimizer interchange and
// persistence): layer1 theta[0..N), layer1 theta_zz[0..N-1),
// layer1 phi[0..N), the same for layer 2, then s.
struct CircuitParams {
  int n_sites = 0;
  std::array<LayerAngles, 2> layers;
  double scale = 0.0;

  static CircuitParams zeros(int n_sites);
  // angles uniform in [0, 2*pi), scale = scale_init
  static CircuitParams random(int n_sites, Rng& rng, double scale_init);

  std::vector<double> flatten() const;
  static CircuitParams unflatten(int n_sites, std::span<const double> flat);
};

// 6N-1; throws for N < 2.
int param_count(int n_sites);

// The alternating operator X on odd (1-indexed) sites, Y on even:
// X_1 Y_2 X_3 ... X_{N-1} Y_N. Requires even N.
PauliString default_measurement(int n_sites);

enum class EntanglerMode {
  Diagonal,        // apply exp(i*angle*ZZ) as a diagonal phase
  CompiledCnotRz,  // CNOT - exp(i*angle*Z) - CNOT compilation
};

// |psi(sigma, params)> per the two-layer construction: H wall, layer-1
// Z block (single-Z then ZZ terms, ascending site order), layer-1 X
// block, H wall, layer-2 Z block, layer-2 X block. Z angles are
// multiplied by the occupation variables: theta_j*sigma_j and
// theta_{j,j+1}*sigma_j*sigma_{j+1}.
StateVector build_state(const CircuitParams& p, const Configuration& c,
                        EntanglerMode mode = EntanglerMode::Diagonal);

// <psi| m |psi> (dimensionless, in [-1, 1])
double expectation_value(const CircuitParams& p, const Configuration& c,
                         const PauliString& m,
                         EntanglerMode mode = EntanglerMode::Diagonal);

// scale * <psi| m |psi>, i.e. the model energy on the centered scale
double predict_energy(const CircuitParams& p, const Configuration& c,
                      const PauliString& m,
                      EntanglerMode mode = EntanglerMode::Diagonal);

// d predict_energy / d(flat parameter), canonical order. Angle
// derivatives use the parameter-shift identity f'(t) = f(t+pi/4) -
// f(t-pi/4), exact for exp(i*t*P) generators with P^2 = I; the
// derivative w.r.t. s is the raw expectation value.
std::vector<double> gradient(const CircuitParams& p, const Configuration& c,
                             const PauliString& m);

// central finite differences, the cross-check fallback
std::vector<double> gradient_fd(const CircuitParams& p, const Configuration& c,
                                const PauliString& m, double step = 1e-5);

// One sweep row: sweeping flat parameter `param_index` to `angle` (all
// other angles fixed at 1.0, s = 1) for configuration `config_index`.
struct SweepRow {
  int param_index;
  double angle;
  int config_index;
  double energy;
};

struct SweepResult {
  std::vector<SweepRow> rows;           // param-major, then config, then angle
  std::vector<int> constant_params;     // max-min < 1e-9 over the grid for every sigma
  int n_angle_params = 0;               // 6N-2
};

// Parameter-sensitivity sweep: for each of the 6N-2 angle parameters,
// evaluate the model energy over `grid` angles with every other angle
// fixed at 1.0 and s = 1, for each configuration.
SweepResult sensitivity_sweep(const std::vector<Configuration>& configs,
                              std::span<const double> grid,
                              const PauliString& m);

}  // namespace qcl
