#pragma once

#include <span>
#include <string>
#include <vector>

#include "qclattice/dataset.hpp"
#include "qclattice/lattice.hpp"

namespace qcl {

struct RecomputeResult {
  double energy_raw = 0.0;
  std::vector<double> moments;
  bool converged = false;
};

// Source of configuration energies (stands in for the DFT workflow).
// Implementations must be deterministic given their own seed and call
// order; energies are on the raw eV-per-cation scale.
class EnergyOracle {
 public:
  virtual ~EnergyOracle() = default;

  // Re-run the calculation that produced `inst` from its stored state
  // (anomaly-treatment step 1). Returns the possibly updated raw energy.
  virtual double continue_relaxation(const DataInstance& inst) = 0;

  // Recompute the energy of `c` with the magnetic moments initialized
  // from `hint_moments` (one per Co site, in site order).
  virtual RecomputeResult recompute_with_hints(const Configuration& c,
                                               std::span<const double> hint_moments) = 0;

  // Fresh calculation for a configuration (anomaly-treatment step 3).
  virtual DataInstance compute_new(const Configuration& c) = 0;

  virtual std::string source_tag() const = 0;
};

}  // namespace qcl
