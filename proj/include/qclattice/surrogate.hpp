#pragma once

#include <cstdint>
#include <vector>

#include "qclattice/oracle.hpp"
#include "qclattice/util.hpp"

namespace qcl {

// Knobs of the synthetic energy oracle. Everything needed to regenerate a
// dataset exactly is in here, so dataset headers embed the full spec.
struct SurrogateSpec {
  int n_sites = 0;
  std::uint64_t seed = 0;
  int range = 3;              // pair interaction range R (|j-k| <= R)
  double anomaly_rate = 0.2;  // probability of a metastable sample
  double offset_min = 0.08;   // metastable energy offsets, eV per cation
  double offset_max = 0.4;
  double base_energy = -11.0;   // eV per cation
  double target_spread = 2.0;   // coefficient rescale target, eV per cation
  double artifact_rate = 0.0;   // probability continue_relaxation fixes a metastable energy
};

// Seeded stand-in for the DFT workflow: a pairwise lattice Hamiltonian as
// ground truth plus occasional metastable (higher-energy) samples whose
// magnetic-moment proxies are off their ground-state values. The interface
// mirrors what the anomaly-treatment loop needs from a real oracle.
class SurrogateModel final : public EnergyOracle {
 public:
  explicit SurrogateModel(const SurrogateSpec& spec);

  const SurrogateSpec& spec() const { return spec_; }

  // base + J0 + sum_j J_j sigma_j + sum_{|j-k|<=R} J_jk sigma_j sigma_k
  double true_energy(const Configuration& c) const;

  // Ground-state moment proxy per Co site: 0 when the site has no Li
  // neighbour within range R, else a site-specific value from {1.0, 3.0}.
  std::vector<double> ground_moments(const Configuration& c) const;

  // One oracle query: metastable with probability anomaly_rate (energy
  // raised by a uniform draw from [offset_min, offset_max], perturbed
  // moments, converged=false), otherwise the ground-truth result.
  DataInstance sample_energy(const Configuration& c, Rng& rng);

  // Like sample_energy but forced metastable; for building test fixtures.
  DataInstance sample_metastable(const Configuration& c, Rng& rng);

  // EnergyOracle
  double continue_relaxation(const DataInstance& inst) override;
  RecomputeResult recompute_with_hints(const Configuration& c,
                                       std::span<const double> hint_moments) override;
  DataInstance compute_new(const Configuration& c) override;
  std::string source_tag() const override { return "surrogate"; }

 private:
  void check_config(const Configuration& c) const;
  std::vector<double> perturbed_moments(const Configuration& c, Rng& rng) const;
  DataInstance make_instance(const Configuration& c, Rng& rng, bool metastable);

  SurrogateSpec spec_;
  double j0_ = 0.0;
  std::vector<double> j_site_;
  std::vector<double> j_pair_;  // indexed parallel to pairs_
  std::vector<std::pair<int, int>> pairs_;
  Rng own_rng_;  // drives compute_new / recompute / artifact draws
};

}  // namespace qcl
