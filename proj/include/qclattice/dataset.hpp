#pragma once

#include <span>
#include <string>
#include <vector>

#include "qclattice/lattice.hpp"

namespace qcl {

// The nominal per-species energies subtracted from raw oracle energies
// before training (and added back when reporting raw-scale predictions).
// Not physical reference energies; they center the training targets.
struct EnergyConstants {
  double e0_li = -10.39;  // eV per cation
  double e0_co = -11.65;  // eV per cation

  double offset(double li_fraction) const {
    return li_fraction * e0_li + (1.0 - li_fraction) * e0_co;
  }
};

// centered energy: e_raw - [x*E0_Li + (1-x)*E0_Co]
double preprocess(double e_raw, double li_fraction, const EnergyConstants& ec = {});

struct InstanceMeta {
  std::vector<double> moments;  // magnetic-moment proxy, one per Co site in site order
  bool converged = true;
  std::string source = "surrogate";
  long id = -1;  // provenance id, unique within a set; assigned on insertion
};

struct DataInstance {
  Configuration config;
  double energy_raw = 0.0;  // eV per cation, oracle scale
  InstanceMeta meta;

  double centered(const EnergyConstants& ec) const {
    return energy_raw - ec.offset(config.li_fraction());
  }
};

// Mutable collection of data instances sharing one site count. Instances
// are addressed by provenance id; ids are never reused.
class TrainingSet {
 public:
  explicit TrainingSet(int n_sites, EnergyConstants constants = {});

  int n_sites() const { return n_sites_; }
  std::size_t size() const { return instances_.size(); }
  const EnergyConstants& constants() const { return constants_; }

  const std::vector<DataInstance>& instances() const { return instances_; }
  const DataInstance& at(std::size_t index) const { return instances_[index]; }

  const DataInstance* find(long id) const;
  DataInstance* find(long id);

  // Validates site count and moment count; assigns the next id when the
  // instance carries none. Returns the id.
  long add(DataInstance inst);

  // Anomaly-treatment update: new energy (and metadata) for an existing
  // instance.
  void update_energy(long id, double e_raw, std::vector<double> moments, bool converged);

  std::vector<double> centered_targets() const;

 private:
  int n_sites_;
  EnergyConstants constants_;
  std::vector<DataInstance> instances_;
  long next_id_ = 0;
};

int co_site_count(const Configuration& c);

}  // namespace qcl
