#include "qclattice/dataset.hpp"

#include <algorithm>
#include <stdexcept>

#include "qclattice/util.hpp"

namespace qcl {

double preprocess(double e_raw, double li_fraction, const EnergyConstants& ec) {
  return e_raw - ec.offset(li_fraction);
}

int co_site_count(const Configuration& c) {
  int n = 0;
  for (int j = 0; j < c.size(); ++j)
    if (c.at(j) > 0) ++n;
  return n;
}

TrainingSet::TrainingSet(int n_sites, EnergyConstants constants)
    : n_sites_(n_sites), constants_(constants) {
  if (n_sites < 1) throw input_error("training set requires a positive site count");
}

const DataInstance* TrainingSet::find(long id) const {
  for (const DataInstance& inst : instances_)
    if (inst.meta.id == id) return &inst;
  return nullptr;
}

DataInstance* TrainingSet::find(long id) {
  for (DataInstance& inst : instances_)
    if (inst.meta.id == id) return &inst;
  return nullptr;
}

long TrainingSet::add(DataInstance inst) {
  if (inst.config.size() != n_sites_)
    throw input_error("instance has " + std::to_string(inst.config.size()) +
                      " sites, set expects " + std::to_string(n_sites_));
  if (static_cast<int>(inst.meta.moments.size()) != co_site_count(inst.config))
    throw input_error("instance moment count " + std::to_string(inst.meta.moments.size()) +
                      " != Co site count " + std::to_string(co_site_count(inst.config)));
  if (inst.meta.id < 0) {
    inst.meta.id = next_id_++;
  } else {
    if (find(inst.meta.id) != nullptr)
      throw input_error("duplicate instance id " + std::to_string(inst.meta.id));
    next_id_ = std::max(next_id_, inst.meta.id + 1);
  }
  const long id = inst.meta.id;
  instances_.push_back(std::move(inst));
  return id;
}

void TrainingSet::update_energy(long id, double e_raw, std::vector<double> moments,
                                bool converged) {
  DataInstance* inst = find(id);
  if (inst == nullptr) throw input_error("no instance with id " + std::to_string(id));
  if (static_cast<int>(moments.size()) != co_site_count(inst->config))
    throw input_error("moment count mismatch in update of instance " + std::to_string(id));
  inst->energy_raw = e_raw;
  inst->meta.moments = std::move(moments);
  inst->meta.converged = converged;
}

std::vector<double> TrainingSet::centered_targets() const {
  std::vector<double> out;
  out.reserve(instances_.size());
  for (const DataInstance& inst : instances_) out.push_back(inst.centered(constants_));
  return out;
}

}  // namespace qcl
