#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcl {

enum class Species : std::int8_t { Li, Co };

// A binary lattice configuration: one occupation variable per cationic
// site, +1 for Co and -1 for Li. Sites are indexed 0..N-1 in a fixed
// linear order. Immutable after construction.
class Configuration {
 public:
  explicit Configuration(std::vector<std::int8_t> sigma);

  static Configuration from_species(const std::vector<Species>& labels);

  // Accepts either symbol form ("+--+") or species form ("CoLiLiCo").
  static Configuration parse(std::string_view text);

  int size() const { return static_cast<int>(sigma_.size()); }
  std::int8_t at(int j) const { return sigma_[static_cast<std::size_t>(j)]; }
  const std::vector<std::int8_t>& sigma() const { return sigma_; }

  // fraction of Li (-1) sites among all cationic sites
  double li_fraction() const;

  std::string to_symbols() const;  // "+--+"
  std::string to_species() const;  // "CoLiLiCo"

  bool operator==(const Configuration&) const = default;

 private:
  std::vector<std::int8_t> sigma_;
};

// All 2^N configurations in lexicographic order over {-1,+1} (site 0 is
// the most significant position, -1 sorts first). Throws capacity_error
// if 2^N would exceed `limit`.
std::vector<Configuration> enumerate_all(int n_sites, std::size_t limit = (1u << 20));

int hamming_distance(const Configuration& a, const Configuration& b);

// Copy of `c` with site j negated.
Configuration flip_site(const Configuration& c, int j);

}  // namespace qcl
