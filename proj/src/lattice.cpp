#include "qclattice/lattice.hpp"

#include <stdexcept>

#include "qclattice/util.hpp"

namespace qcl {

Configuration::Configuration(std::vector<std::int8_t> sigma) : sigma_(std::move(sigma)) {
  if (sigma_.empty()) throw input_error("configuration must have at least one site");
  for (std::size_t j = 0; j < sigma_.size(); ++j) {
    if (sigma_[j] != 1 && sigma_[j] != -1)
      throw input_error("occupation variable at site " + std::to_string(j) +
                        " must be +1 or -1");
  }
}

Configuration Configuration::from_species(const std::vector<Species>& labels) {
  std::vector<std::int8_t> sigma;
  sigma.reserve(labels.size());
  for (Species s : labels) sigma.push_back(s == Species::Co ? 1 : -1);
  return Configuration(std::move(sigma));
}

Configuration Configuration::parse(std::string_view text) {
  if (text.empty()) throw input_error("empty configuration string");
  std::vector<std::int8_t> sigma;
  if (text[0] == '+' || text[0] == '-') {
    sigma.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+')
        sigma.push_back(1);
      else if (text[i] == '-')
        sigma.push_back(-1);
      else
        throw input_error("bad symbol '" + std::string(1, text[i]) +
                          "' in configuration \"" + std::string(text) + "\"");
    }
    return Configuration(std::move(sigma));
  }
  // species form: concatenated "Co"/"Li" tags
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, 2, "Co") == 0) {
      sigma.push_back(1);
      i += 2;
    } else if (text.compare(i, 2, "Li") == 0) {
      sigma.push_back(-1);
      i += 2;
    } else {
      throw input_error("unknown species tag at position " + std::to_string(i) +
                        " in \"" + std::string(text) + "\"");
    }
  }
  return Configuration(std::move(sigma));
}

double Configuration::li_fraction() const {
  int li = 0;
  for (std::int8_t s : sigma_)
    if (s < 0) ++li;
  return static_cast<double>(li) / static_cast<double>(sigma_.size());
}

std::string Configuration::to_symbols() const {
  std::string out;
  out.reserve(sigma_.size());
  for (std::int8_t s : sigma_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::string Configuration::to_species() const {
  std::string out;
  out.reserve(2 * sigma_.size());
  for (std::int8_t s : sigma_) out += (s > 0 ? "Co" : "Li");
  return out;
}

std::vector<Configuration> enumerate_all(int n_sites, std::size_t limit) {
  if (n_sites < 1 || n_sites >= 63)
    throw input_error("site count out of range: " + std::to_string(n_sites));
  const std::uint64_t count = 1ULL << n_sites;
  if (count > limit)
    throw capacity_error("2^" + std::to_string(n_sites) +
                         " configurations exceed limit " + std::to_string(limit));
  std::vector<Configuration> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<std::int8_t> sigma(static_cast<std::size_t>(n_sites));
    for (int j = 0; j < n_sites; ++j)
      sigma[static_cast<std::size_t>(j)] =
          ((i >> (n_sites - 1 - j)) & 1) ? 1 : -1;
    out.emplace_back(std::move(sigma));
  }
  return out;
}

int hamming_distance(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size())
    throw input_error("hamming_distance: configurations of different size");
  int d = 0;
  for (int j = 0; j < a.size(); ++j)
    if (a.at(j) != b.at(j)) ++d;
  return d;
}

Configuration flip_site(const Configuration& c, int j) {
  if (j < 0 || j >= c.size())
    throw std::out_of_range("flip_site: site index " + std::to_string(j));
  std::vector<std::int8_t> sigma = c.sigma();
  sigma[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(-sigma[static_cast<std::size_t>(j)]);
  return Configuration(std::move(sigma));
}

}  // namespace qcl
