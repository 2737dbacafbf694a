#include "qclattice/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qclattice/util.hpp"

namespace qcl {

namespace {

void check_qubit(const StateVector& s, int j, const char* what) {
  if (j < 0 || j >= s.n_qubits())
    throw std::out_of_range(std::string(what) + ": qubit index " + std::to_string(j) +
                            " out of range for " + std::to_string(s.n_qubits()) + " qubits");
}

}  // namespace

StateVector::StateVector(int n_qubits, int max_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw input_error("qubit count must be positive");
  if (n_qubits > max_qubits)
    throw capacity_error("qubit count " + std::to_string(n_qubits) + " exceeds max " +
                         std::to_string(max_qubits));
  amp_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amp_[0] = {1.0, 0.0};
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const auto& a : amp_) n2 += std::norm(a);
  return std::sqrt(n2);
}

void apply_hadamard(StateVector& s, int j) {
  check_qubit(s, j, "apply_hadamard");
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  const std::size_t bit = std::size_t{1} << j;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const auto a0 = s[i];
    const auto a1 = s[i | bit];
    s[i] = inv_sqrt2 * (a0 + a1);
    s[i | bit] = inv_sqrt2 * (a0 - a1);
  }
}

void apply_hadamard_all(StateVector& s) {
  for (int j = 0; j < s.n_qubits(); ++j) apply_hadamard(s, j);
}

void apply_exp_z(StateVector& s, int j, double angle) {
  check_qubit(s, j, "apply_exp_z");
  const std::complex<double> p(std::cos(angle), std::sin(angle));
  const std::complex<double> m = std::conj(p);
  const std::size_t bit = std::size_t{1} << j;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) s[i] *= (i & bit) ? m : p;
}

void apply_exp_x(StateVector& s, int j, double angle) {
  check_qubit(s, j, "apply_exp_x");
  const double c = std::cos(angle);
  const std::complex<double> is(0.0, std::sin(angle));
  const std::size_t bit = std::size_t{1} << j;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const auto a0 = s[i];
    const auto a1 = s[i | bit];
    s[i] = c * a0 + is * a1;
    s[i | bit] = is * a0 + c * a1;
  }
}

void apply_exp_zz(StateVector& s, int j, int k, double angle) {
  check_qubit(s, j, "apply_exp_zz");
  check_qubit(s, k, "apply_exp_zz");
  if (j == k) throw std::invalid_argument("apply_exp_zz: qubits must differ");
  const std::complex<double> p(std::cos(angle), std::sin(angle));
  const std::complex<double> m = std::conj(p);
  const std::size_t bj = std::size_t{1} << j;
  const std::size_t bk = std::size_t{1} << k;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    const bool equal = ((i & bj) != 0) == ((i & bk) != 0);
    s[i] *= equal ? p : m;
  }
}

void apply_cnot(StateVector& s, int control, int target) {
  check_qubit(s, control, "apply_cnot");
  check_qubit(s, target, "apply_cnot");
  if (control == target) throw std::invalid_argument("apply_cnot: qubits must differ");
  const std::size_t bc = std::size_t{1} << control;
  const std::size_t bt = std::size_t{1} << target;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & bc) && !(i & bt)) std::swap(s[i], s[i | bt]);
  }
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw input_error("empty Pauli string");
  PauliString p;
  p.ops.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': p.ops.push_back(PauliOp::I); break;
      case 'X': p.ops.push_back(PauliOp::X); break;
      case 'Y': p.ops.push_back(PauliOp::Y); break;
      case 'Z': p.ops.push_back(PauliOp::Z); break;
      default:
        throw input_error(std::string("bad Pauli letter '") + c + "' in \"" +
                          std::string(text) + "\"");
    }
  }
  return p;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(ops.size());
  for (PauliOp op : ops) out.push_back(static_cast<char>(op));
  return out;
}

double expectation(const StateVector& s, const PauliString& p) {
  if (p.size() != s.n_qubits())
    throw std::invalid_argument("expectation: Pauli string length " +
                                std::to_string(p.size()) + " != qubit count " +
                                std::to_string(s.n_qubits()));
  // P|i> = phase(i) |i ^ flip_mask>; accumulate <s|P|s> over basis states.
  std::size_t flip_mask = 0;
  std::size_t y_mask = 0;
  std::size_t z_mask = 0;
  int n_y = 0;
  for (int j = 0; j < p.size(); ++j) {
    const std::size_t bit = std::size_t{1} << j;
    switch (p.ops[static_cast<std::size_t>(j)]) {
      case PauliOp::I: break;
      case PauliOp::X: flip_mask |= bit; break;
      case PauliOp::Y: flip_mask |= bit; y_mask |= bit; ++n_y; break;
      case PauliOp::Z: z_mask |= bit; break;
    }
  }
  // i^{n_y} accounts for the Y factors; (-1) signs from Y and Z bit values.
  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> y_factor = i_pow[n_y & 3];
  std::complex<double> acc(0.0, 0.0);
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    const int sign_bits = std::popcount(i & (y_mask | z_mask));
    const double sign = (sign_bits & 1) ? -1.0 : 1.0;
    acc += std::conj(s[i ^ flip_mask]) * (sign * y_factor) * s[i];
  }
  if (std::abs(acc.imag()) >= 1e-10)
    throw std::runtime_error("expectation: imaginary residual " +
                             std::to_string(acc.imag()) + " exceeds 1e-10");
  return acc.real();
}

}  // namespace qcl
