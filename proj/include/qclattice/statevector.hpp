#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qcl {

// Exact dense N-qubit state. Amplitude storage convention: qubit j is bit
// j (least significant = qubit 0) of the basis-state index.
//
// All exponential gates follow the exp(+i*angle*Pauli) convention; the
// exp(-i*angle/2*P) rotation-gate convention is not used anywhere.
class StateVector {
 public:
  static constexpr int kDefaultMaxQubits = 20;

  // |0...0> on n qubits. Throws capacity_error when n exceeds max_qubits.
  explicit StateVector(int n_qubits, int max_qubits = kDefaultMaxQubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amp_.size(); }

  std::complex<double>& operator[](std::size_t i) { return amp_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return amp_[i]; }

  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

  double norm() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amp_;
};

void apply_hadamard(StateVector& s, int j);
void apply_hadamard_all(StateVector& s);

// exp(i*angle*Z_j): multiplies amplitudes with bit j = 0 by e^{+i angle}
// and bit j = 1 by e^{-i angle}.
void apply_exp_z(StateVector& s, int j, double angle);

// exp(i*angle*X_j) = cos(angle) I + i sin(angle) X_j.
void apply_exp_x(StateVector& s, int j, double angle);

// exp(i*angle*Z_j Z_k): equal bits at j,k get e^{+i angle}, unequal e^{-i angle}.
void apply_exp_zz(StateVector& s, int j, int k, double angle);

// CNOT (control, target); used by the compiled form of the ZZ entangler.
void apply_cnot(StateVector& s, int control, int target);

enum class PauliOp : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

struct PauliString {
  std::vector<PauliOp> ops;

  static PauliString parse(std::string_view text);  // e.g. "XYXY", "IZ"
  std::string str() const;
  int size() const { return static_cast<int>(ops.size()); }

  bool operator==(const PauliString&) const = default;
};

// <s| P |s>. Real by Hermiticity; the imaginary residual of the raw inner
// product is checked against 1e-10 and discarded.
double expectation(const StateVector& s, const PauliString& p);

}  // namespace qcl
