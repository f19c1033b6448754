#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "graphsim/linalg.hpp"

namespace graphsim {

struct PauliFrame;

/// Phased Pauli operator i^phase_i * X^x_bits * Z^z_bits on n qubits,
/// in the binary symplectic representation. Qubit q is bit q of the masks.
/// Y on one qubit is (x=1, z=1, phase_i=1) since Y = i X Z.
struct PauliOp {
  int n = 0;
  uint64_t x_bits = 0;
  uint64_t z_bits = 0;
  int phase_i = 0;  // exponent of i, in {0,1,2,3}

  PauliOp() = default;
  PauliOp(int n_, uint64_t x, uint64_t z, int phase = 0);

  static PauliOp identity(int n_);
  static PauliOp single(int n_, int qubit, char axis);  // 'I','X','Y','Z'

  bool is_identity_up_to_phase() const { return x_bits == 0 && z_bits == 0; }
  cplx phase() const;
  bool commutes_with(const PauliOp& other) const;
  int weight() const;

  /// Dense 2^n x 2^n matrix, phase included.
  CMat to_matrix() const;

  std::string to_string() const;  // e.g. "-iXZY"
};

PauliOp pauli_mul(const PauliOp& a, const PauliOp& b);
inline PauliOp operator*(const PauliOp& a, const PauliOp& b) { return pauli_mul(a, b); }
bool equal_up_to_phase(const PauliOp& a, const PauliOp& b);

/// Phaseless byproduct record: 2n bits laid out as x-half followed by
/// z-half. Bit i < n is the X component on qubit i, bit n+i the Z one.
struct PauliFrame {
  int n = 0;
  uint64_t x_bits = 0;
  uint64_t z_bits = 0;

  PauliFrame() = default;
  PauliFrame(int n_, uint64_t x, uint64_t z);

  static PauliFrame zero(int n_) { return PauliFrame(n_, 0, 0); }
  static PauliFrame from_bits(int n_, uint64_t packed);  // packed = x-half | z-half << n

  uint64_t packed_bits() const { return x_bits | (z_bits << n); }
  bool bit(int i) const;  // i in [0, 2n)
  bool is_zero() const { return x_bits == 0 && z_bits == 0; }

  std::string to_string() const;
};

PauliFrame frame_compose(const PauliFrame& a, const PauliFrame& b);
inline PauliFrame operator^(const PauliFrame& a, const PauliFrame& b) { return frame_compose(a, b); }
inline bool operator==(const PauliFrame& a, const PauliFrame& b) {
  return a.n == b.n && a.x_bits == b.x_bits && a.z_bits == b.z_bits;
}

/// Lift a phaseless frame to the concrete operator X^x Z^z (phase 0).
PauliOp lift(const PauliFrame& frame);
/// Drop the phase of an operator, keeping the symplectic data.
PauliFrame project_frame(const PauliOp& op);

/// Clifford conjugation C P C^dag with exact phase tracking, computed
/// from the generator images (no dense matrices involved).
PauliOp conjugate_h(const PauliOp& p, int q);
PauliOp conjugate_s(const PauliOp& p, int q);
PauliOp conjugate_cz(const PauliOp& p, int a, int b);
PauliOp conjugate_cnot(const PauliOp& p, int control, int target);

}  // namespace graphsim
