#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graphsim/linalg.hpp"
#include "graphsim/pauli.hpp"
#include "graphsim/rng.hpp"

namespace graphsim {

/// Requested measurement branch has (numerically) zero probability.
struct ZeroBranchError : std::runtime_error {
  explicit ZeroBranchError(const std::string& what) : std::runtime_error(what) {}
};

/// Single-qubit measurement basis: computational Z or the XY equator at
/// angle phi, i.e. the observable cos(phi) X + sin(phi) Y. Outcome 0 is
/// the +1 eigenstate (|0> + e^{i phi} |1>)/sqrt(2).
struct MeasBasis {
  enum class Kind { Z, XY };
  Kind kind = Kind::XY;
  double phi = 0.0;

  static MeasBasis z() { return {Kind::Z, 0.0}; }
  static MeasBasis x() { return {Kind::XY, 0.0}; }
  static MeasBasis y() { return {Kind::XY, 1.57079632679489661923}; }
  static MeasBasis xy(double phi_) { return {Kind::XY, phi_}; }

  /// Basis-change matrix with rows <v_0|, <v_1| (identity for Z).
  CMat rotation() const;
  /// The eigenstate |v_outcome> as a 2-vector.
  CVec eigenstate(int outcome) const;
};

enum class Gate { H, S, T, X, Y, Z, Cphase };

/// Dense complex amplitude vector over n qubits; qubit q is bit q of the
/// amplitude index. Unit 2-norm is maintained by every operation.
class StateVec {
 public:
  explicit StateVec(int n);  // |0...0>
  StateVec(int n, CVec amps);

  static StateVec all_plus(int n);
  static StateVec basis(int n, uint64_t index);

  int num_qubits() const { return n_; }
  uint64_t dim() const { return uint64_t(1) << n_; }
  const CVec& amps() const { return a_; }
  CVec& amps() { return a_; }

  double norm() const;
  void normalize();

  void apply_one(int q, const CMat& m);
  void apply_two(int q_low, int q_high, const CMat& m);  // 4x4, q_low = low index bit
  void apply_h(int q);
  void apply_s(int q);
  void apply_t(int q);
  void apply_x(int q);
  void apply_y(int q);
  void apply_z(int q);
  void apply_cz(int a, int b);
  void apply_cnot(int control, int target);
  void apply_gate(Gate g, int q1, int q2 = -1);

  void apply_pauli(const PauliOp& p);  // p.n == num_qubits()
  /// Apply an m-qubit Pauli to the listed qubit slots (p.n == slots.size()).
  void apply_pauli_on(const PauliOp& p, const std::vector<int>& slots);

  /// Add a fresh qubit in |+> as the new highest index.
  void attach_plus();
  /// Remove qubit q assuming the state factors with q in |keep_bit> after
  /// the caller's collapse; keeps the matching slice.
  void remove_qubit(int q, int keep_bit);

  double outcome_prob(int q, const MeasBasis& basis, int outcome) const;

  struct MeasResult {
    int outcome = 0;
    double prob = 0.0;
  };
  /// Born-rule sampled measurement; projects and renormalizes. With
  /// remove=true the measured qubit is dropped from the register.
  MeasResult measure(int q, const MeasBasis& basis, Rng& rng, bool remove = false);
  /// Forced-branch measurement: projects onto the requested outcome and
  /// returns its pre-projection probability. Throws ZeroBranchError when
  /// that probability is zero (within 1e-12).
  double measure_forced(int q, const MeasBasis& basis, int outcome, bool remove = false);

  cplx inner(const StateVec& other) const;
  double fidelity(const StateVec& other) const;  // |<a|b>|^2

  void permute_qubits(const std::vector<int>& new_position);  // q -> new_position[q]

 private:
  void collapse(int q, int outcome, double prob, bool rotated, const MeasBasis& basis, bool remove);

  int n_ = 0;
  CVec a_;
};

/// Combined register with `low` occupying the low index bits.
StateVec tensor_low_high(const StateVec& low, const StateVec& high);

StateVec random_state(int n, Rng& rng);

CMat gate_matrix_1q(Gate g);

}  // namespace graphsim
