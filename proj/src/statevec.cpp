#include "graphsim/statevec.hpp"

#include <bit>
#include <cmath>

namespace graphsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kZeroBranchTol = 1e-12;

void check_slot(int n, int q) {
  if (q < 0 || q >= n) throw std::out_of_range("StateVec: qubit index out of range");
}

}  // namespace

CMat MeasBasis::rotation() const {
  CMat m(2, 2);
  if (kind == Kind::Z) {
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
  }
  const cplx e = std::exp(cplx(0.0, -phi));
  m(0, 0) = kInvSqrt2;
  m(0, 1) = kInvSqrt2 * e;
  m(1, 0) = kInvSqrt2;
  m(1, 1) = -kInvSqrt2 * e;
  return m;
}

CVec MeasBasis::eigenstate(int outcome) const {
  if (kind == Kind::Z) {
    CVec v(2, 0.0);
    v[outcome ? 1 : 0] = 1.0;
    return v;
  }
  CVec v(2);
  v[0] = kInvSqrt2;
  v[1] = (outcome ? -kInvSqrt2 : kInvSqrt2) * std::exp(cplx(0.0, phi));
  return v;
}

StateVec::StateVec(int n) : n_(n), a_(uint64_t(1) << n, 0.0) {
  if (n < 0 || n > 26) throw std::invalid_argument("StateVec: unsupported qubit count");
  a_[0] = 1.0;
}

StateVec::StateVec(int n, CVec amps) : n_(n), a_(std::move(amps)) {
  if (n < 0 || n > 26) throw std::invalid_argument("StateVec: unsupported qubit count");
  if (a_.size() != (uint64_t(1) << n)) throw std::invalid_argument("StateVec: amplitude count");
}

StateVec StateVec::all_plus(int n) {
  StateVec s(n);
  const double amp = std::pow(kInvSqrt2, n);
  for (auto& v : s.a_) v = amp;
  return s;
}

StateVec StateVec::basis(int n, uint64_t index) {
  StateVec s(n);
  s.a_[0] = 0.0;
  s.a_.at(index) = 1.0;
  return s;
}

double StateVec::norm() const {
  double acc = 0.0;
  for (const auto& v : a_) acc += std::norm(v);
  return std::sqrt(acc);
}

void StateVec::normalize() {
  const double nrm = norm();
  if (nrm <= 0.0) throw std::runtime_error("StateVec: cannot normalize zero vector");
  const double inv = 1.0 / nrm;
  for (auto& v : a_) v *= inv;
}

void StateVec::apply_one(int q, const CMat& m) {
  check_slot(n_, q);
  const uint64_t step = uint64_t(1) << q;
  const uint64_t dim = a_.size();
  for (uint64_t base = 0; base < dim; base += 2 * step) {
    for (uint64_t off = 0; off < step; ++off) {
      const uint64_t i0 = base | off;
      const uint64_t i1 = i0 | step;
      const cplx v0 = a_[i0];
      const cplx v1 = a_[i1];
      a_[i0] = m(0, 0) * v0 + m(0, 1) * v1;
      a_[i1] = m(1, 0) * v0 + m(1, 1) * v1;
    }
  }
}

void StateVec::apply_two(int q_low, int q_high, const CMat& m) {
  check_slot(n_, q_low);
  check_slot(n_, q_high);
  if (q_low == q_high) throw std::invalid_argument("apply_two: qubits must differ");
  const uint64_t bl = uint64_t(1) << q_low;
  const uint64_t bh = uint64_t(1) << q_high;
  const uint64_t dim = a_.size();
  for (uint64_t i = 0; i < dim; ++i) {
    if (i & (bl | bh)) continue;
    const uint64_t idx[4] = {i, i | bl, i | bh, i | bl | bh};
    cplx in[4];
    for (int k = 0; k < 4; ++k) in[k] = a_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += m(r, c) * in[c];
      a_[idx[r]] = acc;
    }
  }
}

void StateVec::apply_h(int q) {
  check_slot(n_, q);
  const uint64_t step = uint64_t(1) << q;
  for (uint64_t base = 0; base < a_.size(); base += 2 * step) {
    for (uint64_t off = 0; off < step; ++off) {
      const uint64_t i0 = base | off;
      const uint64_t i1 = i0 | step;
      const cplx v0 = a_[i0];
      const cplx v1 = a_[i1];
      a_[i0] = kInvSqrt2 * (v0 + v1);
      a_[i1] = kInvSqrt2 * (v0 - v1);
    }
  }
}

void StateVec::apply_s(int q) {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  for (uint64_t i = 0; i < a_.size(); ++i)
    if (i & bit) a_[i] *= cplx(0.0, 1.0);
}

void StateVec::apply_t(int q) {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  const cplx w = std::exp(cplx(0.0, 0.78539816339744830962));
  for (uint64_t i = 0; i < a_.size(); ++i)
    if (i & bit) a_[i] *= w;
}

void StateVec::apply_x(int q) {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  for (uint64_t i = 0; i < a_.size(); ++i)
    if (!(i & bit)) std::swap(a_[i], a_[i | bit]);
}

void StateVec::apply_y(int q) {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  for (uint64_t i = 0; i < a_.size(); ++i) {
    if (i & bit) continue;
    const cplx v0 = a_[i];
    const cplx v1 = a_[i | bit];
    a_[i] = cplx(0.0, -1.0) * v1;
    a_[i | bit] = cplx(0.0, 1.0) * v0;
  }
}

void StateVec::apply_z(int q) {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  for (uint64_t i = 0; i < a_.size(); ++i)
    if (i & bit) a_[i] = -a_[i];
}

void StateVec::apply_cz(int a, int b) {
  check_slot(n_, a);
  check_slot(n_, b);
  if (a == b) throw std::invalid_argument("apply_cz: qubits must differ");
  const uint64_t mask = (uint64_t(1) << a) | (uint64_t(1) << b);
  for (uint64_t i = 0; i < a_.size(); ++i)
    if ((i & mask) == mask) a_[i] = -a_[i];
}

void StateVec::apply_cnot(int control, int target) {
  check_slot(n_, control);
  check_slot(n_, target);
  if (control == target) throw std::invalid_argument("apply_cnot: qubits must differ");
  const uint64_t cb = uint64_t(1) << control;
  const uint64_t tb = uint64_t(1) << target;
  for (uint64_t i = 0; i < a_.size(); ++i)
    if ((i & cb) && !(i & tb)) std::swap(a_[i], a_[i | tb]);
}

void StateVec::apply_gate(Gate g, int q1, int q2) {
  switch (g) {
    case Gate::H: apply_h(q1); return;
    case Gate::S: apply_s(q1); return;
    case Gate::T: apply_t(q1); return;
    case Gate::X: apply_x(q1); return;
    case Gate::Y: apply_y(q1); return;
    case Gate::Z: apply_z(q1); return;
    case Gate::Cphase: apply_cz(q1, q2); return;
  }
  throw std::invalid_argument("apply_gate: unknown gate");
}

void StateVec::apply_pauli(const PauliOp& p) {
  if (p.n != n_) throw std::invalid_argument("apply_pauli: dimension mismatch");
  const cplx ph = p.phase();
  if (p.x_bits == 0) {
    for (uint64_t i = 0; i < a_.size(); ++i) {
      const bool neg = std::popcount(i & p.z_bits) & 1;
      a_[i] *= neg ? -ph : ph;
    }
    return;
  }
  for (uint64_t i = 0; i < a_.size(); ++i) {
    const uint64_t j = i ^ p.x_bits;
    if (j < i) continue;
    const cplx vi = a_[i];
    const cplx vj = a_[j];
    const bool neg_i = std::popcount(i & p.z_bits) & 1;
    const bool neg_j = std::popcount(j & p.z_bits) & 1;
    a_[j] = (neg_i ? -ph : ph) * vi;
    a_[i] = (neg_j ? -ph : ph) * vj;
  }
}

void StateVec::apply_pauli_on(const PauliOp& p, const std::vector<int>& slots) {
  if (p.n != static_cast<int>(slots.size()))
    throw std::invalid_argument("apply_pauli_on: slot count mismatch");
  uint64_t x = 0, z = 0;
  for (int k = 0; k < p.n; ++k) {
    check_slot(n_, slots[k]);
    if ((p.x_bits >> k) & 1) x |= uint64_t(1) << slots[k];
    if ((p.z_bits >> k) & 1) z |= uint64_t(1) << slots[k];
  }
  apply_pauli(PauliOp(n_, x, z, p.phase_i));
}

void StateVec::attach_plus() {
  if (n_ + 1 > 26) throw std::runtime_error("StateVec: capacity exceeded");
  const uint64_t dim = a_.size();
  a_.resize(dim * 2);
  for (uint64_t i = 0; i < dim; ++i) {
    const cplx v = a_[i] * kInvSqrt2;
    a_[i] = v;
    a_[i + dim] = v;
  }
  ++n_;
}

void StateVec::remove_qubit(int q, int keep_bit) {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  const uint64_t low_mask = bit - 1;
  const uint64_t new_dim = a_.size() >> 1;
  CVec out(new_dim);
  for (uint64_t i = 0; i < new_dim; ++i) {
    const uint64_t src = ((i & ~low_mask) << 1) | (i & low_mask) | (keep_bit ? bit : 0);
    out[i] = a_[src];
  }
  a_ = std::move(out);
  --n_;
}

double StateVec::outcome_prob(int q, const MeasBasis& basis, int outcome) const {
  check_slot(n_, q);
  const uint64_t bit = uint64_t(1) << q;
  if (basis.kind == MeasBasis::Kind::Z) {
    double p = 0.0;
    for (uint64_t i = 0; i < a_.size(); ++i)
      if (((i & bit) != 0) == (outcome != 0)) p += std::norm(a_[i]);
    return p;
  }
  const cplx e = std::exp(cplx(0.0, -basis.phi)) * (outcome ? -1.0 : 1.0);
  double p = 0.0;
  for (uint64_t i = 0; i < a_.size(); ++i) {
    if (i & bit) continue;
    p += std::norm(kInvSqrt2 * (a_[i] + e * a_[i | bit]));
  }
  return p;
}

void StateVec::collapse(int q, int outcome, double prob, bool rotated, const MeasBasis& basis,
                        bool remove) {
  const uint64_t bit = uint64_t(1) << q;
  const double inv = 1.0 / std::sqrt(prob);
  if (remove) {
    // In the rotated frame the post-measurement state is |outcome> x rest.
    remove_qubit(q, outcome);
    for (auto& v : a_) v *= inv;
    return;
  }
  for (uint64_t i = 0; i < a_.size(); ++i) {
    if (((i & bit) != 0) == (outcome != 0))
      a_[i] *= inv;
    else
      a_[i] = 0.0;
  }
  if (rotated) apply_one(q, adjoint(basis.rotation()));
}

StateVec::MeasResult StateVec::measure(int q, const MeasBasis& basis, Rng& rng, bool remove) {
  check_slot(n_, q);
  const bool rotated = basis.kind == MeasBasis::Kind::XY;
  if (rotated) apply_one(q, basis.rotation());
  const MeasBasis zb = MeasBasis::z();
  const double p0 = outcome_prob(q, zb, 0);
  const int outcome = rng.uniform() < p0 ? 0 : 1;
  const double prob = outcome ? 1.0 - p0 : p0;
  collapse(q, outcome, prob, rotated, basis, remove);
  return {outcome, prob};
}

double StateVec::measure_forced(int q, const MeasBasis& basis, int outcome, bool remove) {
  check_slot(n_, q);
  const bool rotated = basis.kind == MeasBasis::Kind::XY;
  if (rotated) apply_one(q, basis.rotation());
  const double prob = outcome_prob(q, MeasBasis::z(), outcome);
  if (prob <= kZeroBranchTol) {
    if (rotated) apply_one(q, adjoint(basis.rotation()));
    throw ZeroBranchError("measure_forced: requested branch has zero probability");
  }
  collapse(q, outcome, prob, rotated, basis, remove);
  return prob;
}

cplx StateVec::inner(const StateVec& other) const {
  if (other.n_ != n_) throw std::invalid_argument("inner: dimension mismatch");
  cplx acc = 0.0;
  for (uint64_t i = 0; i < a_.size(); ++i) acc += std::conj(a_[i]) * other.a_[i];
  return acc;
}

double StateVec::fidelity(const StateVec& other) const { return std::norm(inner(other)); }

void StateVec::permute_qubits(const std::vector<int>& new_position) {
  if (static_cast<int>(new_position.size()) != n_)
    throw std::invalid_argument("permute_qubits: size mismatch");
  CVec out(a_.size());
  for (uint64_t i = 0; i < a_.size(); ++i) {
    uint64_t j = 0;
    for (int q = 0; q < n_; ++q)
      if ((i >> q) & 1) j |= uint64_t(1) << new_position[q];
    out[j] = a_[i];
  }
  a_ = std::move(out);
}

StateVec tensor_low_high(const StateVec& low, const StateVec& high) {
  StateVec out(low.num_qubits() + high.num_qubits());
  auto& a = out.amps();
  const uint64_t dl = low.dim();
  for (uint64_t h = 0; h < high.dim(); ++h)
    for (uint64_t l = 0; l < dl; ++l) a[(h << low.num_qubits()) | l] = high.amps()[h] * low.amps()[l];
  return out;
}

StateVec random_state(int n, Rng& rng) {
  StateVec s(n);
  auto& a = s.amps();
  for (auto& v : a) v = cplx(rng.normal(), rng.normal());
  s.normalize();
  return s;
}

CMat gate_matrix_1q(Gate g) {
  CMat m(2, 2);
  switch (g) {
    case Gate::H:
      m(0, 0) = kInvSqrt2; m(0, 1) = kInvSqrt2;
      m(1, 0) = kInvSqrt2; m(1, 1) = -kInvSqrt2;
      return m;
    case Gate::S:
      m(0, 0) = 1.0; m(1, 1) = cplx(0.0, 1.0);
      return m;
    case Gate::T:
      m(0, 0) = 1.0; m(1, 1) = std::exp(cplx(0.0, 0.78539816339744830962));
      return m;
    case Gate::X:
      m(0, 1) = 1.0; m(1, 0) = 1.0;
      return m;
    case Gate::Y:
      m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0);
      return m;
    case Gate::Z:
      m(0, 0) = 1.0; m(1, 1) = -1.0;
      return m;
    default:
      throw std::invalid_argument("gate_matrix_1q: not a one-qubit gate");
  }
}

}  // namespace graphsim
