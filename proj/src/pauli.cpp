#include "graphsim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace graphsim {

namespace {

void check_qubit(int n, int q) {
  if (q < 0 || q >= n) throw std::out_of_range("qubit index out of range");
}

uint64_t mask_n(int n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

PauliOp::PauliOp(int n_, uint64_t x, uint64_t z, int phase) : n(n_), x_bits(x), z_bits(z) {
  if (n_ < 0 || n_ > 62) throw std::invalid_argument("PauliOp: unsupported qubit count");
  if ((x & ~mask_n(n_)) != 0 || (z & ~mask_n(n_)) != 0)
    throw std::invalid_argument("PauliOp: bit string longer than n");
  phase_i = ((phase % 4) + 4) % 4;
}

PauliOp PauliOp::identity(int n_) { return PauliOp(n_, 0, 0, 0); }

PauliOp PauliOp::single(int n_, int qubit, char axis) {
  check_qubit(n_, qubit);
  const uint64_t bit = 1ULL << qubit;
  switch (axis) {
    case 'I': return PauliOp(n_, 0, 0, 0);
    case 'X': return PauliOp(n_, bit, 0, 0);
    case 'Z': return PauliOp(n_, 0, bit, 0);
    case 'Y': return PauliOp(n_, bit, bit, 1);  // Y = i X Z
    default: throw std::invalid_argument("PauliOp::single: unknown axis");
  }
}

cplx PauliOp::phase() const {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_i];
}

bool PauliOp::commutes_with(const PauliOp& other) const {
  if (n != other.n) throw std::invalid_argument("commutes_with: dimension mismatch");
  const int sym = std::popcount(x_bits & other.z_bits) + std::popcount(z_bits & other.x_bits);
  return (sym & 1) == 0;
}

int PauliOp::weight() const { return std::popcount(x_bits | z_bits); }

CMat PauliOp::to_matrix() const {
  const std::size_t dim = 1ULL << n;
  CMat m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    // X^x Z^z |col> = (-1)^{z . col} |col ^ x>
    const int sign = std::popcount(z_bits & col) & 1;
    m(col ^ x_bits, col) = phase() * (sign ? -1.0 : 1.0);
  }
  return m;
}

std::string PauliOp::to_string() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[phase_i];
  for (int q = 0; q < n; ++q) {
    const bool x = (x_bits >> q) & 1;
    const bool z = (z_bits >> q) & 1;
    s += x ? (z ? "W" : "X") : (z ? "Z" : "I");  // W marks the phase-0 XZ product
  }
  return s;
}

PauliOp pauli_mul(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) throw std::invalid_argument("pauli_mul: dimension mismatch");
  // (X^xa Z^za)(X^xb Z^zb) = (-1)^{za.xb} X^{xa^xb} Z^{za^zb}
  const int swaps = std::popcount(a.z_bits & b.x_bits);
  const int phase = (a.phase_i + b.phase_i + 2 * swaps) % 4;
  return PauliOp(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits, phase);
}

bool equal_up_to_phase(const PauliOp& a, const PauliOp& b) {
  return a.n == b.n && a.x_bits == b.x_bits && a.z_bits == b.z_bits;
}

PauliFrame::PauliFrame(int n_, uint64_t x, uint64_t z) : n(n_), x_bits(x), z_bits(z) {
  if (n_ < 0 || n_ > 31) throw std::invalid_argument("PauliFrame: unsupported qubit count");
  if ((x & ~mask_n(n_)) != 0 || (z & ~mask_n(n_)) != 0)
    throw std::invalid_argument("PauliFrame: bit string longer than n");
}

PauliFrame PauliFrame::from_bits(int n_, uint64_t packed) {
  const uint64_t m = mask_n(n_);
  return PauliFrame(n_, packed & m, (packed >> n_) & m);
}

bool PauliFrame::bit(int i) const {
  if (i < 0 || i >= 2 * n) throw std::out_of_range("PauliFrame::bit index");
  return i < n ? ((x_bits >> i) & 1) : ((z_bits >> (i - n)) & 1);
}

std::string PauliFrame::to_string() const {
  std::string s;
  for (int i = 0; i < n; ++i) s += ((x_bits >> i) & 1) ? '1' : '0';
  s += '|';
  for (int i = 0; i < n; ++i) s += ((z_bits >> i) & 1) ? '1' : '0';
  return s;
}

PauliFrame frame_compose(const PauliFrame& a, const PauliFrame& b) {
  if (a.n != b.n) throw std::invalid_argument("frame_compose: dimension mismatch");
  return PauliFrame(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits);
}

PauliOp lift(const PauliFrame& frame) { return PauliOp(frame.n, frame.x_bits, frame.z_bits, 0); }

PauliFrame project_frame(const PauliOp& op) { return PauliFrame(op.n, op.x_bits, op.z_bits); }

namespace {

enum class Cliff { H, S, CZ, CNOT };

PauliOp generator_image(Cliff g, int n, int q1, int q2, int qubit, bool is_x) {
  const PauliOp x = PauliOp::single(n, qubit, 'X');
  const PauliOp z = PauliOp::single(n, qubit, 'Z');
  switch (g) {
    case Cliff::H:
      if (qubit == q1) return is_x ? z : x;
      break;
    case Cliff::S:
      // S X S^dag = Y, S Z S^dag = Z
      if (qubit == q1 && is_x) return PauliOp::single(n, qubit, 'Y');
      break;
    case Cliff::CZ:
      if (is_x && (qubit == q1 || qubit == q2))
        return pauli_mul(x, PauliOp::single(n, qubit == q1 ? q2 : q1, 'Z'));
      break;
    case Cliff::CNOT:
      if (is_x && qubit == q1) return pauli_mul(x, PauliOp::single(n, q2, 'X'));
      if (!is_x && qubit == q2) return pauli_mul(z, PauliOp::single(n, q1, 'Z'));
      break;
  }
  return is_x ? x : z;
}

PauliOp conjugate_by(Cliff g, const PauliOp& p, int q1, int q2) {
  // P factors as i^phase * prod_q X_q * prod_q Z_q with commuting factors,
  // so the conjugate is the product of the generator images in that order.
  PauliOp out = PauliOp::identity(p.n);
  out.phase_i = p.phase_i;
  for (int q = 0; q < p.n; ++q)
    if ((p.x_bits >> q) & 1) out = pauli_mul(out, generator_image(g, p.n, q1, q2, q, true));
  for (int q = 0; q < p.n; ++q)
    if ((p.z_bits >> q) & 1) out = pauli_mul(out, generator_image(g, p.n, q1, q2, q, false));
  return out;
}

}  // namespace

PauliOp conjugate_h(const PauliOp& p, int q) {
  check_qubit(p.n, q);
  return conjugate_by(Cliff::H, p, q, -1);
}

PauliOp conjugate_s(const PauliOp& p, int q) {
  check_qubit(p.n, q);
  return conjugate_by(Cliff::S, p, q, -1);
}

PauliOp conjugate_cz(const PauliOp& p, int a, int b) {
  check_qubit(p.n, a);
  check_qubit(p.n, b);
  if (a == b) throw std::invalid_argument("conjugate_cz: qubits must differ");
  return conjugate_by(Cliff::CZ, p, a, b);
}

PauliOp conjugate_cnot(const PauliOp& p, int control, int target) {
  check_qubit(p.n, control);
  check_qubit(p.n, target);
  if (control == target) throw std::invalid_argument("conjugate_cnot: qubits must differ");
  return conjugate_by(Cliff::CNOT, p, control, target);
}

}  // namespace graphsim
