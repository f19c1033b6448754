#include "graphsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace graphsim {

CMat CMat::eye(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat mul(const CMat& lhs, const CMat& rhs) {
  if (lhs.cols != rhs.rows) throw std::invalid_argument("CMat mul: shape mismatch");
  CMat out(lhs.rows, rhs.cols);
  for (std::size_t i = 0; i < lhs.rows; ++i) {
    for (std::size_t k = 0; k < lhs.cols; ++k) {
      const cplx v = lhs(i, k);
      if (v == cplx(0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j) out(i, j) += v * rhs(k, j);
    }
  }
  return out;
}

CVec mul(const CMat& m, const CVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("CMat mul: vector size mismatch");
  CVec out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMat adjoint(const CMat& m) {
  CMat out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

CMat kron(const CMat& lhs, const CMat& rhs) {
  CMat out(lhs.rows * rhs.rows, lhs.cols * rhs.cols);
  for (std::size_t i = 0; i < lhs.rows; ++i)
    for (std::size_t j = 0; j < lhs.cols; ++j) {
      const cplx v = lhs(i, j);
      if (v == cplx(0.0)) continue;
      for (std::size_t k = 0; k < rhs.rows; ++k)
        for (std::size_t l = 0; l < rhs.cols; ++l)
          out(i * rhs.rows + k, j * rhs.cols + l) = v * rhs(k, l);
    }
  return out;
}

CMat add(const CMat& lhs, const CMat& rhs) {
  CMat out = lhs;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += rhs.a[i];
  return out;
}

CMat sub(const CMat& lhs, const CMat& rhs) {
  CMat out = lhs;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= rhs.a[i];
  return out;
}

CMat scale(const CMat& m, cplx factor) {
  CMat out = m;
  for (auto& v : out.a) v *= factor;
  return out;
}

double max_abs_diff(const CMat& lhs, const CMat& rhs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.a.size(); ++i)
    worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
  return worst;
}

bool is_unitary(const CMat& m, double tol) {
  if (m.rows != m.cols) return false;
  return max_abs_diff(mul(adjoint(m), m), CMat::eye(m.rows)) <= tol;
}

void hermitian_eig(const CMat& h, std::vector<double>& evals, CMat& evecs) {
  const std::size_t n = h.rows;
  CMat a = h;
  CMat v = CMat::eye(n);

  for (int sweep = 0; sweep < 128; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-30) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        // Rotate in the (p,q) plane to zero a(p,q); phase absorbs arg(apq).
        const cplx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  evals.resize(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = a(i, i).real();
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return raw[x] < raw[y]; });

  evecs = CMat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    evals[j] = raw[order[j]];
    for (std::size_t i = 0; i < n; ++i) evecs(i, j) = v(i, order[j]);
  }
}

CMat expm_i_hermitian(const CMat& h, double t) {
  std::vector<double> evals;
  CMat evecs;
  hermitian_eig(h, evals, evecs);
  const std::size_t n = h.rows;
  CMat d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    d(i, i) = std::exp(cplx(0.0, -t * evals[i]));
  return mul(mul(evecs, d), adjoint(evecs));
}

double sup_norm(const CMat& m) {
  CMat gram = mul(adjoint(m), m);
  std::vector<double> evals;
  CMat evecs;
  hermitian_eig(gram, evals, evecs);
  const double top = evals.empty() ? 0.0 : evals.back();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

}  // namespace graphsim
