#pragma once

// Dense Fock-space oracle for small mode counts: Jordan-Wigner in the
// x-string convention a_j = (prod_{i<j} sx_i) * (sz + i sy)_j / 2, so the
// Fock vacuum is the product state |<-> per qubit.

#include <Eigen/Dense>

#include "cftlab/lattice.hpp"

namespace fock {

using cftlab::cplx;
using cftlab::MatC;
using cftlab::VecC;

inline MatC kron(const MatC& a, const MatC& b) {
  MatC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline MatC pauli(char c) {
  MatC p(2, 2);
  switch (c) {
    case 'I': p << 1, 0, 0, 1; break;
    case 'X': p << 0, 1, 1, 0; break;
    case 'Y': p << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default:  p << 1, 0, 0, -1; break;  // Z
  }
  return p;
}

inline MatC pauliString(const std::string& s) {
  MatC out = MatC::Identity(1, 1);
  for (char c : s) out = kron(out, pauli(c));
  return out;
}

inline MatC jwA(int m, int j) {
  std::string s(m, 'I');
  for (int i = 0; i < j; ++i) s[i] = 'X';
  MatC lower = 0.5 * (pauli('Z') + cplx(0, 1) * pauli('Y'));
  MatC out = MatC::Identity(1, 1);
  for (int i = 0; i < m; ++i)
    out = kron(out, (i < j) ? pauli('X') : (i == j ? lower : pauli('I')));
  return out;
}

inline MatC denseOp(const cftlab::QuadraticOperator& q) {
  int m = q.modes();
  long d = 1L << m;
  std::vector<MatC> A(m), Ad(m);
  for (int j = 0; j < m; ++j) {
    A[j] = jwA(m, j);
    Ad[j] = A[j].adjoint();
  }
  MatC H = q.offset() * MatC::Identity(d, d);
  for (int p = 0; p < m; ++p)
    for (int s = 0; s < m; ++s) {
      if (q.hoppingBlock()(p, s) != 0.0) H += q.hoppingBlock()(p, s) * Ad[p] * A[s];
      if (q.pairingBlock()(p, s) != 0.0) H += 0.5 * q.pairingBlock()(p, s) * Ad[p] * Ad[s];
      if (q.annihilationBlock()(p, s) != 0.0) H += 0.5 * q.annihilationBlock()(p, s) * A[p] * A[s];
    }
  return H;
}

inline VecC fockVacuum(int m) {
  VecC minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  VecC v = VecC::Ones(1);
  for (int i = 0; i < m; ++i) {
    VecC nv(v.size() * 2);
    for (long a = 0; a < v.size(); ++a) {
      nv[2 * a] = v[a] * minus[0];
      nv[2 * a + 1] = v[a] * minus[1];
    }
    v = nv;
  }
  return v;
}

}  // namespace fock
