#include "cftlab/gaussian.hpp"

#include <Eigen/Eigenvalues>

namespace cftlab {

QuadraticOperator evolve(const QuadraticOperator& op,
                         const QuadraticOperator& generator, double t) {
  if (!generator.isHermitian())
    throw NonHermitianGenerator("evolve: generator is not Hermitian");
  MatC KG = generator.K();
  Eigen::SelfAdjointEigenSolver<MatC> es(KG);
  VecC ph(es.eigenvalues().size());
  for (int i = 0; i < ph.size(); ++i)
    ph[i] = std::exp(cplx(0, t * es.eigenvalues()[i]));
  MatC U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  MatC Kt = U * op.K() * U.adjoint();
  return QuadraticOperator::fromK(Kt, op.scalar());
}

cplx expectation(const GaussianState& state, const QuadraticOperator& op) {
  int m = op.modes();
  const MatC& M = state.M;
  MatC ada = M.bottomRightCorner(m, m);   // <a^dag_p a_q>
  MatC adad = M.bottomLeftCorner(m, m);   // <a^dag_p a^dag_q>
  MatC aa = M.topRightCorner(m, m);       // <a_p a_q>
  cplx val = op.offset();
  val += (op.hoppingBlock().array() * ada.array()).sum();
  val += 0.5 * (op.pairingBlock().array() * adad.array()).sum();
  val += 0.5 * (op.annihilationBlock().array() * aa.array()).sum();
  return val;
}

namespace {

// full contraction table C_{pq} = <c_p c_q>, c = (a; a^dag)
MatC contractionTable(const GaussianState& state) {
  int m = state.modes();
  MatC C(2 * m, 2 * m);
  C.topLeftCorner(m, m) = state.M.topRightCorner(m, m);        // <a a>
  C.topRightCorner(m, m) = state.M.topLeftCorner(m, m);        // <a a^dag>
  C.bottomLeftCorner(m, m) = state.M.bottomRightCorner(m, m);  // <a^dag a>
  C.bottomRightCorner(m, m) = state.M.bottomLeftCorner(m, m);  // <a^dag a^dag>
  return C;
}

// Laplace expansion along the first row; monomials are short, so the
// double-factorial cost is irrelevant and there is no pivoting subtlety.
cplx pfaffianRec(const MatC& A, std::vector<int>& idx) {
  size_t n = idx.size();
  if (n == 0) return 1.0;
  cplx tot = 0.0;
  int i0 = idx[0];
  std::vector<int> rest(idx.begin() + 1, idx.end());
  for (size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> sub;
    sub.reserve(rest.size() - 1);
    for (size_t l = 0; l < rest.size(); ++l)
      if (l != j) sub.push_back(rest[l]);
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    tot += sgn * A(i0, rest[j]) * pfaffianRec(A, sub);
  }
  return tot;
}

cplx pfaffian(const MatC& A) {
  int n = static_cast<int>(A.rows());
  if (n % 2) return 0.0;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return pfaffianRec(A, idx);
}

// W matrix in c-ordering: op = sum W_{pq} c_p c_q + scalar part
MatC cKernel(const QuadraticOperator& op) {
  int m = op.modes();
  MatC W = MatC::Zero(2 * m, 2 * m);
  W.bottomLeftCorner(m, m) = op.hoppingBlock();
  W.bottomRightCorner(m, m) = 0.5 * op.pairingBlock();
  W.topLeftCorner(m, m) = 0.5 * op.annihilationBlock();
  return W;
}

}  // namespace

cplx expectation(const GaussianState& state,
                 const std::vector<FermionFactor>& monomial) {
  size_t Lm = monomial.size();
  if (Lm % 2) return 0.0;
  int m = state.modes();
  MatC Ctab = contractionTable(state);
  auto slot = [m](const FermionFactor& f) { return f.dag ? m + f.mode : f.mode; };
  MatC A = MatC::Zero(Lm, Lm);
  for (size_t i = 0; i < Lm; ++i)
    for (size_t j = i + 1; j < Lm; ++j) {
      A(i, j) = Ctab(slot(monomial[i]), slot(monomial[j]));
      A(j, i) = -A(i, j);
    }
  return pfaffian(A);
}

cplx expectationProduct(const GaussianState& state, const QuadraticOperator& A,
                        const QuadraticOperator& B) {
  MatC C = contractionTable(state);
  MatC WA = cKernel(A), WB = cKernel(B);
  cplx eA = (WA.array() * C.array()).sum() + A.offset();
  cplx eB = (WB.array() * C.array()).sum() + B.offset();
  MatC CWBC1 = C * WB * C.transpose();
  MatC CWBC2 = C * WB.transpose() * C.transpose();
  cplx cross = -(WA.array() * CWBC1.array()).sum() +
               (WA.array() * CWBC2.array()).sum();
  return eA * eB + cross;
}

cplx vacuumCommutator(const QuadraticOperator& A, const QuadraticOperator& B) {
  return 0.5 * ((A.annihilationBlock() * B.pairingBlock()).trace() -
                (B.annihilationBlock() * A.pairingBlock()).trace());
}

cplx conformalCorrelator(const GaussianState& ground,
                         const QuadraticOperator& A, const QuadraticOperator& B,
                         const QuadraticOperator& generator, double t) {
  QuadraticOperator Bt = evolve(B, generator, t);
  return expectationProduct(ground, A, Bt);
}

cplx staggeredFieldCorrelator(const LatticeSpec& sp, int r, int s, double t) {
  constexpr double kPi = 3.14159265358979323846;
  int m = sp.m;
  GaussianState gs = groundState(sp);
  MatC K = (kPi / sp.L) * buildStaggeredHamiltonian(sp).K();
  Eigen::SelfAdjointEigenSolver<MatC> es(K);
  VecC ph(2 * m);
  for (int i = 0; i < 2 * m; ++i)
    ph[i] = std::exp(cplx(0, t * es.eigenvalues()[i]));
  MatC U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  MatC C = contractionTable(gs);
  // a^dag_{2r}(t) = sum_j U^T[m+2r, j] c_j; contract against a^dag_{2s+1}
  cplx G = 0.0;
  for (int j = 0; j < 2 * m; ++j) G += U(j, m + 2 * r) * C(j, m + 2 * s + 1);
  return G / sp.eps;
}

cplx continuumFieldCorrelator(const LatticeSpec& sp, int r, int s, double t) {
  constexpr double kPi = 3.14159265358979323846;
  double d = sp.xs[r] - sp.xs[s] - sp.eps / 2;
  return -(1.0 / (8 * sp.L)) *
         (1.0 / std::sin(kPi * (d - t) / (2 * sp.L)) +
          1.0 / std::sin(kPi * (d + t) / (2 * sp.L)));
}

}  // namespace cftlab
