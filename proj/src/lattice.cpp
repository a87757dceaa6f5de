#include "cftlab/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace cftlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

void fillDerived(LatticeSpec& sp) {
  sp.n = 2 * sp.cells;
  sp.m = 2 * sp.n;
  sp.eps = sp.L / sp.cells;
  sp.epsp = sp.eps / 2;
  sp.pos.resize(sp.m);
  for (int j = 0; j < sp.m; ++j) sp.pos[j] = sp.epsp * (j - sp.n);
  sp.xs.resize(sp.n);
  for (int r = 0; r < sp.n; ++r) sp.xs[r] = sp.eps * (r - sp.cells);
}
}  // namespace

LatticeSpec buildSpec(int N, double L, double lambda, Sector sector, int maxN) {
  if (N < 0) throw LatticeError("buildSpec: N must be nonnegative");
  if (L <= 0) throw LatticeError("buildSpec: L must be positive");
  if (N > maxN)
    throw LatticeError("buildSpec: scale N exceeds the configured memory cap");
  LatticeSpec sp;
  sp.N = N;
  sp.cells = 1 << N;
  sp.L = L;
  sp.lambda = lambda;
  sp.sector = sector;
  fillDerived(sp);
  return sp;
}

LatticeSpec buildCellSpec(int cells, double L, double lambda, Sector sector) {
  if (cells < 1) throw LatticeError("buildCellSpec: cells must be >= 1");
  if (L <= 0) throw LatticeError("buildCellSpec: L must be positive");
  LatticeSpec sp;
  sp.N = -1;
  sp.cells = cells;
  sp.L = L;
  sp.lambda = lambda;
  sp.sector = sector;
  fillDerived(sp);
  return sp;
}

VecR reducedMomenta(const LatticeSpec& sp) {
  VecR ks(sp.n);
  for (int i = 0; i < sp.n; ++i) {
    double mlabel = sp.ns() ? (i - sp.n / 2 + 0.5) : double(i - sp.n / 2 + 1);
    ks[i] = (kPi / sp.L) * mlabel;
  }
  return ks;
}

VecR fullMomenta(const LatticeSpec& sp) {
  VecR ls(sp.m);
  for (int i = 0; i < sp.m; ++i) {
    double mlabel = sp.ns() ? (i - sp.n + 0.5) : double(i - sp.n + 1);
    ls[i] = (kPi / sp.L) * mlabel;
  }
  return ls;
}

QuadraticOperator::QuadraticOperator(int m)
    : m_(m),
      P_(MatC::Zero(m, m)),
      Q_(MatC::Zero(m, m)),
      R_(MatC::Zero(m, m)),
      off_(0.0) {}

QuadraticOperator::QuadraticOperator(MatC P, MatC Q, MatC R, cplx off)
    : m_(static_cast<int>(P.rows())),
      P_(std::move(P)),
      Q_(std::move(Q)),
      R_(std::move(R)),
      off_(off) {
  // CAR demands antisymmetric pairing blocks; canonicalize on construction.
  Q_ = 0.5 * (Q_ - Q_.transpose()).eval();
  R_ = 0.5 * (R_ - R_.transpose()).eval();
}

void QuadraticOperator::addNM(int p, int q, cplx c) { P_(p, q) += c; }
void QuadraticOperator::addCC(int p, int q, cplx c) {
  Q_(p, q) += c;
  Q_(q, p) -= c;
}
void QuadraticOperator::addAA(int p, int q, cplx c) {
  R_(p, q) += c;
  R_(q, p) -= c;
}

MatC QuadraticOperator::K() const {
  MatC K = MatC::Zero(2 * m_, 2 * m_);
  K.topLeftCorner(m_, m_) = P_;
  K.topRightCorner(m_, m_) = Q_;
  K.bottomLeftCorner(m_, m_) = R_;
  K.bottomRightCorner(m_, m_) = -P_.transpose();
  return K;
}

QuadraticOperator QuadraticOperator::fromK(const MatC& K, cplx scalar) {
  int m = static_cast<int>(K.rows()) / 2;
  MatC P = K.topLeftCorner(m, m);
  MatC Q = K.topRightCorner(m, m);
  MatC R = K.bottomLeftCorner(m, m);
  cplx off = scalar - 0.5 * P.trace();
  return QuadraticOperator(std::move(P), std::move(Q), std::move(R), off);
}

cplx QuadraticOperator::scalar() const { return off_ + 0.5 * P_.trace(); }

QuadraticOperator QuadraticOperator::dagger() const {
  return QuadraticOperator(P_.adjoint(), -R_.conjugate(), -Q_.conjugate(),
                           std::conj(off_));
}

QuadraticOperator QuadraticOperator::comm(const QuadraticOperator& o) const {
  MatC K1 = K(), K2 = o.K();
  return fromK(K1 * K2 - K2 * K1, 0.0);
}

QuadraticOperator QuadraticOperator::scaled(cplx c) const {
  return QuadraticOperator(c * P_, c * Q_, c * R_, c * off_);
}

QuadraticOperator QuadraticOperator::operator+(
    const QuadraticOperator& o) const {
  return QuadraticOperator(P_ + o.P_, Q_ + o.Q_, R_ + o.R_, off_ + o.off_);
}

bool QuadraticOperator::isHermitian(double tol) const {
  return (P_ - P_.adjoint()).cwiseAbs().maxCoeff() < tol &&
         (R_ + Q_.conjugate()).cwiseAbs().maxCoeff() < tol &&
         std::abs(std::imag(off_)) < tol;
}

QuadraticOperator buildStaggeredHamiltonian(const LatticeSpec& sp) {
  QuadraticOperator q(sp.m);
  double pref = (1.0 / sp.eps) * (sp.L / kPi);
  double zeta = sp.ns() ? -1.0 : 1.0;
  for (int r = 0; r < sp.n; ++r) {
    int j1 = 2 * r;       // psi1(x_r)
    int j2 = 2 * r + 1;   // psi2(x_r)^dag
    int rp = (r + 1) % sp.n;
    double sgn = (r + 1 == sp.n) ? zeta : 1.0;
    // psi1^dag(x_{r+1}) psi2(x_r) - psi1^dag(x_r) psi2(x_r) + h.c.
    q.addCC(2 * rp, j2, pref * sgn);
    q.addCC(j1, j2, -pref);
    q.addAA(j2, 2 * rp, pref * sgn);
    q.addAA(j2, j1, -pref);
    if (sp.lambda != 0.0) {
      q.addNM(j1, j1, pref * sp.lambda);
      q.addNM(j2, j2, pref * sp.lambda);
      q.offset() += -pref * sp.lambda;
    }
  }
  return q;
}

PhiFrame phiTransform(const LatticeSpec& sp) {
  int n = sp.n, m = sp.m;
  VecR ks = reducedMomenta(sp);
  MatC U = MatC::Zero(m, m), V = MatC::Zero(m, m);
  double rt = std::sqrt(double(n));
  for (int s = 0; s < n; ++s) {
    double k = ks[s];
    for (int r = 0; r < n; ++r) {
      double x = sp.xs[r];
      U(2 * s, 2 * r) = std::exp(cplx(0, -k * x)) / rt;
      V(2 * s + 1, 2 * r + 1) = std::exp(cplx(0, -k * (x + sp.epsp))) / rt;
    }
  }
  PhiFrame f;
  f.T = MatC::Zero(2 * m, 2 * m);
  f.T.topLeftCorner(m, m) = U;
  f.T.topRightCorner(m, m) = V;
  f.T.bottomLeftCorner(m, m) = V.conjugate();
  f.T.bottomRightCorner(m, m) = U.conjugate();
  f.ks = ks;
  return f;
}

AhatFrame ahatTransform(const LatticeSpec& sp) {
  int m = sp.m;
  VecR ls = fullMomenta(sp);
  MatC F(m, m);
  double rt = std::sqrt(double(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      F(i, j) = std::exp(cplx(0, -ls[i] * sp.pos[j])) / rt;
  AhatFrame f;
  f.T = MatC::Zero(2 * m, 2 * m);
  f.T.topLeftCorner(m, m) = F;
  f.T.bottomRightCorner(m, m) = F.conjugate();
  f.ls = ls;
  return f;
}

GroundFrame groundFrame(const LatticeSpec& sp) {
  PhiFrame phi = phiTransform(sp);
  QuadraticOperator H = buildStaggeredHamiltonian(sp);
  int m = sp.m;
  MatC Kp = phi.T * H.K() * phi.T.adjoint();
  MatC W = MatC::Identity(2 * m, 2 * m);
  GroundFrame g;
  g.occ = VecR::Zero(m);
  g.om = VecR::Zero(m);
  g.ks = phi.ks;
  for (int s = 0; s < sp.n; ++s) {
    Eigen::Matrix2cd blk = Kp.block(2 * s, 2 * s, 2, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(blk);
    Eigen::Matrix2cd U = es.eigenvectors();
    for (int c = 0; c < 2; ++c) {
      // canonical gauge: first significant component real positive
      int i0 = (std::abs(U(0, c)) > 1e-12) ? 0 : 1;
      U.col(c) *= std::exp(cplx(0, -std::arg(U(i0, c))));
    }
    W.block(2 * s, 2 * s, 2, 2) = U.adjoint();
    W.block(m + 2 * s, m + 2 * s, 2, 2) = U.transpose();
    g.occ[2 * s] = 1.0;  // fill the negative branch
    g.om[2 * s] = es.eigenvalues()[0];
    g.om[2 * s + 1] = es.eigenvalues()[1];
  }
  g.Tfull = W * phi.T;
  return g;
}

SpectralData diagonalize(const LatticeSpec& sp) {
  GroundFrame g = groundFrame(sp);
  SpectralData sd;
  int n = sp.n;
  sd.momenta = g.ks;
  sd.omega.resize(n);
  sd.theta.resize(n);
  double pref = (1.0 / sp.eps) * (sp.L / kPi);
  double offset = 0;
  for (int s = 0; s < n; ++s) {
    sd.omega[s] = g.om[2 * s + 1];
    offset += g.om[2 * s];
    double sk = 2.0 * std::sin(g.ks[s] * sp.eps / 2);
    sd.theta[s] = std::atan2(sk, sp.lambda);
    if (std::abs(sd.omega[s]) < 1e-12 * pref) sd.zeroMode = true;
  }
  sd.diagonalOffset = offset;
  return sd;
}

GaussianState stateFromFrame(const MatC& T, const VecR& occ) {
  int m = static_cast<int>(occ.size());
  MatC Mphi = MatC::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    Mphi(i, i) = 1.0 - occ[i];
    Mphi(m + i, m + i) = occ[i];
  }
  GaussianState st;
  st.M = T.adjoint() * Mphi * T;
  int filled = 0;
  for (int i = 0; i < m; ++i) filled += (occ[i] > 0.5) ? 1 : 0;
  st.parity = (filled % 2 == 0) ? +1 : -1;
  return st;
}

GaussianState groundState(const LatticeSpec& sp) {
  SpectralData sd = diagonalize(sp);
  if (sd.zeroMode)
    throw DegenerateGroundState(
        "groundState: zero mode present (Ramond massless); choose a parity "
        "sector explicitly");
  GroundFrame g = groundFrame(sp);
  return stateFromFrame(g.Tfull, g.occ);
}

VacuumFrame vacuumFrame(const LatticeSpec& sp) {
  GroundFrame g = groundFrame(sp);
  int m = sp.m;
  VacuumFrame v;
  v.S = g.Tfull;
  v.mom = VecR::Zero(m);
  for (int s = 0; s < sp.n; ++s) {
    // swap the filled mode with its conjugate row: holes become excitations
    v.S.row(2 * s).swap(v.S.row(m + 2 * s));
    v.mom[2 * s] = -g.ks[s];
    v.mom[2 * s + 1] = g.ks[s];
  }
  return v;
}

}  // namespace cftlab
