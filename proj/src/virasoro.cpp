#include "cftlab/virasoro.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <unordered_map>

namespace cftlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

void requireMassless(const LatticeSpec& sp, const char* who) {
  if (sp.lambda != 0.0)
    throw MassiveDensityUnsupported(std::string(who) +
                                    ": only the massless density is defined");
}

// index of a momentum on the full grid via its doubled integer label
struct MomentumIndex {
  std::unordered_map<long, int> map;
  double L;
  explicit MomentumIndex(const VecR& ls, double L_) : L(L_) {
    for (int i = 0; i < ls.size(); ++i) map[key(ls[i])] = i;
  }
  long key(double l) const { return std::lround(2.0 * l * L / kPi); }
  int find(double l) const {
    auto it = map.find(key(l));
    return it == map.end() ? -1 : it->second;
  }
};

}  // namespace

QuadraticOperator hamiltonianDensityModes(const LatticeSpec& sp, double k,
                                          Chirality chir) {
  requireMassless(sp, "hamiltonianDensityModes");
  int n = sp.n;
  double pref = (sp.L / kPi) / (2 * sp.eps);
  double zeta = sp.ns() ? -1.0 : 1.0;
  bool bar = (chir == Chirality::Right);
  QuadraticOperator q(sp.m);
  // (index, wrap sign) of psi1(x_r) = a_{2r} and psi2(x_r) = a^dag_{2r+1}
  auto wrapped = [&](int r, int comp) {
    int w = (r % n + n) % n;
    int wraps = std::abs((r - w) / n);
    double s = (wraps % 2 == 0) ? 1.0 : zeta;
    return std::pair<int, double>{2 * w + comp, s};
  };
  for (int r = 0; r < n; ++r) {
    double x = sp.xs[r];
    cplx ph = std::exp(cplx(0, k * (bar ? -x : x))) * pref;
    auto [i1p, s1p] = wrapped(r + 1, 0);
    auto [i1, s1] = wrapped(r, 0);
    auto [i2m, s2m] = wrapped(r - 1, 1);
    auto [i2, s2] = wrapped(r, 1);
    // T1 = psi1^dag(x+eps) psi2(x), T2 = -psi1^dag(x) psi2(x),
    // T3 = psi2^dag(x-eps) psi1(x), T4 = -psi2^dag(x) psi1(x); plus h.c.
    q.addCC(i1p, i2, ph * s1p * s2);
    q.addAA(i2, i1p, ph * s1p * s2);
    q.addCC(i1, i2, -ph * s1 * s2);
    q.addAA(i2, i1, -ph * s1 * s2);
    q.addAA(i2m, i1, ph * s2m * s1);
    q.addCC(i1, i2m, ph * s2m * s1);
    q.addAA(i2, i1, -ph * s2 * s1);
    q.addCC(i1, i2, -ph * s2 * s1);
  }
  return q;
}

KooSaleurGenerator kooSaleur(const LatticeSpec& sp, double k, double c,
                             Chirality chir) {
  requireMassless(sp, "kooSaleur");
  KooSaleurGenerator g;
  g.N = sp.N;
  g.k = k;
  g.chirality = chir;
  g.c = c;
  QuadraticOperator Hkq = hamiltonianDensityModes(sp, k, chir);
  if (std::abs(k) < 1e-14) {
    g.payload = Hkq.scaled(0.5);
    g.payload.offset() += c / 24.0;
    return g;
  }
  double s = std::sin(0.5 * sp.eps * k);
  if (std::abs(s) < 1e-12 || std::abs(k) * sp.eps >= 2 * kPi - 1e-12)
    throw NyquistViolation("kooSaleur: momentum at or beyond the lattice cutoff");
  double coef = kPi * sp.eps / (2 * sp.L * s);
  QuadraticOperator H0 = buildStaggeredHamiltonian(sp);
  g.payload = (Hkq + Hkq.comm(H0).scaled(coef)).scaled(0.5);
  return g;
}

QuadraticOperator hermitianCombination(const LatticeSpec& sp, double k,
                                       double c, double phi, Chirality chir) {
  QuadraticOperator Lp = kooSaleur(sp, k, c, chir).payload;
  QuadraticOperator Lm = kooSaleur(sp, -k, c, chir).payload;
  return Lp.scaled(std::exp(cplx(0, phi))) + Lm.scaled(std::exp(cplx(0, -phi)));
}

// ---- momentum-space block form ---------------------------------------------

namespace {

// emit the block-form couplings; nm/cc/aa/sc are sinks so the dense and the
// sparse builders share one loop
template <class NM, class CC, class AA, class SC>
void ksBlockLoop(const LatticeSpec& sp, int kint, NM&& nm, CC&& cc, AA&& aa,
                 SC&& sc) {
  requireMassless(sp, "kooSaleurMomentumBlock");
  double eps = sp.eps, L = sp.L;
  double k = kint * kPi / L;
  if (std::abs(k) * eps >= 2 * kPi - 1e-12)
    throw NyquistViolation(
        "kooSaleurMomentumBlock: momentum at or beyond the lattice cutoff");
  VecR ls = fullMomenta(sp);
  MomentumIndex idx(ls, L);
  double kappa = 2.0 * sp.n;
  cplx pref = kappa * std::exp(cplx(0, -0.25 * eps * k)) / (8 * kPi);
  double P = 2 * kPi / eps;  // umklapp period
  double hw = kPi / sp.epsp;
  for (int i = 0; i < ls.size(); ++i) {
    double l = ls[i];
    for (double shift : {0.0, P, -P, 2 * P, -2 * P}) {
      double lp = l + k + shift;
      if (!(lp > -hw - 1e-9 && lp <= hw + 1e-9)) continue;
      int j = idx.find(lp);
      if (j < 0) continue;
      cplx ep = std::exp(cplx(0, 0.25 * eps * k));
      cplx em = std::exp(cplx(0, -0.25 * eps * k));
      // the normal-ordered kernels carry the commutator part; at k = 0 the
      // commutator is dropped by definition, leaving the pure pairing form
      cplx l11 = (kint == 0) ? 0.0 : -0.5 * ep * std::sin(eps * (l + k / 2));
      cplx l12 = cplx(0, -0.5) *
                 (ep * std::sin(eps * l / 2) + em * std::sin(eps * (l + k) / 2));
      cplx l21 = -l12;
      cplx l22 = (kint == 0) ? 0.0 : -0.5 * em * std::sin(eps * (l + lp) / 2);
      int im_l = idx.find(-l), im_lp = idx.find(-lp);
      nm(j, i, pref * l11);
      if (im_l >= 0) cc(j, im_l, pref * l12);
      if (im_lp >= 0) aa(im_lp, i, pref * l21);
      if (im_l >= 0 && im_lp >= 0) {
        nm(im_l, im_lp, -pref * l22);
        if (i == j) sc(pref * l22);
      }
    }
  }
}

}  // namespace

QuadraticOperator kooSaleurMomentumBlock(const LatticeSpec& sp, int kint) {
  QuadraticOperator q(sp.m);
  ksBlockLoop(
      sp, kint, [&](int p, int r, cplx c) { q.addNM(p, r, c); },
      [&](int p, int r, cplx c) { q.addCC(p, r, c); },
      [&](int p, int r, cplx c) { q.addAA(p, r, c); },
      [&](cplx c) { q.offset() += c; });
  return q;
}

SparseBlockOperator kooSaleurMomentumBlockSparse(const LatticeSpec& sp,
                                                 int kint) {
  using T = Eigen::Triplet<cplx>;
  std::vector<T> tp, tq, tr;
  cplx off = 0.0;
  ksBlockLoop(
      sp, kint, [&](int p, int r, cplx c) { tp.emplace_back(p, r, c); },
      [&](int p, int r, cplx c) {
        tq.emplace_back(p, r, c);
        tq.emplace_back(r, p, -c);
      },
      [&](int p, int r, cplx c) {
        tr.emplace_back(p, r, c);
        tr.emplace_back(r, p, -c);
      },
      [&](cplx c) { off += c; });
  SparseBlockOperator out;
  out.m = sp.m;
  out.off = off;
  out.P.resize(sp.m, sp.m);
  out.Q.resize(sp.m, sp.m);
  out.R.resize(sp.m, sp.m);
  out.P.setFromTriplets(tp.begin(), tp.end());
  out.Q.setFromTriplets(tq.begin(), tq.end());
  out.R.setFromTriplets(tr.begin(), tr.end());
  return out;
}

// ---- sparse vacuum frame ----------------------------------------------------

SparseVacuumFrame vacuumFrameAhat(const LatticeSpec& sp) {
  if (!sp.ns() && sp.lambda == 0.0)
    throw DegenerateGroundState(
        "vacuumFrameAhat: Ramond zero mode makes the vacuum degenerate");
  int m = sp.m;
  VecR ls = fullMomenta(sp);
  MomentumIndex idx(ls, sp.L);
  VecR ks = reducedMomenta(sp);
  double D = 2 * kPi / sp.eps;  // doubler shift (half the full window)
  auto partner = [&](double l) { return (l > 1e-12) ? l - D : l + D; };
  double pref = (1.0 / sp.eps) * (sp.L / kPi);
  double rt2 = 1.0 / std::sqrt(2.0);
  using T = Eigen::Triplet<cplx>;
  std::vector<T> trips;
  trips.reserve(8 * m);
  SparseVacuumFrame vf;
  vf.mom = VecR::Zero(m);
  for (int s = 0; s < sp.n; ++s) {
    double k = ks[s];
    int ik = idx.find(k), ikp = idx.find(partner(k));
    int imk = idx.find(-k), imkp = idx.find(partner(-k));
    // phi1_k = (a_k + a_{k'})/sqrt2, phi2_k = (a^dag_{-k} - a^dag_{(-k)'})/sqrt2
    // entries of the two phi rows over the Nambu \hat a columns
    std::vector<std::pair<int, cplx>> r1{{ik, rt2}, {ikp, rt2}};
    std::vector<std::pair<int, cplx>> r2{{m + imk, rt2}, {m + imkp, -rt2}};
    std::vector<std::pair<int, cplx>> r1c{{m + ik, rt2}, {m + ikp, rt2}};
    std::vector<std::pair<int, cplx>> r2c{{imk, rt2}, {imkp, -rt2}};
    double sk = 2.0 * std::sin(k * sp.eps / 2);
    Eigen::Matrix2cd blk;
    blk << pref * sp.lambda, cplx(0, -pref * sk), cplx(0, pref * sk),
        -pref * sp.lambda;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(blk);
    Eigen::Matrix2cd U = es.eigenvectors();
    for (int c = 0; c < 2; ++c) {
      int i0 = (std::abs(U(0, c)) > 1e-12) ? 0 : 1;
      U.col(c) *= std::exp(cplx(0, -std::arg(U(i0, c))));
    }
    Eigen::Matrix2cd Ua = U.adjoint(), Ut = U.transpose();
    // ground-frame rows, with the filled slot 2s hole-swapped with m+2s
    auto emit = [&](int row, cplx c1, const std::vector<std::pair<int, cplx>>& a,
                    cplx c2, const std::vector<std::pair<int, cplx>>& b) {
      for (auto& [col, v] : a)
        if (std::abs(c1 * v) > 0) trips.emplace_back(row, col, c1 * v);
      for (auto& [col, v] : b)
        if (std::abs(c2 * v) > 0) trips.emplace_back(row, col, c2 * v);
    };
    emit(m + 2 * s, Ua(0, 0), r1, Ua(0, 1), r2);
    emit(2 * s + 1, Ua(1, 0), r1, Ua(1, 1), r2);
    emit(2 * s, Ut(0, 0), r1c, Ut(0, 1), r2c);
    emit(m + 2 * s + 1, Ut(1, 0), r1c, Ut(1, 1), r2c);
    vf.mom[2 * s] = -k;
    vf.mom[2 * s + 1] = k;
  }
  vf.S.resize(2 * m, 2 * m);
  vf.S.setFromTriplets(trips.begin(), trips.end());
  return vf;
}

namespace {

SpMatC assembleK(const SparseBlockOperator& op) {
  int m = op.m;
  using T = Eigen::Triplet<cplx>;
  std::vector<T> trips;
  auto push = [&](const SpMatC& blk, int ro, int co, bool negT) {
    for (int o = 0; o < blk.outerSize(); ++o)
      for (SpMatC::InnerIterator it(blk, o); it; ++it) {
        if (negT)
          trips.emplace_back(ro + it.col(), co + it.row(), -it.value());
        else
          trips.emplace_back(ro + it.row(), co + it.col(), it.value());
      }
  };
  push(op.P, 0, 0, false);
  push(op.Q, 0, m, false);
  push(op.R, m, 0, false);
  push(op.P, m, m, true);  // -P^T
  SpMatC K(2 * m, 2 * m);
  K.setFromTriplets(trips.begin(), trips.end());
  return K;
}

SparseBlockOperator splitK(const SpMatC& K, cplx off) {
  int m = static_cast<int>(K.rows()) / 2;
  using T = Eigen::Triplet<cplx>;
  std::vector<T> tp, tq, tr;
  for (int o = 0; o < K.outerSize(); ++o)
    for (SpMatC::InnerIterator it(K, o); it; ++it) {
      int r = static_cast<int>(it.row()), c = static_cast<int>(it.col());
      if (std::abs(it.value()) < 1e-15) continue;
      if (r < m && c < m)
        tp.emplace_back(r, c, it.value());
      else if (r < m)
        tq.emplace_back(r, c - m, it.value());
      else if (c < m)
        tr.emplace_back(r - m, c, it.value());
    }
  SparseBlockOperator out;
  out.m = m;
  out.off = off;
  out.P.resize(m, m);
  out.Q.resize(m, m);
  out.R.resize(m, m);
  out.P.setFromTriplets(tp.begin(), tp.end());
  out.Q.setFromTriplets(tq.begin(), tq.end());
  out.R.setFromTriplets(tr.begin(), tr.end());
  return out;
}

}  // namespace

SparseBlockOperator toVacuumFrame(const SparseBlockOperator& op,
                                  const SparseVacuumFrame& vf) {
  SpMatC K = assembleK(op);
  SpMatC Kb = (vf.S * K * SpMatC(vf.S.adjoint())).pruned(1e-300);
  // the scalar tracks the symmetric-ordered invariant: off' = off + (tr P -
  // tr P')/2
  cplx trP = 0.0, trPb = 0.0;
  for (int i = 0; i < op.m; ++i) trP += op.P.coeff(i, i);
  for (int i = 0; i < op.m; ++i) trPb += Kb.coeff(i, i);
  return splitK(Kb, op.off + 0.5 * (trP - trPb));
}

SparseBlockOperator projectSector(const SparseBlockOperator& op,
                                  const SparseVacuumFrame& vf, CSector sector) {
  if (sector == CSector::Zero) return op;
  int m = op.m;
  using T = Eigen::Triplet<cplx>;
  std::vector<T> trips;
  if (sector == CSector::One) {
    // chiral branch: keep slots with negative excitation momentum
    for (int i = 0; i < m; ++i)
      if (vf.mom[i] < 0) {
        trips.emplace_back(i, i, 1.0);
        trips.emplace_back(m + i, m + i, 1.0);
      }
  } else {
    // Majorana: rank-1 self-dual combinations of the particle slot at k < 0
    // and the hole slot carrying the same excitation momentum
    int half = m / 2;
    for (int s = 0; s < half; ++s) {
      double k = vf.mom[2 * s + 1];
      if (k >= 0) continue;
      int p1 = 2 * s + 1, p2 = -1;
      for (int t = 0; t < half; ++t)
        if (std::abs(vf.mom[2 * t] - k) < 1e-9) p2 = 2 * t;
      if (p2 < 0) continue;
      for (auto [a, b] : {std::pair{p1, p1}, {p1, p2}, {p2, p1}, {p2, p2}}) {
        trips.emplace_back(a, b, 0.5);
        trips.emplace_back(m + a, m + b, 0.5);  // conjugate block (real here)
      }
    }
  }
  SpMatC Pi(2 * m, 2 * m);
  Pi.setFromTriplets(trips.begin(), trips.end());
  SpMatC Kp = (Pi * assembleK(op) * Pi).pruned(1e-300);
  return splitK(Kp, 0.0);
}

cplx vacuumCommutatorSparse(const SparseBlockOperator& A,
                            const SparseBlockOperator& B) {
  auto tr = [](const SpMatC& X, const SpMatC& Y) {
    SpMatC prod = X * Y;
    cplx t = 0.0;
    for (int o = 0; o < prod.outerSize(); ++o)
      for (SpMatC::InnerIterator it(prod, o); it; ++it)
        if (it.row() == it.col()) t += it.value();
    return t;
  };
  return 0.5 * (tr(A.R, B.Q) - tr(B.R, A.Q));
}

// ---- continuum reference ----------------------------------------------------

double continuumMatchingConstant(int kint, int N) {
  LatticeSpec sp = buildSpec(N, 1.0, 0.0);
  SparseVacuumFrame vf = vacuumFrameAhat(sp);
  SparseBlockOperator Lb = projectSector(
      toVacuumFrame(kooSaleurMomentumBlockSparse(sp, kint), vf), vf,
      CSector::One);
  double p = kPi / sp.L;
  // momentum-conserving P entry on the branch with the smallest |lam + k/2|
  double best = 1e300, nu = 0.0;
  for (int o = 0; o < Lb.P.outerSize(); ++o)
    for (SpMatC::InnerIterator it(Lb.P, o); it; ++it) {
      int j = static_cast<int>(it.row()), i = static_cast<int>(it.col());
      if (std::abs(it.value()) < 1e-10) continue;
      if (std::abs(vf.mom[j] - vf.mom[i] - kint * p) > 1e-9) continue;
      double lam = vf.mom[i] / p;
      double den = lam + kint / 2.0;
      if (std::abs(den) < 1e-9) continue;
      if (std::abs(den) < best) {
        best = std::abs(den);
        nu = std::real(it.value()) / den;
      }
    }
  return nu;
}

ContinuumVirasoroBlock continuumVirasoroBlock(int kint, int M, CSector sector,
                                              int Nmatch) {
  ContinuumVirasoroBlock out;
  out.kint = kint;
  out.M = M;
  out.sector = sector;
  out.normalization = continuumMatchingConstant(kint, Nmatch);
  double cut = std::pow(2.0, M);
  // NS branch labels: negative half-integers within the coarse window
  for (double lam = -cut + 0.5; lam < 0; lam += 1.0) out.modes.push_back(lam);
  int d = static_cast<int>(out.modes.size());
  out.block = MatC::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (std::abs(out.modes[j] - out.modes[i] - kint) < 1e-9)
        out.block(j, i) = out.normalization * (out.modes[i] + kint / 2.0);
  return out;
}

double centralChargeEstimate(const LatticeSpec& sp, int kint, CSector sector) {
  requireMassless(sp, "centralChargeEstimate");
  if (!sp.ns())
    throw DegenerateGroundState(
        "centralChargeEstimate: needs the Neveu-Schwarz vacuum");
  if (kint == 0 || kint == 1 || kint == -1)
    throw UndefinedForUnitK(
        "centralChargeEstimate: |k| >= 2 pi/L required (k^3 - k vanishes)");
  SparseVacuumFrame vf = vacuumFrameAhat(sp);
  auto Lproj = [&](int kk) {
    SparseBlockOperator blk = kooSaleurMomentumBlockSparse(sp, kk);
    if (sector == CSector::Zero) return blk;  // defining-rep Fock vacuum
    return projectSector(toVacuumFrame(blk, vf), vf, sector);
  };
  SparseBlockOperator L1 = Lproj(1), Lm1 = Lproj(-1);
  SparseBlockOperator Lk = Lproj(kint), Lmk = Lproj(-kint);
  double c11 = std::real(vacuumCommutatorSparse(L1, Lm1));
  double ckk = std::real(vacuumCommutatorSparse(Lk, Lmk));
  double x = kint;
  return 12.0 * (ckk - x * c11) / (x * x * x - x);
}

}  // namespace cftlab
