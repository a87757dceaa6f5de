#include "cftlab/oar.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

namespace cftlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<cplx> convolve(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// roots of a polynomial with ascending real coefficients, via the companion
// matrix
std::vector<cplx> polyRoots(const std::vector<double>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  MatC comp = MatC::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<MatC> es(comp);
  std::vector<cplx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

LatticeSpec fineSpec(const LatticeSpec& spN) {
  if (spN.N >= 0)
    return buildSpec(spN.N + 1, spN.L, spN.lambda, spN.sector);
  return buildCellSpec(2 * spN.cells, spN.L, spN.lambda, spN.sector);
}

}  // namespace

VecR daubechiesFilter(int taps) {
  if (taps < 2 || taps % 2 != 0 || taps > 40)
    throw UnsupportedOrder(
        "daubechiesFilter: taps must be even, between 2 and 40");
  int p = taps / 2;
  if (p == 1) {
    VecR c(2);
    c << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return c;
  }
  // roots of P(y) = sum_k C(p-1+k, k) y^k, then the spectral factor with all
  // z-roots inside the unit circle (minimal phase)
  std::vector<double> Pc(p);
  for (int k = 0; k < p; ++k) Pc[k] = binom(p - 1 + k, k);
  std::vector<cplx> yroots = polyRoots(Pc);
  std::vector<cplx> poly{1.0};
  for (int i = 0; i < p; ++i) poly = convolve(poly, {0.5, 0.5});
  for (cplx y : yroots) {
    cplx b = 2.0 - 4.0 * y;
    cplx disc = std::sqrt(b * b - 4.0);
    cplx z1 = (b + disc) / 2.0, z2 = (b - disc) / 2.0;
    cplx zi = (std::abs(z1) < 1.0) ? z1 : z2;
    poly = convolve(poly, {-zi / (1.0 - zi), 1.0 / (1.0 - zi)});
  }
  VecR c(taps);
  double sum = 0;
  for (int i = 0; i < taps; ++i) {
    c[i] = std::sqrt(2.0) * std::real(poly[i]);
    sum += c[i];
  }
  c *= std::sqrt(2.0) / sum;
  // reverse to the paper convention (D4 starts at (1+sqrt3)/(4 sqrt2))
  return c.reverse();
}

CascadeResult cascade(const VecR& c, int resolution, double tol, int maxIter) {
  int taps = static_cast<int>(c.size());
  long step = 1L << resolution;
  long npts = (taps - 1) * step + 1;
  CascadeResult res;
  res.x.resize(npts);
  for (long i = 0; i < npts; ++i) res.x[i] = double(i) / double(step);
  VecR phi = VecR::Zero(npts);
  for (long i = 0; i < npts && res.x[i] < 1.0; ++i) phi[i] = 1.0;  // box start
  double rt2 = std::sqrt(2.0);
  for (int it = 1; it <= maxIter; ++it) {
    VecR next = VecR::Zero(npts);
    for (long i = 0; i < npts; ++i) {
      double v = 0;
      for (int l = 0; l < taps; ++l) {
        long j = 2 * i - l * step;
        if (j >= 0 && j < npts) v += c[l] * phi[j];
      }
      next[i] = rt2 * v;
    }
    res.residual = (next - phi).cwiseAbs().maxCoeff();
    phi = next;
    res.iterations = it;
    if (res.residual <= tol) {
      res.phi = phi;
      return res;
    }
  }
  throw NonConvergence("cascade: refinement iteration did not converge");
}

cplx scalingFunctionFourier(const VecR& c, double xi, int depth) {
  cplx prod = 1.0;
  double rt2 = std::sqrt(2.0);
  for (int j = 1; j <= depth; ++j) {
    double arg = std::ldexp(xi, -j);  // 2^-j xi
    cplx m0 = 0.0;
    for (int l = 0; l < c.size(); ++l)
      m0 += c[l] * std::exp(cplx(0, -l * arg));
    prod *= m0 / rt2;
  }
  return prod;
}

MatR waveletIsometry(const LatticeSpec& spN, const VecR& c) {
  LatticeSpec spF = fineSpec(spN);
  if (c.size() > spF.n)
    throw FilterTooWide(
        "waveletIsometry: filter support exceeds the fine lattice");
  int mN = spN.m, mF = spF.m;
  double zeta = spN.ns() ? -1.0 : 1.0;
  MatR V = MatR::Zero(mF, mN);
  for (int r = 0; r < spN.n; ++r) {
    for (int comp = 0; comp < 2; ++comp) {
      int col = 2 * r + comp;
      for (int l = 0; l < c.size(); ++l) {
        // coarse mode at x_r spreads over fine sites at x_r + eps_{N+1} l
        int rf = 2 * r + l;
        int wraps = rf / spF.n;
        double sgn = (wraps % 2 == 0) ? 1.0 : zeta;
        V(2 * (rf % spF.n) + comp, col) += sgn * c[l];
      }
    }
  }
  return V;
}

QuadraticOperator waveletScalingMap(const LatticeSpec& spN, const VecR& c,
                                    const QuadraticOperator& coarseOp) {
  MatR V = waveletIsometry(spN, c);
  MatC P = V * coarseOp.hoppingBlock() * V.transpose();
  MatC Q = V * coarseOp.pairingBlock() * V.transpose();
  MatC R = V * coarseOp.annihilationBlock() * V.transpose();
  return QuadraticOperator(std::move(P), std::move(Q), std::move(R),
                           coarseOp.offset());
}

MatC momentumScalingMap(const LatticeSpec& spN, const LatticeSpec& spM) {
  if (spN.N < 0 || spM.N < 0)
    throw ScaleOrderViolation("momentumScalingMap: dyadic scales required");
  if (spM.N >= spN.N)
    throw ScaleOrderViolation("momentumScalingMap: target scale must be finer "
                              "than the source scale");
  if (spM.L != spN.L || spM.lambda != spN.lambda || spM.sector != spN.sector)
    throw LatticeError("momentumScalingMap: lattice parameters must agree");
  PhiFrame TN = phiTransform(spN), TM = phiTransform(spM);
  int mN = spN.m, mM = spM.m;
  double kcut = kPi * double(spM.cells) / spN.L;
  std::vector<int> keep;
  for (int s = 0; s < spN.n; ++s)
    if (std::abs(TN.ks[s]) <= kcut + 1e-9) keep.push_back(s);
  if (static_cast<int>(keep.size()) != spM.n)
    throw LatticeError("momentumScalingMap: momentum shell mismatch");
  MatC P = MatC::Zero(2 * mN, 2 * mM);
  for (int t = 0; t < spM.n; ++t) {
    int s = keep[t];  // both grids ascend, so the order matches
    for (int b = 0; b < 2; ++b) {
      P(2 * s + b, 2 * t + b) = 1.0;
      P(mN + 2 * s + b, mM + 2 * t + b) = 1.0;
    }
  }
  return TN.T.adjoint() * P * TM.T;
}

GaussianState coarseGrainState(const LatticeSpec& spN, const GaussianState& fine,
                               int M, CoarseGrainScheme scheme,
                               const VecR& filter) {
  if (fine.modes() != spN.m)
    throw LatticeError("coarseGrainState: state size does not match the spec");
  if (spN.N < 0 || M < 0 || M >= spN.N)
    throw ScaleOrderViolation(
        "coarseGrainState: need dyadic scales with M < N");
  GaussianState out;
  out.parity = fine.parity;
  if (scheme == CoarseGrainScheme::Momentum) {
    LatticeSpec spM = buildSpec(M, spN.L, spN.lambda, spN.sector);
    MatC W = momentumScalingMap(spN, spM);
    out.M = W.adjoint() * fine.M * W;
    return out;
  }
  if (filter.size() == 0)
    throw LatticeError("coarseGrainState: wavelet scheme needs a filter");
  MatC Mcur = fine.M;
  for (int k = spN.N; k > M; --k) {
    LatticeSpec spC = buildSpec(k - 1, spN.L, spN.lambda, spN.sector);
    MatR V = waveletIsometry(spC, filter);
    int mF = static_cast<int>(V.rows()), mC = static_cast<int>(V.cols());
    MatR W = MatR::Zero(2 * mF, 2 * mC);
    W.topLeftCorner(mF, mC) = V;
    W.bottomRightCorner(mF, mC) = V;
    Mcur = (W.transpose() * Mcur * W).eval();
  }
  out.M = std::move(Mcur);
  return out;
}

}  // namespace cftlab
