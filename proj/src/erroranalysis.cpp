#include "cftlab/erroranalysis.hpp"

#include <cmath>
#include <limits>

#include "cftlab/oar.hpp"

namespace cftlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

// |hat s(xi)|^2 via the filter product formula, with one exponential per
// factor and power recursion over the taps
double spectrumSquared(const VecR& c, double xi, int depth = 25) {
  double out = 1.0;
  for (int j = 1; j <= depth; ++j) {
    double arg = std::ldexp(xi, -j);
    cplx w = std::exp(cplx(0, -arg));
    cplx zl = 1.0, m0 = 0.0;
    for (int l = 0; l < c.size(); ++l) {
      m0 += c[l] * zl;
      zl *= w;
    }
    out *= 0.5 * std::norm(m0);
    if (out == 0.0) return 0.0;
  }
  return out;
}

}  // namespace

SobolevResult sobolevNorm(const VecR& c, double delta) {
  // Simpson quadrature on [0, Xi] with step h, then a two-octave power-law
  // tail fit
  const double Xi = 4096.0;   // 2^12
  const double h = 1.0 / 256;  // 2^-8
  const long npts = static_cast<long>(Xi / h);  // even
  auto g = [&](double xi) {
    return std::pow(1.0 + xi * xi, delta) * spectrumSquared(c, xi);
  };
  double integral = 0.0;
  double sumA1 = 0.0, sumA2 = 0.0;
  long nA1 = 0, nA2 = 0;
  double prev = g(0.0);
  for (long i = 0; i + 2 <= npts; i += 2) {
    double gm = g((i + 1) * h);
    double gr = g((i + 2) * h);
    integral += h / 3.0 * (prev + 4.0 * gm + gr);
    double xr = (i + 2) * h;
    if (xr > Xi / 4 && xr <= Xi / 2) {
      sumA1 += gm + gr;
      nA1 += 2;
    } else if (xr > Xi / 2) {
      sumA2 += gm + gr;
      nA2 += 2;
    }
    prev = gr;
  }
  double A1 = sumA1 / nA1, A2 = sumA2 / nA2;
  SobolevResult res;
  res.tailExponent = std::log2(A1 / A2);
  double q = res.tailExponent;
  if (!(q > 1.0)) {
    res.divergent = true;
    res.value = std::numeric_limits<double>::infinity();
    return res;
  }
  // calibrate g ~ cq xi^-q on the last octave, integrate the tail exactly
  double cq = A2 * (Xi / 2) * (1.0 - q) /
              (std::pow(Xi, 1.0 - q) - std::pow(Xi / 2, 1.0 - q));
  double tail = cq * std::pow(Xi, 1.0 - q) / (q - 1.0);
  res.value = std::sqrt((integral + tail) / kPi);
  return res;
}

double sobolevExponentCap(int taps) {
  switch (taps) {
    case 2: return 0.5;
    case 4: return 1.0;
    case 6: return 1.4149;
    case 8: return 1.7753;
    case 10: return 2.0967;
    case 12: return 2.3882;
    default:
      throw UnsupportedOrder("sobolevExponentCap: tabulated for taps 2..12");
  }
}

namespace {

void setMonotone(ErrorCurve& curve) {
  curve.monotoneDecreasing = true;
  for (size_t i = 1; i < curve.values.size(); ++i)
    if (curve.values[i] >= curve.values[i - 1] + 1e-15)
      curve.monotoneDecreasing = false;
}

}  // namespace

ErrorCurve momentumErrorCurve(int kint, int Nmin, int Nmax, int M,
                              MomentumErrorComponent component) {
  if (Nmin > Nmax || M < 0)
    throw ScaleOrderViolation("momentumErrorCurve: need Nmin <= Nmax, M >= 0");
  if (Nmin <= M)
    throw ScaleOrderViolation(
        "momentumErrorCurve: the kept window must sit below the scale");
  ErrorCurve curve;
  for (int N = Nmin; N <= Nmax; ++N) {
    LatticeSpec sp = buildSpec(N, 1.0, 0.0);
    double p = kPi / sp.L;
    SparseVacuumFrame vf = vacuumFrameAhat(sp);
    SparseBlockOperator Lb = projectSector(
        toVacuumFrame(kooSaleurMomentumBlockSparse(sp, kint), vf), vf,
        CSector::One);
    double cut = std::pow(2.0, M) * p + 1e-9;
    std::vector<int> win;
    for (int i = 0; i < sp.m; ++i)
      if (vf.mom[i] < 0 && std::abs(vf.mom[i]) <= cut) win.push_back(i);
    int d = static_cast<int>(win.size());
    double err = 0.0;
    if (component == MomentumErrorComponent::DiagonalL2) {
      // continuum normal part: -(lam + k/2) between equal slot flavors
      // carrying momenta lam and lam + k (-lam/2 at k = 0)
      double best = 0.0;
      for (int a = 0; a < d; ++a) {
        double col = 0.0;
        for (int b = 0; b < d; ++b) {
          cplx lat = Lb.P.coeff(win[b], win[a]);
          double lam = vf.mom[win[a]] / p;
          cplx cont = 0.0;
          if (win[a] % 2 == win[b] % 2 &&
              std::abs(vf.mom[win[b]] - vf.mom[win[a]] - kint * p) < 1e-9)
            cont = (kint == 0) ? -lam / 2 : -(lam + kint / 2.0);
          col += std::norm(lat - cont);
        }
        best = std::max(best, col);
      }
      err = std::sqrt(best);
    } else {
      // continuum anomalous part: R[particle, hole] = -(mu_hole + k/2) on
      // label pairs summing to -k for k > 0, mirrored into Q with the
      // opposite sign for k < 0, empty for |k| <= 1
      double sum = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          int i = win[a], j = win[b];
          auto pattern = [&](bool forR) {
            int kk = forR ? kint : -kint;
            if (kk <= 1) return cplx(0.0);
            double sign = forR ? -1.0 : 1.0;
            if (i % 2 == 1 && j % 2 == 0 &&
                std::abs(vf.mom[i] + vf.mom[j] + kk * p) < 1e-9)
              return cplx(sign * (vf.mom[j] / p + kk / 2.0));
            if (i % 2 == 0 && j % 2 == 1 &&
                std::abs(vf.mom[i] + vf.mom[j] + kk * p) < 1e-9)
              return cplx(-sign * (vf.mom[i] / p + kk / 2.0));
            return cplx(0.0);
          };
          sum += std::norm(Lb.R.coeff(i, j) - pattern(true));
          sum += std::norm(Lb.Q.coeff(i, j) - pattern(false));
        }
      err = std::sqrt(sum);
    }
    curve.scales.push_back(N);
    curve.sizes.push_back(double(sp.n));
    curve.values.push_back(err);
  }
  setMonotone(curve);
  return curve;
}

ErrorCurve waveletErrorCurve(int taps, double delta, int M, int Nmin, int Nmax,
                             double gamma) {
  double cap = sobolevExponentCap(taps);
  if (delta < 0.0 || delta >= cap)
    throw DeltaOutOfRange(
        "waveletErrorCurve: delta must lie in [0, cap) for this filter");
  if (Nmin > Nmax || M < 0 || Nmin < M)
    throw ScaleOrderViolation("waveletErrorCurve: need M <= Nmin <= Nmax");
  SobolevResult norm = sobolevNorm(daubechiesFilter(taps), delta);
  ErrorCurve curve;
  for (int N = Nmin; N <= Nmax; ++N) {
    curve.scales.push_back(N);
    curve.sizes.push_back(std::pow(2.0, N + 1));
    curve.values.push_back(norm.value *
                           std::pow(2.0, -(N - M) * delta * gamma));
  }
  setMonotone(curve);
  return curve;
}

DecayFit fitDecay(const ErrorCurve& curve) {
  size_t n = curve.values.size();
  if (n < 2) throw DegenerateFit("fitDecay: need at least two points");
  for (double v : curve.values)
    if (!(v > 1e-13))
      throw DegenerateFit("fitDecay: error below resolution, fit meaningless");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    double x = std::log(curve.sizes[i]), y = std::log(curve.values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  DecayFit fit;
  double den = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = std::log(curve.values[i]) -
               (fit.intercept + fit.slope * std::log(curve.sizes[i]));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace cftlab
