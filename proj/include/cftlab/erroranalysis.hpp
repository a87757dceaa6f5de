#pragma once

#include "cftlab/lattice.hpp"
#include "cftlab/virasoro.hpp"

namespace cftlab {

struct DeltaOutOfRange : LatticeError {
  using LatticeError::LatticeError;
};
struct DegenerateFit : LatticeError {
  using LatticeError::LatticeError;
};

// Sobolev H^delta norm of the scaling function by quadrature of
// (1 + xi^2)^delta |hat s(xi)|^2 plus a fitted power-law tail; `divergent`
// flags a tail exponent q <= 1 (integral infinite).
struct SobolevResult {
  double value = 0;
  bool divergent = false;
  double tailExponent = 0;
};
SobolevResult sobolevNorm(const VecR& c, double delta);

// Largest admissible Sobolev exponent per filter order.
double sobolevExponentCap(int taps);

struct ErrorCurve {
  std::vector<int> scales;    // N
  std::vector<double> sizes;  // n = 2^{N+1}
  std::vector<double> values;
  bool monotoneDecreasing = false;
};

enum class MomentumErrorComponent { DiagonalL2, OffdiagonalHS };

// Distance of the branch-projected Virasoro momentum block from its continuum
// pattern inside the kept window |momentum| <= 2^M pi/L, per scale N.
ErrorCurve momentumErrorCurve(int kint, int Nmin, int Nmax, int M,
                              MomentumErrorComponent component);

// Wavelet truncation bound ||s||_{H^delta} 2^{-(N-M) delta gamma} per scale N.
ErrorCurve waveletErrorCurve(int taps, double delta, int M, int Nmin, int Nmax,
                             double gamma = 1.0);

// Log-log least-squares decay fit of an error curve against the system size.
struct DecayFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // rms in log space
};
DecayFit fitDecay(const ErrorCurve& curve);

}  // namespace cftlab
