#pragma once

#include "cftlab/lattice.hpp"

namespace cftlab {

struct UnsupportedOrder : LatticeError {
  using LatticeError::LatticeError;
};
struct NonConvergence : LatticeError {
  using LatticeError::LatticeError;
};
struct FilterTooWide : LatticeError {
  using LatticeError::LatticeError;
};

// Daubechies low-pass filter with `taps` coefficients (taps/2 vanishing
// moments), normalized to sum sqrt(2), in the convention
// D4 = (1+sqrt3, 3+sqrt3, 3-sqrt3, 1-sqrt3) / (4 sqrt2).
VecR daubechiesFilter(int taps);

// Scaling function phi on the dyadic grid of step 2^-resolution over
// [0, taps-1], computed by the cascade iteration from the box function.
struct CascadeResult {
  VecR x;
  VecR phi;
  int iterations = 0;
  double residual = 0;
};
CascadeResult cascade(const VecR& c, int resolution = 10, double tol = 1e-8,
                      int maxIter = 200);

// hat phi(xi) = prod_{j=1..depth} m0(2^-j xi)/sqrt2, m0(xi) = sum c_l e^{-il xi}
cplx scalingFunctionFourier(const VecR& c, double xi, int depth = 25);

// Wavelet embedding isometry V: scale-N modes into scale-(N+1) modes.  The
// coarse mode (r, comp) spreads over fine sites at x_r + eps_{N+1} l with
// weight c_l; boundary wraps carry the sector sign.
MatR waveletIsometry(const LatticeSpec& spN, const VecR& c);

// Push a coarse observable forward along the wavelet isometry (the ascending
// superoperator alpha); blocks conjugate by V.
QuadraticOperator waveletScalingMap(const LatticeSpec& spN, const VecR& c,
                                    const QuadraticOperator& coarseOp);

// Nambu isometry embedding the scale-M momentum shell into the scale-N
// phi modes, expressed over the site bases of both scales.
MatC momentumScalingMap(const LatticeSpec& spN, const LatticeSpec& spM);

enum class CoarseGrainScheme { Momentum, Wavelet };

// Descending (state) map dual to the ascending operator map: restriction to
// the kept momentum shell, or W^T M W per wavelet step down to scale M.
GaussianState coarseGrainState(const LatticeSpec& spN, const GaussianState& fine,
                               int M, CoarseGrainScheme scheme,
                               const VecR& filter = VecR());

}  // namespace cftlab
