#pragma once

#include <Eigen/Sparse>

#include "cftlab/lattice.hpp"

namespace cftlab {

using SpMatC = Eigen::SparseMatrix<cplx>;

struct MassiveDensityUnsupported : LatticeError {
  using LatticeError::LatticeError;
};
struct NyquistViolation : LatticeError {
  using LatticeError::LatticeError;
};
struct UndefinedForUnitK : LatticeError {
  using LatticeError::LatticeError;
};

enum class Chirality { Left, Right };
enum class CSector { Zero, Half, One };  // c = 0, 1/2, 1

// H_k = eps (L/pi) sum_x e^{ikx} h_x with the density symmetric around x.
// Right-movers use the parity-reflected density (x -> -x).
QuadraticOperator hamiltonianDensityModes(const LatticeSpec& sp, double k,
                                          Chirality chir = Chirality::Left);

struct KooSaleurGenerator {
  int N;
  double k;
  Chirality chirality;
  double c;
  QuadraticOperator payload = QuadraticOperator(0);
};

// Commutator form: L_k = 1/2 (H_k + (pi eps)/(2 L sin(eps k / 2)) [H_k, H_0])
// with the commutator dropped and c/24 added at k = 0.
KooSaleurGenerator kooSaleur(const LatticeSpec& sp, double k, double c = 0.0,
                             Chirality chir = Chirality::Left);

// e^{i phi} L_k + e^{-i phi} L_{-k}: the Hermitian combination used as an
// evolution generator for complex k.
QuadraticOperator hermitianCombination(const LatticeSpec& sp, double k,
                                       double c = 0.0, double phi = 0.0,
                                       Chirality chir = Chirality::Left);

// Explicit momentum-space block form on the \hat a basis (kint in units of
// pi/L), including umklapp couplings; normalized so it equals the commutator
// form after the basis change (block constant kappa = 2n folded in).
QuadraticOperator kooSaleurMomentumBlock(const LatticeSpec& sp, int kint);

// Sparse variants for large scales ----------------------------------------

struct SparseBlockOperator {
  int m = 0;
  SpMatC P, Q, R;  // same block meaning as QuadraticOperator
  cplx off = 0.0;
};

SparseBlockOperator kooSaleurMomentumBlockSparse(const LatticeSpec& sp,
                                                 int kint);

// Vacuum (b-) frame expressed over the \hat a basis: sparse Nambu unitary
// with at most 4 entries per row, plus excitation momentum labels.
struct SparseVacuumFrame {
  SpMatC S;   // 2m x 2m
  VecR mom;   // per-slot excitation momentum
};
SparseVacuumFrame vacuumFrameAhat(const LatticeSpec& sp);

// Conjugate a sparse block operator into the vacuum frame: K_b = S K S^dag.
SparseBlockOperator toVacuumFrame(const SparseBlockOperator& op,
                                  const SparseVacuumFrame& vf);

// Sector projections acting on vacuum-frame blocks.
// c=1: restriction to the chiral branch mom < 0;
// c=1/2: Majorana (self-dual) projector pairing the particle and hole slot
// at each negative momentum.
SparseBlockOperator projectSector(const SparseBlockOperator& opInVacFrame,
                                  const SparseVacuumFrame& vf, CSector sector);

// 1/2 (tr R_A Q_B - tr R_B Q_A): <vac|[A,B]|vac> without cancellation.
cplx vacuumCommutatorSparse(const SparseBlockOperator& A,
                            const SparseBlockOperator& B);

// Continuum reference block -------------------------------------------------

struct ContinuumVirasoroBlock {
  int kint;
  int M;
  CSector sector;
  double normalization;       // matching constant nu (reported, not asserted)
  std::vector<double> modes;  // mode labels l in units of pi/L, |l| <= L_M
  MatC block;                 // one-particle elements nu (l + k/2) at l -> l+k
};

// One-particle continuum Virasoro matrix elements, normalized by matching the
// lattice momentum block at scale Nmatch on its lowest mode.
ContinuumVirasoroBlock continuumVirasoroBlock(int kint, int M, CSector sector,
                                              int Nmatch = 8);

// The raw matching constant nu(N, k): lattice lowest-mode diagonal element
// divided by (l + k/2).
double continuumMatchingConstant(int kint, int N);

// Emergent central charge estimate at momentum k = kint pi/L in the given
// sector (NS massless ground state required; |kint| >= 2).
double centralChargeEstimate(const LatticeSpec& sp, int kint, CSector sector);

}  // namespace cftlab
