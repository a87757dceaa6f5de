#pragma once

#include "cftlab/lattice.hpp"

namespace cftlab {

struct NonHermitianGenerator : LatticeError {
  using LatticeError::LatticeError;
};

// Heisenberg evolution op(t) = e^{itG} op e^{-itG} at the one-particle level;
// the propagator is built by unitary diagonalization of the Hermitian kernel.
QuadraticOperator evolve(const QuadraticOperator& op,
                         const QuadraticOperator& generator, double t);

// <state| op |state> by trace formulas against the covariance.
cplx expectation(const GaussianState& state, const QuadraticOperator& op);

// Monomial factor: mode index + dagger flag, read left to right.
struct FermionFactor {
  int mode;
  bool dag;
};

// Wick/pfaffian evaluation of <state| f_1 f_2 ... f_L |state>; odd L is 0.
cplx expectation(const GaussianState& state,
                 const std::vector<FermionFactor>& monomial);

// <state| A B |state> for quadratic A, B via Wick contraction of the
// covariance (A B itself is quartic).
cplx expectationProduct(const GaussianState& state, const QuadraticOperator& A,
                        const QuadraticOperator& B);

// <vac|[A,B]|vac> for operators expressed in a frame whose vacuum is the
// state: the cancellation-free trace formula 1/2(tr R_A Q_B - tr R_B Q_A).
cplx vacuumCommutator(const QuadraticOperator& A, const QuadraticOperator& B);

// <Omega_N| A B_t |Omega_N>, B_t = e^{itG} B e^{-itG}.
cplx conformalCorrelator(const GaussianState& ground,
                         const QuadraticOperator& A, const QuadraticOperator& B,
                         const QuadraticOperator& generator, double t);

// Ground-state two-point function of the staggered fields,
// G(r, s; t) = <psi1^dag(x_r, t) psi2(x_s, 0)> / eps, evolved with the
// physical Hamiltonian (pi/L) H_N.
cplx staggeredFieldCorrelator(const LatticeSpec& sp, int r, int s, double t);

// Continuum limit of the same correlator at lambda = 0 in the NS sector:
// -(1/8L)[1/sin(pi(d-t)/2L) + 1/sin(pi(d+t)/2L)], d = x_r - x_s - eps/2.
cplx continuumFieldCorrelator(const LatticeSpec& sp, int r, int s, double t);

}  // namespace cftlab
