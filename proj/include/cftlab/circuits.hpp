#pragma once

#include <string>
#include <vector>

#include "cftlab/lattice.hpp"
#include "cftlab/virasoro.hpp"

namespace cftlab {

struct TooManyQubits : LatticeError {
  using LatticeError::LatticeError;
};
struct NonHermitianObservable : LatticeError {
  using LatticeError::LatticeError;
};

// Weighted Pauli string over the qubit register (one letter per qubit,
// x-string convention: a_j = X_0 ... X_{j-1} (Z + iY)_j / 2, vacuum |-> per
// qubit).
struct PauliTerm {
  std::string letters;  // 'I','X','Y','Z' per qubit
  cplx coeff = 0.0;
};

// Pauli decomposition of a fermion bilinear; terms sorted by letters,
// coefficients below 1e-14 dropped. The identity string carries the scalar.
std::vector<PauliTerm> jordanWigner(const QuadraticOperator& op);

// Gate vocabulary --------------------------------------------------------
//
//   SingleQubitRotation  e^{-i angle/2 sigma_axis} on q0 (axis 'H' = Hadamard)
//   BogoliubovBlock      pairing matchgate on modes (q0,q1):
//                        |00> -> u|00> + v|11>, |11> -> -conj(v)|00>+conj(u)|11>
//   FourierBlock         number-conserving two-mode block
//                        a^dag_{q0} -> u00 a^dag_{q0} + u10 a^dag_{q1}, ...
//   Fswap                fermionic exchange of modes (q0,q1), |11> -> -|11>
//   Phase                e^{i angle n_{q0}}
//   PauliStringRotation  e^{-i angle P}
//   PauliStringGate      coeff * P applied as a gate (unit-modulus coeff)
//   ControlledString     |0><0|_{q0} I + |1><1|_{q0} coeff P  (P on the rest)
//   GlobalPhase          multiply the state by coeff
//
// Two-mode fermionic gates on non-adjacent modes are simulated by conjugating
// with a chain of adjacent fswaps, so the Jordan-Wigner strings stay exact.
enum class GateKind {
  SingleQubitRotation,
  BogoliubovBlock,
  FourierBlock,
  Fswap,
  Phase,
  PauliStringRotation,
  PauliStringGate,
  ControlledString,
  GlobalPhase,
};

struct Gate {
  GateKind kind;
  int q0 = -1, q1 = -1;
  char axis = 'Z';
  double angle = 0.0;
  cplx u = 1.0, v = 0.0;  // Bogoliubov parameters
  MatC block;             // 2x2 block for FourierBlock
  cplx coeff = 1.0;       // string / controlled-string / global phase factor
  std::string letters;    // Pauli letters (system qubits)
};

struct Circuit {
  int qubits = 0;    // total register size, ancillas included
  int ancillas = 0;  // trailing qubits reserved as ancillas
  std::vector<Gate> gates;
};

// Exact statevector simulation; qubit 0 is the most significant index bit.
// Throws TooManyQubits above 20 qubits.
VecC statevectorSimulate(const Circuit& c, const VecC& input);

// Product state |->^m: the Fock vacuum of the x-string convention.
VecC fockVacuumState(int qubits);

// Line-oriented text export, one gate per line (stable format).
std::string exportCircuit(const Circuit& c);

// Ground-state preparation: Bogoliubov layer on momentum pairs, phase layer,
// fswap permutation network, inverse fermionic FFT, position phase layer.
// Applied to |->^m it produces the ground state of the staggered Hamiltonian.
Circuit groundStatePrepCircuit(const LatticeSpec& sp);

// Field-operator gadget: one ancilla (last qubit, prepared in |+> by the
// caller); postselecting the ancilla on |+> applies the momentum-mode operator
// \hat a_slot (dagger = false) or \hat a^dag_slot (dagger = true).
Circuit fieldOperatorGadget(const LatticeSpec& sp, int slot, bool dagger);

// Suzuki-Trotter circuit for e^{-i t payload}, order 1 or 2; the generator
// payload must be Hermitian.
Circuit trotterize(const KooSaleurGenerator& gen, double t, int steps,
                   int order);

// Phase estimation over e^{-i theta(H)}: theta(E) = scale (E - offset) maps
// the spectral interval [offset, offset + range] onto [0, 2 pi (1 - 2^-r)].
struct PhaseEstimationPlan {
  Circuit circuit;  // H layer, controlled evolution, inverse QFT
  int r = 0;
  double offset = 0;  // lower spectral bound from the Pauli 1-norm
  double scale = 0;
  std::vector<PauliTerm> terms;  // decomposition of the observable
};
PhaseEstimationPlan phaseEstimationPlan(const QuadraticOperator& observable,
                                        int r);

// Exact readout distribution over the 2^r ancilla outcomes for a given system
// input state, and the corresponding energy estimate per bin.
struct PhaseEstimationReadout {
  std::vector<double> probabilities;
  std::vector<double> energies;
  double mean = 0;
};
PhaseEstimationReadout simulateReadout(const PhaseEstimationPlan& plan,
                                       const VecC& input);

}  // namespace cftlab
