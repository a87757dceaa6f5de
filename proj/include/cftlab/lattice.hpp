#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cftlab {

using cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using VecR = Eigen::VectorXd;

enum class Sector { NeveuSchwarz, Ramond };

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateGroundState : LatticeError {
  using LatticeError::LatticeError;
};
struct ScaleOrderViolation : LatticeError {
  using LatticeError::LatticeError;
};

// Lattice geometry at scale N: cells unit cells (cells = 2^N for dyadic
// scales), n = 2*cells two-component sites, spacing eps = L/cells, m = 2n
// single-component fermion modes a_j living on the half-spaced grid.
struct LatticeSpec {
  int N = 0;  // dyadic scale; -1 for a generic cell count
  int cells = 1;
  double L = 1.0;
  double lambda = 0.0;
  Sector sector = Sector::NeveuSchwarz;

  int n = 2;        // two-component sites
  int m = 4;        // single-component modes (= 2n)
  double eps = 0;   // eps_N
  double epsp = 0;  // eps_{N+1}
  VecR pos;         // positions of the m single-component sites
  VecR xs;          // positions of the n two-component sites

  bool ns() const { return sector == Sector::NeveuSchwarz; }
};

// Dyadic lattice, n = 2^{N+1} sites. Throws when the one-particle dimension
// exceeds the memory cap (default N <= 12).
LatticeSpec buildSpec(int N, double L = 1.0, double lambda = 0.0,
                      Sector sector = Sector::NeveuSchwarz, int maxN = 12);

// Generic unit-cell count (n = 2*cells sites); used for odd site counts.
LatticeSpec buildCellSpec(int cells, double L = 1.0, double lambda = 0.0,
                          Sector sector = Sector::NeveuSchwarz);

// Reduced momentum grid (n values) for the two-component fields and the full
// grid Gamma_{N+1} (2n values); NS momenta are half-integer multiples of pi/L.
VecR reducedMomenta(const LatticeSpec& sp);
VecR fullMomenta(const LatticeSpec& sp);

// Fermion bilinear  sum P a^dag a + 1/2 sum Q a^dag a^dag + 1/2 sum R a a + off
// with Q, R antisymmetric (enforced on construction).  The Nambu kernel acts
// on c = (a; a^dag):  op = 1/2 c^dag K c + 1/2 tr P + off.
class QuadraticOperator {
 public:
  explicit QuadraticOperator(int m);
  QuadraticOperator(MatC P, MatC Q, MatC R, cplx off);

  int modes() const { return m_; }
  const MatC& hoppingBlock() const { return P_; }  // A block
  const MatC& pairingBlock() const { return Q_; }  // B block
  const MatC& annihilationBlock() const { return R_; }
  cplx offset() const { return off_; }
  cplx& offset() { return off_; }

  void addNM(int p, int q, cplx c);  // c * a^dag_p a_q
  void addCC(int p, int q, cplx c);  // c * a^dag_p a^dag_q
  void addAA(int p, int q, cplx c);  // c * a_p a_q

  MatC K() const;
  static QuadraticOperator fromK(const MatC& K, cplx scalar);
  cplx scalar() const;  // symmetric-ordered scalar: off + 1/2 tr P

  QuadraticOperator dagger() const;
  QuadraticOperator comm(const QuadraticOperator& o) const;
  QuadraticOperator scaled(cplx c) const;
  QuadraticOperator operator+(const QuadraticOperator& o) const;

  bool isHermitian(double tol = 1e-10) const;

 private:
  int m_;
  MatC P_, Q_, R_;
  cplx off_;
};

// Bogoliubov data of the staggered Hamiltonian on the reduced grid.
struct SpectralData {
  VecR momenta;         // reduced momenta (n values)
  VecR omega;           // positive-branch dispersion per momentum
  VecR theta;           // Bogoliubov angle per momentum
  double diagonalOffset = 0;  // ground energy
  bool zeroMode = false;      // flagged, not fatal
};

// Gaussian state stored as M = <c c^dag>, blocks
// [[<a a^dag>, <a a>], [<a^dag a^dag>, <a^dag a>]].
struct GaussianState {
  MatC M;
  int parity = +1;
  int modes() const { return static_cast<int>(M.rows()) / 2; }
  double purityDefect() const { return (M * M - M).cwiseAbs().maxCoeff(); }
};

// Eq.-1 staggered Hamiltonian, prefactor (1/eps)(L/pi), in the single-
// component relabeling a_{2r} = psi1(x_r), a_{2r+1}^dag = psi2(x_r); the
// sector enters through the wrap sign of the boundary hopping pair.
QuadraticOperator buildStaggeredHamiltonian(const LatticeSpec& sp);

// Canonical momentum-pair frame: phi = T c with phi1_k on the even and
// phi2_k on the odd sublattice; T is a Nambu unitary, block-diagonalizes K.
struct PhiFrame {
  MatC T;      // 2m x 2m
  VecR ks;     // reduced momenta, one pair of modes per entry
};
PhiFrame phiTransform(const LatticeSpec& sp);

// Plain single-component Fourier frame \hat a_l over Gamma_{N+1}.
struct AhatFrame {
  MatC T;   // 2m x 2m, diag(F, conj F)
  VecR ls;  // 2n momenta
};
AhatFrame ahatTransform(const LatticeSpec& sp);

SpectralData diagonalize(const LatticeSpec& sp);

// Full diagonalizing frame: Tfull K Tfull^dag per-pair diagonal, with the
// per-column gauge fixed so the first significant eigenvector component is
// real positive (keeps the frame continuous across scales).
struct GroundFrame {
  MatC Tfull;      // 2m x 2m Nambu unitary
  VecR occ;        // filled-mode pattern of the ground state
  VecR om;         // pair-resolved eigenvalues (2 per reduced momentum)
  VecR ks;         // reduced momenta
};
GroundFrame groundFrame(const LatticeSpec& sp);

GaussianState stateFromFrame(const MatC& T, const VecR& occ);
GaussianState groundState(const LatticeSpec& sp);

// Vacuum (b-) frame: hole-swapped ground frame in which the ground state is
// the literal Fock vacuum; mom labels the excitation momentum per slot.
struct VacuumFrame {
  MatC S;      // 2m x 2m Nambu unitary
  VecR mom;    // excitation momentum per mode slot
};
VacuumFrame vacuumFrame(const LatticeSpec& sp);

}  // namespace cftlab
