#include "cftlab/circuits.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "cftlab/gaussian.hpp"

namespace cftlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

// ---- Pauli string algebra ---------------------------------------------

// single-letter product a*b = phase * letter
void pauliMul(char a, char b, char& out, cplx& phase) {
  if (a == 'I') { out = b; phase = 1.0; return; }
  if (b == 'I') { out = a; phase = 1.0; return; }
  if (a == b) { out = 'I'; phase = 1.0; return; }
  // cyclic XY=iZ, YZ=iX, ZX=iY; reversed order picks up a minus sign
  auto next = [](char c) { return c == 'X' ? 'Y' : (c == 'Y' ? 'Z' : 'X'); };
  if (next(a) == b) {
    out = next(b);
    phase = cplx(0, 1);
  } else {
    out = next(a);
    phase = cplx(0, -1);
  }
}

struct WeightedString {
  std::string letters;
  cplx coeff;
};

std::vector<WeightedString> stringProduct(
    const std::vector<WeightedString>& A, const std::vector<WeightedString>& B,
    cplx scale) {
  std::vector<WeightedString> out;
  for (const auto& a : A)
    for (const auto& b : B) {
      WeightedString w;
      w.letters.resize(a.letters.size());
      w.coeff = scale * a.coeff * b.coeff;
      for (size_t i = 0; i < a.letters.size(); ++i) {
        cplx ph;
        pauliMul(a.letters[i], b.letters[i], w.letters[i], ph);
        w.coeff *= ph;
      }
      out.push_back(std::move(w));
    }
  return out;
}

// a_j (dag = false) or a^dag_j as a two-string sum in the x-convention
std::vector<WeightedString> modeOperator(int m, int j, bool dag) {
  std::string base(m, 'I');
  for (int i = 0; i < j; ++i) base[i] = 'X';
  std::string z = base, y = base;
  z[j] = 'Z';
  y[j] = 'Y';
  cplx yc = dag ? cplx(0, -0.5) : cplx(0, 0.5);
  return {{z, 0.5}, {y, yc}};
}

void accumulate(std::map<std::string, cplx>& acc,
                const std::vector<WeightedString>& ws) {
  for (const auto& w : ws) acc[w.letters] += w.coeff;
}

// ---- statevector helpers ------------------------------------------------

using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

Mat2 kron1(cplx a, cplx b, cplx c, cplx d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

Mat4 kron22(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// two-mode Fock basis {vac, a0^dag vac, a1^dag vac, a0^dag a1^dag vac} in the
// computational basis, qubit 0 most significant
struct TwoModeBasis {
  Eigen::Vector4cd b[4];
  TwoModeBasis() {
    Mat2 I = Mat2::Identity();
    Mat2 lower = kron1(0.5, 0.5, -0.5, -0.5);       // (Z + iY)/2
    Mat2 X = kron1(0, 1, 1, 0);
    Mat4 a0 = kron22(lower, I), a1 = kron22(X, lower);
    Eigen::Vector4cd vac;
    vac << 0.5, -0.5, -0.5, 0.5;
    b[0] = vac;
    b[1] = a0.adjoint() * vac;
    b[2] = a1.adjoint() * vac;
    b[3] = a0.adjoint() * a1.adjoint() * vac;
  }
};

Mat4 u2Dense(const MatC& u) {
  static const TwoModeBasis tb;
  Eigen::Vector4cd nb[4];
  nb[0] = tb.b[0];
  nb[1] = u(0, 0) * tb.b[1] + u(1, 0) * tb.b[2];
  nb[2] = u(0, 1) * tb.b[1] + u(1, 1) * tb.b[2];
  nb[3] = (u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0)) * tb.b[3];
  Mat4 U = Mat4::Zero();
  for (int i = 0; i < 4; ++i) U += nb[i] * tb.b[i].adjoint();
  return U;
}

Mat4 bogDense(cplx u, cplx v) {
  static const TwoModeBasis tb;
  Eigen::Vector4cd nb[4];
  nb[0] = u * tb.b[0] + v * tb.b[3];
  nb[1] = tb.b[1];
  nb[2] = tb.b[2];
  nb[3] = -std::conj(v) * tb.b[0] + std::conj(u) * tb.b[3];
  Mat4 U = Mat4::Zero();
  for (int i = 0; i < 4; ++i) U += nb[i] * tb.b[i].adjoint();
  return U;
}

Mat4 fswapDense() {
  MatC x(2, 2);
  x << 0, 1, 1, 0;
  return u2Dense(x);
}

void applyOne(VecC& v, int mq, int q, const Mat2& U) {
  long bit = 1L << (mq - 1 - q);
  long dim = v.size();
  for (long i = 0; i < dim; ++i)
    if (!(i & bit)) {
      cplx a = v[i], b = v[i | bit];
      v[i] = U(0, 0) * a + U(0, 1) * b;
      v[i | bit] = U(1, 0) * a + U(1, 1) * b;
    }
}

// 4x4 on the adjacent pair (p, p+1)
void applyAdjacent(VecC& v, int mq, int p, const Mat4& U) {
  long b0 = 1L << (mq - 1 - p), b1 = 1L << (mq - 2 - p);
  long dim = v.size();
  for (long i = 0; i < dim; ++i)
    if (!(i & b0) && !(i & b1)) {
      long idx[4] = {i, i | b1, i | b0, i | b0 | b1};
      cplx a[4];
      for (int t = 0; t < 4; ++t) a[t] = v[idx[t]];
      for (int t = 0; t < 4; ++t) {
        cplx s = 0;
        for (int s2 = 0; s2 < 4; ++s2) s += U(t, s2) * a[s2];
        v[idx[t]] = s;
      }
    }
}

// fermionic two-mode gate on (p, q), p < q: bring q next to p with adjacent
// fswaps so the Jordan-Wigner strings cancel exactly
void applyTwoMode(VecC& v, int mq, int p, int q, const Mat4& U) {
  if (p >= q) throw LatticeError("circuit gate: need q0 < q1");
  static const Mat4 fsw = fswapDense();
  for (int r = q - 1; r > p; --r) applyAdjacent(v, mq, r, fsw);
  applyAdjacent(v, mq, p, U);
  for (int r = p + 1; r < q; ++r) applyAdjacent(v, mq, r, fsw);
}

// coeff * P |v>, letters over the full register
VecC applyStringVec(const VecC& v, int mq, const std::string& letters,
                    cplx coeff) {
  long flip = 0;
  for (int qb = 0; qb < mq; ++qb)
    if (letters[qb] == 'X' || letters[qb] == 'Y')
      flip |= 1L << (mq - 1 - qb);
  VecC out = VecC::Zero(v.size());
  for (long i = 0; i < v.size(); ++i) {
    cplx ph = coeff;
    for (int qb = 0; qb < mq; ++qb) {
      long bit = 1L << (mq - 1 - qb);
      char l = letters[qb];
      if (l == 'Y') ph *= (i & bit) ? cplx(0, -1) : cplx(0, 1);
      else if (l == 'Z' && (i & bit)) ph = -ph;
    }
    out[i ^ flip] += ph * v[i];
  }
  return out;
}

Mat2 axisRotation(char axis, double angle) {
  double c = std::cos(angle / 2), s = std::sin(angle / 2);
  switch (axis) {
    case 'X': return kron1(c, cplx(0, -s), cplx(0, -s), c);
    case 'Y': return kron1(c, -s, s, c);
    case 'Z': return kron1(cplx(c, -s), 0, 0, cplx(c, s));
    case 'H': {
      double r = 1.0 / std::sqrt(2.0);
      return kron1(r, r, r, -r);
    }
    default: throw LatticeError("singleQubitRotation: unknown axis");
  }
}

// ---- fermionic FFT gate emitter -----------------------------------------

// radix-2 butterfly network; returns out with out[t] = slot holding the
// frequency-t mode
std::vector<int> fftGates(const std::vector<int>& slots, cplx w,
                          std::vector<Gate>& gates) {
  int ml = static_cast<int>(slots.size());
  if (ml == 1) return slots;
  std::vector<int> ev, od;
  for (int i = 0; i < ml; i += 2) ev.push_back(slots[i]);
  for (int i = 1; i < ml; i += 2) od.push_back(slots[i]);
  std::vector<int> oe = fftGates(ev, w * w, gates);
  std::vector<int> oo = fftGates(od, w * w, gates);
  std::vector<int> out(ml);
  cplx wt = 1.0;
  for (int t = 0; t < ml / 2; ++t) {
    Gate g;
    g.kind = GateKind::FourierBlock;
    g.q0 = oe[t];
    g.q1 = oo[t];
    g.block = MatC(2, 2);
    double r = 1.0 / std::sqrt(2.0);
    g.block << r, r * wt, r, -r * wt;
    gates.push_back(std::move(g));
    out[t] = oe[t];
    out[t + ml / 2] = oo[t];
    wt *= w;
  }
  return out;
}

// phase layer + permutation network + inverse FFT + position phases: maps the
// slot-local mode t to \hat a_{l_t} of the position register
std::vector<Gate> frameGates(int m) {
  std::vector<Gate> gs;
  for (int t = 0; t < m; ++t) {
    Gate g;
    g.kind = GateKind::Phase;
    g.q0 = t;
    g.angle = -kPi * t;
    gs.push_back(g);
  }
  std::vector<Gate> fftg;
  std::vector<int> slots(m);
  for (int i = 0; i < m; ++i) slots[i] = i;
  cplx w = std::exp(cplx(0, -2 * kPi / m));
  std::vector<int> out = fftGates(slots, w, fftg);
  // permutation: mode t must sit in slot out[t] before the inverse FFT
  std::vector<int> want(m), cur(m);
  for (int t = 0; t < m; ++t) want[out[t]] = t;
  for (int i = 0; i < m; ++i) cur[i] = i;
  for (int slot = 0; slot < m; ++slot) {
    int s = slot;
    while (cur[s] != want[slot]) ++s;
    while (s > slot) {
      Gate g;
      g.kind = GateKind::Fswap;
      g.q0 = s - 1;
      g.q1 = s;
      gs.push_back(g);
      std::swap(cur[s - 1], cur[s]);
      --s;
    }
  }
  // inverse FFT: reversed order, daggered blocks
  for (auto it = fftg.rbegin(); it != fftg.rend(); ++it) {
    Gate g = *it;
    g.block = MatC(it->block.adjoint());
    gs.push_back(std::move(g));
  }
  for (int j = 0; j < m; ++j) {
    Gate g;
    g.kind = GateKind::Phase;
    g.q0 = j;
    g.angle = (2 * kPi / m) * (0.5 - m / 2.0) * j;
    gs.push_back(g);
  }
  return gs;
}

Gate daggered(const Gate& g) {
  Gate d = g;
  switch (g.kind) {
    case GateKind::Phase: d.angle = -g.angle; break;
    case GateKind::Fswap: break;
    case GateKind::FourierBlock: d.block = MatC(g.block.adjoint()); break;
    case GateKind::BogoliubovBlock:
      d.u = std::conj(g.u);
      d.v = -g.v;
      break;
    case GateKind::SingleQubitRotation: d.angle = -g.angle; break;
    case GateKind::PauliStringRotation: d.angle = -g.angle; break;
    case GateKind::GlobalPhase: d.coeff = std::conj(g.coeff); break;
    default:
      throw LatticeError("daggered: unsupported gate kind");
  }
  return d;
}

}  // namespace

std::vector<PauliTerm> jordanWigner(const QuadraticOperator& op) {
  int m = op.modes();
  std::map<std::string, cplx> acc;
  if (op.offset() != 0.0) acc[std::string(m, 'I')] += op.offset();
  const MatC& P = op.hoppingBlock();
  const MatC& Q = op.pairingBlock();
  const MatC& R = op.annihilationBlock();
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (P(p, q) != 0.0)
        accumulate(acc, stringProduct(modeOperator(m, p, true),
                                      modeOperator(m, q, false), P(p, q)));
      if (Q(p, q) != 0.0)
        accumulate(acc, stringProduct(modeOperator(m, p, true),
                                      modeOperator(m, q, true), 0.5 * Q(p, q)));
      if (R(p, q) != 0.0)
        accumulate(acc, stringProduct(modeOperator(m, p, false),
                                      modeOperator(m, q, false), 0.5 * R(p, q)));
    }
  std::vector<PauliTerm> out;
  for (const auto& [letters, coeff] : acc)
    if (std::abs(coeff) > 1e-14) out.push_back({letters, coeff});
  return out;
}

VecC fockVacuumState(int qubits) {
  long dim = 1L << qubits;
  VecC v(dim);
  double a = std::pow(1.0 / std::sqrt(2.0), qubits);
  for (long i = 0; i < dim; ++i) {
    int pc = __builtin_popcountll(static_cast<unsigned long long>(i));
    v[i] = (pc % 2 == 0) ? a : -a;
  }
  return v;
}

VecC statevectorSimulate(const Circuit& c, const VecC& input) {
  if (c.qubits > 20) throw TooManyQubits("statevectorSimulate: > 20 qubits");
  long dim = 1L << c.qubits;
  if (input.size() != dim)
    throw LatticeError("statevectorSimulate: input dimension mismatch");
  VecC v = input;
  int mq = c.qubits;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::SingleQubitRotation:
        applyOne(v, mq, g.q0, axisRotation(g.axis, g.angle));
        break;
      case GateKind::Phase: {
        // e^{i angle n_q} = e^{i angle/2} e^{i angle X/2} in the x-convention
        double h = g.angle / 2;
        Mat2 U = std::exp(cplx(0, h)) *
                 kron1(std::cos(h), cplx(0, std::sin(h)),
                       cplx(0, std::sin(h)), std::cos(h));
        applyOne(v, mq, g.q0, U);
        break;
      }
      case GateKind::BogoliubovBlock:
        applyTwoMode(v, mq, g.q0, g.q1, bogDense(g.u, g.v));
        break;
      case GateKind::FourierBlock:
        applyTwoMode(v, mq, g.q0, g.q1, u2Dense(g.block));
        break;
      case GateKind::Fswap:
        applyTwoMode(v, mq, g.q0, g.q1, fswapDense());
        break;
      case GateKind::PauliStringRotation: {
        VecC pv = applyStringVec(v, mq, g.letters, 1.0);
        v = std::cos(g.angle) * v - cplx(0, std::sin(g.angle)) * pv;
        break;
      }
      case GateKind::PauliStringGate:
        v = applyStringVec(v, mq, g.letters, g.coeff);
        break;
      case GateKind::ControlledString: {
        long cb = 1L << (mq - 1 - g.q0);
        VecC masked = v;
        for (long i = 0; i < dim; ++i)
          if (!(i & cb)) masked[i] = 0.0;
        VecC pv = applyStringVec(masked, mq, g.letters, g.coeff);
        for (long i = 0; i < dim; ++i) v[i] = (i & cb) ? pv[i] : v[i];
        break;
      }
      case GateKind::GlobalPhase:
        v *= g.coeff;
        break;
    }
  }
  return v;
}

std::string exportCircuit(const Circuit& c) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "qubits %d ancillas %d\n", c.qubits,
                c.ancillas);
  out += buf;
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, " %.17g", x);
    out += buf;
  };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::SingleQubitRotation:
        std::snprintf(buf, sizeof buf, "rot %d %c", g.q0, g.axis);
        out += buf;
        num(g.angle);
        break;
      case GateKind::BogoliubovBlock:
        std::snprintf(buf, sizeof buf, "bog %d %d", g.q0, g.q1);
        out += buf;
        num(std::real(g.u));
        num(std::imag(g.u));
        num(std::real(g.v));
        num(std::imag(g.v));
        break;
      case GateKind::FourierBlock:
        std::snprintf(buf, sizeof buf, "fourier %d %d", g.q0, g.q1);
        out += buf;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            num(std::real(g.block(i, j)));
            num(std::imag(g.block(i, j)));
          }
        break;
      case GateKind::Fswap:
        std::snprintf(buf, sizeof buf, "fswap %d %d", g.q0, g.q1);
        out += buf;
        break;
      case GateKind::Phase:
        std::snprintf(buf, sizeof buf, "phase %d", g.q0);
        out += buf;
        num(g.angle);
        break;
      case GateKind::PauliStringRotation:
        out += "prot " + g.letters;
        num(g.angle);
        break;
      case GateKind::PauliStringGate:
        out += "pstring " + g.letters;
        num(std::real(g.coeff));
        num(std::imag(g.coeff));
        break;
      case GateKind::ControlledString:
        std::snprintf(buf, sizeof buf, "cstring %d ", g.q0);
        out += buf;
        out += g.letters;
        num(std::real(g.coeff));
        num(std::imag(g.coeff));
        break;
      case GateKind::GlobalPhase:
        out += "gphase";
        num(std::real(g.coeff));
        num(std::imag(g.coeff));
        break;
    }
    out += '\n';
  }
  return out;
}

Circuit groundStatePrepCircuit(const LatticeSpec& sp) {
  if (!sp.ns())
    throw LatticeError(
        "groundStatePrepCircuit: defined for the antiperiodic sector");
  int m = sp.m;
  GaussianState gs = groundState(sp);
  AhatFrame F = ahatTransform(sp);
  MatC Ma = F.T * gs.M * F.T.adjoint();
  Circuit c;
  c.qubits = m;
  // BCS pairing layer on the (l, -l) momentum pairs, slot partner m-1-t
  for (int t = m / 2; t < m; ++t) {
    int tp = m - 1 - t;
    double nl = std::real(Ma(m + t, m + t));       // <a^dag_t a_t>
    double u = std::sqrt(std::max(0.0, 1.0 - nl));
    cplx pair = Ma(t, m + tp);                     // <a_t a_tp>
    cplx v = (u > 1e-12) ? -std::conj(pair) / u : cplx(1.0);
    Gate g;
    g.kind = GateKind::BogoliubovBlock;
    g.q0 = std::min(t, tp);
    g.q1 = std::max(t, tp);
    g.u = u;
    g.v = (t < tp) ? v : -v;  // creation-order sign for a^dag_t a^dag_tp
    c.gates.push_back(std::move(g));
  }
  for (Gate& g : frameGates(m)) c.gates.push_back(std::move(g));
  return c;
}

Circuit fieldOperatorGadget(const LatticeSpec& sp, int slot, bool dagger) {
  int m = sp.m;
  if (slot < 0 || slot >= m)
    throw LatticeError("fieldOperatorGadget: slot out of range");
  Circuit c;
  c.qubits = m + 1;
  c.ancillas = 1;
  int anc = m;
  std::vector<Gate> W = frameGates(m);
  for (auto it = W.rbegin(); it != W.rend(); ++it)
    c.gates.push_back(daggered(*it));
  // core in the momentum frame: Z_slot with the Jordan-Wigner string applied
  // unconditionally, then the ancilla-controlled X_slot selecting a vs a^dag
  Gate s;
  s.kind = GateKind::PauliStringGate;
  s.letters = std::string(m + 1, 'I');
  for (int i = 0; i < slot; ++i) s.letters[i] = 'X';
  s.letters[slot] = 'Z';
  s.coeff = 1.0;
  c.gates.push_back(std::move(s));
  Gate cs;
  cs.kind = GateKind::ControlledString;
  cs.q0 = anc;
  cs.letters = std::string(m + 1, 'I');
  cs.letters[slot] = 'X';
  cs.coeff = dagger ? 1.0 : -1.0;
  c.gates.push_back(std::move(cs));
  for (Gate& g : W) c.gates.push_back(std::move(g));
  return c;
}

Circuit trotterize(const KooSaleurGenerator& gen, double t, int steps,
                   int order) {
  const QuadraticOperator& H = gen.payload;
  if (!H.isHermitian())
    throw NonHermitianGenerator("trotterize: generator must be Hermitian");
  if (steps < 1 || (order != 1 && order != 2))
    throw LatticeError("trotterize: need steps >= 1 and order in {1, 2}");
  Circuit c;
  c.qubits = H.modes();
  if (t == 0.0) return c;
  double idc = 0;
  std::vector<PauliTerm> ps;
  for (PauliTerm& term : jordanWigner(H)) {
    if (term.letters.find_first_not_of('I') == std::string::npos)
      idc += std::real(term.coeff);
    else
      ps.push_back(std::move(term));
  }
  double dt = t / steps;
  auto emit = [&](const PauliTerm& p, double ang) {
    Gate g;
    g.kind = GateKind::PauliStringRotation;
    g.letters = p.letters;
    g.angle = ang;
    c.gates.push_back(std::move(g));
  };
  for (int s = 0; s < steps; ++s) {
    if (order == 1) {
      for (const auto& p : ps) emit(p, std::real(p.coeff) * dt);
    } else {
      for (const auto& p : ps) emit(p, std::real(p.coeff) * dt / 2);
      for (auto it = ps.rbegin(); it != ps.rend(); ++it)
        emit(*it, std::real(it->coeff) * dt / 2);
    }
  }
  if (idc != 0.0) {
    Gate g;
    g.kind = GateKind::GlobalPhase;
    g.coeff = std::exp(cplx(0, -idc * t));
    c.gates.push_back(std::move(g));
  }
  return c;
}

PhaseEstimationPlan phaseEstimationPlan(const QuadraticOperator& observable,
                                        int r) {
  if (!observable.isHermitian())
    throw NonHermitianObservable("phaseEstimationPlan: observable not Hermitian");
  if (r < 1 || r > 16)
    throw LatticeError("phaseEstimationPlan: need 1 <= r <= 16");
  PhaseEstimationPlan plan;
  plan.r = r;
  plan.terms = jordanWigner(observable);
  double g0 = 0, S = 0;
  for (const auto& term : plan.terms) {
    if (term.letters.find_first_not_of('I') == std::string::npos)
      g0 += std::real(term.coeff);
    else
      S += std::abs(term.coeff);
  }
  if (S == 0.0) S = 0.5;
  plan.offset = g0 - S;
  double bins = std::pow(2.0, r);
  plan.scale = 2 * kPi * (bins - 1) / (bins * 2 * S);
  int ms = observable.modes();
  Circuit& c = plan.circuit;
  c.qubits = ms + r;
  c.ancillas = r;
  for (int b = 0; b < r; ++b) {
    Gate g;
    g.kind = GateKind::SingleQubitRotation;
    g.axis = 'H';
    g.q0 = ms + b;
    c.gates.push_back(g);
  }
  // controlled evolution c-e^{-i phi P} = e^{-i phi/2 P} e^{+i phi/2 Z_b P}
  // per Pauli term, one splitting step per power of two
  for (int b = 0; b < r; ++b) {
    double power = std::pow(2.0, b);
    for (const auto& term : plan.terms) {
      if (term.letters.find_first_not_of('I') == std::string::npos) continue;
      double phi = plan.scale * std::real(term.coeff) * power;
      Gate g;
      g.kind = GateKind::PauliStringRotation;
      g.letters = term.letters + std::string(r, 'I');
      g.angle = phi / 2;
      c.gates.push_back(g);
      g.letters[ms + b] = 'Z';
      g.angle = -phi / 2;
      c.gates.push_back(std::move(g));
    }
    // the offset contributes a controlled phase e^{+i scale offset 2^b n_b}
    Gate ph;
    ph.kind = GateKind::Phase;
    ph.q0 = ms + b;
    ph.angle = plan.scale * plan.offset * power;
    c.gates.push_back(ph);
  }
  // inverse QFT on the ancillas, controlled phases split into rotations
  for (int b = r - 1; b >= 0; --b) {
    Gate h;
    h.kind = GateKind::SingleQubitRotation;
    h.axis = 'H';
    h.q0 = ms + b;
    c.gates.push_back(h);
    for (int j = 0; j < b; ++j) {
      double phi = -kPi / std::pow(2.0, b - j);
      Gate g;
      g.kind = GateKind::GlobalPhase;
      g.coeff = std::exp(cplx(0, phi / 4));
      c.gates.push_back(g);
      g.kind = GateKind::PauliStringRotation;
      g.letters = std::string(ms + r, 'I');
      g.letters[ms + b] = 'Z';
      g.angle = phi / 4;
      c.gates.push_back(g);
      g.letters[ms + b] = 'I';
      g.letters[ms + j] = 'Z';
      c.gates.push_back(g);
      g.letters[ms + b] = 'Z';
      g.angle = -phi / 4;
      c.gates.push_back(std::move(g));
    }
  }
  return plan;
}

PhaseEstimationReadout simulateReadout(const PhaseEstimationPlan& plan,
                                       const VecC& input) {
  int ms = plan.circuit.qubits - plan.r;
  if (ms > 12) throw TooManyQubits("simulateReadout: system too large");
  long dim = 1L << ms;
  if (input.size() != dim)
    throw LatticeError("simulateReadout: input dimension mismatch");
  // dense observable from the Pauli terms (each term a signed permutation)
  MatC H = MatC::Zero(dim, dim);
  for (const auto& term : plan.terms) {
    long flip = 0;
    for (int qb = 0; qb < ms; ++qb)
      if (term.letters[qb] == 'X' || term.letters[qb] == 'Y')
        flip |= 1L << (ms - 1 - qb);
    for (long i = 0; i < dim; ++i) {
      cplx ph = term.coeff;
      for (int qb = 0; qb < ms; ++qb) {
        long bit = 1L << (ms - 1 - qb);
        char l = term.letters[qb];
        if (l == 'Y') ph *= (i & bit) ? cplx(0, -1) : cplx(0, 1);
        else if (l == 'Z' && (i & bit)) ph = -ph;
      }
      H(i ^ flip, i) += ph;
    }
  }
  Eigen::SelfAdjointEigenSolver<MatC> es(H);
  MatC V = es.eigenvectors();
  VecR ev = es.eigenvalues();
  long bins = 1L << plan.r;
  PhaseEstimationReadout out;
  out.probabilities.assign(bins, 0.0);
  out.energies.resize(bins);
  for (long b = 0; b < bins; ++b)
    out.energies[b] = plan.offset + (2 * kPi * b / bins) / plan.scale;
  for (long j = 0; j < dim; ++j) {
    double w = std::norm(V.col(j).dot(input));
    if (w < 1e-16) continue;
    double theta = plan.scale * (ev[j] - plan.offset);
    for (long b = 0; b < bins; ++b) {
      double d = theta - 2 * kPi * b / bins;
      // |1/bins sum_x e^{i x d}|^2, Dirichlet kernel
      double s2 = std::sin(d / 2);
      double p = (std::abs(s2) < 1e-12)
                     ? 1.0
                     : std::norm(std::sin(bins * d / 2) / (bins * s2));
      out.probabilities[b] += w * p;
    }
  }
  out.mean = 0;
  for (long b = 0; b < bins; ++b)
    out.mean += out.probabilities[b] * out.energies[b];
  return out;
}

}  // namespace cftlab
