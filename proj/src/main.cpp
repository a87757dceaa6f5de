// Command-line front end: named experiments with CSV artifacts.
//
// Configuration is flat key=value text (see --config); any key can be
// overridden by the subcommand flag of the same name. Artifacts are written
// to --out and reruns with identical inputs are byte-identical.
//
// Exit codes:
//   0 success                 8 undefined-for-unit-k     12 delta out of range
//   2 usage / config error    9 unsupported order        13 degenerate fit
//   3 lattice error          10 non-convergence          14 non-Hermitian input
//   4 scale order violation  11 filter too wide          15 too many qubits
//   5 degenerate ground state
//   6 massive density unsupported
//   7 Nyquist violation

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cftlab/circuits.hpp"
#include "cftlab/erroranalysis.hpp"
#include "cftlab/gaussian.hpp"
#include "cftlab/io.hpp"
#include "cftlab/lattice.hpp"
#include "cftlab/oar.hpp"
#include "cftlab/virasoro.hpp"

using namespace cftlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Context {
  Config cfg;  // file config overlaid with CLI flags
  std::string outDir = "out";
  unsigned seed = 1;
  bool gnuplot = false;

  std::string path(const std::string& name) const {
    return (std::filesystem::path(outDir) / name).string();
  }
};

Sector parseSector(const std::string& s) {
  if (s == "ns" || s == "neveu-schwarz") return Sector::NeveuSchwarz;
  if (s == "r" || s == "ramond") return Sector::Ramond;
  throw ConfigError("sector: expected 'ns' or 'ramond', got '" + s + "'");
}

CSector parseCSector(const std::string& s) {
  if (s == "c0" || s == "zero") return CSector::Zero;
  if (s == "c12" || s == "half") return CSector::Half;
  if (s == "c1" || s == "one") return CSector::One;
  throw ConfigError("sector: expected c0, c12 or c1, got '" + s + "'");
}

LatticeSpec specFromConfig(const Context& ctx, int defaultN) {
  return buildSpec(ctx.cfg.getInt("N", defaultN), ctx.cfg.getDouble("L", 1.0),
                   ctx.cfg.getDouble("lambda", 0.0),
                   parseSector(ctx.cfg.get("sector", "ns")));
}

double logFit(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---- subcommands ---------------------------------------------------------

void runSpectrum(const Context& ctx) {
  LatticeSpec sp = specFromConfig(ctx, 3);
  SpectralData sd = diagonalize(sp);
  std::vector<std::vector<double>> rows;
  double minOmega = 1e300;
  for (int i = 0; i < sd.momenta.size(); ++i) {
    rows.push_back({sd.momenta[i], sd.omega[i], sd.theta[i]});
    minOmega = std::min(minOmega, sd.omega[i]);
  }
  writeTextFile(ctx.path("spectrum.csv"),
                formatCsv({"k", "omega", "theta"}, rows));
  std::printf("spectrum: N=%d n=%d min_omega=%.6g offset=%.10g zero_mode=%d\n",
              sp.N, sp.n, minOmega, sd.diagonalOffset, sd.zeroMode ? 1 : 0);
}

void runGroundState(const Context& ctx) {
  LatticeSpec sp = specFromConfig(ctx, 3);
  GaussianState gs = groundState(sp);
  QuadraticOperator H = buildStaggeredHamiltonian(sp);
  double energy = std::real(expectation(gs, H));
  VecR ls = fullMomenta(sp);
  std::vector<std::vector<double>> rows;
  for (int p = 0; p < sp.m; ++p)
    for (int q = 0; q < sp.m; ++q) {
      cplx v = gs.M(sp.m + p, sp.m + q);  // <a^dag_p a_q>
      rows.push_back({double(p), double(q), ls[p], ls[q], std::real(v),
                      std::imag(v)});
    }
  writeTextFile(ctx.path("ground_state.csv"),
                formatCsv({"p", "q", "mom_p", "mom_q", "re", "im"}, rows));
  std::printf("ground-state: N=%d energy=%.10g purity_defect=%.3g\n", sp.N,
              energy, gs.purityDefect());
}

void runCorrelator(const Context& ctx) {
  LatticeSpec sp = specFromConfig(ctx, 4);
  int r = ctx.cfg.getInt("r", 0);
  int s = ctx.cfg.getInt("s", sp.n / 2);
  double tmax = ctx.cfg.getDouble("tmax", 0.5);
  int steps = ctx.cfg.getInt("steps", 16);
  std::vector<std::vector<double>> rows;
  double maxErr = 0;
  for (int i = 0; i <= steps; ++i) {
    double t = tmax * i / steps;
    cplx lat = staggeredFieldCorrelator(sp, r, s, t);
    cplx cont = continuumFieldCorrelator(sp, r, s, t);
    maxErr = std::max(maxErr, std::abs(lat - cont));
    rows.push_back({t, std::real(lat), std::imag(lat), std::real(cont),
                    std::imag(cont), std::abs(lat - cont)});
  }
  writeTextFile(
      ctx.path("correlator.csv"),
      formatCsv({"t", "re_lat", "im_lat", "re_cont", "im_cont", "abs_err"},
                rows));
  std::printf("correlator: N=%d r=%d s=%d max_abs_err=%.6g\n", sp.N, r, s,
              maxErr);
}

void runVirasoroCheck(const Context& ctx) {
  LatticeSpec sp = specFromConfig(ctx, 3);
  int kmax = ctx.cfg.getInt("kmax", 3);
  AhatFrame F = ahatTransform(sp);
  std::vector<std::vector<double>> rows;
  double worst = 0;
  for (int k = -kmax; k <= kmax; ++k) {
    QuadraticOperator blk = kooSaleurMomentumBlock(sp, k);
    QuadraticOperator comm = kooSaleur(sp, k * kPi / sp.L).payload;
    MatC Kc = F.T * comm.K() * F.T.adjoint();
    double res = (blk.K() - Kc).cwiseAbs().maxCoeff();
    double sres = std::abs(blk.scalar() - comm.scalar());
    worst = std::max(worst, std::max(res, sres));
    rows.push_back({double(k), res, sres});
  }
  writeTextFile(ctx.path("virasoro_check.csv"),
                formatCsv({"k", "kernel_residual", "scalar_residual"}, rows));
  std::printf("virasoro-check: N=%d kmax=%d max_residual=%.3g\n", sp.N, kmax,
              worst);
}

void runCentralCharge(const Context& ctx) {
  int Nmin = ctx.cfg.getInt("Nmin", 3);
  int N = ctx.cfg.getInt("N", 5);
  int k = ctx.cfg.getInt("k", 2);
  CSector sec = parseCSector(ctx.cfg.get("sector", "c12"));
  double L = ctx.cfg.getDouble("L", 1.0);
  std::vector<std::vector<double>> rows;
  double last = 0;
  for (int Ni = Nmin; Ni <= N; ++Ni) {
    LatticeSpec sp = buildSpec(Ni, L, 0.0);
    last = centralChargeEstimate(sp, k, sec);
    rows.push_back({double(Ni), double(sp.n), last});
  }
  writeTextFile(ctx.path("central_charge.csv"),
                formatCsv({"N", "n", "estimate"}, rows));
  std::printf("central-charge: k=%d sector=%s estimate(N=%d)=%.6g\n", k,
              ctx.cfg.get("sector", "c12").c_str(), N, last);
}

void runRgFlow(const Context& ctx) {
  int N = ctx.cfg.getInt("N", 5);
  int M = ctx.cfg.getInt("M", 3);
  double L = ctx.cfg.getDouble("L", 1.0);
  double lambda = ctx.cfg.getDouble("lambda", 0.0);
  std::string scheme = ctx.cfg.get("scheme", "momentum");
  int taps = ctx.cfg.getInt("taps", 4);
  LatticeSpec spN = buildSpec(N, L, lambda);
  GaussianState fine = groundState(spN);
  std::vector<std::vector<double>> rows;
  double last = 0;
  for (int Mi = N - 1; Mi >= M; --Mi) {
    LatticeSpec spM = buildSpec(Mi, L, lambda);
    if (scheme == "momentum") {
      GaussianState coarse =
          coarseGrainState(spN, fine, Mi, CoarseGrainScheme::Momentum);
      last = (coarse.M - groundState(spM).M).cwiseAbs().maxCoeff();
    } else if (scheme == "wavelet") {
      GaussianState coarse = coarseGrainState(
          spN, fine, Mi, CoarseGrainScheme::Wavelet, daubechiesFilter(taps));
      QuadraticOperator H = buildStaggeredHamiltonian(spM);
      last = std::real(expectation(coarse, H)) -
             std::real(expectation(groundState(spM), H));
    } else {
      throw ConfigError("scheme: expected 'momentum' or 'wavelet'");
    }
    rows.push_back({double(Mi), double(spM.n), last});
  }
  writeTextFile(ctx.path("rg_flow.csv"),
                formatCsv({"M", "n", "deviation"}, rows));
  // seeded duality property check: <alpha(O)>_fine = <O>_coarse
  LatticeSpec spC = buildSpec(N - 1, L, lambda);
  VecR filt = daubechiesFilter(taps);
  GaussianState coarse =
      coarseGrainState(spN, fine, N - 1, CoarseGrainScheme::Wavelet, filt);
  unsigned lcg = ctx.seed;
  auto rnd = [&lcg]() {
    lcg = lcg * 1664525u + 1013904223u;
    return double(lcg % 10007) / 10007.0 - 0.5;
  };
  QuadraticOperator O(spC.m);
  for (int p = 0; p < spC.m; ++p)
    for (int q = 0; q <= p; ++q) {
      cplx v(rnd(), p == q ? 0.0 : rnd());
      O.addNM(p, q, v);
      if (p != q) O.addNM(q, p, std::conj(v));
    }
  double duality = std::abs(expectation(fine, waveletScalingMap(spC, filt, O)) -
                            expectation(coarse, O));
  std::printf("rg-flow: scheme=%s N=%d M=%d deviation=%.6g duality=%.3g\n",
              scheme.c_str(), N, M, last, duality);
}

void runWaveletCascade(const Context& ctx) {
  int taps = ctx.cfg.getInt("taps", 4);
  int resolution = ctx.cfg.getInt("resolution", 8);
  VecR c = daubechiesFilter(taps);
  std::vector<std::vector<double>> frows;
  for (int l = 0; l < c.size(); ++l) frows.push_back({double(l), c[l]});
  writeTextFile(ctx.path("filter.csv"), formatCsv({"l", "c"}, frows));
  CascadeResult res = cascade(c, resolution);
  std::vector<std::vector<double>> rows;
  for (long i = 0; i < res.x.size(); ++i) rows.push_back({res.x[i], res.phi[i]});
  writeTextFile(ctx.path("cascade.csv"), formatCsv({"x", "phi"}, rows));
  std::printf("wavelet-cascade: taps=%d iterations=%d residual=%.3g\n", taps,
              res.iterations, res.residual);
}

void runErrorCurves(const Context& ctx) {
  std::string rg = ctx.cfg.get("rg", "momentum");
  int M = ctx.cfg.getInt("M", 2);
  int Nmin = ctx.cfg.getInt("Nmin", 3);
  int Nmax = ctx.cfg.getInt("Nmax", 6);
  if (rg == "momentum") {
    int k = ctx.cfg.getInt("k", 2);
    auto diag = momentumErrorCurve(k, Nmin, Nmax, M,
                                   MomentumErrorComponent::DiagonalL2);
    auto hs = momentumErrorCurve(k, Nmin, Nmax, M,
                                 MomentumErrorComponent::OffdiagonalHS);
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < diag.values.size(); ++i)
      rows.push_back({double(diag.scales[i]), diag.sizes[i], diag.values[i],
                      hs.values[i]});
    writeTextFile(ctx.path("error_curves.csv"),
                  formatCsv({"N", "n", "diagonal_l2", "offdiagonal_hs"}, rows));
    bool hsNull = true;
    for (double v : hs.values) hsNull = hsNull && v <= 1e-13;
    double slope = fitDecay(diag).slope;
    if (ctx.gnuplot)
      writeTextFile(ctx.path("error_curves.gp"),
                    gnuplotScript("error_curves.csv",
                                  "momentum RG error, k=" + std::to_string(k),
                                  2, 3));
    std::printf(
        "error-curves: rg=momentum k=%d slope=%.4g monotone=%d hs_null=%d\n",
        k, slope, diag.monotoneDecreasing ? 1 : 0, hsNull ? 1 : 0);
  } else if (rg == "wavelet") {
    int taps = ctx.cfg.getInt("taps", 10);
    double delta = ctx.cfg.getDouble("delta", 0.5);
    double gamma = ctx.cfg.getDouble("gamma", 1.0);
    auto curve = waveletErrorCurve(taps, delta, M, Nmin, Nmax, gamma);
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < curve.values.size(); ++i)
      rows.push_back(
          {double(curve.scales[i]), curve.sizes[i], curve.values[i]});
    writeTextFile(ctx.path("error_curves.csv"),
                  formatCsv({"N", "n", "bound"}, rows));
    if (ctx.gnuplot)
      writeTextFile(ctx.path("error_curves.gp"),
                    gnuplotScript("error_curves.csv",
                                  "wavelet bound, D" + std::to_string(taps),
                                  2, 3));
    std::printf("error-curves: rg=wavelet taps=%d delta=%g final=%.6g\n", taps,
                delta, curve.values.back());
  } else {
    throw ConfigError("rg: expected 'momentum' or 'wavelet'");
  }
}

void runCircuitSim(const Context& ctx) {
  int sites = ctx.cfg.getInt("sites", 4);
  int N = 0;
  while ((2 << (N + 1)) < 2 * sites) ++N;  // sites = 2^{N+1}
  if ((2 << N) != sites)
    throw ConfigError("sites: expected a power of two >= 2");
  int k = ctx.cfg.getInt("k", 1);
  double t = ctx.cfg.getDouble("t", 0.5);
  int steps = ctx.cfg.getInt("steps", 64);
  double L = ctx.cfg.getDouble("L", 1.0);
  double lambda = ctx.cfg.getDouble("lambda", 0.0);
  LatticeSpec sp = buildSpec(N, L, lambda);
  int m = sp.m;

  Circuit prep = groundStatePrepCircuit(sp);
  VecC psi = statevectorSimulate(prep, fockVacuumState(m));
  GaussianState gs = groundState(sp);

  // fidelity against the Gaussian oracle: energy and purity route
  QuadraticOperator H = buildStaggeredHamiltonian(sp);
  auto applyQuadratic = [&](const QuadraticOperator& op, const VecC& v) {
    VecC out = VecC::Zero(v.size());
    Circuit probe;
    probe.qubits = m;
    for (const PauliTerm& term : jordanWigner(op)) {
      Gate g;
      g.kind = GateKind::PauliStringGate;
      g.letters = term.letters;
      g.coeff = term.coeff;
      probe.gates.assign(1, g);
      out += statevectorSimulate(probe, v);
    }
    return out;
  };
  double energy = std::real(psi.dot(applyQuadratic(H, psi)));
  double energyRef = std::real(expectation(gs, H));

  // end-to-end correlator <A B_t> via the statevector pipeline
  QuadraticOperator A(m), B(m);
  A.addNM(0, 1, 1.0);
  A.addNM(1, 0, 1.0);
  B.addNM(m / 2, m / 2 + 1, 1.0);
  B.addNM(m / 2 + 1, m / 2, 1.0);
  KooSaleurGenerator gen;
  gen.N = N;
  gen.k = k * kPi / L;
  gen.c = 0.0;
  gen.chirality = Chirality::Left;
  gen.payload = hermitianCombination(sp, k * kPi / L);
  cplx ref = conformalCorrelator(gs, A, B, gen.payload, t);
  std::vector<std::vector<double>> rows;
  double final = 0;
  for (int s : {steps / 4, steps / 2, steps}) {
    Circuit fwd = trotterize(gen, t, s, 2);
    Circuit bwd = trotterize(gen, -t, s, 2);
    VecC v = statevectorSimulate(fwd, psi);   // e^{-itL} |Omega>
    v = applyQuadratic(B, v);                 // B e^{-itL} |Omega>
    v = statevectorSimulate(bwd, v);          // B_t |Omega>
    // <Omega| A B_t |Omega> = (A^dag |Omega>, B_t |Omega>)
    VecC lhs = applyQuadratic(A.dagger(), psi);
    cplx val = lhs.dot(v);
    double err = std::abs(val - ref);
    rows.push_back({double(s), std::real(val), std::imag(val), err});
    final = err;
  }
  writeTextFile(ctx.path("circuit_sim.csv"),
                formatCsv({"steps", "re", "im", "abs_err"}, rows));
  std::printf(
      "circuit-sim: sites=%d k=%d t=%g energy_gap=%.3g discrepancy=%.6g\n",
      sites, k, t, std::abs(energy - energyRef), final);
}

void runReproduceSupplement(const Context& ctx) {
  // S1 analogue: wavelet bounds over N for several filter orders
  {
    std::vector<int> orders = {4, 6, 8, 10, 12};
    std::vector<std::string> header = {"N", "n"};
    std::vector<std::vector<double>> rows;
    for (int N = 3; N <= 8; ++N)
      rows.push_back({double(N), std::pow(2.0, N + 1)});
    for (int K : orders) {
      header.push_back("D" + std::to_string(K));
      auto curve = waveletErrorCurve(K, 0.5, 2, 3, 8);
      for (size_t i = 0; i < curve.values.size(); ++i)
        rows[i].push_back(curve.values[i]);
    }
    writeTextFile(ctx.path("s1_wavelet_bounds.csv"), formatCsv(header, rows));
  }
  // S2 analogue: Sobolev norms over delta
  {
    std::vector<std::vector<double>> rows;
    for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      std::vector<double> row = {delta};
      for (int K : {4, 10}) {
        auto r = sobolevNorm(daubechiesFilter(K), delta);
        row.push_back(r.divergent ? -1.0 : r.value);
      }
      rows.push_back(row);
    }
    writeTextFile(ctx.path("s2_sobolev_norms.csv"),
                  formatCsv({"delta", "D4", "D10"}, rows));
  }
  // S3/S4 analogue: diagonal L2 momentum curves at k = 2, 3
  for (int k : {2, 3}) {
    auto curve =
        momentumErrorCurve(k, 3, 6, 2, MomentumErrorComponent::DiagonalL2);
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < curve.values.size(); ++i)
      rows.push_back(
          {double(curve.scales[i]), curve.sizes[i], curve.values[i]});
    writeTextFile(
        ctx.path((k == 2 ? std::string("s3_diagonal_k2.csv")
                         : std::string("s4_diagonal_k3.csv"))),
        formatCsv({"N", "n", "diagonal_l2"}, rows));
  }
  // S5 analogue: HS off-diagonal curves, Moebius nullity at k = 0, 1
  {
    std::vector<std::string> header = {"N", "n"};
    std::vector<std::vector<double>> rows;
    for (int N = 3; N <= 6; ++N)
      rows.push_back({double(N), std::pow(2.0, N + 1)});
    for (int k : {0, 1, 2, 3}) {
      header.push_back("k" + std::to_string(k));
      auto curve =
          momentumErrorCurve(k, 3, 6, 2, MomentumErrorComponent::OffdiagonalHS);
      for (size_t i = 0; i < curve.values.size(); ++i)
        rows[i].push_back(curve.values[i]);
    }
    writeTextFile(ctx.path("s5_offdiagonal_hs.csv"), formatCsv(header, rows));
  }
  std::printf("reproduce-supplement: wrote s1..s5 curve files to %s\n",
              ctx.outDir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classical laboratory for lattice CFT circuits and RG flows"};
  app.require_subcommand(1);

  Context ctx;
  std::string configPath;
  int threads = 1;
  app.add_option("--config", configPath, "flat key=value configuration file");
  app.add_option("--out", ctx.outDir, "output directory for artifacts");
  app.add_option("--seed", ctx.seed, "seed for randomized property checks");
  app.add_option("--threads", threads, "Eigen thread count");

  struct Sub {
    const char* name;
    const char* desc;
    std::vector<const char*> keys;
    void (*fn)(const Context&);
  };
  const std::vector<Sub> subs = {
      {"spectrum", "Bogoliubov dispersion of the staggered Hamiltonian",
       {"N", "L", "lambda", "sector"}, runSpectrum},
      {"ground-state", "ground-state covariance and energy",
       {"N", "L", "lambda", "sector"}, runGroundState},
      {"correlator", "lattice vs continuum two-point function",
       {"N", "L", "lambda", "sector", "r", "s", "tmax", "steps"},
       runCorrelator},
      {"virasoro-check", "momentum block form vs commutator form",
       {"N", "L", "kmax"}, runVirasoroCheck},
      {"central-charge", "emergent central charge estimate",
       {"N", "Nmin", "L", "k", "sector"}, runCentralCharge},
      {"rg-flow", "coarse-graining flow of the ground state",
       {"N", "M", "L", "lambda", "scheme", "taps"}, runRgFlow},
      {"wavelet-cascade", "scaling-function samples by cascade iteration",
       {"taps", "resolution"}, runWaveletCascade},
      {"error-curves", "approximation error curves over the UV scale",
       {"rg", "k", "M", "Nmin", "Nmax", "taps", "delta", "gamma"},
       runErrorCurves},
      {"circuit-sim", "circuit pipeline vs the Gaussian oracle",
       {"sites", "k", "t", "steps", "L", "lambda"}, runCircuitSim},
      {"reproduce-supplement", "emit all supplementary curve classes", {},
       runReproduceSupplement},
  };

  std::map<std::string, std::string> overrides;
  void (*selected)(const Context&) = nullptr;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.desc);
    sub->fallthrough();  // global flags may follow the subcommand
    for (const char* key : s.keys) {
      std::string k = key;
      sub->add_option_function<std::string>(
          "--" + k, [&overrides, k](const std::string& v) { overrides[k] = v; },
          "config key '" + k + "'");
    }
    if (std::string(s.name) == "error-curves")
      sub->add_flag("--gnuplot", ctx.gnuplot, "emit a gnuplot script");
    auto fn = s.fn;
    sub->callback([&selected, fn]() { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (!configPath.empty()) ctx.cfg = Config::fromFile(configPath);
    for (const auto& [k, v] : overrides) ctx.cfg.set(k, v);
    Eigen::setNbThreads(threads);
    std::filesystem::create_directories(ctx.outDir);
    selected(ctx);
    return 0;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ScaleOrderViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const DegenerateGroundState& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  } catch (const MassiveDensityUnsupported& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 6;
  } catch (const NyquistViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 7;
  } catch (const UndefinedForUnitK& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 8;
  } catch (const UnsupportedOrder& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 9;
  } catch (const NonConvergence& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 10;
  } catch (const FilterTooWide& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 11;
  } catch (const DeltaOutOfRange& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 12;
  } catch (const DegenerateFit& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 13;
  } catch (const NonHermitianGenerator& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 14;
  } catch (const NonHermitianObservable& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 14;
  } catch (const TooManyQubits& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 15;
  } catch (const LatticeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
