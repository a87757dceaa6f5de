#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cftlab/gaussian.hpp"
#include "cftlab/virasoro.hpp"

using namespace cftlab;
constexpr double kPi = 3.14159265358979323846;

static MatC denseK(const SparseBlockOperator& b) {
  int m = b.m;
  MatC K = MatC::Zero(2 * m, 2 * m);
  K.topLeftCorner(m, m) = MatC(b.P);
  K.topRightCorner(m, m) = MatC(b.Q);
  K.bottomLeftCorner(m, m) = MatC(b.R);
  K.bottomRightCorner(m, m) = -MatC(b.P).transpose();
  return K;
}

TEST_CASE("density modes: H_{k=0} is the Hamiltonian, adjoint pairs k <-> -k") {
  auto sp = buildSpec(2, 1.0, 0.0);
  auto H0 = buildStaggeredHamiltonian(sp);
  auto H0k = hamiltonianDensityModes(sp, 0.0);
  CHECK((H0k.K() - H0.K()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(H0k.offset() - H0.offset()) < 1e-12);

  double k = kPi / sp.L;
  auto Hp = hamiltonianDensityModes(sp, k);
  auto Hm = hamiltonianDensityModes(sp, -k);
  CHECK((Hp.dagger().K() - Hm.K()).cwiseAbs().maxCoeff() < 1e-12);

  auto Lp = kooSaleur(sp, k).payload;
  auto Lm = kooSaleur(sp, -k).payload;
  CHECK((Lp.dagger().K() - Lm.K()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(Lp.dagger().offset() - Lm.offset()) < 1e-10);

  auto spM = buildSpec(2, 1.0, 0.3);
  CHECK_THROWS_AS(hamiltonianDensityModes(spM, k), MassiveDensityUnsupported);
  CHECK_THROWS_AS(kooSaleur(sp, 2 * kPi / sp.eps), NyquistViolation);

  auto Hc = hermitianCombination(sp, 2 * k, 0.0, 0.7);
  CHECK(Hc.isHermitian());
}

TEST_CASE("momentum block equals the commutator form in the Fourier frame") {
  for (int N : {2, 3}) {
    auto sp = buildSpec(N, 1.0, 0.0);
    auto F = ahatTransform(sp);
    for (int kint : {0, 1, -1, 2, -3}) {
      auto Lc = kooSaleur(sp, kint * kPi / sp.L).payload;
      MatC Kc = F.T * Lc.K() * F.T.adjoint();
      auto blk = kooSaleurMomentumBlock(sp, kint);
      CHECK((Kc - blk.K()).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(std::abs(Lc.scalar() - blk.scalar()) < 1e-9);
      auto sb = kooSaleurMomentumBlockSparse(sp, kint);
      CHECK((denseK(sb) - blk.K()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(sb.off + 0.5 * MatC(sb.P).trace() - blk.scalar()) < 1e-12);
    }
  }
}

TEST_CASE("sparse vacuum frame composes to the dense one") {
  for (int N : {2, 3}) {
    auto sp = buildSpec(N, 1.0, 0.0);
    auto vf = vacuumFrameAhat(sp);
    auto F = ahatTransform(sp);
    MatC Ssite = MatC(vf.S) * F.T;
    auto dense = vacuumFrame(sp);
    CHECK((Ssite - dense.S).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((vf.mom - dense.mom).cwiseAbs().maxCoeff() < 1e-12);
    // at most 4 entries per row
    for (int i = 0; i < 2 * sp.m; ++i) {
      int nnz = 0;
      for (int j = 0; j < 2 * sp.m; ++j)
        if (std::abs(MatC(vf.S)(i, j)) > 1e-14) ++nnz;
      CHECK(nnz <= 4);
    }
  }
  auto spR = buildSpec(2, 1.0, 0.0, Sector::Ramond);
  CHECK_THROWS_AS(vacuumFrameAhat(spR), DegenerateGroundState);
}

TEST_CASE("frame conjugation and projections agree with the dense route") {
  auto sp = buildSpec(3, 1.0, 0.0);
  auto vf = vacuumFrameAhat(sp);
  auto dense = vacuumFrame(sp);
  int kint = 2;
  auto Lc = kooSaleur(sp, kint * kPi / sp.L).payload;
  MatC Kb_dense = dense.S * Lc.K() * dense.S.adjoint();
  auto Kb = toVacuumFrame(kooSaleurMomentumBlockSparse(sp, kint), vf);
  CHECK((denseK(Kb) - Kb_dense).cwiseAbs().maxCoeff() < 1e-9);

  auto Kb1 = projectSector(Kb, vf, CSector::One);
  MatC keepDiag = MatC::Zero(sp.m, sp.m);
  for (int i = 0; i < sp.m; ++i)
    if (vf.mom[i] < 0) keepDiag(i, i) = 1.0;
  MatC Pi = MatC::Zero(2 * sp.m, 2 * sp.m);
  Pi.topLeftCorner(sp.m, sp.m) = keepDiag;
  Pi.bottomRightCorner(sp.m, sp.m) = keepDiag;
  CHECK((denseK(Kb1) - Pi * Kb_dense * Pi).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("vacuum commutator matches the exact expectation value") {
  auto sp = buildSpec(3, 1.0, 0.0);
  auto gs = groundState(sp);
  double k = 2 * kPi / sp.L;
  auto A = kooSaleur(sp, k).payload;
  auto B = kooSaleur(sp, -k).payload;
  cplx direct = expectationProduct(gs, A, B) - expectationProduct(gs, B, A);
  // same commutator through the sparse vacuum-frame trace formula
  auto vf = vacuumFrameAhat(sp);
  auto Ab = toVacuumFrame(kooSaleurMomentumBlockSparse(sp, 2), vf);
  auto Bb = toVacuumFrame(kooSaleurMomentumBlockSparse(sp, -2), vf);
  cplx viaTrace = vacuumCommutatorSparse(Ab, Bb);
  CHECK(std::abs(direct - viaTrace) < 1e-8);
}

TEST_CASE("central charge estimates per sector") {
  auto sp = buildSpec(5, 1.0, 0.0);
  CHECK(std::abs(centralChargeEstimate(sp, 2, CSector::Zero)) < 1e-8);
  double cHalf = centralChargeEstimate(sp, 2, CSector::Half);
  CHECK(cHalf == doctest::Approx(0.5).epsilon(0.05));
  double cOne = centralChargeEstimate(sp, 2, CSector::One);
  CHECK(cOne == doctest::Approx(1.0).epsilon(0.05));
  CHECK_THROWS_AS(centralChargeEstimate(sp, 1, CSector::Half), UndefinedForUnitK);
  auto spR = buildSpec(3, 1.0, 0.0, Sector::Ramond);
  CHECK_THROWS_AS(centralChargeEstimate(spR, 2, CSector::Half),
                  DegenerateGroundState);
}

TEST_CASE("continuum block and matching constant") {
  double nu = continuumMatchingConstant(2, 6);
  CHECK(nu == doctest::Approx(-1.0).epsilon(0.01));
  auto blk = continuumVirasoroBlock(2, 2, CSector::One, 6);
  CHECK(blk.modes.size() == 4);
  CHECK(blk.modes.front() == doctest::Approx(-3.5));
  // entry lam -> lam + k at lam = -3.5 is nu (lam + k/2) = nu * (-2.5)
  int i0 = 0, j0 = 2;  // -3.5 -> -1.5
  CHECK(std::real(blk.block(j0, i0)) == doctest::Approx(nu * -2.5));
  CHECK(std::abs(blk.block(i0, j0)) == 0.0);
}
