#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cftlab/gaussian.hpp"
#include "cftlab/oar.hpp"

using namespace cftlab;
constexpr double kPi = 3.14159265358979323846;

TEST_CASE("Daubechies filters: closed form, normalization, orthogonality") {
  VecR c4 = daubechiesFilter(4);
  double s3 = std::sqrt(3.0), rt = 4 * std::sqrt(2.0);
  VecR ref(4);
  ref << (1 + s3) / rt, (3 + s3) / rt, (3 - s3) / rt, (1 - s3) / rt;
  CHECK((c4 - ref).cwiseAbs().maxCoeff() < 1e-12);
  for (int K : {2, 4, 6, 8, 10, 12}) {
    VecR c = daubechiesFilter(K);
    CHECK(std::abs(c.sum() - std::sqrt(2.0)) < 1e-12);
    for (int t = 0; t < K / 2; ++t) {
      double dot = 0;
      for (int l = 0; l + 2 * t < K; ++l) dot += c[l] * c[l + 2 * t];
      CHECK(std::abs(dot - (t == 0 ? 1.0 : 0.0)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(daubechiesFilter(3), UnsupportedOrder);
  CHECK_THROWS_AS(daubechiesFilter(0), UnsupportedOrder);
  CHECK_THROWS_AS(daubechiesFilter(64), UnsupportedOrder);
}

TEST_CASE("cascade: Haar box, partition of unity, non-convergence guard") {
  VecR haar = daubechiesFilter(2);
  auto res = cascade(haar, 6);
  CHECK(res.residual == 0.0);
  for (long i = 0; i < res.x.size(); ++i)
    CHECK(res.phi[i] == (res.x[i] < 1.0 ? 1.0 : 0.0));

  VecR c4 = daubechiesFilter(4);
  auto r4 = cascade(c4, 8);
  // partition of unity at dyadic points: sum_k phi(x + k) = 1
  long step = 1L << 8;
  for (double x : {0.25, 0.5, 0.625}) {
    double s = 0;
    for (int k = 0; k < 3; ++k) {
      long i = std::lround((x + k) * step);
      if (i >= 0 && i < r4.phi.size()) s += r4.phi[i];
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(cascade(c4, 8, 1e-12, 1), NonConvergence);
}

TEST_CASE("Fourier samples of the scaling function") {
  VecR haar = daubechiesFilter(2);
  CHECK(std::abs(scalingFunctionFourier(haar, 0.0) - 1.0) < 1e-12);
  for (double xi : {0.7, 2.3, 9.1}) {
    cplx v = scalingFunctionFourier(haar, xi, 40);
    double box = std::abs(std::sin(xi / 2) / (xi / 2));
    CHECK(std::abs(std::abs(v) - box) < 1e-9);
  }
  VecR c8 = daubechiesFilter(8);
  CHECK(std::abs(scalingFunctionFourier(c8, 0.0) - 1.0) < 1e-12);
}

TEST_CASE("wavelet isometry and the ascending/descending duality") {
  auto spN = buildSpec(3, 1.0, 0.0);
  for (int K : {2, 4, 6, 8, 12}) {
    MatR V = waveletIsometry(spN, daubechiesFilter(K));
    CHECK((V.transpose() * V - MatR::Identity(spN.m, spN.m))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
  auto spR = buildSpec(3, 1.0, 0.0, Sector::Ramond);
  MatR VR = waveletIsometry(spR, daubechiesFilter(6));
  CHECK((VR.transpose() * VR - MatR::Identity(spR.m, spR.m))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  auto sp0 = buildSpec(0, 1.0, 0.0);
  CHECK_THROWS_AS(waveletIsometry(sp0, daubechiesFilter(12)), FilterTooWide);

  // Haar: the total number operator is preserved by the ascending map
  VecR haar = daubechiesFilter(2);
  QuadraticOperator num(spN.m);
  for (int i = 0; i < spN.m; ++i) num.addNM(i, i, 1.0);
  auto img = waveletScalingMap(spN, haar, num);
  CHECK(std::abs(img.hoppingBlock().trace() - cplx(spN.m, 0)) < 1e-10);

  // duality: <alpha(O)>_fine = <O>_{E(fine)}
  auto spF = buildSpec(4, 1.0, 0.0);
  auto fine = groundState(spF);
  auto coarse = coarseGrainState(spF, fine, 3, CoarseGrainScheme::Wavelet,
                                 daubechiesFilter(4));
  QuadraticOperator O(spN.m);
  unsigned seed = 777;
  auto rnd = [&seed]() {
    seed = seed * 1664525u + 1013904223u;
    return double(seed % 10007) / 10007.0 - 0.5;
  };
  for (int p = 0; p < spN.m; ++p)
    for (int q = 0; q <= p; ++q) {
      cplx v(rnd(), p == q ? 0.0 : rnd());
      O.addNM(p, q, v);
      if (p != q) O.addNM(q, p, std::conj(v));
    }
  auto Of = waveletScalingMap(spN, daubechiesFilter(4), O);
  CHECK(std::abs(expectation(fine, Of) - expectation(coarse, O)) < 1e-10);
}

TEST_CASE("momentum shell map: isometry, exact massless fixed point") {
  auto spN = buildSpec(5, 1.0, 0.0);
  auto spM = buildSpec(3, 1.0, 0.0);
  MatC W = momentumScalingMap(spN, spM);
  CHECK((W.adjoint() * W - MatC::Identity(2 * spM.m, 2 * spM.m))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  CHECK_THROWS_AS(momentumScalingMap(spM, spN), ScaleOrderViolation);
  auto spL = buildSpec(3, 2.0, 0.0);
  CHECK_THROWS_AS(momentumScalingMap(spN, spL), LatticeError);

  auto fine = groundState(spN);
  auto coarse = coarseGrainState(spN, fine, 3, CoarseGrainScheme::Momentum);
  auto direct = groundState(spM);
  CHECK((coarse.M - direct.M).cwiseAbs().maxCoeff() < 1e-10);

  // composition law: N -> M equals N -> M' -> M
  auto spMid = buildSpec(4, 1.0, 0.0);
  auto mid = coarseGrainState(spN, fine, 4, CoarseGrainScheme::Momentum);
  auto two = coarseGrainState(spMid, mid, 3, CoarseGrainScheme::Momentum);
  CHECK((two.M - coarse.M).cwiseAbs().maxCoeff() < 1e-10);

  // the massive theory is not a fixed point of the massless shell map
  auto spNm = buildSpec(5, 1.0, 0.7);
  auto fm = groundState(spNm);
  auto cm = coarseGrainState(spNm, fm, 3, CoarseGrainScheme::Momentum);
  auto dm = groundState(buildSpec(3, 1.0, 0.7));
  CHECK((cm.M - dm.M).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("wavelet coarse graining improves with filter order") {
  auto spF = buildSpec(4, 1.0, 0.0);
  auto spN = buildSpec(3, 1.0, 0.0);
  auto fine = groundState(spF);
  auto H = buildStaggeredHamiltonian(spN);
  double E0 = std::real(expectation(groundState(spN), H));
  double prev = 1e300;
  for (int K : {2, 4, 8}) {
    auto coarse = coarseGrainState(spF, fine, 3, CoarseGrainScheme::Wavelet,
                                   daubechiesFilter(K));
    double dev = std::real(expectation(coarse, H)) - E0;
    CHECK(dev > 0);  // variational: the coarse state is not the ground state
    CHECK(dev < prev);
    prev = dev;
  }
}
