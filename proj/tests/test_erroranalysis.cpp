#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cftlab/erroranalysis.hpp"
#include "cftlab/oar.hpp"

using namespace cftlab;

TEST_CASE("Sobolev norms: exact Haar values and tabulated references") {
  VecR haar = daubechiesFilter(2);
  auto r0 = sobolevNorm(haar, 0.0);
  CHECK(!r0.divergent);
  CHECK(std::abs(r0.value - 1.0) < 1e-6);  // L2 normalization of the box

  auto rdiv = sobolevNorm(haar, 0.6);
  CHECK(rdiv.divergent);
  CHECK(rdiv.tailExponent == doctest::Approx(0.8).epsilon(0.05));

  VecR d4 = daubechiesFilter(4);
  CHECK(sobolevNorm(d4, 0.5).value == doctest::Approx(1.5298).epsilon(1e-3));
  CHECK(sobolevNorm(d4, 0.9).value == doctest::Approx(3.4016).epsilon(1e-2));
  VecR d12 = daubechiesFilter(12);
  CHECK(sobolevNorm(d12, 0.5).value == doctest::Approx(1.4141).epsilon(1e-3));
}

TEST_CASE("regularity caps") {
  CHECK(sobolevExponentCap(2) == doctest::Approx(0.5));
  CHECK(sobolevExponentCap(4) == doctest::Approx(1.0));
  CHECK(sobolevExponentCap(12) == doctest::Approx(2.3882));
  CHECK_THROWS_AS(sobolevExponentCap(5), UnsupportedOrder);
}

TEST_CASE("momentum error curves decay and vanish for |k| <= 1 anomalous") {
  auto diag = momentumErrorCurve(2, 3, 6, 2,
                                 MomentumErrorComponent::DiagonalL2);
  CHECK(diag.monotoneDecreasing);
  auto fit = fitDecay(diag);
  CHECK(fit.slope < -0.5);

  auto hs = momentumErrorCurve(2, 3, 6, 2,
                               MomentumErrorComponent::OffdiagonalHS);
  CHECK(hs.monotoneDecreasing);
  CHECK(fitDecay(hs).slope < -0.5);

  for (int k : {0, 1, -1}) {
    auto zero = momentumErrorCurve(k, 3, 5, 2,
                                   MomentumErrorComponent::OffdiagonalHS);
    for (double v : zero.values) CHECK(v < 1e-12);
  }
  CHECK_THROWS_AS(
      momentumErrorCurve(2, 2, 6, 2, MomentumErrorComponent::DiagonalL2),
      ScaleOrderViolation);
}

TEST_CASE("wavelet truncation bound") {
  auto curve = waveletErrorCurve(10, 0.5, 2, 3, 6);
  CHECK(curve.monotoneDecreasing);
  CHECK(curve.values.back() == doctest::Approx(0.355).epsilon(0.01));
  CHECK(curve.values.back() < 0.5);
  CHECK_THROWS_AS(waveletErrorCurve(2, 0.6, 2, 3, 6), DeltaOutOfRange);
  CHECK_THROWS_AS(waveletErrorCurve(4, -0.1, 2, 3, 6), DeltaOutOfRange);
}

TEST_CASE("decay fit on a synthetic power law") {
  ErrorCurve c;
  for (int N = 3; N <= 7; ++N) {
    double n = std::pow(2.0, N + 1);
    c.scales.push_back(N);
    c.sizes.push_back(n);
    c.values.push_back(3.7 * std::pow(n, -2.0));
  }
  auto fit = fitDecay(c);
  CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.7).epsilon(1e-10));
  CHECK(fit.residual < 1e-12);

  ErrorCurve zero = c;
  zero.values[2] = 0.0;
  CHECK_THROWS_AS(fitDecay(zero), DegenerateFit);
}
