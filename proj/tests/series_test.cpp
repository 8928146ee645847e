#include "segre/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace segre;
using series::HilbertSeries;

namespace {

HilbertSeries random_series(std::mt19937 &rng) {
  std::uniform_int_distribution<int> d(1, 3), len(1, 3), exp(-2, 3), c(-2, 3);
  HilbertSeries::Terms t;
  for (int k = len(rng); k > 0; --k) t[exp(rng)] += c(rng);
  // keep the numerator nonzero at t = 1 so the dimension stays put
  t[0] += 10;
  return HilbertSeries(t, static_cast<unsigned>(d(rng)));
}

void expect_code(ErrorCode code, const std::function<void()> &f) {
  try {
    f();
    ADD_FAILURE() << "no error raised";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

} // namespace

TEST(HilbertSeries, FreeCoefficientsAreBinomials) {
  auto h = HilbertSeries::free(3);
  for (long long n = -3; n <= 10; ++n)
    EXPECT_EQ(series::coeff(h, n), n < 0 ? 0 : (n + 1) * (n + 2) / 2) << n;
}

TEST(HilbertSeries, ConstructorReducesCommonFactor) {
  HilbertSeries h({{0, 1}, {1, -1}}, 2);
  EXPECT_EQ(h, HilbertSeries::free(1));
  HilbertSeries zero({{0, 1}, {1, -1}}, 0);
  EXPECT_EQ(zero.denom_power(), 0u);
  EXPECT_EQ(series::coeff(zero, 1), -1);
  HilbertSeries gone({{3, 0}}, 4);
  EXPECT_TRUE(gone.numerator().empty());
  EXPECT_EQ(gone.denom_power(), 0u);
}

TEST(HilbertSeries, ShiftMovesCoefficients) {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    auto h = random_series(rng);
    for (long long a = -3; a <= 3; ++a) {
      auto s = series::shift(h, a);
      for (long long n = -8; n <= 8; ++n) EXPECT_EQ(series::coeff(s, n), series::coeff(h, n + a));
    }
  }
}

TEST(HilbertSeries, WindowListsCoefficients) {
  auto w = series::window(HilbertSeries::free(2), -1, 3);
  EXPECT_EQ(w.lo, -1);
  EXPECT_EQ(w.hi, 3);
  EXPECT_EQ(w.values, (std::vector<Integer>{0, 1, 2, 3, 4}));
  expect_code(ErrorCode::InvalidArgument, [] { series::window(HilbertSeries::free(1), 2, 1); });
}

TEST(Hadamard, PlaneTimesPlane) {
  auto h = series::hadamard(HilbertSeries::free(2), HilbertSeries::free(2));
  EXPECT_EQ(h, HilbertSeries({{0, 1}, {1, 1}}, 3));
  auto w = series::window(h, 0, 6);
  for (long long n = 0; n <= 6; ++n) EXPECT_EQ(w.values[static_cast<std::size_t>(n)], (n + 1) * (n + 1));
}

TEST(Hadamard, LineIsTheUnit) {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    auto h = random_series(rng);
    // 1/(1-t) has coefficient 1 in every degree >= 0
    auto p = series::hadamard(h, HilbertSeries::free(1));
    for (long long n = 0; n <= 15; ++n) EXPECT_EQ(series::coeff(p, n), series::coeff(h, n));
  }
}

TEST(Hadamard, TwistedCubicTimesLine) {
  // Twisted cubic: (1 + 2t) / (1 - t)^2, coefficients 3n + 1.
  HilbertSeries cubic({{0, 1}, {1, 2}}, 2);
  auto p = series::hadamard(cubic, HilbertSeries::free(2));
  for (long long n = 0; n <= 10; ++n) EXPECT_EQ(series::coeff(p, n), (3 * n + 1) * (n + 1));
  EXPECT_EQ(p.denom_power(), 3u);
}

TEST(Hadamard, MatchesCoefficientProductOnRandomInputs) {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    auto a = random_series(rng), b = random_series(rng);
    auto p = series::hadamard(a, b);
    EXPECT_EQ(p.denom_power(), a.denom_power() + b.denom_power() - 1);
    for (long long n = -6; n <= 30; ++n)
      ASSERT_EQ(series::coeff(p, n), series::coeff(a, n) * series::coeff(b, n))
          << series::format(a) << " | " << series::format(b) << " at " << n;
  }
}

TEST(Hadamard, CommutativeAndAssociative) {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
    EXPECT_EQ(series::hadamard(a, b), series::hadamard(b, a));
    EXPECT_EQ(series::hadamard(series::hadamard(a, b), c), series::hadamard(a, series::hadamard(b, c)));
  }
}

TEST(Hadamard, ShiftedFactors) {
  // R(-a) # S for polynomial rings in two variables: (n - a + 1)(n + 1).
  for (long long a = -3; a <= 3; ++a) {
    auto p = series::hadamard(series::shift(HilbertSeries::free(2), -a), HilbertSeries::free(2));
    for (long long n = -5; n <= 12; ++n) {
      Integer l = n - a < 0 ? 0 : n - a + 1, r = n < 0 ? 0 : n + 1;
      EXPECT_EQ(series::coeff(p, n), l * r) << a << " " << n;
    }
  }
}

TEST(Hadamard, Errors) {
  HilbertSeries poly({{0, 1}, {2, 1}}, 0);
  expect_code(ErrorCode::ReconstructionFailed, [&] { series::hadamard(poly, HilbertSeries::free(2)); });
  expect_code(ErrorCode::InvalidArgument,
              [] { series::hadamard(HilbertSeries::free(1), HilbertSeries::free(1), -1); });
}

TEST(SeriesText, RoundTrip) {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    auto h = random_series(rng);
    EXPECT_EQ(series::parse(series::format(h)), h);
  }
  EXPECT_EQ(series::format(HilbertSeries({{0, 1}, {1, 1}}, 3)), "num: 1 0 1 1 ; den: 3");
  EXPECT_EQ(series::parse("num: 1 0 ; den: 2"), HilbertSeries::free(2));
  EXPECT_EQ(series::parse("num: 1 0 -1 1 ; den: 2"), HilbertSeries::free(1));
  EXPECT_EQ(series::parse("num: ; den: 0"), HilbertSeries());
}

TEST(SeriesText, Malformed) {
  for (const char *bad : {"", "num: 1 0", "den: 2", "num: 1 ; den: 2", "num: x 0 ; den: 1",
                          "num: 1 0 ; den: -1", "num: 1 0 ; den: 1 2", "nom: 1 0 ; den: 1"}) {
    try {
      series::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_EQ(e.token(), bad);
    }
  }
}
