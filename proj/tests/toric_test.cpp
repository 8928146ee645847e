#include "segre/toric.hpp"
#include "support/dense_hom.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace segre;
using toric::IntMatrix;

namespace {

IntMatrix mat(const std::vector<std::vector<long long>> &rows) {
  return IntMatrix::from_rows(rows);
}

std::vector<std::vector<long long>> columns(const IntMatrix &m) {
  std::vector<std::vector<long long>> c;
  for (std::size_t j = 0; j < m.cols(); ++j) c.push_back(m.column(j));
  return c;
}

std::vector<std::vector<long long>> rows_of(const IntMatrix &m) {
  std::vector<std::vector<long long>> r;
  for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(m.row(i));
  return r;
}

// Random matrices with entries in [0, 3], kept only if standard-gradable.
std::optional<toric::ToricPresentation> random_presentation(std::mt19937 &rng) {
  std::uniform_int_distribution<int> rows(1, 3), cols(1, 4), entry(0, 3);
  IntMatrix m(static_cast<std::size_t>(rows(rng)), static_cast<std::size_t>(cols(rng)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  try {
    return toric::validate(m);
  } catch (const Error &) {
    return std::nullopt;
  }
}

std::vector<toric::ToricPresentation> presentations(unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::vector<toric::ToricPresentation> out;
  while (out.size() < count)
    if (auto p = random_presentation(rng)) out.push_back(*p);
  return out;
}

const IntMatrix kI2 = IntMatrix::from_rows({{1, 0}, {0, 1}});
const IntMatrix kCubic = IntMatrix::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}});

} // namespace

TEST(Validate, GradingCertificates) {
  auto p = toric::validate(kI2);
  EXPECT_EQ(p.grading(), (std::vector<Rational>{1, 1}));
  auto c = toric::validate(kCubic);
  EXPECT_EQ(c.grading(), (std::vector<Rational>{Rational(1) / 3, Rational(1) / 3}));
  EXPECT_TRUE(toric::certifies_standard_grading(kCubic, c.grading()));
  // A redundant row: free coordinates are set to zero.
  auto r = toric::validate(mat({{1, 1, 1}, {2, 2, 2}, {0, 1, 2}}));
  EXPECT_TRUE(toric::certifies_standard_grading(r.matrix(), r.grading()));
}

TEST(Validate, Rejections) {
  try {
    toric::validate(mat({{1, 2}}));
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStandardGraded);
  }
  try {
    toric::validate(mat({{0, 1}, {0, 1}}));
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStandardGraded);
  }
  try {
    toric::validate(IntMatrix(2, 0));
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Products, TensorIsBlockDiagonal) {
  auto p = toric::validate(kI2), q = toric::validate(mat({{1, 1}}));
  auto t = toric::tensor(p, q);
  EXPECT_EQ(rows_of(t.matrix()),
            (std::vector<std::vector<long long>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(t.grading(), (std::vector<Rational>{1, 1, 1}));
}

TEST(Products, SegreColumnOrder) {
  auto p = toric::validate(kI2);
  auto s = toric::segre(p, p);
  EXPECT_EQ(columns(s.matrix()), (std::vector<std::vector<long long>>{
                                     {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
  EXPECT_EQ(s.grading(), (std::vector<Rational>{1, 1, 0, 0}));
}

TEST(Products, CertificatesSurvive) {
  auto ps = presentations(21, 30);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    auto t = toric::tensor(ps[i], ps[i + 1]);
    auto s = toric::segre(ps[i], ps[i + 1]);
    EXPECT_TRUE(toric::certifies_standard_grading(t.matrix(), t.grading()));
    EXPECT_TRUE(toric::certifies_standard_grading(s.matrix(), s.grading()));
  }
}

TEST(Products, SegreRankIsSumMinusOne) {
  auto ps = presentations(22, 30);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    const auto &a = ps[i].matrix(), &b = ps[i + 1].matrix();
    auto s = toric::segre(ps[i], ps[i + 1]);
    const auto ra = dense::rank(rows_of(a)), rb = dense::rank(rows_of(b));
    EXPECT_EQ(toric::rank(a), ra);
    EXPECT_EQ(dense::rank(rows_of(s.matrix())), ra + rb - 1);
    EXPECT_EQ(toric::kernel_lattice(s).rank(), a.cols() * b.cols() - (ra + rb - 1));
  }
}

TEST(Kernel, SquareOfPlane) {
  auto p = toric::validate(kI2);
  auto k = toric::kernel_lattice(toric::segre(p, p));
  ASSERT_EQ(k.rank(), 1u);
  EXPECT_EQ(k.vectors[0], (std::vector<Integer>{1, -1, -1, 1}));
}

TEST(Kernel, TwistedCubicHermiteBasis) {
  auto k = toric::kernel_lattice(kCubic);
  ASSERT_EQ(k.rank(), 2u);
  EXPECT_EQ(k.vectors[0], (std::vector<Integer>{1, 0, -3, 2}));
  EXPECT_EQ(k.vectors[1], (std::vector<Integer>{0, 1, -2, 1}));
  EXPECT_TRUE(toric::is_saturated(k, 4));
}

TEST(Kernel, SingleColumnFactorKeepsRelations) {
  auto ps = presentations(23, 20);
  auto line = toric::validate(mat({{1}}));
  for (const auto &p : ps) {
    auto s = toric::segre(p, line);
    EXPECT_EQ(toric::kernel_lattice(s).rank(), p.generators() - toric::rank(p.matrix()));
  }
}

TEST(Kernel, AnnihilatedAndSaturated) {
  auto ps = presentations(24, 40);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    for (const auto &m : {ps[i].matrix(), toric::segre(ps[i], ps[i + 1]).matrix()}) {
      auto k = toric::kernel_lattice(m);
      EXPECT_EQ(k.rank(), m.cols() - dense::rank(rows_of(m)));
      for (const auto &v : k.vectors)
        for (std::size_t r = 0; r < m.rows(); ++r) {
          Integer s = 0;
          for (std::size_t j = 0; j < m.cols(); ++j) s += v[j] * m(r, j);
          EXPECT_EQ(s, 0);
        }
      EXPECT_TRUE(toric::is_saturated(k, m.cols()));
    }
  }
}

TEST(Kernel, SaturationDetectsTorsion) {
  EXPECT_FALSE(toric::is_saturated({{{2, 0}}}, 2));
  EXPECT_FALSE(toric::is_saturated({{{1, 1}, {1, -1}}}, 2));
  EXPECT_TRUE(toric::is_saturated({{{1, 1}}}, 2));
  EXPECT_TRUE(toric::is_saturated({}, 3));
}

TEST(Census, PlaneAndCubic) {
  auto p = toric::validate(kI2);
  EXPECT_EQ(toric::census(p, 4).counts, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  auto c = toric::census(toric::validate(kCubic), 4);
  EXPECT_EQ(c.counts, (std::vector<std::size_t>{1, 4, 7, 10, 13}));
  EXPECT_EQ(c.points[1].front(), (toric::Point{0, 3}));
  auto s = toric::census(toric::segre(p, p), 6, toric::kDefaultPointCap, false);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(s.counts[n], (n + 1) * (n + 1));
  EXPECT_TRUE(s.points.empty());
}

TEST(Census, AgreesWithMultisetEnumeration) {
  for (const auto &p : presentations(25, 15)) {
    auto c = toric::census(p, 4);
    for (int n = 0; n <= 4; ++n) {
      auto ref = dense::semigroup_level(columns(p.matrix()), n, p.ambient_dim());
      EXPECT_EQ(c.counts[static_cast<std::size_t>(n)], ref.size());
      EXPECT_EQ(c.points[static_cast<std::size_t>(n)],
                (std::vector<toric::Point>(ref.begin(), ref.end())));
    }
  }
}

TEST(Census, SegreIsPointwiseProduct) {
  auto ps = presentations(26, 20);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    auto a = toric::census(ps[i], 5, toric::kDefaultPointCap, false);
    auto b = toric::census(ps[i + 1], 5, toric::kDefaultPointCap, false);
    auto s = toric::census(toric::segre(ps[i], ps[i + 1]), 5, toric::kDefaultPointCap, false);
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(s.counts[n], a.counts[n] * b.counts[n]);
  }
}

TEST(Census, TensorIsConvolution) {
  auto ps = presentations(27, 10);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    auto a = toric::census(ps[i], 4, toric::kDefaultPointCap, false);
    auto b = toric::census(ps[i + 1], 4, toric::kDefaultPointCap, false);
    auto t = toric::census(toric::tensor(ps[i], ps[i + 1]), 4, toric::kDefaultPointCap, false);
    for (std::size_t n = 0; n <= 4; ++n) {
      std::size_t conv = 0;
      for (std::size_t k = 0; k <= n; ++k) conv += a.counts[k] * b.counts[n - k];
      EXPECT_EQ(t.counts[n], conv);
    }
  }
}

TEST(Census, Limits) {
  auto p = toric::validate(kI2);
  try {
    toric::census(p, 10, 5);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceCap);
    EXPECT_EQ(e.token(), "5");
  }
  try {
    toric::census(p, -1);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  EXPECT_EQ(toric::census(p, 0).counts, (std::vector<std::size_t>{1}));
}

TEST(MatrixText, RoundTripAndErrors) {
  EXPECT_EQ(toric::format_matrix(kCubic), "2 4\n3 2 1 0\n0 1 2 3\n");
  EXPECT_EQ(toric::parse_matrix(toric::format_matrix(kCubic)), kCubic);
  for (const char *bad : {"", "2", "2 2\n1 0\n0", "2 2\n1 0\n0 x", "1 1\n1 2", "-1 2"}) {
    try {
      toric::parse_matrix(bad);
      ADD_FAILURE() << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}
