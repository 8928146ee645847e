#pragma once
#include "segre/error.hpp"
#include "segre/matrix.hpp"
#include "segre/numeric.hpp"
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace segre::toric {

using IntMatrix = Matrix<long long>;
using Point = std::vector<long long>;

/// Columns of `matrix` are the exponent vectors of the degree-one generators
/// of K[A]. `grading` is a rational row vector with grading * a_i = 1.
class ToricPresentation {
public:
  const IntMatrix &matrix() const noexcept { return matrix_; }
  const std::vector<Rational> &grading() const noexcept { return grading_; }
  std::size_t ambient_dim() const noexcept { return matrix_.rows(); }
  std::size_t generators() const noexcept { return matrix_.cols(); }
  Point column(std::size_t j) const { return matrix_.column(j); }

  friend ToricPresentation validate(const IntMatrix &);
  friend ToricPresentation tensor(const ToricPresentation &, const ToricPresentation &);
  friend ToricPresentation segre(const ToricPresentation &, const ToricPresentation &);

private:
  ToricPresentation(IntMatrix m, std::vector<Rational> g)
      : matrix_(std::move(m)), grading_(std::move(g)) {}

  IntMatrix matrix_;
  std::vector<Rational> grading_;
};

inline bool certifies_standard_grading(const IntMatrix &a,
                                       const std::vector<Rational> &grading) {
  if (grading.size() != a.rows()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += grading[i] * a(i, j);
    if (s != 1) return false;
  }
  return true;
}

/// Solves grading * A = (1, ..., 1) over Q; free coordinates are set to 0.
inline ToricPresentation validate(const IntMatrix &a) {
  if (a.cols() == 0)
    throw Error(ErrorCode::InvalidArgument, "toric matrix needs at least one column");
  const std::size_t r = a.rows(), n = a.cols();
  QMatrix aug(n, r + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug(j, i) = a(i, j);
    aug(j, r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == r)
    throw Error(ErrorCode::NotStandardGraded,
                "(1,...,1) is not in the rational row space of the matrix");
  std::vector<Rational> grading(r, Rational(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    grading[e.pivots[k]] = e.reduced(k, r);
  return ToricPresentation(a, std::move(grading));
}

/// Block-diagonal presentation of K[A] (x) K[B].
inline ToricPresentation tensor(const ToricPresentation &p, const ToricPresentation &q) {
  const auto &a = p.matrix();
  const auto &b = q.matrix();
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  std::vector<Rational> g = p.grading();
  g.insert(g.end(), q.grading().begin(), q.grading().end());
  return ToricPresentation(std::move(c), std::move(g));
}

/// Segre product: column i * m + j is a_i stacked over b_j.
inline ToricPresentation segre(const ToricPresentation &p, const ToricPresentation &q) {
  const auto &a = p.matrix();
  const auto &b = q.matrix();
  IntMatrix c(a.rows() + b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const std::size_t col = i * b.cols() + j;
      for (std::size_t k = 0; k < a.rows(); ++k) c(k, col) = a(k, i);
      for (std::size_t k = 0; k < b.rows(); ++k) c(a.rows() + k, col) = b(k, j);
    }
  std::vector<Rational> g = p.grading();
  g.resize(a.rows() + b.rows(), Rational(0));
  return ToricPresentation(std::move(c), std::move(g));
}

struct LatticeBasis {
  std::vector<std::vector<Integer>> vectors;
  std::size_t rank() const noexcept { return vectors.size(); }
};

inline std::size_t rank(const IntMatrix &a) {
  ZMatrix z = convert<Integer>(a);
  return hermite_rows(z, z.cols()).size();
}

/// Integer basis of {c in Z^n : A c = 0}, in Hermite normal form.
inline LatticeBasis kernel_lattice(const IntMatrix &a) {
  const std::size_t r = a.rows(), n = a.cols();
  // [A^T | I]: unimodular row operations clearing A^T leave kernel vectors
  // in the identity block of the zero rows.
  ZMatrix m(n, r + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) m(j, i) = a(i, j);
    m(j, r + j) = 1;
  }
  const std::size_t rk = hermite_rows(m, r).size();
  ZMatrix k(n - rk, n);
  for (std::size_t i = rk; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - rk, j) = m(i, r + j);
  hermite_rows(k, n);
  LatticeBasis basis;
  for (std::size_t i = 0; i < k.rows(); ++i) basis.vectors.push_back(k.row(i));
  return basis;
}

inline LatticeBasis kernel_lattice(const ToricPresentation &p) {
  return kernel_lattice(p.matrix());
}

/// Z^n / L is torsion free iff every elementary divisor of the basis is 1.
inline bool is_saturated(const LatticeBasis &basis, std::size_t n) {
  if (basis.vectors.empty()) return true;
  ZMatrix m(basis.vectors.size(), n);
  for (std::size_t i = 0; i < basis.vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = basis.vectors[i][j];
  auto d = elementary_divisors(m);
  if (d.size() != basis.vectors.size()) return false;
  for (const auto &x : d)
    if (x != 1) return false;
  return true;
}

constexpr std::size_t kDefaultPointCap = 1'000'000;

struct SemigroupCensus {
  std::vector<std::size_t> counts;       // counts[n] = #points of degree n
  std::vector<std::vector<Point>> points; // sorted per degree, if kept
};

/// Distinct sums of n columns for n = 0..max_degree, degree by degree.
inline SemigroupCensus census(const ToricPresentation &p, long long max_degree,
                              std::size_t cap = kDefaultPointCap,
                              bool keep_points = true) {
  if (max_degree < 0)
    throw Error(ErrorCode::InvalidArgument, "census degree must be >= 0",
                std::to_string(max_degree));
  std::set<Point> generators;
  for (std::size_t j = 0; j < p.generators(); ++j) generators.insert(p.column(j));

  SemigroupCensus out;
  std::set<Point> level{Point(p.ambient_dim(), 0)};
  std::size_t total = 1;
  for (long long n = 0;; ++n) {
    out.counts.push_back(level.size());
    if (keep_points) out.points.emplace_back(level.begin(), level.end());
    if (n == max_degree) break;
    std::set<Point> next;
    for (const auto &pt : level)
      for (const auto &g : generators) {
        Point s = pt;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += g[k];
        next.insert(std::move(s));
        if (total + next.size() > cap)
          throw Error(ErrorCode::ResourceCap,
                      "census exceeded the point cap at degree " + std::to_string(n + 1),
                      std::to_string(cap));
      }
    total += next.size();
    level = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix file format: "r n" then r lines of n integers.

inline IntMatrix parse_matrix(std::istream &in, const std::string &source = "<input>") {
  long long r = -1, n = -1;
  if (!(in >> r >> n) || r < 0 || n < 0)
    throw Error(ErrorCode::ParseError, "matrix header must be 'r n'", source);
  IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(in >> m(i, j)))
        throw Error(ErrorCode::ParseError,
                    "expected " + std::to_string(r * n) + " integer entries", source);
  std::string extra;
  if (in >> extra)
    throw Error(ErrorCode::ParseError, "trailing token '" + extra + "'", source);
  return m;
}

inline IntMatrix parse_matrix(const std::string &text) {
  std::istringstream is(text);
  return parse_matrix(is);
}

inline std::string format_matrix(const IntMatrix &m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

} // namespace segre::toric
