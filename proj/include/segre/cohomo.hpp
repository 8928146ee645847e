#pragma once
#include "segre/error.hpp"
#include "segre/numeric.hpp"
#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

// Depth and Cohen-Macaulay criteria for M = #_i R_i(a_i), a Segre product of
// twisted Gorenstein standard graded algebras. Factors carry their
// a-invariant alpha; the "rho" lists used by the uniform-twist criteria are
// rho_i = -alpha_i and are converted at the boundary.
namespace segre::cohomo {

struct GorensteinFactor {
  long long dim = 2;    // Krull dimension
  long long a_inv = -2; // a-invariant
};

struct TwistedFactor {
  GorensteinFactor factor;
  long long shift = 0;
};

using TwistedFactorList = std::vector<TwistedFactor>;

/// Integer extended by -inf; the only unbounded end a witness interval has.
struct Bound {
  std::optional<long long> value; // nullopt = -infinity
  bool is_infinite() const noexcept { return !value.has_value(); }
  friend bool operator==(const Bound &, const Bound &) = default;
};

/// A nonvanishing Kunneth summand of H^q: subset E (1-based) of factors that
/// contribute top local cohomology, nonzero in degrees lo..hi.
struct Witness {
  long long q = 0;
  std::vector<std::size_t> subset;
  Bound lo;
  long long hi = 0;
  friend bool operator==(const Witness &, const Witness &) = default;
};

struct DepthReport {
  long long dim = 0;
  long long depth = 0;
  bool is_cm = false;
  std::vector<Witness> witnesses;
};

constexpr std::size_t kDefaultMaxFactors = 20;

inline std::string list_token(const std::vector<long long> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline void require_non_increasing(const std::vector<long long> &rhos) {
  if (rhos.empty()) throw Error(ErrorCode::InvalidArgument, "empty rho list");
  if (!std::is_sorted(rhos.begin(), rhos.end(), std::greater<>()))
    throw Error(ErrorCode::NotSorted, "rho list must be non-increasing", list_token(rhos));
}

inline void require_factor_bound(std::size_t m, std::size_t max_factors) {
  if (m > max_factors)
    throw Error(ErrorCode::ResourceCap,
                "subset enumeration over " + std::to_string(m) + " factors exceeds the bound",
                std::to_string(max_factors));
}

/// Local cohomology bookkeeping via the Kunneth decomposition. For E a
/// nonempty subset, the summand at q(E) = sum_{i in E} d_i - (|E| - 1) is
/// nonzero iff max_{i not in E}(-a_i) <= min_{i in E}(alpha_i - a_i).
inline DepthReport cohomology_support(const TwistedFactorList &factors,
                                      std::size_t max_factors = kDefaultMaxFactors) {
  const std::size_t m = factors.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty factor list");
  for (const auto &f : factors)
    if (f.factor.dim < 1 || (m >= 2 && f.factor.dim < 2))
      throw Error(ErrorCode::DimensionTooSmall,
                  "every factor of a Segre product needs dimension >= 2",
                  std::to_string(f.factor.dim));
  require_factor_bound(m, max_factors);

  DepthReport rep;
  rep.depth = std::numeric_limits<long long>::max();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    long long q = 0;
    std::optional<long long> lo;
    long long hi = std::numeric_limits<long long>::max();
    Witness w;
    for (std::size_t i = 0; i < m; ++i) {
      const auto &f = factors[i];
      if (mask >> i & 1) {
        w.subset.push_back(i + 1);
        q += f.factor.dim;
        hi = std::min(hi, f.factor.a_inv - f.shift);
      } else {
        lo = std::max(lo.value_or(std::numeric_limits<long long>::min()), -f.shift);
      }
    }
    q -= static_cast<long long>(w.subset.size()) - 1;
    if (mask == full) rep.dim = q;
    if (lo && *lo > hi) continue;
    w.q = q;
    w.lo = Bound{lo};
    w.hi = hi;
    rep.depth = std::min(rep.depth, q);
    rep.witnesses.push_back(std::move(w));
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const Witness &a, const Witness &b) {
              return a.q != b.q ? a.q < b.q : a.subset < b.subset;
            });
  rep.is_cm = rep.depth == rep.dim;
  return rep;
}

/// Closed-form depth of R(a) # S(b) for Gorenstein R, S of dimensions r, s
/// and a-invariants rho, sigma. Inputs with r < s are swapped.
inline DepthReport prop_depth_m2(long long r, long long s, long long rho, long long sigma,
                                 long long a, long long b) {
  if (r < s) {
    std::swap(r, s);
    std::swap(rho, sigma);
    std::swap(a, b);
  }
  if (s < 1) throw Error(ErrorCode::DimensionTooSmall, "dimensions must be >= 1",
                         std::to_string(s));
  DepthReport rep;
  rep.dim = r + s - 1;
  rep.depth = rep.dim;
  const long long d = a - b;
  if (r == s && s > 1) {
    if (d >= -sigma || d <= rho) rep.depth = r;
  } else if (r > s && s > 1) {
    if (-d <= sigma)
      rep.depth = s;
    else if (d <= rho && d < -sigma)
      rep.depth = r;
  } else if (r > s && s == 1) {
    if (-d <= sigma) rep.depth = 1;
  }
  rep.is_cm = rep.depth == rep.dim;
  return rep;
}

/// Chain criterion for M = #_i R_i(-a rho_i) with rho_1 >= ... >= rho_m.
inline bool cm_uniform_twist(const std::vector<long long> &rhos, long long a) {
  require_non_increasing(rhos);
  for (std::size_t l = 0; l + 1 < rhos.size(); ++l) {
    const Integer hi = rhos[l], lo = rhos[l + 1];
    const bool ok = a <= 0 ? (1 - Integer(a)) * lo > -Integer(a) * hi
                           : Integer(a) * lo > (Integer(a) - 1) * hi;
    if (!ok) return false;
  }
  return true;
}

/// The same criterion by exhaustion: for every proper nonempty subset E,
/// max{a rho_i : i not in E} > min{(a - 1) rho_i : i in E}.
inline bool cm_uniform_twist_raw(const std::vector<long long> &rhos, long long a,
                                 std::size_t max_factors = kDefaultMaxFactors) {
  const std::size_t m = rhos.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty rho list");
  require_factor_bound(m, max_factors);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::optional<Integer> outside, inside;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        Integer v = (Integer(a) - 1) * rhos[i];
        if (!inside || v < *inside) inside = v;
      } else {
        Integer v = Integer(a) * rhos[i];
        if (!outside || v > *outside) outside = v;
      }
    }
    if (!(*outside > *inside)) return false;
  }
  return true;
}

/// C^{m-1} rho_m > ... > C rho_2 > rho_1 with C = (a / (a - 1))^sgn(a).
inline bool cm_chain(const std::vector<long long> &rhos, long long a) {
  if (a == 0 || a == 1)
    throw Error(ErrorCode::BadTwist, "chain criterion needs a not in {0, 1}",
                std::to_string(a));
  require_non_increasing(rhos);
  const Rational c = a > 0 ? ratio(a, a - 1) : ratio(a - 1, a);
  Rational power = 1; // C^{l}
  for (std::size_t l = 0; l + 1 < rhos.size(); ++l) {
    Rational prev = power * rhos[l];
    power *= c;
    if (!(power * rhos[l + 1] > prev)) return false;
  }
  return true;
}

/// Anticanonical module of R # S (a-invariants rho, sigma) is CM.
inline bool anticanonical_cm_m2(long long rho, long long sigma) {
  return Integer(sigma) > 2 * Integer(rho) && Integer(rho) > 2 * Integer(sigma);
}

struct TwistInterval {
  enum class Kind { AllIntegers, OpenInterval };
  Kind kind = Kind::AllIntegers;
  Rational lo = 0;
  Rational hi = 0;

  bool contains(const Rational &a) const {
    return kind == Kind::AllIntegers || (lo < a && a < hi);
  }
  /// Integers strictly inside an open interval.
  std::vector<long long> integer_points() const {
    std::vector<long long> pts;
    if (kind == Kind::AllIntegers) return pts;
    Integer first = numerator(lo) / denominator(lo); // truncation toward zero
    if (Rational(first) <= lo) first += 1;
    for (Integer k = first; Rational(k) < hi; ++k) pts.push_back(static_cast<long long>(k));
    return pts;
  }
};

inline std::string to_string(TwistInterval::Kind k) {
  return k == TwistInterval::Kind::AllIntegers ? "all_integers" : "open_interval";
}

inline void require_positive(const std::vector<long long> &rhos) {
  require_non_increasing(rhos);
  for (auto r : rhos)
    if (r <= 0)
      throw Error(ErrorCode::NotPositive, "all rho must be positive", list_token(rhos));
}

/// Largest consecutive ratio rho_i / rho_{i+1}; 1 for a single factor.
inline Rational max_consecutive_ratio(const std::vector<long long> &rhos) {
  require_positive(rhos);
  Rational best = 1;
  for (std::size_t i = 0; i + 1 < rhos.size(); ++i)
    best = std::max(best, ratio(rhos[i], rhos[i + 1]));
  return best;
}

inline TwistInterval cm_twist_interval(const std::vector<long long> &rhos) {
  const Rational rho = max_consecutive_ratio(rhos);
  if (rho == 1) return {};
  return {TwistInterval::Kind::OpenInterval, 1 / (1 - rho), rho / (rho - 1)};
}

/// Whether the a-th power of a canonical ideal of the Segre product is CM.
inline bool canonical_power_cm(const std::vector<long long> &rhos, long long a) {
  if (max_consecutive_ratio(rhos) == 1)
    throw Error(ErrorCode::NotApplicable,
                "needs max consecutive rho ratio > 1 (Gorenstein Segre product)",
                list_token(rhos));
  return cm_twist_interval(rhos).contains(Rational(a));
}

/// Shift vector of the dual of a free Segre module over a friendly family.
inline std::vector<long long> dual_shift(std::vector<long long> shifts) {
  for (auto &s : shifts) s = -s;
  return shifts;
}

/// The factor list #_i R_i(-a rho_i) where R_i has a-invariant -rho_i.
inline TwistedFactorList uniform_twist(const std::vector<long long> &dims,
                                       const std::vector<long long> &rhos, long long a) {
  if (dims.size() != rhos.size())
    throw Error(ErrorCode::InvalidArgument, "dims and rho lists differ in length");
  TwistedFactorList out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    out.push_back({{dims[i], -rhos[i]}, -a * rhos[i]});
  return out;
}

} // namespace segre::cohomo
