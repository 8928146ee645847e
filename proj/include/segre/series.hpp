#pragma once
#include "segre/error.hpp"
#include "segre/numeric.hpp"
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace segre::series {

/// Laurent polynomial numerator over (1 - t)^d. Always stored reduced:
/// the numerator does not vanish at t = 1 when d > 0.
class HilbertSeries {
public:
  using Terms = std::map<long long, Integer>; // exponent -> coefficient

  HilbertSeries() = default;
  HilbertSeries(Terms numerator, unsigned denom_power)
      : num_(std::move(numerator)), d_(denom_power) {
    prune();
    reduce();
  }

  /// 1 / (1 - t)^d
  static HilbertSeries free(unsigned d) { return HilbertSeries({{0, 1}}, d); }

  const Terms &numerator() const noexcept { return num_; }
  unsigned denom_power() const noexcept { return d_; }

  Integer numerator_at_one() const {
    Integer s = 0;
    for (const auto &[e, c] : num_) s += c;
    return s;
  }

  long long low_exponent() const { return num_.empty() ? 0 : num_.begin()->first; }
  long long high_exponent() const { return num_.empty() ? 0 : num_.rbegin()->first; }

  friend bool operator==(const HilbertSeries &, const HilbertSeries &) = default;

private:
  void prune() {
    std::erase_if(num_, [](const auto &kv) { return kv.second == 0; });
  }
  // Divides out (1 - t) while it is a factor: q_e = sum_{k <= e} c_k.
  void reduce() {
    while (d_ > 0 && !num_.empty() && numerator_at_one() == 0) {
      Terms q;
      Integer partial = 0;
      for (long long e = low_exponent(); e < high_exponent(); ++e) {
        auto it = num_.find(e);
        if (it != num_.end()) partial += it->second;
        if (partial != 0) q[e] = partial;
      }
      num_ = std::move(q);
      --d_;
    }
    if (num_.empty()) d_ = 0;
  }

  Terms num_;
  unsigned d_ = 0;
};

struct CoefficientWindow {
  long long lo = 0;
  long long hi = -1;
  std::vector<Integer> values;

  friend bool operator==(const CoefficientWindow &, const CoefficientWindow &) = default;
};

inline Integer coeff(const HilbertSeries &h, long long n) {
  const unsigned d = h.denom_power();
  Integer total = 0;
  for (const auto &[e, c] : h.numerator()) {
    if (e > n) break;
    if (d == 0) {
      if (e == n) total += c;
      continue;
    }
    // [t^m] (1 - t)^-d = C(m + d - 1, d - 1)
    total += c * binomial(n - e + d - 1, d - 1);
  }
  return total;
}

/// Twist: coeff(shift(h, a), n) == coeff(h, n + a).
inline HilbertSeries shift(const HilbertSeries &h, long long a) {
  HilbertSeries::Terms t;
  for (const auto &[e, c] : h.numerator()) t[e - a] = c;
  return HilbertSeries(std::move(t), h.denom_power());
}

inline CoefficientWindow window(const HilbertSeries &h, long long lo, long long hi) {
  if (lo > hi)
    throw Error(ErrorCode::InvalidArgument, "window requires lo <= hi",
                std::to_string(lo) + ".." + std::to_string(hi));
  CoefficientWindow w{lo, hi, {}};
  w.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) w.values.push_back(coeff(h, n));
  return w;
}

constexpr int kDefaultGuard = 5;

/// Hadamard (coefficientwise) product, recovered as a rational function over
/// (1 - t)^(d1 + d2 - 1) from a finite stretch of the product stream. The
/// last `guard` + 1 reconstructed terms must vanish.
inline HilbertSeries hadamard(const HilbertSeries &h1, const HilbertSeries &h2,
                              int guard = kDefaultGuard) {
  if (h1.denom_power() < 1 || h2.denom_power() < 1)
    throw Error(ErrorCode::ReconstructionFailed,
                "hadamard needs both denominators of positive degree");
  if (guard < 0) throw Error(ErrorCode::InvalidArgument, "negative guard");
  const unsigned d = h1.denom_power() + h2.denom_power() - 1;
  const long long lo = std::max(h1.low_exponent(), h2.low_exponent());
  // Past this degree both coefficient streams are polynomial in n.
  const long long support = std::max(h1.high_exponent(), h2.high_exponent());
  const long long bound = support + static_cast<long long>(d) - 1;
  const long long top = support + static_cast<long long>(d) + guard;

  std::vector<Integer> stream;
  for (long long n = lo; n <= top; ++n) stream.push_back(coeff(h1, n) * coeff(h2, n));

  std::vector<Integer> binom(d + 1);
  for (unsigned k = 0; k <= d; ++k)
    binom[k] = (k % 2 ? -1 : 1) * binomial(d, k);

  HilbertSeries::Terms num;
  for (long long n = lo; n <= top; ++n) {
    Integer c = 0;
    for (unsigned k = 0; k <= d && n - static_cast<long long>(k) >= lo; ++k)
      c += binom[k] * stream[static_cast<std::size_t>(n - k - lo)];
    if (c == 0) continue;
    if (n > bound)
      throw Error(ErrorCode::ReconstructionFailed,
                  "nonzero guard coefficient at degree " + std::to_string(n));
    num[n] = c;
  }
  return HilbertSeries(std::move(num), d);
}

// ---------------------------------------------------------------------------
// Text encoding: "num: c0 e0 c1 e1 ... ; den: d"

inline std::string format(const HilbertSeries &h) {
  std::ostringstream os;
  os << "num:";
  for (const auto &[e, c] : h.numerator()) os << ' ' << c << ' ' << e;
  os << " ; den: " << h.denom_power();
  return os.str();
}

inline HilbertSeries parse(const std::string &text) {
  auto bad = [&](const std::string &why) {
    return Error(ErrorCode::ParseError, "malformed series: " + why, text);
  };
  auto semi = text.find(';');
  if (semi == std::string::npos) throw bad("missing ';'");
  std::istringstream num_part(text.substr(0, semi));
  std::istringstream den_part(text.substr(semi + 1));
  std::string tag;
  if (!(num_part >> tag) || tag != "num:") throw bad("expected 'num:'");
  HilbertSeries::Terms terms;
  std::string cs, es;
  while (num_part >> cs) {
    if (!(num_part >> es)) throw bad("coefficient without exponent");
    try {
      Integer c(cs);
      long long e = std::stoll(es);
      terms[e] += c;
    } catch (const std::exception &) {
      throw bad("bad number '" + cs + " " + es + "'");
    }
  }
  long long d = -1;
  if (!(den_part >> tag) || tag != "den:" || !(den_part >> d) || d < 0)
    throw bad("expected 'den: <nonnegative integer>'");
  if (den_part >> tag) throw bad("trailing input");
  return HilbertSeries(std::move(terms), static_cast<unsigned>(d));
}

} // namespace segre::series
