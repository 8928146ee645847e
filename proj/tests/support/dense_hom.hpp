#pragma once
// Test-only oracles written without any library code: rational rank by plain
// Gaussian elimination, brute-force semigroup census, and graded Hom
// dimensions for Segre products of Artinian monomial quotients, solved as
// one dense linear system.
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace dense {

using Q = boost::multiprecision::cpp_rational;
using Mono = std::vector<int>;

inline std::size_t rank(std::vector<std::vector<Q>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<std::vector<long long>> &m) {
  std::vector<std::vector<Q>> q;
  for (const auto &row : m) q.emplace_back(row.begin(), row.end());
  return rank(std::move(q));
}

/// Points of degree n: all sums of n columns, enumerated as multisets.
inline std::set<std::vector<long long>> semigroup_level(const std::vector<std::vector<long long>> &cols,
                                                        int n, std::size_t ambient) {
  std::set<std::vector<long long>> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  if (cols.empty()) return n == 0 ? std::set<std::vector<long long>>{std::vector<long long>(ambient, 0)}
                                  : std::set<std::vector<long long>>{};
  while (true) {
    std::vector<long long> s(ambient, 0);
    for (auto j : pick)
      for (std::size_t k = 0; k < ambient; ++k) s[k] += cols[j][k];
    out.insert(s);
    // next non-decreasing index tuple
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 == cols.size()) --i;
    if (i < 0) break;
    const std::size_t v = pick[static_cast<std::size_t>(i)] + 1;
    for (int k = i; k < n; ++k) pick[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

/// K[x_1..x_n] / (monomials), assumed Artinian.
struct Ring {
  int vars = 1;
  std::vector<Mono> relations;

  bool standard(const Mono &m) const {
    for (const auto &r : relations) {
      bool div = true;
      for (int v = 0; v < vars; ++v) div = div && r[static_cast<std::size_t>(v)] <= m[static_cast<std::size_t>(v)];
      if (div) return false;
    }
    return true;
  }

  std::vector<Mono> level(int k) const {
    std::vector<Mono> out;
    if (k < 0) return out;
    Mono m(static_cast<std::size_t>(vars), 0);
    // all exponent vectors of total degree k
    auto rec = [&](auto &&self, int v, int left) -> void {
      if (v == vars - 1) {
        m[static_cast<std::size_t>(v)] = left;
        if (standard(m)) out.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        m[static_cast<std::size_t>(v)] = e;
        self(self, v + 1, left - e);
      }
    };
    rec(rec, 0, k);
    return out;
  }

  int socle_bound() const {
    int k = 0;
    while (!level(k).empty()) ++k;
    return k; // first vanishing degree
  }
};

using Pair = std::pair<Mono, Mono>;

inline Mono add(const Mono &a, int v) {
  Mono b = a;
  ++b[static_cast<std::size_t>(v)];
  return b;
}

/// dim_K Hom_T(R(a) # S(b), T)_i with T = R # S.
inline std::size_t segre_hom_dim(const Ring &r, const Ring &s, int a, int b, int i) {
  const int top = std::max(r.socle_bound(), s.socle_bound()) + std::max(std::abs(a), std::abs(b)) + 2;
  auto t_level = [&](int j) {
    std::vector<Pair> out;
    for (const auto &x : r.level(j))
      for (const auto &y : s.level(j)) out.emplace_back(x, y);
    return out;
  };
  auto m_level = [&](int k) {
    std::vector<Pair> out;
    for (const auto &x : r.level(k + a))
      for (const auto &y : s.level(k + b)) out.emplace_back(x, y);
    return out;
  };

  // Unknown c[k][e][f]: coefficient of basis f of T_{k+i} in phi(e), e in M_k.
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> var;
  std::map<int, std::vector<Pair>> mk, tk;
  for (int k = -top; k <= top; ++k) {
    mk[k] = m_level(k);
    tk[k + i] = t_level(k + i);
    tk[k + i + 1] = t_level(k + i + 1);
  }
  for (int k = -top; k <= top; ++k)
    for (std::size_t e = 0; e < mk[k].size(); ++e)
      for (std::size_t f = 0; f < tk[k + i].size(); ++f) {
        const std::size_t id = var.size();
        var[{k, e, f}] = id;
      }

  auto index_of = [](const std::vector<Pair> &lvl, const Pair &p) -> std::ptrdiff_t {
    auto it = std::find(lvl.begin(), lvl.end(), p);
    return it == lvl.end() ? -1 : it - lvl.begin();
  };

  std::vector<std::vector<Q>> rows;
  for (int k = -top; k < top; ++k)
    for (std::size_t e = 0; e < mk[k].size(); ++e)
      for (int u = 0; u < r.vars; ++u)
        for (int v = 0; v < s.vars; ++v) {
          // (x_u y_v) * phi(e) == phi((x_u y_v) * e), coordinate by coordinate
          const auto &tgt = tk[k + i + 1];
          std::vector<std::vector<Q>> eq(tgt.size(), std::vector<Q>(var.size(), Q(0)));
          for (std::size_t f = 0; f < tk[k + i].size(); ++f) {
            Pair g{add(tk[k + i][f].first, u), add(tk[k + i][f].second, v)};
            auto gi = index_of(tgt, g);
            if (gi >= 0) eq[static_cast<std::size_t>(gi)][var[{k, e, f}]] += 1;
          }
          Pair ge{add(mk[k][e].first, u), add(mk[k][e].second, v)};
          auto gei = index_of(mk[k + 1], ge);
          if (gei >= 0)
            for (std::size_t f2 = 0; f2 < tgt.size(); ++f2)
              eq[f2][var[{k + 1, static_cast<std::size_t>(gei), f2}]] -= 1;
          for (auto &row : eq)
            if (std::any_of(row.begin(), row.end(), [](const Q &x) { return x != 0; }))
              rows.push_back(std::move(row));
        }
  return var.size() - rank(std::move(rows));
}

} // namespace dense
