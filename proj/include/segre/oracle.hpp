#pragma once
#include "segre/error.hpp"
#include "segre/matrix.hpp"
#include "segre/numeric.hpp"
#include "segre/toric.hpp"
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

// Brute-force graded module arithmetic over Q, truncated to degree windows.
// Everything is exact for Artinian inputs; otherwise results carry flags
// saying which degrees could have been biased by the truncation.
namespace segre::oracle {

/// A standard graded algebra known in degrees 0..top. mult[u][k] is the
/// matrix of multiplication by the u-th degree-one basis element, from
/// degree k to degree k + 1.
struct TruncatedAlgebra {
  long long top = 0;
  std::vector<std::vector<std::string>> basis;
  std::vector<std::vector<QMatrix>> mult;
  bool artinian = false; // zero in degree `top`, hence in every degree >= top

  std::size_t degree_one() const { return mult.size(); }

  /// Dimension of the degree-k component, or nullopt if beyond the window.
  std::optional<std::size_t> dim(long long k) const {
    if (k < 0) return 0;
    if (k <= top) return basis[static_cast<std::size_t>(k)].size();
    if (artinian) return 0;
    return std::nullopt;
  }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto &b : basis) d.push_back(b.size());
    return d;
  }
};

using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

/// Checks the structure invariants: degree-one elements commute (which is
/// associativity for an algebra generated in degree one) and generate every
/// degree in the window.
inline bool check_structure(const TruncatedAlgebra &r) {
  if (r.basis.empty() || r.basis[0].size() != 1) return false;
  const std::size_t n1 = r.degree_one();
  for (long long k = 0; k < r.top; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t src = r.basis[kk].size(), dst = r.basis[kk + 1].size();
    QMatrix stacked(dst, n1 * src);
    for (std::size_t u = 0; u < n1; ++u) {
      const auto &mu = r.mult[u][kk];
      if (mu.rows() != dst || mu.cols() != src) return false;
      for (std::size_t i = 0; i < dst; ++i)
        for (std::size_t j = 0; j < src; ++j) stacked(i, u * src + j) = mu(i, j);
      if (k + 1 < r.top)
        for (std::size_t v = 0; v < u; ++v)
          if (!(r.mult[u][kk + 1] * r.mult[v][kk] == r.mult[v][kk + 1] * r.mult[u][kk]))
            return false;
    }
    if (rank(stacked) != dst) return false;
  }
  return true;
}

namespace detail {

inline std::string monomial_label(const std::vector<std::string> &vars,
                                  const std::vector<int> &exps) {
  std::string s;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[v];
    if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
  }
  return s.empty() ? "1" : s;
}

inline std::string point_label(const toric::Point &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// Builds mult from per-degree element lists and an "add generator" map.
template <typename Elem, typename Add>
std::vector<std::vector<QMatrix>> multiplication(const std::vector<std::vector<Elem>> &levels,
                                                 Add add) {
  std::vector<std::vector<QMatrix>> mult;
  if (levels.size() < 2) return mult;
  const auto &gens = levels[1];
  mult.resize(gens.size());
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    std::map<Elem, std::size_t> index;
    for (std::size_t j = 0; j < levels[k + 1].size(); ++j) index[levels[k + 1][j]] = j;
    for (std::size_t u = 0; u < gens.size(); ++u) {
      QMatrix m(levels[k + 1].size(), levels[k].size());
      for (std::size_t j = 0; j < levels[k].size(); ++j) {
        auto prod = add(levels[k][j], gens[u]);
        if (!prod) continue;
        auto it = index.find(*prod);
        if (it != index.end()) m(it->second, j) = 1;
      }
      mult[u].push_back(std::move(m));
    }
  }
  return mult;
}

} // namespace detail

/// K[vars] / (monomial relations), known in degrees 0..top.
inline AlgebraPtr algebra_from_monomial_quotient(const std::vector<std::string> &vars,
                                                 const std::vector<std::vector<int>> &relations,
                                                 long long top) {
  if (top < 0) throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 0");
  const std::size_t n = vars.size();
  for (const auto &rel : relations) {
    if (rel.size() != n)
      throw Error(ErrorCode::InvalidArgument, "relation length differs from variable count");
    if (std::all_of(rel.begin(), rel.end(), [](int e) { return e == 0; }))
      throw Error(ErrorCode::InvalidArgument, "relation 1 would kill the algebra");
    if (std::any_of(rel.begin(), rel.end(), [](int e) { return e < 0; }))
      throw Error(ErrorCode::InvalidArgument, "negative exponent in relation");
  }
  auto standard = [&](const std::vector<int> &m) {
    for (const auto &rel : relations) {
      bool divides = true;
      for (std::size_t v = 0; v < n && divides; ++v) divides = rel[v] <= m[v];
      if (divides) return false;
    }
    return true;
  };
  // Descending lexicographic order: x^2, x*y, y^2.
  std::vector<std::vector<std::vector<int>>> levels{{std::vector<int>(n, 0)}};
  for (long long k = 0; k < top; ++k) {
    std::set<std::vector<int>, std::greater<>> next;
    for (const auto &m : levels.back())
      for (std::size_t v = 0; v < n; ++v) {
        auto e = m;
        ++e[v];
        if (standard(e)) next.insert(std::move(e));
      }
    levels.emplace_back(next.begin(), next.end());
  }
  auto alg = std::make_shared<TruncatedAlgebra>();
  alg->top = top;
  for (const auto &lvl : levels) {
    std::vector<std::string> labels;
    for (const auto &m : lvl) labels.push_back(detail::monomial_label(vars, m));
    alg->basis.push_back(std::move(labels));
  }
  alg->mult = detail::multiplication(levels, [&](const std::vector<int> &m, const std::vector<int> &g) {
    std::vector<int> s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = m[v] + g[v];
    return standard(s) ? std::optional(s) : std::nullopt;
  });
  alg->artinian = levels.back().empty();
  if (!check_structure(*alg))
    throw Error(ErrorCode::InvalidArgument, "monomial quotient failed structure check");
  return alg;
}

/// K[A] known in degrees 0..top; basis labels are semigroup points.
inline AlgebraPtr algebra_from_toric(const toric::ToricPresentation &p, long long top,
                                     std::size_t cap = toric::kDefaultPointCap) {
  auto c = toric::census(p, top, cap, true);
  auto alg = std::make_shared<TruncatedAlgebra>();
  alg->top = top;
  for (const auto &lvl : c.points) {
    std::vector<std::string> labels;
    for (const auto &pt : lvl) labels.push_back(detail::point_label(pt));
    alg->basis.push_back(std::move(labels));
  }
  alg->mult = detail::multiplication(c.points, [](const toric::Point &a, const toric::Point &b) {
    toric::Point s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return std::optional(s);
  });
  alg->artinian = c.counts.back() == 0;
  return alg;
}

/// R # S on the common window. Degree-one element (u, v) has index
/// u * dim S_1 + v.
inline AlgebraPtr segre_algebra(const TruncatedAlgebra &r, const TruncatedAlgebra &s) {
  auto alg = std::make_shared<TruncatedAlgebra>();
  alg->top = std::min(r.top, s.top);
  for (long long k = 0; k <= alg->top; ++k) {
    std::vector<std::string> labels;
    for (const auto &a : r.basis[static_cast<std::size_t>(k)])
      for (const auto &b : s.basis[static_cast<std::size_t>(k)]) labels.push_back(a + "⊗" + b);
    alg->basis.push_back(std::move(labels));
  }
  for (std::size_t u = 0; u < r.degree_one(); ++u)
    for (std::size_t v = 0; v < s.degree_one(); ++v) {
      std::vector<QMatrix> maps;
      for (long long k = 0; k < alg->top; ++k)
        maps.push_back(kron(r.mult[u][static_cast<std::size_t>(k)],
                            s.mult[v][static_cast<std::size_t>(k)]));
      alg->mult.push_back(std::move(maps));
    }
  alg->artinian = alg->basis.back().empty();
  return alg;
}

/// Graded module over a truncated algebra, known in degrees lo..hi.
/// action[u][k - lo] maps degree k to degree k + 1 for k in lo..hi-1.
/// lo_exact / hi_exact record that the module vanishes below lo / above hi.
struct TruncatedModule {
  AlgebraPtr parent;
  long long lo = 0;
  long long hi = 0;
  bool lo_exact = true;
  bool hi_exact = false;
  std::vector<std::vector<std::string>> basis;
  std::vector<std::vector<QMatrix>> action;
  long long shift_tag = 0;

  bool is_artinian() const { return lo_exact && hi_exact; }

  std::optional<std::size_t> dim(long long k) const {
    if (k < lo) return lo_exact ? std::optional<std::size_t>(0) : std::nullopt;
    if (k > hi) return hi_exact ? std::optional<std::size_t>(0) : std::nullopt;
    return basis[static_cast<std::size_t>(k - lo)].size();
  }

  const QMatrix &act(std::size_t u, long long k) const {
    return action[u][static_cast<std::size_t>(k - lo)];
  }
};

/// The algebra as a free module of rank one over itself.
inline TruncatedModule free_module(const AlgebraPtr &r) {
  TruncatedModule m;
  m.parent = r;
  m.lo = 0;
  m.hi = r->top;
  m.lo_exact = true;
  m.hi_exact = r->artinian;
  m.basis = r->basis;
  m.action = r->mult;
  return m;
}

/// M(a): the degree-k component is M_{k+a}.
inline TruncatedModule shift_module(TruncatedModule m, long long a) {
  m.lo -= a;
  m.hi -= a;
  m.shift_tag += a;
  return m;
}

/// (M # N)_j = M_j (x) N_j over the Segre product of the parents.
inline TruncatedModule segre_module(const TruncatedModule &m, const TruncatedModule &n) {
  TruncatedModule out;
  out.parent = segre_algebra(*m.parent, *n.parent);
  out.lo = std::max(m.lo, n.lo);
  out.hi = std::min(m.hi, n.hi);
  if (out.lo > out.hi)
    throw Error(ErrorCode::EmptyWindow, "module windows do not overlap",
                std::to_string(m.lo) + ".." + std::to_string(m.hi) + " vs " +
                    std::to_string(n.lo) + ".." + std::to_string(n.hi));
  out.lo_exact = (m.lo >= n.lo && m.lo_exact) || (n.lo >= m.lo && n.lo_exact);
  out.hi_exact = (m.hi <= n.hi && m.hi_exact) || (n.hi <= m.hi && n.hi_exact);
  out.shift_tag = 0;
  for (long long k = out.lo; k <= out.hi; ++k) {
    std::vector<std::string> labels;
    for (const auto &a : m.basis[static_cast<std::size_t>(k - m.lo)])
      for (const auto &b : n.basis[static_cast<std::size_t>(k - n.lo)])
        labels.push_back(a + "⊗" + b);
    out.basis.push_back(std::move(labels));
  }
  const std::size_t n1 = m.parent->degree_one(), n2 = n.parent->degree_one();
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v) {
      std::vector<QMatrix> maps;
      for (long long k = out.lo; k < out.hi; ++k) maps.push_back(kron(m.act(u, k), n.act(v, k)));
      out.action.push_back(std::move(maps));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Graded Hom into the ring.

enum class DegreeStatus {
  Exact,    // every component and constraint was inside the window
  Stable,   // truncated, but unchanged by dropping the top degree
  Boundary, // truncation may have biased the value
};

inline std::string to_string(DegreeStatus s) {
  switch (s) {
  case DegreeStatus::Exact: return "exact";
  case DegreeStatus::Stable: return "stable";
  case DegreeStatus::Boundary: return "boundary";
  }
  return "?";
}

struct HomDegree {
  long long degree = 0;
  std::size_t dim = 0;
  DegreeStatus status = DegreeStatus::Boundary;
};

struct HomWindowReport {
  std::vector<HomDegree> degrees;
  bool exact = false;
  long long module_lo = 0, module_hi = 0, ring_top = 0;

  std::map<long long, std::size_t> nonzero() const {
    std::map<long long, std::size_t> out;
    for (const auto &d : degrees)
      if (d.dim) out[d.degree] = d.dim;
    return out;
  }
};

namespace detail {

// A family (phi_k) of maps M_k -> T_{k+i}, linear in a parameter vector:
// the family for parameter p is maps[p].
struct Family {
  std::vector<QMatrix> maps;
  std::size_t params() const { return maps.size(); }
};

inline Family reparametrize(const Family &f, const QMatrix &z) {
  Family g;
  for (std::size_t q = 0; q < z.cols(); ++q) {
    QMatrix acc(f.maps.empty() ? 0 : f.maps[0].rows(), f.maps.empty() ? 0 : f.maps[0].cols());
    for (std::size_t p = 0; p < z.rows(); ++p) {
      if (z(p, q) == 0) continue;
      const auto &mp = f.maps[p];
      for (std::size_t r = 0; r < mp.rows(); ++r)
        for (std::size_t c = 0; c < mp.cols(); ++c)
          if (mp(r, c) != 0) acc(r, c) += z(p, q) * mp(r, c);
    }
    g.maps.push_back(std::move(acc));
  }
  return g;
}

struct HomDegreeResult {
  std::size_t dim = 0;
  DegreeStatus status = DegreeStatus::Boundary;
};

// Walks the module degree by degree. New parameters enter only through new
// generators (the cokernel of T_1 (x) M_k -> M_{k+1}); every relation in the
// kernel of that map becomes a linear constraint on the parameters.
inline HomDegreeResult hom_degree(const TruncatedModule &m, long long lo, long long hi,
                                  bool hi_closed, long long i) {
  const TruncatedAlgebra &t = *m.parent;
  const std::size_t n1 = t.degree_one();
  HomDegreeResult res;
  bool dropped = !m.lo_exact;

  auto ring_dim = [&](long long k) { return t.dim(k + i); };
  auto mod_dim = [&](long long k) -> std::size_t {
    return k < lo || k > hi ? 0 : m.basis[static_cast<std::size_t>(k - m.lo)].size();
  };

  auto first = ring_dim(lo);
  if (!first) return res; // nothing in the window can be trusted
  Family phi;
  for (std::size_t r = 0; r < *first; ++r)
    for (std::size_t c = 0; c < mod_dim(lo); ++c) {
      QMatrix e(*first, mod_dim(lo));
      e(r, c) = 1;
      phi.maps.push_back(std::move(e));
    }
  std::vector<std::size_t> history{phi.params()};
  std::size_t last_new = phi.params();

  const long long stop = hi_closed ? hi : hi - 1;
  for (long long k = lo; k <= stop; ++k) {
    auto target = ring_dim(k + 1);
    if (!target) {
      dropped = true;
      break;
    }
    const std::size_t src = mod_dim(k), dst = k + 1 <= hi ? mod_dim(k + 1) : 0;
    const std::size_t tdim = *target;
    const long long j = k + i;
    const bool ring_maps = j >= 0 && j < t.top && tdim > 0;

    // Columns (u, c) of the action T_1 (x) M_k -> M_{k+1}.
    QMatrix a(dst, n1 * src);
    if (dst > 0)
      for (std::size_t u = 0; u < n1; ++u) {
        const auto &mu = m.act(u, k);
        for (std::size_t r = 0; r < dst; ++r)
          for (std::size_t c = 0; c < src; ++c) a(r, u * src + c) = mu(r, c);
      }
    Echelon ech = rref(a);

    // image[p][col] = t_u * phi_k(m_c) in T_{k+i+1}, for parameter p.
    auto images = [&](const Family &f) {
      std::vector<QMatrix> img;
      for (const auto &mp : f.maps) {
        QMatrix v(tdim, n1 * src);
        if (ring_maps)
          for (std::size_t u = 0; u < n1; ++u) {
            QMatrix tu = t.mult[u][static_cast<std::size_t>(j)] * mp;
            for (std::size_t r = 0; r < tdim; ++r)
              for (std::size_t c = 0; c < src; ++c) v(r, u * src + c) = tu(r, c);
          }
        img.push_back(std::move(v));
      }
      return img;
    };
    auto img = images(phi);

    std::vector<bool> is_pivot(n1 * src, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t col = 0; col < n1 * src; ++col) {
      if (is_pivot[col]) continue;
      // col = sum_q coef_q * pivot column q
      std::vector<std::pair<std::size_t, Rational>> combo;
      for (std::size_t q = 0; q < ech.pivots.size(); ++q)
        if (!ech.reduced(q, col).is_zero()) combo.emplace_back(ech.pivots[q], ech.reduced(q, col));
      for (std::size_t r = 0; r < tdim; ++r) {
        std::vector<Rational> row(phi.params(), Rational(0));
        bool nonzero = false;
        for (std::size_t p = 0; p < phi.params(); ++p) {
          Rational val = img[p](r, col);
          for (const auto &[pc, coef] : combo) {
            const Rational &x = img[p](r, pc);
            if (!x.is_zero()) val -= coef * x;
          }
          if (val != 0) {
            row[p] = val;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    if (!rows.empty()) {
      QMatrix cons = QMatrix::from_rows(rows);
      QMatrix z = nullspace(cons);
      phi = reparametrize(phi, z);
      img = images(phi);
    }

    if (k + 1 > hi) {
      history.push_back(phi.params());
      last_new = 0;
      break;
    }

    // Basis of M_{k+1}: pivot columns of the action, then standard vectors
    // spanning a complement (the new generators).
    QMatrix ext(dst, ech.pivots.size() + dst);
    for (std::size_t q = 0; q < ech.pivots.size(); ++q)
      for (std::size_t r = 0; r < dst; ++r) ext(r, q) = a(r, ech.pivots[q]);
    for (std::size_t r = 0; r < dst; ++r) ext(r, ech.pivots.size() + r) = 1;
    Echelon ext_e = rref(ext);
    std::vector<std::size_t> complement;
    for (auto p : ext_e.pivots)
      if (p >= ech.pivots.size()) complement.push_back(p - ech.pivots.size());
    QMatrix basis(dst, dst);
    for (std::size_t q = 0; q < ech.pivots.size(); ++q)
      for (std::size_t r = 0; r < dst; ++r) basis(r, q) = a(r, ech.pivots[q]);
    for (std::size_t s = 0; s < complement.size(); ++s)
      basis(complement[s], ech.pivots.size() + s) = 1;
    QMatrix binv = inverse(basis);

    Family next;
    for (std::size_t p = 0; p < phi.params(); ++p) {
      QMatrix vals(tdim, dst);
      for (std::size_t q = 0; q < ech.pivots.size(); ++q)
        for (std::size_t r = 0; r < tdim; ++r) vals(r, q) = img[p](r, ech.pivots[q]);
      next.maps.push_back(vals * binv);
    }
    for (std::size_t s = 0; s < complement.size(); ++s)
      for (std::size_t r = 0; r < tdim; ++r) {
        QMatrix vals(tdim, dst);
        vals(r, ech.pivots.size() + s) = 1;
        next.maps.push_back(vals * binv);
      }
    last_new = complement.size() * tdim;
    phi = std::move(next);
    history.push_back(phi.params());
  }
  if (!hi_closed) dropped = true;

  res.dim = history.back();
  if (!dropped && history.size() == static_cast<std::size_t>(hi - lo + 1) + (hi_closed ? 1 : 0))
    res.status = DegreeStatus::Exact;
  else if (m.lo_exact && history.size() >= 2 && last_new == 0 &&
           history[history.size() - 1] == history[history.size() - 2])
    res.status = DegreeStatus::Stable;
  else
    res.status = DegreeStatus::Boundary;
  return res;
}

} // namespace detail

/// Degreewise dimensions of Hom_T(M, T) for degrees i_lo..i_hi, where T is
/// the module's parent algebra.
inline HomWindowReport hom_window(const TruncatedModule &m, long long i_lo, long long i_hi) {
  if (i_lo > i_hi)
    throw Error(ErrorCode::WindowTooSmall, "empty hom degree window",
                std::to_string(i_lo) + ".." + std::to_string(i_hi));
  // Trim components known to be zero at the exact ends of the window.
  long long lo = m.lo, hi = m.hi;
  if (m.hi_exact)
    while (hi >= lo && m.basis[static_cast<std::size_t>(hi - m.lo)].empty()) --hi;
  if (m.lo_exact)
    while (lo <= hi && m.basis[static_cast<std::size_t>(lo - m.lo)].empty()) ++lo;

  HomWindowReport rep;
  rep.module_lo = m.lo;
  rep.module_hi = m.hi;
  rep.ring_top = m.parent->top;
  if (lo > hi) {
    if (!m.is_artinian())
      throw Error(ErrorCode::WindowTooSmall, "module has no component inside its window",
                  std::to_string(m.lo) + ".." + std::to_string(m.hi));
    for (long long i = i_lo; i <= i_hi; ++i)
      rep.degrees.push_back({i, 0, DegreeStatus::Exact});
    rep.exact = true;
    return rep;
  }
  rep.exact = true;
  for (long long i = i_lo; i <= i_hi; ++i) {
    auto r = detail::hom_degree(m, lo, hi, m.hi_exact, i);
    rep.degrees.push_back({i, r.dim, r.status});
    rep.exact = rep.exact && r.status == DegreeStatus::Exact;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Friendliness witnesses.

struct MonomialRing {
  std::vector<std::string> vars;
  std::vector<std::vector<int>> relations;
};

/// "x:3" is K[x]/(x^3); "x,y" is K[x,y]; "x:3,y:2" is K[x,y]/(x^3,y^2);
/// "x,y/x*y,y^3" adds the listed monomial relations.
inline MonomialRing parse_monomial_ring(const std::string &text) {
  auto bad = [&](const std::string &why) {
    return Error(ErrorCode::ParseError, "malformed ring: " + why, text);
  };
  auto split = [](const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == sep) {
        out.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  };
  auto to_int = [&](const std::string &s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; })) throw bad("bad exponent '" + s + "'");
    return std::stoi(s);
  };
  MonomialRing ring;
  auto slash = text.find('/');
  std::vector<std::pair<std::string, int>> powers;
  for (const auto &item : split(text.substr(0, slash), ',')) {
    auto colon = item.find(':');
    std::string name = item.substr(0, colon);
    if (name.empty()) throw bad("empty variable name");
    if (std::find(ring.vars.begin(), ring.vars.end(), name) != ring.vars.end())
      throw bad("repeated variable '" + name + "'");
    ring.vars.push_back(name);
    if (colon != std::string::npos) powers.emplace_back(name, to_int(item.substr(colon + 1)));
  }
  auto var_index = [&](const std::string &name) {
    auto it = std::find(ring.vars.begin(), ring.vars.end(), name);
    if (it == ring.vars.end()) throw bad("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - ring.vars.begin());
  };
  for (const auto &[name, e] : powers) {
    std::vector<int> rel(ring.vars.size(), 0);
    rel[var_index(name)] = e;
    ring.relations.push_back(std::move(rel));
  }
  if (slash != std::string::npos)
    for (const auto &mono : split(text.substr(slash + 1), ',')) {
      std::vector<int> rel(ring.vars.size(), 0);
      for (const auto &factor : split(mono, '*')) {
        auto caret = factor.find('^');
        rel[var_index(factor.substr(0, caret))] +=
            caret == std::string::npos ? 1 : to_int(factor.substr(caret + 1));
      }
      ring.relations.push_back(std::move(rel));
    }
  return ring;
}

using RingSpec = std::variant<MonomialRing, toric::ToricPresentation>;

inline AlgebraPtr build_algebra(const RingSpec &spec, long long top,
                                std::size_t cap = toric::kDefaultPointCap) {
  if (auto mono = std::get_if<MonomialRing>(&spec))
    return algebra_from_monomial_quotient(mono->vars, mono->relations, top);
  return algebra_from_toric(std::get<toric::ToricPresentation>(spec), top, cap);
}

enum class Verdict { NotFriendlyCertified, Consistent, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::NotFriendlyCertified: return "not_friendly_certified";
  case Verdict::Consistent: return "consistent";
  case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Dimension of a Segre component from the factors' windows, or nullopt if
/// a truncation hides it.
inline std::optional<std::size_t> segre_dim(const TruncatedModule &m, const TruncatedModule &n,
                                            long long k) {
  auto a = m.dim(k), b = n.dim(k);
  if ((a && *a == 0) || (b && *b == 0)) return 0;
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

struct FriendlinessReport {
  long long i_lo = 0, i_hi = 0, degree_cap = 0;
  HomWindowReport left;                         // (R(a) # S(b))^*
  std::vector<std::optional<std::size_t>> right; // R(-a) # S(-b), per degree
  std::vector<long long> compared, excluded, mismatches;
  bool certified_mismatch = false;
  Verdict verdict = Verdict::Inconclusive;

  std::map<long long, std::size_t> right_nonzero() const {
    std::map<long long, std::size_t> out;
    for (std::size_t k = 0; k < right.size(); ++k)
      if (right[k] && *right[k]) out[i_lo + static_cast<long long>(k)] = *right[k];
    return out;
  }
};

/// Compares (R(a) # S(b))^* with R(a)^* # S(b)^* = R(-a) # S(-b) degree by
/// degree. A mismatch in an exact degree certifies that the pair is not
/// friendly; agreement is evidence only.
inline FriendlinessReport friendliness_witness(const RingSpec &r_spec, const RingSpec &s_spec,
                                               long long a, long long b, long long i_lo,
                                               long long i_hi,
                                               std::optional<long long> degree_cap = {},
                                               std::size_t cap = toric::kDefaultPointCap) {
  if (i_lo > i_hi)
    throw Error(ErrorCode::WindowTooSmall, "empty window",
                std::to_string(i_lo) + ".." + std::to_string(i_hi));
  FriendlinessReport rep;
  rep.i_lo = i_lo;
  rep.i_hi = i_hi;
  rep.degree_cap = degree_cap.value_or(std::max(std::abs(i_lo), std::abs(i_hi)) +
                                       std::max(std::abs(a), std::abs(b)) + 2);
  auto r = build_algebra(r_spec, rep.degree_cap, cap);
  auto s = build_algebra(s_spec, rep.degree_cap, cap);

  auto m = segre_module(shift_module(free_module(r), a), shift_module(free_module(s), b));
  rep.left = hom_window(m, i_lo, i_hi);

  auto rd = shift_module(free_module(r), -a);
  auto sd = shift_module(free_module(s), -b);
  for (long long i = i_lo; i <= i_hi; ++i) rep.right.push_back(segre_dim(rd, sd, i));

  bool any_stable_mismatch = false;
  for (std::size_t k = 0; k < rep.right.size(); ++k) {
    const auto &l = rep.left.degrees[k];
    const auto &rt = rep.right[k];
    if (!rt || l.status == DegreeStatus::Boundary) {
      rep.excluded.push_back(l.degree);
      continue;
    }
    rep.compared.push_back(l.degree);
    if (l.dim == *rt) continue;
    rep.mismatches.push_back(l.degree);
    if (l.status == DegreeStatus::Exact)
      rep.certified_mismatch = true;
    else
      any_stable_mismatch = true;
  }
  if (rep.certified_mismatch)
    rep.verdict = Verdict::NotFriendlyCertified;
  else if (!any_stable_mismatch && !rep.compared.empty())
    rep.verdict = Verdict::Consistent;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

} // namespace segre::oracle
