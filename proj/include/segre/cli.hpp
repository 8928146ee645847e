#pragma once
#include "segre/cohomo.hpp"
#include "segre/error.hpp"
#include "segre/oracle.hpp"
#include "segre/series.hpp"
#include "segre/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace segre::cli {

using nlohmann::json;

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kResource = 4 };

inline int exit_code_for(ErrorCode c) {
  switch (c) {
  case ErrorCode::ParseError:
  case ErrorCode::InvalidArgument: return kUsage;
  case ErrorCode::ResourceCap: return kResource;
  default: return kDomain;
  }
}

// ---------------------------------------------------------------------------
// Input parsing helpers. Every failure names the offending token.

inline long long parse_int(const std::string &s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception &) {
  }
  throw Error(ErrorCode::ParseError, "expected an integer", s);
}

inline std::vector<long long> parse_list(const std::string &s) {
  std::vector<long long> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    try {
      out.push_back(parse_int(cur));
    } catch (const Error &) {
      throw Error(ErrorCode::ParseError, "expected comma-separated integers", s);
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list", s);
  return out;
}

inline std::pair<long long, long long> parse_window(const std::string &s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw Error(ErrorCode::ParseError, "window must look like lo..hi", s);
  long long lo = 0, hi = 0;
  try {
    lo = parse_int(s.substr(0, dots));
    hi = parse_int(s.substr(dots + 2));
  } catch (const Error &) {
    throw Error(ErrorCode::ParseError, "window must look like lo..hi", s);
  }
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "window needs lo <= hi", s);
  return {lo, hi};
}

inline toric::IntMatrix read_matrix(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open matrix file", path);
  return toric::parse_matrix(in, path);
}

inline toric::ToricPresentation read_presentation(const std::string &path) {
  auto m = read_matrix(path);
  try {
    return toric::validate(m);
  } catch (const Error &e) {
    throw Error(e.code(), "in " + path + ": " + e.what(), path);
  }
}

// ---------------------------------------------------------------------------
// JSON rendering.

inline json to_json(const Rational &q) { return to_string(q); }

inline json rationals(const std::vector<Rational> &v) {
  json a = json::array();
  for (const auto &q : v) a.push_back(to_json(q));
  return a;
}

inline json rows_json(const toric::IntMatrix &m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

inline json lattice_json(const toric::LatticeBasis &b) {
  json a = json::array();
  for (const auto &v : b.vectors) {
    json row = json::array();
    for (const auto &x : v) row.push_back(static_cast<long long>(x));
    a.push_back(row);
  }
  return a;
}

inline json series_json(const series::HilbertSeries &h) {
  json num = json::array();
  for (const auto &[e, c] : h.numerator()) num.push_back({to_string(c), e});
  return {{"series", series::format(h)}, {"numerator", num}, {"denom_power", h.denom_power()}};
}

inline json window_json(const series::CoefficientWindow &w) {
  json vals = json::array();
  for (const auto &v : w.values) vals.push_back(to_string(v));
  return {{"lo", w.lo}, {"hi", w.hi}, {"values", vals}};
}

inline json witness_json(const cohomo::Witness &w) {
  return {{"q", w.q},
          {"subset", w.subset},
          {"lo", w.lo.value ? json(*w.lo.value) : json("-inf")},
          {"hi", w.hi}};
}

inline json depth_json(const cohomo::DepthReport &r) {
  json ws = json::array();
  for (const auto &w : r.witnesses) ws.push_back(witness_json(w));
  return {{"dim", r.dim}, {"depth", r.depth}, {"is_cm", r.is_cm}, {"witnesses", ws}};
}

inline json dims_map(const std::map<long long, std::size_t> &m) {
  json o = json::object();
  for (const auto &[k, v] : m) o[std::to_string(k)] = v;
  return o;
}

inline json friendliness_json(const oracle::FriendlinessReport &r) {
  json left = json::array(), right = json::array();
  bool right_known = true;
  for (std::size_t k = 0; k < r.right.size(); ++k) {
    const auto &l = r.left.degrees[k];
    left.push_back({{"degree", l.degree}, {"dim", l.dim}, {"status", oracle::to_string(l.status)}});
    right.push_back({{"degree", l.degree}, {"dim", r.right[k] ? json(*r.right[k]) : json(nullptr)}});
    right_known = right_known && r.right[k].has_value();
  }
  return {{"left", {{"describes", "(R(a)#S(b))^*"}, {"dims", dims_map(r.left.nonzero())},
                    {"degrees", left}, {"exact", r.left.exact}}},
          {"right", {{"describes", "R(a)^*#S(b)^* = R(-a)#S(-b)"},
                     {"dims", dims_map(r.right_nonzero())},
                     {"degrees", right},
                     {"exact", right_known}}},
          {"exact", r.left.exact && right_known},
          {"verdict", oracle::to_string(r.verdict)},
          {"compared_degrees", r.compared},
          {"excluded_degrees", r.excluded},
          {"mismatched_degrees", r.mismatches},
          {"degree_cap", r.degree_cap}};
}

/// Flattens a report into sorted "key: value" lines.
inline void render_text(const json &j, const std::string &prefix, std::ostream &out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json &e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": ";
  if (j.is_string())
    out << j.get<std::string>();
  else
    out << j.dump();
  out << '\n';
}

// ---------------------------------------------------------------------------

struct Globals {
  std::string format = "json";
  std::size_t cap = 0; // 0 = command default
  std::string window;
  bool verbose = false;
};

const std::vector<std::string> kGorensteinAssumption{
    "each factor R_i is a Gorenstein standard graded K-algebra with the stated dimension and "
    "a-invariant"};

inline std::vector<std::string> twist_assumptions(bool anticanonical = false) {
  std::vector<std::string> a{
      "each factor R_i is a Gorenstein standard graded K-algebra of dimension >= 2 with "
      "a-invariant -rho_i",
      "R_1, ..., R_m is a friendly family (duals commute with the Segre product); holds for "
      "toric rings of depth >= 2"};
  if (anticanonical)
    a.push_back("the anticanonical module is identified with #_i R_i(rho_i) via friendliness");
  return a;
}

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout,
               std::ostream &err = std::cerr) {
  CLI::App app{"Segre products of graded algebras: Hilbert series, toric presentations, "
               "depth and Cohen-Macaulay criteria, brute-force duality oracle"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", g.cap, "resource bound (census points, factor count)");
  app.add_option("--window", g.window, "degree window lo..hi");
  app.add_flag("--verbose", g.verbose, "timing on stderr");
  app.set_version_flag("--version", kVersion);

  json report;
  std::vector<std::string> assumptions;
  std::string command;
  json inputs = json::object();
  std::function<void()> action;

  auto point_cap = [&] { return g.cap ? g.cap : toric::kDefaultPointCap; };
  auto factor_cap = [&] { return g.cap ? g.cap : cohomo::kDefaultMaxFactors; };

  // ----- toric ------------------------------------------------------------
  auto *toric_cmd = app.add_subcommand("toric", "toric presentations");
  toric_cmd->require_subcommand(1);
  std::string matrix_path, left_path, right_path, out_path;
  long long census_degree = -1;

  auto *t_validate = toric_cmd->add_subcommand("validate", "check standard grading");
  t_validate->add_option("--matrix,matrix", matrix_path)->required();
  t_validate->callback([&] {
    command = "toric validate";
    action = [&] {
      auto p = read_presentation(matrix_path);
      inputs = {{"matrix", matrix_path}};
      report = {{"standard_graded", true},
                {"rows", p.matrix().rows()},
                {"columns", p.matrix().cols()},
                {"grading", rationals(p.grading())}};
    };
  });

  auto product_cmd = [&](const std::string &name, bool is_segre) {
    auto *c = toric_cmd->add_subcommand(name, is_segre ? "Segre product" : "tensor product");
    c->add_option("--left", left_path)->required();
    c->add_option("--right", right_path)->required();
    c->add_option("--census", census_degree, "also count semigroup points up to this degree");
    c->add_option("--out", out_path, "write the product matrix to this file");
    c->callback([&, name, is_segre] {
      command = "toric " + name;
      action = [&, is_segre] {
        auto p = read_presentation(left_path);
        auto q = read_presentation(right_path);
        inputs = {{"left", left_path}, {"right", right_path}};
        auto prod = is_segre ? toric::segre(p, q) : toric::tensor(p, q);
        auto ker = toric::kernel_lattice(prod);
        report = {{"matrix", rows_json(prod.matrix())},
                  {"rows", prod.matrix().rows()},
                  {"columns", prod.matrix().cols()},
                  {"grading", rationals(prod.grading())},
                  {"kernel", lattice_json(ker)},
                  {"kernel_rank", ker.rank()},
                  {"kernel_saturated", toric::is_saturated(ker, prod.generators())}};
        if (census_degree >= 0) {
          inputs["census"] = census_degree;
          auto c = toric::census(prod, census_degree, point_cap(), false);
          report["counts"] = c.counts;
          if (is_segre) {
            auto cl = toric::census(p, census_degree, point_cap(), false);
            auto cr = toric::census(q, census_degree, point_cap(), false);
            std::vector<std::size_t> pointwise;
            for (std::size_t n = 0; n < cl.counts.size(); ++n)
              pointwise.push_back(cl.counts[n] * cr.counts[n]);
            report["census_factors"] = {{"left", cl.counts}, {"right", cr.counts}};
            report["census_matches_pointwise_product"] = pointwise == c.counts;
          }
        }
        if (!out_path.empty()) {
          std::ofstream f(out_path);
          if (!f) throw Error(ErrorCode::ParseError, "cannot write matrix file", out_path);
          f << toric::format_matrix(prod.matrix());
          report["written"] = out_path;
        }
      };
    });
  };
  product_cmd("segre", true);
  product_cmd("tensor", false);

  auto *t_kernel = toric_cmd->add_subcommand("kernel", "integer kernel lattice");
  t_kernel->add_option("--matrix,matrix", matrix_path)->required();
  t_kernel->callback([&] {
    command = "toric kernel";
    action = [&] {
      auto p = read_presentation(matrix_path);
      inputs = {{"matrix", matrix_path}};
      auto ker = toric::kernel_lattice(p);
      report = {{"kernel", lattice_json(ker)},
                {"rank", ker.rank()},
                {"saturated", toric::is_saturated(ker, p.generators())}};
    };
  });

  auto *t_census = toric_cmd->add_subcommand("census", "semigroup points per degree");
  t_census->add_option("--matrix,matrix", matrix_path)->required();
  t_census->add_option("--degree", census_degree, "largest degree")->required();
  t_census->callback([&] {
    command = "toric census";
    action = [&] {
      auto p = read_presentation(matrix_path);
      inputs = {{"matrix", matrix_path}, {"degree", census_degree}};
      report = {{"counts", toric::census(p, census_degree, point_cap(), false).counts}};
    };
  });

  // ----- hilbert ----------------------------------------------------------
  auto *hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series arithmetic");
  hilbert_cmd->require_subcommand(1);
  std::string series_text, left_series, right_series, int_arg;
  int guard = series::kDefaultGuard;

  auto *h_coeff = hilbert_cmd->add_subcommand("coeff", "coefficient of t^n");
  h_coeff->add_option("--series", series_text)->required();
  h_coeff->add_option("--n", int_arg)->required();
  h_coeff->callback([&] {
    command = "hilbert coeff";
    action = [&] {
      auto h = series::parse(series_text);
      long long n = parse_int(int_arg);
      inputs = {{"series", series::format(h)}, {"n", n}};
      report = {{"coefficient", to_string(series::coeff(h, n))}};
    };
  });

  auto *h_shift = hilbert_cmd->add_subcommand("shift", "twist H(a)");
  h_shift->add_option("--series", series_text)->required();
  h_shift->add_option("--by", int_arg)->required();
  h_shift->callback([&] {
    command = "hilbert shift";
    action = [&] {
      auto h = series::parse(series_text);
      long long a = parse_int(int_arg);
      inputs = {{"series", series::format(h)}, {"by", a}};
      report = series_json(series::shift(h, a));
    };
  });

  auto *h_hadamard = hilbert_cmd->add_subcommand("hadamard", "coefficientwise product");
  h_hadamard->add_option("--left", left_series)->required();
  h_hadamard->add_option("--right", right_series)->required();
  h_hadamard->add_option("--guard", guard, "extra verification terms");
  h_hadamard->callback([&] {
    command = "hilbert hadamard";
    action = [&] {
      auto a = series::parse(left_series), b = series::parse(right_series);
      inputs = {{"left", series::format(a)}, {"right", series::format(b)}, {"guard", guard}};
      auto h = series::hadamard(a, b, guard);
      report = series_json(h);
      if (!g.window.empty()) {
        auto [lo, hi] = parse_window(g.window);
        report["window"] = window_json(series::window(h, lo, hi));
      }
    };
  });

  auto *h_window = hilbert_cmd->add_subcommand("window", "coefficients over --window");
  h_window->add_option("--series", series_text)->required();
  h_window->callback([&] {
    command = "hilbert window";
    action = [&] {
      if (g.window.empty()) throw Error(ErrorCode::InvalidArgument, "--window lo..hi is required");
      auto h = series::parse(series_text);
      auto [lo, hi] = parse_window(g.window);
      inputs = {{"series", series::format(h)}, {"window", g.window}};
      report = window_json(series::window(h, lo, hi));
    };
  });

  // ----- classify ---------------------------------------------------------
  auto *classify_cmd = app.add_subcommand("classify", "depth and Cohen-Macaulay criteria");
  classify_cmd->require_subcommand(1);
  std::string dims_arg, ainv_arg, shifts_arg, rho_arg, a_arg;

  auto *c_depth = classify_cmd->add_subcommand("depth", "depth of #_i R_i(a_i)");
  c_depth->add_option("--dims", dims_arg)->required();
  c_depth->add_option("--ainv", ainv_arg)->required();
  c_depth->add_option("--shifts", shifts_arg)->required();
  c_depth->callback([&] {
    command = "classify depth";
    action = [&] {
      auto dims = parse_list(dims_arg), ainv = parse_list(ainv_arg), sh = parse_list(shifts_arg);
      if (dims.size() != ainv.size() || dims.size() != sh.size())
        throw Error(ErrorCode::InvalidArgument, "--dims, --ainv and --shifts differ in length",
                    dims_arg + " | " + ainv_arg + " | " + shifts_arg);
      inputs = {{"dims", dims}, {"ainv", ainv}, {"shifts", sh}};
      cohomo::TwistedFactorList f;
      for (std::size_t i = 0; i < dims.size(); ++i) f.push_back({{dims[i], ainv[i]}, sh[i]});
      report = depth_json(cohomo::cohomology_support(f, factor_cap()));
      if (dims.size() == 2) {
        auto cf = cohomo::prop_depth_m2(dims[0], dims[1], ainv[0], ainv[1], sh[0], sh[1]);
        report["closed_form"] = {{"depth", cf.depth}, {"is_cm", cf.is_cm}};
      }
      assumptions = kGorensteinAssumption;
    };
  });

  auto *c_twist = classify_cmd->add_subcommand("cm-twist", "is #_i R_i(-a rho_i) Cohen-Macaulay");
  c_twist->add_option("--rho", rho_arg)->required();
  c_twist->add_option("--a", a_arg)->required();
  c_twist->callback([&] {
    command = "classify cm-twist";
    action = [&] {
      auto rhos = parse_list(rho_arg);
      long long a = parse_int(a_arg);
      inputs = {{"rho", rhos}, {"a", a}};
      const bool is_cm = cohomo::cm_uniform_twist(rhos, a);
      std::vector<long long> shifts;
      for (auto r : rhos) shifts.push_back(-a * r);
      report = {{"is_cm", is_cm},
                {"exhaustive", cohomo::cm_uniform_twist_raw(rhos, a, factor_cap())},
                {"shifts", shifts}};
      if (a != 0 && a != 1) report["chain"] = cohomo::cm_chain(rhos, a);
      assumptions = twist_assumptions();
    };
  });

  auto *c_interval = classify_cmd->add_subcommand("interval", "all twists a giving CM modules");
  c_interval->add_option("--rho", rho_arg)->required();
  c_interval->callback([&] {
    command = "classify interval";
    action = [&] {
      auto rhos = parse_list(rho_arg);
      inputs = {{"rho", rhos}};
      auto iv = cohomo::cm_twist_interval(rhos);
      report = {{"kind", cohomo::to_string(iv.kind)},
                {"rho_max_ratio", to_string(cohomo::max_consecutive_ratio(rhos))}};
      if (iv.kind == cohomo::TwistInterval::Kind::OpenInterval) {
        report["lo"] = to_string(iv.lo);
        report["hi"] = to_string(iv.hi);
        report["integer_points"] = iv.integer_points();
      } else {
        report["lo"] = nullptr;
        report["hi"] = nullptr;
        report["integer_points"] = nullptr;
      }
      assumptions = twist_assumptions();
    };
  });

  auto *c_anti = classify_cmd->add_subcommand("anticanonical", "is the anticanonical module CM");
  c_anti->add_option("--rho", rho_arg)->required();
  c_anti->callback([&] {
    command = "classify anticanonical";
    action = [&] {
      auto rhos = parse_list(rho_arg);
      inputs = {{"rho", rhos}};
      const bool is_cm = cohomo::cm_uniform_twist(rhos, -1);
      report = {{"is_cm", is_cm},
                {"chain", cohomo::cm_chain(rhos, -1)},
                {"exhaustive", cohomo::cm_uniform_twist_raw(rhos, -1, factor_cap())},
                {"shifts", rhos}};
      if (rhos.size() == 2) report["pair_criterion"] = cohomo::anticanonical_cm_m2(-rhos[0], -rhos[1]);
      assumptions = twist_assumptions(true);
    };
  });

  auto *c_power = classify_cmd->add_subcommand("power", "is the a-th power of a canonical ideal CM");
  c_power->add_option("--rho", rho_arg)->required();
  c_power->add_option("--a", a_arg)->required();
  c_power->callback([&] {
    command = "classify power";
    action = [&] {
      auto rhos = parse_list(rho_arg);
      long long a = parse_int(a_arg);
      inputs = {{"rho", rhos}, {"a", a}};
      report = {{"is_cm", cohomo::canonical_power_cm(rhos, a)}};
      assumptions = twist_assumptions();
      assumptions.push_back("R_1 (x) ... (x) R_m is a domain, so powers of a canonical ideal are "
                            "the twists #_i R_i(-a rho_i)");
    };
  });

  auto *c_dual = classify_cmd->add_subcommand("dual", "shift vector of the dual module");
  c_dual->add_option("--shifts", shifts_arg)->required();
  c_dual->callback([&] {
    command = "classify dual";
    action = [&] {
      auto sh = parse_list(shifts_arg);
      inputs = {{"shifts", sh}};
      report = {{"shifts", cohomo::dual_shift(sh)}};
      assumptions = {"the factors form a friendly family, so (#_i R_i(a_i))^* = #_i R_i(-a_i)"};
    };
  });

  // ----- oracle -----------------------------------------------------------
  auto *oracle_cmd = app.add_subcommand("oracle", "brute-force graded duality checks");
  oracle_cmd->require_subcommand(1);
  std::string ring1, ring2, toric1, toric2;
  long long shift1 = 0, shift2 = 0;
  long long degree_cap = -1;
  auto *o_friendly = oracle_cmd->add_subcommand("friendly", "compare (R(a)#S(b))^* with R(-a)#S(-b)");
  auto *r1 = o_friendly->add_option("--ring1", ring1, "monomial quotient, e.g. x:3");
  auto *t1 = o_friendly->add_option("--toric1", toric1, "toric matrix file");
  auto *r2 = o_friendly->add_option("--ring2", ring2);
  auto *t2 = o_friendly->add_option("--toric2", toric2);
  r1->excludes(t1);
  r2->excludes(t2);
  o_friendly->add_option("--shift1", shift1);
  o_friendly->add_option("--shift2", shift2);
  o_friendly->add_option("--degree-cap", degree_cap, "truncation degree of the algebras");
  o_friendly->callback([&] {
    command = "oracle friendly";
    action = [&] {
      auto spec = [&](const std::string &ring, const std::string &mat, const char *flag) -> oracle::RingSpec {
        if (!ring.empty()) return oracle::parse_monomial_ring(ring);
        if (!mat.empty()) return read_presentation(mat);
        throw Error(ErrorCode::InvalidArgument, std::string("missing --ring") + flag + " or --toric" + flag);
      };
      auto rs = spec(ring1, toric1, "1"), ss = spec(ring2, toric2, "2");
      auto [lo, hi] = parse_window(g.window.empty() ? "-6..6" : g.window);
      inputs = {{"ring1", ring1.empty() ? json(nullptr) : json(ring1)},
                {"toric1", toric1.empty() ? json(nullptr) : json(toric1)},
                {"ring2", ring2.empty() ? json(nullptr) : json(ring2)},
                {"toric2", toric2.empty() ? json(nullptr) : json(toric2)},
                {"shift1", shift1},
                {"shift2", shift2},
                {"window", std::to_string(lo) + ".." + std::to_string(hi)}};
      auto rep = oracle::friendliness_witness(
          rs, ss, shift1, shift2, lo, hi,
          degree_cap >= 0 ? std::optional<long long>(degree_cap) : std::nullopt, point_cap());
      report = friendliness_json(rep);
      assumptions = {"dimensions are computed over Q"};
      if (rep.verdict != oracle::Verdict::NotFriendlyCertified)
        assumptions.push_back("agreement on a finite degree window is evidence of friendliness, "
                              "not a proof");
      if (!rep.left.exact)
        assumptions.push_back("degrees marked stable are truncated computations that did not "
                              "change when the top degree was dropped");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }

  report["command"] = command;
  report["inputs"] = inputs;
  report["assumptions"] = assumptions;
  report["version"] = kVersion;
  if (g.format == "text")
    render_text(report, "", out);
  else
    out << report.dump(2) << '\n';
  if (g.verbose) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    err << "elapsed_ms: " << ms.count() << '\n';
  }
  return kOk;
}

} // namespace segre::cli
