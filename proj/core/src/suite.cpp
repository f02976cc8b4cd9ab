#include "hypercheck/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hypercheck/errors.hpp"
#include "hypercheck/legendre.hpp"
#include "hypercheck/proofcert.hpp"
#include "hypercheck/quadrature.hpp"
#include "hypercheck/special.hpp"

namespace hypercheck {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// grid construction helpers

GridAxis axis(std::string name, std::vector<double> values) {
  GridAxis ax{{std::move(name)}, {}};
  for (double v : values) ax.tuples.push_back({v});
  return ax;
}

GridAxis zip(std::vector<std::string> names, std::vector<std::vector<double>> tuples) {
  return {std::move(names), std::move(tuples)};
}

std::vector<double> range(double lo, double hi, double step = 1.0) {
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi + 1e-9 * std::abs(step)) break;
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// parameter access and invariants

double get(const ParamPoint& p, const std::string& name) { return p.at(name); }

bool is_count(double v, double cap) { return v >= 0.0 && v <= cap && std::floor(v) == v; }

unsigned count(const ParamPoint& p, const std::string& name) { return static_cast<unsigned>(get(p, name)); }

CertificateId which_of(const ParamPoint& p) { return get(p, "which") == 1.0 ? CertificateId::R1 : CertificateId::R2; }

using Check = std::function<std::optional<std::string>(const ParamPoint&)>;

std::optional<std::string> positive(const ParamPoint& p, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (!(get(p, n) > 0.0)) return std::string(n) + " must be > 0";
  }
  return std::nullopt;
}

std::optional<std::string> above_minus_one(const ParamPoint& p, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (!(get(p, n) > -1.0)) return std::string(n) + " must be > -1";
  }
  return std::nullopt;
}

std::optional<std::string> counts(const ParamPoint& p, std::initializer_list<const char*> names, double cap) {
  for (const char* n : names) {
    if (!is_count(get(p, n), cap)) {
      std::ostringstream msg;
      msg << n << " must be an integer in [0, " << cap << "]";
      return msg.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> first_of(std::initializer_list<std::optional<std::string>> checks) {
  for (const auto& c : checks) {
    if (c) return c;
  }
  return std::nullopt;
}

std::optional<std::string> which_valid(const ParamPoint& p) {
  const double w = get(p, "which");
  if (w != 1.0 && w != 2.0) return std::string("which must be 1 or 2");
  return std::nullopt;
}

std::optional<std::string> appell_valid(const ParamPoint& p) {
  if (auto e = positive(p, {"alpha", "beta", "beta_prime"})) return e;
  if (!(std::abs(get(p, "x")) < 1.0) || !(std::abs(get(p, "y")) < 1.0)) return std::string("|x|, |y| must be < 1");
  return std::nullopt;
}

std::optional<std::string> gen_valid(const ParamPoint& p) {
  if (auto e = appell_valid(p)) return e;
  if (!(get(p, "beta") + get(p, "beta_prime") > get(p, "alpha"))) {
    return std::string("beta + beta_prime must exceed alpha");
  }
  return std::nullopt;
}

bool appell_in_radius(const ParamPoint& p) {
  const double x = get(p, "x"), y = get(p, "y");
  return std::abs((y - x) / (y - 1.0)) <= kHyp2F1MaxAbsZ;
}

bool k_le_n(const ParamPoint& p) { return get(p, "k") <= get(p, "n"); }

bool kl_le_n(const ParamPoint& p) { return k_le_n(p) && get(p, "l") <= get(p, "n"); }

// ---------------------------------------------------------------------------
// composite numeric reports

double rel_gap(double u, double v) {
  return std::abs(u - v) / std::max({std::abs(u), std::abs(v), 1e-300});
}

// lhs vs rhs plus extra values that must match lhs (or rhs) as well; rel_err
// is the largest pairwise gap.
IdentityReport multi_report(std::string name, ParamPoint params, double lhs, double rhs,
                            const std::vector<std::pair<double, double>>& extra, double tol, std::string detail) {
  IdentityReport r = make_report(std::move(name), std::move(params), lhs, rhs, tol);
  for (const auto& [u, v] : extra) {
    const double gap = rel_gap(u, v);
    if (!(gap <= r.rel_err)) {
      r.rel_err = gap;
      r.abs_err = std::abs(u - v);
    }
  }
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tol;
  r.detail = std::move(detail);
  return r;
}

std::string num(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

double quad_reciprocal(double A, double B, double C) {
  return tanh_sinh_integrate(WeightedIntegrand::plain([=](double x) { return 1.0 / ((A * x + B) * x + C); })).value;
}

IdentityReport exact(const std::string& name, const ParamPoint& p, bool pass, std::string detail = {},
                     double lhs = 0.0, double rhs = 0.0) {
  IdentityReport r = make_exact_report(name, p, pass, lhs, rhs);
  r.detail = std::move(detail);
  return r;
}

std::string rational_pair(const ExactRational& u, const ExactRational& v) {
  return hypercheck::to_string(u) + " vs " + hypercheck::to_string(v);
}

// ---------------------------------------------------------------------------
// family table

using Runner = std::function<IdentityReport(const ParamPoint&, double)>;

struct Family {
  std::string name;
  std::string suite;
  std::vector<std::string> params;
  Grid grid;
  Check invalid;
  // Points outside the family's domain shape are dropped, not rejected.
  std::function<bool(const ParamPoint&)> in_domain;
  Runner run;
};

Grid gamma_mixed_grid() {
  return {
      {axis("alpha", {1, 2, 3}), axis("beta", {1, 2, 3}), axis("beta_prime", {1, 2, 3}), axis("m", range(0, 4)),
       axis("n", range(0, 4))},
      {axis("alpha", {0.5, 1.5}), axis("beta", {0.7, 2.2}), axis("beta_prime", {0.9, 1.6, 2.4, 3.1, 4.3}),
       axis("m", {1}), axis("n", {2})},
  };
}

Grid appell_grid() {
  const std::vector<double> xy{-0.8, -0.4, -0.1, 0.0, 0.3};
  return {{zip({"alpha", "beta", "beta_prime"}, {{1, 1, 1}, {1.5, 2, 1}, {2.5, 1, 2}}), axis("x", xy), axis("y", xy)}};
}

Grid quadratic_grid() {
  std::vector<std::vector<double>> abc;
  for (double A : {1.0, 2.5, -0.5, 0.2}) {
    for (const auto& [p, q] : {std::pair{1.0, 2.0}, {0.5, 3.0}, {0.1, 0.2}, {4.0, 7.0}, {-1.5, -2.5}}) {
      abc.push_back({A, A * (p + q), A * p * q});
    }
  }
  return {{zip({"A", "B", "C"}, abc)}};
}

std::vector<Family> build_families() {
  std::vector<Family> f;
  const auto always = [](const ParamPoint&) { return true; };
  const auto none = [](const ParamPoint&) -> std::optional<std::string> { return std::nullopt; };

  // ezz -------------------------------------------------------------------
  f.push_back({"ezz", "ezz", {"a", "b", "n"},
               {{axis("a", {0.3, 1, 2, 5}), axis("b", {0.2, 1, 2}),
                 axis("n", {0, 1, 2, 3, 4, 5, 6, 7, 8, -0.5, 0.5, 2.5})}},
               [](const ParamPoint& p) { return first_of({positive(p, {"a", "b"}), above_minus_one(p, {"n"})}); },
               always,
               [](const ParamPoint& p, double tol) { return verify_ezz({get(p, "a"), get(p, "b"), get(p, "n")}, tol); }});

  // theorem -----------------------------------------------------------------
  f.push_back({"theorem", "theorem", {"a", "b", "k", "n", "s", "l"},
               {{zip({"a", "b"}, {{2, 1}, {0.5, 3}, {1.5, 0.7}, {1, 1}}),
                 zip({"k", "n"}, {{0, 0}, {2.5, -0.5}, {-0.7, 1.3}}),
                 zip({"s", "l"}, {{0, 0}, {-0.5, 1.25}, {0.5, -0.75}, {2, 3}})}},
               [](const ParamPoint& p) { return first_of({positive(p, {"a", "b"}), above_minus_one(p, {"s", "l"})}); },
               always,
               [](const ParamPoint& p, double tol) {
                 return verify_theorem_main(
                     {get(p, "a"), get(p, "b"), get(p, "k"), get(p, "n"), get(p, "s"), get(p, "l")}, tol);
               }});
  f.push_back({"5ezz", "theorem", {"a", "b", "k", "l", "s"},
               {{axis("a", {0.8, 2}), axis("b", {1.3, 1}), axis("k", {0, 1.5}), axis("l", {0, 0.5}),
                 axis("s", {0, 2})}},
               [](const ParamPoint& p) { return first_of({positive(p, {"a", "b"}), above_minus_one(p, {"s", "l"})}); },
               always,
               [](const ParamPoint& p, double tol) {
                 return verify_5ezz({get(p, "a"), get(p, "b"), get(p, "k"), get(p, "l"), get(p, "s")}, tol);
               }});

  // appell ------------------------------------------------------------------
  const auto appell_params = [](const ParamPoint& p) {
    return AppellCaseParams{get(p, "alpha"), get(p, "beta"), get(p, "beta_prime"), get(p, "x"), get(p, "y")};
  };
  const std::vector<std::string> ap{"alpha", "beta", "beta_prime", "x", "y"};
  f.push_back({"appell", "appell", ap, appell_grid(), appell_valid, appell_in_radius,
               [appell_params](const ParamPoint& p, double tol) { return verify_appell_identity(appell_params(p), tol); }});
  f.push_back({"appell_gen_agreement", "appell", ap, appell_grid(), gen_valid, appell_in_radius,
               [appell_params](const ParamPoint& p, double tol) {
                 return verify_appell_gen_agreement(appell_params(p), tol);
               }});

  // gen ---------------------------------------------------------------------
  f.push_back({"gen", "gen", ap, appell_grid(), gen_valid, always,
               [appell_params](const ParamPoint& p, double tol) { return verify_gen_integral(appell_params(p), tol); }});
  f.push_back({"gamma_mixed", "gen", {"alpha", "beta", "beta_prime", "m", "n"}, gamma_mixed_grid(),
               [](const ParamPoint& p) {
                 return first_of({positive(p, {"alpha", "beta", "beta_prime"}), counts(p, {"m", "n"}, 1000)});
               },
               // Gamma(gamma - alpha) needs gamma = beta + beta_prime > alpha.
               [](const ParamPoint& p) { return get(p, "beta") + get(p, "beta_prime") > get(p, "alpha"); },
               [](const ParamPoint& p, double tol) {
                 return verify_gamma_mixed_partial({get(p, "alpha"), get(p, "beta"),
                                                    get(p, "beta") + get(p, "beta_prime"), count(p, "m"),
                                                    count(p, "n")},
                                                   tol);
               }});

  // chv ---------------------------------------------------------------------
  f.push_back({"chv", "chv", {"b", "n", "k"}, {{axis("b", {0.5, 1, 2}), axis("n", range(0, 6)), axis("k", range(0, 6))}},
               [](const ParamPoint& p) { return first_of({positive(p, {"b"}), counts(p, {"n", "k"}, 1000)}); }, k_le_n,
               [](const ParamPoint& p, double tol) { return verify_chv({get(p, "b"), count(p, "n"), count(p, "k")}, tol); }});

  // proofcert ---------------------------------------------------------------
  f.push_back({"invariants", "proofcert", {}, {{}}, none, always,
               [](const ParamPoint& p, double) { return exact("invariants", p, check_invariants_match()); }});
  f.push_back({"telescope", "proofcert", {"which", "mutation"}, {{axis("which", {1, 2}), axis("mutation", {0})}},
               [](const ParamPoint& p) { return first_of({which_valid(p), counts(p, {"mutation"}, 1e6)}); }, always,
               [](const ParamPoint& p, double) {
                 const CertificateId id = which_of(p);
                 RatFunc R = certificate(id).value;
                 const unsigned m = count(p, "mutation");
                 if (m > 0) R = mutate_certificate(R, m - 1);
                 return exact("telescope", p, verify_telescoping_certificate(id, R),
                              m > 0 ? "mutated certificate term " + std::to_string(m - 1) : "built-in certificate");
               }});
  f.push_back({"boundary", "proofcert", {"which"}, {{axis("which", {1, 2})}}, which_valid, always,
               [](const ParamPoint& p, double) {
                 const RatFunc bt = boundary_term(which_of(p));
                 return exact("boundary", p, bt == RatFunc(2), "boundary term " + bt.to_string());
               }});
  f.push_back({"telescope_soundness", "proofcert", {"which", "term"},
               {{axis("which", {1, 2}), axis("term", range(0, 9))}},
               [](const ParamPoint& p) { return first_of({which_valid(p), counts(p, {"term"}, 1e6)}); }, always,
               [](const ParamPoint& p, double) {
                 const CertificateId id = which_of(p);
                 const bool accepted =
                     verify_telescoping_certificate(id, mutate_certificate(certificate(id).value, count(p, "term")));
                 return exact("telescope_soundness", p, !accepted,
                              accepted ? "mutation accepted" : "mutation rejected");
               }});
  f.push_back({"moebius", "proofcert", {"a", "b"}, {{axis("a", {0.25, 0.5, 2, 3, 5}), axis("b", {0.75, 1, 1.5, 4})}},
               [](const ParamPoint& p) -> std::optional<std::string> {
                 if (!std::isfinite(get(p, "a")) || !std::isfinite(get(p, "b"))) return "a, b must be finite";
                 if (get(p, "a") == get(p, "b")) return "requires a != b";
                 if (get(p, "b") == 0.0) return "requires b != 0";
                 return std::nullopt;
               },
               always,
               [](const ParamPoint& p, double) {
                 return exact("moebius", p,
                              verify_moebius_singularities(rational_from_double(get(p, "a")),
                                                           rational_from_double(get(p, "b"))));
               }});
  f.push_back({"quadratic", "proofcert", {"A", "B", "C"}, quadratic_grid(),
               [](const ParamPoint& p) -> std::optional<std::string> {
                 try {
                   quadratic_log_integral(get(p, "A"), get(p, "B"), get(p, "C"));
                 } catch (const std::domain_error& e) {
                   return std::string(e.what());
                 }
                 return std::nullopt;
               },
               always,
               [](const ParamPoint& p, double tol) {
                 const double A = get(p, "A"), B = get(p, "B"), C = get(p, "C");
                 return make_report("quadratic", p, quadratic_log_integral(A, B, C), quad_reciprocal(A, B, C), tol);
               }});
  f.push_back({"genfun", "proofcert", {"a", "b", "t"},
               {{zip({"a", "b"}, {{2, 1}, {0.5, 0.3}, {3, 0.2}}), axis("t", {0, 0.1, -0.1, 0.5, -0.5})}},
               [](const ParamPoint& p) -> std::optional<std::string> {
                 if (auto e = positive(p, {"a", "b"})) return e;
                 const auto [p1, p2] = build_p1_p2();
                 try {
                   for (const auto& q : {p1, p2}) {
                     const auto c = q.coefficients_at(get(p, "a"), get(p, "b"), get(p, "t"));
                     quadratic_reciprocal_integral(c[0], c[1], c[2]);
                   }
                 } catch (const std::domain_error& e) {
                   return std::string(e.what());
                 }
                 return std::nullopt;
               },
               always,
               [](const ParamPoint& p, double tol) {
                 const auto [p1, p2] = build_p1_p2();
                 const auto c1 = p1.coefficients_at(get(p, "a"), get(p, "b"), get(p, "t"));
                 const auto c2 = p2.coefficients_at(get(p, "a"), get(p, "b"), get(p, "t"));
                 const double i1 = quadratic_reciprocal_integral(c1[0], c1[1], c1[2]);
                 const double i2 = quadratic_reciprocal_integral(c2[0], c2[1], c2[2]);
                 const double q1 = quad_reciprocal(c1[0], c1[1], c1[2]);
                 const double q2 = quad_reciprocal(c2[0], c2[1], c2[2]);
                 return multi_report("genfun", p, i1, i2, {{i1, q1}, {i2, q2}, {q1, q2}}, tol,
                                     "quadrature I1=" + num(q1) + " I2=" + num(q2));
               }});
  f.push_back({"ode", "proofcert", {"a", "b", "m"},
               {{zip({"a", "b"}, {{2, 1},
                                  {3, 1},
                                  {0.5, 1.5},
                                  {1, 0.25},
                                  {5, 2},
                                  {0.75, 0.5},
                                  {4, 0.5},
                                  {1.5, 2.5},
                                  {0.25, 3},
                                  {6, 1.25}}),
                 axis("m", range(0, 10))}},
               [](const ParamPoint& p) -> std::optional<std::string> {
                 if (auto e = first_of({positive(p, {"a", "b"}), counts(p, {"m"}, 200)})) return e;
                 if (get(p, "a") == get(p, "b")) return "requires a != b";
                 return std::nullopt;
               },
               always,
               [](const ParamPoint& p, double tol) {
                 const ExactRational a = rational_from_double(get(p, "a"));
                 const ExactRational b = rational_from_double(get(p, "b"));
                 const unsigned m = count(p, "m");
                 const double cm = evaluate(ode_taylor_coeffs(a, b, m).back(), a, b);
                 const auto ezz = verify_ezz({get(p, "a"), get(p, "b"), static_cast<double>(m)}, tol);
                 return multi_report("ode", p, cm, ezz.lhs, {{cm, ezz.rhs}}, tol, "ezz rhs=" + num(ezz.rhs));
               }});

  // legendre ----------------------------------------------------------------
  const auto nk = [](const ParamPoint& p) { return counts(p, {"n", "k"}, 100); };
  const auto nkl = [](const ParamPoint& p) { return counts(p, {"n", "k", "l"}, 200); };
  const Grid tri12{{axis("n", range(0, 12)), axis("k", range(0, 12))}};
  f.push_back({"di_symmetry", "legendre", {"n", "k"}, tri12, nk, k_le_n, [](const ParamPoint& p, double) {
                 return exact("di_symmetry", p, verify_di_symmetry(count(p, "n"), count(p, "k")));
               }});
  f.push_back({"corollary2", "legendre", {"n", "k"}, tri12, nk, k_le_n, [](const ParamPoint& p, double) {
                 return exact("corollary2", p, verify_corollary2(count(p, "n"), count(p, "k")));
               }});
  f.push_back({"corollary3", "legendre", {"n", "k", "l"},
               {{axis("n", range(0, 30)), axis("k", range(0, 30)), axis("l", range(0, 30))}}, nkl, kl_le_n,
               [](const ParamPoint& p, double) {
                 const auto s = corollary3_sides(count(p, "n"), count(p, "k"), count(p, "l"));
                 return exact("corollary3", p, s.lhs == s.rhs, s.lhs.get_str() + " vs " + s.rhs.get_str(),
                              s.lhs.get_d(), s.rhs.get_d());
               }});
  f.push_back({"terminating_3f2", "legendre", {"n", "k", "l"},
               {{axis("n", range(0, 12)), axis("k", range(0, 12)), axis("l", range(0, 12))}}, nkl,
               [](const ParamPoint& p) {
                 return kl_le_n(p) && !terminating_3f2_degenerate(count(p, "n"), count(p, "k"), count(p, "l"));
               },
               [](const ParamPoint& p, double) {
                 const unsigned n = count(p, "n"), k = count(p, "k"), l = count(p, "l");
                 const ExactRational series = terminating_3f2(n, k, l);
                 const ExactRational closed = terminating_3f2_closed_form(n, k, l);
                 return exact("terminating_3f2", p, series == closed, rational_pair(series, closed), series.get_d(),
                              closed.get_d());
               }});
  f.push_back({"corollary4", "legendre", {"n", "k"}, tri12, nk, k_le_n, [](const ParamPoint& p, double) {
                 return exact("corollary4", p, verify_corollary4(count(p, "n"), count(p, "k")));
               }});
  f.push_back({"legendre_eigen", "legendre", {"n"}, {{axis("n", range(0, 12))}},
               [](const ParamPoint& p) { return counts(p, {"n"}, 100); }, always,
               [](const ParamPoint& p, double) { return exact("legendre_eigen", p, verify_legendre_eigen(count(p, "n"))); }});
  f.push_back({"di_corollary2_bridge", "legendre", {"n", "k"}, {{axis("n", range(0, 8)), axis("k", range(0, 8))}}, nk,
               k_le_n, [](const ParamPoint& p, double) {
                 return exact("di_corollary2_bridge", p, verify_di_corollary2_bridge(count(p, "n"), count(p, "k")));
               }});
  return f;
}

const std::vector<Family>& families() {
  static const std::vector<Family> table = build_families();
  return table;
}

const Family& family(const std::string& name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw ConfigError("unknown identity family '" + name + "'");
}

std::string describe(const ParamPoint& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ", ";
    out += k + "=" + num(v);
  }
  return out.empty() ? "(no parameters)" : out;
}

// ---------------------------------------------------------------------------
// config JSON

std::vector<double> parse_values(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(where + ": expected numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (key != "min" && key != "max" && key != "step") throw ConfigError(where + ": unknown range key '" + key + "'");
      if (!val.is_number()) throw ConfigError(where + ": range bounds must be numbers");
    }
    if (!v.contains("min") || !v.contains("max")) throw ConfigError(where + ": range needs min and max");
    const double lo = v["min"].get<double>();
    const double hi = v["max"].get<double>();
    const double step = v.contains("step") ? v["step"].get<double>() : 1.0;
    if (!(step > 0.0) || !(hi >= lo)) throw ConfigError(where + ": range needs step > 0 and max >= min");
    if ((hi - lo) / step > 1e6) throw ConfigError(where + ": range too long");
    return range(lo, hi, step);
  }
  throw ConfigError(where + ": expected a number, a list or {min, max, step}");
}

std::vector<std::string> split_names(const std::string& key) {
  std::vector<std::string> names;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    names.push_back(part);
  }
  return names;
}

GridBlock parse_block(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": grid block must be an object");
  GridBlock block;
  for (const auto& [key, val] : j.items()) {
    const auto names = split_names(key);
    const std::string at = where + "." + key;
    if (names.size() == 1) {
      block.push_back(axis(names[0], parse_values(val, at)));
      continue;
    }
    if (!val.is_array()) throw ConfigError(at + ": zipped parameters need a list of tuples");
    GridAxis ax{names, {}};
    for (const auto& tuple : val) {
      if (!tuple.is_array() || tuple.size() != names.size()) {
        throw ConfigError(at + ": each tuple needs " + std::to_string(names.size()) + " numbers");
      }
      std::vector<double> row;
      for (const auto& e : tuple) {
        if (!e.is_number()) throw ConfigError(at + ": expected numbers");
        row.push_back(e.get<double>());
      }
      ax.tuples.push_back(std::move(row));
    }
    block.push_back(std::move(ax));
  }
  return block;
}

json block_to_json(const GridBlock& block) {
  json j = json::object();
  for (const auto& ax : block) {
    if (ax.names.size() == 1) {
      json values = json::array();
      for (const auto& t : ax.tuples) values.push_back(t[0]);
      j[ax.names[0]] = values;
    } else {
      std::string key;
      for (const auto& n : ax.names) key += (key.empty() ? "" : ",") + n;
      json values = json::array();
      for (const auto& t : ax.tuples) values.push_back(t);
      j[key] = values;
    }
  }
  return j;
}

void check_block_shape(const std::string& fam, const GridBlock& block) {
  const auto& want = family(fam).params;
  std::multiset<std::string> have;
  for (const auto& ax : block) {
    if (ax.names.empty()) throw ConfigError(fam + ": empty grid axis");
    for (const auto& t : ax.tuples) {
      if (t.size() != ax.names.size()) throw ConfigError(fam + ": tuple width does not match its parameter names");
      for (double v : t) {
        if (!std::isfinite(v)) throw ConfigError(fam + ": grid values must be finite");
      }
    }
    have.insert(ax.names.begin(), ax.names.end());
  }
  for (const auto& n : have) {
    if (std::find(want.begin(), want.end(), n) == want.end()) {
      throw ConfigError(fam + ": unknown parameter '" + n + "'");
    }
    if (have.count(n) > 1) throw ConfigError(fam + ": parameter '" + n + "' given twice in one block");
  }
  for (const auto& n : want) {
    if (have.count(n) == 0) throw ConfigError(fam + ": grid block is missing parameter '" + n + "'");
  }
}

void expand_block(const GridBlock& block, std::size_t axis_index, ParamPoint& current, std::vector<ParamPoint>& out) {
  if (axis_index == block.size()) {
    out.push_back(current);
    return;
  }
  const GridAxis& ax = block[axis_index];
  for (const auto& t : ax.tuples) {
    for (std::size_t i = 0; i < ax.names.size(); ++i) current[ax.names[i]] = t[i];
    expand_block(block, axis_index + 1, current, out);
  }
}

std::vector<double> key_of(const std::vector<std::string>& params, const ParamPoint& p) {
  std::vector<double> key;
  key.reserve(params.size());
  for (const auto& n : params) key.push_back(p.at(n));
  return key;
}

struct Job {
  const std::string* family;
  const ParamPoint* point;
};

void tally(Summary& s, CaseStatus status) {
  switch (status) {
    case CaseStatus::pass:
      ++s.pass;
      break;
    case CaseStatus::fail:
      ++s.fail;
      break;
    case CaseStatus::error:
      ++s.error;
      break;
  }
}

}  // namespace

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::markdown:
      return "markdown";
  }
  return "json";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  throw ConfigError("unknown output format '" + std::string(name) + "' (json, csv, markdown)");
}

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::error:
      return "error";
  }
  return "error";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ezz", "theorem", "appell", "gen", "chv", "proofcert", "legendre"};
  return names;
}

const std::vector<std::string>& suite_families(const std::string& suite) {
  static const std::map<std::string, std::vector<std::string>> table = [] {
    std::map<std::string, std::vector<std::string>> t;
    for (const auto& f : families()) t[f.suite].push_back(f.name);
    return t;
  }();
  const auto it = table.find(suite);
  if (it == table.end()) throw ConfigError("unknown suite '" + suite + "'");
  return it->second;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& f : families()) n.push_back(f.name);
    return n;
  }();
  return names;
}

bool is_family(const std::string& name) {
  const auto& n = family_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

const std::vector<std::string>& family_params(const std::string& name) { return family(name).params; }

const Grid& default_grid(const std::string& name) { return family(name).grid; }

SuiteConfig default_grids() {
  SuiteConfig c;
  c.suites = suite_names();
  for (const auto& f : families()) c.grids[f.name] = f.grid;
  return c;
}

Grid pin_parameters(const std::string& fam, const Grid& grid, const ParamPoint& overrides) {
  const auto& params = family(fam).params;
  for (const auto& [name, value] : overrides) {
    if (std::find(params.begin(), params.end(), name) == params.end()) {
      throw ConfigError(fam + " does not take parameter '" + name + "'");
    }
  }
  Grid out = grid;
  for (auto& block : out) {
    for (auto& ax : block) {
      for (std::size_t i = 0; i < ax.names.size(); ++i) {
        const auto it = overrides.find(ax.names[i]);
        if (it == overrides.end()) continue;
        for (auto& t : ax.tuples) t[i] = it->second;
      }
      std::vector<std::vector<double>> unique;
      for (const auto& t : ax.tuples) {
        if (std::find(unique.begin(), unique.end(), t) == unique.end()) unique.push_back(t);
      }
      ax.tuples = std::move(unique);
    }
  }
  return out;
}

std::vector<ParamPoint> expand_grid(const std::string& fam, const Grid& grid) {
  const Family& f = family(fam);
  std::vector<ParamPoint> raw;
  for (const auto& block : grid) {
    check_block_shape(fam, block);
    ParamPoint current;
    expand_block(block, 0, current, raw);
  }
  std::vector<ParamPoint> kept;
  for (auto& p : raw) {
    if (auto why = f.invalid(p)) throw ConfigError(fam + " at " + describe(p) + ": " + *why);
    if (f.in_domain(p)) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(),
            [&](const ParamPoint& l, const ParamPoint& r) { return key_of(f.params, l) < key_of(f.params, r); });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

void validate_config(const SuiteConfig& config) { (void)plan_run(config); }

std::vector<SuitePlan> plan_run(const SuiteConfig& config) {
  if (!(config.tolerance >= kMinSuiteTolerance && config.tolerance <= kMaxSuiteTolerance)) {
    throw ConfigError("tolerance must lie in [1e-14, 1e-2]");
  }
  if (config.parallelism < 1 || config.parallelism > kMaxParallelism) {
    throw ConfigError("parallelism must lie in [1, " + std::to_string(kMaxParallelism) + "]");
  }
  if (config.suites.empty()) throw ConfigError("no suites requested");
  std::map<std::string, std::vector<ParamPoint>> expanded;
  for (const auto& [fam, grid] : config.grids) {
    if (!is_family(fam)) throw ConfigError("grids: unknown identity family '" + fam + "'");
    expanded[fam] = expand_grid(fam, grid);
  }
  std::vector<SuitePlan> plan;
  std::set<std::string> seen;
  for (const auto& suite : config.suites) {
    if (!seen.insert(suite).second) throw ConfigError("suite '" + suite + "' listed twice");
    SuitePlan sp{suite, {}};
    for (const auto& fam : suite_families(suite)) {
      auto it = expanded.find(fam);
      sp.families.push_back({fam, it != expanded.end() ? it->second : expand_grid(fam, default_grid(fam))});
    }
    plan.push_back(std::move(sp));
  }
  return plan;
}

CaseResult run_case(const std::string& fam, const ParamPoint& point, double tol) {
  const Family& f = family(fam);
  CaseResult out;
  try {
    out.report = f.run(point, tol);
    for (const auto& [k, v] : point) out.report.params[k] = v;
    out.status = out.report.pass ? CaseStatus::pass : CaseStatus::fail;
  } catch (const std::exception& e) {
    out.report = IdentityReport{};
    out.report.identity_name = fam;
    out.report.params = point;
    out.report.tol = tol;
    out.report.pass = false;
    out.status = CaseStatus::error;
    out.error = e.what();
  }
  return out;
}

RunResult run_plan(const std::vector<SuitePlan>& plan, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.combined = plan.size() > 1;
  for (const auto& sp : plan) {
    const auto suite_start = std::chrono::steady_clock::now();
    std::vector<Job> jobs;
    for (const auto& fp : sp.families) {
      for (const auto& p : fp.points) jobs.push_back({&fp.family, &p});
    }
    std::vector<CaseResult> cases(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        cases[i] = run_case(*jobs[i].family, *jobs[i].point, config.tolerance);
      }
    };
    const unsigned threads = std::min<std::size_t>(config.parallelism, std::max<std::size_t>(jobs.size(), 1));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    SuiteReport report;
    report.suite = sp.suite;
    report.tolerance = config.tolerance;
    for (const auto& fp : sp.families) report.families.push_back(fp.family);
    report.cases = std::move(cases);
    for (const auto& c : report.cases) {
      tally(report.summary, c.status);
      tally(result.summary, c.status);
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - suite_start).count();
    result.suites.push_back(std::move(report));
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RunResult run_suites(const SuiteConfig& config) { return run_plan(plan_run(config), config); }

int exit_code(const RunResult& result) { return result.summary.fail == 0 && result.summary.error == 0 ? 0 : 1; }

SuiteConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SuiteConfig c;
  c.suites = suite_names();
  for (const auto& [key, val] : j.items()) {
    if (key == "suites") {
      if (!val.is_array()) throw ConfigError("suites must be a list of names");
      c.suites.clear();
      for (const auto& s : val) {
        if (!s.is_string()) throw ConfigError("suites must be a list of names");
        const auto name = s.get<std::string>();
        if (name == "all") {
          for (const auto& n : suite_names()) c.suites.push_back(n);
        } else {
          c.suites.push_back(name);
        }
      }
    } else if (key == "grids") {
      if (!val.is_object()) throw ConfigError("grids must map family names to grid blocks");
      for (const auto& [fam, g] : val.items()) {
        Grid grid;
        if (g.is_array()) {
          for (std::size_t i = 0; i < g.size(); ++i) {
            grid.push_back(parse_block(g[i], "grids." + fam + "[" + std::to_string(i) + "]"));
          }
        } else {
          grid.push_back(parse_block(g, "grids." + fam));
        }
        c.grids[fam] = std::move(grid);
      }
    } else if (key == "tolerance") {
      if (!val.is_number()) throw ConfigError("tolerance must be a number");
      c.tolerance = val.get<double>();
    } else if (key == "parallelism") {
      if (!val.is_number_integer() || val.get<long long>() < 1) {
        throw ConfigError("parallelism must be a positive integer");
      }
      c.parallelism = static_cast<unsigned>(std::min<long long>(val.get<long long>(), kMaxParallelism + 1));
    } else if (key == "output_format") {
      if (!val.is_string()) throw ConfigError("output_format must be a string");
      c.output_format = parse_format(val.get<std::string>());
    } else if (key == "output_path") {
      if (val.is_null()) {
        c.output_path.reset();
      } else if (val.is_string()) {
        c.output_path = val.get<std::string>();
      } else {
        throw ConfigError("output_path must be a string or null");
      }
    } else {
      throw ConfigError("unknown config field '" + key + "'");
    }
  }
  validate_config(c);
  return c;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const SuiteConfig& config) {
  json j;
  j["suites"] = config.suites;
  json grids = json::object();
  for (const auto& [fam, grid] : config.grids) {
    json blocks = json::array();
    for (const auto& b : grid) blocks.push_back(block_to_json(b));
    grids[fam] = blocks;
  }
  j["grids"] = grids;
  j["tolerance"] = config.tolerance;
  j["parallelism"] = config.parallelism;
  j["output_format"] = format_name(config.output_format);
  j["output_path"] = config.output_path ? json(*config.output_path) : json(nullptr);
  return j.dump(2) + "\n";
}

void save_config(const SuiteConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file '" + path + "'");
  out << config_to_json(config);
}

}  // namespace hypercheck
