// glhopf: exact computations and verification suites for the Hopf algebra of
// invariant functions on gl_n(F_q).
//
// Exit status: 0 success, 1 a verification failed, 2 bad arguments or input,
// 3 the request exceeds the enumeration budget.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glhopf/duality.hpp"
#include "glhopf/hopf.hpp"
#include "glhopf/io.hpp"
#include "glhopf/psh.hpp"
#include "glhopf/suites.hpp"

using namespace glhopf;

namespace {

struct Common {
  std::string q = "2";
  std::string format = "text";
  std::string backend = kernels::backend_name(kernels::default_backend());
  std::optional<std::string> output;
  std::optional<std::string> cache_dir;
  std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--q", c.q, "field: q, p^k or p^k:c0,c1,...,1")->capture_default_str();
  app->add_option("--format", c.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app->add_option("--output", c.output, "also write the JSON result to this file");
  app->add_option("--cache-dir", c.cache_dir, "directory for cached tables and matrices");
  app->add_option("--budget", c.budget,
                  "largest matrix space q^(n^2) that may be enumerated; raising it acknowledges the cost");
  app->add_option("--backend", c.backend, "kernel backend")
      ->check(CLI::IsMember({"serial", "omp"}))
      ->capture_default_str();
}

Algebra make_algebra(const Common& c) {
  AlgebraOptions opts;
  if (c.budget) opts.budget = *c.budget;
  opts.backend = c.backend == "serial" ? kernels::Backend::serial : kernels::Backend::omp;
  if (c.cache_dir) opts.cache_dir = *c.cache_dir;
  return Algebra(FqContext::parse(c.q), opts);
}

void check_degree(const Algebra& alg, int n) {
  if (n < 0) throw ConfigError("degree must be nonnegative");
  if (n > alg.max_degree())
    throw ResourceError("degree " + std::to_string(n) + " over F_" + std::to_string(alg.q()) +
                            " exceeds the budget (pass --budget to raise it)",
                        matrix_space_size(alg.q(), n));
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.output) write_json_file(*c.output, j);
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string value_text(const Cyclotomic& v) { return v.is_rational() ? to_string(v.as_rational()) : v.to_string(); }

std::string function_text(const InvariantFunction& f) {
  std::ostringstream os;
  os << "degree " << f.degree() << " over F_" << f.table().field().q() << ", " << f.size() << " orbits\n";
  for (std::size_t i = 0; i < f.size(); ++i) os << "  " << f.table()[i].label.to_string() << "  " << value_text(f[i])
                                                << "\n";
  return os.str();
}

std::string tensor_text(Algebra& alg, const TensorFunction& t) {
  std::ostringstream os;
  const auto deg = t.degrees();
  os << "degrees";
  for (int d : deg) os << " " << d;
  os << ", " << t.size() << " tuples\n";
  for (std::size_t i = 0; i < t.size(); ++i) os << "  " << tuple_description(alg, deg, i) << "  " << value_text(t[i])
                                                << "\n";
  return os.str();
}

std::string entries_text(const std::vector<SuiteEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.passed ? "PASS " : "FAIL ") << e.suite << ": " << e.name << " (" << e.checks << " checks)\n";
    if (!e.passed) os << "     witness: " << e.witness << "\n";
  }
  return os.str();
}

Json entries_json(const Algebra& alg, int max_n, const std::vector<std::string>& suites,
                  const std::vector<SuiteEntry>& entries) {
  bool ok = true;
  Json reports = Json::array();
  for (const auto& e : entries) {
    ok = ok && e.passed;
    Json r = e.report;
    r["suite"] = e.suite;
    reports.push_back(std::move(r));
  }
  return Json{{"q", alg.field().to_string()}, {"max_n", max_n}, {"suites", suites},
              {"status", ok ? "pass" : "fail"}, {"reports", std::move(reports)}};
}

int finish(const std::vector<SuiteEntry>& entries) {
  for (const auto& e : entries)
    if (!e.passed) return 1;
  return 0;
}

int run_suites(const Common& c, const std::vector<std::string>& requested, std::optional<int> max_n_opt) {
  Algebra alg = make_algebra(c);
  const int max_n = max_n_opt.value_or(alg.max_degree());
  check_degree(alg, max_n);
  const auto suites = resolve_suites(requested);
  std::vector<SuiteEntry> entries;
  for (const auto& s : suites) {
    if (s == "witness") check_degree(alg, 2);
    auto part = run_suite(alg, s, max_n);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  emit(c, entries_json(alg, max_n, suites, entries), entries_text(entries));
  return finish(entries);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Harish-Chandra calculus on invariant functions of gl_n(F_q)"};
  app.require_subcommand(1);
  int status = 0;

  // orbits
  Common orbits_c;
  int orbits_n = 2;
  auto* orbits = app.add_subcommand("orbits", "list the adjoint orbits of gl_n(F_q)");
  add_common(orbits, orbits_c);
  orbits->add_option("--n", orbits_n, "matrix size")->capture_default_str();
  orbits->callback([&] {
    Algebra alg = make_algebra(orbits_c);
    check_degree(alg, orbits_n);
    const auto& t = *alg.table(orbits_n);
    std::ostringstream os;
    os << t.size() << " orbits of gl_" << orbits_n << "(F_" << alg.q() << "), |GL| = " << t.group_order() << "\n";
    for (const auto& e : t.entries())
      os << "  " << e.label.to_string() << "  size " << e.size << "  rep " << e.representative.to_string() << "\n";
    emit(orbits_c, to_json(t), os.str());
  });

  // induce
  Common induce_c;
  std::string induce_comp, induce_in;
  auto* induce = app.add_subcommand("induce", "Harish-Chandra induction of a tensor function");
  add_common(induce, induce_c);
  induce->add_option("--composition", induce_comp, "Levi shape, e.g. 1+2")->required();
  induce->add_option("--input", induce_in, "tensor function JSON")->required();
  induce->callback([&] {
    Algebra alg = make_algebra(induce_c);
    const auto c = Composition::parse(induce_comp);
    check_degree(alg, c.size());
    const auto t = tensor_function_from_json(alg, read_json_file(induce_in));
    const auto f = hc_induce(alg, t, c);
    emit(induce_c, to_json(f), function_text(f));
  });

  // restrict
  Common restrict_c;
  std::string restrict_comp, restrict_in;
  auto* restrict_cmd = app.add_subcommand("restrict", "Harish-Chandra restriction of an invariant function");
  add_common(restrict_cmd, restrict_c);
  restrict_cmd->add_option("--composition", restrict_comp, "Levi shape, e.g. 1+2")->required();
  restrict_cmd->add_option("--input", restrict_in, "invariant function JSON")->required();
  restrict_cmd->callback([&] {
    Algebra alg = make_algebra(restrict_c);
    const auto c = Composition::parse(restrict_comp);
    check_degree(alg, c.size());
    const auto f = invariant_function_from_json(alg, read_json_file(restrict_in));
    const auto t = hc_restrict(alg, f, c);
    emit(restrict_c, to_json(t), tensor_text(alg, t));
  });

  // dual
  Common dual_c;
  int dual_n = 2;
  std::optional<std::string> dual_in;
  auto* dual_cmd = app.add_subcommand("dual", "the duality operator, or its value on a function");
  add_common(dual_cmd, dual_c);
  dual_cmd->add_option("--n", dual_n, "degree (ignored with --input)")->capture_default_str();
  dual_cmd->add_option("--input", dual_in, "invariant function JSON");
  dual_cmd->callback([&] {
    Algebra alg = make_algebra(dual_c);
    if (dual_in) {
      const auto f = invariant_function_from_json(alg, read_json_file(*dual_in));
      check_degree(alg, f.degree());
      const auto g = dual(alg, f);
      emit(dual_c, to_json(g), function_text(g));
      return;
    }
    check_degree(alg, dual_n);
    const auto d = duality_operator(alg, dual_n);
    std::ostringstream os;
    os << "D_" << dual_n << " over F_" << alg.q() << " (" << d.terms << " terms), rows and columns by orbit\n";
    const auto& t = *alg.table(dual_n);
    for (std::size_t i = 0; i < d.matrix.rows(); ++i) {
      os << "  " << t[i].label.to_string() << " :";
      for (std::size_t j = 0; j < d.matrix.cols(); ++j) os << " " << to_string(d.matrix(i, j));
      os << "\n";
    }
    emit(dual_c, to_json(d), os.str());
  });

  // steinberg
  Common st_c;
  int st_n = 2;
  auto* st = app.add_subcommand("steinberg", "St_n = D_n(1) and its number of Fourier constituents");
  add_common(st, st_c);
  st->add_option("--n", st_n, "degree")->capture_default_str();
  st->callback([&] {
    Algebra alg = make_algebra(st_c);
    check_degree(alg, st_n);
    const auto f = steinberg(alg, st_n);
    const std::size_t k = steinberg_constituents(alg, st_n);
    Json j = to_json(f);
    j["constituents"] = k;
    emit(st_c, j, function_text(f) + "constituents: " + std::to_string(k) + "\n");
  });

  // antipode
  Common anti_c;
  std::string anti_in;
  auto* anti = app.add_subcommand("antipode", "apply the antipode to a graded element");
  add_common(anti, anti_c);
  anti->add_option("--input", anti_in, "graded element or invariant function JSON")->required();
  anti->callback([&] {
    Algebra alg = make_algebra(anti_c);
    const auto x = graded_element_from_json(alg, read_json_file(anti_in));
    for (const auto& [n, f] : x.components()) check_degree(alg, n);
    const auto y = antipode(alg, x);
    std::string text;
    for (const auto& [n, f] : y.components()) text += function_text(f);
    if (y.is_zero()) text = "0\n";
    emit(anti_c, to_json(y, alg.field()), text);
  });

  // primitives
  Common prim_c;
  int prim_n = 2;
  auto* prim = app.add_subcommand("primitives", "basis of the primitive subspace in degree n");
  add_common(prim, prim_c);
  prim->add_option("--n", prim_n, "degree")->capture_default_str();
  prim->callback([&] {
    Algebra alg = make_algebra(prim_c);
    check_degree(alg, prim_n);
    const auto b = primitive_subspace(alg, prim_n);
    Json basis = Json::array();
    std::string text = "dimension " + std::to_string(b.dimension()) + "\n";
    for (const auto& f : b.functions) {
      basis.push_back(to_json(f));
      text += function_text(f);
    }
    emit(prim_c, Json{{"n", prim_n}, {"q", alg.field().to_string()}, {"dimension", b.dimension()}, {"basis", basis}},
         text);
  });

  // witness
  Common wit_c;
  auto* wit = app.add_subcommand("witness", "the structure constant showing no rational form exists");
  add_common(wit, wit_c);
  wit->callback([&] {
    Algebra alg = make_algebra(wit_c);
    check_degree(alg, 2);
    const auto r = verify_nondescending(alg);
    const auto& v = *r.value;
    std::ostringstream os;
    os << "value = " << v.to_string() << "\n";
    os << "value^2 = " << to_string(v.square()) << "\n";
    os << "verdict: " << (v.is_rational() ? "rational" : "irrational") << "\n";
    if (!r.passed) os << "FAIL " << r.witness << "\n";
    Json j = to_json(r);
    j["verdict"] = v.is_rational() ? "rational" : "irrational";
    emit(wit_c, j, os.str());
    status = r.passed ? 0 : 1;
  });

  // verify
  Common ver_c;
  std::vector<std::string> ver_suites{"all"};
  std::optional<int> ver_max_n;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_common(ver, ver_c);
  ver->add_option("--suites", ver_suites, "suites to run, or all")->delimiter(',')->capture_default_str();
  ver->add_option("--max-n", ver_max_n, "largest degree (default: the budget limit)");
  ver->require_subcommand(0, 1);

  Common mk_c;
  int mk_n1 = 1, mk_n2 = 1;
  std::optional<int> mk_s, mk_t;
  bool mk_all = false;
  std::vector<std::string> mk_in;
  auto* mk = ver->add_subcommand("mackey", "the Mackey formula for *R_{s,t} R_{n1,n2}");
  add_common(mk, mk_c);
  mk->add_option("--n1", mk_n1)->capture_default_str();
  mk->add_option("--n2", mk_n2)->capture_default_str();
  mk->add_option("--s", mk_s, "default: every split");
  mk->add_option("--t", mk_t);
  mk->add_flag("--all-indicators", mk_all, "check the operators on every indicator tensor (the default)");
  mk->add_option("--input", mk_in, "two invariant function JSON files r1 r2 (instead of all indicators)")
      ->expected(2);
  mk->callback([&] {
    Algebra alg = make_algebra(mk_c);
    const int n = mk_n1 + mk_n2;
    check_degree(alg, n);
    if (mk_s.has_value() != mk_t.has_value()) throw ConfigError("--s and --t go together");
    if (mk_all && !mk_in.empty()) throw ConfigError("--all-indicators and --input exclude each other");
    std::vector<std::pair<int, int>> splits;
    if (mk_s)
      splits.emplace_back(*mk_s, *mk_t);
    else
      for (int s = 0; s <= n; ++s) splits.emplace_back(s, n - s);
    std::vector<SuiteEntry> entries;
    for (const auto& [s, t] : splits) {
      if (mk_in.empty()) {
        entries.push_back(suite_entry("mackey", verify_mackey(alg, mk_n1, mk_n2, s, t)));
      } else {
        const auto r1 = invariant_function_from_json(alg, read_json_file(mk_in[0]));
        const auto r2 = invariant_function_from_json(alg, read_json_file(mk_in[1]));
        if (r1.degree() != mk_n1 || r2.degree() != mk_n2) throw ConfigError("input degrees differ from --n1/--n2");
        entries.push_back(suite_entry("mackey", verify_mackey(alg, s, t, r1, r2)));
      }
    }
    emit(mk_c, entries_json(alg, n, {"mackey"}, entries), entries_text(entries));
    status = finish(entries);
  });

  struct Named {
    const char* name;
    const char* help;
    Common c;
    std::optional<int> max_n;
  };
  std::vector<Named> named{{"bialgebra", "bialgebra identity and Hopf axioms", {}, {}},
                           {"duality", "antipode equals signed duality, involutive and isometric", {}, {}},
                           {"psh", "positivity and self-adjointness in the character basis", {}, {}}};
  for (auto& nd : named) {
    auto* sc = ver->add_subcommand(nd.name, nd.help);
    add_common(sc, nd.c);
    sc->add_option("--max-n", nd.max_n, "largest degree (default: the budget limit)");
    sc->callback([&nd, &status] { status = run_suites(nd.c, {nd.name}, nd.max_n); });
  }

  ver->callback([&] {
    if (ver->get_subcommands().empty()) status = run_suites(ver_c, ver_suites, ver_max_n);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
