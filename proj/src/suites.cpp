#include "glhopf/suites.hpp"

#include <algorithm>

#include "glhopf/duality.hpp"
#include "glhopf/hopf.hpp"
#include "glhopf/psh.hpp"

namespace glhopf {

SuiteEntry suite_entry(std::string suite, const HCReport& r) {
  return {std::move(suite), r.identity, r.passed, r.checks, r.witness, to_json(r)};
}

SuiteEntry suite_entry(std::string suite, const PSHReport& r) {
  return {std::move(suite), r.axiom, r.passed, r.checks, r.witness, to_json(r)};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orbits",     "hc",       "mackey",           "bialgebra", "antipode",
                                              "duality",    "characterization", "steinberg", "psh",  "witness"};
  return names;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  const auto& names = suite_names();
  std::vector<bool> on(names.size(), false);
  for (const auto& s : requested) {
    if (s == "all") {
      std::fill(on.begin(), on.end(), true);
      continue;
    }
    const auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw ConfigError("unknown suite '" + s + "'");
    on[it - names.begin()] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (on[i]) out.push_back(names[i]);
  return out;
}

HCReport verify_orbit_oracle(Algebra& alg, int n) {
  HCReport r;
  r.identity = "orbit oracle";
  r.param("q", alg.q()).param("n", n);
  const OrbitTable& t = *alg.table(n);
  const auto& dense = t.dense_lookup();
  const std::uint64_t space = matrix_space_size(alg.q(), n);
  if (dense.size() != space) throw ResourceError("orbit oracle for n = " + std::to_string(n), space);
  const auto bf = orbit_table_bruteforce(alg.field(), n, alg.options().budget);

  r.record(bf.class_sizes.size() == t.size(), "brute force finds " + std::to_string(bf.class_sizes.size()) +
                                                  " classes, enumeration " + std::to_string(t.size()));
  std::vector<std::int64_t> orbit_of_class(bf.class_sizes.size(), -1), class_of_orbit(t.size(), -1);
  for (std::uint64_t code = 0; code < space; ++code) {
    const auto c = static_cast<std::size_t>(bf.class_of[code]);
    const std::size_t o = dense[code];
    const bool ok = (orbit_of_class[c] < 0 || orbit_of_class[c] == static_cast<std::int64_t>(o)) &&
                    (class_of_orbit[o] < 0 || class_of_orbit[o] == static_cast<std::int64_t>(c));
    orbit_of_class[c] = static_cast<std::int64_t>(o);
    class_of_orbit[o] = static_cast<std::int64_t>(c);
    r.record(ok, "matrix " + Matrix::from_code(alg.field(), n, code).to_string() + " splits orbit " +
                     t[o].label.to_string());
  }

  std::uint64_t total = 0;
  for (std::size_t o = 0; o < t.size(); ++o) {
    const auto& e = t[o];
    total += e.size;
    r.record(t.index_of_code(e.representative.code()) == o, "representative of " + e.label.to_string() +
                                                                 " lies in another orbit");
    const std::int64_t c = class_of_orbit[o];
    r.record(c >= 0 && bf.class_sizes[static_cast<std::size_t>(c)] == e.size,
             "orbit " + e.label.to_string() + " has size " + std::to_string(e.size) + " but its class differs");
  }
  r.record(total == space, "orbit sizes sum to " + std::to_string(total) + ", expected " + std::to_string(space));
  r.record(t.group_order() == gl_order_formula(alg.q(), n), "group order " + std::to_string(t.group_order()));
  const std::size_t nil = nilpotent_orbit_count(t);
  r.record(nil == integer_partitions(n).size(), std::to_string(nil) + " nilpotent orbits");
  return r;
}

HCReport verify_constant_norms(Algebra& alg) {
  HCReport r;
  r.identity = "norms of constant functions";
  r.param("q", alg.q());
  const Rational q = alg.q();
  const Rational expected[] = {q / (q - 1), q * q * q * q / (q * (q - 1) * (q - 1) * (q + 1))};
  for (int n = 1; n <= 2; ++n) {
    const auto one = InvariantFunction::constant_one(alg.table(n));
    const Rational v = rational_inner_product(one, one);
    r.record(v == expected[n - 1], "(1, 1) in degree " + std::to_string(n) + " = " + to_string(v) + ", expected " +
                                       to_string(expected[n - 1]));
  }
  return r;
}

namespace {

HCReport summary(Algebra& alg, std::string identity, int max_n) {
  HCReport r;
  r.identity = std::move(identity);
  r.param("q", alg.q()).param("max_n", max_n);
  return r;
}

void absorb_tagged(HCReport& into, HCReport sub, const std::string& tag) {
  sub.identity += " " + tag;
  into.absorb(sub);
}

std::vector<SuiteEntry> orbit_suite(Algebra& alg, int max_n) {
  std::vector<SuiteEntry> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(suite_entry("orbits", verify_orbit_oracle(alg, n)));
  return out;
}

std::vector<SuiteEntry> hc_suite(Algebra& alg, int max_n) {
  auto adj = summary(alg, "adjunction", max_n);
  auto indep = summary(alg, "parabolic independence", max_n);
  auto trans = summary(alg, "transitivity", max_n);
  for (int n = 2; n <= max_n; ++n) {
    const auto all = Composition::all_of(n);
    for (const auto& c : all) {
      if (c.length() < 2) continue;
      absorb_tagged(adj, verify_adjunction(alg, c), c.to_string());
      absorb_tagged(indep, verify_parabolic_independence(alg, c), c.to_string());
      for (const auto& coarse : all)
        if (coarse != c && coarse.is_refined_by(c))
          absorb_tagged(trans, verify_transitivity(alg, coarse, c), coarse.to_string() + " > " + c.to_string());
    }
  }
  return {suite_entry("hc", adj), suite_entry("hc", indep), suite_entry("hc", trans)};
}

std::vector<SuiteEntry> mackey_suite(Algebra& alg, int max_n) {
  auto r = summary(alg, "mackey", max_n);
  for (int n = 1; n <= max_n; ++n)
    for (int n1 = 0; n1 <= n; ++n1)
      for (int s = 0; s <= n; ++s)
        absorb_tagged(r, verify_mackey(alg, n1, n - n1, s, n - s),
                      std::to_string(n1) + "+" + std::to_string(n - n1) + " -> " + std::to_string(s) + "+" +
                          std::to_string(n - s));
  return {suite_entry("mackey", r)};
}

std::vector<SuiteEntry> bialgebra_suite(Algebra& alg, int max_n) {
  auto r = summary(alg, "bialgebra", max_n);
  for (int n1 = 0; n1 <= max_n; ++n1)
    for (int n2 = 0; n1 + n2 <= max_n; ++n2)
      absorb_tagged(r, verify_bialgebra(alg, n1, n2), std::to_string(n1) + "+" + std::to_string(n2));
  std::vector<SuiteEntry> out{suite_entry("bialgebra", r)};
  for (const auto& h : verify_hopf_axioms(alg, max_n)) out.push_back(suite_entry("bialgebra", h));
  return out;
}

std::vector<SuiteEntry> antipode_suite(Algebra& alg, int max_n) {
  std::vector<SuiteEntry> out;
  for (const auto& h : verify_antipode_properties(alg, max_n)) out.push_back(suite_entry("antipode", h));
  return out;
}

std::vector<SuiteEntry> duality_suite(Algebra& alg, int max_n) {
  std::vector<SuiteEntry> out{suite_entry("duality", verify_antipode_is_duality(alg, max_n))};
  auto kaw = summary(alg, "duality involutive and isometric", max_n);
  for (int n = 0; n <= max_n; ++n) absorb_tagged(kaw, verify_involutive_isometric(alg, n), "n=" + std::to_string(n));
  out.push_back(suite_entry("duality", kaw));
  if (max_n >= 2) out.push_back(suite_entry("duality", verify_worked_example(alg)));
  return out;
}

std::vector<SuiteEntry> characterization_suite(Algebra& alg, int max_n) {
  return {suite_entry("characterization", verify_characterization(alg, max_n)),
          suite_entry("characterization", verify_hilbert_series(alg, max_n))};
}

std::vector<SuiteEntry> psh_suite(Algebra& alg, int max_n) {
  return {suite_entry("psh", verify_orthonormality(alg, max_n)),
          suite_entry("psh", verify_rational_positivity(alg, max_n)),
          suite_entry("psh", verify_positivity(alg, max_n)), suite_entry("psh", verify_self_adjointness(alg, max_n)),
          suite_entry("psh", verify_second_psh(alg, max_n))};
}

std::vector<SuiteEntry> witness_suite(Algebra& alg) {
  return {suite_entry("witness", verify_constant_norms(alg)), suite_entry("witness", verify_nondescending(alg))};
}

}  // namespace

std::vector<SuiteEntry> run_suite(Algebra& alg, const std::string& suite, int max_n) {
  if (suite == "orbits") return orbit_suite(alg, max_n);
  if (suite == "hc") return hc_suite(alg, max_n);
  if (suite == "mackey") return mackey_suite(alg, max_n);
  if (suite == "bialgebra") return bialgebra_suite(alg, max_n);
  if (suite == "antipode") return antipode_suite(alg, max_n);
  if (suite == "duality") return duality_suite(alg, max_n);
  if (suite == "characterization") return characterization_suite(alg, max_n);
  if (suite == "steinberg") return {suite_entry("steinberg", verify_steinberg(alg, max_n))};
  if (suite == "psh") return psh_suite(alg, max_n);
  if (suite == "witness") return witness_suite(alg);
  throw ConfigError("unknown suite '" + suite + "'");
}

}  // namespace glhopf
