#include "glhopf/io.hpp"

#include <fstream>

#include "glhopf/hc.hpp"

namespace glhopf {

namespace {

void check_field(const Algebra& alg, const Json& j) {
  const auto f = FqContext::parse(j.at("q").get<std::string>());
  if (!f->same_field(alg.field()))
    throw ContextError("input is over " + f->to_string() + " but the run uses " + alg.field().to_string());
}

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RationalMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    RationalMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& e = j.at("entries");
    if (e.size() != m.rows()) throw ParseError("matrix: row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (e[i].size() != m.cols()) throw ParseError("matrix: column count mismatch in row " + std::to_string(i));
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = parse_rational(e[i][k].get<std::string>());
    }
    return m;
  });
}

Json to_json(const OrbitTable& t) {
  Json orbits = Json::array();
  for (const auto& e : t.entries())
    orbits.push_back(Json{{"label", e.label.to_string()},
                          {"representative", e.representative.to_string()},
                          {"size", e.size}});
  return Json{{"n", t.n()}, {"q", t.field().to_string()}, {"orbits", std::move(orbits)}};
}

OrbitTable orbit_table_from_json(std::shared_ptr<const FqContext> f, const Json& j, std::uint64_t budget) {
  return guarded("orbit table", [&] {
    if (!FqContext::parse(j.at("q").get<std::string>())->same_field(*f)) throw ContextError("orbit table: field mismatch");
    const int n = j.at("n").get<int>();
    std::vector<OrbitTable::Entry> entries;
    for (const auto& o : j.at("orbits"))
      entries.push_back({OrbitLabel::parse(o.at("label").get<std::string>()),
                         Matrix::parse(*f, o.at("representative").get<std::string>()),
                         o.at("size").get<std::uint64_t>()});
    return restore_orbit_table(f, n, std::move(entries), budget);
  });
}

Json to_json(const InvariantFunction& f) {
  Json values = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) values[f.table()[i].label.to_string()] = f[i].to_string();
  return Json{{"n", f.degree()}, {"q", f.table().field().to_string()}, {"values", std::move(values)}};
}

InvariantFunction invariant_function_from_json(Algebra& alg, const Json& j) {
  return guarded("invariant function", [&] {
    check_field(alg, j);
    const auto& table = alg.table(j.at("n").get<int>());
    std::vector<Cyclotomic> values(table->size(), Cyclotomic(alg.field().p()));
    std::vector<bool> seen(table->size(), false);
    for (const auto& [label, value] : j.at("values").items()) {
      const std::size_t i = table->index_of(OrbitLabel::parse(label));
      values[i] = Cyclotomic::parse(value.get<std::string>());
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw ParseError("invariant function: no value for orbit " + (*table)[i].label.to_string());
    return InvariantFunction(table, std::move(values));
  });
}

Json to_json(const TensorFunction& t) {
  Json values = Json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    Json labels = Json::array();
    const auto idx = t.unflatten(k);
    for (std::size_t i = 0; i < idx.size(); ++i) labels.push_back((*t.factors()[i])[idx[i]].label.to_string());
    values.push_back(Json{{"labels", std::move(labels)}, {"value", t[k].to_string()}});
  }
  return Json{{"degrees", t.degrees()}, {"q", t.factors().front()->field().to_string()}, {"values", std::move(values)}};
}

TensorFunction tensor_function_from_json(Algebra& alg, const Json& j) {
  return guarded("tensor function", [&] {
    check_field(alg, j);
    const auto degrees = j.at("degrees").get<std::vector<int>>();
    const auto factors = alg.tables(degrees);
    std::vector<Cyclotomic> values(tuple_count(factors), Cyclotomic(alg.field().p()));
    std::vector<bool> seen(values.size(), false);
    for (const auto& entry : j.at("values")) {
      const auto labels = entry.at("labels").get<std::vector<std::string>>();
      if (labels.size() != factors.size()) throw ParseError("tensor function: label tuple of wrong arity");
      std::size_t k = 0;
      for (std::size_t i = 0; i < labels.size(); ++i)
        k = k * factors[i]->size() + factors[i]->index_of(OrbitLabel::parse(labels[i]));
      values[k] = Cyclotomic::parse(entry.at("value").get<std::string>());
      seen[k] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("tensor function: missing tuples");
    return TensorFunction(factors, std::move(values));
  });
}

Json to_json(const GradedElement& x, const FqContext& f) {
  Json comps = Json::array();
  for (const auto& [n, c] : x.components()) comps.push_back(to_json(c));
  return Json{{"q", f.to_string()}, {"components", std::move(comps)}};
}

GradedElement graded_element_from_json(Algebra& alg, const Json& j) {
  return guarded("graded element", [&] {
    GradedElement x;
    if (j.contains("components")) {
      check_field(alg, j);
      for (const auto& c : j.at("components")) x.add(invariant_function_from_json(alg, c));
    } else {
      x.add(invariant_function_from_json(alg, j));
    }
    return x;
  });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::ordered_json to_json(const HCReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json j{{"identity", r.identity}, {"parameters", std::move(params)}, {"status", r.passed ? "pass" : "fail"},
         {"checks", r.checks}};
  if (!r.passed) j["witness"] = r.witness;
  return j;
}

nlohmann::ordered_json to_json(const PSHReport& r) {
  Json j{{"axiom", r.axiom},
         {"degrees", Json{{"min", r.min_degree}, {"max", r.max_degree}}},
         {"status", r.passed ? "pass" : "fail"},
         {"checks", r.checks}};
  if (r.value) j["value"] = Json{{"sign", r.value->sign()}, {"square", to_string(r.value->square())}};
  if (!r.passed) j["witness"] = r.witness;
  return j;
}

}  // namespace glhopf
