#include <doctest.h>

#include "glhopf/hc.hpp"

using namespace glhopf;
namespace k = glhopf::kernels;

TEST_CASE("serial and OpenMP kernels produce identical counts") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto& target = *alg.table(n);
    const auto& group = alg.group(n);
    const auto conj = k::serial::conjugation_sweep(target, group);
    CHECK(conj == k::omp::conjugation_sweep(target, group));
    CHECK(k::serial::fourier_residue_counts(target) == k::omp::fourier_residue_counts(target));
    for (const auto& c : Composition::all_of(n)) {
      for (auto kind : {BlockKind::parabolic_upper, BlockKind::parabolic_lower}) {
        const auto factors = alg.tables(c.parts());
        k::LeviLayout layout{c, kind, {}};
        for (const auto& f : factors) layout.factors.push_back(f.get());
        CHECK(k::serial::induction_counts(target, conj, layout) == k::omp::induction_counts(target, conj, layout));
        CHECK(k::serial::restriction_counts(target, layout) == k::omp::restriction_counts(target, layout));
      }
    }
  }
}

TEST_CASE("conjugation sweep rows enumerate each orbit with multiplicity |centralizer|") {
  Algebra alg(FqContext::make(2));
  const auto& t = *alg.table(3);
  const auto& conj = alg.conjugates(3);
  for (std::size_t o = 0; o < t.size(); ++o) {
    std::map<std::uint64_t, std::uint64_t> hits;
    for (auto code : conj[o]) ++hits[code];
    CHECK(hits.size() == t[o].size);
    for (const auto& [code, count] : hits) {
      CHECK(t.index_of_code(code) == o);
      CHECK(count * t[o].size == t.group_order());
    }
  }
}

TEST_CASE("backend names") {
  CHECK(std::string(k::backend_name(k::Backend::serial)) == "serial");
  CHECK(std::string(k::backend_name(k::Backend::omp)) == "omp");
}
