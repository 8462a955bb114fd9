#include "glhopf/kernels.hpp"

namespace glhopf::kernels::serial {

ConjugateCodes conjugation_sweep(const OrbitTable& target, const GroupElements& group) {
  ConjugateCodes out(target.size());
  for (std::size_t o = 0; o < target.size(); ++o) detail::conjugates_of(target, group, o, out[o]);
  return out;
}

std::vector<std::uint64_t> induction_counts(const OrbitTable& target, const ConjugateCodes& conj,
                                            const LeviLayout& layout) {
  const std::size_t tuples = layout.tuple_count();
  std::vector<std::uint64_t> counts(target.size() * tuples, 0);
  for (std::size_t o = 0; o < target.size(); ++o) detail::induction_row(target, conj[o], layout, &counts[o * tuples]);
  return counts;
}

std::vector<std::uint64_t> restriction_counts(const OrbitTable& target, const LeviLayout& layout) {
  const std::size_t tuples = layout.tuple_count();
  std::vector<std::uint64_t> counts(tuples * target.size(), 0);
  for (std::size_t t = 0; t < tuples; ++t) detail::restriction_row(target, layout, t, &counts[t * target.size()]);
  return counts;
}

std::vector<std::uint64_t> fourier_residue_counts(const OrbitTable& table) {
  const std::size_t norb = table.size();
  const auto p = static_cast<std::size_t>(table.field().p());
  const auto members = table.members();
  std::vector<std::uint64_t> counts(norb * norb * p, 0);
  for (std::size_t a = 0; a < norb; ++a) detail::fourier_row(table, members[a], &counts[a * norb * p]);
  return counts;
}

}  // namespace glhopf::kernels::serial
