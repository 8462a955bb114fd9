#include <omp.h>

#include "glhopf/kernels.hpp"

namespace glhopf::kernels {

Backend default_backend() noexcept { return Backend::omp; }

namespace omp {

// Rows are independent and each thread writes only its own rows, so no
// reductions are needed. Row costs vary a lot (orbit sizes), hence dynamic.

ConjugateCodes conjugation_sweep(const OrbitTable& target, const GroupElements& group) {
  ConjugateCodes out(target.size());
  const auto rows = static_cast<std::int64_t>(target.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t o = 0; o < rows; ++o) detail::conjugates_of(target, group, static_cast<std::size_t>(o), out[o]);
  return out;
}

std::vector<std::uint64_t> induction_counts(const OrbitTable& target, const ConjugateCodes& conj,
                                            const LeviLayout& layout) {
  const std::size_t tuples = layout.tuple_count();
  std::vector<std::uint64_t> counts(target.size() * tuples, 0);
  const auto rows = static_cast<std::int64_t>(target.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t o = 0; o < rows; ++o) detail::induction_row(target, conj[o], layout, &counts[o * tuples]);
  return counts;
}

std::vector<std::uint64_t> restriction_counts(const OrbitTable& target, const LeviLayout& layout) {
  const std::size_t tuples = layout.tuple_count();
  std::vector<std::uint64_t> counts(tuples * target.size(), 0);
  const auto rows = static_cast<std::int64_t>(tuples);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < rows; ++t)
    detail::restriction_row(target, layout, static_cast<std::size_t>(t), &counts[t * target.size()]);
  return counts;
}

std::vector<std::uint64_t> fourier_residue_counts(const OrbitTable& table) {
  const std::size_t norb = table.size();
  const auto p = static_cast<std::size_t>(table.field().p());
  const auto members = table.members();
  std::vector<std::uint64_t> counts(norb * norb * p, 0);
  const auto rows = static_cast<std::int64_t>(norb);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < rows; ++a) detail::fourier_row(table, members[a], &counts[a * norb * p]);
  return counts;
}

}  // namespace omp
}  // namespace glhopf::kernels
