#pragma once

// Data-parallel hot loops. Every kernel has a serial reference and an OpenMP
// variant producing bit-identical integer counts; callers pick a Backend.

#include <cstdint>
#include <vector>

#include "glhopf/glmat.hpp"
#include "glhopf/orbits.hpp"

namespace glhopf::kernels {

enum class Backend { serial, omp };

Backend default_backend() noexcept;
const char* backend_name(Backend b) noexcept;

/// Codes of g x g^{-1} for each representative x and each g, in group order.
using ConjugateCodes = std::vector<std::vector<std::uint64_t>>;

/// Inputs shared by the induction and restriction counters. `factors[i]` is
/// the orbit table of the i-th Levi block (sizes match composition parts);
/// tuple indices are mixed radix with the first block most significant.
struct LeviLayout {
  Composition composition;
  BlockKind kind;
  std::vector<const OrbitTable*> factors;

  std::size_t tuple_count() const;
};

namespace serial {
ConjugateCodes conjugation_sweep(const OrbitTable& target, const GroupElements& group);
/// counts[orbit * tuples + tuple] = #{g : g x_orbit g^{-1} in P, levi part in tuple}
std::vector<std::uint64_t> induction_counts(const OrbitTable& target, const ConjugateCodes& conj,
                                            const LeviLayout& layout);
/// counts[tuple * orbits + orbit] = #{y in U_P : embed(tuple reps) + y in orbit}
std::vector<std::uint64_t> restriction_counts(const OrbitTable& target, const LeviLayout& layout);
/// counts[(a * N + x) * p + r] = #{m in orbit a : trace_to_prime(tr(m x_rep)) = r}
std::vector<std::uint64_t> fourier_residue_counts(const OrbitTable& table);
}  // namespace serial

namespace omp {
ConjugateCodes conjugation_sweep(const OrbitTable& target, const GroupElements& group);
std::vector<std::uint64_t> induction_counts(const OrbitTable& target, const ConjugateCodes& conj,
                                            const LeviLayout& layout);
std::vector<std::uint64_t> restriction_counts(const OrbitTable& target, const LeviLayout& layout);
std::vector<std::uint64_t> fourier_residue_counts(const OrbitTable& table);
}  // namespace omp

ConjugateCodes conjugation_sweep(const OrbitTable& target, const GroupElements& group, Backend b);
std::vector<std::uint64_t> induction_counts(const OrbitTable& target, const ConjugateCodes& conj,
                                            const LeviLayout& layout, Backend b);
std::vector<std::uint64_t> restriction_counts(const OrbitTable& target, const LeviLayout& layout, Backend b);
std::vector<std::uint64_t> fourier_residue_counts(const OrbitTable& table, Backend b);

namespace detail {

// Per-row work shared by both backends.
void conjugates_of(const OrbitTable& target, const GroupElements& group, std::size_t orbit,
                   std::vector<std::uint64_t>& out);
void induction_row(const OrbitTable& target, const std::vector<std::uint64_t>& conj, const LeviLayout& layout,
                   std::uint64_t* row);
void restriction_row(const OrbitTable& target, const LeviLayout& layout, std::size_t tuple, std::uint64_t* row);
void fourier_row(const OrbitTable& table, const std::vector<std::uint64_t>& members, std::uint64_t* row);

}  // namespace detail
}  // namespace glhopf::kernels
