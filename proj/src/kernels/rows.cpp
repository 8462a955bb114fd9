#include <array>

#include "glhopf/kernels.hpp"

namespace glhopf::kernels {

const char* backend_name(Backend b) noexcept { return b == Backend::serial ? "serial" : "omp"; }

std::size_t LeviLayout::tuple_count() const {
  std::size_t t = 1;
  for (const auto* f : factors) t *= f->size();
  return t;
}

namespace detail {

namespace {

using Digits = std::array<std::uint8_t, Matrix::kMaxDim * Matrix::kMaxDim>;

void decode(std::uint64_t code, int nn, std::uint64_t q, Digits& d) {
  for (int idx = nn - 1; idx >= 0; --idx) {
    d[idx] = static_cast<std::uint8_t>(code % q);
    code /= q;
  }
}

struct BlockPlan {
  // row-major positions (flat index in the n x n matrix) of each diagonal block
  std::vector<std::vector<int>> block_positions;
  std::vector<std::size_t> strides;
  // positions that must vanish for membership in the parabolic
  std::vector<int> forbidden;
};

BlockPlan plan_for(const LeviLayout& layout) {
  const auto& c = layout.composition;
  const int n = c.size();
  if (static_cast<int>(layout.factors.size()) != c.length())
    throw ShapeError("Levi layout: one orbit table per block required");
  BlockPlan plan;
  for (int b = 0; b < c.length(); ++b) {
    if (layout.factors[b]->n() != c.parts()[b]) throw ShapeError("Levi layout: factor table size mismatch");
    std::vector<int> pos;
    for (int i = 0; i < c.parts()[b]; ++i)
      for (int j = 0; j < c.parts()[b]; ++j) pos.push_back((c.offset(b) + i) * n + c.offset(b) + j);
    plan.block_positions.push_back(std::move(pos));
  }
  plan.strides.assign(c.length(), 1);
  for (int b = c.length() - 2; b >= 0; --b) plan.strides[b] = plan.strides[b + 1] * layout.factors[b + 1]->size();
  const BlockKind opposite = layout.kind == BlockKind::parabolic_upper   ? BlockKind::parabolic_lower
                             : layout.kind == BlockKind::parabolic_lower ? BlockKind::parabolic_upper
                                                                         : BlockKind::levi;
  if (layout.kind == BlockKind::levi) {
    for (const auto& [i, j] : unipotent_positions(c, BlockKind::parabolic_upper)) plan.forbidden.push_back(i * n + j);
    for (const auto& [i, j] : unipotent_positions(c, BlockKind::parabolic_lower)) plan.forbidden.push_back(i * n + j);
  } else {
    for (const auto& [i, j] : unipotent_positions(c, opposite)) plan.forbidden.push_back(i * n + j);
  }
  return plan;
}

}  // namespace

void conjugates_of(const OrbitTable& target, const GroupElements& group, std::size_t orbit,
                   std::vector<std::uint64_t>& out) {
  const Matrix& x = target[orbit].representative;
  out.resize(group.elements.size());
  for (std::size_t g = 0; g < group.elements.size(); ++g)
    out[g] = conjugate(group.elements[g], group.inverses[g], x).code();
}

void induction_row(const OrbitTable& target, const std::vector<std::uint64_t>& conj, const LeviLayout& layout,
                   std::uint64_t* row) {
  const BlockPlan plan = plan_for(layout);
  const int n = target.n();
  const auto q = static_cast<std::uint64_t>(target.field().q());
  Digits d{};
  for (std::uint64_t code : conj) {
    decode(code, n * n, q, d);
    bool inside = true;
    for (int pos : plan.forbidden)
      if (d[pos]) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::size_t tuple = 0;
    for (std::size_t b = 0; b < plan.block_positions.size(); ++b) {
      std::uint64_t bc = 0;
      for (int pos : plan.block_positions[b]) bc = bc * q + d[pos];
      tuple += layout.factors[b]->index_of_code(bc) * plan.strides[b];
    }
    ++row[tuple];
  }
}

void restriction_row(const OrbitTable& target, const LeviLayout& layout, std::size_t tuple, std::uint64_t* row) {
  const BlockPlan plan = plan_for(layout);
  const int n = target.n();
  const auto q = static_cast<std::uint64_t>(target.field().q());
  const auto& c = layout.composition;

  std::vector<Matrix> reps;
  std::size_t rest = tuple;
  for (int b = 0; b < c.length(); ++b) {
    const std::size_t idx = rest / plan.strides[b];
    rest %= plan.strides[b];
    reps.push_back((*layout.factors[b])[idx].representative);
  }
  const std::uint64_t base = block_embed(reps, c).code();

  std::vector<std::uint64_t> weight;
  for (const auto& [i, j] : unipotent_positions(c, layout.kind)) {
    std::uint64_t w = 1;
    for (int k = i * n + j + 1; k < n * n; ++k) w *= q;
    weight.push_back(w);
  }
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < weight.size(); ++k) count *= q;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t code = base, r = idx;
    for (auto w : weight) {
      code += (r % q) * w;
      r /= q;
    }
    ++row[target.index_of_code(code)];
  }
}

void fourier_row(const OrbitTable& table, const std::vector<std::uint64_t>& members, std::uint64_t* row) {
  const FqContext& f = table.field();
  const int n = table.n();
  const int p = f.p();
  const auto q = static_cast<std::uint64_t>(f.q());
  const std::size_t norb = table.size();
  std::vector<Digits> reps(norb);
  for (std::size_t x = 0; x < norb; ++x) decode(table[x].representative.code(), n * n, q, reps[x]);
  Digits m{};
  for (std::uint64_t code : members) {
    decode(code, n * n, q, m);
    for (std::size_t x = 0; x < norb; ++x) {
      // tr(m x) = sum_{i,j} m_ij x_ji
      std::uint8_t t = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t = f.add_code(t, f.mul_code(m[i * n + j], reps[x][j * n + i]));
      ++row[x * p + f.trace_code(t)];
    }
  }
}

}  // namespace detail

ConjugateCodes conjugation_sweep(const OrbitTable& target, const GroupElements& group, Backend b) {
  return b == Backend::serial ? serial::conjugation_sweep(target, group) : omp::conjugation_sweep(target, group);
}

std::vector<std::uint64_t> induction_counts(const OrbitTable& target, const ConjugateCodes& conj,
                                            const LeviLayout& layout, Backend b) {
  return b == Backend::serial ? serial::induction_counts(target, conj, layout)
                              : omp::induction_counts(target, conj, layout);
}

std::vector<std::uint64_t> restriction_counts(const OrbitTable& target, const LeviLayout& layout, Backend b) {
  return b == Backend::serial ? serial::restriction_counts(target, layout) : omp::restriction_counts(target, layout);
}

std::vector<std::uint64_t> fourier_residue_counts(const OrbitTable& table, Backend b) {
  return b == Backend::serial ? serial::fourier_residue_counts(table) : omp::fourier_residue_counts(table);
}

}  // namespace glhopf::kernels
