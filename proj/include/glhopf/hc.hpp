#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "glhopf/invfun.hpp"
#include "glhopf/kernels.hpp"
#include "glhopf/linalg.hpp"
#include "glhopf/report.hpp"

namespace glhopf {

/// Bumped whenever cached data would change meaning.
inline constexpr const char* kCodeVersion = "glhopf-cache-1";

struct AlgebraOptions {
  std::uint64_t budget = kDefaultBudget;
  kernels::Backend backend = kernels::default_backend();
  std::optional<std::filesystem::path> cache_dir;
};

/// Shared state for one field: orbit tables, GL sweeps and the exact
/// Harish-Chandra matrices in the indicator bases, all built lazily and
/// memoized. Induction matrices map tensor coordinates (mixed radix over the
/// Levi blocks) to orbit coordinates of the big algebra; restriction matrices
/// go the other way. Thread-safe.
class Algebra {
 public:
  explicit Algebra(std::shared_ptr<const FqContext> f, AlgebraOptions opts = {});

  const FqContext& field() const noexcept { return *f_; }
  const std::shared_ptr<const FqContext>& field_ptr() const noexcept { return f_; }
  int q() const noexcept { return f_->q(); }
  const AlgebraOptions& options() const noexcept { return opts_; }
  /// Largest n whose matrix space fits the budget.
  int max_degree() const noexcept;

  const TablePtr& table(int n);
  std::size_t dim(int n) { return table(n)->size(); }
  std::vector<TablePtr> tables(const std::vector<int>& degrees);
  const GroupElements& group(int n);
  const kernels::ConjugateCodes& conjugates(int n);
  const std::vector<InvariantFunction>& fourier_basis(int n);

  /// |P| = prod |GL_{c_i}| * q^{dim U_P}.
  Rational parabolic_order(const Composition& c);
  Rational unipotent_order(const Composition& c);

  const RationalMatrix& induction(const Composition& c, BlockKind kind = BlockKind::parabolic_upper);
  const RationalMatrix& restriction(const Composition& c, BlockKind kind = BlockKind::parabolic_upper);
  /// Same with zero parts allowed (degree-0 factors of size one).
  const RationalMatrix& induction(const std::vector<int>& parts);
  const RationalMatrix& restriction(const std::vector<int>& parts);

  /// Memoizes a derived matrix under `key` (persisted when a cache dir is set).
  const RationalMatrix& memo(const std::string& key, const std::function<RationalMatrix()>& build);

 private:
  std::optional<std::filesystem::path> cache_file(const std::string& key) const;

  std::shared_ptr<const FqContext> f_;
  AlgebraOptions opts_;
  std::recursive_mutex mu_;
  std::map<int, TablePtr> tables_;
  std::map<int, std::unique_ptr<GroupElements>> groups_;
  std::map<int, std::unique_ptr<kernels::ConjugateCodes>> conj_;
  std::map<int, std::vector<InvariantFunction>> fourier_;
  std::map<std::string, RationalMatrix> matrices_;
};

std::string kind_name(BlockKind kind);
/// Human-readable orbit tuple "(label ; label ; ...)" for witnesses.
std::string tuple_description(Algebra& alg, const std::vector<int>& degrees, std::size_t tuple);

/// Matrix sending the tensor over `degrees` to the tensor over the factors
/// reordered as degrees[order[0]], degrees[order[1]], ...
RationalMatrix tensor_permutation(Algebra& alg, const std::vector<int>& degrees, const std::vector<int>& order);
/// kron of identity matrices and the given blocks, left to right.
RationalMatrix kron_all(const std::vector<RationalMatrix>& ms);

TensorFunction hc_restrict(Algebra& alg, const InvariantFunction& f, const Composition& c,
                           BlockKind kind = BlockKind::parabolic_upper);
InvariantFunction hc_induce(Algebra& alg, const TensorFunction& t, const Composition& c,
                            BlockKind kind = BlockKind::parabolic_upper);

/// Compares two matrices entry by entry; the witness names orbit tuples.
HCReport compare_matrices(Algebra& alg, std::string identity, const RationalMatrix& lhs, const RationalMatrix& rhs,
                          const std::vector<int>& row_degrees, const std::vector<int>& col_degrees);

/// (R(t), g) = (t, *R(g)) for one pair, and for every pair of indicators.
HCReport verify_adjunction(Algebra& alg, const TensorFunction& t, const InvariantFunction& g, const Composition& c);
HCReport verify_adjunction(Algebra& alg, const Composition& c);
/// Induction and restriction in stages through `coarse` agree with one step along `fine`.
HCReport verify_transitivity(Algebra& alg, const Composition& coarse, const Composition& fine);
/// Upper and lower block parabolics give the same operators.
HCReport verify_parabolic_independence(Algebra& alg, const Composition& c);

/// Index set of the Mackey sum: (a, b, c, d) with a+b = n1, c+d = n2,
/// a+c = s, b+d = t.
std::vector<std::array<int, 4>> mackey_index_set(int n1, int n2, int s, int t);
/// *R^{wM}_{L ∩ wM} ∘ ad(w) computed by definition: rows are orbit tuples of
/// the blocks (a, c, b, d), columns orbit tuples of (a+b, c+d).
RationalMatrix mackey_twisted_restriction(Algebra& alg, int a, int b, int c, int d);
RationalMatrix mackey_lhs(Algebra& alg, int n1, int n2, int s, int t);
RationalMatrix mackey_rhs(Algebra& alg, int n1, int n2, int s, int t);
/// Both sides as operators (every indicator tensor at once).
HCReport verify_mackey(Algebra& alg, int n1, int n2, int s, int t);
/// Both sides applied to r1 ⊠ r2.
HCReport verify_mackey(Algebra& alg, int s, int t, const InvariantFunction& r1, const InvariantFunction& r2);

}  // namespace glhopf
