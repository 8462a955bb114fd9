#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glhopf/glmat.hpp"
#include "glhopf/poly.hpp"

namespace glhopf {

/// One (monic irreducible polynomial, partition) pair of an orbit label.
/// The polynomial is kept as ascending element codes ending in 1.
struct PrimaryPart {
  std::vector<int> poly;
  std::vector<int> partition;  // descending, nonempty

  int degree() const noexcept { return static_cast<int>(poly.size()) - 1; }
  friend auto operator<=>(const PrimaryPart&, const PrimaryPart&) = default;
};

/// Canonical name of a similarity class in gl_n(F_q): the map from monic
/// irreducibles to partitions given by the elementary divisors.
struct OrbitLabel {
  std::vector<PrimaryPart> parts;  // sorted by polynomial, distinct polynomials

  int weight() const;
  bool is_nilpotent() const;
  /// "f1:l1|f2:l2|..." with f as "c0,c1,...,1" and l as "p1,p2,...".
  std::string to_string() const;
  static OrbitLabel parse(std::string_view text);

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// Integer partitions of n with descending parts, in reverse-lexicographic
/// order ((n) first).
std::vector<std::vector<int>> integer_partitions(int n);

/// Elementary-divisor classifier for one field and matrix size; caches the
/// irreducible polynomials up to degree n.
class OrbitClassifier {
 public:
  OrbitClassifier(const FqContext& f, int n);

  /// Label of x from the invariant factors of tI - x (Smith form over F_q[t]).
  OrbitLabel classify(const Matrix& x) const;
  /// Monic invariant factors of degree >= 1, each dividing the next.
  std::vector<FqPoly> invariant_factors(const Matrix& x) const;
  const std::vector<FqPoly>& irreducibles() const noexcept { return irr_; }

 private:
  const FqContext* f_;
  int n_;
  std::vector<FqPoly> irr_;
};

OrbitLabel orbit_of(const Matrix& x);

/// Companion-block representative of a label.
Matrix orbit_representative(const FqContext& f, const OrbitLabel& label);

/// The adjoint orbits of gl_n(F_q), in label order.
class OrbitTable {
 public:
  struct Entry {
    OrbitLabel label;
    Matrix representative;
    std::uint64_t size;
  };

  int n() const noexcept { return n_; }
  const FqContext& field() const noexcept { return *ctx_; }
  const std::shared_ptr<const FqContext>& field_ptr() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint64_t group_order() const noexcept { return group_order_; }

  std::optional<std::size_t> find(const OrbitLabel& label) const;
  /// Throws LookupError for labels not in the table.
  std::size_t index_of(const OrbitLabel& label) const;
  /// Orbit index of a matrix; dense table lookup when available.
  std::size_t index_of(const Matrix& x) const;
  std::size_t index_of_code(std::uint64_t code) const;

  bool has_dense_lookup() const noexcept { return !dense_.empty(); }
  /// Orbit index per matrix code (empty past the budget).
  const std::vector<std::uint16_t>& dense_lookup() const noexcept { return dense_; }
  /// Matrix codes grouped by orbit; requires the dense lookup.
  std::vector<std::vector<std::uint64_t>> members() const;

  OrbitLabel orbit_of(const Matrix& x) const;
  const OrbitClassifier& classifier() const noexcept { return classifier_; }

 private:
  friend OrbitTable enumerate_orbits(std::shared_ptr<const FqContext>, int, std::uint64_t);
  friend OrbitTable restore_orbit_table(std::shared_ptr<const FqContext>, int, std::vector<Entry>, std::uint64_t);
  OrbitTable(std::shared_ptr<const FqContext> f, int n) : ctx_(std::move(f)), n_(n), classifier_(*ctx_, n) {}
  void build_index(std::uint64_t budget);

  std::shared_ptr<const FqContext> ctx_;
  int n_;
  OrbitClassifier classifier_;
  std::vector<Entry> entries_;
  std::map<OrbitLabel, std::size_t> index_;
  std::vector<std::uint16_t> dense_;
  std::uint64_t group_order_ = 1;
};

/// Orbit sizes come from stabilizer counting over GL_n(F_q) when that scan
/// fits the budget, otherwise from commutant enumeration.
OrbitTable enumerate_orbits(std::shared_ptr<const FqContext> f, int n, std::uint64_t budget = kDefaultBudget);
/// Rebuilds a table from persisted entries (checks labels and sizes).
OrbitTable restore_orbit_table(std::shared_ptr<const FqContext> f, int n, std::vector<OrbitTable::Entry> entries,
                               std::uint64_t budget = kDefaultBudget);

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
std::uint64_t gl_order_formula(int q, int n);

/// Independent oracle: classes of all q^(n^2) matrices under conjugation by a
/// generating set of GL_n(F_q) (transvections and diag(g,1,...,1)).
struct BruteForcePartition {
  std::vector<std::int32_t> class_of;  // per matrix code
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_seed;  // smallest code in each class
};
BruteForcePartition orbit_table_bruteforce(const FqContext& f, int n, std::uint64_t budget = kDefaultBudget);

std::size_t nilpotent_orbit_count(const OrbitTable& t);

}  // namespace glhopf
