#include "glhopf/orbits.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace glhopf {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  for (auto& x : split(s, ',')) {
    try {
      out.push_back(std::stoi(x));
    } catch (const std::exception&) {
      throw ParseError("bad integer list: '" + std::string(s) + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

Matrix companion(const FqContext& f, const FqPoly& g) {
  const int d = g.degree();
  Matrix c(f, d);
  for (int i = 0; i + 1 < d; ++i) c.set_raw(i + 1, i, 1);
  for (int i = 0; i < d; ++i) c.set_raw(i, d - 1, f.neg_code(g.c[i]));
  return c;
}

}  // namespace

// ---------------------------------------------------------------- labels

int OrbitLabel::weight() const {
  int w = 0;
  for (const auto& p : parts)
    for (int part : p.partition) w += p.degree() * part;
  return w;
}

bool OrbitLabel::is_nilpotent() const {
  return parts.size() == 1 && parts[0].poly == std::vector<int>{0, 1};
}

std::string OrbitLabel::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? "|" : "") + join(parts[i].poly) + ":" + join(parts[i].partition);
  return s;
}

OrbitLabel OrbitLabel::parse(std::string_view text) {
  OrbitLabel l;
  if (text.empty()) return l;
  for (auto& chunk : split(text, '|')) {
    auto colon = chunk.find(':');
    if (colon == std::string::npos) throw ParseError("orbit label part needs 'poly:partition': '" + chunk + "'");
    PrimaryPart p{parse_int_list(std::string_view(chunk).substr(0, colon)),
                  parse_int_list(std::string_view(chunk).substr(colon + 1))};
    if (p.poly.size() < 2 || p.poly.back() != 1) throw ParseError("orbit label polynomial must be monic: '" + chunk + "'");
    if (p.partition.empty() || !std::is_sorted(p.partition.rbegin(), p.partition.rend()) || p.partition.back() < 1)
      throw ParseError("orbit label partition must be positive and descending: '" + chunk + "'");
    l.parts.push_back(std::move(p));
  }
  if (!std::is_sorted(l.parts.begin(), l.parts.end()))
    throw ParseError("orbit label parts must be sorted: '" + std::string(text) + "'");
  return l;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n == 0) return {{}};
  gen_partitions(n, n, cur, out);
  return out;
}

// ---------------------------------------------------------------- classifier

OrbitClassifier::OrbitClassifier(const FqContext& f, int n) : f_(&f), n_(n), irr_(poly::monic_irreducibles(f, n)) {}

std::vector<FqPoly> OrbitClassifier::invariant_factors(const Matrix& x) const {
  const FqContext& f = *f_;
  const int n = x.dim();
  if (n != n_) throw ShapeError("classifier built for a different matrix size");
  std::vector<FqPoly> m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FqPoly e;
      if (i == j) {
        e.c = {f.neg_code(x.raw(i, j)), 1};
      } else {
        e.c = {f.neg_code(x.raw(i, j))};
      }
      e.trim();
      m[i * n + j] = std::move(e);
    }
  auto at = [&](int i, int j) -> FqPoly& { return m[i * n + j]; };
  FqPoly quot, rem;
  for (int k = 0; k < n; ++k) {
    while (true) {
      int pi = -1, pj = -1, best = 1 << 30;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!at(i, j).is_zero() && at(i, j).degree() < best) {
            best = at(i, j).degree();
            pi = i;
            pj = j;
          }
      if (pi < 0) throw Error("internal: characteristic matrix became singular");
      if (pi != k)
        for (int j = k; j < n; ++j) std::swap(at(k, j), at(pi, j));
      if (pj != k)
        for (int i = k; i < n; ++i) std::swap(at(i, k), at(i, pj));
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k).is_zero()) continue;
        poly::divmod(f, at(i, k), at(k, k), quot, rem);
        for (int j = k; j < n; ++j) at(i, j) = poly::sub(f, at(i, j), poly::mul(f, quot, at(k, j)));
        if (!rem.is_zero()) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (at(k, j).is_zero()) continue;
        poly::divmod(f, at(k, j), at(k, k), quot, rem);
        for (int i = k; i < n; ++i) at(i, j) = poly::sub(f, at(i, j), poly::mul(f, quot, at(i, k)));
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (int i = k + 1; i < n && divisible; ++i)
        for (int j = k + 1; j < n; ++j)
          if (!at(i, j).is_zero() && !poly::divides(f, at(k, k), at(i, j))) {
            for (int jj = k; jj < n; ++jj) at(k, jj) = poly::add(f, at(k, jj), at(i, jj));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
  }
  std::vector<FqPoly> factors;
  for (int k = 0; k < n; ++k) {
    FqPoly d = poly::monic(f, at(k, k));
    if (d.degree() >= 1) factors.push_back(std::move(d));
  }
  return factors;
}

OrbitLabel OrbitClassifier::classify(const Matrix& x) const {
  const FqContext& f = *f_;
  auto factors = invariant_factors(x);
  OrbitLabel label;
  FqPoly quot, rem;
  for (const auto& g : irr_) {
    std::vector<int> exps;
    for (const auto& d0 : factors) {
      if (g.degree() > d0.degree()) continue;
      FqPoly d = d0;
      int e = 0;
      while (d.degree() >= g.degree()) {
        poly::divmod(f, d, g, quot, rem);
        if (!rem.is_zero()) break;
        d = quot;
        ++e;
      }
      if (e > 0) exps.push_back(e);
    }
    if (exps.empty()) continue;
    std::sort(exps.rbegin(), exps.rend());
    label.parts.push_back({std::vector<int>(g.c.begin(), g.c.end()), std::move(exps)});
  }
  std::sort(label.parts.begin(), label.parts.end());
  if (label.weight() != x.dim()) throw Error("internal: elementary divisors do not account for the dimension");
  return label;
}

OrbitLabel orbit_of(const Matrix& x) { return OrbitClassifier(x.field(), x.dim()).classify(x); }

Matrix orbit_representative(const FqContext& f, const OrbitLabel& label) {
  std::vector<Matrix> blocks;
  std::vector<int> sizes;
  for (const auto& part : label.parts) {
    FqPoly g;
    g.c.assign(part.poly.begin(), part.poly.end());
    for (int e : part.partition) {
      FqPoly power{{1}};
      for (int i = 0; i < e; ++i) power = poly::mul(f, power, g);
      blocks.push_back(companion(f, power));
      sizes.push_back(power.degree());
    }
  }
  if (blocks.empty()) return Matrix(f, 0);
  return block_embed(blocks, Composition(sizes));
}

// ---------------------------------------------------------------- table

std::uint64_t gl_order_formula(int q, int n) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  return order;
}

std::optional<std::size_t> OrbitTable::find(const OrbitLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrbitTable::index_of(const OrbitLabel& label) const {
  auto i = find(label);
  if (!i) throw LookupError("orbit label '" + label.to_string() + "' not in the degree-" + std::to_string(n_) + " table");
  return *i;
}

std::size_t OrbitTable::index_of(const Matrix& x) const {
  if (x.dim() != n_) throw ShapeError("matrix size does not match orbit table");
  if (!dense_.empty()) return dense_[x.code()];
  return index_of(classifier_.classify(x));
}

std::size_t OrbitTable::index_of_code(std::uint64_t code) const {
  if (!dense_.empty()) return dense_[code];
  return index_of(Matrix::from_code(*ctx_, n_, code));
}

OrbitLabel OrbitTable::orbit_of(const Matrix& x) const { return entries_[index_of(x)].label; }

std::vector<std::vector<std::uint64_t>> OrbitTable::members() const {
  if (dense_.empty()) throw ResourceError("orbit membership lists", matrix_space_size(ctx_->q(), n_));
  std::vector<std::vector<std::uint64_t>> out(entries_.size());
  for (std::uint64_t code = 0; code < dense_.size(); ++code) out[dense_[code]].push_back(code);
  return out;
}

void OrbitTable::build_index(std::uint64_t budget) {
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].label, i);
  const auto total = matrix_space_size(ctx_->q(), n_);
  dense_.clear();
  if (total <= budget && entries_.size() < 65536) {
    dense_.resize(total);
    for (std::uint64_t code = 0; code < total; ++code)
      dense_[code] = static_cast<std::uint16_t>(index_of(classifier_.classify(Matrix::from_code(*ctx_, n_, code))));
  }
}

OrbitTable enumerate_orbits(std::shared_ptr<const FqContext> fp, int n, std::uint64_t budget) {
  if (n < 0 || n > Matrix::kMaxDim) throw ShapeError("orbit tables need 0 <= n <= 6");
  OrbitTable t(fp, n);
  const FqContext& f = *fp;
  t.group_order_ = gl_order_formula(f.q(), n);
  if (n == 0) {
    t.entries_.push_back({OrbitLabel{}, Matrix(f, 0), 1});
    t.build_index(budget);
    return t;
  }

  // all maps irreducible -> partition with total weight n
  const auto& irr = t.classifier_.irreducibles();
  std::vector<OrbitLabel> labels;
  OrbitLabel cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
    if (remaining == 0) {
      labels.push_back(cur);
      return;
    }
    if (idx == irr.size()) return;
    rec(idx + 1, remaining);
    const int d = irr[idx].degree();
    for (int m = 1; m * d <= remaining; ++m)
      for (auto& lam : integer_partitions(m)) {
        cur.parts.push_back({std::vector<int>(irr[idx].c.begin(), irr[idx].c.end()), lam});
        rec(idx + 1, remaining - m * d);
        cur.parts.pop_back();
      }
  };
  rec(0, n);
  for (auto& l : labels) std::sort(l.parts.begin(), l.parts.end());
  std::sort(labels.begin(), labels.end());

  const bool scan_group = matrix_space_size(f.q(), n) <= budget;
  GroupElements group;
  if (scan_group) group = enumerate_gl_with_inverses(f, n, budget);
  if (scan_group && group.elements.size() != t.group_order_) throw Error("internal: GL enumeration disagrees with |GL_n|");

  for (auto& l : labels) {
    Matrix rep = orbit_representative(f, l);
    std::uint64_t stab = 0;
    if (scan_group) {
      for (const auto& g : group.elements)
        if (g * rep == rep * g) ++stab;
    } else {
      stab = centralizer_order_via_commutant(rep, budget);
    }
    if (stab == 0 || t.group_order_ % stab != 0) throw Error("internal: stabilizer order does not divide |GL_n|");
    t.entries_.push_back({std::move(l), std::move(rep), t.group_order_ / stab});
  }
  t.build_index(budget);
  return t;
}

OrbitTable restore_orbit_table(std::shared_ptr<const FqContext> f, int n, std::vector<OrbitTable::Entry> entries,
                               std::uint64_t budget) {
  OrbitTable t(f, n);
  t.group_order_ = gl_order_formula(f->q(), n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].label.weight() != n) throw ParseError("persisted orbit label has the wrong weight");
    if (i && !(entries[i - 1].label < entries[i].label)) throw ParseError("persisted orbit labels out of order");
  }
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.size;
  const auto space = matrix_space_size(f->q(), n);
  if (space != UINT64_MAX && total != space) throw ParseError("persisted orbit sizes do not sum to q^(n^2)");
  t.entries_ = std::move(entries);
  t.build_index(budget);
  for (const auto& e : t.entries_)
    if (t.orbit_of(e.representative) != e.label) throw ParseError("persisted representative has another label");
  return t;
}

BruteForcePartition orbit_table_bruteforce(const FqContext& f, int n, std::uint64_t budget) {
  const auto total = matrix_space_size(f.q(), n);
  if (total > budget) throw ResourceError("brute-force orbit partition", total);
  std::vector<Matrix> gens, inv;
  const FqElem xi = f.primitive_element();
  if (n >= 1) {
    Matrix d = Matrix::identity(f, n);
    d.set(0, 0, xi);
    gens.push_back(d);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e = Matrix::identity(f, n);
      e.set_raw(i, j, 1);
      gens.push_back(e);
    }
  for (const auto& g : gens) inv.push_back(*inverse(g));

  BruteForcePartition out;
  out.class_of.assign(total, -1);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (out.class_of[seed] >= 0) continue;
    const auto cls = static_cast<std::int32_t>(out.class_sizes.size());
    out.class_sizes.push_back(0);
    out.class_seed.push_back(seed);
    out.class_of[seed] = cls;
    queue.push_back(seed);
    while (!queue.empty()) {
      const auto code = queue.front();
      queue.pop_front();
      ++out.class_sizes[cls];
      const Matrix x = Matrix::from_code(f, n, code);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto y = conjugate(gens[g], inv[g], x).code();
        if (out.class_of[y] < 0) {
          out.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
  }
  return out;
}

std::size_t nilpotent_orbit_count(const OrbitTable& t) {
  if (t.n() == 0) return 1;
  return static_cast<std::size_t>(
      std::count_if(t.entries().begin(), t.entries().end(), [](const auto& e) { return e.label.is_nilpotent(); }));
}

}  // namespace glhopf
