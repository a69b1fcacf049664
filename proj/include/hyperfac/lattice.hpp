#pragma once

#include "hyperfac/geometry.hpp"
#include "hyperfac/index_set.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperfac {

/// Element of L(A), stored as the closed set of hyperplanes containing it.
struct Flat {
  IndexSet members;
  int rank = 0;

  friend bool operator==(const Flat& a, const Flat& b) { return a.rank == b.rank && a.members == b.members; }
};

/// Intersection lattice L(A) of a central arrangement.
///
/// Flats are numbered by (rank, member list lexicographically); flat 0 is V and
/// the last flat is the center. X <= Y in the lattice iff members(X) is a subset
/// of members(Y). Once built the lattice is purely combinatorial: joins go
/// through a flat x hyperplane table, meets are member-set intersections.
class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t num_hyperplanes, std::size_t dim, std::vector<Flat> flats, std::vector<int> join_table)
      : n_(num_hyperplanes), dim_(dim), flats_(std::move(flats)), join_(std::move(join_table)) {
    for (std::size_t i = 0; i < flats_.size(); ++i) {
      index_.emplace(flats_[i].members, static_cast<int>(i));
      if (i > 0 && flats_[i].rank < flats_[i - 1].rank) throw std::logic_error("flats not sorted by rank");
    }
    int max_rank = flats_.empty() ? 0 : flats_.back().rank;
    rank_begin_.assign(static_cast<std::size_t>(max_rank) + 2, static_cast<int>(flats_.size()));
    for (std::size_t i = flats_.size(); i-- > 0;) rank_begin_[static_cast<std::size_t>(flats_[i].rank)] = static_cast<int>(i);
    for (std::size_t k = rank_begin_.size() - 1; k-- > 0;)
      rank_begin_[k] = std::min(rank_begin_[k], rank_begin_[k + 1]);
    atoms_.resize(n_);
    for (std::size_t h = 0; h < n_; ++h) atoms_[h] = join_atom(0, static_cast<int>(h));
  }

  [[nodiscard]] std::size_t num_hyperplanes() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return flats_.size(); }
  [[nodiscard]] const std::vector<Flat>& flats() const { return flats_; }
  [[nodiscard]] const Flat& flat(int f) const { return flats_[static_cast<std::size_t>(f)]; }
  [[nodiscard]] const IndexSet& members(int f) const { return flat(f).members; }
  [[nodiscard]] int rank(int f) const { return flat(f).rank; }

  [[nodiscard]] int bottom() const { return 0; }
  /// The center T_A (unique maximal flat of a central arrangement).
  [[nodiscard]] int top() const { return static_cast<int>(flats_.size()) - 1; }
  [[nodiscard]] int max_rank() const { return rank(top()); }

  /// Flat ids of rank k form the half-open range [first, second).
  [[nodiscard]] std::pair<int, int> rank_range(int k) const {
    if (k < 0 || k > max_rank()) return {0, 0};
    return {rank_begin_[static_cast<std::size_t>(k)], rank_begin_[static_cast<std::size_t>(k) + 1]};
  }
  [[nodiscard]] std::size_t count_of_rank(int k) const {
    auto [b, e] = rank_range(k);
    return static_cast<std::size_t>(e - b);
  }

  [[nodiscard]] int atom(int h) const { return atoms_[static_cast<std::size_t>(h)]; }

  /// closure(members(f) + {h})
  [[nodiscard]] int join_atom(int f, int h) const {
    return join_[static_cast<std::size_t>(f) * n_ + static_cast<std::size_t>(h)];
  }

  [[nodiscard]] bool leq(int f, int g) const { return members(f).is_subset_of(members(g)); }

  [[nodiscard]] int join(int f, int g) const {
    if (leq(g, f)) return f;
    if (leq(f, g)) return g;
    int cur = f;
    members(g).for_each([&](int h) {
      if (!members(cur).contains(h)) cur = join_atom(cur, h);
    });
    return cur;
  }

  [[nodiscard]] int meet(int f, int g) const {
    auto found = find(members(f) & members(g));
    if (!found) throw std::logic_error("intersection of flats is not closed");
    return *found;
  }

  /// Flat spanned by a set of hyperplane indices.
  template <class Range>
  [[nodiscard]] int closure_of(const Range& hyperplanes) const {
    int cur = bottom();
    for (int h : hyperplanes)
      if (!members(cur).contains(h)) cur = join_atom(cur, h);
    return cur;
  }
  [[nodiscard]] int closure_of(const IndexSet& s) const { return closure_of(s.elements()); }

  [[nodiscard]] std::optional<int> find(const IndexSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::size_t n_;
  std::size_t dim_;
  std::vector<Flat> flats_;
  std::vector<int> join_;
  std::vector<int> rank_begin_;
  std::vector<int> atoms_;
  std::unordered_map<IndexSet, int, IndexSetHash> index_;
};

namespace detail {

inline std::vector<std::vector<int>> element_lists(const std::vector<Flat>& level) {
  std::vector<std::vector<int>> out;
  out.reserve(level.size());
  for (const auto& f : level) out.push_back(f.members.elements());
  return out;
}

}  // namespace detail

/// Builds L(A) level by level: every rank-(k+1) flat is the closure of a rank-k
/// flat plus one hyperplane. Each closure costs one exact reduction per
/// hyperplane; closures already produced from the same flat are reused.
template <ExactField F>
IntersectionLattice build_lattice(const Arrangement<F>& arr) {
  const std::size_t n = arr.size();
  const std::size_t dim = arr.dim();

  struct Node {
    Flat flat;
    RowEchelon<F> ech;
  };
  // join entries refer to (level, index within level) until final numbering
  struct Ref {
    int level;
    int local;
  };

  std::vector<std::vector<Flat>> levels;
  std::vector<std::vector<Ref>> joins;  // per level, size level.size() * n

  std::vector<Node> current;
  current.push_back(Node{Flat{IndexSet(n), 0}, RowEchelon<F>(arr.field(), dim)});

  for (int k = 0; !current.empty(); ++k) {
    std::vector<Node> next;
    std::unordered_map<IndexSet, int, IndexSetHash> next_index;
    std::vector<Ref> level_joins(current.size() * n);

    for (std::size_t p = 0; p < current.size(); ++p) {
      const Node& node = current[p];
      std::vector<int> produced;
      for (std::size_t h = 0; h < n; ++h) {
        const int hi = static_cast<int>(h);
        Ref& slot = level_joins[p * n + h];
        if (node.flat.members.contains(hi)) {
          slot = {k, static_cast<int>(p)};
          continue;
        }
        auto hit = std::find_if(produced.begin(), produced.end(),
                                [&](int q) { return next[static_cast<std::size_t>(q)].flat.members.contains(hi); });
        if (hit != produced.end()) {
          slot = {k + 1, *hit};
          continue;
        }
        RowEchelon<F> ech = node.ech;
        ech.insert(arr[h].coefficients());
        IndexSet members = node.flat.members;
        members.insert(hi);
        for (std::size_t j = 0; j < n; ++j) {
          const int ji = static_cast<int>(j);
          if (!members.contains(ji) && ech.contains(arr[j].coefficients())) members.insert(ji);
        }
        auto [it, inserted] = next_index.emplace(members, static_cast<int>(next.size()));
        if (inserted) next.push_back(Node{Flat{members, k + 1}, std::move(ech)});
        produced.push_back(it->second);
        slot = {k + 1, it->second};
      }
    }

    // Canonical order within the next level; remap references into it.
    std::vector<Flat> next_flats;
    next_flats.reserve(next.size());
    for (auto& nd : next) next_flats.push_back(nd.flat);
    auto lists = detail::element_lists(next_flats);
    std::vector<int> perm(next.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return lists[static_cast<std::size_t>(a)] < lists[static_cast<std::size_t>(b)];
    });
    std::vector<int> new_pos(next.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    for (auto& ref : level_joins)
      if (ref.level == k + 1) ref.local = new_pos[static_cast<std::size_t>(ref.local)];

    std::vector<Node> sorted;
    sorted.reserve(next.size());
    for (int q : perm) sorted.push_back(std::move(next[static_cast<std::size_t>(q)]));

    std::vector<Flat> level_flats;
    level_flats.reserve(current.size());
    for (auto& nd : current) level_flats.push_back(std::move(nd.flat));
    levels.push_back(std::move(level_flats));
    joins.push_back(std::move(level_joins));
    current = std::move(sorted);
  }

  std::vector<int> offset(levels.size() + 1, 0);
  for (std::size_t k = 0; k < levels.size(); ++k) offset[k + 1] = offset[k] + static_cast<int>(levels[k].size());

  std::vector<Flat> flats;
  flats.reserve(static_cast<std::size_t>(offset.back()));
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(offset.back()) * n);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (auto& f : levels[k]) flats.push_back(std::move(f));
    for (const auto& ref : joins[k]) table.push_back(offset[static_cast<std::size_t>(ref.level)] + ref.local);
  }
  return IntersectionLattice(n, dim, std::move(flats), std::move(table));
}

/// All hyperplanes containing the intersection of those in `s`, computed with
/// exact ranks (independent of any lattice).
template <ExactField F>
Flat closure(const Arrangement<F>& arr, const IndexSet& s) {
  RowEchelon<F> ech(arr.field(), arr.dim());
  s.for_each([&](int i) { ech.insert(arr[static_cast<std::size_t>(i)].coefficients()); });
  Flat out{IndexSet(arr.size()), static_cast<int>(ech.rank())};
  for (std::size_t j = 0; j < arr.size(); ++j)
    if (s.contains(static_cast<int>(j)) || ech.contains(arr[j].coefficients())) out.members.insert(static_cast<int>(j));
  return out;
}

/// A_X: the hyperplanes of X, in input order, same ambient space.
template <ExactField F>
Arrangement<F> localization(const Arrangement<F>& arr, const Flat& x) {
  if (!(closure(arr, x.members).members == x.members)) throw GeometryError("localization: index set is not a flat");
  auto idx = x.members.elements();
  return arr.subarrangement(idx);
}

/// Indices of the hyperplanes containing U.
template <ExactField F>
std::vector<int> localization_indices(const Arrangement<F>& arr, const Subspace<F>& u) {
  if (u.ambient_dim() != arr.dim()) throw GeometryError("subspace lives in a different ambient space");
  std::vector<int> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    bool contains = true;
    for (const auto& b : u.basis())
      if (!arr[i].evaluate(b).is_zero()) {
        contains = false;
        break;
      }
    if (contains) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// A_U = {H : U is contained in H}.
template <ExactField F>
Arrangement<F> localization_at_subspace(const Arrangement<F>& arr, const Subspace<F>& u) {
  auto idx = localization_indices(arr, u);
  return arr.subarrangement(idx);
}

/// A restricted to a subspace, with the trace of every original hyperplane.
template <ExactField F>
struct Restriction {
  Subspace<F> space;
  Arrangement<F> arrangement;
  /// trace[i] = index in `arrangement` of H_i intersected with the space, or -1
  /// when H_i contains the space.
  std::vector<int> trace;
};

template <ExactField F>
Restriction<F> restriction_to(const Arrangement<F>& arr, const Subspace<F>& x) {
  std::vector<Functional<F>> forms;
  std::vector<int> trace(arr.size(), -1);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto r = restrict_functional(arr[i], x);
    if (!r) continue;
    auto it = std::find(forms.begin(), forms.end(), *r);
    trace[i] = static_cast<int>(it - forms.begin());
    if (it == forms.end()) forms.push_back(std::move(*r));
  }
  Arrangement<F> restricted(arr.field(), x.dim(), std::move(forms));
  return Restriction<F>{x, std::move(restricted), std::move(trace)};
}

/// The subspace cut out by the hyperplanes at `indices`.
template <ExactField F>
Subspace<F> flat_subspace(const Arrangement<F>& arr, const IndexSet& members) {
  std::vector<Functional<F>> forms;
  members.for_each([&](int i) { forms.push_back(arr[static_cast<std::size_t>(i)]); });
  return intersect_kernels<F>(arr.field(), arr.dim(), forms);
}

/// A^X, living in X with coordinates given by X's canonical basis. Coincident
/// restrictions are merged (first occurrence keeps its position).
template <ExactField F>
Restriction<F> restriction_with_trace(const Arrangement<F>& arr, const Flat& x) {
  return restriction_to(arr, flat_subspace(arr, x.members));
}

template <ExactField F>
Arrangement<F> restriction(const Arrangement<F>& arr, const Flat& x) {
  return restriction_with_trace(arr, x).arrangement;
}

/// mu(V, X) for every flat X.
inline std::vector<std::int64_t> mobius_from_bottom(const IntersectionLattice& lat) {
  std::vector<std::int64_t> mu(lat.size(), 0);
  if (lat.size() == 0) return mu;
  mu[0] = 1;
  for (std::size_t x = 1; x < lat.size(); ++x) {
    std::int64_t sum = 0;
    const int rx = lat.rank(static_cast<int>(x));
    for (std::size_t y = 0; y < x && lat.rank(static_cast<int>(y)) < rx; ++y)
      if (lat.leq(static_cast<int>(y), static_cast<int>(x))) sum += mu[y];
    mu[x] = -sum;
  }
  return mu;
}

/// chi(A, t) = sum over flats of mu(V, X) t^(dim X); coefficient of t^i at index i.
inline std::vector<std::int64_t> characteristic_polynomial(const IntersectionLattice& lat) {
  std::vector<std::int64_t> chi(lat.dim() + 1, 0);
  auto mu = mobius_from_bottom(lat);
  for (std::size_t x = 0; x < lat.size(); ++x)
    chi[lat.dim() - static_cast<std::size_t>(lat.rank(static_cast<int>(x)))] += mu[x];
  return chi;
}

/// X is modular iff r(X) + r(Y) = r(X v Y) + r(X ^ Y) for all flats Y.
inline bool is_modular(const IntersectionLattice& lat, int x) {
  for (int y = 0; y < static_cast<int>(lat.size()); ++y)
    if (lat.rank(x) + lat.rank(y) != lat.rank(lat.join(x, y)) + lat.rank(lat.meet(x, y))) return false;
  return true;
}

struct SupersolvableResult {
  bool supersolvable = false;
  /// Maximal chain of modular flats V = X_0 < ... < X_r = T, flat ids.
  std::vector<int> chain;
};

/// Searches for a maximal chain of modular flats, lowest flat ids first.
inline SupersolvableResult is_supersolvable(const IntersectionLattice& lat) {
  const int r = lat.max_rank();
  std::vector<signed char> modular(lat.size(), -1);
  auto check = [&](int f) {
    auto& m = modular[static_cast<std::size_t>(f)];
    if (m < 0) m = is_modular(lat, f) ? 1 : 0;
    return m == 1;
  };
  std::vector<int> chain{lat.bottom()};
  auto extend = [&](auto&& self) -> bool {
    const int k = static_cast<int>(chain.size()) - 1;
    if (k == r) return true;
    auto [b, e] = lat.rank_range(k + 1);
    for (int f = b; f < e; ++f) {
      if (!lat.leq(chain.back(), f) || !check(f)) continue;
      chain.push_back(f);
      if (self(self)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (extend(extend)) return {true, chain};
  return {false, {}};
}

template <ExactField F>
SupersolvableResult is_supersolvable(const Arrangement<F>& arr) {
  return is_supersolvable(build_lattice(arr));
}

}  // namespace hyperfac
