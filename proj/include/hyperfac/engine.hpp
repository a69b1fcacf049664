#pragma once

#include "hyperfac/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hyperfac {

/// Thrown when a search exceeds its node budget. An exceeded budget is
/// "inconclusive", never "no".
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("search budget of " + std::to_string(nodes) + " nodes exceeded"), nodes_(nodes) {}
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Sub-arrangement of a restriction A^Y, written inside L(A): `base` is the flat
/// Y and each hyperplane is a flat of rank r(Y)+1 above Y (the hyperplane's
/// intersection with Y). Hyperplanes are kept sorted by flat id, so equal
/// arrangements have equal representations.
///
/// For Y = V the hyperplanes are the atoms of L(A), i.e. A's hyperplanes in
/// input order.
struct LatticeArrangement {
  int base = 0;
  std::vector<int> hyperplanes;

  [[nodiscard]] std::size_t size() const { return hyperplanes.size(); }
  [[nodiscard]] bool empty() const { return hyperplanes.empty(); }
  friend bool operator==(const LatticeArrangement&, const LatticeArrangement&) = default;
};

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << static_cast<unsigned>(i); }
inline Mask full_mask(std::size_t m) { return m >= 64 ? ~Mask{0} : (bit(static_cast<int>(m)) - 1); }

template <class Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Flat of a lattice arrangement: the lattice flat and the local hyperplanes below it.
struct LocalFlat {
  int flat;
  Mask members;
  int rank;  // relative to the base
};

struct IfacResult {
  bool accepted = false;
  /// Deletion order: hyperplane removed first comes first (local indices).
  std::vector<int> deletion_order;
};

struct FreenessResult {
  std::vector<int> exponents;  // sorted, length = dimension of the ambient flat
  int pivot = -1;              // local index used for the final deletion; -1 at a base case
};

/// How candidate partitions are generated by find_factorization.
enum class SearchMode {
  /// Only nice partitions whose block sizes match the roots of chi(A, t).
  Pruned,
  /// Every set partition, each run through the literal inductive definition.
  Exhaustive,
};

/// Combinatorial search over one intersection lattice. Holds the memo tables;
/// not thread-safe, use one engine per thread.
class SearchEngine {
 public:
  explicit SearchEngine(const IntersectionLattice& lattice, std::uint64_t budget = 0)
      : lat_(lattice), budget_(budget) {}

  [[nodiscard]] const IntersectionLattice& lattice() const { return lat_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  void set_budget(std::uint64_t budget) { budget_ = budget; }

  /// A itself: base V, all atoms.
  [[nodiscard]] LatticeArrangement root() const {
    LatticeArrangement a{lat_.bottom(), {}};
    for (std::size_t h = 0; h < lat_.num_hyperplanes(); ++h) a.hyperplanes.push_back(lat_.atom(static_cast<int>(h)));
    return a;
  }

  /// A_X for a lattice flat X: the atoms below X.
  [[nodiscard]] LatticeArrangement localization(int x) const {
    LatticeArrangement a{lat_.bottom(), {}};
    lat_.members(x).for_each([&](int h) { a.hyperplanes.push_back(lat_.atom(h)); });
    return a;
  }

  /// A^Y: the flats covering Y.
  [[nodiscard]] LatticeArrangement restriction(int y) const {
    LatticeArrangement a{y, {}};
    for (std::size_t h = 0; h < lat_.num_hyperplanes(); ++h)
      if (!lat_.members(y).contains(static_cast<int>(h))) a.hyperplanes.push_back(lat_.join_atom(y, static_cast<int>(h)));
    std::sort(a.hyperplanes.begin(), a.hyperplanes.end());
    a.hyperplanes.erase(std::unique(a.hyperplanes.begin(), a.hyperplanes.end()), a.hyperplanes.end());
    return a;
  }

  [[nodiscard]] int ambient_dim(const LatticeArrangement& a) const {
    return static_cast<int>(lat_.dim()) - lat_.rank(a.base);
  }

  /// Flat spanned by the hyperplanes in `mask` (joined with the base).
  [[nodiscard]] int span(const LatticeArrangement& a, Mask mask) const {
    int cur = a.base;
    for_each_bit(mask, [&](int i) { cur = lat_.join(cur, a.hyperplanes[static_cast<std::size_t>(i)]); });
    return cur;
  }

  [[nodiscard]] int rank(const LatticeArrangement& a, Mask mask) const {
    return lat_.rank(span(a, mask)) - lat_.rank(a.base);
  }

  [[nodiscard]] int rank(const LatticeArrangement& a) const { return rank(a, full_mask(a.size())); }

  /// Hyperplanes of `a` lying above the lattice flat z, as a mask.
  [[nodiscard]] Mask below(const LatticeArrangement& a, int z) const {
    Mask m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (lat_.leq(a.hyperplanes[i], z)) m |= bit(static_cast<int>(i));
    return m;
  }

  /// Sub-arrangement on the hyperplanes of `mask`.
  [[nodiscard]] LatticeArrangement subset(const LatticeArrangement& a, Mask mask) const {
    LatticeArrangement out{a.base, {}};
    for_each_bit(mask, [&](int i) { out.hyperplanes.push_back(a.hyperplanes[static_cast<std::size_t>(i)]); });
    return out;
  }

  /// Restriction of `a` to its hyperplane i; trace[j] is the local index of
  /// H_j intersected with H_i (-1 for j = i).
  [[nodiscard]] LatticeArrangement restrict_to(const LatticeArrangement& a, int i, std::vector<int>* trace = nullptr) const {
    const int hi = a.hyperplanes[static_cast<std::size_t>(i)];
    LatticeArrangement out{hi, {}};
    std::vector<int> img(a.size(), -1);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (static_cast<int>(j) != i) img[j] = lat_.join(hi, a.hyperplanes[j]);
    for (int v : img)
      if (v >= 0) out.hyperplanes.push_back(v);
    std::sort(out.hyperplanes.begin(), out.hyperplanes.end());
    out.hyperplanes.erase(std::unique(out.hyperplanes.begin(), out.hyperplanes.end()), out.hyperplanes.end());
    if (trace) {
      trace->assign(a.size(), -1);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (img[j] >= 0)
          (*trace)[j] = static_cast<int>(std::lower_bound(out.hyperplanes.begin(), out.hyperplanes.end(), img[j]) -
                                         out.hyperplanes.begin());
    }
    return out;
  }

  /// All flats of L(a), ordered by rank then lattice id; the first is the base.
  [[nodiscard]] std::vector<LocalFlat> flats(const LatticeArrangement& a) const {
    check_size(a);
    std::vector<LocalFlat> out{LocalFlat{a.base, 0, 0}};
    std::unordered_set<int> seen{a.base};
    for (std::size_t head = 0; head < out.size(); ++head) {
      const int z = out[head].flat;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (out[head].members & bit(static_cast<int>(i))) continue;
        int w = lat_.join(z, a.hyperplanes[i]);
        if (seen.insert(w).second) out.push_back(LocalFlat{w, below(a, w), lat_.rank(w) - lat_.rank(a.base)});
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const LocalFlat& x, const LocalFlat& y) {
      return x.rank != y.rank ? x.rank < y.rank : x.flat < y.flat;
    });
    return out;
  }

  /// Coefficients of chi(a, t), index = power of t.
  [[nodiscard]] std::vector<std::int64_t> characteristic_polynomial(const LatticeArrangement& a) const {
    auto fl = flats(a);
    std::vector<std::int64_t> mu(fl.size(), 0);
    std::vector<std::int64_t> chi(static_cast<std::size_t>(ambient_dim(a)) + 1, 0);
    for (std::size_t x = 0; x < fl.size(); ++x) {
      if (x == 0) {
        mu[x] = 1;
      } else {
        std::int64_t sum = 0;
        for (std::size_t y = 0; y < x; ++y)
          if (fl[y].rank < fl[x].rank && (fl[y].members & ~fl[x].members) == 0) sum += mu[y];
        mu[x] = -sum;
      }
      chi[static_cast<std::size_t>(ambient_dim(a) - fl[x].rank)] += mu[x];
    }
    return chi;
  }

  // ---- partitions --------------------------------------------------------

  /// Every transversal of the labelled partition is independent. Blocks are
  /// walked smallest first; a dependent prefix rejects its whole subtree.
  [[nodiscard]] bool independent(const LatticeArrangement& a, const std::vector<int>& labels,
                                 std::vector<int>* dependent = nullptr) const {
    auto blocks = block_lists(labels);
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<int> chosen;
    const int base_rank = lat_.rank(a.base);
    auto walk = [&](auto&& self, std::size_t depth, int flat) -> bool {
      if (depth == blocks.size()) return true;
      for (int i : blocks[depth]) {
        int next = lat_.join(flat, a.hyperplanes[static_cast<std::size_t>(i)]);
        chosen.push_back(i);
        if (lat_.rank(next) != base_rank + static_cast<int>(depth) + 1) {
          if (dependent) *dependent = chosen;
          return false;
        }
        if (!self(self, depth + 1, next)) return false;
        chosen.pop_back();
      }
      return true;
    };
    return walk(walk, 0, a.base);
  }

  struct NiceCheck {
    bool nice = true;
    std::vector<int> dependent_transversal;  // local indices, when independence fails
    std::optional<LocalFlat> bad_flat;       // a flat whose induced partition has no singleton
  };

  [[nodiscard]] NiceCheck nice(const LatticeArrangement& a, const std::vector<int>& labels) const {
    NiceCheck out;
    if (!independent(a, labels, &out.dependent_transversal)) {
      out.nice = false;
      return out;
    }
    for (const auto& x : flats(a)) {
      if (x.rank == 0) continue;
      if (!has_singleton(labels, x.members)) {
        out.nice = false;
        out.bad_flat = x;
        return out;
      }
    }
    return out;
  }

  // ---- inductive factorization ------------------------------------------

  /// Decides whether (a, labels) is inductively factored by the recursive
  /// definition: some H_0 with bijective restriction map such that both the
  /// deletion and the restriction (with induced partitions) qualify.
  bool inductively_factored(const LatticeArrangement& a, const std::vector<int>& labels) {
    return inductively_factored_chain(a, labels, false).accepted;
  }

  /// As above; on success also returns the deletion order of one induction.
  IfacResult inductively_factored_chain(const LatticeArrangement& a, const std::vector<int>& labels,
                                        bool want_chain = true) {
    check_size(a);
    if (a.empty()) return {true, {}};
    std::vector<int> key;
    if (!want_chain) {
      key = ifac_key(a, labels);
      if (auto it = ifac_memo_.find(key); it != ifac_memo_.end()) return {it->second, {}};
    }

    const std::size_t m = a.size();
    std::vector<int> pair(m * m, -1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) pair[i * m + j] = pair[j * m + i] = lat_.join(a.hyperplanes[i], a.hyperplanes[j]);
    int num_labels = 0;
    for (int l : labels) num_labels = std::max(num_labels, l + 1);
    std::vector<Mask> block_mask(static_cast<std::size_t>(num_labels), 0);
    for (std::size_t i = 0; i < m; ++i) block_mask[static_cast<std::size_t>(labels[i])] |= bit(static_cast<int>(i));

    std::unordered_map<Mask, int> choice;  // mask -> pivot on success, -1 on failure
    std::vector<int> images;
    auto dfs = [&](auto&& self, Mask mask) -> bool {
      if (mask == 0) return true;
      if (auto it = choice.find(mask); it != choice.end()) return it->second >= 0;
      tick();
      for (int i = 0; i < static_cast<int>(m); ++i) {
        if (!(mask & bit(i))) continue;
        const Mask pivot_block = block_mask[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] & mask;
        const Mask domain = mask & ~pivot_block;
        // distinct images of everything except H_0
        images.clear();
        for_each_bit(mask & ~bit(i), [&](int j) { images.push_back(pair[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)]); });
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        if (static_cast<std::size_t>(std::popcount(domain)) != images.size()) continue;
        std::vector<int> domain_images;
        for_each_bit(domain, [&](int j) { domain_images.push_back(pair[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)]); });
        std::vector<int> sorted_domain = domain_images;
        std::sort(sorted_domain.begin(), sorted_domain.end());
        if (sorted_domain != images) continue;  // same size, so equal iff bijective

        LatticeArrangement restricted{a.hyperplanes[static_cast<std::size_t>(i)], images};
        std::vector<int> restricted_labels(images.size(), -1);
        std::size_t k = 0;
        for_each_bit(domain, [&](int j) {
          auto pos = std::lower_bound(images.begin(), images.end(), domain_images[k++]) - images.begin();
          restricted_labels[static_cast<std::size_t>(pos)] = labels[static_cast<std::size_t>(j)];
        });
        if (!inductively_factored_chain(restricted, canonical_labels(restricted_labels), false).accepted) continue;
        if (!self(self, mask & ~bit(i))) continue;
        choice[mask] = i;
        return true;
      }
      choice[mask] = -1;
      return false;
    };

    const Mask all = full_mask(m);
    IfacResult result;
    result.accepted = dfs(dfs, all);
    if (result.accepted && want_chain) {
      for (Mask mask = all; mask;) {
        int i = choice.at(mask);
        result.deletion_order.push_back(i);
        mask &= ~bit(i);
      }
    }
    if (!want_chain) ifac_memo_.emplace(std::move(key), result.accepted);
    return result;
  }

  /// Block sizes forced by chi(a, t) = t^(d - r) prod (t - b_i), if chi splits
  /// that way over positive integers. Sorted descending.
  [[nodiscard]] std::optional<std::vector<int>> factored_block_sizes(const LatticeArrangement& a) const {
    auto chi = characteristic_polynomial(a);
    const int r = rank(a);
    const int d = ambient_dim(a);
    for (int i = 0; i < d - r; ++i)
      if (chi[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    std::vector<std::int64_t> p(chi.begin() + (d - r), chi.end());
    std::vector<int> roots;
    for (std::int64_t b = 1; b <= static_cast<std::int64_t>(a.size()) && p.size() > 1;) {
      // synthetic division by (t - b)
      std::vector<std::int64_t> q(p.size() - 1);
      std::int64_t carry = 0;
      for (std::size_t k = p.size(); k-- > 1;) {
        carry = p[k] + carry * b;
        q[k - 1] = carry;
      }
      if (p[0] + carry * b == 0) {
        roots.push_back(static_cast<int>(b));
        p = std::move(q);
      } else {
        ++b;
      }
    }
    if (p.size() != 1 || p[0] != 1) return std::nullopt;
    std::sort(roots.rbegin(), roots.rend());
    return roots;
  }

  struct Candidate {
    std::vector<int> labels;
    std::vector<int> deletion_order;
  };

  /// First partition (in lexicographic order of its restricted-growth label
  /// vector) that is an inductive factorization of `a`.
  std::optional<Candidate> find_factorization(const LatticeArrangement& a, SearchMode mode) {
    check_size(a);
    std::optional<Candidate> found;
    auto try_candidate = [&](const std::vector<int>& labels) {
      auto res = inductively_factored_chain(a, labels, true);
      if (!res.accepted) return false;
      found = Candidate{labels, std::move(res.deletion_order)};
      return true;
    };
    if (mode == SearchMode::Exhaustive) {
      enumerate_all_partitions(a.size(), try_candidate);
    } else {
      auto sizes = factored_block_sizes(a);
      if (!sizes) return std::nullopt;
      enumerate_nice_partitions(a, *sizes, try_candidate);
    }
    return found;
  }

  /// Calls `visit(labels)` on every set partition of {0..m-1} in lexicographic
  /// order of restricted-growth strings until it returns true.
  template <class Visit>
  bool enumerate_all_partitions(std::size_t m, Visit&& visit) {
    std::vector<int> labels(m, 0);
    auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
      if (i == m) return visit(labels);
      tick();
      for (int l = 0; l <= used; ++l) {
        labels[i] = l;
        if (self(self, i + 1, std::max(used, l + 1))) return true;
      }
      return false;
    };
    return rec(rec, 0, 0);
  }

  /// Like enumerate_all_partitions, restricted to nice partitions whose sorted
  /// block sizes equal `sizes` (descending). Prefixes are pruned by partial
  /// independence and by flats whose hyperplanes are all assigned.
  template <class Visit>
  bool enumerate_nice_partitions(const LatticeArrangement& a, const std::vector<int>& sizes, Visit&& visit) {
    const std::size_t m = a.size();
    const int s = static_cast<int>(sizes.size());
    const int base_rank = lat_.rank(a.base);
    auto fl = flats(a);
    std::vector<std::vector<Mask>> closing(m);  // flats whose last hyperplane is i
    for (const auto& x : fl) {
      if (x.rank == 0) continue;
      closing[static_cast<std::size_t>(63 - std::countl_zero(x.members))].push_back(x.members);
    }
    std::vector<int> labels(m, -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_size;

    auto sizes_feasible = [&]() {
      std::vector<int> cur = block_size;
      std::sort(cur.rbegin(), cur.rend());
      for (std::size_t k = 0; k < cur.size(); ++k)
        if (cur[k] > sizes[k]) return false;
      return true;
    };
    // transversals through hyperplane i of block b, over the other nonempty blocks
    auto independent_with = [&](int i, int b) {
      std::vector<const std::vector<int>*> others;
      for (std::size_t c = 0; c < blocks.size(); ++c)
        if (static_cast<int>(c) != b && !blocks[c].empty()) others.push_back(&blocks[c]);
      std::sort(others.begin(), others.end(), [](auto x, auto y) { return x->size() < y->size(); });
      auto walk = [&](auto&& self, std::size_t depth, int flat) -> bool {
        if (depth == others.size()) return true;
        for (int j : *others[depth]) {
          int next = lat_.join(flat, a.hyperplanes[static_cast<std::size_t>(j)]);
          if (lat_.rank(next) != base_rank + static_cast<int>(depth) + 2) return false;
          if (!self(self, depth + 1, next)) return false;
        }
        return true;
      };
      return walk(walk, 0, a.hyperplanes[static_cast<std::size_t>(i)]);
    };

    auto rec = [&](auto&& self, std::size_t i) -> bool {
      if (i == m) {
        if (static_cast<int>(blocks.size()) != s) return false;
        return visit(labels);
      }
      tick();
      const int used = static_cast<int>(blocks.size());
      for (int l = 0; l <= used && l < s; ++l) {
        if (l == used) {
          blocks.emplace_back();
          block_size.push_back(0);
        }
        blocks[static_cast<std::size_t>(l)].push_back(static_cast<int>(i));
        ++block_size[static_cast<std::size_t>(l)];
        labels[i] = l;
        bool ok = sizes_feasible() && independent_with(static_cast<int>(i), l);
        if (ok)
          for (Mask x : closing[i])
            if (!has_singleton(labels, x)) {
              ok = false;
              break;
            }
        if (ok && self(self, i + 1)) return true;
        labels[i] = -1;
        blocks[static_cast<std::size_t>(l)].pop_back();
        --block_size[static_cast<std::size_t>(l)];
        if (l == used) {
          blocks.pop_back();
          block_size.pop_back();
        }
      }
      return false;
    };
    return rec(rec, 0);
  }

  // ---- inductive freeness -----------------------------------------------

  /// Membership in the inductively free class by addition-deletion, with the
  /// classical rank <= 2 base case. nullopt means the search was exhausted
  /// within this class; it does not mean "not free".
  std::optional<FreenessResult> inductively_free(const LatticeArrangement& a) {
    check_size(a);
    const int d = ambient_dim(a);
    const int r = rank(a);
    const int m = static_cast<int>(a.size());
    if (r <= 2) {
      FreenessResult res;
      res.exponents.assign(static_cast<std::size_t>(d - r), 0);
      if (r == 1) res.exponents.push_back(1);
      if (r == 2) {
        res.exponents.push_back(1);
        res.exponents.push_back(m - 1);
      }
      std::sort(res.exponents.begin(), res.exponents.end());
      return res;
    }
    std::vector<int> key{a.base};
    key.insert(key.end(), a.hyperplanes.begin(), a.hyperplanes.end());
    if (auto it = free_memo_.find(key); it != free_memo_.end()) return it->second;
    tick();

    // A free arrangement has chi(A, t) = prod (t - e) over its exponents.
    std::optional<std::vector<int>> target;
    if (chi_pruning_) {
      target = chi_exponents(a);
      if (!target) {
        free_memo_.emplace(std::move(key), std::nullopt);
        return std::nullopt;
      }
    }

    // Pivots with the smallest restriction first: they add the largest exponent.
    std::vector<std::pair<std::size_t, int>> order;
    std::vector<LatticeArrangement> restrictions;
    for (int i = 0; i < m; ++i) {
      restrictions.push_back(restrict_to(a, i));
      order.emplace_back(restrictions.back().size(), i);
    }
    std::sort(order.begin(), order.end());

    std::optional<FreenessResult> answer;
    for (auto [restricted_size, i] : order) {
      // The exponent added by this pivot is |A| - |A''|.
      if (target && !std::binary_search(target->begin(), target->end(), m - static_cast<int>(restricted_size)))
        continue;
      auto deleted = inductively_free(subset(a, full_mask(a.size()) & ~bit(i)));
      if (!deleted) continue;
      auto restricted = inductively_free(restrictions[static_cast<std::size_t>(i)]);
      if (!restricted) continue;
      // exp A'' must be a sub-multiset of exp A'; the leftover b becomes b + 1.
      if (!std::includes(deleted->exponents.begin(), deleted->exponents.end(), restricted->exponents.begin(),
                         restricted->exponents.end()))
        continue;
      std::vector<int> leftover;
      std::set_difference(deleted->exponents.begin(), deleted->exponents.end(), restricted->exponents.begin(),
                          restricted->exponents.end(), std::back_inserter(leftover));
      if (leftover.size() != 1) continue;
      FreenessResult res{restricted->exponents, i};
      res.exponents.push_back(leftover[0] + 1);
      std::sort(res.exponents.begin(), res.exponents.end());
      answer = std::move(res);
      break;
    }
    free_memo_.emplace(std::move(key), answer);
    return answer;
  }

  /// Sorted multiset {0^(d - r)} + roots, when chi(a, t) splits as
  /// t^(d - r) prod (t - b_i) with positive integers b_i.
  [[nodiscard]] std::optional<std::vector<int>> chi_exponents(const LatticeArrangement& a) const {
    auto roots = factored_block_sizes(a);
    if (!roots) return std::nullopt;
    std::vector<int> out(static_cast<std::size_t>(ambient_dim(a) - rank(a)), 0);
    out.insert(out.end(), roots->begin(), roots->end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Toggles the chi(A, t) necessary condition in the freeness search. Off, the
  /// search is the bare addition-deletion recursion.
  void set_chi_pruning(bool on) {
    if (on != chi_pruning_) free_memo_.clear();
    chi_pruning_ = on;
  }

  // ---- helpers ----------------------------------------------------------

  /// Relabels by order of first appearance.
  static std::vector<int> canonical_labels(const std::vector<int>& labels) {
    std::vector<int> map, out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto l = static_cast<std::size_t>(labels[i]);
      if (map.size() <= l) map.resize(l + 1, -1);
      if (map[l] < 0) map[l] = *std::max_element(map.begin(), map.end()) + 1;
      out[i] = map[l];
    }
    return out;
  }

  static std::vector<std::vector<int>> block_lists(const std::vector<int>& labels) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto l = static_cast<std::size_t>(labels[i]);
      if (blocks.size() <= l) blocks.resize(l + 1);
      blocks[l].push_back(static_cast<int>(i));
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }), blocks.end());
    return blocks;
  }

  static bool has_singleton(const std::vector<int>& labels, Mask members) {
    std::vector<int> count;
    for_each_bit(members, [&](int i) {
      auto l = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]);
      if (count.size() <= l) count.resize(l + 1, 0);
      ++count[l];
    });
    return std::find(count.begin(), count.end(), 1) != count.end();
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = v.size();
      for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  static std::vector<int> ifac_key(const LatticeArrangement& a, const std::vector<int>& labels) {
    std::vector<int> key{a.base};
    key.insert(key.end(), a.hyperplanes.begin(), a.hyperplanes.end());
    key.push_back(-1);
    auto canon = canonical_labels(labels);
    key.insert(key.end(), canon.begin(), canon.end());
    return key;
  }

  void check_size(const LatticeArrangement& a) const {
    if (a.size() > 64) throw std::length_error("searches support at most 64 hyperplanes");
  }

  void tick() {
    if (budget_ != 0 && ++nodes_ > budget_) throw BudgetExceeded(budget_);
    if (budget_ == 0) ++nodes_;
  }

  const IntersectionLattice& lat_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool chi_pruning_ = true;
  std::unordered_map<std::vector<int>, bool, KeyHash> ifac_memo_;
  std::unordered_map<std::vector<int>, std::optional<FreenessResult>, KeyHash> free_memo_;
};

}  // namespace hyperfac
