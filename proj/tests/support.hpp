#pragma once

// Random inputs and brute-force oracles. The oracles work from the
// definitions with explicit linear algebra and never touch the lattice or the
// search engine.

#include "hyperfac.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hftest {

using namespace hyperfac;
using QArr = Arrangement<RationalField>;

inline Rational rand_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

inline Cyclotomic rand_cyclotomic(std::mt19937_64& rng, const CyclotomicField& k, int span = 4) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < k.degree(); ++i) c.push_back(rand_rational(rng, span));
  return k.from_coefficients(std::move(c));
}

/// Random central arrangement over Q with small integer coefficients.
inline QArr random_arrangement(std::mt19937_64& rng, std::size_t dim, std::size_t max_n, int span = 2) {
  std::uniform_int_distribution<long> coef(-span, span);
  std::uniform_int_distribution<std::size_t> count(0, max_n);
  const std::size_t want = count(rng);
  std::vector<Functional<RationalField>> forms;
  std::set<Functional<RationalField>> seen;
  for (std::size_t tries = 0; forms.size() < want && tries < 20 * (want + 1); ++tries) {
    std::vector<Rational> v;
    bool zero = true;
    for (std::size_t i = 0; i < dim; ++i) {
      v.emplace_back(coef(rng));
      zero = zero && v.back().is_zero();
    }
    if (zero) continue;
    auto f = Functional<RationalField>::normalize(std::move(v));
    if (seen.insert(f).second) forms.push_back(f);
  }
  return QArr({}, dim, forms);
}

template <ExactField F>
int rank_of_indices(const Arrangement<F>& arr, const std::vector<int>& idx) {
  std::vector<Functional<F>> fs;
  for (int i : idx) fs.push_back(arr[static_cast<std::size_t>(i)]);
  return static_cast<int>(rank_of<F>(arr.field(), arr.dim(), fs));
}

/// {j : rank(S + j) = rank(S)}.
template <ExactField F>
std::vector<int> brute_closure(const Arrangement<F>& arr, const std::vector<int>& s) {
  const int r = rank_of_indices(arr, s);
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(arr.size()); ++j) {
    auto t = s;
    t.push_back(j);
    if (rank_of_indices(arr, t) == r) out.push_back(j);
  }
  return out;
}

inline std::vector<int> subset_of(unsigned mask, std::size_t n) {
  std::vector<int> s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) s.push_back(static_cast<int>(i));
  return s;
}

/// Closures of all 2^n subsets, with ranks.
template <ExactField F>
std::map<std::vector<int>, int> brute_flats(const Arrangement<F>& arr) {
  std::map<std::vector<int>, int> out;
  const std::size_t n = arr.size();
  for (unsigned m = 0; m < (1U << n); ++m) {
    auto s = subset_of(m, n);
    out.emplace(brute_closure(arr, s), rank_of_indices(arr, s));
  }
  return out;
}

/// Whitney's formula: sum over subsets S of (-1)^|S| t^(l - rank S).
template <ExactField F>
std::vector<std::int64_t> whitney_chi(const Arrangement<F>& arr) {
  std::vector<std::int64_t> c(arr.dim() + 1, 0);
  const std::size_t n = arr.size();
  for (unsigned m = 0; m < (1U << n); ++m) {
    auto s = subset_of(m, n);
    c[arr.dim() - static_cast<std::size_t>(rank_of_indices(arr, s))] += (s.size() % 2 ? -1 : 1);
  }
  return c;
}

/// t^(l-r) * prod (t - |block|), ascending coefficients.
inline std::vector<std::int64_t> product_poly(std::size_t dim, const Partition& pi) {
  std::vector<std::int64_t> c(dim - pi.size() + 1, 0);
  c.back() = 1;
  for (const auto& b : pi.blocks) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * static_cast<std::int64_t>(b.size());
    }
    c = next;
  }
  return c;
}

/// Independent and every closure of a nonempty subset induces a singleton block.
template <ExactField F>
bool brute_nice(const Arrangement<F>& arr, const Partition& pi) {
  const std::size_t s = pi.blocks.size();
  std::vector<std::size_t> pick(s, 0);
  for (;;) {
    std::vector<int> t;
    for (std::size_t b = 0; b < s; ++b) t.push_back(pi.blocks[b][pick[b]]);
    if (rank_of_indices(arr, t) != static_cast<int>(s)) return false;
    std::size_t b = 0;
    while (b < s && ++pick[b] == pi.blocks[b].size()) pick[b++] = 0;
    if (b == s) break;
  }
  for (const auto& [members, rank] : brute_flats(arr)) {
    if (members.empty()) continue;
    bool singleton = false;
    for (const auto& blk : pi.blocks) {
      std::size_t c = 0;
      for (int h : blk) c += std::binary_search(members.begin(), members.end(), h) ? 1 : 0;
      singleton = singleton || c == 1;
    }
    if (!singleton) return false;
  }
  return true;
}

template <ExactField F>
std::string pair_key(const Arrangement<F>& arr, const Partition& pi) {
  std::vector<std::vector<std::string>> blocks;
  for (const auto& b : pi.blocks) {
    std::vector<std::string> fs;
    for (int i : b) fs.push_back(arr[static_cast<std::size_t>(i)].str());
    std::sort(fs.begin(), fs.end());
    blocks.push_back(fs);
  }
  std::sort(blocks.begin(), blocks.end());
  std::string key = std::to_string(arr.dim()) + "#";
  for (const auto& b : blocks) {
    for (const auto& f : b) key += f + ",";
    key += "/";
  }
  return key;
}

/// The inductive-factorization class by its recursive definition: some block b
/// and H_0 in b with R : A \ b -> A'' bijective, (A', pi') and (A'', pi'') in
/// the class. Every restriction is computed from the subspace ker H_0.
template <ExactField F>
bool oracle_indfac(const Arrangement<F>& arr, const Partition& pi, std::map<std::string, bool>& memo) {
  if (arr.is_empty()) return pi.blocks.empty();
  auto key = pair_key(arr, pi);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = false;
  const auto labels = pi.block_of(arr.size());
  for (std::size_t b = 0; b < pi.blocks.size() && !ok; ++b) {
    for (int h0 : pi.blocks[b]) {
      auto ker = intersect_kernels<F>(arr.field(), arr.dim(), std::vector<Functional<F>>{arr[static_cast<std::size_t>(h0)]});
      auto res = restriction_to(arr, ker);
      // trace[i] = index in A'' of H_i restricted, -1 for H_0 itself
      std::set<int> image;
      bool injective = true;
      std::size_t domain = 0;
      for (int i = 0; i < static_cast<int>(arr.size()); ++i) {
        if (i == h0 || labels[static_cast<std::size_t>(i)] == static_cast<int>(b)) continue;
        ++domain;
        injective = image.insert(res.trace[static_cast<std::size_t>(i)]).second && injective;
      }
      if (!injective || image.size() != res.arrangement.size() || domain != image.size()) continue;

      std::vector<int> rest;
      for (int i = 0; i < static_cast<int>(arr.size()); ++i)
        if (i != h0) rest.push_back(i);
      auto deleted = arr.subarrangement(rest);
      Partition dpi;
      for (const auto& blk : pi.blocks) {
        std::vector<int> nb;
        for (int i : blk)
          if (i != h0) nb.push_back(static_cast<int>(std::lower_bound(rest.begin(), rest.end(), i) - rest.begin()));
        if (!nb.empty()) dpi.blocks.push_back(nb);
      }
      Partition rpi;
      for (std::size_t c = 0; c < pi.blocks.size(); ++c) {
        if (c == b) continue;
        std::vector<int> nb;
        for (int i : pi.blocks[c]) nb.push_back(res.trace[static_cast<std::size_t>(i)]);
        std::sort(nb.begin(), nb.end());
        if (!nb.empty()) rpi.blocks.push_back(nb);
      }
      if (oracle_indfac(deleted, dpi, memo) && oracle_indfac(res.arrangement, rpi, memo)) {
        ok = true;
        break;
      }
    }
  }
  memo.emplace(key, ok);
  return ok;
}

/// Inductive freeness by deletion and restriction, no shortcuts: exponents
/// of Phi_l are zeros, otherwise some H_0 with exp A'' inside exp A'.
template <ExactField F>
std::optional<std::vector<int>> oracle_indfree(const Arrangement<F>& arr,
                                               std::map<std::string, std::optional<std::vector<int>>>& memo) {
  if (arr.is_empty()) return std::vector<int>(arr.dim(), 0);
  auto key = pair_key(arr, Partition{{[&] {
                                  std::vector<int> all(arr.size());
                                  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
                                  return all;
                                }()}});
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::optional<std::vector<int>> out;
  for (int h0 = 0; h0 < static_cast<int>(arr.size()) && !out; ++h0) {
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(arr.size()); ++i)
      if (i != h0) rest.push_back(i);
    auto ker = intersect_kernels<F>(arr.field(), arr.dim(), std::vector<Functional<F>>{arr[static_cast<std::size_t>(h0)]});
    auto e1 = oracle_indfree(arr.subarrangement(rest), memo);
    if (!e1) continue;
    auto e2 = oracle_indfree(restriction_to(arr, ker).arrangement, memo);
    if (!e2) continue;
    // e1 = e2 + {b}; then exp A = e2 + {b + 1}
    std::vector<int> diff;
    std::set_difference(e1->begin(), e1->end(), e2->begin(), e2->end(), std::back_inserter(diff));
    if (diff.size() != 1) continue;
    auto e = *e2;
    e.push_back(diff[0] + 1);
    std::sort(e.begin(), e.end());
    out = e;
  }
  memo.emplace(key, out);
  return out;
}

template <ExactField F>
std::optional<std::vector<int>> oracle_indfree(const Arrangement<F>& arr) {
  std::map<std::string, std::optional<std::vector<int>>> memo;
  return oracle_indfree(arr, memo);
}

template <ExactField F>
bool oracle_indfac(const Arrangement<F>& arr, const Partition& pi) {
  std::map<std::string, bool> memo;
  return oracle_indfac(arr, pi, memo);
}

/// All set partitions of {0..n-1} as restricted-growth label vectors.
inline void all_partitions(std::size_t n, const std::function<void(const Partition&)>& visit) {
  std::vector<int> labels(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == n) {
      visit(Partition::from_labels(labels));
      return;
    }
    for (int l = 0; l <= used && l < static_cast<int>(n); ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(used, l + 1));
    }
  };
  if (n == 0) visit(Partition{});
  else rec(rec, 0, 0);
}

inline std::vector<std::vector<int>> sorted_blocks(const Partition& pi) {
  auto b = pi.blocks;
  for (auto& x : b) std::sort(x.begin(), x.end());
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace hftest
