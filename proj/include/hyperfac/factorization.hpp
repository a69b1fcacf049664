#pragma once

#include "hyperfac/engine.hpp"
#include "hyperfac/geometry.hpp"
#include "hyperfac/lattice.hpp"
#include "hyperfac/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperfac {

// ---------------------------------------------------------------------------
// Independence and niceness

struct IndependenceResult {
  bool independent = true;
  std::vector<int> dependent_transversal;  // one hyperplane per block, when dependent
};

/// Every transversal of pi has full rank. Ranks are computed directly with
/// exact elimination (no lattice); blocks are walked smallest first.
template <ExactField F>
IndependenceResult is_independent(const Arrangement<F>& arr, const Partition& pi) {
  pi.validate(arr.size());
  std::vector<const std::vector<int>*> blocks;
  for (const auto& b : pi.blocks) blocks.push_back(&b);
  std::stable_sort(blocks.begin(), blocks.end(), [](auto x, auto y) { return x->size() < y->size(); });
  IndependenceResult out;
  std::vector<int> chosen;
  auto walk = [&](auto&& self, std::size_t depth, const RowEchelon<F>& ech) -> bool {
    if (depth == blocks.size()) return true;
    for (int i : *blocks[depth]) {
      RowEchelon<F> next = ech;
      chosen.push_back(i);
      if (!next.insert(arr[static_cast<std::size_t>(i)].coefficients())) {
        out.independent = false;
        out.dependent_transversal = chosen;
        return false;
      }
      if (!self(self, depth + 1, next)) return false;
      chosen.pop_back();
    }
    return true;
  };
  walk(walk, 0, RowEchelon<F>(arr.field(), arr.dim()));
  return out;
}

struct NiceResult {
  bool nice = true;
  std::vector<int> dependent_transversal;
  /// Hyperplane indices of a flat X whose induced partition has no singleton.
  std::optional<std::vector<int>> bad_flat;
};

/// Labels for a partition of the root arrangement (label = block index).
inline std::vector<int> labels_of(const Partition& pi, std::size_t n) { return pi.block_of(n); }

/// pi is independent and every induced partition pi_X (X != V) has a singleton block.
inline NiceResult is_nice(const SearchEngine& engine, const Partition& pi) {
  const auto root = engine.root();
  pi.validate(root.size());
  auto check = engine.nice(root, labels_of(pi, root.size()));
  NiceResult out;
  out.nice = check.nice;
  out.dependent_transversal = check.dependent_transversal;
  if (check.bad_flat) {
    std::vector<int> members;
    for_each_bit(check.bad_flat->members, [&](int i) { members.push_back(i); });
    out.bad_flat = members;
  }
  return out;
}

template <ExactField F>
NiceResult is_nice(const Arrangement<F>& arr, const Partition& pi) {
  auto lattice = build_lattice(arr);
  SearchEngine engine(lattice);
  return is_nice(engine, pi);
}

/// Nice partitions stay nice after localizing: (A_X, pi_X) is nice whenever
/// (A, pi) is. Returns the verdict on (A_X, pi_X).
template <ExactField F>
bool check_nice_localization(const Arrangement<F>& arr, const Partition& pi, const Flat& x) {
  auto idx = x.members.elements();
  auto local = localization(arr, x);
  return is_nice(local, induced_local_partition(pi, idx, arr.size())).nice;
}

// ---------------------------------------------------------------------------
// Triples and the restriction map

template <ExactField F>
struct Triple {
  Arrangement<F> full;
  Arrangement<F> deleted;
  Arrangement<F> restricted;
  int pivot;
  /// trace[i] = index in `restricted` of H_i meet H_0; -1 for the pivot.
  std::vector<int> trace;
};

/// (A, A', A'') for H_0 = A[pivot]; A'' lives in H_0 with its canonical basis.
template <ExactField F>
Triple<F> make_triple(const Arrangement<F>& arr, int pivot) {
  if (pivot < 0 || static_cast<std::size_t>(pivot) >= arr.size()) throw std::out_of_range("pivot out of range");
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(arr.size()); ++i)
    if (i != pivot) rest.push_back(i);
  std::vector<Functional<F>> h0{arr[static_cast<std::size_t>(pivot)]};
  auto space = intersect_kernels<F>(arr.field(), arr.dim(), h0);
  auto res = restriction_to(arr, space);
  return Triple<F>{arr, arr.subarrangement(rest), std::move(res.arrangement), pivot, std::move(res.trace)};
}

template <ExactField F>
struct RestrictionMap {
  Triple<F> triple;
  int pivot_block = -1;
  /// image[i] = R(H_i) for H_i outside the pivot block; -1 elsewhere.
  std::vector<int> image;
  bool bijective = false;
  /// pi'' = (R(pi_i)) over the non-pivot blocks, in A'' indices; a partition
  /// of A'' exactly when R is bijective.
  Partition restricted_partition;
  /// pi' on A' indices.
  Partition deleted_partition;
};

/// R = R_{pi, H_0}: A \ pi_1 -> A'', H -> H meet H_0, where pi_1 is the block
/// containing the pivot.
template <ExactField F>
RestrictionMap<F> restriction_map(const Arrangement<F>& arr, const Partition& pi, int pivot) {
  pi.validate(arr.size());
  auto labels = pi.block_of(arr.size());
  RestrictionMap<F> out{make_triple(arr, pivot), labels.at(static_cast<std::size_t>(pivot)), {}, false, {}, {}};
  const auto& trace = out.triple.trace;
  out.image.assign(arr.size(), -1);
  std::vector<int> hits(out.triple.restricted.size(), 0);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (labels[i] == out.pivot_block) continue;
    out.image[i] = trace[i];
    ++hits[static_cast<std::size_t>(trace[i])];
  }
  out.bijective = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (static_cast<int>(b) == out.pivot_block) continue;
    std::vector<int> img;
    for (int i : pi.blocks[b]) img.push_back(trace[static_cast<std::size_t>(i)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    out.restricted_partition.blocks.push_back(std::move(img));
  }
  std::vector<int> shift(arr.size(), -1);
  for (std::size_t i = 0, k = 0; i < arr.size(); ++i)
    if (static_cast<int>(i) != pivot) shift[i] = static_cast<int>(k++);
  out.deleted_partition = reindexed(pi, shift);
  return out;
}

struct AdditionDeletionReport {
  bool nice_full = false;        // (i)   pi nice for A
  bool nice_deleted = false;     // (ii)  pi' nice for A'
  bool bijective = false;
  bool nice_restricted = false;  // pi'' nice for A'' (only meaningful when bijective)
  [[nodiscard]] bool third() const { return bijective && nice_restricted; }  // (iii)
  /// No two of (i), (ii), (iii) hold while the remaining one fails.
  [[nodiscard]] bool consistent() const {
    int holds = int(nice_full) + int(nice_deleted) + int(third());
    return holds != 2;
  }
};

/// Evaluates the three statements of the addition-deletion theorem for nice
/// partitions independently: each arrangement gets its own lattice.
template <ExactField F>
AdditionDeletionReport check_addition_deletion(const Arrangement<F>& arr, const Partition& pi, int pivot) {
  auto rm = restriction_map(arr, pi, pivot);
  AdditionDeletionReport rep;
  rep.nice_full = is_nice(arr, pi).nice;
  rep.nice_deleted = is_nice(rm.triple.deleted, rm.deleted_partition).nice;
  rep.bijective = rm.bijective;
  if (rm.bijective) rep.nice_restricted = is_nice(rm.triple.restricted, rm.restricted_partition).nice;
  return rep;
}

// ---------------------------------------------------------------------------
// Certificates

struct CertificateStep {
  int pivot = 0;        // hyperplane added at this step
  int pivot_block = 0;  // index in the certificate's partition of the block containing it
  bool bijective = false;
  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// Induction of factorizations: adding hyperplanes in `order` builds (A, pi)
/// from the empty arrangement, each step an addition with bijective
/// restriction map and inductively factored restriction.
struct Certificate {
  std::vector<int> order;
  Partition partition;
  std::vector<CertificateStep> steps;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Certificate from a deletion order found by the search.
inline Certificate certificate_from_deletions(const Partition& pi, std::size_t n, const std::vector<int>& deletion_order) {
  Certificate cert;
  cert.partition = pi;
  cert.order.assign(deletion_order.rbegin(), deletion_order.rend());
  auto labels = pi.block_of(n);
  for (int h : cert.order) cert.steps.push_back(CertificateStep{h, labels[static_cast<std::size_t>(h)], true});
  return cert;
}

struct SearchOptions {
  SearchMode mode = SearchMode::Pruned;
  std::uint64_t budget = 0;  // search nodes, 0 = unlimited
};

/// Certificate for (A, pi) if pi is an inductive factorization of A.
inline std::optional<Certificate> is_inductively_factored(SearchEngine& engine, const Partition& pi) {
  const auto root = engine.root();
  pi.validate(root.size());
  auto res = engine.inductively_factored_chain(root, labels_of(pi, root.size()), true);
  if (!res.accepted) return std::nullopt;
  return certificate_from_deletions(pi, root.size(), res.deletion_order);
}

template <ExactField F>
std::optional<Certificate> is_inductively_factored(const Arrangement<F>& arr, const Partition& pi,
                                                   std::uint64_t budget = 0) {
  auto lattice = build_lattice(arr);
  SearchEngine engine(lattice, budget);
  return is_inductively_factored(engine, pi);
}

struct Factorization {
  Partition partition;
  Certificate certificate;
};

inline std::optional<Factorization> find_inductive_factorization(SearchEngine& engine, SearchMode mode) {
  const auto root = engine.root();
  auto cand = engine.find_factorization(root, mode);
  if (!cand) return std::nullopt;
  auto pi = Partition::from_labels(cand->labels);
  return Factorization{pi, certificate_from_deletions(pi, root.size(), cand->deletion_order)};
}

/// First inductive factorization in lexicographic order of block-assignment
/// vectors. Pruned mode only visits nice partitions with block sizes read off
/// chi(A, t); exhaustive mode tries every set partition.
template <ExactField F>
std::optional<Factorization> find_inductive_factorization(const Arrangement<F>& arr, SearchOptions opts = {}) {
  auto lattice = build_lattice(arr);
  SearchEngine engine(lattice, opts.budget);
  return find_inductive_factorization(engine, opts.mode);
}

/// {0^(l - r)} together with the block sizes, sorted.
inline std::vector<int> exponents_from_factorization(const Partition& pi, std::size_t dim) {
  std::vector<int> out(dim - pi.size(), 0);
  for (const auto& b : pi.blocks) out.push_back(static_cast<int>(b.size()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Replay

struct VerifyResult {
  bool ok = true;
  int failing_step = -1;  // index into steps; -1 for structural problems or success
  std::string reason;
};

/// Memo for restricted sub-problems met while replaying certificates, keyed by
/// the canonical functionals of (A'', pi''). Safe to share between threads;
/// concurrent misses on one key compute the same value.
class VerifyCache {
 public:
  template <ExactField F>
  bool inductively_factored(const Arrangement<F>& arr, const Partition& pi) {
    std::vector<std::vector<std::string>> blocks;
    for (const auto& b : pi.blocks) {
      std::vector<std::string> forms;
      for (int i : b) forms.push_back(arr[static_cast<std::size_t>(i)].str());
      std::sort(forms.begin(), forms.end());
      blocks.push_back(std::move(forms));
    }
    std::sort(blocks.begin(), blocks.end());
    std::string key = std::to_string(arr.dim()) + "|";
    for (const auto& b : blocks) {
      for (const auto& f : b) key += f + ";";
      key += "|";
    }
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    bool ok = arr.is_empty() || is_inductively_factored(arr, pi).has_value();
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), ok);
    return ok;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, bool> memo_;
};

/// Replays the certificate with explicit geometry: at step i, A_i is the first
/// i hyperplanes of the order, the restriction map at the added hyperplane must
/// be bijective, and (A_i'', pi_i'') must be inductively factored.
template <ExactField F>
VerifyResult verify_certificate(const Arrangement<F>& arr, const Partition& pi, const Certificate& cert,
                                VerifyCache* cache = nullptr) {
  VerifyCache local_cache;
  if (!cache) cache = &local_cache;
  const std::size_t n = arr.size();
  auto fail = [](int step, std::string why) { return VerifyResult{false, step, std::move(why)}; };
  try {
    pi.validate(n);
  } catch (const std::invalid_argument& e) {
    return fail(-1, std::string("partition invalid: ") + e.what());
  }
  if (!(cert.partition == pi)) return fail(-1, "certificate partition differs from the given partition");
  if (cert.order.size() != n) return fail(-1, "order has " + std::to_string(cert.order.size()) + " entries, expected " + std::to_string(n));
  if (cert.steps.size() != n) return fail(-1, "certificate has " + std::to_string(cert.steps.size()) + " steps, expected " + std::to_string(n));
  {
    std::vector<int> sorted = cert.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != static_cast<int>(i)) return fail(-1, "order is not a permutation of the hyperplanes");
  }
  const auto labels = pi.block_of(n);
  std::vector<int> prefix;
  for (std::size_t step = 0; step < n; ++step) {
    const int h = cert.order[step];
    const auto& rec = cert.steps[step];
    const int s = static_cast<int>(step);
    if (rec.pivot != h) return fail(s, "step pivot does not match the order");
    if (rec.pivot_block != labels[static_cast<std::size_t>(h)]) return fail(s, "pivot block does not contain the pivot");
    prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), h), h);
    auto sub = arr.subarrangement(prefix);
    auto sub_pi = induced_local_partition(pi, prefix, n);
    const int local_pivot = static_cast<int>(std::lower_bound(prefix.begin(), prefix.end(), h) - prefix.begin());
    auto rm = restriction_map(sub, sub_pi, local_pivot);
    if (!rm.bijective) return fail(s, "restriction map is not bijective");
    if (!rec.bijective) return fail(s, "step is not marked bijective");
    if (!cache->inductively_factored(rm.triple.restricted, rm.restricted_partition))
      return fail(s, "restricted pair is not inductively factored");
  }
  return {};
}

/// Whether to replay the input certificate before localizing it.
enum class InputCheck { Verify, Trusted };

class InvalidCertificate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Certificate for (A_X, pi_X) obtained by localizing every member of the
/// induction chain of `cert` at X: keep the order's hyperplanes that lie in
/// A_X, drop the repeated arrangements, reindex to A_X. Each kept step adds its
/// hyperplane to the previous localized arrangement, its pivot block is the
/// block of pi_X containing it, and the bijectivity flag is recomputed.
template <ExactField F>
Certificate localize_certificate(const Arrangement<F>& arr, const Partition& pi, const Certificate& cert, const Flat& x,
                                 InputCheck check = InputCheck::Verify, VerifyCache* cache = nullptr) {
  if (check == InputCheck::Verify) {
    auto v = verify_certificate(arr, pi, cert, cache);
    if (!v.ok) throw InvalidCertificate("invalid input certificate: " + v.reason);
  }
  const auto members = x.members.elements();
  std::vector<int> local(arr.size(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) local[static_cast<std::size_t>(members[k])] = static_cast<int>(k);
  auto localized_arr = arr.subarrangement(members);

  Certificate out;
  out.partition = reindexed(pi, local);
  const auto labels = out.partition.block_of(members.size());
  std::vector<int> prefix;
  for (int h : cert.order) {
    const int lh = local[static_cast<std::size_t>(h)];
    if (lh < 0) continue;
    out.order.push_back(lh);
    prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), lh), lh);
    auto sub = localized_arr.subarrangement(prefix);
    auto sub_pi = induced_local_partition(out.partition, prefix, members.size());
    const int local_pivot = static_cast<int>(std::lower_bound(prefix.begin(), prefix.end(), lh) - prefix.begin());
    bool bij = restriction_map(sub, sub_pi, local_pivot).bijective;
    out.steps.push_back(CertificateStep{lh, labels[static_cast<std::size_t>(lh)], bij});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hereditary variant

struct HereditaryResult {
  bool hereditary = true;
  std::optional<std::vector<int>> failing_flat;  // members of Y with A^Y not inductively factored
};

/// Every restriction A^Y (Y in L(A)) is inductively factored. Restrictions are
/// taken inside the lattice, whose interval [Y, T] is L(A^Y).
inline HereditaryResult is_hereditarily_inductively_factored(SearchEngine& engine, SearchMode mode = SearchMode::Pruned) {
  const auto& lat = engine.lattice();
  for (int y = 0; y < static_cast<int>(lat.size()); ++y) {
    auto ay = engine.restriction(y);
    if (ay.empty()) continue;
    if (!engine.find_factorization(ay, mode)) return {false, lat.members(y).elements()};
  }
  return {};
}

template <ExactField F>
HereditaryResult is_hereditarily_inductively_factored(const Arrangement<F>& arr, SearchOptions opts = {}) {
  auto lattice = build_lattice(arr);
  SearchEngine engine(lattice, opts.budget);
  return is_hereditarily_inductively_factored(engine, opts.mode);
}

}  // namespace hyperfac
