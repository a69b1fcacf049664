#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfac {

/// Ordered list of disjoint nonempty blocks of hyperplane indices.
struct Partition {
  std::vector<std::vector<int>> blocks;

  [[nodiscard]] std::size_t size() const { return blocks.size(); }
  [[nodiscard]] bool empty() const { return blocks.empty(); }

  /// Throws std::invalid_argument unless the blocks partition {0, ..., n-1}.
  void validate(std::size_t n) const {
    std::vector<int> seen(n, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw std::invalid_argument("block " + std::to_string(b) + " is empty");
      for (int i : blocks[b]) {
        if (i < 0 || static_cast<std::size_t>(i) >= n)
          throw std::invalid_argument("block " + std::to_string(b) + " names hyperplane " + std::to_string(i) +
                                      " outside 0.." + std::to_string(static_cast<long>(n) - 1));
        if (seen[static_cast<std::size_t>(i)]++)
          throw std::invalid_argument("hyperplane " + std::to_string(i) + " appears in more than one block");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) throw std::invalid_argument("hyperplane " + std::to_string(i) + " is not covered by the partition");
  }

  /// block_of[i] = index of the block containing i.
  [[nodiscard]] std::vector<int> block_of(std::size_t n) const {
    std::vector<int> out(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int i : blocks[b]) out[static_cast<std::size_t>(i)] = static_cast<int>(b);
    return out;
  }

  /// Blocks from labels; block order is order of first appearance.
  static Partition from_labels(std::span<const int> labels) {
    Partition p;
    std::vector<int> slot;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto l = static_cast<std::size_t>(labels[i]);
      if (slot.size() <= l) slot.resize(l + 1, -1);
      if (slot[l] < 0) {
        slot[l] = static_cast<int>(p.blocks.size());
        p.blocks.emplace_back();
      }
      p.blocks[static_cast<std::size_t>(slot[l])].push_back(static_cast<int>(i));
    }
    return p;
  }

  [[nodiscard]] std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// pi_X: nonempty blocks pi_i intersected with `target`, original block order,
/// original indices. `target` need not be sorted.
inline Partition induced_partition(const Partition& pi, std::span<const int> target) {
  std::vector<int> sorted(target.begin(), target.end());
  std::sort(sorted.begin(), sorted.end());
  Partition out;
  for (const auto& block : pi.blocks) {
    std::vector<int> kept;
    for (int i : block)
      if (std::binary_search(sorted.begin(), sorted.end(), i)) kept.push_back(i);
    if (!kept.empty()) out.blocks.push_back(std::move(kept));
  }
  return out;
}

/// Renames indices through `new_index` (old -> new, -1 drops the element);
/// empty blocks are dropped.
inline Partition reindexed(const Partition& pi, std::span<const int> new_index) {
  Partition out;
  for (const auto& block : pi.blocks) {
    std::vector<int> b;
    for (int i : block) {
      int j = new_index[static_cast<std::size_t>(i)];
      if (j >= 0) b.push_back(j);
    }
    if (!b.empty()) out.blocks.push_back(std::move(b));
  }
  return out;
}

/// The induced partition on the sub-arrangement with hyperplanes `target`
/// (sorted, in input order), expressed in that sub-arrangement's own indices.
inline Partition induced_local_partition(const Partition& pi, std::span<const int> target, std::size_t n) {
  std::vector<int> map(n, -1);
  for (std::size_t k = 0; k < target.size(); ++k) map[static_cast<std::size_t>(target[k])] = static_cast<int>(k);
  return reindexed(pi, map);
}

}  // namespace hyperfac
