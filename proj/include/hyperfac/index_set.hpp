#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hyperfac {

/// Dynamic bitset over hyperplane indices. Comparison is lexicographic on the
/// sorted element lists, which is the deterministic order used for flats.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}
  IndexSet(std::size_t universe, std::initializer_list<int> elems) : IndexSet(universe) {
    for (int e : elems) insert(e);
  }
  template <class Range>
  static IndexSet of(std::size_t universe, const Range& elems) {
    IndexSet s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  [[nodiscard]] std::size_t universe_words() const { return words_.size(); }

  void insert(int i) { words_[static_cast<std::size_t>(i) >> 6] |= bit(i); }
  void erase(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~bit(i); }
  [[nodiscard]] bool contains(int i) const {
    auto w = static_cast<std::size_t>(i) >> 6;
    return w < words_.size() && (words_[w] & bit(i)) != 0;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  [[nodiscard]] bool is_subset_of(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.word(i)) return false;
    return true;
  }

  IndexSet& operator|=(const IndexSet& o) {
    grow(o.words_.size());
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

  /// Elements in increasing order.
  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.word(i) != b.word(i)) return false;
    return true;
  }

  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    auto x = a.elements(), y = b.elements();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    std::size_t n = words_.size();
    while (n > 0 && words_[n - 1] == 0) --n;
    for (std::size_t i = 0; i < n; ++i) h ^= std::hash<std::uint64_t>{}(words_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (static_cast<unsigned>(i) & 63U); }
  [[nodiscard]] std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
  void grow(std::size_t n) {
    if (words_.size() < n) words_.resize(n, 0);
  }

  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace hyperfac
