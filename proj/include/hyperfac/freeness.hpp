#pragma once

#include "hyperfac/engine.hpp"
#include "hyperfac/geometry.hpp"
#include "hyperfac/lattice.hpp"

#include <optional>
#include <vector>

namespace hyperfac {

/// Exponents of a free arrangement, sorted ascending; one entry per ambient
/// dimension, summing to the number of hyperplanes.
struct ExponentMultiset {
  std::vector<int> values;
  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;
};

/// Inductive freeness by the addition-deletion recursion: some H_0 with A' and
/// A'' inductively free and exp A'' contained in exp A'. Central rank <= 2
/// arrangements are accepted directly with exponents {0, .., 0, 1, n - 1}
/// (a classical fact, not re-derived here).
///
/// A nullopt answer means the search found no inductive chain. It is not a
/// proof that A is not free.
inline std::optional<ExponentMultiset> is_inductively_free(SearchEngine& engine, const LatticeArrangement& a) {
  auto res = engine.inductively_free(a);
  if (!res) return std::nullopt;
  return ExponentMultiset{res->exponents};
}

template <ExactField F>
std::optional<ExponentMultiset> is_inductively_free(const Arrangement<F>& arr, std::uint64_t budget = 0) {
  auto lattice = build_lattice(arr);
  SearchEngine engine(lattice, budget);
  return is_inductively_free(engine, engine.root());
}

/// Inductive freeness passes to localizations; the verdict on A_X.
inline bool check_indfree_localization(SearchEngine& engine, int flat) {
  return is_inductively_free(engine, engine.localization(flat)).has_value();
}

template <ExactField F>
bool check_indfree_localization(const Arrangement<F>& arr, const Flat& x) {
  return is_inductively_free(localization(arr, x)).has_value();
}

}  // namespace hyperfac
