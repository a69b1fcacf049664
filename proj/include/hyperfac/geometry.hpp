#pragma once

#include "hyperfac/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperfac {

/// Raised for malformed geometric input (zero functionals, duplicate
/// hyperplanes, dimension mismatches).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear form on K^dim, scaled so its first nonzero coefficient is 1. Two
/// functionals cut out the same hyperplane iff they compare equal.
template <ExactField F>
class Functional {
 public:
  using Element = typename F::Element;

  /// Rescales `coeffs` to leading coefficient 1. Throws on the zero vector.
  static Functional normalize(std::vector<Element> coeffs) {
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Element& c) { return !c.is_zero(); });
    if (lead == coeffs.end()) throw GeometryError("not a hyperplane: all coefficients are zero");
    if (!lead->is_one()) {
      Element inv = lead->inverse();
      for (auto it = lead; it != coeffs.end(); ++it) *it = *it * inv;
    }
    return Functional(std::move(coeffs));
  }

  [[nodiscard]] std::size_t dim() const { return coeffs_.size(); }
  [[nodiscard]] const std::vector<Element>& coefficients() const { return coeffs_; }
  [[nodiscard]] const Element& operator[](std::size_t i) const { return coeffs_[i]; }

  [[nodiscard]] Element evaluate(std::span<const Element> v) const {
    Element acc = coeffs_.at(0) - coeffs_.at(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero() && !v[i].is_zero()) acc = acc + coeffs_[i] * v[i];
    return acc;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += coeffs_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const Functional& a, const Functional& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Functional& a, const Functional& b) { return a.coeffs_ < b.coeffs_; }

 private:
  explicit Functional(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<Element> coeffs_;
};

/// Incrementally maintained reduced row echelon form. Pivot choice is the first
/// nonzero column, rows kept sorted by pivot, so the form is canonical.
template <ExactField F>
class RowEchelon {
 public:
  using Element = typename F::Element;
  using Row = std::vector<Element>;

  RowEchelon(F field, std::size_t width) : field_(std::move(field)), width_(width) {}

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] const F& field() const { return field_; }

  /// Reduces `v` against the stored rows in place; true iff it becomes zero,
  /// i.e. v lies in the row space.
  bool reduce(Row& v) const {
    bool zero = true;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Element c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = pivots_[r]; j < width_; ++j)
        if (!rows_[r][j].is_zero()) v[j] = v[j] - c * rows_[r][j];
    }
    for (const auto& x : v)
      if (!x.is_zero()) zero = false;
    return zero;
  }

  [[nodiscard]] bool contains(Row v) const { return reduce(v); }

  /// Adds `v` to the row space; returns false (no change) if it was dependent.
  bool insert(Row v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    if (!v[p].is_one()) {
      Element inv = v[p].inverse();
      for (std::size_t j = p; j < width_; ++j) v[j] = v[j] * inv;
    }
    for (auto& row : rows_) {
      const Element c = row[p];
      if (c.is_zero()) continue;
      for (std::size_t j = p; j < width_; ++j)
        if (!v[j].is_zero()) row[j] = row[j] - c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto at = static_cast<std::ptrdiff_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  /// Basis of {x : row . x = 0 for every row}, itself returned in reduced echelon form.
  [[nodiscard]] std::vector<Row> null_space() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    RowEchelon kernel(field_, width_);
    for (std::size_t f = 0; f < width_; ++f) {
      if (is_pivot[f]) continue;
      Row v(width_, field_.zero());
      v[f] = field_.one();
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
      kernel.insert(std::move(v));
    }
    return kernel.rows();
  }

 private:
  F field_;
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// Linear subspace of K^ambient_dim given by its canonical (reduced echelon) basis.
template <ExactField F>
class Subspace {
 public:
  using Element = typename F::Element;
  using Row = std::vector<Element>;

  Subspace(F field, std::size_t ambient_dim, std::vector<Row> spanning) : field_(std::move(field)), ambient_(ambient_dim) {
    RowEchelon<F> ech(field_, ambient_);
    for (auto& v : spanning) {
      if (v.size() != ambient_) throw GeometryError("subspace vector has wrong length");
      ech.insert(std::move(v));
    }
    basis_ = ech.rows();
    pivots_ = ech.pivots();
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Row>& basis() const { return basis_; }

  /// Coordinates of `v` (assumed to lie in the subspace) in the stored basis.
  /// With a reduced echelon basis these are just the pivot entries.
  [[nodiscard]] Row coordinates(const Row& v) const {
    Row c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  [[nodiscard]] bool contains(const Row& v) const {
    Row copy = v;
    RowEchelon<F> ech(field_, ambient_);
    for (const auto& b : basis_) ech.insert(b);
    return ech.reduce(copy);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Row> basis_;
  std::vector<std::size_t> pivots_;
};

/// Central arrangement: an ordered list of distinct canonical functionals on
/// K^dim. The input order is the tie-breaking order for everything downstream.
template <ExactField F>
class Arrangement {
 public:
  using Element = typename F::Element;
  using Form = Functional<F>;

  Arrangement(F field, std::size_t dim, std::vector<Form> hyperplanes)
      : field_(std::move(field)), dim_(dim), hyperplanes_(std::move(hyperplanes)) {
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
      if (hyperplanes_[i].dim() != dim_)
        throw GeometryError("hyperplane " + std::to_string(i) + " has " + std::to_string(hyperplanes_[i].dim()) +
                            " coefficients, expected " + std::to_string(dim_));
      for (std::size_t j = 0; j < i; ++j)
        if (hyperplanes_[j] == hyperplanes_[i])
          throw GeometryError("hyperplanes " + std::to_string(j) + " and " + std::to_string(i) +
                              " define the same hyperplane");
    }
  }

  /// Normalizes raw coefficient rows; rejects zero rows and duplicates.
  static Arrangement from_rows(F field, std::size_t dim, std::vector<std::vector<Element>> rows) {
    std::vector<Form> forms;
    forms.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      try {
        forms.push_back(Form::normalize(std::move(rows[i])));
      } catch (const GeometryError& e) {
        throw GeometryError("hyperplane " + std::to_string(i) + ": " + e.what());
      }
    }
    return Arrangement(std::move(field), dim, std::move(forms));
  }

  /// The empty arrangement in dimension `dim`.
  static Arrangement empty(F field, std::size_t dim) { return Arrangement(std::move(field), dim, {}); }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return hyperplanes_.size(); }
  [[nodiscard]] bool is_empty() const { return hyperplanes_.empty(); }
  [[nodiscard]] const std::vector<Form>& hyperplanes() const { return hyperplanes_; }
  [[nodiscard]] const Form& operator[](std::size_t i) const { return hyperplanes_[i]; }

  /// Hyperplanes at `indices`, in the order given.
  [[nodiscard]] Arrangement subarrangement(std::span<const int> indices) const {
    std::vector<Form> forms;
    forms.reserve(indices.size());
    for (int i : indices) forms.push_back(hyperplanes_.at(static_cast<std::size_t>(i)));
    return Arrangement(field_, dim_, std::move(forms));
  }

  /// Sorted list of functionals, for order-insensitive comparison.
  [[nodiscard]] std::vector<Form> canonical_set() const {
    auto v = hyperplanes_;
    std::sort(v.begin(), v.end());
    return v;
  }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.hyperplanes_ == b.hyperplanes_;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<Form> hyperplanes_;
};

/// Row rank of a family of functionals over the exact field.
template <ExactField F>
std::size_t rank_of(const F& field, std::size_t dim, std::span<const Functional<F>> functionals) {
  RowEchelon<F> ech(field, dim);
  for (const auto& f : functionals) {
    ech.insert(f.coefficients());
    if (ech.rank() == dim) break;
  }
  return ech.rank();
}

template <ExactField F>
std::size_t rank_of(const Arrangement<F>& arr, std::span<const int> indices) {
  RowEchelon<F> ech(arr.field(), arr.dim());
  for (int i : indices) ech.insert(arr[static_cast<std::size_t>(i)].coefficients());
  return ech.rank();
}

/// Common kernel of the functionals, as a canonical subspace.
template <ExactField F>
Subspace<F> intersect_kernels(const F& field, std::size_t dim, std::span<const Functional<F>> functionals) {
  RowEchelon<F> ech(field, dim);
  for (const auto& f : functionals) ech.insert(f.coefficients());
  return Subspace<F>(field, dim, ech.null_space());
}

/// f restricted to X, written in the coordinates of X's canonical basis.
/// std::nullopt means f vanishes identically on X.
template <ExactField F>
std::optional<Functional<F>> restrict_functional(const Functional<F>& f, const Subspace<F>& x) {
  std::vector<typename F::Element> values;
  values.reserve(x.dim());
  bool all_zero = true;
  for (const auto& b : x.basis()) {
    values.push_back(f.evaluate(b));
    if (!values.back().is_zero()) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  return Functional<F>::normalize(std::move(values));
}

}  // namespace hyperfac
