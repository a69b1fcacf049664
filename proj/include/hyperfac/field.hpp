#pragma once

#include "hyperfac/cyclotomic.hpp"
#include "hyperfac/rational.hpp"

#include <concepts>
#include <string>

namespace hyperfac {

/// Q itself. Stateless; arrangements over Q skip all cyclotomic machinery.
struct RationalField {
  using Element = Rational;

  [[nodiscard]] Rational zero() const { return Rational(0); }
  [[nodiscard]] Rational one() const { return Rational(1); }
  [[nodiscard]] Rational from_integer(long v) const { return Rational(v); }
  [[nodiscard]] Rational from_rational(const Rational& q) const { return q; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Coefficient domain of an arrangement: exact, with a context object that
/// manufactures constants. All scalars of one arrangement share one context.
template <class F>
concept ExactField = requires(const F& field, const typename F::Element& a, const typename F::Element& b, long n) {
  { field.zero() } -> std::same_as<typename F::Element>;
  { field.one() } -> std::same_as<typename F::Element>;
  { field.from_integer(n) } -> std::same_as<typename F::Element>;
  { a + b } -> std::same_as<typename F::Element>;
  { a - b } -> std::same_as<typename F::Element>;
  { a * b } -> std::same_as<typename F::Element>;
  { a / b } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a.inverse() } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<CyclotomicField>);

}  // namespace hyperfac
