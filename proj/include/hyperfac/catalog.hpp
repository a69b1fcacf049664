#pragma once

#include "hyperfac/field.hpp"
#include "hyperfac/geometry.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfac {

/// ker x_1, ..., ker x_l over Q.
inline Arrangement<RationalField> boolean_arrangement(std::size_t l) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Rational> v(l);
    v[i] = Rational(1);
    rows.push_back(std::move(v));
  }
  return Arrangement<RationalField>::from_rows({}, l, std::move(rows));
}

/// ker(x_i - x_j), i < j, over Q, in lexicographic (i, j) order.
inline Arrangement<RationalField> braid_arrangement(std::size_t l) {
  if (l < 1) throw std::invalid_argument("braid arrangement needs l >= 1");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      std::vector<Rational> v(l);
      v[i] = Rational(1);
      v[j] = Rational(-1);
      rows.push_back(std::move(v));
    }
  return Arrangement<RationalField>::from_rows({}, l, std::move(rows));
}

/// A^k_l(r) over Q(zeta_r): coordinate hyperplanes x_1..x_k, then
/// ker(x_i - zeta^n x_j) for i < j, 0 <= n < r, lexicographic in (i, j, n).
/// k = l gives A(G(r,1,l)), k = 0 gives A(G(r,r,l)).
inline Arrangement<CyclotomicField> intermediate_arrangement(std::size_t l, int r, std::size_t k) {
  if (l < 2 || r < 2 || k > l)
    throw std::invalid_argument("intermediate arrangement needs l >= 2, r >= 2 and 0 <= k <= l");
  CyclotomicField field(r);
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Cyclotomic> v(l, field.zero());
    v[i] = field.one();
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      for (int n = 0; n < r; ++n) {
        std::vector<Cyclotomic> v(l, field.zero());
        v[i] = field.one();
        v[j] = -field.zeta_power(n);
        rows.push_back(std::move(v));
      }
  return Arrangement<CyclotomicField>::from_rows(field, l, std::move(rows));
}

inline std::string intermediate_name(std::size_t l, int r, std::size_t k) {
  return "A^" + std::to_string(k) + "_" + std::to_string(l) + "(" + std::to_string(r) + ")";
}

/// Intersection of ker(x_i - zeta^n x_j) over k < i < j <= l (1-based) and all
/// n, computed as a kernel intersection.
inline Subspace<CyclotomicField> example_flat(std::size_t l, int r, std::size_t k) {
  if (l < 2 || r < 2 || k + 2 > l) throw std::invalid_argument("example flat needs l >= 2, r >= 2 and k <= l - 2");
  CyclotomicField field(r);
  std::vector<Functional<CyclotomicField>> forms;
  for (std::size_t i = k; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      for (int n = 0; n < r; ++n) {
        std::vector<Cyclotomic> v(l, field.zero());
        v[i] = field.one();
        v[j] = -field.zeta_power(n);
        forms.push_back(Functional<CyclotomicField>::normalize(std::move(v)));
      }
  return intersect_kernels<CyclotomicField>(field, l, forms);
}

}  // namespace hyperfac
