#pragma once

#include "hyperfac/rational.hpp"

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperfac {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<std::int64_t>;

/// Rational polynomial, coefficient of x^i at index i. Trimmed: no trailing zeros.
using RatPoly = std::vector<Rational>;

namespace poly {

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

/// Long division; returns (quotient, remainder). Divisor must be nonzero.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    Rational c = a[k] * lead_inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace poly

/// Phi_r(x) by exact division of x^r - 1 by Phi_d(x) for every proper divisor d of r.
inline IntPoly cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic order must be positive");
  RatPoly num(static_cast<std::size_t>(r) + 1);
  num[0] = Rational(-1);
  num[static_cast<std::size_t>(r)] = Rational(1);
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    IntPoly phi_d = cyclotomic_polynomial(d);
    RatPoly div(phi_d.begin(), phi_d.end());
    auto [q, rem] = poly::divmod(num, div);
    if (!rem.empty()) throw std::logic_error("inexact cyclotomic division");
    num = std::move(q);
  }
  IntPoly out;
  out.reserve(num.size());
  for (const auto& c : num) {
    if (c.denominator() != 1 || !c.numerator().fits_slong_p())
      throw std::logic_error("cyclotomic coefficient out of range");
    out.push_back(c.numerator().get_si());
  }
  return out;
}

class Cyclotomic;

/// Q(zeta_r) realised as Q[x]/Phi_r(x).
class CyclotomicField {
 public:
  using Element = Cyclotomic;

  struct Data {
    int order;
    RatPoly modulus;  // monic, degree = phi(order)
    [[nodiscard]] std::size_t degree() const { return modulus.size() - 1; }
  };

  explicit CyclotomicField(int order) {
    IntPoly phi = cyclotomic_polynomial(order);
    data_ = std::make_shared<const Data>(Data{order, RatPoly(phi.begin(), phi.end())});
  }

  [[nodiscard]] int order() const { return data_->order; }
  [[nodiscard]] std::size_t degree() const { return data_->degree(); }
  [[nodiscard]] const std::shared_ptr<const Data>& data() const { return data_; }

  [[nodiscard]] Cyclotomic zero() const;
  [[nodiscard]] Cyclotomic one() const;
  [[nodiscard]] Cyclotomic from_integer(long v) const;
  [[nodiscard]] Cyclotomic from_rational(const Rational& q) const;
  /// The primitive root zeta, i.e. the class of x.
  [[nodiscard]] Cyclotomic zeta() const;
  /// zeta^k for any integer k (negative allowed).
  [[nodiscard]] Cyclotomic zeta_power(long k) const;
  [[nodiscard]] Cyclotomic from_coefficients(std::vector<Rational> coeffs) const;

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) { return a.order() == b.order(); }

 private:
  std::shared_ptr<const Data> data_;
};

/// Element of Q(zeta_r) stored as its unique reduced residue modulo Phi_r,
/// coefficients in the basis 1, zeta, ..., zeta^(phi(r)-1).
class Cyclotomic {
 public:
  Cyclotomic(std::shared_ptr<const CyclotomicField::Data> field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
      throw std::invalid_argument("cyclotomic element needs " + std::to_string(field_->degree()) + " coefficients");
  }

  [[nodiscard]] int order() const { return field_->order; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  [[nodiscard]] bool is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  [[nodiscard]] Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    // Extended Euclid on (a, Phi): track s with s*a == remainder (mod Phi).
    RatPoly r0 = field_->modulus, r1 = as_poly();
    RatPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
      auto [q, rem] = poly::divmod(r0, r1);
      RatPoly s2 = poly::sub(s0, poly::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi is irreducible.
    Rational c = r1.at(0).inverse();
    for (auto& x : s1) x *= c;
    return reduced(std::move(s1));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    check_same(o);
    *this = reduced(poly::mul(as_poly(), o.as_poly()));
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) {
    check_same(o);
    return *this *= o.inverse();
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic on coefficients; only meaningful as a canonical sort order.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.coeffs_ < b.coeffs_; }

  [[nodiscard]] std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += coeffs_[i].str();
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

 private:
  friend class CyclotomicField;

  [[nodiscard]] RatPoly as_poly() const {
    RatPoly p(coeffs_.begin(), coeffs_.end());
    poly::trim(p);
    return p;
  }

  [[nodiscard]] Cyclotomic reduced(RatPoly p) const {
    const RatPoly& m = field_->modulus;
    const std::size_t deg = field_->degree();
    // Modulus is monic: cancel the top coefficient repeatedly.
    for (std::size_t k = p.size(); k-- > deg;) {
      if (p[k].is_zero()) continue;
      Rational c = p[k];
      std::size_t shift = k - deg;
      for (std::size_t j = 0; j <= deg; ++j) p[shift + j] -= c * m[j];
    }
    p.resize(deg);
    return Cyclotomic(field_, std::move(p));
  }

  void check_same(const Cyclotomic& o) const {
    if (field_ != o.field_ && field_->order != o.field_->order)
      throw std::invalid_argument("operands live in different cyclotomic fields");
  }

  std::shared_ptr<const CyclotomicField::Data> field_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic CyclotomicField::zero() const { return Cyclotomic(data_, std::vector<Rational>(degree())); }

inline Cyclotomic CyclotomicField::one() const { return from_integer(1); }

inline Cyclotomic CyclotomicField::from_integer(long v) const { return from_rational(Rational(v)); }

inline Cyclotomic CyclotomicField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree());
  c[0] = q;
  return Cyclotomic(data_, std::move(c));
}

inline Cyclotomic CyclotomicField::from_coefficients(std::vector<Rational> coeffs) const {
  return Cyclotomic(data_, std::move(coeffs));
}

inline Cyclotomic CyclotomicField::zeta() const {
  RatPoly x{Rational(0), Rational(1)};
  return zero().reduced(std::move(x));
}

inline Cyclotomic CyclotomicField::zeta_power(long k) const {
  long r = order();
  long e = ((k % r) + r) % r;
  RatPoly p(static_cast<std::size_t>(e) + 1);
  p[static_cast<std::size_t>(e)] = Rational(1);
  return zero().reduced(std::move(p));
}

}  // namespace hyperfac
