#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperfac {

/// Arbitrary-precision rational in lowest terms with positive denominator.
///
/// Thin value wrapper over mpq_class. Wrapping keeps GMP's expression templates
/// out of generic code, where `auto` would otherwise capture unevaluated
/// expressions.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "p/q" or "-p/q" (decimal). Throws std::invalid_argument.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    mpz_class num, den = 1;
    auto read = [&](const std::string& part, mpz_class& out) {
      std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (start == part.size()) throw std::invalid_argument("malformed rational literal '" + s + "'");
      for (std::size_t i = start; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational literal '" + s + "'");
      out.set_str(part[0] == '+' ? part.substr(1) : part, 10);
    };
    if (slash == std::string::npos) {
      read(s, num);
    } else {
      read(s.substr(0, slash), num);
      read(s.substr(slash + 1), den);
      if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  /// Always "p/q", so zero prints as "0/1".
  [[nodiscard]] std::string str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] const mpq_class& get() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(1 / value_));
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  mpq_class value_{0};
};

}  // namespace hyperfac
