// Copyright 2026 The interdict Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERDICT_RATIONAL_HPP_
#define INTERDICT_RATIONAL_HPP_

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace interdict {

// Exact rational number in lowest terms. Thin value wrapper over mpq_class
// so that arithmetic results are materialized (no expression templates
// escaping into `auto` variables).
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      mpz_class z;
      mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
      v_ = mpq_class(z);
    } else {
      mpz_class z;
      mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
      v_ = mpq_class(z);
    }
  }
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p/q", "p" and optional leading sign. Whitespace is rejected.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
      std::size_t i = 0;
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw std::invalid_argument("Rational: bad integer");
      for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
          throw std::invalid_argument("Rational: bad integer '" +
                                      std::string(s) + "'");
        }
      }
      std::string digits(s[0] == '+' ? s.substr(1) : s);
      return mpz_class(digits, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den < 0) throw std::invalid_argument("Rational: negative denominator");
    return Rational(num, den);
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& mpq() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  // Largest integer not above the value.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  // this += a * b without a temporary on the caller side.
  void add_product(const Rational& a, const Rational& b) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    mpq_neg(a.v_.get_mpq_t(), a.v_.get_mpq_t());
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

// base^e for e >= 0, by repeated squaring.
inline Rational pow(const Rational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), e);
  return Rational(num, den);
}

inline Rational sum(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

// Largest h >= 0 with base * ratio^h <= value, for ratio > 1 and
// value >= base > 0. A floating estimate is corrected by exact comparisons.
inline long grid_floor_exponent(const Rational& base, const Rational& ratio,
                                const Rational& value) {
  double est = (std::log(value.to_double()) - std::log(base.to_double())) /
               std::log(ratio.to_double());
  long h = est > 0 ? static_cast<long>(est) : 0;
  while (h > 0 && base * pow(ratio, h) > value) --h;
  while (base * pow(ratio, h + 1) <= value) ++h;
  return h;
}

// Smallest h >= 0 with base * ratio^h >= value, for ratio > 1.
inline long grid_ceil_exponent(const Rational& base, const Rational& ratio,
                               const Rational& value) {
  if (value <= base) return 0;
  long h = grid_floor_exponent(base, ratio, value);
  if (base * pow(ratio, h) < value) ++h;
  return h;
}

}  // namespace interdict

template <>
struct std::hash<interdict::Rational> {
  std::size_t operator()(const interdict::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};

#endif  // INTERDICT_RATIONAL_HPP_
