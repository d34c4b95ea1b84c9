#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace itw {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  /// Parses "p", "p/q" or a finite decimal such as "0.5".
  static Rational parse(std::string_view text);

  /// Smallest integer >= this value.
  std::int64_t ceil() const;
  std::int64_t floor() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// [numerator, denominator].
nlohmann::json to_json(const Rational& r);
/// Accepts [p, q], an integer, or a string understood by Rational::parse.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace itw
