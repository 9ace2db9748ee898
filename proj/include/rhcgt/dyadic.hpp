#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rh {

/// Thrown when an exact dyadic result does not fit the 64-bit numerator or
/// the supported denominator range. Results are never wrapped.
class DyadicOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact dyadic rational num / 2^exp, always stored normalized
/// (exp == 0 or num odd).
class Dyadic {
 public:
  static constexpr int kMaxExp = 62;

  constexpr Dyadic() = default;
  // Implicit so integer literals read naturally in arithmetic.
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT

  /// k / 2^e, normalized.
  static Dyadic make(std::int64_t k, int e);

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  /// Largest integer <= value.
  std::int64_t floor() const;
  /// Smallest integer >= value.
  std::int64_t ceil() const;

  /// Surreal birthday: |k| for integers, floor(|x|) + 1 + e otherwise.
  std::int64_t birthday() const;

  Dyadic operator-() const;
  friend Dyadic operator+(Dyadic x, Dyadic y);
  friend Dyadic operator-(Dyadic x, Dyadic y) { return x + (-y); }
  Dyadic& operator+=(Dyadic y) { return *this = *this + y; }
  Dyadic& operator-=(Dyadic y) { return *this = *this - y; }

  /// Multiplication by an integer.
  Dyadic times(std::int64_t k) const;
  /// Division by 2^k.
  Dyadic halve(int k = 1) const;

  friend std::strong_ordering operator<=>(Dyadic x, Dyadic y);
  friend bool operator==(Dyadic x, Dyadic y) = default;

  /// "k" for integers, otherwise "k/D" with D = 2^e written in decimal.
  std::string str() const;
  /// Inverse of str(); also accepts surrounding whitespace.
  static std::optional<Dyadic> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

enum class Ordering { Less, Equal, Greater };
Ordering compare(Dyadic x, Dyadic y);

/// Exact integer q with numerator == q * denominator. Throws
/// std::domain_error when the quotient is not an integer.
std::int64_t exact_quotient(Dyadic numerator, Dyadic denominator);

/// The simplest dyadic strictly between l and r. Throws std::invalid_argument
/// unless l < r.
Dyadic simplest_between(Dyadic l, Dyadic r);

/// One end of an interval of dyadics; an absent value is unbounded.
struct Bound {
  std::optional<Dyadic> value;
  bool closed = false;
};

/// Simplest dyadic in the interval described by lo and hi, or nullopt when
/// the interval is empty.
std::optional<Dyadic> simplest_in(Bound lo, Bound hi);

}  // namespace rh
