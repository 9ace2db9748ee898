#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace rh {

/// P_0 = 0, P_1 = 1, P_{k+2} = P_{k+1} + P_k. Throws std::overflow_error
/// past the 64-bit range (k > 93).
std::uint64_t pingala(unsigned k);

/// (-1)^(k+1) * P_k.
std::int64_t alt_pingala(unsigned k);

/// Reduced fraction p/q with q > 0.
class Rational {
 public:
  Rational(std::int64_t p, std::int64_t q);
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

enum class Parity { Odd, Even };

/// O_k = P_{2k+2}/P_{2k+1} (Odd) or E_k = P_{2k+3}/P_{2k+2} (Even).
Rational ratio(unsigned k, Parity parity);

/// A Fibonacci-recurrence sequence seeded by u0 >= u1 >= 1.
class MPSequence {
 public:
  MPSequence(std::uint64_t u0, std::uint64_t u1);
  std::uint64_t u0() const { return u0_; }
  std::uint64_t u1() const { return u1_; }
  std::uint64_t term(unsigned k) const;
  friend bool operator==(const MPSequence&, const MPSequence&) = default;

 private:
  std::uint64_t u0_;
  std::uint64_t u1_;
};

struct MPLocation {
  MPSequence seq;
  unsigned mu;
};

/// The unique MP-sequence with term(mu) = min(a,b) and term(mu+1) = max(a,b),
/// found by stepping the recurrence backwards until the seed condition holds.
MPLocation mp_from_pair(std::uint64_t a, std::uint64_t b);

/// The same mu, located through the ratio sequences instead.
unsigned mu_via_ratios(std::uint64_t a, std::uint64_t b);

enum class GoldenClass { BelowPhiInverse, BetweenPhiInvAndOne, One, BetweenOneAndPhi, AbovePhi };

std::string to_string(GoldenClass c);

/// Position of a/b relative to 1/phi, 1 and phi, decided by integer sign
/// tests on a^2 - ab - b^2 (never zero for positive integers).
GoldenClass golden_class(std::uint64_t a, std::uint64_t b);

/// Sign of x^2 - xy - y^2, i.e. whether x/y lies above (+1) or below (-1) phi.
int phi_side(std::uint64_t x, std::uint64_t y);

}  // namespace rh
