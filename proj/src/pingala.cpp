#include "rhcgt/pingala.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace rh {

std::uint64_t pingala(unsigned k) {
  std::uint64_t prev = 0, cur = 1;
  if (k == 0) return 0;
  for (unsigned i = 1; i < k; ++i) {
    std::uint64_t next;
    if (__builtin_add_overflow(prev, cur, &next)) throw std::overflow_error("pingala overflow");
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t alt_pingala(unsigned k) {
  const std::uint64_t p = pingala(k);
  if (p > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("alt_pingala overflow");
  const auto v = static_cast<std::int64_t>(p);
  return k % 2 == 1 ? v : -v;
}

Rational::Rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::domain_error("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const __int128 lhs = static_cast<__int128>(x.p_) * y.q_;
  const __int128 rhs = static_cast<__int128>(y.p_) * x.q_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Rational ratio(unsigned k, Parity parity) {
  const unsigned lo = parity == Parity::Odd ? 2 * k + 1 : 2 * k + 2;
  return Rational(static_cast<std::int64_t>(pingala(lo + 1)), static_cast<std::int64_t>(pingala(lo)));
}

MPSequence::MPSequence(std::uint64_t u0, std::uint64_t u1) : u0_(u0), u1_(u1) {
  if (u1 < 1 || u0 < u1) throw std::invalid_argument("MP-sequence seeds need u0 >= u1 >= 1");
}

std::uint64_t MPSequence::term(unsigned k) const {
  std::uint64_t prev = u0_, cur = u1_;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    std::uint64_t next;
    if (__builtin_add_overflow(prev, cur, &next)) throw std::overflow_error("MP-sequence overflow");
    prev = cur;
    cur = next;
  }
  return cur;
}

MPLocation mp_from_pair(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("wealths must be positive");
  std::uint64_t lo = std::min(a, b), hi = std::max(a, b);
  unsigned mu = 0;
  // (lo, hi) are consecutive terms; step back while they break the seed rule.
  while (lo < hi) {
    const std::uint64_t before = hi - lo;
    hi = lo;
    lo = before;
    ++mu;
  }
  return MPLocation{MPSequence(lo, hi), mu};
}

unsigned mu_via_ratios(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("wealths must be positive");
  const std::uint64_t hi = std::max(a, b), lo = std::min(a, b);
  if (hi == lo) return 0;
  const Rational r(static_cast<std::int64_t>(hi), static_cast<std::int64_t>(lo));
  if (phi_side(hi, lo) < 0) {
    for (unsigned k = 0;; ++k) {
      if (r <= ratio(k, Parity::Odd)) return 2 * k;
    }
  }
  for (unsigned k = 0;; ++k) {
    if (r >= ratio(k, Parity::Even)) return 2 * k + 1;
  }
}

int phi_side(std::uint64_t x, std::uint64_t y) {
  const __int128 X = x, Y = y;
  const __int128 v = X * X - X * Y - Y * Y;
  if (v == 0) throw std::logic_error("x^2 - xy - y^2 vanished; phi is irrational");
  return v > 0 ? 1 : -1;
}

GoldenClass golden_class(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("wealths must be positive");
  if (a == b) return GoldenClass::One;
  if (a > b) return phi_side(a, b) > 0 ? GoldenClass::AbovePhi : GoldenClass::BetweenOneAndPhi;
  // a/b < 1/phi  <=>  b/a > phi
  return phi_side(b, a) > 0 ? GoldenClass::BelowPhiInverse : GoldenClass::BetweenPhiInvAndOne;
}

std::string to_string(GoldenClass c) {
  switch (c) {
    case GoldenClass::BelowPhiInverse: return "BelowPhiInverse";
    case GoldenClass::BetweenPhiInvAndOne: return "BetweenPhiInvAndOne";
    case GoldenClass::One: return "One";
    case GoldenClass::BetweenOneAndPhi: return "BetweenOneAndPhi";
    case GoldenClass::AbovePhi: return "AbovePhi";
  }
  return "?";
}

}  // namespace rh
