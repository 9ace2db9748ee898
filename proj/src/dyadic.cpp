#include "rhcgt/dyadic.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace rh {
namespace {

using Wide = __int128;

constexpr Wide kNumMax = std::numeric_limits<std::int64_t>::max();
constexpr Wide kNumMin = std::numeric_limits<std::int64_t>::min();

Wide shifted(Wide value, int bits) {
  // |value| < 2^63 and bits <= 62 keep the result inside 126 bits.
  return value * (Wide{1} << bits);
}

}  // namespace

namespace detail {

Dyadic from_wide(Wide k, int e) {
  if (e < 0) throw std::invalid_argument("dyadic exponent must be non-negative");
  if (k == 0) return Dyadic{};
  while (e > 0 && (k & 1) == 0) {
    k /= 2;
    --e;
  }
  if (k > kNumMax || k < kNumMin) throw DyadicOverflow("dyadic numerator overflow");
  if (e > Dyadic::kMaxExp) throw DyadicOverflow("dyadic denominator overflow");
  return Dyadic::make(static_cast<std::int64_t>(k), e);
}

}  // namespace detail

Dyadic Dyadic::make(std::int64_t k, int e) {
  if (e < 0) throw std::invalid_argument("dyadic exponent must be non-negative");
  Dyadic out;
  if (k == 0) return out;
  while (e > 0 && (k & 1) == 0) {
    k /= 2;
    --e;
  }
  if (e > kMaxExp) throw DyadicOverflow("dyadic denominator overflow");
  out.num_ = k;
  out.exp_ = e;
  return out;
}

std::int64_t Dyadic::floor() const {
  if (exp_ == 0) return num_;
  return num_ >> exp_;
}

std::int64_t Dyadic::ceil() const { return -(-*this).floor(); }

std::int64_t Dyadic::birthday() const {
  if (exp_ == 0) return num_ < 0 ? -num_ : num_;
  const Dyadic magnitude = num_ < 0 ? -*this : *this;
  return magnitude.floor() + 1 + exp_;
}

Dyadic Dyadic::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    throw DyadicOverflow("dyadic negation overflow");
  }
  Dyadic out = *this;
  out.num_ = -num_;
  return out;
}

Dyadic operator+(Dyadic x, Dyadic y) {
  const int e = x.exp_ > y.exp_ ? x.exp_ : y.exp_;
  const Wide sum = shifted(x.num_, e - x.exp_) + shifted(y.num_, e - y.exp_);
  return detail::from_wide(sum, e);
}

Dyadic Dyadic::times(std::int64_t k) const {
  return detail::from_wide(Wide{num_} * Wide{k}, exp_);
}

Dyadic Dyadic::halve(int k) const {
  if (k < 0) throw std::invalid_argument("halve expects a non-negative count");
  return detail::from_wide(num_, exp_ + k);
}

std::strong_ordering operator<=>(Dyadic x, Dyadic y) {
  const int e = x.exp_ > y.exp_ ? x.exp_ : y.exp_;
  const Wide lhs = shifted(x.num_, e - x.exp_);
  const Wide rhs = shifted(y.num_, e - y.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << exp_);
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (num_text.empty() || num_text.front() == '+') return std::nullopt;
  std::int64_t num = 0;
  auto [end, ec] = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
  if (ec != std::errc{} || end != num_text.data() + num_text.size()) return std::nullopt;
  if (slash == std::string_view::npos) return Dyadic(num);

  const std::string_view den_text = text.substr(slash + 1);
  std::uint64_t den = 0;
  auto [dend, dec] = std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
  if (den_text.empty() || dec != std::errc{} || dend != den_text.data() + den_text.size()) {
    return std::nullopt;
  }
  if (den == 0 || (den & (den - 1)) != 0) return std::nullopt;
  int e = 0;
  while ((std::uint64_t{1} << e) != den) ++e;
  if (e > kMaxExp) return std::nullopt;
  return make(num, e);
}

Ordering compare(Dyadic x, Dyadic y) {
  const auto c = x <=> y;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

std::int64_t exact_quotient(Dyadic numerator, Dyadic denominator) {
  if (denominator == Dyadic{}) throw std::domain_error("division by zero");
  // numerator / denominator = (a / b) * 2^(eb - ea)
  Wide a = numerator.num();
  Wide b = denominator.num();
  int shift = denominator.exp() - numerator.exp();
  if (shift > 0) {
    a = shifted(a, shift);
  } else if (shift < 0) {
    b = shifted(b, -shift);
  }
  if (a % b != 0) throw std::domain_error("quotient is not an integer");
  const Wide q = a / b;
  if (q > kNumMax || q < kNumMin) throw DyadicOverflow("quotient overflow");
  return static_cast<std::int64_t>(q);
}

namespace {

// Simplest dyadic in (l, r) for 0 <= l < r.
Dyadic simplest_above(Dyadic l, Dyadic r) {
  const Dyadic next_int(l.floor() + 1);
  if (next_int < r) return next_int;
  for (int e = 1; e <= Dyadic::kMaxExp; ++e) {
    // Smallest k / 2^e strictly above l.
    std::int64_t scaled_floor;
    if (e <= l.exp()) {
      scaled_floor = Dyadic::make(l.num(), l.exp() - e).floor();
    } else {
      const Wide v = shifted(l.num(), e - l.exp());
      if (v >= kNumMax) throw DyadicOverflow("simplest_between overflow");
      scaled_floor = static_cast<std::int64_t>(v);
    }
    const Dyadic candidate = Dyadic::make(scaled_floor + 1, e);
    if (candidate < r) return candidate;
  }
  throw DyadicOverflow("simplest_between exceeded the denominator range");
}

}  // namespace

Dyadic simplest_between(Dyadic l, Dyadic r) {
  if (!(l < r)) throw std::invalid_argument("simplest_between requires l < r");
  if (l < Dyadic{} && Dyadic{} < r) return Dyadic{};
  if (l >= Dyadic{}) return simplest_above(l, r);
  return -simplest_above(-r, -l);
}

std::optional<Dyadic> simplest_in(Bound lo, Bound hi) {
  if (lo.value && hi.value) {
    if (*lo.value > *hi.value) return std::nullopt;
    if (*lo.value == *hi.value) {
      if (lo.closed && hi.closed) return lo.value;
      return std::nullopt;
    }
  }

  Dyadic best;
  if (!lo.value && !hi.value) {
    best = Dyadic{};
  } else if (!lo.value) {
    best = *hi.value > Dyadic{} ? Dyadic{} : Dyadic(hi.value->ceil() - 1);
  } else if (!hi.value) {
    best = *lo.value < Dyadic{} ? Dyadic{} : Dyadic(lo.value->floor() + 1);
  } else {
    best = simplest_between(*lo.value, *hi.value);
  }
  if (lo.value && lo.closed && lo.value->birthday() < best.birthday()) best = *lo.value;
  if (hi.value && hi.closed && hi.value->birthday() < best.birthday()) best = *hi.value;
  return best;
}

}  // namespace rh
