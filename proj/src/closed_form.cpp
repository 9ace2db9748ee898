#include "rhcgt/closed_form.hpp"

#include <stdexcept>
#include <vector>

#include "rhcgt/pingala.hpp"

namespace rh {

namespace {

void require_domain(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || n < a + b) throw std::domain_error("closed forms need n >= a + b");
}

void require_positive(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("closed forms need positive wealths");
}

std::int64_t seed_u0(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(mp_from_pair(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)).seq.u0());
}

Dyadic right_stop(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) return 0;
  if (a == 0) return -n;
  if (b == 0) return n;
  if (a <= b) return -(n - a);
  const std::int64_t u0 = seed_u0(a, b);
  if (golden_class(a, b) == GoldenClass::AbovePhi) return n - (a + b) + u0;
  return a + b - n - u0;
}

}  // namespace

Stops lj_stops_formula(RHPosition pos) {
  require_domain(pos.n, pos.a, pos.b);
  return Stops{-right_stop(pos.n, pos.b, pos.a), right_stop(pos.n, pos.a, pos.b)};
}

Dyadic main_temperature(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_positive(a, b);
  require_domain(n, a, b);
  const std::int64_t u0 = seed_u0(a, b);
  switch (golden_class(a, b)) {
    case GoldenClass::BelowPhiInverse: return b - u0;
    case GoldenClass::BetweenPhiInvAndOne: return Dyadic(n - a) + Dyadic(u0 - b).halve();
    case GoldenClass::One: return n - a;
    case GoldenClass::BetweenOneAndPhi: return Dyadic(n - b) + Dyadic(u0 - a).halve();
    case GoldenClass::AbovePhi: return a - u0;
  }
  throw std::logic_error("unreachable golden class");
}

Dyadic main_mean(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_positive(a, b);
  require_domain(n, a, b);
  const std::int64_t u0 = seed_u0(a, b);
  switch (golden_class(a, b)) {
    case GoldenClass::BelowPhiInverse: return -(n - (a + b) + u0);
    case GoldenClass::BetweenPhiInvAndOne: return Dyadic(u0 - b).halve();
    case GoldenClass::One: return 0;
    case GoldenClass::BetweenOneAndPhi: return Dyadic(a - u0).halve();
    case GoldenClass::AbovePhi: return n - (a + b) + u0;
  }
  throw std::logic_error("unreachable golden class");
}

TentClass tent_prediction(std::int64_t a, std::int64_t b) {
  require_positive(a, b);
  switch (golden_class(a, b)) {
    case GoldenClass::AbovePhi: return TentClass::LST;
    case GoldenClass::BelowPhiInverse: return TentClass::RST;
    default: return TentClass::DT;
  }
}

ThresholdReport threshold_search(Engine& engine, std::int64_t a, std::int64_t b, std::int64_t window,
                                 std::int64_t n_max) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  require_positive(a, b);
  ThresholdReport report{a, b, std::nullopt, window, a + b - 1};
  // Length of the run of matching n ending at the current n.
  std::int64_t run = 0;
  for (std::int64_t n = a + b; n <= n_max; ++n) {
    const Thermograph& t = engine.thermo.thermograph(engine.expand.rh_to_game(RHPosition::make(n, a, b)));
    const bool match = t.temperature == main_temperature(n, a, b) && t.mean == main_mean(n, a, b);
    run = match ? run + 1 : 0;
    report.scanned_to = n;
    if (run == window + 1) {
      report.n0 = n - window;
      break;
    }
  }
  return report;
}

}  // namespace rh
