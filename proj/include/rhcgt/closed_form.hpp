#pragma once

#include <cstdint>
#include <optional>

#include "rhcgt/dyadic.hpp"
#include "rhcgt/robinhood.hpp"
#include "rhcgt/thermo.hpp"

namespace rh {

/// Little John stops in closed form. Requires n >= a + b; throws
/// std::domain_error otherwise.
Stops lj_stops_formula(RHPosition pos);

/// Temperature and mean of (n; a, b) for large n, by golden class of a/b.
/// Both require a, b >= 1 and n >= a + b.
Dyadic main_temperature(std::int64_t n, std::int64_t a, std::int64_t b);
Dyadic main_mean(std::int64_t n, std::int64_t a, std::int64_t b);

/// Thermograph shape for large n: LST above phi, RST below 1/phi, DT between.
TentClass tent_prediction(std::int64_t a, std::int64_t b);

struct ThresholdReport {
  std::int64_t a = 0;
  std::int64_t b = 0;
  /// Least n whose whole window [n, n + window] matches the formulas.
  std::optional<std::int64_t> n0;
  std::int64_t window = 0;
  std::int64_t scanned_to = 0;
};

/// Scans n = a + b, a + b + 1, ... comparing the computed temperature and
/// mean of the Robin Hood game with the closed forms. Only windows that fit
/// below n_max are considered, so the result is an empirical bound.
ThresholdReport threshold_search(Engine& engine, std::int64_t a, std::int64_t b, std::int64_t window,
                                 std::int64_t n_max);

}  // namespace rh
