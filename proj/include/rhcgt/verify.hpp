#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhcgt/robinhood.hpp"

namespace rh {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool ok() const;
  std::size_t passed() const;
};

struct VerifyOptions {
  std::int64_t max_wealth = 8;
  /// Heaps are scanned up to a + b + margin.
  std::int64_t margin = 12;
  std::int64_t window = 5;
};

/// table1, table2, main-theorem, stops, monotonicity, hotstrat.
const std::vector<std::string>& suite_names();

/// Runs one suite on a fresh engine. Throws std::invalid_argument for an
/// unknown suite name.
Report run_suite(const std::string& suite, const VerifyOptions& options = {});

/// One Right move in the two-heap sum used to refute hotstrat.
struct HotstratMove {
  int component;  // 1 for (11;1,1), 2 for (12;2,1)
  RHPosition after;
  Player winner_with_left_to_move;
};

struct HotstratDemo {
  RHPosition g1;
  RHPosition g2;
  Thermograph t1;
  Thermograph t2;
  std::string canonical1;
  std::string canonical2;
  std::vector<HotstratMove> right_moves;
  Player right_start_winner;
};

HotstratDemo hotstrat_demo(Engine& engine);

}  // namespace rh
