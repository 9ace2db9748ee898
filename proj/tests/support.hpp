#pragma once

// Independent oracles and random generators shared by the unit tests. Every
// oracle here works from first principles and avoids the engine shortcut it
// is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rhcgt/dyadic.hpp"
#include "rhcgt/game.hpp"
#include "rhcgt/pingala.hpp"

namespace rh {

// Readable values in assertion failures.
inline void PrintTo(Dyadic x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(GameId g, std::ostream* os) { *os << "#" << g.index; }

}  // namespace rh

namespace rh::testing {

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x5eedULL * 1000003ULL + salt); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Dyadic random_dyadic(std::mt19937_64& rng, std::int64_t max_num = 200, int max_exp = 6) {
  return Dyadic::make(uniform(rng, -max_num, max_num), static_cast<int>(uniform(rng, 0, max_exp)));
}

/// All dyadics born on or before the given day, built the way the surreal
/// numbers are born: each day adds one new extreme integer on both sides and
/// the midpoint of every gap.
inline std::vector<std::set<Dyadic>> dyadics_by_day(int days) {
  std::vector<std::set<Dyadic>> out;
  std::set<Dyadic> born = {Dyadic{}};
  out.push_back(born);
  for (int d = 1; d <= days; ++d) {
    std::set<Dyadic> next = born;
    next.insert(*born.begin() - 1);
    next.insert(*born.rbegin() + 1);
    for (auto it = born.begin(); std::next(it) != born.end(); ++it) next.insert((*it + *std::next(it)).halve());
    born = std::move(next);
    out.push_back(born);
  }
  return out;
}

/// The first-born dyadic strictly inside (l, r), by enumeration.
inline std::optional<Dyadic> simplest_by_enumeration(Dyadic l, Dyadic r) {
  static const std::vector<std::set<Dyadic>> days = dyadics_by_day(14);
  for (const auto& day : days) {
    for (Dyadic x : day) {
      if (l < x && x < r) return x;
    }
  }
  return std::nullopt;
}

/// g <= h by the textbook definition: Right moving first in h - g loses.
inline bool leq_by_difference(GameStore& s, GameId g, GameId h) {
  return s.outcome(s.sum(h, s.negate(g))).right_start_winner == Player::Left;
}

/// A small random game: leaves are small dyadics and nimbers, inner nodes
/// pick up to three options per side from earlier games.
inline GameId random_game(GameStore& s, std::mt19937_64& rng, int inner_nodes = 4) {
  std::vector<GameId> pool = {s.zero(), s.nimber(1), s.from_dyadic(1), s.from_dyadic(-1),
                              s.from_dyadic(Dyadic::make(1, 1)), s.from_dyadic(Dyadic::make(-3, 2)), s.from_dyadic(2)};
  GameId last = pool.back();
  for (int i = 0; i < inner_nodes; ++i) {
    std::vector<GameId> lefts, rights;
    const auto nl = uniform(rng, 0, 3), nr = uniform(rng, 0, 3);
    for (std::int64_t k = 0; k < nl; ++k) lefts.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))]);
    for (std::int64_t k = 0; k < nr; ++k) rights.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))]);
    last = s.make(std::move(lefts), std::move(rights));
    pool.push_back(last);
  }
  return last;
}

using MPPairs = std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<MPSequence, unsigned>>;

/// Every consecutive pair (U_k, U_{k+1}) with U_k <= U_{k+1} <= limit, found by
/// running each admissible seed forward. A pair reached twice would break
/// uniqueness and is counted in duplicates.
inline MPPairs mp_forward_pairs(std::uint64_t limit, std::size_t& duplicates) {
  MPPairs out;
  duplicates = 0;
  for (std::uint64_t u0 = 1; u0 <= limit; ++u0) {
    for (std::uint64_t u1 = 1; u1 <= u0; ++u1) {
      const MPSequence s(u0, u1);
      for (unsigned k = 0; s.term(k + 1) <= limit; ++k) {
        if (s.term(k) > s.term(k + 1)) continue;
        if (!out.emplace(std::make_pair(s.term(k), s.term(k + 1)), std::make_pair(s, k)).second) ++duplicates;
      }
    }
  }
  return out;
}

/// Euclid winner by exhaustive search of the game tree.
class EuclidBruteForce {
 public:
  bool mover_wins(std::uint64_t x, std::uint64_t y) {
    if (x > y) std::swap(x, y);
    if (x == y) return false;
    if (auto it = memo_.find({x, y}); it != memo_.end()) return it->second;
    bool win = false;
    for (std::uint64_t rest = y - x; rest >= 1 && !win; rest = rest > x ? rest - x : 0) {
      win = !mover_wins(std::min(rest, x), std::max(rest, x));
      if (rest <= x) break;
    }
    memo_[{x, y}] = win;
    return win;
  }

 private:
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> memo_;
};

}  // namespace rh::testing
