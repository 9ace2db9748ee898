#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rhcgt/game.hpp"
#include "rhcgt/thermo.hpp"

namespace rh {

/// A single-heap position (n; a, b): n tokens, Left wealth a, Right wealth b.
struct RHPosition {
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  /// Wealths below zero are clamped to zero; a negative heap is rejected.
  static RHPosition make(std::int64_t n, std::int64_t a, std::int64_t b);

  std::int64_t wealth(Player p) const { return p == Player::Left ? a : b; }
  /// (n; b, a), the negative of this position.
  RHPosition swapped() const { return RHPosition{n, b, a}; }
  std::string str() const;

  friend auto operator<=>(const RHPosition&, const RHPosition&) = default;
};

enum class Ruleset { RH, LJ };

/// Every Robin Hood option: remove i in [1, min(n, own wealth)] tokens and
/// reduce the opponent's wealth by i.
std::vector<RHPosition> rh_options(RHPosition pos, Player mover);

/// rh_options without the dominated removals. Removing more than the
/// opponent's wealth only shrinks the heap further once the opponent is
/// broke, so removals beyond max(opponent wealth, 1) are dropped.
std::vector<RHPosition> rh_pruned_options(RHPosition pos, Player mover);

/// The single Little John option: remove min(n, a, b) tokens, or one token
/// when the opponent is already broke.
std::optional<RHPosition> lj_option(RHPosition pos, Player mover);

struct PathStep {
  RHPosition position;  // position reached by this move
  Player mover;
  std::int64_t removed;
};

struct PathTrace {
  RHPosition start;
  std::vector<PathStep> steps;
};

/// Alternating Little John moves from pos, first by starter. Once one wealth
/// is zero the other player keeps taking single tokens until the heap is
/// empty, so the trace ends at the integer the position settles to.
PathTrace lj_path(RHPosition pos, Player starter);

/// Expands positions into GameStore forms, memoized per clamped triple and
/// ruleset.
class Expander {
 public:
  explicit Expander(GameStore& store) : store_(store) {}

  GameId rh_to_game(RHPosition pos, bool pruned = true);
  GameId lj_to_game(RHPosition pos);
  GameId to_game(Ruleset r, RHPosition pos) { return r == Ruleset::RH ? rh_to_game(pos) : lj_to_game(pos); }
  GameId sum_positions(const std::vector<std::pair<Ruleset, RHPosition>>& terms);

 private:
  enum class Kind { Pruned, Full, LittleJohn };
  GameId expand(RHPosition pos, Kind kind);

  GameStore& store_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, Kind>, GameId> memo_;
};

/// One store together with the thermography and expansion layers over it.
struct Engine {
  Engine() : thermo(store), expand(store) {}
  explicit Engine(std::size_t node_cap) : store(node_cap), thermo(store), expand(store) {}

  GameStore store;
  Thermographer thermo;
  Expander expand;
};

struct EuclidResult {
  bool mover_wins = false;
  /// Options (smaller heap first) that leave the opponent losing.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> winning_moves;
};

/// Euclid on heaps (x, y): remove a positive multiple of the smaller heap
/// from the larger while both stay non-empty. The mover wins iff the larger
/// heap exceeds phi times the smaller one.
EuclidResult euclid_winner(std::uint64_t x, std::uint64_t y);

}  // namespace rh
