#include "rhcgt/robinhood.hpp"

#include <algorithm>
#include <stdexcept>

#include "rhcgt/pingala.hpp"

namespace rh {

RHPosition RHPosition::make(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 0) throw std::invalid_argument("heap size must be non-negative");
  return RHPosition{n, std::max<std::int64_t>(a, 0), std::max<std::int64_t>(b, 0)};
}

std::string RHPosition::str() const {
  return "(" + std::to_string(n) + ";" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

RHPosition after_removal(RHPosition pos, Player mover, std::int64_t i) {
  return mover == Player::Left ? RHPosition::make(pos.n - i, pos.a, pos.b - i)
                               : RHPosition::make(pos.n - i, pos.a - i, pos.b);
}

std::vector<RHPosition> removals_up_to(RHPosition pos, Player mover, std::int64_t limit) {
  std::vector<RHPosition> out;
  for (std::int64_t i = 1; i <= limit; ++i) out.push_back(after_removal(pos, mover, i));
  return out;
}

}  // namespace

std::vector<RHPosition> rh_options(RHPosition pos, Player mover) {
  return removals_up_to(pos, mover, std::min(pos.n, pos.wealth(mover)));
}

std::vector<RHPosition> rh_pruned_options(RHPosition pos, Player mover) {
  const std::int64_t other = pos.wealth(opponent(mover));
  const std::int64_t limit = std::min({pos.n, pos.wealth(mover), std::max<std::int64_t>(other, 1)});
  return removals_up_to(pos, mover, limit);
}

std::optional<RHPosition> lj_option(RHPosition pos, Player mover) {
  if (pos.n == 0 || pos.wealth(mover) == 0) return std::nullopt;
  const std::int64_t other = pos.wealth(opponent(mover));
  const std::int64_t gamma = other == 0 ? 1 : std::min({pos.n, pos.a, pos.b});
  return after_removal(pos, mover, gamma);
}

PathTrace lj_path(RHPosition pos, Player starter) {
  PathTrace trace{pos, {}};
  Player mover = starter;
  RHPosition cur = pos;
  for (;;) {
    auto next = lj_option(cur, mover);
    // A broke player never moves again; the other one empties the heap.
    if (!next && (cur.a == 0 || cur.b == 0)) {
      mover = opponent(mover);
      next = lj_option(cur, mover);
    }
    if (!next) break;
    trace.steps.push_back(PathStep{*next, mover, cur.n - next->n});
    cur = *next;
    mover = opponent(mover);
  }
  return trace;
}

GameId Expander::rh_to_game(RHPosition pos, bool pruned) {
  return expand(RHPosition::make(pos.n, pos.a, pos.b), pruned ? Kind::Pruned : Kind::Full);
}

GameId Expander::lj_to_game(RHPosition pos) {
  return expand(RHPosition::make(pos.n, pos.a, pos.b), Kind::LittleJohn);
}

GameId Expander::expand(RHPosition pos, Kind kind) {
  const auto key = std::make_tuple(pos.n, pos.a, pos.b, kind);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  auto options_of = [&](Player mover) {
    std::vector<RHPosition> opts;
    switch (kind) {
      case Kind::Pruned: opts = rh_pruned_options(pos, mover); break;
      case Kind::Full: opts = rh_options(pos, mover); break;
      case Kind::LittleJohn:
        if (auto o = lj_option(pos, mover)) opts.push_back(*o);
        break;
    }
    std::vector<GameId> ids;
    ids.reserve(opts.size());
    for (const RHPosition& o : opts) ids.push_back(expand(o, kind));
    return ids;
  };
  std::vector<GameId> lefts = options_of(Player::Left);
  std::vector<GameId> rights = options_of(Player::Right);
  const GameId g = store_.make(std::move(lefts), std::move(rights));
  memo_.emplace(key, g);
  return g;
}

GameId Expander::sum_positions(const std::vector<std::pair<Ruleset, RHPosition>>& terms) {
  GameId total = store_.zero();
  bool first = true;
  for (const auto& [ruleset, pos] : terms) {
    const GameId g = to_game(ruleset, pos);
    total = first ? g : store_.sum(total, g);
    first = false;
  }
  return total;
}

EuclidResult euclid_winner(std::uint64_t x, std::uint64_t y) {
  if (x < 1 || y < 1) throw std::invalid_argument("Euclid heaps must be positive");
  const std::uint64_t small = std::min(x, y), large = std::max(x, y);
  EuclidResult out;
  if (small == large) return out;
  out.mover_wins = phi_side(large, small) > 0;
  for (std::uint64_t rest = large - small; rest >= 1; rest -= small) {
    const std::uint64_t lo = std::min(rest, small), hi = std::max(rest, small);
    if (lo == hi || phi_side(hi, lo) < 0) out.winning_moves.emplace_back(lo, hi);
    if (rest <= small) break;
  }
  return out;
}

}  // namespace rh
