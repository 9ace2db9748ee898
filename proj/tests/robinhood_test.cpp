#include <gtest/gtest.h>

#include "rhcgt/closed_form.hpp"
#include "rhcgt/robinhood.hpp"
#include "support.hpp"

namespace rh {
namespace {

using testing::seeded;
using testing::uniform;

RHPosition P(std::int64_t n, std::int64_t a, std::int64_t b) { return RHPosition::make(n, a, b); }

TEST(RHPosition, ClampsAndRejects) {
  EXPECT_EQ(P(5, -2, 7), (RHPosition{5, 0, 7}));
  EXPECT_THROW(P(-1, 2, 2), std::invalid_argument);
  EXPECT_EQ(P(9, 3, 2).str(), "(9;3,2)");
  EXPECT_EQ(P(9, 3, 2).swapped(), P(9, 2, 3));
  EXPECT_EQ(P(9, 3, 2).wealth(Player::Right), 2);
}

TEST(Options, Full) {
  EXPECT_EQ(rh_options(P(3, 2, 5), Player::Left), (std::vector<RHPosition>{P(2, 2, 4), P(1, 2, 3)}));
  const auto right = rh_options(P(5, 2, 7), Player::Right);
  EXPECT_EQ(right.size(), 5u);
  EXPECT_NE(std::find(right.begin(), right.end(), P(1, 0, 7)), right.end());
  EXPECT_TRUE(rh_options(P(4, 0, 0), Player::Left).empty());
  EXPECT_TRUE(rh_options(P(0, 3, 3), Player::Right).empty());
}

std::vector<std::int64_t> removals(RHPosition from, const std::vector<RHPosition>& opts) {
  std::vector<std::int64_t> out;
  for (const RHPosition& o : opts) out.push_back(from.n - o.n);
  return out;
}

TEST(Options, Pruned) {
  EXPECT_EQ(removals(P(10, 5, 2), rh_pruned_options(P(10, 5, 2), Player::Left)), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(removals(P(10, 2, 5), rh_pruned_options(P(10, 2, 5), Player::Left)), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(removals(P(3, 5, 1), rh_pruned_options(P(3, 5, 1), Player::Left)), (std::vector<std::int64_t>{1}));
  // A broke opponent still leaves the single-token move.
  EXPECT_EQ(removals(P(6, 4, 0), rh_pruned_options(P(6, 4, 0), Player::Left)), (std::vector<std::int64_t>{1}));
}

TEST(Options, LittleJohn) {
  EXPECT_EQ(lj_option(P(10, 3, 5), Player::Right), P(7, 0, 5));
  EXPECT_EQ(lj_option(P(6, 4, 0), Player::Left), P(5, 4, 0));
  EXPECT_FALSE(lj_option(P(6, 4, 0), Player::Right));
  EXPECT_FALSE(lj_option(P(0, 3, 2), Player::Left));
  EXPECT_EQ(lj_option(P(2, 5, 6), Player::Left), P(0, 5, 4));
}

class ExpandTest : public ::testing::Test {
 protected:
  GameId num(std::int64_t k) { return e_.store.from_dyadic(k); }
  GameId sw(GameId l, GameId r) { return e_.store.make({l}, {r}); }
  GameId rh(std::int64_t n, std::int64_t a, std::int64_t b) { return e_.expand.rh_to_game(P(n, a, b)); }
  GameId lj(std::int64_t n, std::int64_t a, std::int64_t b) { return e_.expand.lj_to_game(P(n, a, b)); }

  Engine e_;
  GameStore& s = e_.store;
};

TEST_F(ExpandTest, RobinHoodExamples) {
  EXPECT_EQ(s.canonical(rh(11, 1, 1)), sw(num(10), num(-10)));
  for (std::int64_t n = 0; n < 8; ++n) EXPECT_TRUE(s.eq(rh(n, 3, 0), num(n)));
  EXPECT_TRUE(s.eq(rh(2, 3, 4), s.nimber(2)));
  EXPECT_EQ(rh(4, 2, 2), rh(4, 2, 2));
  EXPECT_TRUE(s.eq(rh(5, 2, 2), e_.expand.rh_to_game(P(5, 2, 2), false)));
}

TEST_F(ExpandTest, LittleJohnExamples) {
  for (std::int64_t n = 2; n < 10; ++n) {
    EXPECT_TRUE(s.eq(lj(n, 1, 1), sw(num(n - 1), num(1 - n))));
    EXPECT_TRUE(s.eq(lj(n, 2, 1), sw(num(n - 1), sw(num(n - 2), num(2 - n)))));
  }
  EXPECT_EQ(lj(5, 0, 0), s.zero());
}

TEST_F(ExpandTest, FigureOneSum) {
  const GameId g = e_.expand.sum_positions({{Ruleset::RH, P(9, 3, 2)}, {Ruleset::RH, P(4, 2, 1)}});
  EXPECT_EQ(e_.thermo.stops(g), (Stops{9, -2}));
  EXPECT_EQ(s.outcome(g).right_start_winner, Player::Right);
  EXPECT_EQ(e_.expand.sum_positions({{Ruleset::RH, P(5, 2, 2)}}), rh(5, 2, 2));
  const GameId mixed = e_.expand.sum_positions({{Ruleset::LJ, P(6, 2, 1)}, {Ruleset::RH, P(3, 1, 1)}});
  EXPECT_EQ(mixed, s.sum(lj(6, 2, 1), rh(3, 1, 1)));
}

TEST(LittleJohnPath, Examples) {
  const PathTrace t = lj_path(P(100, 27, 17), Player::Right);
  std::vector<std::pair<std::int64_t, std::int64_t>> wealth = {{t.start.a, t.start.b}};
  for (const PathStep& st : t.steps) {
    if (st.position.a == 0 || st.position.b == 0) {
      wealth.emplace_back(st.position.a, st.position.b);
      break;
    }
    wealth.emplace_back(st.position.a, st.position.b);
  }
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {{27, 17}, {10, 17}, {10, 7},
                                                                       {3, 7},   {3, 4},   {0, 4}};
  EXPECT_EQ(wealth, expected);
  // After Left is broke only Right moves, one token at a time.
  EXPECT_EQ(t.steps.back().position.n, 0);

  const std::int64_t n = 50, a = 14, b = 10;
  const PathTrace r = lj_path(P(n, a, b), Player::Right);
  ASSERT_GE(r.steps.size(), 3u);
  EXPECT_EQ(r.steps[0].position, P(n - b, a - b, b));
  EXPECT_EQ(r.steps[1].position, P(n - a, a - b, 2 * b - a));
  EXPECT_EQ(r.steps[2].position, P(n - 2 * a + b, 0, 2 * b - a));

  const PathTrace l = lj_path(P(50, 14, 10), Player::Left);
  EXPECT_EQ(l.steps.front().position, P(40, 14, 0));
  EXPECT_EQ(l.steps.front().removed, 10);
  EXPECT_TRUE(lj_path(P(0, 5, 5), Player::Left).steps.empty());
  EXPECT_TRUE(lj_path(P(7, 0, 0), Player::Left).steps.empty());
}

TEST(LittleJohnPath, StepsFollowOptionsAndAlternate) {
  auto rng = seeded(40);
  for (int i = 0; i < 200; ++i) {
    const RHPosition start = P(uniform(rng, 0, 60), uniform(rng, 0, 20), uniform(rng, 0, 20));
    const Player first = i % 2 ? Player::Left : Player::Right;
    const PathTrace t = lj_path(start, first);
    RHPosition at = start;
    Player mover = first;
    for (const PathStep& st : t.steps) {
      // Once one side is broke the other keeps taking single tokens.
      if (!lj_option(at, mover)) mover = opponent(mover);
      EXPECT_EQ(st.mover, mover);
      EXPECT_EQ(lj_option(at, mover), st.position);
      EXPECT_EQ(st.removed, at.n - st.position.n);
      at = st.position;
      mover = opponent(mover);
    }
    EXPECT_FALSE(lj_option(at, mover) || lj_option(at, opponent(mover)));
  }
}

TEST(Euclid, Examples) {
  EXPECT_FALSE(euclid_winner(1, 1).mover_wins);
  EXPECT_FALSE(euclid_winner(2, 3).mover_wins);
  const EuclidResult r = euclid_winner(2, 7);
  EXPECT_TRUE(r.mover_wins);
  EXPECT_EQ(r.winning_moves, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}}));
  EXPECT_EQ(euclid_winner(7, 2).mover_wins, true);
}

TEST(Euclid, MatchesExhaustiveSearch) {
  testing::EuclidBruteForce brute;
  for (std::uint64_t x = 1; x <= 60; ++x) {
    for (std::uint64_t y = x + 1; y <= 60; ++y) {
      const EuclidResult r = euclid_winner(x, y);
      EXPECT_EQ(r.mover_wins, brute.mover_wins(x, y)) << x << "," << y;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;
      for (std::uint64_t rest = y - x; rest >= 1; rest = rest > x ? rest - x : 0) {
        const auto opt = std::minmax(rest, x);
        if (!brute.mover_wins(opt.first, opt.second)) expected.emplace_back(opt.first, opt.second);
        if (rest <= x) break;
      }
      std::sort(expected.begin(), expected.end());
      auto got = r.winning_moves;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected) << x << "," << y;
    }
  }
}

class RobinHoodProperties : public ExpandTest {};

TEST_F(RobinHoodProperties, BoundsAndNegation) {
  auto rng = seeded(41);
  for (int i = 0; i < 250; ++i) {
    const std::int64_t n = uniform(rng, 0, 10), a = uniform(rng, 0, 6), b = uniform(rng, 0, 6);
    for (bool little : {false, true}) {
      const GameId g = little ? lj(n, a, b) : rh(n, a, b);
      const GameId neg = little ? lj(n, b, a) : rh(n, b, a);
      EXPECT_TRUE(s.leq(num(-n), g));
      EXPECT_TRUE(s.leq(g, num(n)));
      const Stops st = e_.thermo.stops(g);
      EXPECT_LE(Dyadic(-n), st.right);
      EXPECT_LE(st.left, Dyadic(n));
      EXPECT_TRUE(s.eq(neg, s.negate(g))) << P(n, a, b).str();
    }
  }
}

TEST_F(RobinHoodProperties, PositionClasses) {
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (std::int64_t a = 0; a <= 6; ++a) {
      for (std::int64_t b = 0; b <= 6; ++b) {
        const GameId g = rh(n, a, b);
        const std::string at = P(n, a, b).str();
        if (a == 0 && b == 0) {
          EXPECT_TRUE(s.eq(g, s.zero())) << at;
        } else if (b == 0) {
          EXPECT_TRUE(s.eq(g, num(n))) << at;
        } else if (a == 0) {
          EXPECT_TRUE(s.eq(g, num(-n))) << at;
        } else if (n <= std::min(a, b)) {
          EXPECT_TRUE(s.eq(g, s.nimber(static_cast<unsigned>(n)))) << at;
        } else {
          EXPECT_GT(e_.thermo.temperature(g), Dyadic{}) << at;
        }
      }
    }
  }
}

TEST_F(RobinHoodProperties, PruningIsSound) {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (std::int64_t a = 0; a <= 4; ++a) {
      for (std::int64_t b = 0; b <= 4; ++b) {
        EXPECT_TRUE(s.eq(rh(n, a, b), e_.expand.rh_to_game(P(n, a, b), false))) << P(n, a, b).str();
      }
    }
  }
}

TEST_F(RobinHoodProperties, LittleJohnStopRecursion) {
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t b = 1; b <= a; ++b) {
      for (std::int64_t n = b + 1; n <= a + b + 12; ++n) {
        const std::string at = P(n, a, b).str();
        const GameId g = lj(n, a, b);
        EXPECT_GT(e_.thermo.temperature(g), Dyadic{}) << at;
        const Stops st = e_.thermo.stops(g);
        EXPECT_EQ(st.left, e_.thermo.stops(lj(n - b, a, 0)).right) << at;
        EXPECT_EQ(st.right, e_.thermo.stops(lj(n - b, a - b, b)).left) << at;
      }
    }
  }
}

TEST_F(RobinHoodProperties, WiseRobinHood) {
  for (std::int64_t a = 0; a <= 8; ++a) {
    for (std::int64_t b = 0; b <= 8; ++b) {
      for (std::int64_t n = a + b; n <= a + b + 12; ++n) {
        const Stops rh_stops = e_.thermo.stops(rh(n, a, b));
        EXPECT_EQ(rh_stops, e_.thermo.stops(lj(n, a, b))) << P(n, a, b).str();
        EXPECT_EQ(rh_stops, lj_stops_formula(P(n, a, b))) << P(n, a, b).str();
      }
    }
  }
}

}  // namespace
}  // namespace rh
