#include "rhcgt/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rhcgt/closed_form.hpp"

namespace rh {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

namespace {

struct Table1Row {
  std::int64_t n;
  const char* t54;
  const char* m54;
  const char* t53;
  const char* m53;
};

constexpr Table1Row kTable1[] = {
    {3, "0", "0", "0", "0"},          {4, "0", "0", "1/2", "1/2"},        {5, "1/2", "1/2", "1", "1"},
    {6, "5/4", "3/4", "7/4", "5/4"},  {7, "17/8", "7/8", "19/8", "13/8"}, {8, "49/16", "15/16", "3", "2"},
    {9, "4", "1", "7/2", "5/2"},      {10, "5", "1", "4", "3"},           {11, "6", "1", "4", "4"},
    {12, "7", "1", "4", "5"},         {13, "8", "1", "4", "6"},
};

/// Temperature is n - offset when increasing, the constant value otherwise.
struct Table2Row {
  std::int64_t a;
  std::int64_t b;
  bool increasing;
  const char* value;
  std::int64_t bound;
};

constexpr Table2Row kTable2[] = {
    {1, 1, true, "1", 1},      {1, 2, false, "1", 3},       {1, 3, false, "1", 4},    {2, 3, true, "3", 8},
    {2, 4, false, "2", 6},     {2, 9, false, "2", 11},      {3, 4, true, "4", 7},     {3, 5, false, "4", 10},
    {3, 6, false, "3", 9},     {5, 8, true, "17/2", 15},    {5, 9, false, "6", 16},   {7, 11, true, "23/2", 20},
    {7, 12, false, "9", 15},
};

Dyadic lit(const char* s) { return *Dyadic::parse(s); }

std::string pos_name(std::int64_t n, std::int64_t a, std::int64_t b) { return RHPosition::make(n, a, b).str(); }

const Thermograph& rh_thermo(Engine& e, std::int64_t n, std::int64_t a, std::int64_t b) {
  return e.thermo.thermograph(e.expand.rh_to_game(RHPosition::make(n, a, b)));
}

Stops rh_stops(Engine& e, RHPosition p) { return e.thermo.stops(e.expand.rh_to_game(p)); }
Stops lj_stops(Engine& e, RHPosition p) { return e.thermo.stops(e.expand.lj_to_game(p)); }

std::string stops_str(Stops s) { return "(" + s.left.str() + ", " + s.right.str() + ")"; }

Report table1(Engine& e, const VerifyOptions&) {
  Report r{"table1", {}};
  for (const Table1Row& row : kTable1) {
    for (const auto& [b, t, m] : {std::tuple{4, row.t54, row.m54}, std::tuple{3, row.t53, row.m53}}) {
      const Thermograph& th = rh_thermo(e, row.n, 5, b);
      const bool pass = th.temperature == lit(t) && th.mean == lit(m);
      r.checks.push_back({"t,m " + pos_name(row.n, 5, b), pass,
                          "expected " + std::string(t) + ", " + m + "; got " + th.temperature.str() + ", " +
                              th.mean.str()});
    }
  }
  return r;
}

Report table2(Engine& e, const VerifyOptions& o) {
  Report r{"table2", {}};
  for (const Table2Row& row : kTable2) {
    std::string detail = "ok";
    bool pass = true;
    for (std::int64_t n = row.bound; n <= row.bound + o.margin && pass; ++n) {
      const Dyadic want = row.increasing ? Dyadic(n) - lit(row.value) : lit(row.value);
      const Dyadic got = rh_thermo(e, n, row.a, row.b).temperature;
      if (got != want) {
        pass = false;
        detail = "n=" + std::to_string(n) + ": expected " + want.str() + ", got " + got.str();
      }
    }
    const std::string formula = row.increasing ? "n-" + std::string(row.value) : std::string(row.value);
    r.checks.push_back({"t(n;" + std::to_string(row.a) + "," + std::to_string(row.b) + ") = " + formula + " for n in [" +
                            std::to_string(row.bound) + ", " + std::to_string(row.bound + o.margin) + "]",
                        pass, detail});
  }
  return r;
}

Report main_theorem(Engine& e, const VerifyOptions& o) {
  Report r{"main-theorem", {}};
  for (std::int64_t a = 1; a <= o.max_wealth; ++a) {
    for (std::int64_t b = 1; b <= o.max_wealth; ++b) {
      const std::int64_t n_max = a + b + o.margin;
      const ThresholdReport rep = threshold_search(e, a, b, o.window, n_max);
      Check c{"formulas for (n;" + std::to_string(a) + "," + std::to_string(b) + ")", rep.n0.has_value(), ""};
      if (!rep.n0) {
        c.detail = "no threshold up to n=" + std::to_string(n_max);
      } else {
        c.detail = "n0=" + std::to_string(*rep.n0);
        for (std::int64_t n = *rep.n0; n <= n_max; ++n) {
          const Thermograph& th = rh_thermo(e, n, a, b);
          if (th.temperature != main_temperature(n, a, b) || th.mean != main_mean(n, a, b)) {
            c.pass = false;
            c.detail += "; mismatch at n=" + std::to_string(n);
            break;
          }
        }
      }
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

Report stops_suite(Engine& e, const VerifyOptions& o) {
  Report r{"stops", {}};
  for (std::int64_t a = 0; a <= o.max_wealth; ++a) {
    for (std::int64_t b = 0; b <= o.max_wealth; ++b) {
      Check c{"RH = LJ = formula stops for (n;" + std::to_string(a) + "," + std::to_string(b) + ")", true, "ok"};
      for (std::int64_t n = a + b; n <= a + b + o.margin && c.pass; ++n) {
        const RHPosition p = RHPosition::make(n, a, b);
        const Stops s_rh = rh_stops(e, p), s_lj = lj_stops(e, p), s_f = lj_stops_formula(p);
        if (!(s_rh == s_lj && s_lj == s_f)) {
          c.pass = false;
          c.detail = p.str() + ": RH " + stops_str(s_rh) + ", LJ " + stops_str(s_lj) + ", formula " + stops_str(s_f);
        }
      }
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

Report monotonicity(Engine& e, const VerifyOptions& o) {
  Report r{"monotonicity", {}};
  const std::int64_t w = o.max_wealth;
  auto lj = [&](std::int64_t n, std::int64_t a, std::int64_t b) { return lj_stops(e, RHPosition::make(n, a, b)); };

  // Little John stop monotonicity in wealth, and the two-step corollary.
  Check wealth{"LJ stops monotone in wealth (n >= a+b+1)", true, "ok"};
  Check twice{"Rs(n;a,b)* <= Rs(n;a+1,b-1)* (n >= a+b)", true, "ok"};
  for (std::int64_t a = 0; a <= w; ++a) {
    for (std::int64_t b = 0; b <= w; ++b) {
      for (std::int64_t n = a + b; n <= a + b + o.margin; ++n) {
        const Stops s = lj(n, a, b);
        if (n >= a + b + 1 && wealth.pass) {
          const Stops more_a = lj(n, a + 1, b), more_b = lj(n, a, b + 1);
          if (!(s.right <= more_a.right && more_b.right <= s.right && s.left <= more_a.left &&
                more_b.left <= s.left)) {
            wealth.pass = false;
            wealth.detail = "fails at " + pos_name(n, a, b);
          }
        }
        if (b >= 1 && twice.pass && !(s.right <= lj(n, a + 1, b - 1).right)) {
          twice.pass = false;
          twice.detail = "fails at " + pos_name(n, a, b);
        }
      }
    }
  }
  r.checks.push_back(wealth);
  r.checks.push_back(twice);

  // Option stop chains for a >= b >= 1, over the large-n window where the
  // closed forms already hold.
  Check chains{"Robin Hood option stop chains (a >= b >= 1, large n)", true, "ok"};
  for (std::int64_t a = 1; a <= w && chains.pass; ++a) {
    for (std::int64_t b = 1; b <= a && chains.pass; ++b) {
      const ThresholdReport rep = threshold_search(e, a, b, o.window, a + b + o.margin);
      if (!rep.n0) continue;
      for (std::int64_t n = *rep.n0; n <= a + b + o.margin && chains.pass; ++n) {
        std::vector<Stops> lefts, rights;
        for (std::int64_t i = 1; i <= b; ++i) {
          lefts.push_back(rh_stops(e, RHPosition::make(n - i, a, b - i)));
          rights.push_back(rh_stops(e, RHPosition::make(n - i, a - i, b)));
        }
        bool ok = lefts.back().right == n - b;
        for (std::size_t i = 0; i < lefts.size(); ++i) {
          ok = ok && lefts[i].left == n - b;
          if (i + 1 < lefts.size()) {
            ok = ok && lefts[i].right <= lefts[i + 1].right && rights[i].left >= rights[i + 1].left &&
                 rights[i].right >= rights[i + 1].right;
          }
        }
        if (!ok) {
          chains.pass = false;
          chains.detail = "fails at " + pos_name(n, a, b);
        }
      }
    }
  }
  r.checks.push_back(chains);
  return r;
}

std::string winner_name(Player p) { return p == Player::Left ? "Left" : "Right"; }

Report hotstrat(Engine& e, const VerifyOptions&) {
  Report r{"hotstrat", {}};
  const HotstratDemo d = hotstrat_demo(e);
  r.checks.push_back({"t(11;1,1) = 10", d.t1.temperature == 10, d.t1.temperature.str()});
  r.checks.push_back({"t(12;2,1) = 1", d.t2.temperature == 1, d.t2.temperature.str()});
  r.checks.push_back({"(11;1,1) = {10|-10}", d.canonical1 == "{10|-10}", d.canonical1});
  r.checks.push_back({"(12;2,1) = {11|{10|-10}}", d.canonical2 == "{11|{10|-10}}", d.canonical2});
  bool hot_loses = true, cool_wins = false;
  for (const HotstratMove& m : d.right_moves) {
    if (m.component == 1) hot_loses = hot_loses && m.winner_with_left_to_move == Player::Left;
    if (m.component == 2) cool_wins = cool_wins || m.winner_with_left_to_move == Player::Right;
  }
  r.checks.push_back({"every Right move in the hotter heap loses", hot_loses, ""});
  r.checks.push_back({"Right wins by moving in the cooler heap", cool_wins, ""});
  r.checks.push_back({"Right wins the sum moving first", d.right_start_winner == Player::Right,
                      winner_name(d.right_start_winner)});
  return r;
}

using SuiteFn = std::function<Report(Engine&, const VerifyOptions&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"table1", table1},         {"table2", table2},          {"main-theorem", main_theorem},
      {"stops", stops_suite},     {"monotonicity", monotonicity}, {"hotstrat", hotstrat},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table1", "table2", "main-theorem", "stops", "monotonicity",
                                                 "hotstrat"};
  return names;
}

Report run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
  Engine engine;
  return it->second(engine, options);
}

HotstratDemo hotstrat_demo(Engine& e) {
  HotstratDemo d{RHPosition::make(11, 1, 1), RHPosition::make(12, 2, 1), {}, {}, {}, {}, {}, Player::Left};
  const GameId g1 = e.expand.rh_to_game(d.g1), g2 = e.expand.rh_to_game(d.g2);
  d.t1 = e.thermo.thermograph(g1);
  d.t2 = e.thermo.thermograph(g2);
  d.canonical1 = e.store.render(e.store.canonical(g1));
  d.canonical2 = e.store.render(e.store.canonical(g2));
  for (const RHPosition& o : rh_options(d.g1, Player::Right)) {
    const GameId s = e.store.sum(e.expand.rh_to_game(o), g2);
    d.right_moves.push_back({1, o, e.store.outcome(s).left_start_winner});
  }
  for (const RHPosition& o : rh_options(d.g2, Player::Right)) {
    const GameId s = e.store.sum(g1, e.expand.rh_to_game(o));
    d.right_moves.push_back({2, o, e.store.outcome(s).left_start_winner});
  }
  d.right_start_winner = e.store.outcome(e.store.sum(g1, g2)).right_start_winner;
  return d;
}

}  // namespace rh
