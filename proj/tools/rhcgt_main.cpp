#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "rhcgt/expr.hpp"
#include "rhcgt/robinhood.hpp"
#include "rhcgt/svg.hpp"
#include "rhcgt/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rh;

json wall_json(const Wall& w) {
  json out = json::array();
  for (const WallPoint& v : w.vertices()) out.push_back({{"p", v.p.str()}, {"x", v.x.str()}});
  return out;
}

json thermograph_json(const Thermograph& t) {
  return {{"temperature", t.temperature.str()},
          {"mean", t.mean.str()},
          {"left_wall", wall_json(t.left)},
          {"right_wall", wall_json(t.right)}};
}

std::string wall_text(const Wall& w) {
  std::string out;
  for (const WallPoint& v : w.vertices()) out += "(" + v.p.str() + "," + v.x.str() + ")";
  return out;
}

const char* player_name(Player p) { return p == Player::Left ? "Left" : "Right"; }

struct EvalFlags {
  bool stops = false, outcome = false, canonical = false, temp = false, mean = false, json = false;
};

int cmd_eval(const std::string& text, EvalFlags f) {
  const Expr expr = parse_expr(text);
  Engine e;
  const GameId g = to_game(e, expr);
  if (!(f.stops || f.outcome || f.canonical || f.temp || f.mean)) f.stops = f.outcome = true;
  json out = {{"expr", render(expr)}};
  if (f.stops) {
    const Stops s = e.thermo.stops(g);
    out["ls"] = s.left.str();
    out["rs"] = s.right.str();
  }
  if (f.outcome) {
    const Outcome o = e.store.outcome(g);
    out["outcome"] = std::string(1, to_char(o.cls()));
    out["left_start_winner"] = player_name(o.left_start_winner);
    out["right_start_winner"] = player_name(o.right_start_winner);
  }
  if (f.canonical) out["canonical"] = e.store.render(e.store.canonical(g));
  if (f.temp) out["temperature"] = e.thermo.temperature(g).str();
  if (f.mean) out["mean"] = e.thermo.mean(g).str();
  if (f.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const char* key : {"ls", "rs", "outcome", "left_start_winner", "right_start_winner", "canonical",
                            "temperature", "mean"}) {
      if (out.contains(key)) std::cout << key << "=" << out[key].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_thermo(const std::string& text, bool as_json, const std::string& svg_path) {
  const Expr expr = parse_expr(text);
  if (expr.terms.size() != 1 || !std::holds_alternative<PositionTerm>(expr.terms[0])) {
    std::cerr << "error: thermo takes exactly one position\n";
    return 2;
  }
  Engine e;
  const Thermograph& t = e.thermo.thermograph(to_game(e, expr));
  if (!svg_path.empty()) {
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << svg_path << "\n";
      return 1;
    }
    f << thermograph_svg(t, render(expr));
  }
  if (as_json) {
    std::cout << thermograph_json(t).dump(2) << "\n";
  } else if (svg_path.empty()) {
    std::cout << "temperature=" << t.temperature.str() << "\nmean=" << t.mean.str()
              << "\nleft_wall=" << wall_text(t.left) << "\nright_wall=" << wall_text(t.right)
              << "\nshape=" << to_string(classify(t)) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& o, bool as_json) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  json out = json::array();
  for (const std::string& name : names) {
    const Report r = run_suite(name, o);
    ok = ok && r.ok();
    if (as_json) {
      json checks = json::array();
      for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
      continue;
    }
    for (const Check& c : r.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
      if (!c.pass || !c.detail.empty()) std::cout << " [" << c.detail << "]";
      std::cout << "\n";
    }
    std::cout << r.suite << ": " << r.passed() << "/" << r.checks.size() << " checks pass\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_path(const std::string& text, const std::string& start) {
  const Expr expr = parse_expr(text);
  if (expr.terms.size() != 1 || !std::holds_alternative<PositionTerm>(expr.terms[0])) {
    std::cerr << "error: path takes exactly one position\n";
    return 2;
  }
  const RHPosition pos = std::get<PositionTerm>(expr.terms[0]).pos;
  const PathTrace trace = lj_path(pos, start == "L" ? Player::Left : Player::Right);
  std::cout << "start " << pos.str() << " wealth (" << pos.a << "," << pos.b << ")\n";
  const auto& steps = trace.steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const PathStep& s = steps[i];
    // Once a wealth is zero the remaining moves take one token each; print them as one run.
    std::size_t j = i;
    while (j + 1 < steps.size() && steps[j + 1].removed == 1 && steps[j + 1].mover == s.mover && s.removed == 1) ++j;
    if (j > i) {
      std::cout << player_name(s.mover) << " removes 1 token per move, " << (j - i + 1) << " moves -> "
                << steps[j].position.str() << " wealth (" << steps[j].position.a << "," << steps[j].position.b << ")\n";
      i = j;
      continue;
    }
    std::cout << player_name(s.mover) << " removes " << s.removed << " -> " << s.position.str() << " wealth ("
              << s.position.a << "," << s.position.b << ")\n";
  }
  return 0;
}

int cmd_hotstrat() {
  Engine e;
  const HotstratDemo d = hotstrat_demo(e);
  std::cout << "G1 = " << d.g1.str() << " = " << d.canonical1 << ", t = " << d.t1.temperature.str() << "\n";
  std::cout << "G2 = " << d.g2.str() << " = " << d.canonical2 << ", t = " << d.t2.temperature.str() << "\n";
  std::cout << "Right to move in G1 + G2:\n";
  for (const HotstratMove& m : d.right_moves) {
    std::cout << "  move in G" << m.component << " (" << (m.component == 1 ? "hotter" : "cooler") << ") to "
              << m.after.str() << ": " << player_name(m.winner_with_left_to_move) << " wins\n";
  }
  std::cout << "Right moving first: " << player_name(d.right_start_winner) << " wins\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robin Hood and Little John game engine"};
  app.require_subcommand(1);

  std::string expr_text;
  EvalFlags flags;
  auto* eval = app.add_subcommand("eval", "Evaluate a sum of positions");
  eval->add_option("expr", expr_text, "e.g. \"9;3,2 + 4;2,1\"")->required();
  eval->add_flag("--stops", flags.stops, "Left and Right stops");
  eval->add_flag("--outcome", flags.outcome, "Outcome class and winners");
  eval->add_flag("--canonical", flags.canonical, "Canonical form in braces notation");
  eval->add_flag("--temp", flags.temp, "Temperature");
  eval->add_flag("--mean", flags.mean, "Mean value");
  eval->add_flag("--json", flags.json, "Emit JSON");

  bool thermo_json = false;
  std::string svg_path;
  auto* thermo = app.add_subcommand("thermo", "Thermograph of one position");
  thermo->add_option("expr", expr_text, "e.g. \"11;1,1\"")->required();
  thermo->add_flag("--json", thermo_json, "Emit JSON");
  thermo->add_option("--svg", svg_path, "Write an SVG plot to this path");

  std::string suite;
  VerifyOptions vopts;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--max-wealth", vopts.max_wealth, "Largest wealth in sweeps")->check(CLI::Range(1, 30));
  verify->add_option("--margin", vopts.margin, "Heaps scanned up to a+b+margin")->check(CLI::Range(1, 60));
  verify->add_option("--window", vopts.window, "Threshold window")->check(CLI::Range(1, 60));
  verify->add_flag("--json", verify_json, "Emit JSON");

  std::string start = "R";
  auto* path = app.add_subcommand("path", "Little John path from a position");
  path->add_option("pos", expr_text, "e.g. \"100;27,17\"")->required();
  path->add_option("--start", start, "Player making the first move")->check(CLI::IsMember({"L", "R"}));

  auto* hot = app.add_subcommand("hotstrat-demo", "The two-heap sum where hotstrat loses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // Help and version requests exit 0; every other usage error exits 2.
    return app.exit(err) == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(expr_text, flags);
    if (*thermo) return cmd_thermo(expr_text, thermo_json, svg_path);
    if (*verify) return cmd_verify(suite, vopts, verify_json);
    if (*path) return cmd_path(expr_text, start);
    if (*hot) return cmd_hotstrat();
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const StoreCapacityExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
