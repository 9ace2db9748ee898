#include <gtest/gtest.h>

#include <regex>

#include "rhcgt/expr.hpp"
#include "rhcgt/svg.hpp"
#include "support.hpp"

namespace rh {
namespace {

using testing::seeded;
using testing::uniform;

PositionTerm rh_term(std::int64_t n, std::int64_t a, std::int64_t b) { return {Ruleset::RH, RHPosition::make(n, a, b)}; }
PositionTerm lj_term(std::int64_t n, std::int64_t a, std::int64_t b) { return {Ruleset::LJ, RHPosition::make(n, a, b)}; }

TEST(ParseExpr, Examples) {
  EXPECT_EQ(parse_expr("9;3,2 + 4;2,1"), (Expr{{rh_term(9, 3, 2), rh_term(4, 2, 1)}}));
  EXPECT_EQ(parse_expr("lj:10;5,3"), (Expr{{lj_term(10, 5, 3)}}));
  EXPECT_EQ(parse_expr("7;5,3 + 3/2"), (Expr{{rh_term(7, 5, 3), Dyadic::make(3, 1)}}));
  EXPECT_EQ(parse_expr("  -5/8+ 2 ;1 , 1 "), (Expr{{Dyadic::make(-5, 3), rh_term(2, 1, 1)}}));
  EXPECT_EQ(parse_expr("4/8"), (Expr{{Dyadic::make(1, 1)}}));
}

std::size_t error_offset(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for \"" << text << "\"";
  return std::string::npos;
}

TEST(ParseExpr, ErrorsCarryOffsets) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("9;3"), 3u);
  EXPECT_EQ(error_offset("9;3,2 +"), 7u);
  EXPECT_EQ(error_offset("9;3,2 4;1,1"), 6u);
  EXPECT_EQ(error_offset("9;-3,2"), 2u);
  EXPECT_EQ(error_offset("-9;3,2"), 0u);
  EXPECT_EQ(error_offset("1/3"), 2u);
  EXPECT_EQ(error_offset("lj:x"), 3u);
  EXPECT_EQ(error_offset("99999999999999999999;1,1"), 0u);
  try {
    parse_expr("9;3,x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("at byte 4"), std::string::npos);
  }
}

TEST(ParseExpr, RenderRoundTrip) {
  auto rng = seeded(50);
  for (int i = 0; i < 300; ++i) {
    Expr e;
    const auto count = uniform(rng, 1, 4);
    for (std::int64_t k = 0; k < count; ++k) {
      switch (uniform(rng, 0, 2)) {
        case 0: e.terms.push_back(rh_term(uniform(rng, 0, 99), uniform(rng, 0, 30), uniform(rng, 0, 30))); break;
        case 1: e.terms.push_back(lj_term(uniform(rng, 0, 99), uniform(rng, 0, 30), uniform(rng, 0, 30))); break;
        default: e.terms.push_back(testing::random_dyadic(rng)); break;
      }
    }
    const std::string text = render(e);
    EXPECT_EQ(parse_expr(text), e) << text;
    EXPECT_EQ(render(parse_expr(text)), text);
  }
  EXPECT_EQ(render(parse_expr("9;3,2+lj:4;2,1+3/2")), "9;3,2 + lj:4;2,1 + 3/2");
}

TEST(ExprGame, SumsTerms) {
  Engine e;
  const GameId g = to_game(e, parse_expr("9;3,2 + 4;2,1"));
  EXPECT_EQ(e.thermo.stops(g), (Stops{9, -2}));
  const GameId h = to_game(e, parse_expr("lj:11;1,1 + 1/2"));
  EXPECT_EQ(e.thermo.stops(h), (Stops{Dyadic::make(21, 1), Dyadic::make(-19, 1)}));
  EXPECT_EQ(e.store.outcome(to_game(e, parse_expr("2;3,4"))).cls(), OutcomeClass::N);
}

std::vector<double> first_points(const std::string& svg) {
  std::vector<double> xs;
  static const std::regex polyline(R"re(<polyline points="([-0-9.]+),)re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), polyline); it != std::sregex_iterator(); ++it) {
    xs.push_back(std::stod((*it)[1]));
  }
  return xs;
}

TEST(Svg, DeterministicAndMirrored) {
  Engine e1, e2;
  const Thermograph& t1 = e1.thermo.thermograph(e1.expand.rh_to_game(RHPosition::make(12, 2, 1)));
  const Thermograph& t2 = e2.thermo.thermograph(e2.expand.rh_to_game(RHPosition::make(12, 2, 1)));
  const std::string a = thermograph_svg(t1, "12;2,1"), b = thermograph_svg(t2, "12;2,1");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(a.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(a.find("<title>12;2,1</title>"), std::string::npos);
  EXPECT_EQ(a.substr(a.size() - 7), "</svg>\n");
  // The left wall starts at the larger stop, drawn further left.
  const auto xs = first_points(a);
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_LT(xs[0], xs[1]);
  EXPECT_NE(thermograph_svg(t1, "a<b").find("a&lt;b"), std::string::npos);
}

TEST(Svg, HandlesMasts) {
  Engine e;
  const std::string s = thermograph_svg(e.thermo.thermograph(e.store.from_dyadic(Dyadic::make(3, 1))));
  EXPECT_EQ(first_points(s).size(), 2u);
  EXPECT_EQ(s.find("nan"), std::string::npos);
}

}  // namespace
}  // namespace rh
