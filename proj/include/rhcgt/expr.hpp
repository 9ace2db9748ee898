#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rhcgt/robinhood.hpp"

namespace rh {

struct PositionTerm {
  Ruleset ruleset = Ruleset::RH;
  RHPosition pos;
  friend bool operator==(const PositionTerm&, const PositionTerm&) = default;
};

using Term = std::variant<PositionTerm, Dyadic>;

/// A disjunctive sum of heaps and dyadic literals.
struct Expr {
  std::vector<Term> terms;
  friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  /// Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar, whitespace insignificant:
///   expr := term ("+" term)*
///   term := ["lj:"] INT ";" INT "," INT | ["-"] INT ["/" POW2]
Expr parse_expr(std::string_view text);

/// Inverse of parse_expr: "9;3,2 + lj:4;2,1 + 3/2".
std::string render(const Expr& expr);

GameId to_game(Engine& engine, const Expr& expr);

}  // namespace rh
