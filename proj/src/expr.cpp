#include "rhcgt/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>

namespace rh {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr out;
    out.terms.push_back(term());
    while (true) {
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      out.terms.push_back(term());
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  /// A non-negative decimal integer; a leading minus is reported as such.
  std::int64_t natural(const char* what) {
    skip_space();
    if (!at_end() && text_[pos_] == '-') throw ParseError(std::string(what) + " must be non-negative", pos_);
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) throw ParseError(std::string(what) + " out of range", start);
    return value;
  }

  Term term() {
    skip_space();
    const std::size_t start = pos_;
    if (text_.substr(pos_, 3) == "lj:") {
      pos_ += 3;
      return position(Ruleset::LJ);
    }
    const bool negative = accept('-');
    skip_space();
    const std::size_t digits = pos_;
    const std::int64_t first = natural("integer");
    skip_space();
    if (!at_end() && text_[pos_] == ';') {
      if (negative) throw ParseError("heap size must be non-negative", start);
      pos_ = digits;
      return position(Ruleset::RH);
    }
    std::int64_t den = 1;
    if (accept('/')) {
      const std::size_t den_at = pos_;
      den = natural("denominator");
      if (den <= 0 || (den & (den - 1)) != 0) throw ParseError("denominator must be a power of two", den_at);
    }
    const std::string literal = (negative ? "-" : "") + std::to_string(first) + "/" + std::to_string(den);
    const std::optional<Dyadic> value = Dyadic::parse(literal);
    if (!value) throw ParseError("dyadic literal out of range", start);
    return *value;
  }

  Term position(Ruleset ruleset) {
    const std::int64_t n = natural("heap size");
    expect(';');
    const std::int64_t a = natural("Left wealth");
    expect(',');
    const std::int64_t b = natural("Right wealth");
    return PositionTerm{ruleset, RHPosition::make(n, a, b)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& expr) {
  std::string out;
  for (const Term& t : expr.terms) {
    if (!out.empty()) out += " + ";
    if (const auto* p = std::get_if<PositionTerm>(&t)) {
      if (p->ruleset == Ruleset::LJ) out += "lj:";
      out += std::to_string(p->pos.n) + ";" + std::to_string(p->pos.a) + "," + std::to_string(p->pos.b);
    } else {
      out += std::get<Dyadic>(t).str();
    }
  }
  return out;
}

GameId to_game(Engine& engine, const Expr& expr) {
  std::optional<GameId> total;
  for (const Term& t : expr.terms) {
    const GameId g = std::holds_alternative<PositionTerm>(t)
                         ? engine.expand.to_game(std::get<PositionTerm>(t).ruleset, std::get<PositionTerm>(t).pos)
                         : engine.store.from_dyadic(std::get<Dyadic>(t));
    total = total ? engine.store.sum(*total, g) : g;
  }
  return total.value_or(engine.store.zero());
}

}  // namespace rh
