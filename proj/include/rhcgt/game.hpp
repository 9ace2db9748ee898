#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rhcgt/dyadic.hpp"

namespace rh {

/// Handle to an interned game. Only meaningful together with the GameStore
/// that produced it.
struct GameId {
  std::uint32_t index = 0;
  friend auto operator<=>(GameId, GameId) = default;
};

enum class Player { Left, Right };

inline Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

enum class OutcomeClass { L, R, N, P };

struct Outcome {
  Player left_start_winner;
  Player right_start_winner;

  OutcomeClass cls() const;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

char to_char(OutcomeClass c);

/// Option sets are sorted by id and duplicate free.
struct GameNode {
  std::vector<GameId> lefts;
  std::vector<GameId> rights;
};

/// Raised when the store would grow past its configured node cap.
class StoreCapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rh

template <>
struct std::hash<rh::GameId> {
  std::size_t operator()(rh::GameId g) const noexcept { return std::hash<std::uint32_t>{}(g.index); }
};

namespace rh {

/// Interning store for short partizan games plus the memo tables of every
/// derived quantity. Nodes are immutable once interned and memo entries are
/// never invalidated.
///
/// A store is not synchronized: use one store per worker thread.
class GameStore {
 public:
  /// The cap defaults to the RH_STORE_CAP environment variable when set,
  /// unbounded otherwise.
  GameStore();
  explicit GameStore(std::size_t node_cap);

  GameStore(const GameStore&) = delete;
  GameStore& operator=(const GameStore&) = delete;

  GameId make(std::vector<GameId> lefts, std::vector<GameId> rights);
  const GameNode& node(GameId g) const { return nodes_.at(g.index); }
  std::size_t size() const { return nodes_.size(); }
  std::size_t node_cap() const { return cap_; }

  GameId zero() const { return GameId{0}; }
  GameId from_dyadic(Dyadic x);
  GameId nimber(std::uint32_t n);

  GameId negate(GameId g);
  GameId sum(GameId g, GameId h);

  Outcome outcome(GameId g);
  /// g <= h, by the recursive two-mover criterion.
  bool leq(GameId g, GameId h);
  bool eq(GameId g, GameId h) { return leq(g, h) && leq(h, g); }
  /// g and h incomparable.
  bool fuzzy(GameId g, GameId h) { return !leq(g, h) && !leq(h, g); }

  GameId canonical(GameId g);
  bool is_number(GameId g);
  /// The dyadic value of g when it is a number, recovered from its canonical
  /// form.
  std::optional<Dyadic> to_dyadic(GameId g);

  /// Structural recognizers for already-canonical shapes; they never
  /// canonicalize.
  std::optional<Dyadic> as_canonical_number(GameId g);
  std::optional<std::uint32_t> as_nimber(GameId g);

  /// Braces notation. Canonical numbers print as dyadics, nimbers as *n.
  std::string render(GameId g);

  /// Longest play sequence (either player) from g.
  std::uint32_t height(GameId g);

 private:
  struct KeyHash {
    std::size_t operator()(const GameNode& n) const noexcept;
  };
  struct KeyEq {
    bool operator()(const GameNode& a, const GameNode& b) const noexcept {
      return a.lefts == b.lefts && a.rights == b.rights;
    }
  };

  static std::uint64_t pair_key(GameId g, GameId h) {
    return (std::uint64_t{g.index} << 32) | h.index;
  }

  std::optional<Dyadic> canonical_number_value(GameId canonical_form);
  bool canonical_is_number(GameId canonical_form);

  std::size_t cap_;
  std::vector<GameNode> nodes_;
  std::unordered_map<GameNode, GameId, KeyHash, KeyEq> index_;

  std::vector<std::optional<Outcome>> outcome_memo_;
  std::vector<std::optional<GameId>> negate_memo_;
  std::vector<std::optional<GameId>> canonical_memo_;
  std::vector<std::optional<std::uint32_t>> height_memo_;
  std::unordered_map<std::uint64_t, bool> leq_memo_;
  std::unordered_map<std::uint64_t, GameId> sum_memo_;
  std::unordered_map<std::uint32_t, bool> number_memo_;
  std::unordered_map<std::uint32_t, std::optional<Dyadic>> value_memo_;
  std::unordered_map<std::uint32_t, std::optional<Dyadic>> structural_number_memo_;
  std::vector<GameId> nimbers_;
  std::map<std::pair<std::int64_t, int>, GameId> dyadic_memo_;
};

}  // namespace rh
