#include "rhcgt/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace rh {
namespace {

template <typename T>
std::optional<T>& slot(std::vector<std::optional<T>>& memo, GameId g) {
  if (memo.size() <= g.index) memo.resize(g.index + 1);
  return memo[g.index];
}

void normalize(std::vector<GameId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t cap_from_env() {
  const char* raw = std::getenv("RH_STORE_CAP");
  if (raw == nullptr || *raw == '\0') return std::numeric_limits<std::size_t>::max();
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw std::invalid_argument("RH_STORE_CAP must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

OutcomeClass Outcome::cls() const {
  if (left_start_winner == Player::Left && right_start_winner == Player::Left) return OutcomeClass::L;
  if (left_start_winner == Player::Right && right_start_winner == Player::Right) return OutcomeClass::R;
  if (left_start_winner == Player::Left) return OutcomeClass::N;
  return OutcomeClass::P;
}

char to_char(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::L: return 'L';
    case OutcomeClass::R: return 'R';
    case OutcomeClass::N: return 'N';
    case OutcomeClass::P: return 'P';
  }
  return '?';
}

std::size_t GameStore::KeyHash::operator()(const GameNode& n) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint32_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (GameId g : n.lefts) mix(g.index);
  mix(0xffffffffu);
  for (GameId g : n.rights) mix(g.index);
  return h;
}

GameStore::GameStore() : GameStore(cap_from_env()) {}

GameStore::GameStore(std::size_t node_cap) : cap_(node_cap) {
  // Index 0 is always the empty game.
  make({}, {});
}

GameId GameStore::make(std::vector<GameId> lefts, std::vector<GameId> rights) {
  normalize(lefts);
  normalize(rights);
  GameNode key{std::move(lefts), std::move(rights)};
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  if (nodes_.size() >= cap_) {
    throw StoreCapacityExceeded("game store reached its cap of " + std::to_string(cap_) + " nodes");
  }
  for (GameId g : key.lefts) {
    if (g.index >= nodes_.size()) throw std::out_of_range("unknown left option id");
  }
  for (GameId g : key.rights) {
    if (g.index >= nodes_.size()) throw std::out_of_range("unknown right option id");
  }
  const GameId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

GameId GameStore::from_dyadic(Dyadic x) {
  const auto key = std::make_pair(x.num(), x.exp());
  if (auto it = dyadic_memo_.find(key); it != dyadic_memo_.end()) return it->second;
  GameId g;
  if (x == Dyadic{}) {
    g = zero();
  } else if (x.is_integer()) {
    // Iterate upward so long integer chains do not recurse deeply.
    const std::int64_t k = x.num();
    const std::int64_t step = k > 0 ? 1 : -1;
    GameId prev = zero();
    for (std::int64_t i = step; ; i += step) {
      const auto ikey = std::make_pair(i, 0);
      auto it = dyadic_memo_.find(ikey);
      GameId cur;
      if (it != dyadic_memo_.end()) {
        cur = it->second;
      } else {
        cur = step > 0 ? make({prev}, {}) : make({}, {prev});
        dyadic_memo_.emplace(ikey, cur);
      }
      prev = cur;
      if (i == k) break;
    }
    g = prev;
  } else {
    const Dyadic lower = Dyadic::make(x.num() - 1, x.exp());
    const Dyadic upper = Dyadic::make(x.num() + 1, x.exp());
    g = make({from_dyadic(lower)}, {from_dyadic(upper)});
  }
  dyadic_memo_.emplace(key, g);
  return g;
}

GameId GameStore::nimber(std::uint32_t n) {
  if (nimbers_.empty()) nimbers_.push_back(zero());
  while (nimbers_.size() <= n) {
    std::vector<GameId> opts(nimbers_.begin(), nimbers_.end());
    nimbers_.push_back(make(opts, opts));
  }
  return nimbers_[n];
}

GameId GameStore::negate(GameId g) {
  if (auto& m = slot(negate_memo_, g)) return *m;
  const GameNode n = node(g);
  std::vector<GameId> lefts, rights;
  lefts.reserve(n.rights.size());
  rights.reserve(n.lefts.size());
  for (GameId r : n.rights) lefts.push_back(negate(r));
  for (GameId l : n.lefts) rights.push_back(negate(l));
  const GameId out = make(std::move(lefts), std::move(rights));
  slot(negate_memo_, g) = out;
  slot(negate_memo_, out) = g;
  return out;
}

GameId GameStore::sum(GameId g, GameId h) {
  if (g == zero()) return h;
  if (h == zero()) return g;
  if (h < g) std::swap(g, h);
  const auto key = pair_key(g, h);
  if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return it->second;
  const GameNode gn = node(g);
  const GameNode hn = node(h);
  std::vector<GameId> lefts, rights;
  for (GameId gl : gn.lefts) lefts.push_back(sum(gl, h));
  for (GameId hl : hn.lefts) lefts.push_back(sum(g, hl));
  for (GameId gr : gn.rights) rights.push_back(sum(gr, h));
  for (GameId hr : hn.rights) rights.push_back(sum(g, hr));
  const GameId out = make(std::move(lefts), std::move(rights));
  sum_memo_.emplace(key, out);
  return out;
}

Outcome GameStore::outcome(GameId g) {
  if (auto& m = slot(outcome_memo_, g)) return *m;
  const GameNode n = node(g);
  Outcome out{Player::Right, Player::Left};
  for (GameId l : n.lefts) {
    if (outcome(l).right_start_winner == Player::Left) {
      out.left_start_winner = Player::Left;
      break;
    }
  }
  for (GameId r : n.rights) {
    if (outcome(r).left_start_winner == Player::Right) {
      out.right_start_winner = Player::Right;
      break;
    }
  }
  slot(outcome_memo_, g) = out;
  return out;
}

bool GameStore::leq(GameId g, GameId h) {
  if (g == h) return true;
  const auto key = pair_key(g, h);
  if (auto it = leq_memo_.find(key); it != leq_memo_.end()) return it->second;
  // g <= h unless some g^L >= h or some h^R <= g.
  bool result = true;
  const std::vector<GameId> gl = node(g).lefts;
  for (GameId x : gl) {
    if (leq(h, x)) {
      result = false;
      break;
    }
  }
  if (result) {
    const std::vector<GameId> hr = node(h).rights;
    for (GameId y : hr) {
      if (leq(y, g)) {
        result = false;
        break;
      }
    }
  }
  leq_memo_.emplace(key, result);
  return result;
}

GameId GameStore::canonical(GameId g) {
  if (auto& m = slot(canonical_memo_, g)) return *m;
  const GameNode n = node(g);
  std::vector<GameId> lefts, rights;
  for (GameId l : n.lefts) lefts.push_back(canonical(l));
  for (GameId r : n.rights) rights.push_back(canonical(r));
  normalize(lefts);
  normalize(rights);

  // Canonical forms are unique per value, so distinct ids among canonical
  // options are distinct values. Every intermediate form equals g, which is
  // what the reversibility tests compare against.
  bool changed = true;
  while (changed) {
    changed = false;

    auto drop_dominated = [this](std::vector<GameId>& opts, bool left_side) {
      std::vector<GameId> kept;
      for (GameId x : opts) {
        bool dominated = false;
        for (GameId y : opts) {
          if (x == y) continue;
          if (left_side ? leq(x, y) : leq(y, x)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(x);
      }
      const bool removed = kept.size() != opts.size();
      opts = std::move(kept);
      return removed;
    };
    if (drop_dominated(lefts, true)) changed = true;
    if (drop_dominated(rights, false)) changed = true;

    for (std::size_t i = 0; i < lefts.size() && !changed; ++i) {
      const std::vector<GameId> xr = node(lefts[i]).rights;
      for (GameId reverse : xr) {
        if (leq(reverse, g)) {
          std::vector<GameId> replacement = node(reverse).lefts;
          lefts.erase(lefts.begin() + static_cast<std::ptrdiff_t>(i));
          lefts.insert(lefts.end(), replacement.begin(), replacement.end());
          normalize(lefts);
          changed = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < rights.size() && !changed; ++i) {
      const std::vector<GameId> xl = node(rights[i]).lefts;
      for (GameId reverse : xl) {
        if (leq(g, reverse)) {
          std::vector<GameId> replacement = node(reverse).rights;
          rights.erase(rights.begin() + static_cast<std::ptrdiff_t>(i));
          rights.insert(rights.end(), replacement.begin(), replacement.end());
          normalize(rights);
          changed = true;
          break;
        }
      }
    }
  }

  const GameId out = make(std::move(lefts), std::move(rights));
  slot(canonical_memo_, g) = out;
  slot(canonical_memo_, out) = out;
  return out;
}

bool GameStore::canonical_is_number(GameId c) {
  if (auto it = number_memo_.find(c.index); it != number_memo_.end()) return it->second;
  const GameNode n = node(c);
  bool result = true;
  for (GameId l : n.lefts) {
    if (!canonical_is_number(l)) result = false;
  }
  for (GameId r : n.rights) {
    if (!canonical_is_number(r)) result = false;
  }
  for (GameId l : n.lefts) {
    for (GameId r : n.rights) {
      if (!result) break;
      if (!(leq(l, r) && !leq(r, l))) result = false;
    }
  }
  number_memo_.emplace(c.index, result);
  return result;
}

bool GameStore::is_number(GameId g) { return canonical_is_number(canonical(g)); }

std::optional<Dyadic> GameStore::canonical_number_value(GameId c) {
  if (auto it = value_memo_.find(c.index); it != value_memo_.end()) return it->second;
  std::optional<Dyadic> out;
  if (canonical_is_number(c)) {
    const GameNode n = node(c);
    Bound lo, hi;
    for (GameId l : n.lefts) {
      const Dyadic v = *canonical_number_value(l);
      if (!lo.value || v > *lo.value) lo.value = v;
    }
    for (GameId r : n.rights) {
      const Dyadic v = *canonical_number_value(r);
      if (!hi.value || v < *hi.value) hi.value = v;
    }
    out = simplest_in(lo, hi);
  }
  value_memo_.emplace(c.index, out);
  return out;
}

std::optional<Dyadic> GameStore::to_dyadic(GameId g) { return canonical_number_value(canonical(g)); }

std::optional<Dyadic> GameStore::as_canonical_number(GameId g) {
  if (auto it = structural_number_memo_.find(g.index); it != structural_number_memo_.end()) {
    return it->second;
  }
  const GameNode n = node(g);
  std::optional<Dyadic> out;
  if (n.lefts.size() <= 1 && n.rights.size() <= 1) {
    Bound lo, hi;
    bool ok = true;
    if (!n.lefts.empty()) {
      lo.value = as_canonical_number(n.lefts[0]);
      ok = ok && lo.value.has_value();
    }
    if (!n.rights.empty()) {
      hi.value = as_canonical_number(n.rights[0]);
      ok = ok && hi.value.has_value();
    }
    if (ok) {
      if (auto v = simplest_in(lo, hi); v && from_dyadic(*v) == g) out = v;
    }
  }
  structural_number_memo_.emplace(g.index, out);
  return out;
}

std::optional<std::uint32_t> GameStore::as_nimber(GameId g) {
  const GameNode n = node(g);
  if (n.lefts != n.rights) return std::nullopt;
  const auto k = static_cast<std::uint32_t>(n.lefts.size());
  std::vector<GameId> expected;
  for (std::uint32_t i = 0; i < k; ++i) expected.push_back(nimber(i));
  normalize(expected);
  if (expected != n.lefts) return std::nullopt;
  return k;
}

std::string GameStore::render(GameId g) {
  if (auto v = as_canonical_number(g)) return v->str();
  if (auto k = as_nimber(g)) return *k == 1 ? std::string("*") : "*" + std::to_string(*k);
  const GameNode n = node(g);
  std::string out = "{";
  for (std::size_t i = 0; i < n.lefts.size(); ++i) {
    if (i > 0) out += ",";
    out += render(n.lefts[i]);
  }
  out += "|";
  for (std::size_t i = 0; i < n.rights.size(); ++i) {
    if (i > 0) out += ",";
    out += render(n.rights[i]);
  }
  out += "}";
  return out;
}

std::uint32_t GameStore::height(GameId g) {
  if (auto& m = slot(height_memo_, g)) return *m;
  const GameNode n = node(g);
  std::uint32_t h = 0;
  for (GameId l : n.lefts) h = std::max(h, height(l) + 1);
  for (GameId r : n.rights) h = std::max(h, height(r) + 1);
  slot(height_memo_, g) = h;
  return h;
}

}  // namespace rh
