#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rhcgt/dyadic.hpp"
#include "rhcgt/game.hpp"

namespace rh {

struct WallPoint {
  Dyadic p;
  Dyadic x;
  friend bool operator==(const WallPoint&, const WallPoint&) = default;
};

/// One side of a thermograph as x(p) for p >= 0. Vertices ascend in p and the
/// first one sits at p = 0; beyond the last vertex the wall is the vertical
/// mast at that vertex's x. Collinear interior vertices are never stored, so
/// equal walls have equal vertex lists.
class Wall {
 public:
  Wall() = default;
  explicit Wall(std::vector<WallPoint> vertices);

  static Wall mast(Dyadic x) { return Wall({WallPoint{Dyadic{}, x}}); }

  const std::vector<WallPoint>& vertices() const { return vertices_; }
  Dyadic at(Dyadic p) const;
  /// dx/dp of each finite segment, in order.
  std::vector<std::int64_t> slopes() const;
  /// x of the mast above the last vertex.
  Dyadic mast_x() const { return vertices_.back().x; }

  friend bool operator==(const Wall&, const Wall&) = default;

 private:
  std::vector<WallPoint> vertices_;
};

struct Thermograph {
  Wall left;
  Wall right;
  Dyadic temperature;
  Dyadic mean;
  friend bool operator==(const Thermograph&, const Thermograph&) = default;
};

enum class TentClass { Mast, DT, LST, RST, Other };

std::string to_string(TentClass c);

struct Stops {
  Dyadic left;
  Dyadic right;
  friend bool operator==(const Stops&, const Stops&) = default;
};

/// Exact shape classification. Games with temperature <= 0 are masts.
TentClass classify(const Thermograph& t);

/// w1(p) <= w2(p) for every p >= 0.
bool wall_leq(const Wall& w1, const Wall& w2);

/// Stops, number detection and thermographs over the forms held by a
/// GameStore. Works on any form, canonical or not; results are memoized per
/// game id and share the store's threading contract.
class Thermographer {
 public:
  explicit Thermographer(GameStore& store) : store_(store) {}

  GameStore& store() { return store_; }

  Stops stops(GameId g);

  /// The dyadic g equals, decided on the given form by the simplicity
  /// theorem (no canonicalization).
  std::optional<Dyadic> number_value(GameId g);

  const Thermograph& thermograph(GameId g);
  Dyadic temperature(GameId g) { return thermograph(g).temperature; }
  Dyadic mean(GameId g) { return thermograph(g).mean; }

  /// g penalized by p, built literally from the recursive definition
  /// (options penalized and offset by -p / +p until the stops first meet,
  /// the number they meet at afterwards). g must be in canonical form.
  /// Intended as an oracle for the scaffold-based walls; it is slow.
  GameId penalize(GameId g, Dyadic p);

  /// The least penalty at which the stops of the penalized form agree, with
  /// the agreed value. For numbers this is (-1/2^e, value).
  std::pair<Dyadic, Dyadic> freeze_point(GameId g);

 private:
  GameId unfrozen(GameId g, Dyadic p);
  /// g + x for a dyadic x, built option by option.
  GameId translate(GameId g, Dyadic x);

  GameStore& store_;
  std::unordered_map<std::uint32_t, Stops> stops_memo_;
  std::unordered_map<std::uint32_t, std::optional<Dyadic>> number_memo_;
  std::unordered_map<std::uint32_t, Thermograph> thermo_memo_;
  std::unordered_map<std::uint32_t, std::pair<Dyadic, Dyadic>> freeze_memo_;
  std::map<std::tuple<std::uint32_t, std::int64_t, int>, GameId> penalize_memo_;
  std::map<std::tuple<std::uint32_t, std::int64_t, int>, GameId> translate_memo_;
};

}  // namespace rh
