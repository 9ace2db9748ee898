#include "rhcgt/thermo.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace rh {
namespace {

// Piecewise-linear x(p) on p >= 0 that continues with slope `tail` after its
// last vertex. Scaffolds are trajectories; walls are trajectories with a
// vertical (tail 0) mast.
struct Trajectory {
  std::vector<WallPoint> pts;
  std::int64_t tail = 0;
};

Dyadic div_int(Dyadic d, std::int64_t s) {
  if (s == 0) throw std::domain_error("division by zero slope");
  if (s < 0) {
    d = -d;
    s = -s;
  }
  const auto u = static_cast<std::uint64_t>(s);
  if (!std::has_single_bit(u)) {
    throw std::domain_error("slope difference is not a power of two; result would not be dyadic");
  }
  return d.halve(std::countr_zero(u));
}

std::int64_t segment_slope(const WallPoint& a, const WallPoint& b) {
  return exact_quotient(b.x - a.x, b.p - a.p);
}

Dyadic value_at(const std::vector<WallPoint>& pts, std::int64_t tail, Dyadic p) {
  auto it = std::upper_bound(pts.begin(), pts.end(), p,
                             [](Dyadic v, const WallPoint& w) { return v < w.p; });
  if (it == pts.begin()) throw std::domain_error("wall evaluated below p = 0");
  const std::size_t i = static_cast<std::size_t>(it - pts.begin()) - 1;
  const std::int64_t slope = i + 1 == pts.size() ? tail : segment_slope(pts[i], pts[i + 1]);
  return pts[i].x + (p - pts[i].p).times(slope);
}

Dyadic value_at(const Trajectory& t, Dyadic p) { return value_at(t.pts, t.tail, p); }

void simplify(std::vector<WallPoint>& pts, std::int64_t tail) {
  std::vector<WallPoint> out;
  for (const WallPoint& v : pts) {
    if (!out.empty() && out.back().p == v.p) continue;
    while (out.size() >= 2 && segment_slope(out[out.size() - 2], out.back()) ==
                                  segment_slope(out.back(), v)) {
      out.pop_back();
    }
    out.push_back(v);
  }
  while (out.size() >= 2 && segment_slope(out[out.size() - 2], out.back()) == tail) out.pop_back();
  pts = std::move(out);
}

Trajectory from_wall(const Wall& w) { return Trajectory{w.vertices(), 0}; }

// x(p) + sign * p
Trajectory shear(Trajectory t, std::int64_t sign) {
  for (WallPoint& v : t.pts) v.x += v.p.times(sign);
  t.tail += sign;
  return t;
}

std::vector<Dyadic> merged_breakpoints(const std::vector<WallPoint>& a, const std::vector<WallPoint>& b) {
  std::vector<Dyadic> ps;
  for (const auto& v : a) ps.push_back(v.p);
  for (const auto& v : b) ps.push_back(v.p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

int sign_of(Dyadic d) { return d > Dyadic{} ? 1 : (d < Dyadic{} ? -1 : 0); }

// Pointwise max (or min) of two trajectories, with the crossing points added
// as vertices.
Trajectory envelope(const Trajectory& a, const Trajectory& b, bool upper) {
  const std::vector<Dyadic> ps = merged_breakpoints(a.pts, b.pts);
  auto pick = [upper](Dyadic x, Dyadic y) { return upper ? std::max(x, y) : std::min(x, y); };
  Trajectory out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Dyadic av = value_at(a, ps[i]);
    const Dyadic bv = value_at(b, ps[i]);
    out.pts.push_back({ps[i], pick(av, bv)});
    const Dyadic d0 = av - bv;
    if (i + 1 < ps.size()) {
      const Dyadic d1 = value_at(a, ps[i + 1]) - value_at(b, ps[i + 1]);
      if (sign_of(d0) * sign_of(d1) < 0) {
        const std::int64_t s = exact_quotient(d1 - d0, ps[i + 1] - ps[i]);
        const Dyadic pc = ps[i] + div_int(-d0, s);
        out.pts.push_back({pc, value_at(a, pc)});
      }
    } else {
      const std::int64_t s = a.tail - b.tail;
      if (sign_of(d0) * (s > 0 ? 1 : (s < 0 ? -1 : 0)) < 0) {
        const Dyadic pc = ps[i] + div_int(-d0, s);
        out.pts.push_back({pc, value_at(a, pc)});
      }
    }
  }
  out.tail = upper ? std::max(a.tail, b.tail) : std::min(a.tail, b.tail);
  simplify(out.pts, out.tail);
  return out;
}

// Least p with lhs(p) <= rhs(p), given lhs(0) >= rhs(0) and an eventually
// negative slope of lhs - rhs.
Dyadic first_meeting(const Trajectory& lhs, const Trajectory& rhs) {
  const std::vector<Dyadic> ps = merged_breakpoints(lhs.pts, rhs.pts);
  Dyadic prev_p, prev_d;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Dyadic d = value_at(lhs, ps[i]) - value_at(rhs, ps[i]);
    if (d <= Dyadic{}) {
      if (i == 0) {
        if (d < Dyadic{}) throw std::logic_error("left scaffold starts below the right scaffold");
        return ps[0];
      }
      const std::int64_t s = exact_quotient(d - prev_d, ps[i] - prev_p);
      return prev_p + div_int(-prev_d, s);
    }
    prev_p = ps[i];
    prev_d = d;
  }
  const std::int64_t s = lhs.tail - rhs.tail;
  if (s >= 0) throw std::logic_error("scaffolds never meet");
  return prev_p + div_int(-prev_d, s);
}

Wall truncated(const Trajectory& t, Dyadic at) {
  std::vector<WallPoint> pts;
  for (const auto& v : t.pts) {
    if (v.p < at) pts.push_back(v);
  }
  pts.push_back({at, value_at(t, at)});
  return Wall(std::move(pts));
}

}  // namespace

Wall::Wall(std::vector<WallPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.front().p != Dyadic{}) {
    throw std::invalid_argument("a wall must start at p = 0");
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!(vertices_[i - 1].p < vertices_[i].p)) {
      throw std::invalid_argument("wall vertices must strictly ascend in p");
    }
  }
  simplify(vertices_, 0);
}

Dyadic Wall::at(Dyadic p) const { return value_at(vertices_, 0, p); }

std::vector<std::int64_t> Wall::slopes() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) out.push_back(segment_slope(vertices_[i - 1], vertices_[i]));
  return out;
}

std::string to_string(TentClass c) {
  switch (c) {
    case TentClass::Mast: return "Mast";
    case TentClass::DT: return "DT";
    case TentClass::LST: return "LST";
    case TentClass::RST: return "RST";
    case TentClass::Other: return "Other";
  }
  return "?";
}

TentClass classify(const Thermograph& t) {
  if (t.left == t.right) return TentClass::Mast;
  const auto ls = t.left.slopes();
  const auto rs = t.right.slopes();
  // A sloped wall of a tent runs straight up to the apex.
  auto uniform = [](const std::vector<std::int64_t>& v, std::int64_t s) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [s](std::int64_t x) { return x == s; });
  };
  auto reaches_apex = [&t](const Wall& w) { return w.vertices().back().p == t.temperature; };
  if (uniform(ls, -1) && uniform(rs, 1) && reaches_apex(t.left) && reaches_apex(t.right)) return TentClass::DT;
  if (uniform(ls, -1) && rs.empty()) return TentClass::LST;
  if (ls.empty() && uniform(rs, 1)) return TentClass::RST;
  return TentClass::Other;
}

bool wall_leq(const Wall& w1, const Wall& w2) {
  for (Dyadic p : merged_breakpoints(w1.vertices(), w2.vertices())) {
    if (w1.at(p) > w2.at(p)) return false;
  }
  return true;
}

Stops Thermographer::stops(GameId g) {
  if (auto it = stops_memo_.find(g.index); it != stops_memo_.end()) return it->second;
  Stops out;
  if (auto x = number_value(g)) {
    out = Stops{*x, *x};
  } else {
    const GameNode n = store_.node(g);
    if (n.lefts.empty() || n.rights.empty()) {
      throw std::logic_error("non-number game with an empty option set");
    }
    out.left = stops(n.lefts[0]).right;
    for (GameId l : n.lefts) out.left = std::max(out.left, stops(l).right);
    out.right = stops(n.rights[0]).left;
    for (GameId r : n.rights) out.right = std::min(out.right, stops(r).left);
  }
  stops_memo_.emplace(g.index, out);
  return out;
}

std::optional<Dyadic> Thermographer::number_value(GameId g) {
  if (auto it = number_memo_.find(g.index); it != number_memo_.end()) return it->second;
  const GameNode n = store_.node(g);

  // g equals the simplest x with g^L <| x <| g^R for every option, if any.
  // R(g^L) < x forces g^L <| x and R(g^L) > x rules x out, so the candidate
  // set lies between the best option stops; only the ends need a direct
  // comparison.
  Bound lo, hi;
  for (GameId l : n.lefts) {
    const Dyadic v = stops(l).right;
    if (!lo.value || v > *lo.value) lo.value = v;
  }
  for (GameId r : n.rights) {
    const Dyadic v = stops(r).left;
    if (!hi.value || v < *hi.value) hi.value = v;
  }

  std::optional<Dyadic> out;
  if (!(lo.value && hi.value && *lo.value > *hi.value)) {
    if (lo.value) {
      const GameId x = store_.from_dyadic(*lo.value);
      lo.closed = std::none_of(n.lefts.begin(), n.lefts.end(), [&](GameId l) {
        return stops(l).right == *lo.value && store_.leq(x, l);
      });
    }
    if (hi.value) {
      const GameId x = store_.from_dyadic(*hi.value);
      hi.closed = std::none_of(n.rights.begin(), n.rights.end(), [&](GameId r) {
        return stops(r).left == *hi.value && store_.leq(r, x);
      });
    }
    out = simplest_in(lo, hi);
  }
  number_memo_.emplace(g.index, out);
  return out;
}

const Thermograph& Thermographer::thermograph(GameId g) {
  if (auto it = thermo_memo_.find(g.index); it != thermo_memo_.end()) return it->second;
  Thermograph out;
  if (auto x = number_value(g)) {
    out.left = out.right = Wall::mast(*x);
    out.temperature = -Dyadic::make(1, x->exp());
    out.mean = *x;
  } else {
    const GameNode n = store_.node(g);
    if (n.lefts.empty() || n.rights.empty()) {
      throw std::logic_error("non-number game with an empty option set");
    }
    std::optional<Trajectory> left_scaffold, right_scaffold;
    for (GameId l : n.lefts) {
      Trajectory t = shear(from_wall(thermograph(l).right), -1);
      left_scaffold = left_scaffold ? envelope(*left_scaffold, t, true) : t;
    }
    for (GameId r : n.rights) {
      Trajectory t = shear(from_wall(thermograph(r).left), +1);
      right_scaffold = right_scaffold ? envelope(*right_scaffold, t, false) : t;
    }
    out.temperature = first_meeting(*left_scaffold, *right_scaffold);
    out.mean = value_at(*left_scaffold, out.temperature);
    out.left = truncated(*left_scaffold, out.temperature);
    out.right = truncated(*right_scaffold, out.temperature);
  }
  return thermo_memo_.emplace(g.index, std::move(out)).first->second;
}

GameId Thermographer::translate(GameId g, Dyadic x) {
  if (x == Dyadic{}) return g;
  if (auto v = number_value(g)) return store_.from_dyadic(*v + x);
  const auto key = std::make_tuple(g.index, x.num(), x.exp());
  if (auto it = translate_memo_.find(key); it != translate_memo_.end()) return it->second;
  // A number added to a non-number shifts every option by the same amount.
  const GameNode n = store_.node(g);
  std::vector<GameId> lefts, rights;
  for (GameId l : n.lefts) lefts.push_back(translate(l, x));
  for (GameId r : n.rights) rights.push_back(translate(r, x));
  const GameId out = store_.make(std::move(lefts), std::move(rights));
  translate_memo_.emplace(key, out);
  return out;
}

GameId Thermographer::unfrozen(GameId g, Dyadic p) {
  const GameNode n = store_.node(g);
  std::vector<GameId> lefts, rights;
  for (GameId l : n.lefts) lefts.push_back(translate(penalize(l, p), -p));
  for (GameId r : n.rights) rights.push_back(translate(penalize(r, p), p));
  return store_.make(std::move(lefts), std::move(rights));
}

std::pair<Dyadic, Dyadic> Thermographer::freeze_point(GameId g) {
  if (auto it = freeze_memo_.find(g.index); it != freeze_memo_.end()) return it->second;
  std::pair<Dyadic, Dyadic> out;
  if (auto x = store_.to_dyadic(g)) {
    out = {-Dyadic::make(1, x->exp()), *x};
  } else {
    auto gap = [&](Dyadic q) {
      const Stops s = stops(unfrozen(g, q));
      return s.left - s.right;
    };
    auto agrees = [&](Dyadic q) { return gap(q) == Dyadic{}; };

    Dyadic t;
    if (!agrees(Dyadic{})) {
      Dyadic hi(1);
      while (!agrees(hi)) hi = hi.times(2);

      // Every breakpoint of the stop functions lies on this grid: each
      // level of the game tree can halve the finest denominator once.
      int max_exp = 0;
      std::unordered_set<std::uint32_t> seen;
      std::vector<GameId> stack{g};
      while (!stack.empty()) {
        const GameId cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur.index).second) continue;
        if (auto v = store_.as_canonical_number(cur)) {
          max_exp = std::max(max_exp, v->exp());
          continue;
        }
        const GameNode& node = store_.node(cur);
        stack.insert(stack.end(), node.lefts.begin(), node.lefts.end());
        stack.insert(stack.end(), node.rights.begin(), node.rights.end());
      }
      const int grid = std::min<int>(Dyadic::kMaxExp - 8, max_exp + static_cast<int>(store_.height(g)) + 2);

      std::int64_t lo_k = 0;
      std::int64_t hi_k = exact_quotient(hi, Dyadic::make(1, grid));
      while (hi_k - lo_k > 1) {
        const std::int64_t mid = lo_k + (hi_k - lo_k) / 2;
        if (agrees(Dyadic::make(mid, grid))) {
          hi_k = mid;
        } else {
          lo_k = mid;
        }
      }
      t = Dyadic::make(hi_k, grid);
      // Sharpen inside the last grid cell: the gap closes at slope 1 or 2.
      const Dyadic q = Dyadic::make(lo_k, grid);
      const Dyadic d = gap(q);
      for (Dyadic c : {q + d.halve(), q + d}) {
        if (c < t && c > q && agrees(c)) {
          t = c;
          break;
        }
      }
    }
    out = {t, stops(unfrozen(g, t)).left};
  }
  freeze_memo_.emplace(g.index, out);
  return out;
}

GameId Thermographer::penalize(GameId g, Dyadic p) {
  if (p < Dyadic{}) throw std::invalid_argument("penalty must be non-negative");
  if (store_.canonical(g) != g) throw std::invalid_argument("penalize expects a canonical form");
  const auto key = std::make_tuple(g.index, p.num(), p.exp());
  if (auto it = penalize_memo_.find(key); it != penalize_memo_.end()) return it->second;
  const auto [t, x] = freeze_point(g);
  const GameId out = p > t ? store_.from_dyadic(x) : unfrozen(g, p);
  penalize_memo_.emplace(key, out);
  return out;
}

}  // namespace rh
