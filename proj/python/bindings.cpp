#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhcgt/closed_form.hpp"
#include "rhcgt/expr.hpp"
#include "rhcgt/pingala.hpp"
#include "rhcgt/svg.hpp"
#include "rhcgt/verify.hpp"

namespace py = pybind11;
using namespace rh;

namespace {

py::object fraction(Dyadic d) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(d.num(), py::int_(1) << py::int_(d.exp()));
}

const char* player_name(Player p) { return p == Player::Left ? "Left" : "Right"; }

Player parse_player(const std::string& s) {
  if (s == "L" || s == "Left") return Player::Left;
  if (s == "R" || s == "Right") return Player::Right;
  throw py::value_error("player must be 'L' or 'R'");
}

Ruleset parse_ruleset(const std::string& s) {
  if (s == "rh") return Ruleset::RH;
  if (s == "lj") return Ruleset::LJ;
  throw py::value_error("ruleset must be 'rh' or 'lj'");
}

py::list wall_points(const Wall& w) {
  py::list out;
  for (const WallPoint& v : w.vertices()) out.append(py::make_tuple(fraction(v.p), fraction(v.x)));
  return out;
}

py::dict thermograph_dict(const Thermograph& t) {
  py::dict d;
  d["temperature"] = fraction(t.temperature);
  d["mean"] = fraction(t.mean);
  d["left_wall"] = wall_points(t.left);
  d["right_wall"] = wall_points(t.right);
  d["shape"] = to_string(classify(t));
  return d;
}

/// One engine per Python object; memo tables persist across calls.
class PyEngine {
 public:
  PyEngine() = default;
  explicit PyEngine(std::size_t cap) : engine_(cap) {}

  py::dict evaluate(const std::string& text) {
    const GameId g = to_game(engine_, parse_expr(text));
    const Stops s = engine_.thermo.stops(g);
    const rh::Outcome o = engine_.store.outcome(g);
    py::dict d;
    d["ls"] = fraction(s.left);
    d["rs"] = fraction(s.right);
    d["outcome"] = std::string(1, to_char(o.cls()));
    d["left_start_winner"] = player_name(o.left_start_winner);
    d["right_start_winner"] = player_name(o.right_start_winner);
    return d;
  }

  std::string canonical(const std::string& text) {
    return engine_.store.render(engine_.store.canonical(to_game(engine_, parse_expr(text))));
  }

  py::dict thermograph(std::int64_t n, std::int64_t a, std::int64_t b, const std::string& ruleset) {
    return thermograph_dict(engine_.thermo.thermograph(game(n, a, b, ruleset)));
  }

  std::string svg(std::int64_t n, std::int64_t a, std::int64_t b, const std::string& ruleset) {
    const RHPosition pos = RHPosition::make(n, a, b);
    const std::string title = (ruleset == "lj" ? "lj:" : "") + std::to_string(n) + ";" + std::to_string(a) + "," +
                              std::to_string(b);
    return thermograph_svg(engine_.thermo.thermograph(game(pos.n, pos.a, pos.b, ruleset)), title);
  }

  std::size_t size() const { return engine_.store.size(); }

 private:
  GameId game(std::int64_t n, std::int64_t a, std::int64_t b, const std::string& ruleset) {
    return engine_.expand.to_game(parse_ruleset(ruleset), RHPosition::make(n, a, b));
  }

  Engine engine_;
};

}  // namespace

PYBIND11_MODULE(_rhcgt, m) {
  m.doc() = "Robin Hood and Little John game engine";

  py::register_exception<StoreCapacityExceeded>(m, "StoreCapacityExceeded", PyExc_MemoryError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DyadicOverflow& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  py::class_<PyEngine>(m, "Engine")
      .def(py::init<>())
      .def(py::init<std::size_t>(), py::arg("node_cap"))
      .def("evaluate", &PyEngine::evaluate, py::arg("expr"),
           "Stops and outcome of a sum such as '9;3,2 + lj:4;2,1 + 3/2'.")
      .def("canonical", &PyEngine::canonical, py::arg("expr"))
      .def("thermograph", &PyEngine::thermograph, py::arg("n"), py::arg("a"), py::arg("b"),
           py::arg("ruleset") = "rh")
      .def("svg", &PyEngine::svg, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("ruleset") = "rh")
      .def_property_readonly("size", &PyEngine::size, "Number of interned game forms.");

  m.def(
      "lj_stops_formula",
      [](std::int64_t n, std::int64_t a, std::int64_t b) {
        const Stops s = lj_stops_formula(RHPosition::make(n, a, b));
        return py::make_tuple(fraction(s.left), fraction(s.right));
      },
      py::arg("n"), py::arg("a"), py::arg("b"));
  m.def(
      "main_temperature", [](std::int64_t n, std::int64_t a, std::int64_t b) { return fraction(main_temperature(n, a, b)); },
      py::arg("n"), py::arg("a"), py::arg("b"));
  m.def(
      "main_mean", [](std::int64_t n, std::int64_t a, std::int64_t b) { return fraction(main_mean(n, a, b)); },
      py::arg("n"), py::arg("a"), py::arg("b"));
  m.def(
      "mp_from_pair",
      [](std::uint64_t a, std::uint64_t b) {
        const MPLocation loc = mp_from_pair(a, b);
        return py::make_tuple(loc.seq.u0(), loc.seq.u1(), loc.mu);
      },
      py::arg("a"), py::arg("b"), "Seeds (U0, U1) and index mu of the MP-sequence through min(a,b), max(a,b).");
  m.def(
      "golden_class", [](std::uint64_t a, std::uint64_t b) { return to_string(golden_class(a, b)); }, py::arg("a"),
      py::arg("b"));
  m.def(
      "euclid_winner",
      [](std::uint64_t x, std::uint64_t y) {
        const EuclidResult r = euclid_winner(x, y);
        return py::make_tuple(r.mover_wins, r.winning_moves);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "lj_path",
      [](std::int64_t n, std::int64_t a, std::int64_t b, const std::string& start) {
        py::list out;
        for (const PathStep& s : lj_path(RHPosition::make(n, a, b), parse_player(start)).steps) {
          out.append(py::make_tuple(player_name(s.mover), s.removed,
                                    py::make_tuple(s.position.n, s.position.a, s.position.b)));
        }
        return out;
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("start") = "R");
  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::int64_t max_wealth, std::int64_t margin, std::int64_t window) {
        const Report r = run_suite(suite, VerifyOptions{max_wealth, margin, window});
        py::list checks;
        for (const Check& c : r.checks) checks.append(py::make_tuple(c.name, c.pass, c.detail));
        return py::make_tuple(r.ok(), checks);
      },
      py::arg("suite"), py::arg("max_wealth") = 8, py::arg("margin") = 12, py::arg("window") = 5);
}
