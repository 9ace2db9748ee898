#include "rhcgt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace rh {

namespace {

constexpr double kWidth = 480;
constexpr double kHeight = 360;
constexpr double kMargin = 40;

double to_double(Dyadic d) { return static_cast<double>(d.num()) / static_cast<double>(std::int64_t{1} << d.exp()); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string thermograph_svg(const Thermograph& t, const std::string& title) {
  const Dyadic top_p = std::max(t.temperature, Dyadic{});
  double x_hi = to_double(t.left.vertices().front().x);
  double x_lo = to_double(t.right.vertices().front().x);
  const double p_top = to_double(top_p) + std::max(1.0, to_double(top_p) * 0.25);
  if (x_hi - x_lo < 2) {
    x_hi += 1;
    x_lo -= 1;
  }
  const double pad = (x_hi - x_lo) * 0.05;
  x_hi += pad;
  x_lo -= pad;

  // Larger values sit further left.
  auto sx = [&](double x) { return kMargin + (x_hi - x) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  auto sy = [&](double p) { return kHeight - kMargin - p / p_top * (kHeight - 2 * kMargin); };

  auto polyline = [&](const Wall& w) {
    std::string pts;
    for (const WallPoint& v : w.vertices()) {
      if (v.p > top_p) break;
      pts += num(sx(to_double(v.x))) + "," + num(sy(to_double(v.p))) + " ";
    }
    pts += num(sx(to_double(w.at(top_p)))) + "," + num(sy(to_double(top_p)));
    return "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  if (!title.empty()) out << "<title>" << escape(title) << "</title>\n";
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kWidth - kMargin)
      << "\" y2=\"" << num(sy(0)) << "\" stroke=\"gray\"/>\n";
  out << polyline(t.left) << polyline(t.right);
  const double mx = sx(to_double(t.mean));
  out << "<line x1=\"" << num(mx) << "\" y1=\"" << num(sy(to_double(top_p))) << "\" x2=\"" << num(mx) << "\" y2=\""
      << num(sy(p_top)) << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";

  std::vector<Dyadic> labels = {t.left.vertices().front().x, t.right.vertices().front().x};
  if (std::find(labels.begin(), labels.end(), t.mean) == labels.end()) labels.push_back(t.mean);
  for (Dyadic x : labels) {
    out << "<text x=\"" << num(sx(to_double(x))) << "\" y=\"" << num(sy(0) + 16)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << x.str() << "</text>\n";
  }
  out << "<text x=\"" << num(mx + 6) << "\" y=\"" << num(sy(to_double(top_p)) - 4) << "\" font-size=\"12\">t="
      << t.temperature.str() << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace rh
