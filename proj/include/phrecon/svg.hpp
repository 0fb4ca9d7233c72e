#pragma once

// SVG figures of a plane graph, optionally with the three families of
// filtration lines used for vertex recovery and the bow tie used to probe
// one vertex pair. Output is deterministic: fixed viewBox, fixed number
// formatting, elements in index order.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phrecon/edge_recon.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/plane_graph.hpp"
#include "phrecon/vertex_recon.hpp"

namespace phrecon {

struct RenderOptions {
  bool lines = false;
  std::optional<std::pair<std::size_t, std::size_t>> bowtie;
};

namespace detail {

inline constexpr double kCanvas = 800.0;
inline constexpr double kPad = 40.0;

struct Viewport {
  double minx = 0.0, miny = 0.0, maxx = 1.0, maxy = 1.0;
  double scale = 1.0;

  static Viewport fit(const std::vector<Point2>& pts) {
    Viewport vp;
    if (!pts.empty()) {
      vp.minx = vp.maxx = pts[0].x;
      vp.miny = vp.maxy = pts[0].y;
      for (const auto& p : pts) {
        vp.minx = std::min(vp.minx, p.x);
        vp.maxx = std::max(vp.maxx, p.x);
        vp.miny = std::min(vp.miny, p.y);
        vp.maxy = std::max(vp.maxy, p.y);
      }
    }
    const double span = std::max({vp.maxx - vp.minx, vp.maxy - vp.miny, 1e-9});
    const double cx = 0.5 * (vp.minx + vp.maxx);
    const double cy = 0.5 * (vp.miny + vp.maxy);
    // Square world window with a 10% margin on each side.
    const double half = 0.6 * span;
    vp.minx = cx - half;
    vp.maxx = cx + half;
    vp.miny = cy - half;
    vp.maxy = cy + half;
    vp.scale = (kCanvas - 2.0 * kPad) / (2.0 * half);
    return vp;
  }

  double sx(double x) const { return kPad + (x - minx) * scale; }
  double sy(double y) const { return kCanvas - kPad - (y - miny) * scale; }
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// The part of a line inside the viewport window (Liang-Barsky on a long
// segment through the anchor point).
inline std::optional<std::pair<Point2, Point2>> clip(const Line& l, const Viewport& vp) {
  const Line c = l.canonical();
  const Point2 p = c.anchor();
  const Point2 d = c.along();
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const auto slab = [&](double origin, double dir, double lo, double hi) {
    if (dir == 0.0) return origin >= lo && origin <= hi;
    double a = (lo - origin) / dir;
    double b = (hi - origin) / dir;
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
    return t0 <= t1;
  };
  if (!slab(p.x, d.x, vp.minx, vp.maxx) || !slab(p.y, d.y, vp.miny, vp.maxy)) return std::nullopt;
  return std::pair{p + d * t0, p + d * t1};
}

}  // namespace detail

inline std::string render_svg(const PlaneGraph& g, const RenderOptions& opts = {}) {
  using detail::fmt;
  const auto vp = detail::Viewport::fit(g.vertices);
  const std::size_t n = g.vertices.size();
  if (opts.bowtie) {
    const auto [i, j] = *opts.bowtie;
    if (i >= n || j >= n || i == j) throw std::out_of_range("bow tie indices must name two distinct vertices");
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  if (opts.bowtie) {
    const auto [i, j] = *opts.bowtie;
    const double theta = global_bowtie_width(g.vertices);
    const PairDirections pd = pair_directions(g.vertices[i], g.vertices[j], theta, g.vertices);
    const Point2 v = g.vertices[i];
    const Point2 w = g.vertices[j];
    const Point2 u = (w - v) * (1.0 / norm(w - v));
    const double reach = 4.0 * (vp.maxx - vp.minx);
    const double a = pd.bowtie.half_width;
    for (const double sign : {1.0, -1.0}) {
      const Direction axis{u.x * sign, u.y * sign};
      const Direction left = rotate(axis, a);
      const Direction right = rotate(axis, -a);
      const Point2 p1 = v + left.as_point() * reach;
      const Point2 p2 = v + right.as_point() * reach;
      out += "<path class=\"bowtie\" d=\"M " + fmt(vp.sx(v.x)) + " " + fmt(vp.sy(v.y)) + " L " + fmt(vp.sx(p1.x)) +
             " " + fmt(vp.sy(p1.y)) + " L " + fmt(vp.sx(p2.x)) + " " + fmt(vp.sy(p2.y)) +
             " Z\" fill=\"#999999\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
    }
  }

  if (opts.lines && n > 0) {
    std::vector<double> xs, ys;
    for (const auto& p : g.vertices) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    BoxGaps gaps;
    if (n >= 2) {
      gaps.width = xs.back() - xs.front();
      gaps.height = std::numeric_limits<double>::infinity();
      for (std::size_t k = 1; k < n; ++k) gaps.height = std::min(gaps.height, ys[k] - ys[k - 1]);
    }
    const Direction families[3] = {kFirstAxis, kSecondAxis, third_direction(gaps)};
    const char* strokes[3] = {"#1f4fbf", "#000000", "#c0259f"};
    for (int f = 0; f < 3; ++f) {
      for (const auto& p : g.vertices) {
        const auto seg = detail::clip(filtration_line(families[f], height(p, families[f])), vp);
        if (!seg) continue;
        out += "<line class=\"filtration s" + std::to_string(f + 1) + "\" x1=\"" + fmt(vp.sx(seg->first.x)) +
               "\" y1=\"" + fmt(vp.sy(seg->first.y)) + "\" x2=\"" + fmt(vp.sx(seg->second.x)) + "\" y2=\"" +
               fmt(vp.sy(seg->second.y)) + "\" stroke=\"" + strokes[f] +
               "\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
      }
    }
  }

  for (const auto& [a, b] : g.edges) {
    if (a >= n || b >= n) continue;
    out += "<path class=\"edge\" d=\"M " + fmt(vp.sx(g.vertices[a].x)) + " " + fmt(vp.sy(g.vertices[a].y)) + " L " +
           fmt(vp.sx(g.vertices[b].x)) + " " + fmt(vp.sy(g.vertices[b].y)) +
           "\" stroke=\"#222222\" stroke-width=\"2\" fill=\"none\"/>\n";
  }
  for (const auto& p : g.vertices) {
    out += "<circle class=\"vertex\" cx=\"" + fmt(vp.sx(p.x)) + "\" cy=\"" + fmt(vp.sy(p.y)) +
           "\" r=\"5\" fill=\"#d62728\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace phrecon
