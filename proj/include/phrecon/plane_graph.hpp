#pragma once

// Straight-line plane graphs: the hidden ground truth behind the diagram
// oracle. Validation of general position, a seeded random generator built on
// Delaunay subsets, and direct indegree counting.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/polygon/voronoi.hpp>

#include "phrecon/errors.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/union_find.hpp"

namespace phrecon {

// Undirected edge as an index pair, first < second for well-formed graphs.
using Edge = std::pair<std::size_t, std::size_t>;
using EdgeSet = std::set<Edge>;

inline Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct PlaneGraph {
  std::vector<Point2> vertices;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }

  EdgeSet edge_set() const {
    EdgeSet out;
    for (const auto& [a, b] : edges) out.insert(make_edge(a, b));
    return out;
  }

  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](const Edge& e) {
      return e.first == v || e.second == v;
    }));
  }

  friend bool operator==(const PlaneGraph&, const PlaneGraph&) = default;
};

struct Violation {
  enum class Kind {
    NonFinite,
    SharedX,
    SharedY,
    Collinear,
    SelfLoop,
    IndexOutOfRange,
    DuplicateEdge,
    Crossing,
  };

  Kind kind;
  // Vertex indices for vertex rules; for edge rules, the edge endpoints in
  // order (two per edge).
  std::vector<std::size_t> indices;
  std::string message;
};

inline const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NonFinite: return "non-finite coordinate";
    case Violation::Kind::SharedX: return "shared x-coordinate";
    case Violation::Kind::SharedY: return "shared y-coordinate";
    case Violation::Kind::Collinear: return "collinear vertices";
    case Violation::Kind::SelfLoop: return "self-loop";
    case Violation::Kind::IndexOutOfRange: return "edge index out of range";
    case Violation::Kind::DuplicateEdge: return "duplicate edge";
    case Violation::Kind::Crossing: return "crossing edges";
  }
  return "unknown";
}

namespace detail {

inline std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i != 0) s += (i % 2 == 0 && idx.size() == 4) ? ")x(" : ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

inline Violation make_violation(Violation::Kind kind, std::vector<std::size_t> idx) {
  std::string msg = std::string(to_string(kind)) + " " + join_indices(idx);
  return {kind, std::move(idx), std::move(msg)};
}

inline bool within_box(const Point2& a, const Point2& b, const Point2& p, double tau) {
  return p.x >= std::min(a.x, b.x) - tau && p.x <= std::max(a.x, b.x) + tau &&
         p.y >= std::min(a.y, b.y) - tau && p.y <= std::max(a.y, b.y) + tau;
}

// Segments ab and cd with no shared endpoint: proper crossing or touching
// within tau.
inline bool segments_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                          double tau) {
  const double o1 = cross(b - a, c - a);
  const double o2 = cross(b - a, d - a);
  const double o3 = cross(d - c, a - c);
  const double o4 = cross(d - c, b - c);
  const auto sign = [tau](double o) { return o > tau ? 1 : (o < -tau ? -1 : 0); };
  const int s1 = sign(o1), s2 = sign(o2), s3 = sign(o3), s4 = sign(o4);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;
  if (s1 == 0 && within_box(a, b, c, tau)) return true;
  if (s2 == 0 && within_box(a, b, d, tau)) return true;
  if (s3 == 0 && within_box(c, d, a, tau)) return true;
  if (s4 == 0 && within_box(c, d, b, tau)) return true;
  return false;
}

}  // namespace detail

// Every broken standing assumption, in a stable order: coordinates, then
// collinear triples, then edge rules. Empty means the graph is usable.
inline std::vector<Violation> validate(const PlaneGraph& g) {
  using K = Violation::Kind;
  const double tau = tolerance();
  const auto& V = g.vertices;
  const std::size_t n = V.size();
  std::vector<Violation> out;

  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(V[i])) {
      out.push_back(detail::make_violation(K::NonFinite, {i}));
      finite = false;
    }
  }

  if (finite) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(V[i].x - V[j].x) <= tau) out.push_back(detail::make_violation(K::SharedX, {i, j}));
        if (std::abs(V[i].y - V[j].y) <= tau) out.push_back(detail::make_violation(K::SharedY, {i, j}));
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (std::abs(cross(V[j] - V[i], V[k] - V[i])) <= tau)
            out.push_back(detail::make_violation(K::Collinear, {i, j, k}));
  }

  std::vector<Edge> good;
  std::set<Edge> seen;
  for (const auto& [a, b] : g.edges) {
    if (a >= n || b >= n) {
      out.push_back(detail::make_violation(K::IndexOutOfRange, {a, b}));
      continue;
    }
    if (a == b) {
      out.push_back(detail::make_violation(K::SelfLoop, {a, b}));
      continue;
    }
    const Edge e = make_edge(a, b);
    if (!seen.insert(e).second) {
      out.push_back(detail::make_violation(K::DuplicateEdge, {e.first, e.second}));
      continue;
    }
    good.push_back(e);
  }

  if (finite) {
    for (std::size_t i = 0; i < good.size(); ++i) {
      for (std::size_t j = i + 1; j < good.size(); ++j) {
        const auto [a, b] = good[i];
        const auto [c, d] = good[j];
        bool meet = false;
        if (a == c || a == d || b == c || b == d) {
          // Shared endpoint: the segments may only overlap if collinear and
          // pointing the same way from the shared vertex.
          const std::size_t shared = (a == c || a == d) ? a : b;
          const std::size_t p = (shared == a) ? b : a;
          const std::size_t q = (shared == c) ? d : c;
          const Point2 u = V[p] - V[shared];
          const Point2 w = V[q] - V[shared];
          meet = std::abs(cross(u, w)) <= tau && dot(u, w) > 0.0;
        } else {
          meet = detail::segments_meet(V[a], V[b], V[c], V[d], tau);
        }
        if (meet) out.push_back(detail::make_violation(K::Crossing, {a, b, c, d}));
      }
    }
  }
  return out;
}

// |{(v, w) in E : s.w <= s.v}|, ties counted as below.
inline std::size_t indegree_direct(const PlaneGraph& g, std::size_t v, const Direction& s) {
  if (v >= g.vertices.size()) throw std::out_of_range("vertex index out of range");
  if (s.is_zero()) throw ZeroDirection();
  const double hv = height(g.vertices[v], s);
  std::size_t count = 0;
  for (const auto& [a, b] : g.edges) {
    if (a != v && b != v) continue;
    const std::size_t w = (a == v) ? b : a;
    if (height(g.vertices[w], s) <= hv) ++count;
  }
  return count;
}

inline std::size_t connected_components(const PlaneGraph& g) {
  UnionFind uf(g.vertices.size());
  std::size_t components = g.vertices.size();
  for (const auto& [a, b] : g.edges) {
    if (!uf.same(a, b)) {
      uf.link(a, b);
      --components;
    }
  }
  return components;
}

// Edges of the Delaunay triangulation, read off the dual Voronoi diagram.
// Coordinates are snapped to a 2^30 integer grid over the bounding box,
// which preserves the triangulation for inputs with millimetric margins.
inline std::vector<Edge> delaunay_edges(const std::vector<Point2>& points) {
  namespace bp = boost::polygon;
  const std::size_t n = points.size();
  if (n < 2) return {};
  double minx = points[0].x, maxx = points[0].x, miny = points[0].y, maxy = points[0].y;
  for (const auto& p : points) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-300});
  const double scale = static_cast<double>(1 << 30) / span;
  std::vector<bp::point_data<std::int32_t>> sites;
  sites.reserve(n);
  for (const auto& p : points) {
    sites.emplace_back(static_cast<std::int32_t>(std::llround((p.x - minx) * scale)),
                       static_cast<std::int32_t>(std::llround((p.y - miny) * scale)));
  }
  bp::voronoi_diagram<double> vd;
  bp::construct_voronoi(sites.begin(), sites.end(), &vd);
  std::set<Edge> edges;
  for (const auto& e : vd.edges()) {
    if (!e.is_primary()) continue;
    const std::size_t a = e.cell()->source_index();
    const std::size_t b = e.twin()->cell()->source_index();
    if (a != b) edges.insert(make_edge(a, b));
  }
  return {edges.begin(), edges.end()};
}

struct GeneratorOptions {
  // Minimum gap between any two x (and y) coordinates, and minimum distance
  // from any vertex to the line through two others.
  double margin = 1e-3;
  std::size_t max_attempts = 10000;
};

namespace detail {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Smallest altitude of triangle abc.
inline double min_altitude(const Point2& a, const Point2& b, const Point2& c) {
  const double area2 = std::abs(cross(b - a, c - a));
  const double longest = std::max({norm(b - a), norm(c - b), norm(a - c)});
  return longest == 0.0 ? 0.0 : area2 / longest;
}

inline bool fits(const std::vector<Point2>& pts, const Point2& c, double margin) {
  for (const auto& p : pts)
    if (std::abs(p.x - c.x) < margin || std::abs(p.y - c.y) < margin) return false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (min_altitude(pts[i], pts[j], c) < margin) return false;
  return true;
}

}  // namespace detail

// Deterministic in (n, density, seed). Vertices are drawn one at a time in
// [0,1]^2, rejecting any draw that breaks the margins; edges are a uniform
// subset of round(density * |Delaunay|) Delaunay edges.
inline PlaneGraph random_plane_graph(std::size_t n, double density, std::uint64_t seed,
                                     const GeneratorOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must be in [0, 1]");

  std::mt19937_64 rng(seed);
  PlaneGraph g;
  g.vertices.reserve(n);
  std::size_t attempts = 0;
  while (g.vertices.size() < n) {
    if (attempts++ >= opts.max_attempts)
      throw GenerationFailed("could not place " + std::to_string(n) + " vertices in general position after " +
                             std::to_string(opts.max_attempts) + " draws");
    const double x = detail::uniform01(rng);
    const double y = detail::uniform01(rng);
    const Point2 c{x, y};
    if (detail::fits(g.vertices, c, opts.margin)) g.vertices.push_back(c);
  }

  std::vector<Edge> all = delaunay_edges(g.vertices);
  const auto keep = static_cast<std::size_t>(std::llround(density * static_cast<double>(all.size())));
  // Partial Fisher-Yates with explicit index draws, so the subset does not
  // depend on the standard library's distribution implementations.
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
  }
  g.edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace phrecon
