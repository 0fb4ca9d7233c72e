#pragma once

// Vertex coordinates from three directional diagrams. Births along (1, 0)
// and (0, 1) give a grid of vertical and horizontal filtration lines; a
// third direction, tilted just under the flattest box diagonal, makes each
// of its lines cross exactly one grid point inside the bounding box, so
// pairing its lines with the horizontals in sorted order picks out the
// vertices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "phrecon/errors.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/persistence.hpp"

namespace phrecon {

inline const Direction kFirstAxis{1.0, 0.0};
inline const Direction kSecondAxis{0.0, 1.0};

// Parallel filtration lines for one direction, offsets strictly increasing.
struct LineFamily {
  Direction direction;
  std::vector<Line> lines;

  std::size_t size() const { return lines.size(); }
};

inline LineFamily lines_from_dgm0(const Diagram& d) {
  const Direction s = d.direction.normalized();
  std::vector<double> births;
  births.reserve(d.dim0.size());
  for (const auto& p : d.dim0) births.push_back(p.birth);
  std::sort(births.begin(), births.end());
  const double tau = tolerance();
  for (std::size_t i = 1; i < births.size(); ++i)
    if (births[i] - births[i - 1] <= tau) throw DuplicateHeights(births[i]);
  LineFamily family{s, {}};
  family.lines.reserve(births.size());
  for (const double b : births) family.lines.push_back(filtration_line(s, b));
  return family;
}

struct BoxGaps {
  double width = 0.0;   // full extent of the vertical lines
  double height = 0.0;  // smallest gap between adjacent horizontal lines
};

inline BoxGaps box_gaps(const LineFamily& verticals, const LineFamily& horizontals) {
  BoxGaps g;
  if (verticals.size() >= 2) g.width = verticals.lines.back().offset - verticals.lines.front().offset;
  if (horizontals.size() >= 2) {
    g.height = kInfinity;
    for (std::size_t i = 1; i < horizontals.size(); ++i)
      g.height = std::min(g.height, horizontals.lines[i].offset - horizontals.lines[i - 1].offset);
  }
  return g;
}

// Unit normal to (w, h/2) with positive y component. With a single vertex
// there is no box, and any direction independent of the axes will do.
inline Direction third_direction(const BoxGaps& gaps) {
  if (!(gaps.width > 0.0) || !(gaps.height > 0.0) || !std::isfinite(gaps.height))
    return Direction{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  return Direction::unit(-gaps.height / 2.0, gaps.width);
}

inline Direction third_direction(const LineFamily& verticals, const LineFamily& horizontals) {
  return third_direction(box_gaps(verticals, horizontals));
}

// Pairs the i-th horizontal line with the i-th tilted line, the tilted
// lines ordered by where they cross the leftmost vertical.
inline std::vector<Point2> match_and_intersect(const LineFamily& horizontals, const LineFamily& tilted,
                                               const Line& leftmost) {
  if (horizontals.size() != tilted.size())
    throw Error("line families differ in size: " + std::to_string(horizontals.size()) + " vs " +
                std::to_string(tilted.size()));
  const std::size_t n = horizontals.size();

  std::vector<Line> rows = horizontals.lines;
  std::sort(rows.begin(), rows.end(), [](const Line& a, const Line& b) {
    return intersect_lines(a, Line{kFirstAxis, 0.0}).y < intersect_lines(b, Line{kFirstAxis, 0.0}).y;
  });

  struct Keyed {
    double key;
    const Line* line;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(n);
  for (const auto& l : tilted.lines) keyed.push_back({intersect_lines(l, leftmost).y, &l});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });

  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(intersect_lines(rows[i], *keyed[i].line));
  return out;
}

// Both diagrams must hold exactly one zero-dimensional feature.
inline Point2 locate_point(const Diagram& a, const Diagram& b) {
  if (a.dim0.size() != 1) throw WrongCardinality(a.dim0.size());
  if (b.dim0.size() != 1) throw WrongCardinality(b.dim0.size());
  return intersect_lines(filtration_line(a.direction, a.dim0.front().birth),
                         filtration_line(b.direction, b.dim0.front().birth));
}

// Exhaustive check: every point where one line of each family meets within
// the tolerance. Quadratic in the grid size; meant for verification only.
inline std::vector<Point2> triple_intersections(const LineFamily& f1, const LineFamily& f2,
                                                const LineFamily& f3) {
  const double tau = tolerance();
  std::vector<double> offsets;
  std::vector<Line> third;
  third.reserve(f3.size());
  for (const auto& l : f3.lines) third.push_back(l.canonical());
  std::sort(third.begin(), third.end(), [](const Line& a, const Line& b) { return a.offset < b.offset; });
  offsets.reserve(third.size());
  for (const auto& l : third) offsets.push_back(l.offset);

  std::vector<Point2> out;
  if (third.empty()) return out;
  const Direction n3 = third.front().normal;
  for (const auto& a : f1.lines) {
    for (const auto& b : f2.lines) {
      Point2 p;
      try {
        p = intersect_lines(a, b);
      } catch (const ParallelLines&) {
        continue;
      }
      const double hp = height(p, n3);
      auto it = std::lower_bound(offsets.begin(), offsets.end(), hp - tau);
      if (it != offsets.end() && *it <= hp + tau) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [tau](const Point2& a, const Point2& b) {
                          return std::abs(a.x - b.x) <= tau && std::abs(a.y - b.y) <= tau;
                        }),
            out.end());
  return out;
}

// The three families a reconstruction run used, kept for rendering and
// verification.
struct VertexReconstruction {
  std::vector<Point2> vertices;
  LineFamily verticals;
  LineFamily horizontals;
  LineFamily tilted;
};

inline VertexReconstruction reconstruct_vertices_detailed(DiagramOracle& oracle) {
  VertexReconstruction r;
  const Diagram d1 = oracle.query(kFirstAxis);
  const Diagram d2 = oracle.query(kSecondAxis);
  r.verticals = lines_from_dgm0(d1);
  r.horizontals = lines_from_dgm0(d2);
  const Direction s3 = third_direction(r.verticals, r.horizontals);
  const Diagram d3 = oracle.query(s3);
  r.tilted = lines_from_dgm0(d3);

  const std::size_t n = r.verticals.size();
  if (r.horizontals.size() != n || r.tilted.size() != n)
    throw Error("diagrams disagree on the number of vertices");
  if (n == 0) return r;
  if (n == 1) {
    r.vertices.push_back(locate_point(d1, d2));
    return r;
  }
  r.vertices = match_and_intersect(r.horizontals, r.tilted, r.verticals.lines.front());
  return r;
}

// Exactly three oracle queries: (1, 0), (0, 1), then the tilted direction.
// Vertices come back in ascending y order.
inline std::vector<Point2> reconstruct_vertices(DiagramOracle& oracle) {
  return reconstruct_vertices_detailed(oracle).vertices;
}

}  // namespace phrecon
