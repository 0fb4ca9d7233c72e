#pragma once

// Edge set from bow-tie indegree differencing. For a candidate pair (v, w)
// two directions at +/- theta around the normal of vw cut out a double wedge
// at v that holds w and no other vertex; the indegrees of v read off the two
// diagrams differ by one exactly when vw is an edge.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "phrecon/errors.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/persistence.hpp"
#include "phrecon/plane_graph.hpp"

namespace phrecon {

inline constexpr std::size_t kMaxShrinks = 64;
inline constexpr double kShrinkFactor = 0.9;

struct BowTie {
  Point2 center;
  Direction s1;
  Direction s2;
  double half_width = 0.0;
};

// Symmetric difference of the half planes below the center.
inline bool in_bowtie(const BowTie& b, const Point2& p) {
  const bool below1 = height(p, b.s1) < height(b.center, b.s1);
  const bool below2 = height(p, b.s2) < height(b.center, b.s2);
  return below1 != below2;
}

// Smallest angle between cyclically adjacent lines through each vertex.
inline std::vector<double> angular_gaps(const std::vector<Point2>& V) {
  const std::size_t n = V.size();
  std::vector<double> gaps(n, std::numbers::pi);
  std::vector<double> angles;
  for (std::size_t i = 0; i < n; ++i) {
    angles.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (V[i] == V[j]) throw DegeneratePoints("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      angles.push_back(line_angle_mod_pi(V[i], V[j]));
    }
    if (angles.size() < 2) continue;
    std::sort(angles.begin(), angles.end());
    double g = std::numbers::pi + angles.front() - angles.back();
    for (std::size_t k = 1; k < angles.size(); ++k) g = std::min(g, angles[k] - angles[k - 1]);
    gaps[i] = g;
  }
  return gaps;
}

// Half of the smallest angular gap over all vertices. Two vertices impose
// no constraint; pi/8 is used then.
inline double global_bowtie_width(const std::vector<Point2>& V) {
  if (V.size() <= 2) {
    if (V.size() == 2 && V[0] == V[1]) throw DegeneratePoints("vertices 0 and 1 coincide");
    return std::numbers::pi / 8.0;
  }
  const auto gaps = angular_gaps(V);
  const double smallest = *std::min_element(gaps.begin(), gaps.end());
  if (!(smallest > 0.0)) throw DegeneratePoints("three vertices are collinear");
  return 0.5 * smallest;
}

namespace detail {

inline bool heights_distinct(const std::vector<Point2>& V, const Direction& s, double tau) {
  std::vector<double> h;
  h.reserve(V.size());
  for (const auto& p : V) h.push_back(height(p, s));
  std::sort(h.begin(), h.end());
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] - h[i - 1] <= tau) return false;
  return true;
}

inline std::size_t bowtie_population(const BowTie& b, const std::vector<Point2>& V, const Point2& target,
                                     bool& target_inside) {
  std::size_t count = 0;
  target_inside = false;
  for (const auto& p : V) {
    if (p == b.center) continue;
    if (in_bowtie(b, p)) {
      ++count;
      if (p == target) target_inside = true;
    }
  }
  return count;
}

}  // namespace detail

struct PairDirections {
  BowTie bowtie;
  std::size_t retries = 0;
};

inline BowTie make_bowtie(const Point2& v, const Point2& w, double theta) {
  const Direction s = perpendicular(w - v);
  return {v, rotate(s, theta), rotate(s, -theta), theta};
}

// Bow tie at v around the line vw, shrunk by 0.9 until it isolates w and
// both directions separate every vertex height.
inline PairDirections pair_directions(const Point2& v, const Point2& w, double theta,
                                      const std::vector<Point2>& V) {
  if (v == w) throw CoincidentPoints();
  const double tau = tolerance();
  PairDirections out;
  for (std::size_t attempt = 0; attempt <= kMaxShrinks; ++attempt) {
    out.bowtie = make_bowtie(v, w, theta);
    bool target_inside = false;
    const std::size_t population = detail::bowtie_population(out.bowtie, V, w, target_inside);
    const bool isolated = population == 1 && target_inside;
    if (isolated && detail::heights_distinct(V, out.bowtie.s1, tau) &&
        detail::heights_distinct(V, out.bowtie.s2, tau))
      return out;
    theta *= kShrinkFactor;
    ++out.retries;
  }
  throw RetryExhausted("no usable bow tie after " + std::to_string(kMaxShrinks) + " shrinks");
}

// Edges into v from below: finite zero-dimensional deaths and
// one-dimensional births at v's height.
inline std::size_t indegree_from_diagrams(const Diagram& d, const Point2& v) {
  const double hv = height(v, d.direction);
  const double tau = tolerance();
  std::size_t count = 0;
  for (const auto& p : d.dim0)
    if (!p.is_essential() && std::abs(p.death - hv) <= tau) ++count;
  for (const auto& p : d.dim1)
    if (std::abs(p.birth - hv) <= tau) ++count;
  return count;
}

struct EdgeProbe {
  bool exists = false;
  std::size_t indegree1 = 0;
  std::size_t indegree2 = 0;
  BowTie bowtie;
  std::size_t retries = 0;
};

// Two oracle queries per attempt. A direction the oracle rejects as
// degenerate shrinks the bow tie and asks again; the repeat is metered.
inline EdgeProbe probe_edge(DiagramOracle& oracle, const Point2& v, const Point2& w, double theta,
                            const std::vector<Point2>& V) {
  EdgeProbe probe;
  for (;;) {
    const PairDirections pd = pair_directions(v, w, theta, V);
    probe.retries += pd.retries;
    probe.bowtie = pd.bowtie;
    try {
      const Diagram d1 = oracle.query(pd.bowtie.s1);
      const Diagram d2 = oracle.query(pd.bowtie.s2);
      probe.indegree1 = indegree_from_diagrams(d1, v);
      probe.indegree2 = indegree_from_diagrams(d2, v);
      const auto diff = probe.indegree1 > probe.indegree2 ? probe.indegree1 - probe.indegree2
                                                          : probe.indegree2 - probe.indegree1;
      probe.exists = diff == 1;
      return probe;
    } catch (const DegenerateDirection&) {
      if (probe.retries >= kMaxShrinks) throw;
      theta = pd.bowtie.half_width * kShrinkFactor;
      ++probe.retries;
    }
  }
}

inline bool edge_exists(DiagramOracle& oracle, const Point2& v, const Point2& w, double theta,
                        const std::vector<Point2>& V) {
  return probe_edge(oracle, v, w, theta, V).exists;
}

struct EdgeReconstruction {
  EdgeSet edges;
  double theta = 0.0;
  std::size_t queries = 0;
  std::size_t retries = 0;
};

// One probe per unordered pair, centred at the lower index, in
// lexicographic order: n(n-1) queries when no retry fires.
inline EdgeReconstruction reconstruct_edges(DiagramOracle& oracle, const std::vector<Point2>& V) {
  EdgeReconstruction r;
  const std::size_t before = oracle.query_count();
  if (V.size() < 2) return r;
  r.theta = global_bowtie_width(V);
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      const EdgeProbe probe = probe_edge(oracle, V[i], V[j], r.theta, V);
      r.retries += probe.retries;
      if (probe.exists) r.edges.insert({i, j});
    }
  }
  r.queries = oracle.query_count() - before;
  return r;
}

inline constexpr std::size_t kMaxEnumerationVertices = 12;
inline constexpr std::size_t kMaxEnumerationRows = std::size_t{1} << 20;

namespace detail {

// The filtration of the full graph cut off at height t: features born by t,
// with deaths after t still open.
inline Diagram truncate_diagram(const Diagram& d, double t) {
  Diagram out;
  out.direction = d.direction;
  for (const auto& p : d.dim0) {
    if (p.birth > t) continue;
    out.dim0.push_back({p.birth, p.death > t ? kInfinity : p.death});
  }
  for (const auto& p : d.dim1)
    if (p.birth <= t) out.dim1.push_back(p);
  std::sort(out.dim0.begin(), out.dim0.end());
  std::sort(out.dim1.begin(), out.dim1.end());
  return out;
}

inline bool same_value(double a, double b, double tau) {
  if (a == kInfinity || b == kInfinity) return a == b;
  return std::abs(a - b) <= tau;
}

inline bool diagrams_agree(const Diagram& a, const Diagram& b, double tau) {
  if (a.dim0.size() != b.dim0.size() || a.dim1.size() != b.dim1.size()) return false;
  for (std::size_t i = 0; i < a.dim0.size(); ++i)
    if (!same_value(a.dim0[i].birth, b.dim0[i].birth, tau) || !same_value(a.dim0[i].death, b.dim0[i].death, tau))
      return false;
  for (std::size_t i = 0; i < a.dim1.size(); ++i)
    if (!same_value(a.dim1[i].birth, b.dim1[i].birth, tau)) return false;
  return true;
}

inline std::size_t events_at(const Diagram& d, double t, double tau) {
  std::size_t k = 0;
  for (const auto& p : d.dim0)
    if (!p.is_essential() && std::abs(p.death - t) <= tau) ++k;
  for (const auto& p : d.dim1)
    if (std::abs(p.birth - t) <= tau) ++k;
  return k;
}

}  // namespace detail

// Every edge set on V whose diagrams along s equal d. Vertices are swept
// from lowest to highest; at each one every surviving partial graph is
// extended by every subset of edges down to earlier vertices, and the
// extensions whose diagrams up to that height disagree with d are dropped.
inline std::set<EdgeSet> enumerate_compatible_graphs(const std::vector<Point2>& V, const Direction& direction,
                                                     const Diagram& d) {
  const std::size_t n = V.size();
  if (n > kMaxEnumerationVertices)
    throw Overflow("enumeration is limited to " + std::to_string(kMaxEnumerationVertices) + " vertices");
  const Direction s = direction.normalized();
  const double tau = tolerance();
  std::vector<double> h;
  const std::vector<std::size_t> order = order_by_height(V, s, h);
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;

  std::vector<std::vector<Edge>> rows{{}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = order[i];
    const double cut = h[v] + 0.5 * tau;
    const Diagram expected = detail::truncate_diagram(d, cut);
    const std::size_t wanted = detail::events_at(d, h[v], tau);

    PlaneGraph partial;
    for (std::size_t k = 0; k <= i; ++k) partial.vertices.push_back(V[order[k]]);

    std::vector<std::vector<Edge>> next;
    const std::uint64_t subsets = std::uint64_t{1} << i;
    for (const auto& row : rows) {
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != wanted) continue;
        std::vector<Edge> candidate = row;
        for (std::size_t k = 0; k < i; ++k)
          if (mask & (std::uint64_t{1} << k)) candidate.push_back(make_edge(order[k], v));
        partial.edges.clear();
        for (const auto& [a, b] : candidate) partial.edges.push_back(make_edge(rank[a], rank[b]));
        if (!detail::diagrams_agree(lower_star_diagrams(partial, s), expected, tau)) continue;
        next.push_back(std::move(candidate));
        if (next.size() > kMaxEnumerationRows) throw Overflow("too many compatible partial graphs");
      }
    }
    rows = std::move(next);
  }

  std::set<EdgeSet> out;
  const Diagram whole = detail::truncate_diagram(d, kInfinity);
  PlaneGraph full{V, {}};
  for (const auto& row : rows) {
    full.edges = row;
    if (!detail::diagrams_agree(lower_star_diagrams(full, s), whole, tau)) continue;
    out.insert(EdgeSet(row.begin(), row.end()));
  }
  return out;
}

}  // namespace phrecon
