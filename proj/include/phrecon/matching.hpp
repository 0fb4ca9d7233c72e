#pragma once

// Comparing two embedded graphs whose vertex lists may be in different
// orders: a one-to-one pairing of vertices within eps (per coordinate),
// then edge sets compared through that pairing.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "phrecon/geometry.hpp"
#include "phrecon/plane_graph.hpp"

namespace phrecon {

inline double coordinate_error(const Point2& a, const Point2& b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// Perfect matching a[i] -> b[result[i]] with coordinate_error <= eps, or
// nothing if none exists. Augmenting paths over the candidate pairs found
// by an x-window search.
inline std::optional<std::vector<std::size_t>> pair_vertices(const std::vector<Point2>& a,
                                                             const std::vector<Point2>& b, double eps) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::size_t> by_x(n);
  std::iota(by_x.begin(), by_x.end(), std::size_t{0});
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t i, std::size_t j) { return b[i].x < b[j].x; });

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto lo = std::lower_bound(by_x.begin(), by_x.end(), a[i].x - eps,
                               [&](std::size_t k, double x) { return b[k].x < x; });
    for (auto it = lo; it != by_x.end() && b[*it].x <= a[i].x + eps; ++it)
      if (coordinate_error(a[i], b[*it]) <= eps) candidates[i].push_back(*it);
    std::sort(candidates[i].begin(), candidates[i].end(), [&](std::size_t p, std::size_t q) {
      return coordinate_error(a[i], b[p]) < coordinate_error(a[i], b[q]);
    });
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(n, kNone);
  std::vector<char> visited(n);
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (const std::size_t k : candidates[i]) {
      if (visited[k]) continue;
      visited[k] = 1;
      if (owner[k] == kNone || augment(owner[k])) {
        owner[k] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return std::nullopt;
  }
  std::vector<std::size_t> result(n);
  for (std::size_t k = 0; k < n; ++k) result[owner[k]] = k;
  return result;
}

struct GraphComparison {
  bool vertices_match = false;
  bool edges_match = false;
  double max_vertex_error = std::numeric_limits<double>::infinity();
  EdgeSet missing;  // in b, absent from a (b indices)
  EdgeSet extra;    // in a, absent from b (b indices)

  bool equal() const { return vertices_match && edges_match; }
};

inline GraphComparison compare_graphs(const PlaneGraph& a, const PlaneGraph& b, double eps) {
  GraphComparison c;
  const auto pairing = pair_vertices(a.vertices, b.vertices, eps);
  if (!pairing) return c;
  c.vertices_match = true;
  c.max_vertex_error = 0.0;
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    c.max_vertex_error = std::max(c.max_vertex_error, coordinate_error(a.vertices[i], b.vertices[(*pairing)[i]]));

  EdgeSet mapped;
  for (const auto& [u, v] : a.edges) {
    if (u >= pairing->size() || v >= pairing->size()) continue;
    mapped.insert(make_edge((*pairing)[u], (*pairing)[v]));
  }
  const EdgeSet target = b.edge_set();
  std::set_difference(target.begin(), target.end(), mapped.begin(), mapped.end(),
                      std::inserter(c.missing, c.missing.end()));
  std::set_difference(mapped.begin(), mapped.end(), target.begin(), target.end(),
                      std::inserter(c.extra, c.extra.end()));
  c.edges_match = c.missing.empty() && c.extra.empty() && mapped.size() == a.edges.size();
  return c;
}

}  // namespace phrecon
