#pragma once

// Zero- and one-dimensional persistence of the lower-star height filtration
// of a plane graph, and the metered oracle that is the reconstruction code's
// only access to the graph.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "phrecon/errors.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/plane_graph.hpp"
#include "phrecon/union_find.hpp"

namespace phrecon {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
  double birth = 0.0;
  double death = kInfinity;

  bool is_essential() const { return death == kInfinity; }
  bool is_diagonal() const { return birth == death; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

// Both diagrams for one unit direction, each sorted by (birth, death).
struct Diagram {
  Direction direction;
  std::vector<PersistencePair> dim0;
  std::vector<PersistencePair> dim1;

  friend bool operator==(const Diagram&, const Diagram&) = default;

  std::size_t essential_dim0() const {
    return static_cast<std::size_t>(
        std::count_if(dim0.begin(), dim0.end(), [](const auto& p) { return p.is_essential(); }));
  }
  std::size_t finite_dim0() const { return dim0.size() - essential_dim0(); }
};

// Vertex order along s; throws DegenerateDirection if two heights fall
// within the tolerance of each other.
inline std::vector<std::size_t> order_by_height(const std::vector<Point2>& vertices,
                                                const Direction& s,
                                                std::vector<double>& heights) {
  const std::size_t n = vertices.size();
  heights.resize(n);
  for (std::size_t i = 0; i < n; ++i) heights[i] = height(vertices[i], s);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return heights[a] < heights[b] || (heights[a] == heights[b] && a < b);
  });
  const double tau = tolerance();
  for (std::size_t k = 1; k < n; ++k) {
    if (heights[order[k]] - heights[order[k - 1]] <= tau)
      throw DegenerateDirection(std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k]));
  }
  return order;
}

// Union-find sweep with the elder rule. Each vertex enters at its height,
// followed by the edges whose upper endpoint it is, lowest partner first.
// A merging edge kills the younger class at the current height (a diagonal
// pair when that class is the vertex just born); an edge inside one class
// opens a cycle that never dies.
inline Diagram lower_star_diagrams(const PlaneGraph& g, const Direction& direction) {
  const Direction s = direction.normalized();
  const std::size_t n = g.vertices.size();
  std::vector<double> h;
  const std::vector<std::size_t> order = order_by_height(g.vertices, s, h);

  std::vector<std::vector<std::size_t>> lower(n);
  for (const auto& [a, b] : g.edges) {
    const bool a_upper = h[a] > h[b];
    lower[a_upper ? a : b].push_back(a_upper ? b : a);
  }

  Diagram d;
  d.direction = s;
  d.dim0.reserve(n);
  UnionFind uf(n);
  std::vector<double> birth(n, 0.0);  // valid at roots only

  for (const std::size_t v : order) {
    const double hv = h[v];
    birth[v] = hv;
    auto& partners = lower[v];
    std::sort(partners.begin(), partners.end(), [&](std::size_t a, std::size_t b) {
      return h[a] < h[b] || (h[a] == h[b] && a < b);
    });
    for (const std::size_t w : partners) {
      const std::size_t rv = uf.find(v);
      const std::size_t rw = uf.find(w);
      if (rv == rw) {
        d.dim1.push_back({hv, kInfinity});
        continue;
      }
      const double elder = std::min(birth[rv], birth[rw]);
      const double younger = std::max(birth[rv], birth[rw]);
      d.dim0.push_back({younger, hv});
      birth[uf.link(rv, rw)] = elder;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(v) == v) d.dim0.push_back({birth[v], kInfinity});

  std::sort(d.dim0.begin(), d.dim0.end());
  std::sort(d.dim1.begin(), d.dim1.end());
  return d;
}

// The hidden graph behind a query counter. Every call counts, including
// repeats of a direction already asked. With caching enabled, repeats skip
// the computation but are still counted.
class DiagramOracle {
 public:
  explicit DiagramOracle(PlaneGraph hidden, bool cache = false)
      : hidden_(std::move(hidden)), cache_enabled_(cache) {}

  Diagram query(const Direction& s) {
    const Direction unit = s.normalized();
    {
      std::lock_guard lock(mutex_);
      log_.push_back(unit);
      if (cache_enabled_) {
        if (auto it = cache_.find(key(unit)); it != cache_.end()) return it->second;
      }
    }
    Diagram d = lower_star_diagrams(hidden_, unit);
    if (cache_enabled_) {
      std::lock_guard lock(mutex_);
      cache_.emplace(key(unit), d);
    }
    return d;
  }

  std::size_t query_count() const {
    std::lock_guard lock(mutex_);
    return log_.size();
  }

  std::vector<Direction> query_log() const {
    std::lock_guard lock(mutex_);
    return log_;
  }

 private:
  static std::pair<double, double> key(const Direction& s) { return {s.dx, s.dy}; }

  PlaneGraph hidden_;
  bool cache_enabled_;
  mutable std::mutex mutex_;
  std::vector<Direction> log_;
  std::map<std::pair<double, double>, Diagram> cache_;
};

}  // namespace phrecon
