#pragma once

// Full reconstruction run against a hidden graph: three queries for the
// vertices, n(n-1) for the edges, then a scored comparison with the truth.
// Scoring happens after reconstruction and is the only step that reads the
// hidden graph directly.

#include <chrono>
#include <cstddef>
#include <string>

#include "phrecon/edge_recon.hpp"
#include "phrecon/io.hpp"
#include "phrecon/matching.hpp"
#include "phrecon/persistence.hpp"
#include "phrecon/plane_graph.hpp"
#include "phrecon/vertex_recon.hpp"

namespace phrecon {

inline constexpr double kVertexAccuracy = 1e-6;

struct RunReport {
  std::size_t n = 0;
  std::size_t vertex_queries = 0;
  std::size_t edge_queries = 0;
  std::size_t retries = 0;
  double max_vertex_error = 0.0;
  bool edge_set_equal = false;
  double wall_time_ms = 0.0;
};

struct RunResult {
  PlaneGraph reconstructed;
  RunReport report;
};

// Reconstruction proper: touches the graph only through the oracle.
inline PlaneGraph reconstruct_graph(DiagramOracle& oracle, RunReport& report) {
  const std::size_t start = oracle.query_count();
  PlaneGraph out;
  out.vertices = reconstruct_vertices(oracle);
  report.vertex_queries = oracle.query_count() - start;
  const EdgeReconstruction edges = reconstruct_edges(oracle, out.vertices);
  report.edge_queries = edges.queries;
  report.retries = edges.retries;
  out.edges.assign(edges.edges.begin(), edges.edges.end());
  report.n = out.vertices.size();
  return out;
}

inline RunResult run_reconstruction(const PlaneGraph& hidden, bool cache = false) {
  RunResult r;
  const auto t0 = std::chrono::steady_clock::now();
  DiagramOracle oracle(hidden, cache);
  r.reconstructed = reconstruct_graph(oracle, r.report);
  const auto t1 = std::chrono::steady_clock::now();
  r.report.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  GraphComparison cmp = compare_graphs(r.reconstructed, hidden, kVertexAccuracy);
  if (!cmp.vertices_match) {
    // Still report how far off the vertices are, under the loosest pairing.
    const GraphComparison loose = compare_graphs(r.reconstructed, hidden, kInfinity);
    cmp.max_vertex_error = loose.max_vertex_error;
  }
  r.report.max_vertex_error = cmp.max_vertex_error;
  r.report.edge_set_equal = cmp.equal();
  return r;
}

inline std::string report_to_json(const RunReport& r) {
  const auto num = [](double v) { return std::isfinite(v) ? format_number(v) : std::string("null"); };
  return "{\"n\": " + std::to_string(r.n) + ", \"vertex_queries\": " + std::to_string(r.vertex_queries) +
         ", \"edge_queries\": " + std::to_string(r.edge_queries) + ", \"retries\": " + std::to_string(r.retries) +
         ", \"max_vertex_error\": " + num(r.max_vertex_error) +
         ", \"edge_set_equal\": " + (r.edge_set_equal ? "true" : "false") + ", \"wall_time_ms\": " +
         num(r.wall_time_ms) + "}\n";
}

}  // namespace phrecon
