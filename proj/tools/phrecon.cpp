// phrecon: generate plane graphs, compute their directional diagrams,
// reconstruct them through the diagram oracle, compare and draw them.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 generation failure,
// 3 degenerate direction, 4 invalid input graph, 64 usage.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "phrecon/phrecon.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kGenerationFailed = 2;
constexpr int kDegenerate = 3;
constexpr int kInvalidGraph = 4;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  std::istringstream in(text);
  double a = 0.0, b = 0.0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw UsageError(std::string(what) + " must look like a,b: " + text);
  return {a, b};
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    phrecon::write_file(path, content);
  }
}

phrecon::PlaneGraph load_graph(const std::string& path) {
  return phrecon::graph_from_json(phrecon::read_file(path));
}

struct Options {
  std::optional<double> tolerance;

  std::size_t n = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;

  std::string graph;
  std::string direction;

  std::string report;
  bool cache = false;

  std::string other;
  double eps = 1e-6;

  bool lines = false;
  std::string bowtie;
};

int cmd_gen(const Options& o) {
  try {
    emit(o.out, phrecon::graph_to_json(phrecon::random_plane_graph(o.n, o.density, o.seed)));
  } catch (const phrecon::GenerationFailed& e) {
    std::cerr << "gen: " << e.what() << '\n';
    return kGenerationFailed;
  }
  return kOk;
}

int cmd_diagrams(const Options& o) {
  const auto [dx, dy] = parse_pair(o.direction, "--direction");
  if (dx == 0.0 && dy == 0.0) throw UsageError("--direction must be non-zero");
  const phrecon::PlaneGraph g = load_graph(o.graph);
  try {
    emit(o.out, phrecon::diagram_to_json(phrecon::lower_star_diagrams(g, {dx, dy})));
  } catch (const phrecon::DegenerateDirection& e) {
    std::cerr << "diagrams: degenerate direction: vertices " << e.first() << " " << e.second() << '\n';
    return kDegenerate;
  }
  return kOk;
}

int cmd_reconstruct(const Options& o) {
  const phrecon::PlaneGraph hidden = load_graph(o.graph);
  const auto violations = phrecon::validate(hidden);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "invalid graph: " << v.message << '\n';
    return kInvalidGraph;
  }
  phrecon::RunResult r;
  try {
    r = phrecon::run_reconstruction(hidden, o.cache);
  } catch (const phrecon::DegenerateDirection& e) {
    std::cerr << "reconstruct: degenerate direction: vertices " << e.first() << " " << e.second() << '\n';
    return kDegenerate;
  } catch (const phrecon::RetryExhausted& e) {
    std::cerr << "reconstruct: " << e.what() << '\n';
    return kDegenerate;
  }
  emit(o.out, phrecon::graph_to_json(r.reconstructed));
  if (!o.report.empty()) emit(o.report, phrecon::report_to_json(r.report));
  std::cerr << "reconstructed " << r.report.n << " vertices, " << r.reconstructed.edges.size() << " edges with "
            << r.report.vertex_queries + r.report.edge_queries << " diagrams\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const phrecon::PlaneGraph a = load_graph(o.graph);
  const phrecon::PlaneGraph b = load_graph(o.other);
  const phrecon::GraphComparison c = phrecon::compare_graphs(a, b, o.eps);
  if (c.equal()) {
    std::cout << "match: " << a.vertices.size() << " vertices, " << a.edges.size() << " edges, max error "
              << c.max_vertex_error << '\n';
    return kOk;
  }
  if (!c.vertices_match) {
    std::cout << "vertex sets differ: " << a.vertices.size() << " vs " << b.vertices.size()
              << " vertices, no pairing within eps " << o.eps << '\n';
    return kMismatch;
  }
  for (const auto& [u, v] : c.missing) std::cout << "- edge " << u << " " << v << '\n';
  for (const auto& [u, v] : c.extra) std::cout << "+ edge " << u << " " << v << '\n';
  return kMismatch;
}

int cmd_render(const Options& o) {
  const phrecon::PlaneGraph g = load_graph(o.graph);
  phrecon::RenderOptions ro;
  ro.lines = o.lines;
  if (!o.bowtie.empty()) {
    const auto [a, b] = parse_pair(o.bowtie, "--bowtie");
    if (a < 0 || b < 0 || a != static_cast<double>(static_cast<std::size_t>(a)) ||
        b != static_cast<double>(static_cast<std::size_t>(b)))
      throw UsageError("--bowtie takes two vertex indices");
    ro.bowtie = std::pair{static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
  }
  try {
    emit(o.out, phrecon::render_svg(g, ro));
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane graph reconstruction from directional persistence diagrams"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tolerance", o.tolerance, "Geometric tolerance (default 1e-9, env PHRECON_TOLERANCE)")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Generate a random plane graph");
  gen->add_option("--n", o.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", o.density, "Fraction of Delaunay edges kept")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("-o,--out", o.out, "Output graph JSON (stdout if omitted)");

  auto* dia = app.add_subcommand("diagrams", "Persistence diagrams of the height filtration");
  dia->add_option("graph", o.graph, "Graph JSON")->required();
  dia->add_option("--direction", o.direction, "Direction as dx,dy")->required();
  dia->add_option("-o,--out", o.out, "Output diagram JSON (stdout if omitted)");

  auto* rec = app.add_subcommand("reconstruct", "Reconstruct a hidden graph through the diagram oracle");
  rec->add_option("graph", o.graph, "Hidden graph JSON")->required();
  rec->add_option("-o,--out", o.out, "Reconstructed graph JSON (stdout if omitted)");
  rec->add_option("--report", o.report, "Run report JSON");
  rec->add_flag("--cache", o.cache, "Reuse diagrams for repeated directions (still counted)");

  auto* ver = app.add_subcommand("verify", "Compare two graph files");
  ver->add_option("a", o.graph, "First graph JSON")->required();
  ver->add_option("b", o.other, "Second graph JSON")->required();
  ver->add_option("--eps", o.eps, "Per-coordinate vertex tolerance")->check(CLI::NonNegativeNumber);

  auto* ren = app.add_subcommand("render", "Draw a graph as SVG");
  ren->add_option("graph", o.graph, "Graph JSON")->required();
  ren->add_flag("--lines", o.lines, "Overlay the three filtration-line families");
  ren->add_option("--bowtie", o.bowtie, "Shade the bow tie for vertex pair i,j");
  ren->add_option("-o,--out", o.out, "Output SVG (stdout if omitted)");

  for (auto* sub : {gen, dia, rec, ver, ren})
    sub->add_option("--tolerance", o.tolerance, "Geometric tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (const char* env = std::getenv("PHRECON_TOLERANCE"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const double tau = std::strtod(env, &end);
      if (end == env || *end != '\0') throw UsageError("PHRECON_TOLERANCE is not a number");
      phrecon::set_tolerance(tau);
    }
    if (o.tolerance) phrecon::set_tolerance(*o.tolerance);

    if (gen->parsed()) return cmd_gen(o);
    if (dia->parsed()) return cmd_diagrams(o);
    if (rec->parsed()) return cmd_reconstruct(o);
    if (ver->parsed()) return cmd_verify(o);
    if (ren->parsed()) return cmd_render(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const phrecon::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const phrecon::ZeroDirection& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
