// orcol: command-line front end for the oriented / 2-dipath colouring library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "orcol/catalogue.hpp"
#include "orcol/census.hpp"
#include "orcol/codec.hpp"
#include "orcol/dipath_seven.hpp"
#include "orcol/error.hpp"
#include "orcol/generate.hpp"
#include "orcol/hom_search.hpp"
#include "orcol/oracle.hpp"
#include "orcol/oriented_eight.hpp"
#include "orcol/paley.hpp"

using Json = nlohmann::ordered_json;
using namespace orcol;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct Io {
  std::string input = "-";
  std::string format = "digraph6";
  std::string output = "-";
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, fmt::format("cannot open {}", path));
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<OrientedGraph> read_graphs(const Io& io) {
  const std::string text = slurp(io.input);
  if (io.format == "edgelist") return {parse_edge_list(text)};
  std::vector<OrientedGraph> graphs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    graphs.push_back(parse_digraph6(line));
  }
  return graphs;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) fail(ErrorCode::Io, fmt::format("cannot write {}", path));
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void add_io(CLI::App* cmd, Io& io, bool with_input = true) {
  if (with_input) {
    cmd->add_option("-i,--input", io.input, "Input file ('-' for stdin)");
    cmd->add_option("--format", io.format, "Input format")->check(CLI::IsMember({"digraph6", "edgelist"}));
  }
  cmd->add_option("-o,--output", io.output, "Output file ('-' for stdout)");
}

int cmd_paley(int q, const Io& io) {
  const Tournament t = paley_tournament(q);
  const auto automorphisms = paley_automorphisms(q);
  bool vertex_transitive = true;
  for (Vertex v = 0; v < q; ++v) {
    vertex_transitive &= std::ranges::any_of(automorphisms, [&](const auto& s) { return s(0) == v; });
  }
  bool arc_transitive = true;
  std::vector<std::size_t> completion_sizes;
  for (const Arc& a : t.graph().arcs()) {
    arc_transitive &= std::ranges::any_of(
        automorphisms, [&](const auto& s) { return s(a.tail) == 0 && s(a.head) == 1; });
    completion_sizes.push_back(cycle_completions(t, a).size());
  }
  Json report{{"q", q},
              {"digraph6", emit_digraph6(t.graph())},
              {"residues", quadratic_residues(q)},
              {"automorphisms", automorphisms.size()},
              {"vertex_transitive", vertex_transitive},
              {"arc_transitive", arc_transitive},
              {"min_cycle_completions", *std::ranges::min_element(completion_sizes)},
              {"max_cycle_completions", *std::ranges::max_element(completion_sizes)}};
  Output out(io.output);
  out.stream() << report.dump() << '\n';
  return 0;
}

int cmd_colour_oriented(const Io& io) {
  Output out(io.output);
  int failures = 0;
  for (const OrientedGraph& g : read_graphs(io)) {
    Json record{{"digraph6", emit_digraph6(g)}};
    try {
      const EightColouring r = oriented_eight_colouring(g);
      const bool valid = validate_oriented_colouring(g, r.colouring).valid();
      record["colouring"] = r.colouring.colours();
      record["palette"] = r.colouring.palette_size();
      record["case"] = to_string(r.certificate.tag);
      record["detail"] = r.certificate.detail;
      record["valid"] = valid;
      failures += !valid;
    } catch (const Error& e) {
      record["error"] = e.what();
      record["certificate"] = e.certificate();
      ++failures;
    }
    out.stream() << record.dump() << '\n';
  }
  return failures == 0 ? 0 : kExitFailures;
}

int cmd_colour_dipath(const Io& io) {
  Output out(io.output);
  int failures = 0;
  for (const OrientedGraph& g : read_graphs(io)) {
    Json record{{"digraph6", emit_digraph6(g)}};
    try {
      const DipathColouring r = two_dipath_seven_colouring(g);
      const bool valid = validate_two_dipath_colouring(g, r.colouring).valid();
      Json routes = Json::array();
      for (DipathRoute route : r.routes) routes.push_back(std::string(to_string(route)));
      record["colouring"] = r.colouring.colours();
      record["palette"] = r.colouring.palette_size();
      record["routes"] = std::move(routes);
      record["valid"] = valid;
      failures += !valid;
    } catch (const Error& e) {
      record["error"] = e.what();
      record["certificate"] = e.certificate();
      ++failures;
    }
    out.stream() << record.dump() << '\n';
  }
  return failures == 0 ? 0 : kExitFailures;
}

int cmd_exact(const Io& io, int cap) {
  Output out(io.output);
  const OracleLimits limits{cap};
  for (const OrientedGraph& g : read_graphs(io)) {
    const ExactResult chi_o = exact_oriented_chromatic(g, limits);
    const ExactResult chi_2d = exact_two_dipath_chromatic(g, limits);
    const CliqueResult omega = max_clique(build_square(g), limits);
    Json target = Json::array();
    for (const Arc& a : chi_o.target_arcs) target.push_back({a.tail, a.head});
    Json record{{"digraph6", emit_digraph6(g)},
                {"chi_o", chi_o.value},
                {"chi_o_witness", chi_o.witness.colours()},
                {"chi_o_target", std::move(target)},
                {"chi_2d", chi_2d.value},
                {"chi_2d_witness", chi_2d.witness.colours()},
                {"omega_square", omega.size},
                {"omega_square_clique", omega.members}};
    out.stream() << record.dump() << '\n';
  }
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, int count, bool catalogue, bool subcubic, const Io& io) {
  Output out(io.output);
  if (catalogue) {
    out.stream() << fmt::format("# connected cubic graphs on {} vertices (graph6), one per isomorphism class\n", n);
    for (const SimpleGraph& g : enumerate_connected_cubic(n)) out.stream() << emit_graph6(g) << '\n';
    return 0;
  }
  Rng master(seed);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = count == 1 ? seed : master.next();
    const OrientedGraph g = subcubic ? random_subcubic_orientation(n, s) : random_cubic_orientation(n, s);
    out.stream() << emit_digraph6(g) << '\n';
  }
  return 0;
}

int cmd_orientations(const Io& io, int n) {
  Output out(io.output);
  std::vector<SimpleGraph> graphs;
  if (n > 0) {
    graphs = load_cubic_catalogue(n);
  } else {
    std::istringstream lines(slurp(io.input));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line[0] != '#') graphs.push_back(parse_graph6(line));
    }
  }
  for (const SimpleGraph& g : graphs) {
    for (const OrientedGraph& o : all_orientations(g)) out.stream() << emit_digraph6(o) << '\n';
  }
  return 0;
}

int cmd_verify(const Io& io, const std::string& colouring_path, const std::string& kind) {
  const auto graphs = read_graphs(io);
  if (graphs.size() != 1) fail(ErrorCode::PreconditionViolated, "verify expects exactly one graph");
  const OrientedGraph& g = graphs.front();
  std::istringstream in(slurp(colouring_path));
  std::vector<int> colours{std::istream_iterator<int>(in), {}};
  const VertexColouring c(std::move(colours));
  const ValidityReport report = kind == "oriented" ? validate_oriented_colouring(g, c)
                                                   : validate_two_dipath_colouring(g, c);
  Json arcs = Json::array();
  for (const Arc& a : report.monochromatic_arcs) arcs.push_back({a.tail, a.head});
  Json opposed = Json::array();
  for (const auto& [a, b] : report.opposed_arcs) opposed.push_back({{a.tail, a.head}, {b.tail, b.head}});
  Json dipaths = Json::array();
  for (const TwoDipath& p : report.clashing_dipaths) dipaths.push_back({p.first, p.centre, p.last});
  Json record{{"kind", kind},
              {"valid", report.valid()},
              {"palette", c.palette_size()},
              {"monochromatic_arcs", std::move(arcs)},
              {"opposed_arcs", std::move(opposed)},
              {"clashing_dipaths", std::move(dipaths)}};
  Output out(io.output);
  out.stream() << record.dump() << '\n';
  return report.valid() ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented and 2-dipath colourings of cubic orientations"};
  app.require_subcommand(1);

  Io io;
  int q = 7;
  auto* paley = app.add_subcommand("paley", "Emit QR_q and its transitivity report");
  paley->add_option("-q,--q", q, "Prime modulus congruent to 3 mod 4");
  add_io(paley, io, false);

  auto* oriented = app.add_subcommand("colour-oriented", "Oriented colouring with at most 8 colours");
  add_io(oriented, io);
  auto* dipath = app.add_subcommand("colour-2dipath", "2-dipath colouring with at most 7 colours");
  add_io(dipath, io);

  int cap = 14;
  auto* exact = app.add_subcommand("exact", "Exact oriented, 2-dipath and square clique numbers");
  add_io(exact, io);
  exact->add_option("--oracle-cap", cap, "Largest order accepted");

  int n = 0;
  std::uint64_t seed = 1;
  int count = 1;
  bool catalogue = false;
  bool subcubic = false;
  auto* gen = app.add_subcommand("gen", "Random cubic orientations, or the connected cubic catalogue");
  gen->add_option("--n", n, "Order")->required();
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--count", count, "Number of instances");
  gen->add_flag("--catalogue", catalogue, "Emit connected cubic graphs (graph6) up to isomorphism");
  gen->add_flag("--subcubic", subcubic, "Random properly subcubic orientations instead");
  add_io(gen, io, false);

  int orient_n = 0;
  auto* orientations = app.add_subcommand("orientations", "All orientations of graph6 input");
  orientations->add_option("-i,--input", io.input, "graph6 file ('-' for stdin)");
  orientations->add_option("--n", orient_n, "Use the bundled cubic catalogue of this order");
  orientations->add_option("-o,--output", io.output, "Output file");

  CensusConfig cfg;
  std::vector<int> orders;
  std::vector<std::string> inputs;
  std::uint64_t census_seed = 0;
  bool no_oracles = false;
  std::string catalogue_dir;
  auto* census = app.add_subcommand("census", "Run the pipelines and checks over many instances");
  census->add_option("--n", orders, "Exhaustive orders (even, >= 4)")->delimiter(',');
  auto* census_seed_opt = census->add_option("--seed", census_seed, "Random mode seed");
  census->add_option("--count", cfg.count, "Random mode instance count");
  census->add_option("--min-n", cfg.min_order, "Random mode smallest order");
  census->add_option("--max-n", cfg.max_order, "Random mode largest order");
  census->add_option("-i,--input", inputs, "digraph6 files");
  census->add_option("--jobs", cfg.jobs, "Worker threads");
  census->add_option("--oracle-cap", cfg.oracle_cap, "Largest order for exact oracles");
  census->add_option("--catalogue-dir", catalogue_dir, "Directory with cubic_NN.g6 files");
  census->add_flag("--no-oracles", no_oracles, "Skip exact oracles");
  census->add_flag("--timing", cfg.timing, "Record wall times (non-reproducible output)");
  census->add_option("-o,--output", io.output, "Output file");

  std::string colouring_path;
  std::string kind = "oriented";
  auto* verify = app.add_subcommand("verify", "Re-validate a colouring file against a graph");
  add_io(verify, io);
  verify->add_option("--colouring", colouring_path, "File of whitespace-separated colours")->required();
  verify->add_option("--kind", kind, "Colouring notion")->check(CLI::IsMember({"oriented", "2dipath"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*paley) return cmd_paley(q, io);
    if (*oriented) return cmd_colour_oriented(io);
    if (*dipath) return cmd_colour_dipath(io);
    if (*exact) return cmd_exact(io, cap);
    if (*gen) return cmd_gen(n, seed, count, catalogue, subcubic, io);
    if (*orientations) return cmd_orientations(io, orient_n);
    if (*verify) return cmd_verify(io, colouring_path, kind);
    if (*census) {
      if (!inputs.empty()) {
        cfg.source = InstanceSource::Files;
        cfg.files.assign(inputs.begin(), inputs.end());
      } else if (*census_seed_opt) {
        cfg.source = InstanceSource::Random;
        cfg.seed = census_seed;
      } else {
        cfg.source = InstanceSource::Exhaustive;
        cfg.orders = orders.empty() ? std::vector<int>{4, 6, 8} : orders;
      }
      cfg.catalogue_dir = catalogue_dir;
      cfg.run_oracles = !no_oracles;
      Output out(io.output);
      const CensusSummary summary = run_census(cfg, out.stream());
      if (io.output != "-") std::cerr << summary_line(summary) << '\n';
      return summary.failures() == 0 ? 0 : kExitFailures;
    }
  } catch (const Error& e) {
    fmt::print(std::cerr, "orcol: {}\n", e.what());
    if (!e.certificate().empty()) fmt::print(std::cerr, "certificate: {}\n", e.certificate());
    return e.code() == ErrorCode::InvariantViolation ? kExitFailures : kExitUsage;
  }
  return kExitUsage;
}
