#include "orcol/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <thread>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "orcol/catalogue.hpp"
#include "orcol/codec.hpp"
#include "orcol/dipath_seven.hpp"
#include "orcol/error.hpp"
#include "orcol/generate.hpp"
#include "orcol/oracle.hpp"
#include "orcol/oriented_eight.hpp"

namespace orcol {

using Json = nlohmann::ordered_json;

void CensusConfig::validate() const {
  switch (source) {
    case InstanceSource::Files:
      if (files.empty()) fail(ErrorCode::PreconditionViolated, "file mode needs at least one input");
      break;
    case InstanceSource::Exhaustive:
      for (int n : orders) {
        if (n < 4 || n % 2 != 0) {
          fail(ErrorCode::PreconditionViolated, fmt::format("exhaustive order {} is not even and >= 4", n));
        }
      }
      break;
    case InstanceSource::Random:
      if (!seed) fail(ErrorCode::PreconditionViolated, "random mode needs a seed");
      if (count < 0) fail(ErrorCode::PreconditionViolated, "negative instance count");
      if (min_order < 4 || max_order < min_order || min_order % 2 != 0 || max_order % 2 != 0) {
        fail(ErrorCode::PreconditionViolated,
             fmt::format("random order range [{}, {}] must be even and >= 4", min_order, max_order));
      }
      break;
  }
  if (jobs < 1) fail(ErrorCode::PreconditionViolated, "jobs must be positive");
  if (oracle_cap < 0) fail(ErrorCode::PreconditionViolated, "oracle cap must be non-negative");
}

std::vector<Instance> census_instances(const CensusConfig& cfg) {
  cfg.validate();
  std::vector<Instance> instances;
  switch (cfg.source) {
    case InstanceSource::Files:
      for (const auto& path : cfg.files) {
        std::ifstream in(path);
        if (!in) fail(ErrorCode::Io, fmt::format("cannot open {}", path.string()));
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
          ++line_no;
          if (line.empty() || line[0] == '#') continue;
          instances.push_back({fmt::format("{}:{}", path.filename().string(), line_no), parse_digraph6(line)});
        }
      }
      break;
    case InstanceSource::Exhaustive: {
      const auto dir = cfg.catalogue_dir.empty() ? default_data_dir() : cfg.catalogue_dir;
      for (int n : cfg.orders) {
        const auto graphs = load_cubic_catalogue(n, dir);
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
          const Orientations all = all_orientations(graphs[gi]);
          for (std::uint64_t k = 0; k < all.size(); ++k) {
            instances.push_back({fmt::format("n{}-g{}-o{}", n, gi, k), all[k]});
          }
        }
      }
      break;
    }
    case InstanceSource::Random: {
      Rng master(*cfg.seed);
      const int choices = (cfg.max_order - cfg.min_order) / 2 + 1;
      for (int i = 0; i < cfg.count; ++i) {
        const int n = cfg.min_order + 2 * static_cast<int>(master.below(choices));
        const std::uint64_t seed = master.next();
        instances.push_back({fmt::format("r{}-n{}", i, n), random_cubic_orientation(n, seed)});
      }
      break;
    }
  }
  return instances;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void note_palette(PipelineTally& tally, int palette, const std::string& id) {
  if (palette > tally.max_palette) {
    tally.max_palette = palette;
    tally.max_palette_instance = id;
  }
}

Json violation_record(const Error& e) {
  return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()},
              {"certificate", e.certificate()}};
}

void merge(CensusSummary& into, const CensusSummary& from) {
  into.instances += from.instances;
  for (auto [dst, src] : {std::pair{&into.oriented8, &from.oriented8}, std::pair{&into.dipath7, &from.dipath7}}) {
    dst->runs += src->runs;
    dst->skipped += src->skipped;
    dst->failures += src->failures;
    note_palette(*dst, src->max_palette, src->max_palette_instance);
  }
  into.invariant_violations += from.invariant_violations;
  into.witness_checked += from.witness_checked;
  into.witness_invalid += from.witness_invalid;
  into.square_bound_checked += from.square_bound_checked;
  into.square_bound_violations += from.square_bound_violations;
  into.centre_bound_violations += from.centre_bound_violations;
  into.oracle_runs += from.oracle_runs;
  into.oracle_inconsistencies += from.oracle_inconsistencies;
  if (from.max_chi_o > into.max_chi_o) {
    into.max_chi_o = from.max_chi_o;
    into.max_chi_o_instance = from.max_chi_o_instance;
  }
  into.max_chi_2d = std::max(into.max_chi_2d, from.max_chi_2d);
  if (from.max_clique > into.max_clique) {
    into.max_clique = from.max_clique;
    into.max_clique_instance = from.max_clique_instance;
  }
}

}  // namespace

std::string analyse_instance(const Instance& instance, const CensusConfig& cfg, CensusSummary& s) {
  const OrientedGraph& g = instance.graph;
  const StructuralProfile profile = structural_profile(g);
  const bool cubic = is_cubic(g);
  Json record;
  record["schema"] = kReportSchema;
  record["record"] = "instance";
  record["id"] = instance.id;
  record["digraph6"] = emit_digraph6(g);
  record["n"] = g.order();
  record["arcs"] = g.arc_count();
  record["profile"] = Json{{"cubic", cubic},
                           {"connected", profile.connected},
                           {"sources", profile.sources.size()},
                           {"sinks", profile.sinks.size()},
                           {"triangles", profile.triangles.size()},
                           {"cut_arcs", profile.cut_arcs.size()},
                           {"properly_subcubic", profile.properly_subcubic}};
  Json violations = Json::array();
  ++s.instances;

  int palette8 = -1;
  if (cfg.run_oriented8) {
    Json out;
    if (!cubic || !profile.connected) {
      out["status"] = "not_applicable";
      ++s.oriented8.skipped;
    } else {
      ++s.oriented8.runs;
      const auto start = Clock::now();
      try {
        const EightColouring result = oriented_eight_colouring(g);
        const bool valid = validate_oriented_colouring(g, result.colouring).valid();
        palette8 = result.colouring.palette_size();
        out["status"] = "ok";
        out["palette"] = palette8;
        out["case"] = to_string(result.certificate.tag);
        out["detail"] = result.certificate.detail;
        out["valid"] = valid;
        out["colouring"] = result.colouring.colours();
        if (!valid || palette8 > 8) ++s.oriented8.failures;
        note_palette(s.oriented8, palette8, instance.id);
      } catch (const Error& e) {
        out["status"] = "error";
        violations.push_back(violation_record(e));
        ++s.oriented8.failures;
        if (e.code() == ErrorCode::InvariantViolation) ++s.invariant_violations;
      }
      if (cfg.timing) out["ms"] = millis_since(start);
    }
    record["oriented8"] = std::move(out);
  }

  int palette7 = -1;
  if (cfg.run_dipath7) {
    Json out;
    if (!cubic) {
      out["status"] = "not_applicable";
      ++s.dipath7.skipped;
    } else {
      ++s.dipath7.runs;
      const auto start = Clock::now();
      try {
        const DipathColouring result = two_dipath_seven_colouring(g);
        const bool valid = validate_two_dipath_colouring(g, result.colouring).valid();
        palette7 = result.colouring.palette_size();
        Json routes = Json::array();
        for (DipathRoute r : result.routes) routes.push_back(std::string(to_string(r)));
        out["status"] = "ok";
        out["palette"] = palette7;
        out["routes"] = std::move(routes);
        out["valid"] = valid;
        out["colouring"] = result.colouring.colours();
        if (!valid || palette7 > 7) ++s.dipath7.failures;
        note_palette(s.dipath7, palette7, instance.id);
      } catch (const Error& e) {
        out["status"] = "error";
        violations.push_back(violation_record(e));
        ++s.dipath7.failures;
        if (e.code() == ErrorCode::InvariantViolation) ++s.invariant_violations;
      }
      if (cfg.timing) out["ms"] = millis_since(start);
    }
    record["dipath7"] = std::move(out);
  }

  if (cfg.run_structural_checks && cubic) {
    Json checks;
    try {
      const SquareEdgeCount count = average_degree_check(g);
      checks["square_edges"] = count.edges;
      checks["square_bound"] = count.bound;
      const auto centres = induced_dipath_centre_counts(g);
      const int worst = centres.empty() ? 0 : *std::ranges::max_element(centres);
      checks["max_induced_centre"] = worst;
      ++s.square_bound_checked;
      if (worst > 2) ++s.centre_bound_violations;
    } catch (const Error& e) {
      violations.push_back(violation_record(e));
      ++s.square_bound_violations;
      if (e.code() == ErrorCode::InvariantViolation) ++s.invariant_violations;
    }
    if (!has_source_or_sink(g)) {
      ++s.witness_checked;
      try {
        const AltPathWitness w = alt_path_witness(g);
        const bool ok = is_valid_witness(g, w);
        checks["witness"] = Json{{"kind", std::string(to_string(w.kind))}, {"centre", w.centre}, {"valid", ok}};
        if (!ok) ++s.witness_invalid;
      } catch (const Error& e) {
        violations.push_back(violation_record(e));
        ++s.witness_invalid;
        if (e.code() == ErrorCode::InvariantViolation) ++s.invariant_violations;
      }
    }
    record["checks"] = std::move(checks);
  }

  if (cfg.run_oracles && g.order() <= cfg.oracle_cap) {
    const OracleLimits limits{std::max(cfg.oracle_cap, 1)};
    Json oracle;
    try {
      ++s.oracle_runs;
      const int chi_o = exact_oriented_chromatic(g, limits).value;
      const int chi_2d = exact_two_dipath_chromatic(g, limits).value;
      const int omega = max_clique(build_square(g), limits).size;
      oracle["chi_o"] = chi_o;
      oracle["chi_2d"] = chi_2d;
      oracle["omega_square"] = omega;
      const bool consistent = chi_o >= chi_2d && chi_2d >= omega &&
                              (palette8 < 0 || palette8 >= chi_o) && (palette7 < 0 || palette7 >= chi_2d);
      oracle["consistent"] = consistent;
      if (!consistent) ++s.oracle_inconsistencies;
      if (chi_o > s.max_chi_o) {
        s.max_chi_o = chi_o;
        s.max_chi_o_instance = instance.id;
      }
      s.max_chi_2d = std::max(s.max_chi_2d, chi_2d);
      if (omega > s.max_clique) {
        s.max_clique = omega;
        s.max_clique_instance = instance.id;
      }
    } catch (const Error& e) {
      violations.push_back(violation_record(e));
      ++s.oracle_inconsistencies;
      if (e.code() == ErrorCode::InvariantViolation) ++s.invariant_violations;
    }
    record["oracle"] = std::move(oracle);
  }

  record["violations"] = std::move(violations);
  return record.dump();
}

std::string summary_line(const CensusSummary& s) {
  const auto tally = [](const PipelineTally& t) {
    return Json{{"runs", t.runs}, {"skipped", t.skipped}, {"failures", t.failures},
                {"max_palette", t.max_palette}, {"max_palette_instance", t.max_palette_instance}};
  };
  Json record;
  record["schema"] = kReportSchema;
  record["record"] = "summary";
  record["instances"] = s.instances;
  record["oriented8"] = tally(s.oriented8);
  record["dipath7"] = tally(s.dipath7);
  record["invariant_violations"] = s.invariant_violations;
  record["witness"] = Json{{"checked", s.witness_checked}, {"invalid", s.witness_invalid}};
  record["square_bound"] = Json{{"checked", s.square_bound_checked},
                                {"violations", s.square_bound_violations},
                                {"centre_violations", s.centre_bound_violations}};
  record["oracle"] = Json{{"runs", s.oracle_runs},
                          {"inconsistencies", s.oracle_inconsistencies},
                          {"max_chi_o", s.max_chi_o},
                          {"max_chi_o_instance", s.max_chi_o_instance},
                          {"max_chi_2d", s.max_chi_2d},
                          {"max_omega_square", s.max_clique},
                          {"max_omega_square_instance", s.max_clique_instance}};
  record["failures"] = s.failures();
  return record.dump();
}

CensusSummary run_census(const CensusConfig& cfg, std::ostream& out) {
  const std::vector<Instance> instances = census_instances(cfg);
  CensusSummary total;
  constexpr std::size_t kChunk = 512;
  for (std::size_t begin = 0; begin < instances.size(); begin += kChunk) {
    const std::size_t end = std::min(instances.size(), begin + kChunk);
    std::vector<std::string> lines(end - begin);
    std::vector<CensusSummary> parts(end - begin);
    std::atomic<std::size_t> next{begin};
    const auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        lines[i - begin] = analyse_instance(instances[i], cfg, parts[i - begin]);
      }
    };
    const int workers = std::min<int>(cfg.jobs, static_cast<int>(end - begin));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << lines[i] << '\n';
      merge(total, parts[i]);
    }
  }
  out << summary_line(total) << '\n';
  out.flush();
  if (!out) fail(ErrorCode::Io, "failed writing census output");
  return total;
}

}  // namespace orcol
