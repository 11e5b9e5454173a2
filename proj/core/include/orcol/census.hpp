#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orcol/oriented_graph.hpp"

namespace orcol {

inline constexpr const char* kReportSchema = "orcol.census/1";

enum class InstanceSource { Files, Exhaustive, Random };

struct CensusConfig {
  InstanceSource source = InstanceSource::Exhaustive;
  /// Files: one digraph6 per line.
  std::vector<std::filesystem::path> files;
  /// Exhaustive: orders whose cubic catalogues are enumerated.
  std::vector<int> orders;
  std::filesystem::path catalogue_dir;
  /// Random: `count` cubic orientations with even order in [min_order, max_order].
  std::optional<std::uint64_t> seed;
  int count = 0;
  int min_order = 10;
  int max_order = 20;

  bool run_oriented8 = true;
  bool run_dipath7 = true;
  /// Structural checks: alternating-path witness, square edge bound, clique number.
  bool run_structural_checks = true;
  bool run_oracles = true;
  /// Exact oracles only run on instances with at most this many vertices.
  int oracle_cap = 8;
  /// Adds wall times to reports; the output is then no longer reproducible.
  bool timing = false;
  int jobs = 1;

  /// Throws PreconditionViolated on inconsistent settings.
  void validate() const;
};

struct Instance {
  std::string id;
  OrientedGraph graph;
};

/// Materializes the configured instances in report order.
std::vector<Instance> census_instances(const CensusConfig& cfg);

struct PipelineTally {
  std::uint64_t runs = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  int max_palette = 0;
  std::string max_palette_instance;
};

struct CensusSummary {
  std::uint64_t instances = 0;
  PipelineTally oriented8;
  PipelineTally dipath7;
  std::uint64_t invariant_violations = 0;
  std::uint64_t witness_checked = 0;
  std::uint64_t witness_invalid = 0;
  std::uint64_t square_bound_checked = 0;
  std::uint64_t square_bound_violations = 0;
  std::uint64_t centre_bound_violations = 0;
  std::uint64_t oracle_runs = 0;
  std::uint64_t oracle_inconsistencies = 0;
  int max_chi_o = 0;
  std::string max_chi_o_instance;
  int max_chi_2d = 0;
  int max_clique = 0;
  std::string max_clique_instance;

  /// Every failure kind that makes a census unsuccessful.
  std::uint64_t failures() const {
    return oriented8.failures + dipath7.failures + invariant_violations + witness_invalid +
           square_bound_violations + centre_bound_violations + oracle_inconsistencies;
  }
};

/// Analyses one instance and returns its report record (one JSON object, no newline).
std::string analyse_instance(const Instance& instance, const CensusConfig& cfg,
                             CensusSummary& summary);

/// Writes one JSON record per instance followed by a summary record. Output
/// order and content depend only on the config (unless timing is enabled).
CensusSummary run_census(const CensusConfig& cfg, std::ostream& out);

std::string summary_line(const CensusSummary& summary);

}  // namespace orcol
