#pragma once

#include <filesystem>
#include <vector>

#include "orcol/simple_graph.hpp"

namespace orcol {

/// Backtracking isomorphism test with degree and local-structure refinement.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Connected cubic graphs on n vertices, one per isomorphism class, in
/// first-generated order. Labelled graphs are produced by saturating the
/// lowest unsaturated vertex with ascending higher neighbours; practical for
/// n <= 10.
std::vector<SimpleGraph> enumerate_connected_cubic(int n);

/// $ORCOL_DATA_DIR, else the source-tree data directory, else the installed one.
std::filesystem::path default_data_dir();

/// Reads `cubic_NN.g6` (one graph6 per line) from `dir`. Throws Io when the
/// file is missing.
std::vector<SimpleGraph> load_cubic_catalogue(int n, const std::filesystem::path& dir = default_data_dir());

std::filesystem::path catalogue_file(int n, const std::filesystem::path& dir);

}  // namespace orcol
