// The test corpus: every loopless binary matroid given by a full-rank r x n
// GF(2) matrix in reduced row echelon form (deduplicated by circuit lists,
// no isomorphism rejection), followed by named fixtures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graphic.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

struct CatalogEntry {
  std::string name;
  Matroid matroid;
  bool binary;
  /// Matroid file text; empty for entries without a file form.
  std::string text;
  std::optional<Graph> graph;
  bool cographic = false;
};

inline constexpr int kCatalogMaxRank = 4;
inline constexpr int kCatalogMaxSize = 7;

/// Ranks 1..max_rank and sizes 1..max_size, ordered by (n, r) then matrix.
std::vector<CatalogEntry> matrix_catalog(int max_rank, int max_size);
/// U(2,4), U(2,5), U(3,5), U(2,4)+U(1,1), Fano, graphic K3, K4, K5-e,
/// co-graphic K4, K(3,4), the doubled triangle and the triangular prism.
std::vector<CatalogEntry> fixture_catalog();
/// matrix_catalog followed by fixture_catalog.
std::vector<CatalogEntry> build_catalog(int max_rank, int max_size);

}  // namespace rainbow
