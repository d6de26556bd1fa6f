#include "rainbow/catalog.hpp"

#include <algorithm>
#include <map>

#include "rainbow/binary.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"

namespace rainbow {

namespace {

// Calls visit(columns) for every rank-r RREF matrix with n nonzero columns.
template <typename Visit>
void for_each_rref(int r, int n, Visit&& visit) {
  std::vector<std::uint64_t> columns(n, 0);
  // Column j either becomes pivot `pivots` or takes any nonzero vector in the
  // span of the pivots placed before it.
  auto place = [&](auto&& self, int j, int pivots) -> void {
    if (n - j < r - pivots) return;
    if (j == n) {
      visit(columns);
      return;
    }
    if (pivots < r) {
      columns[j] = std::uint64_t{1} << pivots;
      self(self, j + 1, pivots + 1);
    }
    const std::uint64_t end = std::uint64_t{1} << pivots;
    for (std::uint64_t v = 1; v < end; ++v) {
      columns[j] = v;
      self(self, j + 1, pivots);
    }
  };
  place(place, 0, 0);
}

CatalogEntry graph_entry(std::string name, const Graph& g, bool cograph) {
  Matroid m = cograph ? cographic_matroid(g) : graphic_matroid(g);
  return CatalogEntry{std::move(name), std::move(m), true, format_graph(g, cograph), g, cograph};
}

CatalogEntry uniform_entry(int r, int n) {
  Matroid m = uniform_matroid(r, n);
  const bool binary = is_binary(m);
  return CatalogEntry{"U(" + std::to_string(r) + "," + std::to_string(n) + ")", std::move(m), binary,
                      format_uniform(r, n), std::nullopt};
}

}  // namespace

std::vector<CatalogEntry> matrix_catalog(int max_rank, int max_size) {
  if (max_rank > kCatalogMaxRank || max_size > kCatalogMaxSize) {
    throw TooLargeError("catalog caps are r <= " + std::to_string(kCatalogMaxRank) + ", n <= " +
                        std::to_string(kCatalogMaxSize));
  }
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= max_size; ++n) {
    for (int r = 1; r <= std::min(max_rank, n); ++r) {
      std::map<std::vector<Subset::Mask>, bool> seen;
      int index = 0;
      for_each_rref(r, n, [&](const std::vector<std::uint64_t>& columns) {
        BinaryMatroid b = BinaryMatroid::from_columns(r, columns);
        std::vector<Subset::Mask> key;
        for (Subset c : circuits_nullspace(b)) key.push_back(c.mask());
        if (!seen.emplace(std::move(key), true).second) return;
        std::string name = "binary-r" + std::to_string(r) + "-n" + std::to_string(n) + "-" +
                           std::to_string(index++);
        std::string text = format_binary(b);
        out.push_back(CatalogEntry{std::move(name), b.matroid(), true, std::move(text), std::nullopt});
      });
    }
  }
  return out;
}

std::vector<CatalogEntry> fixture_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(uniform_entry(2, 4));
  out.push_back(uniform_entry(2, 5));
  out.push_back(uniform_entry(3, 5));
  out.push_back(CatalogEntry{"U(2,4)+U(1,1)", direct_sum(uniform_matroid(2, 4), uniform_matroid(1, 1)),
                             false, "", std::nullopt});
  {
    BinaryMatroid fano = fano_matroid();
    out.push_back(CatalogEntry{"fano", fano.matroid(), true, format_binary(fano), std::nullopt});
  }
  out.push_back(graph_entry("graphic-K3", complete_graph(3), false));
  out.push_back(graph_entry("graphic-K4", complete_graph(4), false));
  out.push_back(graph_entry("graphic-K5-e", complete_graph_minus_edge(5, 3, 4), false));
  out.push_back(graph_entry("cographic-K4", complete_graph(4), true));
  out.push_back(graph_entry("graphic-K3,4", complete_bipartite(3, 4), false));
  out.push_back(graph_entry("graphic-doubled-K3", doubled(complete_graph(3)), false));
  out.push_back(graph_entry("graphic-prism", triangular_prism(), false));
  return out;
}

std::vector<CatalogEntry> build_catalog(int max_rank, int max_size) {
  std::vector<CatalogEntry> out = matrix_catalog(max_rank, max_size);
  for (CatalogEntry& e : fixture_catalog()) out.push_back(std::move(e));
  return out;
}

}  // namespace rainbow
