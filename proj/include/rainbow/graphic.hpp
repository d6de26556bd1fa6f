// Graphs and their graphic / co-graphic matroids, (2,3)-sparsity, Henneberg
// (H0) decompositions, colorings with small classes, and the chained K(3,4)
// family used for color-count bounds.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

struct Edge {
  int u;
  int v;
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph; edge i is element i of its matroids. Self-loops are
/// rejected. Vertex and edge counts are limited to 64.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  Subset vertices() const { return Subset::range(vertex_count_); }
  Subset all_edges() const { return Subset::range(edge_count()); }
  /// No two edges join the same pair of vertices.
  bool is_simple() const;
  int degree(int v) const;
  /// delta(v): the edges incident to v.
  Subset star(int v) const;
  /// E[X]: the edges with both ends in X.
  Subset induced_edges(Subset vertex_set) const;
  int component_count(Subset edge_set) const;
  bool is_connected() const;

  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

/// Edges in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
Graph complete_graph(int n);
/// Sides {0..a-1} and {a..a+b-1}; edges ordered by the first side.
Graph complete_bipartite(int a, int b);
/// K(n) without the edge (u, v).
Graph complete_graph_minus_edge(int n, int u, int v);
/// Two triangles 0-1-2 and 3-4-5 joined by the matching 0-3, 1-4, 2-5.
Graph triangular_prism();
/// Every edge of g replaced by two parallel copies (2i and 2i+1).
Graph doubled(const Graph& g);

Matroid graphic_matroid(const Graph& g);
/// The dual of the graphic matroid; bridges are its loops and are rejected
/// unless `bridges` allows them.
Matroid cographic_matroid(const Graph& g, LoopPolicy bridges = LoopPolicy::kReject);

/// Inclusion-minimal edge sets whose removal increases the number of
/// components, computed from vertex bipartitions; canonical order.
std::vector<Subset> elementary_cuts(const Graph& g);

// ---- sparsity ---------------------------------------------------------------

struct SparsityReport {
  bool sparse;
  /// A vertex set X with |X| >= 2 and |E[X]| > 2|X| - 3. From the exhaustive
  /// check this is the canonically first one.
  std::optional<Subset> violator;
};

inline constexpr int kExhaustiveSparsityLimit = 20;

/// Requires a simple graph with at least two vertices. Exhaustive over vertex
/// subsets up to kExhaustiveSparsityLimit vertices, pebble game above.
SparsityReport is_sparse_23(const Graph& g);
SparsityReport sparse_23_exhaustive(const Graph& g);
/// The (2,3) pebble game; the violator is the vertex set reached by the
/// failed pebble search plus the rejected edge's ends.
SparsityReport sparse_23_pebble_game(const Graph& g);
bool is_tight_23(const Graph& g);

// ---- Henneberg (H0) ---------------------------------------------------------

struct HennebergStep {
  int vertex;
  int first_edge;
  int second_edge;
};

/// Start from the single edge base_edge, then add steps[0], steps[1], ... in
/// order, each a new vertex joined to two existing distinct vertices.
struct HennebergTrace {
  int base_edge = -1;
  std::vector<HennebergStep> steps;
  std::vector<int> vertex_order(const Graph& g) const;
};

/// Requires a simple graph with |E| = 2|V| - 3. Backtracks over removable
/// degree-2 vertices down to K2.
std::optional<HennebergTrace> h0_decomposition(const Graph& g);
/// Rebuilds g from the trace and checks every step's constraints.
bool replay_trace(const Graph& g, const HennebergTrace& trace);
/// The base edge alone, then one class per step.
Coloring trace_coloring(const Graph& g, const HennebergTrace& trace);

// ---- small-class colorings --------------------------------------------------

/// An RCF coloring of the graphic matroid with every class of size <= 2.
/// Tight H0-constructible graphs use their trace; everything else goes
/// through the exhaustive search.
std::optional<Coloring> pair_coloring(const Graph& g);
/// Exhaustive search only (simple graphs, at most kEnumerationLimit edges).
std::optional<Coloring> pair_coloring_exhaustive(const Graph& g);

/// For g the union of k disjoint spanning trees: a coloring with all classes
/// of size exactly k, obtained by repeatedly contracting a bundle of exactly
/// k parallel edges, or nullopt when no such contraction sequence exists.
std::optional<Coloring> k_tree_contraction_coloring(const Graph& g, int k);

// ---- the chained K(3,4) family ----------------------------------------------

/// Vertex layout: copy i (0-based) uses 7i..7i+2 for its 3-side and
/// 7i+3..7i+6 for u, v, w, z; the j attached vertices are 7q..7q+j-1.
/// Edge layout: the 12 edges of each copy (3-side major), then the connectors
/// (w_i v_{i+1}, z_i u_{i+1}) per i, then two edges (w_q p, z_q p) per
/// attached vertex p.
Graph gen_gqj(int q, int j);
/// Vertex stars and connector pairs, as circuits of the co-graphic matroid, g = 4.
CircuitFamily gqj_circuit_family(int q, int j);

}  // namespace rainbow
