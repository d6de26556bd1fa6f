#include "rainbow/graphic.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

// Union-find over at most 64 vertices on the stack.
class VertexSets {
 public:
  explicit VertexSets(int n) { std::iota(parent_.begin(), parent_.begin() + n, 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::array<int, kMaxElements> parent_{};
};

void require_simple(const Graph& g, const char* what) {
  if (!g.is_simple()) throw InputError(std::string(what) + " needs a simple graph");
}

}  // namespace

// ---- Graph ------------------------------------------------------------------

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0 || vertex_count_ > kMaxElements) {
    throw InputError("vertex count outside [0, 64]");
  }
  if (edges_.size() > static_cast<std::size_t>(kMaxElements)) {
    throw TooLargeError("graph has more than 64 edges");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InputError("edge " + std::to_string(i) + " has an endpoint outside the vertex range");
    }
    if (e.u == e.v) throw LoopError("edge " + std::to_string(i) + " is a self-loop");
  }
}

bool Graph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const bool same = (edges_[i].u == edges_[j].u && edges_[i].v == edges_[j].v) ||
                        (edges_[i].u == edges_[j].v && edges_[i].v == edges_[j].u);
      if (same) return false;
    }
  }
  return true;
}

int Graph::degree(int v) const { return star(v).size(); }

Subset Graph::star(int v) const {
  Subset out;
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i].u == v || edges_[i].v == v) out = out.with(i);
  }
  return out;
}

Subset Graph::induced_edges(Subset vertex_set) const {
  Subset out;
  for (int i = 0; i < edge_count(); ++i) {
    if (vertex_set.contains(edges_[i].u) && vertex_set.contains(edges_[i].v)) out = out.with(i);
  }
  return out;
}

int Graph::component_count(Subset edge_set) const {
  VertexSets sets(vertex_count_);
  int components = vertex_count_;
  for (int i : edge_set) components -= sets.unite(edges_[i].u, edges_[i].v) ? 1 : 0;
  return components;
}

bool Graph::is_connected() const { return component_count(all_edges()) <= 1; }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph(a + b, std::move(edges));
}

Graph complete_graph_minus_edge(int n, int u, int v) {
  const Graph full = complete_graph(n);
  std::vector<Edge> edges;
  for (const Edge& e : full.edges()) {
    if (!((e.u == u && e.v == v) || (e.u == v && e.v == u))) edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

Graph triangular_prism() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph doubled(const Graph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(e);
    edges.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

// ---- matroids ---------------------------------------------------------------

namespace {

class GraphicOracle final : public detail::RankOracle {
 public:
  explicit GraphicOracle(const Graph& g)
      : RankOracle(g.edge_count(), true), graph_(g) {}

 protected:
  int compute_rank(Subset x) const override {
    VertexSets sets(graph_.vertex_count());
    int rank = 0;
    for (int i : x) rank += sets.unite(graph_.edge(i).u, graph_.edge(i).v) ? 1 : 0;
    return rank;
  }

 private:
  Graph graph_;
};

}  // namespace

Matroid graphic_matroid(const Graph& g) { return Matroid(std::make_shared<GraphicOracle>(g)); }

Matroid cographic_matroid(const Graph& g, LoopPolicy bridges) {
  Matroid m = dual(graphic_matroid(g));
  if (bridges == LoopPolicy::kReject) {
    if (const Subset l = loops(m); !l.empty()) {
      throw LoopError("edge " + std::to_string(l.min_element()) +
                      " is a bridge, a loop of the co-graphic matroid");
    }
  }
  return m;
}

std::vector<Subset> elementary_cuts(const Graph& g) {
  if (g.vertex_count() > kExhaustiveSparsityLimit) {
    throw TooLargeError("elementary cut enumeration is limited to 20 vertices");
  }
  // Vertex sets of the connected components.
  VertexSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.u, e.v);
  std::vector<Subset> component_of(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    component_of[sets.find(v)] = component_of[sets.find(v)].with(v);
  }
  auto induced_connected = [&](Subset part) {
    VertexSets local(g.vertex_count());
    int pieces = part.size();
    for (int i : g.induced_edges(part)) pieces -= local.unite(g.edge(i).u, g.edge(i).v) ? 1 : 0;
    return pieces == 1;
  };
  std::vector<Subset> out;
  for (Subset component : component_of) {
    if (component.size() < 2) continue;
    const int anchor = component.min_element();
    const Subset rest = component.without(anchor);
    // Sides containing the anchor, each bipartition met once.
    const Subset::Mask end = Subset::Mask{1} << rest.size();
    for (Subset::Mask bits = 0; bits < end; ++bits) {
      const Subset side = expand(Subset(bits), rest).with(anchor);
      if (side == component) continue;
      if (!induced_connected(side) || !induced_connected(component - side)) continue;
      Subset cut;
      for (int i = 0; i < g.edge_count(); ++i) {
        if (side.contains(g.edge(i).u) != side.contains(g.edge(i).v)) cut = cut.with(i);
      }
      out.push_back(cut);
    }
  }
  sort_canonical(out);
  return out;
}

// ---- sparsity ---------------------------------------------------------------

namespace {

void require_sparsity_input(const Graph& g) {
  require_simple(g, "(2,3)-sparsity");
  if (g.vertex_count() < 2) throw InputError("(2,3)-sparsity needs at least two vertices");
}

}  // namespace

SparsityReport sparse_23_exhaustive(const Graph& g) {
  require_sparsity_input(g);
  if (g.vertex_count() > kExhaustiveSparsityLimit) {
    throw TooLargeError("exhaustive sparsity check is limited to 20 vertices");
  }
  std::vector<Subset::Mask> adjacent(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adjacent[e.u] |= Subset::Mask{1} << e.v;
    adjacent[e.v] |= Subset::Mask{1} << e.u;
  }
  std::optional<Subset> violator;
  for (int k = 2; k <= g.vertex_count() && !violator; ++k) {
    for_each_subset_of_size(g.vertices(), k, [&](Subset x) {
      int twice_edges = 0;
      for (int v : x) twice_edges += std::popcount(adjacent[v] & x.mask());
      if (twice_edges / 2 > 2 * k - 3) {
        violator = x;
        return false;
      }
      return true;
    });
  }
  return SparsityReport{!violator.has_value(), violator};
}

SparsityReport sparse_23_pebble_game(const Graph& g) {
  require_sparsity_input(g);
  const int n = g.vertex_count();
  std::vector<int> pebbles(n, 2);
  std::vector<std::vector<int>> out(n);  // accepted edges, oriented away from their pebble

  // Moves a free pebble to `start` along a directed path avoiding `other`;
  // `seen` collects the vertices explored.
  auto fetch = [&](int start, int other, Subset& seen) {
    std::vector<int> from(n, -1);
    seen = seen.with(start).with(other);
    std::vector<int> stack{start};
    Subset local = Subset{start, other};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : out[x]) {
        if (local.contains(y)) continue;
        local = local.with(y);
        from[y] = x;
        if (pebbles[y] > 0) {
          for (int cur = y; cur != start; cur = from[cur]) {
            const int prev = from[cur];
            auto& edges = out[prev];
            edges.erase(std::find(edges.begin(), edges.end(), cur));
            out[cur].push_back(prev);
          }
          --pebbles[y];
          ++pebbles[start];
          return true;
        }
        stack.push_back(y);
      }
    }
    seen |= local;
    return false;
  };

  for (const Edge& e : g.edges()) {
    while (pebbles[e.u] + pebbles[e.v] < 4) {
      Subset reached;
      const bool moved = fetch(e.u, e.v, reached) || fetch(e.v, e.u, reached);
      if (!moved) {
        Subset reached_both;
        fetch(e.u, e.v, reached_both);
        fetch(e.v, e.u, reached_both);
        return SparsityReport{false, reached_both};
      }
    }
    if (pebbles[e.u] > 0) {
      --pebbles[e.u];
      out[e.u].push_back(e.v);
    } else {
      --pebbles[e.v];
      out[e.v].push_back(e.u);
    }
  }
  return SparsityReport{true, std::nullopt};
}

SparsityReport is_sparse_23(const Graph& g) {
  if (g.vertex_count() <= kExhaustiveSparsityLimit) return sparse_23_exhaustive(g);
  return sparse_23_pebble_game(g);
}

bool is_tight_23(const Graph& g) {
  return is_sparse_23(g).sparse && g.edge_count() == 2 * g.vertex_count() - 3;
}

// ---- Henneberg ----------------------------------------------------------------

std::vector<int> HennebergTrace::vertex_order(const Graph& g) const {
  std::vector<int> order;
  if (base_edge < 0) return order;
  order.push_back(g.edge(base_edge).u);
  order.push_back(g.edge(base_edge).v);
  for (const HennebergStep& s : steps) order.push_back(s.vertex);
  return order;
}

std::optional<HennebergTrace> h0_decomposition(const Graph& g) {
  require_simple(g, "h0_decomposition");
  if (g.vertex_count() < 2 || g.edge_count() != 2 * g.vertex_count() - 3) {
    throw InputError("h0_decomposition needs |E| = 2|V| - 3 and |V| >= 2");
  }
  std::unordered_set<Subset::Mask> dead;
  std::vector<HennebergStep> removed;  // last construction step first
  HennebergTrace trace;

  std::function<bool(Subset)> peel = [&](Subset present) {
    const Subset edges = g.induced_edges(present);
    if (present.size() == 2) {
      trace.base_edge = edges.min_element();
      return true;
    }
    if (dead.contains(present.mask())) return false;
    // Highest-numbered vertex first.
    const std::vector<int> order = present.elements();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      const Subset incident = edges & g.star(v);
      if (incident.size() != 2) continue;
      removed.push_back({v, incident.min_element(), incident.max_element()});
      if (peel(present.without(v))) return true;
      removed.pop_back();
    }
    dead.insert(present.mask());
    return false;
  };

  if (!peel(g.vertices())) return std::nullopt;
  trace.steps.assign(removed.rbegin(), removed.rend());
  return trace;
}

bool replay_trace(const Graph& g, const HennebergTrace& trace) {
  if (trace.base_edge < 0 || trace.base_edge >= g.edge_count()) return false;
  const Edge& base = g.edge(trace.base_edge);
  Subset present{base.u, base.v};
  Subset used = Subset::singleton(trace.base_edge);
  for (const HennebergStep& s : trace.steps) {
    if (s.vertex < 0 || s.vertex >= g.vertex_count() || present.contains(s.vertex)) return false;
    if (s.first_edge == s.second_edge) return false;
    int anchors[2];
    int k = 0;
    for (int e : {s.first_edge, s.second_edge}) {
      if (e < 0 || e >= g.edge_count() || used.contains(e)) return false;
      const Edge& edge = g.edge(e);
      if (edge.u != s.vertex && edge.v != s.vertex) return false;
      anchors[k++] = edge.u == s.vertex ? edge.v : edge.u;
    }
    if (anchors[0] == anchors[1] || !present.contains(anchors[0]) || !present.contains(anchors[1])) {
      return false;
    }
    present = present.with(s.vertex);
    used = used.with(s.first_edge).with(s.second_edge);
  }
  return present == g.vertices() && used == g.all_edges();
}

Coloring trace_coloring(const Graph& g, const HennebergTrace& trace) {
  std::vector<Subset> classes{Subset::singleton(trace.base_edge)};
  for (const HennebergStep& s : trace.steps) classes.push_back(Subset{s.first_edge, s.second_edge});
  return Coloring::from_classes(g.edge_count(), std::move(classes));
}

// ---- small-class colorings ----------------------------------------------------

std::optional<Coloring> pair_coloring_exhaustive(const Graph& g) {
  require_simple(g, "pair_coloring");
  std::optional<Coloring> found;
  for_each_rcf_coloring(graphic_matroid(g), PartitionFilter{2, std::nullopt},
                        [&](const Coloring& c) {
                          found = c;
                          return false;
                        });
  return found;
}

std::optional<Coloring> pair_coloring(const Graph& g) {
  require_simple(g, "pair_coloring");
  const bool tight_count = g.vertex_count() >= 2 && g.edge_count() == 2 * g.vertex_count() - 3;
  if (tight_count) {
    if (auto trace = h0_decomposition(g)) return trace_coloring(g, *trace);
  }
  if (g.edge_count() <= kEnumerationLimit) return pair_coloring_exhaustive(g);
  // Beyond the enumeration guard, answer only where a characterization decides.
  if (tight_count) return std::nullopt;
  if (g.vertex_count() >= 2 && !is_sparse_23(g).sparse) return std::nullopt;
  throw TooLargeError("pair coloring search is limited to " + std::to_string(kEnumerationLimit) +
                      " edges for graphs that are neither tight nor dense");
}

std::optional<Coloring> k_tree_contraction_coloring(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be positive");
  if (g.vertex_count() < 1 || g.edge_count() != k * (g.vertex_count() - 1)) {
    throw InputError("k_tree_contraction_coloring needs |E| = k(|V| - 1)");
  }
  if (g.edge_count() > 0 && covering_number(graphic_matroid(g)) != k) {
    throw InputError("the graph is not a union of " + std::to_string(k) + " spanning trees");
  }
  std::unordered_set<Subset::Mask> dead;
  std::vector<Subset> bundles;

  std::function<bool(Subset)> contract_all = [&](Subset contracted) {
    if (contracted == g.all_edges()) return true;
    if (dead.contains(contracted.mask())) return false;
    VertexSets sets(g.vertex_count());
    for (int i : contracted) sets.unite(g.edge(i).u, g.edge(i).v);
    // Group the remaining edges by the pair of merged vertices they join.
    std::vector<Subset> groups;
    std::vector<std::pair<int, int>> keys;
    for (int i : g.all_edges() - contracted) {
      int a = sets.find(g.edge(i).u);
      int b = sets.find(g.edge(i).v);
      if (a > b) std::swap(a, b);
      auto it = std::find(keys.begin(), keys.end(), std::make_pair(a, b));
      if (it == keys.end()) {
        keys.emplace_back(a, b);
        groups.push_back(Subset::singleton(i));
      } else {
        groups[it - keys.begin()] = groups[it - keys.begin()].with(i);
      }
    }
    for (Subset bundle : groups) {
      if (bundle.size() != k) continue;
      bundles.push_back(bundle);
      if (contract_all(contracted | bundle)) return true;
      bundles.pop_back();
    }
    dead.insert(contracted.mask());
    return false;
  };

  if (!contract_all(Subset{})) return std::nullopt;
  return Coloring::from_classes(g.edge_count(), bundles);
}

// ---- chained K(3,4) family ----------------------------------------------------

namespace {

struct GqjLayout {
  static int u(int copy) { return 7 * copy + 3; }
  static int v(int copy) { return 7 * copy + 4; }
  static int w(int copy) { return 7 * copy + 5; }
  static int z(int copy) { return 7 * copy + 6; }
};

void require_gqj_parameters(int q, int j) {
  if (q < 1 || j < 1 || j > 7) throw InputError("G^j_q needs q >= 1 and 1 <= j <= 7");
  if (12 * q + 2 * (q - 1) + 2 * j > kMaxElements) {
    throw TooLargeError("G^j_q with more than 64 edges");
  }
}

}  // namespace

Graph gen_gqj(int q, int j) {
  require_gqj_parameters(q, j);
  std::vector<Edge> edges;
  for (int copy = 0; copy < q; ++copy) {
    for (int s = 0; s < 3; ++s) {
      for (int t = 0; t < 4; ++t) edges.push_back({7 * copy + s, 7 * copy + 3 + t});
    }
  }
  for (int copy = 0; copy + 1 < q; ++copy) {
    edges.push_back({GqjLayout::w(copy), GqjLayout::v(copy + 1)});
    edges.push_back({GqjLayout::z(copy), GqjLayout::u(copy + 1)});
  }
  const int last = q - 1;
  for (int p = 0; p < j; ++p) {
    edges.push_back({GqjLayout::w(last), 7 * q + p});
    edges.push_back({GqjLayout::z(last), 7 * q + p});
  }
  return Graph(7 * q + j, std::move(edges));
}

CircuitFamily gqj_circuit_family(int q, int j) {
  const Graph g = gen_gqj(q, j);
  const Matroid cographic = cographic_matroid(g);
  CircuitFamily family;
  family.g = 4;
  for (int v = 0; v < g.vertex_count(); ++v) family.members.push_back(g.star(v));
  const int connectors_begin = 12 * q;
  for (int copy = 0; copy + 1 < q; ++copy) {
    family.members.push_back(
        Subset{connectors_begin + 2 * copy, connectors_begin + 2 * copy + 1});
  }
  for (Subset c : family.members) {
    if (!is_circuit(cographic, c)) {
      throw TheoremViolation("G^j_q family member " + to_string(c) + " is not an elementary cut");
    }
  }
  return family;
}

}  // namespace rainbow
