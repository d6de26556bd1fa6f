#include "rainbow/coloring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "rainbow/binary.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

namespace detail {
struct ColoringAccess {
  static Coloring make(std::vector<int> colors, std::vector<Subset> classes) {
    return Coloring(std::move(colors), std::move(classes));
  }
};
}  // namespace detail

// ---- Coloring ---------------------------------------------------------------

Coloring Coloring::from_colors(std::vector<int> colors) {
  if (colors.size() > static_cast<std::size_t>(kMaxElements)) {
    throw TooLargeError("coloring of more than 64 elements");
  }
  int q = 0;
  for (int c : colors) {
    if (c < 0) throw InputError("negative color " + std::to_string(c));
    q = std::max(q, c + 1);
  }
  std::vector<Subset> classes(q);
  for (std::size_t e = 0; e < colors.size(); ++e) {
    classes[colors[e]] = classes[colors[e]].with(static_cast<int>(e));
  }
  for (int c = 0; c < q; ++c) {
    if (classes[c].empty()) {
      throw InputError("colors are not contiguous from 0: color " + std::to_string(c) + " unused");
    }
  }
  return Coloring(std::move(colors), std::move(classes));
}

Coloring Coloring::from_classes(int n, std::vector<Subset> classes) {
  if (n < 0 || n > kMaxElements) throw InputError("coloring ground set outside [0, 64]");
  std::vector<int> colors(n, -1);
  Subset seen;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InputError("color class " + std::to_string(c) + " is empty");
    if (!classes[c].subset_of(Subset::range(n))) {
      throw InputError("color class " + std::to_string(c) + " leaves the ground set");
    }
    if (classes[c].intersects(seen)) throw InputError("color classes overlap");
    seen |= classes[c];
    for (int e : classes[c]) colors[e] = static_cast<int>(c);
  }
  if (seen != Subset::range(n)) throw InputError("color classes do not cover the ground set");
  return Coloring(std::move(colors), std::move(classes));
}

int Coloring::max_class_size() const {
  int best = 0;
  for (Subset s : classes_) best = std::max(best, s.size());
  return best;
}

bool Coloring::is_rainbow(Subset x) const {
  std::uint64_t seen = 0;
  for (int e : x) {
    const std::uint64_t bit = std::uint64_t{1} << colors_[e];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

Coloring Coloring::canonical() const {
  std::vector<Subset> sorted = classes_;
  std::sort(sorted.begin(), sorted.end(),
            [](Subset a, Subset b) { return a.min_element() < b.min_element(); });
  return from_classes(size(), std::move(sorted));
}

std::string to_string(const Coloring& c) {
  std::string out;
  for (int e = 0; e < c.size(); ++e) {
    if (e > 0) out += ' ';
    out += std::to_string(c.color_of(e));
  }
  return out;
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> colors;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("bad color '" + token + "'");
    }
    if (used != token.size()) throw InputError("bad color '" + token + "'");
    colors.push_back(value);
  }
  return Coloring::from_colors(std::move(colors));
}

// ---- rainbow circuits -------------------------------------------------------

namespace {

void require_same_size(const Matroid& m, const Coloring& c) {
  if (c.size() != m.size()) {
    throw InputError("coloring has " + std::to_string(c.size()) + " elements but the matroid has " +
                     std::to_string(m.size()));
  }
}

void require_color_count(const Coloring& c, int expected, const char* what) {
  if (c.color_count() != expected) {
    throw NotRankPreservingError(std::string(what) + " needs exactly " + std::to_string(expected) +
                                 " colors, got " + std::to_string(c.color_count()));
  }
}

// Walks rainbow independent sets with increasing elements; a rainbow circuit
// C is reached as (C - max C) + max C.
void rainbow_circuit_search(const Matroid& m, const Coloring& c, Subset independent,
                            std::uint64_t used_colors, int next, std::optional<Subset>& best) {
  for (int e = next; e < m.size(); ++e) {
    const std::uint64_t bit = std::uint64_t{1} << c.color_of(e);
    if (used_colors & bit) continue;
    const Subset grown = independent.with(e);
    if (m.is_independent(grown)) {
      rainbow_circuit_search(m, c, grown, used_colors | bit, e + 1, best);
      continue;
    }
    if (best && !canonical_less(grown, *best)) continue;
    bool minimal = true;
    for (int f : independent) {
      if (!m.is_independent(grown.without(f))) {
        minimal = false;
        break;
      }
    }
    if (minimal) best = grown;
  }
}

}  // namespace

std::optional<Subset> find_rainbow_circuit(const Matroid& m, const Coloring& c) {
  require_same_size(m, c);
  std::optional<Subset> best;
  rainbow_circuit_search(m, c, Subset{}, 0, 0, best);
  return best;
}

bool is_rainbow_circuit_free(const Matroid& m, const Coloring& c) {
  return !find_rainbow_circuit(m, c).has_value();
}

// ---- standard colorings -----------------------------------------------------

StandardColoring standard_coloring(const Matroid& m, std::span<const int> seed_order) {
  if (const Subset l = loops(m); !l.empty()) {
    throw LoopError("standard coloring of a matroid with a loop at element " +
                    std::to_string(l.min_element()));
  }
  for (int s : seed_order) {
    if (s < 0 || s >= m.size()) throw InputError("seed " + std::to_string(s) + " out of range");
  }
  std::vector<Subset> classes;
  Subset colored;
  std::size_t cursor = 0;
  while (colored != m.ground()) {
    while (cursor < seed_order.size() && colored.contains(seed_order[cursor])) ++cursor;
    const int seed =
        cursor < seed_order.size() ? seed_order[cursor] : (m.ground() - colored).min_element();
    // The prefix is closed, so its closure with the seed adds exactly the
    // seed's parallel class in the contraction.
    const Subset next = closure(m, colored.with(seed)) - colored;
    classes.push_back(next);
    colored |= next;
  }
  StandardOrdering ordering;
  for (std::size_t i = 0; i < classes.size(); ++i) ordering.order.push_back(static_cast<int>(i));
  return {Coloring::from_classes(m.size(), std::move(classes)), std::move(ordering)};
}

namespace {

constexpr int kOrderingSearchLimit = 24;

// Explores orderings of the classes as a walk over sets of already placed
// classes; `extends(placed_union, class_index, placed_count)` decides whether
// a class may come next. Returns one accepted ordering.
template <typename Extends>
std::optional<std::vector<int>> search_orderings(const Coloring& c, Extends&& extends) {
  const int q = c.color_count();
  if (q > kOrderingSearchLimit) throw TooLargeError("ordering search over more than 24 classes");
  const std::uint32_t full = q == 32 ? ~0U : (1U << q) - 1;
  std::vector<char> dead(std::size_t{1} << q, 0);
  std::vector<int> order;
  std::function<bool(std::uint32_t, Subset)> walk = [&](std::uint32_t placed, Subset placed_union) {
    if (placed == full) return true;
    if (dead[placed]) return false;
    for (int j = 0; j < q; ++j) {
      if ((placed >> j) & 1U) continue;
      if (!extends(placed_union, j, std::popcount(placed))) continue;
      order.push_back(j);
      if (walk(placed | (1U << j), placed_union | c.color_class(j))) return true;
      order.pop_back();
    }
    dead[placed] = 1;
    return false;
  };
  if (walk(0, Subset{})) return order;
  return std::nullopt;
}

}  // namespace

std::optional<StandardOrdering> is_standard(const Matroid& m, const Coloring& c) {
  require_same_size(m, c);
  require_color_count(c, m.rank(), "standardness");
  auto order = search_orderings(c, [&](Subset placed_union, int j, int) {
    return is_flat(m, placed_union | c.color_class(j));
  });
  if (!order) return std::nullopt;
  return StandardOrdering{std::move(*order)};
}

bool is_standard_ordering(const Matroid& m, const Coloring& c, const StandardOrdering& ordering) {
  if (c.size() != m.size() || c.color_count() != m.rank()) return false;
  if (static_cast<int>(ordering.order.size()) != c.color_count()) return false;
  std::vector<char> used(c.color_count(), 0);
  Subset prefix;
  for (int j : ordering.order) {
    if (j < 0 || j >= c.color_count() || used[j]) return false;
    used[j] = 1;
    prefix |= c.color_class(j);
    if (!is_flat(m, prefix)) return false;
  }
  return true;
}

LemmaReport lemma_equiv_report(const Matroid& m, const Coloring& c) {
  require_same_size(m, c);
  require_color_count(c, m.rank(), "the equivalence report");
  LemmaReport report{};
  report.cut_chain = search_orderings(c, [&](Subset placed_union, int j, int) {
                       const Subset z = placed_union | c.color_class(j);
                       return is_cocircuit_of_restriction(m, z, c.color_class(j));
                     }).has_value();
  report.rank_chain = is_rainbow_circuit_free(m, c) &&
                      search_orderings(c, [&](Subset placed_union, int j, int placed_count) {
                        return m.rank(placed_union | c.color_class(j)) == placed_count + 1;
                      }).has_value();
  report.closed_chain = search_orderings(c, [&](Subset placed_union, int j, int) {
                          return !c.color_class(j).empty() &&
                                 is_flat(m, placed_union | c.color_class(j));
                        }).has_value();
  return report;
}

// ---- alternative theorem ----------------------------------------------------

namespace {

// A cut of M inside `cls`, if S - cls is not spanning: extend the closure of
// S - cls to a hyperplane H and return S - H.
std::optional<Subset> cut_inside(const Matroid& m, Subset cls) {
  Subset hull = closure(m, m.ground() - cls);
  if (m.rank(hull) >= m.rank()) return std::nullopt;
  while (m.rank(hull) < m.rank() - 1) {
    hull = closure(m, hull.with((m.ground() - hull).min_element()));
  }
  return m.ground() - hull;
}

}  // namespace

CircuitCutVerdict theorem1_verdict(const Matroid& m, const Coloring& c) {
  require_same_size(m, c);
  require_binary(m, "theorem1_verdict");
  require_color_count(c, m.rank(), "theorem1_verdict");
  if (auto circuit = find_rainbow_circuit(m, c)) return RainbowCircuit{*circuit};
  for (int j = 0; j < c.color_count(); ++j) {
    if (auto cut = cut_inside(m, c.color_class(j))) return MonochromaticCut{j, *cut};
  }
  throw TheoremViolation("binary matroid colored with rank-many colors has neither a rainbow "
                         "circuit nor a monochromatic cut");
}

CutCircuitVerdict theorem1_dual_verdict(const Matroid& m, const Coloring& c) {
  require_same_size(m, c);
  require_binary(m, "theorem1_dual_verdict");
  require_color_count(c, m.size() - m.rank(), "theorem1_dual_verdict");
  const CircuitCutVerdict on_dual = theorem1_verdict(dual(m), c);
  if (const auto* rc = std::get_if<RainbowCircuit>(&on_dual)) return RainbowCut{rc->circuit};
  const auto& mc = std::get<MonochromaticCut>(on_dual);
  return MonochromaticCircuit{mc.color, mc.cut};
}

bool certifies(const Matroid& m, const Coloring& c, const CircuitCutVerdict& v) {
  if (const auto* rc = std::get_if<RainbowCircuit>(&v)) {
    return is_circuit(m, rc->circuit) && c.is_rainbow(rc->circuit);
  }
  const auto& mc = std::get<MonochromaticCut>(v);
  return mc.color >= 0 && mc.color < c.color_count() && is_cocircuit(m, mc.cut) &&
         mc.cut.subset_of(c.color_class(mc.color));
}

bool certifies(const Matroid& m, const Coloring& c, const CutCircuitVerdict& v) {
  if (const auto* rc = std::get_if<RainbowCut>(&v)) {
    return is_cocircuit(m, rc->cut) && c.is_rainbow(rc->cut);
  }
  const auto& mc = std::get<MonochromaticCircuit>(v);
  return mc.color >= 0 && mc.color < c.color_count() && is_circuit(m, mc.circuit) &&
         mc.circuit.subset_of(c.color_class(mc.color));
}

namespace {

void require_corollary_hypotheses(const Matroid& m, const Coloring& c, const char* what) {
  require_same_size(m, c);
  require_binary(m, what);
  require_color_count(c, m.rank(), what);
  if (!is_rainbow_circuit_free(m, c)) {
    throw InputError(std::string(what) + " needs a rainbow circuit-free coloring");
  }
}

}  // namespace

int corollary_cut_class(const Matroid& m, const Coloring& c) {
  require_corollary_hypotheses(m, c, "corollary_cut_class");
  for (int j = 0; j < c.color_count(); ++j) {
    if (is_cocircuit(m, c.color_class(j))) return j;
  }
  throw TheoremViolation("rank-preserving RCF coloring of a binary matroid without a cut class");
}

int corollary_parallel_class(const Matroid& m, const Coloring& c) {
  require_corollary_hypotheses(m, c, "corollary_parallel_class");
  for (int j = 0; j < c.color_count(); ++j) {
    const Subset cls = c.color_class(j);
    if (m.rank(cls) == 1 && is_flat(m, cls)) return j;
  }
  throw TheoremViolation(
      "rank-preserving RCF coloring of a binary matroid without a parallel class");
}

// ---- non-standard colorings ---------------------------------------------------

Coloring nonstandard_coloring(const Matroid& m) {
  if (has_loops(m)) throw LoopError("nonstandard_coloring needs a loopless matroid");
  const std::optional<U24Witness> witness = find_u24_minor(m);
  if (!witness) throw InputError("nonstandard_coloring: the matroid is binary");

  const Subset f = witness->contract_set;
  const Subset outside_f = m.ground() - f;
  const Matroid over_f = contract(m, f);

  // G: closure of the U(2,4) in M/F, a rank-2 flat split into parallel classes.
  const Subset g_local = closure(over_f, compress(witness->four_elements, outside_f));
  std::vector<Subset> points = parallel_classes(restrict(over_f, g_local));
  if (points.size() < 4) throw TheoremViolation("U(2,4) closure with fewer than 4 points");
  std::vector<Subset> classes;
  Subset first_pair = points[0] | points[1];
  Subset remaining_points;
  for (std::size_t i = 2; i < points.size(); ++i) remaining_points |= points[i];
  classes.push_back(expand(expand(first_pair, g_local), outside_f));
  classes.push_back(expand(expand(remaining_points, g_local), outside_f));

  // Standard colorings of (M/F)/G and of M|F with fresh colors.
  const Subset beyond_g_local = over_f.ground() - g_local;
  const Matroid beyond_g = contract(over_f, g_local);
  const StandardColoring beyond = standard_coloring(beyond_g);
  for (Subset cls : beyond.coloring.classes()) {
    classes.push_back(expand(expand(cls, beyond_g_local), outside_f));
  }
  const Matroid inside_f = restrict(m, f);
  const StandardColoring inside = standard_coloring(inside_f);
  for (Subset cls : inside.coloring.classes()) {
    classes.push_back(expand(cls, f));
  }
  Coloring result = Coloring::from_classes(m.size(), std::move(classes)).canonical();
  if (result.color_count() != m.rank()) {
    throw TheoremViolation("non-standard coloring construction lost rank");
  }
  return result;
}

// ---- enumeration --------------------------------------------------------------

namespace {

class PartitionWalker {
 public:
  PartitionWalker(int n, const PartitionFilter& filter, const ColoringVisitor& visit,
                  std::vector<std::vector<Subset>> circuits_ending_at)
      : n_(n),
        filter_(filter),
        visit_(visit),
        circuits_ending_at_(std::move(circuits_ending_at)),
        colors_(n, -1),
        class_sizes_(n + 1, 0) {}

  std::uint64_t run() {
    step(0);
    return visited_;
  }

 private:
  bool completes_rainbow_circuit(int e) const {
    if (circuits_ending_at_.empty()) return false;
    for (Subset circuit : circuits_ending_at_[e]) {
      std::uint64_t seen = 0;
      bool rainbow = true;
      for (int x : circuit) {
        const std::uint64_t bit = std::uint64_t{1} << colors_[x];
        if (seen & bit) {
          rainbow = false;
          break;
        }
        seen |= bit;
      }
      if (rainbow) return true;
    }
    return false;
  }

  void step(int e) {
    if (stopped_) return;
    if (e == n_) {
      if (filter_.exact_colors && used_ != *filter_.exact_colors) return;
      std::vector<Subset> classes(used_);
      for (int x = 0; x < n_; ++x) classes[colors_[x]] = classes[colors_[x]].with(x);
      ++visited_;
      if (!visit_(detail::ColoringAccess::make(colors_, std::move(classes)))) stopped_ = true;
      return;
    }
    const int remaining_after = n_ - e - 1;
    for (int color = 0; color <= used_ && !stopped_; ++color) {
      const bool fresh = color == used_;
      if (!fresh && class_sizes_[color] >= filter_.max_class_size) continue;
      if (fresh && filter_.max_class_size < 1) continue;
      const int used_after = used_ + (fresh ? 1 : 0);
      if (filter_.exact_colors) {
        if (used_after > *filter_.exact_colors) continue;
        if (used_after + remaining_after < *filter_.exact_colors) continue;
      }
      colors_[e] = color;
      if (completes_rainbow_circuit(e)) continue;
      ++class_sizes_[color];
      used_ = used_after;
      step(e + 1);
      used_ -= fresh ? 1 : 0;
      --class_sizes_[color];
    }
    colors_[e] = -1;
  }

  int n_;
  PartitionFilter filter_;
  const ColoringVisitor& visit_;
  std::vector<std::vector<Subset>> circuits_ending_at_;
  std::vector<int> colors_;
  std::vector<int> class_sizes_;
  int used_ = 0;
  std::uint64_t visited_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::uint64_t for_each_partition(int n, const PartitionFilter& filter,
                                 const ColoringVisitor& visit) {
  if (n < 0 || n > kMaxElements) throw InputError("partition ground set outside [0, 64]");
  return PartitionWalker(n, filter, visit, {}).run();
}

std::uint64_t for_each_rcf_coloring(const Matroid& m, const PartitionFilter& filter,
                                    const ColoringVisitor& visit) {
  if (m.size() > kEnumerationLimit) {
    throw TooLargeError("RCF enumeration is limited to " + std::to_string(kEnumerationLimit) +
                        " elements");
  }
  std::vector<std::vector<Subset>> ending_at(m.size());
  for (Subset circuit : circuits(m)) ending_at[circuit.max_element()].push_back(circuit);
  return PartitionWalker(m.size(), filter, visit, std::move(ending_at)).run();
}

std::vector<Coloring> enumerate_rcf_colorings(const Matroid& m, int max_class_size,
                                              std::optional<int> exact_colors, std::size_t limit) {
  std::vector<Coloring> out;
  if (limit == 0) return out;
  for_each_rcf_coloring(m, PartitionFilter{max_class_size, exact_colors}, [&](const Coloring& c) {
    out.push_back(c);
    return out.size() < limit;
  });
  return out;
}

}  // namespace rainbow
