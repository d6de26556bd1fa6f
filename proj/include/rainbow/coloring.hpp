// Colorings of matroid ground sets: rainbow circuit-free (RCF) tests,
// standard colorings, the rainbow-circuit / monochromatic-cut alternative for
// binary matroids, and non-standard colorings of non-binary matroids.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/matroid.hpp"
#include "rainbow/subset.hpp"

namespace rainbow {

namespace detail {
struct ColoringAccess;
}

/// A partition of {0, ..., n-1} into nonempty color classes 0, ..., q-1.
class Coloring {
 public:
  /// colors[e] is the color of element e; the colors used must be exactly 0..q-1.
  static Coloring from_colors(std::vector<int> colors);
  /// classes[c] is the class of color c; they must partition {0, ..., n-1}.
  static Coloring from_classes(int n, std::vector<Subset> classes);

  int size() const { return static_cast<int>(colors_.size()); }
  int color_count() const { return static_cast<int>(classes_.size()); }
  int color_of(int e) const { return colors_[e]; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<Subset>& classes() const { return classes_; }
  Subset color_class(int c) const { return classes_[c]; }
  int max_class_size() const;

  /// No two elements of x share a color.
  bool is_rainbow(Subset x) const;
  /// Same partition with colors renumbered by smallest element.
  Coloring canonical() const;

  bool operator==(const Coloring&) const = default;

 private:
  friend struct detail::ColoringAccess;

  Coloring(std::vector<int> colors, std::vector<Subset> classes)
      : colors_(std::move(colors)), classes_(std::move(classes)) {}

  std::vector<int> colors_;
  std::vector<Subset> classes_;
};

/// The coloring file line: n space-separated colors.
std::string to_string(const Coloring& c);
Coloring parse_coloring(const std::string& text);

// ---- certificates -----------------------------------------------------------

struct RainbowCircuit {
  Subset circuit;
};
struct MonochromaticCut {
  int color;
  Subset cut;
};
struct RainbowCut {
  Subset cut;
};
struct MonochromaticCircuit {
  int color;
  Subset circuit;
};
/// Class indices in an order whose every prefix union is closed.
struct StandardOrdering {
  std::vector<int> order;
  bool operator==(const StandardOrdering&) const = default;
};

using CircuitCutVerdict = std::variant<RainbowCircuit, MonochromaticCut>;
using CutCircuitVerdict = std::variant<RainbowCut, MonochromaticCircuit>;

// ---- rainbow circuit-freeness -----------------------------------------------

/// The canonically first rainbow circuit, if any.
std::optional<Subset> find_rainbow_circuit(const Matroid& m, const Coloring& c);
bool is_rainbow_circuit_free(const Matroid& m, const Coloring& c);

// ---- standard colorings -----------------------------------------------------

struct StandardColoring {
  Coloring coloring;
  StandardOrdering ordering;
};

/// Builds S_1, ..., S_r where S_i is the parallel class of the seed in
/// M/(S_1 u ... u S_{i-1}). The seed of each step is the first uncolored
/// element of seed_order, or the smallest uncolored element once seed_order
/// is exhausted. Color i is S_{i+1}. Throws LoopError if M has loops.
StandardColoring standard_coloring(const Matroid& m, std::span<const int> seed_order = {});

/// An ordering of the classes with every prefix union closed, found by
/// backtracking. Throws NotRankPreservingError unless c has rank(M) colors.
std::optional<StandardOrdering> is_standard(const Matroid& m, const Coloring& c);

/// Checks an ordering certificate: a permutation of the classes whose prefix
/// unions are all closed.
bool is_standard_ordering(const Matroid& m, const Coloring& c, const StandardOrdering& ordering);

/// The three equivalent characterizations of standard colorings, each
/// evaluated over all class orderings:
///  cut_chain:    S_i is a cut of M|(S_1 u ... u S_i) for every i;
///  rank_chain:   the coloring is RCF and r(S_1 u ... u S_i) = i for every i;
///  closed_chain: every S_i is nonempty and S_1 u ... u S_i is closed.
struct LemmaReport {
  bool cut_chain;
  bool rank_chain;
  bool closed_chain;
  bool operator==(const LemmaReport&) const = default;
};
LemmaReport lemma_equiv_report(const Matroid& m, const Coloring& c);

// ---- the alternative theorem for binary matroids ------------------------------

/// For binary M colored with exactly rank(M) colors: a rainbow circuit (the
/// canonically first) or else a cut inside one class. Throws InputError on
/// non-binary input or a wrong color count, TheoremViolation if neither
/// certificate exists.
CircuitCutVerdict theorem1_verdict(const Matroid& m, const Coloring& c);
/// For binary M colored with exactly n - rank(M) colors: a rainbow cut or a
/// monochromatic circuit, computed on the dual.
CutCircuitVerdict theorem1_dual_verdict(const Matroid& m, const Coloring& c);

/// Re-checks a certificate from scratch.
bool certifies(const Matroid& m, const Coloring& c, const CircuitCutVerdict& v);
bool certifies(const Matroid& m, const Coloring& c, const CutCircuitVerdict& v);

/// Index of a color class that is a cut of M (binary, RCF, rank(M) colors).
int corollary_cut_class(const Matroid& m, const Coloring& c);
/// Index of a color class that is a parallel class of M (same preconditions).
int corollary_parallel_class(const Matroid& m, const Coloring& c);

/// A rank-preserving RCF coloring that is not standard, built around a U(2,4)
/// minor. Throws InputError when M is binary.
Coloring nonstandard_coloring(const Matroid& m);

// ---- exhaustive enumeration -------------------------------------------------

struct PartitionFilter {
  int max_class_size = kMaxElements;
  std::optional<int> exact_colors;
};

inline constexpr int kEnumerationLimit = 14;

/// Returning false from the visitor stops the enumeration.
using ColoringVisitor = std::function<bool(const Coloring&)>;

/// Visits every partition of {0, ..., n-1} passing the filter, in
/// restricted-growth (canonical) order. Returns the number visited.
std::uint64_t for_each_partition(int n, const PartitionFilter& filter, const ColoringVisitor& visit);

/// Same order, restricted to RCF colorings of M; partial assignments that
/// already complete a rainbow circuit are pruned. Throws TooLargeError above
/// kEnumerationLimit elements.
std::uint64_t for_each_rcf_coloring(const Matroid& m, const PartitionFilter& filter,
                                    const ColoringVisitor& visit);

std::vector<Coloring> enumerate_rcf_colorings(const Matroid& m, int max_class_size,
                                              std::optional<int> exact_colors = std::nullopt,
                                              std::size_t limit = SIZE_MAX);

}  // namespace rainbow
