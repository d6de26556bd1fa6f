// Reductions N <= M (every independent set of N is independent in M), the
// bridge between RCF colorings and partition matroids, covering numbers,
// the flat decomposition of rank-preserving binary reductions, and color
// count bounds from sparse circuit families.
#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

/// Partition matroid with all-ones bounds: independent iff at most one
/// element from each class.
class PartitionMatroid {
 public:
  /// Classes must be nonempty, disjoint and cover {0, ..., n-1}.
  static PartitionMatroid from_classes(int n, std::vector<Subset> classes);

  int size() const { return matroid_.size(); }
  const std::vector<Subset>& classes() const { return classes_; }
  int covering_number() const;
  const Matroid& matroid() const { return matroid_; }

 private:
  PartitionMatroid(std::vector<Subset> classes, Matroid matroid)
      : classes_(std::move(classes)), matroid_(std::move(matroid)) {}

  std::vector<Subset> classes_;
  Matroid matroid_;
};

PartitionMatroid coloring_to_partition(const Coloring& c);
Coloring partition_to_coloring(const PartitionMatroid& p);

/// N <= M, decided by checking that no circuit of M is independent in N.
bool is_reduction(const Matroid& n, const Matroid& m);
bool is_rank_preserving_reduction(const Matroid& n, const Matroid& m);

/// Minimum number of independent sets covering the ground set. Uses the
/// max ceil(|X| / r(X)) formula up to kCoveringFormulaLimit elements and
/// matroid partitioning above. Throws LoopError on loops.
int covering_number(const Matroid& m);
inline constexpr int kCoveringFormulaLimit = 20;
int covering_number_formula(const Matroid& m);
int covering_number_partition(const Matroid& m);
/// A cover by covering_number(m) disjoint independent sets, by augmenting paths.
std::vector<Subset> independent_partition(const Matroid& m);

/// For binary N <=_r M with N != M: the canonically first nonempty proper
/// flat F of M with N <=_r M|F (+) M/F <=_r M.
Subset lucas_flat(const Matroid& n, const Matroid& m);

/// An RCF coloring with all classes of size <= bound, trying bounds in
/// increasing order and returning the canonically first coloring at the
/// smallest feasible bound. With rank_preserving, only rank(M)-color colorings
/// are considered. nullopt means none exists.
std::optional<Coloring> conjecture_search(const Matroid& m, int bound, bool rank_preserving = false);

/// Circuits of a host matroid together with the sparsity parameter g.
struct CircuitFamily {
  std::vector<Subset> members;
  int g = 0;
};

/// One circuit per line, element indices separated by spaces.
CircuitFamily parse_family(const std::string& text, int n, int g);
std::string to_string(const CircuitFamily& family);

/// For every 2 <= i <= g-1 and every |X| = i, at most i-1 members meet X in
/// two or more elements. Throws InputError if a member is not a circuit of m.
bool verify_family(const Matroid& m, const CircuitFamily& family);

/// Color counts of RCF colorings with classes of size <= g-1 lie in
/// [lower, upper] = [|C| / (g-2), |S| - |C|].
struct RankBounds {
  boost::rational<long long> lower;
  long long upper;
};
RankBounds rank_bounds(const Matroid& m, const CircuitFamily& family);

std::string to_string(const boost::rational<long long>& value);

}  // namespace rainbow
