#include "rainbow/reduction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "rainbow/binary.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

// ---- partition matroids -------------------------------------------------------

PartitionMatroid PartitionMatroid::from_classes(int n, std::vector<Subset> classes) {
  // Validates the partition.
  Coloring::from_classes(n, classes);
  std::vector<Subset> copy = classes;
  Matroid m = matroid_from_rank(
      n,
      [copy](Subset x) {
        int hit = 0;
        for (Subset cls : copy) hit += x.intersects(cls) ? 1 : 0;
        return hit;
      },
      OracleOptions{.known_binary = true});
  return PartitionMatroid(std::move(classes), std::move(m));
}

int PartitionMatroid::covering_number() const {
  int best = 0;
  for (Subset cls : classes_) best = std::max(best, cls.size());
  return best;
}

PartitionMatroid coloring_to_partition(const Coloring& c) {
  return PartitionMatroid::from_classes(c.size(), c.classes());
}

Coloring partition_to_coloring(const PartitionMatroid& p) {
  return Coloring::from_classes(p.size(), p.classes());
}

// ---- reductions -------------------------------------------------------------

bool is_reduction(const Matroid& n, const Matroid& m) {
  if (n.size() != m.size()) {
    throw InputError("reduction needs equal ground sets (" + std::to_string(n.size()) + " vs " +
                     std::to_string(m.size()) + ")");
  }
  for (Subset c : circuits(m)) {
    if (n.is_independent(c)) return false;
  }
  return true;
}

bool is_rank_preserving_reduction(const Matroid& n, const Matroid& m) {
  return is_reduction(n, m) && n.rank() == m.rank();
}

// ---- covering number ----------------------------------------------------------

int covering_number_formula(const Matroid& m) {
  if (m.size() > kCoveringFormulaLimit) {
    throw TooLargeError("covering formula is limited to " + std::to_string(kCoveringFormulaLimit) +
                        " elements");
  }
  if (has_loops(m)) throw LoopError("a matroid with a loop cannot be covered by independent sets");
  int best = 0;
  const Subset::Mask end = Subset::Mask{1} << m.size();
  for (Subset::Mask x = 1; x < end; ++x) {
    const Subset s(x);
    const int r = m.rank(s);
    best = std::max(best, (s.size() + r - 1) / r);
  }
  return best;
}

std::vector<Subset> independent_partition(const Matroid& m) {
  if (has_loops(m)) throw LoopError("a matroid with a loop cannot be covered by independent sets");
  const int n = m.size();
  if (n == 0) return {};
  const int start = std::max(1, (n + m.rank() - 1) / m.rank());
  std::vector<Subset> sets(start);
  std::vector<int> owner(n, -1);

  // Shortest augmenting path in the exchange graph: x -> y when y sits in
  // some set I with I - y + x independent.
  auto insert = [&](int s) {
    constexpr int kUnvisited = -2;
    std::vector<int> parent(n, kUnvisited);
    parent[s] = -1;
    std::deque<int> queue{s};
    const int k = static_cast<int>(sets.size());
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int j = 0; j < k; ++j) {
        if (owner[x] == j || !m.is_independent(sets[j].with(x))) continue;
        int target = j;
        for (int cur = x; cur != -1; cur = parent[cur]) {
          const int old = owner[cur];
          if (old >= 0) sets[old] = sets[old].without(cur);
          sets[target] = sets[target].with(cur);
          owner[cur] = target;
          target = old;
        }
        return true;
      }
      for (int j = 0; j < k; ++j) {
        if (owner[x] == j) continue;
        for (int y : sets[j]) {
          if (parent[y] != kUnvisited) continue;
          if (m.is_independent(sets[j].without(y).with(x))) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    while (!insert(s)) sets.emplace_back();
  }
  return sets;
}

int covering_number_partition(const Matroid& m) {
  return static_cast<int>(independent_partition(m).size());
}

int covering_number(const Matroid& m) {
  if (m.size() <= kCoveringFormulaLimit) return covering_number_formula(m);
  return covering_number_partition(m);
}

// ---- flat decomposition -----------------------------------------------------

Subset lucas_flat(const Matroid& n, const Matroid& m) {
  require_binary(n, "lucas_flat");
  require_binary(m, "lucas_flat");
  if (!is_rank_preserving_reduction(n, m)) {
    throw InputError("lucas_flat needs a rank-preserving reduction N <=_r M");
  }
  if (same_matroid(n, m)) throw InputError("lucas_flat needs N != M");
  for (Subset f : flats(m)) {
    if (f.empty() || f == m.ground()) continue;
    const Matroid split = split_at(m, f);
    if (is_rank_preserving_reduction(n, split) && is_rank_preserving_reduction(split, m)) return f;
  }
  throw TheoremViolation("no flat separates a rank-preserving binary reduction");
}

// ---- bounded colorings ------------------------------------------------------

std::optional<Coloring> conjecture_search(const Matroid& m, int bound, bool rank_preserving) {
  const int k = covering_number(m);
  if (bound < k) {
    throw InputError("class bound " + std::to_string(bound) + " is below the covering number " +
                     std::to_string(k));
  }
  PartitionFilter filter;
  if (rank_preserving) filter.exact_colors = m.rank();
  for (int b = k; b <= bound; ++b) {
    filter.max_class_size = b;
    std::optional<Coloring> found;
    for_each_rcf_coloring(m, filter, [&](const Coloring& c) {
      found = c;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// ---- circuit families ---------------------------------------------------------

CircuitFamily parse_family(const std::string& text, int n, int g) {
  CircuitFamily family;
  family.g = g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    family.members.push_back(parse_subset(line, n));
  }
  return family;
}

std::string to_string(const CircuitFamily& family) {
  std::string out;
  for (Subset c : family.members) out += to_string(c) + "\n";
  return out;
}

bool verify_family(const Matroid& m, const CircuitFamily& family) {
  Subset universe;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (!is_circuit(m, family.members[i])) {
      throw InputError("family member " + std::to_string(i) + " (" +
                       to_string(family.members[i]) + ") is not a circuit");
    }
    universe |= family.members[i];
  }
  // Only elements inside some member matter, and the count only grows with X.
  for (int i = 2; i <= family.g - 1 && i <= m.size(); ++i) {
    const int k = std::min(i, universe.size());
    bool ok = true;
    for_each_subset_of_size(universe, k, [&](Subset x) {
      int meeting = 0;
      for (Subset c : family.members) meeting += (x & c).size() >= 2 ? 1 : 0;
      ok = meeting <= i - 1;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

RankBounds rank_bounds(const Matroid& m, const CircuitFamily& family) {
  if (family.g < 3) throw InputError("rank bounds need g >= 3");
  if (!verify_family(m, family)) throw InputError("circuit family violates the sparsity condition");
  const auto count = static_cast<long long>(family.members.size());
  return RankBounds{boost::rational<long long>(count, family.g - 2), m.size() - count};
}

std::string to_string(const boost::rational<long long>& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace rainbow
