// Oracle-based matroids on the ground set {0, ..., n-1}.
//
// A Matroid is an immutable value wrapping a shared rank oracle. Every
// construction in this library (uniform, binary, graphic, partition, duals,
// minors, direct sums) is expressed through its rank function; independence
// is rank(X) == |X|. Rank values are memoized per oracle instance and the
// memo is safe for concurrent readers.
//
// Minors are relabeled: the k-th element of a restriction M|S' or of a
// contraction M/T is the k-th smallest element of S' or S-T. Use expand()
// and compress() from subset.hpp to move subsets between the two labelings.
#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/subset.hpp"

namespace rainbow {

enum class LoopPolicy { kReject, kAllow };

namespace detail {

class RankMemo;

class RankOracle {
 public:
  RankOracle(int n, bool gf2_representable);
  RankOracle(const RankOracle&) = delete;
  RankOracle& operator=(const RankOracle&) = delete;
  virtual ~RankOracle();

  int size() const { return n_; }
  bool gf2_representable() const { return gf2_representable_; }
  int rank(Subset x) const;

 protected:
  virtual int compute_rank(Subset x) const = 0;

 private:
  int n_;
  bool gf2_representable_;
  std::unique_ptr<RankMemo> memo_;
};

}  // namespace detail

class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const detail::RankOracle> oracle);

  int size() const { return oracle_->size(); }
  Subset ground() const { return Subset::range(size()); }
  int rank() const { return full_rank_; }
  int rank(Subset x) const { return oracle_->rank(x); }
  bool is_independent(Subset x) const { return rank(x) == x.size(); }

  /// True when the matroid was built by a construction that is known to be
  /// GF(2)-representable (binary matrix, graph, partition, and duals, minors
  /// and direct sums of those). False does not mean non-binary.
  bool known_binary() const { return oracle_->gf2_representable(); }

 private:
  std::shared_ptr<const detail::RankOracle> oracle_;
  int full_rank_;
};

// ---- constructions ----------------------------------------------------------

Matroid uniform_matroid(int rank, int n, LoopPolicy loops = LoopPolicy::kReject);
Matroid free_matroid(int n);

struct OracleOptions {
  bool known_binary = false;
  LoopPolicy loops = LoopPolicy::kReject;
};

/// A matroid given by its rank function. The function must be a matroid rank
/// function; check_axioms() can validate small instances.
Matroid matroid_from_rank(int n, std::function<int(Subset)> rank_fn, OracleOptions options = {});

/// A matroid given by an independence oracle; rank is computed greedily.
Matroid matroid_from_independence(int n, std::function<bool(Subset)> independent,
                                  OracleOptions options = {});

Matroid dual(const Matroid& m);
/// M|kept, relabeled onto {0, ..., |kept|-1}.
Matroid restrict(const Matroid& m, Subset kept);
/// M \ removed = M|(S - removed).
Matroid delete_elements(const Matroid& m, Subset removed);
/// M/T for an arbitrary T: I is independent iff r(T u I) - r(T) = |I|.
/// Relabeled onto S - T.
Matroid contract(const Matroid& m, Subset contracted);
/// Elements of `first` come first, then those of `second` shifted by first.size().
Matroid direct_sum(const Matroid& first, const Matroid& second);
/// M|F (+) M/F on the original labeling of S.
Matroid split_at(const Matroid& m, Subset f);

// ---- queries ----------------------------------------------------------------

Subset closure(const Matroid& m, Subset x);
bool is_flat(const Matroid& m, Subset x);
bool is_basis(const Matroid& m, Subset x);
bool is_circuit(const Matroid& m, Subset x);
/// A cut: a minimal set meeting every basis, i.e. the complement of a hyperplane.
bool is_cocircuit(const Matroid& m, Subset x);
/// Whether x is a cut of the restriction M|z (x must be inside z).
bool is_cocircuit_of_restriction(const Matroid& m, Subset z, Subset x);

/// All circuits in canonical order.
std::vector<Subset> circuits(const Matroid& m);
/// All cuts in canonical order; identical to circuits(dual(m)).
std::vector<Subset> cocircuits(const Matroid& m);
std::vector<Subset> bases(const Matroid& m);
/// Every flat in canonical order (n <= 20).
std::vector<Subset> flats(const Matroid& m);

Subset loops(const Matroid& m);
bool has_loops(const Matroid& m);
/// A greedy basis: scan elements in increasing order.
Subset greedy_basis(const Matroid& m, Subset within);

/// Connected components (loops and coloops are singleton components), sorted
/// by smallest element.
std::vector<Subset> components(const Matroid& m);
bool is_connected(const Matroid& m);
/// Minimum circuit size; throws InputError("no circuit") on free matroids.
int girth(const Matroid& m);
/// Minimum cut size; throws InputError("no cut") when rank is 0.
int cogirth(const Matroid& m);
/// Classes of the relation r({e,f}) = 1 over non-loop elements, sorted by
/// smallest element. Elements with no parallel partner form singleton classes.
std::vector<Subset> parallel_classes(const Matroid& m);

/// Same ground set size and same independent sets.
bool same_matroid(const Matroid& a, const Matroid& b);

/// Exhaustive check of the independence axioms (I1)-(I3) for n <= 12.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_axioms(const Matroid& m);

}  // namespace rainbow
