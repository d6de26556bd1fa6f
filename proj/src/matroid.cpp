#include "rainbow/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace detail {

// Dense atomic table for small ground sets, sharded hash maps otherwise.
class RankMemo {
 public:
  explicit RankMemo(int n) {
    if (n <= kDenseLimit) {
      const std::size_t entries = std::size_t{1} << n;
      dense_ = std::make_unique<std::atomic<std::int8_t>[]>(entries);
      for (std::size_t i = 0; i < entries; ++i) dense_[i].store(-1, std::memory_order_relaxed);
    }
  }

  std::optional<int> find(Subset x) const {
    if (dense_) {
      const std::int8_t v = dense_[x.mask()].load(std::memory_order_relaxed);
      if (v < 0) return std::nullopt;
      return v;
    }
    const Shard& shard = shards_[shard_of(x)];
    std::lock_guard lock(shard.mutex);
    auto it = shard.values.find(x.mask());
    if (it == shard.values.end()) return std::nullopt;
    return it->second;
  }

  void store(Subset x, int value) const {
    if (dense_) {
      dense_[x.mask()].store(static_cast<std::int8_t>(value), std::memory_order_relaxed);
      return;
    }
    Shard& shard = shards_[shard_of(x)];
    std::lock_guard lock(shard.mutex);
    if (shard.values.size() < kShardCapacity) {
      shard.values.emplace(x.mask(), static_cast<std::int8_t>(value));
    }
  }

 private:
  static constexpr int kDenseLimit = 12;
  static constexpr std::size_t kShards = 16;
  static constexpr std::size_t kShardCapacity = std::size_t{1} << 16;

  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<Subset::Mask, std::int8_t> values;
  };

  static std::size_t shard_of(Subset x) {
    return static_cast<std::size_t>((x.mask() * 0x9E3779B97F4A7C15ULL) >> 60) % kShards;
  }

  std::unique_ptr<std::atomic<std::int8_t>[]> dense_;
  mutable Shard shards_[kShards];
};

RankOracle::RankOracle(int n, bool gf2_representable)
    : n_(n), gf2_representable_(gf2_representable), memo_(std::make_unique<RankMemo>(n)) {
  if (n < 0 || n > kMaxElements) {
    throw InputError("ground set size " + std::to_string(n) + " outside [0, 64]");
  }
}

RankOracle::~RankOracle() = default;

int RankOracle::rank(Subset x) const {
  if (x.empty()) return 0;
  if (auto cached = memo_->find(x)) return *cached;
  const int value = compute_rank(x);
  memo_->store(x, value);
  return value;
}

namespace {

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int r, int n) : RankOracle(n, r <= 1 || r >= n - 1), r_(r) {}

 protected:
  int compute_rank(Subset x) const override { return std::min(x.size(), r_); }

 private:
  int r_;
};

class FunctionOracle final : public RankOracle {
 public:
  FunctionOracle(int n, bool binary, std::function<int(Subset)> fn)
      : RankOracle(n, binary), fn_(std::move(fn)) {}

 protected:
  int compute_rank(Subset x) const override { return fn_(x); }

 private:
  std::function<int(Subset)> fn_;
};

class IndependenceOracle final : public RankOracle {
 public:
  IndependenceOracle(int n, bool binary, std::function<bool(Subset)> fn)
      : RankOracle(n, binary), fn_(std::move(fn)) {}

 protected:
  int compute_rank(Subset x) const override {
    Subset basis;
    for (int e : x) {
      if (fn_(basis.with(e))) basis = basis.with(e);
    }
    return basis.size();
  }

 private:
  std::function<bool(Subset)> fn_;
};

class DualOracle final : public RankOracle {
 public:
  explicit DualOracle(Matroid m) : RankOracle(m.size(), m.known_binary()), m_(std::move(m)) {}

 protected:
  int compute_rank(Subset x) const override {
    return x.size() + m_.rank(m_.ground() - x) - m_.rank();
  }

 private:
  Matroid m_;
};

class RestrictionOracle final : public RankOracle {
 public:
  RestrictionOracle(Matroid m, Subset kept)
      : RankOracle(kept.size(), m.known_binary()), m_(std::move(m)), kept_(kept) {}

 protected:
  int compute_rank(Subset x) const override { return m_.rank(expand(x, kept_)); }

 private:
  Matroid m_;
  Subset kept_;
};

class ContractionOracle final : public RankOracle {
 public:
  ContractionOracle(Matroid m, Subset contracted)
      : RankOracle(m.size() - contracted.size(), m.known_binary()),
        m_(std::move(m)),
        contracted_(contracted),
        kept_(m_.ground() - contracted),
        contracted_rank_(m_.rank(contracted)) {}

 protected:
  int compute_rank(Subset x) const override {
    return m_.rank(expand(x, kept_) | contracted_) - contracted_rank_;
  }

 private:
  Matroid m_;
  Subset contracted_;
  Subset kept_;
  int contracted_rank_;
};

class DirectSumOracle final : public RankOracle {
 public:
  DirectSumOracle(Matroid a, Matroid b)
      : RankOracle(a.size() + b.size(), a.known_binary() && b.known_binary()),
        a_(std::move(a)),
        b_(std::move(b)) {}

 protected:
  int compute_rank(Subset x) const override {
    const Subset low = x & a_.ground();
    const Subset high(a_.size() >= kMaxElements ? 0 : x.mask() >> a_.size());
    return a_.rank(low) + b_.rank(high);
  }

 private:
  Matroid a_;
  Matroid b_;
};

class SplitOracle final : public RankOracle {
 public:
  SplitOracle(Matroid m, Subset f)
      : RankOracle(m.size(), m.known_binary()), m_(std::move(m)), f_(f), f_rank_(m_.rank(f)) {}

 protected:
  int compute_rank(Subset x) const override {
    return m_.rank(x & f_) + m_.rank((x - f_) | f_) - f_rank_;
  }

 private:
  Matroid m_;
  Subset f_;
  int f_rank_;
};

void reject_loops(const Matroid& m, LoopPolicy policy, const char* what) {
  if (policy == LoopPolicy::kAllow) return;
  const Subset l = loops(m);
  if (!l.empty()) {
    throw LoopError(std::string(what) + " has a loop at element " + std::to_string(l.min_element()));
  }
}

}  // namespace
}  // namespace detail

Matroid::Matroid(std::shared_ptr<const detail::RankOracle> oracle)
    : oracle_(std::move(oracle)), full_rank_(oracle_->rank(Subset::range(oracle_->size()))) {}

Matroid uniform_matroid(int rank, int n, LoopPolicy loops) {
  if (n < 0 || rank < 0 || rank > n) {
    throw InputError("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(rank) +
                     " n=" + std::to_string(n));
  }
  if (rank == 0 && n > 0 && loops == LoopPolicy::kReject) {
    throw LoopError("U(0," + std::to_string(n) + ") consists of loops");
  }
  return Matroid(std::make_shared<detail::UniformOracle>(rank, n));
}

Matroid free_matroid(int n) { return uniform_matroid(n, n); }

Matroid matroid_from_rank(int n, std::function<int(Subset)> rank_fn, OracleOptions options) {
  Matroid m(std::make_shared<detail::FunctionOracle>(n, options.known_binary, std::move(rank_fn)));
  detail::reject_loops(m, options.loops, "matroid");
  return m;
}

Matroid matroid_from_independence(int n, std::function<bool(Subset)> independent,
                                  OracleOptions options) {
  Matroid m(
      std::make_shared<detail::IndependenceOracle>(n, options.known_binary, std::move(independent)));
  detail::reject_loops(m, options.loops, "matroid");
  return m;
}

Matroid dual(const Matroid& m) { return Matroid(std::make_shared<detail::DualOracle>(m)); }

Matroid restrict(const Matroid& m, Subset kept) {
  if (!kept.subset_of(m.ground())) throw InputError("restriction set outside ground set");
  return Matroid(std::make_shared<detail::RestrictionOracle>(m, kept));
}

Matroid delete_elements(const Matroid& m, Subset removed) {
  return restrict(m, m.ground() - removed);
}

Matroid contract(const Matroid& m, Subset contracted) {
  if (!contracted.subset_of(m.ground())) throw InputError("contraction set outside ground set");
  return Matroid(std::make_shared<detail::ContractionOracle>(m, contracted));
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  if (first.size() + second.size() > kMaxElements) {
    throw TooLargeError("direct sum exceeds 64 elements");
  }
  return Matroid(std::make_shared<detail::DirectSumOracle>(first, second));
}

Matroid split_at(const Matroid& m, Subset f) {
  if (!f.subset_of(m.ground())) throw InputError("split set outside ground set");
  return Matroid(std::make_shared<detail::SplitOracle>(m, f));
}

// ---- queries ----------------------------------------------------------------

Subset closure(const Matroid& m, Subset x) {
  const int r = m.rank(x);
  Subset out = x;
  for (int e : m.ground() - x) {
    if (m.rank(x.with(e)) == r) out = out.with(e);
  }
  return out;
}

bool is_flat(const Matroid& m, Subset x) {
  const int r = m.rank(x);
  for (int e : m.ground() - x) {
    if (m.rank(x.with(e)) == r) return false;
  }
  return true;
}

bool is_basis(const Matroid& m, Subset x) {
  return x.size() == m.rank() && m.is_independent(x);
}

bool is_circuit(const Matroid& m, Subset x) {
  if (x.empty() || m.is_independent(x)) return false;
  for (int e : x) {
    if (!m.is_independent(x.without(e))) return false;
  }
  return true;
}

bool is_cocircuit_of_restriction(const Matroid& m, Subset z, Subset x) {
  if (x.empty() || !x.subset_of(z)) return false;
  // z - x must be a hyperplane of M|z.
  const int rz = m.rank(z);
  const Subset rest = z - x;
  if (m.rank(rest) != rz - 1) return false;
  for (int e : x) {
    if (m.rank(rest.with(e)) != rz) return false;
  }
  return true;
}

bool is_cocircuit(const Matroid& m, Subset x) {
  return is_cocircuit_of_restriction(m, m.ground(), x);
}

namespace {

// Depth-first walk over independent sets whose elements are added in
// increasing order; each circuit C is met exactly once as (C - max C) + max C.
void collect_circuits(const Matroid& m, Subset independent, int next, std::vector<Subset>& out) {
  for (int e = next; e < m.size(); ++e) {
    const Subset grown = independent.with(e);
    if (m.is_independent(grown)) {
      collect_circuits(m, grown, e + 1, out);
      continue;
    }
    bool minimal = true;
    for (int f : independent) {
      if (!m.is_independent(grown.without(f))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(grown);
  }
}

void collect_bases(const Matroid& m, Subset independent, int next, std::vector<Subset>& out) {
  if (independent.size() == m.rank()) {
    out.push_back(independent);
    return;
  }
  const int missing = m.rank() - independent.size();
  for (int e = next; e + missing <= m.size(); ++e) {
    const Subset grown = independent.with(e);
    if (m.is_independent(grown)) collect_bases(m, grown, e + 1, out);
  }
}

}  // namespace

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  collect_circuits(m, Subset{}, 0, out);
  sort_canonical(out);
  return out;
}

std::vector<Subset> cocircuits(const Matroid& m) { return circuits(dual(m)); }

std::vector<Subset> bases(const Matroid& m) {
  std::vector<Subset> out;
  collect_bases(m, Subset{}, 0, out);
  sort_canonical(out);
  return out;
}

std::vector<Subset> flats(const Matroid& m) {
  if (m.size() > 20) throw TooLargeError("flat enumeration is limited to 20 elements");
  std::vector<Subset> out;
  for_each_subset_canonical(m.ground(), [&](Subset x) {
    if (is_flat(m, x)) out.push_back(x);
    return true;
  });
  return out;
}

Subset loops(const Matroid& m) {
  Subset out;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(Subset::singleton(e)) == 0) out = out.with(e);
  }
  return out;
}

bool has_loops(const Matroid& m) { return !loops(m).empty(); }

Subset greedy_basis(const Matroid& m, Subset within) {
  Subset basis;
  for (int e : within) {
    if (m.is_independent(basis.with(e))) basis = basis.with(e);
  }
  return basis;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

std::vector<Subset> classes_of(DisjointSets& sets, Subset members) {
  std::vector<Subset> by_root(sets.parent.size());
  for (int e : members) by_root[sets.find(e)] = by_root[sets.find(e)].with(e);
  std::vector<Subset> out;
  for (Subset s : by_root) {
    if (!s.empty()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](Subset a, Subset b) { return a.min_element() < b.min_element(); });
  return out;
}

}  // namespace

std::vector<Subset> components(const Matroid& m) {
  // Fundamental circuits with respect to one basis determine connectivity.
  DisjointSets sets(m.size());
  const Subset basis = greedy_basis(m, m.ground());
  for (int e : m.ground() - basis) {
    if (m.rank(Subset::singleton(e)) == 0) continue;
    for (int b : basis) {
      if (m.is_independent(basis.without(b).with(e))) sets.unite(e, b);
    }
  }
  return classes_of(sets, m.ground());
}

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

int girth(const Matroid& m) {
  if (m.rank() == m.size()) throw InputError("no circuit: the matroid is free");
  for (int k = 1; k <= m.size(); ++k) {
    bool found = false;
    for_each_subset_of_size(m.ground(), k, [&](Subset x) {
      found = !m.is_independent(x);
      return !found;
    });
    if (found) return k;
  }
  throw TheoremViolation("dependent ground set without a dependent subset");
}

int cogirth(const Matroid& m) {
  if (m.rank() == 0) throw InputError("no cut: the matroid has rank 0");
  return girth(dual(m));
}

std::vector<Subset> parallel_classes(const Matroid& m) {
  const Subset non_loops = m.ground() - loops(m);
  DisjointSets sets(m.size());
  for (int e : non_loops) {
    for (int f : non_loops) {
      if (f <= e) continue;
      if (m.rank(Subset{e, f}) == 1) sets.unite(e, f);
    }
  }
  return classes_of(sets, non_loops);
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.size() <= 20) {
    const Subset::Mask end = Subset::Mask{1} << a.size();
    for (Subset::Mask x = 0; x < end; ++x) {
      if (a.is_independent(Subset(x)) != b.is_independent(Subset(x))) return false;
    }
    return true;
  }
  return circuits(a) == circuits(b);
}

std::optional<std::string> check_axioms(const Matroid& m) {
  if (m.size() > 12) throw TooLargeError("axiom check is limited to 12 elements");
  const Subset::Mask end = Subset::Mask{1} << m.size();
  std::vector<char> independent(end);
  for (Subset::Mask x = 0; x < end; ++x) independent[x] = m.is_independent(Subset(x));
  if (!independent[0]) return "(I1): the empty set is dependent";
  for (Subset::Mask y = 0; y < end; ++y) {
    if (!independent[y]) continue;
    for (int e : Subset(y)) {
      if (!independent[Subset(y).without(e).mask()]) {
        return "(I2): " + to_string(Subset(y)) + " is independent but drops to a dependent set";
      }
    }
  }
  for (Subset::Mask x = 0; x < end; ++x) {
    if (!independent[x]) continue;
    for (Subset::Mask y = 0; y < end; ++y) {
      if (!independent[y] || Subset(y).size() <= Subset(x).size()) continue;
      bool augmented = false;
      for (int e : Subset(y) - Subset(x)) {
        if (independent[Subset(x).with(e).mask()]) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        return "(I3): " + to_string(Subset(x)) + " cannot be augmented from " + to_string(Subset(y));
      }
    }
  }
  return std::nullopt;
}

}  // namespace rainbow
