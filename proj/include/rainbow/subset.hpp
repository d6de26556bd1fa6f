// Subsets of a ground set {0, ..., n-1}, stored as a 64-bit membership mask.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace rainbow {

inline constexpr int kMaxElements = 64;

class Subset {
 public:
  using Mask = std::uint64_t;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}
  constexpr Subset(std::initializer_list<int> elements) {
    for (int e : elements) mask_ |= Mask{1} << e;
  }

  static Subset from_elements(const std::vector<int>& elements);
  static constexpr Subset singleton(int e) { return Subset(Mask{1} << e); }
  /// The full ground set {0, ..., n-1}.
  static constexpr Subset range(int n) {
    return Subset(n >= kMaxElements ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int e) const { return (mask_ >> e) & 1U; }
  constexpr bool subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Subset other) const { return (mask_ & other.mask_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr int min_element() const { return std::countr_zero(mask_); }
  constexpr int max_element() const { return kMaxElements - 1 - std::countl_zero(mask_); }

  constexpr Subset with(int e) const { return Subset(mask_ | (Mask{1} << e)); }
  constexpr Subset without(int e) const { return Subset(mask_ & ~(Mask{1} << e)); }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }
  constexpr Subset operator^(Subset o) const { return Subset(mask_ ^ o.mask_); }
  constexpr Subset& operator|=(Subset o) { mask_ |= o.mask_; return *this; }
  constexpr Subset& operator&=(Subset o) { mask_ &= o.mask_; return *this; }
  constexpr Subset& operator-=(Subset o) { mask_ &= ~o.mask_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  constexpr Iterator begin() const { return Iterator(mask_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> elements() const;

 private:
  Mask mask_ = 0;
};

/// Canonical order on subsets: by size, then lexicographically on the sorted
/// element lists ({0,1,4} comes before {1,2,3}).
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  const Subset::Mask lowest_difference = (a ^ b).mask() & (~(a ^ b).mask() + 1);
  return (a.mask() & lowest_difference) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

void sort_canonical(std::vector<Subset>& sets);

/// Space-separated element indices, e.g. "0 2 5". With a prefix, "e0 e2 e5".
std::string to_string(Subset s, const char* prefix = "");

/// Parses space-separated element indices; throws InputError on bad tokens or
/// indices outside [0, n).
Subset parse_subset(const std::string& text, int n);

/// Maps a subset of a minor's ground set back to the parent ground set, where
/// the minor's element k is the k-th smallest element of `kept`.
Subset expand(Subset minor_subset, Subset kept);
/// Inverse of expand: the positions (within `kept`) of the elements of s & kept.
Subset compress(Subset s, Subset kept);

/// Calls visit(X) for every size-k subset of `universe`, in canonical order.
/// Stops early when visit returns false; returns false iff it stopped early.
template <typename Visit>
bool for_each_subset_of_size(Subset universe, int k, Visit&& visit) {
  const std::vector<int> items = universe.elements();
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return true;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Subset::Mask mask = 0;
    for (int i : pick) mask |= Subset::Mask{1} << items[i];
    if (!visit(Subset(mask))) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

/// Every subset of `universe` in canonical order (size, then lexicographic).
template <typename Visit>
bool for_each_subset_canonical(Subset universe, Visit&& visit) {
  for (int k = 0; k <= universe.size(); ++k) {
    if (!for_each_subset_of_size(universe, k, visit)) return false;
  }
  return true;
}

}  // namespace rainbow
