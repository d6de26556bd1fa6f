// Locally strongly base orderable basis pairs: a bijection phi: B1 -> B2 with
// (B1 - X) + phi(X) a basis for every X inside B1.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/matroid.hpp"

namespace rainbow {

struct BasisPair {
  Subset first;
  Subset second;
};

/// Pairs (x, phi(x)) sorted by x; the identity on B1 & B2.
struct ExchangeBijection {
  std::vector<std::pair<int, int>> pairs;

  int image(int x) const;
  Subset image(Subset x) const;
  bool operator==(const ExchangeBijection&) const = default;
};

/// One `x -> y` line per pair.
std::string to_string(const ExchangeBijection& phi);

/// Throws InputError unless phi maps B1 onto B2 and fixes B1 & B2.
bool sbo_check(const Matroid& m, const BasisPair& pair, const ExchangeBijection& phi);

/// Classes {x, y} with x in B1 - B2 and y in B2 - B1, in an order that is
/// standard for M|(B1 + B2) / (B1 & B2), or nullopt. Canonical backtracking.
std::optional<std::vector<Subset>> lsbo_pair_classes(const Matroid& m, const BasisPair& pair);

/// Requires binary m and two bases. Built from lsbo_pair_classes.
std::optional<ExchangeBijection> lsbo_decide(const Matroid& m, const BasisPair& pair);

inline constexpr int kLsboOracleLimit = 8;
/// Tries every bijection in lexicographic order of the images; |B1 - B2| <= 8.
std::optional<ExchangeBijection> lsbo_oracle(const Matroid& m, const BasisPair& pair);

}  // namespace rainbow
