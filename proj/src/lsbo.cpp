#include "rainbow/lsbo.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "rainbow/binary.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

int ExchangeBijection::image(int x) const {
  for (const auto& [from, to] : pairs) {
    if (from == x) return to;
  }
  throw InputError("element " + std::to_string(x) + " is outside the bijection's domain");
}

Subset ExchangeBijection::image(Subset x) const {
  Subset out;
  for (int e : x) out = out.with(image(e));
  return out;
}

std::string to_string(const ExchangeBijection& phi) {
  std::string out;
  for (const auto& [from, to] : phi.pairs) {
    out += std::to_string(from) + " -> " + std::to_string(to) + "\n";
  }
  return out;
}

namespace {

void require_bases(const Matroid& m, const BasisPair& pair) {
  if (!pair.first.subset_of(m.ground()) || !is_basis(m, pair.first)) {
    throw InputError("B1 = " + to_string(pair.first) + " is not a basis");
  }
  if (!pair.second.subset_of(m.ground()) || !is_basis(m, pair.second)) {
    throw InputError("B2 = " + to_string(pair.second) + " is not a basis");
  }
}

}  // namespace

bool sbo_check(const Matroid& m, const BasisPair& pair, const ExchangeBijection& phi) {
  const Subset b1 = pair.first;
  const Subset b2 = pair.second;
  Subset domain;
  Subset range;
  for (const auto& [from, to] : phi.pairs) {
    if (domain.contains(from) || range.contains(to)) throw InputError("phi is not a bijection");
    domain = domain.with(from);
    range = range.with(to);
    if (b2.contains(from) && from != to) throw InputError("phi must fix B1 & B2");
  }
  if (domain != b1 || range != b2) throw InputError("phi does not map B1 onto B2");

  const Subset moving = b1 - b2;
  if (moving.size() > 24) throw TooLargeError("sbo_check is limited to |B1 - B2| <= 24");
  const Subset::Mask end = Subset::Mask{1} << moving.size();
  for (Subset::Mask bits = 0; bits < end; ++bits) {
    const Subset x = expand(Subset(bits), moving);
    if (!is_basis(m, (b1 - x) | phi.image(x))) return false;
  }
  return true;
}

std::optional<std::vector<Subset>> lsbo_pair_classes(const Matroid& m, const BasisPair& pair) {
  const Subset b1 = pair.first - pair.second;
  const Subset b2 = pair.second - pair.first;
  const Subset shared = pair.first & pair.second;
  const Subset universe = b1 | b2;
  std::unordered_set<Subset::Mask> dead;
  std::vector<Subset> classes;

  // `done` is the contracted set: the intersection plus the classes so far.
  std::function<bool(Subset)> extend = [&](Subset done) {
    const Subset rest = universe - done;
    if (rest.empty()) return true;
    if (dead.contains(done.mask())) return false;
    const int base_rank = m.rank(done);
    for (int x : rest & b1) {
      const int with_x = m.rank(done.with(x));
      if (with_x == base_rank) break;  // x is a loop of the contraction
      Subset parallel;
      for (int y : rest) {
        if (m.rank(done.with(x).with(y)) == with_x) parallel = parallel.with(y);
      }
      if (parallel.size() != 2 || (parallel & b2).size() != 1) continue;
      classes.push_back(parallel);
      if (extend(done | parallel)) return true;
      classes.pop_back();
    }
    dead.insert(done.mask());
    return false;
  };

  if (!extend(shared)) return std::nullopt;
  return classes;
}

std::optional<ExchangeBijection> lsbo_decide(const Matroid& m, const BasisPair& pair) {
  require_binary(m, "lsbo_decide");
  require_bases(m, pair);
  const auto classes = lsbo_pair_classes(m, pair);
  if (!classes) return std::nullopt;
  ExchangeBijection phi;
  for (int x : pair.first & pair.second) phi.pairs.emplace_back(x, x);
  for (Subset cls : *classes) {
    phi.pairs.emplace_back((cls & pair.first).min_element(), (cls & pair.second).min_element());
  }
  std::sort(phi.pairs.begin(), phi.pairs.end());
  return phi;
}

std::optional<ExchangeBijection> lsbo_oracle(const Matroid& m, const BasisPair& pair) {
  require_bases(m, pair);
  const std::vector<int> from = (pair.first - pair.second).elements();
  std::vector<int> to = (pair.second - pair.first).elements();
  if (static_cast<int>(from.size()) > kLsboOracleLimit) {
    throw TooLargeError("lsbo_oracle is limited to |B1 - B2| <= " +
                        std::to_string(kLsboOracleLimit));
  }
  do {
    ExchangeBijection phi;
    for (int x : pair.first & pair.second) phi.pairs.emplace_back(x, x);
    for (std::size_t i = 0; i < from.size(); ++i) phi.pairs.emplace_back(from[i], to[i]);
    std::sort(phi.pairs.begin(), phi.pairs.end());
    if (sbo_check(m, pair, phi)) return phi;
  } while (std::next_permutation(to.begin(), to.end()));
  return std::nullopt;
}

}  // namespace rainbow
