#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graphic.hpp"
#include "rainbow/lsbo.hpp"

using namespace rainbow;
using oracle::Mask;

namespace {

ExchangeBijection bijection(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  return ExchangeBijection{pairs};
}

}  // namespace

TEST_CASE("exchange property examples") {
  const Matroid k4 = graphic_matroid(complete_graph(4));
  const BasisPair same{Subset{0, 1, 2}, Subset{0, 1, 2}};
  CHECK(sbo_check(k4, same, bijection({{0, 0}, {1, 1}, {2, 2}})));

  const Matroid two = graphic_matroid(doubled(complete_graph(2)));
  CHECK(sbo_check(two, BasisPair{Subset{0}, Subset{1}}, bijection({{0, 1}})));

  // Trees {12, 23, 34} and {13, 24, 14}.
  const BasisPair trees{Subset{0, 3, 5}, Subset{1, 2, 4}};
  std::vector<int> images{1, 2, 4};
  int tried = 0;
  do {
    CHECK_FALSE(sbo_check(k4, trees, bijection({{0, images[0]}, {3, images[1]}, {5, images[2]}})));
    ++tried;
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(tried == 6);

  CHECK_THROWS_AS(sbo_check(k4, trees, bijection({{0, 1}, {3, 1}, {5, 2}})), InputError);
  CHECK_THROWS_AS(sbo_check(k4, trees, bijection({{0, 1}, {3, 2}})), InputError);
  CHECK_THROWS_AS(sbo_check(k4, same, bijection({{0, 1}, {1, 0}, {2, 2}})), InputError);
}

TEST_CASE("exchange decision examples") {
  const Matroid k4 = graphic_matroid(complete_graph(4));
  const BasisPair trees{Subset{0, 3, 5}, Subset{1, 2, 4}};
  CHECK_FALSE(lsbo_decide(k4, trees));
  CHECK_FALSE(lsbo_oracle(k4, trees));

  // Doubled triangle: copies 2i and 2i+1 of each edge are parallel.
  const Matroid dk3 = graphic_matroid(doubled(complete_graph(3)));
  const BasisPair parallel{Subset{0, 2}, Subset{1, 3}};
  const auto phi = lsbo_decide(dk3, parallel);
  REQUIRE(phi);
  CHECK(*phi == bijection({{0, 1}, {2, 3}}));
  CHECK(sbo_check(dk3, parallel, *phi));
  CHECK(to_string(*phi) == "0 -> 1\n2 -> 3\n");
  CHECK(lsbo_oracle(dk3, parallel).has_value());
  const auto classes = lsbo_pair_classes(dk3, parallel);
  REQUIRE(classes);
  CHECK(*classes == std::vector<Subset>{Subset{0, 1}, Subset{2, 3}});

  const BasisPair same{Subset{0, 1, 2}, Subset{0, 1, 2}};
  const auto id = lsbo_decide(k4, same);
  REQUIRE(id);
  CHECK(*id == bijection({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(lsbo_oracle(k4, same).has_value());

  CHECK_THROWS_AS(lsbo_decide(uniform_matroid(2, 4), BasisPair{Subset{0, 1}, Subset{2, 3}}), InputError);
  CHECK_THROWS_AS(lsbo_decide(k4, BasisPair{Subset{0, 1, 3}, Subset{1, 2, 4}}), InputError);
  CHECK_THROWS_AS(lsbo_decide(k4, BasisPair{Subset{0, 3}, Subset{1, 2}}), InputError);
}

TEST_CASE("exchange decision agrees with brute force on every basis pair") {
  int pairs = 0, positive = 0;
  for (const CatalogEntry& e : build_catalog(3, 6)) {
    const Matroid& m = e.matroid;
    if (!e.binary || m.size() > 8) continue;
    const oracle::Table t(m);
    const auto par = parallel_classes(m);
    const bool simple = std::all_of(par.begin(), par.end(), [](Subset c) { return c.size() == 1; });
    const auto all = bases(m);
    for (Subset b1 : all) {
      for (Subset b2 : all) {
        if ((b1 - b2).size() > 6) continue;
        const BasisPair pair{b1, b2};
        const auto phi = lsbo_decide(m, pair);
        CHECK_MESSAGE(phi.has_value() == oracle::exchangeable(t, b1.mask(), b2.mask()), e.name, " ",
                      to_string(b1), " / ", to_string(b2));
        if (phi) {
          CHECK(sbo_check(m, pair, *phi));
          ++positive;
          const auto cls = lsbo_pair_classes(m, pair);
          REQUIRE(cls);
          for (Subset c : *cls) {
            CHECK((c & b1).size() == 1);
            CHECK((c & b2).size() == 1);
          }
        }
        if (simple && !b1.intersects(b2) && m.rank() > 0) CHECK_FALSE(phi);
        ++pairs;
      }
    }
  }
  CHECK(pairs > 10000);
  CHECK(positive > 0);
}

TEST_CASE("bases sharing elements") {
  const Matroid dk3 = graphic_matroid(doubled(complete_graph(3)));
  const BasisPair pair{Subset{0, 2}, Subset{1, 2}};
  const auto phi = lsbo_decide(dk3, pair);
  REQUIRE(phi);
  CHECK(*phi == bijection({{0, 1}, {2, 2}}));
  CHECK(phi->image(Subset{0, 2}) == Subset{1, 2});
}

TEST_CASE("oracle size guard") {
  std::vector<Edge> path;
  for (int v = 0; v + 1 < 10; ++v) path.push_back({v, v + 1});
  const Matroid m = graphic_matroid(doubled(Graph(10, path)));  // rank 9
  Subset even, odd;
  for (int i = 0; i < 18; ++i) (i % 2 ? odd : even) |= Subset::singleton(i);
  CHECK_THROWS_AS(lsbo_oracle(m, BasisPair{even, odd}), TooLargeError);
  CHECK(lsbo_decide(m, BasisPair{even, odd}).has_value());
}
