#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/binary.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graphic.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matroid.hpp"

using namespace rainbow;

namespace {

// Random loopless GF(2) matrix.
BinaryMatroid random_binary(std::mt19937_64& rng, int rows, int n) {
  std::vector<std::uint64_t> cols(n);
  for (auto& c : cols) {
    do {
      c = rng() & ((std::uint64_t{1} << rows) - 1);
    } while (c == 0);
  }
  return BinaryMatroid::from_columns(rows, cols);
}

void check_witness(const Matroid& m, const U24Witness& w) {
  REQUIRE(w.four_elements.size() == 4);
  CHECK_FALSE(w.contract_set.intersects(w.four_elements));
  CHECK(is_flat(m, w.contract_set));
  const int rf = m.rank(w.contract_set);
  // Rank of every subset of T in M/F: min(|X|, 2).
  for_each_subset_canonical(w.four_elements, [&](Subset x) {
    CHECK(m.rank(x | w.contract_set) - rf == std::min(x.size(), 2));
    return true;
  });
}

}  // namespace

TEST_CASE("matrix examples") {
  const BinaryMatroid b = BinaryMatroid::from_rows({"1011", "0110"});
  CHECK(b.matroid().rank() == 2);
  CHECK(parallel_classes(b.matroid()) == std::vector<Subset>{Subset{0, 3}, Subset{1}, Subset{2}});

  const BinaryMatroid fano = fano_matroid();
  CHECK(fano.matroid().rank() == 3);
  int independent_triples = 0;
  for_each_subset_of_size(fano.matroid().ground(), 3, [&](Subset t) {
    std::vector<std::uint64_t> v;
    for (int e : t) v.push_back(fano.columns()[e]);
    CHECK(fano.matroid().rank(t) == oracle::gf2_rank(v));
    independent_triples += fano.matroid().is_independent(t);
    return true;
  });
  CHECK(independent_triples == 35 - 7);

  const BinaryMatroid id = BinaryMatroid::from_rows({"100", "010", "001"});
  CHECK(circuits(id.matroid()).empty());
  CHECK(circuits_nullspace(id).empty());
  CHECK(circuits_nullspace(BinaryMatroid::from_rows({"101", "011"})) == std::vector<Subset>{Subset{0, 1, 2}});
  CHECK_THROWS_AS(BinaryMatroid::from_rows({"10", "00"}), LoopError);
  CHECK_THROWS_AS(BinaryMatroid::from_rows({"10", "1"}), InputError);
  CHECK_THROWS_AS(BinaryMatroid::from_rows({"12"}), InputError);
}

TEST_CASE("row strings round trip") {
  const BinaryMatroid b = BinaryMatroid::from_rows({"1011", "0110"});
  CHECK(b.row_strings() == std::vector<std::string>{"1011", "0110"});
}

TEST_CASE("null-space circuits agree with oracle circuits on the catalog") {
  for (const CatalogEntry& e : matrix_catalog(4, 7)) {
    const MatroidFile file = parse_matroid(e.text);
    REQUIRE(file.binary);
    CHECK_MESSAGE(circuits_nullspace(*file.binary) == circuits(e.matroid), e.name);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 10);
    const BinaryMatroid b = random_binary(rng, rows, n);
    CHECK(circuits_nullspace(b) == circuits(b.matroid()));
    if (n <= 8) CHECK(oracle::masks(circuits_nullspace(b)) == oracle::Table(b.matroid()).circuits());
  }
  CHECK(circuits_nullspace(fano_matroid()).size() == 14);
}

TEST_CASE("binarity examples") {
  CHECK_FALSE(is_binary(uniform_matroid(2, 4)));
  CHECK(is_binary(fano_matroid().matroid()));
  CHECK(is_binary(graphic_matroid(complete_graph(4))));

  const auto w24 = find_u24_minor(uniform_matroid(2, 4));
  REQUIRE(w24);
  CHECK(w24->contract_set.empty());
  CHECK(w24->four_elements == Subset{0, 1, 2, 3});

  const Matroid u25 = uniform_matroid(2, 5);
  const auto w25 = find_u24_minor(u25);
  REQUIRE(w25);
  CHECK(w25->contract_set.empty());
  check_witness(u25, *w25);

  const Matroid sum = direct_sum(uniform_matroid(2, 4), uniform_matroid(1, 1));
  const auto ws = find_u24_minor(sum);
  REQUIRE(ws);
  CHECK(ws->four_elements == Subset{0, 1, 2, 3});
  check_witness(sum, *ws);

  CHECK_THROWS_AS(is_binary(uniform_matroid(2, 15)), TooLargeError);
}

TEST_CASE("random binary matrices test binary, and so do their duals") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 3);
    const int n = rows + static_cast<int>(rng() % 5);
    const BinaryMatroid b = random_binary(rng, rows, n);
    CHECK(is_binary(b.matroid()));
    const Matroid d = dual(b.matroid());
    if (!has_loops(d)) CHECK(is_binary(d));
  }
}

TEST_CASE("non-binary catalog entries carry a valid witness") {
  for (const CatalogEntry& e : fixture_catalog()) {
    CAPTURE(e.name);
    const auto w = find_u24_minor(e.matroid);
    CHECK(e.binary == !w.has_value());
    if (w) {
      check_witness(e.matroid, *w);
      CHECK(is_u24_minor(e.matroid, w->contract_set, w->four_elements));
    }
  }
  // Uniform matroids U(r, n) are binary iff r <= 1, r >= n - 1 or n <= 3.
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      const bool expected = r <= 1 || r >= n - 1;
      CHECK_MESSAGE(is_binary(uniform_matroid(r, n)) == expected, r, " ", n);
    }
  }
}

TEST_CASE("require_binary") {
  CHECK_NOTHROW(require_binary(fano_matroid().matroid(), "test"));
  CHECK_THROWS_AS(require_binary(uniform_matroid(2, 4), "test"), InputError);
  // Not flagged binary, but binary: accepted after the search.
  const Matroid u23 = matroid_from_rank(3, [](Subset x) { return std::min(2, x.size()); });
  CHECK_FALSE(u23.known_binary());
  CHECK_NOTHROW(require_binary(u23, "test"));
}

TEST_CASE("catalog contents") {
  const auto small = build_catalog(2, 3);
  auto has = [&](const Matroid& m) {
    return std::any_of(small.begin(), small.end(), [&](const CatalogEntry& e) { return same_matroid(e.matroid, m); });
  };
  CHECK(has(uniform_matroid(2, 3)));
  CHECK(has(free_matroid(2)));
  CHECK_FALSE(has(free_matroid(3)));  // rank cap
  CHECK(has(graphic_matroid(doubled(Graph(2, {{0, 1}})))));
  const auto all = build_catalog(3, 6);
  const auto fano = std::find_if(all.begin(), all.end(), [](const CatalogEntry& e) { return e.name == "fano"; });
  REQUIRE(fano != all.end());
  CHECK(fano->binary);
  const auto u24 = std::find_if(all.begin(), all.end(), [](const CatalogEntry& e) { return e.name == "U(2,4)"; });
  REQUIRE(u24 != all.end());
  CHECK_FALSE(u24->binary);
  for (const CatalogEntry& e : all) CHECK_MESSAGE(!has_loops(e.matroid), e.name);
}
