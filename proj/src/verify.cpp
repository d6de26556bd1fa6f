#include "rainbow/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

#include "rainbow/binary.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graphic.hpp"
#include "rainbow/io.hpp"
#include "rainbow/lsbo.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

bool VerifyResult::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteSummary& s) { return s.failures == 0 && s.faults == 0; });
}

bool VerifyResult::has_fault() const {
  return std::any_of(suites.begin(), suites.end(), [](const SuiteSummary& s) { return s.faults > 0; });
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

namespace {

constexpr std::size_t kFindingsPerSuite = 5;

// Per-entry, per-suite tally.
struct Tally {
  bool applicable = false;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> faults;

  void check(bool ok, const std::string& what) {
    applicable = true;
    ++checked;
    if (!ok && failures.size() < kFindingsPerSuite) failures.push_back(what);
  }
};

using Suite = void (*)(const CatalogEntry&, std::mt19937_64&, Tally&);

bool is_simple(const Matroid& m) {
  if (has_loops(m)) return false;
  for (Subset p : parallel_classes(m)) {
    if (p.size() > 1) return false;
  }
  return true;
}

template <typename Visit>
void for_each_exact_coloring(int n, int colors, Visit&& visit) {
  for_each_partition(n, PartitionFilter{kMaxElements, colors}, [&](const Coloring& c) {
    visit(c);
    return true;
  });
}

Coloring random_surjective(int n, int colors, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, colors - 1);
  while (true) {
    std::vector<int> c(n);
    std::vector<bool> used(colors, false);
    for (int& x : c) used[x = pick(rng)] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
      return Coloring::from_colors(std::move(c));
    }
  }
}

// Exactly-r colorings: all of them up to `exhaustive_limit` elements, a seeded
// sample of `samples` above.
template <typename Visit>
void for_each_rank_coloring(const Matroid& m, int exhaustive_limit, int samples, std::mt19937_64& rng,
                            Visit&& visit) {
  if (m.rank() == 0) return;
  if (m.size() <= exhaustive_limit) {
    for_each_exact_coloring(m.size(), m.rank(), visit);
  } else {
    for (int i = 0; i < samples; ++i) visit(random_surjective(m.size(), m.rank(), rng));
  }
}

// ---- core -------------------------------------------------------------------

void suite_axioms(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  if (e.matroid.size() > 12) return;
  const auto problem = check_axioms(e.matroid);
  t.check(!problem, problem.value_or(""));
}

void suite_duality(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (m.size() > 12) return;
  t.check(same_matroid(dual(dual(m)), m), "dual(dual(M)) != M");
  const auto cocirc = cocircuits(m);
  std::vector<Subset> direct;
  for_each_subset_canonical(m.ground(), [&](Subset x) {
    if (!x.empty() && is_cocircuit(m, x)) direct.push_back(x);
    return true;
  });
  t.check(cocirc == direct, "cocircuits(M) differ from the hyperplane-complement test");
  const auto circ = circuits(m);
  if (m.size() <= 8) {
    for (Subset c : circ) {
      for (Subset d : cocirc) {
        const int meet = (c & d).size();
        t.check(meet != 1, "circuit " + to_string(c) + " meets cut " + to_string(d) + " once");
        if (e.binary) t.check(meet % 2 == 0, "odd circuit/cut intersection in a binary matroid");
      }
    }
  }
  if (!circ.empty() && m.rank() < m.size() && dual(m).rank() > 0) {
    t.check(girth(dual(m)) == cogirth(m), "girth(M*) != cogirth(M)");
  }
}

void suite_connectivity(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (m.size() > 12) return;
  const auto parts = components(m);
  Subset seen;
  bool disjoint = true;
  for (Subset p : parts) {
    disjoint = disjoint && !p.intersects(seen);
    seen |= p;
  }
  t.check(disjoint && seen == m.ground(), "components do not partition the ground set");
  // Two elements share a component iff some circuit holds both (or they are equal).
  const auto circ = circuits(m);
  for (int a = 0; a < m.size(); ++a) {
    for (int b = a + 1; b < m.size(); ++b) {
      const bool together = std::any_of(circ.begin(), circ.end(), [&](Subset c) {
        return c.contains(a) && c.contains(b);
      });
      const bool same = std::any_of(parts.begin(), parts.end(), [&](Subset p) {
        return p.contains(a) && p.contains(b);
      });
      t.check(together == same, "elements " + std::to_string(a) + ", " + std::to_string(b) +
                                    " misplaced by components()");
    }
  }
  t.check(is_connected(m) == (parts.size() <= 1), "is_connected disagrees with components");
}

// ---- binary -------------------------------------------------------------------

void suite_nullspace(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  if (e.text.rfind("binary", 0) != 0) return;
  const MatroidFile file = parse_matroid(e.text);
  t.check(circuits_nullspace(*file.binary) == circuits(e.matroid), "null-space circuits differ");
  t.check(same_matroid(file.matroid, e.matroid), "matroid file does not round-trip");
}

void suite_minor(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  if (e.matroid.size() > 12) return;
  const auto witness = find_u24_minor(e.matroid);
  t.check(witness.has_value() != e.binary, "U(2,4) minor search disagrees with the binary flag");
  if (witness) {
    t.check(is_u24_minor(e.matroid, witness->contract_set, witness->four_elements) &&
                is_flat(e.matroid, witness->contract_set),
            "invalid U(2,4) witness");
  }
}

// ---- coloring -------------------------------------------------------------------

void suite_standard(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (has_loops(m) || m.rank() == 0 || m.size() > 14) return;
  for (int first = 0; first < m.size(); ++first) {
    const int seed[] = {first};
    const StandardColoring s = standard_coloring(m, seed);
    const std::string tag = "seed " + std::to_string(first);
    t.check(s.coloring.color_count() == m.rank(), tag + ": wrong color count");
    t.check(is_standard_ordering(m, s.coloring, s.ordering), tag + ": invalid ordering");
    t.check(is_rainbow_circuit_free(m, s.coloring), tag + ": standard coloring has a rainbow circuit");
    if (m.size() <= 9) {
      t.check(lemma_equiv_report(m, s.coloring) == LemmaReport{true, true, true},
              tag + ": chain conditions fail on a standard coloring");
    }
    if (e.binary) {
      const Subset cls = s.coloring.color_class(corollary_parallel_class(m, s.coloring));
      t.check(m.rank(cls) == 1 && is_flat(m, cls), tag + ": designated class is not a parallel class");
      const Subset cut = s.coloring.color_class(corollary_cut_class(m, s.coloring));
      t.check(is_cocircuit(m, cut), tag + ": designated class is not a cut");
    }
  }
}

void suite_chain_conditions(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (m.size() > 7 || m.rank() == 0) return;
  for_each_exact_coloring(m.size(), m.rank(), [&](const Coloring& c) {
    const LemmaReport r = lemma_equiv_report(m, c);
    t.check(r.cut_chain == r.rank_chain && r.rank_chain == r.closed_chain,
            "chain conditions disagree on " + to_string(c));
    t.check(r.closed_chain == is_standard(m, c).has_value(), "is_standard disagrees on " + to_string(c));
  });
}

void suite_theorem1(const CatalogEntry& e, std::mt19937_64& rng, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.binary) return;
  for_each_rank_coloring(m, 9, 300, rng, [&](const Coloring& c) {
    t.check(certifies(m, c, theorem1_verdict(m, c)), "bad certificate for " + to_string(c));
  });
}

void suite_theorem1_dual(const CatalogEntry& e, std::mt19937_64& rng, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.binary || m.rank() == m.size() || has_loops(dual(m))) return;
  const int colors = m.size() - m.rank();
  if (m.size() <= 7) {
    for_each_exact_coloring(m.size(), colors, [&](const Coloring& c) {
      t.check(certifies(m, c, theorem1_dual_verdict(m, c)), "bad dual certificate for " + to_string(c));
    });
  } else {
    for (int i = 0; i < 100; ++i) {
      const Coloring c = random_surjective(m.size(), colors, rng);
      t.check(certifies(m, c, theorem1_dual_verdict(m, c)), "bad dual certificate for " + to_string(c));
    }
  }
}

void suite_theorem3(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (has_loops(m) || m.rank() == 0 || m.size() > 9) return;
  if (e.binary) {
    for_each_rcf_coloring(m, PartitionFilter{kMaxElements, m.rank()}, [&](const Coloring& c) {
      const auto order = is_standard(m, c);
      t.check(order && is_standard_ordering(m, c, *order), "RCF rank coloring not standard: " + to_string(c));
      return true;
    });
  } else {
    const Coloring c = nonstandard_coloring(m);
    t.check(c.color_count() == m.rank(), "non-standard coloring has the wrong color count");
    t.check(is_rainbow_circuit_free(m, c), "non-standard coloring has a rainbow circuit");
    t.check(!is_standard(m, c), "non-standard coloring is standard");
  }
}

// ---- reduction -------------------------------------------------------------------

void suite_bridge(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (m.size() > 7) return;
  for_each_partition(m.size(), PartitionFilter{}, [&](const Coloring& c) {
    const PartitionMatroid p = coloring_to_partition(c);
    t.check(is_reduction(p.matroid(), m) == is_rainbow_circuit_free(m, c),
            "reduction and RCF disagree on " + to_string(c));
    t.check(partition_to_coloring(p) == c, "partition round trip changed " + to_string(c));
    return true;
  });
}

void suite_covering(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (has_loops(m) || m.size() == 0) return;
  const auto cover = independent_partition(m);
  Subset seen;
  bool valid = true;
  for (Subset s : cover) {
    valid = valid && m.is_independent(s) && !s.intersects(seen);
    seen |= s;
  }
  t.check(valid && seen == m.ground(), "independent_partition is not a cover by independent sets");
  t.check(static_cast<int>(cover.size()) == covering_number_formula(m),
          "partition covering number differs from the formula");
}

void suite_lucas(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.binary || has_loops(m) || m.size() > 6 || m.rank() == 0) return;
  for_each_rcf_coloring(m, PartitionFilter{kMaxElements, m.rank()}, [&](const Coloring& c) {
    const Matroid n = coloring_to_partition(c).matroid();
    if (same_matroid(n, m)) return true;
    const Subset f = lucas_flat(n, m);
    const Matroid split = split_at(m, f);
    t.check(is_flat(m, f) && !f.empty() && f != m.ground() && is_rank_preserving_reduction(n, split) &&
                is_rank_preserving_reduction(split, m),
            "invalid flat " + to_string(f) + " for " + to_string(c));
    return true;
  });
}

void suite_conjecture(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (has_loops(m) || m.size() == 0 || m.size() > 9) return;
  const int k = covering_number(m);
  const auto c = conjecture_search(m, 2 * k, false);
  t.check(c.has_value(), "no RCF coloring with classes of size <= 2k");
  if (c) {
    t.check(c->max_class_size() <= 2 * k && is_rainbow_circuit_free(m, *c),
            "conjecture_search returned an invalid coloring");
    t.check(c->max_class_size() >= k, "coloring beats the covering number");
  }
}

// ---- lsbo -------------------------------------------------------------------------

void suite_lsbo(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.binary || m.size() > 7) return;
  const auto all = bases(m);
  const bool simple = is_simple(m);
  for (Subset b1 : all) {
    for (Subset b2 : all) {
      if ((b1 - b2).size() > 6) continue;
      const BasisPair pair{b1, b2};
      const auto decided = lsbo_decide(m, pair);
      const auto oracle = lsbo_oracle(m, pair);
      const std::string tag = to_string(b1) + " / " + to_string(b2);
      t.check(decided.has_value() == oracle.has_value(), "decide/oracle disagree on " + tag);
      if (decided) t.check(sbo_check(m, pair, *decided), "decided phi fails (SBO) on " + tag);
      if (const auto classes = lsbo_pair_classes(m, pair)) {
        bool one_each = true;
        for (Subset s : *classes) one_each = one_each && (s & b1).size() == 1 && (s & b2).size() == 1;
        t.check(one_each, "class without one element of each basis on " + tag);
      }
      if (simple && !b1.intersects(b2) && m.rank() > 0) {
        t.check(!decided, "simple matroid with disjoint LSBO bases " + tag);
      }
    }
  }
}

// ---- graphic ----------------------------------------------------------------------

void suite_sparsity(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  if (!e.graph || !e.graph->is_simple() || e.graph->vertex_count() < 2) return;
  const Graph& g = *e.graph;
  const SparsityReport exhaustive = sparse_23_exhaustive(g);
  const SparsityReport pebble = sparse_23_pebble_game(g);
  t.check(exhaustive.sparse == pebble.sparse, "pebble game disagrees with the exhaustive check");
  for (const auto& report : {exhaustive, pebble}) {
    if (report.violator) {
      const Subset x = *report.violator;
      t.check(x.size() >= 2 && g.induced_edges(x).size() > 2 * x.size() - 3,
              "violator " + to_string(x) + " is not dense");
    }
  }
  if (is_tight_23(g) && g.edge_count() <= kEnumerationLimit) {
    const auto trace = h0_decomposition(g);
    const auto pair = pair_coloring_exhaustive(g);
    t.check(trace.has_value() == pair.has_value(), "H0 trace and pair coloring disagree");
    if (trace) {
      t.check(replay_trace(g, *trace), "H0 trace does not replay");
      t.check(is_rainbow_circuit_free(e.matroid, trace_coloring(g, *trace)), "trace coloring not RCF");
    }
  }
}

void suite_cuts(const CatalogEntry& e, std::mt19937_64&, Tally& t) {
  if (!e.graph || e.cographic) return;
  const Graph& g = *e.graph;
  t.check(elementary_cuts(g) == cocircuits(graphic_matroid(g)), "elementary cuts differ from cocircuits");
  t.check(same_matroid(cographic_matroid(g, LoopPolicy::kAllow), dual(graphic_matroid(g))),
          "co-graphic matroid is not the dual");
}

struct SuiteInfo {
  const char* name;
  Suite run;
};

constexpr SuiteInfo kSuites[] = {
    {"core.axioms", suite_axioms},
    {"core.duality", suite_duality},
    {"core.connectivity", suite_connectivity},
    {"binary.nullspace", suite_nullspace},
    {"binary.minor", suite_minor},
    {"coloring.standard", suite_standard},
    {"coloring.chain_conditions", suite_chain_conditions},
    {"coloring.alternative", suite_theorem1},
    {"coloring.alternative_dual", suite_theorem1_dual},
    {"coloring.binary_standard", suite_theorem3},
    {"reduction.bridge", suite_bridge},
    {"reduction.covering", suite_covering},
    {"reduction.flat_split", suite_lucas},
    {"reduction.bounded_classes", suite_conjecture},
    {"lsbo.agreement", suite_lsbo},
    {"graphic.sparsity", suite_sparsity},
    {"graphic.cuts", suite_cuts},
};
constexpr std::size_t kSuiteCount = std::size(kSuites);

// The G^j_q checks do not depend on the catalog.
Tally gqj_suite() {
  Tally t;
  for (auto [q, j] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
    const std::string tag = "(q, j) = (" + std::to_string(q) + ", " + std::to_string(j) + ")";
    const Graph g = gen_gqj(q, j);
    const Matroid m = cographic_matroid(g);
    t.check(g.vertex_count() == 7 * q + j && g.edge_count() == 14 * q - 2 + 2 * j, tag + ": wrong size");
    t.check(g.is_connected() && covering_number(m) == 2, tag + ": not two disjoint spanning trees");
    const CircuitFamily family = gqj_circuit_family(q, j);
    t.check(verify_family(m, family), tag + ": family is not sparse");
    const RankBounds b = rank_bounds(m, family);
    t.check(b.upper == 6 * q + j - 1, tag + ": upper bound is not 6q + j - 1");
    t.check(b.lower == boost::rational<long long>(7 * q + j + q - 1, 2), tag + ": wrong lower bound");
  }
  return t;
}

}  // namespace

VerifyResult verify_all(const VerifyOptions& options) {
  const std::vector<CatalogEntry> catalog = build_catalog(options.max_rank, options.max_size);
  std::vector<std::array<Tally, kSuiteCount>> tallies(catalog.size());

  parallel_for(catalog.size(), options.threads, [&](std::size_t i) {
    for (std::size_t s = 0; s < kSuiteCount; ++s) {
      // Seeded per entry and suite, so thread scheduling cannot change samples.
      std::mt19937_64 rng(options.seed ^ (i * 0x9E3779B97F4A7C15ULL) ^ (s << 56));
      Tally& t = tallies[i][s];
      try {
        kSuites[s].run(catalog[i], rng, t);
      } catch (const TheoremViolation& err) {
        t.applicable = true;
        t.faults.push_back(err.what());
      } catch (const std::exception& err) {
        t.applicable = true;
        t.failures.push_back(std::string("unexpected error: ") + err.what());
      }
    }
  });

  VerifyResult result;
  result.catalog_size = catalog.size();
  for (std::size_t s = 0; s < kSuiteCount; ++s) {
    SuiteSummary summary{kSuites[s].name};
    std::size_t reported = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const Tally& t = tallies[i][s];
      if (!t.applicable) continue;
      ++summary.entries;
      summary.checked += t.checked;
      summary.failures += t.failures.size();
      summary.faults += t.faults.size();
      for (const auto* list : {&t.faults, &t.failures}) {
        for (const std::string& d : *list) {
          if (reported++ < kFindingsPerSuite) {
            result.findings.push_back({kSuites[s].name, catalog[i].name, d, list == &t.faults});
          }
        }
      }
    }
    result.suites.push_back(summary);
  }

  Tally g;
  SuiteSummary summary{"graphic.gqj_bounds"};
  try {
    g = gqj_suite();
  } catch (const TheoremViolation& err) {
    g.faults.push_back(err.what());
  }
  summary.entries = 1;
  summary.checked = g.checked;
  summary.failures = g.failures.size();
  summary.faults = g.faults.size();
  for (const std::string& d : g.failures) result.findings.push_back({summary.suite, "G(q,j)", d, false});
  for (const std::string& d : g.faults) result.findings.push_back({summary.suite, "G(q,j)", d, true});
  result.suites.push_back(summary);
  return result;
}

std::string report_lines(const VerifyResult& result, const VerifyOptions& options) {
  using nlohmann::ordered_json;
  std::string out;
  for (const SuiteSummary& s : result.suites) {
    ordered_json line{{"type", "suite"},          {"suite", s.suite},       {"entries", s.entries},
                      {"checked", s.checked},     {"failures", s.failures}, {"faults", s.faults}};
    out += line.dump() + "\n";
  }
  for (const VerifyFinding& f : result.findings) {
    ordered_json line{{"type", f.fault ? "fault" : "failure"},
                      {"suite", f.suite},
                      {"entry", f.entry},
                      {"detail", f.detail}};
    out += line.dump() + "\n";
  }
  ordered_json summary{{"type", "summary"},
                       {"catalog", result.catalog_size},
                       {"max_rank", options.max_rank},
                       {"max_size", options.max_size},
                       {"seed", options.seed},
                       {"ok", result.ok()}};
  out += summary.dump() + "\n";
  return out;
}

}  // namespace rainbow
