// rainbow: command-line front end.
// Exit codes: 0 property holds, 1 refuted, 2 bad input, 3 theorem violation.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/binary.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graphic.hpp"
#include "rainbow/io.hpp"
#include "rainbow/lsbo.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

enum Exit { kHolds = 0, kRefuted = 1, kBadInput = 2, kFault = 3 };

struct Run {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::vector<std::string> lines;
  bool cograph = false;

  void say(const std::string& line) { lines.push_back(line); }

  std::string load(const std::string& path) {
    inputs.push_back(path);
    return read_text_file(path);
  }
  MatroidFile matroid(const std::string& path) { return parse_matroid(load(path), cograph); }
  Graph graph(const std::string& path) { return parse_graph(load(path)); }
};

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> parse_seed_list(const std::string& text, int n) {
  parse_subset(text, n);  // range and syntax check
  std::vector<int> out;
  std::istringstream in(text);
  for (int e; in >> e;) out.push_back(e);
  return out;
}

std::string elements(Subset s) { return to_string(s, "e"); }

std::string verdict_line(const CircuitCutVerdict& v) {
  if (const auto* rc = std::get_if<RainbowCircuit>(&v)) return "RAINBOW-CIRCUIT: " + elements(rc->circuit);
  const auto& mc = std::get<MonochromaticCut>(v);
  return "MONO-CUT: class " + std::to_string(mc.color) + " = " + elements(mc.cut);
}

std::string verdict_line(const CutCircuitVerdict& v) {
  if (const auto* rc = std::get_if<RainbowCut>(&v)) return "RAINBOW-CUT: " + elements(rc->cut);
  const auto& mc = std::get<MonochromaticCircuit>(v);
  return "MONO-CIRCUIT: class " + std::to_string(mc.color) + " = " + elements(mc.circuit);
}

std::string order_line(const StandardOrdering& o) {
  std::string out = "STANDARD-ORDER:";
  for (int c : o.order) out += " " + std::to_string(c);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow circuit-free colorings of matroids"};
  app.require_subcommand(1);
  app.fallthrough();

  Run run;
  std::string report_path;
  app.add_option("--report", report_path, "Write a JSON-lines run report to FILE");
  app.add_flag("--cograph", run.cograph, "Read graph files as co-graphic matroids");

  std::function<int()> action;
  std::string matroid_path, coloring_path, set_text, seeds_text, family_path, b1_text, b2_text;
  std::string out_path, family_out;
  int bound = 0, g = 0, q = 1, j = 1;
  int max_rank = 3, max_size = 6, threads = 1;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool rank_preserving = false, dual_form = false, oracle = false, exhaustive = false;

  auto with_matroid = [&](CLI::App* sub) {
    sub->add_option("matroid", matroid_path, "Matroid file")->required();
  };

  auto* rank_cmd = app.add_subcommand("rank", "Rank of the matroid or of a subset");
  with_matroid(rank_cmd);
  rank_cmd->add_option("--set", set_text, "Space-separated elements");
  rank_cmd->callback([&] {
    action = [&] {
      const MatroidFile f = run.matroid(matroid_path);
      const Subset x = set_text.empty() ? f.matroid.ground() : parse_subset(set_text, f.matroid.size());
      run.say(std::to_string(f.matroid.rank(x)));
      return kHolds;
    };
  });

  auto* circuits_cmd = app.add_subcommand("circuits", "All circuits, canonical order");
  with_matroid(circuits_cmd);
  circuits_cmd->callback([&] {
    action = [&] {
      for (Subset c : circuits(run.matroid(matroid_path).matroid)) run.say(to_string(c));
      return kHolds;
    };
  });

  auto* cocircuits_cmd = app.add_subcommand("cocircuits", "All cuts, canonical order");
  with_matroid(cocircuits_cmd);
  cocircuits_cmd->callback([&] {
    action = [&] {
      for (Subset c : cocircuits(run.matroid(matroid_path).matroid)) run.say(to_string(c));
      return kHolds;
    };
  });

  auto* binary_cmd = app.add_subcommand("is-binary", "Search for a U(2,4) minor");
  with_matroid(binary_cmd);
  binary_cmd->callback([&] {
    action = [&] {
      const auto w = find_u24_minor(run.matroid(matroid_path).matroid);
      if (!w) {
        run.say("BINARY");
        return kHolds;
      }
      run.say("U24-MINOR: contract = " + to_string(w->contract_set) + " ; elements = " +
              to_string(w->four_elements));
      return kRefuted;
    };
  });

  auto* standard_cmd = app.add_subcommand("standard-color", "Build a standard coloring");
  with_matroid(standard_cmd);
  standard_cmd->add_option("--seeds", seeds_text, "Seed elements, in order");
  standard_cmd->callback([&] {
    action = [&] {
      const MatroidFile f = run.matroid(matroid_path);
      const std::vector<int> seeds =
          seeds_text.empty() ? std::vector<int>{} : parse_seed_list(seeds_text, f.matroid.size());
      const StandardColoring s = standard_coloring(f.matroid, seeds);
      run.say(to_string(s.coloring));
      run.say(order_line(s.ordering));
      return kHolds;
    };
  });

  auto* check_cmd = app.add_subcommand("check-coloring", "Rainbow circuit-freeness and standardness");
  with_matroid(check_cmd);
  check_cmd->add_option("coloring", coloring_path, "Coloring file")->required();
  check_cmd->callback([&] {
    action = [&] {
      const MatroidFile f = run.matroid(matroid_path);
      const Coloring c = parse_coloring(run.load(coloring_path));
      if (c.size() != f.matroid.size()) throw InputError("coloring and matroid sizes differ");
      if (const auto rc = find_rainbow_circuit(f.matroid, c)) {
        run.say("RAINBOW-CIRCUIT: " + elements(*rc));
        return kRefuted;
      }
      run.say("RCF");
      if (c.color_count() == f.matroid.rank()) {
        const auto order = is_standard(f.matroid, c);
        run.say(order ? order_line(*order) : "NOT-STANDARD");
      }
      return kHolds;
    };
  });

  auto* verdict_cmd = app.add_subcommand("verdict", "Rainbow circuit or monochromatic cut");
  with_matroid(verdict_cmd);
  verdict_cmd->add_option("coloring", coloring_path, "Coloring file")->required();
  verdict_cmd->add_flag("--dual", dual_form, "Rainbow cut or monochromatic circuit (n - r colors)");
  verdict_cmd->callback([&] {
    action = [&] {
      const MatroidFile f = run.matroid(matroid_path);
      const Coloring c = parse_coloring(run.load(coloring_path));
      if (dual_form) {
        run.say(verdict_line(theorem1_dual_verdict(f.matroid, c)));
      } else {
        run.say(verdict_line(theorem1_verdict(f.matroid, c)));
      }
      return kHolds;
    };
  });

  auto* covering_cmd = app.add_subcommand("covering-number", "Minimum number of covering independent sets");
  with_matroid(covering_cmd);
  covering_cmd->callback([&] {
    action = [&] {
      run.say(std::to_string(covering_number(run.matroid(matroid_path).matroid)));
      return kHolds;
    };
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "RCF coloring with bounded class size");
  with_matroid(reduce_cmd);
  reduce_cmd->add_option("--max-class", bound, "Largest allowed class")->required();
  reduce_cmd->add_flag("--rank-preserving", rank_preserving, "Use exactly rank-many colors");
  reduce_cmd->callback([&] {
    action = [&] {
      const auto c = conjecture_search(run.matroid(matroid_path).matroid, bound, rank_preserving);
      if (!c) {
        run.say("NONE");
        return kRefuted;
      }
      run.say(to_string(*c));
      return kHolds;
    };
  });

  auto* bounds_cmd = app.add_subcommand("rank-bounds", "Color-count bounds from a sparse circuit family");
  with_matroid(bounds_cmd);
  bounds_cmd->add_option("--family", family_path, "Circuit family file")->required();
  bounds_cmd->add_option("--g", g, "Sparsity parameter")->required();
  bounds_cmd->callback([&] {
    action = [&] {
      const MatroidFile f = run.matroid(matroid_path);
      const CircuitFamily family = parse_family(run.load(family_path), f.matroid.size(), g);
      if (!verify_family(f.matroid, family)) {
        run.say("FAMILY-NOT-SPARSE");
        return kRefuted;
      }
      const RankBounds b = rank_bounds(f.matroid, family);
      run.say("lower " + to_string(b.lower));
      run.say("upper " + std::to_string(b.upper));
      return kHolds;
    };
  });

  auto* lsbo_cmd = app.add_subcommand("lsbo", "Exchange bijection between two bases");
  with_matroid(lsbo_cmd);
  lsbo_cmd->add_option("--b1", b1_text, "First basis")->required();
  lsbo_cmd->add_option("--b2", b2_text, "Second basis")->required();
  lsbo_cmd->add_flag("--oracle", oracle, "Brute force over all bijections");
  lsbo_cmd->callback([&] {
    action = [&] {
      const MatroidFile f = run.matroid(matroid_path);
      const BasisPair pair{parse_subset(b1_text, f.matroid.size()), parse_subset(b2_text, f.matroid.size())};
      const auto phi = oracle ? lsbo_oracle(f.matroid, pair) : lsbo_decide(f.matroid, pair);
      if (!phi) {
        run.say("NONE");
        return kRefuted;
      }
      for (const auto& [x, y] : phi->pairs) run.say(std::to_string(x) + " -> " + std::to_string(y));
      return kHolds;
    };
  });

  std::string graph_path;
  auto with_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph file")->required(); };

  auto* sparse_cmd = app.add_subcommand("sparse", "(2,3)-sparsity");
  with_graph(sparse_cmd);
  sparse_cmd->callback([&] {
    action = [&] {
      const SparsityReport r = is_sparse_23(run.graph(graph_path));
      if (r.sparse) {
        run.say("SPARSE");
        return kHolds;
      }
      run.say("X = " + to_string(*r.violator));
      return kRefuted;
    };
  });

  auto* tight_cmd = app.add_subcommand("tight", "(2,3)-tightness");
  with_graph(tight_cmd);
  tight_cmd->callback([&] {
    action = [&] {
      const Graph gr = run.graph(graph_path);
      const SparsityReport r = is_sparse_23(gr);
      if (!r.sparse) {
        run.say("X = " + to_string(*r.violator));
        return kRefuted;
      }
      if (gr.edge_count() != 2 * gr.vertex_count() - 3) {
        run.say("SPARSE, |E| = " + std::to_string(gr.edge_count()) + " < 2|V| - 3");
        return kRefuted;
      }
      run.say("TIGHT");
      return kHolds;
    };
  });

  auto* henneberg_cmd = app.add_subcommand("henneberg", "H0 construction sequence");
  with_graph(henneberg_cmd);
  henneberg_cmd->callback([&] {
    action = [&] {
      const Graph gr = run.graph(graph_path);
      const auto trace = h0_decomposition(gr);
      if (!trace) {
        run.say("NONE");
        return kRefuted;
      }
      const Edge& base = gr.edge(trace->base_edge);
      run.say("BASE: edge " + std::to_string(trace->base_edge) + " (" + std::to_string(base.u) + " " +
              std::to_string(base.v) + ")");
      for (const HennebergStep& s : trace->steps) {
        run.say("ADD: vertex " + std::to_string(s.vertex) + " edges " + std::to_string(s.first_edge) + " " +
                std::to_string(s.second_edge));
      }
      return kHolds;
    };
  });

  auto* pair_cmd = app.add_subcommand("pair-color", "RCF coloring with classes of size <= 2");
  with_graph(pair_cmd);
  pair_cmd->add_flag("--exhaustive", exhaustive, "Skip the H0 shortcut");
  pair_cmd->callback([&] {
    action = [&] {
      const Graph gr = run.graph(graph_path);
      const auto c = exhaustive ? pair_coloring_exhaustive(gr) : pair_coloring(gr);
      if (!c) {
        run.say("NONE");
        return kRefuted;
      }
      run.say(to_string(*c));
      return kHolds;
    };
  });

  auto* gen_cmd = app.add_subcommand("gen", "Generate fixtures");
  std::string family_name;
  gen_cmd->add_option("family", family_name, "Only 'gqj' is available")->required();
  gen_cmd->add_option("--q", q, "Number of K(3,4) copies");
  gen_cmd->add_option("--j", j, "Number of attached vertices");
  gen_cmd->add_option("-o,--output", out_path, "Graph file to write");
  gen_cmd->add_option("--family-output", family_out, "Circuit family file to write");
  gen_cmd->callback([&] {
    action = [&] {
      if (family_name != "gqj") throw InputError("unknown generator '" + family_name + "'");
      const std::string text = format_graph(gen_gqj(q, j));
      if (out_path.empty()) {
        std::string line;
        for (char ch : text) {
          if (ch == '\n') {
            run.say(line);
            line.clear();
          } else {
            line += ch;
          }
        }
      } else {
        write_text_file(out_path, text);
      }
      if (!family_out.empty()) write_text_file(family_out, to_string(gqj_circuit_family(q, j)));
      return kHolds;
    };
  });

  auto* catalog_cmd = app.add_subcommand("catalog", "Print the test corpus");
  catalog_cmd->add_option("--max-rank", max_rank, "Largest matrix rank (<= 4)");
  catalog_cmd->add_option("--max-size", max_size, "Largest ground set (<= 7)");
  catalog_cmd->callback([&] {
    action = [&] {
      for (const CatalogEntry& e : build_catalog(max_rank, max_size)) {
        if (e.text.empty()) continue;
        run.say("# " + e.name + (e.binary ? "" : " (non-binary)"));
        std::string line;
        for (char ch : e.text) {
          if (ch == '\n') {
            run.say(line);
            line.clear();
          } else {
            line += ch;
          }
        }
        run.say("");
      }
      return kHolds;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify-all", "Run every invariant suite over the catalog");
  verify_cmd->add_option("--max-rank", max_rank, "Largest matrix rank (<= 4)");
  verify_cmd->add_option("--max-size", max_size, "Largest ground set (<= 7)");
  verify_cmd->add_option("--threads", threads, "Worker threads");
  verify_cmd->add_option("--seed", seed, "Seed for sampled suites");

  VerifyResult verify_result;
  VerifyOptions verify_options;
  bool verified = false;
  verify_cmd->callback([&] {
    action = [&] {
      verify_options = VerifyOptions{max_rank, max_size, threads, seed};
      verify_result = verify_all(verify_options);
      verified = true;
      for (const SuiteSummary& s : verify_result.suites) {
        run.say(s.suite + ": " + std::to_string(s.checked) + " checks over " + std::to_string(s.entries) +
                " entries, " + std::to_string(s.failures) + " failures, " + std::to_string(s.faults) +
                " faults");
      }
      for (const VerifyFinding& f : verify_result.findings) {
        run.say(std::string(f.fault ? "FAULT " : "FAIL ") + f.suite + " [" + f.entry + "] " + f.detail);
      }
      run.say(verify_result.ok() ? "ALL PASSED" : "FAILED");
      if (verify_result.has_fault()) return kFault;
      return verify_result.ok() ? kHolds : kRefuted;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kBadInput;
  }
  for (CLI::App* sub : app.get_subcommands()) run.subcommand = sub->get_name();

  int code = kHolds;
  std::string error;
  try {
    code = action();
  } catch (const TheoremViolation& e) {
    error = std::string("theorem violation: ") + e.what();
    code = kFault;
  } catch (const InputError& e) {
    error = std::string("error: ") + e.what();
    code = kBadInput;
  }
  for (const std::string& line : run.lines) std::cout << line << "\n";
  if (!error.empty()) std::cerr << error << "\n";

  if (!report_path.empty()) {
    try {
      std::string report;
      if (verified) {
        report = report_lines(verify_result, verify_options);
      } else {
        nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
        for (const std::string& path : run.inputs) {
          inputs.push_back({{"path", path}, {"fnv1a", fnv1a(read_text_file(path))}});
        }
        nlohmann::ordered_json line{{"subcommand", run.subcommand},
                                    {"inputs", inputs},
                                    {"exit", code},
                                    {"output", run.lines}};
        if (!error.empty()) line["error"] = error;
        report = line.dump() + "\n";
      }
      write_text_file(report_path, report);
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kBadInput;
    }
  }
  return code;
}
