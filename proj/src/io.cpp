#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::vector<std::vector<std::string>> tokenized_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" + token + "'");
  }
  return value;
}

struct Header {
  std::string kind;
  int a;
  int b;
};

Header parse_header(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) throw InputError("empty matroid file");
  const auto& head = lines.front();
  if (head.size() != 3) throw InputError("header must be '<kind> <int> <int>'");
  return Header{head[0], parse_int(head[1], "the header"), parse_int(head[2], "the header")};
}

Graph graph_body(const Header& h, const std::vector<std::vector<std::string>>& lines) {
  if (h.a < 0 || h.b < 0) throw InputError("negative graph size");
  if (static_cast<int>(lines.size()) != h.b + 1) {
    throw InputError("expected " + std::to_string(h.b) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= h.b; ++i) {
    if (lines[i].size() != 2) throw InputError("edge line " + std::to_string(i) + " needs 'u v'");
    edges.push_back({parse_int(lines[i][0], "a vertex"), parse_int(lines[i][1], "a vertex")});
  }
  return Graph(h.a, std::move(edges));
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto lines = tokenized_lines(text);
  const Header h = parse_header(lines);
  if (h.kind != "graph" && h.kind != "cograph") throw InputError("expected a graph file");
  return graph_body(h, lines);
}

MatroidFile parse_matroid(const std::string& text, bool as_cograph) {
  const auto lines = tokenized_lines(text);
  const Header h = parse_header(lines);
  if (h.kind == "uniform") {
    if (lines.size() != 1) throw InputError("uniform matroid files have no body");
    if (h.a < 0 || h.b < 0 || h.a > h.b) throw InputError("uniform r n needs 0 <= r <= n");
    if (h.b > kMaxElements) throw TooLargeError("more than 64 elements");
    return MatroidFile{MatroidKind::kUniform, uniform_matroid(h.a, h.b), std::nullopt, std::nullopt};
  }
  if (h.kind == "binary") {
    if (h.a < 0 || h.b < 0) throw InputError("negative matrix size");
    if (static_cast<int>(lines.size()) != h.a + 1) {
      throw InputError("expected " + std::to_string(h.a) + " matrix rows");
    }
    std::vector<std::string> rows;
    for (int i = 1; i <= h.a; ++i) {
      std::string row;
      for (const auto& t : lines[i]) row += t;
      if (static_cast<int>(row.size()) != h.b) {
        throw InputError("row " + std::to_string(i) + " must have " + std::to_string(h.b) +
                         " entries");
      }
      rows.push_back(row);
    }
    BinaryMatroid b = BinaryMatroid::from_rows(rows);
    Matroid m = b.matroid();
    return MatroidFile{MatroidKind::kBinary, std::move(m), std::nullopt, std::move(b)};
  }
  if (h.kind == "graph" || h.kind == "cograph") {
    Graph g = graph_body(h, lines);
    if (h.kind == "cograph" || as_cograph) {
      return MatroidFile{MatroidKind::kCograph, cographic_matroid(g), std::move(g), std::nullopt};
    }
    return MatroidFile{MatroidKind::kGraph, graphic_matroid(g), std::move(g), std::nullopt};
  }
  throw InputError("unknown matroid kind '" + h.kind + "'");
}

std::string format_uniform(int rank, int n) {
  return "uniform " + std::to_string(rank) + " " + std::to_string(n) + "\n";
}

std::string format_binary(const BinaryMatroid& b) {
  std::string out = "binary " + std::to_string(b.row_count()) + " " + std::to_string(b.size()) + "\n";
  for (const std::string& row : b.row_strings()) out += row + "\n";
  return out;
}

std::string format_graph(const Graph& g, bool cograph) {
  std::string out = std::string(cograph ? "cograph " : "graph ") + std::to_string(g.vertex_count()) +
                    " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace rainbow
