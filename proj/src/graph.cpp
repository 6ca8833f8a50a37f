#include "rainbow/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

void EdgeColoredGraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_) + "-1");
  }
}

void EdgeColoredGraph::check_vertices(const VertexSet& s) const {
  for (Vertex v : s) check_vertex(v);
}

EdgeColoredGraph build_graph(std::size_t n, std::span<const ColoredEdge> edges) {
  EdgeColoredGraph g;
  g.n_ = n;
  g.matrix_.assign(n * n, kNoEdge);
  g.edges_.reserve(edges.size());

  for (const ColoredEdge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") with n=" +
                                                   std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.color < 0) {
      throw Error(ErrorCode::BadParams, "negative color " + std::to_string(e.color));
    }
    const Vertex lo = std::min(e.u, e.v);
    const Vertex hi = std::max(e.u, e.v);
    Color& slot = g.matrix_[std::size_t{lo} * n + hi];
    if (slot != kNoEdge) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge {" + std::to_string(lo) + "," + std::to_string(hi) + "} given twice");
    }
    slot = e.color;
    g.matrix_[std::size_t{hi} * n + lo] = e.color;
    g.edges_.push_back({lo, hi, e.color});
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  g.adjacency_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.matrix_[std::size_t{u} * n + v] != kNoEdge) g.adjacency_[u].push_back(v);
    }
  }

  for (const ColoredEdge& e : g.edges_) g.palette_.push_back(e.color);
  std::sort(g.palette_.begin(), g.palette_.end());
  g.palette_.erase(std::unique(g.palette_.begin(), g.palette_.end()), g.palette_.end());

  g.color_index_.assign(n * n, -1);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (g.matrix_[i] == kNoEdge) continue;
    auto it = std::lower_bound(g.palette_.begin(), g.palette_.end(), g.matrix_[i]);
    g.color_index_[i] = static_cast<std::int32_t>(it - g.palette_.begin());
  }

  g.color_degrees_.assign(n, 0);
  std::vector<char> seen(g.palette_.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (Vertex u : g.adjacency_[v]) {
      auto idx = static_cast<std::size_t>(g.color_index(v, u));
      if (!seen[idx]) {
        seen[idx] = 1;
        ++count;
      }
    }
    for (Vertex u : g.adjacency_[v]) seen[static_cast<std::size_t>(g.color_index(v, u))] = 0;
    g.color_degrees_[v] = count;
  }
  return g;
}

EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, const VertexSet& s) {
  g.check_vertices(s);
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Color c = g.color(s[i], s[j]);
      if (c != kNoEdge) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), c});
    }
  }
  return build_graph(s.size(), edges);
}

VertexSet complement_vertices(const EdgeColoredGraph& g, const VertexSet& t) {
  g.check_vertices(t);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!t.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet all_vertices(const EdgeColoredGraph& g) {
  std::vector<Vertex> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = v;
  return VertexSet(std::move(out));
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line_no, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line_no) + ": bad " + what + " '" + std::string(token) + "'",
                line_no);
  }
  return value;
}

}  // namespace

EdgeColoredGraph parse_ecg(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t header_line = 0;
  std::vector<ColoredEdge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "ecg") {
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(line_no) + ": expected header 'ecg 1 <n> <m>'",
                    line_no);
      }
      if (parse_int<int>(tokens[1], line_no, "format version") != 1) {
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(line_no) + ": unsupported format version", line_no);
      }
      n = parse_int<std::size_t>(tokens[2], line_no, "vertex count");
      m = parse_int<std::size_t>(tokens[3], line_no, "edge count");
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (tokens.size() != 3) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) + ": expected '<u> <v> <c>'", line_no);
    }
    if (edges.size() == m) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) + ": more edges than declared m=" +
                      std::to_string(m),
                  line_no);
    }
    const auto u = parse_int<Vertex>(tokens[0], line_no, "vertex");
    const auto v = parse_int<Vertex>(tokens[1], line_no, "vertex");
    const auto c = parse_int<Color>(tokens[2], line_no, "color");
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, where + "vertex out of range for n=" + std::to_string(n),
                  line_no);
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, where + "self-loop at " + std::to_string(u), line_no);
    if (c < 0) throw Error(ErrorCode::SyntaxError, where + "colors must be non-negative", line_no);
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  where + "duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
    }
    edges.push_back({u, v, c});
  }

  if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'ecg' header", 1);
  if (edges.size() != m) {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(header_line) + ": declared m=" + std::to_string(m) +
                    ", found " + std::to_string(edges.size()),
                header_line);
  }
  return build_graph(n, edges);
}

std::string serialize_ecg(const EdgeColoredGraph& g) {
  std::string out = "ecg 1 " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const ColoredEdge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += std::to_string(e.color);
    out += '\n';
  }
  return out;
}

EdgeColoredGraph read_ecg_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_ecg(buffer.str());
}

}  // namespace rainbow
