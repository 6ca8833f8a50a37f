#include "rainbow/detectors.hpp"

#include <algorithm>

#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Triangle: return "triangle";
    case WitnessKind::C4: return "c4";
    case WitnessKind::Path: return "path";
    case WitnessKind::Cycle: return "cycle";
  }
  return "unknown";
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

SearchBudget SearchBudget::nodes(std::uint64_t limit) {
  if (limit == 0) throw Error(ErrorCode::BadParams, "node budget must be positive");
  return SearchBudget{limit};
}

namespace {

bool is_closed(WitnessKind kind) { return kind != WitnessKind::Path; }

}  // namespace

RainbowWitness make_witness(const EdgeColoredGraph& g, WitnessKind kind,
                            std::vector<Vertex> vertices) {
  RainbowWitness w{kind, std::move(vertices), {}};
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    w.colors.push_back(g.color(w.vertices[i], w.vertices[i + 1]));
  }
  if (is_closed(kind) && w.vertices.size() > 2) {
    w.colors.push_back(g.color(w.vertices.back(), w.vertices.front()));
  }
  return w;
}

bool validate_witness(const EdgeColoredGraph& g, const RainbowWitness& w) {
  const std::size_t k = w.vertices.size();
  switch (w.kind) {
    case WitnessKind::Triangle:
      if (k != 3) return false;
      break;
    case WitnessKind::C4:
      if (k != 4) return false;
      break;
    case WitnessKind::Cycle:
      if (k < 3) return false;
      break;
    case WitnessKind::Path:
      if (k < 1) return false;
      break;
  }
  const std::size_t edges = is_closed(w.kind) ? k : k - 1;
  if (w.colors.size() != edges) return false;

  for (Vertex v : w.vertices) {
    if (v >= g.order()) return false;
  }
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t i = 0; i < edges; ++i) {
    const Vertex a = w.vertices[i];
    const Vertex b = w.vertices[(i + 1) % k];
    if (!g.adjacent(a, b) || g.color(a, b) != w.colors[i]) return false;
  }
  std::vector<Color> colors = w.colors;
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

std::optional<RainbowWitness> find_rainbow_triangle(const EdgeColoredGraph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : g.neighbors(i)) {
      if (j <= i) continue;
      const Color cij = g.color(i, j);
      for (Vertex k : g.neighbors(j)) {
        if (k <= j) continue;
        const Color cik = g.color(i, k);
        if (cik == kNoEdge) continue;
        const Color cjk = g.color(j, k);
        if (cij != cjk && cij != cik && cjk != cik) {
          return make_witness(g, WitnessKind::Triangle, {i, j, k});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<RainbowWitness> rainbow_triangle_through(const EdgeColoredGraph& g, Vertex v) {
  g.check_vertex(v);
  const auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const Color ca = g.color(v, nbrs[i]);
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const Color cb = g.color(v, nbrs[j]);
      if (ca == cb) continue;
      const Color cab = g.color(nbrs[i], nbrs[j]);
      if (cab == kNoEdge || cab == ca || cab == cb) continue;
      return make_witness(g, WitnessKind::Triangle, {v, nbrs[i], nbrs[j]});
    }
  }
  return std::nullopt;
}

std::optional<RainbowWitness> rainbow_c4_through(const EdgeColoredGraph& g, Vertex v) {
  g.check_vertex(v);
  for (Vertex a : g.neighbors(v)) {
    const Color c0 = g.color(v, a);
    for (Vertex b : g.neighbors(a)) {
      if (b == v) continue;
      const Color c1 = g.color(a, b);
      if (c1 == c0) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || c == v) continue;
        const Color c3 = g.color(c, v);
        if (c3 == kNoEdge) continue;
        const Color c2 = g.color(b, c);
        if (c2 == c0 || c2 == c1 || c3 == c0 || c3 == c1 || c3 == c2) continue;
        return make_witness(g, WitnessKind::C4, {v, a, b, c});
      }
    }
  }
  return std::nullopt;
}

std::optional<RainbowWitness> find_rainbow_c4(const EdgeColoredGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (auto w = rainbow_c4_through(g, v)) return w;
  }
  return std::nullopt;
}

bool has_triangle(const EdgeColoredGraph& g) {
  for (const ColoredEdge& e : g.edges()) {
    for (Vertex w : g.neighbors(e.u)) {
      if (w != e.v && g.adjacent(e.v, w)) return true;
    }
  }
  return false;
}

namespace {

// Shared state for the rainbow-path backtracking searches: one visited flag
// per vertex, one used flag per palette index.
class RainbowDfs {
 public:
  RainbowDfs(const EdgeColoredGraph& g, SearchBudget budget)
      : g_(g),
        limit_(budget.node_limit),
        visited_(g.order(), 0),
        used_(g.palette().size(), 0) {}

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 protected:
  bool tick() {
    if (nodes_ >= limit_) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  void push(Vertex v) {
    visited_[v] = 1;
    if (!path_.empty()) used_[idx(path_.back(), v)] = 1;
    path_.push_back(v);
  }

  void pop() {
    const Vertex v = path_.back();
    path_.pop_back();
    visited_[v] = 0;
    if (!path_.empty()) used_[idx(path_.back(), v)] = 0;
  }

  std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(g_.color_index(a, b)); }

  const EdgeColoredGraph& g_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<char> visited_;
  std::vector<char> used_;
  std::vector<Vertex> path_;
};

class LongestPathSearch : public RainbowDfs {
 public:
  LongestPathSearch(const EdgeColoredGraph& g, SearchBudget budget, std::size_t stop_at)
      : RainbowDfs(g, budget),
        upper_(std::min(g.order() - 1, g.palette().size())),
        stop_at_(stop_at) {
    // Any single edge is a rainbow path, so even a starved search has one.
    const ColoredEdge& e = g.edges().front();
    best_ = {e.u, e.v};
  }

  void run() {
    for (Vertex s = 0; s < g_.order() && !done_ && !aborted_; ++s) {
      if (g_.degree(s) == 0) continue;
      push(s);
      dfs();
      pop();
    }
  }

  const std::vector<Vertex>& best() const { return best_; }
  bool proven_optimal() const { return !aborted_ && (!done_ || best_.size() - 1 >= upper_); }

 private:
  void dfs() {
    if (!tick()) return;
    const std::size_t len = path_.size() - 1;
    if (len > best_.size() - 1) {
      best_ = path_;
      if (len >= upper_ || len >= stop_at_) {
        done_ = true;
        return;
      }
    }
    const std::size_t spare_vertices = g_.order() - path_.size();
    const std::size_t spare_colors = g_.palette().size() - len;
    if (len + std::min(spare_vertices, spare_colors) <= best_.size() - 1) return;

    const Vertex v = path_.back();
    for (Vertex u : g_.neighbors(v)) {
      if (visited_[u] || used_[idx(v, u)]) continue;
      push(u);
      dfs();
      pop();
      if (done_ || aborted_) return;
    }
  }

  std::size_t upper_;
  std::size_t stop_at_;
  bool done_ = false;
  std::vector<Vertex> best_;
};

class LongCycleSearch : public RainbowDfs {
 public:
  LongCycleSearch(const EdgeColoredGraph& g, std::size_t k, SearchBudget budget)
      : RainbowDfs(g, budget), k_(k) {}

  void run() {
    for (Vertex r = 0; r < g_.order() && found_.empty() && !aborted_; ++r) {
      root_ = r;
      push(r);
      dfs();
      pop();
    }
  }

  const std::vector<Vertex>& found() const { return found_; }

 private:
  void dfs() {
    if (!tick()) return;
    const Vertex v = path_.back();
    const std::size_t len = path_.size() - 1;
    if (len >= 2 && len + 1 >= k_) {
      const Color closing = g_.color(v, root_);
      if (closing != kNoEdge && !used_[idx(v, root_)]) {
        found_ = path_;
        return;
      }
    }
    // Vertices above the root not yet on the path, and colors left after
    // reserving one for the closing edge, bound the cycle length.
    const std::size_t spare_vertices = (g_.order() - 1 - root_) - (path_.size() - 1);
    const std::size_t colors = g_.palette().size();
    const std::size_t spare_colors = colors > len + 1 ? colors - len - 1 : 0;
    if (len + 1 + std::min(spare_vertices, spare_colors) < k_) return;

    for (Vertex u : g_.neighbors(v)) {
      if (u <= root_ || visited_[u] || used_[idx(v, u)]) continue;
      push(u);
      dfs();
      pop();
      if (!found_.empty() || aborted_) return;
    }
  }

  std::size_t k_;
  Vertex root_ = 0;
  std::vector<Vertex> found_;
};

}  // namespace

PathSearchResult longest_rainbow_path(const EdgeColoredGraph& g, SearchBudget budget,
                                      std::optional<std::size_t> stop_at) {
  if (g.size() == 0) throw Error(ErrorCode::NoEdges, "graph has no edges");
  LongestPathSearch search(g, budget, stop_at.value_or(g.order()));
  search.run();
  PathSearchResult result;
  result.best = make_witness(g, WitnessKind::Path, search.best());
  result.exact = search.proven_optimal();
  result.nodes = search.nodes();
  return result;
}

CycleSearchResult find_rainbow_cycle_at_least(const EdgeColoredGraph& g, std::size_t k,
                                              SearchBudget budget) {
  if (k < 3) throw Error(ErrorCode::BadK, "cycle length bound must be at least 3");
  CycleSearchResult result;
  if (k > g.order()) return result;
  LongCycleSearch search(g, k, budget);
  search.run();
  result.nodes = search.nodes();
  if (!search.found().empty()) {
    result.status = SearchStatus::Found;
    result.witness = make_witness(g, WitnessKind::Cycle, search.found());
  } else if (search.aborted()) {
    result.status = SearchStatus::Indeterminate;
  }
  return result;
}

}  // namespace rainbow
