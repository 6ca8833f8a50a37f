#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

namespace {

bool edge(const EdgeColoredGraph& g, Vertex a, Vertex b) {
  return a != b && g.color(a, b) != rainbow::kNoEdge;
}

bool distinct(const std::vector<Color>& colors) {
  return std::set<Color>(colors.begin(), colors.end()).size() == colors.size();
}

// Visits every simple path (as a vertex sequence of length >= 1).
void walk_paths(const EdgeColoredGraph& g, std::vector<Vertex>& path, std::vector<bool>& used,
                const std::function<void(const std::vector<Vertex>&)>& visit) {
  visit(path);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (used[u] || !edge(g, path.back(), u)) continue;
    used[u] = true;
    path.push_back(u);
    walk_paths(g, path, used, visit);
    path.pop_back();
    used[u] = false;
  }
}

void for_each_path(const EdgeColoredGraph& g,
                   const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<bool> used(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    used[s] = true;
    walk_paths(g, path, used, visit);
    used[s] = false;
  }
}

}  // namespace

std::size_t color_degree(const EdgeColoredGraph& g, Vertex v) {
  std::set<Color> seen;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (edge(g, u, v)) seen.insert(g.color(u, v));
  }
  return seen.size();
}

bool triangle_through(const EdgeColoredGraph& g, Vertex v) {
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < g.order(); ++b) {
      if (a == v || b == v || a == b) continue;
      if (!edge(g, v, a) || !edge(g, a, b) || !edge(g, b, v)) continue;
      if (distinct({g.color(v, a), g.color(a, b), g.color(b, v)})) return true;
    }
  }
  return false;
}

bool any_rainbow_triangle(const EdgeColoredGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (triangle_through(g, v)) return true;
  }
  return false;
}

bool c4_through(const EdgeColoredGraph& g, Vertex v) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) {
        const std::set<Vertex> four{v, a, b, c};
        if (four.size() != 4) continue;
        if (!edge(g, v, a) || !edge(g, a, b) || !edge(g, b, c) || !edge(g, c, v)) continue;
        if (distinct({g.color(v, a), g.color(a, b), g.color(b, c), g.color(c, v)})) return true;
      }
    }
  }
  return false;
}

std::size_t longest_rainbow_path(const EdgeColoredGraph& g) {
  std::size_t best = 0;
  for_each_path(g, [&](const std::vector<Vertex>& p) {
    std::vector<Color> colors;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) colors.push_back(g.color(p[i], p[i + 1]));
    if (distinct(colors)) best = std::max(best, colors.size());
  });
  return best;
}

bool rainbow_cycle_at_least(const EdgeColoredGraph& g, std::size_t k) {
  bool found = false;
  for_each_path(g, [&](const std::vector<Vertex>& p) {
    if (found || p.size() < 3 || p.size() < k || !edge(g, p.back(), p.front())) return;
    std::vector<Color> colors;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) colors.push_back(g.color(p[i], p[i + 1]));
    colors.push_back(g.color(p.back(), p.front()));
    if (distinct(colors)) found = true;
  });
  return found;
}

EdgeColoredGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, std::size_t palette) {
  std::bernoulli_distribution keep(p);
  std::uniform_int_distribution<Color> pick(0, static_cast<Color>(palette) - 1);
  std::vector<rainbow::ColoredEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, pick(rng)});
    }
  }
  return rainbow::build_graph(n, edges);
}

void for_each_colored_graph(std::size_t n, std::size_t palette,
                            const std::function<void(const EdgeColoredGraph&)>& visit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  // Each pair takes a value in [0, palette]; palette means "no edge".
  std::vector<std::size_t> digit(pairs.size(), 0);
  while (true) {
    std::vector<rainbow::ColoredEdge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (digit[i] < palette) {
        edges.push_back({pairs[i].first, pairs[i].second, static_cast<Color>(digit[i])});
      }
    }
    visit(rainbow::build_graph(n, edges));
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == palette) digit[i++] = 0;
    if (i == digit.size()) return;
    ++digit[i];
  }
}

DependentInstance random_dependent_instance(std::mt19937_64& rng, std::size_t n,
                                            std::size_t palette) {
  std::uniform_int_distribution<Vertex> pick_vertex(0, static_cast<Vertex>(n - 1));
  std::uniform_int_distribution<Color> pick_color(0, static_cast<Color>(palette - 1));
  std::bernoulli_distribution coin(0.5);
  const Vertex pivot = pick_vertex(rng);
  std::vector<Vertex> members;
  for (Vertex x = 0; x < n; ++x) {
    if (x != pivot && coin(rng)) members.push_back(x);
  }
  std::vector<Color> pivot_color(n, rainbow::kNoEdge);
  std::vector<rainbow::ColoredEdge> edges;
  std::vector<bool> in_a(n, false);
  for (Vertex x : members) {
    in_a[x] = true;
    pivot_color[x] = pick_color(rng);
    edges.push_back({pivot, x, pivot_color[x]});
  }
  std::bernoulli_distribution dense(0.7);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (x == pivot || y == pivot) {
        const Vertex other = x == pivot ? y : x;
        if (!in_a[other] && coin(rng)) edges.push_back({x, y, pick_color(rng)});
        continue;
      }
      if (in_a[x] && in_a[y]) {
        if (dense(rng)) edges.push_back({x, y, coin(rng) ? pivot_color[x] : pivot_color[y]});
      } else if (coin(rng)) {
        edges.push_back({x, y, pick_color(rng)});
      }
    }
  }
  return {rainbow::build_graph(n, edges), rainbow::VertexSet(members), pivot};
}

}  // namespace oracle
