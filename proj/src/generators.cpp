#include "rainbow/generators.hpp"

#include <map>

#include "rainbow/colordeg.hpp"
#include "rainbow/detectors.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::CompleteRandom: return "complete_random";
    case Family::GnpRandom: return "gnp_random";
    case Family::ProperBipartite: return "proper_bipartite";
    case Family::MatchingK4: return "matching_k4";
    case Family::TargetedDelta: return "targeted_delta";
    case Family::Lexical: return "lexical";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::CompleteRandom, Family::GnpRandom, Family::ProperBipartite,
                   Family::MatchingK4, Family::TargetedDelta, Family::Lexical}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::UnknownName, "unknown generator family '" + std::string(name) + "'");
}

EdgeColoredGraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::CompleteRandom: return random_coloring_complete(spec.n, spec.palette, spec.seed);
    case Family::GnpRandom: return random_coloring_gnp(spec.n, spec.p, spec.palette, spec.seed);
    case Family::ProperBipartite: return proper_bipartite_coloring(spec.n);
    case Family::MatchingK4: return matching_k4();
    case Family::TargetedDelta:
      return targeted_min_color_degree(spec.n, spec.target_delta, spec.seed);
    case Family::Lexical: return lexical_coloring(spec.n, spec.recolor, spec.seed);
  }
  throw Error(ErrorCode::BadParams, "unhandled family");
}

EdgeColoredGraph random_coloring_complete(std::size_t n, std::size_t palette, std::uint64_t seed) {
  if (n < 2 || palette < 1) throw Error(ErrorCode::BadParams, "need n >= 2 and palette >= 1");
  Rng rng(seed);
  std::vector<ColoredEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v, static_cast<Color>(uniform_below(rng, palette))});
    }
  }
  return build_graph(n, edges);
}

EdgeColoredGraph random_coloring_gnp(std::size_t n, double p, std::size_t palette,
                                     std::uint64_t seed) {
  if (n < 1 || palette < 1 || !(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::BadParams, "need n >= 1, palette >= 1, p in [0,1]");
  }
  Rng rng(seed);
  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool keep = uniform_unit(rng) < p;
      const auto c = static_cast<Color>(uniform_below(rng, palette));
      if (keep) edges.push_back({u, v, c});
    }
  }
  return build_graph(n, edges);
}

EdgeColoredGraph proper_bipartite_coloring(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::BadParams, "need m >= 1");
  std::vector<ColoredEdge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < m; ++j) {
      edges.push_back({i, static_cast<Vertex>(m + j), static_cast<Color>((i + j) % m)});
    }
  }
  return build_graph(2 * m, edges);
}

EdgeColoredGraph matching_k4() {
  return build_graph(4, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2}, {1, 2, 2}});
}

EdgeColoredGraph targeted_min_color_degree(std::size_t n, std::size_t t, std::uint64_t seed) {
  if (n < 2 || t < 1 || t > n - 1) throw Error(ErrorCode::BadParams, "need 1 <= t <= n-1");
  Rng rng(seed);
  std::vector<Color> color(n * n, kNoEdge);
  auto at = [&](Vertex u, Vertex v) -> Color& { return color[std::size_t{u} * n + v]; };
  auto set = [&](Vertex u, Vertex v, Color c) { at(u, v) = c; at(v, u) = c; };
  auto owner_color = [&](Vertex v, std::uint64_t r) { return static_cast<Color>(v * t + r); };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t r = uniform_below(rng, 2 * t);
      set(u, v, r < t ? owner_color(u, r) : owner_color(v, r - t));
    }
  }

  const std::size_t cap = 10 * n * t;
  std::size_t repairs = 0;
  while (true) {
    Vertex deficient = static_cast<Vertex>(n);
    std::map<Color, std::size_t> counts;
    for (Vertex v = 0; v < n && deficient == n; ++v) {
      counts.clear();
      for (Vertex u = 0; u < n; ++u) {
        if (u != v) ++counts[at(v, u)];
      }
      if (counts.size() < t) deficient = v;
    }
    if (deficient == n) break;
    if (++repairs > cap) throw Error(ErrorCode::RepairFailed, "repair loop exceeded 10*n*t");

    const Vertex v = deficient;
    std::vector<Vertex> doubled;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && counts[at(v, u)] >= 2) doubled.push_back(u);
    }
    std::vector<Color> unused;
    for (std::uint64_t r = 0; r < t; ++r) {
      if (!counts.contains(owner_color(v, r))) unused.push_back(owner_color(v, r));
    }
    if (doubled.empty() || unused.empty()) {
      throw Error(ErrorCode::RepairFailed, "no repair move at vertex " + std::to_string(v));
    }
    const Vertex u = doubled[uniform_below(rng, doubled.size())];
    set(u, v, unused[uniform_below(rng, unused.size())]);
  }

  std::vector<ColoredEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, at(u, v)});
  }
  EdgeColoredGraph g = build_graph(n, edges);
  if (min_color_degree(g) < t) throw Error(ErrorCode::RepairFailed, "postcondition violated");
  return g;
}

EdgeColoredGraph lexical_coloring(std::size_t n, std::size_t recolor, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::BadParams, "need n >= 2");
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(rng, i + 1)]);
  }
  std::vector<Color> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<Color>(i);

  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, std::min(rank[u], rank[v])});
  }
  for (std::size_t i = 0; i < recolor; ++i) {
    ColoredEdge& e = edges[uniform_below(rng, edges.size())];
    e.color = static_cast<Color>(uniform_below(rng, n - 1));
  }
  return build_graph(n, edges);
}

EdgeColoredGraph canonical_colors(const EdgeColoredGraph& g) {
  std::map<Color, Color> rename;
  std::vector<ColoredEdge> edges = g.edges();
  for (ColoredEdge& e : edges) {
    auto [it, fresh] = rename.try_emplace(e.color, static_cast<Color>(rename.size()));
    e.color = it->second;
  }
  return build_graph(g.order(), edges);
}

std::vector<EdgeColoredGraph> mine_k4_exceptions() {
  const std::vector<std::pair<Vertex, Vertex>> k4 = {{0, 1}, {0, 2}, {0, 3},
                                                     {1, 2}, {1, 3}, {2, 3}};
  std::vector<EdgeColoredGraph> candidates;
  for (std::size_t m : {std::size_t{6}, std::size_t{5}}) {
    for_each_canonical_coloring(m, 6, [&](const std::vector<Color>& colors) {
      std::vector<ColoredEdge> edges;
      for (std::size_t i = 0; i < m; ++i) edges.push_back({k4[i].first, k4[i].second, colors[i]});
      candidates.push_back(build_graph(4, edges));
    });
  }

  std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const EdgeColoredGraph& g = candidates[i];
    keep[i] = min_color_degree(g) >= 2 && !find_rainbow_triangle(g);
  }

  std::vector<EdgeColoredGraph> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(std::move(candidates[i]));
  }
  return out;
}

}  // namespace rainbow
