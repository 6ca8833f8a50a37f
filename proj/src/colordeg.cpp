#include "rainbow/colordeg.hpp"

#include <algorithm>

#include "rainbow/error.hpp"

namespace rainbow {

std::size_t color_degree(const EdgeColoredGraph& g, Vertex v) {
  g.check_vertex(v);
  return g.cached_color_degrees()[v];
}

std::size_t min_color_degree(const EdgeColoredGraph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  const auto& d = g.cached_color_degrees();
  return *std::min_element(d.begin(), d.end());
}

ColorDegreeTable color_degree_table(const EdgeColoredGraph& g) {
  return {g.cached_color_degrees(), min_color_degree(g)};
}

VertexSet representative_neighborhood(const EdgeColoredGraph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Vertex> reps;
  std::vector<Color> seen;
  for (Vertex u : g.neighbors(v)) {
    const Color c = g.color(v, u);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
      seen.push_back(c);
      reps.push_back(u);
    }
  }
  return VertexSet(std::move(reps));
}

VertexSet restricted_representatives(const EdgeColoredGraph& g, Vertex v, const ColorSet& colors,
                                     const VertexSet& s) {
  g.check_vertices(s);
  std::vector<Vertex> out;
  for (Vertex u : representative_neighborhood(g, v)) {
    if (colors.contains(g.color(v, u)) && s.contains(u)) out.push_back(u);
  }
  return VertexSet(std::move(out));
}

ColorSet colors_between(const EdgeColoredGraph& g, const VertexSet& v1, const VertexSet& v2) {
  g.check_vertices(v1);
  g.check_vertices(v2);
  if (!set_intersection(v1, v2).empty()) {
    throw Error(ErrorCode::OverlappingSets, "vertex sets must be disjoint");
  }
  std::vector<Color> out;
  for (Vertex x : v1) {
    for (Vertex y : v2) {
      const Color c = g.color(x, y);
      if (c != kNoEdge) out.push_back(c);
    }
  }
  return ColorSet(std::move(out));
}

ColorSet colors_along(const EdgeColoredGraph& g, std::span<const Vertex> walk, bool closed) {
  std::vector<Color> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) out.push_back(g.color(walk[i], walk[i + 1]));
  if (closed && walk.size() > 2) out.push_back(g.color(walk.back(), walk.front()));
  return ColorSet(std::move(out));
}

}  // namespace rainbow
