#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct ColorDegreeTable {
  std::vector<std::size_t> per_vertex;
  std::size_t min_color_degree = 0;
};

// d^c(v): number of distinct colors on edges at v.
std::size_t color_degree(const EdgeColoredGraph& g, Vertex v);

// delta^c(G). Throws EmptyGraph when n = 0.
std::size_t min_color_degree(const EdgeColoredGraph& g);

ColorDegreeTable color_degree_table(const EdgeColoredGraph& g);

// N^c(v): one neighbor per incident color, the lowest-indexed one carrying it.
VertexSet representative_neighborhood(const EdgeColoredGraph& g, Vertex v);

// N_{C'}(v, S) = {u in N^c(v) : c(uv) in C'} intersected with S.
VertexSet restricted_representatives(const EdgeColoredGraph& g, Vertex v, const ColorSet& colors,
                                     const VertexSet& s);

// C(V1, V2). Throws OverlappingSets when V1 and V2 meet.
ColorSet colors_between(const EdgeColoredGraph& g, const VertexSet& v1, const VertexSet& v2);

// Colors on the edges of a vertex sequence read as a walk: C(T) for paths and cycles.
ColorSet colors_along(const EdgeColoredGraph& g, std::span<const Vertex> walk, bool closed);

}  // namespace rainbow
