#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/detectors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// A has the dependence property with respect to v when every edge aa' inside
// A has color c(va) or c(va'). Throws PivotInA, PivotNotAdjacent.
bool has_dependence_property(const EdgeColoredGraph& g, const VertexSet& a, Vertex pivot);

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Orientation of G[A] relative to the pivot v: an edge xy (x < y) points
// y -> x when c(xy) = c(vx) and x -> y otherwise. `outdeg[i]` belongs to
// `base[i]`.
struct DependenceOrientation {
  VertexSet base;
  Vertex pivot = 0;
  std::vector<Arc> arcs;
  std::vector<std::size_t> outdeg;

  std::size_t outdegree_of(Vertex x) const;
};

// Throws NotDependent (naming the offending edge) plus the errors of
// has_dependence_property.
DependenceOrientation orient_dependence_set(const EdgeColoredGraph& g, const VertexSet& a,
                                            Vertex pivot);

// Vertex of minimum out-degree, lowest id on ties. Throws EmptySet.
std::pair<Vertex, std::size_t> min_outdegree_witness(const DependenceOrientation& d);

// Distinct colors at x inside G[A] other than c(vx).
std::size_t off_pivot_colors(const EdgeColoredGraph& g, const DependenceOrientation& d, Vertex x);

struct FreshNeighborhood {
  VertexSet common;             // S
  bool triangle_template = false;
  std::int64_t bound = 0;       // bound for the template actually given
  std::int64_t edge_bound = 0;  // 2 delta^c - n
  std::int64_t triangle_bound = 0;  // 2 delta^c - n - 3
  bool degree_condition = false;    // delta^c > n/2
};

// S = N_{C(G)\C(T)}(u) ∩ N_{C(G)\C(T)}(v) outside V(T), with representatives
// chosen by representative_neighborhood(). T is a single edge (a Path witness
// on two vertices) or a rainbow triangle; uv must be an edge of T.
// Throws BadTemplate.
FreshNeighborhood common_fresh_neighborhood(const EdgeColoredGraph& g, const RainbowWitness& t,
                                            Vertex u, Vertex v);

}  // namespace rainbow
