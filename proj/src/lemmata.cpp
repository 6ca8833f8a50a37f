#include "rainbow/lemmata.hpp"

#include <algorithm>

#include "rainbow/colordeg.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void check_pivot(const EdgeColoredGraph& g, const VertexSet& a, Vertex pivot) {
  g.check_vertex(pivot);
  g.check_vertices(a);
  if (a.contains(pivot)) {
    throw Error(ErrorCode::PivotInA, "pivot " + std::to_string(pivot) + " lies in A");
  }
  for (Vertex x : a) {
    if (!g.adjacent(pivot, x)) {
      throw Error(ErrorCode::PivotNotAdjacent,
                  "vertex " + std::to_string(x) + " is not adjacent to the pivot");
    }
  }
}

std::string edge_name(Vertex x, Vertex y) {
  return "{" + std::to_string(x) + "," + std::to_string(y) + "}";
}

}  // namespace

bool has_dependence_property(const EdgeColoredGraph& g, const VertexSet& a, Vertex pivot) {
  check_pivot(g, a, pivot);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Color c = g.color(a[i], a[j]);
      if (c == kNoEdge) continue;
      if (c != g.color(pivot, a[i]) && c != g.color(pivot, a[j])) return false;
    }
  }
  return true;
}

std::size_t DependenceOrientation::outdegree_of(Vertex x) const {
  auto it = std::lower_bound(base.begin(), base.end(), x);
  if (it == base.end() || *it != x) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x) + " not in A");
  }
  return outdeg[static_cast<std::size_t>(it - base.begin())];
}

DependenceOrientation orient_dependence_set(const EdgeColoredGraph& g, const VertexSet& a,
                                            Vertex pivot) {
  check_pivot(g, a, pivot);
  DependenceOrientation d{a, pivot, {}, std::vector<std::size_t>(a.size(), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Vertex x = a[i];
      const Vertex y = a[j];
      const Color c = g.color(x, y);
      if (c == kNoEdge) continue;
      const Color cx = g.color(pivot, x);
      if (c != cx && c != g.color(pivot, y)) {
        throw Error(ErrorCode::NotDependent, "edge " + edge_name(x, y) + " has color " +
                                                 std::to_string(c) +
                                                 " not seen from the pivot");
      }
      if (c == cx) {
        d.arcs.push_back({y, x});
        ++d.outdeg[j];
      } else {
        d.arcs.push_back({x, y});
        ++d.outdeg[i];
      }
    }
  }
  return d;
}

std::pair<Vertex, std::size_t> min_outdegree_witness(const DependenceOrientation& d) {
  if (d.base.empty()) throw Error(ErrorCode::EmptySet, "orientation has no vertices");
  auto it = std::min_element(d.outdeg.begin(), d.outdeg.end());
  const auto i = static_cast<std::size_t>(it - d.outdeg.begin());
  return {d.base[i], *it};
}

std::size_t off_pivot_colors(const EdgeColoredGraph& g, const DependenceOrientation& d, Vertex x) {
  const Color own = g.color(d.pivot, x);
  std::vector<Color> colors;
  for (Vertex y : d.base) {
    const Color c = (y == x) ? kNoEdge : g.color(x, y);
    if (c != kNoEdge && c != own) colors.push_back(c);
  }
  return ColorSet(std::move(colors)).size();
}

FreshNeighborhood common_fresh_neighborhood(const EdgeColoredGraph& g, const RainbowWitness& t,
                                            Vertex u, Vertex v) {
  const bool is_edge = t.kind == WitnessKind::Path && t.vertices.size() == 2;
  const bool is_triangle = t.kind == WitnessKind::Triangle;
  if (!is_edge && !is_triangle) {
    throw Error(ErrorCode::BadTemplate, "template must be a single edge or a triangle");
  }
  if (!validate_witness(g, t)) {
    throw Error(ErrorCode::BadTemplate, "template is not a rainbow subgraph of G");
  }
  const auto& tv = t.vertices;
  const bool has_u = std::find(tv.begin(), tv.end(), u) != tv.end();
  const bool has_v = std::find(tv.begin(), tv.end(), v) != tv.end();
  if (u == v || !has_u || !has_v) {
    throw Error(ErrorCode::BadTemplate, "uv is not an edge of the template");
  }

  ColorSet template_colors(t.colors.begin(), t.colors.end());
  ColorSet fresh = set_difference(ColorSet(g.palette()), template_colors);
  VertexSet outside = complement_vertices(g, VertexSet(tv.begin(), tv.end()));

  FreshNeighborhood out;
  out.common = set_intersection(restricted_representatives(g, u, fresh, outside),
                                restricted_representatives(g, v, fresh, outside));
  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(min_color_degree(g));
  out.triangle_template = is_triangle;
  out.edge_bound = 2 * delta - n;
  out.triangle_bound = 2 * delta - n - 3;
  out.bound = is_triangle ? out.triangle_bound : out.edge_bound;
  out.degree_condition = 2 * delta > n;
  return out;
}

}  // namespace rainbow
