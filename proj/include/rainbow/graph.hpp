#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using Color = std::int64_t;

inline constexpr Color kNoEdge = -1;

// Sorted, duplicate-free list of ids. The tag keeps vertex and color sets
// from being mixed up at call sites.
template <typename T, typename Tag>
class SortedSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  SortedSet() = default;
  SortedSet(std::initializer_list<T> items) : items_(items) { normalize(); }
  explicit SortedSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }

  template <typename It>
  SortedSet(It first, It last) : items_(first, last) { normalize(); }

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<T>& items() const { return items_; }

  bool contains(T x) const { return std::binary_search(items_.begin(), items_.end(), x); }

  void insert(T x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) items_.insert(it, x);
  }

  friend bool operator==(const SortedSet&, const SortedSet&) = default;

  friend SortedSet set_union(const SortedSet& a, const SortedSet& b) {
    SortedSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
  }
  friend SortedSet set_intersection(const SortedSet& a, const SortedSet& b) {
    SortedSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out.items_));
    return out;
  }
  friend SortedSet set_difference(const SortedSet& a, const SortedSet& b) {
    SortedSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<T> items_;
};

struct VertexTag {};
struct ColorTag {};
using VertexSet = SortedSet<Vertex, VertexTag>;
using ColorSet = SortedSet<Color, ColorTag>;

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Immutable simple graph on vertices 0..n-1 with one color per edge.
// Edges are stored with u < v, sorted by (u, v). Equality is label-sensitive.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return color(u, v) != kNoEdge; }
  // kNoEdge when u and v are not adjacent.
  Color color(Vertex u, Vertex v) const { return matrix_[std::size_t{u} * n_ + v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  // Distinct colors of the whole graph, ascending: C(G).
  const std::vector<Color>& palette() const { return palette_; }
  // Index of color(u, v) in palette(), -1 when not adjacent.
  std::int32_t color_index(Vertex u, Vertex v) const {
    return color_index_[std::size_t{u} * n_ + v];
  }

  // Cached at construction; see colordeg.hpp for the public accessors.
  const std::vector<std::size_t>& cached_color_degrees() const { return color_degrees_; }

  bool is_complete() const { return edges_.size() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  void check_vertex(Vertex v) const;
  void check_vertices(const VertexSet& s) const;

  friend bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend EdgeColoredGraph build_graph(std::size_t n, std::span<const ColoredEdge> edges);

  std::size_t n_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<Color> matrix_;
  std::vector<std::int32_t> color_index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Color> palette_;
  std::vector<std::size_t> color_degrees_;
};

// Throws Error{SelfLoop, DuplicateEdge, VertexOutOfRange, BadParams (negative color)}.
EdgeColoredGraph build_graph(std::size_t n, std::span<const ColoredEdge> edges);
inline EdgeColoredGraph build_graph(std::size_t n, std::initializer_list<ColoredEdge> edges) {
  return build_graph(n, std::span<const ColoredEdge>(edges.begin(), edges.size()));
}

// G[S] with vertices relabeled 0..|S|-1 in the sorted order of S.
EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, const VertexSet& s);

// V(G) \ T.
VertexSet complement_vertices(const EdgeColoredGraph& g, const VertexSet& t);

VertexSet all_vertices(const EdgeColoredGraph& g);

// .ecg text format: "ecg 1 <n> <m>" then m lines "<u> <v> <c>"; '#' lines
// are comments. Blank lines are ignored on input.
EdgeColoredGraph parse_ecg(std::string_view text);
std::string serialize_ecg(const EdgeColoredGraph& g);

EdgeColoredGraph read_ecg_file(const std::string& path);

}  // namespace rainbow
