#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class WitnessKind { Triangle, C4, Path, Cycle };

std::string_view to_string(WitnessKind kind);

// A rainbow structure certified by its vertex sequence. For closed kinds the
// edge from the last vertex back to the first is part of the structure and its
// color is the last entry of `colors`.
struct RainbowWitness {
  WitnessKind kind = WitnessKind::Path;
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  // Number of edges.
  std::size_t length() const { return colors.size(); }

  friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

// Checks adjacency, stated colors, distinct vertices, rainbow-ness and the
// vertex count implied by the kind.
bool validate_witness(const EdgeColoredGraph& g, const RainbowWitness& w);

// Builds the witness of `kind` along `vertices`, reading colors from g.
RainbowWitness make_witness(const EdgeColoredGraph& g, WitnessKind kind,
                            std::vector<Vertex> vertices);

// Search-tree node limit. Exhausting it yields SearchStatus::Indeterminate.
struct SearchBudget {
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t limit);
};

enum class SearchStatus { Found, Absent, Indeterminate };

std::string_view to_string(SearchStatus status);

struct PathSearchResult {
  RainbowWitness best;  // longest rainbow path seen
  bool exact = false;   // false: budget ran out before the tree was closed
  std::uint64_t nodes = 0;
};

struct CycleSearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<RainbowWitness> witness;
  std::uint64_t nodes = 0;
};

// Lexicographically first rainbow triangle (i < j < k).
std::optional<RainbowWitness> find_rainbow_triangle(const EdgeColoredGraph& g);

// Rainbow triangle (v, a, b) with a < b neighbors of v, first in ascending order.
std::optional<RainbowWitness> rainbow_triangle_through(const EdgeColoredGraph& g, Vertex v);

// Rainbow 4-cycle (v, a, b, c) with a < c, first in ascending order.
std::optional<RainbowWitness> rainbow_c4_through(const EdgeColoredGraph& g, Vertex v);

// Any rainbow 4-cycle, scanning v ascending.
std::optional<RainbowWitness> find_rainbow_c4(const EdgeColoredGraph& g);

// Any triangle at all (colors ignored).
bool has_triangle(const EdgeColoredGraph& g);

// Exact maximum-length rainbow path by branch and bound. `stop_at`, when
// given, ends the search as soon as a path of that many edges is found; the
// result is then not marked exact unless it also meets the global upper bound.
// Throws NoEdges.
PathSearchResult longest_rainbow_path(const EdgeColoredGraph& g, SearchBudget budget,
                                      std::optional<std::size_t> stop_at = std::nullopt);

// Rainbow cycle of length >= k. Absent is a certified answer.
// Throws BadK when k < 3.
CycleSearchResult find_rainbow_cycle_at_least(const EdgeColoredGraph& g, std::size_t k,
                                              SearchBudget budget);

}  // namespace rainbow
