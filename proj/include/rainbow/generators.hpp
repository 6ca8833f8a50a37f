#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// All generators draw from std::mt19937_64, whose output sequence is fixed
// by the standard. Bounded draws use rejection sampling rather than the
// implementation-defined std distributions, so a (family, params, seed)
// triple names the same graph on every platform.
using Rng = std::mt19937_64;

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
double uniform_unit(Rng& rng);

// SplitMix64 finalizer; derives per-trial seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

enum class Family { CompleteRandom, GnpRandom, ProperBipartite, MatchingK4, TargetedDelta, Lexical };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);  // throws UnknownName

struct GenSpec {
  Family family = Family::CompleteRandom;
  std::size_t n = 0;            // for ProperBipartite: side size m (order 2m)
  double p = 0.5;               // GnpRandom
  std::size_t palette = 1;      // CompleteRandom, GnpRandom
  std::size_t target_delta = 1; // TargetedDelta
  std::size_t recolor = 0;      // Lexical: edges recolored after the base coloring
  std::uint64_t seed = 0;
};

EdgeColoredGraph generate(const GenSpec& spec);

// K_n, each edge uniform over [0, palette).
EdgeColoredGraph random_coloring_complete(std::size_t n, std::size_t palette, std::uint64_t seed);

// G(n, p) with colors uniform over [0, palette).
EdgeColoredGraph random_coloring_gnp(std::size_t n, double p, std::size_t palette,
                                     std::uint64_t seed);

// K_{m,m} with c(i, m+j) = (i + j) mod m.
EdgeColoredGraph proper_bipartite_coloring(std::size_t m);

// K4 with each of its three perfect matchings in its own color.
EdgeColoredGraph matching_k4();

// K_n with delta^c >= t. Vertex v owns colors v*t .. v*t+t-1; every edge
// takes a random color owned by one of its ends, then deficient vertices
// are repaired by recoloring an edge whose color they see twice.
// Throws BadParams, RepairFailed.
EdgeColoredGraph targeted_min_color_degree(std::size_t n, std::size_t t, std::uint64_t seed);

// K_n under a random vertex order o with c(xy) = rank of the earlier end, then
// `recolor` random edges given random existing colors. With recolor = 0 the
// graph has no rainbow cycle and a rainbow Hamilton path.
EdgeColoredGraph lexical_coloring(std::size_t n, std::size_t recolor, std::uint64_t seed);

// Colors renamed by first occurrence along the sorted edge list.
EdgeColoredGraph canonical_colors(const EdgeColoredGraph& g);

// Every coloring of K4 and of K4 minus edge {2,3} with at most six colors, up
// to color renaming, that has delta^c >= 2 and no rainbow triangle.
std::vector<EdgeColoredGraph> mine_k4_exceptions();

// Calls visit(colors) for every restricted-growth coloring of `edges` slots
// with at most `palette` colors: colors[0] = 0 and each entry is at most one
// more than the running maximum.
template <typename Visit>
void for_each_canonical_coloring(std::size_t edges, std::size_t palette, Visit&& visit) {
  std::vector<Color> colors(edges, 0);
  if (edges == 0) {
    visit(colors);
    return;
  }
  if (palette == 0) return;
  std::vector<Color> running_max(edges, 0);
  while (true) {
    visit(colors);
    std::size_t i = edges - 1;
    while (i >= 1) {
      const Color cap = std::min<Color>(running_max[i - 1] + 1, static_cast<Color>(palette) - 1);
      if (colors[i] < cap) break;
      --i;
    }
    if (i == 0) return;
    ++colors[i];
    running_max[i] = std::max(running_max[i - 1], colors[i]);
    for (std::size_t j = i + 1; j < edges; ++j) {
      colors[j] = 0;
      running_max[j] = running_max[i];
    }
  }
}

}  // namespace rainbow
