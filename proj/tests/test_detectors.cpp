#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/detectors.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

EdgeColoredGraph complete(std::size_t n, bool rainbow) {
  std::vector<ColoredEdge> edges;
  Color c = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, rainbow ? c++ : 0});
  return build_graph(n, edges);
}

EdgeColoredGraph c4(Color a, Color b, Color c, Color d) {
  return build_graph(4, {{0, 1, a}, {1, 2, b}, {2, 3, c}, {0, 3, d}});
}

template <typename Visit>
void for_each_canonical_graph(std::size_t n, std::size_t palette, Visit&& visit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> present;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) present.push_back(pairs[i]);
    for_each_canonical_coloring(present.size(), palette, [&](const std::vector<Color>& colors) {
      std::vector<ColoredEdge> edges;
      for (std::size_t i = 0; i < present.size(); ++i)
        edges.push_back({present[i].first, present[i].second, colors[i]});
      visit(build_graph(n, edges));
    });
  }
}

EdgeColoredGraph rainbow_k3() { return build_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}); }

}  // namespace

TEST_CASE("find_rainbow_triangle examples") {
  const auto t = find_rainbow_triangle(rainbow_k3());
  REQUIRE(t);
  CHECK(t->vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(t->kind == WitnessKind::Triangle);
  CHECK_FALSE(find_rainbow_triangle(complete(4, false)));
  CHECK_FALSE(find_rainbow_triangle(proper_bipartite_coloring(3)));
}

TEST_CASE("rainbow_triangle_through examples") {
  const auto t = rainbow_triangle_through(rainbow_k3(), 1);
  REQUIRE(t);
  CHECK(t->vertices == std::vector<Vertex>{1, 0, 2});
  CHECK(validate_witness(rainbow_k3(), *t));
  CHECK_FALSE(rainbow_triangle_through(complete(4, false), 0));
  const auto m = matching_k4();
  for (Vertex v = 0; v < 4; ++v) {
    const auto w = rainbow_triangle_through(m, v);
    REQUIRE(w);
    CHECK(validate_witness(m, *w));
  }
  CHECK_THROWS_AS(rainbow_triangle_through(m, 4), Error);
}

TEST_CASE("every triangle of the matching K4 is rainbow") {
  const auto m = matching_k4();
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b)
      for (Vertex c = b + 1; c < 4; ++c) {
        const auto x = m.color(a, b), y = m.color(b, c), z = m.color(a, c);
        CHECK((x != y && y != z && x != z));
      }
}

TEST_CASE("rainbow_c4_through examples") {
  const auto g = c4(1, 2, 3, 4);
  const auto w = rainbow_c4_through(g, 0);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(validate_witness(g, *w));
  CHECK_FALSE(rainbow_c4_through(c4(1, 2, 1, 2), 0));
  const auto k5 = complete(5, true);
  const auto x = rainbow_c4_through(k5, 3);
  REQUIRE(x);
  CHECK(x->vertices.front() == 3);
  CHECK(validate_witness(k5, *x));
  CHECK_THROWS_AS(rainbow_c4_through(k5, 5), Error);
}

TEST_CASE("longest_rainbow_path examples") {
  const auto path = build_graph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
  auto r = longest_rainbow_path(path, SearchBudget::unlimited());
  CHECK(r.exact);
  CHECK(r.best.length() == 3);
  CHECK(validate_witness(path, r.best));
  CHECK(longest_rainbow_path(complete(4, false), SearchBudget::unlimited()).best.length() == 1);
  r = longest_rainbow_path(complete(5, true), SearchBudget::unlimited());
  CHECK(r.best.length() == 4);
  CHECK(r.exact);
  try {
    longest_rainbow_path(build_graph(3, {}), SearchBudget::unlimited());
    FAIL("expected NoEdges");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoEdges);
  }
}

TEST_CASE("find_rainbow_cycle_at_least examples") {
  auto r = find_rainbow_cycle_at_least(complete(5, true), 4, SearchBudget::unlimited());
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.witness->length() >= 4);
  CHECK(validate_witness(complete(5, true), *r.witness));
  CHECK(find_rainbow_cycle_at_least(complete(5, false), 3, SearchBudget::unlimited()).status ==
        SearchStatus::Absent);
  CHECK(find_rainbow_cycle_at_least(c4(1, 2, 1, 2), 4, SearchBudget::unlimited()).status ==
        SearchStatus::Absent);
  CHECK(find_rainbow_cycle_at_least(complete(5, true), 6, SearchBudget::unlimited()).status ==
        SearchStatus::Absent);
  try {
    find_rainbow_cycle_at_least(complete(5, true), 2, SearchBudget::unlimited());
    FAIL("expected BadK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadK);
  }
}

TEST_CASE("budget exhaustion is reported as indeterminate, never absent") {
  CHECK_THROWS_AS(SearchBudget::nodes(0), Error);
  // Lexical colorings have no rainbow cycle, so a tiny budget cannot close the tree.
  const auto g = lexical_coloring(12, 0, 4);
  const auto full = find_rainbow_cycle_at_least(g, 3, SearchBudget::unlimited());
  CHECK(full.status == SearchStatus::Absent);
  const auto cut = find_rainbow_cycle_at_least(g, 3, SearchBudget::nodes(5));
  CHECK(cut.status == SearchStatus::Indeterminate);
  CHECK_FALSE(cut.witness);

  const auto k9 = complete(9, false);
  const auto p = longest_rainbow_path(random_coloring_complete(14, 30, 2), SearchBudget::nodes(3));
  CHECK_FALSE(p.exact);
  CHECK(longest_rainbow_path(k9, SearchBudget::nodes(1)).best.length() >= 1);
}

TEST_CASE("validate_witness rejects malformed witnesses") {
  const auto k3 = rainbow_k3();
  CHECK(validate_witness(k3, make_witness(k3, WitnessKind::Path, {0, 1, 2})));
  RainbowWitness w = make_witness(k3, WitnessKind::Triangle, {0, 1, 2});
  CHECK(validate_witness(k3, w));
  w.colors[0] = 9;
  CHECK_FALSE(validate_witness(k3, w));
  CHECK_FALSE(validate_witness(k3, RainbowWitness{WitnessKind::C4, {0, 1, 2}, {1, 2, 3}}));
  const auto mono = complete(4, false);
  CHECK_FALSE(validate_witness(mono, RainbowWitness{WitnessKind::Path, {0, 1, 2}, {0, 0}}));
  CHECK_FALSE(validate_witness(c4(1, 2, 3, 4),
                               RainbowWitness{WitnessKind::Path, {0, 2}, {1}}));
}

TEST_CASE("short-cycle detectors agree with naive enumeration on every small coloring") {
  // Rainbow-ness is invariant under renaming colors, so each edge set is
  // walked with canonical colorings only.
  for (std::size_t n = 3; n <= 5; ++n) {
    for_each_canonical_graph(n, 3, [&](const EdgeColoredGraph& g) {
      REQUIRE(find_rainbow_triangle(g).has_value() == oracle::any_rainbow_triangle(g));
      for (Vertex v = 0; v < n; ++v) {
        const auto t = rainbow_triangle_through(g, v);
        REQUIRE(t.has_value() == oracle::triangle_through(g, v));
        if (t) REQUIRE(validate_witness(g, *t));
        const auto q = rainbow_c4_through(g, v);
        REQUIRE(q.has_value() == oracle::c4_through(g, v));
        if (q) REQUIRE(validate_witness(g, *q));
      }
    });
  }
}

TEST_CASE("short-cycle detectors agree with naive enumeration on random graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = oracle::random_graph(rng, n, 0.3 + 0.6 * double(rng() % 100) / 100, 1 + rng() % 6);
    REQUIRE(find_rainbow_triangle(g).has_value() == oracle::any_rainbow_triangle(g));
    const Vertex v = Vertex(rng() % n);
    REQUIRE(rainbow_triangle_through(g, v).has_value() == oracle::triangle_through(g, v));
    REQUIRE(rainbow_c4_through(g, v).has_value() == oracle::c4_through(g, v));
  }
}

TEST_CASE("longest_rainbow_path matches exhaustive enumeration") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const auto g = oracle::random_graph(rng, n, 0.3 + 0.7 * double(rng() % 100) / 100, 1 + rng() % 10);
    if (g.size() == 0) continue;
    const auto r = longest_rainbow_path(g, SearchBudget::unlimited());
    REQUIRE(r.exact);
    REQUIRE(validate_witness(g, r.best));
    REQUIRE(r.best.kind == WitnessKind::Path);
    REQUIRE(r.best.length() == oracle::longest_rainbow_path(g));
  }
}

TEST_CASE("find_rainbow_cycle_at_least matches exhaustive enumeration and is monotone") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = oracle::random_graph(rng, n, 0.4 + 0.6 * double(rng() % 100) / 100, 1 + rng() % 8);
    bool previous = true;
    for (std::size_t k = 3; k <= n + 1; ++k) {
      const auto r = find_rainbow_cycle_at_least(g, k, SearchBudget::unlimited());
      REQUIRE(r.status != SearchStatus::Indeterminate);
      const bool found = r.status == SearchStatus::Found;
      REQUIRE(found == oracle::rainbow_cycle_at_least(g, k));
      if (found) {
        REQUIRE(validate_witness(g, *r.witness));
        REQUIRE(r.witness->length() >= k);
      }
      REQUIRE((previous || !found));
      previous = found;
    }
    const bool any3 = find_rainbow_cycle_at_least(g, 3, SearchBudget::unlimited()).status ==
                      SearchStatus::Found;
    const bool longer = find_rainbow_cycle_at_least(g, 4, SearchBudget::unlimited()).status ==
                        SearchStatus::Found;
    REQUIRE(any3 == (find_rainbow_triangle(g).has_value() || longer));
  }
}

TEST_CASE("searches are deterministic") {
  const auto g = random_coloring_complete(9, 12, 77);
  CHECK(longest_rainbow_path(g, SearchBudget::unlimited()).best ==
        longest_rainbow_path(g, SearchBudget::unlimited()).best);
  CHECK(find_rainbow_cycle_at_least(g, 6, SearchBudget::unlimited()).witness ==
        find_rainbow_cycle_at_least(g, 6, SearchBudget::unlimited()).witness);
}
