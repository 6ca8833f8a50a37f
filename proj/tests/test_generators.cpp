#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rainbow/colordeg.hpp"
#include "rainbow/detectors.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("uniform_below stays in range and mix_seed spreads") {
  Rng rng(1);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 200; ++i) CHECK(uniform_below(rng, bound) < bound);
  }
  for (int i = 0; i < 200; ++i) {
    const double x = uniform_unit(rng);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(1, 0) != mix_seed(0, 1));
  CHECK(mix_seed(42, 7) == mix_seed(42, 7));
}

TEST_CASE("random_coloring_complete") {
  const auto g = random_coloring_complete(5, 10, 123);
  CHECK(g.order() == 5);
  CHECK(g.size() == 10);
  CHECK(g.is_complete());
  for (const auto& e : g.edges()) {
    CHECK(e.color >= 0);
    CHECK(e.color < 10);
  }
  const auto mono = random_coloring_complete(6, 1, 9);
  CHECK(min_color_degree(mono) == 1);
  CHECK(random_coloring_complete(8, 5, 77) == random_coloring_complete(8, 5, 77));
  CHECK_FALSE(random_coloring_complete(8, 5, 77) == random_coloring_complete(8, 5, 78));
  CHECK(code_of([] { random_coloring_complete(1, 3, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { random_coloring_complete(4, 0, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("random_coloring_complete output is pinned") {
  // Guards the documented generator: mt19937_64 plus rejection sampling.
  CHECK(serialize_ecg(random_coloring_complete(4, 3, 2024)) == golden("complete_n4_palette3_seed2024.ecg"));
}

TEST_CASE("large palettes give high color degree on K30") {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    hits += min_color_degree(random_coloring_complete(30, 500, seed)) >= 21;
  }
  // Measured frequency: 100 of 100 seeds.
  CHECK(hits == 100);
}

TEST_CASE("random_coloring_gnp") {
  const auto g = random_coloring_gnp(20, 0.3, 4, 5);
  CHECK(g.order() == 20);
  CHECK(g.size() > 0);
  CHECK(g.size() < 190);
  CHECK(random_coloring_gnp(10, 0.0, 3, 1).size() == 0);
  CHECK(random_coloring_gnp(10, 1.0, 3, 1).is_complete());
  CHECK(code_of([] { random_coloring_gnp(5, 1.5, 3, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { random_coloring_gnp(5, 0.5, 0, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("proper_bipartite_coloring") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto g = proper_bipartite_coloring(m);
    CHECK(g.order() == 2 * m);
    CHECK(g.size() == m * m);
    for (Vertex v = 0; v < 2 * m; ++v) CHECK(color_degree(g, v) == m);
    CHECK_FALSE(find_rainbow_triangle(g));
    CHECK_FALSE(has_triangle(g));
  }
  CHECK(proper_bipartite_coloring(1) == build_graph(2, {{0, 1, 0}}));
  CHECK(code_of([] { proper_bipartite_coloring(0); }) == ErrorCode::BadParams);
}

TEST_CASE("matching_k4") {
  const auto g = matching_k4();
  CHECK(g.is_complete());
  CHECK(g.palette().size() == 3);
  CHECK(min_color_degree(g) == 3);
}

TEST_CASE("targeted_min_color_degree meets its target") {
  CHECK(min_color_degree(targeted_min_color_degree(9, 7, 1)) >= 7);
  CHECK(targeted_min_color_degree(6, 1, 3).is_complete());
  for (std::size_t n = 2; n <= 24; n += 2) {
    for (std::size_t t = 1; t < n; t += 3) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = targeted_min_color_degree(n, t, seed * 31 + n);
        REQUIRE(g.is_complete());
        REQUIRE(min_color_degree(g) >= t);
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = targeted_min_color_degree(30, 21, seed);
    REQUIRE(min_color_degree(g) >= 21);
    // 21 > (30 - 1)/2 + 6, the large-cycle hypothesis for k = 6.
    REQUIRE(2 * 21 > 29 + 2 * 6);
  }
  CHECK(targeted_min_color_degree(12, 9, 4) == targeted_min_color_degree(12, 9, 4));
  CHECK(code_of([] { targeted_min_color_degree(5, 5, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { targeted_min_color_degree(5, 0, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("lexical_coloring has a rainbow Hamilton path and no rainbow cycle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = lexical_coloring(8, 0, seed);
    CHECK(g.is_complete());
    CHECK(find_rainbow_cycle_at_least(g, 3, SearchBudget::unlimited()).status ==
          SearchStatus::Absent);
    CHECK(longest_rainbow_path(g, SearchBudget::unlimited()).best.length() == 7);
  }
  CHECK(lexical_coloring(9, 3, 2) == lexical_coloring(9, 3, 2));
}

TEST_CASE("generate dispatches by family") {
  GenSpec spec;
  spec.family = Family::ProperBipartite;
  spec.n = 3;
  CHECK(generate(spec) == proper_bipartite_coloring(3));
  spec = {};
  spec.family = Family::TargetedDelta;
  spec.n = 10;
  spec.target_delta = 8;
  spec.seed = 5;
  CHECK(generate(spec) == targeted_min_color_degree(10, 8, 5));
  spec.family = Family::MatchingK4;
  CHECK(generate(spec) == matching_k4());
  for (Family f : {Family::CompleteRandom, Family::GnpRandom, Family::ProperBipartite,
                   Family::MatchingK4, Family::TargetedDelta, Family::Lexical}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK(code_of([] { family_from_string("nope"); }) == ErrorCode::UnknownName);
}

TEST_CASE("canonical_colors renames by first occurrence") {
  const auto g = build_graph(3, {{0, 1, 9}, {1, 2, 4}, {0, 2, 9}});
  CHECK(canonical_colors(g) == build_graph(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 0}}));
  CHECK(canonical_colors(canonical_colors(g)) == canonical_colors(g));
}

TEST_CASE("for_each_canonical_coloring counts restricted growth strings") {
  // Bell-number prefix sums: colorings of e slots using at most r colors.
  auto count = [](std::size_t e, std::size_t r) {
    std::size_t c = 0;
    for_each_canonical_coloring(e, r, [&](const std::vector<Color>&) { ++c; });
    return c;
  };
  CHECK(count(0, 3) == 1);
  CHECK(count(3, 3) == 5);
  CHECK(count(4, 4) == 15);
  CHECK(count(6, 6) == 203);
  CHECK(count(5, 2) == 16);
  CHECK(count(4, 1) == 1);
  std::size_t bad = 0;
  for_each_canonical_coloring(6, 3, [&](const std::vector<Color>& c) {
    Color mx = -1;
    for (Color x : c) {
      if (x > mx + 1 || x >= 3) ++bad;
      mx = std::max(mx, x);
    }
  });
  CHECK(bad == 0);
}

TEST_CASE("mine_k4_exceptions") {
  const auto found = mine_k4_exceptions();
  REQUIRE_FALSE(found.empty());
  bool has_k4 = false;
  for (const auto& g : found) {
    CHECK(min_color_degree(g) >= 2);
    CHECK_FALSE(find_rainbow_triangle(g));
    has_k4 = has_k4 || g.is_complete();
  }
  CHECK(has_k4);
}
