#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/detectors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class TheoremId {
  RT_HALF,               // delta^c > n/2 => rainbow triangle
  RT_EXCEPT,             // degree sum or delta^c >= n/2 outside K_{n/2,n/2}, K4, K4-e
  RT_COMPLETE_VERTEX,    // complete, delta^c >= (n+1)/2 => every vertex on a rainbow triangle
  RT_VERTEX,             // delta^c > (3n-3)/4 => every vertex on a rainbow triangle
  C4_TRIFREE,            // triangle-free, delta^c > n/3 + 1 => rainbow C4
  C4_VERTEX,             // delta^c > 3n/4 => every vertex on a rainbow C4
  LONGCYC_LW,            // delta^c >= d >= 3n/4 + 1 => rainbow cycle >= d - 3n/4 + 2
  LONGCYC_CKRY_ORIG,     // delta^c > n/2 + 2 => rainbow cycle >= 4 (mining target)
  LONGCYC_CKRY_FIXED,    // delta^c > (n+5)/2 => rainbow cycle >= 4
  LONGCYC_TANGJAI_FIXED, // no rainbow C4, delta^c > (n+3k-3)/2, k >= 5 => rainbow cycle >= k
  MAIN_COMPLETE,         // complete, k > 5, n >= 8k-18, delta^c > (n-1)/2 + k => cycle >= k
  PATH_LB,               // delta^c >= t >= 7 => rainbow path of length >= ceil(2t/3) + 1
  CONJ_CKRY,             // delta^c > (n+k)/2 => rainbow cycle >= k (mining target)
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::RT_HALF,           TheoremId::RT_EXCEPT,          TheoremId::RT_COMPLETE_VERTEX,
    TheoremId::RT_VERTEX,         TheoremId::C4_TRIFREE,         TheoremId::C4_VERTEX,
    TheoremId::LONGCYC_LW,        TheoremId::LONGCYC_CKRY_ORIG,  TheoremId::LONGCYC_CKRY_FIXED,
    TheoremId::LONGCYC_TANGJAI_FIXED, TheoremId::MAIN_COMPLETE,  TheoremId::PATH_LB,
    TheoremId::CONJ_CKRY,
};

std::string_view to_string(TheoremId id);
TheoremId theorem_from_string(std::string_view name);  // throws UnknownName

// Targets whose statements are not known to hold; campaigns report on them
// but nothing should assert their conclusion.
bool is_mining_target(TheoremId id);

struct TheoremParams {
  std::optional<std::size_t> k;
  std::optional<std::size_t> t;
  std::optional<std::size_t> d;
};

// Throws MissingParam when `id` needs a parameter that `params` lacks.
void require_params(TheoremId id, const TheoremParams& params);

struct HypothesisStatus {
  bool side_conditions = false;  // order, completeness, triangle/C4-freeness, k ranges
  bool degree_condition = false; // the color-degree inequality itself
  bool met() const { return side_conditions && degree_condition; }
};

// Exact integer arithmetic throughout; every inequality is strict or not
// exactly as the statement prints it.
HypothesisStatus evaluate_hypothesis(const EdgeColoredGraph& g, TheoremId id,
                                     const TheoremParams& params);
bool check_hypothesis(const EdgeColoredGraph& g, TheoremId id, const TheoremParams& params);

enum class Verdict { Verified, Violated, Indeterminate };
std::string_view to_string(Verdict v);

struct ConclusionOutcome {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<RainbowWitness> witness;
  std::string note;  // for Violated: what was certified absent
  std::uint64_t nodes = 0;
};

ConclusionOutcome check_conclusion(const EdgeColoredGraph& g, TheoremId id,
                                   const TheoremParams& params, SearchBudget budget);

// Length (in edges) the conclusion asks for, where it is a cycle or path bound.
std::optional<std::size_t> required_length(const EdgeColoredGraph& g, TheoremId id,
                                           const TheoremParams& params);

// K4, K4 - e, or K_{n/2,n/2} as an uncolored graph.
bool is_triangle_exception_shape(const EdgeColoredGraph& g);

}  // namespace rainbow
