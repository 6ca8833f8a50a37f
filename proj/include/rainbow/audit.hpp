#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/detectors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct AuditCheck {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

// lhs >= middle >= rhs when `middle` is present, lhs >= rhs otherwise.
struct InequalityCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::optional<std::int64_t> middle;
  std::int64_t rhs = 0;
  bool holds = true;
};

// Everything derived from a complete graph G, a rainbow path P = u1..up and a
// cycle-length bound k. Path positions below are 1-based and all named
// segments are forward index ranges; a range with start > end is empty.
struct PathAuditReport {
  RainbowWitness path;      // as audited; reversed when the end-chord case demands it
  std::size_t k = 0;
  bool reversed = false;
  bool applicable = false;  // G certified free of rainbow cycles of length >= k
  SearchStatus long_cycle = SearchStatus::Indeterminate;
  std::optional<bool> path_is_longest;  // nullopt: search budget ran out
  std::size_t longest_length = 0;

  ColorSet a1, a2, b1, b2, b3, c0, c1, c2;
  VertexSet d;
  int eps1 = 0;
  int eps2 = 0;
  int eps3 = 0;

  std::vector<AuditCheck> lemma_checks;
  std::vector<AuditCheck> claim_checks;
  std::vector<InequalityCheck> inequalities;
  std::vector<std::string> notes;

  // True when no applicable lemma or claim check failed.
  bool checks_pass() const;
  std::size_t applicable_checks() const;
};

// Throws BadK (k < 3), NotComplete, NotAPath, NotRainbow, PathTooShort (p < 2k-1).
// `budget` bounds each of the two certification searches (long cycle, longest path).
PathAuditReport audit_path(const EdgeColoredGraph& g, const RainbowWitness& path, std::size_t k,
                           SearchBudget budget = SearchBudget::unlimited());

}  // namespace rainbow
