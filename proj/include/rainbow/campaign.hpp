#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/detectors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/theorems.hpp"

namespace rainbow {

struct Violation {
  std::uint64_t seed = 0;
  std::string ecg;
  std::string note;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CampaignConfig {
  TheoremId theorem = TheoremId::RT_HALF;
  TheoremParams params;
  GenSpec generator;  // generator.seed is the base seed
  std::size_t trials = 1;
  SearchBudget budget;
  int jobs = 0;  // 0: OpenMP default
};

struct TheoremReport {
  TheoremId theorem = TheoremId::RT_HALF;
  TheoremParams params;
  GenSpec generator;
  std::size_t trials = 0;
  std::size_t hypothesis_met = 0;
  std::size_t verified = 0;
  std::size_t indeterminate = 0;
  std::vector<Violation> violations;
  std::uint64_t budget = 0;
  std::uint64_t base_seed = 0;
  std::int64_t timing_ms = 0;

  bool conserved() const { return hypothesis_met == verified + indeterminate + violations.size(); }
};

// Seed of trial i: mix_seed(base, i). Families without randomness ignore it.
GenSpec trial_spec(const GenSpec& base, std::size_t trial);

// Trials are evaluated by an OpenMP worker pool and merged in trial order, so
// the report equals run_campaign_serial's. Throws BadParams, MissingParam.
TheoremReport run_campaign(const CampaignConfig& config);
TheoremReport run_campaign_serial(const CampaignConfig& config);

// A generator whose instances meet the theorem's degree condition at order n.
GenSpec default_generator(TheoremId id, const TheoremParams& params, std::size_t n,
                          std::uint64_t seed);
TheoremParams default_params(TheoremId id);

enum class MiningMode { Exhaustive, Random };

struct MiningConfig {
  TheoremId theorem = TheoremId::RT_HALF;
  TheoremParams params;
  std::size_t n_min = 3;
  std::size_t n_max = 5;
  std::size_t palette_max = 3;
  MiningMode mode = MiningMode::Exhaustive;
  std::size_t trials = 1000;  // random mode
  double edge_probability = 1.0;  // random mode
  std::uint64_t seed = 0;
  SearchBudget budget;
  int jobs = 0;
};

// Largest delta^c among instances meeting the side conditions whose
// conclusion was certified to fail, whatever the degree condition said.
struct TightnessProbe {
  bool found = false;
  std::size_t max_color_degree = 0;
  std::size_t n = 0;
  std::string ecg;

  friend bool operator==(const TightnessProbe&, const TightnessProbe&) = default;
};

struct MiningReport {
  MiningConfig config;
  std::size_t instances = 0;
  std::size_t hypothesis_met = 0;
  std::size_t verified = 0;
  std::size_t indeterminate = 0;
  std::vector<Violation> violations;
  TightnessProbe tightness;
  std::int64_t timing_ms = 0;
};

// Exhaustive mode walks every labeled graph on n in [n_min, n_max] vertices
// with every coloring of at most palette_max colors, colors canonicalized.
// It is limited to n <= 6 and palette_max <= 4 (SpaceTooLarge otherwise).
MiningReport mine_counterexamples(const MiningConfig& config);
MiningReport mine_counterexamples_serial(const MiningConfig& config);

}  // namespace rainbow
