#include "rainbow/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>

#include "rainbow/colordeg.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

GenSpec trial_spec(const GenSpec& base, std::size_t trial) {
  GenSpec spec = base;
  spec.seed = mix_seed(base.seed, trial);
  return spec;
}

namespace {

struct TrialOutcome {
  bool hypothesis = false;
  Verdict verdict = Verdict::Indeterminate;
  std::uint64_t seed = 0;
  std::string ecg;
  std::string note;
  std::exception_ptr error;
};

TrialOutcome evaluate_trial(const CampaignConfig& config, std::size_t trial) {
  TrialOutcome out;
  try {
    const GenSpec spec = trial_spec(config.generator, trial);
    out.seed = spec.seed;
    const EdgeColoredGraph g = generate(spec);
    out.hypothesis = check_hypothesis(g, config.theorem, config.params);
    if (!out.hypothesis) return out;
    ConclusionOutcome c = check_conclusion(g, config.theorem, config.params, config.budget);
    out.verdict = c.verdict;
    if (c.verdict == Verdict::Violated) {
      out.ecg = serialize_ecg(g);
      out.note = std::move(c.note);
    }
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

void validate(const CampaignConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::BadParams, "trials must be at least 1");
  require_params(config.theorem, config.params);
}

TheoremReport merge(const CampaignConfig& config, std::vector<TrialOutcome>& outcomes) {
  TheoremReport r;
  r.theorem = config.theorem;
  r.params = config.params;
  r.generator = config.generator;
  r.trials = config.trials;
  r.budget = config.budget.node_limit;
  r.base_seed = config.generator.seed;
  for (TrialOutcome& o : outcomes) {
    if (o.error) std::rethrow_exception(o.error);
    if (!o.hypothesis) continue;
    ++r.hypothesis_met;
    switch (o.verdict) {
      case Verdict::Verified: ++r.verified; break;
      case Verdict::Indeterminate: ++r.indeterminate; break;
      case Verdict::Violated:
        r.violations.push_back({o.seed, std::move(o.ecg), std::move(o.note)});
        break;
    }
  }
  return r;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

TheoremReport run_campaign_serial(const CampaignConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(config.trials);
  for (std::size_t i = 0; i < config.trials; ++i) outcomes[i] = evaluate_trial(config, i);
  TheoremReport r = merge(config, outcomes);
  r.timing_ms = elapsed_ms(start);
  return r;
}

TheoremReport run_campaign(const CampaignConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(config.trials);
  const auto trials = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(config.jobs))
  for (std::int64_t i = 0; i < trials; ++i) {
    outcomes[static_cast<std::size_t>(i)] = evaluate_trial(config, static_cast<std::size_t>(i));
  }
  TheoremReport r = merge(config, outcomes);
  r.timing_ms = elapsed_ms(start);
  return r;
}

TheoremParams default_params(TheoremId id) {
  TheoremParams p;
  switch (id) {
    case TheoremId::MAIN_COMPLETE: p.k = 6; break;
    case TheoremId::LONGCYC_TANGJAI_FIXED: p.k = 5; break;
    case TheoremId::CONJ_CKRY: p.k = 4; break;
    case TheoremId::PATH_LB: p.t = 7; break;
    default: break;
  }
  return p;
}

GenSpec default_generator(TheoremId id, const TheoremParams& params, std::size_t n,
                          std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::TargetedDelta;
  spec.n = n;
  spec.seed = seed;
  const std::size_t k = params.k.value_or(0);
  std::size_t t = 1;
  switch (id) {
    case TheoremId::RT_HALF: t = n / 2 + 1; break;
    case TheoremId::RT_EXCEPT: t = (n + 1) / 2; break;
    case TheoremId::RT_COMPLETE_VERTEX: t = (n + 2) / 2; break;
    case TheoremId::RT_VERTEX: t = (3 * n - 3) / 4 + 1; break;
    case TheoremId::C4_TRIFREE:
      spec.family = Family::ProperBipartite;
      spec.n = std::max<std::size_t>(n / 2, 1);
      return spec;
    case TheoremId::C4_VERTEX: t = 3 * n / 4 + 1; break;
    case TheoremId::LONGCYC_LW: t = params.d.value_or((3 * n + 7) / 4); break;
    case TheoremId::LONGCYC_CKRY_ORIG: t = (n + 4) / 2 + 1; break;
    case TheoremId::LONGCYC_CKRY_FIXED: t = (n + 5) / 2 + 1; break;
    case TheoremId::LONGCYC_TANGJAI_FIXED: t = (n + 3 * k - 3) / 2 + 1; break;
    case TheoremId::MAIN_COMPLETE: t = (n - 1 + 2 * k) / 2 + 1; break;
    case TheoremId::PATH_LB: t = params.t.value_or(7); break;
    case TheoremId::CONJ_CKRY: t = (n + k) / 2 + 1; break;
  }
  spec.target_delta = std::clamp<std::size_t>(t, 1, n > 1 ? n - 1 : 1);
  return spec;
}

// ---------------------------------------------------------------------------
// Mining

namespace {

struct MiningChunk {
  std::size_t instances = 0;
  std::size_t hypothesis_met = 0;
  std::size_t verified = 0;
  std::size_t indeterminate = 0;
  std::vector<Violation> violations;
  TightnessProbe tightness;
  std::exception_ptr error;

  void absorb(MiningChunk&& other) {
    instances += other.instances;
    hypothesis_met += other.hypothesis_met;
    verified += other.verified;
    indeterminate += other.indeterminate;
    for (Violation& v : other.violations) violations.push_back(std::move(v));
    if (other.tightness.found &&
        (!tightness.found || other.tightness.max_color_degree > tightness.max_color_degree)) {
      tightness = std::move(other.tightness);
    }
  }
};

void mine_instance(const MiningConfig& config, const EdgeColoredGraph& g, std::uint64_t seed,
                   const std::string& origin, MiningChunk& chunk) {
  ++chunk.instances;
  const HypothesisStatus h = evaluate_hypothesis(g, config.theorem, config.params);
  if (!h.side_conditions) return;
  const ConclusionOutcome c = check_conclusion(g, config.theorem, config.params, config.budget);
  if (c.verdict == Verdict::Violated) {
    const std::size_t delta = g.order() ? min_color_degree(g) : 0;
    if (!chunk.tightness.found || delta > chunk.tightness.max_color_degree) {
      chunk.tightness = {true, delta, g.order(), serialize_ecg(g)};
    }
  }
  if (!h.degree_condition) return;
  ++chunk.hypothesis_met;
  switch (c.verdict) {
    case Verdict::Verified: ++chunk.verified; break;
    case Verdict::Indeterminate: ++chunk.indeterminate; break;
    case Verdict::Violated:
      chunk.violations.push_back({seed, serialize_ecg(g), origin + ": " + c.note});
      break;
  }
}

struct ExhaustiveLayer {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

MiningChunk mine_mask(const MiningConfig& config, const ExhaustiveLayer& layer,
                      std::uint64_t mask) {
  MiningChunk chunk;
  try {
    std::vector<std::pair<Vertex, Vertex>> present;
    for (std::size_t i = 0; i < layer.pairs.size(); ++i) {
      if (mask >> i & 1) present.push_back(layer.pairs[i]);
    }
    const std::string origin =
        "exhaustive n=" + std::to_string(layer.n) + " mask=" + std::to_string(mask);
    std::vector<ColoredEdge> edges(present.size());
    for_each_canonical_coloring(present.size(), config.palette_max,
                                [&](const std::vector<Color>& colors) {
                                  for (std::size_t i = 0; i < present.size(); ++i) {
                                    edges[i] = {present[i].first, present[i].second, colors[i]};
                                  }
                                  mine_instance(config, build_graph(layer.n, edges), mask, origin,
                                                chunk);
                                });
  } catch (...) {
    chunk.error = std::current_exception();
  }
  return chunk;
}

MiningChunk mine_random_trial(const MiningConfig& config, std::size_t trial) {
  MiningChunk chunk;
  try {
    const std::uint64_t seed = mix_seed(config.seed, trial);
    const std::size_t span = config.n_max - config.n_min + 1;
    const std::size_t n = config.n_min + static_cast<std::size_t>(seed % span);
    const std::size_t palette = 1 + static_cast<std::size_t>((seed >> 16) % config.palette_max);
    const EdgeColoredGraph g = random_coloring_gnp(n, config.edge_probability, palette, seed);
    mine_instance(config, g, seed, "random trial " + std::to_string(trial), chunk);
  } catch (...) {
    chunk.error = std::current_exception();
  }
  return chunk;
}

void validate(const MiningConfig& config) {
  require_params(config.theorem, config.params);
  if (config.n_min < 1 || config.n_min > config.n_max || config.palette_max < 1) {
    throw Error(ErrorCode::BadParams, "need 1 <= n_min <= n_max and palette_max >= 1");
  }
  if (config.mode == MiningMode::Exhaustive && (config.n_max > 6 || config.palette_max > 4)) {
    throw Error(ErrorCode::SpaceTooLarge, "exhaustive mining is limited to n <= 6, palette <= 4");
  }
  if (config.mode == MiningMode::Random && config.trials < 1) {
    throw Error(ErrorCode::BadParams, "random mining needs trials >= 1");
  }
}

ExhaustiveLayer make_layer(std::size_t n) {
  ExhaustiveLayer layer{n, {}};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) layer.pairs.push_back({u, v});
  }
  return layer;
}

MiningReport finish(const MiningConfig& config, std::vector<MiningChunk>& chunks,
                    std::chrono::steady_clock::time_point start) {
  MiningChunk total;
  for (MiningChunk& c : chunks) {
    if (c.error) std::rethrow_exception(c.error);
    total.absorb(std::move(c));
  }
  MiningReport r;
  r.config = config;
  r.instances = total.instances;
  r.hypothesis_met = total.hypothesis_met;
  r.verified = total.verified;
  r.indeterminate = total.indeterminate;
  r.violations = std::move(total.violations);
  r.tightness = std::move(total.tightness);
  r.timing_ms = elapsed_ms(start);
  return r;
}

template <bool Parallel>
MiningReport mine(const MiningConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<MiningChunk> chunks;

  if (config.mode == MiningMode::Random) {
    chunks.resize(config.trials);
    const auto trials = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(config.jobs)) if (Parallel)
    for (std::int64_t i = 0; i < trials; ++i) {
      chunks[static_cast<std::size_t>(i)] =
          mine_random_trial(config, static_cast<std::size_t>(i));
    }
    return finish(config, chunks, start);
  }

  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    const ExhaustiveLayer layer = make_layer(n);
    const auto masks = std::int64_t{1} << layer.pairs.size();
    const std::size_t offset = chunks.size();
    chunks.resize(offset + static_cast<std::size_t>(masks));
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(config.jobs)) if (Parallel)
    for (std::int64_t mask = 0; mask < masks; ++mask) {
      chunks[offset + static_cast<std::size_t>(mask)] =
          mine_mask(config, layer, static_cast<std::uint64_t>(mask));
    }
  }
  return finish(config, chunks, start);
}

}  // namespace

MiningReport mine_counterexamples(const MiningConfig& config) { return mine<true>(config); }

MiningReport mine_counterexamples_serial(const MiningConfig& config) {
  return mine<false>(config);
}

}  // namespace rainbow
