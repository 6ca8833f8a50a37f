#include "rainbow/audit.hpp"

#include <algorithm>
#include <map>

#include "rainbow/colordeg.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

bool PathAuditReport::checks_pass() const {
  auto ok = [](const AuditCheck& c) { return !c.applicable || c.passed; };
  return std::all_of(lemma_checks.begin(), lemma_checks.end(), ok) &&
         std::all_of(claim_checks.begin(), claim_checks.end(), ok);
}

std::size_t PathAuditReport::applicable_checks() const {
  auto count = [](const std::vector<AuditCheck>& v) {
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](const AuditCheck& c) { return c.applicable; }));
  };
  return count(lemma_checks) + count(claim_checks);
}

namespace {

using Pos = std::int64_t;

std::string set_text(const ColorSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// 1-based view of a rainbow path inside a complete graph.
class PathView {
 public:
  PathView(const EdgeColoredGraph& g, std::vector<Vertex> vertices)
      : g_(g), vs_(std::move(vertices)) {
    for (std::size_t i = 0; i + 1 < vs_.size(); ++i) {
      edge_of_color_[g_.color(vs_[i], vs_[i + 1])] = static_cast<Pos>(i + 1);
    }
  }

  Pos p() const { return static_cast<Pos>(vs_.size()); }
  Vertex at(Pos i) const { return vs_[static_cast<std::size_t>(i - 1)]; }
  Color chord(Pos i, Pos j) const { return g_.color(at(i), at(j)); }

  // C(u_end, u_a P u_b) over the forward range a..b clipped to nothing when void.
  ColorSet to_segment(Pos end, Pos a, Pos b) const {
    std::vector<Color> out;
    if (a < 1 || b > p() || a > b) return {};
    for (Pos i = a; i <= b; ++i) {
      if (i != end) out.push_back(chord(end, i));
    }
    return ColorSet(std::move(out));
  }

  // Is color c on an edge of the sub-path between positions a and b?
  bool along_contains(Pos a, Pos b, Color c) const {
    if (a > b) std::swap(a, b);
    auto it = edge_of_color_.find(c);
    return it != edge_of_color_.end() && it->second >= a && it->second < b;
  }

  VertexSet off_path() const {
    return complement_vertices(g_, VertexSet(vs_.begin(), vs_.end()));
  }

  ColorSet to_path(Pos end) const { return to_segment(end, 1, p()); }

 private:
  const EdgeColoredGraph& g_;
  std::vector<Vertex> vs_;
  std::map<Color, Pos> edge_of_color_;  // edge i joins u_i and u_{i+1}
};

bool end_chord_forward(const PathView& pv, Pos k, ColorSet* seen) {
  const ColorSet s = pv.to_segment(1, k, pv.p() - (k - 2));
  if (seen) *seen = s;
  return s == ColorSet{pv.chord(1, pv.p())};
}

AuditCheck far_chord_check(const PathView& pv, Pos k) {
  AuditCheck c{"far_chord_color_on_prefix", false, true, ""};
  for (Pos i = k; i <= pv.p(); ++i) {
    const Color a = pv.chord(1, i);
    if (!pv.along_contains(1, i, a)) {
      c.passed = false;
      c.detail = "c(u1 u" + std::to_string(i) + ")=" + std::to_string(a) +
                 " not on u1..u" + std::to_string(i);
      return c;
    }
  }
  return c;
}

AuditCheck long_chord_check(const PathView& pv, Pos k) {
  AuditCheck c{"long_chord_color_on_segment", false, true, ""};
  for (Pos s = 1; s <= pv.p(); ++s) {
    for (Pos t = s + (k - 1); t <= pv.p(); ++t) {
      if (!pv.along_contains(s, t, pv.chord(s, t))) {
        c.passed = false;
        c.detail = "c(u" + std::to_string(s) + " u" + std::to_string(t) + ") off its segment";
        return c;
      }
    }
  }
  return c;
}

AuditCheck endpoint_overlap_check(const PathView& pv, Pos k) {
  AuditCheck c{"endpoint_color_overlap", false, true, ""};
  const Pos p = pv.p();
  for (Pos s = 1; s <= k - 1; ++s) {
    const Pos t = k - s;
    const ColorSet x = pv.to_segment(1, k, p - (t - 1));
    const ColorSet y = pv.to_segment(p, s, p - (k - 1));
    const ColorSet both = set_intersection(x, y);
    if (both.size() > 1) {
      c.passed = false;
      c.detail = "s=" + std::to_string(s) + " t=" + std::to_string(t) + " overlap " +
                 set_text(both);
      return c;
    }
  }
  return c;
}

AuditCheck nested_chord_check(const PathView& pv, Pos k) {
  AuditCheck c{"nested_chord_equal", false, true, ""};
  const Pos p = pv.p();
  for (Pos s = 1; s <= p; ++s) {
    for (Pos t = s + (2 * k - 3); t <= p; ++t) {
      const Color outer = pv.chord(s, t);
      const Pos max_inner = (t - s) - (k - 2);
      for (Pos a = s; a <= t; ++a) {
        for (Pos b = a + (k - 1); b <= t && b - a <= max_inner; ++b) {
          if (!pv.along_contains(a, b, outer)) continue;
          if (pv.chord(a, b) != outer) {
            c.passed = false;
            c.detail = "outer (u" + std::to_string(s) + ",u" + std::to_string(t) +
                       ") inner (u" + std::to_string(a) + ",u" + std::to_string(b) + ")";
            return c;
          }
        }
      }
    }
  }
  return c;
}

AuditCheck bounded_size(std::string name, std::size_t size, std::size_t limit,
                        const std::string& what) {
  AuditCheck c{std::move(name), false, size <= limit, ""};
  if (!c.passed) c.detail = what + " has size " + std::to_string(size);
  return c;
}

InequalityCheck inequality(std::string name, std::int64_t lhs, std::optional<std::int64_t> mid,
                           std::int64_t rhs) {
  const bool holds = mid ? (lhs >= *mid && *mid >= rhs) : lhs >= rhs;
  return {std::move(name), lhs, mid, rhs, holds};
}

std::int64_t sz(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

PathAuditReport audit_path(const EdgeColoredGraph& g, const RainbowWitness& path, std::size_t k,
                           SearchBudget budget) {
  if (k < 3) throw Error(ErrorCode::BadK, "k must be at least 3");
  if (!g.is_complete()) throw Error(ErrorCode::NotComplete, "audit requires a complete graph");

  std::vector<Vertex> vs = path.vertices;
  for (Vertex v : vs) g.check_vertex(v);
  {
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::NotAPath, "path repeats a vertex");
    }
  }
  const RainbowWitness as_path = make_witness(g, WitnessKind::Path, vs);
  if (!validate_witness(g, as_path)) throw Error(ErrorCode::NotRainbow, "path is not rainbow");
  if (vs.size() < 2 * k - 1) {
    throw Error(ErrorCode::PathTooShort, "path has " + std::to_string(vs.size()) +
                                             " vertices, need at least " +
                                             std::to_string(2 * k - 1));
  }

  PathAuditReport r;
  r.k = k;

  const CycleSearchResult cycle = find_rainbow_cycle_at_least(g, k, budget);
  r.long_cycle = cycle.status;
  r.applicable = cycle.status == SearchStatus::Absent;
  if (cycle.status == SearchStatus::Found) {
    r.notes.push_back("audit not applicable: G has a rainbow cycle of length >= k");
  } else if (cycle.status == SearchStatus::Indeterminate) {
    r.notes.push_back("audit not applicable: long-cycle search exhausted its budget");
  }

  const PathSearchResult longest = longest_rainbow_path(g, budget);
  r.longest_length = longest.best.length();
  if (as_path.length() >= r.longest_length) {
    r.path_is_longest = true;
  } else if (longest.exact) {
    r.path_is_longest = false;
  }

  const Pos kk = static_cast<Pos>(k);

  // The end-chord check reads the path as given; the remaining sets use the
  // orientation in which the first alternative holds.
  AuditCheck end_chord{"end_chord_uniform", false, true, ""};
  {
    PathView pv(g, vs);
    const Pos p = pv.p();
    ColorSet first;
    const bool forward = end_chord_forward(pv, kk, &first);
    const ColorSet second = pv.to_segment(p, kk - 2, p - (kk - 1));
    const bool backward = second == ColorSet{pv.chord(1, p)};
    end_chord.passed = forward || backward;
    if (!end_chord.passed) {
      end_chord.detail = "c(u1 up)=" + std::to_string(pv.chord(1, p)) + ", C(u1, uk..)=" +
                         set_text(first) + ", C(up, ..)=" + set_text(second);
    }
    if (first.size() != 1 || second.size() != 1) {
      r.notes.push_back("end-chord color sets read as singletons: C(u1, uk..)=" +
                        set_text(first) + " C(up, ..)=" + set_text(second));
    }
    if (!forward) {
      std::vector<Vertex> rev(vs.rbegin(), vs.rend());
      PathView back(g, rev);
      if (end_chord_forward(back, kk, nullptr)) {
        vs = std::move(rev);
        r.reversed = true;
      }
    }
  }

  const PathView pv(g, vs);
  const Pos p = pv.p();
  const bool oriented = end_chord_forward(pv, kk, nullptr);
  r.path = make_witness(g, WitnessKind::Path, vs);

  const Color c12 = pv.chord(1, 2);
  const Color c1p = pv.chord(1, p);
  const Color cpp = pv.chord(p, p - 1);

  r.a1 = pv.to_segment(1, kk, p - 1);
  r.a2 = pv.to_segment(1, 2, kk - 1);
  r.b1 = pv.to_segment(p, kk - 2, p - (kk - 1));
  r.b2 = pv.to_segment(p, 2, kk - 3);
  r.b3 = pv.to_segment(p, p - (kk - 2), p - 1);

  const VertexSet off = pv.off_path();
  const VertexSet first_end{pv.at(1)};
  const VertexSet last_end{pv.at(p)};
  const ColorSet first_off = colors_between(g, first_end, off);
  const ColorSet last_off = colors_between(g, last_end, off);
  const ColorSet first_fresh = set_difference(first_off, pv.to_path(1));
  const ColorSet last_fresh = set_difference(last_off, pv.to_path(p));
  r.c0 = set_intersection(first_fresh, last_fresh);
  r.c1 = set_difference(first_fresh, r.c0);
  r.c2 = set_difference(last_fresh, r.c0);

  {
    const VertexSet from_first =
        restricted_representatives(g, pv.at(1), set_union(r.c1, r.c0), off);
    const VertexSet from_last =
        restricted_representatives(g, pv.at(p), set_union(r.c2, r.c0), off);
    std::vector<Vertex> d;
    for (Vertex x : set_intersection(from_first, from_last)) {
      if (g.color(pv.at(1), x) != g.color(pv.at(p), x)) d.push_back(x);
    }
    r.d = VertexSet(std::move(d));
    if (!r.d.empty()) r.notes.push_back("D depends on the representative-neighbor choice");
  }

  const ColorSet b12 = set_union(r.b1, r.b2);
  r.eps1 = r.a1.contains(c12) ? 0 : 1;
  r.eps2 = b12.contains(cpp) ? 0 : 1;
  r.eps3 = r.b1.contains(c1p) ? 0 : 1;

  const bool certified = r.applicable && r.path_is_longest.value_or(false);

  // Lemma-level consequences.
  AuditCheck far = far_chord_check(pv, kk);
  far.applicable = certified;
  AuditCheck chord = long_chord_check(pv, kk);
  chord.applicable = certified;
  AuditCheck overlap = endpoint_overlap_check(pv, kk);
  overlap.applicable = certified;
  end_chord.applicable = certified;
  r.lemma_checks = {far, chord, overlap, end_chord};

  // Claims presume the end-chord orientation; two of them also the standing
  // length bound p >= 3k - 5.
  const bool claim_ctx = certified && oriented;
  const bool long_enough = p >= 3 * kk - 5;
  AuditCheck nested = nested_chord_check(pv, kk);
  nested.applicable = claim_ctx;
  AuditCheck ab1 = bounded_size("a1_b1_overlap", set_intersection(r.a1, r.b1).size(), 1,
                                "A1 ∩ B1");
  ab1.applicable = claim_ctx;
  const ColorSet b2_rest = set_difference(r.b2, set_union(r.b1, ColorSet{c1p}));
  AuditCheck ab2 = bounded_size("a1_b2_overlap", set_intersection(r.a1, b2_rest).size(), 1,
                                "A1 ∩ B2 \\ (B1 ∪ {c(u1up)})");
  ab2.applicable = claim_ctx && long_enough;
  AuditCheck dsize = bounded_size("split_vertex_count", r.d.size(), 2, "D");
  dsize.applicable = claim_ctx && long_enough;
  r.claim_checks = {nested, ab1, ab2, dsize};

  // Counting inequalities, both sides evaluated.
  const auto n = sz(g.order());
  const auto delta = sz(min_color_degree(g));
  const auto kv = static_cast<std::int64_t>(k);
  const std::int64_t first_lhs = sz(r.a1.size()) + sz(r.c0.size()) + sz(r.c1.size()) + r.eps1;
  const std::int64_t last_lhs = sz(r.b1.size()) + sz(b2_rest.size()) + sz(r.c0.size()) +
                                sz(r.c2.size()) + r.eps2 + r.eps3;
  r.inequalities.push_back(inequality(
      "first_endpoint_colors", first_lhs,
      sz(color_degree(g, pv.at(1))) - sz(set_difference(r.a2, ColorSet{c12}).size()),
      delta - (kv - 3)));
  r.inequalities.push_back(inequality(
      "last_endpoint_colors", last_lhs,
      sz(color_degree(g, pv.at(p))) - sz(set_difference(r.b3, ColorSet{cpp}).size()),
      delta - (kv - 3)));
  r.inequalities.push_back(inequality("off_path_vertices", sz(off.size()), std::nullopt,
                                      sz(r.c0.size() + r.c1.size() + r.c2.size()) - 3));
  r.inequalities.push_back(inequality(
      "on_path_vertices", p, std::nullopt,
      sz(r.a1.size() + r.b1.size() + b2_rest.size() + r.c0.size()) + r.eps1 + r.eps2 - 1));
  r.inequalities.push_back(inequality(
      "on_path_vertices_printed", p, std::nullopt,
      sz(r.a1.size() + r.b1.size() + b2_rest.size()) + r.eps1 + r.eps2 - 1));
  r.inequalities.push_back(inequality("order_bound", n, first_lhs + last_lhs - r.eps3 - 4,
                                      2 * delta - 2 * kv + 1));
  return r;
}

}  // namespace rainbow
