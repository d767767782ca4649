#include "circflow/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace circflow {

bool is_proper_edge_coloring(const Multigraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.color.size()) != g.edge_count()) return false;
  for (int col : c.color)
    if (col < 0 || col >= c.colors) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t seen = 0;
    for (int eid : g.incident(v)) {
      const std::uint64_t bit = std::uint64_t{1} << c.color[eid];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class EdgeColorSearch {
public:
  EdgeColorSearch(const Multigraph& g, int colors, const SearchBudget& budget)
      : g_(g), colors_(colors), budget_(budget) {}

  Verdict run(std::optional<EdgeColoring>* witness, SearchStats* stats) {
    const int n = g_.vertex_count();
    used_.assign(n, 0);
    uncolored_deg_.assign(n, 0);
    for (int v = 0; v < n; ++v) uncolored_deg_[v] = g_.degree(v);
    color_.assign(g_.edge_count(), -1);
    for (int v = 0; v < n; ++v)
      if (uncolored_deg_[v] > colors_) return Verdict::no;

    start_ = Clock::now();
    const Verdict v = dfs(0, 0);
    if (stats) {
      stats->nodes = nodes_;
      stats->seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    }
    if (v == Verdict::yes && witness) *witness = EdgeColoring{colors_, color_};
    return v;
  }

private:
  Verdict dfs(int idx, int max_used) {
    if (idx == g_.edge_count()) return Verdict::yes;
    const auto& e = g_.edge(idx);
    // Color symmetry: at most one fresh color (index max_used) is tried.
    const int cap = std::min(colors_ - 1, max_used);
    const std::uint64_t avail =
        ~(used_[e.tail] | used_[e.head]) & ((std::uint64_t{1} << (cap + 1)) - 1);
    for (std::uint64_t bits = avail; bits; bits &= bits - 1) {
      const int c = __builtin_ctzll(bits);
      if (++nodes_ > budget_.max_nodes) return Verdict::unknown;
      if (budget_.max_seconds && (nodes_ & 8191) == 0 &&
          std::chrono::duration<double>(Clock::now() - start_).count() > *budget_.max_seconds)
        return Verdict::unknown;

      const std::uint64_t bit = std::uint64_t{1} << c;
      used_[e.tail] |= bit;
      used_[e.head] |= bit;
      --uncolored_deg_[e.tail];
      --uncolored_deg_[e.head];
      color_[idx] = c;

      // Every uncolored edge at w still needs a distinct free color there.
      const bool ok =
          colors_ - __builtin_popcountll(used_[e.tail]) >= uncolored_deg_[e.tail] &&
          colors_ - __builtin_popcountll(used_[e.head]) >= uncolored_deg_[e.head];
      if (ok) {
        const Verdict v = dfs(idx + 1, std::max(max_used, c + 1));
        if (v != Verdict::no) return v;
      }

      used_[e.tail] &= ~bit;
      used_[e.head] &= ~bit;
      ++uncolored_deg_[e.tail];
      ++uncolored_deg_[e.head];
      color_[idx] = -1;
    }
    return Verdict::no;
  }

  const Multigraph& g_;
  int colors_;
  SearchBudget budget_;
  std::vector<std::uint64_t> used_;
  std::vector<int> uncolored_deg_;
  std::vector<int> color_;
  std::uint64_t nodes_ = 0;
  Clock::time_point start_;
};

}  // namespace

Verdict edge_colorable(const Multigraph& g, int colors, const SearchBudget& budget,
                       std::optional<EdgeColoring>* witness, SearchStats* stats) {
  if (colors < 0) throw std::invalid_argument("edge_colorable: negative color count");
  if (colors > 62) throw std::invalid_argument("edge_colorable: more than 62 colors unsupported");
  if (g.edge_count() == 0) {
    if (witness) *witness = EdgeColoring{colors, {}};
    return Verdict::yes;
  }
  if (colors == 0) return Verdict::no;
  EdgeColorSearch search(g, colors, budget);
  return search.run(witness, stats);
}

ChromaticIndex chromatic_index(const Multigraph& g, const SearchBudget& budget) {
  ChromaticIndex out;
  if (g.edge_count() == 0) {
    out.exact = true;
    out.lower = out.upper = 0;
    out.coloring = EdgeColoring{0, {}};
    return out;
  }
  const int delta = g.max_degree();
  const int vizing_upper = delta + g.max_multiplicity();
  out.lower = delta;
  out.upper = vizing_upper;

  bool saw_unknown = false;
  for (int c = delta; c <= vizing_upper; ++c) {
    std::optional<EdgeColoring> witness;
    SearchStats stats;
    const Verdict v = edge_colorable(g, c, budget, &witness, &stats);
    out.stats.nodes += stats.nodes;
    out.stats.seconds += stats.seconds;
    if (v == Verdict::yes) {
      out.upper = c;
      out.coloring = std::move(witness);
      out.exact = !saw_unknown && out.lower == c;
      return out;
    }
    if (v == Verdict::no) {
      out.lower = c + 1;
    } else {
      saw_unknown = true;
    }
  }
  if (!saw_unknown)
    throw std::logic_error("chromatic_index: refused the max-degree + multiplicity bound; "
                           "this indicates a search bug");
  return out;  // unknown: bounds only
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::class1: return "class1";
    case GraphClass::class2: return "class2";
    default: return "unknown";
  }
}

ClassifyResult classify(const Multigraph& g, const SearchBudget& budget) {
  ClassifyResult out;
  if (g.edge_count() == 0) {
    out.value = GraphClass::class1;
    return out;
  }
  const auto reg = g.regular_degree();
  if (reg && *reg % 2 == 1) {
    const OddCutScan scan = odd_cut_obstruction(g);
    if (scan.found()) {
      // An odd set X with |cut(X)| < d blocks a d-edge-coloring: each color
      // class would have to leave one X-vertex uncovered inside X, so some
      // two classes would share a cut edge.
      out.value = GraphClass::class2;
      out.odd_cut = scan.witness;
      return out;
    }
  }
  const Verdict v = edge_colorable(g, g.max_degree(), budget, nullptr, &out.stats);
  out.value = v == Verdict::yes    ? GraphClass::class1
              : v == Verdict::no   ? GraphClass::class2
                                   : GraphClass::unknown;
  return out;
}

bool is_perfect_matching(const Multigraph& g, const PerfectMatching& m) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (int eid : m.edge_ids) {
    if (eid < 0 || eid >= g.edge_count()) return false;
    ++cover[g.edge(eid).tail];
    ++cover[g.edge(eid).head];
  }
  for (int c : cover)
    if (c != 1) return false;
  return true;
}

MatchingEnumerator::MatchingEnumerator(Multigraph g)
    : g_(std::move(g)), covered_(g_.vertex_count(), false), exhausted_(false) {}

int MatchingEnumerator::lowest_uncovered() const {
  for (int v = 0; v < g_.vertex_count(); ++v)
    if (!covered_[v]) return v;
  return -1;
}

std::optional<PerfectMatching> MatchingEnumerator::next() {
  if (exhausted_) return std::nullopt;

  auto uncover_top = [&]() {
    // Retract the top frame's active choice; its edge_pos already points past.
    const int eid = chosen_.back();
    chosen_.pop_back();
    covered_[g_.edge(eid).tail] = false;
    covered_[g_.edge(eid).head] = false;
  };

  if (stack_.empty()) {  // first call
    if (g_.vertex_count() % 2 != 0) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (g_.vertex_count() == 0) {
      exhausted_ = true;
      return PerfectMatching{};  // the empty matching covers the empty graph
    }
    stack_.push_back({0, 0});
  } else {
    uncover_top();  // resume after the previous emission
  }

  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const auto& inc = g_.incident(f.vertex);
    int found = -1;
    while (f.edge_pos < inc.size()) {
      const int eid = inc[f.edge_pos++];
      if (!covered_[g_.edge(eid).other(f.vertex)]) {
        found = eid;
        break;
      }
    }
    if (found == -1) {
      stack_.pop_back();
      if (!stack_.empty()) uncover_top();
      continue;
    }
    covered_[f.vertex] = true;
    covered_[g_.edge(found).other(f.vertex)] = true;
    chosen_.push_back(found);

    const int nxt = lowest_uncovered();
    if (nxt == -1) {
      PerfectMatching m{chosen_};
      std::sort(m.edge_ids.begin(), m.edge_ids.end());
      return m;
    }
    stack_.push_back({nxt, 0});
  }
  exhausted_ = true;
  return std::nullopt;
}

std::vector<PerfectMatching> all_perfect_matchings(const Multigraph& g) {
  std::vector<PerfectMatching> out;
  MatchingEnumerator en(g);
  while (auto m = en.next()) out.push_back(std::move(*m));
  return out;
}

namespace {

// Bipartite test of g minus a set of removed edges.
std::optional<Bipartition> bipartition_without(const Multigraph& g,
                                               const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int eid : g.incident(u)) {
        if (removed[eid]) continue;
        const int v = g.edge(eid).other(u);
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v)
    (color[v] == 0 ? parts.a : parts.b).insert(v);
  return parts;
}

}  // namespace

std::optional<BipartizingFactor> bipartizing_one_factor(const Multigraph& g) {
  const auto reg = g.regular_degree();
  if (!reg || *reg % 2 == 0)
    throw std::invalid_argument("bipartizing_one_factor: graph must be regular of odd degree");

  MatchingEnumerator en(g);
  std::vector<bool> removed(g.edge_count(), false);
  while (auto m = en.next()) {
    std::fill(removed.begin(), removed.end(), false);
    for (int eid : m->edge_ids) removed[eid] = true;
    if (auto parts = bipartition_without(g, removed))
      return BipartizingFactor{std::move(*m), std::move(*parts)};
  }
  return std::nullopt;
}

FactorFlowCrossCheck check_bipartizing_flow_equivalence(const Multigraph& g,
                                                        const SearchBudget& budget) {
  const auto reg = g.regular_degree();
  if (!reg || *reg % 2 == 0 || *reg < 3)
    throw std::invalid_argument(
        "check_bipartizing_flow_equivalence: graph must be (2t+1)-regular with t >= 1");
  if (!bridges(g).empty())
    throw std::invalid_argument("check_bipartizing_flow_equivalence: graph must be bridgeless");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("check_bipartizing_flow_equivalence: graph must be connected");

  FactorFlowCrossCheck out;
  out.t = (*reg - 1) / 2;
  out.bound = Rational(2) + Rational(2, 2 * out.t - 1);
  out.factor_exists = bipartizing_one_factor(g).has_value();
  const FlowDecision d = has_nwz_flow(g, out.bound, budget);
  out.flow_at_bound = d.verdict;

  bool consistent = true;
  if (d.verdict == Verdict::unknown) {
    out.note = "flow probe exhausted its budget; equivalence not evaluated";
  } else if (out.factor_exists != (d.verdict == Verdict::yes)) {
    consistent = false;
    out.note = "bipartizing factor and flow decision disagree";
  }

  if (!is_bipartite(g).is_bipartite() && d.verdict != Verdict::unknown) {
    const FcResult fc = circular_flow_number(g, 0, budget);
    if (fc.status == FcStatus::exact_within_bound) {
      out.fc_equals_bound = (fc.value == out.bound);
      if (*out.fc_equals_bound != out.factor_exists) {
        consistent = false;
        out.note = "bipartizing factor and exact flow number disagree";
      }
    }
  }
  out.consistent = consistent;
  return out;
}

std::string serialize_coloring(const EdgeColoring& c) {
  std::string out;
  for (int col = 0; col < c.colors; ++col) {
    out += "color " + std::to_string(col) + ":";
    for (size_t e = 0; e < c.color.size(); ++e)
      if (c.color[e] == col) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

std::string serialize_matching(const PerfectMatching& m) {
  std::string out = "matching:";
  for (int eid : m.edge_ids) out += " " + std::to_string(eid);
  out += "\n";
  return out;
}

}  // namespace circflow
