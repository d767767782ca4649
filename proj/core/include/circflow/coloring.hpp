#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circflow/flows.hpp"
#include "circflow/graph_ops.hpp"
#include "circflow/multigraph.hpp"
#include "circflow/search.hpp"

namespace circflow {

/// Proper edge coloring: edges sharing a vertex (parallel edges included)
/// carry distinct colors in 0..colors-1.
struct EdgeColoring {
  int colors = 0;
  std::vector<int> color;
};

bool is_proper_edge_coloring(const Multigraph& g, const EdgeColoring& c);

/// Exact chromatic index by backtracking between the degree lower bound and
/// the max-degree + max-multiplicity upper bound. exact == false only on
/// budget exhaustion, with the best bounds found so far.
struct ChromaticIndex {
  bool exact = false;
  int lower = 0;
  int upper = 0;
  std::optional<EdgeColoring> coloring;  // a proper coloring with `upper` colors
  SearchStats stats;
};

ChromaticIndex chromatic_index(const Multigraph& g, const SearchBudget& budget = {});

/// Feasibility of a proper edge coloring with exactly `colors` colors.
Verdict edge_colorable(const Multigraph& g, int colors, const SearchBudget& budget,
                       std::optional<EdgeColoring>* witness = nullptr,
                       SearchStats* stats = nullptr);

enum class GraphClass { class1, class2, unknown };

const char* to_string(GraphClass c);

struct ClassifyResult {
  GraphClass value = GraphClass::unknown;
  /// Set when class 2 was certified by an odd-cut obstruction instead of a
  /// coloring search.
  std::optional<std::pair<VertexSet, Cut>> odd_cut;
  SearchStats stats;
};

/// class 1 iff chi' = max degree. For odd-regular graphs an odd-cut
/// obstruction certifies class 2 without any search; otherwise a single
/// feasibility run at max degree decides.
ClassifyResult classify(const Multigraph& g, const SearchBudget& budget = {});

/// 1-factor: every vertex covered exactly once. Edge ids stored ascending.
struct PerfectMatching {
  std::vector<int> edge_ids;
};

bool is_perfect_matching(const Multigraph& g, const PerfectMatching& m);

/// Exhaustive, duplicate-free stream of perfect matchings in a fixed order:
/// backtracking on the lowest-id uncovered vertex, trying its incident edges
/// ascending by id. Parallel edges yield distinct matchings. Owns a copy of
/// the graph, so it outlives the argument.
class MatchingEnumerator {
public:
  explicit MatchingEnumerator(Multigraph g);

  /// Next matching in enumeration order, or nullopt when exhausted.
  std::optional<PerfectMatching> next();

private:
  struct Frame {
    int vertex;
    size_t edge_pos;
  };

  Multigraph g_;
  std::vector<bool> covered_;
  std::vector<int> chosen_;
  std::vector<Frame> stack_;
  bool exhausted_;

  int lowest_uncovered() const;
};

std::vector<PerfectMatching> all_perfect_matchings(const Multigraph& g);

/// First matching (enumeration order) whose removal leaves a bipartite
/// graph, with the bipartition of g - F. Requires odd regular degree.
struct BipartizingFactor {
  PerfectMatching factor;
  Bipartition parts;
};

std::optional<BipartizingFactor> bipartizing_one_factor(const Multigraph& g);

/// Cross-checks the two characterizations on a connected bridgeless
/// (2t+1)-regular graph: a bipartizing 1-factor exists iff a nowhere-zero
/// (2 + 2/(2t-1))-flow exists; for non-bipartite graphs additionally iff the
/// circular flow number equals that bound exactly. Any mismatch is an
/// implementation bug, reported rather than swallowed.
struct FactorFlowCrossCheck {
  int t = 0;
  Rational bound;               // 2 + 2/(2t-1)
  bool factor_exists = false;
  Verdict flow_at_bound = Verdict::unknown;
  std::optional<bool> fc_equals_bound;  // only for non-bipartite inputs
  bool consistent = false;
  std::string note;
};

FactorFlowCrossCheck check_bipartizing_flow_equivalence(const Multigraph& g,
                                                        const SearchBudget& budget = {});

/// "color <c>: <ids...>" per color / "matching: <ids...>".
std::string serialize_coloring(const EdgeColoring& c);
std::string serialize_matching(const PerfectMatching& m);

}  // namespace circflow
