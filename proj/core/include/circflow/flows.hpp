#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circflow/multigraph.hpp"
#include "circflow/rational.hpp"
#include "circflow/search.hpp"

namespace circflow {

/// Per-edge direction relative to the stored reference direction:
/// +1 keeps (tail -> head), -1 reverses.
struct Orientation {
  std::vector<int> sign;
};

/// Candidate nowhere-zero r-flow: a signed exact rational per edge, relative
/// to the edge's reference direction. Valid when every |value| lies in
/// [1, r-1] and the signed sum at every vertex vanishes; verify_flow checks
/// both, nothing is assumed.
struct FlowAssignment {
  Rational r;
  std::vector<Rational> value;
};

struct FlowDecision {
  Verdict verdict = Verdict::unknown;
  std::optional<FlowAssignment> certificate;  // present exactly when yes
  SearchStats stats;
};

enum class FcStatus { exact_within_bound, lower_bound_only, undefined_bridge };

const char* to_string(FcStatus s);

/// Result of the circular flow number computation over the candidate ladder.
struct FcResult {
  FcStatus status = FcStatus::undefined_bridge;
  Rational value;                       // exact: the least yes candidate;
                                        // lower bound: the largest refuted one
  std::optional<FlowAssignment> witness;
  /// Immediate predecessor candidate refuted by the solver. Absent when the
  /// value is the first ladder candidate (r = 2, Eulerian graphs).
  std::optional<Rational> refused_candidate;
  SearchStats stats;
};

/// True iff f covers g edge for edge, every value has 1 <= |value| <= r-1,
/// and conservation holds at every vertex. Throws on an edge-count mismatch.
bool verify_flow(const Multigraph& g, const FlowAssignment& f);

/// Decides existence of a nowhere-zero r-flow exactly. Writing r - 1 = n/k in
/// lowest terms, a nowhere-zero r-flow exists iff an integer circulation
/// exists with every edge value m satisfying k <= |m| <= n; the search runs
/// over that integer space and descales the certificate by k.
///
/// Search contract (strict deterministic mode): spanning forest by BFS in
/// vertex/edge-id order; cotree edges are the free variables; a static
/// variable order greedily maximizes early completion of tree-edge
/// constraints; values are tried in ascending absolute value, positive before
/// negative; the first assigned variable is fixed positive; a branch is cut
/// when some tree edge's exactly-reachable value set misses +-[k, n].
/// Bridges give an immediate no. Budget exhaustion gives unknown, never no.
FlowDecision has_nwz_flow(const Multigraph& g, const Rational& r,
                          const SearchBudget& budget = {});

/// All rationals p/q in [2, 6] with q <= max_denominator, ascending and
/// deduplicated. 6 is a search ceiling: bridgeless graphs always admit a
/// candidate below it, so a full-ladder refusal signals a solver bug.
std::vector<Rational> candidate_ladder(int max_denominator);

/// Least ladder candidate admitting a flow, found by bisection (flow
/// existence is monotone in r). Bridge => undefined_bridge. A probe hitting
/// the budget => lower_bound_only carrying the largest refuted candidate.
/// max_denominator <= 0 selects the default |V(g)|.
FcResult circular_flow_number(const Multigraph& g, int max_denominator = 0,
                              const SearchBudget& budget = {});

/// Flips the reference direction of negative edges so all values are
/// positive. Throws if f does not verify.
std::pair<Orientation, std::vector<Rational>> normalize_positive(const Multigraph& g,
                                                                 const FlowAssignment& f);

/// Certificate text block: "flow r=<p>/<q>" then "<edge-id> <sign><m>/<k>"
/// per edge, reloadable by parse_flow_certificate.
std::string serialize_flow(const FlowAssignment& f);
FlowAssignment parse_flow_certificate(std::string_view text);

}  // namespace circflow
