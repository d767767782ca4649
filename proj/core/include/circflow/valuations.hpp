#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circflow/flows.hpp"
#include "circflow/graph_ops.hpp"
#include "circflow/multigraph.hpp"
#include "circflow/rational.hpp"

namespace circflow {

/// Per-vertex exact rational weights. "Balanced" means
/// |sum of w over X| <= |cut(X)| for every vertex subset X; that property is
/// always checked (brute force or min-cut), never assumed.
struct BalancedValuation {
  std::vector<Rational> w;
};

/// Valuation in the shape that corresponds to nowhere-zero r-flows:
/// w(v) = k_v * r/(r-2) with k_v = d(v) (mod 2).
struct JaegerForm {
  Rational r;
  std::vector<std::int64_t> k;

  Rational weight(int v) const { return Rational(k[v]) * r / (r - Rational(2)); }
};

struct BalanceCheck {
  bool balanced = false;
  std::optional<VertexSet> violator;  // genuinely violating X when not balanced
};

/// Exhaustive check over all subsets (complement pairs evaluated once).
/// Returns the violator with the smallest bitmask value, if any.
/// Throws when g has more than max_vertices vertices.
BalanceCheck is_balanced_brute(const Multigraph& g, const std::vector<Rational>& w,
                               int max_vertices = 20);

/// Same decision via two s-t min-cut runs (weights scaled to integers; graph
/// edges become opposite arcs of the scaled unit capacity; min cut minus the
/// total positive source capacity equals min over X of |cut(X)| - sum_X w).
/// Scales to graphs far beyond the brute-force bound.
BalanceCheck is_balanced_mincut(const Multigraph& g, const std::vector<Rational>& w);

/// From a verified flow: normalize values positive, set k_v = outdeg - indeg
/// under that orientation and w(v) = k_v * r/(r-2). The result is self-checked
/// (parity and balance); a failure throws CorrespondenceError instead of
/// returning silently. Requires r > 2.
class CorrespondenceError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

std::pair<BalancedValuation, JaegerForm> flow_to_valuation(const Multigraph& g,
                                                           const FlowAssignment& f);

/// r/(r-2) for r > 2, and its inverse 2c/(c-1) for c > 1.
Rational r_to_weight(const Rational& r);
Rational weight_to_r(const Rational& c);

/// Largest c >= 0 such that +c on a / -c on b is balanced: the exact minimum
/// of |cut(X)| / | |X ∩ a| - |X ∩ b| | over subsets where the counts differ.
/// Exhaustive; throws beyond max_vertices. a, b must partition V.
Rational max_uniform_weight(const Multigraph& g, const VertexSet& a, const VertexSet& b,
                            int max_vertices = 20);

enum class RefuteVerdict { refuted, not_refuted };

struct RefuteResult {
  RefuteVerdict verdict;
  /// Balanced witness when not refuted.
  std::optional<JaegerForm> witness;
};

/// Independent no-flow oracle for odd-regular graphs and r > 2: enumerates
/// every valuation w(v) = k_v * r/(r-2) with k_v odd, |k_v| <= degree, both
/// signs, pruning by partial balance checks. If none is balanced, no
/// nowhere-zero r-flow exists -- a certified refutation that shares nothing
/// with the cycle-space solver. Throws beyond max_vertices or when the
/// preconditions fail.
RefuteResult refute_flow_by_valuation(const Multigraph& g, const Rational& r,
                                      int max_vertices = 12);

/// Text form: one line "<v> <p>/<q>" per vertex.
std::string serialize_valuation(const std::vector<Rational>& w);
std::vector<Rational> parse_valuation(std::string_view text);

}  // namespace circflow
