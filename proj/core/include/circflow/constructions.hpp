#pragma once

#include <utility>
#include <vector>

#include "circflow/coloring.hpp"
#include "circflow/graph_ops.hpp"
#include "circflow/multigraph.hpp"

namespace circflow {

/// Vertex ids of one embedded gadget instance after construction.
struct GadgetLabels {
  int u;
  int v;
  int x;
};

/// Two vertices joined by 2t+1 parallel edges. Bipartite, (2t+1)-regular.
Multigraph k2_multi(int t);

/// k2_multi(t) with edge 0 subdivided: vertices u = 0, v = 1, x = 2; edge 0
/// becomes u-x, edge 2t+1 is x-v, edges 1..2t stay parallel u-v.
std::pair<Multigraph, GadgetLabels> h_gadget(int t);

/// Raises a (2t-1)-regular base to a (2t+1)-regular graph by hanging one
/// subdivided multi-edge gadget on every vertex: gadget i's degree-2 vertex
/// is identified with base vertex i. Base vertices keep ids 0..n-1; gadget i
/// contributes u = n + 2i, v = n + 2i + 1. The output always carries an
/// odd cut below its degree (each gadget triple {u_i, v_i, i} has boundary
/// 2t-1), which is checked after construction along with regularity.
/// Requires t > 1. Throws std::invalid_argument on bad input,
/// std::logic_error if a post-construction check fails.
std::pair<Multigraph, std::vector<GadgetLabels>> glue_gadgets(const Multigraph& base, int t);

/// The Petersen graph in the fixed labeling: outer cycle 0..4 (edges 0..4),
/// spokes i -> i+5 (edges 5..9), inner pentagram 5..9 (edges 10..14).
Multigraph petersen();

/// The fixed Petersen graph with a derived vertex 2-coloring (a, b) of size
/// 5 + 5 on which +-5/3 is a balanced valuation, and a perfect matching f
/// whose every edge joins a to b. Derived once by exhaustive search (first
/// valid pair in scan order: coloring bitmask ascending, then matching
/// enumeration order) and cached for the process lifetime.
struct PetersenData {
  Multigraph p;
  VertexSet a;
  VertexSet b;
  PerfectMatching f;
};

const PetersenData& petersen_data();

/// Petersen plus (2t-2) extra copies of petersen_data().f: 10 vertices,
/// 15 + 5(2t-2) edges, (2t+1)-regular. Post-construction checks: every odd
/// vertex set has boundary >= 2t+1, and +-(2t - 1/3) on (a, b) is balanced.
/// t = 1 returns Petersen itself. Throws on t < 1 or a failed check.
Multigraph petersen_family(int t);

}  // namespace circflow
