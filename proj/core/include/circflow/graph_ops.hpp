#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circflow/multigraph.hpp"
#include "circflow/vertex_set.hpp"

namespace circflow {

/// Edge cut of a vertex set: every listed edge has exactly one endpoint in
/// source. Parallel edges are counted with multiplicity.
struct Cut {
  VertexSet source;
  std::vector<int> edge_ids;

  int size() const { return static_cast<int>(edge_ids.size()); }
};

/// Two disjoint vertex sets covering V. When produced by is_bipartite the
/// guarantee is that every edge joins a to b; other producers (vertex
/// 2-colorings) only promise the partition itself.
struct Bipartition {
  VertexSet a;
  VertexSet b;
};

struct BipartiteCheck {
  std::optional<Bipartition> bipartition;
  /// Closed odd walk (first vertex repeated at the end) when not bipartite.
  std::vector<int> odd_cycle;

  bool is_bipartite() const { return bipartition.has_value(); }
};

Cut boundary(const Multigraph& g, const VertexSet& x);

BipartiteCheck is_bipartite(const Multigraph& g);

/// Every edge joins x to its complement — validates a claimed Bipartition.
bool crosses_partition(const Multigraph& g, const VertexSet& a);

/// Exactly the cut-edges, ascending by id. A parallel pair is never a bridge.
std::vector<int> bridges(const Multigraph& g);

std::vector<std::vector<int>> connected_components(const Multigraph& g);

/// Result of the exhaustive odd-cut scan on an odd-regular graph.
struct OddCutScan {
  enum class Status { found, none, not_attempted };
  Status status = Status::not_attempted;
  std::optional<std::pair<VertexSet, Cut>> witness;

  bool found() const { return status == Status::found; }
};

/// Scans all vertex subsets (complement-reduced) of a d-regular graph with d
/// odd for an odd-cardinality X with |cut(X)| < d. Returns the witness
/// minimizing cut size, then |X|, then bitmask value. For odd-regular graphs
/// such an X certifies class 2. Beyond max_vertices the scan is not
/// attempted. Throws std::invalid_argument unless g is regular of odd degree.
OddCutScan odd_cut_obstruction(const Multigraph& g, int max_vertices = 20);

/// For a (2t+1)-regular g: true iff every odd X has |cut(X)| >= 2t+1.
/// Throws on wrong regularity or when the scan bound is exceeded.
bool is_t_graph(const Multigraph& g, int t, int max_vertices = 20);

// Structural primitives. All are pure; id layouts are fixed:
//   disjoint_union: h's vertices shift by g.n, h's edges by g.m.
//   subdivide(e = (u,v)): fresh vertex x = n; edge e becomes (u, x) keeping
//     its id; (x, v) is appended with id m.
//   identify_vertices(pairs of (keep, merge)): each merge vertex is rewritten
//     to its keep vertex, then vertex ids are compacted preserving order.
//     Edge ids and order are unchanged. Throws if an edge becomes a loop or
//     the pairs are not pairwise disjoint.
//   add_edge_copies: appends k copies of every edge in f (f order major,
//     copy index minor) with fresh ids at the end.
Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);
Multigraph subdivide(const Multigraph& g, int edge_id);
Multigraph identify_vertices(const Multigraph& g,
                             const std::vector<std::pair<int, int>>& pairs);
Multigraph add_edge_copies(const Multigraph& g, std::span<const int> f, int k);

}  // namespace circflow
