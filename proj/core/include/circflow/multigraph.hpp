#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace circflow {

/// One edge of a multigraph. (tail, head) is the edge's stored reference
/// direction; undirected algorithms ignore it, flow values are signed
/// relative to it. Parallel edges are distinct records with distinct ids.
struct EdgeRecord {
  int id;
  int tail;
  int head;

  int other(int v) const { return v == tail ? head : tail; }
};

/// Loopless undirected multigraph with dense vertex ids 0..n-1 and dense
/// edge ids 0..m-1 (file order / construction order). Immutable after
/// construction; all operations on it are pure, so instances can be shared
/// across threads freely.
class Multigraph {
public:
  Multigraph() : n_(0) {}

  /// Throws std::invalid_argument on a loop or an endpoint out of range.
  Multigraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(int id) const { return edges_.at(id); }

  /// Edge ids incident to v, ascending. Parallel edges appear individually.
  const std::vector<int>& incident(int v) const { return incident_.at(v); }

  /// Counts parallel edges with multiplicity.
  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }

  /// The common degree if every vertex has it, absent otherwise.
  /// (Defined as 0 for the empty vertex set.)
  std::optional<int> regular_degree() const;

  /// Maximum number of parallel edges between any vertex pair (0 if m = 0).
  int max_multiplicity() const;

  int max_degree() const;

private:
  int n_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace circflow
