#include "circflow/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace circflow {

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Multigraph: negative vertex count");
  edges_.reserve(edges.size());
  incident_.resize(n_);
  int id = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("Multigraph: endpoint out of range on edge " +
                                  std::to_string(id));
    if (u == v)
      throw std::invalid_argument("Multigraph: loop rejected on edge " + std::to_string(id));
    edges_.push_back({id, u, v});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    ++id;
  }
}

std::optional<int> Multigraph::regular_degree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

int Multigraph::max_multiplicity() const {
  std::map<std::pair<int, int>, int> mult;
  int best = 0;
  for (const auto& e : edges_) {
    auto key = std::minmax(e.tail, e.head);
    best = std::max(best, ++mult[{key.first, key.second}]);
  }
  return best;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

}  // namespace circflow
