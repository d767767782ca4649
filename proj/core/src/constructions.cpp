#include "circflow/constructions.hpp"

#include <stdexcept>
#include <string>

#include "circflow/valuations.hpp"

namespace circflow {

Multigraph k2_multi(int t) {
  if (t < 1) throw std::invalid_argument("k2_multi: requires t >= 1");
  std::vector<std::pair<int, int>> edges(2 * t + 1, {0, 1});
  return Multigraph(2, edges);
}

std::pair<Multigraph, GadgetLabels> h_gadget(int t) {
  if (t < 1) throw std::invalid_argument("h_gadget: requires t >= 1");
  return {subdivide(k2_multi(t), 0), GadgetLabels{0, 1, 2}};
}

std::pair<Multigraph, std::vector<GadgetLabels>> glue_gadgets(const Multigraph& base, int t) {
  if (t <= 1) throw std::invalid_argument("glue_gadgets: requires t > 1");
  const auto reg = base.regular_degree();
  if (!reg || *reg != 2 * t - 1)
    throw std::invalid_argument("glue_gadgets: base must be (2t-1)-regular");
  const int n = base.vertex_count();
  if (n == 0) throw std::invalid_argument("glue_gadgets: base is empty");

  // Gadget i occupies u = n + 2i, v = n + 2i + 1; its bivalent vertex is the
  // base vertex i itself. Edge order: all base edges, then per gadget the
  // subdivided gadget's edges (u-x, 2t copies of u-v, x-v).
  std::vector<std::pair<int, int>> edges;
  edges.reserve(base.edge_count() + n * (2 * t + 2));
  for (const auto& e : base.edges()) edges.emplace_back(e.tail, e.head);
  std::vector<GadgetLabels> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int u = n + 2 * i, v = n + 2 * i + 1, x = i;
    labels.push_back({u, v, x});
    edges.emplace_back(u, x);
    for (int c = 0; c < 2 * t; ++c) edges.emplace_back(u, v);
    edges.emplace_back(x, v);
  }
  Multigraph out(3 * n, edges);

  if (out.regular_degree() != 2 * t + 1)
    throw std::logic_error("glue_gadgets: output is not (2t+1)-regular");
  for (const auto& lab : labels) {
    VertexSet triple(out.vertex_count());
    triple.insert(lab.u);
    triple.insert(lab.v);
    triple.insert(lab.x);
    if (boundary(out, triple).size() != 2 * t - 1)
      throw std::logic_error("glue_gadgets: gadget triple boundary is not 2t-1");
  }
  return {std::move(out), std::move(labels)};
}

Multigraph petersen() {
  std::vector<std::pair<int, int>> edges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},  // outer cycle
      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},  // spokes
      {5, 7}, {6, 8}, {7, 9}, {8, 5}, {9, 6},  // inner pentagram
  };
  return Multigraph(10, edges);
}

const PetersenData& petersen_data() {
  static const PetersenData data = [] {
    PetersenData d;
    d.p = petersen();
    const Rational weight(5, 3);

    // Scan 5-element colorings by bitmask, matchings in enumeration order;
    // the first balanced coloring admitting a class-crossing matching wins.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 10); ++mask) {
      if (__builtin_popcountll(mask) != 5) continue;
      std::vector<Rational> w(10);
      for (int v = 0; v < 10; ++v) w[v] = (mask >> v) & 1 ? weight : -weight;
      if (!is_balanced_brute(d.p, w).balanced) continue;

      MatchingEnumerator en(d.p);
      while (auto m = en.next()) {
        bool crossing = true;
        for (int eid : m->edge_ids) {
          const auto& e = d.p.edge(eid);
          if ((((mask >> e.tail) ^ (mask >> e.head)) & 1) == 0) {
            crossing = false;
            break;
          }
        }
        if (crossing) {
          d.a = VertexSet::from_mask(10, mask);
          d.b = d.a.complement();
          d.f = std::move(*m);
          return d;
        }
      }
    }
    throw std::logic_error("petersen_data: no balanced class-crossing pair found; "
                           "this indicates a checker bug");
  }();
  return data;
}

Multigraph petersen_family(int t) {
  if (t < 1) throw std::invalid_argument("petersen_family: requires t >= 1");
  const PetersenData& d = petersen_data();
  Multigraph out = add_edge_copies(d.p, d.f.edge_ids, 2 * t - 2);

  if (out.regular_degree() != 2 * t + 1)
    throw std::logic_error("petersen_family: output is not (2t+1)-regular");
  if (!is_t_graph(out, t))
    throw std::logic_error("petersen_family: output has an odd cut below 2t+1");
  const Rational c = Rational(2 * t) - Rational(1, 3);
  std::vector<Rational> w(10);
  for (int v = 0; v < 10; ++v) w[v] = d.a.contains(v) ? c : -c;
  if (!is_balanced_mincut(out, w).balanced)
    throw std::logic_error("petersen_family: uniform valuation on the fixed classes "
                           "is not balanced");
  return out;
}

}  // namespace circflow
