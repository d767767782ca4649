#include "circflow/graph_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace circflow {

Cut boundary(const Multigraph& g, const VertexSet& x) {
  Cut cut;
  cut.source = x;
  for (const auto& e : g.edges())
    if (x.contains(e.tail) != x.contains(e.head)) cut.edge_ids.push_back(e.id);
  return cut;
}

BipartiteCheck is_bipartite(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> parent_vertex(n, -1);

  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int eid : g.incident(u)) {
        const int v = g.edge(eid).other(u);
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          parent_vertex[v] = u;
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          // Odd closed walk: u -> root-ward path, then root-ward path back
          // down to v, then the offending edge back to u.
          std::vector<int> up, down;
          int a = u, b = v;
          // Walk both ends up until they meet (paths in the BFS/DFS forest).
          std::vector<bool> on_a_path(n, false);
          for (int w = a; w != -1; w = parent_vertex[w]) on_a_path[w] = true;
          int meet = b;
          while (!on_a_path[meet]) meet = parent_vertex[meet];
          for (int w = a; w != meet; w = parent_vertex[w]) up.push_back(w);
          up.push_back(meet);
          for (int w = b; w != meet; w = parent_vertex[w]) down.push_back(w);
          std::reverse(down.begin(), down.end());
          std::vector<int> walk = up;
          walk.insert(walk.end(), down.begin(), down.end());
          walk.push_back(u);  // close via edge (v, u)
          return {std::nullopt, walk};
        }
      }
    }
  }

  Bipartition parts{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v)
    (color[v] == 0 ? parts.a : parts.b).insert(v);
  return {parts, {}};
}

bool crosses_partition(const Multigraph& g, const VertexSet& a) {
  for (const auto& e : g.edges())
    if (a.contains(e.tail) == a.contains(e.head)) return false;
  return true;
}

std::vector<int> bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> out;
  int timer = 0;

  // Iterative low-link; the entering edge id is skipped (not the parent
  // vertex), so parallel edges are handled correctly.
  struct Frame {
    int v;
    int in_edge;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const int eid = inc[f.next++];
        if (eid == f.in_edge) continue;
        const int w = g.edge(eid).other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, eid, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (low[done.v] > disc[up.v]) out.push_back(done.in_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack = {root};
    comp[root] = c;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out[c].push_back(u);
      for (int eid : g.incident(u)) {
        const int v = g.edge(eid).other(u);
        if (comp[v] == -1) {
          comp[v] = c;
          stack.push_back(v);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

OddCutScan odd_cut_obstruction(const Multigraph& g, int max_vertices) {
  const auto reg = g.regular_degree();
  if (!reg || *reg % 2 == 0)
    throw std::invalid_argument("odd_cut_obstruction: graph must be regular of odd degree");
  const int n = g.vertex_count();
  const int d = *reg;
  if (n > max_vertices || n > 63) return {OddCutScan::Status::not_attempted, std::nullopt};

  // Evaluate each complementary pair once: X over masks with vertex n-1
  // excluded, and its complement. Best = (cut size, |X|, mask) ascending.
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  bool have_best = false;
  int best_cut = 0, best_pop = 0;
  std::uint64_t best_mask = 0;

  auto consider = [&](std::uint64_t mask, int pop, int cut) {
    if (pop % 2 == 0 || cut >= d) return;
    if (!have_best || cut < best_cut || (cut == best_cut && pop < best_pop) ||
        (cut == best_cut && pop == best_pop && mask < best_mask)) {
      have_best = true;
      best_cut = cut;
      best_pop = pop;
      best_mask = mask;
    }
  };

  for (std::uint64_t mask = 0; mask < half; ++mask) {
    int cut = 0;
    for (const auto& e : g.edges())
      cut += ((mask >> e.tail) ^ (mask >> e.head)) & 1;
    const int pop = __builtin_popcountll(mask);
    consider(mask, pop, cut);
    consider(full ^ mask, n - pop, cut);
  }

  if (!have_best) return {OddCutScan::Status::none, std::nullopt};
  VertexSet x = VertexSet::from_mask(n, best_mask);
  return {OddCutScan::Status::found, std::make_pair(x, boundary(g, x))};
}

bool is_t_graph(const Multigraph& g, int t, int max_vertices) {
  const auto reg = g.regular_degree();
  if (!reg || *reg != 2 * t + 1)
    throw std::invalid_argument("is_t_graph: graph must be (2t+1)-regular");
  const OddCutScan scan = odd_cut_obstruction(g, max_vertices);
  if (scan.status == OddCutScan::Status::not_attempted)
    throw std::invalid_argument("is_t_graph: vertex count exceeds the scan bound");
  return scan.status == OddCutScan::Status::none;
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count() + h.edge_count());
  for (const auto& e : g.edges()) edges.emplace_back(e.tail, e.head);
  const int shift = g.vertex_count();
  for (const auto& e : h.edges()) edges.emplace_back(e.tail + shift, e.head + shift);
  return Multigraph(g.vertex_count() + h.vertex_count(), edges);
}

Multigraph subdivide(const Multigraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("subdivide: invalid edge id");
  const int x = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count() + 1);
  for (const auto& e : g.edges()) {
    if (e.id == edge_id)
      edges.emplace_back(e.tail, x);
    else
      edges.emplace_back(e.tail, e.head);
  }
  edges.emplace_back(x, g.edge(edge_id).head);
  return Multigraph(x + 1, edges);
}

Multigraph identify_vertices(const Multigraph& g,
                             const std::vector<std::pair<int, int>>& pairs) {
  const int n = g.vertex_count();
  std::vector<int> target(n);
  std::iota(target.begin(), target.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& [keep, merge] : pairs) {
    if (keep < 0 || keep >= n || merge < 0 || merge >= n || keep == merge)
      throw std::invalid_argument("identify_vertices: invalid pair");
    if (used[keep] || used[merge])
      throw std::invalid_argument("identify_vertices: pairs are not pairwise disjoint");
    used[keep] = used[merge] = true;
    target[merge] = keep;
  }

  std::vector<int> new_id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (target[v] == v) new_id[v] = next++;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const int u = new_id[target[e.tail]];
    const int v = new_id[target[e.head]];
    if (u == v)
      throw std::invalid_argument("identify_vertices: identification creates a loop on edge " +
                                  std::to_string(e.id));
    edges.emplace_back(u, v);
  }
  return Multigraph(next, edges);
}

Multigraph add_edge_copies(const Multigraph& g, std::span<const int> f, int k) {
  if (k < 0) throw std::invalid_argument("add_edge_copies: negative copy count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count() + f.size() * static_cast<size_t>(k));
  for (const auto& e : g.edges()) edges.emplace_back(e.tail, e.head);
  for (int id : f) {
    if (id < 0 || id >= g.edge_count())
      throw std::invalid_argument("add_edge_copies: invalid edge id");
    for (int c = 0; c < k; ++c)
      edges.emplace_back(g.edge(id).tail, g.edge(id).head);
  }
  return Multigraph(g.vertex_count(), edges);
}

}  // namespace circflow
