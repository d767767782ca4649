#include "circflow/valuations.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace circflow {

namespace {

// Scales rational weights to a common integer grid. Throws only on absurd
// denominators (the project works with small exact rationals throughout).
struct ScaledWeights {
  std::int64_t denom = 1;
  std::vector<std::int64_t> w;
};

ScaledWeights scale_weights(const std::vector<Rational>& w) {
  ScaledWeights s;
  for (const auto& x : w) {
    s.denom = std::lcm(s.denom, x.den());
    if (s.denom > (std::int64_t{1} << 40))
      throw std::invalid_argument("valuation weights: common denominator too large");
  }
  s.w.reserve(w.size());
  for (const auto& x : w) s.w.push_back(x.num() * (s.denom / x.den()));
  return s;
}

// Plain Dinic max-flow on integer capacities.
class Dinic {
public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      it_ = head_;
      std::int64_t pushed;
      while ((pushed = dfs(s, t, INT64_MAX)) > 0) total += pushed;
    }
    return total;
  }

  // Vertices reachable from s in the residual graph (the min-cut source side).
  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] == -1) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] != -1;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1) {
        const std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_, level_, it_;
};

}  // namespace

BalanceCheck is_balanced_brute(const Multigraph& g, const std::vector<Rational>& w,
                               int max_vertices) {
  const int n = g.vertex_count();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("is_balanced_brute: weight count mismatch");
  if (n > max_vertices || n > 62)
    throw std::invalid_argument("is_balanced_brute: vertex count exceeds the scan bound");
  if (n == 0) return {true, std::nullopt};

  const ScaledWeights sw = scale_weights(w);
  std::int64_t total = 0;
  for (auto x : sw.w) total += x;

  // One evaluation per complement pair: masks without vertex n-1, paired with
  // their complements. A direct violation is minimal immediately; among
  // complement violations the last one found has the smallest mask.
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::optional<std::uint64_t> complement_violator;

  for (std::uint64_t mask = 0; mask < half; ++mask) {
    std::int64_t sum = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1)
      sum += sw.w[__builtin_ctzll(bits)];
    std::int64_t cut = 0;
    for (const auto& e : g.edges())
      cut += ((mask >> e.tail) ^ (mask >> e.head)) & 1;
    const std::int64_t bound = cut * sw.denom;
    if (sum > bound || -sum > bound)
      return {false, VertexSet::from_mask(n, mask)};
    const std::int64_t csum = total - sum;
    if (csum > bound || -csum > bound) complement_violator = full ^ mask;
  }

  if (complement_violator) return {false, VertexSet::from_mask(n, *complement_violator)};
  return {true, std::nullopt};
}

BalanceCheck is_balanced_mincut(const Multigraph& g, const std::vector<Rational>& w) {
  const int n = g.vertex_count();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("is_balanced_mincut: weight count mismatch");
  if (n == 0) return {true, std::nullopt};

  const ScaledWeights sw = scale_weights(w);

  // One run per inequality sign: decide min over X of D*|cut(X)| - sum_X(s*W)
  // >= 0 via s-t min cut. Source arcs carry the positive weights; min cut
  // minus their total equals the minimum above.
  for (int sign : {+1, -1}) {
    const int source = n, sink = n + 1;
    Dinic net(n + 2);
    std::int64_t positive_total = 0;
    for (int v = 0; v < n; ++v) {
      const std::int64_t x = sign * sw.w[v];
      if (x > 0) {
        net.add_edge(source, v, x);
        positive_total += x;
      } else if (x < 0) {
        net.add_edge(v, sink, -x);
      }
    }
    for (const auto& e : g.edges()) {
      net.add_edge(e.tail, e.head, sw.denom);
      net.add_edge(e.head, e.tail, sw.denom);
    }
    const std::int64_t flow = net.max_flow(source, sink);
    if (flow < positive_total) {
      const std::vector<bool> side = net.reachable(source);
      VertexSet x(n);
      for (int v = 0; v < n; ++v)
        if (side[v]) x.insert(v);
      return {false, x};
    }
  }
  return {true, std::nullopt};
}

std::pair<BalancedValuation, JaegerForm> flow_to_valuation(const Multigraph& g,
                                                           const FlowAssignment& f) {
  if (!(f.r > Rational(2)))
    throw std::invalid_argument("flow_to_valuation: requires r > 2");
  const auto [orient, vals] = normalize_positive(g, f);  // verifies f

  JaegerForm jf;
  jf.r = f.r;
  jf.k.assign(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    const int out_v = orient.sign[e.id] > 0 ? e.tail : e.head;
    const int in_v = orient.sign[e.id] > 0 ? e.head : e.tail;
    jf.k[out_v] += 1;
    jf.k[in_v] -= 1;
  }

  BalancedValuation bv;
  bv.w.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (((jf.k[v] - g.degree(v)) % 2) != 0)
      throw CorrespondenceError("flow_to_valuation: parity self-check failed");
    bv.w.push_back(jf.weight(v));
  }

  const BalanceCheck check = is_balanced_mincut(g, bv.w);
  if (!check.balanced)
    throw CorrespondenceError("flow_to_valuation: balance self-check failed");
  return {std::move(bv), std::move(jf)};
}

Rational r_to_weight(const Rational& r) {
  if (!(r > Rational(2))) throw std::invalid_argument("r_to_weight: requires r > 2");
  return r / (r - Rational(2));
}

Rational weight_to_r(const Rational& c) {
  if (!(c > Rational(1))) throw std::invalid_argument("weight_to_r: requires c > 1");
  return Rational(2) * c / (c - Rational(1));
}

Rational max_uniform_weight(const Multigraph& g, const VertexSet& a, const VertexSet& b,
                            int max_vertices) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("max_uniform_weight: empty graph");
  if (n > max_vertices || n > 62)
    throw std::invalid_argument("max_uniform_weight: vertex count exceeds the scan bound");
  if (a.universe_size() != n || b.universe_size() != n)
    throw std::invalid_argument("max_uniform_weight: vertex set universe mismatch");
  for (int v = 0; v < n; ++v)
    if (a.contains(v) == b.contains(v))
      throw std::invalid_argument("max_uniform_weight: a, b must partition V");

  const std::uint64_t amask = a.mask();
  std::optional<Rational> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int in_a = __builtin_popcountll(mask & amask);
    const int in_b = __builtin_popcountll(mask & ~amask & ((std::uint64_t{1} << n) - 1));
    const int diff = in_a > in_b ? in_a - in_b : in_b - in_a;
    if (diff == 0) continue;
    int cut = 0;
    for (const auto& e : g.edges())
      cut += ((mask >> e.tail) ^ (mask >> e.head)) & 1;
    const Rational candidate(cut, diff);
    if (!best || candidate < *best) best = candidate;
  }
  // Some subset always separates the classes (any singleton does).
  return *best;
}

RefuteResult refute_flow_by_valuation(const Multigraph& g, const Rational& r,
                                      int max_vertices) {
  const int n = g.vertex_count();
  const auto reg = g.regular_degree();
  if (!reg || *reg % 2 == 0)
    throw std::invalid_argument("refute_flow_by_valuation: graph must be regular of odd degree");
  if (!(r > Rational(2)))
    throw std::invalid_argument("refute_flow_by_valuation: requires r > 2");
  if (n > max_vertices || n > 20)
    throw std::invalid_argument("refute_flow_by_valuation: vertex count exceeds the bound");
  const int d = *reg;

  // w(v) = k_v * p/q with p/q = r/(r-2) > 1. Balance on the singleton {v}
  // already forces |k_v| * p <= d * q, which caps the alphabet.
  const Rational factor = r_to_weight(r);
  const std::int64_t p = factor.num(), q = factor.den();
  std::vector<std::int64_t> alphabet;
  for (std::int64_t k = 1; k <= d; k += 2) {
    if (k * p > static_cast<std::int64_t>(d) * q) break;
    alphabet.push_back(k);
    alphabet.push_back(-k);
  }
  if (alphabet.empty()) return {RefuteVerdict::refuted, std::nullopt};

  // Exact cut sizes for every subset, by DP over masks.
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    ++mult[e.tail][e.head];
    ++mult[e.head][e.tail];
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::int32_t> cut(size, 0);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int links = 0;
    for (std::uint32_t bits = rest; bits; bits &= bits - 1) links += mult[v][__builtin_ctz(bits)];
    cut[mask] = cut[rest] + d - 2 * links;
  }

  // Depth-first over vertices; assigning k_v validates every subset that
  // contains v and only previously assigned vertices. A violated subset cuts
  // the branch: its weight sum is already final.
  std::vector<std::int64_t> sum(size, 0);
  std::vector<std::int64_t> assign(n, 0);

  auto balanced_at = [&](std::uint32_t mask) {
    const std::int64_t s = sum[mask] * p;
    const std::int64_t bound = static_cast<std::int64_t>(cut[mask]) * q;
    return s <= bound && -s <= bound;
  };

  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    const std::uint32_t bit = std::uint32_t{1} << v;
    const std::uint32_t prefix = bit;  // subsets of {0..v-1} are masks < bit
    for (std::int64_t k : alphabet) {
      assign[v] = k;
      bool ok = true;
      for (std::uint32_t sub = 0; sub < prefix; ++sub) {
        const std::uint32_t mask = sub | bit;
        sum[mask] = sum[sub] + k;
        if (!balanced_at(mask)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1)) return true;
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    JaegerForm jf;
    jf.r = r;
    jf.k = assign;
    return {RefuteVerdict::not_refuted, std::move(jf)};
  }
  return {RefuteVerdict::refuted, std::nullopt};
}

std::string serialize_valuation(const std::vector<Rational>& w) {
  std::string out;
  for (size_t v = 0; v < w.size(); ++v)
    out += std::to_string(v) + " " + w[v].to_fraction_string() + "\n";
  return out;
}

std::vector<Rational> parse_valuation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<long, Rational>> entries;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long v;
    std::string tok;
    if (!(ls >> v >> tok)) throw std::invalid_argument("valuation: bad line");
    entries.emplace_back(v, Rational::parse(tok));
  }
  std::vector<Rational> w(entries.size(), Rational(0));
  for (const auto& [v, x] : entries) {
    if (v < 0 || v >= static_cast<long>(entries.size()))
      throw std::invalid_argument("valuation: vertex id out of range");
    w[v] = x;
  }
  return w;
}

}  // namespace circflow
