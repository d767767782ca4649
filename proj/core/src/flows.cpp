#include "circflow/flows.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "circflow/graph_ops.hpp"

namespace circflow {

const char* to_string(FcStatus s) {
  switch (s) {
    case FcStatus::exact_within_bound: return "exact_within_bound";
    case FcStatus::lower_bound_only: return "lower_bound_only";
    default: return "undefined_bridge";
  }
}

bool verify_flow(const Multigraph& g, const FlowAssignment& f) {
  if (static_cast<int>(f.value.size()) != g.edge_count())
    throw std::invalid_argument("verify_flow: assignment does not cover the edge set");
  const Rational one(1), upper = f.r - Rational(1);
  for (const auto& v : f.value) {
    const Rational a = v.abs();
    if (a < one || a > upper) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational sum(0);
    for (int eid : g.incident(v)) {
      const auto& e = g.edge(eid);
      sum += (e.tail == v) ? f.value[eid] : -f.value[eid];
    }
    if (sum != Rational(0)) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

// Union of disjoint closed integer intervals, sorted ascending.
using IntervalSet = std::vector<std::pair<std::int64_t, std::int64_t>>;

IntervalSet merge_intervals(IntervalSet v) {
  std::sort(v.begin(), v.end());
  IntervalSet out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.first <= out.back().second + 1)
      out.back().second = std::max(out.back().second, iv.second);
    else
      out.push_back(iv);
  }
  return out;
}

// The exact set of sums of u terms, each with absolute value in [k, n].
std::vector<IntervalSet> reachable_sets(std::int64_t k, std::int64_t n, int max_u) {
  std::vector<IntervalSet> r(max_u + 1);
  r[0] = {{0, 0}};
  for (int u = 1; u <= max_u; ++u) {
    IntervalSet next;
    for (const auto& iv : r[u - 1]) {
      next.emplace_back(iv.first - n, iv.second - k);
      next.emplace_back(iv.first + k, iv.second + n);
    }
    r[u] = merge_intervals(std::move(next));
  }
  return r;
}

// Cycle-space search for an integer circulation with edge values in
// +-[k, n]. Conservation is automatic in this parametrization; the only
// constraints are the per-tree-edge value ranges.
class CirculationSearch {
public:
  CirculationSearch(const Multigraph& g, std::int64_t k, std::int64_t n,
                    const SearchBudget& budget)
      : g_(g), k_(k), n_(n), budget_(budget) {}

  Verdict run(std::vector<std::int64_t>& edge_values, SearchStats& stats) {
    build_forest();
    build_cycles();
    order_variables();

    const int max_u = tree_vars_.empty()
                          ? 0
                          : static_cast<int>(std::max_element(
                                tree_vars_.begin(), tree_vars_.end(),
                                [](const auto& a, const auto& b) { return a.size() < b.size(); })
                                ->size());
    reach_ = reachable_sets(k_, n_, max_u);

    // A tree edge with no cotree variable is a bridge (value forced 0).
    for (size_t t = 0; t < tree_vars_.size(); ++t)
      if (tree_vars_[t].empty()) return Verdict::no;
    for (size_t t = 0; t < tree_vars_.size(); ++t)
      if (!feasible(static_cast<int>(t))) return Verdict::no;

    values_.assign(var_order_.size(), 0);
    start_ = Clock::now();
    const Verdict v = dfs(0);
    stats.nodes = nodes_;
    stats.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (v != Verdict::yes) return v;

    edge_values.assign(g_.edge_count(), 0);
    for (size_t i = 0; i < var_order_.size(); ++i)
      edge_values[var_order_[i]] = values_[i];
    for (size_t t = 0; t < tree_edge_ids_.size(); ++t)
      edge_values[tree_edge_ids_[t]] = sum_[t];
    return Verdict::yes;
  }

private:
  void build_forest() {
    const int n = g_.vertex_count();
    par_edge_.assign(n, -1);
    par_vertex_.assign(n, -1);
    depth_.assign(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<bool> in_tree(g_.edge_count(), false);
    tree_slot_.assign(g_.edge_count(), -1);

    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::vector<int> queue = {root};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        for (int eid : g_.incident(u)) {
          const int w = g_.edge(eid).other(u);
          if (seen[w]) continue;
          seen[w] = true;
          par_edge_[w] = eid;
          par_vertex_[w] = u;
          depth_[w] = depth_[u] + 1;
          in_tree[eid] = true;
          queue.push_back(w);
        }
      }
    }

    for (const auto& e : g_.edges()) {
      if (in_tree[e.id]) {
        tree_slot_[e.id] = static_cast<int>(tree_edge_ids_.size());
        tree_edge_ids_.push_back(e.id);
      } else {
        cotree_ids_.push_back(e.id);
      }
    }
    tree_vars_.assign(tree_edge_ids_.size(), {});
  }

  // Fundamental cycle of cotree edge c = (a, b): +1 on c along a -> b, then
  // the tree path from b back to a. Coefficients are relative to each tree
  // edge's reference direction.
  void build_cycles() {
    var_affects_.assign(cotree_ids_.size(), {});
    for (size_t vi = 0; vi < cotree_ids_.size(); ++vi) {
      const auto& c = g_.edge(cotree_ids_[vi]);
      int x = c.head, y = c.tail;
      auto add = [&](int tree_eid, int coef) {
        const int slot = tree_slot_[tree_eid];
        var_affects_[vi].emplace_back(slot, coef);
        tree_vars_[slot].push_back(static_cast<int>(vi));
      };
      while (depth_[x] > depth_[y]) {  // climb from head: traversed x -> parent(x)
        const int t = par_edge_[x];
        add(t, g_.edge(t).tail == x ? 1 : -1);
        x = par_vertex_[x];
      }
      while (depth_[y] > depth_[x]) {  // climb from tail: traversed parent(y) -> y
        const int t = par_edge_[y];
        add(t, g_.edge(t).head == y ? 1 : -1);
        y = par_vertex_[y];
      }
      while (x != y) {
        const int tx = par_edge_[x];
        add(tx, g_.edge(tx).tail == x ? 1 : -1);
        x = par_vertex_[x];
        const int ty = par_edge_[y];
        add(ty, g_.edge(ty).head == y ? 1 : -1);
        y = par_vertex_[y];
      }
    }
  }

  // Static order: repeatedly pick the tree edge with the fewest unassigned
  // variables and assign its lowest-id one, so some range constraint always
  // closes as early as possible. Recorded once; the search follows it
  // unchanged.
  void order_variables() {
    const size_t nv = cotree_ids_.size();
    std::vector<int> rem(tree_vars_.size());
    for (size_t t = 0; t < tree_vars_.size(); ++t) rem[t] = static_cast<int>(tree_vars_[t].size());
    std::vector<bool> taken(nv, false);

    for (size_t step = 0; step < nv; ++step) {
      int best_slot = -1;
      for (size_t t = 0; t < tree_vars_.size(); ++t)
        if (rem[t] > 0 && (best_slot == -1 || rem[t] < rem[best_slot]))
          best_slot = static_cast<int>(t);

      int best = -1;
      if (best_slot != -1) {
        for (int vi : tree_vars_[best_slot])
          if (!taken[vi] && (best == -1 || cotree_ids_[vi] < cotree_ids_[best])) best = vi;
      } else {
        for (size_t vi = 0; vi < nv; ++vi)  // vars on no constraint at all
          if (!taken[vi]) {
            best = static_cast<int>(vi);
            break;
          }
      }
      taken[best] = true;
      order_.push_back(best);
      for (const auto& [slot, coef] : var_affects_[best]) {
        (void)coef;
        --rem[slot];
      }
    }

    // Re-index so position in order_ is the search depth.
    var_order_.resize(nv);
    std::vector<std::vector<std::pair<int, int>>> affects(nv);
    for (size_t pos = 0; pos < nv; ++pos) {
      var_order_[pos] = cotree_ids_[order_[pos]];
      affects[pos] = std::move(var_affects_[order_[pos]]);
    }
    var_affects_ = std::move(affects);

    sum_.assign(tree_vars_.size(), 0);
    unassigned_.assign(tree_vars_.size(), 0);
    for (size_t t = 0; t < tree_vars_.size(); ++t)
      unassigned_[t] = static_cast<int>(tree_vars_[t].size());

    value_order_.clear();
    for (std::int64_t a = k_; a <= n_; ++a) {
      value_order_.push_back(a);
      value_order_.push_back(-a);
    }
  }

  bool feasible(int slot) const {
    const std::int64_t s = sum_[slot];
    for (const auto& [lo0, hi0] : reach_[unassigned_[slot]]) {
      const std::int64_t lo = s + lo0, hi = s + hi0;
      if (lo <= -k_ && hi >= -n_) return true;
      if (lo <= n_ && hi >= k_) return true;
    }
    return false;
  }

  Verdict dfs(size_t depth) {
    if (depth == var_order_.size()) return Verdict::yes;
    const auto& affects = var_affects_[depth];
    // Global negation symmetry: the first variable is fixed positive.
    const size_t limit = depth == 0 ? value_order_.size() / 2 : value_order_.size();
    for (size_t i = 0; i < limit; ++i) {
      const std::int64_t val = depth == 0 ? value_order_[2 * i] : value_order_[i];
      if (++nodes_ > budget_.max_nodes) return Verdict::unknown;
      if (budget_.max_seconds && (nodes_ & 8191) == 0 &&
          std::chrono::duration<double>(Clock::now() - start_).count() > *budget_.max_seconds)
        return Verdict::unknown;

      bool ok = true;
      for (const auto& [slot, coef] : affects) {
        sum_[slot] += coef * val;
        --unassigned_[slot];
      }
      for (const auto& [slot, coef] : affects) {
        (void)coef;
        if (!feasible(slot)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        values_[depth] = val;
        const Verdict v = dfs(depth + 1);
        if (v != Verdict::no) {
          if (v == Verdict::unknown) undo(affects, val);
          return v;
        }
      }
      undo(affects, val);
    }
    return Verdict::no;
  }

  void undo(const std::vector<std::pair<int, int>>& affects, std::int64_t val) {
    for (const auto& [slot, coef] : affects) {
      sum_[slot] -= coef * val;
      ++unassigned_[slot];
    }
  }

  const Multigraph& g_;
  std::int64_t k_, n_;
  SearchBudget budget_;

  std::vector<int> par_edge_, par_vertex_, depth_;
  std::vector<int> tree_slot_;
  std::vector<int> tree_edge_ids_, cotree_ids_;
  std::vector<std::vector<int>> tree_vars_;           // slot -> var positions (pre-order)
  std::vector<std::vector<std::pair<int, int>>> var_affects_;  // var -> (slot, coef)
  std::vector<int> order_;
  std::vector<int> var_order_;                        // depth -> cotree edge id
  std::vector<std::int64_t> value_order_;
  std::vector<std::int64_t> sum_, values_;
  std::vector<int> unassigned_;
  std::vector<IntervalSet> reach_;

  std::uint64_t nodes_ = 0;
  Clock::time_point start_;
};

}  // namespace

FlowDecision has_nwz_flow(const Multigraph& g, const Rational& r, const SearchBudget& budget) {
  FlowDecision out;
  if (g.edge_count() == 0) {
    out.verdict = Verdict::yes;
    out.certificate = FlowAssignment{r, {}};
    return out;
  }
  if (r < Rational(2)) {
    out.verdict = Verdict::no;
    return out;
  }
  if (!bridges(g).empty()) {
    out.verdict = Verdict::no;
    return out;
  }

  // r - 1 = n/k in lowest terms; search integer values m with k <= |m| <= n.
  const Rational rm1 = r - Rational(1);
  const std::int64_t nval = rm1.num(), kval = rm1.den();

  CirculationSearch search(g, kval, nval, budget);
  std::vector<std::int64_t> edge_values;
  out.verdict = search.run(edge_values, out.stats);
  if (out.verdict == Verdict::yes) {
    FlowAssignment f;
    f.r = r;
    f.value.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) f.value.emplace_back(edge_values[e], kval);
    if (!verify_flow(g, f))
      throw std::logic_error("has_nwz_flow: produced certificate failed verification");
    out.certificate = std::move(f);
  }
  return out;
}

std::vector<Rational> candidate_ladder(int max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("candidate_ladder: bound must be >= 1");
  std::vector<Rational> out;
  for (int q = 1; q <= max_denominator; ++q)
    for (int p = 2 * q; p <= 6 * q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

FcResult circular_flow_number(const Multigraph& g, int max_denominator,
                              const SearchBudget& budget) {
  FcResult out;
  if (!bridges(g).empty()) {
    out.status = FcStatus::undefined_bridge;
    return out;
  }
  const int q_bound = max_denominator > 0 ? max_denominator : std::max(1, g.vertex_count());
  const std::vector<Rational> ladder = candidate_ladder(q_bound);

  std::optional<Rational> largest_refuted;
  auto accumulate = [&](const FlowDecision& d) {
    out.stats.nodes += d.stats.nodes;
    out.stats.seconds += d.stats.seconds;
  };
  auto lower_bound_result = [&]() {
    out.status = FcStatus::lower_bound_only;
    out.value = largest_refuted.value_or(Rational(2));
    out.refused_candidate = largest_refuted;
    out.witness.reset();
    return out;
  };

  // Probe the ceiling first: bridgeless graphs always admit a candidate at or
  // below 6, so a refusal here means the solver itself is broken.
  int lo = 0, hi = static_cast<int>(ladder.size()) - 1;
  FlowDecision top = has_nwz_flow(g, ladder[hi], budget);
  accumulate(top);
  if (top.verdict == Verdict::unknown) return lower_bound_result();
  if (top.verdict == Verdict::no)
    throw std::logic_error(
        "circular_flow_number: no ladder candidate <= 6 admitted a flow on a "
        "bridgeless graph; this indicates a solver bug");
  std::optional<FlowAssignment> best_cert = std::move(top.certificate);

  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    FlowDecision d = has_nwz_flow(g, ladder[mid], budget);
    accumulate(d);
    if (d.verdict == Verdict::unknown) return lower_bound_result();
    if (d.verdict == Verdict::yes) {
      hi = mid;
      best_cert = std::move(d.certificate);
    } else {
      lo = mid + 1;
      if (!largest_refuted || *largest_refuted < ladder[mid]) largest_refuted = ladder[mid];
    }
  }

  out.status = FcStatus::exact_within_bound;
  out.value = ladder[lo];
  out.witness = std::move(best_cert);
  if (lo > 0) out.refused_candidate = ladder[lo - 1];
  return out;
}

std::pair<Orientation, std::vector<Rational>> normalize_positive(const Multigraph& g,
                                                                 const FlowAssignment& f) {
  if (!verify_flow(g, f))
    throw std::invalid_argument("normalize_positive: assignment is not a valid flow");
  Orientation o;
  o.sign.reserve(f.value.size());
  std::vector<Rational> vals;
  vals.reserve(f.value.size());
  for (const auto& v : f.value) {
    o.sign.push_back(v.sign() >= 0 ? 1 : -1);
    vals.push_back(v.abs());
  }
  return {std::move(o), std::move(vals)};
}

std::string serialize_flow(const FlowAssignment& f) {
  std::string out = "flow r=" + f.r.to_fraction_string() + "\n";
  for (size_t e = 0; e < f.value.size(); ++e) {
    const Rational& v = f.value[e];
    out += std::to_string(e) + " " + (v.sign() >= 0 ? "+" : "-") + v.abs().to_fraction_string() +
           "\n";
  }
  return out;
}

FlowAssignment parse_flow_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  FlowAssignment f;
  bool have_header = false;
  std::vector<std::pair<long, Rational>> entries;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      constexpr std::string_view prefix = "flow r=";
      if (line.rfind(prefix, 0) != 0)
        throw std::invalid_argument("flow certificate: missing \"flow r=\" header");
      f.r = Rational::parse(line.substr(prefix.size()));
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    long id;
    std::string tok;
    if (!(ls >> id >> tok)) throw std::invalid_argument("flow certificate: bad edge line");
    entries.emplace_back(id, Rational::parse(tok));
  }
  if (!have_header) throw std::invalid_argument("flow certificate: empty input");
  f.value.assign(entries.size(), Rational(0));
  for (const auto& [id, v] : entries) {
    if (id < 0 || id >= static_cast<long>(entries.size()))
      throw std::invalid_argument("flow certificate: edge id out of range");
    f.value[id] = v;
  }
  return f;
}

}  // namespace circflow
