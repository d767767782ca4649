// Acceptance gate: one test case per criterion, each printing a single
// PASS/FAIL line. Run everything with `ctest` or a single criterion with
// `test_acceptance -tc='criterion-3*'`.
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "circflow/analysis.hpp"
#include "circflow/constructions.hpp"
#include "circflow/flows.hpp"
#include "circflow/graph_io.hpp"
#include "circflow/graph_ops.hpp"
#include "circflow/valuations.hpp"
#include "test_util.hpp"

using namespace circflow;
using namespace testutil;

namespace {

using Clock = std::chrono::steady_clock;

// Collects a criterion's verdict and prints exactly one line at scope exit.
struct Criterion {
  std::string name;
  bool ok = true;
  Clock::time_point start = Clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}
  ~Criterion() {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[acceptance] %s: %s (%.1fs)\n", name.c_str(), ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
  }

  void check(bool condition, const char* what) {
    ok = ok && condition;
    CHECK_MESSAGE(condition, what);
  }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

}  // namespace

TEST_SUITE_BEGIN("acceptance");

TEST_CASE("criterion-1 exact flow number table") {
  Criterion crit("criterion 1 (exact F_c table)");
  struct Row {
    const char* name;
    Multigraph g;
    Rational expect;
  };
  const std::vector<Row> rows = {
      {"K4", complete_graph(4), Rational(4)},
      {"K6", complete_graph(6), Rational(3)},
      {"K33", complete_bipartite(3, 3), Rational(3)},
      {"K2^3", k2_multi(1), Rational(3)},
      {"K2^5", k2_multi(2), Rational(5, 2)},
      {"Petersen", load_fixture("petersen.mg"), Rational(5)},
  };
  for (const auto& row : rows) {
    const auto t0 = Clock::now();
    const FcResult fc = circular_flow_number(row.g);  // denominator bound |V|
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    crit.check(fc.status == FcStatus::exact_within_bound, row.name);
    crit.check(fc.value == row.expect, row.name);
    crit.check(fc.witness && verify_flow(row.g, *fc.witness), "witness verifies");
    crit.check(secs < 60.0, "per-graph budget 60 s");
  }
}

TEST_CASE("criterion-2 petersen family suite at t=2") {
  Criterion crit("criterion 2 (P5 suite)");
  const Multigraph p5 = petersen_family(2);
  crit.check(p5.regular_degree() == 5, "5-regular");
  crit.check(p5.edge_count() == 25, "25 edges");
  crit.check(classify(p5).value == GraphClass::class2, "class 2");
  crit.check(is_t_graph(p5, 2), "5-graph (no odd cut below 5)");

  const PetersenData& data = petersen_data();
  std::vector<Rational> w(10);
  for (int v = 0; v < 10; ++v)
    w[v] = data.a.contains(v) ? Rational(11, 3) : Rational(-11, 3);
  const bool balanced = is_balanced_mincut(p5, w).balanced && is_balanced_brute(p5, w).balanced;
  crit.check(balanced, "+-11/3 balanced");

  // the largest ladder candidate below 11/4 at denominator bound 10
  const std::vector<Rational> ladder = candidate_ladder(10);
  Rational predecessor(2);
  for (const Rational& r : ladder)
    if (r < Rational(11, 4)) predecessor = r;
  crit.check(predecessor == Rational(19, 7), "predecessor of 11/4 at Q=10 is 19/7");
  crit.check(refute_flow_by_valuation(p5, predecessor).verdict == RefuteVerdict::refuted,
             "valuation oracle refutes below 11/4");

  const FlowDecision at_bound = has_nwz_flow(p5, Rational(11, 4));
  if (at_bound.verdict == Verdict::yes) {
    crit.check(verify_flow(p5, *at_bound.certificate), "11/4 certificate verifies");
  } else if (at_bound.verdict == Verdict::unknown) {
    // fallback: refutation below the bound plus balance at the bound
    crit.check(balanced, "fallback balance at 11/4");
    std::printf("[acceptance] note: 11/4 flow search exhausted its budget; "
                "fallback path taken\n");
  } else {
    crit.check(false, "11/4 flow refused (contradicts the family's flow number)");
  }
  crit.check(crit.elapsed() < 900.0, "combined budget 15 min");
}

TEST_CASE("criterion-3 cubic exhaustive equivalences") {
  Criterion crit("criterion 3 (cubic catalog equivalences)");
  const ScanResult scan = scan_catalog(fixture_path("cubic_catalog"), 1);
  crit.check(scan.entries.size() == 26, "catalog has 26 bridgeless members");
  crit.check(scan.skips.empty(), "no skips");

  std::map<int, int> per_n;
  int class2_count = 0;
  for (const auto& entry : scan.entries) {
    const auto& r = entry.report;
    ++per_n[r.n];
    crit.check(r.fc && r.fc->status == FcStatus::exact_within_bound, "exact fc");
    const Rational fc = r.fc->value;
    crit.check(r.bipartite == (fc == Rational(3)), "bipartite <=> fc = 3");
    const bool class1 = r.graph_class == GraphClass::class1;
    crit.check(class1 == (fc <= Rational(4)), "class 1 <=> fc <= 4");
    crit.check(fc == Rational(3) || fc >= Rational(4), "no value inside (3, 4)");
    crit.check(r.bipartizing_searched, "bipartizing factor searched");
    crit.check(r.bipartizing_factor.has_value() == (fc <= Rational(4)),
               "bipartizing factor <=> fc <= 4");
    crit.check(r.inconsistencies.empty(), "no inconsistency flags");
    if (r.graph_class == GraphClass::class2) ++class2_count;
  }
  crit.check(per_n[4] == 1 && per_n[6] == 2 && per_n[8] == 5 && per_n[10] == 18,
             "catalog sizes match the published counts");
  crit.check(class2_count == 1, "exactly one class-2 member at this size");
  crit.check(scan.phi.value && *scan.phi.value == Rational(5), "phi estimate 5");
  crit.check(crit.elapsed() < 1800.0, "budget 30 min");
}

TEST_CASE("criterion-4 gadget gluing reproduction at t=2") {
  Criterion crit("criterion 4 (glue + equal-fc pair)");
  const auto [glue, labels] = glue_gadgets(k2_multi(1), 2);
  crit.check(glue.regular_degree() == 5, "5-regular");

  const OddCutScan scan = odd_cut_obstruction(glue);
  crit.check(scan.found() && scan.witness->second.size() == 3, "odd cut of size 3");
  crit.check(classify(glue).value == GraphClass::class2, "class 2");
  const FcResult fc = circular_flow_number(glue);
  crit.check(fc.status == FcStatus::exact_within_bound && fc.value == Rational(3), "fc = 3");

  const ScanResult pair_scan = scan_catalog(fixture_path("prop_pair"), 2);
  crit.check(pair_scan.entries.size() == 2, "pair catalog intact");
  crit.check(pair_scan.findings.equal_fc_class_pairs.size() == 1, "one pair record");
  if (!pair_scan.findings.equal_fc_class_pairs.empty()) {
    const auto& p = pair_scan.findings.equal_fc_class_pairs[0];
    crit.check(p.class1_id == "k6.mg" && p.class2_id == "glue_k23.mg" && p.fc == Rational(3),
               "pair is (K6, glue) at fc = 3");
  }
  crit.check(crit.elapsed() < 300.0, "budget 5 min");
}

TEST_CASE("criterion-5 oracle independence") {
  Criterion crit("criterion 5 (flow solver vs valuation oracle)");
  struct Probe {
    const char* name;
    Multigraph g;
  };
  const std::vector<Probe> graphs = {
      {"K4", complete_graph(4)},
      {"K6", complete_graph(6)},
      {"K33", complete_bipartite(3, 3)},
      {"K2^3", k2_multi(1)},
      {"K2^5", k2_multi(2)},
      {"Petersen", load_fixture("petersen.mg")},
      {"P5", petersen_family(2)},
      {"glue", glue_gadgets(k2_multi(1), 2).first},
  };
  for (const auto& probe : graphs) {
    const FcResult fc = circular_flow_number(probe.g);
    crit.check(fc.status == FcStatus::exact_within_bound, probe.name);
    if (fc.status != FcStatus::exact_within_bound) continue;

    // Every certificate must map to a balanced valuation.
    if (fc.value > Rational(2)) {
      bool threw = false;
      try {
        flow_to_valuation(probe.g, *fc.witness);
      } catch (...) {
        threw = true;
      }
      crit.check(!threw, "certificate valuation balanced");
    }

    // Where both oracles run they must agree: refuted <=> solver says no.
    std::vector<Rational> rs = {fc.value};
    if (fc.refused_candidate) rs.push_back(*fc.refused_candidate);
    for (const Rational& r : rs) {
      if (!(r > Rational(2)) || probe.g.vertex_count() > 12) continue;
      const Verdict solver = has_nwz_flow(probe.g, r).verdict;
      const RefuteVerdict valuation = refute_flow_by_valuation(probe.g, r).verdict;
      if (valuation == RefuteVerdict::refuted)
        crit.check(solver == Verdict::no, "refuted implies no");
      crit.check((valuation == RefuteVerdict::refuted) == (solver == Verdict::no),
                 "oracles decide identically");
    }
  }
}

TEST_CASE("criterion-6 valuation oracle equivalence") {
  Criterion crit("criterion 6 (brute vs mincut balance)");
  std::mt19937 rng(424242);
  auto violates_at = [](const Multigraph& g, const std::vector<Rational>& w,
                        const VertexSet& x) {
    Rational sum(0);
    for (int v : x.to_vector()) sum += w[v];
    return sum.abs() > Rational(boundary(g, x).size());
  };
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int density = 1 + static_cast<int>(rng() % 3);  // sparse to dense
    std::vector<std::pair<int, int>> edges;
    const int target = static_cast<int>(rng() % (density * n + 1));
    for (int e = 0; e < target; ++e) {
      const int u = static_cast<int>(rng() % n);
      const int v = static_cast<int>(rng() % n);
      if (u != v) edges.emplace_back(u, v);
    }
    const Multigraph g(n, edges);
    std::vector<Rational> w;
    for (int v = 0; v < n; ++v)
      w.emplace_back(static_cast<int>(rng() % 25) - 12, 1 + static_cast<int>(rng() % 6));

    const BalanceCheck brute = is_balanced_brute(g, w);
    const BalanceCheck mincut = is_balanced_mincut(g, w);
    crit.check(brute.balanced == mincut.balanced, "identical verdicts");
    if (!brute.balanced) {
      crit.check(violates_at(g, w, *brute.violator), "brute violator genuine");
      crit.check(violates_at(g, w, *mincut.violator), "mincut violator genuine");
    }
  }
  crit.check(crit.elapsed() < 120.0, "budget 2 min");
}

TEST_CASE("criterion-7 small-instance solver equivalence") {
  Criterion crit("criterion 7 (cycle-space vs naive enumeration)");

  // Naive oracle: assign signed values edge by edge (every orientation and
  // magnitude), checking conservation at each vertex whose incident edges
  // are complete. Shares nothing with the spanning-tree parametrization.
  auto naive_decide = [](const Multigraph& g, const Rational& r) {
    const Rational rm1 = r - Rational(1);
    const std::int64_t k = rm1.den(), n = rm1.num();
    if (n < k) return false;  // r < 2
    const int m = g.edge_count();
    std::vector<int> remaining(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) remaining[v] = g.degree(v);
    std::vector<std::int64_t> sum(g.vertex_count(), 0);
    std::vector<std::int64_t> values;
    for (std::int64_t a = k; a <= n; ++a) {
      values.push_back(a);
      values.push_back(-a);
    }
    auto rec = [&](auto&& self, int e) -> bool {
      if (e == m) return true;
      const auto& edge = g.edge(e);
      for (std::int64_t val : values) {
        sum[edge.tail] += val;
        sum[edge.head] -= val;
        --remaining[edge.tail];
        --remaining[edge.head];
        const bool ok = (remaining[edge.tail] > 0 || sum[edge.tail] == 0) &&
                        (remaining[edge.head] > 0 || sum[edge.head] == 0);
        if (ok && self(self, e + 1)) return true;
        sum[edge.tail] -= val;
        sum[edge.head] += val;
        ++remaining[edge.tail];
        ++remaining[edge.head];
      }
      return false;
    };
    return rec(rec, 0);
  };

  // Exhaustive multigraphs with <= 8 edges and no isolated vertices, in
  // first-appearance labeling with lexicographically sorted edge lists.
  std::vector<Multigraph> graphs;
  std::vector<std::pair<int, int>> edges;
  auto build = [&](auto&& self, int max_vertex) -> void {
    if (!edges.empty()) {
      const Multigraph g(max_vertex + 1, edges);
      if (bridges(g).empty()) graphs.push_back(g);
    }
    if (edges.size() == 8) return;
    const std::pair<int, int> last = edges.empty() ? std::pair<int, int>{-1, -1} : edges.back();
    for (int u = 0; u <= max_vertex + 1; ++u) {
      const int v_hi = (u == max_vertex + 1) ? u + 1 : max_vertex + 1;
      for (int v = u + 1; v <= v_hi; ++v) {
        if (std::pair<int, int>{u, v} < last) continue;  // sorted edge lists only
        edges.emplace_back(u, v);
        self(self, std::max(max_vertex, v));
        edges.pop_back();
      }
    }
  };
  build(build, -1);
  std::printf("[acceptance] criterion 7 enumerated %zu bridgeless multigraphs\n",
              graphs.size());
  crit.check(graphs.size() > 1000, "enumeration nontrivial");

  const std::vector<Rational> rs = {Rational(2), Rational(5, 2), Rational(3), Rational(7, 2),
                                    Rational(4)};
  long disagreements = 0;
  for (const auto& g : graphs) {
    for (const Rational& r : rs) {
      const bool fast = has_nwz_flow(g, r).verdict == Verdict::yes;
      const bool slow = naive_decide(g, r);
      if (fast != slow) ++disagreements;
    }
  }
  crit.check(disagreements == 0, "zero disagreements");
}

TEST_CASE("criterion-8 property suites and determinism") {
  Criterion crit("criterion 8 (property suites + determinism)");

  // negation closure on a produced certificate
  const Multigraph p = load_fixture("petersen.mg");
  const FlowDecision d = has_nwz_flow(p, Rational(5));
  crit.check(d.verdict == Verdict::yes, "5-flow exists");
  for (int e = 0; e < p.edge_count() && d.certificate; ++e) {
    std::vector<std::pair<int, int>> flipped_edges;
    for (const auto& edge : p.edges())
      flipped_edges.emplace_back(edge.id == e ? edge.head : edge.tail,
                                 edge.id == e ? edge.tail : edge.head);
    FlowAssignment f = *d.certificate;
    f.value[e] = -f.value[e];
    crit.check(verify_flow(Multigraph(10, flipped_edges), f), "negation closure");
  }

  // monotonicity sampling
  crit.check(has_nwz_flow(p, Rational(5)).verdict == Verdict::yes &&
                 has_nwz_flow(p, Rational(11, 2)).verdict == Verdict::yes &&
                 has_nwz_flow(p, Rational(6)).verdict == Verdict::yes,
             "monotone above 5");
  crit.check(has_nwz_flow(p, Rational(4)).verdict == Verdict::no &&
                 has_nwz_flow(p, Rational(3)).verdict == Verdict::no,
             "monotone below 5");

  // handshake + round trip on the catalog
  namespace fs = std::filesystem;
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(fixture_path("cubic_catalog"))) {
    const std::string text = read_file(entry.path().string());
    const Multigraph g = parse_multigraph(text);
    long deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v) deg += g.degree(v);
    crit.check(deg == 2L * g.edge_count(), "handshake");
    crit.check(serialize(g) == text, "round trip byte-identical");
    ++seen;
  }
  crit.check(seen == 26, "catalog present");

  // matching-count oracle
  crit.check(all_perfect_matchings(p).size() == 6, "petersen has 6 matchings");

  // determinism: two scans produce identical bytes
  const std::string base = std::string(CIRCFLOW_BIN_PATH) + " scan " +
                           fixture_path("prop_pair") + " --t 2";
  const int rc1 =
      std::system((base + " --report /tmp/acc_scan1.json > /tmp/acc_scan1.txt").c_str());
  const int rc2 =
      std::system((base + " --report /tmp/acc_scan2.json > /tmp/acc_scan2.txt").c_str());
  crit.check(rc1 == 0 && rc2 == 0, "scan runs succeed");
  crit.check(read_file("/tmp/acc_scan1.json") == read_file("/tmp/acc_scan2.json"),
             "identical report bytes");
  crit.check(read_file("/tmp/acc_scan1.txt") == read_file("/tmp/acc_scan2.txt"),
             "identical table bytes");
  std::remove("/tmp/acc_scan1.json");
  std::remove("/tmp/acc_scan2.json");
  std::remove("/tmp/acc_scan1.txt");
  std::remove("/tmp/acc_scan2.txt");
}

TEST_SUITE_END();
