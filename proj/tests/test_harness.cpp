#include <doctest.h>

#include "circflow/analysis.hpp"
#include "circflow/constructions.hpp"
#include "circflow/graph_io.hpp"
#include "test_util.hpp"

using namespace circflow;
using namespace testutil;

TEST_SUITE_BEGIN("harness");

TEST_CASE("analyze petersen") {
  const AnalysisReport r = analyze(load_fixture("petersen.mg"), "petersen");
  CHECK(r.n == 10);
  CHECK(r.m == 15);
  CHECK(r.regular_degree == 3);
  CHECK_FALSE(r.bipartite);
  CHECK(r.graph_class == GraphClass::class2);
  REQUIRE(r.chi.has_value());
  CHECK(r.chi->exact);
  CHECK(r.chi->upper == 4);
  REQUIRE(r.fc.has_value());
  CHECK(r.fc->status == FcStatus::exact_within_bound);
  CHECK(r.fc->value == Rational(5));
  CHECK(r.fc->refused_candidate == Rational(49, 10));
  CHECK(r.bipartizing_searched);
  CHECK_FALSE(r.bipartizing_factor.has_value());
  REQUIRE(r.odd_cut.has_value());
  CHECK(r.odd_cut->status == OddCutScan::Status::none);  // 3-graph
  CHECK(r.inconsistencies.empty());
  REQUIRE(r.valuation_notes.size() == 1);  // balanced valuation from the 5-flow
}

TEST_CASE("analyze k6 and k2_5") {
  const AnalysisReport k6 = analyze(complete_graph(6), "k6");
  CHECK(k6.graph_class == GraphClass::class1);
  CHECK(k6.fc->value == Rational(3));
  CHECK(k6.inconsistencies.empty());

  const AnalysisReport k25 = analyze(k2_multi(2), "k2_5");
  CHECK(k25.bipartite);
  CHECK(k25.graph_class == GraphClass::class1);
  CHECK(k25.fc->value == Rational(5, 2));
  CHECK(k25.inconsistencies.empty());
}

TEST_CASE("analyze records bridges as undefined fc") {
  const AnalysisReport r = analyze(two_triangles_bridged(), "bridged");
  REQUIRE(r.fc.has_value());
  CHECK(r.fc->status == FcStatus::undefined_bridge);
  CHECK(r.inconsistencies.empty());
}

TEST_CASE("scan_catalog filters, skips and orders deterministically") {
  const ScanResult res = scan_catalog(fixture_path("scan_small"), 1);
  // accepted: bridgeless cubic members in filename order, then line order
  REQUIRE(res.entries.size() == 3);
  CHECK(res.entries[0].id == "cubic_pair.g6:1");  // K33
  CHECK(res.entries[1].id == "cubic_pair.g6:2");  // triangular prism
  CHECK(res.entries[2].id == "k4.mg");
  CHECK(res.entries[0].report.bipartite);
  CHECK(res.entries[0].report.fc->value == Rational(3));
  CHECK_FALSE(res.entries[1].report.bipartite);
  CHECK(res.entries[1].report.fc->value == Rational(4));
  CHECK(res.entries[2].report.fc->value == Rational(4));

  REQUIRE(res.skips.size() == 4);
  CHECK(res.skips[0].id == "bridged_cubic.mg");
  CHECK(res.skips[0].reason == "has a bridge");
  CHECK(res.skips[1].id == "broken.mg");
  CHECK(res.skips[1].reason.find("parse error") == 0);
  CHECK(res.skips[2].id == "k6.mg");
  CHECK(res.skips[2].reason.find("not (2t+1)-regular") == 0);
  CHECK(res.skips[3].id == "notes.txt");

  // no class-2 member in this toy catalog
  CHECK_FALSE(res.phi.value.has_value());
  for (const auto& e : res.entries) CHECK(e.report.inconsistencies.empty());
}

TEST_CASE("scan on a missing directory is an input error") {
  CHECK_THROWS_AS(scan_catalog("/nonexistent-dir-xyz", 1), std::invalid_argument);
  CHECK_THROWS_AS(scan_catalog(fixture_path("scan_small"), 0), std::invalid_argument);
}

TEST_CASE("problem-pair reproduction at t = 2") {
  const ScanResult res = scan_catalog(fixture_path("prop_pair"), 2);
  REQUIRE(res.entries.size() == 2);

  const auto& glue = res.entries[0];  // glue_k23.mg
  const auto& k6 = res.entries[1];    // k6.mg
  CHECK(glue.id == "glue_k23.mg");
  CHECK(glue.report.graph_class == GraphClass::class2);
  CHECK(glue.report.class_via_odd_cut);
  CHECK(glue.report.fc->value == Rational(3));
  REQUIRE(glue.report.odd_cut.has_value());
  CHECK(glue.report.odd_cut->status == OddCutScan::Status::found);
  CHECK(glue.report.odd_cut->cut_edges.size() == 3);

  CHECK(k6.report.graph_class == GraphClass::class1);
  CHECK(k6.report.fc->value == Rational(3));

  // phi estimate: the class-2 member
  REQUIRE(res.phi.value.has_value());
  CHECK(*res.phi.value == Rational(3));
  CHECK(res.phi.witness_id == "glue_k23.mg");

  // fc = 3 lies in (2 + 2/(2t-1), 2 + 2/t] = (8/3, 3]: one pair record
  REQUIRE(res.findings.equal_fc_class_pairs.size() == 1);
  CHECK(res.findings.equal_fc_class_pairs[0].class1_id == "k6.mg");
  CHECK(res.findings.equal_fc_class_pairs[0].class2_id == "glue_k23.mg");
  CHECK(res.findings.equal_fc_class_pairs[0].fc == Rational(3));

  // no conjecture counterexamples
  CHECK(res.findings.class2_below_lower_bound.empty());
  CHECK(res.findings.class1_above_upper_bound.empty());
  CHECK(res.findings.tgraph_above_upper_bound.empty());
}

TEST_CASE("pair interval endpoints: open left, closed right") {
  // Build entries by hand around the t = 2 interval (8/3, 3].
  auto entry = [](const std::string& id, GraphClass cls, const Rational& fc) {
    CatalogEntry e;
    e.id = id;
    e.graph = complete_graph(6);
    e.report.id = id;
    e.report.graph_class = cls;
    e.report.fc = FcReport{FcStatus::exact_within_bound, fc, 6, Rational(2), true, 0};
    return e;
  };
  // fc exactly 8/3 (left endpoint): excluded
  std::vector<CatalogEntry> left = {entry("a", GraphClass::class1, Rational(8, 3)),
                                    entry("b", GraphClass::class2, Rational(8, 3))};
  CHECK(conjecture_checks(left, 2).equal_fc_class_pairs.empty());
  // fc exactly 3 (right endpoint): included
  std::vector<CatalogEntry> right = {entry("a", GraphClass::class1, Rational(3)),
                                     entry("b", GraphClass::class2, Rational(3))};
  CHECK(conjecture_checks(right, 2).equal_fc_class_pairs.size() == 1);
}

TEST_CASE("conjecture candidates are double-checked by both oracles") {
  // Fabricate a "class-1 above bound" record by mislabeling Petersen (fc 5 > 4).
  CatalogEntry e;
  e.id = "petersen";
  e.graph = load_fixture("petersen.mg");
  e.report.id = "petersen";
  e.report.graph_class = GraphClass::class1;  // wrong on purpose
  e.report.fc = FcReport{FcStatus::exact_within_bound, Rational(5), 10, Rational(49, 10), true, 0};
  const ConjectureFindings f = conjecture_checks({e}, 1);
  REQUIRE(f.class1_above_upper_bound.size() == 1);
  const auto& c = f.class1_above_upper_bound[0];
  CHECK(c.fc == Rational(5));
  CHECK(c.recheck_flow == Verdict::no);  // solver: no 4-flow
  REQUIRE(c.recheck_valuation.has_value());
  CHECK(*c.recheck_valuation == RefuteVerdict::refuted);  // valuations agree
}

TEST_CASE("budget exhaustion is recorded per-field, never silently dropped") {
  AnalyzeOptions options;
  options.budget.max_nodes = 50;
  const AnalysisReport r = analyze(load_fixture("petersen.mg"), "petersen", options);
  REQUIRE(r.fc.has_value());
  CHECK(r.fc->status == FcStatus::lower_bound_only);
  CHECK_FALSE(r.fc->has_witness);
  // cross-checks consume exact entries only: no spurious flags
  CHECK(r.inconsistencies.empty());
}

TEST_CASE("conjecture checks exclude inexact entries with a note") {
  CatalogEntry e;
  e.id = "slow";
  e.graph = complete_graph(6);
  e.report.id = "slow";
  e.report.graph_class = GraphClass::class1;
  e.report.fc = FcReport{FcStatus::lower_bound_only, Rational(3), 6, std::nullopt, false, 0};
  const ConjectureFindings f = conjecture_checks({e}, 2);
  REQUIRE(f.notes.size() == 1);
  CHECK(f.notes[0].find("slow") != std::string::npos);
  CHECK(f.class1_above_upper_bound.empty());
  CHECK(f.equal_fc_class_pairs.empty());
}

TEST_CASE("json output is deterministic and structured") {
  const ScanResult a = scan_catalog(fixture_path("prop_pair"), 2);
  const ScanResult b = scan_catalog(fixture_path("prop_pair"), 2);
  const std::string ja = scan_result_to_json(a);
  CHECK(ja == scan_result_to_json(b));
  CHECK(ja.find("\"tool_version\"") != std::string::npos);
  CHECK(ja.find("\"phi_estimate\"") != std::string::npos);
  CHECK(ja.find("\"conjecture_findings\"") != std::string::npos);
  CHECK(ja.find("\"num\": 3") != std::string::npos);
  CHECK(ja.find("seconds") == std::string::npos);  // no wall-clock in output

  const std::string table = scan_result_table(a);
  CHECK(table.find("glue_k23.mg") != std::string::npos);
  CHECK(table.find("class2") != std::string::npos);
}

TEST_SUITE_END();
