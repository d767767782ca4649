#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circflow/coloring.hpp"
#include "circflow/flows.hpp"
#include "circflow/graph_ops.hpp"
#include "circflow/multigraph.hpp"
#include "circflow/rational.hpp"
#include "circflow/search.hpp"
#include "circflow/valuations.hpp"

namespace circflow {

struct AnalyzeOptions {
  int denom_bound = 0;  // 0 selects |V| per graph
  SearchBudget budget;
  bool compute_chi = true;
  bool compute_fc = true;
  bool compute_bipartizing = true;
  bool compute_odd_cut = true;
  bool valuation_checks = true;
  int odd_cut_max_vertices = 20;
};

struct FcReport {
  FcStatus status = FcStatus::undefined_bridge;
  Rational value;
  int denom_bound = 0;
  std::optional<Rational> refused_candidate;
  bool has_witness = false;
  std::uint64_t nodes = 0;
};

struct ChiReport {
  bool exact = false;
  int lower = 0;
  int upper = 0;
  std::uint64_t nodes = 0;
};

struct OddCutReport {
  OddCutScan::Status status = OddCutScan::Status::not_attempted;
  std::vector<int> vertices;
  std::vector<int> cut_edges;
};

/// Per-graph record consumed by the conjecture harness. The known
/// implications between its fields are re-validated by analyze(); a violation
/// lands in `inconsistencies` and signals an implementation bug.
struct AnalysisReport {
  std::string id;
  int n = 0;
  int m = 0;
  std::optional<int> regular_degree;
  bool bipartite = false;
  GraphClass graph_class = GraphClass::unknown;
  bool class_via_odd_cut = false;
  std::optional<ChiReport> chi;
  std::optional<FcReport> fc;
  bool bipartizing_searched = false;
  std::optional<std::vector<int>> bipartizing_factor;  // meaningful when searched
  std::optional<OddCutReport> odd_cut;
  std::vector<std::string> valuation_notes;
  std::vector<std::string> inconsistencies;
  double seconds = 0.0;  // informational only; never serialized by default
};

AnalysisReport analyze(const Multigraph& g, const std::string& id,
                       const AnalyzeOptions& options = {});

struct CatalogEntry {
  std::string id;
  Multigraph graph;
  AnalysisReport report;
};

struct SkipRecord {
  std::string id;
  std::string reason;
};

/// Catalog-restricted upper estimate of the least circular flow number among
/// class-2 (2t+1)-regular graphs. Never an infimum claim: `coverage` spells
/// out that it only bounds the scanned catalog.
struct PhiEstimate {
  int t = 0;
  std::optional<Rational> value;
  std::string witness_id;
  std::string coverage;
};

struct CounterexampleCandidate {
  std::string id;
  Rational fc;
  Verdict recheck_flow = Verdict::unknown;      // solver re-run at 2 + 2/t
  std::optional<RefuteVerdict> recheck_valuation;  // independent oracle, when runnable
};

struct EqualFcPair {
  std::string class1_id;
  std::string class2_id;
  Rational fc;
};

struct ConjectureFindings {
  int t = 0;
  /// Class-2 entries with fc below 2 + 2/(2t-1); any entry would refute the
  /// conjectured value of the class-2 infimum.
  std::vector<std::string> class2_below_lower_bound;
  /// Class-1 entries with fc above 2 + 2/t, double-checked by both oracles.
  std::vector<CounterexampleCandidate> class1_above_upper_bound;
  /// Odd-cut-free entries with fc above 2 + 2/t, double-checked likewise.
  std::vector<CounterexampleCandidate> tgraph_above_upper_bound;
  /// class-1 / class-2 pairs sharing an fc inside (2 + 2/(2t-1), 2 + 2/t].
  std::vector<EqualFcPair> equal_fc_class_pairs;
  std::vector<std::string> notes;  // entries excluded for inexact fc, etc.
};

PhiEstimate phi_estimate(const std::vector<CatalogEntry>& entries, int t);
ConjectureFindings conjecture_checks(const std::vector<CatalogEntry>& entries, int t,
                                     const AnalyzeOptions& options = {});

struct ScanResult {
  int t = 0;
  AnalyzeOptions options;
  std::vector<CatalogEntry> entries;
  std::vector<SkipRecord> skips;
  PhiEstimate phi;
  ConjectureFindings findings;
};

/// Analyzes every (2t+1)-regular bridgeless graph found in the directory
/// (*.mg one graph per file, *.g6 one graph per line), in filename order,
/// then line order. Everything else gets a skip record with the reason.
ScanResult scan_catalog(const std::string& directory, int t,
                        const AnalyzeOptions& options = {});

/// Deterministic JSON (stable key order, no wall-clock fields): identical
/// catalog and options give byte-identical output.
std::string scan_result_to_json(const ScanResult& result, int indent = 2);
std::string report_to_json(const AnalysisReport& report, int indent = 2);

/// Fixed-width text table over the reports, one row per graph.
std::string scan_result_table(const ScanResult& result);

}  // namespace circflow
