#include "circflow/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "circflow/graph_io.hpp"
#include "circflow/valuations.hpp"
#include "circflow/version.hpp"

#include <json.hpp>

namespace circflow {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

int effective_denom_bound(const AnalyzeOptions& options, const Multigraph& g) {
  return options.denom_bound > 0 ? options.denom_bound : std::max(1, g.vertex_count());
}

}  // namespace

AnalysisReport analyze(const Multigraph& g, const std::string& id,
                       const AnalyzeOptions& options) {
  const auto t0 = Clock::now();
  AnalysisReport r;
  r.id = id;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.regular_degree = g.regular_degree();
  r.bipartite = is_bipartite(g).is_bipartite();

  const bool odd_regular =
      r.regular_degree && *r.regular_degree % 2 == 1 && r.m > 0;

  if (options.compute_odd_cut && odd_regular) {
    const OddCutScan scan = odd_cut_obstruction(g, options.odd_cut_max_vertices);
    OddCutReport oc;
    oc.status = scan.status;
    if (scan.found()) {
      oc.vertices = scan.witness->first.to_vector();
      oc.cut_edges = scan.witness->second.edge_ids;
    }
    r.odd_cut = oc;
  }

  const ClassifyResult cls = classify(g, options.budget);
  r.graph_class = cls.value;
  r.class_via_odd_cut = cls.odd_cut.has_value();

  if (options.compute_chi) {
    const ChromaticIndex ci = chromatic_index(g, options.budget);
    r.chi = ChiReport{ci.exact, ci.lower, ci.upper, ci.stats.nodes};
  }

  if (options.compute_fc) {
    const FcResult fc = circular_flow_number(g, options.denom_bound, options.budget);
    r.fc = FcReport{fc.status, fc.value, effective_denom_bound(options, g),
                    fc.refused_candidate, fc.witness.has_value(), fc.stats.nodes};

    if (options.valuation_checks && fc.status == FcStatus::exact_within_bound &&
        fc.witness && fc.value > Rational(2)) {
      try {
        flow_to_valuation(g, *fc.witness);
        r.valuation_notes.push_back("flow certificate maps to a balanced valuation (factor " +
                                    r_to_weight(fc.value).to_string() + ")");
      } catch (const CorrespondenceError& e) {
        r.inconsistencies.push_back(std::string("valuation correspondence failure: ") + e.what());
      }
    }
  }

  if (options.compute_bipartizing && odd_regular) {
    r.bipartizing_searched = true;
    if (auto bf = bipartizing_one_factor(g)) r.bipartizing_factor = bf->factor.edge_ids;
  }

  // Known implications between these quantities; a violation is an
  // implementation bug and is embedded as a loud inconsistency flag.
  auto flag = [&](const std::string& s) { r.inconsistencies.push_back(s); };

  if (odd_regular && *r.regular_degree >= 3) {
    const int t = (*r.regular_degree - 1) / 2;
    const Rational low_bound = Rational(2) + Rational(2, 2 * t - 1);
    const Rational bip_value = Rational(2) + Rational(1, t);
    const bool fc_exact = r.fc && r.fc->status == FcStatus::exact_within_bound;
    // A fc value is the true flow number only if the ladder can represent
    // the quantity it is compared against; otherwise the check would flag
    // a denominator-bound artifact, not a bug.
    const int q = r.fc ? r.fc->denom_bound : 0;

    if (fc_exact) {
      if (r.bipartite && t <= q && r.fc->value != bip_value)
        flag("bipartite (2t+1)-regular graph with fc != 2 + 1/t");
      if (!r.bipartite && r.fc->value < low_bound)
        flag("non-bipartite graph with fc below 2 + 2/(2t-1)");
      if (2 * t - 1 <= q) {
        if (r.bipartizing_searched &&
            r.bipartizing_factor.has_value() != (r.fc->value <= low_bound))
          flag("bipartizing factor existence disagrees with fc <= 2 + 2/(2t-1)");
        if (r.fc->value <= low_bound && r.graph_class == GraphClass::class2)
          flag("fc <= 2 + 2/(2t-1) on a class-2 graph");
      }
      if (t == 1 && r.graph_class != GraphClass::unknown &&
          (r.graph_class == GraphClass::class1) != (r.fc->value <= Rational(4)))
        flag("cubic class-1 determination disagrees with fc <= 4");
    }
    if (r.odd_cut && r.odd_cut->status == OddCutScan::Status::found &&
        r.graph_class == GraphClass::class1)
      flag("odd-cut obstruction on a class-1 graph");
  }

  if (r.chi && r.chi->exact && r.graph_class != GraphClass::unknown && r.m > 0 &&
      (r.chi->upper == g.max_degree()) != (r.graph_class == GraphClass::class1))
    flag("class determination disagrees with the exact chromatic index");

  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

PhiEstimate phi_estimate(const std::vector<CatalogEntry>& entries, int t) {
  PhiEstimate out;
  out.t = t;
  out.coverage = "minimum over the scanned catalog; an upper bound for the class-2 "
                 "infimum at this degree, not the infimum itself";
  for (const auto& entry : entries) {
    const auto& r = entry.report;
    if (r.graph_class != GraphClass::class2) continue;
    if (!r.fc || r.fc->status != FcStatus::exact_within_bound) continue;
    if (!out.value || r.fc->value < *out.value) {
      out.value = r.fc->value;
      out.witness_id = r.id;
    }
  }
  return out;
}

ConjectureFindings conjecture_checks(const std::vector<CatalogEntry>& entries, int t,
                                     const AnalyzeOptions& options) {
  ConjectureFindings f;
  f.t = t;
  const Rational low_bound = Rational(2) + Rational(2, 2 * t - 1);
  const Rational up_bound = Rational(2) + Rational(2, t);

  auto recheck = [&](const CatalogEntry& entry) {
    CounterexampleCandidate c;
    c.id = entry.id;
    c.fc = entry.report.fc->value;
    c.recheck_flow = has_nwz_flow(entry.graph, up_bound, options.budget).verdict;
    if (up_bound > Rational(2) && entry.graph.vertex_count() <= 12) {
      c.recheck_valuation = refute_flow_by_valuation(entry.graph, up_bound).verdict;
    }
    return c;
  };

  for (const auto& entry : entries) {
    const auto& r = entry.report;
    if (!r.fc || r.fc->status != FcStatus::exact_within_bound) {
      f.notes.push_back(r.id + ": excluded (no exact flow number)");
      continue;
    }
    const Rational& fc = r.fc->value;
    if (r.graph_class == GraphClass::class2 && fc < low_bound)
      f.class2_below_lower_bound.push_back(r.id);
    if (r.graph_class == GraphClass::class1 && fc > up_bound)
      f.class1_above_upper_bound.push_back(recheck(entry));
    if (r.odd_cut && r.odd_cut->status == OddCutScan::Status::none && fc > up_bound)
      f.tgraph_above_upper_bound.push_back(recheck(entry));
    if (r.odd_cut && r.odd_cut->status == OddCutScan::Status::not_attempted)
      f.notes.push_back(r.id + ": odd-cut scan not attempted (size bound)");
  }

  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      const auto& a = entries[i].report;
      const auto& b = entries[j].report;
      if (!a.fc || a.fc->status != FcStatus::exact_within_bound) continue;
      if (!b.fc || b.fc->status != FcStatus::exact_within_bound) continue;
      if (a.fc->value != b.fc->value) continue;
      const bool a1 = a.graph_class == GraphClass::class1;
      const bool a2 = a.graph_class == GraphClass::class2;
      const bool b1 = b.graph_class == GraphClass::class1;
      const bool b2 = b.graph_class == GraphClass::class2;
      if (!((a1 && b2) || (a2 && b1))) continue;
      const Rational& fc = a.fc->value;
      if (fc > low_bound && fc <= up_bound)
        f.equal_fc_class_pairs.push_back({a1 ? a.id : b.id, a1 ? b.id : a.id, fc});
    }
  }
  return f;
}

ScanResult scan_catalog(const std::string& directory, int t, const AnalyzeOptions& options) {
  namespace fs = std::filesystem;
  if (t < 1) throw std::invalid_argument("scan_catalog: requires t >= 1");
  if (!fs::is_directory(directory))
    throw std::invalid_argument("scan_catalog: not a directory: " + directory);

  ScanResult out;
  out.t = t;
  out.options = options;
  const int want_degree = 2 * t + 1;

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  auto consider = [&](const std::string& id, const Multigraph& g) {
    if (g.regular_degree() != want_degree) {
      out.skips.push_back({id, "not (2t+1)-regular for t = " + std::to_string(t)});
      return;
    }
    if (!bridges(g).empty()) {
      out.skips.push_back({id, "has a bridge"});
      return;
    }
    AnalysisReport report = analyze(g, id, options);
    out.entries.push_back({id, g, std::move(report)});
  };

  for (const auto& path : files) {
    const std::string name = path.filename().string();
    const std::string ext = path.extension().string();
    if (ext != ".mg" && ext != ".g6") {
      out.skips.push_back({name, "unrecognized extension"});
      continue;
    }
    std::ifstream in(path);
    if (!in) {
      out.skips.push_back({name, "unreadable file"});
      continue;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
      if (ext == ".mg") {
        consider(name, parse_multigraph(text));
      } else {
        const std::vector<Multigraph> graphs = parse_graph6_file(text);
        for (size_t k = 0; k < graphs.size(); ++k)
          consider(name + ":" + std::to_string(k + 1), graphs[k]);
      }
    } catch (const ParseError& e) {
      out.skips.push_back({name, std::string("parse error: ") + e.what()});
    } catch (const std::exception& e) {
      out.skips.push_back({name, std::string("error: ") + e.what()});
    }
  }

  out.phi = phi_estimate(out.entries, t);
  out.findings = conjecture_checks(out.entries, t, options);
  return out;
}

namespace {

ordered_json json_rational(const Rational& r) {
  return ordered_json{{"num", r.num()}, {"den", r.den()}};
}

ordered_json json_report(const AnalysisReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.regular_degree)
    j["regular_degree"] = *r.regular_degree;
  else
    j["regular_degree"] = nullptr;
  j["bipartite"] = r.bipartite;
  j["graph_class"] = to_string(r.graph_class);
  j["class_via_odd_cut"] = r.class_via_odd_cut;

  if (r.chi) {
    j["chi"] = ordered_json{{"exact", r.chi->exact},
                            {"lower", r.chi->lower},
                            {"upper", r.chi->upper},
                            {"nodes", r.chi->nodes}};
  } else {
    j["chi"] = nullptr;
  }

  if (r.fc) {
    ordered_json fc;
    fc["status"] = to_string(r.fc->status);
    fc["value"] = json_rational(r.fc->value);
    fc["denom_bound"] = r.fc->denom_bound;
    fc["refused_candidate"] =
        r.fc->refused_candidate ? json_rational(*r.fc->refused_candidate) : ordered_json(nullptr);
    fc["has_witness"] = r.fc->has_witness;
    fc["nodes"] = r.fc->nodes;
    j["fc"] = fc;
  } else {
    j["fc"] = nullptr;
  }

  ordered_json bip;
  bip["searched"] = r.bipartizing_searched;
  bip["factor"] = r.bipartizing_factor ? ordered_json(*r.bipartizing_factor)
                                       : ordered_json(nullptr);
  j["bipartizing"] = bip;

  if (r.odd_cut) {
    ordered_json oc;
    oc["status"] = r.odd_cut->status == OddCutScan::Status::found        ? "found"
                   : r.odd_cut->status == OddCutScan::Status::none       ? "none"
                                                                         : "not_attempted";
    if (r.odd_cut->status == OddCutScan::Status::found) {
      oc["vertices"] = r.odd_cut->vertices;
      oc["cut_edges"] = r.odd_cut->cut_edges;
    }
    j["odd_cut"] = oc;
  } else {
    j["odd_cut"] = nullptr;
  }

  j["valuation_notes"] = r.valuation_notes;
  j["inconsistencies"] = r.inconsistencies;
  return j;
}

ordered_json json_phi(const PhiEstimate& phi) {
  ordered_json j;
  j["t"] = phi.t;
  j["value"] = phi.value ? json_rational(*phi.value) : ordered_json(nullptr);
  j["witness_id"] = phi.witness_id;
  j["coverage"] = phi.coverage;
  return j;
}

ordered_json json_candidate(const CounterexampleCandidate& c) {
  ordered_json j;
  j["id"] = c.id;
  j["fc"] = json_rational(c.fc);
  j["recheck_flow"] = to_string(c.recheck_flow);
  j["recheck_valuation"] =
      c.recheck_valuation
          ? ordered_json(*c.recheck_valuation == RefuteVerdict::refuted ? "refuted"
                                                                        : "not_refuted")
          : ordered_json(nullptr);
  return j;
}

ordered_json json_findings(const ConjectureFindings& f) {
  ordered_json j;
  j["t"] = f.t;
  j["class2_below_lower_bound"] = f.class2_below_lower_bound;
  ordered_json c1 = ordered_json::array();
  for (const auto& c : f.class1_above_upper_bound) c1.push_back(json_candidate(c));
  j["class1_above_upper_bound"] = c1;
  ordered_json tg = ordered_json::array();
  for (const auto& c : f.tgraph_above_upper_bound) tg.push_back(json_candidate(c));
  j["tgraph_above_upper_bound"] = tg;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : f.equal_fc_class_pairs)
    pairs.push_back(ordered_json{{"class1_id", p.class1_id},
                                 {"class2_id", p.class2_id},
                                 {"fc", json_rational(p.fc)}});
  j["equal_fc_class_pairs"] = pairs;
  j["notes"] = f.notes;
  return j;
}

}  // namespace

std::string scan_result_to_json(const ScanResult& result, int indent) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["options"] = ordered_json{{"t", result.t},
                              {"denom_bound", result.options.denom_bound},
                              {"node_budget", result.options.budget.max_nodes}};
  ordered_json reports = ordered_json::array();
  for (const auto& entry : result.entries) reports.push_back(json_report(entry.report));
  j["reports"] = reports;
  ordered_json skips = ordered_json::array();
  for (const auto& s : result.skips)
    skips.push_back(ordered_json{{"id", s.id}, {"reason", s.reason}});
  j["skips"] = skips;
  j["summary"] = ordered_json{{"phi_estimate", json_phi(result.phi)},
                              {"conjecture_findings", json_findings(result.findings)}};
  return j.dump(indent) + "\n";
}

std::string report_to_json(const AnalysisReport& report, int indent) {
  return json_report(report).dump(indent) + "\n";
}

std::string scan_result_table(const ScanResult& result) {
  std::ostringstream out;
  out << "id\tn\tm\tdeg\tbipartite\tclass\tchi\tfc\tfactor\todd_cut\n";
  for (const auto& entry : result.entries) {
    const auto& r = entry.report;
    out << r.id << "\t" << r.n << "\t" << r.m << "\t";
    if (r.regular_degree)
      out << *r.regular_degree;
    else
      out << "-";
    out << "\t" << (r.bipartite ? "yes" : "no") << "\t" << to_string(r.graph_class) << "\t";
    if (r.chi) {
      if (r.chi->exact)
        out << r.chi->upper;
      else
        out << "[" << r.chi->lower << "," << r.chi->upper << "]";
    } else {
      out << "-";
    }
    out << "\t";
    if (r.fc) {
      if (r.fc->status == FcStatus::exact_within_bound)
        out << r.fc->value.to_string();
      else if (r.fc->status == FcStatus::lower_bound_only)
        out << ">" << r.fc->value.to_string();
      else
        out << "undefined(bridge)";
    } else {
      out << "-";
    }
    out << "\t";
    if (!r.bipartizing_searched)
      out << "-";
    else
      out << (r.bipartizing_factor ? "yes" : "no");
    out << "\t";
    if (!r.odd_cut)
      out << "-";
    else if (r.odd_cut->status == OddCutScan::Status::found)
      out << "size " << r.odd_cut->cut_edges.size();
    else if (r.odd_cut->status == OddCutScan::Status::none)
      out << "none";
    else
      out << "not_attempted";
    out << "\n";
  }
  for (const auto& s : result.skips)
    out << s.id << "\t(skipped: " << s.reason << ")\n";
  return out.str();
}

}  // namespace circflow
