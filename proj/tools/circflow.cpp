// circflow: exact toolkit for nowhere-zero circular flows, chromatic index,
// balanced valuations and gadget constructions on regular multigraphs.
//
// Exit codes: 0 success, 2 usage error, 3 input error, 4 budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "circflow/analysis.hpp"
#include "circflow/constructions.hpp"
#include "circflow/graph_io.hpp"
#include "circflow/valuations.hpp"
#include "circflow/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

using circflow::Multigraph;
using circflow::Rational;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw circflow::ParseError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Multigraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const bool g6 = path.size() >= 3 && path.substr(path.size() - 3) == ".g6";
  if (!g6) return circflow::parse_multigraph(text);
  const auto graphs = circflow::parse_graph6_file(text);
  if (graphs.empty()) throw circflow::ParseError("no graph6 line in " + path);
  if (graphs.size() > 1)
    throw circflow::ParseError("multiple graphs in " + path + "; use the scan command");
  return graphs[0];
}

ordered_json json_rational(const Rational& r) {
  return ordered_json{{"num", r.num()}, {"den", r.den()}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw circflow::ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact circular flow / edge coloring toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", circflow::kToolVersion);

  std::string file, report_path, out_path, base_path, weights_path, r_text, method = "mincut";
  std::string kind;
  int denom_bound = 0;
  int t = 0;
  std::uint64_t budget_nodes = 1'000'000'000;
  bool as_json = false;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget_nodes, "search node budget per probe");
  };

  CLI::App* fc = app.add_subcommand("fc", "circular flow number of a graph");
  fc->add_option("file", file)->required();
  fc->add_option("--denom-bound", denom_bound, "denominator bound Q (default |V|)");
  add_budget(fc);
  fc->add_flag("--json", as_json);

  CLI::App* decide = app.add_subcommand("decide", "decide a nowhere-zero r-flow");
  decide->add_option("file", file)->required();
  decide->add_option("--r", r_text, "flow value, e.g. 11/4")->required();
  add_budget(decide);
  decide->add_flag("--json", as_json);

  CLI::App* chi = app.add_subcommand("chi", "exact chromatic index");
  chi->add_option("file", file)->required();
  add_budget(chi);

  CLI::App* classify_cmd = app.add_subcommand("classify", "class 1 / class 2");
  classify_cmd->add_option("file", file)->required();
  add_budget(classify_cmd);

  CLI::App* bipartizing = app.add_subcommand("bipartizing", "1-factor leaving a bipartite rest");
  bipartizing->add_option("file", file)->required();

  CLI::App* valuation = app.add_subcommand("valuation", "check a balanced valuation");
  valuation->add_option("file", file)->required();
  valuation->add_option("--weights", weights_path, "weights file: one \"<v> <p>/<q>\" per line")
      ->required();
  valuation->add_option("--method", method)->check(CLI::IsMember({"brute", "mincut"}));

  CLI::App* refute = app.add_subcommand("refute", "refute an r-flow by valuation enumeration");
  refute->add_option("file", file)->required();
  refute->add_option("--r", r_text)->required();

  CLI::App* construct = app.add_subcommand("construct", "emit a built-in construction");
  construct->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"k2", "h-gadget", "glue", "petersen-family"}));
  construct->add_option("--t", t, "family parameter")->required();
  construct->add_option("--base", base_path, "base graph (glue only)");
  construct->add_option("-o,--output", out_path, "output MG file")->required();

  CLI::App* scan = app.add_subcommand("scan", "analyze every graph in a directory");
  scan->add_option("dir", file)->required();
  scan->add_option("--t", t, "target degree 2t+1")->required();
  scan->add_option("--report", report_path, "JSON report output path")->required();
  scan->add_option("--denom-bound", denom_bound);
  add_budget(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  circflow::SearchBudget budget;
  budget.max_nodes = budget_nodes;

  try {
    if (fc->parsed()) {
      const Multigraph g = load_graph(file);
      const circflow::FcResult res = circflow::circular_flow_number(g, denom_bound, budget);
      const int q = denom_bound > 0 ? denom_bound : std::max(1, g.vertex_count());
      if (as_json) {
        ordered_json j;
        j["tool_version"] = circflow::kToolVersion;
        j["file"] = file;
        j["status"] = circflow::to_string(res.status);
        j["value"] = json_rational(res.value);
        j["denom_bound"] = q;
        j["refused_candidate"] = res.refused_candidate
                                     ? json_rational(*res.refused_candidate)
                                     : ordered_json(nullptr);
        j["nodes"] = res.stats.nodes;
        j["certificate"] =
            res.witness ? ordered_json(circflow::serialize_flow(*res.witness)) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        switch (res.status) {
          case circflow::FcStatus::exact_within_bound:
            std::cout << "F_c = " << res.value << " (exact within denominator bound " << q
                      << ")\n";
            if (res.refused_candidate)
              std::cout << "refused candidate: " << *res.refused_candidate << "\n";
            if (res.witness) std::cout << circflow::serialize_flow(*res.witness);
            break;
          case circflow::FcStatus::lower_bound_only:
            std::cout << "F_c > " << res.value << " (budget exhausted)\n";
            break;
          case circflow::FcStatus::undefined_bridge:
            std::cout << "undefined: graph has a bridge, no nowhere-zero flow exists\n";
            break;
        }
      }
      return res.status == circflow::FcStatus::lower_bound_only ? kExitBudget : kExitOk;
    }

    if (decide->parsed()) {
      const Multigraph g = load_graph(file);
      const Rational r = Rational::parse(r_text);
      const circflow::FlowDecision d = circflow::has_nwz_flow(g, r, budget);
      if (as_json) {
        ordered_json j;
        j["tool_version"] = circflow::kToolVersion;
        j["file"] = file;
        j["r"] = json_rational(r);
        j["verdict"] = circflow::to_string(d.verdict);
        j["nodes"] = d.stats.nodes;
        j["certificate"] = d.certificate
                               ? ordered_json(circflow::serialize_flow(*d.certificate))
                               : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << circflow::to_string(d.verdict) << "\n";
        if (d.certificate) std::cout << circflow::serialize_flow(*d.certificate);
      }
      return d.verdict == circflow::Verdict::unknown ? kExitBudget : kExitOk;
    }

    if (chi->parsed()) {
      const Multigraph g = load_graph(file);
      const circflow::ChromaticIndex res = circflow::chromatic_index(g, budget);
      if (res.exact) {
        std::cout << "chi' = " << res.upper << "\n";
        if (res.coloring) std::cout << circflow::serialize_coloring(*res.coloring);
        return kExitOk;
      }
      std::cout << "chi' in [" << res.lower << ", " << res.upper << "] (budget exhausted)\n";
      return kExitBudget;
    }

    if (classify_cmd->parsed()) {
      const Multigraph g = load_graph(file);
      const circflow::ClassifyResult res = circflow::classify(g, budget);
      std::cout << circflow::to_string(res.value);
      if (res.odd_cut) {
        std::cout << " (odd cut of size " << res.odd_cut->second.size() << " at {";
        bool first = true;
        for (int v : res.odd_cut->first.to_vector()) {
          std::cout << (first ? "" : " ") << v;
          first = false;
        }
        std::cout << "})";
      }
      std::cout << "\n";
      return res.value == circflow::GraphClass::unknown ? kExitBudget : kExitOk;
    }

    if (bipartizing->parsed()) {
      const Multigraph g = load_graph(file);
      const auto res = circflow::bipartizing_one_factor(g);
      if (!res) {
        std::cout << "none\n";
        return kExitOk;
      }
      std::cout << circflow::serialize_matching(res->factor);
      std::cout << "parts:";
      for (int v : res->parts.a.to_vector()) std::cout << " " << v;
      std::cout << " /";
      for (int v : res->parts.b.to_vector()) std::cout << " " << v;
      std::cout << "\n";
      return kExitOk;
    }

    if (valuation->parsed()) {
      const Multigraph g = load_graph(file);
      const auto w = circflow::parse_valuation(read_file(weights_path));
      if (static_cast<int>(w.size()) != g.vertex_count())
        throw circflow::ParseError("weights cover " + std::to_string(w.size()) +
                                   " vertices, graph has " + std::to_string(g.vertex_count()));
      const circflow::BalanceCheck res = method == "brute"
                                             ? circflow::is_balanced_brute(g, w)
                                             : circflow::is_balanced_mincut(g, w);
      if (res.balanced) {
        std::cout << "balanced\n";
      } else {
        std::cout << "violated at X = {";
        bool first = true;
        for (int v : res.violator->to_vector()) {
          std::cout << (first ? "" : " ") << v;
          first = false;
        }
        std::cout << "}\n";
      }
      return kExitOk;
    }

    if (refute->parsed()) {
      const Multigraph g = load_graph(file);
      const Rational r = Rational::parse(r_text);
      const circflow::RefuteResult res = circflow::refute_flow_by_valuation(g, r);
      if (res.verdict == circflow::RefuteVerdict::refuted) {
        std::cout << "refuted: no balanced valuation exists, hence no nowhere-zero " << r
                  << "-flow\n";
      } else {
        std::cout << "not-refuted: balanced valuation found (k =";
        for (auto k : res.witness->k) std::cout << " " << k;
        std::cout << ")\n";
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      ordered_json sidecar;
      sidecar["construction"] = kind;
      sidecar["t"] = t;
      Multigraph g;
      if (kind == "k2") {
        g = circflow::k2_multi(t);
      } else if (kind == "h-gadget") {
        auto [graph, labels] = circflow::h_gadget(t);
        g = std::move(graph);
        sidecar["labels"] =
            ordered_json::array({ordered_json{{"u", labels.u}, {"v", labels.v}, {"x", labels.x}}});
      } else if (kind == "glue") {
        if (base_path.empty())
          throw circflow::ParseError("construct glue requires --base FILE");
        auto [graph, labels] = circflow::glue_gadgets(load_graph(base_path), t);
        g = std::move(graph);
        ordered_json arr = ordered_json::array();
        for (const auto& lab : labels)
          arr.push_back(ordered_json{{"u", lab.u}, {"v", lab.v}, {"x", lab.x}});
        sidecar["labels"] = arr;
      } else {  // petersen-family
        g = circflow::petersen_family(t);
        const auto& data = circflow::petersen_data();
        sidecar["classes"] = ordered_json{{"a", data.a.to_vector()}, {"b", data.b.to_vector()}};
        sidecar["matching"] = data.f.edge_ids;
        sidecar["copies_added"] = 2 * t - 2;
      }
      write_file(out_path, circflow::serialize(g));
      write_file(out_path + ".json", sidecar.dump(2) + "\n");
      std::cout << "wrote " << out_path << " (" << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges)\n";
      return kExitOk;
    }

    if (scan->parsed()) {
      circflow::AnalyzeOptions options;
      options.denom_bound = denom_bound;
      options.budget = budget;
      const circflow::ScanResult res = circflow::scan_catalog(file, t, options);
      write_file(report_path, circflow::scan_result_to_json(res));
      std::cout << circflow::scan_result_table(res);
      bool budget_hit = false;
      for (const auto& entry : res.entries) {
        if (entry.report.fc && entry.report.fc->status == circflow::FcStatus::lower_bound_only)
          budget_hit = true;
        if (entry.report.chi && !entry.report.chi->exact) budget_hit = true;
        if (entry.report.graph_class == circflow::GraphClass::unknown) budget_hit = true;
      }
      return budget_hit ? kExitBudget : kExitOk;
    }
  } catch (const circflow::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  return kExitUsage;
}
