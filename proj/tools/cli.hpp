#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fixatic/claims.hpp"
#include "fixatic/families.hpp"
#include "fixatic/fixatic.hpp"
#include "fixatic/graph_io.hpp"
#include "fixatic/locating.hpp"

namespace fixatic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

struct GraphInput {
  std::string graph6;
  std::string file;
  bool table = false;
  bool force_count = false;
};

inline Graph read_graph(const GraphInput& input, std::istream& in) {
  if (!input.graph6.empty() && !input.file.empty()) throw CLI::ValidationError("give either --graph6 or --file, not both");
  if (!input.graph6.empty()) return parse_graph6(input.graph6);
  if (input.file.empty()) throw CLI::ValidationError("a graph is required: use --graph6 STR or --file PATH");
  std::string text;
  if (input.file == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(input.file);
    if (!file) throw std::invalid_argument("cannot open '" + input.file + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_graph_text(text);
}

inline Json sets_json(const std::vector<VertexSet>& classes) {
  Json out = Json::array();
  for (VertexSet c : classes) out.push_back(c.to_vector());
  return out;
}

inline Json graph_json(const Graph& g) {
  Json j = {{"n", g.order()}, {"m", g.size()}};
  if (g.order() <= kGraph6MaxOrder) j["graph6"] = encode_graph6(g);
  return j;
}

inline std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

/// Aligned "key  value" lines, keys in sorted order; nested graph fields are
/// flattened as graph.n etc.
inline std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      for (auto sub = it.value().begin(); sub != it.value().end(); ++sub)
        rows.emplace_back(it.key() + "." + sub.key(), scalar_text(sub.value()));
    } else {
      rows.emplace_back(it.key(), scalar_text(it.value()));
    }
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

inline std::string render_reports(const std::vector<ClaimReport>& reports) {
  std::size_t width = 5;
  for (const ClaimReport& r : reports) width = std::max(width, r.claim.size());
  std::ostringstream out;
  out << "claim" << std::string(width - 5 + 2, ' ') << "tested  verdict          counterexamples\n";
  for (const ClaimReport& r : reports) {
    std::string verdict = r.expected_failure() ? "FAIL(expected)" : r.verdict();
    std::string tested = std::to_string(r.tested);
    out << r.claim << std::string(width - r.claim.size() + 2, ' ') << tested << std::string(8 - std::min<std::size_t>(tested.size(), 7), ' ')
        << verdict << std::string(17 - verdict.size(), ' ') << r.counterexamples.size() << '\n';
  }
  return out.str();
}

enum class Invariants { kFix, kFixatic, kCount, kLoc, kLocatic, kBounds };

inline Json compute(const Graph& g, Invariants what, bool force_count) {
  Json j;
  j["graph"] = graph_json(g);
  auto count_allowed = [&] { return force_count || g.order() <= kCountCap; };
  if (what == Invariants::kLoc || what == Invariants::kLocatic) {
    const LocatingSets sets(g);
    j["loc"] = sets.location_number();
    if (what == Invariants::kLocatic) {
      const LocaticResult r = locatic_partition(g);
      j["locatic"] = r.locatic;
      j["locatic_witness"] = sets_json(r.witness);
    }
    return j;
  }
  const FixaticAnalysis a(g);
  j["aut_order"] = count_json(a.group().order());
  j["fix"] = a.fix();
  j["fix_witness"] = a.fixing().witness.to_vector();
  if (what == Invariants::kFix) return j;
  j["fxt"] = a.fxt();
  j["fxt_witness"] = sets_json(a.witness());
  if (what == Invariants::kCount) {
    if (!count_allowed())
      throw CapacityError("Pi_t is only counted for n <= " + std::to_string(kCountCap) + "; pass --force-count");
    j["pi_t"] = count_json(a.count_maximum(g.order()));
    return j;
  }
  if (what == Invariants::kFixatic) {
    if (count_allowed()) j["pi_t"] = count_json(a.count_maximum(g.order()));
    return j;
  }
  j["fxt_upper_bound"] = a.upper_bound();
  if (is_connected(g) && g.order() >= 1) {
    j["loc"] = location_number(g);
    if (g.order() <= kLocaticCap) j["locatic"] = locatic_number(g);
  }
  return j;
}

inline void emit(std::ostream& out, const Json& j, bool table) {
  if (table)
    out << render_table(j);
  else
    out << j.dump(2) << '\n';
}

/// Runs the command line `args` (without the program name). Returns the
/// process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Fixing numbers, fixatic numbers and fixatic partitions of graphs", "fixatic"};
  app.require_subcommand(1);

  struct GraphCommand {
    const char* name;
    const char* help;
    Invariants what;
  };
  const GraphCommand graph_commands[] = {
      {"fix", "fixing number fix(G) and a minimum fixing set", Invariants::kFix},
      {"fixatic", "fixatic number F_xt(G), a maximum fixatic partition and Pi_t", Invariants::kFixatic},
      {"count", "number Pi_t of maximum fixatic partitions", Invariants::kCount},
      {"loc", "location number (metric dimension)", Invariants::kLoc},
      {"locatic", "locatic number L(G)", Invariants::kLocatic},
      {"bounds", "fix, F_xt, floor(n/fix), L(G), loc(G) and |Aut(G)| together", Invariants::kBounds},
  };
  GraphInput input;
  std::optional<Invariants> chosen;
  for (const GraphCommand& c : graph_commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--graph6", input.graph6, "graph in graph6 format");
    sub->add_option("--file", input.file, "file with a graph6 line or an edge list ('-' reads stdin)");
    sub->add_flag("--table", input.table, "aligned text instead of JSON");
    if (c.what == Invariants::kFixatic || c.what == Invariants::kCount)
      sub->add_flag("--force-count", input.force_count, "count Pi_t even above n = 12");
    sub->callback([&chosen, what = c.what] { chosen = what; });
  }

  std::string family;
  std::vector<int> params;
  bool as_edges = false;
  bool as_graph6 = false;
  CLI::App* gen = app.add_subcommand("gen", "print a member of a named graph family");
  std::string family_help = "family name:";
  for (const auto& f : families::kFamilies) family_help += " " + std::string(f.name);
  gen->add_option("family", family, family_help)->required();
  gen->add_option("params", params, "integer parameters of the family");
  gen->add_flag("--graph6", as_graph6, "graph6 output (default)");
  gen->add_flag("--edges", as_edges, "edge list output");

  int max_n = 5;
  bool verify_table = false;
  CLI::App* verify = app.add_subcommand("verify", "check every registered claim on its corpus");
  verify->add_option("--max-n", max_n, "largest order of the exhaustive scans")
      ->check(CLI::Range(2, kVerifyMaxOrder));
  verify->add_flag("--table", verify_table, "summary table instead of JSON");

  int scan_n = 0;
  std::string claim_id;
  bool scan_table = false;
  CLI::App* scan = app.add_subcommand("scan", "check one claim on all connected graphs of one order");
  scan->add_option("--n", scan_n, "graph order")->required()->check(CLI::Range(1, kScanMaxOrder));
  scan->add_option("--claim", claim_id, "claim id")->required();
  scan->add_flag("--table", scan_table, "summary table instead of JSON");

  std::vector<std::string> argv_storage{"fixatic"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (chosen) {
      const Graph g = read_graph(input, in);
      emit(out, compute(g, *chosen, input.force_count), input.table);
      return kExitOk;
    }
    if (gen->parsed()) {
      if (as_edges && as_graph6) throw CLI::ValidationError("choose one of --graph6 and --edges");
      const Graph g = families::generate(family, params);
      if (as_edges)
        out << encode_edge_list(g);
      else
        out << encode_graph6(g) << '\n';
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto reports = verify_paper(max_n);
      bool unexpected = false;
      Json list = Json::array();
      for (const ClaimReport& r : reports) {
        unexpected = unexpected || r.unexpected_failure();
        list.push_back(to_json(r));
      }
      if (verify_table)
        out << render_reports(reports);
      else
        out << list.dump(2) << '\n';
      return unexpected ? kExitClaimFailure : kExitOk;
    }
    if (scan->parsed()) {
      const ClaimReport r = scan_claim(claim_id, scan_n);
      if (scan_table)
        out << render_reports({r});
      else
        out << to_json(r).dump(2) << '\n';
      return r.unexpected_failure() ? kExitClaimFailure : kExitOk;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fixatic::cli
