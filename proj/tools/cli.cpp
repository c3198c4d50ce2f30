#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gauss/cubic_graph.hpp"
#include "gauss/diagram.hpp"
#include "gauss/errors.hpp"
#include "gauss/flips.hpp"
#include "gauss/realizability.hpp"

namespace gauss::cli {

namespace {

using nlohmann::json;

std::string verdict(bool realizable) { return realizable ? "realizable" : "unrealizable"; }

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(xs[k]);
  }
  return out;
}

std::string bits_text(const RotationSystem& rs) {
  std::string s;
  for (auto b : rs.bits) s += b ? '1' : '0';
  return s;
}

json site_json(const GaussDiagram& d, const FlipSite& s) {
  return json{{"i", s.i},
              {"j", s.j},
              {"p", chord_name(s.p, d.chord_count())},
              {"q", chord_name(s.q, d.chord_count())},
              {"arc_begin", s.arc_begin},
              {"arc_length", s.arc_length}};
}

CubicGraph load_graph(const std::string& arg) {
  constexpr std::string_view kDiagram = "diagram:";
  if (arg.rfind(kDiagram, 0) == 0) return graph_from_diagram(parse_diagram(arg.substr(kDiagram.size()))).graph;
  if (arg.rfind("mobius:", 0) == 0 || arg.find('\n') != std::string::npos) return parse_graph(arg);
  std::stringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(arg);
    if (!in) throw Error("cannot read graph file '" + arg + "'");
    buf << in.rdbuf();
  }
  return parse_graph(buf.str());
}

struct Format {
  bool json = false;
  bool csv = false;
  bool dot = false;
};

void add_format_flags(CLI::App* cmd, Format& f, bool csv, bool dot) {
  cmd->add_flag("--json", f.json, "Emit JSON");
  if (csv) cmd->add_flag("--csv", f.csv, "Emit CSV");
  if (dot) cmd->add_flag("--dot", f.dot, "Emit Graphviz dot");
}

int cmd_analyze(const std::string& input, const Format& f, std::ostream& out) {
  const GaussDiagram d = parse_diagram(input);
  if (f.dot) {
    out << interlacement_graph(d).to_dot();
    return kOk;
  }
  const auto degrees = interlacement_graph(d).degrees();
  const bool parity = parity_check(d);
  const auto realizations = realize_all(d);
  const bool realizable = !realizations.empty();
  const bool planar = gadget_planarity(d);
  const int genus = realizable ? 0 : min_genus(d);

  std::set<std::string> codes;
  std::set<std::vector<int>> multisets;
  json embeddings = json::array();
  for (const auto& e : realizations) {
    codes.insert(curve_code(d, e).text);
    multisets.insert(curve_invariants(e).face_degrees);
    json faces = json::array();
    for (const auto& face : e.faces) {
      json darts = json::array();
      for (int x : face) darts.push_back(dart_text(d, x));
      faces.push_back(std::move(darts));
    }
    embeddings.push_back({{"rotation", bits_text(e.rotation)}, {"faces", std::move(faces)}});
  }

  if (f.json) {
    json rec{{"input", input},
             {"word", d.word()},
             {"chords", d.chord_count()},
             {"canonical", canonical_form(d).text()},
             {"parity", parity},
             {"interlacement_degrees", degrees},
             {"realizable", realizable},
             {"gadget_planar", planar},
             {"consistent", realizable == planar},
             {"min_genus", genus},
             {"realization_count", static_cast<int>(realizations.size())},
             {"curve_codes", codes},
             {"face_degree_multisets", multisets},
             {"realizations", std::move(embeddings)}};
    out << rec.dump(2) << '\n';
    return kOk;
  }
  out << "input:                 " << input << '\n'
      << "word:                  " << d.word() << '\n'
      << "chords:                " << d.chord_count() << '\n'
      << "canonical:             " << canonical_form(d).text() << '\n'
      << "parity:                " << (parity ? "even" : "odd") << '\n'
      << "interlacement degrees: " << join(degrees) << '\n'
      << "realizable:            " << (realizable ? "yes" : "no") << '\n'
      << "gadget planar:         " << (planar ? "yes" : "no") << '\n';
  if (realizable != planar) out << "WARNING: realizability oracles disagree\n";
  out << "min genus:             " << genus << '\n'
      << "realizations:          " << realizations.size() << '\n';
  for (const auto& c : codes) out << "curve code:            " << c << '\n';
  for (const auto& m : multisets) out << "face degrees:          {" << join(m) << "}\n";
  return kOk;
}

int cmd_check(const std::string& input, std::ostream& out) {
  const GaussDiagram d = parse_diagram(input);
  if (is_realizable(d)) {
    out << "realizable\n";
    return kOk;
  }
  out << "unrealizable (min genus " << min_genus(d) << ")\n";
  return kUnrealizable;
}

int cmd_hamcycles(const CubicGraph& g, const Format& f, std::ostream& out) {
  if (f.dot) {
    out << g.to_dot();
    return kOk;
  }
  const auto cycles = hamiltonian_cycles(g);
  if (f.json) {
    json list = json::array();
    for (const auto& h : cycles) list.push_back(h.order());
    out << json{{"vertices", g.vertex_count()}, {"count", cycles.size()}, {"cycles", list}}.dump(2) << '\n';
    return kOk;
  }
  for (const auto& h : cycles) out << h.to_string() << '\n';
  out << "# " << cycles.size() << " Hamiltonian cycles\n";
  return kOk;
}

int cmd_census(const CubicGraph& g, const Format& f, std::ostream& out) {
  const auto report = ham_census(g);
  if (f.json) {
    json classes = json::array();
    for (const auto& c : report.classes)
      classes.push_back({{"canonical", c.canonical.text()},
                         {"cycles", c.cycle_count},
                         {"realizable", c.realizable},
                         {"min_genus", c.min_genus},
                         {"example_cycle", c.example.order()}});
    out << json{{"vertices", g.vertex_count()}, {"total_cycles", report.total_cycles}, {"classes", classes}}.dump(2)
        << '\n';
    return kOk;
  }
  if (f.csv) {
    out << "canonical,cycles,realizable,min_genus,example_cycle\n";
    for (const auto& c : report.classes)
      out << c.canonical.text() << ',' << c.cycle_count << ',' << (c.realizable ? "true" : "false") << ','
          << c.min_genus << ',' << c.example.to_string() << '\n';
    return kOk;
  }
  for (const auto& c : report.classes)
    out << c.canonical.text() << "  cycles=" << c.cycle_count << "  " << verdict(c.realizable)
        << (c.realizable ? "" : " (min genus " + std::to_string(c.min_genus) + ")") << '\n';
  out << "# " << report.total_cycles << " Hamiltonian cycles in " << report.classes.size() << " diagram classes\n";
  return kOk;
}

int cmd_iso(const CubicGraph& a, const CubicGraph& b, const Format& f, std::ostream& out) {
  const auto witness = find_isomorphism(a, b);
  if (f.json) {
    json rec{{"isomorphic", witness.has_value()}};
    rec["witness"] = witness ? json(*witness) : json(nullptr);
    out << rec.dump(2) << '\n';
    return kOk;
  }
  if (!witness) {
    out << "not isomorphic\n";
    return kOk;
  }
  out << "isomorphic\n";
  for (std::size_t v = 0; v < witness->size(); ++v) out << v << " -> " << (*witness)[v] << '\n';
  return kOk;
}

int cmd_flips(const std::string& input, bool orbit, const Format& f, std::ostream& out) {
  const GaussDiagram d = parse_diagram(input);
  if (orbit) {
    const auto o = flip_orbit(d);
    if (f.json) {
      json members = json::array();
      for (std::size_t k = 0; k < o.members.size(); ++k)
        members.push_back({{"canonical", o.members[k].text()}, {"realizable", static_cast<bool>(o.realizable[k])}});
      json edges = json::array();
      for (const auto& e : o.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"site", site_json(o.members[e.from].diagram(), e.site)}});
      out << json{{"start", canonical_form(d).text()},
                  {"members", members},
                  {"edges", edges},
                  {"homogeneous", o.homogeneous()}}
                 .dump(2)
          << '\n';
      return kOk;
    }
    for (std::size_t k = 0; k < o.members.size(); ++k)
      out << o.members[k].text() << "  " << verdict(o.realizable[k]) << '\n';
    out << "# orbit of " << canonical_form(d).text() << ": " << o.members.size() << " classes, " << o.edges.size()
        << " flips, " << (o.homogeneous() ? "homogeneous" : "MIXED VERDICTS") << '\n';
    return kOk;
  }
  const auto sites = flip_sites(d);
  if (f.json) {
    json list = json::array();
    for (const auto& s : sites) {
      const auto r = apply_flip(d, s);
      list.push_back({{"site", site_json(d, s)}, {"result", r.word()}, {"canonical", canonical_form(r).text()}});
    }
    out << json{{"diagram", d.word()}, {"flips", list}}.dump(2) << '\n';
    return kOk;
  }
  for (const auto& s : sites) {
    const auto r = apply_flip(d, s);
    out << "site i=" << s.i << " j=" << s.j << " P=" << chord_name(s.p, d.chord_count())
        << " Q=" << chord_name(s.q, d.chord_count()) << " arc=" << s.arc_length << "  -> " << r.word()
        << "  canonical " << canonical_form(r).text() << '\n';
  }
  out << "# " << sites.size() << " flip sites\n";
  return kOk;
}

int cmd_enumerate(int n, bool realizable_only, const Format& f, std::ostream& out, std::ostream& err) {
  if (n < 1 || n > 8) {
    err << "error: --chords must be between 1 and 8\n";
    return kInputError;
  }
  const auto diagrams = enumerate_diagrams(n);
  json rows = json::array();
  int shown = 0;
  int realizable = 0;
  for (const auto& d : diagrams) {
    const bool r = is_realizable(d);
    realizable += r ? 1 : 0;
    if (realizable_only && !r) continue;
    ++shown;
    if (f.json)
      rows.push_back({{"canonical", d.word()}, {"realizable", r}});
    else
      out << d.word() << '\t' << verdict(r) << '\n';
  }
  if (f.json) {
    out << json{{"chords", n}, {"total", diagrams.size()}, {"realizable", realizable}, {"diagrams", rows}}.dump(2)
        << '\n';
  } else {
    out << "# " << shown << " shown, " << diagrams.size() << " classes, " << realizable << " realizable\n";
  }
  return kOk;
}

int cmd_verify(int max_n, unsigned threads, const Format& f, std::ostream& out, std::ostream& err) {
  if (max_n < 2 || max_n > 6) {
    err << "error: --max-chords must be between 2 and 6\n";
    return kInputError;
  }
  const auto theorem = verify_flip_theorem(max_n, threads);
  const auto oracles = oracle_sweep(max_n, threads);
  const bool clean = theorem.counterexamples.empty() && oracles.oracle_disagreements.empty() &&
                     oracles.parity_violations.empty() && oracles.euler_violations.empty();

  std::ostringstream summary;
  summary << "flip theorem, n<=" << max_n << ": " << theorem.diagrams_checked << " diagrams, "
          << theorem.sites_checked << " sites, " << theorem.counterexamples.size() << " counterexamples; oracles: "
          << oracles.oracle_disagreements.size() << " disagreements, " << oracles.parity_violations.size()
          << " parity violations, " << oracles.euler_violations.size() << " Euler violations";

  if (f.json) {
    json cex = json::array();
    for (const auto& c : theorem.counterexamples) {
      cex.push_back({{"diagram", c.diagram},
                     {"site", site_json(parse_word(c.diagram), c.site)},
                     {"flipped", c.flipped},
                     {"before", c.before},
                     {"after", c.after}});
    }
    out << json{{"max_n", max_n},
                {"diagrams_checked", theorem.diagrams_checked},
                {"sites_checked", theorem.sites_checked},
                {"identity_sites", theorem.identity_sites},
                {"diagrams_per_n", theorem.diagrams_per_n},
                {"realizable_per_sweep", oracles.realizable_count},
                {"counterexamples", cex},
                {"oracle_disagreements", oracles.oracle_disagreements},
                {"parity_violations", oracles.parity_violations},
                {"euler_violations", oracles.euler_violations}}
               .dump(2)
        << '\n';
    err << summary.str() << '\n';
  } else {
    for (std::size_t k = 0; k < theorem.diagrams_per_n.size(); ++k)
      out << "n=" << k + 1 << ": " << theorem.diagrams_per_n[k] << " diagrams\n";
    for (const auto& c : theorem.counterexamples)
      out << "COUNTEREXAMPLE " << c.diagram << " site " << c.site.i << "," << c.site.j << " -> " << c.flipped << '\n';
    for (const auto& w : oracles.oracle_disagreements) out << "ORACLE DISAGREEMENT " << w << '\n';
    for (const auto& w : oracles.parity_violations) out << "PARITY VIOLATION " << w << '\n';
    for (const auto& w : oracles.euler_violations) out << "EULER VIOLATION " << w << '\n';
    out << summary.str() << '\n';
  }
  return clean ? kOk : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss diagrams as (cubic graph, Hamiltonian cycle) pairs", "gaussdiag"};
  app.require_subcommand(1);

  std::string diagram_input;
  Format fmt;

  auto* analyze = app.add_subcommand("analyze", "Full analysis of one diagram");
  analyze->add_option("diagram", diagram_input, "Word (e.g. ABAB) or chord pairs (e.g. 0-2,1-3)")->required();
  add_format_flags(analyze, fmt, false, true);

  auto* check = app.add_subcommand("check", "Exit 0 if realizable, 1 if not");
  check->add_option("diagram", diagram_input)->required();

  auto* graph = app.add_subcommand("graph", "Cubic graph tools");
  graph->require_subcommand(1);
  std::string graph_a;
  std::string graph_b;
  auto* hamcycles = graph->add_subcommand("hamcycles", "List Hamiltonian cycles");
  hamcycles->add_option("graph", graph_a, "mobius:<k>, diagram:<word>, edge-list file or -")->required();
  add_format_flags(hamcycles, fmt, false, true);
  auto* census = graph->add_subcommand("census", "Diagram classes produced by each Hamiltonian cycle");
  census->add_option("graph", graph_a)->required();
  add_format_flags(census, fmt, true, false);
  auto* iso = graph->add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("first", graph_a)->required();
  iso->add_option("second", graph_b)->required();
  add_format_flags(iso, fmt, false, false);
  auto* edges = graph->add_subcommand("edges", "Print the graph as an edge list");
  edges->add_option("graph", graph_a)->required();
  add_format_flags(edges, fmt, false, true);

  bool orbit = false;
  auto* flips = app.add_subcommand("flips", "Single-flip sites and results");
  flips->add_option("diagram", diagram_input)->required();
  flips->add_flag("--orbit", orbit, "Explore the full flip orbit");
  add_format_flags(flips, fmt, false, false);

  int chords = 0;
  bool realizable_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "All diagram classes with n chords");
  enumerate->add_option("--chords", chords, "Chord count (1..8)")->required();
  enumerate->add_flag("--realizable-only", realizable_only);
  add_format_flags(enumerate, fmt, false, false);

  int max_chords = 0;
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify", "Check the flip theorem and oracle agreement exhaustively");
  verify->add_option("--max-chords", max_chords, "Largest chord count (2..6)")->required();
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format_flags(verify, fmt, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(diagram_input, fmt, out);
    if (*check) return cmd_check(diagram_input, out);
    if (*hamcycles) return cmd_hamcycles(load_graph(graph_a), fmt, out);
    if (*census) return cmd_census(load_graph(graph_a), fmt, out);
    if (*iso) return cmd_iso(load_graph(graph_a), load_graph(graph_b), fmt, out);
    if (*edges) {
      const auto g = load_graph(graph_a);
      out << (fmt.dot ? g.to_dot() : g.to_edge_list());
      return kOk;
    }
    if (*flips) return cmd_flips(diagram_input, orbit, fmt, out);
    if (*enumerate) return cmd_enumerate(chords, realizable_only, fmt, out, err);
    if (*verify) return cmd_verify(max_chords, threads, fmt, out, err);
  } catch (const gauss::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace gauss::cli
