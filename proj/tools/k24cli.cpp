// k24: decide K_{2,4}-minor-freeness with verifiable certificates.
//
// Exit codes: 0 success / minor-free, 1 minor found, 2 usage or parse
// error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "k24/audit.hpp"
#include "k24/blocks.hpp"
#include "k24/catalog.hpp"
#include "k24/graph_io.hpp"
#include "k24/hamilton.hpp"
#include "k24/minor_oracle.hpp"
#include "k24/recognizer.hpp"

using json = nlohmann::json;
using namespace k24;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  std::vector<Graph> out;
  if (format == "edges") {
    out.push_back(parse_edge_list(text));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  if (out.empty()) throw GraphError("no graphs in input");
  return out;
}

json witness_json(const OuterWitness& w) { return json(w.ordering); }

json certificate_json(const Graph& g, const K24Certificate& cert) {
  json blocks = json::array();
  for (const BlockCert& bc : cert.blocks) {
    json b;
    if (const auto* op = std::get_if<BlockOuterplanar>(&bc)) {
      b["kind"] = "outerplanar";
      b["vertices"] = op->vertices;
      b["ordering"] = witness_json(op->witness);
      b["cycle"] = op->witness.kind == OuterWitness::Kind::Cycle;
    } else if (const auto* ts = std::get_if<BlockThreeSheets>(&bc)) {
      b["kind"] = "three-sheets";
      b["vertices"] = ts->vertices;
      b["x"] = ts->x;
      b["y"] = ts->y;
      b["xy_edge"] = ts->xy_present;
      json sheets = json::array();
      for (const auto& s : ts->sheets) sheets.push_back(witness_json(s));
      b["sheets"] = sheets;
    } else if (const auto* ce = std::get_if<BlockCoreExpansion>(&bc)) {
      b["kind"] = "core-expansion";
      b["vertices"] = ce->vertices;
      b["core"] = ce->core_id;
      b["core_vertices"] = ce->core_vertices;
      json reps = json::array();
      for (const auto& re : ce->replaced)
        reps.push_back({{"u", re.u}, {"v", re.v}, {"strip", witness_json(re.strip)}});
      b["replaced"] = reps;
    } else {
      const auto& hm = std::get<BlockHasMinor>(bc);
      b["kind"] = "has-minor";
      b["vertices"] = hm.vertices;
      b["r1"] = hm.model.r1;
      b["r2"] = hm.model.r2;
      b["s"] = hm.model.s;
    }
    blocks.push_back(std::move(b));
  }
  return json{{"schema", "k24cert/1"},
              {"n", g.order()},
              {"verdict", cert.has_minor ? "minor" : "free"},
              {"blocks", blocks}};
}

std::string emit_graph(const Graph& g, const std::string& format) {
  return format == "edges" ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

int run_check(const std::string& file, const std::string& format,
              const std::string& cert_path) {
  std::vector<Graph> graphs = read_graphs(file, format);
  bool any_minor = false;
  std::ostringstream cert_out;
  for (const Graph& g : graphs) {
    K24Certificate cert = recognize(g);
    if (!verify_certificate(g, cert))
      throw GraphError("internal: produced certificate failed verification");
    any_minor = any_minor || cert.has_minor;
    cert_out << certificate_json(g, cert).dump() << "\n";
  }
  std::cout << cert_out.str();
  if (!cert_path.empty()) {
    std::ofstream out(cert_path);
    if (!out) throw GraphError("cannot write certificate file: " + cert_path);
    out << cert_out.str();
  }
  return any_minor ? 1 : 0;
}

int run_oracle(const std::string& file, const std::string& format, int t,
               const std::string& rooted) {
  std::vector<Graph> graphs = read_graphs(file, format);
  bool any_minor = false;
  for (const Graph& g : graphs) {
    std::optional<StandardMinorModel> model;
    if (rooted.empty()) {
      model = find_k2t_minor(g, t);
    } else {
      int x, y;
      char comma;
      std::istringstream rs(rooted);
      if (!(rs >> x >> comma >> y) || comma != ',')
        throw GraphError("--rooted expects X,Y");
      model = find_rooted_k2t_minor(g, x, y, t);
    }
    if (model) {
      any_minor = true;
      std::cout << json{{"minor", true},
                        {"t", t},
                        {"r1", model->r1},
                        {"r2", model->r2},
                        {"s", model->s}}
                       .dump()
                << "\n";
    } else {
      std::cout << json{{"minor", false}, {"t", t}}.dump() << "\n";
    }
  }
  return any_minor ? 1 : 0;
}

int run_hamilton(const std::string& file, const std::string& format) {
  Graph g = read_graphs(file, format)[0];
  HamiltonCertificate c;
  if (is_k_connected(g, 3))
    c = hamilton_cycle_3conn(g);
  else
    c = hamilton_path_2conn(g);
  std::cout << (c.kind == HamiltonCertificate::Kind::Cycle ? "cycle:" : "path:");
  for (int v : c.sequence) std::cout << " " << v;
  std::cout << "\n";
  return 0;
}

int run_apex(const std::string& file, const std::string& format) {
  Graph g = read_graphs(file, format)[0];
  std::vector<int> u = find_apex_set(g);
  std::cout << json{{"apex", u}}.dump() << "\n";
  return 0;
}

void print_report(const AuditReport& r, const std::string& name, bool as_json,
                  bool& any_bad) {
  if (as_json) {
    json issues = json::array();
    for (const auto& i : r.issues) issues.push_back(i.check + ": " + i.detail);
    std::cout << json{{"check", name},
                      {"items", r.items},
                      {"budget_exceeded", r.budget_exceeded},
                      {"issues", issues}}
                     .dump()
              << "\n";
  } else {
    std::cout << name << ": " << (r.ok() ? "ok" : "FAILED") << " (" << r.items
              << " items";
    if (r.budget_exceeded) std::cout << ", " << r.budget_exceeded << " over budget";
    std::cout << ")\n";
    for (const auto& i : r.issues)
      std::cout << "  " << i.check << ": " << i.detail << "\n";
  }
  any_bad = any_bad || !r.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K_{2,4}-minor-freeness: certificates, oracle, catalog, audit"};
  app.require_subcommand(1);

  std::string file = "-", format = "g6", cert_path;
  auto* check = app.add_subcommand("check", "classify graphs with certificates");
  check->add_option("file", file, "input file or - for stdin");
  check->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));
  check->add_option("--cert", cert_path, "also write certificates to this file");

  int t = 4;
  std::string rooted;
  auto* oracle = app.add_subcommand("oracle", "brute-force K_{2,t} minor search");
  oracle->add_option("file", file, "input file or - for stdin");
  oracle->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));
  oracle->add_option("--t", t, "minor parameter t");
  oracle->add_option("--rooted", rooted, "roots X,Y for a rooted search");

  std::string family, exception_name;
  auto* gen = app.add_subcommand("gen", "emit a catalog graph");
  gen->add_option("--family", family, "n,r,s or n,r,s,+");
  gen->add_option("--exception", exception_name, "K5 K33 A A+ B B+ C C+ D");
  gen->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enum", "emit all 3-connected K_{2,4}-minor-free graphs of order n");
  enumerate->add_option("--n", enum_n, "order")->required();
  enumerate->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  auto* hamilton = app.add_subcommand("hamilton", "hamilton cycle (3-connected) or path (2-connected)");
  hamilton->add_option("file", file, "input file or - for stdin");
  hamilton->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  auto* apex = app.add_subcommand("apex", "vertices whose removal leaves the graph outerplanar");
  apex->add_option("file", file, "input file or - for stdin");
  apex->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  bool a_compare = false, a_counting = false, a_edges = false, a_table1 = false,
       a_hasse = false, a_subdividable = false, a_all = false, as_json = false;
  std::string corpus_path = "data/connected_le8.g6", suite;
  int jobs = 1, count_lo = 9, count_hi = 15, sub_order = 7;
  std::uint64_t seed = 1;
  auto* audit = app.add_subcommand("audit", "conformance checks");
  audit->add_flag("--compare", a_compare, "recognizer vs oracle over a corpus");
  audit->add_flag("--counting", a_counting, "2n-8 counting");
  audit->add_flag("--edges", a_edges, "edge bounds");
  audit->add_flag("--table1", a_table1, "edge-contraction table");
  audit->add_flag("--hasse", a_hasse, "small-case deletion/contraction facts");
  audit->add_flag("--subdividable", a_subdividable, "exhaustive subdividable sets");
  audit->add_flag("--all", a_all, "run every check");
  audit->add_option("--suite", suite,
                    "comma-separated check names (alternative to the flags)");
  audit->add_flag("--json", as_json, "machine-readable report");
  audit->add_option("--corpus", corpus_path, "graph6 corpus for --compare");
  audit->add_option("--jobs", jobs, "worker threads for --compare");
  audit->add_option("--counting-range", count_hi, "upper order for --counting");
  audit->add_option("--max-order", sub_order, "order cap for --subdividable");
  audit->add_option("--seed", seed, "seed for the fallback random corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(file, format, cert_path);
    if (*oracle) return run_oracle(file, format, t, rooted);
    if (*gen) {
      if (family.empty() == exception_name.empty())
        throw GraphError("gen needs exactly one of --family / --exception");
      Graph g;
      if (!family.empty()) {
        std::string body = family;
        bool plus = false;
        if (!body.empty() && body.back() == '+') {
          plus = true;
          body.pop_back();
          if (!body.empty() && body.back() == ',') body.pop_back();
        }
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        int n, r, s;
        if (!(in >> n >> r >> s)) throw GraphError("--family expects n,r,s[,+]");
        g = build_family({n, r, s, plus});
      } else {
        g = named_graph(exception_name);
      }
      std::cout << emit_graph(g, format);
      return 0;
    }
    if (*enumerate) {
      for (const CatalogEntry& e : enumerate_3connected(enum_n)) {
        if (format == "edges") std::cout << "# " << e.id << "\n";
        std::cout << emit_graph(e.graph, format);
      }
      return 0;
    }
    if (*hamilton) return run_hamilton(file, format);
    if (*apex) return run_apex(file, format);
    if (*audit) {
      bool bad = false;
      if (!suite.empty()) {
        std::string item;
        std::istringstream ss(suite);
        while (std::getline(ss, item, ',')) {
          if (item == "compare") a_compare = true;
          else if (item == "counting") a_counting = true;
          else if (item == "edges") a_edges = true;
          else if (item == "table1") a_table1 = true;
          else if (item == "hasse") a_hasse = true;
          else if (item == "subdividable") a_subdividable = true;
          else if (item == "all") a_all = true;
          else throw GraphError("unknown audit suite: " + item);
        }
      }
      if (a_all || a_compare) {
        std::vector<Graph> corpus;
        try {
          corpus = load_graph6_file(corpus_path);
        } catch (const GraphError&) {
          std::cerr << "corpus file unavailable, using the random fallback corpus\n";
          corpus = random_corpus(500, 9, seed);
        }
        print_report(compare_corpus(corpus, {}, jobs), "compare", as_json, bad);
      }
      if (a_all || a_counting) {
        AuditReport r;
        for (int n = count_lo; n <= count_hi; ++n) {
          auto [want, got] = check_counting(n);
          ++r.items;
          if (want != got)
            r.add("counting", "n=" + std::to_string(n) + ": expected " +
                                  std::to_string(want) + ", got " +
                                  std::to_string(got));
        }
        print_report(r, "counting", as_json, bad);
      }
      if (a_all || a_edges)
        print_report(check_edge_bounds(6, 12), "edges", as_json, bad);
      if (a_all || a_table1)
        print_report(check_table1(6, 10), "table1", as_json, bad);
      if (a_all || a_hasse) print_report(check_hasse(), "hasse", as_json, bad);
      if (a_all || a_subdividable) {
        AuditReport r;
        for (int n = 4; n <= sub_order; ++n)
          for (const CatalogEntry& e : enumerate_3connected(n))
            r.merge(check_subdividable_bruteforce(e.id, sub_order));
        print_report(r, "subdividable", as_json, bad);
      }
      return bad ? 1 : 0;
    }
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MinorFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const HamiltonPreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.minor_witness ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
