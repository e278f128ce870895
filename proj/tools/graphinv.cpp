// Command-line front end: invariant computation, clique catalogs,
// automorphism groups and collection classification for graph6 or edge-list
// inputs. JSON is the machine interface; CSV is a convenience view.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphinv/automorphism.hpp"
#include "graphinv/cliques.hpp"
#include "graphinv/descriptor.hpp"
#include "graphinv/errors.hpp"
#include "graphinv/nm.hpp"
#include "graphinv/oracles.hpp"
#include "graphinv/pipeline.hpp"

using json = nlohmann::ordered_json;
using namespace graphinv;

namespace {

struct CommonOptions {
  std::string input;
  std::string format = "graph6";
  std::string output;
  double eps = kDefaultEps;
  bool no_timings = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--input", opt.input, "input file")->required();
  cmd->add_option("--format", opt.format, "input format (graph6 | edgelist)")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--output", opt.output, "output file (default: stdout)");
  cmd->add_option("--eps", opt.eps, "comparison tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-timings", opt.no_timings, "omit timing fields from reports");
}

std::vector<Graph> load_graphs(const CommonOptions& opt) {
  std::ifstream in(opt.input);
  if (!in) throw std::invalid_argument("cannot open input file: " + opt.input);
  if (opt.format == "edgelist") return {read_edge_list(in)};
  return read_graph6_stream(in);
}

void write_output(const CommonOptions& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
  out << text;
}

// Round to 10 significant digits so reports are byte-stable across platforms.
double sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

json sig10_array(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(sig10(v));
  return arr;
}

json one_based(const std::vector<int>& verts) {
  json arr = json::array();
  for (int v : verts) arr.push_back(v + 1);
  return arr;
}

int run_nm(const CommonOptions& opt) {
  std::ostringstream os;
  bool first = true;
  for (const Graph& g : load_graphs(opt)) {
    if (!first) os << '\n';
    os << nm_direct(g).dump();
    first = false;
  }
  write_output(opt, os.str());
  return 0;
}

int run_descriptor(const CommonOptions& opt, bool csv) {
  std::ostringstream os;
  json out = json::array();
  if (csv) os << "graph,n,k,vertex,value,sorted_value\n";
  int index = 0;
  for (const Graph& g : load_graphs(opt)) {
    ++index;
    const DescriptorSequence d = descriptor_sequence(g, WeightSet::defaults(), opt.eps);
    std::vector<double> sorted = d.values;
    std::sort(sorted.begin(), sorted.end());
    if (csv) {
      for (int v = 0; v < g.vertex_count(); ++v)
        os << index << ',' << g.vertex_count() << ',' << d.k << ',' << (v + 1) << ',' << sig10(d.values[v]) << ','
           << sig10(sorted[v]) << '\n';
    } else {
      out.push_back({{"graph", index},
                     {"n", g.vertex_count()},
                     {"k", d.k},
                     {"values", sig10_array(d.values)},
                     {"sorted", sig10_array(sorted)}});
    }
  }
  write_output(opt, csv ? os.str() : out.dump(2) + "\n");
  return 0;
}

int run_cliques(const CommonOptions& opt, const CliqueBudget& budget, bool list_cliques) {
  json out = json::array();
  int index = 0;
  for (const Graph& g : load_graphs(opt)) {
    ++index;
    const CliqueCatalog catalog = maximal_cliques(g, budget);
    const CliqueSequence seq = clique_sequence_from(catalog, IrrSequence::for_order(g.vertex_count()));
    json t = json::object();
    json counts = json::object();
    for (int s = 1; s <= catalog.omega; ++s) {
      const auto it = catalog.by_size.find(s);
      t[std::to_string(s)] = it == catalog.by_size.end() ? 0 : it->second.size();
      counts[std::to_string(s)] = catalog.counts[s];
    }
    json entry{{"graph", index},        {"n", g.vertex_count()}, {"omega", catalog.omega},
               {"clique_counts", t},    {"counts", counts},      {"r", sig10_array(seq.r)},
               {"cs", sig10_array(seq.cs)}};
    if (list_cliques) {
      json buckets = json::object();
      for (const auto& [s, bucket] : catalog.by_size) {
        json lst = json::array();
        for (const auto& clique : bucket) lst.push_back(one_based(clique));
        buckets[std::to_string(s)] = lst;
      }
      entry["cliques"] = buckets;
    }
    out.push_back(std::move(entry));
  }
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

int run_aut(const CommonOptions& opt, const AutOptions& aut_options) {
  json out = json::array();
  int index = 0;
  for (const Graph& g : load_graphs(opt)) {
    ++index;
    const CandidateGroups groups = candidate_groups(g, WeightSet::defaults(), aut_options);
    const AutomorphismSet aut = automorphism_group(g, WeightSet::defaults(), aut_options);
    json comps = json::array();
    for (const auto& block : groups.component_blocks) comps.push_back(one_based(block));
    json grps = json::array();
    for (const auto& group : groups.groups) grps.push_back(one_based(group));
    json perms = json::array();
    for (const auto& perm : aut.permutations)
      perms.push_back({{"cycles", cycle_notation(perm)}, {"word", one_based(perm)}});
    out.push_back({{"graph", index},
                   {"n", g.vertex_count()},
                   {"components", comps},
                   {"groups", grps},
                   {"aut_order", aut.permutations.size()},
                   {"automorphisms", perms}});
  }
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

int run_classify(const CommonOptions& opt, PipelineOptions pipeline_options, bool csv) {
  pipeline_options.eps = opt.eps;
  const std::vector<Graph> graphs = load_graphs(opt);
  const ClassificationReport report = classify(graphs, pipeline_options);
  if (csv) {
    // stage_resolved: 1 descriptor, 2 cliques, 3 exact stage, 0 unresolved.
    std::vector<int> stage(graphs.size(), 3), class_id(graphs.size(), -1), iso_to(graphs.size(), -1);
    for (int i : report.stage1_distinct) stage[i] = 1;
    for (int i : report.stage2_distinct) stage[i] = 2;
    for (std::size_t c = 0; c < report.classes.size(); ++c)
      for (int i : report.classes[c].members) {
        class_id[i] = static_cast<int>(c) + 1;
        if (report.classes[c].unresolved) stage[i] = 0;
      }
    for (const auto& v : report.verdicts)
      if (v.isomorphic && iso_to[v.b] == -1) iso_to[v.b] = v.a + 1;
    std::ostringstream os;
    os << "graph_index,stage_resolved,class_id,isomorphic_to\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      os << (i + 1) << ',' << stage[i] << ',';
      if (class_id[i] >= 0) os << class_id[i];
      os << ',';
      if (iso_to[i] >= 0) os << iso_to[i];
      os << '\n';
    }
    write_output(opt, os.str());
    return 0;
  }
  json classes = json::array();
  for (const auto& cls : report.classes)
    classes.push_back({{"members", one_based(cls.members)}, {"unresolved", cls.unresolved}});
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json entry{{"a", v.a + 1}, {"b", v.b + 1}, {"isomorphic", v.isomorphic}};
    if (v.isomorphic) entry["witness"] = one_based(v.witness);
    verdicts.push_back(std::move(entry));
  }
  json out{{"total", report.total},
           {"stage1_distinct", one_based(report.stage1_distinct)},
           {"stage2_distinct", one_based(report.stage2_distinct)},
           {"classes", classes},
           {"verdicts", verdicts},
           {"exact_checks", report.exact_checks}};
  if (!opt.no_timings) {
    out["timings"] = {{"stage1_seconds", report.stage1_seconds},
                      {"stage2_seconds", report.stage2_seconds},
                      {"exact_seconds", report.exact_seconds}};
  }
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

int run_oracle_check(const CommonOptions& opt) {
  json out = json::array();
  int index = 0;
  for (const Graph& g : load_graphs(opt)) {
    ++index;
    json entry{{"graph", index}, {"n", g.vertex_count()}};
    const CliqueCatalog mine = maximal_cliques(g);
    const CliqueCatalog ref = oracle_maximal_cliques(g);
    entry["cliques_match"] = mine.by_size == ref.by_size && mine.counts == ref.counts;
    const AutomorphismSet aut = automorphism_group(g);
    const AutomorphismSet ref_aut = oracle_automorphisms(g);
    entry["automorphisms_match"] = aut.permutations == ref_aut.permutations;
    entry["aut_order"] = aut.permutations.size();
    out.push_back(std::move(entry));
  }
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph invariant engine: descriptor sequences, clique sequences, automorphism groups"};
  app.require_subcommand(1);

  CommonOptions opt;
  bool csv = false;
  bool list_cliques = false;
  CliqueBudget clique_budget;
  AutOptions aut_options;
  PipelineOptions pipeline_options;

  CLI::App* nm_cmd = app.add_subcommand("nm", "print the neighbourhood matrix of each graph");
  add_common(nm_cmd, opt);

  CLI::App* descriptor_cmd = app.add_subcommand("descriptor", "structural descriptor sequence per graph");
  add_common(descriptor_cmd, opt);
  descriptor_cmd->add_flag("--csv", csv, "CSV output instead of JSON");

  CLI::App* cliques_cmd = app.add_subcommand("cliques", "maximal clique catalog and clique sequence");
  add_common(cliques_cmd, opt);
  cliques_cmd->add_option("--max-cliques", clique_budget.max_cliques, "clique enumeration budget");
  cliques_cmd->add_flag("--list-cliques", list_cliques, "include the full clique listing");

  CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism group per graph");
  add_common(aut_cmd, opt);
  aut_cmd->add_option("--max-candidates", aut_options.max_candidates, "candidate permutation budget");
  bool plain_descriptor = false, per_component = false;
  aut_cmd->add_flag("--plain-descriptor", plain_descriptor,
                    "group by the plain descriptor without clique augmentation");
  aut_cmd->add_flag("--per-component", per_component, "restrict candidate groups to single components");

  CLI::App* classify_cmd = app.add_subcommand("classify", "partition a collection into isomorphism classes");
  add_common(classify_cmd, opt);
  classify_cmd->add_flag("--skip-cliques", pipeline_options.skip_cliques, "skip the clique-sequence stage");
  classify_cmd->add_option("--jobs", pipeline_options.jobs, "worker thread count")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-cliques", pipeline_options.clique_budget.max_cliques, "clique budget per graph");
  classify_cmd->add_flag("--csv", csv, "CSV summary instead of the JSON report");

  CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "verify results against the brute-force oracles");
  add_common(oracle_cmd, opt);

  try {
    app.parse(argc, argv);
    aut_options.eps = opt.eps;
    aut_options.augment_with_cliques = !plain_descriptor;
    aut_options.cross_component = !per_component;
    if (nm_cmd->parsed()) return run_nm(opt);
    if (descriptor_cmd->parsed()) return run_descriptor(opt, csv);
    if (cliques_cmd->parsed()) return run_cliques(opt, clique_budget, list_cliques);
    if (aut_cmd->parsed()) return run_aut(opt, aut_options);
    if (classify_cmd->parsed()) return run_classify(opt, pipeline_options, csv);
    if (oracle_cmd->parsed()) return run_oracle_check(opt);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
