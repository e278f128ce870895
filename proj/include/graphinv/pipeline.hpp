#ifndef GRAPHINV_PIPELINE_HPP
#define GRAPHINV_PIPELINE_HPP

#include <optional>
#include <vector>

#include "graphinv/cliques.hpp"
#include "graphinv/descriptor.hpp"
#include "graphinv/graph.hpp"

namespace graphinv {

struct GraphFingerprint {
  int n = 0;
  std::vector<double> sorted_r;
  // Clique part is filled lazily in stage 2; clique_ok goes false when the
  // clique enumeration ran out of budget.
  bool has_cliques = false;
  bool clique_ok = true;
  int omega = 0;
  std::vector<double> cs;
};

struct PipelineOptions {
  double eps = kDefaultEps;
  bool skip_cliques = false;
  int jobs = 1;
  CliqueBudget clique_budget;
  WeightSet weights = WeightSet::defaults();
};

struct ClassificationReport {
  struct Class {
    std::vector<int> members;  // graph indices, ascending
    bool unresolved = false;   // clique budget exhausted for these members
  };
  struct Verdict {
    int a = 0, b = 0;
    bool isomorphic = false;
    std::vector<int> witness;  // vertex map a -> b when isomorphic
  };

  int total = 0;
  std::vector<int> stage1_distinct;  // unique sorted descriptor
  std::vector<int> stage2_distinct;  // separated by the clique sequence
  std::vector<Class> classes;        // remaining candidate classes, >= 2 members
  std::vector<Verdict> verdicts;
  int exact_checks = 0;
  double stage1_seconds = 0, stage2_seconds = 0, exact_seconds = 0;
};

ClassificationReport classify(const std::vector<Graph>& graphs, const PipelineOptions& options = {});

// Exact isomorphism test: backtracking over a refinement-ordered search with
// degree and descriptor-value classes as the initial coloring. Returns the
// witness mapping g -> h when isomorphic.
std::optional<std::vector<int>> exact_isomorphic(const Graph& g, const Graph& h);

}  // namespace graphinv

#endif
