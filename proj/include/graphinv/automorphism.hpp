#ifndef GRAPHINV_AUTOMORPHISM_HPP
#define GRAPHINV_AUTOMORPHISM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "graphinv/cliques.hpp"
#include "graphinv/descriptor.hpp"
#include "graphinv/graph.hpp"

namespace graphinv {

struct AutOptions {
  // Group by the descriptor augmented with the per-vertex clique weights
  // (plain descriptor grouping when false).
  bool augment_with_cliques = true;
  // Allow candidate groups to span components, so automorphisms swapping
  // isomorphic components are found as well.
  bool cross_component = true;
  std::uint64_t max_candidates = 10'000'000;
  double eps = kDefaultEps;
  CliqueBudget clique_budget;
};

struct CandidateGroups {
  std::vector<std::vector<int>> component_blocks;
  // Vertex groups with eps-equal key value; partition of V, each sorted.
  std::vector<std::vector<int>> groups;
  std::vector<double> key;  // augmented descriptor value per vertex
};

CandidateGroups candidate_groups(const Graph& g, const WeightSet& w = WeightSet::defaults(),
                                 const AutOptions& options = {});

// Lazily streams the bijections that permute each group within itself and
// fix singletons. Throws BudgetError on construction when the total count
// exceeds the budget.
class CandidatePermutations {
 public:
  CandidatePermutations(const CandidateGroups& groups, int n, std::uint64_t max_candidates);

  // Fills perm (perm[v] = image of v) and returns true, or returns false
  // when the stream is exhausted.
  bool next(std::vector<int>& perm);

  std::uint64_t total() const { return total_; }

 private:
  int n_;
  std::vector<std::vector<int>> group_members_;  // only multi-element groups
  std::vector<std::vector<int>> group_images_;   // current permutation per group
  std::uint64_t total_ = 1;
  bool done_ = false;
  bool first_ = true;
};

struct AutomorphismSet {
  // Sorted lexicographically as permutation words; always contains identity.
  std::vector<std::vector<int>> permutations;
};

AutomorphismSet automorphism_group(const Graph& g, const WeightSet& w = WeightSet::defaults(),
                                   const AutOptions& options = {});

// Closure under composition, inverses present, identity present.
bool verify_group(const AutomorphismSet& a);

bool is_automorphism(const Graph& g, const std::vector<int>& perm);

// Cycle notation with 1-based labels, e.g. "(1 3)(2)(4 5 6)".
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace graphinv

#endif
