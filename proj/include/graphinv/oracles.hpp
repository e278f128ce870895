#ifndef GRAPHINV_ORACLES_HPP
#define GRAPHINV_ORACLES_HPP

#include "graphinv/automorphism.hpp"
#include "graphinv/cliques.hpp"
#include "graphinv/graph.hpp"

namespace graphinv {

// Intentionally naive reference implementations. They share nothing with the
// main modules beyond Graph itself, and refuse inputs past their budgets.
struct OracleBudget {
  int max_iso_n = 8;
  int max_aut_n = 8;
  int max_clique_n = 12;
};

// All n! vertex maps, checked for exact edge-set correspondence.
bool oracle_isomorphic(const Graph& g, const Graph& h, const OracleBudget& budget = {});

// All 2^n vertex subsets, kept iff complete and not extendable.
CliqueCatalog oracle_maximal_cliques(const Graph& g, const OracleBudget& budget = {});

// All n! permutations, kept iff adjacency-preserving.
AutomorphismSet oracle_automorphisms(const Graph& g, const OracleBudget& budget = {});

}  // namespace graphinv

#endif
