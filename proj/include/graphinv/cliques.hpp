#ifndef GRAPHINV_CLIQUES_HPP
#define GRAPHINV_CLIQUES_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "graphinv/descriptor.hpp"
#include "graphinv/graph.hpp"

namespace graphinv {

struct CliqueCatalog {
  // Maximal cliques bucketed by exact size; each clique is a sorted vertex
  // list, buckets sorted lexicographically.
  std::map<int, std::vector<std::vector<int>>> by_size;
  // counts[s][j] = number of maximal cliques of size s containing vertex j,
  // s in 1..omega (row 0 unused).
  std::vector<std::vector<int>> counts;
  int omega = 0;  // clique number; 0 only for the graph on zero vertices
};

struct CliqueBudget {
  std::size_t max_cliques = 1'000'000;
};

// Worklist enumeration of all maximal cliques: states carry a clique seed W
// (size a multiple of 3), candidate extensions X with labels above W's last
// round, and excluded vertices Y used for maximality tests. Each round
// extends seeds by up to 3 vertices through triangle counts read off the
// neighbourhood matrix of the induced candidate subgraph.
CliqueCatalog maximal_cliques(const Graph& g, const CliqueBudget& budget = {});

struct CliqueSequence {
  std::vector<double> r;   // R(j) = sum_s counts[s][j] / Irr(s), one per vertex
  std::vector<double> cs;  // CS(s) = sum_j counts[s][j] * R(j), s = 1..omega
  int omega = 0;
};

CliqueSequence clique_sequence_from(const CliqueCatalog& catalog, const IrrSequence& irr);
CliqueSequence clique_sequence(const Graph& g, const IrrSequence& irr, const CliqueBudget& budget = {});

// False if omega differs, else componentwise CS comparison within eps.
bool clique_fingerprint_equal(const CliqueSequence& a, const CliqueSequence& b, double eps);

}  // namespace graphinv

#endif
