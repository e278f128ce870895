#include "graphinv/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphinv/errors.hpp"

namespace graphinv {

namespace {

void check_budget(int n, int limit, const char* what) {
  if (n > limit)
    throw BudgetError(std::string(what) + ": oracle budget is n <= " + std::to_string(limit) + ", got " +
                      std::to_string(n));
}

}  // namespace

bool oracle_isomorphic(const Graph& g, const Graph& h, const OracleBudget& budget) {
  check_budget(std::max(g.vertex_count(), h.vertex_count()), budget.max_iso_n, "oracle_isomorphic");
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CliqueCatalog oracle_maximal_cliques(const Graph& g, const OracleBudget& budget) {
  check_budget(g.vertex_count(), budget.max_clique_n, "oracle_maximal_cliques");
  const int n = g.vertex_count();
  CliqueCatalog catalog;
  std::vector<std::vector<int>> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    bool complete = true;
    for (std::size_t a = 0; a < verts.size() && complete; ++a)
      for (std::size_t b = a + 1; b < verts.size() && complete; ++b)
        if (!g.has_edge(verts[a], verts[b])) complete = false;
    if (!complete) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (mask & (1u << w)) continue;
      bool extends = true;
      for (int v : verts)
        if (!g.has_edge(w, v)) {
          extends = false;
          break;
        }
      if (extends) maximal = false;
    }
    if (maximal) cliques.push_back(std::move(verts));
  }
  for (auto& clique : cliques) {
    const int s = static_cast<int>(clique.size());
    catalog.omega = std::max(catalog.omega, s);
    catalog.by_size[s].push_back(std::move(clique));
  }
  catalog.counts.assign(catalog.omega + 1, std::vector<int>(n, 0));
  for (auto& [size, bucket] : catalog.by_size) {
    std::sort(bucket.begin(), bucket.end());
    for (const auto& clique : bucket)
      for (int v : clique) ++catalog.counts[size][v];
  }
  return catalog;
}

AutomorphismSet oracle_automorphisms(const Graph& g, const OracleBudget& budget) {
  check_budget(g.vertex_count(), budget.max_aut_n, "oracle_automorphisms");
  const int n = g.vertex_count();
  AutomorphismSet out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) && !g.has_edge(perm[u], perm[v])) ok = false;
    if (ok) out.permutations.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace graphinv
