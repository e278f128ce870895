#include "graphinv/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "graphinv/errors.hpp"
#include "graphinv/nm.hpp"

namespace graphinv {

namespace {

struct State {
  std::vector<int> seed;        // W: current clique, |W| = 3d
  std::vector<int> candidates;  // X: extension vertices, sorted
  std::vector<int> excluded;    // Y: vertices adjacent to all of W, outside X
};

// True if some excluded vertex is adjacent to every vertex of `verts`;
// such a vertex would extend the clique, so the candidate is not maximal.
bool extendable_by_excluded(const Graph& g, const std::vector<int>& excluded, const std::vector<int>& verts) {
  for (int y : excluded) {
    bool all = true;
    for (int v : verts)
      if (!g.has_edge(y, v)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const CliqueBudget& budget) : g_(g), budget_(budget) {}

  std::vector<std::vector<int>> run() {
    std::vector<int> all(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) all[v] = v;
    std::deque<State> worklist;
    worklist.push_back(State{{}, std::move(all), {}});
    while (!worklist.empty()) {
      State state = std::move(worklist.front());
      worklist.pop_front();
      process(state, worklist);
    }
    return std::move(cliques_);
  }

 private:
  void emit(const std::vector<int>& seed, std::initializer_list<int> tail) {
    std::vector<int> clique = seed;
    clique.insert(clique.end(), tail.begin(), tail.end());
    std::sort(clique.begin(), clique.end());
    cliques_.push_back(std::move(clique));
    if (cliques_.size() > budget_.max_cliques)
      throw BudgetError("maximal_cliques: clique budget of " + std::to_string(budget_.max_cliques) + " exceeded");
  }

  void process(const State& state, std::deque<State>& worklist) {
    const std::vector<int>& xs = state.candidates;
    const int m = static_cast<int>(xs.size());
    if (m == 0) return;
    const Graph sub = g_.induced(xs);
    const NMMatrix cl = nm_direct(sub);

    for (int i = 0; i < m; ++i) {
      const std::vector<int>& g1 = sub.neighbors(i);
      if (g1.empty()) {
        if (!extendable_by_excluded(g_, state.excluded, {xs[i]})) emit(state.seed, {xs[i]});
        continue;
      }
      // Triangle count through the edge (i,q) inside [X], from the NM entries.
      std::vector<int> pair_targets;  // q > i, no triangle: candidate K2 partners
      std::vector<int> g2;            // q > i with a triangle through (i,q)
      for (int q : g1) {
        if (q <= i) continue;
        const int triangles = -cl.eta(q, q) - cl.eta(i, q);
        (triangles == 0 ? pair_targets : g2).push_back(q);
      }
      for (int q : pair_targets) {
        if (!extendable_by_excluded(g_, state.excluded, {xs[i], xs[q]})) emit(state.seed, {xs[i], xs[q]});
      }
      for (std::size_t a = 0; a < g2.size(); ++a) {
        for (std::size_t b = a + 1; b < g2.size(); ++b) {
          const int u1 = g2[a], u2 = g2[b];
          if (!sub.has_edge(u1, u2)) continue;
          // Common neighbors of (u1,u2) in [X]; i is always one of them.
          const int shared = -cl.eta(u2, u2) - cl.eta(u1, u2);
          if (shared == 1) {
            if (!extendable_by_excluded(g_, state.excluded, {xs[i], xs[u1], xs[u2]}))
              emit(state.seed, {xs[i], xs[u1], xs[u2]});
            continue;
          }
          std::vector<int> a8;  // common neighbors of {i,u1,u2} in [X]
          for (int v : sub.neighbors(i))
            if (sub.has_edge(v, u1) && sub.has_edge(v, u2)) a8.push_back(v);
          std::vector<int> a9;
          for (int v : a8)
            if (v > u2) a9.push_back(v);
          if (a9.size() == 1) {
            const int ext = a9[0];
            bool blocked = false;
            for (int v : a8)
              if (v != ext && sub.has_edge(v, ext)) {
                blocked = true;
                break;
              }
            if (!blocked && !extendable_by_excluded(g_, state.excluded, {xs[i], xs[u1], xs[u2], xs[ext]}))
              emit(state.seed, {xs[i], xs[u1], xs[u2], xs[ext]});
          } else if (a9.empty()) {
            // With no higher-labelled common neighbor the triangle is a
            // candidate; any lower-labelled one re-derives the bigger clique
            // from its own sorted decomposition.
            if (a8.empty() && !extendable_by_excluded(g_, state.excluded, {xs[i], xs[u1], xs[u2]}))
              emit(state.seed, {xs[i], xs[u1], xs[u2]});
          } else {
            State next;
            next.seed = state.seed;
            next.seed.insert(next.seed.end(), {xs[i], xs[u1], xs[u2]});
            for (int v : a9) next.candidates.push_back(xs[v]);
            for (int v : a8)
              if (v <= u2) next.excluded.push_back(xs[v]);
            for (int y : state.excluded)
              if (g_.has_edge(y, xs[i]) && g_.has_edge(y, xs[u1]) && g_.has_edge(y, xs[u2]))
                next.excluded.push_back(y);
            worklist.push_back(std::move(next));
          }
        }
      }
    }
  }

  const Graph& g_;
  const CliqueBudget& budget_;
  std::vector<std::vector<int>> cliques_;
};

}  // namespace

CliqueCatalog maximal_cliques(const Graph& g, const CliqueBudget& budget) {
  CliqueCatalog catalog;
  std::vector<std::vector<int>> cliques = Enumerator(g, budget).run();
  for (auto& clique : cliques) {
    const int s = static_cast<int>(clique.size());
    catalog.omega = std::max(catalog.omega, s);
    catalog.by_size[s].push_back(std::move(clique));
  }
  catalog.counts.assign(catalog.omega + 1, std::vector<int>(g.vertex_count(), 0));
  for (auto& [size, bucket] : catalog.by_size) {
    std::sort(bucket.begin(), bucket.end());
    for (const auto& clique : bucket)
      for (int v : clique) ++catalog.counts[size][v];
  }
  return catalog;
}

CliqueSequence clique_sequence_from(const CliqueCatalog& catalog, const IrrSequence& irr) {
  CliqueSequence seq;
  seq.omega = catalog.omega;
  const int n = catalog.counts.empty() ? 0 : static_cast<int>(catalog.counts[0].size());
  seq.r.assign(n, 0.0);
  for (int s = 1; s <= catalog.omega; ++s)
    for (int j = 0; j < n; ++j) seq.r[j] += catalog.counts[s][j] / irr(s);
  seq.cs.assign(catalog.omega, 0.0);
  for (int s = 1; s <= catalog.omega; ++s)
    for (int j = 0; j < n; ++j) seq.cs[s - 1] += catalog.counts[s][j] * seq.r[j];
  return seq;
}

CliqueSequence clique_sequence(const Graph& g, const IrrSequence& irr, const CliqueBudget& budget) {
  return clique_sequence_from(maximal_cliques(g, budget), irr);
}

bool clique_fingerprint_equal(const CliqueSequence& a, const CliqueSequence& b, double eps) {
  if (a.omega != b.omega) return false;
  for (std::size_t i = 0; i < a.cs.size(); ++i)
    if (std::abs(a.cs[i] - b.cs[i]) > eps) return false;
  return true;
}

}  // namespace graphinv
