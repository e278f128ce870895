// Acceptance suite: one criterion per function, selected by the single
// numeric command-line argument (no argument runs all ten). Each criterion
// prints exactly one PASS/FAIL line; the exit code is the failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "graphinv/automorphism.hpp"
#include "graphinv/cliques.hpp"
#include "graphinv/descriptor.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/nm.hpp"
#include "graphinv/oracles.hpp"
#include "graphinv/pipeline.hpp"

using namespace graphinv;

namespace {

constexpr double kGoldenTolerance = 5e-4;
constexpr double kSortedTolerance = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph golden8_graph() {
  return Graph::from_edge_list(8, {{1, 2}, {1, 6}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5},
                                   {3, 7}, {4, 7}, {4, 8}, {5, 8}, {4, 6}, {6, 7}, {6, 8}});
}

Graph shrikhande_graph() {
  std::vector<std::pair<int, int>> edges;
  auto id = [](int x, int y) { return ((x & 3) * 4 + (y & 3)) + 1; };
  const int dx[] = {1, 3, 0, 0, 1, 3};
  const int dy[] = {0, 0, 1, 3, 1, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int d = 0; d < 6; ++d) {
        const int u = id(x, y), v = id(x + dx[d], y + dy[d]);
        if (u < v) edges.emplace_back(u, v);
      }
  return Graph::from_edge_list(16, edges);
}

Graph rook4_graph() {
  std::vector<std::pair<int, int>> edges;
  auto id = [](int r, int c) { return r * 4 + c + 1; };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      for (int c2 = c + 1; c2 < 4; ++c2) edges.emplace_back(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < 4; ++r2) edges.emplace_back(id(r, c), id(r2, c));
    }
  return Graph::from_edge_list(16, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

// Shared corpus for criteria 2-4: 500 random graphs, n in [2,12],
// densities cycling through 0.2 / 0.5 / 0.8.
std::vector<Graph> corpus_500() {
  std::mt19937 rng(2025);
  const double densities[] = {0.2, 0.5, 0.8};
  std::vector<Graph> graphs;
  graphs.reserve(500);
  for (int i = 0; i < 500; ++i)
    graphs.push_back(random_graph(rng, 2 + static_cast<int>(rng() % 11), densities[i % 3]));
  return graphs;
}

// 1. Golden descriptor values for the published 8-vertex example.
Outcome criterion_1() {
  Outcome o;
  const double expected[8] = {9.9718, 8.6746, 9.4496, 8.7680, 9.5123, 8.3244, 8.7680, 8.7649};
  const DescriptorSequence d = descriptor_sequence(golden8_graph());
  if (d.values.size() != 8) o.fail("descriptor has wrong length");
  for (int i = 0; i < 8 && o.pass; ++i)
    if (std::abs(d.values[i] - expected[i]) >= kGoldenTolerance)
      o.fail("vertex " + std::to_string(i + 1) + " off by " +
             std::to_string(std::abs(d.values[i] - expected[i])));
  if (o.pass) o.detail = "8 values within 5e-4";
  return o;
}

// 2. Direct construction equals the adjacency-Laplacian product.
Outcome criterion_2() {
  Outcome o;
  int checked = 0;
  for (const Graph& g : corpus_500()) {
    if (!(nm_direct(g).eta == nm_product(g).eta)) {
      o.fail("mismatch on graph " + std::to_string(checked) + " (n=" + std::to_string(g.vertex_count()) + ")");
      break;
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " graphs agree";
  return o;
}

// 3. Sign of every power-sequence entry encodes BFS distance.
Outcome criterion_3() {
  Outcome o;
  long long entries = 0;
  for (const Graph& g : corpus_500()) {
    const int n = g.vertex_count();
    const DistanceTable dist = all_pairs_distances(g);
    for (const NMMatrix& m : power_sequence(g).matrices) {
      const long long reach = 1LL << m.level;
      const long long half = reach / 2;
      for (int i = 0; i < n && o.pass; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          ++entries;
          const int e = m.eta(i, j);
          const bool in_reach = dist.reachable(i, j) && dist.d(i, j) <= reach;
          const bool in_half = dist.reachable(i, j) && dist.d(i, j) <= half;
          if ((e == 0) != !in_reach || (e > 0) != in_half || (e < 0) != (in_reach && !in_half)) {
            o.fail("sign law broken at level " + std::to_string(m.level));
            break;
          }
        }
      }
      if (!o.pass) break;
    }
    if (!o.pass) break;
  }
  if (o.pass) o.detail = std::to_string(entries) + " entries obey the law";
  return o;
}

// 4. The sequence stops at the log of the (largest component) diameter.
Outcome criterion_4() {
  Outcome o;
  int checked = 0;
  for (const Graph& g : corpus_500()) {
    int span = 0;
    for (const auto& block : components(g))
      span = std::max(span, all_pairs_distances(g.induced(block)).diameter());
    const int expected = span <= 2 ? 1 : static_cast<int>(std::ceil(std::log2(span)));
    const NMSequence seq = power_sequence(g);
    if (seq.k != expected) {
      o.fail("graph " + std::to_string(checked) + ": k=" + std::to_string(seq.k) + " expected " +
             std::to_string(expected));
      break;
    }
    const int n = g.vertex_count();
    const bool connected = components(g).size() == 1;
    if ((seq.nonzero_count_final == n * n) != connected) {
      o.fail("graph " + std::to_string(checked) + ": final zero pattern disagrees with connectivity");
      break;
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " iteration numbers match";
  return o;
}

// 5. Relabelled pairs: equal sorted descriptors, pipeline keeps them
// together, exact stage confirms with a verified witness.
Outcome criterion_5() {
  Outcome o;
  std::mt19937 rng(4099);
  int pairs = 0;
  for (int iter = 0; iter < 200 && o.pass; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 39);
    const Graph g = random_graph(rng, n, 0.1 + 0.2 * (iter % 4));
    const std::vector<int> perm = random_permutation(rng, n);
    const Graph h = g.relabelled(perm);

    std::vector<double> a = descriptor_sequence(g).values;
    std::vector<double> b = descriptor_sequence(h).values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < n; ++i)
      if (std::abs(a[i] - b[i]) >= kSortedTolerance) {
        o.fail("pair " + std::to_string(iter) + ": sorted descriptors differ");
        break;
      }
    if (!o.pass) break;

    const ClassificationReport r = classify({g, h});
    if (!r.stage1_distinct.empty() || !r.stage2_distinct.empty()) {
      o.fail("pair " + std::to_string(iter) + ": pipeline separated isomorphic graphs");
      break;
    }
    if (r.verdicts.size() != 1 || !r.verdicts[0].isomorphic) {
      o.fail("pair " + std::to_string(iter) + ": exact stage failed to confirm");
      break;
    }
    const std::vector<int>& witness = r.verdicts[0].witness;
    if (!(g.relabelled(witness).adjacency() == h.adjacency())) {
      o.fail("pair " + std::to_string(iter) + ": witness does not map g onto h");
      break;
    }
    ++pairs;
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs confirmed";
  return o;
}

// 6. The strongly regular pair: equal descriptors, separated by cliques.
Outcome criterion_6() {
  Outcome o;
  const Graph s = shrikhande_graph();
  const Graph r = rook4_graph();
  std::vector<double> a = descriptor_sequence(s).values;
  std::vector<double> b = descriptor_sequence(r).values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 16; ++i)
    if (std::abs(a[i] - b[i]) >= kSortedTolerance) o.fail("sorted descriptors unexpectedly differ");

  const IrrSequence irr = IrrSequence::for_order(16);
  const CliqueSequence cs = clique_sequence(s, irr);
  const CliqueSequence cr = clique_sequence(r, irr);
  if (cs.omega != 3) o.fail("Shrikhande clique number is " + std::to_string(cs.omega));
  if (cr.omega != 4) o.fail("rook clique number is " + std::to_string(cr.omega));
  if (clique_fingerprint_equal(cs, cr, kSortedTolerance)) o.fail("clique sequences fail to separate");

  const ClassificationReport report = classify({s, r});
  if (report.exact_checks != 0) o.fail("exact checker was invoked");
  if (report.stage2_distinct.size() != 2) o.fail("stage 2 did not resolve both graphs");
  if (o.pass) o.detail = "separated by cliques, 0 exact checks";
  return o;
}

// 7. Clique enumeration equals the exhaustive oracle: every labelled graph
// on up to 5 vertices, plus 200 random graphs on 7-10 vertices.
Outcome criterion_7() {
  Outcome o;
  int checked = 0;
  auto compare = [&](const Graph& g) {
    const CliqueCatalog fast = maximal_cliques(g);
    const CliqueCatalog slow = oracle_maximal_cliques(g);
    if (fast.omega != slow.omega || !(fast.by_size == slow.by_size) || !(fast.counts == slow.counts)) {
      o.fail("mismatch on a graph with n=" + std::to_string(g.vertex_count()));
      return false;
    }
    ++checked;
    return true;
  };
  for (int n = 1; n <= 5 && o.pass; ++n) {
    const int bits = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
          if (mask >> bit & 1) edges.emplace_back(i, j);
      if (!compare(Graph::from_edge_list(n, edges))) break;
    }
  }
  std::mt19937 rng(7919);
  for (int iter = 0; iter < 200 && o.pass; ++iter)
    if (!compare(random_graph(rng, 7 + static_cast<int>(rng() % 4), 0.2 + 0.3 * (iter % 3)))) break;
  if (o.pass) o.detail = std::to_string(checked) + " graphs match the oracle";
  return o;
}

// 8. Automorphism groups equal the brute-force oracle and verify as groups.
Outcome criterion_8() {
  Outcome o;
  struct Named {
    const char* label;
    Graph g;
    std::size_t order;
  };
  const Named named[] = {{"K4", complete_graph(4), 24},
                         {"C5", cycle_graph(5), 10},
                         {"P3", path_graph(3), 2},
                         {"8-vertex example", golden8_graph(), 1}};
  for (const auto& c : named) {
    const AutomorphismSet aut = automorphism_group(c.g);
    if (aut.permutations.size() != c.order)
      o.fail(std::string(c.label) + ": order " + std::to_string(aut.permutations.size()));
    if (!verify_group(aut)) o.fail(std::string(c.label) + ": not a group");
  }
  std::mt19937 rng(8191);
  int checked = 0;
  for (int iter = 0; iter < 200 && o.pass; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, 0.2 + 0.3 * (iter % 3));
    const AutomorphismSet fast = automorphism_group(g);
    if (!(fast.permutations == oracle_automorphisms(g).permutations)) {
      o.fail("graph " + std::to_string(iter) + " (n=" + std::to_string(n) + "): group differs from oracle");
      break;
    }
    if (!verify_group(fast)) {
      o.fail("graph " + std::to_string(iter) + ": verify_group failed");
      break;
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " random graphs plus 4 named cases";
  return o;
}

// 9. The candidate grouping is sound: every true automorphism keeps each
// vertex inside its eps-equal descriptor group.
Outcome criterion_9() {
  Outcome o;
  std::mt19937 rng(8191);  // same corpus as criterion 8
  int automorphisms = 0;
  for (int iter = 0; iter < 200 && o.pass; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, 0.2 + 0.3 * (iter % 3));
    const CandidateGroups cg = candidate_groups(g);
    std::vector<int> group_of(n, -1);
    for (std::size_t gi = 0; gi < cg.groups.size(); ++gi)
      for (int v : cg.groups[gi]) group_of[v] = static_cast<int>(gi);
    for (const auto& perm : oracle_automorphisms(g).permutations) {
      ++automorphisms;
      for (int v = 0; v < n; ++v)
        if (group_of[perm[v]] != group_of[v]) {
          o.fail("graph " + std::to_string(iter) + ": automorphism leaves its candidate group");
          break;
        }
      if (!o.pass) break;
    }
  }
  if (o.pass) o.detail = std::to_string(automorphisms) + " automorphisms respect the grouping";
  return o;
}

// 10. 50-graph collection with 5 planted isomorphic pairs.
Outcome criterion_10() {
  Outcome o;
  std::mt19937 rng(104729);
  std::vector<Graph> bases;
  std::vector<std::vector<double>> seen;  // sorted descriptor per accepted base
  const IrrSequence irr = IrrSequence::for_order(8);
  while (static_cast<int>(bases.size()) < 45) {
    const Graph g = random_graph(rng, 8, 0.5);
    std::vector<double> key = descriptor_sequence(g).values;
    std::sort(key.begin(), key.end());
    bool fresh = true;
    for (const auto& other : seen) {
      bool same = true;
      for (int i = 0; i < 8; ++i)
        if (std::abs(key[i] - other[i]) >= kSortedTolerance) {
          same = false;
          break;
        }
      if (same) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    bases.push_back(g);
    seen.push_back(std::move(key));
  }

  std::vector<Graph> collection = bases;
  std::vector<std::pair<int, int>> planted;
  for (int p = 0; p < 5; ++p) {
    const int src = p * 9;  // spread the originals across the collection
    collection.push_back(bases[src].relabelled(random_permutation(rng, 8)));
    planted.emplace_back(src, 45 + p);
  }

  const ClassificationReport report = classify(collection);
  if (report.classes.size() != 5)
    o.fail("expected 5 classes, got " + std::to_string(report.classes.size()));
  for (const auto& cls : report.classes) {
    if (cls.members.size() != 2) o.fail("class of size " + std::to_string(cls.members.size()));
    if (cls.unresolved) o.fail("unresolved class");
  }
  for (const auto& [a, b] : planted) {
    bool found = false;
    for (const auto& cls : report.classes)
      found = found || (cls.members == std::vector<int>{a, b});
    if (!found) o.fail("planted pair not recovered as a class");
  }
  if (report.exact_checks > 5)
    o.fail("exact checker ran " + std::to_string(report.exact_checks) + " times");
  for (const auto& v : report.verdicts)
    if (v.isomorphic != oracle_isomorphic(collection[v.a], collection[v.b]))
      o.fail("verdict disagrees with the oracle");
  if (o.pass)
    o.detail = "5 classes of size 2, " + std::to_string(report.exact_checks) + " exact checks, oracle agrees";
  return o;
}

using Criterion = Outcome (*)();
const Criterion kCriteria[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                               criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
      return 64;
    }
  }
  int failures = 0;
  for (int c = 1; c <= 10; ++c) {
    if (only != 0 && c != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = kCriteria[c - 1]();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%s, %.2fs)\n", c, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
    if (!o.pass) ++failures;
  }
  return failures;
}
