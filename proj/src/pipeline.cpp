#include "graphinv/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "graphinv/errors.hpp"

namespace graphinv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn(i) for i in [0, count) across `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& worker : workers) worker.join();
}

bool values_equal(const std::vector<double>& a, const std::vector<double>& b, double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > eps) return false;
  return true;
}

// Partition `members` into runs of equal keys under `same`, after sorting by `less`.
template <typename Less, typename Same>
std::vector<std::vector<int>> group_runs(std::vector<int> members, Less less, Same same) {
  std::sort(members.begin(), members.end(), less);
  std::vector<std::vector<int>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == 0 || !same(members[i - 1], members[i])) groups.emplace_back();
    groups.back().push_back(members[i]);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

}  // namespace

ClassificationReport classify(const std::vector<Graph>& graphs, const PipelineOptions& options) {
  ClassificationReport report;
  report.total = static_cast<int>(graphs.size());
  std::vector<GraphFingerprint> prints(graphs.size());

  // Stage 1: sorted descriptor sequences.
  const auto stage1_start = Clock::now();
  parallel_for(report.total, options.jobs, [&](int i) {
    prints[i].n = graphs[i].vertex_count();
    prints[i].sorted_r = descriptor_sequence(graphs[i], options.weights, options.eps).values;
    std::sort(prints[i].sorted_r.begin(), prints[i].sorted_r.end());
  });
  std::vector<int> all(report.total);
  for (int i = 0; i < report.total; ++i) all[i] = i;
  const auto stage1_groups = group_runs(
      std::move(all),
      [&](int a, int b) {
        if (prints[a].n != prints[b].n) return prints[a].n < prints[b].n;
        return std::lexicographical_compare(prints[a].sorted_r.begin(), prints[a].sorted_r.end(),
                                            prints[b].sorted_r.begin(), prints[b].sorted_r.end());
      },
      [&](int a, int b) {
        return prints[a].n == prints[b].n && values_equal(prints[a].sorted_r, prints[b].sorted_r, options.eps);
      });
  std::vector<int> survivors;
  for (const auto& group : stage1_groups) {
    if (group.size() == 1)
      report.stage1_distinct.push_back(group[0]);
    else
      survivors.insert(survivors.end(), group.begin(), group.end());
  }
  std::sort(report.stage1_distinct.begin(), report.stage1_distinct.end());
  report.stage1_seconds = seconds_since(stage1_start);

  // Stage 2: clique sequences for the survivors only.
  const auto stage2_start = Clock::now();
  std::vector<std::vector<int>> candidate_classes;
  std::vector<int> unresolved;
  if (options.skip_cliques) {
    for (const auto& group : stage1_groups)
      if (group.size() > 1) candidate_classes.push_back(group);
  } else {
    parallel_for(static_cast<int>(survivors.size()), options.jobs, [&](int si) {
      GraphFingerprint& fp = prints[survivors[si]];
      try {
        const CliqueSequence cs = clique_sequence(graphs[survivors[si]], IrrSequence::for_order(fp.n),
                                                  options.clique_budget);
        fp.omega = cs.omega;
        fp.cs = cs.cs;
        fp.has_cliques = true;
      } catch (const BudgetError&) {
        fp.clique_ok = false;
      }
    });
    for (const auto& group : stage1_groups) {
      if (group.size() == 1) continue;
      std::vector<int> resolved;
      for (int i : group)
        (prints[i].clique_ok ? resolved : unresolved).push_back(i);
      const auto refined = group_runs(
          std::move(resolved),
          [&](int a, int b) {
            if (prints[a].omega != prints[b].omega) return prints[a].omega < prints[b].omega;
            return std::lexicographical_compare(prints[a].cs.begin(), prints[a].cs.end(), prints[b].cs.begin(),
                                                prints[b].cs.end());
          },
          [&](int a, int b) {
            return prints[a].omega == prints[b].omega && values_equal(prints[a].cs, prints[b].cs, options.eps);
          });
      for (const auto& cls : refined) {
        if (cls.size() == 1)
          report.stage2_distinct.push_back(cls[0]);
        else
          candidate_classes.push_back(cls);
      }
    }
    std::sort(report.stage2_distinct.begin(), report.stage2_distinct.end());
  }
  report.stage2_seconds = seconds_since(stage2_start);

  // Exact stage within each candidate class.
  const auto exact_start = Clock::now();
  std::sort(candidate_classes.begin(), candidate_classes.end());
  for (const auto& cls : candidate_classes) {
    report.classes.push_back({cls, false});
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        ++report.exact_checks;
        auto witness = exact_isomorphic(graphs[cls[a]], graphs[cls[b]]);
        ClassificationReport::Verdict verdict;
        verdict.a = cls[a];
        verdict.b = cls[b];
        verdict.isomorphic = witness.has_value();
        if (witness) {
          for (const auto& [u, v] : graphs[cls[a]].edges())
            if (!graphs[cls[b]].has_edge((*witness)[u], (*witness)[v]))
              throw std::logic_error("classify: exact stage produced an invalid witness");
          verdict.witness = std::move(*witness);
        }
        report.verdicts.push_back(std::move(verdict));
      }
    }
  }
  if (!unresolved.empty()) {
    std::sort(unresolved.begin(), unresolved.end());
    report.classes.push_back({std::move(unresolved), true});
  }
  report.exact_seconds = seconds_since(exact_start);
  return report;
}

std::optional<std::vector<int>> exact_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  // Initial coloring: descriptor-value class over the combined value pool,
  // paired with the degree.
  std::vector<double> pool = descriptor_sequence(g).values;
  const std::vector<double> hv = descriptor_sequence(h).values;
  pool.insert(pool.end(), hv.begin(), hv.end());
  const auto value_groups = group_indices_by_value(pool, kDefaultEps);
  std::vector<int> color_g(n), color_h(n);
  for (std::size_t c = 0; c < value_groups.size(); ++c) {
    for (int idx : value_groups[c]) {
      if (idx < n)
        color_g[idx] = static_cast<int>(c);
      else
        color_h[idx - n] = static_cast<int>(c);
    }
  }
  auto signature = [&](const Graph& gr, const std::vector<int>& color, int v) {
    return std::pair<int, int>(gr.degree(v), color[v]);
  };
  std::vector<std::pair<int, int>> sig_g(n), sig_h(n);
  for (int v = 0; v < n; ++v) {
    sig_g[v] = signature(g, color_g, v);
    sig_h[v] = signature(h, color_h, v);
  }
  {
    auto a = sig_g, b = sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Vertex order: most mapped neighbors first, then rarest signature.
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : g.neighbors(v))
        if (placed[u]) ++links;
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<int> map_gh(n, -1), used_h(n, 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (int t = 0; t < n; ++t) {
      if (used_h[t] || sig_h[t] != sig_g[v]) continue;
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (map_gh[u] != -1 && !h.has_edge(t, map_gh[u])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // Non-edges must map to non-edges as well.
        for (int u = 0; u < n && ok; ++u)
          if (map_gh[u] != -1 && !g.has_edge(v, u) && u != v && h.has_edge(t, map_gh[u])) ok = false;
      }
      if (!ok) continue;
      map_gh[v] = t;
      used_h[t] = 1;
      if (extend(depth + 1)) return true;
      map_gh[v] = -1;
      used_h[t] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map_gh;
}

}  // namespace graphinv
