#include "graphinv/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "graphinv/errors.hpp"

namespace graphinv {

CandidateGroups candidate_groups(const Graph& g, const WeightSet& w, const AutOptions& options) {
  CandidateGroups out;
  out.component_blocks = components(g);
  out.key = descriptor_sequence(g, w, options.eps).values;
  if (options.augment_with_cliques) {
    const CliqueSequence cs = clique_sequence(g, IrrSequence::for_order(g.vertex_count()), options.clique_budget);
    for (int v = 0; v < g.vertex_count(); ++v) out.key[v] += cs.r[v];
  }
  out.groups = group_indices_by_value(out.key, options.eps);
  if (!options.cross_component) {
    // Split each value group along component boundaries.
    std::vector<int> comp(g.vertex_count());
    for (std::size_t c = 0; c < out.component_blocks.size(); ++c)
      for (int v : out.component_blocks[c]) comp[v] = static_cast<int>(c);
    std::vector<std::vector<int>> split;
    for (const auto& group : out.groups) {
      std::map<int, std::vector<int>> parts;
      for (int v : group) parts[comp[v]].push_back(v);
      for (auto& [c, part] : parts) split.push_back(std::move(part));
    }
    out.groups = std::move(split);
  }
  return out;
}

CandidatePermutations::CandidatePermutations(const CandidateGroups& groups, int n, std::uint64_t max_candidates)
    : n_(n) {
  std::ostringstream sizes;
  for (const auto& group : groups.groups) {
    if (group.size() < 2) continue;
    group_members_.push_back(group);
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= group.size(); ++i) fact *= i;
    if (total_ > max_candidates / fact) {
      for (const auto& mg : groups.groups)
        if (mg.size() > 1) sizes << (sizes.tellp() > 0 ? "," : "") << mg.size();
      throw BudgetError("candidate permutation budget of " + std::to_string(max_candidates) +
                        " exceeded; multi-element group sizes: " + sizes.str());
    }
    total_ *= fact;
  }
  group_images_ = group_members_;
}

bool CandidatePermutations::next(std::vector<int>& perm) {
  if (done_) return false;
  if (!first_) {
    // Odometer step over per-group permutations in lexicographic order.
    std::size_t idx = 0;
    while (idx < group_images_.size() && !std::next_permutation(group_images_[idx].begin(), group_images_[idx].end()))
      ++idx;
    if (idx == group_images_.size()) {
      done_ = true;
      return false;
    }
  }
  first_ = false;
  perm.resize(n_);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t gi = 0; gi < group_members_.size(); ++gi)
    for (std::size_t j = 0; j < group_members_[gi].size(); ++j)
      perm[group_members_[gi][j]] = group_images_[gi][j];
  if (group_members_.empty()) done_ = true;
  return true;
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  for (const auto& [u, v] : g.edges())
    if (!g.has_edge(perm[u], perm[v])) return false;
  // Edge counts match, so preserving all edges is enough for a bijection.
  return true;
}

AutomorphismSet automorphism_group(const Graph& g, const WeightSet& w, const AutOptions& options) {
  const CandidateGroups groups = candidate_groups(g, w, options);
  AutomorphismSet out;
  std::vector<int> identity(g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  const bool asymmetric = std::all_of(groups.groups.begin(), groups.groups.end(),
                                      [](const std::vector<int>& grp) { return grp.size() == 1; });
  if (asymmetric) {
    out.permutations.push_back(std::move(identity));
    return out;
  }
  CandidatePermutations stream(groups, g.vertex_count(), options.max_candidates);
  std::vector<int> perm;
  while (stream.next(perm))
    if (is_automorphism(g, perm)) out.permutations.push_back(perm);
  std::sort(out.permutations.begin(), out.permutations.end());
  return out;
}

bool verify_group(const AutomorphismSet& a) {
  if (a.permutations.empty()) return false;
  const std::size_t n = a.permutations.front().size();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  auto contains = [&](const std::vector<int>& p) {
    return std::find(a.permutations.begin(), a.permutations.end(), p) != a.permutations.end();
  };
  if (!contains(identity)) return false;
  std::vector<int> scratch(n);
  for (const auto& p : a.permutations) {
    for (std::size_t v = 0; v < n; ++v) scratch[p[v]] = static_cast<int>(v);
    if (!contains(scratch)) return false;  // inverse
    for (const auto& q : a.permutations) {
      for (std::size_t v = 0; v < n; ++v) scratch[v] = q[p[v]];
      if (!contains(scratch)) return false;  // closure
    }
  }
  return true;
}

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    os << '(';
    int u = v;
    bool head = true;
    do {
      if (!head) os << ' ';
      os << (u + 1);
      seen[u] = true;
      u = perm[u];
      head = false;
    } while (u != v);
    os << ')';
  }
  return os.str();
}

}  // namespace graphinv
