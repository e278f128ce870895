#include "graphinv/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace graphinv {

void Graph::rebuild_adjacency_sets() {
  adj_.assign(n_, {});
  edge_count_ = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (adj_matrix_(u, v) != 0) adj_[u].push_back(v);
    }
    edge_count_ += static_cast<int>(adj_[u].size());
  }
  edge_count_ /= 2;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_matrix_ = IntMatrix(n, n);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.adj_matrix_(u - 1, v - 1) = 1;
    g.adj_matrix_(v - 1, u - 1) = 1;
  }
  g.rebuild_adjacency_sets();
  return g;
}

Graph Graph::from_adjacency(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
  Graph g;
  g.n_ = a.rows();
  g.adj_matrix_ = IntMatrix(g.n_, g.n_);
  for (int i = 0; i < g.n_; ++i) {
    if (a(i, i) != 0) throw std::invalid_argument("adjacency matrix has nonzero diagonal");
    for (int j = 0; j < g.n_; ++j) {
      if (a(i, j) != a(j, i)) throw std::invalid_argument("adjacency matrix is not symmetric");
      g.adj_matrix_(i, j) = a(i, j) != 0 ? 1 : 0;
    }
  }
  g.rebuild_adjacency_sets();
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
  const int m = static_cast<int>(verts.size());
  IntMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) a(i, j) = adj_matrix_(verts[i], verts[j]);
  return from_adjacency(a);
}

Graph Graph::relabelled(const std::vector<int>& perm) const {
  IntMatrix a(n_, n_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u]) a(perm[u], perm[v]) = 1;
  return from_adjacency(a);
}

// --- graph6 ---

namespace {

constexpr int kG6MaxShort = 62;
constexpr int kG6MaxLong = 258047;

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      v <<= 1;
      if (i + b < bits.size() && bits[i + b]) v |= 1;
    }
    out.push_back(static_cast<char>(v + 63));
  }
}

}  // namespace

Graph Graph::from_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t pos = 0;
  long n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~') throw std::invalid_argument("graph6: long form beyond 258047 vertices not supported");
    if (line.size() < 4) throw std::invalid_argument("graph6: truncated header");
    n = 0;
    for (int i = 1; i <= 3; ++i) {
      const int c = static_cast<unsigned char>(line[i]) - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: malformed header byte");
      n = (n << 6) | c;
    }
    pos = 4;
  } else {
    n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 0 || n > kG6MaxShort) throw std::invalid_argument("graph6: malformed header byte");
    pos = 1;
  }

  const long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes) throw std::invalid_argument("graph6: truncated bit payload");

  Graph g;
  g.n_ = static_cast<int>(n);
  g.adj_matrix_ = IntMatrix(g.n_, g.n_);
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int c = static_cast<unsigned char>(line[pos + bit / 6]) - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: invalid payload byte");
      if ((c >> (5 - bit % 6)) & 1) {
        g.adj_matrix_(i, j) = 1;
        g.adj_matrix_(j, i) = 1;
      }
    }
  }
  g.rebuild_adjacency_sets();
  return g;
}

std::string Graph::to_graph6() const {
  if (n_ > kG6MaxLong) throw std::invalid_argument("graph6: graph too large to encode");
  std::string out;
  if (n_ <= kG6MaxShort) {
    out.push_back(static_cast<char>(n_ + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n_ & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adj_matrix_(i, j) != 0);
  append_bits(out, bits);
  return out;
}

// --- derived tables ---

IntMatrix laplacian(const Graph& g) {
  const int n = g.vertex_count();
  IntMatrix l(n, n);
  for (int i = 0; i < n; ++i) {
    l(i, i) = g.degree(i);
    for (int j : g.neighbors(i)) l(i, j) = -1;
  }
  return l;
}

DistanceTable all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceTable t;
  t.d = IntMatrix(n, n);
  std::vector<int> dist(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), DistanceTable::kUnreachable);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (dist[v] == DistanceTable::kUnreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v) t.d(s, v) = dist[v];
  }
  return t;
}

int DistanceTable::diameter() const {
  int best = 0;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (d(i, j) != kUnreachable) best = std::max(best, d(i, j));
  return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> blocks;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      blocks[id].push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = id;
          queue.push_back(v);
        }
      }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  // BFS seeds run in label order, so blocks are already ordered by smallest member.
  return blocks;
}

// --- file formats ---

Graph read_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated after " + std::to_string(i) + " edges");
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << (u + 1) << ' ' << (v + 1) << '\n';
  return os.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(Graph::from_graph6(line));
  }
  return graphs;
}

}  // namespace graphinv
