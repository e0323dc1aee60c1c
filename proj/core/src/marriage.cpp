#include "kerov/marriage.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace kerov {

IntersectionGraph IntersectionGraph::from_adjacency(
    int white_count, const std::vector<std::vector<int>>& black_to_whites) {
  if (white_count < 0 || white_count > 64)
    throw std::invalid_argument("white count out of range");
  IntersectionGraph g;
  g.white_count = white_count;
  for (const auto& ws : black_to_whites) {
    std::uint64_t mask = 0;
    for (int w : ws) {
      if (w < 0 || w >= white_count) throw std::invalid_argument("bad white id");
      mask |= std::uint64_t(1) << w;
    }
    g.black_whites.push_back(mask);
  }
  return g;
}

IntersectionGraph build_intersection_graph(const std::vector<Cycle>& whites,
                                           const std::vector<Cycle>& blacks,
                                           int degree) {
  if (degree > 64 || static_cast<int>(whites.size()) > 64)
    throw std::invalid_argument("degree out of range");
  std::vector<std::uint64_t> white_support(whites.size(), 0);
  for (std::size_t i = 0; i < whites.size(); ++i)
    for (int x : whites[i]) white_support[i] |= std::uint64_t(1) << x;
  IntersectionGraph g;
  g.white_count = static_cast<int>(whites.size());
  g.black_whites.reserve(blacks.size());
  for (const auto& b : blacks) {
    std::uint64_t support = 0;
    for (int x : b) support |= std::uint64_t(1) << x;
    std::uint64_t adj = 0;
    for (std::size_t i = 0; i < whites.size(); ++i)
      if (white_support[i] & support) adj |= std::uint64_t(1) << i;
    g.black_whites.push_back(adj);
  }
  return g;
}

IntersectionGraph build_intersection_graph(const Permutation& s1,
                                           const Permutation& s2) {
  if (s1.degree() != s2.degree())
    throw std::invalid_argument("degree mismatch");
  return build_intersection_graph(cycles(s1), cycles(s2), s1.degree());
}

namespace {

void check_coloring(const IntersectionGraph& g, const Coloring& q) {
  if (static_cast<int>(q.size()) != g.black_count())
    throw std::invalid_argument("coloring size mismatch");
  for (int c : q)
    if (c < 2) throw std::invalid_argument("colors must be >= 2");
}

void check_subset_width(const IntersectionGraph& g) {
  if (g.black_count() > 62)
    throw std::invalid_argument("subset enumeration capped at 62 black vertices");
}

}  // namespace

bool marriage_condition(const IntersectionGraph& g, const Coloring& q) {
  check_coloring(g, q);
  check_subset_width(g);
  const int m = g.black_count();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << m); ++mask) {
    std::uint64_t nbhd = 0;
    long demand = 0;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1) {
        nbhd |= g.black_whites[j];
        demand += q[j] - 1;
      }
    if (std::popcount(nbhd) <= demand) return false;
  }
  return true;
}

namespace {

// Augmenting-path b-matching: every white married to one adjacent black,
// black j holding at most cap[j] husbands. `banned` removes white->black
// edges; `reserved` pins one white to a black before matching the rest.
struct Matcher {
  const IntersectionGraph& g;
  std::vector<int> cap;
  std::vector<std::vector<int>> white_adj;  // whites -> list of blacks
  std::vector<int> assign;                  // white -> black or -1
  std::vector<std::vector<int>> husbands;   // black -> whites
  int pinned = -1;

  Matcher(const IntersectionGraph& graph, const Coloring& q,
          const std::vector<std::pair<int, int>>& banned = {})
      : g(graph), cap(q.size()), white_adj(graph.white_count),
        assign(graph.white_count, -1), husbands(q.size()) {
    for (std::size_t j = 0; j < q.size(); ++j) cap[j] = q[j] - 1;
    for (int j = 0; j < g.black_count(); ++j)
      for (int w = 0; w < g.white_count; ++w)
        if (g.black_whites[j] >> w & 1) {
          bool skip = false;
          for (auto [bw, bb] : banned)
            if (bw == w && bb == j) skip = true;
          if (!skip) white_adj[w].push_back(j);
        }
  }

  bool augment(int w, std::vector<char>& visited) {
    for (int b : white_adj[w]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (static_cast<int>(husbands[b].size()) < cap[b]) {
        assign[w] = b;
        husbands[b].push_back(w);
        return true;
      }
      for (int& other : husbands[b]) {
        if (other == pinned) continue;
        if (augment(other, visited)) {
          other = w;  // w replaces `other` at b; `other` was re-homed
          assign[w] = b;
          return true;
        }
      }
    }
    return false;
  }

  // Returns white->black assignment, or nullopt on infeasibility.
  std::optional<std::vector<int>> solve(std::pair<int, int> forced = {-1, -1}) {
    long total = std::accumulate(cap.begin(), cap.end(), 0L);
    if (total != g.white_count) return std::nullopt;
    if (forced.first >= 0) {
      int w = forced.first, b = forced.second;
      if (!(g.black_whites[b] >> w & 1)) return std::nullopt;
      assign[w] = b;
      husbands[b].push_back(w);
      pinned = w;
    }
    for (int w = 0; w < g.white_count; ++w) {
      if (assign[w] >= 0) continue;
      std::vector<char> visited(g.black_count(), 0);
      if (!augment(w, visited)) return std::nullopt;
    }
    return assign;
  }
};

}  // namespace

bool double_marriage_condition(const IntersectionGraph& g, const Coloring& q) {
  check_coloring(g, q);
  check_subset_width(g);
  auto base = Matcher(g, q).solve();
  if (!base) return false;
  const int m = g.black_count();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << m); ++mask) {
    // some husband of A must be re-routable out of A
    bool found = false;
    for (int w = 0; w < g.white_count && !found; ++w) {
      if (!(mask >> (*base)[w] & 1)) continue;
      std::vector<std::pair<int, int>> banned;
      for (int j = 0; j < m; ++j)
        if (mask >> j & 1) banned.emplace_back(w, j);
      if (Matcher(g, q, banned).solve()) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool q_admissible(const IntersectionGraph& g, const Coloring& q) {
  check_coloring(g, q);
  if (!Matcher(g, q).solve()) return false;
  for (int j = 0; j < g.black_count(); ++j)
    for (int w = 0; w < g.white_count; ++w) {
      if (!(g.black_whites[j] >> w & 1)) continue;
      if (!Matcher(g, q).solve({w, j})) return false;
    }
  return true;
}

namespace {

struct BridgeFinder {
  // vertices: whites 0..nw-1, blacks nw..nw+m-1
  int nw, m;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (vertex, edge id)
  std::vector<std::pair<int, int>> edges;             // (white, black-vertex)
  std::vector<int> disc, low;
  std::vector<char> is_bridge;
  int timer = 0;

  explicit BridgeFinder(const IntersectionGraph& g)
      : nw(g.white_count), m(g.black_count()), adj(nw + m),
        disc(nw + m, -1), low(nw + m, 0) {
    for (int j = 0; j < m; ++j)
      for (int w = 0; w < nw; ++w)
        if (g.black_whites[j] >> w & 1) {
          int id = static_cast<int>(edges.size());
          edges.emplace_back(w, nw + j);
          adj[w].emplace_back(nw + j, id);
          adj[nw + j].emplace_back(w, id);
        }
    is_bridge.assign(edges.size(), 0);
  }

  void dfs(int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (auto [v, id] : adj[u]) {
      if (id == parent_edge) continue;
      if (disc[v] == -1) {
        dfs(v, id);
        low[u] = std::min(low[u], low[v]);
        if (low[v] > disc[u]) is_bridge[id] = 1;
      } else {
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }

  int blacks_reachable_without(int start, int skip_edge) {
    std::vector<char> seen(nw + m, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x >= nw) ++count;
      for (auto [y, id] : adj[x]) {
        if (id == skip_edge || seen[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    return count;
  }
};

}  // namespace

bool has_disconnecting_edge(const IntersectionGraph& g) {
  BridgeFinder bf(g);
  for (int v = 0; v < bf.nw + bf.m; ++v)
    if (bf.disc[v] == -1) bf.dfs(v, -1);
  for (std::size_t id = 0; id < bf.edges.size(); ++id) {
    if (!bf.is_bridge[id]) continue;
    int side = bf.blacks_reachable_without(bf.edges[id].first,
                                           static_cast<int>(id));
    if (side >= 1 && bf.m - side >= 1) return true;
  }
  return false;
}

bool is_connected(const IntersectionGraph& g) {
  const int total = g.white_count + g.black_count();
  if (total == 0) return true;
  BridgeFinder bf(g);
  bf.dfs(0, -1);
  for (int v = 0; v < total; ++v)
    if (bf.disc[v] == -1) return false;
  return true;
}

}  // namespace kerov
