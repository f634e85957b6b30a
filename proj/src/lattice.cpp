#include "fccqec/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace fccqec {

namespace {

int mod(int a, int L) {
  const int r = a % L;
  return r < 0 ? r + L : r;
}

}  // namespace

FccLattice::FccLattice(int L) : L_(L) {
  if (L % 2 != 0)
    throw std::invalid_argument("FccLattice: L must be even (odd periodicity breaks the parity condition), got " +
                                std::to_string(L));
  if (L < 4)
    throw std::invalid_argument(
        "FccLattice: L must be >= 4 (at L = 2 opposite neighbour displacements collide mod L), got " +
        std::to_string(L));

  // Nodes: even-parity sites in nested x,y,z order.
  site_to_node_.assign(static_cast<std::size_t>(L) * L * L, -1);
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y)
      for (int z = 0; z < L; ++z)
        if ((x + y + z) % 2 == 0) {
          site_to_node_[(static_cast<std::size_t>(x) * L + y) * L + z] = static_cast<int>(nodes_.size());
          nodes_.push_back({x, y, z});
        }

  // Edges: per node in kFccNeighbours order, appended when i < j.
  for (int i = 0; i < num_nodes(); ++i) {
    const auto [x, y, z] = nodes_[i];
    for (const auto& d : kFccNeighbours) {
      const int j = node_index(x + d[0], y + d[1], z + d[2]);
      if (j < 0) throw std::runtime_error("FccLattice: neighbour site is not a node");
      if (i < j) edges_.emplace_back(i, j);
    }
  }

  // Node adjacency, (neighbour, edge) in kFccNeighbours order. Edge lookup
  // goes through a per-node map built from the edge list.
  std::vector<std::vector<std::pair<int, int>>> incident(num_nodes());
  for (int e = 0; e < num_edges(); ++e) {
    incident[edges_[e].first].emplace_back(edges_[e].second, e);
    incident[edges_[e].second].emplace_back(edges_[e].first, e);
  }
  auto find_edge = [&](int a, int b) {
    for (const auto& [nb, e] : incident[a])
      if (nb == b) return e;
    return -1;
  };
  node_adjacency_.resize(num_nodes());
  for (int i = 0; i < num_nodes(); ++i) {
    const auto [x, y, z] = nodes_[i];
    node_adjacency_[i].reserve(12);
    for (const auto& d : kFccNeighbours) {
      const int j = node_index(x + d[0], y + d[1], z + d[2]);
      const int e = find_edge(i, j);
      if (e < 0) throw std::runtime_error("FccLattice: missing edge in adjacency");
      node_adjacency_[i].emplace_back(j, e);
    }
  }

  // Octs: odd-parity sites in nested x,y,z order, nodes in kOctNeighbours
  // order.
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y)
      for (int z = 0; z < L; ++z)
        if ((x + y + z) % 2 == 1) {
          std::array<int, 6> nbs{};
          int found = 0;
          for (const auto& d : kOctNeighbours) {
            const int j = node_index(x + d[0], y + d[1], z + d[2]);
            if (j >= 0) nbs[found++] = j;
          }
          if (found != 6) throw std::runtime_error("FccLattice: oct without 6 axis neighbours");
          octs_.push_back(nbs);
        }

  // The 12 lattice edges inside each oct: scan the oct's node pairs in
  // stored order.
  oct_edges_.resize(num_octs());
  for (int o = 0; o < num_octs(); ++o) {
    int count = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        const int e = find_edge(octs_[o][a], octs_[o][b]);
        if (e >= 0) {
          if (count == 12) throw std::runtime_error("FccLattice: oct with more than 12 edges");
          oct_edges_[o][count++] = e;
        }
      }
    if (count != 12) throw std::runtime_error("FccLattice: oct with fewer than 12 edges");
  }

  // Every edge must lie in exactly 2 octs; this makes the dual graph well
  // defined.
  std::vector<int> seen(num_edges(), 0);
  edge_octs_.assign(num_edges(), {-1, -1});
  for (int o = 0; o < num_octs(); ++o)
    for (int e : oct_edges_[o]) {
      if (seen[e] >= 2) throw std::runtime_error("FccLattice: edge contained in more than 2 octs");
      edge_octs_[e][seen[e]++] = o;
    }
  for (int e = 0; e < num_edges(); ++e)
    if (seen[e] != 2) throw std::runtime_error("FccLattice: edge not contained in exactly 2 octs");

  // Oct adjacency via the unique shared edge. Two octs sharing more than
  // one edge would produce a duplicate neighbour here.
  oct_adjacency_.resize(num_octs());
  for (int o = 0; o < num_octs(); ++o) {
    oct_adjacency_[o].reserve(12);
    for (int e : oct_edges_[o]) {
      const int other = edge_octs_[e][0] == o ? edge_octs_[e][1] : edge_octs_[e][0];
      for (const auto& [nb, q] : oct_adjacency_[o])
        if (nb == other) throw std::runtime_error("FccLattice: two octs share more than one edge");
      oct_adjacency_[o].emplace_back(other, e);
    }
  }

  // Structural counts from the torus geometry.
  const long long L3 = static_cast<long long>(L) * L * L;
  if (num_nodes() != L3 / 2 || num_edges() != 3 * L3 || num_octs() != L3 / 2)
    throw std::runtime_error("FccLattice: node/edge/oct counts do not match L^3/2, 3L^3, L^3/2");
}

int FccLattice::node_index(int x, int y, int z) const {
  const int mx = mod(x, L_), my = mod(y, L_), mz = mod(z, L_);
  return site_to_node_[(static_cast<std::size_t>(mx) * L_ + my) * L_ + mz];
}

int FccLattice::edge_index(int a, int b) const {
  for (const auto& [nb, e] : node_adjacency_[a])
    if (nb == b) return e;
  return -1;
}

DefectGraph build_defect_graph(const FccLattice& lat, Side kind) {
  DefectGraph g;
  g.kind = kind;
  if (kind == Side::vertex) {
    g.node_count = lat.num_nodes();
    g.adjacency = lat.node_adjacency();
  } else {
    g.node_count = lat.num_octs();
    g.adjacency = lat.oct_adjacency();
  }
  return g;
}

BfsTree bfs_from(const DefectGraph& g, int source) {
  BfsTree t;
  t.distance.assign(g.node_count, -1);
  t.parent_node.assign(g.node_count, -1);
  t.parent_qubit.assign(g.node_count, -1);
  t.distance[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [v, q] : g.adjacency[u]) {
      if (t.distance[v] >= 0) continue;
      t.distance[v] = t.distance[u] + 1;
      t.parent_node[v] = u;
      t.parent_qubit[v] = q;
      queue.push_back(v);
    }
  }
  return t;
}

std::vector<int> path_from_tree(const BfsTree& tree, int target) {
  std::vector<int> path;
  for (int u = target; tree.parent_node[u] >= 0; u = tree.parent_node[u]) path.push_back(tree.parent_qubit[u]);
  std::reverse(path.begin(), path.end());
  return path;
}

PathResult shortest_path(const DefectGraph& g, int a, int b) {
  if (a < 0 || a >= g.node_count || b < 0 || b >= g.node_count)
    throw std::invalid_argument("shortest_path: node index out of range");
  const BfsTree t = bfs_from(g, a);
  if (t.distance[b] < 0) throw std::runtime_error("shortest_path: nodes are disconnected");
  PathResult r;
  r.distance = t.distance[b];
  r.qubit_path = path_from_tree(t, b);
  return r;
}

}  // namespace fccqec
