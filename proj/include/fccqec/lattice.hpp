#ifndef FCCQEC_LATTICE_HPP
#define FCCQEC_LATTICE_HPP

#include <array>
#include <utility>
#include <vector>

namespace fccqec {

/// The 12 nearest-neighbour displacements of the FCC lattice, in the fixed
/// enumeration order used everywhere (node adjacency, edge creation, BFS
/// tie-breaking).
inline constexpr std::array<std::array<int, 3>, 12> kFccNeighbours = {{
    {1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0},
    {1, 0, 1}, {1, 0, -1}, {-1, 0, 1}, {-1, 0, -1},
    {0, 1, 1}, {0, 1, -1}, {0, -1, 1}, {0, -1, -1},
}};

/// Axis displacements to the 6 nodes around an octahedral void, in order
/// +x, -x, +y, -y, +z, -z.
inline constexpr std::array<std::array<int, 3>, 6> kOctNeighbours = {{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
}};

/// FCC lattice on the L-periodic 3-torus: even-parity sites are nodes,
/// odd-parity sites are octahedral voids, qubits live on the edges.
///
/// Enumeration is fixed: nodes and octs by nested x,y,z loops; per-node
/// neighbours in kFccNeighbours order with an edge appended when i < j;
/// per-oct nodes in kOctNeighbours order. Immutable after construction.
class FccLattice {
 public:
  /// Throws std::invalid_argument for odd L or L < 4. (At L = 2 opposite
  /// displacements collide mod L, collapsing the 12 neighbours to 6.)
  explicit FccLattice(int L);

  int L() const { return L_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_octs() const { return static_cast<int>(octs_.size()); }

  const std::vector<std::array<int, 3>>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// 6 node indices per oct, in kOctNeighbours order.
  const std::vector<std::array<int, 6>>& octs() const { return octs_; }

  /// Node index for coordinates (taken mod L), or -1 for odd-parity sites.
  int node_index(int x, int y, int z) const;
  /// Edge index for a node pair (order-insensitive), or -1 if not adjacent.
  int edge_index(int a, int b) const;

  /// Per node: (neighbour node, edge index) in kFccNeighbours order.
  const std::vector<std::vector<std::pair<int, int>>>& node_adjacency() const { return node_adjacency_; }
  /// The 12 edge indices inside each oct, ordered by the oct's node pairs.
  const std::vector<std::array<int, 12>>& oct_edges() const { return oct_edges_; }
  /// Per oct: (neighbour oct, shared edge index), one entry per oct edge.
  const std::vector<std::vector<std::pair<int, int>>>& oct_adjacency() const { return oct_adjacency_; }

  /// The two octs containing each edge.
  const std::vector<std::array<int, 2>>& edge_octs() const { return edge_octs_; }

 private:
  int L_ = 0;
  std::vector<std::array<int, 3>> nodes_;
  std::vector<int> site_to_node_;  // dense (x*L+y)*L+z -> node index or -1
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::array<int, 6>> octs_;
  std::vector<std::vector<std::pair<int, int>>> node_adjacency_;
  std::vector<std::array<int, 12>> oct_edges_;
  std::vector<std::array<int, 2>> edge_octs_;
  std::vector<std::vector<std::pair<int, int>>> oct_adjacency_;
};

/// Which side of the CSS pair a graph, syndrome or error refers to.
/// vertex: checks are lattice nodes (rows of H_Z); oct: checks are
/// octahedral voids (rows of H_X). No Pauli label is implied.
enum class Side { vertex, oct };

/// Unit-weight graph the decoder matches defects on. Graph nodes are the
/// checks of one side; each graph edge is labelled with the qubit that
/// toggles both endpoints.
struct DefectGraph {
  Side kind = Side::vertex;
  int node_count = 0;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbour, qubit)
};

DefectGraph build_defect_graph(const FccLattice& lat, Side kind);

struct PathResult {
  int distance = 0;
  std::vector<int> qubit_path;  // one qubit per hop
};

/// BFS tree from a single source. Neighbours are explored in
/// adjacency-list order and parents fixed at first discovery, so paths
/// are deterministic.
struct BfsTree {
  std::vector<int> distance;      // -1 if unreachable
  std::vector<int> parent_node;   // -1 at source / unreachable
  std::vector<int> parent_qubit;  // qubit on the edge to the parent
};

BfsTree bfs_from(const DefectGraph& g, int source);

/// Distance and one shortest qubit path between a and b. Throws
/// std::runtime_error if disconnected (cannot happen on valid lattices).
PathResult shortest_path(const DefectGraph& g, int a, int b);

/// Qubit path from `target` back to the root of `tree`.
std::vector<int> path_from_tree(const BfsTree& tree, int target);

}  // namespace fccqec

#endif
