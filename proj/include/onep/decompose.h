#pragma once

#include <optional>
#include <vector>

#include "onep/graph.h"

namespace onep {

/// Block-cutvertex tree of a connected graph.
struct BCTree {
  struct Block {
    std::vector<int> vertices;  // sorted host ids
    std::vector<Edge> edges;    // sorted host edges
  };
  std::vector<Block> blocks;
  std::vector<int> cutvertices;                  // sorted host ids
  std::vector<std::pair<int, int>> adjacency;    // (block index, cutvertex index)
};

BCTree bcTree(const Graph& g);

/// Skeleton of an SPR-tree node; a multigraph over host vertex ids.
struct Skeleton {
  struct SkelEdge {
    int u, v;        // host ids, u < v allowed to repeat across edges
    bool isVirtual;  // paired with a virtual edge of an adjacent node
  };
  std::vector<int> vertices;  // sorted host ids
  std::vector<SkelEdge> edges;

  int degreeOf(int hostId) const;
};

struct SprTree {
  enum class Kind { S, P, R };
  struct Node {
    Kind kind;
    Skeleton skeleton;
  };
  struct TreeEdge {
    int nodeA, edgeA;  // edgeA indexes nodes[nodeA].skeleton.edges
    int nodeB, edgeB;
  };
  std::vector<Node> nodes;
  std::vector<TreeEdge> treeEdges;

  std::vector<int> nodesOfKind(Kind k) const;
  /// Separator {s, s'} of a tree edge (the endpoints of its virtual pair).
  Edge separatorOf(const TreeEdge& te) const;
  /// Reassemble the host graph by identifying virtual pairs (test oracle).
  Graph reassemble(int hostN) const;
};

/// SPR-tree of a 2-connected graph with >= 3 vertices (canonical: adjacent
/// S-nodes and adjacent P-nodes merged). Quadratic split-pair decomposition.
SprTree sprTree(const Graph& g);

bool isBiconnected(const Graph& g);
/// 2-connected with no R-node in its SPR-tree (cycles and K2 included).
bool isSeriesParallel(const Graph& g);

/// Skeleton+ of an SPR node: the skeleton with every virtual edge replaced by
/// a once-subdivided path, plus the original edge when the host has it.
struct SkeletonPlus {
  enum class EdgeTag { Real, VirtualSubdivided, VirtualRetained };
  Graph graph;
  std::vector<int> hostId;           // hostId[v] or -1 for subdivision vertices
  std::vector<EdgeTag> edgeTags;     // parallel to graph.edges
  std::vector<int> subdivisionVertices;
};

SkeletonPlus skeletonPlus(const SprTree& tree, int node, const Graph& host);

/// SPR-tree shape test: a single R-node whose neighbors are triangle S-nodes
/// or P-nodes flanked by triangle S-nodes.
bool isInternally3Connected(const Graph& g);

/// Definitional check for small graphs: some suppression of degree-two
/// vertices yields a (multigraph) base whose underlying simple graph is
/// 3-connected. Exponential; test oracle only.
bool isInternally3ConnectedByDefinition(const Graph& g);

/// One side of a 2-separator split: G[X] plus a fresh degree-two vertex t
/// joined to both separator vertices.
struct SplitSide {
  Graph graph;
  std::vector<int> hostId;  // per vertex; -1 for t
  int tVertex;
};

/// Split a 2-connected graph at separator {s,s'} along the separation whose
/// first side is `sideX1` (host ids, containing s and s').
std::pair<SplitSide, SplitSide> splitAt2Separator(const Graph& g, int s, int sPrime,
                                                  const std::vector<int>& sideX1);

/// G'(T,mu,nu): the graph induced by host vertices of skeletons on mu's side
/// of tree edge mu-nu, plus a fresh vertex t adjacent to the separator.
SplitSide sprSideGraph(const SprTree& tree, int treeEdgeIdx, bool muSide, const Graph& host);

/// True 3-connectivity of a simple graph (n >= 4, no cut of size <= 2).
bool isTriconnected(const Graph& g);

}  // namespace onep
