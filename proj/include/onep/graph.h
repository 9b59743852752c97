#pragma once

#include <string>
#include <utility>
#include <vector>

#include "onep/check.h"

namespace onep {

/// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge mkEdge(int u, int v) {
  ONEP_CHECK(u != v);
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges are normalized (u < v), sorted and duplicate-free.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  Graph() = default;
  Graph(int numVertices, std::vector<Edge> edgeList);

  int numEdges() const { return (int)edges.size(); }
  int degree(int v) const { return (int)adj[v].size(); }
  bool hasEdge(int u, int v) const;
  /// Index into `edges` or -1.
  int edgeIndex(int u, int v) const;

  bool isConnected() const;
  std::vector<std::vector<int>> connectedComponents() const;

  Graph withoutEdge(int u, int v) const;
  Graph withEdge(int u, int v) const;

  /// Induced subgraph; `keep` lists old vertex ids in the order they become 0..k-1.
  Graph inducedSubgraph(const std::vector<int>& keep) const;

  bool operator==(const Graph& other) const {
    return n == other.n && edges == other.edges;
  }
};

/// Graph whose vertices carry external string names (CLI, hardness gadgets).
struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;  // names[v] for v in 0..n-1

  int indexOf(const std::string& name) const;
};

/// Incremental builder mapping names to dense vertex ids.
class GraphBuilder {
 public:
  int addVertex(const std::string& name);
  void addEdge(const std::string& u, const std::string& v);
  bool hasVertex(const std::string& name) const;
  NamedGraph build() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

std::vector<int> sortedVertices(const Graph& g);

/// Complete graph K_n.
Graph completeGraph(int n);
/// Cycle C_n.
Graph cycleGraph(int n);
/// Path P_n.
Graph pathGraph(int n);
/// Complete bipartite K_{a,b}; part A = 0..a-1.
Graph completeBipartite(int a, int b);

}  // namespace onep
