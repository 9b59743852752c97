#include "onep/graph.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace onep {

Graph::Graph(int numVertices, std::vector<Edge> edgeList) : n(numVertices) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
  for (auto& [u, v] : edgeList) {
    if (u == v) throw Error(ErrorCode::InvalidInput, "self-loop rejected");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
  }
  std::sort(edgeList.begin(), edgeList.end());
  auto dup = std::adjacent_find(edgeList.begin(), edgeList.end());
  if (dup != edgeList.end()) throw Error(ErrorCode::InvalidInput, "duplicate edge rejected");
  edges = std::move(edgeList);
  adj.assign(n, {});
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
}

bool Graph::hasEdge(int u, int v) const {
  if (u == v) return false;
  const auto& list = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
  int other = adj[u].size() <= adj[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), other);
}

int Graph::edgeIndex(int u, int v) const {
  Edge e = mkEdge(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e) return (int)(it - edges.begin());
  return -1;
}

bool Graph::isConnected() const {
  if (n <= 1) return true;
  return (int)connectedComponents().size() == 1;
}

std::vector<std::vector<int>> Graph::connectedComponents() const {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> result;
  for (int s = 0; s < n; s++) {
    if (comp[s] != -1) continue;
    int id = (int)result.size();
    result.push_back({});
    std::vector<int> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      result[id].push_back(v);
      for (int w : adj[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(result[id].begin(), result[id].end());
  }
  return result;
}

Graph Graph::withoutEdge(int u, int v) const {
  Edge e = mkEdge(u, v);
  std::vector<Edge> rest;
  rest.reserve(edges.size());
  for (const auto& f : edges)
    if (f != e) rest.push_back(f);
  return Graph(n, std::move(rest));
}

Graph Graph::withEdge(int u, int v) const {
  std::vector<Edge> all = edges;
  all.push_back(mkEdge(u, v));
  return Graph(n, std::move(all));
}

Graph Graph::inducedSubgraph(const std::vector<int>& keep) const {
  std::vector<int> newId(n, -1);
  for (int i = 0; i < (int)keep.size(); i++) {
    ONEP_CHECK(keep[i] >= 0 && keep[i] < n && newId[keep[i]] == -1);
    newId[keep[i]] = i;
  }
  std::vector<Edge> sub;
  for (const auto& [u, v] : edges)
    if (newId[u] != -1 && newId[v] != -1) sub.push_back(mkEdge(newId[u], newId[v]));
  return Graph((int)keep.size(), std::move(sub));
}

int NamedGraph::indexOf(const std::string& name) const {
  for (int i = 0; i < (int)names.size(); i++)
    if (names[i] == name) return i;
  return -1;
}

int GraphBuilder::addVertex(const std::string& name) {
  for (int i = 0; i < (int)names_.size(); i++)
    if (names_[i] == name) return i;
  names_.push_back(name);
  return (int)names_.size() - 1;
}

bool GraphBuilder::hasVertex(const std::string& name) const {
  for (const auto& existing : names_)
    if (existing == name) return true;
  return false;
}

void GraphBuilder::addEdge(const std::string& u, const std::string& v) {
  int a = addVertex(u);
  int b = addVertex(v);
  if (a == b) throw Error(ErrorCode::InvalidInput, "self-loop rejected: " + u);
  edges_.push_back(mkEdge(a, b));
}

NamedGraph GraphBuilder::build() const {
  return NamedGraph{Graph((int)names_.size(), edges_), names_};
}

std::vector<int> sortedVertices(const Graph& g) {
  std::vector<int> ids(g.n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

Graph completeGraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycleGraph(int n) {
  ONEP_CHECK(n >= 3);
  std::vector<Edge> edges;
  for (int i = 0; i < n; i++) edges.push_back(mkEdge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph pathGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; i++) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph completeBipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; u++)
    for (int v = 0; v < b; v++) edges.push_back({u, a + v});
  return Graph(a + b, std::move(edges));
}

}  // namespace onep
