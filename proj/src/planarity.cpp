#include "onep/planarity.h"

#include <algorithm>
#include <map>
#include <set>

namespace onep {

std::vector<int> PlanarEmbedding::faceVertices(int f) const {
  ONEP_CHECK(f >= 0 && f < (int)faces.size());
  if (faces.size() == 1 && faces[0].empty()) {
    // edgeless graph: the single face sees every vertex
    std::vector<int> all(rot.size());
    for (int v = 0; v < (int)rot.size(); v++) all[v] = v;
    return all;
  }
  std::vector<int> vs;
  for (const auto& [u, v] : faces[f]) vs.push_back(u);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool PlanarEmbedding::faceContainsVertex(int f, int v) const {
  auto vs = faceVertices(f);
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::vector<std::vector<Dart>> traceFaces(const std::vector<std::vector<int>>& rot) {
  int n = (int)rot.size();
  // position of u within rot[v]
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; v++)
    for (int i = 0; i < (int)rot[v].size(); i++) pos[v][rot[v][i]] = i;

  std::set<Dart> visited;
  std::vector<std::vector<Dart>> faces;
  for (int u = 0; u < n; u++) {
    for (int v : rot[u]) {
      Dart start{u, v};
      if (visited.count(start)) continue;
      std::vector<Dart> walk;
      Dart cur = start;
      do {
        visited.insert(cur);
        walk.push_back(cur);
        auto [a, b] = cur;
        auto it = pos[b].find(a);
        ONEP_CHECK(it != pos[b].end());
        int next = rot[b][(it->second + 1) % rot[b].size()];
        cur = {b, next};
      } while (cur != start);
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

bool isSphericalRotation(const Graph& g, const std::vector<std::vector<int>>& rot) {
  ONEP_CHECK(g.isConnected());
  if (g.numEdges() == 0) return true;
  auto faces = traceFaces(rot);
  return (int)faces.size() == g.numEdges() - g.n + 2;
}

PlanarEmbedding embeddingFromRotation(const Graph& g, std::vector<std::vector<int>> rot) {
  ONEP_CHECK((int)rot.size() == g.n);
  for (int v = 0; v < g.n; v++) {
    std::vector<int> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adj[v])
      throw Error(ErrorCode::MalformedDrawing, "rotation at a vertex does not list its incident edges");
  }
  PlanarEmbedding emb;
  emb.rot = std::move(rot);
  emb.faces = traceFaces(emb.rot);
  if (g.numEdges() == 0) {
    if (g.n != 1) throw Error(ErrorCode::MalformedDrawing, "edgeless embedding only defined for K1");
    emb.faces = {{}};
  }
  if ((int)emb.faces.size() != g.numEdges() - g.n + 2)
    throw Error(ErrorCode::MalformedDrawing, "rotation system is not spherical");
  emb.outerFace = 0;
  return emb;
}

std::vector<std::vector<int>> mirrorRotation(const std::vector<std::vector<int>>& rot) {
  auto out = rot;
  for (auto& r : out) std::reverse(r.begin(), r.end());
  return out;
}

namespace {

// Rotate each cycle so it starts at the smallest neighbor, then flatten.
std::vector<int> flattenCanonical(const std::vector<std::vector<int>>& rot) {
  std::vector<int> key;
  for (const auto& r : rot) {
    key.push_back(-1);  // separator
    if (r.empty()) continue;
    int best = 0;
    for (int i = 1; i < (int)r.size(); i++)
      if (r[i] < r[best]) best = i;
    for (int i = 0; i < (int)r.size(); i++) key.push_back(r[(best + i) % r.size()]);
  }
  return key;
}

}  // namespace

std::vector<int> embeddingKey(const std::vector<std::vector<int>>& rot) {
  auto a = flattenCanonical(rot);
  auto b = flattenCanonical(mirrorRotation(rot));
  return std::min(a, b);
}

// ---------------------------------------------------------------------------
// Demoucron-Malgrange-Pertuiset planar embedder
// ---------------------------------------------------------------------------

namespace {

using BlockDecomposition = Blocks;

/// Tarjan lowpoint block decomposition.
BlockDecomposition blocksOf(const Graph& g) {
  BlockDecomposition out;
  int n = g.n;
  if (n == 0) return out;
  std::vector<int> disc(n, -1), low(n, 0), parentEdge(n, -1);
  std::vector<int> edgeStack;
  std::set<int> cuts;
  int timer = 0;

  struct Frame {
    int v;
    size_t nextIdx;
  };
  for (int root = 0; root < n; root++) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    int rootChildren = 0;
    while (!stack.empty()) {
      auto& fr = stack.back();
      int v = fr.v;
      if (fr.nextIdx < g.adj[v].size()) {
        int w = g.adj[v][fr.nextIdx++];
        int ei = g.edgeIndex(v, w);
        if (ei == parentEdge[v]) continue;
        if (disc[w] == -1) {
          edgeStack.push_back(ei);
          parentEdge[w] = ei;
          disc[w] = low[w] = timer++;
          if (v == root) rootChildren++;
          stack.push_back({w, 0});
        } else if (disc[w] < disc[v]) {
          edgeStack.push_back(ei);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            std::vector<int> blk;
            int pe = parentEdge[v];
            while (!edgeStack.empty()) {
              int ei = edgeStack.back();
              edgeStack.pop_back();
              blk.push_back(ei);
              if (ei == pe) break;
            }
            std::sort(blk.begin(), blk.end());
            out.blockEdges.push_back(std::move(blk));
            if (p != root) cuts.insert(p);
          }
        }
      }
    }
    if (rootChildren > 1) cuts.insert(root);
  }
  std::sort(out.blockEdges.begin(), out.blockEdges.end());
  out.cutVertices.assign(cuts.begin(), cuts.end());
  return out;
}

/// State for embedding one 2-connected block with DMP.
struct DmpState {
  const Graph& g;
  const std::vector<int>& blockEdgeIdx;
  std::vector<bool> edgeInBlock;
  std::vector<bool> edgeEmbedded;
  std::vector<bool> vertexEmbedded;
  std::vector<std::vector<int>> rot;  // indexed by host vertex id

  DmpState(const Graph& graph, const std::vector<int>& blockEdges)
      : g(graph), blockEdgeIdx(blockEdges) {
    edgeInBlock.assign(g.numEdges(), false);
    for (int ei : blockEdges) edgeInBlock[ei] = true;
    edgeEmbedded.assign(g.numEdges(), false);
    vertexEmbedded.assign(g.n, false);
    rot.assign(g.n, {});
  }

  void insertAfter(int v, int after, int neighbor) {
    auto& r = rot[v];
    for (size_t i = 0; i < r.size(); i++) {
      if (r[i] == after) {
        r.insert(r.begin() + i + 1, neighbor);
        return;
      }
    }
    ONEP_CHECK(false);
  }

  void embedInitialCycle(const std::vector<int>& cycle) {
    int k = (int)cycle.size();
    for (int i = 0; i < k; i++) {
      int prev = cycle[(i + k - 1) % k];
      int next = cycle[(i + 1) % k];
      rot[cycle[i]] = {prev, next};
      vertexEmbedded[cycle[i]] = true;
      edgeEmbedded[g.edgeIndex(cycle[i], next)] = true;
    }
  }

  /// Embed path v0..vk into the given face (walk before insertion).
  void embedPath(const std::vector<int>& path, const std::vector<Dart>& faceWalk) {
    int a = path.front(), b = path.back();
    auto cornerTail = [&](int x) {
      for (size_t i = 0; i < faceWalk.size(); i++)
        if (faceWalk[i].second == x) return faceWalk[i].first;
      ONEP_CHECK(false);
      return -1;
    };
    insertAfter(a, cornerTail(a), path[1]);
    insertAfter(b, cornerTail(b), path[path.size() - 2]);
    for (size_t i = 1; i + 1 < path.size(); i++) {
      rot[path[i]] = {path[i - 1], path[i + 1]};
      vertexEmbedded[path[i]] = true;
    }
    for (size_t i = 0; i + 1 < path.size(); i++)
      edgeEmbedded[g.edgeIndex(path[i], path[i + 1])] = true;
  }
};

/// Any cycle of the block (exists: the block is 2-connected with >= 3 vertices).
std::vector<int> findCycle(const Graph& g, const std::vector<bool>& edgeInBlock) {
  int n = g.n;
  std::vector<int> parent(n, -1), depth(n, -1);
  for (int root = 0; root < n; root++) {
    bool rootInBlock = false;
    for (int w : g.adj[root])
      if (edgeInBlock[g.edgeIndex(root, w)]) rootInBlock = true;
    if (!rootInBlock || depth[root] != -1) continue;
    std::vector<int> stack{root};
    depth[root] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v]) {
        if (!edgeInBlock[g.edgeIndex(v, w)]) continue;
        if (depth[w] == -1) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          stack.push_back(w);
        } else if (w != parent[v] && depth[w] < depth[v]) {
          // back edge v->w closes a cycle
          std::vector<int> cyc;
          int x = v;
          while (x != w) {
            cyc.push_back(x);
            x = parent[x];
          }
          cyc.push_back(w);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
      }
    }
  }
  ONEP_CHECK(false);
  return {};
}

struct Fragment {
  bool singleEdge;
  int edgeIdx = -1;                  // when singleEdge
  std::vector<int> componentVerts;   // when !singleEdge, sorted
  std::vector<int> attachments;      // sorted embedded vertices
  std::vector<int> admissibleFaces;
};

/// DMP embedding of one block; nullopt when non-planar.
std::optional<std::vector<std::vector<int>>> dmpEmbedBlock(const Graph& g,
                                                           const std::vector<int>& blockEdges) {
  if (blockEdges.size() == 1) {
    auto [u, v] = g.edges[blockEdges[0]];
    std::vector<std::vector<int>> rot(g.n);
    rot[u] = {v};
    rot[v] = {u};
    return rot;
  }
  DmpState st(g, blockEdges);
  st.embedInitialCycle(findCycle(g, st.edgeInBlock));

  while (true) {
    // current face list (only embedded vertices have non-empty rotations)
    auto faces = traceFaces(st.rot);
    std::vector<std::vector<int>> faceVerts(faces.size());
    for (size_t f = 0; f < faces.size(); f++) {
      for (const auto& [u, v] : faces[f]) faceVerts[f].push_back(u);
      std::sort(faceVerts[f].begin(), faceVerts[f].end());
      faceVerts[f].erase(std::unique(faceVerts[f].begin(), faceVerts[f].end()), faceVerts[f].end());
    }

    // fragments: single unembedded edges between embedded vertices
    std::vector<Fragment> fragments;
    for (int ei : st.blockEdgeIdx) {
      if (st.edgeEmbedded[ei]) continue;
      auto [u, v] = g.edges[ei];
      if (st.vertexEmbedded[u] && st.vertexEmbedded[v]) {
        Fragment fr;
        fr.singleEdge = true;
        fr.edgeIdx = ei;
        fr.attachments = {std::min(u, v), std::max(u, v)};
        fragments.push_back(std::move(fr));
      }
    }
    // fragments: components of the unembedded part
    std::vector<int> comp(g.n, -1);
    for (int s = 0; s < g.n; s++) {
      bool inBlock = false;
      for (int w : g.adj[s])
        if (st.edgeInBlock[g.edgeIndex(s, w)]) inBlock = true;
      if (!inBlock || st.vertexEmbedded[s] || comp[s] != -1) continue;
      Fragment fr;
      fr.singleEdge = false;
      std::vector<int> stack{s};
      comp[s] = 1;
      std::set<int> att;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        fr.componentVerts.push_back(v);
        for (int w : g.adj[v]) {
          if (!st.edgeInBlock[g.edgeIndex(v, w)]) continue;
          if (st.vertexEmbedded[w]) {
            att.insert(w);
          } else if (comp[w] == -1) {
            comp[w] = 1;
            stack.push_back(w);
          }
        }
      }
      std::sort(fr.componentVerts.begin(), fr.componentVerts.end());
      fr.attachments.assign(att.begin(), att.end());
      fragments.push_back(std::move(fr));
    }

    if (fragments.empty()) break;

    for (auto& fr : fragments) {
      for (size_t f = 0; f < faces.size(); f++) {
        bool ok = std::includes(faceVerts[f].begin(), faceVerts[f].end(),
                                fr.attachments.begin(), fr.attachments.end());
        if (ok) fr.admissibleFaces.push_back((int)f);
      }
      if (fr.admissibleFaces.empty()) return std::nullopt;
    }

    // fragment with the fewest admissible faces; ties broken by kind then key
    auto key = [](const Fragment& fr) {
      return std::tuple<size_t, int, int>(
          fr.admissibleFaces.size(), fr.singleEdge ? 0 : 1,
          fr.singleEdge ? fr.edgeIdx : fr.componentVerts.front());
    };
    const Fragment* pick = &fragments[0];
    for (const auto& fr : fragments)
      if (key(fr) < key(*pick)) pick = &fr;

    // alpha-path between two attachments through the fragment
    std::vector<int> path;
    if (pick->singleEdge) {
      path = {pick->attachments[0], pick->attachments[1]};
    } else {
      int a = pick->attachments[0], b = pick->attachments[1];
      // BFS from a through component vertices until b is reachable
      std::set<int> inComp(pick->componentVerts.begin(), pick->componentVerts.end());
      std::map<int, int> prev;
      std::vector<int> queue;
      for (int w : g.adj[a])
        if (inComp.count(w) && st.edgeInBlock[g.edgeIndex(a, w)] && !prev.count(w)) {
          prev[w] = a;
          queue.push_back(w);
        }
      int hit = -1;
      for (size_t qi = 0; qi < queue.size() && hit == -1; qi++) {
        int v = queue[qi];
        if (g.hasEdge(v, b) && st.edgeInBlock[g.edgeIndex(v, b)]) {
          hit = v;
          break;
        }
        for (int w : g.adj[v])
          if (inComp.count(w) && st.edgeInBlock[g.edgeIndex(v, w)] && !prev.count(w)) {
            prev[w] = v;
            queue.push_back(w);
          }
      }
      ONEP_CHECK(hit != -1);
      path.push_back(b);
      for (int x = hit; x != a; x = prev[x]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }
    st.embedPath(path, faces[pick->admissibleFaces.front()]);
  }
  return st.rot;
}

}  // namespace

std::optional<PlanarEmbedding> planarEmbedding(const Graph& g) {
  if (!g.isConnected())
    throw Error(ErrorCode::InvalidInput, "planarEmbedding requires a connected graph");
  if (g.n >= 3 && g.numEdges() > 3 * g.n - 6) return std::nullopt;

  std::vector<std::vector<int>> rot(g.n);
  auto blocks = blocksOf(g);
  for (const auto& blockEdges : blocks.blockEdges) {
    auto blockRot = dmpEmbedBlock(g, blockEdges);
    if (!blockRot) return std::nullopt;
    // splice each block's rotation after the existing entries (a face corner)
    for (int v = 0; v < g.n; v++)
      for (int w : (*blockRot)[v]) rot[v].push_back(w);
  }
  return embeddingFromRotation(g, std::move(rot));
}

bool isPlanar(const Graph& g) {
  for (const auto& comp : g.connectedComponents()) {
    Graph sub = g.inducedSubgraph(comp);
    if (!planarEmbedding(sub).has_value()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kuratowski witnesses
// ---------------------------------------------------------------------------

std::vector<Edge> KuratowskiWitness::edgeSet() const {
  std::vector<Edge> out;
  for (const auto& p : paths)
    for (size_t i = 0; i + 1 < p.size(); i++) out.push_back(mkEdge(p[i], p[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool planarWithEdges(int n, const std::vector<Edge>& edges) {
  return isPlanar(Graph(n, edges));
}

}  // namespace

std::optional<KuratowskiWitness> kuratowskiWitness(const Graph& g) {
  if (isPlanar(g)) return std::nullopt;

  // shrink to an edge-minimal non-planar subgraph: its edges form the
  // subdivision; once an edge is kept it stays needed, so one pass suffices
  std::vector<Edge> current = g.edges;
  for (size_t i = 0; i < current.size();) {
    std::vector<Edge> trial = current;
    trial.erase(trial.begin() + i);
    if (!planarWithEdges(g.n, trial))
      current = std::move(trial);
    else
      i++;
  }

  Graph sub(g.n, current);
  KuratowskiWitness w;
  for (int v = 0; v < g.n; v++)
    if (sub.degree(v) >= 3) w.branchVertices.push_back(v);

  std::set<std::vector<int>> pathSet;
  for (int b : w.branchVertices) {
    for (int x : sub.adj[b]) {
      std::vector<int> path = {b, x};
      int prev = b, cur = x;
      while (sub.degree(cur) == 2) {
        int next = sub.adj[cur][0] == prev ? sub.adj[cur][1] : sub.adj[cur][0];
        prev = cur;
        cur = next;
        path.push_back(cur);
      }
      std::vector<int> rev(path.rbegin(), path.rend());
      pathSet.insert(std::min(path, rev));
    }
  }
  w.paths.assign(pathSet.begin(), pathSet.end());

  if (w.branchVertices.size() == 5) {
    w.kind = KuratowskiWitness::Kind::K5;
  } else {
    ONEP_CHECK(w.branchVertices.size() == 6);
    w.kind = KuratowskiWitness::Kind::K33;
  }
  ONEP_CHECK(validateKuratowski(g, w));
  return w;
}

bool validateKuratowski(const Graph& g, const KuratowskiWitness& w) {
  std::set<int> branches(w.branchVertices.begin(), w.branchVertices.end());
  if (branches.size() != w.branchVertices.size()) return false;

  std::set<int> internalsSeen;
  std::vector<std::set<int>> branchAdj(g.n);
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    if (!branches.count(p.front()) || !branches.count(p.back())) return false;
    if (p.front() == p.back()) return false;
    for (size_t i = 0; i + 1 < p.size(); i++)
      if (!g.hasEdge(p[i], p[i + 1])) return false;
    for (size_t i = 1; i + 1 < p.size(); i++) {
      int v = p[i];
      if (branches.count(v)) return false;
      if (internalsSeen.count(v)) return false;  // internally disjoint
      internalsSeen.insert(v);
    }
    if (branchAdj[p.front()].count(p.back())) return false;  // duplicate path
    branchAdj[p.front()].insert(p.back());
    branchAdj[p.back()].insert(p.front());
  }

  if (w.kind == KuratowskiWitness::Kind::K5) {
    if (w.branchVertices.size() != 5 || w.paths.size() != 10) return false;
    for (int b : w.branchVertices)
      if (branchAdj[b].size() != 4) return false;
    return true;
  }
  if (w.branchVertices.size() != 6 || w.paths.size() != 9) return false;
  for (int b : w.branchVertices)
    if (branchAdj[b].size() != 3) return false;
  // bipartition check
  int b0 = w.branchVertices[0];
  std::set<int> sideA{b0};
  for (int b : w.branchVertices)
    if (!branchAdj[b0].count(b) && b != b0) sideA.insert(b);
  if (sideA.size() != 3) return false;
  for (int a : sideA)
    for (int b : branchAdj[a])
      if (sideA.count(b)) return false;
  return true;
}

bool densityScreen(const Graph& g) {
  if (g.n < 3)
    throw Error(ErrorCode::InvalidInput, "density screen needs at least 3 vertices");
  return g.numEdges() <= 4 * g.n - 8;
}

Blocks biconnectedComponents(const Graph& g) { return blocksOf(g); }

}  // namespace onep
