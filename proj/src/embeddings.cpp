#include "onep/embeddings.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "onep/decompose.h"

namespace onep {

namespace {

struct Budget {
  long long left;
  void spend(long long amount = 1) {
    left -= amount;
    if (left < 0)
      throw Error(ErrorCode::ResourceExhausted, "embedding enumeration budget exceeded");
  }
};

// ---------------------------------------------------------------------------
// embeddings of one 2-connected block, via its SPR-tree
// ---------------------------------------------------------------------------

/// Skeleton rotation: host vertex -> incident skeleton edge indices in cyclic order.
using SkelRotation = std::map<int, std::vector<int>>;

struct BlockEnumerator {
  const Graph& host;
  SprTree tree;
  // per node, the list of admissible skeleton rotations to combine
  std::vector<std::vector<SkelRotation>> nodeChoices;
  // (node, edgeIdx) -> (otherNode, otherEdgeIdx) for virtual pairs
  std::map<std::pair<int, int>, std::pair<int, int>> pairedWith;
  std::vector<int> blockVertices;

  BlockEnumerator(const Graph& hostGraph, const Graph& blockLocal,
                  const std::vector<int>& localToHost)
      : host(hostGraph) {
    tree = sprTree(blockLocal);
    // translate skeleton vertex ids back to host ids
    for (auto& node : tree.nodes) {
      for (auto& v : node.skeleton.vertices) v = localToHost[v];
      std::sort(node.skeleton.vertices.begin(), node.skeleton.vertices.end());
      for (auto& e : node.skeleton.edges) {
        int u = localToHost[e.u], v = localToHost[e.v];
        e.u = std::min(u, v);
        e.v = std::max(u, v);
      }
    }
    std::set<int> verts;
    for (const auto& node : tree.nodes)
      verts.insert(node.skeleton.vertices.begin(), node.skeleton.vertices.end());
    blockVertices.assign(verts.begin(), verts.end());
    for (const auto& te : tree.treeEdges) {
      pairedWith[{te.nodeA, te.edgeA}] = {te.nodeB, te.edgeB};
      pairedWith[{te.nodeB, te.edgeB}] = {te.nodeA, te.edgeA};
    }
    for (int ni = 0; ni < (int)tree.nodes.size(); ni++) nodeChoices.push_back(choicesFor(ni));
  }

  std::vector<SkelRotation> choicesFor(int ni) const {
    const auto& node = tree.nodes[ni];
    const auto& sk = node.skeleton;
    std::vector<SkelRotation> out;
    if (node.kind == SprTree::Kind::S) {
      // a cycle has one embedding; pole flips are invisible at degree two
      SkelRotation rot;
      std::map<int, std::vector<int>> incident;
      for (int ei = 0; ei < (int)sk.edges.size(); ei++) {
        incident[sk.edges[ei].u].push_back(ei);
        incident[sk.edges[ei].v].push_back(ei);
      }
      for (int v : sk.vertices) rot[v] = incident[v];
      out.push_back(std::move(rot));
    } else if (node.kind == SprTree::Kind::P) {
      // dipole: all cyclic orders at one pole, reversed at the other
      int u = sk.vertices[0], v = sk.vertices[1];
      std::vector<int> ids((size_t)sk.edges.size());
      for (int i = 0; i < (int)ids.size(); i++) ids[i] = i;
      std::vector<int> tail(ids.begin() + 1, ids.end());
      std::sort(tail.begin(), tail.end());
      do {
        SkelRotation rot;
        std::vector<int> atU = {ids[0]};
        atU.insert(atU.end(), tail.begin(), tail.end());
        rot[u] = atU;
        rot[v] = std::vector<int>(atU.rbegin(), atU.rend());
        out.push_back(std::move(rot));
      } while (std::next_permutation(tail.begin(), tail.end()));
    } else {
      // R: 3-connected skeleton, one embedding plus its mirror
      std::map<int, int> localOf;
      std::vector<int> toHost = sk.vertices;
      for (int i = 0; i < (int)toHost.size(); i++) localOf[toHost[i]] = i;
      std::vector<Edge> localEdges;
      for (const auto& e : sk.edges) localEdges.push_back(mkEdge(localOf[e.u], localOf[e.v]));
      Graph skg((int)toHost.size(), localEdges);
      auto emb = planarEmbedding(skg);
      ONEP_CHECK(emb.has_value());
      auto toSkelRotation = [&](const std::vector<std::vector<int>>& rot) {
        SkelRotation sr;
        for (int lv = 0; lv < (int)rot.size(); lv++) {
          std::vector<int> edgeIds;
          for (int lw : rot[lv]) {
            Edge he = mkEdge(toHost[lv], toHost[lw]);
            int found = -1;
            for (int ei = 0; ei < (int)sk.edges.size(); ei++)
              if (mkEdge(sk.edges[ei].u, sk.edges[ei].v) == he) found = ei;
            ONEP_CHECK(found >= 0);
            edgeIds.push_back(found);
          }
          sr[toHost[lv]] = edgeIds;
        }
        return sr;
      };
      out.push_back(toSkelRotation(emb->rot));
      out.push_back(toSkelRotation(mirrorRotation(emb->rot)));
    }
    return out;
  }

  /// Assemble the block rotation for one choice vector.
  std::map<int, std::vector<int>> assemble(const std::vector<int>& choice) const {
    std::map<int, std::vector<int>> rot;
    for (int v : blockVertices) {
      // expand starting from the smallest node containing v
      int own = -1;
      for (int ni = 0; ni < (int)tree.nodes.size() && own == -1; ni++)
        if (std::binary_search(tree.nodes[ni].skeleton.vertices.begin(),
                               tree.nodes[ni].skeleton.vertices.end(), v))
          own = ni;
      std::vector<int> out;
      expand(choice, own, v, -1, out);
      rot[v] = out;
    }
    return rot;
  }

  void expand(const std::vector<int>& choice, int node, int v, int skipEdge,
              std::vector<int>& out) const {
    const auto& sk = tree.nodes[node].skeleton;
    const auto& fullRot = nodeChoices[node][choice[node]].at(v);
    std::vector<int> order;
    if (skipEdge < 0) {
      order = fullRot;
    } else {
      int at = -1;
      for (int i = 0; i < (int)fullRot.size(); i++)
        if (fullRot[i] == skipEdge) at = i;
      ONEP_CHECK(at >= 0);
      for (int i = 1; i < (int)fullRot.size(); i++)
        order.push_back(fullRot[(at + i) % fullRot.size()]);
    }
    for (int ei : order) {
      const auto& e = sk.edges[ei];
      if (e.isVirtual) {
        auto [otherNode, otherEdge] = pairedWith.at({node, ei});
        expand(choice, otherNode, v, otherEdge, out);
      } else {
        out.push_back(e.u == v ? e.v : e.u);
      }
    }
  }

  void forEach(Budget& budget, const std::function<void(const std::map<int, std::vector<int>>&)>& fn) {
    std::vector<int> choice(tree.nodes.size(), 0);
    std::function<void(int)> rec = [&](int idx) {
      if (idx == (int)choice.size()) {
        budget.spend();
        fn(assemble(choice));
        return;
      }
      for (int c = 0; c < (int)nodeChoices[idx].size(); c++) {
        budget.spend();
        choice[idx] = c;
        rec(idx + 1);
      }
    };
    rec(0);
  }
};

/// Embeddings of one block as host-vertex rotation fragments.
void forEachBlockRotation(const Graph& g, const std::vector<int>& blockEdges, Budget& budget,
                          const std::function<void(const std::map<int, std::vector<int>>&)>& fn) {
  if (blockEdges.size() == 1) {
    auto [u, v] = g.edges[blockEdges[0]];
    std::map<int, std::vector<int>> rot;
    rot[u] = {v};
    rot[v] = {u};
    budget.spend();
    fn(rot);
    return;
  }
  // local copy of the block
  std::set<int> vs;
  for (int ei : blockEdges) {
    vs.insert(g.edges[ei].first);
    vs.insert(g.edges[ei].second);
  }
  std::vector<int> localToHost(vs.begin(), vs.end());
  std::map<int, int> toLocal;
  for (int i = 0; i < (int)localToHost.size(); i++) toLocal[localToHost[i]] = i;
  std::vector<Edge> localEdges;
  for (int ei : blockEdges)
    localEdges.push_back(mkEdge(toLocal[g.edges[ei].first], toLocal[g.edges[ei].second]));
  Graph local((int)localToHost.size(), localEdges);

  BlockEnumerator be(g, local, localToHost);
  be.forEach(budget, fn);
}

}  // namespace

std::vector<PlanarEmbedding> enumerateEmbeddings(const Graph& g, int limit, long long nodeBudget) {
  if (!g.isConnected())
    throw Error(ErrorCode::InvalidInput, "embedding enumeration requires a connected graph");
  if (!isPlanar(g)) throw Error(ErrorCode::InvalidInput, "embedding enumeration requires planarity");

  std::vector<PlanarEmbedding> results;
  if (g.numEdges() == 0) {
    if (limit > 0) results.push_back(embeddingFromRotation(g, {{}}));
    return results;
  }

  Budget budget{nodeBudget};
  auto blocks = biconnectedComponents(g);

  // order blocks so each one attaches to the union of its predecessors at a
  // single cutvertex (BFS over the block-cut structure)
  int nb = (int)blocks.blockEdges.size();
  std::vector<std::set<int>> blockVerts(nb);
  for (int b = 0; b < nb; b++)
    for (int ei : blocks.blockEdges[b]) {
      blockVerts[b].insert(g.edges[ei].first);
      blockVerts[b].insert(g.edges[ei].second);
    }
  std::vector<int> order{0};
  std::vector<bool> used(nb, false);
  used[0] = true;
  std::set<int> covered(blockVerts[0].begin(), blockVerts[0].end());
  std::vector<int> attachAt(nb, -1);
  while ((int)order.size() < nb) {
    bool progressed = false;
    for (int b = 0; b < nb && !progressed; b++) {
      if (used[b]) continue;
      for (int v : blockVerts[b]) {
        if (covered.count(v)) {
          attachAt[b] = v;
          order.push_back(b);
          used[b] = true;
          covered.insert(blockVerts[b].begin(), blockVerts[b].end());
          progressed = true;
          break;
        }
      }
    }
    ONEP_CHECK(progressed);
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> rot(g.n);

  std::function<void(int)> rec = [&](int idx) {
    if ((int)results.size() >= limit) return;
    if (idx == nb) {
      auto key = embeddingKey(rot);
      if (seen.count(key)) return;
      seen.insert(key);
      results.push_back(embeddingFromRotation(g, rot));
      return;
    }
    int b = order[idx];
    forEachBlockRotation(g, blocks.blockEdges[b], budget, [&](const std::map<int, std::vector<int>>& blockRot) {
      if ((int)results.size() >= limit) return;
      if (idx == 0) {
        for (const auto& [v, r] : blockRot) rot[v] = r;
        rec(idx + 1);
        for (const auto& [v, r] : blockRot) rot[v].clear();
        return;
      }
      int c = attachAt[b];
      const auto& add = blockRot.at(c);
      std::vector<int> base = rot[c];
      for (int slot = 0; slot < (int)base.size(); slot++) {
        for (int cut = 0; cut < (int)add.size(); cut++) {
          budget.spend();
          std::vector<int> merged(base.begin(), base.begin() + slot + 1);
          for (int i = 0; i < (int)add.size(); i++) merged.push_back(add[(cut + i) % add.size()]);
          merged.insert(merged.end(), base.begin() + slot + 1, base.end());
          rot[c] = merged;
          for (const auto& [v, r] : blockRot)
            if (v != c) rot[v] = r;
          rec(idx + 1);
          for (const auto& [v, r] : blockRot)
            if (v != c) rot[v].clear();
          rot[c] = base;
        }
      }
    });
  };
  rec(0);
  return results;
}

std::vector<PlanarEmbedding> enumerateEmbeddingsBrute(const Graph& g, int limit,
                                                      long long nodeBudget) {
  if (!g.isConnected())
    throw Error(ErrorCode::InvalidInput, "embedding enumeration requires a connected graph");
  std::vector<PlanarEmbedding> results;
  if (g.numEdges() == 0) {
    if (limit > 0 && g.n == 1) results.push_back(embeddingFromRotation(g, {{}}));
    return results;
  }
  Budget budget{nodeBudget};
  std::vector<std::vector<int>> rot(g.n);
  std::set<std::vector<int>> seen;

  std::function<void(int)> rec = [&](int v) {
    if ((int)results.size() >= limit) return;
    if (v == g.n) {
      budget.spend();
      if (!isSphericalRotation(g, rot)) return;
      auto key = embeddingKey(rot);
      if (seen.count(key)) return;
      seen.insert(key);
      results.push_back(embeddingFromRotation(g, rot));
      return;
    }
    // first neighbor pinned: cyclic orders, not linear ones
    std::vector<int> tail(g.adj[v].begin() + (g.adj[v].empty() ? 0 : 1), g.adj[v].end());
    std::sort(tail.begin(), tail.end());
    do {
      budget.spend();
      rot[v].clear();
      if (!g.adj[v].empty()) rot[v].push_back(g.adj[v][0]);
      rot[v].insert(rot[v].end(), tail.begin(), tail.end());
      rec(v + 1);
    } while (std::next_permutation(tail.begin(), tail.end()));
    rot[v].clear();
  };
  rec(0);
  return results;
}

}  // namespace onep
