#pragma once

#include <optional>
#include <vector>

#include "onep/graph.h"

namespace onep {

/// Directed edge (tail, head) used in face walks.
using Dart = std::pair<int, int>;

/// Combinatorial embedding of a connected planar graph: a rotation system
/// plus the face walks it induces. rot[v] lists the neighbors of v in cyclic
/// order; faces are traced with next(u->v) = (v -> w), w the cyclic successor
/// of u in rot[v].
struct PlanarEmbedding {
  std::vector<std::vector<int>> rot;
  std::vector<std::vector<Dart>> faces;
  int outerFace = 0;

  int numVertices() const { return (int)rot.size(); }
  /// Vertices on the walk of face f (deduplicated, sorted).
  std::vector<int> faceVertices(int f) const;
  bool faceContainsVertex(int f, int v) const;
};

/// Face walks induced by a rotation system.
std::vector<std::vector<Dart>> traceFaces(const std::vector<std::vector<int>>& rot);

/// Genus-0 test via Euler's formula; requires the rotation of a connected graph.
bool isSphericalRotation(const Graph& g, const std::vector<std::vector<int>>& rot);

/// Builds faces for a rotation known to be planar; throws on genus > 0.
PlanarEmbedding embeddingFromRotation(const Graph& g, std::vector<std::vector<int>> rot);

/// All-reversed copy (the mirror drawing).
std::vector<std::vector<int>> mirrorRotation(const std::vector<std::vector<int>>& rot);

/// Canonical key identifying an embedding up to sphere homeomorphism
/// including reflection (for connected graphs: rotation equality up to
/// global reversal).
std::vector<int> embeddingKey(const std::vector<std::vector<int>>& rot);

bool isPlanar(const Graph& g);

/// Planar embedding of a connected planar graph (deterministic), or nullopt.
std::optional<PlanarEmbedding> planarEmbedding(const Graph& g);

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<int> branchVertices;         // 5 or 6, sorted
  std::vector<std::vector<int>> paths;     // vertex sequences between branch vertices
  /// Host edges used by the subdivision, sorted.
  std::vector<Edge> edgeSet() const;
};

/// Present exactly when g is non-planar; the witness is a K5/K3,3 subdivision
/// located inside g (edge-minimal, so its edge set is exactly the subdivision).
std::optional<KuratowskiWitness> kuratowskiWitness(const Graph& g);

/// Revalidates a witness against a host graph (used by tests and `verify`).
bool validateKuratowski(const Graph& g, const KuratowskiWitness& w);

/// 1-planar density screen: false iff |E| > 4|V| - 8 (then g is certainly not
/// 1-planar). Requires |V| >= 3.
bool densityScreen(const Graph& g);

/// Blocks (maximal 2-connected subgraphs / bridges) as sorted edge-index
/// lists, plus the cutvertices. Isolated vertices yield no block.
struct Blocks {
  std::vector<std::vector<int>> blockEdges;
  std::vector<int> cutVertices;
};
Blocks biconnectedComponents(const Graph& g);

}  // namespace onep
