#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onep/graph.h"
#include "onep/planarity.h"

namespace onep {

/// The six crossing types, keyed by the subgraph induced by the four
/// endpoints of a crossing pair.
enum class CrossingType : uint8_t { Full, AlmostFull, Bowtie, Arrow, Chair, X };

const char* crossingTypeName(CrossingType t);
std::optional<CrossingType> crossingTypeFromName(const std::string& name);

/// Nonempty subset of crossing types.
class TypeSet {
 public:
  TypeSet() = default;
  static TypeSet all();
  static TypeSet of(std::initializer_list<CrossingType> types);
  /// Parse a comma-separated list of lowercase names; throws on empty/unknown.
  static TypeSet parse(const std::string& spec);

  bool contains(CrossingType t) const { return bits_ & (1u << (int)t); }
  TypeSet& add(CrossingType t) {
    bits_ |= (1u << (int)t);
    return *this;
  }
  bool empty() const { return bits_ == 0; }
  bool subsetOf(const TypeSet& other) const { return (bits_ & ~other.bits_) == 0; }
  /// Whether the set stays within {full, almost-full, bowtie}.
  bool fourCycleOnly() const;
  std::string toString() const;
  bool operator==(const TypeSet& o) const { return bits_ == o.bits_; }

 private:
  uint8_t bits_ = 0;
};

/// The (up to four) "side" edges among the endpoints of two disjoint edges,
/// i.e. endpoint pairs other than the crossing edges themselves.
std::vector<Edge> sideEdges(const Graph& g, Edge e, Edge f);

/// Crossing type of the pair {e, f}; errors when the edges share an endpoint.
CrossingType classifyCrossing(const Graph& g, Edge e, Edge f);

bool pairAdmissible(const Graph& g, Edge e, Edge f, const TypeSet& s);

/// Set of disjoint unordered pairs of host edges designated to cross.
struct CrossingPairing {
  std::vector<std::pair<Edge, Edge>> pairs;  // each pair (e, f) with e < f; sorted

  static CrossingPairing of(std::vector<std::pair<Edge, Edge>> raw);
  int size() const { return (int)pairs.size(); }
  bool usesEdge(Edge e) const;
};

/// Replaces each pair by a degree-4 crossing vertex. The crossing vertex of
/// pairs[i] is host.n + i.
struct Planarization {
  Graph graph;
  int hostN;
  CrossingPairing pairing;
  int crossingVertex(int pairIdx) const { return hostN + pairIdx; }
};

Planarization planarize(const Graph& g, const CrossingPairing& m);

/// Combinatorial 1-planar drawing: an embedding of the planarization with a
/// designated outer face, plus per-pair realization flags (a pair whose
/// endpoints do not alternate around its crossing vertex is "unrealized" and
/// contributes no crossing).
struct CombinatorialDrawing {
  Graph host;
  CrossingPairing pairing;
  Planarization planarization;
  PlanarEmbedding embedding;  // of planarization.graph
  int outerFace = 0;
  std::vector<bool> realized;

  int numRealized() const;
};

/// Builds the drawing for an embedding of planarize(g, m); realization flags
/// come from the rotation at each crossing vertex.
CombinatorialDrawing extractDrawing(const Graph& g, const CrossingPairing& m,
                                    const PlanarEmbedding& emb, int outerFace);

struct DrawingReport {
  bool ok = false;
  bool onePlanar = false;
  std::vector<std::string> violations;
  struct CrossingInfo {
    int pairIdx;
    CrossingType type;
    bool realized;
    bool admissible;
  };
  std::vector<CrossingInfo> crossings;
};

/// Structural re-validation plus S-membership of every realized crossing.
DrawingReport verifyDrawing(const CombinatorialDrawing& d, const TypeSet& s);

/// No side edge of any pair is itself a member of a pair.
bool isCrossingConfined(const Graph& g, const CrossingPairing& m);

struct BConfiguration {
  int s, sPrime, b, bPrime;
  int crossingVertex;
  bool operator<(const BConfiguration& o) const;
};

struct WConfiguration {
  int s, sPrime;
  int w1, w2, w1Prime, w2Prime;
  int crossing1, crossing2;
  bool operator<(const WConfiguration& o) const;
};

/// All B-configurations of the drawing: host edges ss', sb, s'b' with sb and
/// s'b' crossing and b, b' inside the closed curve through ss' and the two
/// crossing-edge halves.
std::vector<BConfiguration> detectBConfigs(const CombinatorialDrawing& d);

/// All W-configurations (two crossings sharing the spine s, s'; the four
/// outer endpoints inside the closed curve through both crossing vertices).
std::vector<WConfiguration> detectWConfigs(const CombinatorialDrawing& d);

/// Sidedness helper: which vertices of the planarization lie strictly inside
/// the closed walk `cycle` (a cycle in the planarization), where "outside" is
/// the side containing the outer face.
std::vector<bool> verticesInsideCycle(const CombinatorialDrawing& d, const std::vector<int>& cycle);

/// Sub-drawing induced by a set of host vertices: removed host edges lose
/// their crossings, crossing vertices of half-dead pairs are smoothed away,
/// and the outer face follows the merged region that contained the old one.
/// Requires the restricted planarization to stay connected.
CombinatorialDrawing restrictDrawing(const CombinatorialDrawing& d, const std::vector<bool>& keepHost);

/// Vertices on the outer face of the planarization (host and crossing ids).
std::vector<int> outerBoundaryVertices(const CombinatorialDrawing& d);

}  // namespace onep
