#include "onep/crossings.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace onep {

// ---------------------------------------------------------------------------
// types
// ---------------------------------------------------------------------------

const char* crossingTypeName(CrossingType t) {
  switch (t) {
    case CrossingType::Full: return "full";
    case CrossingType::AlmostFull: return "almostfull";
    case CrossingType::Bowtie: return "bowtie";
    case CrossingType::Arrow: return "arrow";
    case CrossingType::Chair: return "chair";
    case CrossingType::X: return "x";
  }
  return "?";
}

std::optional<CrossingType> crossingTypeFromName(const std::string& name) {
  for (CrossingType t : {CrossingType::Full, CrossingType::AlmostFull, CrossingType::Bowtie,
                         CrossingType::Arrow, CrossingType::Chair, CrossingType::X})
    if (name == crossingTypeName(t)) return t;
  return std::nullopt;
}

TypeSet TypeSet::all() {
  TypeSet s;
  for (CrossingType t : {CrossingType::Full, CrossingType::AlmostFull, CrossingType::Bowtie,
                         CrossingType::Arrow, CrossingType::Chair, CrossingType::X})
    s.add(t);
  return s;
}

TypeSet TypeSet::of(std::initializer_list<CrossingType> types) {
  TypeSet s;
  for (CrossingType t : types) s.add(t);
  return s;
}

TypeSet TypeSet::parse(const std::string& spec) {
  TypeSet s;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto t = crossingTypeFromName(item);
    if (!t) throw Error(ErrorCode::InvalidInput, "unknown crossing type: " + item);
    s.add(*t);
  }
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "type set must be nonempty");
  return s;
}

bool TypeSet::fourCycleOnly() const {
  return subsetOf(TypeSet::of({CrossingType::Full, CrossingType::AlmostFull, CrossingType::Bowtie}));
}

std::string TypeSet::toString() const {
  std::string out;
  for (CrossingType t : {CrossingType::Full, CrossingType::AlmostFull, CrossingType::Bowtie,
                         CrossingType::Arrow, CrossingType::Chair, CrossingType::X}) {
    if (!contains(t)) continue;
    if (!out.empty()) out += ",";
    out += crossingTypeName(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

std::vector<Edge> sideEdges(const Graph& g, Edge e, Edge f) {
  std::vector<Edge> out;
  for (int a : {e.first, e.second})
    for (int b : {f.first, f.second})
      if (g.hasEdge(a, b)) out.push_back(mkEdge(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

CrossingType classifyCrossing(const Graph& g, Edge e, Edge f) {
  e = mkEdge(e.first, e.second);
  f = mkEdge(f.first, f.second);
  if (g.edgeIndex(e.first, e.second) < 0 || g.edgeIndex(f.first, f.second) < 0)
    throw Error(ErrorCode::InvalidInput, "crossing pair edges must belong to the graph");
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
    throw Error(ErrorCode::InvalidInput, "adjacent edges never cross");
  auto sides = sideEdges(g, e, f);
  switch (sides.size()) {
    case 4: return CrossingType::Full;
    case 3: return CrossingType::AlmostFull;
    case 2: {
      const auto& [a, b] = sides[0];
      const auto& [c, d] = sides[1];
      bool shared = (a == c || a == d || b == c || b == d);
      return shared ? CrossingType::Arrow : CrossingType::Bowtie;
    }
    case 1: return CrossingType::Chair;
    default: return CrossingType::X;
  }
}

bool pairAdmissible(const Graph& g, Edge e, Edge f, const TypeSet& s) {
  return s.contains(classifyCrossing(g, e, f));
}

// ---------------------------------------------------------------------------
// pairings and planarization
// ---------------------------------------------------------------------------

CrossingPairing CrossingPairing::of(std::vector<std::pair<Edge, Edge>> raw) {
  for (auto& [e, f] : raw) {
    e = mkEdge(e.first, e.second);
    f = mkEdge(f.first, f.second);
    if (f < e) std::swap(e, f);
  }
  std::sort(raw.begin(), raw.end());
  CrossingPairing m;
  m.pairs = std::move(raw);
  return m;
}

bool CrossingPairing::usesEdge(Edge e) const {
  e = mkEdge(e.first, e.second);
  for (const auto& [a, b] : pairs)
    if (a == e || b == e) return true;
  return false;
}

Planarization planarize(const Graph& g, const CrossingPairing& m) {
  std::set<Edge> paired;
  for (const auto& [e, f] : m.pairs) {
    for (const Edge& x : {e, f}) {
      if (g.edgeIndex(x.first, x.second) < 0)
        throw Error(ErrorCode::InvalidInput, "pairing uses an edge absent from the graph");
      if (paired.count(x))
        throw Error(ErrorCode::InvalidInput, "an edge occurs in two crossing pairs");
      paired.insert(x);
    }
    if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
      throw Error(ErrorCode::InvalidInput, "a crossing pair must consist of disjoint edges");
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges)
    if (!paired.count(e)) edges.push_back(e);
  for (int i = 0; i < m.size(); i++) {
    int x = g.n + i;
    const auto& [e, f] = m.pairs[i];
    for (int v : {e.first, e.second, f.first, f.second}) edges.push_back(mkEdge(v, x));
  }
  Planarization p;
  p.graph = Graph(g.n + m.size(), std::move(edges));
  p.hostN = g.n;
  p.pairing = m;
  return p;
}

// ---------------------------------------------------------------------------
// drawings
// ---------------------------------------------------------------------------

namespace {

/// Endpoints of the two paired edges alternate around the crossing vertex.
bool rotationAlternates(const std::vector<int>& rotAtX, const std::pair<Edge, Edge>& pair) {
  ONEP_CHECK(rotAtX.size() == 4);
  auto posOf = [&](int v) {
    for (int i = 0; i < 4; i++)
      if (rotAtX[i] == v) return i;
    ONEP_CHECK(false);
    return -1;
  };
  int p1 = posOf(pair.first.first), p2 = posOf(pair.first.second);
  int dist = std::abs(p1 - p2);
  return dist == 2;
}

}  // namespace

int CombinatorialDrawing::numRealized() const {
  int c = 0;
  for (bool r : realized) c += r ? 1 : 0;
  return c;
}

CombinatorialDrawing extractDrawing(const Graph& g, const CrossingPairing& m,
                                    const PlanarEmbedding& emb, int outerFace) {
  CombinatorialDrawing d;
  d.host = g;
  d.pairing = m;
  d.planarization = planarize(g, m);
  if ((int)emb.rot.size() != d.planarization.graph.n)
    throw Error(ErrorCode::MalformedDrawing, "embedding does not match the planarization");
  d.embedding = embeddingFromRotation(d.planarization.graph, emb.rot);
  if (outerFace < 0 || outerFace >= (int)d.embedding.faces.size())
    throw Error(ErrorCode::MalformedDrawing, "outer face index out of range");
  d.outerFace = outerFace;
  d.embedding.outerFace = outerFace;
  for (int i = 0; i < m.size(); i++) {
    int x = d.planarization.crossingVertex(i);
    d.realized.push_back(rotationAlternates(d.embedding.rot[x], m.pairs[i]));
  }
  return d;
}

DrawingReport verifyDrawing(const CombinatorialDrawing& d, const TypeSet& s) {
  // structural invariants first; failures are malformed drawings
  Planarization expect = planarize(d.host, d.pairing);  // re-validates the pairing
  if (!(expect.graph == d.planarization.graph))
    throw Error(ErrorCode::MalformedDrawing, "planarization does not match host and pairing");
  if ((int)d.realized.size() != d.pairing.size())
    throw Error(ErrorCode::MalformedDrawing, "realization flags out of sync");
  PlanarEmbedding checked = embeddingFromRotation(d.planarization.graph, d.embedding.rot);
  if (d.outerFace < 0 || d.outerFace >= (int)checked.faces.size())
    throw Error(ErrorCode::MalformedDrawing, "outer face index out of range");
  for (int i = 0; i < d.pairing.size(); i++) {
    int x = d.planarization.crossingVertex(i);
    if (d.planarization.graph.degree(x) != 4)
      throw Error(ErrorCode::MalformedDrawing, "crossing vertex degree is not 4");
    bool alternates = rotationAlternates(d.embedding.rot[x], d.pairing.pairs[i]);
    if (alternates != d.realized[i])
      throw Error(ErrorCode::MalformedDrawing, "realization flag contradicts the rotation");
  }

  DrawingReport report;
  report.onePlanar = true;  // each edge is in at most one pair by construction
  for (int i = 0; i < d.pairing.size(); i++) {
    const auto& [e, f] = d.pairing.pairs[i];
    DrawingReport::CrossingInfo info;
    info.pairIdx = i;
    info.type = classifyCrossing(d.host, e, f);
    info.realized = d.realized[i];
    info.admissible = !info.realized || s.contains(info.type);
    if (!info.admissible) {
      std::ostringstream msg;
      msg << "crossing of (" << e.first << "," << e.second << ") x (" << f.first << ","
          << f.second << ") has type " << crossingTypeName(info.type) << " outside {"
          << s.toString() << "}";
      report.violations.push_back(msg.str());
    }
    report.crossings.push_back(info);
  }
  report.ok = report.violations.empty();
  return report;
}

bool isCrossingConfined(const Graph& g, const CrossingPairing& m) {
  for (const auto& [e, f] : m.pairs)
    for (const Edge& side : sideEdges(g, e, f))
      if (m.usesEdge(side)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// region sidedness and the B/W detectors
// ---------------------------------------------------------------------------

namespace {

struct FaceIndex {
  std::map<Dart, int> faceOf;
  FaceIndex(const std::vector<std::vector<Dart>>& faces) {
    for (int f = 0; f < (int)faces.size(); f++)
      for (const auto& dart : faces[f]) faceOf[dart] = f;
  }
};

struct UnionFind {
  std::vector<int> parent;
  UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<bool> verticesInsideCycle(const CombinatorialDrawing& d, const std::vector<int>& cycle) {
  const Graph& pg = d.planarization.graph;
  const auto& faces = d.embedding.faces;
  std::set<Edge> cycleEdges;
  for (size_t i = 0; i < cycle.size(); i++) {
    Edge e = mkEdge(cycle[i], cycle[(i + 1) % cycle.size()]);
    ONEP_CHECK(pg.hasEdge(e.first, e.second));
    cycleEdges.insert(e);
  }
  FaceIndex fidx(faces);
  UnionFind uf((int)faces.size());
  for (const auto& e : pg.edges) {
    if (cycleEdges.count(e)) continue;
    uf.merge(fidx.faceOf.at({e.first, e.second}), fidx.faceOf.at({e.second, e.first}));
  }
  int outside = uf.find(d.outerFace);
  std::set<int> onCycle(cycle.begin(), cycle.end());
  std::vector<bool> inside(pg.n, false);
  for (int v = 0; v < pg.n; v++) {
    if (onCycle.count(v) || pg.degree(v) == 0) continue;
    Dart dart{v, pg.adj[v][0]};
    inside[v] = uf.find(fidx.faceOf.at(dart)) != outside;
  }
  return inside;
}

namespace {

/// Planarization path realizing host edge (u,v): direct, or through the
/// crossing vertex when the edge is paired.
std::vector<int> hostEdgePath(const CombinatorialDrawing& d, int u, int v) {
  Edge e = mkEdge(u, v);
  for (int i = 0; i < d.pairing.size(); i++)
    if (d.pairing.pairs[i].first == e || d.pairing.pairs[i].second == e)
      return {u, d.planarization.crossingVertex(i), v};
  return {u, v};
}

}  // namespace

bool BConfiguration::operator<(const BConfiguration& o) const {
  return std::tie(s, sPrime, b, bPrime, crossingVertex) <
         std::tie(o.s, o.sPrime, o.b, o.bPrime, o.crossingVertex);
}

bool WConfiguration::operator<(const WConfiguration& o) const {
  return std::tie(s, sPrime, w1, w2, w1Prime, w2Prime, crossing1, crossing2) <
         std::tie(o.s, o.sPrime, o.w1, o.w2, o.w1Prime, o.w2Prime, o.crossing1, o.crossing2);
}

std::vector<BConfiguration> detectBConfigs(const CombinatorialDrawing& d) {
  std::set<BConfiguration> found;
  for (int i = 0; i < d.pairing.size(); i++) {
    if (!d.realized[i]) continue;
    int x = d.planarization.crossingVertex(i);
    const auto& [e, f] = d.pairing.pairs[i];
    for (int s : {e.first, e.second}) {
      for (int sp : {f.first, f.second}) {
        if (!d.host.hasEdge(s, sp)) continue;
        int b = (s == e.first) ? e.second : e.first;
        int bp = (sp == f.first) ? f.second : f.first;
        ONEP_CHECK(b != bp);  // the pair's edges are disjoint
        // closed curve: drawn edge ss' plus the two crossing-edge halves
        std::vector<int> cycle = hostEdgePath(d, s, sp);
        cycle.push_back(x);
        auto inside = verticesInsideCycle(d, cycle);
        if (inside[b] && inside[bp]) {
          BConfiguration cfg{s, sp, b, bp, x};
          if (cfg.sPrime < cfg.s) cfg = BConfiguration{sp, s, bp, b, x};
          found.insert(cfg);
        }
      }
    }
  }
  return std::vector<BConfiguration>(found.begin(), found.end());
}

std::vector<WConfiguration> detectWConfigs(const CombinatorialDrawing& d) {
  std::set<WConfiguration> found;
  int k = d.pairing.size();
  for (int i = 0; i < k; i++) {
    if (!d.realized[i]) continue;
    for (int j = i + 1; j < k; j++) {
      if (!d.realized[j]) continue;
      int xi = d.planarization.crossingVertex(i);
      int xj = d.planarization.crossingVertex(j);
      // pick the edge of each pair incident to the spine vertex s
      for (int ei = 0; ei < 2; ei++) {
        Edge pe = ei == 0 ? d.pairing.pairs[i].first : d.pairing.pairs[i].second;
        Edge po = ei == 0 ? d.pairing.pairs[i].second : d.pairing.pairs[i].first;
        for (int ej = 0; ej < 2; ej++) {
          Edge qe = ej == 0 ? d.pairing.pairs[j].first : d.pairing.pairs[j].second;
          Edge qo = ej == 0 ? d.pairing.pairs[j].second : d.pairing.pairs[j].first;
          for (int s : {pe.first, pe.second}) {
            if (s != qe.first && s != qe.second) continue;
            for (int sp : {po.first, po.second}) {
              if (sp != qo.first && sp != qo.second) continue;
              int w1 = pe.first == s ? pe.second : pe.first;
              int w2 = qe.first == s ? qe.second : qe.first;
              int w1p = po.first == sp ? po.second : po.first;
              int w2p = qo.first == sp ? qo.second : qo.first;
              std::vector<int> cycle{s, xi, sp, xj};
              auto inside = verticesInsideCycle(d, cycle);
              if (inside[w1] && inside[w2] && inside[w1p] && inside[w2p]) {
                WConfiguration cfg{s, sp, w1, w2, w1p, w2p, xi, xj};
                if (cfg.sPrime < cfg.s)
                  cfg = WConfiguration{cfg.sPrime, cfg.s, cfg.w1Prime, cfg.w2Prime,
                                       cfg.w1, cfg.w2, cfg.crossing1, cfg.crossing2};
                if (cfg.crossing2 < cfg.crossing1)
                  cfg = WConfiguration{cfg.s, cfg.sPrime, cfg.w2, cfg.w1, cfg.w2Prime,
                                       cfg.w1Prime, cfg.crossing2, cfg.crossing1};
                found.insert(cfg);
              }
            }
          }
        }
      }
    }
  }
  return std::vector<WConfiguration>(found.begin(), found.end());
}

std::vector<int> outerBoundaryVertices(const CombinatorialDrawing& d) {
  return d.embedding.faceVertices(d.outerFace);
}

// ---------------------------------------------------------------------------
// induced sub-drawings
// ---------------------------------------------------------------------------

CombinatorialDrawing restrictDrawing(const CombinatorialDrawing& d, const std::vector<bool>& keepHost) {
  const Graph& host = d.host;
  const Graph& pg = d.planarization.graph;
  ONEP_CHECK((int)keepHost.size() == host.n);

  std::vector<int> keptHost;
  for (int v = 0; v < host.n; v++)
    if (keepHost[v]) keptHost.push_back(v);
  Graph newHost = host.inducedSubgraph(keptHost);
  std::vector<int> newHostId(host.n, -1);
  for (int i = 0; i < (int)keptHost.size(); i++) newHostId[keptHost[i]] = i;

  // surviving pairs, in the order planarize() will use
  std::vector<std::pair<Edge, Edge>> newPairsRaw;
  std::vector<int> pairAlive(d.pairing.size(), 0);
  for (int i = 0; i < d.pairing.size(); i++) {
    const auto& [e, f] = d.pairing.pairs[i];
    bool eAlive = keepHost[e.first] && keepHost[e.second];
    bool fAlive = keepHost[f.first] && keepHost[f.second];
    if (eAlive && fAlive) {
      pairAlive[i] = 1;
      newPairsRaw.push_back({mkEdge(newHostId[e.first], newHostId[e.second]),
                             mkEdge(newHostId[f.first], newHostId[f.second])});
    }
  }
  CrossingPairing newPairing = CrossingPairing::of(newPairsRaw);
  Planarization newPlan = planarize(newHost, newPairing);

  // map old planarization vertices to new ones
  std::vector<int> newOf(pg.n, -1);
  for (int v = 0; v < host.n; v++)
    if (keepHost[v]) newOf[v] = newHostId[v];
  for (int i = 0; i < d.pairing.size(); i++) {
    if (!pairAlive[i]) continue;
    const auto& [e, f] = d.pairing.pairs[i];
    std::pair<Edge, Edge> mapped{mkEdge(newHostId[e.first], newHostId[e.second]),
                                 mkEdge(newHostId[f.first], newHostId[f.second])};
    if (mapped.second < mapped.first) std::swap(mapped.first, mapped.second);
    int idx = -1;
    for (int jj = 0; jj < newPairing.size(); jj++)
      if (newPairing.pairs[jj] == mapped) idx = jj;
    ONEP_CHECK(idx >= 0);
    newOf[d.planarization.crossingVertex(i)] = newPlan.crossingVertex(idx);
  }

  // removed planarization edges (for face merging) and smoothing table
  std::vector<Edge> removedEdges;
  // crossing vertex of a half-dead pair -> its two surviving old neighbors
  std::map<int, std::pair<int, int>> smoothAt;
  for (int i = 0; i < d.pairing.size(); i++) {
    const auto& [e, f] = d.pairing.pairs[i];
    int x = d.planarization.crossingVertex(i);
    bool eAlive = keepHost[e.first] && keepHost[e.second];
    bool fAlive = keepHost[f.first] && keepHost[f.second];
    if (eAlive && fAlive) continue;
    if (!eAlive) {
      removedEdges.push_back(mkEdge(e.first, x));
      removedEdges.push_back(mkEdge(e.second, x));
    }
    if (!fAlive) {
      removedEdges.push_back(mkEdge(f.first, x));
      removedEdges.push_back(mkEdge(f.second, x));
    }
    if (eAlive) smoothAt[x] = {e.first, e.second};
    if (fAlive) smoothAt[x] = {f.first, f.second};
  }
  for (const auto& [u, v] : host.edges) {
    if (keepHost[u] && keepHost[v]) continue;
    if (d.pairing.usesEdge({u, v})) continue;  // handled above via claw halves
    removedEdges.push_back(mkEdge(u, v));
  }

  // build the new rotation, smoothing half-dead crossing vertices
  std::set<Edge> removedSet(removedEdges.begin(), removedEdges.end());
  std::vector<std::vector<int>> newRot(newPlan.graph.n);
  std::map<Dart, Dart> newDartToOld;
  for (int v = 0; v < pg.n; v++) {
    bool vKept = newOf[v] != -1;
    if (!vKept) continue;
    for (int w : d.embedding.rot[v]) {
      if (removedSet.count(mkEdge(v, w))) continue;
      int target = w;
      Dart oldDart{v, w};
      if (smoothAt.count(w)) {
        auto [a, b] = smoothAt.at(w);
        target = (a == v) ? b : a;
      }
      ONEP_CHECK(newOf[target] != -1);
      newRot[newOf[v]].push_back(newOf[target]);
      newDartToOld[{newOf[v], newOf[target]}] = oldDart;
    }
  }
  // drop smoothed crossing vertices' own rotations (not mapped) and validate
  for (const auto& [x, nbrs] : smoothAt) ONEP_CHECK(newOf[x] == -1);

  if (!newPlan.graph.isConnected())
    throw Error(ErrorCode::InvalidInput, "restriction disconnected the drawing");
  PlanarEmbedding newEmb = embeddingFromRotation(newPlan.graph, newRot);

  // locate the merged region that contained the old outer face
  FaceIndex oldIdx(d.embedding.faces);
  UnionFind uf((int)d.embedding.faces.size());
  for (const auto& e : removedEdges) {
    uf.merge(oldIdx.faceOf.at({e.first, e.second}), oldIdx.faceOf.at({e.second, e.first}));
  }
  int outerClass = uf.find(d.outerFace);
  int newOuter = -1;
  for (int fi = 0; fi < (int)newEmb.faces.size(); fi++) {
    if (newEmb.faces[fi].empty()) continue;
    Dart oldDart = newDartToOld.at(newEmb.faces[fi].front());
    if (uf.find(oldIdx.faceOf.at(oldDart)) == outerClass) {
      ONEP_CHECK(newOuter == -1);
      newOuter = fi;
    }
  }
  ONEP_CHECK(newOuter != -1);

  CombinatorialDrawing out;
  out.host = std::move(newHost);
  out.pairing = std::move(newPairing);
  out.planarization = std::move(newPlan);
  out.embedding = std::move(newEmb);
  out.outerFace = newOuter;
  out.embedding.outerFace = newOuter;
  for (int i = 0; i < out.pairing.size(); i++) {
    int x = out.planarization.crossingVertex(i);
    out.realized.push_back(rotationAlternates(out.embedding.rot[x], out.pairing.pairs[i]));
  }
  return out;
}

}  // namespace onep
