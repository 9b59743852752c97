#include "onep/io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace onep {

bool tokenLess(const std::string& a, const std::string& b) {
  auto isNumeric = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); i++)
      if (!std::isdigit((unsigned char)s[i])) return false;
    return true;
  };
  bool na = isNumeric(a), nb = isNumeric(b);
  if (na && nb) {
    long long va = std::stoll(a), vb = std::stoll(b);
    if (va != vb) return va < vb;
    return a < b;
  }
  if (na != nb) return na;  // numbers before words
  return a < b;
}

NamedGraph readEdgeList(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> rawEdges;
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw Error(ErrorCode::InvalidInput, "edge line with a single token: " + u);
    if (ls >> extra) throw Error(ErrorCode::InvalidInput, "edge line with extra tokens");
    rawEdges.push_back({u, v});
    tokens.push_back(u);
    tokens.push_back(v);
  }
  std::sort(tokens.begin(), tokens.end(), tokenLess);
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  GraphBuilder builder;
  for (const auto& t : tokens) builder.addVertex(t);
  for (const auto& [u, v] : rawEdges) builder.addEdge(u, v);
  return builder.build();
}

NamedGraph readEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return readEdgeList(in);
}

void writeEdgeList(std::ostream& out, const NamedGraph& g) {
  for (const auto& [u, v] : g.graph.edges) out << g.names[u] << " " << g.names[v] << "\n";
}

NamedGraph readGraph6Line(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty graph6 line");
  size_t pos = 0;
  auto byte = [&](size_t i) -> int {
    if (i >= s.size()) throw Error(ErrorCode::InvalidInput, "truncated graph6");
    int c = (unsigned char)s[i];
    if (c < 63 || c > 126) throw Error(ErrorCode::InvalidInput, "bad graph6 byte");
    return c - 63;
  };
  long long n;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    // 126 marker: 3-byte n (or 6-byte for the huge form, not needed here)
    if (s.size() >= 4 && (unsigned char)s[1] != 126) {
      n = ((long long)byte(1) << 12) | ((long long)byte(2) << 6) | byte(3);
      pos = 4;
    } else {
      throw Error(ErrorCode::TooLarge, "graph6 with >= 2^18 vertices not supported");
    }
  }
  std::vector<Edge> edges;
  int bit = 0;
  size_t idx = pos;
  int current = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++) {
      if (bit == 0) {
        current = byte(idx++);
        bit = 6;
      }
      bit--;
      if ((current >> bit) & 1) edges.push_back({i, j});
    }
  }
  Graph g((int)n, std::move(edges));
  std::vector<std::string> names;
  for (int v = 0; v < g.n; v++) names.push_back(std::to_string(v));
  return NamedGraph{std::move(g), std::move(names)};
}

NamedGraph readGraphAuto(const std::string& path) {
  bool g6 = path.size() >= 3 && path.substr(path.size() - 3) == ".g6";
  if (!g6) return readEdgeListFile(path);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) return readGraph6Line(line);
  }
  throw Error(ErrorCode::InvalidInput, "no graph6 line in " + path);
}

}  // namespace onep
