#pragma once

#include <iosfwd>
#include <string>

#include "onep/graph.h"

namespace onep {

/// Edge-list text: one "u v" per line, '#' starts a comment, ids are
/// whitespace-free tokens. Vertices are ordered by token (numeric-aware).
NamedGraph readEdgeList(std::istream& in);
NamedGraph readEdgeListFile(const std::string& path);
void writeEdgeList(std::ostream& out, const NamedGraph& g);

/// graph6 (single line); vertices named by their index.
NamedGraph readGraph6Line(const std::string& line);

/// Dispatch on extension: ".g6" -> graph6 (first non-empty line), else edge list.
NamedGraph readGraphAuto(const std::string& path);

/// Numeric-aware token order: integer tokens compare by value, then as strings.
bool tokenLess(const std::string& a, const std::string& b);

}  // namespace onep
