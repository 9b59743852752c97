#pragma once

#include <vector>

#include "onep/graph.h"
#include "onep/planarity.h"

namespace onep {

/// Enumerate the spherical embeddings of a connected planar graph, pairwise
/// non-equivalent up to homeomorphism including reflection. Outer faces are
/// not distinguished here; consumers pick them per embedding. `limit` caps
/// the number of results; the internal budget guards the enumeration itself
/// (throws ResourceExhausted when exceeded).
std::vector<PlanarEmbedding> enumerateEmbeddings(const Graph& g, int limit,
                                                 long long nodeBudget = 4'000'000);

/// Test oracle: brute force over all rotation systems with a genus filter.
std::vector<PlanarEmbedding> enumerateEmbeddingsBrute(const Graph& g, int limit,
                                                      long long nodeBudget = 4'000'000);

}  // namespace onep
