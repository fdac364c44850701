#ifndef TPK_CANONICAL_HPP
#define TPK_CANONICAL_HPP

#include <string>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

/// Hard size limit for canonical labeling (cost grows factorially beyond).
inline constexpr uint32_t kCanonicalMaxVertices = 12;

/// Total isomorphism invariant: equal codes iff isomorphic. The code is the
/// graph6 line of the canonically relabeled graph, where the canonical
/// ordering minimizes the column-major upper-triangle bit string over all
/// orderings consistent with iterated degree refinement. Decoding the code
/// yields the canonical representative.
/// Throws capability_error for graphs above kCanonicalMaxVertices.
std::string canonical_code(const Graph& g);

/// The minimizing ordering itself: position -> original vertex.
std::vector<uint32_t> canonical_ordering(const Graph& g);

}  // namespace tpk

#endif
