#ifndef NETGLUE_ISOMORPHISM_HPP
#define NETGLUE_ISOMORPHISM_HPP

#include <cstddef>

#include "netglue/digraph.hpp"

namespace netglue {

inline constexpr std::size_t kDefaultIsoBound = 4096;

/// Exact isomorphism test: iterated degree refinement, then backtracking
/// within color classes. Throws SizeBoundExceeded above `max_vertices`.
bool isomorphic(const Digraph& g, const Digraph& h,
                std::size_t max_vertices = kDefaultIsoBound);

}  // namespace netglue

#endif
