#pragma once

#include <cstdint>

#include "spl/fspp.hpp"

namespace spl {

// Nodes "1".."n" in a line; node i permits only (i, i+1, ..., n, d).
FsppInstance gen_chain(int n);

// k nodes on a ring around "d". Node i permits (i, d) and (i, i+1 mod k, d)
// and strictly prefers the path through its neighbour. k = 2 is DISAGREE.
FsppInstance gen_disagree(int k);

// Random graph on n nodes plus "d"; each node takes up to max_paths of its
// shortest simple paths, ranked by a random order with occasional ties.
// Missing suffixes are then added as least-preferred paths.
FsppInstance gen_random(int n, int max_paths, std::uint64_t seed);

}  // namespace spl
