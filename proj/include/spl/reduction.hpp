#pragma once

#include <optional>
#include <string>

#include "spl/fspp.hpp"
#include "spl/pe.hpp"

namespace spl {

// Builds the hypergraph game of an FSPP instance. Player v gets one edge per
// permitted path P, holding P and every permitted proper suffix of P, with
// payoff rank(P) + 1, plus a singleton NoPath edge with payoff 1.
HypergraphGame reduce(const FsppInstance& inst);

// w_v(P') = w'_v(P) and w_v(N') = 1 - sum_P w'_v(P). Throws Error when a
// node's path weights exceed 1.
GameWeights transport_to_game(const FsppInstance& inst, const PathWeights& w);

// w'_v(P) = w_v(P'); NoPath weights are dropped. Throws Error unless the
// game has the shape produced by reduce().
PathWeights transport_to_fspp(const HypergraphGame& game, const GameWeights& w);

// Throws Error unless every player owns exactly one NoPath singleton edge and
// each path edge holds its own path plus only proper suffixes of it.
void require_reduced_form(const HypergraphGame& game);

struct LaminarityResult {
  bool pass = true;
  NodeId player;
  std::string first_edge, second_edge;  // the violating pair when !pass
};

// Checks that each player's path edges are pairwise disjoint or nested.
LaminarityResult check_laminarity(const HypergraphGame& game);

}  // namespace spl
