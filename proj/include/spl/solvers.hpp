#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spl/fspp.hpp"
#include "spl/lp.hpp"
#include "spl/pe.hpp"
#include "spl/reduction.hpp"

namespace spl {

enum class SearchOutcome { Converged, Cycle, Exhausted };
std::string to_string(SearchOutcome o);

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  GameWeights weights;  // final state
  int rounds = 0;       // Converged: rounds that changed something; otherwise rounds run
  int period = 0;       // Cycle only
  std::vector<std::vector<Rational>> trace;  // payoffs per round, players in sorted order
};

// Sequential best-response dynamics. Players move in sorted order; a player
// keeps its weights when they are already feasible and optimal against the
// current state, otherwise it adopts the solver's best response. Stops after
// a round without changes (Converged), on a repeated state (Cycle), or after
// max_rounds rounds (Exhausted).
SearchReport best_response_dynamics(const HypergraphGame& game, const GameWeights& init, int max_rounds);

// Every player fully on its NoPath edge.
GameWeights all_no_path(const HypergraphGame& game);

enum class SampleMode { UnityOnly, UnityAndTree };

// Pseudo-random weights whose values are multiples of 1/denominator_bound.
// UnityAndTree additionally best-responds some nodes greedily (to hit tight
// and saturated configurations) and then projects onto the Tree condition by
// shrinking loads through each suffix, shortest suffix first.
PathWeights sample_weights(const FsppInstance& inst, std::uint64_t seed, int denominator_bound, SampleMode mode);

// Runs dynamics on the reduced game from the all-NoPath profile and from
// `attempts` seeded feasible starts, transports each converged profile back
// and keeps the distinct ones that pass is_stable. Sound, not complete.
std::vector<PathWeights> search_stable(const FsppInstance& inst, int max_rounds, std::uint64_t seed,
                                       int attempts = 8);

struct CrosscheckCase {
  int trial = 0;
  PathWeights weights;
  StabilityVerdict stability;
  EquilibriumVerdict equilibrium;
};

struct CrosscheckReport {
  int trials = 0;
  int agreements = 0;
  int stable = 0;
  int equilibria = 0;
  LaminarityResult laminarity;
  std::vector<CrosscheckCase> disagreements;
};

// Compares is_stable(w') with is_personalized_equilibrium of the transported
// profile over `trials` sampled Unity+Tree-feasible weight vectors.
CrosscheckReport crosscheck_theorem(const FsppInstance& inst, int trials, std::uint64_t seed,
                                    int denominator_bound = 6);

}  // namespace spl
