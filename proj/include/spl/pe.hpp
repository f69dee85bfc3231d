#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spl/fspp.hpp"
#include "spl/rational.hpp"

namespace spl {

// A player's strategy: one of its permitted paths, or NoPath (N).
struct StrategyId {
  NodeId owner;
  std::optional<Path> path;  // nullopt = NoPath

  bool is_no_path() const { return !path.has_value(); }
  // "<owner>:<path-key>" or "<owner>:N"; also the id of the strategy's edge.
  std::string key() const;
  static StrategyId from_key(const std::string& key);

  friend bool operator==(const StrategyId&, const StrategyId&) = default;
  // Owner, then longer paths first, then lexicographic; NoPath last.
  friend bool operator<(const StrategyId& a, const StrategyId& b);
};

struct Hyperedge {
  std::string id;
  NodeId owner;
  StrategyId for_strategy;
  std::vector<StrategyId> members;  // sorted
  Rational payoff;

  bool contains(const StrategyId& s) const;
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// One-edge-per-strategy hypergraph game.
struct HypergraphGame {
  std::vector<NodeId> players;  // sorted
  std::map<NodeId, std::vector<StrategyId>> strategies;
  std::map<NodeId, std::vector<Hyperedge>> edges;

  const std::vector<Hyperedge>& edges_of(const NodeId& player) const;
  const Hyperedge* edge_for(const StrategyId& s) const;
  bool has_player(const NodeId& player) const;

  friend bool operator==(const HypergraphGame&, const HypergraphGame&) = default;
};

// Structural problems with a game; empty when well-formed.
std::vector<std::string> validate_game(const HypergraphGame& game);

// w_v(e) for a player's own edges. Zero entries are never stored.
class GameWeights {
 public:
  Rational get(const NodeId& player, const std::string& edge_id) const;
  void set(const NodeId& player, const std::string& edge_id, const Rational& w);
  // Replaces every weight of one player.
  void assign(const NodeId& player, const std::map<std::string, Rational>& row);
  const std::map<NodeId, std::map<std::string, Rational>>& entries() const { return w_; }

  friend bool operator==(const GameWeights&, const GameWeights&) = default;

 private:
  std::map<NodeId, std::map<std::string, Rational>> w_;
};

struct Infeasibility {
  enum class Kind { Total, Capacity } kind;
  NodeId player;
  std::optional<StrategyId> strategy;  // Capacity: the other player's strategy
  Rational lhs;  // Total: player's weight sum; Capacity: load on strategy
  Rational rhs;  // Total: 1; Capacity: strategy weight
};

struct BestResponse {
  std::map<std::string, Rational> weights;  // edge id -> weight, zeros omitted
  Rational value;
};

struct ImprovingPlayer {
  NodeId player;
  Rational payoff;
  Rational best_value;
  std::map<std::string, Rational> best_weights;
};

struct EquilibriumVerdict {
  bool is_equilibrium = true;
  std::vector<Infeasibility> infeasibilities;
  std::vector<ImprovingPlayer> improving_players;
};

// Throws Error if weights reference an unknown player or edge, or are negative.
void require_game_weights(const HypergraphGame& game, const GameWeights& w);

Rational strategy_weight(const HypergraphGame& game, const GameWeights& w, const StrategyId& s);
std::vector<Infeasibility> check_feasible(const HypergraphGame& game, const GameWeights& w);
// Feasibility restricted to one player's total and capacity constraints.
std::vector<Infeasibility> check_feasible_for(const HypergraphGame& game, const NodeId& player,
                                              const GameWeights& w);
Rational payoff(const HypergraphGame& game, const NodeId& player, const GameWeights& w);
// Exact LP best response of `player` against the others' weights in w.
BestResponse best_response(const HypergraphGame& game, const NodeId& player, const GameWeights& w);
EquilibriumVerdict is_personalized_equilibrium(const HypergraphGame& game, const GameWeights& w);

}  // namespace spl
