#include "spl/pe.hpp"

#include <algorithm>
#include <set>

#include "spl/lp.hpp"

namespace spl {

namespace {

const std::vector<Hyperedge> kNoEdges;

void require_player(const HypergraphGame& game, const NodeId& player) {
  if (!game.has_player(player)) throw Error("unknown player \"" + player + "\"");
}

// Other players' strategies that appear in some edge of `player`, sorted.
std::set<StrategyId> coupled_strategies(const HypergraphGame& game, const NodeId& player) {
  std::set<StrategyId> out;
  for (const auto& e : game.edges_of(player))
    for (const auto& m : e.members)
      if (m.owner != player) out.insert(m);
  return out;
}

}  // namespace

std::string StrategyId::key() const { return owner + ":" + (path ? path->key() : std::string("N")); }

StrategyId StrategyId::from_key(const std::string& key) {
  auto colon = key.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == key.size())
    throw Error("malformed strategy id \"" + key + "\"");
  StrategyId s{key.substr(0, colon), std::nullopt};
  std::string rest = key.substr(colon + 1);
  if (rest != "N") s.path = Path::from_key(rest);
  return s;
}

bool operator<(const StrategyId& a, const StrategyId& b) {
  if (a.owner != b.owner) return a.owner < b.owner;
  if (a.path.has_value() != b.path.has_value()) return a.path.has_value();
  if (!a.path) return false;
  return *a.path < *b.path;
}

bool Hyperedge::contains(const StrategyId& s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

const std::vector<Hyperedge>& HypergraphGame::edges_of(const NodeId& player) const {
  auto it = edges.find(player);
  return it == edges.end() ? kNoEdges : it->second;
}

const Hyperedge* HypergraphGame::edge_for(const StrategyId& s) const {
  for (const auto& e : edges_of(s.owner))
    if (e.for_strategy == s) return &e;
  return nullptr;
}

bool HypergraphGame::has_player(const NodeId& player) const {
  return std::binary_search(players.begin(), players.end(), player);
}

std::vector<std::string> validate_game(const HypergraphGame& game) {
  std::vector<std::string> issues;
  if (!std::is_sorted(game.players.begin(), game.players.end()) ||
      std::adjacent_find(game.players.begin(), game.players.end()) != game.players.end())
    issues.push_back("players must be sorted and unique");
  std::set<StrategyId> all;
  for (const auto& [player, strats] : game.strategies) {
    if (!game.has_player(player)) issues.push_back("strategies for unknown player " + player);
    int no_path = 0;
    for (const auto& s : strats) {
      if (s.owner != player) issues.push_back("strategy " + s.key() + " listed under " + player);
      if (s.is_no_path()) ++no_path;
      else if (s.path->size() < 2 || s.path->origin() != player)
        issues.push_back("path strategy " + s.key() + " does not start at its owner");
      if (!all.insert(s).second) issues.push_back("duplicate strategy " + s.key());
    }
    if (no_path > 1) issues.push_back("player " + player + " has more than one NoPath strategy");
  }
  for (const auto& [player, es] : game.edges) {
    if (!game.has_player(player)) issues.push_back("edges for unknown player " + player);
    auto sit = game.strategies.find(player);
    std::size_t n_strats = sit == game.strategies.end() ? 0 : sit->second.size();
    if (es.size() != n_strats) issues.push_back("player " + player + " needs exactly one edge per strategy");
    std::set<StrategyId> covered;
    for (const auto& e : es) {
      const std::string tag = "edge " + e.id + ": ";
      if (e.owner != player || e.for_strategy.owner != player) issues.push_back(tag + "owner mismatch");
      if (e.id != e.for_strategy.key()) issues.push_back(tag + "id must be " + e.for_strategy.key());
      if (!all.count(e.for_strategy)) issues.push_back(tag + "for unknown strategy");
      if (!covered.insert(e.for_strategy).second) issues.push_back(tag + "second edge for one strategy");
      if (!e.contains(e.for_strategy)) issues.push_back(tag + "does not contain its own strategy");
      if (e.for_strategy.is_no_path() && e.members.size() != 1) issues.push_back(tag + "NoPath edge must be a singleton");
      if (!std::is_sorted(e.members.begin(), e.members.end()) ||
          std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end())
        issues.push_back(tag + "members must be sorted and unique");
      for (const auto& m : e.members)
        if (!all.count(m)) issues.push_back(tag + "member " + m.key() + " is not a strategy");
      if (e.payoff < Rational(1)) issues.push_back(tag + "payoff below 1");
    }
  }
  for (const auto& [player, strats] : game.strategies)
    if (!strats.empty() && !game.edges.count(player)) issues.push_back("player " + player + " has no edges");
  return issues;
}

Rational GameWeights::get(const NodeId& player, const std::string& edge_id) const {
  auto it = w_.find(player);
  if (it == w_.end()) return 0;
  auto jt = it->second.find(edge_id);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

void GameWeights::set(const NodeId& player, const std::string& edge_id, const Rational& w) {
  if (w.is_zero()) {
    auto it = w_.find(player);
    if (it == w_.end()) return;
    it->second.erase(edge_id);
    if (it->second.empty()) w_.erase(it);
    return;
  }
  w_[player][edge_id] = w;
}

void GameWeights::assign(const NodeId& player, const std::map<std::string, Rational>& row) {
  w_.erase(player);
  for (const auto& [id, x] : row) set(player, id, x);
}

void require_game_weights(const HypergraphGame& game, const GameWeights& w) {
  for (const auto& [player, row] : w.entries()) {
    require_player(game, player);
    const auto& es = game.edges_of(player);
    for (const auto& [id, x] : row) {
      bool own = std::any_of(es.begin(), es.end(), [&](const Hyperedge& e) { return e.id == id; });
      if (!own) throw Error("player \"" + player + "\" has no edge \"" + id + "\"");
      if (x.sign() < 0) throw Error("negative weight on edge \"" + id + "\"");
    }
  }
}

Rational strategy_weight(const HypergraphGame& game, const GameWeights& w, const StrategyId& s) {
  const Hyperedge* e = game.edge_for(s);
  if (!e) throw Error("unknown strategy \"" + s.key() + "\"");
  return w.get(s.owner, e->id);
}

std::vector<Infeasibility> check_feasible_for(const HypergraphGame& game, const NodeId& player,
                                              const GameWeights& w) {
  std::vector<Infeasibility> out;
  Rational total;
  for (const auto& e : game.edges_of(player)) total += w.get(player, e.id);
  if (total != Rational(1)) out.push_back({Infeasibility::Kind::Total, player, std::nullopt, total, Rational(1)});
  for (const auto& s : coupled_strategies(game, player)) {
    Rational load;
    for (const auto& e : game.edges_of(player))
      if (e.contains(s)) load += w.get(player, e.id);
    Rational cap = strategy_weight(game, w, s);
    if (load > cap) out.push_back({Infeasibility::Kind::Capacity, player, s, load, cap});
  }
  return out;
}

std::vector<Infeasibility> check_feasible(const HypergraphGame& game, const GameWeights& w) {
  require_game_weights(game, w);
  std::vector<Infeasibility> out;
  for (const auto& player : game.players) {
    auto part = check_feasible_for(game, player, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Rational payoff(const HypergraphGame& game, const NodeId& player, const GameWeights& w) {
  require_player(game, player);
  Rational total;
  for (const auto& e : game.edges_of(player)) total += w.get(player, e.id) * e.payoff;
  return total;
}

BestResponse best_response(const HypergraphGame& game, const NodeId& player, const GameWeights& w) {
  require_player(game, player);
  const auto& es = game.edges_of(player);
  LinearProgram lp;
  LinearConstraint total{{}, Relation::Equal, Rational(1)};
  for (const auto& e : es) {
    lp.variables.push_back(e.id);
    lp.objective[e.id] = e.payoff;
    total.coeffs[e.id] = Rational(1);
  }
  lp.constraints.push_back(std::move(total));
  for (const auto& s : coupled_strategies(game, player)) {
    LinearConstraint cap{{}, Relation::LessEqual, strategy_weight(game, w, s)};
    for (const auto& e : es)
      if (e.contains(s)) cap.coeffs[e.id] = Rational(1);
    lp.constraints.push_back(std::move(cap));
  }
  LpResult res = lp_maximize(lp);
  if (res.status != LpStatus::Optimal)
    throw Error("best response of \"" + player + "\" is not solvable (player has no NoPath edge?)");
  BestResponse br;
  br.value = res.value;
  for (const auto& [id, x] : res.assignment)
    if (!x.is_zero()) br.weights[id] = x;
  return br;
}

EquilibriumVerdict is_personalized_equilibrium(const HypergraphGame& game, const GameWeights& w) {
  EquilibriumVerdict verdict;
  verdict.infeasibilities = check_feasible(game, w);
  for (const auto& player : game.players) {
    BestResponse br = best_response(game, player, w);
    Rational current = payoff(game, player, w);
    if (current != br.value) verdict.improving_players.push_back({player, current, br.value, br.weights});
  }
  verdict.is_equilibrium = verdict.infeasibilities.empty() && verdict.improving_players.empty();
  return verdict;
}

}  // namespace spl
