#include "spl/reduction.hpp"

#include <algorithm>

namespace spl {

HypergraphGame reduce(const FsppInstance& inst) {
  auto report = validate_instance(inst);
  if (!report.valid())
    throw Error("invalid instance: " + report.issues.front().kind + " at \"" + report.issues.front().node +
                "\": " + report.issues.front().detail);

  HypergraphGame game;
  game.players = inst.nodes;
  std::sort(game.players.begin(), game.players.end());
  for (const auto& v : game.players) {
    std::vector<Path> paths = inst.paths_of(v);
    std::sort(paths.begin(), paths.end());
    auto& strats = game.strategies[v];
    auto& edges = game.edges[v];
    for (const auto& p : paths) {
      StrategyId s{v, p};
      Hyperedge e{s.key(), v, s, {s}, Rational(rank(inst, v, p) + 1)};
      for (const auto& suffix : proper_suffixes(p))
        if (inst.is_permitted(suffix.origin(), suffix)) e.members.push_back({suffix.origin(), suffix});
      std::sort(e.members.begin(), e.members.end());
      strats.push_back(s);
      edges.push_back(std::move(e));
    }
    StrategyId none{v, std::nullopt};
    strats.push_back(none);
    edges.push_back({none.key(), v, none, {none}, Rational(1)});
  }
  return game;
}

GameWeights transport_to_game(const FsppInstance& inst, const PathWeights& w) {
  require_weights_on(inst, w);
  GameWeights out;
  for (const auto& v : inst.nodes) {
    Rational total;
    for (const auto& p : inst.paths_of(v)) {
      Rational x = w.get(v, p);
      out.set(v, StrategyId{v, p}.key(), x);
      total += x;
    }
    if (total > Rational(1))
      throw Error("Unity violated at \"" + v + "\": path weights sum to " + total.str());
    out.set(v, StrategyId{v, std::nullopt}.key(), Rational(1) - total);
  }
  return out;
}

void require_reduced_form(const HypergraphGame& game) {
  auto issues = validate_game(game);
  if (!issues.empty()) throw Error("malformed game: " + issues.front());
  for (const auto& v : game.players) {
    int no_path = 0;
    for (const auto& e : game.edges_of(v)) {
      if (e.for_strategy.is_no_path()) {
        ++no_path;
        if (e.payoff != Rational(1)) throw Error("not in reduced form: NoPath edge " + e.id + " payoff is not 1");
        continue;
      }
      const Path& p = *e.for_strategy.path;
      auto suffixes = proper_suffixes(p);
      for (const auto& m : e.members) {
        if (m == e.for_strategy) continue;
        bool is_suffix = m.path && std::find(suffixes.begin(), suffixes.end(), *m.path) != suffixes.end() &&
                         m.owner == m.path->origin();
        if (!is_suffix) throw Error("not in reduced form: edge " + e.id + " holds non-suffix " + m.key());
      }
    }
    if (no_path != 1) throw Error("not in reduced form: player \"" + v + "\" lacks a single NoPath edge");
  }
}

PathWeights transport_to_fspp(const HypergraphGame& game, const GameWeights& w) {
  require_reduced_form(game);
  require_game_weights(game, w);
  PathWeights out;
  for (const auto& v : game.players)
    for (const auto& e : game.edges_of(v))
      if (!e.for_strategy.is_no_path()) out.set(v, *e.for_strategy.path, w.get(v, e.id));
  return out;
}

LaminarityResult check_laminarity(const HypergraphGame& game) {
  auto subset = [](const std::vector<StrategyId>& a, const std::vector<StrategyId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& v : game.players) {
    const auto& es = game.edges_of(v);
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i].for_strategy.is_no_path()) continue;
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (es[j].for_strategy.is_no_path()) continue;
        std::vector<StrategyId> common;
        std::set_intersection(es[i].members.begin(), es[i].members.end(), es[j].members.begin(),
                              es[j].members.end(), std::back_inserter(common));
        if (common.empty() || subset(es[i].members, es[j].members) || subset(es[j].members, es[i].members))
          continue;
        return {false, v, es[i].id, es[j].id};
      }
    }
  }
  return {};
}

}  // namespace spl
