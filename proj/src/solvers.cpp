#include "spl/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spl/random.hpp"

namespace spl {

namespace {

std::string state_key(const GameWeights& w) {
  std::string key;
  for (const auto& [player, row] : w.entries()) {
    key += player;
    key += '{';
    for (const auto& [id, x] : row) key += id + "=" + x.str() + ";";
    key += '}';
  }
  return key;
}

// Weights in units of 1/bound, per node and path.
using Units = std::map<NodeId, std::map<Path, std::int64_t>>;

std::int64_t unit(const Units& u, const NodeId& v, const Path& p) {
  auto it = u.find(v);
  if (it == u.end()) return 0;
  auto jt = it->second.find(p);
  return jt == it->second.end() ? 0 : jt->second;
}

std::vector<NodeId> sorted_nodes(const FsppInstance& inst) {
  std::vector<NodeId> out = inst.nodes;
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy fill of v's paths in preference order (random order inside a tie
// class) up to the remaining capacity of every suffix.
void greedy_fill(const FsppInstance& inst, Units& u, const NodeId& v, std::int64_t bound, Rng& rng) {
  auto it = inst.preferences.find(v);
  if (it == inst.preferences.end()) return;
  u[v].clear();
  std::int64_t budget = bound;
  std::map<Path, std::int64_t> used;
  for (auto cls : it->second.classes) {
    rng.shuffle(cls);
    for (const auto& p : cls) {
      std::int64_t amount = budget;
      auto suffixes = proper_suffixes(p);
      for (const auto& s : suffixes)
        if (inst.is_permitted(s.origin(), s)) amount = std::min(amount, unit(u, s.origin(), s) - used[s]);
      amount = std::max<std::int64_t>(amount, 0);
      u[v][p] = amount;
      budget -= amount;
      for (const auto& s : suffixes) used[s] += amount;
    }
  }
}

// Shrinks loads until every Tree constraint holds. Constraints are handled
// shortest suffix first: shrinking paths through S only touches longer
// paths, so earlier constraints stay satisfied.
void project_tree(const FsppInstance& inst, Units& u) {
  std::set<Path> suffixes;
  for (const auto& v : inst.nodes)
    for (const auto& p : inst.paths_of(v))
      for (auto& s : proper_suffixes(p)) suffixes.insert(std::move(s));
  std::vector<Path> order(suffixes.begin(), suffixes.end());
  std::stable_sort(order.begin(), order.end(), [](const Path& a, const Path& b) { return a.size() < b.size(); });

  for (const auto& s : order) {
    const std::int64_t cap = unit(u, s.origin(), s);
    for (const auto& v : sorted_nodes(inst)) {
      if (v == s.origin()) continue;
      auto through = pi_v_S(inst, v, s);
      std::int64_t load = 0;
      for (const auto& r : through) load += unit(u, v, r);
      if (load <= cap) continue;
      for (const auto& r : through) u[v][r] = unit(u, v, r) * cap / load;
    }
  }
}

}  // namespace

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Converged: return "Converged";
    case SearchOutcome::Cycle: return "Cycle";
    case SearchOutcome::Exhausted: return "Exhausted";
  }
  return "?";
}

GameWeights all_no_path(const HypergraphGame& game) {
  GameWeights w;
  for (const auto& v : game.players)
    for (const auto& e : game.edges_of(v))
      if (e.for_strategy.is_no_path()) w.set(v, e.id, Rational(1));
  return w;
}

SearchReport best_response_dynamics(const HypergraphGame& game, const GameWeights& init, int max_rounds) {
  SearchReport report;
  report.weights = init;
  std::map<std::string, int> seen{{state_key(init), 0}};
  for (int round = 1; round <= max_rounds; ++round) {
    bool changed = false;
    for (const auto& v : game.players) {
      BestResponse br = best_response(game, v, report.weights);
      bool keep = check_feasible_for(game, v, report.weights).empty() && payoff(game, v, report.weights) == br.value;
      if (keep) continue;
      report.weights.assign(v, br.weights);
      changed = true;
    }
    std::vector<Rational> payoffs;
    for (const auto& v : game.players) payoffs.push_back(payoff(game, v, report.weights));
    report.trace.push_back(std::move(payoffs));
    if (!changed) {
      report.outcome = SearchOutcome::Converged;
      report.rounds = round - 1;
      return report;
    }
    auto [it, fresh] = seen.emplace(state_key(report.weights), round);
    if (!fresh) {
      report.outcome = SearchOutcome::Cycle;
      report.rounds = round;
      report.period = round - it->second;
      return report;
    }
  }
  report.outcome = SearchOutcome::Exhausted;
  report.rounds = max_rounds;
  return report;
}

PathWeights sample_weights(const FsppInstance& inst, std::uint64_t seed, int denominator_bound, SampleMode mode) {
  if (denominator_bound < 1) throw Error("sample_weights: denominator bound must be >= 1");
  const std::int64_t bound = denominator_bound;
  Rng rng(seed);
  Units u;
  for (const auto& v : sorted_nodes(inst)) {
    std::vector<Path> paths = inst.paths_of(v);
    if (paths.empty()) continue;
    std::sort(paths.begin(), paths.end());
    rng.shuffle(paths);
    const bool saturate = rng.chance(1, 2);
    std::int64_t remaining = saturate ? bound : rng.between(0, bound);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      std::int64_t k = (i + 1 == paths.size()) ? remaining : rng.between(0, remaining);
      u[v][paths[i]] = k;
      remaining -= k;
    }
  }

  if (mode == SampleMode::UnityAndTree) {
    for (const auto& v : sorted_nodes(inst))
      if (rng.chance(1, 2)) greedy_fill(inst, u, v, bound, rng);
    project_tree(inst, u);
  }

  PathWeights w;
  for (const auto& [v, row] : u)
    for (const auto& [p, k] : row) w.set(v, p, Rational(k, bound));
  return w;
}

std::vector<PathWeights> search_stable(const FsppInstance& inst, int max_rounds, std::uint64_t seed, int attempts) {
  HypergraphGame game = reduce(inst);
  std::vector<PathWeights> found;
  for (int attempt = 0; attempt <= attempts; ++attempt) {
    GameWeights init = attempt == 0
                           ? all_no_path(game)
                           : transport_to_game(inst, sample_weights(inst, mix_seed(seed, static_cast<std::uint64_t>(attempt)),
                                                                    6, SampleMode::UnityAndTree));
    SearchReport run = best_response_dynamics(game, init, max_rounds);
    if (run.outcome != SearchOutcome::Converged) continue;
    PathWeights w = transport_to_fspp(game, run.weights);
    if (!is_stable(inst, w).stable) continue;
    if (std::find(found.begin(), found.end(), w) == found.end()) found.push_back(std::move(w));
  }
  return found;
}

CrosscheckReport crosscheck_theorem(const FsppInstance& inst, int trials, std::uint64_t seed, int denominator_bound) {
  CrosscheckReport report;
  HypergraphGame game = reduce(inst);
  report.laminarity = check_laminarity(game);
  for (int trial = 0; trial < trials; ++trial) {
    PathWeights w = sample_weights(inst, mix_seed(seed, static_cast<std::uint64_t>(trial)), denominator_bound,
                                   SampleMode::UnityAndTree);
    StabilityVerdict stability = is_stable(inst, w);
    EquilibriumVerdict equilibrium = is_personalized_equilibrium(game, transport_to_game(inst, w));
    ++report.trials;
    report.stable += stability.stable;
    report.equilibria += equilibrium.is_equilibrium;
    if (stability.stable == equilibrium.is_equilibrium) ++report.agreements;
    else report.disagreements.push_back({trial, std::move(w), std::move(stability), std::move(equilibrium)});
  }
  return report;
}

}  // namespace spl
