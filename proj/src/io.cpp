#include "spl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace spl {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
}

void expect_keys(const json& j, const std::string& where, const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
  if (!j.is_object()) fail(where, "expected object");
  for (const auto& [k, _] : j.items())
    if (!required.count(k) && !optional.count(k)) fail(where, "unknown field \"" + k + "\"");
  for (const auto& k : required)
    if (!j.contains(k)) fail(where, "missing field \"" + k + "\"");
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected array");
  return j;
}

const json& object_at(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected object");
  return j;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected string");
  return j.get<std::string>();
}

bool bool_at(const json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected boolean");
  return j.get<bool>();
}

Rational rational_at(const json& j, const std::string& where) {
  std::string s = string_at(j, where);
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Rational weight_at(const json& j, const std::string& where) {
  Rational r = rational_at(j, where);
  if (r.sign() < 0) fail(where, "negative weight");
  return r;
}

std::string idx(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Path path_from_array(const json& j, const std::string& where) {
  Path p;
  const auto& arr = array_at(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) p.nodes.push_back(string_at(arr[i], idx(where, i)));
  return p;
}

json path_to_array(const Path& p) { return json(p.nodes); }

Path path_from_key(const std::string& key, const std::string& where) {
  Path p = Path::from_key(key);
  for (const auto& n : p.nodes)
    if (n.empty()) fail(where, "malformed path key \"" + key + "\"");
  return p;
}

StrategyId strategy_from_key(const std::string& key, const std::string& where) {
  try {
    StrategyId s = StrategyId::from_key(key);
    if (s.path) path_from_key(s.path->key(), where);
    return s;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json rational_map(const std::map<std::string, Rational>& m) {
  json j = json::object();
  for (const auto& [k, x] : m) j[k] = x.str();
  return j;
}

std::map<std::string, Rational> rational_map_at(const json& j, const std::string& where) {
  std::map<std::string, Rational> out;
  for (const auto& [k, x] : object_at(j, where).items()) out[k] = weight_at(x, where + "." + k);
  return out;
}

json violation_to_json(const Violation& v) {
  json paths = json::array();
  for (const auto& p : v.paths) paths.push_back(p.key());
  return {{"condition", to_string(v.condition)}, {"node", v.node}, {"paths", paths},
          {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}};
}

json infeasibility_to_json(const Infeasibility& f) {
  json j = {{"kind", f.kind == Infeasibility::Kind::Total ? "total" : "capacity"},
            {"player", f.player}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}};
  if (f.strategy) j["strategy"] = f.strategy->key();
  return j;
}

json stability_json(const StabilityVerdict& v) {
  json violations = json::array();
  for (const auto& x : v.violations) violations.push_back(violation_to_json(x));
  return {{"stable", v.stable}, {"violations", violations}};
}

json equilibrium_json(const EquilibriumVerdict& v) {
  json inf = json::array();
  for (const auto& f : v.infeasibilities) inf.push_back(infeasibility_to_json(f));
  json imp = json::array();
  for (const auto& p : v.improving_players)
    imp.push_back({{"player", p.player}, {"payoff", p.payoff.str()}, {"best_response_payoff", p.best_value.str()},
                   {"best_response_weights", rational_map(p.best_weights)}});
  return {{"is_equilibrium", v.is_equilibrium}, {"infeasibilities", inf}, {"improving_players", imp}};
}

json path_weights_json(const PathWeights& w) {
  json j = json::object();
  for (const auto& [v, row] : w.entries()) {
    json r = json::object();
    for (const auto& [p, x] : row) r[p.key()] = x.str();
    j[v] = r;
  }
  return j;
}

json game_weights_json(const GameWeights& w) {
  json j = json::object();
  for (const auto& [v, row] : w.entries()) j[v] = rational_map(row);
  return j;
}

json instance_json(const FsppInstance& inst) {
  json paths = json::object();
  for (const auto& [v, ps] : inst.permitted) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(path_to_array(p));
    paths[v] = arr;
  }
  json prefs = json::object();
  for (const auto& [v, order] : inst.preferences) {
    json classes = json::array();
    for (const auto& cls : order.classes) {
      json c = json::array();
      for (const auto& p : cls) c.push_back(path_to_array(p));
      classes.push_back(c);
    }
    prefs[v] = classes;
  }
  return {{"destination", inst.destination}, {"nodes", inst.nodes}, {"paths", paths}, {"preferences", prefs}};
}

}  // namespace

FsppInstance parse_instance(const std::string& text) {
  json j = parse_json(text);
  expect_keys(j, "$", {"destination", "nodes", "paths", "preferences"});
  FsppInstance inst;
  inst.destination = string_at(j["destination"], "$.destination");
  const auto& nodes = array_at(j["nodes"], "$.nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) inst.nodes.push_back(string_at(nodes[i], idx("$.nodes", i)));
  for (const auto& [v, arr] : object_at(j["paths"], "$.paths").items()) {
    const std::string where = "$.paths." + v;
    auto& out = inst.permitted[v];
    const auto& ps = array_at(arr, where);
    for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(path_from_array(ps[i], idx(where, i)));
  }
  for (const auto& [v, arr] : object_at(j["preferences"], "$.preferences").items()) {
    const std::string where = "$.preferences." + v;
    auto& out = inst.preferences[v].classes;
    const auto& classes = array_at(arr, where);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& cls = array_at(classes[i], idx(where, i));
      out.emplace_back();
      for (std::size_t k = 0; k < cls.size(); ++k) out.back().push_back(path_from_array(cls[k], idx(idx(where, i), k)));
    }
  }
  return inst;
}

std::string emit_instance(const FsppInstance& inst) { return dump(instance_json(inst)); }

PathWeights parse_path_weights(const std::string& text) {
  json j = parse_json(text);
  PathWeights w;
  for (const auto& [v, row] : object_at(j, "$").items()) {
    for (const auto& [key, x] : object_at(row, "$." + v).items()) {
      const std::string where = "$." + v + "." + key;
      Path p = path_from_key(key, where);
      if (p.origin() != v) fail(where, "path does not start at node \"" + v + "\"");
      w.set(v, p, weight_at(x, where));
    }
  }
  return w;
}

std::string emit_path_weights(const PathWeights& w) { return dump(path_weights_json(w)); }

HypergraphGame parse_game(const std::string& text) {
  json j = parse_json(text);
  expect_keys(j, "$", {"players", "strategies", "edges"});
  HypergraphGame game;
  const auto& players = array_at(j["players"], "$.players");
  for (std::size_t i = 0; i < players.size(); ++i) game.players.push_back(string_at(players[i], idx("$.players", i)));
  for (const auto& [v, arr] : object_at(j["strategies"], "$.strategies").items()) {
    const std::string where = "$.strategies." + v;
    auto& out = game.strategies[v];
    const auto& ss = array_at(arr, where);
    for (std::size_t i = 0; i < ss.size(); ++i)
      out.push_back(strategy_from_key(string_at(ss[i], idx(where, i)), idx(where, i)));
  }
  for (const auto& [v, arr] : object_at(j["edges"], "$.edges").items()) {
    const std::string where = "$.edges." + v;
    auto& out = game.edges[v];
    const auto& es = array_at(arr, where);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string ew = idx(where, i);
      expect_keys(es[i], ew, {"id", "strategy", "members", "payoff"});
      Hyperedge e;
      e.id = string_at(es[i]["id"], ew + ".id");
      e.for_strategy = strategy_from_key(string_at(es[i]["strategy"], ew + ".strategy"), ew + ".strategy");
      e.owner = e.for_strategy.owner;
      const auto& ms = array_at(es[i]["members"], ew + ".members");
      for (std::size_t k = 0; k < ms.size(); ++k)
        e.members.push_back(strategy_from_key(string_at(ms[k], idx(ew + ".members", k)), idx(ew + ".members", k)));
      e.payoff = rational_at(es[i]["payoff"], ew + ".payoff");
      out.push_back(std::move(e));
    }
  }
  auto issues = validate_game(game);
  if (!issues.empty()) fail("$", issues.front());
  return game;
}

std::string emit_game(const HypergraphGame& game) {
  json strategies = json::object();
  for (const auto& [v, ss] : game.strategies) {
    json arr = json::array();
    for (const auto& s : ss) arr.push_back(s.key());
    strategies[v] = arr;
  }
  json edges = json::object();
  for (const auto& [v, es] : game.edges) {
    json arr = json::array();
    for (const auto& e : es) {
      json members = json::array();
      for (const auto& m : e.members) members.push_back(m.key());
      arr.push_back({{"id", e.id}, {"strategy", e.for_strategy.key()}, {"members", members}, {"payoff", e.payoff.str()}});
    }
    edges[v] = arr;
  }
  return dump({{"players", game.players}, {"strategies", strategies}, {"edges", edges}});
}

GameWeights parse_game_weights(const std::string& text) {
  json j = parse_json(text);
  GameWeights w;
  for (const auto& [v, row] : object_at(j, "$").items())
    for (const auto& [id, x] : rational_map_at(row, "$." + v)) w.set(v, id, x);
  return w;
}

std::string emit_game_weights(const GameWeights& w) { return dump(game_weights_json(w)); }

StabilityVerdict parse_stability_verdict(const std::string& text) {
  json j = parse_json(text);
  expect_keys(j, "$", {"stable", "violations"});
  StabilityVerdict v;
  v.stable = bool_at(j["stable"], "$.stable");
  const auto& vs = array_at(j["violations"], "$.violations");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = idx("$.violations", i);
    expect_keys(vs[i], where, {"condition", "node", "paths", "lhs", "rhs"});
    Violation x;
    std::string cond = string_at(vs[i]["condition"], where + ".condition");
    if (cond == "Unity") x.condition = Condition::Unity;
    else if (cond == "Tree") x.condition = Condition::Tree;
    else if (cond == "S1S2") x.condition = Condition::S1S2;
    else fail(where + ".condition", "unknown condition \"" + cond + "\"");
    x.node = string_at(vs[i]["node"], where + ".node");
    const auto& ps = array_at(vs[i]["paths"], where + ".paths");
    for (std::size_t k = 0; k < ps.size(); ++k)
      x.paths.push_back(path_from_key(string_at(ps[k], idx(where + ".paths", k)), idx(where + ".paths", k)));
    x.lhs = rational_at(vs[i]["lhs"], where + ".lhs");
    x.rhs = rational_at(vs[i]["rhs"], where + ".rhs");
    v.violations.push_back(std::move(x));
  }
  if (v.stable != v.violations.empty()) fail("$.stable", "inconsistent with violations");
  return v;
}

std::string emit_stability_verdict(const StabilityVerdict& v) { return dump(stability_json(v)); }

EquilibriumVerdict parse_equilibrium_verdict(const std::string& text) {
  json j = parse_json(text);
  expect_keys(j, "$", {"is_equilibrium", "infeasibilities", "improving_players"});
  EquilibriumVerdict v;
  v.is_equilibrium = bool_at(j["is_equilibrium"], "$.is_equilibrium");
  const auto& inf = array_at(j["infeasibilities"], "$.infeasibilities");
  for (std::size_t i = 0; i < inf.size(); ++i) {
    const std::string where = idx("$.infeasibilities", i);
    expect_keys(inf[i], where, {"kind", "player", "lhs", "rhs"}, {"strategy"});
    Infeasibility f;
    std::string kind = string_at(inf[i]["kind"], where + ".kind");
    if (kind == "total") f.kind = Infeasibility::Kind::Total;
    else if (kind == "capacity") f.kind = Infeasibility::Kind::Capacity;
    else fail(where + ".kind", "unknown kind \"" + kind + "\"");
    f.player = string_at(inf[i]["player"], where + ".player");
    if (inf[i].contains("strategy"))
      f.strategy = strategy_from_key(string_at(inf[i]["strategy"], where + ".strategy"), where + ".strategy");
    f.lhs = rational_at(inf[i]["lhs"], where + ".lhs");
    f.rhs = rational_at(inf[i]["rhs"], where + ".rhs");
    v.infeasibilities.push_back(std::move(f));
  }
  const auto& imp = array_at(j["improving_players"], "$.improving_players");
  for (std::size_t i = 0; i < imp.size(); ++i) {
    const std::string where = idx("$.improving_players", i);
    expect_keys(imp[i], where, {"player", "payoff", "best_response_payoff", "best_response_weights"});
    v.improving_players.push_back({string_at(imp[i]["player"], where + ".player"),
                                   rational_at(imp[i]["payoff"], where + ".payoff"),
                                   rational_at(imp[i]["best_response_payoff"], where + ".best_response_payoff"),
                                   rational_map_at(imp[i]["best_response_weights"], where + ".best_response_weights")});
  }
  if (v.is_equilibrium != (v.infeasibilities.empty() && v.improving_players.empty()))
    fail("$.is_equilibrium", "inconsistent with infeasibilities/improving_players");
  return v;
}

std::string emit_equilibrium_verdict(const EquilibriumVerdict& v) { return dump(equilibrium_json(v)); }

std::string emit_validation_report(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& i : r.issues) issues.push_back({{"kind", i.kind}, {"node", i.node}, {"detail", i.detail}});
  return dump({{"valid", r.valid()}, {"issues", issues}});
}

std::string emit_laminarity(const LaminarityResult& r) {
  json j = {{"laminar", r.pass}};
  if (!r.pass) j["counterexample"] = {{"player", r.player}, {"edges", {r.first_edge, r.second_edge}}};
  return dump(j);
}

std::string emit_search_report(const SearchReport& r) {
  json trace = json::array();
  for (const auto& round : r.trace) {
    json row = json::array();
    for (const auto& x : round) row.push_back(x.str());
    trace.push_back(row);
  }
  json j = {{"outcome", to_string(r.outcome)}, {"rounds", r.rounds}, {"weights", game_weights_json(r.weights)},
            {"trace", trace}};
  if (r.outcome == SearchOutcome::Cycle) j["period"] = r.period;
  return dump(j);
}

std::string emit_solutions(const std::vector<PathWeights>& solutions) {
  json arr = json::array();
  for (const auto& w : solutions) arr.push_back(path_weights_json(w));
  return dump({{"solutions", arr}});
}

std::string emit_crosscheck_report(const CrosscheckReport& r) {
  json lam = {{"laminar", r.laminarity.pass}};
  if (!r.laminarity.pass)
    lam["counterexample"] = {{"player", r.laminarity.player}, {"edges", {r.laminarity.first_edge, r.laminarity.second_edge}}};
  json dis = json::array();
  for (const auto& c : r.disagreements)
    dis.push_back({{"trial", c.trial}, {"weights", path_weights_json(c.weights)},
                   {"stability", stability_json(c.stability)}, {"equilibrium", equilibrium_json(c.equilibrium)}});
  return dump({{"trials", r.trials}, {"agreements", r.agreements}, {"stable", r.stable},
               {"equilibria", r.equilibria}, {"laminarity", lam}, {"disagreements", dis}});
}

std::string emit_counterexample(const FsppInstance& inst, const CrosscheckCase& c) {
  return dump({{"instance", instance_json(inst)}, {"trial", c.trial}, {"weights", path_weights_json(c.weights)},
               {"stability", stability_json(c.stability)}, {"equilibrium", equilibrium_json(c.equilibrium)}});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << contents;
}

}  // namespace spl
