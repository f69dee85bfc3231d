#include "spl/fspp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spl {

namespace {

const std::vector<Path> kNoPaths;

bool bad_id(const NodeId& id) {
  return id.empty() || id.find(',') != std::string::npos || id.find(':') != std::string::npos;
}

// Index of the preference class holding p, or -1.
int class_index(const FsppInstance& inst, const NodeId& v, const Path& p) {
  auto it = inst.preferences.find(v);
  if (it == inst.preferences.end()) return -1;
  const auto& classes = it->second.classes;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), p) != classes[i].end())
      return static_cast<int>(i);
  return -1;
}

void require_node(const FsppInstance& inst, const NodeId& v) {
  if (!inst.has_node(v)) throw Error("unknown node \"" + v + "\"");
}

void require_permitted(const FsppInstance& inst, const NodeId& v, const Path& p) {
  require_node(inst, v);
  if (!inst.is_permitted(v, p))
    throw Error("path " + p.key() + " is not permitted for node \"" + v + "\"");
}

std::vector<NodeId> sorted_nodes(const FsppInstance& inst) {
  std::vector<NodeId> out = inst.nodes;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> sorted_paths(const FsppInstance& inst, const NodeId& v) {
  std::vector<Path> out = inst.paths_of(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string Path::key() const {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ',';
    out += nodes[i];
  }
  return out;
}

Path Path::from_key(const std::string& key) {
  Path p;
  std::string part;
  std::istringstream in(key);
  while (std::getline(in, part, ',')) p.nodes.push_back(part);
  if (!key.empty() && key.back() == ',') p.nodes.emplace_back();
  return p;
}

const std::vector<Path>& FsppInstance::paths_of(const NodeId& v) const {
  auto it = permitted.find(v);
  return it == permitted.end() ? kNoPaths : it->second;
}

bool FsppInstance::has_node(const NodeId& v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

bool FsppInstance::is_permitted(const NodeId& v, const Path& p) const {
  const auto& ps = paths_of(v);
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.kind == kind; });
}

Rational PathWeights::get(const NodeId& v, const Path& p) const {
  auto it = w_.find(v);
  if (it == w_.end()) return 0;
  auto jt = it->second.find(p);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

void PathWeights::set(const NodeId& v, const Path& p, const Rational& w) {
  if (w.is_zero()) {
    auto it = w_.find(v);
    if (it == w_.end()) return;
    it->second.erase(p);
    if (it->second.empty()) w_.erase(it);
    return;
  }
  w_[v][p] = w;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Unity: return "Unity";
    case Condition::Tree: return "Tree";
    case Condition::S1S2: return "S1S2";
  }
  return "?";
}

ValidationReport validate_instance(const FsppInstance& inst) {
  ValidationReport report;
  auto issue = [&](std::string kind, const NodeId& node, std::string detail) {
    report.issues.push_back({std::move(kind), node, std::move(detail)});
  };

  if (bad_id(inst.destination)) issue("bad-id", inst.destination, "destination id is empty or contains ',' or ':'");
  std::set<NodeId> seen;
  for (const auto& v : inst.nodes) {
    if (bad_id(v)) issue("bad-id", v, "node id is empty or contains ',' or ':'");
    if (v == inst.destination) issue("destination-is-node", v, "destination listed among nodes");
    if (!seen.insert(v).second) issue("duplicate-node", v, "node listed twice");
  }
  if (inst.permitted.count(inst.destination))
    issue("destination-is-node", inst.destination, "destination has permitted paths");
  for (const auto& [v, _] : inst.permitted)
    if (!seen.count(v) && v != inst.destination) issue("unknown-node", v, "paths declared for unknown node");
  for (const auto& [v, _] : inst.preferences)
    if (!seen.count(v)) issue("unknown-node", v, "preferences declared for unknown node");

  for (const auto& [v, paths] : inst.permitted) {
    std::set<Path> distinct;
    for (const auto& p : paths) {
      const std::string k = p.key();
      if (!distinct.insert(p).second) issue("duplicate-path", v, k);
      if (p.size() < 2) {
        issue("too-short", v, k);
        continue;
      }
      if (p.origin() != v) issue("wrong-origin", v, k);
      if (p.last() != inst.destination) issue("wrong-endpoint", v, k);
      std::set<NodeId> on_path(p.nodes.begin(), p.nodes.end());
      if (on_path.size() != p.size()) issue("not-simple", v, k);
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!seen.count(p.nodes[i])) issue("unknown-node", v, k + " visits unknown node \"" + p.nodes[i] + "\"");
      if (p.last() != inst.destination) continue;
      for (const auto& s : proper_suffixes(p))
        if (!inst.is_permitted(s.origin(), s))
          issue("suffix-closure", v, k + " has unpermitted suffix " + s.key());
    }
  }

  for (const auto& v : inst.nodes) {
    const auto& paths = inst.paths_of(v);
    auto it = inst.preferences.find(v);
    std::vector<Path> ranked;
    if (it != inst.preferences.end()) {
      for (const auto& cls : it->second.classes) {
        if (cls.empty()) issue("preference-partition", v, "empty preference class");
        ranked.insert(ranked.end(), cls.begin(), cls.end());
      }
    }
    std::multiset<Path> ranked_set(ranked.begin(), ranked.end());
    for (const auto& p : paths)
      if (ranked_set.count(p) != 1)
        issue("preference-partition", v, p.key() + " ranked " + std::to_string(ranked_set.count(p)) + " times");
    for (const auto& p : ranked)
      if (std::find(paths.begin(), paths.end(), p) == paths.end())
        issue("preference-partition", v, p.key() + " ranked but not permitted");
  }
  return report;
}

std::vector<Path> proper_suffixes(const Path& p) {
  std::vector<Path> out;
  for (std::size_t start = 1; start + 2 <= p.size(); ++start)
    out.emplace_back(std::vector<NodeId>(p.nodes.begin() + static_cast<long>(start), p.nodes.end()));
  return out;
}

std::vector<Path> pi_v_S(const FsppInstance& inst, const NodeId& v, const Path& s) {
  require_node(inst, v);
  std::vector<Path> out;
  for (const auto& p : inst.paths_of(v)) {
    if (p.size() < s.size()) continue;
    if (std::equal(s.nodes.begin(), s.nodes.end(), p.nodes.end() - static_cast<long>(s.size())))
      out.push_back(p);
  }
  return out;
}

int rank(const FsppInstance& inst, const NodeId& v, const Path& p) {
  require_permitted(inst, v, p);
  int idx = class_index(inst, v, p);
  if (idx < 0) throw Error("path " + p.key() + " is missing from the preferences of \"" + v + "\"");
  const auto& classes = inst.preferences.at(v).classes;
  int count = 0;
  for (std::size_t i = static_cast<std::size_t>(idx); i < classes.size(); ++i)
    count += static_cast<int>(classes[i].size());
  return count;
}

bool weakly_prefers(const FsppInstance& inst, const NodeId& v, const Path& p, const Path& q) {
  int ip = class_index(inst, v, p);
  int iq = class_index(inst, v, q);
  if (ip < 0 || iq < 0) throw Error("path not ranked for node \"" + v + "\"");
  return ip <= iq;
}

void require_weights_on(const FsppInstance& inst, const PathWeights& w) {
  for (const auto& [v, row] : w.entries()) {
    for (const auto& [p, x] : row) {
      require_permitted(inst, v, p);
      if (x.sign() < 0) throw Error("negative weight on " + p.key());
    }
  }
}

std::vector<UnityResult> check_unity(const FsppInstance& inst, const PathWeights& w) {
  std::vector<UnityResult> out;
  for (const auto& v : sorted_nodes(inst)) {
    Rational sum;
    for (const auto& p : inst.paths_of(v)) sum += w.get(v, p);
    out.push_back({v, sum, sum <= Rational(1)});
  }
  return out;
}

std::vector<TreeViolation> check_tree(const FsppInstance& inst, const PathWeights& w) {
  std::vector<TreeViolation> out;
  for (const auto& v : sorted_nodes(inst)) {
    std::set<Path> through;
    for (const auto& p : inst.paths_of(v))
      for (auto& s : proper_suffixes(p))
        if (inst.is_permitted(s.origin(), s)) through.insert(std::move(s));
    for (const auto& s : through) {
      Rational load;
      for (const auto& r : pi_v_S(inst, v, s)) load += w.get(v, r);
      Rational cap = w.get(s.origin(), s);
      if (load > cap) out.push_back({v, s, load, cap});
    }
  }
  return out;
}

StabilityAt check_stability_at(const FsppInstance& inst, const PathWeights& w, const NodeId& v,
                               const Path& q) {
  require_permitted(inst, v, q);
  Rational at_least_q;
  for (const auto& p : inst.paths_of(v))
    if (weakly_prefers(inst, v, p, q)) at_least_q += w.get(v, p);
  if (at_least_q == Rational(1)) return S1{};

  for (const auto& s : proper_suffixes(q)) {
    if (!inst.is_permitted(s.origin(), s)) continue;
    Rational load;
    bool only_preferred = true;
    for (const auto& r : pi_v_S(inst, v, s)) {
      Rational x = w.get(v, r);
      load += x;
      if (x.sign() > 0 && !weakly_prefers(inst, v, r, q)) only_preferred = false;
    }
    if (only_preferred && load == w.get(s.origin(), s)) return S2{s};
  }
  return Unstable{};
}

StabilityVerdict is_stable(const FsppInstance& inst, const PathWeights& w) {
  auto report = validate_instance(inst);
  if (!report.valid())
    throw Error("invalid instance: " + report.issues.front().kind + " at \"" + report.issues.front().node +
                "\": " + report.issues.front().detail);
  require_weights_on(inst, w);

  StabilityVerdict verdict;
  for (const auto& u : check_unity(inst, w))
    if (!u.holds) verdict.violations.push_back({Condition::Unity, u.node, {}, u.sum, Rational(1)});
  for (const auto& t : check_tree(inst, w))
    verdict.violations.push_back({Condition::Tree, t.node, {t.suffix}, t.load, t.capacity});
  for (const auto& v : sorted_nodes(inst)) {
    for (const auto& q : sorted_paths(inst, v)) {
      if (!std::holds_alternative<Unstable>(check_stability_at(inst, w, v, q))) continue;
      Rational at_least_q;
      for (const auto& p : inst.paths_of(v))
        if (weakly_prefers(inst, v, p, q)) at_least_q += w.get(v, p);
      verdict.violations.push_back({Condition::S1S2, v, {q}, at_least_q, Rational(1)});
    }
  }
  verdict.stable = verdict.violations.empty();
  return verdict;
}

}  // namespace spl
