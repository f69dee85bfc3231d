#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spl/rational.hpp"

namespace spl {

// Raised for precondition failures: unknown nodes, unpermitted paths,
// invalid instances. Checkers report property failures as data instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NodeId = std::string;

// A simple path ending at the destination. The ordering (longer first, then
// lexicographic by node ids) is the canonical path order used everywhere.
struct Path {
  std::vector<NodeId> nodes;

  Path() = default;
  Path(std::initializer_list<NodeId> ns) : nodes(ns) {}
  explicit Path(std::vector<NodeId> ns) : nodes(std::move(ns)) {}

  std::size_t size() const { return nodes.size(); }
  const NodeId& origin() const { return nodes.front(); }
  const NodeId& last() const { return nodes.back(); }
  // Comma-joined node ids, e.g. "1,2,d".
  std::string key() const;
  static Path from_key(const std::string& key);

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return a.nodes < b.nodes;
  }
};

// Ranked preference classes, best first. Paths inside a class are tied.
struct PreferenceOrder {
  std::vector<std::vector<Path>> classes;

  friend bool operator==(const PreferenceOrder&, const PreferenceOrder&) = default;
};

struct FsppInstance {
  NodeId destination;
  std::vector<NodeId> nodes;                         // declared order
  std::map<NodeId, std::vector<Path>> permitted;     // declared order per node
  std::map<NodeId, PreferenceOrder> preferences;

  // Empty when the node has no entry.
  const std::vector<Path>& paths_of(const NodeId& v) const;
  bool has_node(const NodeId& v) const;
  bool is_permitted(const NodeId& v, const Path& p) const;

  friend bool operator==(const FsppInstance&, const FsppInstance&) = default;
};

struct ValidationIssue {
  std::string kind;  // e.g. "wrong-endpoint", "suffix-closure"
  NodeId node;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
  bool has(const std::string& kind) const;
};

// Fractional allocation w'_v(P). Zero entries are never stored.
class PathWeights {
 public:
  Rational get(const NodeId& v, const Path& p) const;
  void set(const NodeId& v, const Path& p, const Rational& w);
  const std::map<NodeId, std::map<Path, Rational>>& entries() const { return w_; }

  friend bool operator==(const PathWeights&, const PathWeights&) = default;

 private:
  std::map<NodeId, std::map<Path, Rational>> w_;
};

enum class Condition { Unity, Tree, S1S2 };
std::string to_string(Condition c);

struct Violation {
  Condition condition;
  NodeId node;
  std::vector<Path> paths;  // Tree: the suffix S; S1S2: the path Q
  Rational lhs;             // Unity: node total; Tree: load through S; S1S2: weight on >=Q
  Rational rhs;             // Unity: 1; Tree: owner weight on S; S1S2: 1
};

struct StabilityVerdict {
  bool stable = true;
  std::vector<Violation> violations;
};

struct UnityResult {
  NodeId node;
  Rational sum;
  bool holds;
};

struct TreeViolation {
  NodeId node;   // v
  Path suffix;   // S, a path of its origin node
  Rational load;      // sum over pi(v, S)
  Rational capacity;  // w'_{origin(S)}(S)
};

struct S1 {};
struct S2 {
  Path witness;
};
struct Unstable {};
using StabilityAt = std::variant<S1, S2, Unstable>;

ValidationReport validate_instance(const FsppInstance& inst);

// Suffixes of length >= 2 excluding p itself, longest first.
std::vector<Path> proper_suffixes(const Path& p);

// Permitted paths of v that equal s or have s as a proper suffix.
std::vector<Path> pi_v_S(const FsppInstance& inst, const NodeId& v, const Path& s);

// Number of permitted paths q with p >=_v q, counting p itself.
int rank(const FsppInstance& inst, const NodeId& v, const Path& p);

// True iff p >=_v q.
bool weakly_prefers(const FsppInstance& inst, const NodeId& v, const Path& p, const Path& q);

std::vector<UnityResult> check_unity(const FsppInstance& inst, const PathWeights& w);
std::vector<TreeViolation> check_tree(const FsppInstance& inst, const PathWeights& w);
StabilityAt check_stability_at(const FsppInstance& inst, const PathWeights& w, const NodeId& v,
                               const Path& q);
StabilityVerdict is_stable(const FsppInstance& inst, const PathWeights& w);

// Throws Error unless every weighted path is permitted for its node and
// every weight is nonnegative.
void require_weights_on(const FsppInstance& inst, const PathWeights& w);

}  // namespace spl
