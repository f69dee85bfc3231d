#include "spl/generators.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "spl/random.hpp"

namespace spl {

namespace {

constexpr const char* kDestination = "d";

FsppInstance empty_instance(int n) {
  FsppInstance inst;
  inst.destination = kDestination;
  for (int i = 1; i <= n; ++i) {
    NodeId v = std::to_string(i);
    inst.nodes.push_back(v);
    inst.permitted[v];
    inst.preferences[v];
  }
  return inst;
}

void add_path(FsppInstance& inst, const Path& p, bool new_class) {
  const NodeId& v = p.origin();
  inst.permitted[v].push_back(p);
  auto& classes = inst.preferences[v].classes;
  if (new_class || classes.empty()) classes.push_back({p});
  else classes.back().push_back(p);
}

}  // namespace

FsppInstance gen_chain(int n) {
  if (n < 1) throw Error("gen_chain: n must be >= 1");
  FsppInstance inst = empty_instance(n);
  for (int i = 1; i <= n; ++i) {
    Path p;
    for (int j = i; j <= n; ++j) p.nodes.push_back(std::to_string(j));
    p.nodes.emplace_back(kDestination);
    add_path(inst, p, true);
  }
  return inst;
}

FsppInstance gen_disagree(int k) {
  if (k < 2) throw Error("gen_disagree: k must be >= 2");
  FsppInstance inst = empty_instance(k);
  for (int i = 1; i <= k; ++i) {
    NodeId v = std::to_string(i);
    NodeId next = std::to_string(i % k + 1);
    add_path(inst, Path{v, next, kDestination}, true);
    add_path(inst, Path{v, kDestination}, true);
  }
  return inst;
}

FsppInstance gen_random(int n, int max_paths, std::uint64_t seed) {
  if (n < 1) throw Error("gen_random: n must be >= 1");
  if (max_paths < 1) throw Error("gen_random: max_paths must be >= 1");
  Rng rng(seed);
  FsppInstance inst = empty_instance(n);

  // adjacency[i] holds neighbours of node i; index n is the destination.
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.chance(1, 2)) {
        adjacency[static_cast<std::size_t>(i)].push_back(j);
        adjacency[static_cast<std::size_t>(j)].push_back(i);
      }
  auto name = [&](int i) { return i == n ? NodeId(kDestination) : std::to_string(i + 1); };

  std::vector<Path> generated;
  for (int src = 0; src < n; ++src) {
    // Breadth-first over partial simple paths yields complete paths
    // shortest-first, and lexicographically within a length.
    std::vector<Path> found;
    std::deque<std::vector<int>> frontier{{src}};
    while (!frontier.empty() && static_cast<int>(found.size()) < max_paths) {
      auto partial = std::move(frontier.front());
      frontier.pop_front();
      for (int next : adjacency[static_cast<std::size_t>(partial.back())]) {
        if (std::find(partial.begin(), partial.end(), next) != partial.end()) continue;
        auto extended = partial;
        extended.push_back(next);
        if (next == n) {
          if (static_cast<int>(found.size()) < max_paths) {
            Path p;
            for (int x : extended) p.nodes.push_back(name(x));
            found.push_back(std::move(p));
          }
        } else {
          frontier.push_back(std::move(extended));
        }
      }
    }
    generated.insert(generated.end(), found.begin(), found.end());
    rng.shuffle(found);
    for (std::size_t i = 0; i < found.size(); ++i) add_path(inst, found[i], i == 0 || !rng.chance(1, 10));
  }

  for (const auto& p : generated)
    for (const auto& s : proper_suffixes(p))
      if (!inst.is_permitted(s.origin(), s)) add_path(inst, s, true);
  return inst;
}

}  // namespace spl
