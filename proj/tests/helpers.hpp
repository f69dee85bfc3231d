#pragma once

#include <string>

#include "spl/fspp.hpp"
#include "spl/io.hpp"

namespace spl::testing {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// DISAGREE, written out by hand: each node prefers the route through the
// other node over its direct route.
inline FsppInstance d2() {
  FsppInstance inst;
  inst.destination = "d";
  inst.nodes = {"1", "2"};
  inst.permitted["1"] = {Path{"1", "2", "d"}, Path{"1", "d"}};
  inst.permitted["2"] = {Path{"2", "1", "d"}, Path{"2", "d"}};
  inst.preferences["1"].classes = {{Path{"1", "2", "d"}}, {Path{"1", "d"}}};
  inst.preferences["2"].classes = {{Path{"2", "1", "d"}}, {Path{"2", "d"}}};
  return inst;
}

inline PathWeights d2_half() {
  PathWeights w;
  for (const auto& p : {Path{"1", "2", "d"}, Path{"1", "d"}}) w.set("1", p, q(1, 2));
  for (const auto& p : {Path{"2", "1", "d"}, Path{"2", "d"}}) w.set("2", p, q(1, 2));
  return w;
}

// Node "v" reaches "u" through either "a" or "b"; both routes share (u,d).
inline FsppInstance shared_suffix() {
  FsppInstance inst;
  inst.destination = "d";
  inst.nodes = {"a", "b", "u", "v"};
  inst.permitted["a"] = {Path{"a", "u", "d"}};
  inst.permitted["b"] = {Path{"b", "u", "d"}};
  inst.permitted["u"] = {Path{"u", "d"}};
  inst.permitted["v"] = {Path{"v", "a", "u", "d"}, Path{"v", "b", "u", "d"}};
  inst.preferences["a"].classes = {{Path{"a", "u", "d"}}};
  inst.preferences["b"].classes = {{Path{"b", "u", "d"}}};
  inst.preferences["u"].classes = {{Path{"u", "d"}}};
  inst.preferences["v"].classes = {{Path{"v", "a", "u", "d"}}, {Path{"v", "b", "u", "d"}}};
  return inst;
}

inline std::string fixture(const std::string& name) { return read_file(std::string(SPL_FIXTURES) + "/" + name); }

}  // namespace spl::testing
