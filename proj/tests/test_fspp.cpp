#include <variant>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "spl/fspp.hpp"
#include "spl/generators.hpp"

using namespace spl;
using spl::testing::d2;
using spl::testing::d2_half;
using spl::testing::q;

namespace {

// Node 1 has A=(1,2,d) and B=(1,3,d) tied above C=(1,d).
FsppInstance tied_instance() {
  FsppInstance inst;
  inst.destination = "d";
  inst.nodes = {"1", "2", "3"};
  inst.permitted["1"] = {Path{"1", "2", "d"}, Path{"1", "3", "d"}, Path{"1", "d"}};
  inst.permitted["2"] = {Path{"2", "d"}};
  inst.permitted["3"] = {Path{"3", "d"}};
  inst.preferences["1"].classes = {{Path{"1", "2", "d"}, Path{"1", "3", "d"}}, {Path{"1", "d"}}};
  inst.preferences["2"].classes = {{Path{"2", "d"}}};
  inst.preferences["3"].classes = {{Path{"3", "d"}}};
  return inst;
}

}  // namespace

TEST_CASE("validate_instance") {
  CHECK(validate_instance(d2()).valid());

  SUBCASE("wrong endpoint") {
    FsppInstance inst;
    inst.destination = "d";
    inst.nodes = {"1", "2"};
    inst.permitted["1"] = {Path{"1", "2"}};
    inst.preferences["1"].classes = {{Path{"1", "2"}}};
    auto r = validate_instance(inst);
    CHECK_FALSE(r.valid());
    CHECK(r.has("wrong-endpoint"));
  }
  SUBCASE("missing suffix") {
    FsppInstance inst;
    inst.destination = "d";
    inst.nodes = {"1", "2"};
    inst.permitted["1"] = {Path{"1", "2", "d"}};
    inst.preferences["1"].classes = {{Path{"1", "2", "d"}}};
    auto r = validate_instance(inst);
    CHECK_FALSE(r.valid());
    CHECK(r.has("suffix-closure"));
  }
  SUBCASE("non-simple path") {
    auto inst = d2();
    inst.permitted["1"].push_back(Path{"1", "2", "1", "d"});
    inst.preferences["1"].classes.push_back({Path{"1", "2", "1", "d"}});
    CHECK(validate_instance(inst).has("not-simple"));
  }
  SUBCASE("preferences must partition the permitted paths") {
    auto inst = d2();
    inst.preferences["1"].classes = {{Path{"1", "2", "d"}}};
    CHECK(validate_instance(inst).has("preference-partition"));
    inst.preferences["1"].classes = {{Path{"1", "2", "d"}}, {Path{"1", "d"}, Path{"1", "2", "d"}}};
    CHECK(validate_instance(inst).has("preference-partition"));
    inst.preferences["1"].classes = {{Path{"1", "2", "d"}}, {}, {Path{"1", "d"}}};
    CHECK(validate_instance(inst).has("preference-partition"));
  }
  SUBCASE("ids") {
    auto inst = d2();
    inst.nodes.push_back("1");
    CHECK(validate_instance(inst).has("duplicate-node"));
    inst = d2();
    inst.nodes.push_back("x,y");
    CHECK(validate_instance(inst).has("bad-id"));
    inst = d2();
    inst.nodes.push_back("d");
    CHECK(validate_instance(inst).has("destination-is-node"));
  }
  SUBCASE("wrong origin and unknown nodes") {
    auto inst = d2();
    inst.permitted["1"].push_back(Path{"2", "d"});
    inst.preferences["1"].classes.push_back({Path{"2", "d"}});
    CHECK(validate_instance(inst).has("wrong-origin"));
    inst = d2();
    inst.permitted["1"].push_back(Path{"1", "z", "d"});
    inst.preferences["1"].classes.push_back({Path{"1", "z", "d"}});
    CHECK(validate_instance(inst).has("unknown-node"));
  }
}

TEST_CASE("proper_suffixes") {
  CHECK(proper_suffixes(Path{"1", "2", "d"}) == std::vector<Path>{Path{"2", "d"}});
  CHECK(proper_suffixes(Path{"1", "d"}).empty());
  CHECK(proper_suffixes(Path{"1", "2", "3", "d"}) == std::vector<Path>{Path{"2", "3", "d"}, Path{"3", "d"}});
  for (std::size_t len = 2; len <= 7; ++len) {
    Path p;
    for (std::size_t i = 1; i < len; ++i) p.nodes.push_back(std::to_string(i));
    p.nodes.emplace_back("d");
    CHECK(proper_suffixes(p).size() == len - 2);
  }
}

TEST_CASE("pi_v_S") {
  auto inst = d2();
  CHECK(pi_v_S(inst, "1", Path{"2", "d"}) == std::vector<Path>{Path{"1", "2", "d"}});
  CHECK(pi_v_S(inst, "2", Path{"1", "d"}) == std::vector<Path>{Path{"2", "1", "d"}});
  CHECK(pi_v_S(inst, "1", Path{"3", "d"}).empty());
  CHECK_THROWS_AS(pi_v_S(inst, "9", Path{"2", "d"}), Error);
  for (int seed = 0; seed < 30; ++seed) {
    auto r = gen_random(4, 3, static_cast<std::uint64_t>(seed));
    for (const auto& v : r.nodes)
      for (const auto& p : r.paths_of(v)) {
        auto through = pi_v_S(r, v, p);
        CHECK(std::find(through.begin(), through.end(), p) != through.end());
      }
  }
}

TEST_CASE("rank") {
  auto inst = d2();
  CHECK(rank(inst, "1", Path{"1", "d"}) == 1);
  CHECK(rank(inst, "1", Path{"1", "2", "d"}) == 2);
  CHECK_THROWS_AS(rank(inst, "1", Path{"2", "d"}), Error);

  auto tied = tied_instance();
  CHECK(rank(tied, "1", Path{"1", "2", "d"}) == 3);
  CHECK(rank(tied, "1", Path{"1", "3", "d"}) == 3);
  CHECK(rank(tied, "1", Path{"1", "d"}) == 1);
  CHECK(rank(tied, "2", Path{"2", "d"}) == 1);

  // Order embedding, against pair counting.
  for (int seed = 0; seed < 40; ++seed) {
    auto r = gen_random(5, 4, static_cast<std::uint64_t>(seed));
    for (const auto& v : r.nodes) {
      const auto& ps = r.paths_of(v);
      for (const auto& p : ps) {
        int rp = rank(r, v, p);
        CHECK(rp == oracle::rank_by_pairs(r.preferences.at(v), p));
        CHECK(rp >= 1);
        CHECK(rp <= static_cast<int>(ps.size()));
        for (const auto& o : ps) CHECK(weakly_prefers(r, v, p, o) == (rp >= rank(r, v, o)));
      }
    }
  }
}

TEST_CASE("check_unity") {
  auto inst = d2();
  for (const auto& u : check_unity(inst, d2_half())) {
    CHECK(u.holds);
    CHECK(u.sum == q(1));
  }
  for (const auto& u : check_unity(inst, PathWeights{})) {
    CHECK(u.holds);
    CHECK(u.sum == q(0));
  }
  PathWeights w;
  w.set("1", Path{"1", "2", "d"}, q(3, 4));
  w.set("1", Path{"1", "d"}, q(1, 2));
  auto res = check_unity(inst, w);
  REQUIRE(res.size() == 2);
  CHECK(res[0].node == "1");
  CHECK_FALSE(res[0].holds);
  CHECK(res[0].sum == q(5, 4));
  CHECK(res[1].holds);
}

TEST_CASE("check_tree") {
  auto inst = d2();
  CHECK(check_tree(inst, d2_half()).empty());
  CHECK(check_tree(inst, PathWeights{}).empty());

  PathWeights w;
  w.set("1", Path{"1", "2", "d"}, q(1));
  auto v = check_tree(inst, w);
  REQUIRE(v.size() == 1);
  CHECK(v[0].node == "1");
  CHECK(v[0].suffix == Path{"2", "d"});
  CHECK(v[0].load == q(1));
  CHECK(v[0].capacity == q(0));
}

TEST_CASE("check_stability_at") {
  auto inst = d2();
  auto half = d2_half();
  CHECK(std::holds_alternative<S1>(check_stability_at(inst, half, "1", Path{"1", "d"})));
  auto at = check_stability_at(inst, half, "1", Path{"1", "2", "d"});
  REQUIRE(std::holds_alternative<S2>(at));
  CHECK(std::get<S2>(at).witness == Path{"2", "d"});

  PathWeights w;
  w.set("1", Path{"1", "d"}, q(1));
  w.set("2", Path{"2", "d"}, q(1));
  CHECK(std::holds_alternative<Unstable>(check_stability_at(inst, w, "1", Path{"1", "2", "d"})));
  CHECK_THROWS_AS(check_stability_at(inst, w, "1", Path{"2", "d"}), Error);
}

TEST_CASE("S2 picks the longest witness") {
  // Node 1 uses (1,2,3,d); both suffixes are tight at zero load.
  auto inst = gen_chain(3);
  PathWeights w;
  auto at = check_stability_at(inst, w, "1", Path{"1", "2", "3", "d"});
  REQUIRE(std::holds_alternative<S2>(at));
  CHECK(std::get<S2>(at).witness == Path{"2", "3", "d"});
}

TEST_CASE("is_stable") {
  auto inst = d2();
  CHECK(is_stable(inst, d2_half()).stable);

  PathWeights best;
  best.set("1", Path{"1", "2", "d"}, q(1));
  best.set("2", Path{"2", "1", "d"}, q(1));
  auto verdict = is_stable(inst, best);
  CHECK_FALSE(verdict.stable);
  int tree = 0;
  for (const auto& v : verdict.violations)
    if (v.condition == Condition::Tree) {
      ++tree;
      CHECK(v.lhs == q(1));
      CHECK(v.rhs == q(0));
    }
  CHECK(tree == 2);

  auto zero = is_stable(inst, PathWeights{});
  CHECK_FALSE(zero.stable);
  bool direct_fails = false;
  for (const auto& v : zero.violations)
    if (v.condition == Condition::S1S2 && v.node == "1" && v.paths == std::vector<Path>{Path{"1", "d"}})
      direct_fails = true;
  CHECK(direct_fails);

  for (int n = 1; n <= 5; ++n) {
    auto chain = gen_chain(n);
    PathWeights w;
    for (const auto& v : chain.nodes) w.set(v, chain.paths_of(v).front(), q(1));
    CHECK(is_stable(chain, w).stable);
  }

  CHECK_THROWS_AS(is_stable(inst, [] {
                    PathWeights w;
                    w.set("1", Path{"1", "3", "d"}, Rational(1, 2));
                    return w;
                  }()),
                  Error);
  auto bad = inst;
  bad.permitted["2"].pop_back();
  bad.preferences["2"].classes.pop_back();
  CHECK_THROWS_AS(is_stable(bad, PathWeights{}), Error);
}

TEST_CASE("checker is deterministic") {
  for (int seed = 0; seed < 10; ++seed) {
    auto inst = gen_random(4, 3, static_cast<std::uint64_t>(seed));
    PathWeights w;
    for (const auto& v : inst.nodes)
      for (const auto& p : inst.paths_of(v)) w.set(v, p, Rational(1, static_cast<std::int64_t>(inst.paths_of(v).size()) + 1));
    auto a = is_stable(inst, w);
    auto b = is_stable(inst, w);
    CHECK(emit_stability_verdict(a) == emit_stability_verdict(b));
  }
}
