#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stardec/io.hpp"
#include "stardec/ilp_builders.hpp"
#include "stardec/oracle.hpp"
#include "stardec/reductions.hpp"
#include "stardec/vertex_cover.hpp"
#include "testlib.hpp"

using namespace stardec;

TEST_CASE("bin packing DP on hand-checked instances") {
  CHECK(bp_feasible(normalize_bp({{1, 2}, {2, 1}, 2, 2})));
  CHECK(bp_feasible(normalize_bp({{2}, {2}, 2, 2})));
  // Two bins of size 3 cannot take the two 2s apart from padding 1s evenly:
  // items {2,2,1,1}: bins {2,1},{2,1}: feasible.
  CHECK(bp_feasible(normalize_bp({{2}, {2}, 2, 3})));
  // {3,3} into two bins of 4 with padding {1,1}: {3,1},{3,1}: feasible.
  CHECK(bp_feasible(normalize_bp({{3}, {2}, 2, 4})));
  // {3,3,3} into three bins of 3: feasible exactly.
  CHECK(bp_feasible(normalize_bp({{3}, {3}, 3, 3})));
  // {2,2,2} into two bins of 3 is infeasible even with padding.
  CHECK_FALSE(bp_feasible(normalize_bp({{2}, {3}, 2, 3})));
}

TEST_CASE("normalization pads with unit items and sorts weights") {
  BinPackingInstance bp = normalize_bp({{2}, {1}, 2, 2});
  CHECK(bp.total() == 4);
  CHECK(bp.weights == std::vector<long long>{1, 2});
  CHECK(bp.counts == std::vector<long long>{2, 1});
  CHECK_THROWS_AS(normalize_bp({{3}, {3}, 2, 2}), wrong_case_error);
  // Unsorted weight lists are accepted and canonicalized.
  BinPackingInstance sorted = normalize_bp({{3, 1}, {2, 2}, 2, 4});
  CHECK(sorted.weights == std::vector<long long>{1, 3});
  CHECK(sorted.counts == std::vector<long long>{2, 2});
  CHECK(bp_feasible(sorted));  // {3,1} | {3,1}
}

TEST_CASE("K_{m,n} reduction shape and expected answers") {
  {
    GeneratedInstance gi = binpacking_to_kmn({{1, 2}, {2, 1}, 2, 2});
    CHECK(gi.instance.graph.n == 2 + 6);
    CHECK(gi.instance.spec.lengths == std::vector<long long>{3, 6});
    CHECK(gi.instance.spec.counts == std::vector<long long>{2, 1});
    CHECK(gi.instance.size_matches());
    REQUIRE(gi.expected.has_value());
    CHECK(*gi.expected);
  }
  {
    GeneratedInstance gi = binpacking_to_kmn({{2}, {2}, 2, 2});
    CHECK(gi.instance.spec.lengths == std::vector<long long>{6});
    CHECK(*gi.expected);
  }
  {
    // Unpackable: {2,2,2} into two bins of 3.
    GeneratedInstance gi = binpacking_to_kmn({{2}, {3}, 2, 3});
    CHECK_FALSE(*gi.expected);
  }
}

TEST_CASE("tree reduction shape and guards") {
  {
    GeneratedInstance gi = binpacking_to_tree({{1, 2}, {2, 1}, 2, 2});
    // ell = max(2, 4) = 4; vertices: root + 4 + 2*2 leaves.
    CHECK(gi.instance.graph.n == 9);
    CHECK(gi.instance.spec.lengths == std::vector<long long>{1, 2, 4});
    CHECK(gi.instance.spec.counts == std::vector<long long>{2, 1, 1});
    CHECK(gi.instance.size_matches());
    CHECK(*gi.expected);
  }
  CHECK_THROWS_AS(binpacking_to_tree({{1, 3}, {1, 1}, 2, 2}), wrong_case_error);
}

TEST_CASE("independent-set reduction on K4 and K33") {
  {
    GeneratedInstance gi = indepset_to_stardec(testlib::complete_graph(4), 1);
    CHECK(gi.instance.spec.lengths == std::vector<long long>{1, 3});
    CHECK(gi.instance.spec.counts == std::vector<long long>{3, 1});
    REQUIRE(gi.expected.has_value());
    CHECK(*gi.expected);
    CHECK(oracle_solve(gi.instance).answer == Answer::Yes);
  }
  {
    GeneratedInstance gi = indepset_to_stardec(testlib::complete_graph(4), 2);
    CHECK(gi.instance.spec.lengths == std::vector<long long>{3});
    CHECK(gi.instance.spec.counts == std::vector<long long>{2});
    CHECK_FALSE(*gi.expected);
    CHECK(oracle_solve(gi.instance).answer == Answer::No);
  }
  {
    GeneratedInstance gi = indepset_to_stardec(testlib::complete_bipartite(3, 3), 3);
    CHECK(gi.instance.spec.lengths == std::vector<long long>{3});
    CHECK(*gi.expected);
    CHECK(oracle_solve(gi.instance).answer == Answer::Yes);
  }
  CHECK_THROWS_AS(indepset_to_stardec(testlib::complete_graph(4), 3), wrong_case_error);
  CHECK_THROWS_AS(indepset_to_stardec(testlib::path_graph(4), 1), wrong_case_error);
}

TEST_CASE("reduction soundness at desk scale") {
  auto gen = testlib::rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    BinPackingInstance bp;
    bp.bins = 1 + static_cast<long long>(gen() % 3);
    bp.bin_size = 1 + static_cast<long long>(gen() % 4);
    std::set<long long> weights;
    int kinds = 1 + static_cast<int>(gen() % 2);
    for (int i = 0; i < kinds; ++i) weights.insert(1 + static_cast<long long>(gen() % bp.bin_size));
    for (long long w : weights) {
      bp.weights.push_back(w);
      bp.counts.push_back(1 + static_cast<long long>(gen() % 2));
    }
    if (bp.total() > bp.bins * bp.bin_size) continue;
    {
      GeneratedInstance gi = binpacking_to_kmn(bp);
      auto cover = min_vertex_cover(gi.instance.graph, 4);
      REQUIRE(cover.has_value());
      SolveReport rep = solve_ilp2(gi.instance, *cover);
      REQUIRE(rep.answer != Answer::Unknown);
      REQUIRE((rep.answer == Answer::Yes) == *gi.expected);
      if (rep.answer == Answer::Yes) {
        CHECK(verify(gi.instance, *rep.witness));
        // All centers live in the small side.
        for (const Star& s : rep.witness->stars) CHECK(s.center < bp.bins);
      }
    }
    {
      GeneratedInstance gi = binpacking_to_tree(bp);
      auto cover = min_vertex_cover(gi.instance.graph, 5);
      REQUIRE(cover.has_value());
      SolveReport rep = solve_ilp2(gi.instance, *cover);
      REQUIRE(rep.answer != Answer::Unknown);
      REQUIRE((rep.answer == Answer::Yes) == *gi.expected);
    }
  }
}

TEST_CASE("small reduction images double-checked by the oracle") {
  auto gen = testlib::rng(909);
  int solved = 0;
  for (int trial = 0; trial < 30; ++trial) {
    BinPackingInstance bp;
    bp.bins = 1 + static_cast<long long>(gen() % 2);
    bp.bin_size = 1 + static_cast<long long>(gen() % 3);
    bp.weights = {1 + static_cast<long long>(gen() % bp.bin_size)};
    bp.counts = {1 + static_cast<long long>(gen() % 2)};
    if (bp.total() > bp.bins * bp.bin_size) continue;
    GeneratedInstance gi = binpacking_to_kmn(bp);
    if (gi.instance.graph.edge_count() > 14) continue;
    SolveReport rep = oracle_solve(gi.instance);
    REQUIRE((rep.answer == Answer::Yes) == *gi.expected);
    if (rep.answer == Answer::Yes) {
      // min(s) > m forces every center into the m-side.
      for (const Star& s : rep.witness->stars) CHECK(s.center < bp.bins);
    }
    ++solved;
  }
  CHECK(solved > 5);
}

TEST_CASE("seeded generation is reproducible") {
  Instance a = gen_random("gnm", {{"n", 6}, {"m", 8}}, 1);
  Instance b = gen_random("gnm", {{"n", 6}, {"m", 8}}, 1);
  CHECK(dump_instance(a) == dump_instance(b));
  Instance c = gen_random("gnm", {{"n", 6}, {"m", 8}}, 2);
  CHECK(dump_instance(a) != dump_instance(c));
  CHECK(a.size_matches());

  Instance k5 = gen_random("complete", {{"n", 5}}, 7);
  CHECK(k5.graph.edge_count() == 10);
  Instance kb = gen_random("complete_bipartite", {{"a", 2}, {"b", 3}}, 7);
  CHECK(kb.graph.edge_count() == 6);
  Instance tree = gen_random("tree_depth_2", {{"children", 3}, {"max_leaves", 2}}, 7);
  CHECK(tree.size_matches());
  Instance cub = gen_random("cubic", {{"n", 8}}, 7);
  auto deg = degrees(cub.graph);
  for (long long d : deg) CHECK(d == 3);
  CHECK_THROWS_AS(gen_random("nope", {}, 1), parse_error);
}
