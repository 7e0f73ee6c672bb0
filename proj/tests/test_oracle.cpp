#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stardec/oracle.hpp"
#include "testlib.hpp"

using namespace stardec;

TEST_CASE("oracle on hand-checked instances") {
  CHECK(oracle_solve(testlib::instance_of(testlib::cycle_graph(3), {3}, {1})).answer ==
        Answer::No);
  {
    SolveReport rep = oracle_solve(testlib::instance_of(testlib::complete_graph(4), {1, 3}, {3, 1}));
    CHECK(rep.answer == Answer::Yes);
  }
  CHECK(oracle_solve(testlib::instance_of(testlib::complete_graph(4), {3}, {2})).answer ==
        Answer::No);
  {
    Instance p3 = testlib::instance_of(testlib::path_graph(3), {2}, {1});
    SolveReport rep = oracle_solve(p3);
    REQUIRE(rep.answer == Answer::Yes);
    REQUIRE(rep.witness.has_value());
    CHECK(canonical_key(*rep.witness) == canonical_key(StarDecomposition{{Star{1, {0, 2}}}}));
  }
}

TEST_CASE("oracle reports size mismatches as NO") {
  Instance bad = testlib::instance_of(testlib::cycle_graph(3), {2}, {1});
  SolveReport rep = oracle_solve(bad);
  CHECK(rep.answer == Answer::No);
  CHECK(rep.reason == "size mismatch");
}

TEST_CASE("oracle yields UNKNOWN when the budget is exhausted") {
  Instance inst = testlib::instance_of(testlib::complete_graph(6), {1, 2, 3}, {1, 4, 2});
  SearchBudget tiny;
  tiny.max_nodes = 3;
  SolveReport rep = oracle_solve(inst, tiny);
  CHECK(rep.answer == Answer::Unknown);
}

TEST_CASE("witness enumeration counts") {
  {
    auto res = enumerate_all_witnesses(
        testlib::instance_of(testlib::graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), {3}, {1}));
    CHECK(res.witnesses.size() == 1);
  }
  {
    auto res =
        enumerate_all_witnesses(testlib::instance_of(testlib::cycle_graph(3), {1, 2}, {1, 1}));
    CHECK(res.witnesses.size() == 3);
  }
  {
    auto res = enumerate_all_witnesses(testlib::instance_of(testlib::cycle_graph(3), {1}, {3}));
    CHECK(res.witnesses.size() == 1);
  }
  {
    // K_{1,4} into two 2-stars: the 3 pairings of four leaves.
    auto res = enumerate_all_witnesses(testlib::instance_of(
        testlib::graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), {2}, {2}));
    CHECK(res.witnesses.size() == 3);
  }
}

TEST_CASE("witness enumeration sets the truncated flag under a tiny budget") {
  Instance inst = testlib::instance_of(testlib::complete_graph(5), {1, 2}, {2, 4});
  SearchBudget tiny;
  tiny.max_nodes = 5;
  auto res = enumerate_all_witnesses(inst, tiny);
  CHECK(res.truncated);
}

TEST_CASE("oracle matches the naive two-stage reference on all graphs with <=8 edges, n<=6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testlib::enumerate_graphs(n, false, 8)) {
      long long m = g.edge_count();
      if (m == 0) continue;
      for (const StarSpec& spec : testlib::all_specs(m, 4)) {
        Instance inst;
        inst.graph = g;
        inst.spec = spec;
        SolveReport rep = oracle_solve(inst);
        REQUIRE(rep.answer != Answer::Unknown);
        bool naive = testlib::naive_solve(inst);
        if ((rep.answer == Answer::Yes) != naive) {
          CAPTURE(n);
          CAPTURE(m);
          REQUIRE((rep.answer == Answer::Yes) == naive);
        }
        if (rep.answer == Answer::Yes) CHECK(verify(inst, *rep.witness));
      }
    }
  }
}

TEST_CASE("oracle matches the naive reference on sparse n=6..7 samples") {
  auto gen = testlib::rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + static_cast<int>(gen() % 2);
    int m = 4 + static_cast<int>(gen() % 5);
    Graph g = testlib::random_gnm(n, m, gen);
    for (const StarSpec& spec : testlib::all_specs(g.edge_count(), 4)) {
      Instance inst;
      inst.graph = g;
      inst.spec = spec;
      CHECK((oracle_solve(inst).answer == Answer::Yes) == testlib::naive_solve(inst));
    }
  }
}

TEST_CASE("oracle answers are invariant under vertex relabeling") {
  auto gen = testlib::rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(gen() % 3);
    int m = 3 + static_cast<int>(gen() % 5);
    Graph g = testlib::random_gnm(n, m, gen);
    auto specs = testlib::all_specs(g.edge_count(), 3);
    if (specs.empty()) continue;
    const StarSpec& spec = specs[gen() % specs.size()];
    Instance inst;
    inst.graph = g;
    inst.spec = spec;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[gen() % (i + 1)]);
    Instance shuffled = testlib::permuted(inst, perm);
    CHECK(oracle_solve(inst).answer == oracle_solve(shuffled).answer);
  }
}

TEST_CASE("oracle handles multigraphs") {
  // Two parallel edges: one 2-star with a repeated leaf.
  Instance inst = testlib::instance_of(testlib::graph_from_edges(2, {{0, 1}}, {2}), {2}, {1});
  SolveReport rep = oracle_solve(inst);
  REQUIRE(rep.answer == Answer::Yes);
  CHECK(verify(inst, *rep.witness));
  // Triple edge into a 3-star and three 1-stars is impossible (3+3 != 3).
  Instance inst2 = testlib::instance_of(testlib::graph_from_edges(2, {{0, 1}}, {3}), {3}, {1});
  CHECK(oracle_solve(inst2).answer == Answer::Yes);
}
