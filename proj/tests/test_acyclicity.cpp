#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "skewac/acyclicity.hpp"
#include "skewac/certificate.hpp"
#include "skewac/convert.hpp"
#include "skewac/oracle.hpp"
#include "skewac/reductions.hpp"
#include "test_util.hpp"

using namespace skewac;

TEST_CASE("fixture verdicts") {
    SUBCASE("F3 has the regular circuit u->w->u") {
        Verdict v = acyclicity_test(oracle::fixture_f3());
        REQUIRE_FALSE(v.weakly_acyclic());
        CHECK(v.circuit->nodes == std::vector<NodeId>{0, 2, 0});
        CHECK(v.circuit->arcs == std::vector<ArcId>{0, 2});
    }
    SUBCASE("F1 is weakly acyclic") {
        const SkewGraph g = oracle::fixture_f1();
        // re-prove the classification with the oracle rather than assuming it
        REQUIRE_FALSE(oracle::brute_regular_circuit(g).has_value());
        CHECK(acyclicity_test(g).weakly_acyclic());
    }
    SUBCASE("strongly acyclic graphs are weakly acyclic") {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            oracle::GenSpec spec;
            spec.kind = oracle::GenSpec::Kind::StronglyAcyclic;
            spec.nodes = 4 + seed % 10;
            spec.edges = seed % 16;
            spec.seed = seed;
            const SkewGraph g = *oracle::generate(spec).skew;
            CHECK(acyclicity_test(g).weakly_acyclic());
        }
    }
}

TEST_CASE("precondition scan names the offender") {
    SUBCASE("degree property") {
        // node 0 with two in- and two out-arcs
        const SkewGraph g(3, {{0, 2}, {0, 4}, {2, 0}, {4, 0}});
        CHECK_THROWS_WITH_AS(acyclicity_test(g), doctest::Contains("degree property"),
                             InputError);
    }
    SUBCASE("loop property") {
        const SkewGraph g(2, {{0, 1}});
        CHECK_THROWS_WITH_AS(acyclicity_test(g), doctest::Contains("loop property"), InputError);
    }
    SUBCASE("a self-loop arc is itself a regular circuit") {
        const SkewGraph g(2, {{0, 0}, {0, 2}});
        Verdict v = acyclicity_test(g);
        REQUIRE_FALSE(v.weakly_acyclic());
        CHECK(v.circuit->arcs == std::vector<ArcId>{0});
        CHECK(verify_regular_circuit(g, *v.circuit).ok());
    }
}

TEST_CASE("verdict equals the oracle on random preprocessed graphs") {
    int positive = 0, negative = 0;
    for (std::uint64_t seed = 0; seed < 800; ++seed) {
        const auto bg = test::random_bidirected(1 + seed % 6, seed % 10, seed * 37 + 5);
        const PreprocessResult pre = canonical_preprocess(bg);
        const bool oracle_circuit = oracle::brute_regular_circuit(pre.graph, 250).has_value();
        Verdict v = acyclicity_test(pre.graph);
        CHECK(v.weakly_acyclic() == !oracle_circuit);
        if (v.circuit) {
            CHECK(verify_regular_circuit(pre.graph, *v.circuit).ok());
            ++negative;
        } else {
            ++positive;
        }
    }
    CHECK(positive > 100);
    CHECK(negative > 100);
}

TEST_CASE("traversal invariants hold after every step") {
    test::InvariantObserver obs;
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        const auto bg = test::random_bidirected(2 + seed % 5, 3 + seed % 10, seed * 11 + 3);
        const PreprocessResult pre = canonical_preprocess(bg);
        run_acyclicity_dfs(pre.graph, &obs);
    }
    CHECK(obs.events > 8000);
    CHECK(obs.failures == 0);
}

TEST_CASE("finish stamps order the final graph reverse-topologically") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto bg = test::random_bidirected(2 + seed % 6, 1 + seed % 9, seed * 19 + 7);
        const PreprocessResult pre = canonical_preprocess(bg);
        TraversalResult res = run_acyclicity_dfs(pre.graph);
        if (res.circuit) continue;
        TraversalState& st = *res.state;
        for (ArcId a = 0; a < pre.graph.arc_count(); ++a) {
            if (st.cg.is_dead(a)) continue;
            const NodeId t = st.cg.current_tail(a), h = st.cg.current_head(a);
            if (st.color[t] == Color::Black && st.color[h] == Color::Black)
                CHECK(st.finish[t] > st.finish[h]);
        }
    }
}

TEST_CASE("the verdict tag is invariant under adjacency permutations") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto bg = test::random_bidirected(2 + seed % 6, 2 + seed % 9, seed * 23 + 1);
        const PreprocessResult pre = canonical_preprocess(bg);
        const SkewGraph& g = pre.graph;
        const bool verdict = acyclicity_test(g).weakly_acyclic();
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (ArcId j = 0; j < g.arc_pair_count(); ++j)
            pairs.emplace_back(g.tail(2 * j), g.head(2 * j));
        std::mt19937_64 rng(seed);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (std::size_t k = pairs.size(); k > 1; --k)
                std::swap(pairs[k - 1], pairs[rng() % k]);
            const SkewGraph permuted(g.node_pairs(), pairs);
            CHECK(acyclicity_test(permuted).weakly_acyclic() == verdict);
        }
    }
}

TEST_CASE("trimming preserves the existence of a regular circuit") {
    // replay each trim on the literal rebuild and oracle both sides
    struct StageCollector : TraversalObserver {
        const SkewGraph* base = nullptr;
        std::vector<oracle::ExplicitGraph> stages;
        void on_trim(TraversalState& st, std::size_t rec) override {
            oracle::ExplicitGraph eg =
                stages.empty() ? oracle::explicit_graph_of(*base) : stages.back();
            const TrimRecord& r = st.cg.history()[rec];
            stages.push_back(
                oracle::explicit_trim(eg, Bud{r.base_node, r.base_arc, r.members, r.member_in,
                                               r.mate_in}));
        }
    };
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 2000 && checked < 60; ++seed) {
        const auto bg = test::random_bidirected(2 + seed % 4, 3 + seed % 9, seed * 41 + 17);
        const PreprocessResult pre = canonical_preprocess(bg);
        if (!oracle::brute_regular_circuit(pre.graph, 250)) continue;
        StageCollector col;
        col.base = &pre.graph;
        run_acyclicity_dfs(pre.graph, &col);
        bool had = true;  // the base graph has a circuit
        for (const auto& eg : col.stages) {
            const auto as_skew = test::explicit_to_skew(eg);
            const bool has = oracle::brute_regular_circuit(as_skew.graph, 250).has_value();
            if (had) CHECK(has);
            had = has;
            ++checked;
        }
    }
    CHECK(checked >= 60);
}
