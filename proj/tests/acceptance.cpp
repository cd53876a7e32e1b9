// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run through ctest or directly; SKEWAC_ACCEPTANCE_FULL=1 additionally
// sweeps every labeled connected 8-node graph in criterion 5.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "skewac/decomposition.hpp"
#include "skewac/matching.hpp"
#include "skewac/oracle.hpp"
#include "skewac/reductions.hpp"
#include "test_util.hpp"

using namespace skewac;

namespace {

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// shared across criteria 1-3: the weakly acyclic instances of criterion 1
std::vector<SkewGraph> g_weakly_acyclic_pool;

SkewGraph composed(std::uint32_t pairs, std::uint32_t arc_pairs, std::uint64_t seed) {
    oracle::GenSpec spec;
    spec.kind = oracle::GenSpec::Kind::WeaklyAcyclicComposed;
    spec.nodes = pairs;
    spec.edges = arc_pairs;
    spec.seed = seed;
    return *oracle::generate(spec).skew;
}

}  // namespace

TEST_CASE("criterion 1: verdict equals the brute-force oracle") {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t cases = 0, mismatches = 0, witnesses_bad = 0;

    // (a) exhaustive skew graphs, <= 3 node pairs, <= 4 arc pairs
    for (PairId p = 1; p <= 3; ++p) {
        const NodeId n = 2 * p;
        std::vector<std::pair<NodeId, NodeId>> types;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = 0; v < n; ++v)
                if (v != mate(u)) types.emplace_back(u, v);  // loop property up front
        const std::size_t t = types.size();
        std::vector<std::size_t> pick;
        std::function<void()> run_graph = [&]() {
            std::vector<std::pair<NodeId, NodeId>> arcs;
            for (std::size_t i : pick) arcs.push_back(types[i]);
            const SkewGraph g(p, arcs);
            try {
                check_degree_and_loop_properties(g);
            } catch (const InputError&) {
                return;  // outside the algorithm's precondition
            }
            ++cases;
            const bool oracle_circuit = oracle::brute_regular_circuit(g, 64).has_value();
            Verdict v = acyclicity_test(g);
            if (v.weakly_acyclic() != !oracle_circuit) ++mismatches;
            if (v.circuit && !verify_regular_circuit(g, *v.circuit).ok()) ++witnesses_bad;
        };
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from,
                                                                   std::size_t left) {
            if (left == 0) {
                run_graph();
                return;
            }
            for (std::size_t i = from; i < t; ++i) {
                pick.push_back(i);
                choose(i, left - 1);
                pick.pop_back();
            }
        };
        for (std::size_t q = 0; q <= 4; ++q) choose(0, q);
    }
    const std::uint64_t exhaustive_cases = cases;

    // (b) 10,000 random bidirected graphs through the preprocessing pipeline
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto bg = test::random_bidirected(1 + seed % 6, seed % 11, seed * 977 + 11);
        const PreprocessResult pre = canonical_preprocess(bg);
        ++cases;
        const bool oracle_circuit = oracle::brute_regular_circuit(pre.graph, 400).has_value();
        Verdict v = acyclicity_test(pre.graph);
        if (v.weakly_acyclic() != !oracle_circuit) ++mismatches;
        if (v.circuit) {
            if (!verify_regular_circuit(pre.graph, *v.circuit).ok()) ++witnesses_bad;
        } else {
            if (g_weakly_acyclic_pool.size() < 4000) g_weakly_acyclic_pool.push_back(pre.graph);
        }
    }

    const double dt = seconds_since(t0);
    const bool pass = mismatches == 0 && cases > 10000;
    report(1, pass,
           std::to_string(cases) + " cases (" + std::to_string(exhaustive_cases) +
               " exhaustive), " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(dt).substr(0, 5) + " s");
    CHECK(mismatches == 0);
    CHECK(dt < 120.0);

    // criterion 2 counts circuit witnesses found above
    report(2, witnesses_bad == 0,
           "all regular-circuit witnesses pass is_regular + closure; alternating "
           "circuits checked in criterion 5");
    CHECK(witnesses_bad == 0);
}

TEST_CASE("criterion 3: decomposition soundness") {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t trees = 0, bad = 0;

    for (const SkewGraph& g : g_weakly_acyclic_pool) {
        DecomposeResult d = decompose(g);
        if (!d.tree || !verify_weak_decomposition(g, *d.tree).ok()) {
            ++bad;
            continue;
        }
        ++trees;
    }
    // plus composed generator instances up to 200 node pairs
    std::uint64_t strong_checked = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const std::uint32_t pairs = 4 + static_cast<std::uint32_t>(seed * 7 % 197);
        const SkewGraph g = composed(pairs, 2 * pairs + static_cast<std::uint32_t>(seed % 40),
                                     seed * 13 + 5);
        DecomposeResult d = decompose(g);
        if (!d.tree || !verify_weak_decomposition(g, *d.tree).ok()) {
            ++bad;
            continue;
        }
        ++trees;
        if (seed % 5 == 0) {
            StrongDecomposeResult s = decompose_strong(g);
            if (!s.tree || !verify_strong_decomposition(g, *s.tree).ok()) ++bad;
            ++strong_checked;
        }
    }
    const bool pass = bad == 0 && trees > 1000;
    report(3, pass,
           std::to_string(trees) + " trees verified, " + std::to_string(strong_checked) +
               " strong decompositions, " + std::to_string(bad) + " failures, " +
               std::to_string(seconds_since(t0)).substr(0, 5) + " s");
    CHECK(bad == 0);
}

TEST_CASE("criterion 4: linear-time scaling of check and decompose") {
    const auto t0 = std::chrono::steady_clock::now();
    struct Point {
        double x;  // n + m
        double t_check;
        double t_decompose;
    };
    std::vector<Point> points;
    for (const std::uint32_t pairs : {5000u, 50000u, 500000u}) {
        const SkewGraph g = composed(pairs, 4 * pairs, 42);
        const double x = static_cast<double>(g.node_count()) + g.arc_count();
        double best_check = 1e99, best_dec = 1e99;
        for (int rep = 0; rep < 5; ++rep) {
            const auto c0 = std::chrono::steady_clock::now();
            Verdict v = acyclicity_test(g);
            best_check = std::min(best_check, seconds_since(c0));
            REQUIRE(v.weakly_acyclic());
        }
        for (int rep = 0; rep < 4; ++rep) {
            const auto c0 = std::chrono::steady_clock::now();
            DecomposeResult d = decompose(g);
            best_dec = std::min(best_dec, seconds_since(c0));
            REQUIRE(d.weakly_acyclic());
        }
        points.push_back({x, best_check, best_dec});
    }
    auto fit_and_check = [&](auto pick) {
        double sxzy = 0, sxx = 0;
        for (const Point& p : points) {
            sxzy += p.x * pick(p);
            sxx += p.x * p.x;
        }
        const double c = sxzy / sxx;
        double worst = 0;
        for (const Point& p : points)
            worst = std::max(worst, std::abs(pick(p) - c * p.x) / (c * p.x));
        return worst;
    };
    const double dev_check = fit_and_check([](const Point& p) { return p.t_check; });
    const double dev_dec = fit_and_check([](const Point& p) { return p.t_decompose; });
    const double dt = seconds_since(t0);
    const bool pass = dev_check <= 0.5 && dev_dec <= 0.5 && dt < 120.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "deviation check %.1f%%, decompose %.1f%%; times %.3f/%.3f/%.3f s (check), "
                  "total %.1f s",
                  100 * dev_check, 100 * dev_dec, points[0].t_check, points[1].t_check,
                  points[2].t_check, dt);
    report(4, pass, buf);
    CHECK(dev_check <= 0.5);
    CHECK(dev_dec <= 0.5);
    CHECK(dt < 120.0);
}

namespace {

// exhaustive perfect-matching enumeration (oracle for criterion 5)
void enum_pms(const MatchingInstance& inst, std::vector<char>& used, std::uint32_t from,
              std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out) {
    std::uint32_t v = from;
    while (v < inst.node_count && used[v]) ++v;
    if (v == inst.node_count) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e < inst.edges.size(); ++e) {
        const auto [a, b] = inst.edges[e];
        if (a == b) continue;
        const std::uint32_t other = (a == v) ? b : (b == v ? a : v);
        if (other == v || used[other]) continue;
        used[v] = used[other] = 1;
        cur.push_back(e);
        enum_pms(inst, used, v + 1, cur, out);
        cur.pop_back();
        used[v] = used[other] = 0;
    }
}

std::vector<std::vector<std::uint32_t>> perfect_matchings(const MatchingInstance& inst) {
    std::vector<char> used(inst.node_count, 0);
    std::vector<std::uint32_t> cur;
    std::vector<std::vector<std::uint32_t>> out;
    enum_pms(inst, used, 0, cur, out);
    return out;
}

bool connected_graph(std::uint32_t n,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    if (n == 0) return true;
    std::vector<std::uint32_t> reach{0};
    std::vector<char> vis(n, 0);
    vis[0] = 1;
    std::size_t head = 0;
    while (head < reach.size()) {
        const auto v = reach[head++];
        for (const auto& [a, b] : edges) {
            if (a == v && !vis[b]) vis[b] = 1, reach.push_back(b);
            if (b == v && !vis[a]) vis[a] = 1, reach.push_back(a);
        }
    }
    return reach.size() == n;
}

// checks every perfect matching of every stride-th connected labeled
// n-node graph; stride 1 is the full labeled family
bool sweep_labeled(std::uint32_t n, std::uint64_t& instances, std::uint64_t& bad,
                   std::uint64_t stride = 1) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> universe;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) universe.emplace_back(u, v);
    const std::uint64_t masks = 1ull << universe.size();
    for (std::uint64_t mask = 0; mask < masks; mask += stride) {
        MatchingInstance inst;
        inst.node_count = n;
        for (std::size_t e = 0; e < universe.size(); ++e)
            if (mask & (1ull << e)) inst.edges.push_back(universe[e]);
        if (inst.edges.size() < n / 2) continue;
        if (!connected_graph(n, inst.edges)) continue;
        const auto pms = perfect_matchings(inst);
        for (const auto& m : pms) {
            inst.matching = m;
            MatchingVerdict v = unique_matching(inst);
            ++instances;
            if (v.unique() != (pms.size() == 1)) ++bad;
            if (!v.unique() && !verify_alternating_circuit(inst, *v.alternating_circuit).ok())
                ++bad;
        }
    }
    return bad == 0;
}

MatchingInstance random_matching_instance(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MatchingInstance inst;
    inst.node_count = n;
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (std::uint32_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    for (std::uint32_t i = 0; i + 1 < n; i += 2) {
        inst.matching.push_back(static_cast<std::uint32_t>(inst.edges.size()));
        inst.edges.emplace_back(perm[i], perm[i + 1]);
    }
    const auto extra = static_cast<std::uint32_t>(rng() % (2 * n));
    for (std::uint32_t i = 0; i < extra; ++i) {
        const auto u = static_cast<std::uint32_t>(rng() % n);
        const auto v = static_cast<std::uint32_t>(rng() % n);
        if (u != v) inst.edges.emplace_back(u, v);
    }
    return inst;
}

}  // namespace

TEST_CASE("criterion 5: matching uniqueness agrees with enumeration") {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t instances = 0, bad = 0;
    for (std::uint32_t n : {2u, 4u, 6u}) sweep_labeled(n, instances, bad);

    // the full labeled 8-node family is ~1.8e9 (graph, matching) instances;
    // the default covers a deterministic 1-in-1024 slice of it
    const bool full = std::getenv("SKEWAC_ACCEPTANCE_FULL") != nullptr;
    std::uint64_t stride = full ? 1 : 1021;  // odd, so strided masks vary in every bit
    if (const char* env = std::getenv("SKEWAC_ACCEPTANCE_STRIDE")) stride = std::strtoull(env, nullptr, 10);
    sweep_labeled(8, instances, bad, stride);
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const MatchingInstance inst = random_matching_instance(10, seed * 7 + 3);
        const auto pms = perfect_matchings(inst);
        MatchingVerdict v = unique_matching(inst);
        ++instances;
        if (v.unique() != (pms.size() == 1)) ++bad;
        if (!v.unique() && !verify_alternating_circuit(inst, *v.alternating_circuit).ok()) ++bad;
    }
    const bool pass = bad == 0;
    report(5, pass,
           std::to_string(instances) + " instances (exhaustive n<=6, labeled n=8 stride " +
               std::to_string(stride) + ", 10k random n=10), " + std::to_string(bad) +
               " disagreements, " + std::to_string(seconds_since(t0)).substr(0, 5) + " s");
    CHECK(bad == 0);
}

TEST_CASE("criterion 6: invariant suite holds on every fuzz case") {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t failures = 0, runs = 0, trims = 0;
    test::InvariantObserver obs;
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        const auto bg = test::random_bidirected(2 + seed % 6, 1 + seed % 10, seed * 131 + 7);
        const PreprocessResult pre = canonical_preprocess(bg);
        TraversalResult res = run_acyclicity_dfs(pre.graph, &obs);
        ++runs;
        TraversalState& st = *res.state;
        const SkewGraph& g = pre.graph;
        // mate coherence of the representative map
        for (NodeId x = 0; x < g.node_count(); ++x)
            if (mate(st.cg.representative(x)) != st.cg.representative(mate(x))) ++failures;
        // laminarity witnessed through replay: each pair absorbed at most once
        // is structural; lazy vs explicit agreement re-checks the whole view
        {
            CurrentGraph replay(g);
            oracle::ExplicitGraph eg = oracle::explicit_graph_of(g);
            for (const TrimRecord& rec : st.cg.history()) {
                const Bud bud{rec.base_node, rec.base_arc, rec.members, rec.member_in,
                              rec.mate_in};
                replay.trim(bud);
                eg = oracle::explicit_trim(eg, bud);
                std::size_t live = 0;
                for (const auto& arc : eg.arcs) {
                    ++live;
                    if (replay.is_dead(arc.id) ||
                        replay.current_tail(arc.id) != arc.tail ||
                        replay.current_head(arc.id) != arc.head)
                        ++failures;
                }
                if (live != replay.live_arcs().size()) ++failures;
                ++trims;
            }
        }
        // one-directional regular reachability on weakly acyclic instances
        if (!res.circuit && g.arc_count() <= 26) {
            for (NodeId s = 0; s < g.node_count(); s += 2) {
                const bool fwd = oracle::brute_regular_path(g, s, mate(s), 26).has_value();
                const bool bwd = oracle::brute_regular_path(g, mate(s), s, 26).has_value();
                if (fwd && bwd) ++failures;
            }
        }
    }
    failures += obs.failures;
    const bool pass = failures == 0;
    report(6, pass,
           std::to_string(runs) + " runs, " + std::to_string(trims) + " trims, " +
               std::to_string(obs.events) + " observed events, " + std::to_string(failures) +
               " invariant failures, " + std::to_string(seconds_since(t0)).substr(0, 5) + " s");
    CHECK(failures == 0);
}

TEST_CASE("criterion 7: strong decomposition completes quickly at desk scale") {
    const auto t0 = std::chrono::steady_clock::now();
    const SkewGraph g = composed(500, 2000, 2024);  // (n, m) = (10^3, 4*10^3)
    StrongDecomposeResult r = decompose_strong(g);
    REQUIRE(r.tree.has_value());
    const bool verified = verify_strong_decomposition(g, *r.tree).ok();
    const double dt = seconds_since(t0);
    const bool pass = verified && dt < 10.0;
    report(7, pass, std::to_string(dt).substr(0, 5) + " s, tree verified");
    CHECK(verified);
    CHECK(dt < 10.0);
}
