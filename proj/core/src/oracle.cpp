#include "skewac/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace skewac::oracle {

SkewGraph fixture_f1() {
    // a->x, x->a', b->y, y->b', a'->b (mates implicit)
    return SkewGraph(4, {{0, 2}, {2, 1}, {4, 6}, {6, 5}, {1, 4}});
}

SkewGraph fixture_f2() { return SkewGraph(2, {{0, 2}, {2, 1}}); }

SkewGraph fixture_f3() { return SkewGraph(2, {{0, 2}, {2, 0}}); }

SkewGraph fixture_f4() { return SkewGraph(3, {{0, 2}, {2, 4}, {4, 3}}); }

Bud fixture_f4_bud() {
    // base v (node 2) entered by arc 0 = s->v; member w with forest arc
    // 2 = v->w; w' entered by 5 = v->w'.
    return Bud{2, 0, {4}, {2}, {5}};
}

std::optional<Walk> brute_regular_circuit(const SkewGraph& g, ArcId cap) {
    if (g.arc_count() > cap)
        throw InputError("oracle refuses: arc count " + std::to_string(g.arc_count()) +
                         " exceeds cap " + std::to_string(cap));
    std::vector<char> on_path(g.node_count(), 0);
    std::vector<char> pair_used(g.arc_pair_count(), 0);
    std::vector<ArcId> arcs;

    std::function<bool(NodeId, NodeId, ArcId)> dfs = [&](NodeId at, NodeId target,
                                                         ArcId anchor) -> bool {
        for (ArcId a : g.out_arcs(at)) {
            if (a <= anchor || pair_used[arc_pair_of(a)]) continue;
            const NodeId h = g.head(a);
            if (h == target) {
                arcs.push_back(a);
                return true;
            }
            if (on_path[h]) continue;
            arcs.push_back(a);
            on_path[h] = 1;
            pair_used[arc_pair_of(a)] = 1;
            if (dfs(h, target, anchor)) return true;
            arcs.pop_back();
            on_path[h] = 0;
            pair_used[arc_pair_of(a)] = 0;
        }
        return false;
    };

    for (ArcId anchor = 0; anchor < g.arc_count(); ++anchor) {
        const NodeId s = g.tail(anchor), h = g.head(anchor);
        arcs.assign(1, anchor);
        if (h == s) {
            return Walk{Walk::Kind::Cycle, {s, s}, {anchor}};
        }
        on_path[s] = on_path[h] = 1;
        pair_used[arc_pair_of(anchor)] = 1;
        if (dfs(h, s, anchor)) {
            Walk w;
            w.kind = Walk::Kind::Cycle;
            w.arcs = arcs;
            w.nodes.push_back(g.tail(arcs.front()));
            for (ArcId a : w.arcs) w.nodes.push_back(g.head(a));
            return w;
        }
        on_path[s] = on_path[h] = 0;
        pair_used[arc_pair_of(anchor)] = 0;
    }
    return std::nullopt;
}

std::optional<Walk> brute_regular_path(const SkewGraph& g, NodeId s, NodeId t, ArcId cap) {
    if (g.arc_count() > cap)
        throw InputError("oracle refuses: arc count exceeds cap");
    if (s == t) return Walk{Walk::Kind::Open, {s}, {}};
    std::vector<char> on_path(g.node_count(), 0);
    std::vector<char> pair_used(g.arc_pair_count(), 0);
    std::vector<ArcId> arcs;
    std::function<bool(NodeId)> dfs = [&](NodeId at) -> bool {
        for (ArcId a : g.out_arcs(at)) {
            if (pair_used[arc_pair_of(a)]) continue;
            const NodeId h = g.head(a);
            if (on_path[h]) continue;
            arcs.push_back(a);
            if (h == t) return true;
            on_path[h] = 1;
            pair_used[arc_pair_of(a)] = 1;
            if (dfs(h)) return true;
            arcs.pop_back();
            on_path[h] = 0;
            pair_used[arc_pair_of(a)] = 0;
        }
        return false;
    };
    on_path[s] = 1;
    if (!dfs(s)) return std::nullopt;
    Walk w;
    w.kind = Walk::Kind::Open;
    w.arcs = arcs;
    w.nodes.push_back(s);
    for (ArcId a : w.arcs) w.nodes.push_back(g.head(a));
    return w;
}

bool is_bud(const SkewGraph& g, const Bud& bud, ArcId cap) {
    const NodeSet v = bud.node_set();
    if (!is_self_symmetric(v)) return false;
    if (bud.base_arc >= g.arc_count()) return false;
    if (g.head(bud.base_arc) != bud.base_node) return false;
    if (node_set_contains(v, g.tail(bud.base_arc))) return false;
    InducedSubgraph sub = induced_subgraph(g, v);
    const NodeId base_new = sub.node_from_base[bud.base_node];
    for (NodeId z = 0; z < sub.graph.node_count(); ++z)
        if (!brute_regular_path(sub.graph, base_new, z, cap)) return false;
    return true;
}

ExplicitGraph explicit_graph_of(const SkewGraph& g) {
    ExplicitGraph eg;
    std::vector<NodeId> nodes(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) nodes[v] = v;
    eg.nodes = make_node_set(std::move(nodes));
    for (ArcId a = 0; a < g.arc_count(); ++a) eg.arcs.push_back({a, g.tail(a), g.head(a)});
    return eg;
}

ExplicitGraph explicit_trim(const ExplicitGraph& g, const Bud& bud) {
    const NodeSet vt = bud.node_set();
    const NodeId base = bud.base_node;
    ExplicitGraph out;
    std::vector<NodeId> nodes;
    for (NodeId v : g.nodes)
        if (!node_set_contains(vt, v) || v == base || v == mate(base)) nodes.push_back(v);
    out.nodes = make_node_set(std::move(nodes));
    for (const auto& arc : g.arcs) {
        const bool t_in = node_set_contains(vt, arc.tail);
        const bool h_in = node_set_contains(vt, arc.head);
        if (t_in && h_in) continue;
        ExplicitGraph::Arc na = arc;
        if (h_in) na.head = (arc.id == bud.base_arc) ? base : mate(base);
        if (t_in) na.tail = (arc.id == mate_arc(bud.base_arc)) ? mate(base) : base;
        out.arcs.push_back(na);
    }
    return out;
}

ExplicitGraph explicit_trim(const SkewGraph& g, const Bud& bud) {
    return explicit_trim(explicit_graph_of(g), bud);
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

struct SkewBuilder {
    std::vector<std::pair<NodeId, NodeId>> arc_pairs;
    std::vector<std::uint32_t> outdeg;  // per node; indeg(v) == outdeg(mate(v))

    NodeId alloc_pair() {
        const NodeId v = static_cast<NodeId>(outdeg.size());
        outdeg.push_back(0);
        outdeg.push_back(0);
        return v;
    }

    std::uint32_t indeg(NodeId v) const { return outdeg[mate(v)]; }

    bool can_add(NodeId u, NodeId v) const {
        if (u == v || v == mate(u)) return false;
        if (indeg(u) >= 2 && outdeg[u] + 1 >= 2) return false;
        if (indeg(v) + 1 >= 2 && outdeg[v] >= 2) return false;
        return true;
    }

    void add(NodeId u, NodeId v) {
        arc_pairs.emplace_back(u, v);
        ++outdeg[u];
        ++outdeg[mate(v)];
    }

    SkewGraph build() const {
        return SkewGraph(static_cast<PairId>(outdeg.size() / 2), arc_pairs);
    }
};

BidirectedGraph gen_random_bidirected(std::uint32_t n, std::uint32_t m, Rng& rng) {
    std::vector<BEdge> edges;
    edges.reserve(m);
    for (std::uint32_t i = 0; i < m && n > 0; ++i) {
        const BNodeId u = static_cast<BNodeId>(rng.next(n));
        const BNodeId v = static_cast<BNodeId>(rng.next(n));
        const EndDir du = rng.coin() ? EndDir::Out : EndDir::In;
        const EndDir dv = rng.coin() ? EndDir::Out : EndDir::In;
        edges.push_back({u, du, v, dv});
    }
    return BidirectedGraph(n, std::move(edges));
}

SkewGraph gen_strongly_acyclic(std::uint32_t pairs, std::uint32_t arc_pairs, Rng& rng) {
    SkewBuilder b;
    std::vector<NodeId> lo(pairs);  // node at antisymmetric position r
    for (std::uint32_t k = 0; k < pairs; ++k) lo[k] = b.alloc_pair() + (rng.coin() ? 1 : 0);
    for (std::uint32_t k = pairs; k-- > 1;) std::swap(lo[k], lo[rng.next(k + 1)]);
    // pos(lo[r]) = r, pos(mate) mirrored; arcs go to larger positions
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = 200ull * arc_pairs + 1000;
    std::uint32_t added = 0;
    while (added < arc_pairs && attempts++ < max_attempts) {
        const std::uint32_t r1 = static_cast<std::uint32_t>(rng.next(2 * pairs));
        const std::uint32_t r2 = static_cast<std::uint32_t>(rng.next(2 * pairs));
        if (r1 >= r2) continue;
        const NodeId u = r1 < pairs ? lo[r1] : mate(lo[2 * pairs - 1 - r1]);
        const NodeId v = r2 < pairs ? lo[r2] : mate(lo[2 * pairs - 1 - r2]);
        if (!b.can_add(u, v)) continue;
        b.add(u, v);
        ++added;
    }
    if (added < arc_pairs)
        throw InputError("generate: infeasible strongly-acyclic budget");
    return b.build();
}

// One a-connected weakly acyclic piece: a hub pair with parallel chain and
// diamond branches. Returns the hub node.
NodeId gen_connected_piece(SkewBuilder& b, std::uint32_t pairs, Rng& rng) {
    assert(pairs >= 2);
    const NodeId hub = b.alloc_pair();
    std::uint32_t left = pairs - 1;
    while (left > 0) {
        const std::uint32_t len =
            1 + static_cast<std::uint32_t>(rng.next(std::min<std::uint64_t>(left, 4)));
        // chain hub -> c1 -> ... -> ck -> hub'
        NodeId prev = hub;
        for (std::uint32_t i = 0; i < len; ++i) {
            const NodeId c = b.alloc_pair();
            b.add(prev, c);
            prev = c;
        }
        b.add(prev, mate(hub));
        left -= len;
    }
    return hub;
}

SkewGraph gen_strongly_connected(std::uint32_t pairs, Rng& rng) {
    if (pairs < 4) throw InputError("generate: strongly-connected kind needs >= 4 pairs");
    SkewBuilder b;
    const std::uint32_t p1 = 2 + static_cast<std::uint32_t>(rng.next(pairs - 3));
    const NodeId a = gen_connected_piece(b, p1, rng);
    const NodeId bb = gen_connected_piece(b, pairs - p1, rng);
    // crossing pair {a'b, b'a}
    b.add(mate(a), bb);
    return b.build();
}

SkewGraph gen_weakly_acyclic_composed(std::uint32_t pairs, std::uint32_t arc_pairs, Rng& rng) {
    if (pairs < 2) throw InputError("generate: composed kind needs >= 2 pairs");
    SkewBuilder b;
    // Carve the pair budget into bipartite strongly acyclic blocks joined by
    // single crossing pairs, with a few sink-only pairs taking extra arcs.
    std::vector<std::pair<NodeId, std::uint32_t>> blocks;  // (first node, pairs)
    std::uint32_t left = pairs;
    while (left > 0) {
        const std::uint32_t sz =
            std::min<std::uint32_t>(left, 2 + static_cast<std::uint32_t>(rng.next(11)));
        const NodeId first = static_cast<NodeId>(b.outdeg.size());
        for (std::uint32_t i = 0; i < sz; ++i) b.alloc_pair();
        blocks.emplace_back(first, sz);
        left -= sz;
    }
    const std::uint64_t join_arcs = blocks.size() - 1;
    const std::uint64_t internal_budget =
        arc_pairs > join_arcs ? arc_pairs - join_arcs : 0;

    // Bipartite internals: sources (first half of each block) point at sinks.
    std::uint64_t internal_added = 0;
    auto fill_block = [&](NodeId first, std::uint32_t sz, std::uint64_t quota) {
        const std::uint32_t sources = (sz + 1) / 2;
        const std::uint32_t sinks = sz - sources;
        if (sinks == 0) return;
        std::uint64_t added = 0, attempts = 0;
        while (added < quota && internal_added < internal_budget && attempts++ < 20 * quota + 40) {
            const NodeId u = first + 2 * static_cast<NodeId>(rng.next(sources));
            NodeId v = first + 2 * (sources + static_cast<NodeId>(rng.next(sinks)));
            if (rng.coin()) v = mate(v);  // sink side choice
            // keep the block acyclic: sources precede sinks, one direction only
            if (!b.can_add(u, v)) continue;
            b.add(u, v);
            ++added;
            ++internal_added;
        }
    };
    for (std::size_t bi = 0; bi < blocks.size() && internal_added < internal_budget; ++bi) {
        const auto [first, sz] = blocks[bi];
        fill_block(first, sz, (internal_budget * sz) / pairs + 1);
    }
    // top-up pass over random blocks until the budget is met
    for (std::uint64_t round = 0;
         internal_added < internal_budget && round < 4 * blocks.size() + 16; ++round) {
        const auto [first, sz] = blocks[rng.next(blocks.size())];
        fill_block(first, sz, internal_budget - internal_added);
    }
    // Join blocks left to right with single crossing mate pairs.
    for (std::size_t bi = 1; bi < blocks.size(); ++bi) {
        const auto [pf, psz] = blocks[bi - 1];
        const auto [cf, csz] = blocks[bi];
        bool joined = false;
        for (int attempt = 0; attempt < 200 && !joined; ++attempt) {
            NodeId x = pf + static_cast<NodeId>(rng.next(2 * psz));
            NodeId y = cf + static_cast<NodeId>(rng.next(2 * csz));
            if (!b.can_add(x, y)) continue;
            b.add(x, y);
            joined = true;
        }
        if (!joined) {
            // both blocks always have an untouched mate side somewhere
            throw InputError("generate: could not join blocks within budget");
        }
    }
    return b.build();
}

}  // namespace

GenResult generate(const GenSpec& spec) {
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ull + 0x2545F4914F6CDD1Dull);
    GenResult res;
    switch (spec.kind) {
        case GenSpec::Kind::RandomBidirected:
            res.bidirected = gen_random_bidirected(spec.nodes, spec.edges, rng);
            break;
        case GenSpec::Kind::StronglyAcyclic:
            res.skew = gen_strongly_acyclic(spec.nodes, spec.edges, rng);
            break;
        case GenSpec::Kind::WeaklyAcyclicComposed:
            res.skew = gen_weakly_acyclic_composed(spec.nodes, spec.edges, rng);
            break;
        case GenSpec::Kind::StronglyConnectedWeaklyAcyclic:
            res.skew = gen_strongly_connected(spec.nodes, rng);
            break;
    }
    return res;
}

}  // namespace skewac::oracle
