#include "skewac/convert.hpp"

namespace skewac {

std::pair<SkewGraph, NodeMap> bidirected_to_skew(const BidirectedGraph& bg) {
    std::vector<std::pair<NodeId, NodeId>> arc_pairs;
    arc_pairs.reserve(bg.edge_count());
    for (const BEdge& e : bg.edges()) {
        const NodeId u1 = 2 * e.u, v1 = 2 * e.v;
        if (e.du == EndDir::Out && e.dv == EndDir::In) {
            arc_pairs.emplace_back(u1, v1);
        } else if (e.du == EndDir::In && e.dv == EndDir::Out) {
            arc_pairs.emplace_back(v1, u1);
        } else if (e.du == EndDir::Out && e.dv == EndDir::Out) {
            arc_pairs.emplace_back(u1, mate(v1));
        } else {
            arc_pairs.emplace_back(mate(u1), v1);
        }
    }
    NodeMap map;
    map.v1_side.assign(bg.node_count(), 0);
    return {SkewGraph(bg.node_count(), arc_pairs), std::move(map)};
}

BidirectedGraph skew_to_bidirected(const SkewGraph& g, const std::vector<std::uint8_t>& side_choice) {
    if (side_choice.size() != g.node_pairs())
        throw InputError("side_choice size does not match node pair count");
    std::vector<BEdge> edges;
    edges.reserve(g.arc_pair_count());
    auto v1_of = [&](PairId k) { return static_cast<NodeId>(2 * k + side_choice[k]); };
    for (ArcId j = 0; j < g.arc_pair_count(); ++j) {
        ArcId a = 2 * j;
        NodeId x = g.tail(a), y = g.head(a);
        const bool tail_v1 = (x == v1_of(pair_of(x)));
        const bool head_v1 = (y == v1_of(pair_of(y)));
        const BNodeId bu = pair_of(x), bv = pair_of(y);
        if (tail_v1 && head_v1)
            edges.push_back({bu, EndDir::Out, bv, EndDir::In});
        else if (tail_v1 && !head_v1)
            edges.push_back({bu, EndDir::Out, bv, EndDir::Out});
        else if (!tail_v1 && head_v1)
            edges.push_back({bu, EndDir::In, bv, EndDir::In});
        else
            edges.push_back({bv, EndDir::Out, bu, EndDir::In});
    }
    return BidirectedGraph(g.node_pairs(), std::move(edges));
}

BidirectedGraph skew_to_bidirected(const SkewGraph& g) {
    return skew_to_bidirected(g, std::vector<std::uint8_t>(g.node_pairs(), 0));
}

BWalk project_walk(const SkewGraph& g, const Walk& w, const NodeMap& map) {
    if (!is_walk(g, w)) throw std::invalid_argument("project_walk: not a walk");
    BWalk bw;
    bw.kind = (w.kind == Walk::Kind::Cycle) ? BWalk::Kind::Cycle : BWalk::Kind::Open;
    bw.nodes.reserve(w.nodes.size());
    bw.edges.reserve(w.arcs.size());
    for (NodeId v : w.nodes) bw.nodes.push_back(map.bnode_of(v));
    for (ArcId a : w.arcs) bw.edges.push_back(map.edge_of(a));
    return bw;
}

namespace {

// Chain arcwise from a fixed start node; returns nothing on a transit break.
std::optional<Walk> try_lift(const SkewGraph& g, const BWalk& bw, NodeId start) {
    Walk w;
    w.kind = (bw.kind == BWalk::Kind::Cycle) ? Walk::Kind::Cycle : Walk::Kind::Open;
    w.nodes.push_back(start);
    NodeId at = start;
    for (std::size_t i = 0; i < bw.edges.size(); ++i) {
        const ArcId even = 2 * bw.edges[i];
        ArcId chosen = kNoArc;
        for (ArcId cand : {even, mate_arc(even)}) {
            if (g.tail(cand) == at && pair_of(g.head(cand)) == bw.nodes[i + 1]) {
                chosen = cand;
                break;
            }
        }
        if (chosen == kNoArc) return std::nullopt;
        w.arcs.push_back(chosen);
        at = g.head(chosen);
        w.nodes.push_back(at);
    }
    if (bw.kind == BWalk::Kind::Cycle && (bw.edges.empty() || at != start)) return std::nullopt;
    return w;
}

}  // namespace

Walk lift_walk(const SkewGraph& g, const BWalk& bw, const NodeMap& map) {
    if (bw.nodes.empty() || bw.nodes.size() != bw.edges.size() + 1)
        throw InputError("lift_walk: malformed node/edge alternation");
    for (BNodeId b : bw.nodes)
        if (b >= g.node_pairs()) throw InputError("lift_walk: node id out of range");
    if (bw.edges.empty()) {
        Walk w;
        w.nodes.push_back(map.v1_node(bw.nodes[0]));
        return w;
    }
    for (std::size_t i = 0; i < bw.edges.size(); ++i) {
        const ArcId even = 2 * bw.edges[i];
        if (even >= g.arc_count()) throw InputError("lift_walk: edge id out of range");
        const BNodeId p = pair_of(g.tail(even)), q = pair_of(g.head(even));
        const bool fwd = (p == bw.nodes[i] && q == bw.nodes[i + 1]);
        const bool rev = (p == bw.nodes[i + 1] && q == bw.nodes[i]);
        if (!fwd && !rev) throw InputError("lift_walk: edge does not connect the stated nodes");
    }
    const NodeId base = 2 * bw.nodes[0];
    for (NodeId start : {base, mate(base)}) {
        if (auto w = try_lift(g, bw, start)) return *w;
    }
    throw InputError("lift_walk: transit condition violated");
}

}  // namespace skewac
