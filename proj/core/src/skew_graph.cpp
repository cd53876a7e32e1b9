#include "skewac/skew_graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace skewac {

SkewGraph::SkewGraph(PairId node_pairs, const std::vector<std::pair<NodeId, NodeId>>& arc_pairs)
    : pairs_(node_pairs) {
    const NodeId n = node_count();
    tail_.reserve(2 * arc_pairs.size());
    head_.reserve(2 * arc_pairs.size());
    adj_.assign(n, {});
    for (const auto& [u, v] : arc_pairs) {
        if (u >= n || v >= n)
            throw InputError("arc endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with " + std::to_string(n) + " nodes");
        const ArcId a = static_cast<ArcId>(tail_.size());
        tail_.push_back(u);
        head_.push_back(v);
        tail_.push_back(mate(v));
        head_.push_back(mate(u));
        adj_[u].push_back(a);
        adj_[mate(v)].push_back(a + 1);
    }
}

std::vector<ArcId> SkewGraph::in_arcs(NodeId v) const {
    std::vector<ArcId> res;
    res.reserve(adj_[mate(v)].size());
    for (ArcId a : adj_[mate(v)]) res.push_back(mate_arc(a));
    return res;
}

Walk reverse_mate_walk(const SkewGraph& g, const Walk& w) {
    (void)g;
    Walk r;
    r.kind = w.kind;
    r.nodes.reserve(w.nodes.size());
    r.arcs.reserve(w.arcs.size());
    for (auto it = w.nodes.rbegin(); it != w.nodes.rend(); ++it) r.nodes.push_back(mate(*it));
    for (auto it = w.arcs.rbegin(); it != w.arcs.rend(); ++it) r.arcs.push_back(mate_arc(*it));
    return r;
}

bool is_walk(const SkewGraph& g, const Walk& w) {
    if (w.nodes.empty()) return false;
    if (w.nodes.size() != w.arcs.size() + 1) return false;
    for (NodeId v : w.nodes)
        if (!g.valid_node(v)) return false;
    for (std::size_t i = 0; i < w.arcs.size(); ++i) {
        const ArcId a = w.arcs[i];
        if (!g.valid_arc(a)) return false;
        if (g.tail(a) != w.nodes[i] || g.head(a) != w.nodes[i + 1]) return false;
    }
    if (w.kind == Walk::Kind::Cycle) {
        if (w.arcs.empty()) return false;
        if (w.nodes.front() != w.nodes.back()) return false;
    }
    return true;
}

bool is_regular(const SkewGraph& g, const Walk& w) {
    (void)g;
    std::unordered_set<ArcId> used;
    for (ArcId a : w.arcs) {
        if (used.count(a) || used.count(mate_arc(a))) return false;
        used.insert(a);
    }
    return true;
}

bool is_node_simple_circuit(const SkewGraph& g, const Walk& w) {
    if (w.kind != Walk::Kind::Cycle || !is_walk(g, w)) return false;
    std::unordered_set<NodeId> seen;
    for (std::size_t i = 0; i + 1 < w.nodes.size(); ++i)
        if (!seen.insert(w.nodes[i]).second) return false;
    return true;
}

NodeSet make_node_set(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

bool node_set_contains(const NodeSet& s, NodeId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_self_symmetric(const NodeSet& s) {
    for (NodeId v : s)
        if (!node_set_contains(s, mate(v))) return false;
    return true;
}

NodeSet mate_set(const NodeSet& s) {
    std::vector<NodeId> m;
    m.reserve(s.size());
    for (NodeId v : s) m.push_back(mate(v));
    return make_node_set(std::move(m));
}

ArcSet delta_in(const SkewGraph& g, const NodeSet& x) {
    ArcSet res;
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (!node_set_contains(x, g.tail(a)) && node_set_contains(x, g.head(a)))
            res.push_back(a);
    return res;
}

ArcSet delta_out(const SkewGraph& g, const NodeSet& x) {
    ArcSet res;
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (node_set_contains(x, g.tail(a)) && !node_set_contains(x, g.head(a)))
            res.push_back(a);
    return res;
}

ArcSet gamma(const SkewGraph& g, const NodeSet& x) {
    ArcSet res;
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (node_set_contains(x, g.tail(a)) && node_set_contains(x, g.head(a)))
            res.push_back(a);
    return res;
}

InducedSubgraph induced_subgraph(const SkewGraph& g, const NodeSet& x) {
    if (!is_self_symmetric(x))
        throw std::invalid_argument("induced_subgraph: node set is not self-symmetric");
    InducedSubgraph res;
    res.node_from_base.assign(g.node_count(), kNoNode);
    res.node_to_base.reserve(x.size());
    for (NodeId v : x) {
        if ((v & 1u) != 0) continue;  // mate follows because x is self-symmetric
        const NodeId nv = static_cast<NodeId>(res.node_to_base.size());
        res.node_to_base.push_back(v);
        res.node_to_base.push_back(mate(v));
        res.node_from_base[v] = nv;
        res.node_from_base[mate(v)] = nv + 1;
    }
    std::vector<std::pair<NodeId, NodeId>> arc_pairs;
    for (ArcId j = 0; j < g.arc_pair_count(); ++j) {
        const ArcId a = 2 * j;
        const NodeId t = res.node_from_base[g.tail(a)], h = res.node_from_base[g.head(a)];
        if (t == kNoNode || h == kNoNode) continue;
        arc_pairs.emplace_back(t, h);
        res.arc_pair_to_base.push_back(j);
    }
    res.graph = SkewGraph(static_cast<PairId>(res.node_to_base.size() / 2), arc_pairs);
    return res;
}

void check_symmetry_invariants(const SkewGraph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (mate(v) == v || mate(mate(v)) != v)
            throw std::logic_error("node mate involution broken");
    }
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const ArcId b = mate_arc(a);
        if (b == a || mate_arc(b) != a) throw std::logic_error("arc mate involution broken");
        if (g.tail(b) != mate(g.head(a)) || g.head(b) != mate(g.tail(a)))
            throw std::logic_error("arc mate endpoints broken");
    }
}

}  // namespace skewac
