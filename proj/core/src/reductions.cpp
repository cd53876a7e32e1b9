#include "skewac/reductions.hpp"

#include <cassert>

namespace skewac {

ReductionTrace compose(const ReductionTrace& inner, const ReductionTrace& outer) {
    ReductionTrace t;
    t.input_nodes = inner.input_nodes;
    t.input_edges = inner.input_edges;
    t.node_back.reserve(outer.node_back.size());
    for (const auto& nb : outer.node_back) {
        if (nb.is_gadget) {
            // gadget of an inner-output edge; resolve that edge further back
            const std::uint32_t e = inner.edge_back[nb.id];
            t.node_back.push_back({true, e});
        } else {
            t.node_back.push_back(inner.node_back[nb.id]);
        }
    }
    t.edge_back.reserve(outer.edge_back.size());
    for (std::uint32_t eb : outer.edge_back)
        t.edge_back.push_back(eb == ReductionTrace::kNone ? ReductionTrace::kNone
                                                          : inner.edge_back[eb]);
    return t;
}

std::pair<BidirectedGraph, ReductionTrace> node_to_edge(const BidirectedGraph& bg) {
    const BNodeId n = bg.node_count();
    std::vector<BEdge> edges;
    edges.reserve(n + bg.edge_count());
    ReductionTrace t;
    t.input_nodes = n;
    t.input_edges = bg.edge_count();
    for (BNodeId v = 0; v < n; ++v) {
        t.node_back.push_back({false, v});  // v1 = 2v
        t.node_back.push_back({false, v});  // v2 = 2v+1
    }
    for (BNodeId v = 0; v < n; ++v) {
        edges.push_back({2 * v, EndDir::Out, 2 * v + 1, EndDir::In});
        t.edge_back.push_back(ReductionTrace::kNone);
    }
    for (EdgeId j = 0; j < bg.edge_count(); ++j) {
        const BEdge& e = bg.edge(j);
        const BNodeId uc = 2 * e.u + (e.du == EndDir::In ? 0 : 1);
        const BNodeId vc = 2 * e.v + (e.dv == EndDir::In ? 0 : 1);
        edges.push_back({uc, e.du, vc, e.dv});
        t.edge_back.push_back(j);
    }
    return {BidirectedGraph(2 * n, std::move(edges)), std::move(t)};
}

std::pair<BidirectedGraph, ReductionTrace> edge_to_node(const BidirectedGraph& bg) {
    const BNodeId n = bg.node_count();
    const EdgeId m = bg.edge_count();
    std::vector<BEdge> edges;
    edges.reserve(4 * m);
    ReductionTrace t;
    t.input_nodes = n;
    t.input_edges = m;
    for (BNodeId v = 0; v < n; ++v) {
        t.node_back.push_back({false, v});
        t.node_back.push_back({false, v});
    }
    for (EdgeId j = 0; j < m; ++j) t.node_back.push_back({true, j});  // w_e = 2n + j
    for (EdgeId j = 0; j < m; ++j) {
        const BEdge& e = bg.edge(j);
        const BNodeId w = 2 * n + j;
        edges.push_back({2 * e.u, e.du, w, EndDir::In});
        edges.push_back({2 * e.u + 1, e.du, w, EndDir::In});
        edges.push_back({w, EndDir::Out, 2 * e.v, e.dv});
        edges.push_back({w, EndDir::Out, 2 * e.v + 1, e.dv});
        for (int k = 0; k < 4; ++k) t.edge_back.push_back(ReductionTrace::kNone);
    }
    return {BidirectedGraph(2 * n + m, std::move(edges)), std::move(t)};
}

PreprocessResult canonical_preprocess(const BidirectedGraph& bg) {
    auto [g1, t1] = edge_to_node(bg);
    auto [g2, t2] = node_to_edge(g1);
    auto [sk, map] = bidirected_to_skew(g2);
    return {std::move(sk), compose(t1, t2), std::move(map)};
}

namespace {

struct Token {
    bool is_edge;
    std::uint32_t id;  // input edge id or input node id
};

}  // namespace

BWalk pull_back_cycle(const ReductionTrace& trace, const BWalk& w) {
    if (w.kind != BWalk::Kind::Cycle || w.nodes.empty() ||
        w.nodes.size() != w.edges.size() + 1 || w.nodes.front() != w.nodes.back())
        throw std::invalid_argument("pull_back_cycle: not a cycle");

    // Emit input edges in traversal order; copy nodes fill the gaps between
    // emissions. A gadget split by a later node split yields the same edge
    // token twice in a row; those merge into one traversal.
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        const auto& nb = trace.node_back.at(w.nodes[i]);
        if (nb.is_gadget) {
            if (nb.id != ReductionTrace::kNone) tokens.push_back({true, nb.id});
        } else {
            tokens.push_back({false, nb.id});
        }
        const std::uint32_t eb = trace.edge_back.at(w.edges[i]);
        if (eb != ReductionTrace::kNone) tokens.push_back({true, eb});
    }

    bool any_edge = false, any_node = false;
    for (const Token& t : tokens) (t.is_edge ? any_edge : any_node) = true;
    if (!any_edge || !any_node)
        throw std::invalid_argument("pull_back_cycle: cycle does not map to the input graph");

    // Start at a node-run boundary (a node token preceded by an edge token),
    // then read alternating runs linearly.
    std::size_t start = 0;
    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!tokens[i].is_edge && tokens[(i + n - 1) % n].is_edge) {
            start = i;
            break;
        }
    }

    BWalk out;
    out.kind = BWalk::Kind::Cycle;
    std::size_t i = 0;
    while (i < n) {
        // node run: copies of one parent node
        const std::uint32_t parent = tokens[(start + i) % n].id;
        while (i < n && !tokens[(start + i) % n].is_edge) {
            if (tokens[(start + i) % n].id != parent)
                throw std::invalid_argument("pull_back_cycle: inconsistent copy run");
            ++i;
        }
        out.nodes.push_back(parent);
        if (i >= n) throw std::invalid_argument("pull_back_cycle: dangling node run");
        // edge run: duplicated gadget tokens collapse to one edge
        const std::uint32_t e = tokens[(start + i) % n].id;
        while (i < n && tokens[(start + i) % n].is_edge) {
            if (tokens[(start + i) % n].id != e)
                throw std::invalid_argument("pull_back_cycle: two edges with no node between");
            ++i;
        }
        out.edges.push_back(e);
    }
    out.nodes.push_back(out.nodes.front());
    return out;
}

}  // namespace skewac
