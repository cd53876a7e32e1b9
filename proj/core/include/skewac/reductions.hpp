#pragma once

#include "skewac/bidirected.hpp"
#include "skewac/convert.hpp"

namespace skewac {

// Maps nodes and edges of a reduced graph back to the graph it was built
// from. Copy nodes point at their parent node, gadget nodes at the edge they
// replace; structural edges (splitters, gadget spokes) carry no input edge.
struct ReductionTrace {
    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    struct NodeBack {
        bool is_gadget = false;
        std::uint32_t id = kNone;  // input node (copy) or input edge (gadget)
    };

    std::vector<NodeBack> node_back;   // per output node
    std::vector<std::uint32_t> edge_back;  // per output edge; kNone if structural
    BNodeId input_nodes = 0;
    EdgeId input_edges = 0;
};

ReductionTrace compose(const ReductionTrace& inner, const ReductionTrace& outer);

// Splits every node v into v1, v2 joined by a directed edge v1 -> v2 and
// reattaches each edge end to v1 if it enters v, to v2 if it leaves v,
// keeping its direction. Node-simple cycles correspond to edge-simple ones.
std::pair<BidirectedGraph, ReductionTrace> node_to_edge(const BidirectedGraph& bg);

// Splits every node into two copies (no joining edge) and replaces each edge
// e = uv by a fresh node w_e with spokes u1 w_e, u2 w_e entering w_e and
// w_e v1, w_e v2 leaving it, endpoint directions copied from e. Edge-simple
// cycles correspond to node-simple ones; loops are routed through w_e.
std::pair<BidirectedGraph, ReductionTrace> edge_to_node(const BidirectedGraph& bg);

// edge_to_node, then node_to_edge, then bidirected_to_skew. The image
// satisfies the degree property (in- or out-degree at most 1 at each node)
// and has no arcs between mates; weak edge-acyclicity is preserved exactly.
struct PreprocessResult {
    SkewGraph graph;
    ReductionTrace trace;
    NodeMap map;
};
PreprocessResult canonical_preprocess(const BidirectedGraph& bg);

// Rewrites an edge-simple cycle of the reduced graph as the corresponding
// simple cycle of the original graph.
BWalk pull_back_cycle(const ReductionTrace& trace, const BWalk& w);

}  // namespace skewac
