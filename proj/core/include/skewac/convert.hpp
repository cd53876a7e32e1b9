#pragma once

#include "skewac/bidirected.hpp"
#include "skewac/skew_graph.hpp"

namespace skewac {

// Correspondence between a bidirected graph and its skew-symmetric image.
// Bidirected node k maps to node pair k; edge j maps to arc pair j. The
// partition {V1, V2} is recorded as the side bit of each pair's V1 node.
struct NodeMap {
    std::vector<std::uint8_t> v1_side;  // per node pair: 0 or 1

    NodeId v1_node(BNodeId k) const { return 2 * k + v1_side[k]; }
    BNodeId bnode_of(NodeId x) const { return pair_of(x); }
    EdgeId edge_of(ArcId a) const { return arc_pair_of(a); }
};

// One arc-mate pair per edge: a directed edge u->v becomes {u->v, v'->u'},
// an edge leaving both ends becomes {u->v', v->u'}, an edge entering both
// becomes {u'->v, v'->u}. Loops map to parallel arcs between a pair.
std::pair<SkewGraph, NodeMap> bidirected_to_skew(const BidirectedGraph& bg);

// Inverse conversion; side_choice picks the V1 node of each pair. With the
// canonical all-even choice this inverts bidirected_to_skew up to edge
// multiset equality.
BidirectedGraph skew_to_bidirected(const SkewGraph& g, const std::vector<std::uint8_t>& side_choice);
BidirectedGraph skew_to_bidirected(const SkewGraph& g);  // canonical: even ids form V1

// tau-projection of a walk; symmetric walks project identically.
BWalk project_walk(const SkewGraph& g, const Walk& w, const NodeMap& map);

// The unique preimage of a bidirected walk. A walk starting with an entering
// edge lifts to the V2 side; the empty walk lifts to the V1 representative.
Walk lift_walk(const SkewGraph& g, const BWalk& bw, const NodeMap& map);

}  // namespace skewac
