#pragma once

#include <cstdint>
#include <vector>

#include "skewac/skew_graph.hpp"

namespace skewac {

using BNodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Direction of an edge at one of its endpoints.
enum class EndDir : std::uint8_t { Out, In };

// One bidirected edge: (u, dir_u, v, dir_v). A usual directed edge u -> v is
// (u, Out, v, In); an edge may also leave both ends or enter both ends.
// Loops (u == v) are allowed.
struct BEdge {
    BNodeId u;
    EndDir du;
    BNodeId v;
    EndDir dv;
};

inline bool operator==(const BEdge& a, const BEdge& b) {
    return a.u == b.u && a.du == b.du && a.v == b.v && a.dv == b.dv;
}

class BidirectedGraph {
public:
    BidirectedGraph() = default;
    BidirectedGraph(BNodeId node_count, std::vector<BEdge> edges);

    BNodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const BEdge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<BEdge>& edges() const { return edges_; }

private:
    BNodeId n_ = 0;
    std::vector<BEdge> edges_;
};

// Walk in a bidirected graph, as a node/edge alternation. Whether it is a
// genuine walk (transit pairs at interior nodes) is decided by lifting it to
// the skew-symmetric image; see convert.hpp.
struct BWalk {
    enum class Kind { Open, Cycle };
    Kind kind = Kind::Open;
    std::vector<BNodeId> nodes;
    std::vector<EdgeId> edges;
};

// Canonical form for multiset comparisons: endpoint order normalized so the
// smaller (node, dir) end comes first.
BEdge normalized_edge(const BEdge& e);
bool same_edge_multiset(const BidirectedGraph& a, const BidirectedGraph& b);

}  // namespace skewac
