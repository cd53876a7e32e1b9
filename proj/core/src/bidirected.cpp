#include "skewac/bidirected.hpp"

#include <algorithm>
#include <tuple>

namespace skewac {

BidirectedGraph::BidirectedGraph(BNodeId node_count, std::vector<BEdge> edges)
    : n_(node_count), edges_(std::move(edges)) {
    for (const BEdge& e : edges_)
        if (e.u >= n_ || e.v >= n_)
            throw InputError("bidirected edge endpoint out of range");
}

BEdge normalized_edge(const BEdge& e) {
    auto key = [](BNodeId v, EndDir d) { return std::make_pair(v, static_cast<int>(d)); };
    if (key(e.v, e.dv) < key(e.u, e.du)) return BEdge{e.v, e.dv, e.u, e.du};
    return e;
}

bool same_edge_multiset(const BidirectedGraph& a, const BidirectedGraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    auto key = [](const BEdge& e) {
        BEdge n = normalized_edge(e);
        return std::make_tuple(n.u, static_cast<int>(n.du), n.v, static_cast<int>(n.dv));
    };
    std::vector<std::tuple<BNodeId, int, BNodeId, int>> ka, kb;
    for (const BEdge& e : a.edges()) ka.push_back(key(e));
    for (const BEdge& e : b.edges()) kb.push_back(key(e));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

}  // namespace skewac
