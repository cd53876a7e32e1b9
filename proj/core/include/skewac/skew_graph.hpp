#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewac {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;
using PairId = std::uint32_t;

constexpr NodeId kNoNode = static_cast<NodeId>(-1);
constexpr ArcId kNoArc = static_cast<ArcId>(-1);

/// Thrown on malformed user-supplied data (files, ids out of range, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr NodeId mate(NodeId v) { return v ^ 1u; }
inline constexpr ArcId mate_arc(ArcId a) { return a ^ 1u; }
inline constexpr PairId pair_of(NodeId v) { return v >> 1; }
inline constexpr PairId arc_pair_of(ArcId a) { return a >> 1; }

// Skew-symmetric digraph. Nodes come in mate pairs {2k, 2k+1}, arcs in mate
// pairs {2j, 2j+1}; mate lookup is id XOR 1. For an arc a = (u, v) the mate
// is (mate(v), mate(u)). Only outgoing adjacency is stored; incoming arcs of
// v are the mates of the outgoing arcs of mate(v). Immutable once built.
class SkewGraph {
public:
    SkewGraph() = default;

    // One entry of `arc_pairs` declares the arc u -> v together with its
    // implicit mate. Parallel declarations are kept as distinct arcs.
    SkewGraph(PairId node_pairs, const std::vector<std::pair<NodeId, NodeId>>& arc_pairs);

    PairId node_pairs() const { return pairs_; }
    NodeId node_count() const { return 2 * pairs_; }
    ArcId arc_count() const { return static_cast<ArcId>(tail_.size()); }
    ArcId arc_pair_count() const { return arc_count() / 2; }

    NodeId tail(ArcId a) const { return tail_[a]; }
    NodeId head(ArcId a) const { return head_[a]; }

    const std::vector<ArcId>& out_arcs(NodeId v) const { return adj_[v]; }
    std::size_t out_degree(NodeId v) const { return adj_[v].size(); }
    std::size_t in_degree(NodeId v) const { return adj_[mate(v)].size(); }

    // Incoming arcs of v, i.e. mates of arcs leaving mate(v), in list order.
    std::vector<ArcId> in_arcs(NodeId v) const;

    bool valid_node(NodeId v) const { return v < node_count(); }
    bool valid_arc(ArcId a) const { return a < arc_count(); }

private:
    PairId pairs_ = 0;
    std::vector<NodeId> tail_;
    std::vector<NodeId> head_;
    std::vector<std::vector<ArcId>> adj_;
};

// A directed walk. Nodes has one more element than arcs; a Cycle in addition
// closes up (last node equals first). The empty walk at a node is a single
// node with no arcs.
struct Walk {
    enum class Kind { Open, Cycle };
    Kind kind = Kind::Open;
    std::vector<NodeId> nodes;
    std::vector<ArcId> arcs;

    std::size_t length() const { return arcs.size(); }
};

Walk reverse_mate_walk(const SkewGraph& g, const Walk& w);

// Structural walk check: consecutive incidence plus cycle closure.
bool is_walk(const SkewGraph& g, const Walk& w);

// True iff no arc occurs together with its mate. Expects an arc-simple walk;
// repeated arc ids are rejected as well.
bool is_regular(const SkewGraph& g, const Walk& w);

bool is_node_simple_circuit(const SkewGraph& g, const Walk& w);

// Node sets are kept sorted and unique.
using NodeSet = std::vector<NodeId>;
using ArcSet = std::vector<ArcId>;

NodeSet make_node_set(std::vector<NodeId> nodes);
bool node_set_contains(const NodeSet& s, NodeId v);
bool is_self_symmetric(const NodeSet& s);
NodeSet mate_set(const NodeSet& s);

ArcSet delta_in(const SkewGraph& g, const NodeSet& x);
ArcSet delta_out(const SkewGraph& g, const NodeSet& x);
ArcSet gamma(const SkewGraph& g, const NodeSet& x);

// Every-id exhaustive involution check; used by tests and debug scans.
void check_symmetry_invariants(const SkewGraph& g);

// Relabeled subgraph induced by a self-symmetric node set, with id maps back
// to the parent graph.
struct InducedSubgraph {
    SkewGraph graph;
    std::vector<NodeId> node_to_base;      // per new node
    std::vector<NodeId> node_from_base;    // per base node, kNoNode if absent
    std::vector<ArcId> arc_pair_to_base;   // per new arc pair: base arc pair

    NodeId to_base(NodeId v) const { return node_to_base[v]; }
    ArcId arc_to_base(ArcId a) const { return 2 * arc_pair_to_base[arc_pair_of(a)] + (a & 1u); }
};

InducedSubgraph induced_subgraph(const SkewGraph& g, const NodeSet& x);

}  // namespace skewac
