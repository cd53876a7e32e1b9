#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "skewac/skew_graph.hpp"

namespace skewac {

// A bud in elementary form: the base node, its entering base arc, and the
// absorbed path members below the base (top-down), together with the in-arcs
// of members and of their mates in the restoration forest. V_tau is the base
// pair plus all member pairs.
struct Bud {
    NodeId base_node = kNoNode;
    ArcId base_arc = kNoArc;
    std::vector<NodeId> members;
    std::vector<ArcId> member_in;  // in-arc of members[i]
    std::vector<ArcId> mate_in;    // in-arc of mate(members[i])

    NodeSet node_set() const;
};

struct TrimRecord {
    NodeId base_node;
    ArcId base_arc;
    std::vector<NodeId> members;
    std::vector<ArcId> member_in;
    std::vector<ArcId> mate_in;
};

// Union-find over node pairs with a side parity, near-constant amortized.
// representative(x) is the current-graph node x folds onto, mate-coherently.
class PairDsu {
public:
    explicit PairDsu(PairId pairs);

    PairId find(PairId p);
    bool same_class(NodeId x, NodeId y) { return find(pair_of(x)) == find(pair_of(y)); }
    bool singleton(PairId p) { return size_[find(p)] == 1; }
    NodeId representative(NodeId x);

    // Folds the (current) node `member` onto the (current) node `onto`;
    // mate(member) folds onto mate(onto).
    void unite(NodeId member, NodeId onto);

private:
    std::pair<PairId, std::uint8_t> find_with_parity(PairId p);

    std::vector<PairId> parent_;
    std::vector<std::uint8_t> par_;   // side flip towards parent
    std::vector<std::uint32_t> size_;
    std::vector<NodeId> label_;       // per root: node the parity-0 side maps to
};

// Lazy view of a skew-symmetric graph under a sequence of bud trimmings.
// The base graph is never rewritten: endpoints are resolved through the DSU
// (entering arcs to the antibase, leaving arcs to the base), arcs interior
// to a trimmed bud are dead and dropped when touched, and outgoing adjacency
// lists of absorbed nodes are concatenated onto the base in O(|V_tau|).
class CurrentGraph {
public:
    static constexpr std::uint32_t kNoRecord = static_cast<std::uint32_t>(-1);

    explicit CurrentGraph(const SkewGraph& g);

    const SkewGraph& base() const { return *g_; }

    // Record that absorbed this pair as a member, or kNoRecord.
    std::uint32_t owner_record(PairId p) const;
    // Records based at this pair, in trim order.
    const std::vector<std::uint32_t>& base_records(PairId p) const;

    NodeId representative(NodeId x) { return dsu_.representative(x); }
    bool same_current_pair(NodeId x, NodeId y) { return dsu_.same_class(x, y); }
    // true iff the pair of x was never touched by a trimming
    bool is_simple(NodeId x) { return dsu_.singleton(pair_of(x)); }

    bool is_dead(ArcId a) { return dsu_.same_class(g_->tail(a), g_->head(a)); }
    NodeId current_tail(ArcId a);
    NodeId current_head(ArcId a);

    void trim(const Bud& bud);

    const std::vector<TrimRecord>& history() const { return history_; }

    // Next unconsumed arc in v's concatenated list, kNoArc when exhausted.
    ArcId fetch_arc(NodeId v);
    // Unconsumed list of v without consuming it (tests and debugging).
    std::vector<ArcId> pending_list(NodeId v) const;
    void note_dead_discard() { ++dead_discards_; }
    std::uint64_t dead_discards() const { return dead_discards_; }

    // Representative of x in the graph state just before history_[record]
    // was trimmed. Unlike representative(), usable for any past state.
    NodeId rep_before(std::size_t record, NodeId x) const;

    // Splices the connector through one trimming; p must be a regular walk
    // of the graph right after that trim.
    Walk restore_path(std::size_t record, const Walk& p) const;
    // Undoes the whole history, yielding a walk of the base graph.
    Walk restore_all(const Walk& c) const;

    std::vector<ArcId> live_arcs();

    // Endpoints of an arc in the graph state just before a given record:
    // tails resolve to class bases, heads to antibases (base arc excepted).
    NodeId role_tail_before(std::size_t record, ArcId a) const;
    NodeId role_head_before(std::size_t record, ArcId a) const;

private:
    std::uint32_t class_record_before(std::size_t record, NodeId cur) const;
    std::vector<ArcId> connector(std::size_t record, NodeId target) const;
    Walk rebuild_nodes(std::vector<ArcId> arcs, Walk::Kind kind, std::size_t record) const;

    const SkewGraph* g_;
    PairDsu dsu_;
    std::vector<TrimRecord> history_;

    // Trim metadata is sparse: only pairs touched by a trimming appear, so
    // construction stays O(n + m) with small constants.
    struct MemberInfo {
        std::uint32_t record;
        NodeId node;  // the recorded member-side node
        std::uint32_t index;
    };
    std::unordered_map<PairId, MemberInfo> members_;
    std::unordered_map<PairId, std::vector<std::uint32_t>> base_records_;

    // per class root: base data of the maximal bud
    std::vector<NodeId> class_base_node_;
    std::vector<ArcId> class_base_arc_;

    // intrusive singly-linked outgoing lists over arc ids
    std::vector<ArcId> next_;
    std::vector<ArcId> list_head_;
    std::vector<ArcId> list_tail_;
    std::uint64_t dead_discards_ = 0;
};

}  // namespace skewac
