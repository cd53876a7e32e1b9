#include "skewac/acyclicity.hpp"

#include <algorithm>
#include <cassert>

namespace skewac {

void check_degree_and_loop_properties(const SkewGraph& g) {
    for (PairId k = 0; k < g.node_pairs(); ++k) {
        const NodeId v = 2 * k;
        if (g.out_degree(v) >= 2 && g.out_degree(mate(v)) >= 2)
            throw InputError("degree property violated at node pair " + std::to_string(k) +
                             ": node " + std::to_string(v) + " has in- and out-degree >= 2");
    }
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        if (g.head(a) == mate(g.tail(a)))
            throw InputError("loop property violated: arc " + std::to_string(a) + " connects node " +
                             std::to_string(g.tail(a)) + " to its mate");
    }
}

namespace {

std::optional<Walk> find_self_loop(const SkewGraph& g) {
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        if (g.tail(a) == g.head(a)) {
            Walk w;
            w.kind = Walk::Kind::Cycle;
            w.nodes = {g.tail(a), g.tail(a)};
            w.arcs = {a};
            return w;
        }
    }
    return std::nullopt;
}

class Dfs {
public:
    Dfs(const SkewGraph& g, TraversalObserver* obs)
        : g_(g), obs_(obs), state_(std::make_unique<TraversalState>(g)) {}

    TraversalResult run() {
        TraversalState& st = *state_;
        for (PairId k = 0; k < g_.node_pairs(); ++k) {
            const NodeId even = 2 * k;
            if (st.color[even] != Color::White) continue;
            const NodeId root = (g_.out_degree(even) <= 1) ? even : mate(even);
            assert(g_.out_degree(root) <= 1);
            if (obs_) obs_->on_root(st, root);
            if (auto circuit = grow_tree(root)) {
                Walk restored = st.cg.restore_all(*circuit);
                return {std::move(restored), std::move(state_)};
            }
        }
        return {std::nullopt, std::move(state_)};
    }

private:
    void set_pair_color(NodeId v, Color c, Color anti) {
        state_->color[v] = c;
        state_->color[mate(v)] = anti;
    }

    // Forest path h -> ... -> u plus the closing arc a, in the current graph.
    Walk gray_circuit(NodeId u, NodeId h, ArcId a) {
        TraversalState& st = *state_;
        Walk w;
        w.kind = Walk::Kind::Cycle;
        std::vector<ArcId> up;
        NodeId cur = u;
        while (cur != h) {
            const ArcId f = st.q[cur];
            assert(f != kNoArc);
            up.push_back(f);
            cur = st.cg.current_tail(f);
        }
        std::reverse(up.begin(), up.end());
        w.arcs = std::move(up);
        w.arcs.push_back(a);
        return w;
    }

    Bud trace_bud(NodeId u, NodeId head_antiblack, ArcId a) {
        TraversalState& st = *state_;
        Bud bud;
        bud.base_node = u;
        bud.base_arc = st.q[u];
        assert(bud.base_arc != kNoArc && "trimming at a root");
        std::vector<NodeId> members;
        std::vector<ArcId> member_in;
        NodeId cur = mate(head_antiblack);
        while (cur != u) {
            members.push_back(cur);
            member_in.push_back(st.q[cur]);
            cur = st.cg.current_tail(st.q[cur]);
        }
        std::reverse(members.begin(), members.end());
        std::reverse(member_in.begin(), member_in.end());
        const std::size_t r = members.size();
        std::vector<ArcId> mate_in(r);
        for (std::size_t i = 0; i < r; ++i)
            mate_in[i] = (i + 1 < r) ? mate_arc(member_in[i + 1]) : a;
        bud.members = std::move(members);
        bud.member_in = std::move(member_in);
        bud.mate_in = std::move(mate_in);
        return bud;
    }

    // Grows one tree of the forest; returns a regular circuit of the current
    // graph if one is discovered.
    std::optional<Walk> grow_tree(NodeId root) {
        TraversalState& st = *state_;
        set_pair_color(root, Color::Gray, Color::AntiGray);
        stack_.clear();
        stack_.push_back(root);
        while (!stack_.empty()) {
            const NodeId u = stack_.back();
            const ArcId a = st.cg.fetch_arc(u);
            if (a == kNoArc) {
                set_pair_color(u, Color::Black, Color::AntiBlack);
                st.finish[u] = st.next_stamp++;
                if (obs_) obs_->on_finish(st, u, st.finish[u]);
                stack_.pop_back();
                continue;
            }
            if (st.cg.is_dead(a)) {
                st.cg.note_dead_discard();
                if (obs_) obs_->on_arc_examined(st, a, true);
                continue;
            }
            if (obs_) obs_->on_arc_examined(st, a, false);
            const NodeId h = st.cg.current_head(a);
            switch (st.color[h]) {
                case Color::White:
                    st.q[h] = a;
                    set_pair_color(h, Color::Gray, Color::AntiGray);
                    if (obs_) obs_->on_discover(st, h, a);
                    stack_.push_back(h);
                    break;
                case Color::Gray:
                    return gray_circuit(u, h, a);
                case Color::AntiBlack: {
                    Bud bud = trace_bud(u, h, a);
                    if (obs_) obs_->before_trim(st, bud);
                    st.cg.trim(bud);
                    if (obs_) obs_->on_trim(st, st.cg.history().size() - 1);
                    break;
                }
                case Color::Black:
                case Color::AntiGray:
                    break;
            }
        }
        return std::nullopt;
    }

    const SkewGraph& g_;
    TraversalObserver* obs_;
    std::unique_ptr<TraversalState> state_;
    std::vector<NodeId> stack_;
};

}  // namespace

TraversalResult run_acyclicity_dfs(const SkewGraph& g, TraversalObserver* obs) {
    check_degree_and_loop_properties(g);
    if (auto loop = find_self_loop(g)) {
        auto state = std::make_unique<TraversalState>(g);
        return {std::move(loop), std::move(state)};
    }
    Dfs dfs(g, obs);
    return dfs.run();
}

Verdict acyclicity_test(const SkewGraph& g, TraversalObserver* obs) {
    TraversalResult res = run_acyclicity_dfs(g, obs);
    return {std::move(res.circuit)};
}

}  // namespace skewac
