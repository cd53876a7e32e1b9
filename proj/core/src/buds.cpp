#include "skewac/buds.hpp"

#include <algorithm>
#include <cassert>
#include <list>
#include <stdexcept>
#include <unordered_map>

namespace skewac {

NodeSet Bud::node_set() const {
    std::vector<NodeId> nodes{base_node, mate(base_node)};
    for (NodeId m : members) {
        nodes.push_back(m);
        nodes.push_back(mate(m));
    }
    return make_node_set(std::move(nodes));
}

PairDsu::PairDsu(PairId pairs)
    : parent_(pairs), par_(pairs, 0), size_(pairs, 1), label_(pairs) {
    for (PairId p = 0; p < pairs; ++p) {
        parent_[p] = p;
        label_[p] = 2 * p;
    }
}

std::pair<PairId, std::uint8_t> PairDsu::find_with_parity(PairId p) {
    PairId root = p;
    std::uint8_t pi = 0;
    while (parent_[root] != root) {
        pi ^= par_[root];
        root = parent_[root];
    }
    PairId cur = p;
    std::uint8_t acc = 0;  // parity from p to cur
    while (parent_[cur] != root) {
        const PairId nxt = parent_[cur];
        const std::uint8_t step = par_[cur];
        parent_[cur] = root;
        par_[cur] = pi ^ acc;
        acc ^= step;
        cur = nxt;
    }
    return {root, pi};
}

PairId PairDsu::find(PairId p) { return find_with_parity(p).first; }

NodeId PairDsu::representative(NodeId x) {
    auto [root, pi] = find_with_parity(pair_of(x));
    return label_[root] ^ static_cast<NodeId>((x & 1u) ^ pi);
}

void PairDsu::unite(NodeId member, NodeId onto) {
    auto [rm, pm] = find_with_parity(pair_of(member));
    auto [rb, pb] = find_with_parity(pair_of(onto));
    if (rm == rb) throw std::logic_error("PairDsu::unite: already in one class");
    const std::uint8_t edge =
        static_cast<std::uint8_t>((member & 1u) ^ pm ^ (onto & 1u) ^ pb);
    if (size_[rm] <= size_[rb]) {
        parent_[rm] = rb;
        par_[rm] = edge;
        size_[rb] += size_[rm];
    } else {
        parent_[rb] = rm;
        par_[rb] = edge;
        size_[rm] += size_[rb];
        label_[rm] = onto ^ static_cast<NodeId>((member & 1u) ^ pm);
    }
}

CurrentGraph::CurrentGraph(const SkewGraph& g)
    : g_(&g),
      dsu_(g.node_pairs()),
      class_base_node_(g.node_pairs(), kNoNode),
      class_base_arc_(g.node_pairs(), kNoArc),
      next_(g.arc_count(), kNoArc),
      list_head_(g.node_count(), kNoArc),
      list_tail_(g.node_count(), kNoArc) {
    // adjacency lists keep arc-id order per tail, so one flat scan builds
    // the linked lists without touching the per-node vectors
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const NodeId v = g.tail(a);
        if (list_head_[v] == kNoArc)
            list_head_[v] = a;
        else
            next_[list_tail_[v]] = a;
        list_tail_[v] = a;
    }
}

std::uint32_t CurrentGraph::owner_record(PairId p) const {
    const auto it = members_.find(p);
    return it == members_.end() ? kNoRecord : it->second.record;
}

const std::vector<std::uint32_t>& CurrentGraph::base_records(PairId p) const {
    static const std::vector<std::uint32_t> kEmpty;
    const auto it = base_records_.find(p);
    return it == base_records_.end() ? kEmpty : it->second;
}

NodeId CurrentGraph::current_tail(ArcId a) {
    const NodeId x = g_->tail(a);
    if (dsu_.singleton(pair_of(x))) return x;
    const PairId root = dsu_.find(pair_of(x));
    if (mate_arc(class_base_arc_[root]) == a) return mate(class_base_node_[root]);
    return class_base_node_[root];
}

NodeId CurrentGraph::current_head(ArcId a) {
    const NodeId y = g_->head(a);
    if (dsu_.singleton(pair_of(y))) return y;
    const PairId root = dsu_.find(pair_of(y));
    if (class_base_arc_[root] == a) return class_base_node_[root];
    return mate(class_base_node_[root]);
}

void CurrentGraph::trim(const Bud& bud) {
    if (bud.members.size() != bud.member_in.size() || bud.members.size() != bud.mate_in.size())
        throw std::logic_error("trim: malformed bud");
    const std::uint32_t rec = static_cast<std::uint32_t>(history_.size());
    for (std::size_t i = 0; i < bud.members.size(); ++i) {
        const NodeId m = bud.members[i];
        members_[pair_of(m)] = {rec, m, static_cast<std::uint32_t>(i)};
        dsu_.unite(m, bud.base_node);
    }
    base_records_[pair_of(bud.base_node)].push_back(rec);
    const PairId root = dsu_.find(pair_of(bud.base_node));
    class_base_node_[root] = bud.base_node;
    class_base_arc_[root] = bud.base_arc;
    for (NodeId m : bud.members) {
        for (NodeId v : {m, mate(m)}) {
            if (list_head_[v] == kNoArc) continue;
            if (list_head_[bud.base_node] == kNoArc)
                list_head_[bud.base_node] = list_head_[v];
            else
                next_[list_tail_[bud.base_node]] = list_head_[v];
            list_tail_[bud.base_node] = list_tail_[v];
            list_head_[v] = kNoArc;
            list_tail_[v] = kNoArc;
        }
    }
    history_.push_back({bud.base_node, bud.base_arc, bud.members, bud.member_in, bud.mate_in});
}

std::vector<ArcId> CurrentGraph::pending_list(NodeId v) const {
    std::vector<ArcId> out;
    for (ArcId a = list_head_[v]; a != kNoArc; a = next_[a]) out.push_back(a);
    return out;
}

ArcId CurrentGraph::fetch_arc(NodeId v) {
    const ArcId a = list_head_[v];
    if (a == kNoArc) return kNoArc;
    list_head_[v] = next_[a];
    if (list_head_[v] == kNoArc) list_tail_[v] = kNoArc;
    return a;
}

NodeId CurrentGraph::rep_before(std::size_t record, NodeId x) const {
    NodeId cur = x;
    while (true) {
        const auto it = members_.find(pair_of(cur));
        if (it == members_.end() || it->second.record >= record) return cur;
        const NodeId b = history_[it->second.record].base_node;
        cur = (cur == it->second.node) ? b : mate(b);
    }
}

// Record (strictly before `record`) whose bud the node's class was last
// re-based at, or kNoRecord for a then-simple node.
std::uint32_t CurrentGraph::class_record_before(std::size_t record, NodeId cur) const {
    const auto& recs = base_records(pair_of(cur));
    auto it = std::lower_bound(recs.begin(), recs.end(), static_cast<std::uint32_t>(record));
    if (it == recs.begin()) return kNoRecord;
    return *(it - 1);
}

NodeId CurrentGraph::role_tail_before(std::size_t record, ArcId a) const {
    const NodeId t = rep_before(record, g_->tail(a));
    const std::uint32_t k = class_record_before(record, t);
    if (k == kNoRecord) return t;
    if (mate_arc(history_[k].base_arc) == a) return mate(history_[k].base_node);
    return history_[k].base_node;
}

NodeId CurrentGraph::role_head_before(std::size_t record, ArcId a) const {
    const NodeId h = rep_before(record, g_->head(a));
    const std::uint32_t k = class_record_before(record, h);
    if (k == kNoRecord) return h;
    return (a == history_[k].base_arc) ? history_[k].base_node : mate(history_[k].base_node);
}

std::vector<ArcId> CurrentGraph::connector(std::size_t record, NodeId target) const {
    const TrimRecord& rec = history_[record];
    std::vector<ArcId> arcs;
    NodeId cur = target;
    while (cur != rec.base_node) {
        const auto it = members_.find(pair_of(cur));
        if (it == members_.end() || it->second.record != record)
            throw std::logic_error("restore: connector target escapes the bud");
        const std::uint32_t i = it->second.index;
        const ArcId in = (cur == it->second.node) ? rec.member_in[i] : rec.mate_in[i];
        arcs.push_back(in);
        cur = role_tail_before(record, in);
    }
    std::reverse(arcs.begin(), arcs.end());
    return arcs;
}

Walk CurrentGraph::rebuild_nodes(std::vector<ArcId> arcs, Walk::Kind kind,
                                 std::size_t record) const {
    Walk w;
    w.kind = kind;
    w.arcs = std::move(arcs);
    if (w.arcs.empty()) return w;
    w.nodes.push_back(role_tail_before(record, w.arcs.front()));
    for (ArcId a : w.arcs) w.nodes.push_back(role_head_before(record, a));
    return w;
}

Walk CurrentGraph::restore_path(std::size_t record, const Walk& p) const {
    const TrimRecord& rec = history_[record];
    const ArcId at = rec.base_arc, at_mate = mate_arc(rec.base_arc);
    std::size_t pos_base = p.arcs.size(), pos_mate = p.arcs.size();
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        if (p.arcs[i] == at) pos_base = i;
        if (p.arcs[i] == at_mate) pos_mate = i;
    }
    if (pos_base < p.arcs.size() && pos_mate < p.arcs.size())
        throw std::logic_error("restore: walk uses both the base arc and its mate");

    std::vector<ArcId> out;
    const bool cyclic = (p.kind == Walk::Kind::Cycle);
    if (pos_base < p.arcs.size()) {
        // entered the bud at the base; connect to where the next arc leaves
        const std::size_t nxt = pos_base + 1;
        std::vector<ArcId> q;
        if (nxt < p.arcs.size())
            q = connector(record, role_tail_before(record, p.arcs[nxt]));
        else if (cyclic)
            q = connector(record, role_tail_before(record, p.arcs.front()));
        out.assign(p.arcs.begin(), p.arcs.begin() + pos_base + 1);
        out.insert(out.end(), q.begin(), q.end());
        out.insert(out.end(), p.arcs.begin() + pos_base + 1, p.arcs.end());
    } else if (pos_mate < p.arcs.size()) {
        // leaves the antibase; connect from where the previous arc arrives
        std::vector<ArcId> q;
        NodeId arrive = kNoNode;
        if (pos_mate > 0)
            arrive = role_head_before(record, p.arcs[pos_mate - 1]);
        else if (cyclic && p.arcs.size() > 1)
            arrive = role_head_before(record, p.arcs.back());
        if (arrive != kNoNode && arrive != mate(rec.base_node)) {
            std::vector<ArcId> q_mate = connector(record, mate(arrive));
            for (auto it = q_mate.rbegin(); it != q_mate.rend(); ++it)
                q.push_back(mate_arc(*it));
        }
        out.assign(p.arcs.begin(), p.arcs.begin() + pos_mate);
        out.insert(out.end(), q.begin(), q.end());
        out.insert(out.end(), p.arcs.begin() + pos_mate, p.arcs.end());
    } else {
        out = p.arcs;
    }
    return rebuild_nodes(std::move(out), p.kind, record);
}

Walk CurrentGraph::restore_all(const Walk& c) const {
    // Arc handles make each undo O(|connector|), so the whole restoration
    // is linear; records whose base arcs the walk avoids cost O(1).
    std::list<ArcId> arcs(c.arcs.begin(), c.arcs.end());
    std::unordered_map<ArcId, std::list<ArcId>::iterator> where;
    for (auto it = arcs.begin(); it != arcs.end(); ++it) where[*it] = it;
    const bool cyclic = (c.kind == Walk::Kind::Cycle);

    for (std::size_t r = history_.size(); r-- > 0;) {
        const TrimRecord& rec = history_[r];
        const auto at_base = where.find(rec.base_arc);
        const auto at_mate = where.find(mate_arc(rec.base_arc));
        if (at_base != where.end() && at_mate != where.end())
            throw std::logic_error("restore: walk uses both the base arc and its mate");
        if (at_base != where.end()) {
            auto nxt = std::next(at_base->second);
            if (nxt == arcs.end()) {
                if (!cyclic) continue;  // open walk ending at the base
                nxt = arcs.begin();
            }
            const std::vector<ArcId> q = connector(r, role_tail_before(r, *nxt));
            auto pos = std::next(at_base->second);
            for (ArcId a : q) where[a] = arcs.insert(pos, a);
        } else if (at_mate != where.end()) {
            auto prv = at_mate->second;
            NodeId arrive = kNoNode;
            if (prv != arcs.begin())
                arrive = role_head_before(r, *std::prev(prv));
            else if (cyclic && arcs.size() > 1)
                arrive = role_head_before(r, arcs.back());
            if (arrive == kNoNode || arrive == mate(rec.base_node)) continue;
            const std::vector<ArcId> q = connector(r, mate(arrive));
            for (auto it = q.rbegin(); it != q.rend(); ++it)
                where[mate_arc(*it)] = arcs.insert(prv, mate_arc(*it));
        }
    }

    Walk res;
    res.kind = c.kind;
    res.arcs.assign(arcs.begin(), arcs.end());
    if (!res.arcs.empty()) {
        res.nodes.push_back(g_->tail(res.arcs.front()));
        for (ArcId a : res.arcs) res.nodes.push_back(g_->head(a));
    } else {
        res.nodes = c.nodes;
    }
    return res;
}

std::vector<ArcId> CurrentGraph::live_arcs() {
    std::vector<ArcId> res;
    for (ArcId a = 0; a < g_->arc_count(); ++a)
        if (!is_dead(a)) res.push_back(a);
    return res;
}

}  // namespace skewac
