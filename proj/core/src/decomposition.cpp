#include "skewac/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

namespace skewac {

namespace {

struct TopoScan {
    std::vector<NodeId> order;
    std::vector<char> placed;
    bool complete = false;
};

// Kahn with a min-id heap, so the order is deterministic.
TopoScan topo_scan(const SkewGraph& g) {
    TopoScan t;
    t.placed.assign(g.node_count(), 0);
    std::vector<std::uint32_t> indeg(g.node_count(), 0);
    for (ArcId a = 0; a < g.arc_count(); ++a) ++indeg[g.head(a)];
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>> pq;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (indeg[v] == 0) pq.push(v);
    while (!pq.empty()) {
        const NodeId v = pq.top();
        pq.pop();
        t.placed[v] = 1;
        t.order.push_back(v);
        for (ArcId a : g.out_arcs(v))
            if (--indeg[g.head(a)] == 0) pq.push(g.head(a));
    }
    t.complete = (t.order.size() == g.node_count());
    return t;
}

Walk extract_directed_cycle(const SkewGraph& g, const std::vector<char>& placed) {
    NodeId start = kNoNode;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!placed[v]) {
            start = v;
            break;
        }
    assert(start != kNoNode);
    // walk backwards through unplaced predecessors until a node repeats
    std::vector<std::int64_t> pos(g.node_count(), -1);
    std::vector<NodeId> seq;
    std::vector<ArcId> via;  // via[i] enters seq[i]
    NodeId cur = start;
    while (pos[cur] < 0) {
        pos[cur] = static_cast<std::int64_t>(seq.size());
        seq.push_back(cur);
        ArcId chosen = kNoArc;
        for (ArcId m : g.out_arcs(mate(cur))) {
            const ArcId a = mate_arc(m);
            if (!placed[g.tail(a)]) {
                chosen = a;
                break;
            }
        }
        assert(chosen != kNoArc);
        via.push_back(chosen);
        cur = g.tail(chosen);
    }
    const std::size_t p = static_cast<std::size_t>(pos[cur]);
    Walk w;
    w.kind = Walk::Kind::Cycle;
    w.nodes.push_back(seq[p]);
    for (std::size_t i = seq.size(); i-- > p;) {
        w.arcs.push_back(via[i]);
        w.nodes.push_back(seq[i]);
    }
    return w;
}

}  // namespace

StrongAcyclicResult check_strong_acyclic(const SkewGraph& g) {
    const TopoScan t = topo_scan(g);
    if (!t.complete) return {std::nullopt, extract_directed_cycle(g, t.placed)};
    // pi = topological position; Z = nodes with pi(v) > pi(v')
    std::vector<std::uint32_t> pos(g.node_count(), 0);
    for (std::uint32_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = i;
    NodeSet z;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (pos[v] > pos[mate(v)]) z.push_back(v);
    return {StrongAcyclicPartition{make_node_set(std::move(z))}, std::nullopt};
}

// ---------------------------------------------------------------------------
// Decompose: derive per-bud acyclic barriers from the traversal and fold
// them into a separator spine, ordering each barrier's W-set by decreasing
// finish stamp with the antibase last.

namespace {

std::unique_ptr<WeakDecompNode> make_leaf_node(NodeSet z) {
    auto n = std::make_unique<WeakDecompNode>();
    n->leaf = true;
    n->Z = std::move(z);
    return n;
}

std::unique_ptr<WeakDecompNode> remap_tree(const WeakDecompNode& n, const InducedSubgraph& sub) {
    auto out = std::make_unique<WeakDecompNode>();
    out->leaf = n.leaf;
    NodeSet z;
    for (NodeId v : n.Z) z.push_back(sub.to_base(v));
    out->Z = make_node_set(std::move(z));
    if (!n.leaf) {
        out->crossing_pair = {sub.arc_to_base(n.crossing_pair[0]),
                              sub.arc_to_base(n.crossing_pair[1])};
        out->left = remap_tree(*n.left, sub);
        out->right = remap_tree(*n.right, sub);
    }
    return out;
}

// Fallback for a bud with no separator prefix: the piece is either strongly
// acyclic or gets a fresh decomposition of its own.
std::unique_ptr<WeakDecompNode> orphan_piece_tree(const SkewGraph& g, const NodeSet& piece) {
    InducedSubgraph sub = induced_subgraph(g, piece);
    if (auto sa = check_strong_acyclic(sub.graph); sa.partition) {
        NodeSet z;
        for (NodeId v : sa.partition->Z) z.push_back(sub.to_base(v));
        return make_leaf_node(make_node_set(std::move(z)));
    }
    DecomposeResult inner = decompose(sub.graph);
    if (!inner.tree)
        throw std::logic_error("decompose: orphan piece unexpectedly has a regular circuit");
    return remap_tree(*inner.tree->root, sub);
}

// W-order entry: an S-member, or a bud base carrying the bud's index.
struct SpineEntry {
    NodeId node;
    std::int64_t bud = -1;
};

// Spine over the barrier's W-order: slices of S-nodes between bud bases
// become Z-parts; each bud joins the accumulated prefix as the B side.
std::unique_ptr<WeakDecompNode> build_spine(
    const SkewGraph& g, const std::vector<SpineEntry>& w,
    const std::function<std::unique_ptr<WeakDecompNode>(std::size_t)>& bud_tree,
    const std::function<std::array<ArcId, 2>(std::size_t)>& crossing_of) {
    std::unique_ptr<WeakDecompNode> acc;
    std::vector<NodeId> pending;
    std::int64_t open_bud = -1;
    auto attach = [&](std::size_t bud_index, NodeSet z_after) {
        auto bt = bud_tree(bud_index);
        if (acc) {
            auto n = std::make_unique<WeakDecompNode>();
            n->Z = std::move(z_after);
            n->crossing_pair = crossing_of(bud_index);
            n->left = std::move(acc);
            n->right = std::move(bt);
            acc = std::move(n);
        } else if (z_after.empty()) {
            acc = std::move(bt);
        } else {
            NodeSet piece = weak_tree_node_set(*bt);
            std::vector<NodeId> tmp(piece.begin(), piece.end());
            for (NodeId v : z_after) {
                tmp.push_back(v);
                tmp.push_back(mate(v));
            }
            acc = orphan_piece_tree(g, make_node_set(std::move(tmp)));
        }
    };
    for (const SpineEntry& e : w) {
        if (e.bud < 0) {
            pending.push_back(e.node);
            continue;
        }
        if (open_bud < 0) {
            if (!pending.empty()) {
                acc = make_leaf_node(make_node_set(std::move(pending)));
                pending.clear();
            }
        } else {
            attach(static_cast<std::size_t>(open_bud), make_node_set(std::move(pending)));
            pending.clear();
        }
        open_bud = e.bud;
    }
    if (open_bud >= 0) {
        attach(static_cast<std::size_t>(open_bud), make_node_set(std::move(pending)));
    } else if (!pending.empty()) {
        if (acc) throw std::logic_error("decompose: dangling slice after spine");
        acc = make_leaf_node(make_node_set(std::move(pending)));
    }
    return acc;
}

class WeakTreeBuilder {
public:
    WeakTreeBuilder(const SkewGraph& g, TraversalState& st) : g_(g), st_(st) {}

    std::unique_ptr<WeakDecompNode> build() {
        std::vector<NodeId> s_part;
        std::vector<std::uint32_t> top_buds;
        CurrentGraph& cg = st_.cg;
        for (NodeId v = 0; v < g_.node_count(); ++v)
            if (st_.finish[v] > 0 && cg.is_simple(v)) s_part.push_back(v);
        for (PairId p = 0; p < g_.node_pairs(); ++p) {
            const auto& recs = cg.base_records(p);
            if (recs.empty()) continue;
            if (cg.owner_record(p) != CurrentGraph::kNoRecord) continue;  // absorbed later
            top_buds.push_back(recs.back());
        }
        auto root = from_barrier(std::move(s_part), kNoNode, top_buds);
        if (!root) {
            root = std::make_unique<WeakDecompNode>();
            root->leaf = true;  // empty graph
        }
        return root;
    }

private:
    struct WEntry {
        std::uint32_t stamp;
        NodeId node;
        std::uint32_t record;  // kNoRecord for S-members
    };

    std::array<ArcId, 2> crossing_of(std::uint32_t record) const {
        const ArcId a = st_.cg.history()[record].base_arc;
        return {a, mate_arc(a)};
    }

    // Merged barrier content of the maximal bud ending at `record`.
    void barrier_content(std::uint32_t record, std::vector<NodeId>& s_out,
                         std::vector<std::uint32_t>& buds_out) {
        CurrentGraph& cg = st_.cg;
        const PairId base_pair = pair_of(cg.history()[record].base_node);
        for (std::uint32_t rec : cg.base_records(base_pair)) {
            for (NodeId m : cg.history()[rec].members) {
                const auto& inner = cg.base_records(pair_of(m));
                if (inner.empty())
                    s_out.push_back(m);
                else
                    buds_out.push_back(inner.back());
            }
        }
    }

    std::unique_ptr<WeakDecompNode> bud_tree(std::uint32_t record) {
        std::vector<NodeId> s_part;
        std::vector<std::uint32_t> buds;
        barrier_content(record, s_part, buds);
        return from_barrier(std::move(s_part), mate(st_.cg.history()[record].base_node), buds);
    }

    std::unique_ptr<WeakDecompNode> from_barrier(std::vector<NodeId> s_part, NodeId antibase,
                                                 const std::vector<std::uint32_t>& buds) {
        std::vector<WEntry> w;
        w.reserve(s_part.size() + buds.size());
        for (NodeId v : s_part) w.push_back({st_.finish[v], v, CurrentGraph::kNoRecord});
        for (std::uint32_t rec : buds)
            w.push_back({st_.finish[st_.cg.history()[rec].base_node],
                         st_.cg.history()[rec].base_node, rec});
        std::sort(w.begin(), w.end(),
                  [](const WEntry& x, const WEntry& y) { return x.stamp > y.stamp; });
        std::vector<SpineEntry> entries;
        entries.reserve(w.size() + 1);
        for (std::size_t i = 0; i < w.size(); ++i)
            entries.push_back({w[i].node, w[i].record == CurrentGraph::kNoRecord
                                              ? -1
                                              : static_cast<std::int64_t>(i)});
        // the antibase has only its external out-arc, so it sorts last
        if (antibase != kNoNode) entries.push_back({antibase, -1});
        return build_spine(
            g_, entries,
            [&](std::size_t i) { return bud_tree(w[i].record); },
            [&](std::size_t i) { return crossing_of(w[i].record); });
    }

    const SkewGraph& g_;
    TraversalState& st_;
};

}  // namespace

DecomposeResult decompose(const SkewGraph& g) {
    TraversalResult res = run_acyclicity_dfs(g);
    if (res.circuit) return {std::move(res.circuit), std::nullopt};
    WeakTreeBuilder builder(g, *res.state);
    WeakDecomposition d;
    d.root = builder.build();
    return {std::nullopt, std::move(d)};
}

WeakDecomposition barrier_to_separators(const SkewGraph& g, const AcyclicBarrier& ab,
                                        std::vector<WeakDecomposition> bud_subtrees) {
    const BarrierCert& b = ab.barrier;
    if (!b.M.empty()) throw std::logic_error("barrier_to_separators: M-part must be empty");
    if (bud_subtrees.size() != b.buds.size())
        throw std::logic_error("barrier_to_separators: one sub-decomposition per bud required");
    for (std::size_t i = 0; i < b.buds.size(); ++i) {
        if (!bud_subtrees[i].root ||
            weak_tree_node_set(*bud_subtrees[i].root) != b.buds[i].members)
            throw std::logic_error(
                "barrier_to_separators: sub-decomposition does not cover its bud");
    }

    // classify nodes: S-members and bud bases carry W positions
    std::vector<std::int64_t> bud_of(g.node_count(), -1);
    std::vector<char> in_s(g.node_count(), 0);
    for (NodeId v : b.S) in_s[v] = 1;
    for (std::size_t i = 0; i < b.buds.size(); ++i)
        for (NodeId v : b.buds[i].members) bud_of[v] = static_cast<std::int64_t>(i);
    std::vector<std::int64_t> pos(g.node_count(), -1);
    std::vector<SpineEntry> entries;
    entries.reserve(ab.w_order.size());
    std::size_t bases_seen = 0;
    for (NodeId v : ab.w_order) {
        if (pos[v] >= 0) throw std::logic_error("barrier_to_separators: node repeats in W");
        pos[v] = static_cast<std::int64_t>(entries.size());
        if (in_s[v]) {
            entries.push_back({v, -1});
        } else if (bud_of[v] >= 0 && b.buds[static_cast<std::size_t>(bud_of[v])].base_node == v) {
            entries.push_back({v, bud_of[v]});
            ++bases_seen;
        } else {
            throw std::logic_error("barrier_to_separators: W contains a non-S non-base node");
        }
    }
    if (entries.size() != b.S.size() + b.buds.size() || bases_seen != b.buds.size())
        throw std::logic_error("barrier_to_separators: W must be S plus the bud bases");

    // the order must be topological for the trimmed graph restricted to W
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const NodeId x = g.tail(a), y = g.head(a);
        NodeId wt = kNoNode, wh = kNoNode;
        if (in_s[x])
            wt = x;
        else if (bud_of[x] >= 0)
            wt = b.buds[static_cast<std::size_t>(bud_of[x])].base_node;
        if (in_s[y])
            wh = y;
        else if (bud_of[y] >= 0 && b.buds[static_cast<std::size_t>(bud_of[y])].base_arc == a)
            wh = b.buds[static_cast<std::size_t>(bud_of[y])].base_node;
        if (wt == kNoNode || wh == kNoNode || wt == wh) continue;
        if (pos[wt] >= pos[wh])
            throw std::logic_error("barrier_to_separators: W order is not topological (arc " +
                                   std::to_string(a) + ")");
    }

    WeakDecomposition out;
    out.root = build_spine(
        g, entries, [&](std::size_t i) { return std::move(bud_subtrees[i].root); },
        [&](std::size_t i) {
            const ArcId base = b.buds[i].base_arc;
            return std::array<ArcId, 2>{base, mate_arc(base)};
        });
    if (!out.root) out.root = make_leaf_node({});
    return out;
}

WeakSeparatorResult find_weak_separator(const SkewGraph& g) {
    DecomposeResult d = decompose(g);
    if (d.circuit) return {std::nullopt, std::nullopt, std::move(d.circuit)};
    const WeakDecompNode& root = *d.tree->root;
    if (root.leaf) return {std::nullopt, StrongAcyclicPartition{root.Z}, std::nullopt};
    WeakSeparator sep;
    sep.A = weak_tree_node_set(*root.left);
    sep.B = weak_tree_node_set(*root.right);
    sep.Z = root.Z;
    sep.crossing_pair = root.crossing_pair;
    return {std::move(sep), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Component partition via Tarjan; components come out in reverse topological
// order, which yields the antisymmetric labeling directly.

namespace {

struct SccScan {
    std::vector<std::uint32_t> comp;  // per node
    std::uint32_t count = 0;          // comp ids in emission order
};

SccScan tarjan_scc(const SkewGraph& g) {
    const NodeId n = g.node_count();
    SccScan s;
    s.comp.assign(n, static_cast<std::uint32_t>(-1));
    std::vector<std::uint32_t> low(n, 0), num(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<NodeId> stack;
    std::uint32_t timer = 1;

    struct Frame {
        NodeId v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    for (NodeId root = 0; root < n; ++root) {
        if (num[root] != 0) continue;
        frames.push_back({root, 0});
        num[root] = low[root] = timer++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.out_arcs(f.v);
            if (f.next < out.size()) {
                const NodeId h = g.head(out[f.next++]);
                if (num[h] == 0) {
                    num[h] = low[h] = timer++;
                    stack.push_back(h);
                    on_stack[h] = 1;
                    frames.push_back({h, 0});
                } else if (on_stack[h]) {
                    low[f.v] = std::min(low[f.v], num[h]);
                }
                continue;
            }
            if (low[f.v] == num[f.v]) {
                while (true) {
                    const NodeId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    s.comp[w] = s.count;
                    if (w == f.v) break;
                }
                ++s.count;
            }
            const NodeId done = f.v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[done]);
        }
    }
    return s;
}

}  // namespace

ComponentPartitionResult component_partition(const SkewGraph& g) {
    // a self-loop is a one-node cycle the SCC sizes cannot see
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (g.tail(a) == g.head(a)) return {std::nullopt, NodeSet{g.tail(a)}};
    const SccScan s = tarjan_scc(g);
    // mate component and sizes
    std::vector<std::uint32_t> size(s.count, 0), mate_comp(s.count, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) ++size[s.comp[v]];
    for (NodeId v = 0; v < g.node_count(); ++v) mate_comp[s.comp[v]] = s.comp[mate(v)];

    ComponentPartition part;
    std::vector<char> comp_emitted(s.count, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::uint32_t c = s.comp[v];
        if (mate_comp[c] == c) {
            if (!comp_emitted[c]) {
                comp_emitted[c] = 1;
                NodeSet b;
                for (NodeId u = 0; u < g.node_count(); ++u)
                    if (s.comp[u] == c) b.push_back(u);
                part.components.push_back(make_node_set(std::move(b)));
            }
        } else {
            if (size[c] > 1) {
                NodeSet evidence;
                for (NodeId u = 0; u < g.node_count(); ++u)
                    if (s.comp[u] == c) evidence.push_back(u);
                return {std::nullopt, make_node_set(std::move(evidence))};
            }
            // regular trivial component: emission order gives the labeling;
            // arcs run from later-emitted to earlier-emitted components
            if (mate_comp[c] > c) part.Z.push_back(v);
        }
    }
    part.Z = make_node_set(std::move(part.Z));
    return {std::move(part), std::nullopt};
}

StrongSeparator find_strong_separator(const SkewGraph& g) {
    DecomposeResult d = decompose(g);
    if (d.circuit)
        throw std::logic_error("find_strong_separator: input has a regular circuit");
    const WeakDecompNode& root = *d.tree->root;
    if (root.leaf)
        throw std::logic_error("find_strong_separator: input is strongly acyclic");
    if (!root.Z.empty())
        throw std::logic_error("find_strong_separator: root Z-part nonempty (node " +
                               std::to_string(root.Z.front()) +
                               "), input is not strongly connected");
    StrongSeparator sep;
    sep.A = weak_tree_node_set(*root.left);
    sep.B = weak_tree_node_set(*root.right);
    sep.crossing_pair = root.crossing_pair;
    for (ArcId a : sep.crossing_pair) {
        if (node_set_contains(sep.A, g.head(a)))
            sep.entry_a = g.head(a);
        else
            sep.entry_b = g.head(a);
    }
    return sep;
}

// ---------------------------------------------------------------------------

namespace {

SkewGraph with_auxiliary_source(const SkewGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> arc_pairs;
    arc_pairs.reserve(g.arc_pair_count() + g.node_count());
    for (ArcId j = 0; j < g.arc_pair_count(); ++j)
        arc_pairs.emplace_back(g.tail(2 * j), g.head(2 * j));
    const NodeId s = g.node_count();
    for (NodeId v = 0; v < g.node_count(); ++v) arc_pairs.emplace_back(s, v);
    return SkewGraph(g.node_pairs() + 1, arc_pairs);
}

std::unique_ptr<StrongDecompNode> strong_rec(const SkewGraph& g, const NodeSet& x);

std::unique_ptr<StrongDecompNode> strong_node_from_partition(const SkewGraph& g,
                                                             NodeSet z,
                                                             std::vector<NodeSet> comps) {
    auto node = std::make_unique<StrongDecompNode>();
    node->Z = std::move(z);
    for (NodeSet& b : comps) {
        InducedSubgraph sub = induced_subgraph(g, b);
        StrongSeparator sep = find_strong_separator(sub.graph);
        StrongDecompNode::Part part;
        part.B = b;
        NodeSet xs, ys;
        for (NodeId v : sep.A) xs.push_back(sub.to_base(v));
        for (NodeId v : sep.B) ys.push_back(sub.to_base(v));
        xs = make_node_set(std::move(xs));
        ys = make_node_set(std::move(ys));
        part.crossing_pair = {sub.arc_to_base(sep.crossing_pair[0]),
                              sub.arc_to_base(sep.crossing_pair[1])};
        part.entry_x = sub.to_base(sep.entry_a);
        part.entry_y = sub.to_base(sep.entry_b);
        part.x_child = strong_rec(g, xs);
        part.y_child = strong_rec(g, ys);
        node->parts.push_back(std::move(part));
    }
    return node;
}

std::unique_ptr<StrongDecompNode> strong_rec(const SkewGraph& g, const NodeSet& x) {
    InducedSubgraph sub = induced_subgraph(g, x);
    ComponentPartitionResult cp = component_partition(sub.graph);
    if (!cp.partition)
        throw std::logic_error("decompose_strong: piece is not weakly acyclic");
    NodeSet z;
    for (NodeId v : cp.partition->Z) z.push_back(sub.to_base(v));
    std::vector<NodeSet> comps;
    for (const NodeSet& c : cp.partition->components) {
        NodeSet b;
        for (NodeId v : c) b.push_back(sub.to_base(v));
        comps.push_back(make_node_set(std::move(b)));
    }
    return strong_node_from_partition(g, make_node_set(std::move(z)), std::move(comps));
}

}  // namespace

StrongDecomposeResult decompose_strong(const SkewGraph& g) {
    Verdict v = acyclicity_test(g);
    if (v.circuit) return {std::move(v.circuit), std::nullopt};

    // auxiliary source pair at the root only; stripped from the emitted Z
    const SkewGraph aug = with_auxiliary_source(g);
    ComponentPartitionResult cp = component_partition(aug);
    if (!cp.partition) throw std::logic_error("decompose_strong: augmented graph inconsistent");
    NodeSet z;
    for (NodeId u : cp.partition->Z)
        if (u < g.node_count()) z.push_back(u);
    std::vector<NodeSet> comps;
    for (const NodeSet& c : cp.partition->components) comps.push_back(c);

    StrongDecomposition tree;
    tree.root = strong_node_from_partition(g, make_node_set(std::move(z)), std::move(comps));
    return {std::nullopt, std::move(tree)};
}

}  // namespace skewac
