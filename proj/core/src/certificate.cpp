#include "skewac/certificate.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "skewac/acyclicity.hpp"
#include "skewac/convert.hpp"
#include "skewac/decomposition.hpp"
#include "skewac/oracle.hpp"
#include "skewac/reductions.hpp"

namespace skewac {

namespace {

void fail(VerifyResult& r, const std::string& msg) { r.violations.push_back(msg); }

std::string arc_str(const SkewGraph& g, ArcId a) {
    std::ostringstream os;
    os << "arc " << a << " (" << g.tail(a) << "->" << g.head(a) << ")";
    return os.str();
}

// Kahn restricted to arcs with both endpoints inside `zone`.
bool acyclic_within(const SkewGraph& g, const NodeSet& zone) {
    std::vector<std::uint32_t> indeg(g.node_count(), 0);
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (node_set_contains(zone, g.tail(a)) && node_set_contains(zone, g.head(a)))
            ++indeg[g.head(a)];
    std::vector<NodeId> stack;
    std::size_t placed = 0;
    for (NodeId v : zone)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        ++placed;
        for (ArcId a : g.out_arcs(v)) {
            if (!node_set_contains(zone, g.head(a)) || !node_set_contains(zone, g.tail(a)))
                continue;
            if (--indeg[g.head(a)] == 0) stack.push_back(g.head(a));
        }
    }
    return placed == zone.size();
}

// Weak acyclicity for arbitrary skew graphs: direct test when the degree and
// loop properties hold, otherwise through the canonical reduction pipeline.
bool weakly_acyclic_any(const SkewGraph& g) {
    try {
        check_degree_and_loop_properties(g);
        return acyclicity_test(g).weakly_acyclic();
    } catch (const InputError&) {
        const BidirectedGraph bg = skew_to_bidirected(g);
        const PreprocessResult pre = canonical_preprocess(bg);
        return acyclicity_test(pre.graph).weakly_acyclic();
    }
}

std::vector<char> membership(const SkewGraph& g, const NodeSet& s) {
    std::vector<char> in(g.node_count(), 0);
    for (NodeId v : s) in[v] = 1;
    return in;
}

}  // namespace

NodeSet weak_tree_node_set(const WeakDecompNode& node) {
    std::vector<NodeId> nodes;
    std::function<void(const WeakDecompNode&)> walk = [&](const WeakDecompNode& n) {
        for (NodeId v : n.Z) {
            nodes.push_back(v);
            nodes.push_back(mate(v));
        }
        if (n.left) walk(*n.left);
        if (n.right) walk(*n.right);
    };
    walk(node);
    return make_node_set(std::move(nodes));
}

NodeSet strong_tree_node_set(const StrongDecompNode& node) {
    std::vector<NodeId> nodes;
    std::function<void(const StrongDecompNode&)> walk = [&](const StrongDecompNode& n) {
        for (NodeId v : n.Z) {
            nodes.push_back(v);
            nodes.push_back(mate(v));
        }
        for (const auto& part : n.parts) {
            if (part.x_child) walk(*part.x_child);
            if (part.y_child) walk(*part.y_child);
        }
    };
    walk(node);
    return make_node_set(std::move(nodes));
}

VerifyResult verify_regular_circuit(const SkewGraph& g, const Walk& w) {
    VerifyResult r;
    if (w.kind != Walk::Kind::Cycle) fail(r, "circuit: walk is not tagged as a cycle");
    if (!is_walk(g, w)) {
        fail(r, "circuit: node/arc alternation is not a walk of the graph");
        return r;
    }
    if (w.arcs.empty()) fail(r, "circuit: empty");
    if (!w.nodes.empty() && w.nodes.front() != w.nodes.back())
        fail(r, "circuit: not closed");
    std::vector<char> seen(g.arc_count(), 0);
    for (ArcId a : w.arcs) {
        if (seen[a]) fail(r, "circuit: repeats " + arc_str(g, a));
        if (seen[mate_arc(a)])
            fail(r, "circuit: uses " + arc_str(g, a) + " together with its mate");
        seen[a] = 1;
    }
    return r;
}

VerifyResult verify_strong_acyclic(const SkewGraph& g, const StrongAcyclicPartition& c) {
    VerifyResult r;
    for (PairId k = 0; k < g.node_pairs(); ++k) {
        const bool lo = node_set_contains(c.Z, 2 * k), hi = node_set_contains(c.Z, 2 * k + 1);
        if (lo == hi) {
            fail(r, "strong-acyclic: pair " + std::to_string(k) +
                        " not split between Z and Z'");
            return r;
        }
    }
    const auto in_z = membership(g, c.Z);
    for (ArcId a = 0; a < g.arc_count(); ++a)
        if (in_z[g.tail(a)] && !in_z[g.head(a)])
            fail(r, "strong-acyclic: " + arc_str(g, a) + " goes from Z to Z'");
    if (!acyclic_within(g, c.Z)) fail(r, "strong-acyclic: G[Z] has a directed cycle");
    if (!acyclic_within(g, mate_set(c.Z))) fail(r, "strong-acyclic: G[Z'] has a directed cycle");
    return r;
}

namespace {

// Clauses of a weak separator inside the node set universe A|B|Z|Z'; used
// for standalone certificates (universe = whole graph) and per tree node.
void check_separator_clauses(const SkewGraph& g, const NodeSet& A, const NodeSet& B,
                             const NodeSet& Z, const std::array<ArcId, 2>& crossing,
                             VerifyResult& r) {
    if (A.empty()) fail(r, "weak-separator: A is empty");
    if (B.empty()) fail(r, "weak-separator: B is empty");
    if (!is_self_symmetric(A)) fail(r, "weak-separator: A is not self-symmetric");
    if (!is_self_symmetric(B)) fail(r, "weak-separator: B is not self-symmetric");
    const NodeSet zp = mate_set(Z);
    // the four parts must be disjoint
    std::vector<char> cls(g.node_count(), 0);
    auto mark = [&](const NodeSet& s, char c) {
        for (NodeId v : s) {
            if (cls[v]) fail(r, "weak-separator: node " + std::to_string(v) + " in two parts");
            cls[v] = c;
        }
    };
    mark(A, 1);
    mark(B, 2);
    mark(Z, 3);
    mark(zp, 4);
    // exactly one pair of symmetric arcs between A and B
    std::vector<ArcId> cross;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const char t = cls[g.tail(a)], h = cls[g.head(a)];
        if ((t == 1 && h == 2) || (t == 2 && h == 1)) cross.push_back(a);
        if (t == 3 && h != 3) fail(r, "weak-separator: " + arc_str(g, a) + " leaves Z");
        if (h == 4 && t != 4) fail(r, "weak-separator: " + arc_str(g, a) + " enters Z'");
    }
    if (cross.size() != 2)
        fail(r, "weak-separator: " + std::to_string(cross.size()) +
                    " arcs connect A and B, expected one mate pair");
    else if (mate_arc(cross[0]) != cross[1])
        fail(r, "weak-separator: the two crossing arcs are not mates");
    else {
        const bool match = (cross[0] == crossing[0] && cross[1] == crossing[1]) ||
                           (cross[0] == crossing[1] && cross[1] == crossing[0]);
        if (!match) fail(r, "weak-separator: stored crossing pair does not match the graph");
    }
    if (!acyclic_within(g, Z)) fail(r, "weak-separator: G[Z] has a directed cycle");
}

}  // namespace

VerifyResult verify_weak_separator(const SkewGraph& g, const WeakSeparator& c,
                                   bool check_halves_acyclic) {
    VerifyResult r;
    // partition of the whole node set
    std::size_t total = c.A.size() + c.B.size() + 2 * c.Z.size();
    if (total != g.node_count())
        fail(r, "weak-separator: parts do not cover the node set");
    check_separator_clauses(g, c.A, c.B, c.Z, c.crossing_pair, r);
    if (!r.ok()) return r;
    if (check_halves_acyclic) {
        if (!weakly_acyclic_any(induced_subgraph(g, c.A).graph))
            fail(r, "weak-separator: G[A] is not weakly acyclic");
        if (!weakly_acyclic_any(induced_subgraph(g, c.B).graph))
            fail(r, "weak-separator: G[B] is not weakly acyclic");
    }
    return r;
}

namespace {

// Every node reachable from `from` and co-reachable to `to` inside the set;
// walk-level check of s-connectivity.
bool span_connected(const SkewGraph& g, const NodeSet& set, NodeId from, NodeId to,
                    std::string* witness) {
    const auto in = membership(g, set);
    auto bfs = [&](NodeId src, bool forward) {
        std::vector<char> vis(g.node_count(), 0);
        std::vector<NodeId> stack{src};
        vis[src] = 1;
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            if (forward) {
                for (ArcId a : g.out_arcs(v)) {
                    const NodeId h = g.head(a);
                    if (in[h] && !vis[h]) vis[h] = 1, stack.push_back(h);
                }
            } else {
                for (ArcId m : g.out_arcs(mate(v))) {
                    const NodeId t = g.tail(mate_arc(m));
                    if (in[t] && !vis[t]) vis[t] = 1, stack.push_back(t);
                }
            }
        }
        return vis;
    };
    const auto fwd = bfs(from, true);
    const auto bwd = bfs(to, false);
    for (NodeId v : set)
        if (!fwd[v] || !bwd[v]) {
            if (witness) *witness = std::to_string(v);
            return false;
        }
    return true;
}

}  // namespace

VerifyResult verify_strong_separator(const SkewGraph& g, const StrongSeparator& c) {
    VerifyResult r;
    if (c.A.size() + c.B.size() != g.node_count())
        fail(r, "strong-separator: A and B do not cover the node set");
    check_separator_clauses(g, c.A, c.B, {}, c.crossing_pair, r);
    if (!r.ok()) return r;
    // entries are the heads of the crossing arcs
    NodeId into_a = kNoNode, into_b = kNoNode;
    for (ArcId a : c.crossing_pair) {
        if (node_set_contains(c.A, g.head(a)))
            into_a = g.head(a);
        else
            into_b = g.head(a);
    }
    if (c.entry_a != into_a)
        fail(r, "strong-separator: entry a is not the head of the B->A arc");
    if (c.entry_b != into_b)
        fail(r, "strong-separator: entry b is not the head of the A->B arc");
    if (!weakly_acyclic_any(induced_subgraph(g, c.A).graph))
        fail(r, "strong-separator: G[A] is not weakly acyclic");
    if (!weakly_acyclic_any(induced_subgraph(g, c.B).graph))
        fail(r, "strong-separator: G[B] is not weakly acyclic");
    std::string w;
    if (c.entry_a != kNoNode && !span_connected(g, c.A, c.entry_a, mate(c.entry_a), &w))
        fail(r, "strong-separator: G[A] is not a-connected, node " + w + " off every a-a' walk");
    if (c.entry_b != kNoNode && !span_connected(g, c.B, c.entry_b, mate(c.entry_b), &w))
        fail(r, "strong-separator: G[B] is not b-connected, node " + w + " off every b-b' walk");
    return r;
}

VerifyResult verify_barrier(const SkewGraph& g, const BarrierCert& c) {
    VerifyResult r;
    // classes: 1 = S, 2 = S', 3 = M, 4+i = bud i
    std::vector<int> cls(g.node_count(), 0);
    auto mark = [&](const NodeSet& s, int k, const char* name) {
        for (NodeId v : s) {
            if (cls[v])
                fail(r, std::string("barrier: node ") + std::to_string(v) + " in two parts (" +
                            name + ")");
            cls[v] = k;
        }
    };
    mark(c.S, 1, "S");
    mark(mate_set(c.S), 2, "S'");
    mark(c.M, 3, "M");
    for (std::size_t i = 0; i < c.buds.size(); ++i)
        mark(c.buds[i].members, 4 + static_cast<int>(i), "bud");
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!cls[v]) fail(r, "barrier: node " + std::to_string(v) + " not covered");
    if (!node_set_contains(c.S, c.s)) fail(r, "barrier: s is not in S");
    if (!is_self_symmetric(c.M)) fail(r, "barrier: M is not self-symmetric");
    if (!r.ok()) return r;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const int t = cls[g.tail(a)], h = cls[g.head(a)];
        if (t == 1 && (h == 2 || h == 3))
            fail(r, "barrier: " + arc_str(g, a) + " goes from S to S' u M");
        if (t >= 4 && h >= 4 && t != h)
            fail(r, "barrier: " + arc_str(g, a) + " connects two buds");
        if ((t >= 4 && h == 3) || (t == 3 && h >= 4))
            fail(r, "barrier: " + arc_str(g, a) + " connects a bud and M");
        if (t == 1 && h >= 4 && a != c.buds[h - 4].base_arc)
            fail(r, "barrier: " + arc_str(g, a) + " is a second arc from S into a bud");
    }
    for (const BudCert& bud : c.buds) {
        if (!is_self_symmetric(bud.members)) fail(r, "barrier: bud set not self-symmetric");
        if (bud.base_arc >= g.arc_count() || g.head(bud.base_arc) != bud.base_node ||
            !node_set_contains(bud.members, bud.base_node) ||
            node_set_contains(bud.members, g.tail(bud.base_arc))) {
            fail(r, "barrier: malformed bud base");
            continue;
        }
        // definitional reachability, exhaustively on small buds only
        InducedSubgraph sub = induced_subgraph(g, bud.members);
        if (sub.graph.arc_count() <= oracle::kDefaultOracleCap) {
            const NodeId base_new = sub.node_from_base[bud.base_node];
            for (NodeId z = 0; z < sub.graph.node_count(); ++z)
                if (!oracle::brute_regular_path(sub.graph, base_new, z))
                    fail(r, "barrier: node " + std::to_string(sub.to_base(z)) +
                                " not regular-reachable from the bud base");
        }
    }
    return r;
}

VerifyResult verify_weak_decomposition(const SkewGraph& g, const WeakDecomposition& c) {
    VerifyResult r;
    if (!c.root) {
        fail(r, "weak-decomposition: empty tree");
        return r;
    }
    const NodeSet all = weak_tree_node_set(*c.root);
    if (all.size() != g.node_count())
        fail(r, "weak-decomposition: root set does not cover the node set");
    std::vector<char> z_seen(g.node_count(), 0);
    std::function<void(const WeakDecompNode&)> walk = [&](const WeakDecompNode& n) {
        for (NodeId v : n.Z) {
            if (z_seen[v] || z_seen[mate(v)])
                fail(r, "weak-decomposition: Z-parts overlap at node " + std::to_string(v));
            z_seen[v] = 1;
        }
        if (n.leaf) {
            if (n.left || n.right) fail(r, "weak-decomposition: leaf with children");
            const NodeSet set = weak_tree_node_set(n);
            InducedSubgraph sub = induced_subgraph(g, set);
            NodeSet z_sub;
            for (NodeId v : n.Z) z_sub.push_back(sub.node_from_base[v]);
            z_sub = make_node_set(std::move(z_sub));
            for (const std::string& v :
                 verify_strong_acyclic(sub.graph, {z_sub}).violations)
                fail(r, "leaf: " + v);
            return;
        }
        if (!n.left || !n.right) {
            fail(r, "weak-decomposition: internal node without two children");
            return;
        }
        const NodeSet a = weak_tree_node_set(*n.left), b = weak_tree_node_set(*n.right);
        NodeSet x;
        {
            std::vector<NodeId> tmp(a.begin(), a.end());
            tmp.insert(tmp.end(), b.begin(), b.end());
            for (NodeId v : n.Z) {
                tmp.push_back(v);
                tmp.push_back(mate(v));
            }
            x = make_node_set(std::move(tmp));
        }
        InducedSubgraph sub = induced_subgraph(g, x);
        auto to_sub_set = [&](const NodeSet& s) {
            NodeSet out;
            for (NodeId v : s) out.push_back(sub.node_from_base[v]);
            return make_node_set(std::move(out));
        };
        // crossing arcs in sub ids
        std::array<ArcId, 2> cross_sub{kNoArc, kNoArc};
        for (ArcId sa = 0; sa < sub.graph.arc_count(); ++sa) {
            if (sub.arc_to_base(sa) == n.crossing_pair[0]) cross_sub[0] = sa;
            if (sub.arc_to_base(sa) == n.crossing_pair[1]) cross_sub[1] = sa;
        }
        if (a.size() + b.size() + 2 * n.Z.size() != x.size())
            fail(r, "weak-decomposition: child sets and Z do not partition the node set");
        check_separator_clauses(sub.graph, to_sub_set(a), to_sub_set(b), to_sub_set(n.Z),
                                cross_sub, r);
        walk(*n.left);
        walk(*n.right);
    };
    walk(*c.root);
    return r;
}

VerifyResult verify_strong_decomposition(const SkewGraph& g, const StrongDecomposition& c) {
    VerifyResult r;
    if (!c.root) {
        fail(r, "strong-decomposition: empty tree");
        return r;
    }
    const NodeSet all = strong_tree_node_set(*c.root);
    if (all.size() != g.node_count())
        fail(r, "strong-decomposition: root set does not cover the node set");
    std::function<void(const StrongDecompNode&)> walk = [&](const StrongDecompNode& n) {
        const NodeSet x = strong_tree_node_set(n);
        InducedSubgraph sub = induced_subgraph(g, x);
        auto to_sub = [&](NodeId v) { return sub.node_from_base[v]; };
        // classes: 1 = Z, 2 = Z', 3+i = B_i
        std::vector<int> cls(sub.graph.node_count(), 0);
        for (NodeId v : n.Z) {
            cls[to_sub(v)] = 1;
            cls[mate(to_sub(v))] = 2;
        }
        for (std::size_t i = 0; i < n.parts.size(); ++i) {
            for (NodeId v : n.parts[i].B) {
                if (cls[to_sub(v)])
                    fail(r, "strong-decomposition: node " + std::to_string(v) + " in two parts");
                cls[to_sub(v)] = 3 + static_cast<int>(i);
            }
        }
        for (NodeId v = 0; v < sub.graph.node_count(); ++v)
            if (!cls[v])
                fail(r, "strong-decomposition: node " + std::to_string(sub.to_base(v)) +
                            " not covered by the partition");
        for (ArcId a = 0; a < sub.graph.arc_count(); ++a) {
            const int t = cls[sub.graph.tail(a)], h = cls[sub.graph.head(a)];
            if (t == 1 && h != 1)
                fail(r, "strong-decomposition: " + arc_str(sub.graph, a) + " leaves Z");
            if (h == 2 && t != 2)
                fail(r, "strong-decomposition: " + arc_str(sub.graph, a) + " enters Z'");
            if (t >= 3 && h >= 3 && t != h)
                fail(r, "strong-decomposition: " + arc_str(sub.graph, a) +
                            " connects two components");
        }
        NodeSet z_sub;
        for (NodeId v : n.Z) z_sub.push_back(to_sub(v));
        z_sub = make_node_set(std::move(z_sub));
        if (!acyclic_within(sub.graph, z_sub))
            fail(r, "strong-decomposition: G[Z] has a directed cycle");
        for (const auto& part : n.parts) {
            if (!is_self_symmetric(part.B))
                fail(r, "strong-decomposition: component not self-symmetric");
            // strong connectivity: every node reachable from a fixed node
            // both forwards and backwards
            InducedSubgraph bsub = induced_subgraph(g, part.B);
            if (bsub.graph.node_count() > 0) {
                NodeSet every;
                for (NodeId v = 0; v < bsub.graph.node_count(); ++v) every.push_back(v);
                std::string w;
                if (!span_connected(bsub.graph, every, 0, 0, &w))
                    fail(r, "strong-decomposition: component not strongly connected, node " +
                                w + " unreachable");
            }
            if (!part.x_child || !part.y_child) {
                fail(r, "strong-decomposition: component without separator children");
                continue;
            }
            const NodeSet xs = strong_tree_node_set(*part.x_child);
            const NodeSet ys = strong_tree_node_set(*part.y_child);
            InducedSubgraph psub = induced_subgraph(g, part.B);
            auto to_psub_set = [&](const NodeSet& s) {
                NodeSet out;
                for (NodeId v : s) {
                    const NodeId nv = psub.node_from_base[v];
                    if (nv == kNoNode) {
                        fail(r, "strong-decomposition: separator child node " +
                                    std::to_string(v) + " outside its component");
                        return NodeSet{};
                    }
                    out.push_back(nv);
                }
                return make_node_set(std::move(out));
            };
            const NodeSet xs_sub = to_psub_set(xs), ys_sub = to_psub_set(ys);
            if (xs.size() + ys.size() != part.B.size()) {
                fail(r, "strong-decomposition: separator children do not partition the component");
                continue;
            }
            std::array<ArcId, 2> cross_sub{kNoArc, kNoArc};
            for (ArcId sa = 0; sa < psub.graph.arc_count(); ++sa) {
                if (psub.arc_to_base(sa) == part.crossing_pair[0]) cross_sub[0] = sa;
                if (psub.arc_to_base(sa) == part.crossing_pair[1]) cross_sub[1] = sa;
            }
            check_separator_clauses(psub.graph, xs_sub, ys_sub, {}, cross_sub, r);
            // entries are the heads of the crossing arcs
            NodeId into_x = kNoNode, into_y = kNoNode;
            for (ArcId a : part.crossing_pair) {
                if (a >= g.arc_count()) continue;
                if (node_set_contains(xs, g.head(a)))
                    into_x = g.head(a);
                else if (node_set_contains(ys, g.head(a)))
                    into_y = g.head(a);
            }
            if (part.entry_x != into_x || part.entry_y != into_y)
                fail(r, "strong-decomposition: separator entries are not the crossing heads");
            walk(*part.x_child);
            walk(*part.y_child);
        }
    };
    walk(*c.root);
    return r;
}

VerifyResult verify_certificate(const SkewGraph& g, const Certificate& c) {
    return std::visit(
        [&](const auto& cert) -> VerifyResult {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, RegularCircuitCert>)
                return verify_regular_circuit(g, cert.walk);
            else if constexpr (std::is_same_v<T, StrongAcyclicPartition>)
                return verify_strong_acyclic(g, cert);
            else if constexpr (std::is_same_v<T, WeakSeparator>)
                return verify_weak_separator(g, cert);
            else if constexpr (std::is_same_v<T, StrongSeparator>)
                return verify_strong_separator(g, cert);
            else if constexpr (std::is_same_v<T, BarrierCert>)
                return verify_barrier(g, cert);
            else if constexpr (std::is_same_v<T, WeakDecomposition>)
                return verify_weak_decomposition(g, cert);
            else if constexpr (std::is_same_v<T, StrongDecomposition>)
                return verify_strong_decomposition(g, cert);
            else {
                VerifyResult r;
                r.violations.push_back(
                    "alternating-circuit certificates verify against a matching instance");
                return r;
            }
        },
        c);
}

}  // namespace skewac
