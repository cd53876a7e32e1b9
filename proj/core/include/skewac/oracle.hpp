#pragma once

#include <optional>
#include <random>

#include "skewac/bidirected.hpp"
#include "skewac/buds.hpp"
#include "skewac/skew_graph.hpp"

namespace skewac::oracle {

// Shared test fixtures. F1 is weakly acyclic and strongly connected, F2 is
// F1's left block alone (strongly acyclic), F3 has the regular 2-circuit
// u -> w -> u, F4 is the bud example trimmed down to {s->v, v'->s'}.
//
// F1 ids: a=0 a'=1 x=2 x'=3 b=4 b'=5 y=6 y'=7.
// F3 ids: u=0 u'=1 w=2 w'=3.  F4 ids: s=0 s'=1 v=2 v'=3 w=4 w'=5.
SkewGraph fixture_f1();
SkewGraph fixture_f2();
SkewGraph fixture_f3();
SkewGraph fixture_f4();
Bud fixture_f4_bud();

inline constexpr ArcId kDefaultOracleCap = 24;

// Exhaustive search for a regular circuit. Node-simple circuits decide the
// question: any regular closed arc-simple walk shortcuts to one.
std::optional<Walk> brute_regular_circuit(const SkewGraph& g, ArcId cap = kDefaultOracleCap);

// Exhaustive regular s-t path search (node-simple); t == s yields the empty
// path.
std::optional<Walk> brute_regular_path(const SkewGraph& g, NodeId s, NodeId t,
                                       ArcId cap = kDefaultOracleCap);

// Definitional bud check via brute regular reachability inside G[V_tau].
bool is_bud(const SkewGraph& g, const Bud& bud, ArcId cap = kDefaultOracleCap);

// Literal (non-lazy) trimming rebuild keeping original node and arc ids.
struct ExplicitGraph {
    NodeSet nodes;
    struct Arc {
        ArcId id;
        NodeId tail;
        NodeId head;
    };
    std::vector<Arc> arcs;
};
ExplicitGraph explicit_graph_of(const SkewGraph& g);
ExplicitGraph explicit_trim(const ExplicitGraph& g, const Bud& bud);
ExplicitGraph explicit_trim(const SkewGraph& g, const Bud& bud);

struct GenSpec {
    enum class Kind {
        RandomBidirected,
        StronglyAcyclic,
        WeaklyAcyclicComposed,
        StronglyConnectedWeaklyAcyclic,
    };
    Kind kind = Kind::RandomBidirected;
    std::uint32_t nodes = 0;      // bidirected nodes or node pairs
    std::uint32_t edges = 0;      // bidirected edges or arc pairs
    std::uint64_t seed = 1;
};

struct GenResult {
    std::optional<SkewGraph> skew;
    std::optional<BidirectedGraph> bidirected;
};

// Deterministic per seed. Skew outputs satisfy the degree and loop
// properties; the composed kinds are weakly acyclic by construction.
GenResult generate(const GenSpec& spec);

}  // namespace skewac::oracle
