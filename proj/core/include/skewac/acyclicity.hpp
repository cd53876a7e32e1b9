#pragma once

#include <memory>
#include <optional>

#include "skewac/buds.hpp"

namespace skewac {

enum class Color : std::uint8_t { White, Gray, Black, AntiGray, AntiBlack };

struct TraversalState;

// Hooks for invariant-checking tests; default implementation observes
// nothing. The state reference is mutable only because representative
// lookups compress paths; observers must not alter it.
class TraversalObserver {
public:
    virtual ~TraversalObserver() = default;
    virtual void on_root(TraversalState&, NodeId) {}
    virtual void on_discover(TraversalState&, NodeId, ArcId) {}
    virtual void on_finish(TraversalState&, NodeId, std::uint32_t) {}
    virtual void on_trim(TraversalState&, std::size_t) {}
    virtual void on_arc_examined(TraversalState&, ArcId, bool) {}
    virtual void before_trim(TraversalState&, const Bud&) {}
};

// Final traversal state. Colors and forest arcs are indexed by base node id;
// only entries of current-graph representatives stay authoritative after
// trimmings. Finish stamps start at 1; 0 means never finished.
struct TraversalState {
    explicit TraversalState(const SkewGraph& g)
        : cg(g),
          color(g.node_count(), Color::White),
          q(g.node_count(), kNoArc),
          finish(g.node_count(), 0) {}

    CurrentGraph cg;
    std::vector<Color> color;
    std::vector<ArcId> q;
    std::vector<std::uint32_t> finish;
    std::uint32_t next_stamp = 1;
};

struct Verdict {
    std::optional<Walk> circuit;  // regular circuit of the input graph
    bool weakly_acyclic() const { return !circuit.has_value(); }
};

struct TraversalResult {
    std::optional<Walk> circuit;
    std::unique_ptr<TraversalState> state;
    bool weakly_acyclic() const { return !circuit.has_value(); }
};

// Input scan for the traversal preconditions: every node has in-degree or
// out-degree at most 1, and no arc connects a node to its mate. Throws
// InputError naming the offending node or arc.
void check_degree_and_loop_properties(const SkewGraph& g);

// Full run keeping the final state; decomposition builds on it.
TraversalResult run_acyclicity_dfs(const SkewGraph& g, TraversalObserver* obs = nullptr);

// Linear-time weak acyclicity test. Requires the degree and loop properties
// (preprocess arbitrary inputs through reductions first). Self-loop arcs are
// returned directly as one-arc regular circuits.
Verdict acyclicity_test(const SkewGraph& g, TraversalObserver* obs = nullptr);

}  // namespace skewac
