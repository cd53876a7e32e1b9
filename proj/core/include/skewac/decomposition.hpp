#pragma once

#include <optional>

#include "skewac/acyclicity.hpp"
#include "skewac/certificate.hpp"

namespace skewac {

// Topological-labeling test for strong acyclicity. No degree or loop
// preconditions; on failure returns a directed cycle.
struct StrongAcyclicResult {
    std::optional<StrongAcyclicPartition> partition;
    std::optional<Walk> cycle;
};
StrongAcyclicResult check_strong_acyclic(const SkewGraph& g);

struct DecomposeResult {
    std::optional<Walk> circuit;
    std::optional<WeakDecomposition> tree;
    bool weakly_acyclic() const { return tree.has_value(); }
};

// Linear-time weak acyclic decomposition; same preconditions as
// acyclicity_test. Every internal node of the tree is a weak separator of
// its induced subgraph, every leaf a strong-acyclic partition.
DecomposeResult decompose(const SkewGraph& g);

// Barrier plus a topological witness order of W = S u {bud bases} in the
// trimmed graph.
struct AcyclicBarrier {
    BarrierCert barrier;
    std::vector<NodeId> w_order;
};

// Folds an acyclic barrier with empty M-part and given per-bud
// decompositions into a separator spine: slices of W between bud bases
// become Z-parts, each bud joins the accumulated prefix as the B side.
// Throws std::logic_error when M is nonempty, the order is not topological,
// or the sub-decompositions do not match the bud sets.
WeakDecomposition barrier_to_separators(const SkewGraph& g, const AcyclicBarrier& ab,
                                        std::vector<WeakDecomposition> bud_subtrees);

// One of three certificates: the root separator of the decomposition tree,
// a strong-acyclic partition, or a regular circuit.
struct WeakSeparatorResult {
    std::optional<WeakSeparator> separator;
    std::optional<StrongAcyclicPartition> partition;
    std::optional<Walk> circuit;
};
WeakSeparatorResult find_weak_separator(const SkewGraph& g);

// Partition into Z plus the self-symmetric strongly connected components.
// Requires g weakly acyclic: a nontrivial regular SCC is reported as
// evidence instead of a partition.
struct ComponentPartition {
    NodeSet Z;
    std::vector<NodeSet> components;
};
struct ComponentPartitionResult {
    std::optional<ComponentPartition> partition;
    std::optional<NodeSet> nontrivial_regular_scc;
};
ComponentPartitionResult component_partition(const SkewGraph& g);

// Requires g strongly connected and weakly acyclic (plus degree and loop
// properties); throws std::logic_error naming the evidence otherwise.
StrongSeparator find_strong_separator(const SkewGraph& g);

struct StrongDecomposeResult {
    std::optional<Walk> circuit;
    std::optional<StrongDecomposition> tree;
};

// Alternates component partitions and strong separator splits, O(mn).
StrongDecomposeResult decompose_strong(const SkewGraph& g);

}  // namespace skewac
