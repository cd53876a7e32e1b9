#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>

#include "skewac/skew_graph.hpp"

namespace skewac {

struct RegularCircuitCert {
    Walk walk;
};

// Z together with its mate set partitions the nodes; G[Z] and G[Z'] are
// acyclic and no arc goes from Z to Z'.
struct StrongAcyclicPartition {
    NodeSet Z;
};

// Partition {A, B, Z, Z'} with exactly one mate arc pair between the weakly
// acyclic halves A and B; no arc leaves Z, no arc enters Z'.
struct WeakSeparator {
    NodeSet A, B, Z;
    std::array<ArcId, 2> crossing_pair{kNoArc, kNoArc};
};

struct StrongSeparator {
    NodeSet A, B;
    std::array<ArcId, 2> crossing_pair{kNoArc, kNoArc};
    NodeId entry_a = kNoNode;  // head of the arc from B to A
    NodeId entry_b = kNoNode;
};

struct BudCert {
    NodeSet members;  // V_tau
    ArcId base_arc = kNoArc;
    NodeId base_node = kNoNode;
};

struct BarrierCert {
    NodeId s = kNoNode;
    NodeSet S, M;
    std::vector<BudCert> buds;
};

struct WeakDecompNode {
    bool leaf = false;
    NodeSet Z;
    std::array<ArcId, 2> crossing_pair{kNoArc, kNoArc};
    std::unique_ptr<WeakDecompNode> left;   // A side
    std::unique_ptr<WeakDecompNode> right;  // B side
};

struct WeakDecomposition {
    std::unique_ptr<WeakDecompNode> root;
};

struct StrongDecompNode {
    NodeSet Z;
    struct Part {
        NodeSet B;
        std::array<ArcId, 2> crossing_pair{kNoArc, kNoArc};
        NodeId entry_x = kNoNode;
        NodeId entry_y = kNoNode;
        std::unique_ptr<StrongDecompNode> x_child;
        std::unique_ptr<StrongDecompNode> y_child;
    };
    std::vector<Part> parts;
};

struct StrongDecomposition {
    std::unique_ptr<StrongDecompNode> root;
};

struct AlternatingCircuitCert {
    std::vector<std::uint32_t> edges;  // edge indices of the matching instance
};

using Certificate = std::variant<RegularCircuitCert, StrongAcyclicPartition, WeakSeparator,
                                 BarrierCert, WeakDecomposition, StrongSeparator,
                                 StrongDecomposition, AlternatingCircuitCert>;

struct VerifyResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Node set covered by a decomposition subtree: own Z-part, its mates, and
// the children's sets.
NodeSet weak_tree_node_set(const WeakDecompNode& node);
NodeSet strong_tree_node_set(const StrongDecompNode& node);

// Checks every definitional clause of the certificate against g, naming the
// violated clause and a witness in each violation message. Tree certificates
// are walked node by node; weak acyclicity of separator halves is checked
// only for standalone (non-tree) separators, where it runs the linear test.
VerifyResult verify_certificate(const SkewGraph& g, const Certificate& c);

VerifyResult verify_regular_circuit(const SkewGraph& g, const Walk& w);
VerifyResult verify_strong_acyclic(const SkewGraph& g, const StrongAcyclicPartition& c);
VerifyResult verify_weak_separator(const SkewGraph& g, const WeakSeparator& c,
                                   bool check_halves_acyclic = true);
VerifyResult verify_strong_separator(const SkewGraph& g, const StrongSeparator& c);
VerifyResult verify_barrier(const SkewGraph& g, const BarrierCert& c);
VerifyResult verify_weak_decomposition(const SkewGraph& g, const WeakDecomposition& c);
VerifyResult verify_strong_decomposition(const SkewGraph& g, const StrongDecomposition& c);

}  // namespace skewac
