#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewac/certificate.hpp"

namespace skewac {

// Undirected graph with a claimed perfect matching (edge indices). Loop
// edges are rejected: a loop can neither belong to a matching nor close an
// alternating circuit alone.
struct MatchingInstance {
    std::uint32_t node_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> matching;
};

struct MatchingVerdict {
    std::optional<std::vector<std::uint32_t>> alternating_circuit;
    bool unique() const { return !alternating_circuit.has_value(); }
};

// Definitional perfect-matching check; violations name the node or edge.
VerifyResult verify_matching(const MatchingInstance& inst);

// Even, node-simple, alternating, and its symmetric difference with the
// matching is a perfect matching again.
VerifyResult verify_alternating_circuit(const MatchingInstance& inst,
                                        const std::vector<std::uint32_t>& circuit);

// Uniqueness of the perfect matching via the acyclicity test: matched edges
// leave both endpoints, unmatched edges enter both; the matching is unique
// iff that bidirected graph has no edge-simple cycle. Throws InputError when
// the instance is not a perfect matching.
MatchingVerdict unique_matching(const MatchingInstance& inst);

}  // namespace skewac
