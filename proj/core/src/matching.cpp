#include "skewac/matching.hpp"

#include <algorithm>

#include "skewac/acyclicity.hpp"
#include "skewac/convert.hpp"
#include "skewac/reductions.hpp"

namespace skewac {

VerifyResult verify_matching(const MatchingInstance& inst) {
    VerifyResult r;
    std::vector<std::uint32_t> cover(inst.node_count, 0);
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
        const auto& [u, v] = inst.edges[i];
        if (u >= inst.node_count || v >= inst.node_count) {
            r.violations.push_back("matching: edge " + std::to_string(i) + " endpoint out of range");
            return r;
        }
        if (u == v)
            r.violations.push_back("matching: edge " + std::to_string(i) + " is a loop");
    }
    std::vector<char> in_m(inst.edges.size(), 0);
    for (std::uint32_t e : inst.matching) {
        if (e >= inst.edges.size()) {
            r.violations.push_back("matching: matched edge index " + std::to_string(e) +
                                   " out of range");
            return r;
        }
        if (in_m[e])
            r.violations.push_back("matching: edge " + std::to_string(e) + " listed twice");
        in_m[e] = 1;
        ++cover[inst.edges[e].first];
        ++cover[inst.edges[e].second];
    }
    for (std::uint32_t v = 0; v < inst.node_count; ++v) {
        if (cover[v] == 0)
            r.violations.push_back("matching: node " + std::to_string(v) + " uncovered");
        else if (cover[v] > 1)
            r.violations.push_back("matching: node " + std::to_string(v) + " covered twice");
    }
    return r;
}

VerifyResult verify_alternating_circuit(const MatchingInstance& inst,
                                        const std::vector<std::uint32_t>& circuit) {
    VerifyResult r;
    if (circuit.size() < 2 || circuit.size() % 2 != 0) {
        r.violations.push_back("alternating-circuit: length must be even and positive");
        return r;
    }
    std::vector<char> in_m(inst.edges.size(), 0);
    for (std::uint32_t e : inst.matching) in_m[e] = 1;
    for (std::uint32_t e : circuit)
        if (e >= inst.edges.size()) {
            r.violations.push_back("alternating-circuit: edge index out of range");
            return r;
        }
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const bool a = in_m[circuit[i]];
        const bool b = in_m[circuit[(i + 1) % circuit.size()]];
        if (a == b)
            r.violations.push_back("alternating-circuit: edges " + std::to_string(circuit[i]) +
                                   " and " + std::to_string(circuit[(i + 1) % circuit.size()]) +
                                   " do not alternate");
    }
    // chain the edges into a closed node-simple circuit
    auto ends = [&](std::uint32_t e) { return inst.edges[e]; };
    const auto [u0, v0] = ends(circuit[0]);
    const auto [ul, vl] = ends(circuit.back());
    std::uint32_t start;
    if (u0 == ul || u0 == vl)
        start = u0;
    else if (v0 == ul || v0 == vl)
        start = v0;
    else {
        r.violations.push_back("alternating-circuit: first and last edges do not share a node");
        return r;
    }
    std::vector<char> seen(inst.node_count, 0);
    std::uint32_t at = start;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const auto [a, b] = ends(circuit[i]);
        std::uint32_t nxt;
        if (a == at)
            nxt = b;
        else if (b == at)
            nxt = a;
        else {
            r.violations.push_back("alternating-circuit: edge " + std::to_string(circuit[i]) +
                                   " does not continue the walk");
            return r;
        }
        if (seen[at]) {
            r.violations.push_back("alternating-circuit: node " + std::to_string(at) +
                                   " visited twice");
            return r;
        }
        seen[at] = 1;
        at = nxt;
    }
    if (at != start)
        r.violations.push_back("alternating-circuit: does not close");
    // symmetric difference must be a perfect matching different from M
    MatchingInstance flipped = inst;
    std::vector<char> in_c(inst.edges.size(), 0);
    for (std::uint32_t e : circuit) in_c[e] = 1;
    std::vector<std::uint32_t> m2;
    for (std::uint32_t e : inst.matching)
        if (!in_c[e]) m2.push_back(e);
    for (std::uint32_t e : circuit)
        if (!in_m[e]) m2.push_back(e);
    std::sort(m2.begin(), m2.end());
    flipped.matching = m2;
    for (const std::string& v : verify_matching(flipped).violations)
        r.violations.push_back("alternating-circuit symmetric difference: " + v);
    std::vector<std::uint32_t> m_sorted = inst.matching;
    std::sort(m_sorted.begin(), m_sorted.end());
    if (m2 == m_sorted)
        r.violations.push_back("alternating-circuit: symmetric difference equals the matching");
    return r;
}

MatchingVerdict unique_matching(const MatchingInstance& inst) {
    const VerifyResult vr = verify_matching(inst);
    if (!vr.ok()) throw InputError("unique_matching: " + vr.violations.front());

    std::vector<char> in_m(inst.edges.size(), 0);
    for (std::uint32_t e : inst.matching) in_m[e] = 1;
    std::vector<BEdge> bedges;
    bedges.reserve(inst.edges.size());
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
        const auto& [u, v] = inst.edges[i];
        const EndDir d = in_m[i] ? EndDir::Out : EndDir::In;
        bedges.push_back({u, d, v, d});
    }
    const BidirectedGraph bg(inst.node_count, std::move(bedges));
    const PreprocessResult pre = canonical_preprocess(bg);
    Verdict verdict = acyclicity_test(pre.graph);
    if (verdict.weakly_acyclic()) return {std::nullopt};

    const BWalk image = project_walk(pre.graph, *verdict.circuit, pre.map);
    const BWalk cycle = pull_back_cycle(pre.trace, image);
    std::vector<std::uint32_t> circuit(cycle.edges.begin(), cycle.edges.end());
    return {std::move(circuit)};
}

}  // namespace skewac
