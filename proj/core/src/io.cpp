#include "skewac/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace skewac::io {

namespace {

using ordered_json = nlohmann::ordered_json;

class LineReader {
public:
    LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

    // next non-empty line with comments stripped
    bool next(std::istringstream& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size()) continue;
            out.clear();
            out.str(line);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError(name_ + ":" + std::to_string(lineno_) + ": " + msg);
    }

private:
    std::istream& in_;
    std::string name_;
    std::size_t lineno_ = 0;
};

template <typename T>
T expect_number(LineReader& r, std::istringstream& line, const char* what) {
    long long v;
    if (!(line >> v)) r.fail(std::string("expected ") + what);
    return static_cast<T>(v);
}

}  // namespace

std::uint32_t node_to_file(NodeId v, PairId pairs) {
    return (v & 1u) ? (v >> 1) + 1 + pairs : (v >> 1) + 1;
}

NodeId node_from_file(std::uint32_t id, PairId pairs) {
    if (id < 1 || id > 2 * pairs)
        throw InputError("node id " + std::to_string(id) + " out of range 1.." +
                         std::to_string(2 * pairs));
    return id <= pairs ? 2 * (id - 1) : 2 * (id - pairs - 1) + 1;
}

std::int64_t arc_to_file(ArcId a) {
    const std::int64_t j = static_cast<std::int64_t>(arc_pair_of(a)) + 1;
    return (a & 1u) ? -j : j;
}

ArcId arc_from_file(std::int64_t id, ArcId arc_pairs) {
    const std::int64_t j = id < 0 ? -id : id;
    if (j < 1 || j > static_cast<std::int64_t>(arc_pairs))
        throw InputError("arc id " + std::to_string(id) + " out of range");
    return static_cast<ArcId>(2 * (j - 1) + (id < 0 ? 1 : 0));
}

SkewGraph read_ssg(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    std::istringstream line;
    if (!r.next(line)) r.fail("empty input, expected 'ssg <p> <q>' header");
    std::string tag;
    line >> tag;
    if (tag != "ssg") r.fail("expected 'ssg' header, got '" + tag + "'");
    const auto p = expect_number<PairId>(r, line, "node pair count");
    const auto q = expect_number<ArcId>(r, line, "arc pair count");
    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(q);
    for (ArcId i = 0; i < q; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(q) + " arc lines, got " +
                                  std::to_string(i));
        line >> tag;
        if (tag != "a") r.fail("expected arc line 'a <u> <v>'");
        const auto u = expect_number<std::uint32_t>(r, line, "tail id");
        const auto v = expect_number<std::uint32_t>(r, line, "head id");
        try {
            arcs.emplace_back(node_from_file(u, p), node_from_file(v, p));
        } catch (const InputError& e) {
            r.fail(e.what());
        }
    }
    return SkewGraph(p, arcs);
}

void write_ssg(std::ostream& out, const SkewGraph& g) {
    out << "ssg " << g.node_pairs() << " " << g.arc_pair_count() << "\n";
    for (ArcId j = 0; j < g.arc_pair_count(); ++j)
        out << "a " << node_to_file(g.tail(2 * j), g.node_pairs()) << " "
            << node_to_file(g.head(2 * j), g.node_pairs()) << "\n";
}

BidirectedGraph read_bdg(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    std::istringstream line;
    if (!r.next(line)) r.fail("empty input, expected 'bdg <n> <m>' header");
    std::string tag;
    line >> tag;
    if (tag != "bdg") r.fail("expected 'bdg' header, got '" + tag + "'");
    const auto n = expect_number<BNodeId>(r, line, "node count");
    const auto m = expect_number<EdgeId>(r, line, "edge count");
    std::vector<BEdge> edges;
    edges.reserve(m);
    auto dir = [&](const std::string& s) {
        if (s == "+") return EndDir::Out;
        if (s == "-") return EndDir::In;
        r.fail("expected direction '+' or '-', got '" + s + "'");
    };
    for (EdgeId i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " edge lines");
        line >> tag;
        if (tag != "e") r.fail("expected edge line 'e <u> <du> <v> <dv>'");
        const auto u = expect_number<BNodeId>(r, line, "endpoint id");
        std::string du, dv;
        if (!(line >> du)) r.fail("expected direction");
        const auto v = expect_number<BNodeId>(r, line, "endpoint id");
        if (!(line >> dv)) r.fail("expected direction");
        if (u < 1 || u > n || v < 1 || v > n) r.fail("node id out of range");
        edges.push_back({u - 1, dir(du), v - 1, dir(dv)});
    }
    return BidirectedGraph(n, std::move(edges));
}

void write_bdg(std::ostream& out, const BidirectedGraph& g) {
    out << "bdg " << g.node_count() << " " << g.edge_count() << "\n";
    auto d = [](EndDir e) { return e == EndDir::Out ? '+' : '-'; };
    for (const BEdge& e : g.edges())
        out << "e " << e.u + 1 << " " << d(e.du) << " " << e.v + 1 << " " << d(e.dv) << "\n";
}

MatchingInstance read_mug(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    std::istringstream line;
    if (!r.next(line)) r.fail("empty input, expected 'mug <n> <m>' header");
    std::string tag;
    line >> tag;
    if (tag != "mug") r.fail("expected 'mug' header, got '" + tag + "'");
    MatchingInstance inst;
    inst.node_count = expect_number<std::uint32_t>(r, line, "node count");
    const auto m = expect_number<std::uint32_t>(r, line, "edge count");
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " edge lines");
        line >> tag;
        if (tag != "e") r.fail("expected edge line 'e <u> <v>'");
        const auto u = expect_number<std::uint32_t>(r, line, "endpoint");
        const auto v = expect_number<std::uint32_t>(r, line, "endpoint");
        if (u < 1 || u > inst.node_count || v < 1 || v > inst.node_count)
            r.fail("node id out of range");
        inst.edges.emplace_back(u - 1, v - 1);
    }
    if (!r.next(line)) r.fail("expected matching line 'm <i1> <i2> ...'");
    line >> tag;
    if (tag != "m") r.fail("expected matching line 'm <i1> <i2> ...'");
    long long e;
    while (line >> e) {
        if (e < 1 || e > static_cast<long long>(inst.edges.size()))
            r.fail("matching edge index out of range");
        inst.matching.push_back(static_cast<std::uint32_t>(e - 1));
    }
    return inst;
}

void write_mug(std::ostream& out, const MatchingInstance& inst) {
    out << "mug " << inst.node_count << " " << inst.edges.size() << "\n";
    for (const auto& [u, v] : inst.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    out << "m";
    for (std::uint32_t e : inst.matching) out << " " << e + 1;
    out << "\n";
}

namespace {

ordered_json nodes_json(const NodeSet& s, PairId pairs) {
    std::vector<std::uint32_t> ids;
    ids.reserve(s.size());
    for (NodeId v : s) ids.push_back(node_to_file(v, pairs));
    std::sort(ids.begin(), ids.end());
    return ordered_json(ids);
}

ordered_json crossing_json(const std::array<ArcId, 2>& c) {
    return ordered_json{arc_to_file(c[0]), arc_to_file(c[1])};
}

ordered_json weak_node_json(const WeakDecompNode& n, PairId pairs) {
    ordered_json j;
    if (n.leaf) {
        j["leaf"] = true;
        j["Z"] = nodes_json(n.Z, pairs);
    } else {
        j["Z"] = nodes_json(n.Z, pairs);
        j["crossing_pair"] = crossing_json(n.crossing_pair);
        j["children"] = ordered_json::array(
            {weak_node_json(*n.left, pairs), weak_node_json(*n.right, pairs)});
    }
    return j;
}

ordered_json strong_node_json(const StrongDecompNode& n, PairId pairs) {
    ordered_json j;
    j["Z"] = nodes_json(n.Z, pairs);
    ordered_json comps = ordered_json::array();
    for (const auto& part : n.parts) {
        ordered_json pj;
        pj["B"] = nodes_json(part.B, pairs);
        pj["crossing_pair"] = crossing_json(part.crossing_pair);
        pj["entry_x"] = node_to_file(part.entry_x, pairs);
        pj["entry_y"] = node_to_file(part.entry_y, pairs);
        pj["children"] = ordered_json::array(
            {strong_node_json(*part.x_child, pairs), strong_node_json(*part.y_child, pairs)});
        comps.push_back(std::move(pj));
    }
    j["components"] = std::move(comps);
    return j;
}

NodeSet nodes_from_json(const ordered_json& j, PairId pairs) {
    std::vector<NodeId> out;
    for (const auto& v : j) out.push_back(node_from_file(v.get<std::uint32_t>(), pairs));
    return make_node_set(std::move(out));
}

std::array<ArcId, 2> crossing_from_json(const ordered_json& j, ArcId arc_pairs) {
    if (!j.is_array() || j.size() != 2) throw InputError("certificate: malformed crossing_pair");
    return {arc_from_file(j[0].get<std::int64_t>(), arc_pairs),
            arc_from_file(j[1].get<std::int64_t>(), arc_pairs)};
}

std::unique_ptr<WeakDecompNode> weak_node_from_json(const ordered_json& j, PairId pairs,
                                                    ArcId arc_pairs) {
    auto n = std::make_unique<WeakDecompNode>();
    if (j.contains("leaf") && j["leaf"].get<bool>()) {
        n->leaf = true;
        n->Z = nodes_from_json(j.at("Z"), pairs);
        return n;
    }
    n->Z = nodes_from_json(j.at("Z"), pairs);
    n->crossing_pair = crossing_from_json(j.at("crossing_pair"), arc_pairs);
    const auto& ch = j.at("children");
    if (!ch.is_array() || ch.size() != 2)
        throw InputError("certificate: internal node needs two children");
    n->left = weak_node_from_json(ch[0], pairs, arc_pairs);
    n->right = weak_node_from_json(ch[1], pairs, arc_pairs);
    return n;
}

std::unique_ptr<StrongDecompNode> strong_node_from_json(const ordered_json& j, PairId pairs,
                                                        ArcId arc_pairs) {
    auto n = std::make_unique<StrongDecompNode>();
    n->Z = nodes_from_json(j.at("Z"), pairs);
    for (const auto& pj : j.at("components")) {
        StrongDecompNode::Part part;
        part.B = nodes_from_json(pj.at("B"), pairs);
        part.crossing_pair = crossing_from_json(pj.at("crossing_pair"), arc_pairs);
        part.entry_x = node_from_file(pj.at("entry_x").get<std::uint32_t>(), pairs);
        part.entry_y = node_from_file(pj.at("entry_y").get<std::uint32_t>(), pairs);
        const auto& ch = pj.at("children");
        if (!ch.is_array() || ch.size() != 2)
            throw InputError("certificate: component needs two children");
        part.x_child = strong_node_from_json(ch[0], pairs, arc_pairs);
        part.y_child = strong_node_from_json(ch[1], pairs, arc_pairs);
        n->parts.push_back(std::move(part));
    }
    return n;
}

}  // namespace

std::string serialize_certificate(const Certificate& c, PairId pairs) {
    ordered_json j;
    std::visit(
        [&](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, RegularCircuitCert>) {
                j["type"] = "regular-circuit";
                ordered_json nodes = ordered_json::array(), arcs = ordered_json::array();
                for (NodeId v : cert.walk.nodes) nodes.push_back(node_to_file(v, pairs));
                for (ArcId a : cert.walk.arcs) arcs.push_back(arc_to_file(a));
                j["nodes"] = std::move(nodes);
                j["arcs"] = std::move(arcs);
            } else if constexpr (std::is_same_v<T, StrongAcyclicPartition>) {
                j["type"] = "strong-acyclic";
                j["Z"] = nodes_json(cert.Z, pairs);
            } else if constexpr (std::is_same_v<T, WeakSeparator>) {
                j["type"] = "weak-separator";
                j["A"] = nodes_json(cert.A, pairs);
                j["B"] = nodes_json(cert.B, pairs);
                j["Z"] = nodes_json(cert.Z, pairs);
                j["crossing_pair"] = crossing_json(cert.crossing_pair);
            } else if constexpr (std::is_same_v<T, BarrierCert>) {
                j["type"] = "barrier";
                j["s"] = node_to_file(cert.s, pairs);
                j["S"] = nodes_json(cert.S, pairs);
                j["M"] = nodes_json(cert.M, pairs);
                ordered_json buds = ordered_json::array();
                for (const BudCert& b : cert.buds) {
                    ordered_json bj;
                    bj["V"] = nodes_json(b.members, pairs);
                    bj["base_arc"] = arc_to_file(b.base_arc);
                    bj["base_node"] = node_to_file(b.base_node, pairs);
                    buds.push_back(std::move(bj));
                }
                j["buds"] = std::move(buds);
            } else if constexpr (std::is_same_v<T, WeakDecomposition>) {
                j["type"] = "weak-decomposition";
                j["root"] = weak_node_json(*cert.root, pairs);
            } else if constexpr (std::is_same_v<T, StrongSeparator>) {
                j["type"] = "strong-separator";
                j["A"] = nodes_json(cert.A, pairs);
                j["B"] = nodes_json(cert.B, pairs);
                j["crossing_pair"] = crossing_json(cert.crossing_pair);
                j["entry_a"] = node_to_file(cert.entry_a, pairs);
                j["entry_b"] = node_to_file(cert.entry_b, pairs);
            } else if constexpr (std::is_same_v<T, StrongDecomposition>) {
                j["type"] = "strong-decomposition";
                j["root"] = strong_node_json(*cert.root, pairs);
            } else {
                j["type"] = "alternating-circuit";
                ordered_json edges = ordered_json::array();
                for (std::uint32_t e : cert.edges) edges.push_back(e + 1);
                j["edges"] = std::move(edges);
            }
        },
        c);
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text, PairId pairs, ArcId arc_pairs) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("certificate: invalid JSON: ") + e.what());
    }
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "regular-circuit") {
            RegularCircuitCert c;
            c.walk.kind = Walk::Kind::Cycle;
            for (const auto& v : j.at("nodes"))
                c.walk.nodes.push_back(node_from_file(v.get<std::uint32_t>(), pairs));
            for (const auto& a : j.at("arcs"))
                c.walk.arcs.push_back(arc_from_file(a.get<std::int64_t>(), arc_pairs));
            return c;
        }
        if (type == "strong-acyclic")
            return StrongAcyclicPartition{nodes_from_json(j.at("Z"), pairs)};
        if (type == "weak-separator") {
            WeakSeparator c;
            c.A = nodes_from_json(j.at("A"), pairs);
            c.B = nodes_from_json(j.at("B"), pairs);
            c.Z = nodes_from_json(j.at("Z"), pairs);
            c.crossing_pair = crossing_from_json(j.at("crossing_pair"), arc_pairs);
            return c;
        }
        if (type == "barrier") {
            BarrierCert c;
            c.s = node_from_file(j.at("s").get<std::uint32_t>(), pairs);
            c.S = nodes_from_json(j.at("S"), pairs);
            c.M = nodes_from_json(j.at("M"), pairs);
            for (const auto& bj : j.at("buds")) {
                BudCert b;
                b.members = nodes_from_json(bj.at("V"), pairs);
                b.base_arc = arc_from_file(bj.at("base_arc").get<std::int64_t>(), arc_pairs);
                b.base_node = node_from_file(bj.at("base_node").get<std::uint32_t>(), pairs);
                c.buds.push_back(std::move(b));
            }
            return c;
        }
        if (type == "weak-decomposition") {
            WeakDecomposition c;
            c.root = weak_node_from_json(j.at("root"), pairs, arc_pairs);
            return c;
        }
        if (type == "strong-separator") {
            StrongSeparator c;
            c.A = nodes_from_json(j.at("A"), pairs);
            c.B = nodes_from_json(j.at("B"), pairs);
            c.crossing_pair = crossing_from_json(j.at("crossing_pair"), arc_pairs);
            c.entry_a = node_from_file(j.at("entry_a").get<std::uint32_t>(), pairs);
            c.entry_b = node_from_file(j.at("entry_b").get<std::uint32_t>(), pairs);
            return c;
        }
        if (type == "strong-decomposition") {
            StrongDecomposition c;
            c.root = strong_node_from_json(j.at("root"), pairs, arc_pairs);
            return c;
        }
        if (type == "alternating-circuit") {
            AlternatingCircuitCert c;
            for (const auto& e : j.at("edges")) {
                const auto idx = e.get<std::uint32_t>();
                if (idx < 1) throw InputError("certificate: edge index must be 1-based");
                c.edges.push_back(idx - 1);
            }
            return c;
        }
        throw InputError("certificate: unknown type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("certificate: malformed structure: ") + e.what());
    }
}

}  // namespace skewac::io
