// skewac: weak-acyclicity testing and decomposition of skew-symmetric and
// bidirected graphs, with machine-verifiable certificates.
//
// Exit codes: 0 = positive verdict (weakly acyclic / unique matching /
// certificate valid), 1 = negative verdict with a witness emitted,
// 2 = input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "skewac/acyclicity.hpp"
#include "skewac/convert.hpp"
#include "skewac/decomposition.hpp"
#include "skewac/io.hpp"
#include "skewac/matching.hpp"
#include "skewac/oracle.hpp"
#include "skewac/reductions.hpp"

namespace {

using namespace skewac;

enum ExitCode { kPositive = 0, kNegative = 1, kError = 2 };

std::string read_stream(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

// Loads an .ssg directly; an .bdg goes through the canonical preprocessing
// pipeline so the degree and loop properties hold.
SkewGraph load_graph(const std::string& path) {
    const std::string text = read_stream(path);
    std::istringstream in(text);
    if (has_suffix(path, ".bdg")) {
        const BidirectedGraph bg = io::read_bdg(in, path);
        return std::move(canonical_preprocess(bg).graph);
    }
    return io::read_ssg(in, path);
}

void emit_certificate(const Certificate& cert, PairId pairs, const std::string& path) {
    const std::string text = io::serialize_certificate(cert, pairs);
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InputError("cannot write " + path);
        out << text;
    }
}

int cmd_check(const std::string& input, const std::string& cert_path) {
    const SkewGraph g = load_graph(input);
    Verdict v = acyclicity_test(g);
    if (v.weakly_acyclic()) {
        std::cout << "weakly-acyclic\n";
        return kPositive;
    }
    std::cout << "regular-circuit\n";
    emit_certificate(RegularCircuitCert{*v.circuit}, g.node_pairs(),
                     cert_path.empty() ? std::string() : cert_path);
    return kNegative;
}

int cmd_decompose(const std::string& input, const std::string& cert_path) {
    const SkewGraph g = load_graph(input);
    DecomposeResult d = decompose(g);
    if (d.circuit) {
        std::cout << "regular-circuit\n";
        emit_certificate(RegularCircuitCert{*d.circuit}, g.node_pairs(), cert_path);
        return kNegative;
    }
    std::cout << "weakly-acyclic\n";
    emit_certificate(Certificate{std::move(*d.tree)}, g.node_pairs(), cert_path);
    return kPositive;
}

int cmd_decompose_strong(const std::string& input, const std::string& cert_path) {
    const SkewGraph g = load_graph(input);
    StrongDecomposeResult d = decompose_strong(g);
    if (d.circuit) {
        std::cout << "regular-circuit\n";
        emit_certificate(RegularCircuitCert{*d.circuit}, g.node_pairs(), cert_path);
        return kNegative;
    }
    std::cout << "weakly-acyclic\n";
    emit_certificate(Certificate{std::move(*d.tree)}, g.node_pairs(), cert_path);
    return kPositive;
}

int cmd_separator(const std::string& input, const std::string& cert_path) {
    const SkewGraph g = load_graph(input);
    WeakSeparatorResult r = find_weak_separator(g);
    if (r.circuit) {
        std::cout << "regular-circuit\n";
        emit_certificate(RegularCircuitCert{*r.circuit}, g.node_pairs(), cert_path);
        return kNegative;
    }
    if (r.partition) {
        std::cout << "strongly-acyclic\n";
        emit_certificate(Certificate{std::move(*r.partition)}, g.node_pairs(), cert_path);
        return kPositive;
    }
    std::cout << "weak-separator\n";
    emit_certificate(Certificate{std::move(*r.separator)}, g.node_pairs(), cert_path);
    return kPositive;
}

int cmd_matching_unique(const std::string& input, const std::string& cert_path) {
    const std::string text = read_stream(input);
    std::istringstream in(text);
    const MatchingInstance inst = io::read_mug(in, input);
    MatchingVerdict v = unique_matching(inst);
    if (v.unique()) {
        std::cout << "unique\n";
        return kPositive;
    }
    std::cout << "alternating-circuit\n";
    emit_certificate(AlternatingCircuitCert{*v.alternating_circuit}, 0, cert_path);
    return kNegative;
}

int cmd_verify(const std::string& cert_path, const std::string& input) {
    const std::string cert_text = read_stream(cert_path);
    if (has_suffix(input, ".mug")) {
        const std::string text = read_stream(input);
        std::istringstream in(text);
        const MatchingInstance inst = io::read_mug(in, input);
        const Certificate cert = io::parse_certificate(cert_text, 0, 0);
        const auto* alt = std::get_if<AlternatingCircuitCert>(&cert);
        if (!alt) throw InputError("verify: matching instances take alternating-circuit certificates");
        const VerifyResult r = verify_alternating_circuit(inst, alt->edges);
        for (const std::string& v : r.violations) std::cout << "violation: " << v << "\n";
        std::cout << (r.ok() ? "valid\n" : "invalid\n");
        return r.ok() ? kPositive : kNegative;
    }
    const SkewGraph g = load_graph(input);
    const Certificate cert = io::parse_certificate(cert_text, g.node_pairs(), g.arc_pair_count());
    const VerifyResult r = verify_certificate(g, cert);
    for (const std::string& v : r.violations) std::cout << "violation: " << v << "\n";
    std::cout << (r.ok() ? "valid\n" : "invalid\n");
    return r.ok() ? kPositive : kNegative;
}

int cmd_gen(const std::string& kind, std::uint32_t pairs, std::uint32_t arcs, std::uint64_t seed,
            const std::string& format, const std::string& out_path) {
    oracle::GenSpec spec;
    spec.nodes = pairs;
    spec.edges = arcs;
    spec.seed = seed;
    if (kind == "random-bidirected")
        spec.kind = oracle::GenSpec::Kind::RandomBidirected;
    else if (kind == "strongly-acyclic")
        spec.kind = oracle::GenSpec::Kind::StronglyAcyclic;
    else if (kind == "weakly-acyclic-composed")
        spec.kind = oracle::GenSpec::Kind::WeaklyAcyclicComposed;
    else if (kind == "strongly-connected")
        spec.kind = oracle::GenSpec::Kind::StronglyConnectedWeaklyAcyclic;
    else
        throw InputError("gen: unknown kind '" + kind + "'");
    const oracle::GenResult res = oracle::generate(spec);

    std::ostringstream os;
    if (format == "ssg") {
        if (res.skew)
            io::write_ssg(os, *res.skew);
        else
            io::write_ssg(os, bidirected_to_skew(*res.bidirected).first);
    } else if (format == "bdg") {
        if (res.bidirected)
            io::write_bdg(os, *res.bidirected);
        else
            io::write_bdg(os, skew_to_bidirected(*res.skew));
    } else {
        throw InputError("gen: unknown format '" + format + "'");
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + out_path);
        out << os.str();
    }
    return kPositive;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path) {
    const std::string text = read_stream(input);
    std::istringstream in(text);
    std::ostringstream os;
    if (to == "ssg") {
        const BidirectedGraph bg = io::read_bdg(in, input);
        io::write_ssg(os, bidirected_to_skew(bg).first);
    } else if (to == "bdg") {
        const SkewGraph g = io::read_ssg(in, input);
        io::write_bdg(os, skew_to_bidirected(g));
    } else {
        throw InputError("convert: unknown target format '" + to + "'");
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + out_path);
        out << os.str();
    }
    return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak-acyclicity tester and decomposer for skew-symmetric graphs"};
    app.require_subcommand(1);

    std::string input, cert_path, out_path;
    std::string kind = "weakly-acyclic-composed", format = "ssg", to;
    std::uint32_t pairs = 16, arcs = 24;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "test a graph for weak acyclicity");
    check->add_option("input", input)->required();
    check->add_option("--certificate", cert_path, "write the witness certificate here");

    auto* dec = app.add_subcommand("decompose", "build a weak acyclic decomposition");
    dec->add_option("input", input)->required();
    dec->add_option("--certificate", cert_path);

    auto* decs = app.add_subcommand("decompose-strong", "build a strong acyclic decomposition");
    decs->add_option("input", input)->required();
    decs->add_option("--certificate", cert_path);

    auto* sep = app.add_subcommand("separator", "find a weak separator");
    sep->add_option("input", input)->required();
    sep->add_option("--certificate", cert_path);

    auto* mat = app.add_subcommand("matching-unique", "check a perfect matching for uniqueness");
    mat->add_option("input", input)->required();
    mat->add_option("--certificate", cert_path);

    auto* ver = app.add_subcommand("verify", "verify a certificate against an input graph");
    ver->add_option("certificate", cert_path)->required();
    ver->add_option("input", input)->required();

    auto* gen = app.add_subcommand("gen", "generate a test instance");
    gen->add_option("--kind", kind,
                    "random-bidirected | strongly-acyclic | weakly-acyclic-composed | "
                    "strongly-connected");
    gen->add_option("--pairs", pairs, "node pairs (nodes for random-bidirected)");
    gen->add_option("--arcs", arcs, "arc pairs (edges for random-bidirected)");
    gen->add_option("--seed", seed);
    gen->add_option("--format", format, "ssg | bdg");
    gen->add_option("--out", out_path);

    auto* conv = app.add_subcommand("convert", "convert between ssg and bdg");
    conv->add_option("input", input)->required();
    conv->add_option("--to", to, "target format: ssg | bdg")->required();
    conv->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (check->parsed()) return cmd_check(input, cert_path);
        if (dec->parsed()) return cmd_decompose(input, cert_path);
        if (decs->parsed()) return cmd_decompose_strong(input, cert_path);
        if (sep->parsed()) return cmd_separator(input, cert_path);
        if (mat->parsed()) return cmd_matching_unique(input, cert_path);
        if (ver->parsed()) return cmd_verify(cert_path, input);
        if (gen->parsed()) return cmd_gen(kind, pairs, arcs, seed, format, out_path);
        if (conv->parsed()) return cmd_convert(input, to, out_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
