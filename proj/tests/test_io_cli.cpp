#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "skewac/decomposition.hpp"
#include "skewac/io.hpp"
#include "skewac/oracle.hpp"
#include "test_util.hpp"

using namespace skewac;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SKEWAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/skewac_test_") + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

const char* kF1 = "ssg 4 5\na 1 2\na 2 5\na 3 4\na 4 7\na 5 3\n";
const char* kF3 = "ssg 2 2\na 1 2\na 2 1\n";

}  // namespace

TEST_CASE("ssg round trip") {
    std::istringstream in(kF1);
    const SkewGraph g = io::read_ssg(in, "f1.ssg");
    CHECK(g.node_pairs() == 4);
    CHECK(g.arc_pair_count() == 5);
    CHECK(g.tail(0) == 0);
    CHECK(g.head(0) == 2);
    std::ostringstream out;
    io::write_ssg(out, g);
    CHECK(out.str() == kF1);
}

TEST_CASE("ssg diagnostics carry line numbers") {
    SUBCASE("bad node id") {
        std::istringstream in("ssg 2 1\na 1 9\n");
        CHECK_THROWS_WITH_AS(io::read_ssg(in, "x.ssg"), doctest::Contains("x.ssg:2"), InputError);
    }
    SUBCASE("missing header") {
        std::istringstream in("nope\n");
        CHECK_THROWS_AS(io::read_ssg(in, "x.ssg"), InputError);
    }
    SUBCASE("comments and blank lines are skipped") {
        std::istringstream in("# a comment\nssg 1 1\n\na 1 2 # trailing\n");
        const SkewGraph g = io::read_ssg(in, "x.ssg");
        CHECK(g.arc_pair_count() == 1);
    }
}

TEST_CASE("bdg and mug round trips") {
    const std::string bdg = "bdg 3 3\ne 1 + 2 -\ne 2 + 3 +\ne 1 - 1 -\n";
    std::istringstream in(bdg);
    const BidirectedGraph g = io::read_bdg(in, "x.bdg");
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(2).u == 0);
    CHECK(g.edge(2).du == EndDir::In);
    std::ostringstream out;
    io::write_bdg(out, g);
    CHECK(out.str() == bdg);

    const std::string mug = "mug 4 5\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 1 3\nm 1 3\n";
    std::istringstream min(mug);
    const MatchingInstance inst = io::read_mug(min, "x.mug");
    CHECK(inst.node_count == 4);
    CHECK(inst.matching == std::vector<std::uint32_t>{0, 2});
    std::ostringstream mout;
    io::write_mug(mout, inst);
    CHECK(mout.str() == mug);
}

TEST_CASE("certificate serialization round trips for every type") {
    const SkewGraph g = oracle::fixture_f1();
    std::vector<Certificate> certs;
    {
        DecomposeResult d = decompose(g);
        REQUIRE(d.tree.has_value());
        certs.push_back(std::move(*d.tree));
    }
    {
        StrongDecomposeResult d = decompose_strong(g);
        REQUIRE(d.tree.has_value());
        certs.push_back(std::move(*d.tree));
    }
    {
        WeakSeparatorResult r = find_weak_separator(g);
        certs.push_back(std::move(*r.separator));
        certs.push_back(find_strong_separator(g));
    }
    certs.push_back(*check_strong_acyclic(oracle::fixture_f2()).partition);  // needs f2
    {
        Verdict v = acyclicity_test(oracle::fixture_f3());
        certs.push_back(RegularCircuitCert{*v.circuit});
    }
    {
        // the barrier behind F1's decomposition: S = {x, a'}, one bud at b
        BarrierCert b;
        b.s = 2;
        b.S = {1, 2};
        b.buds.push_back(BudCert{{4, 5, 6, 7}, 8, 4});
        certs.push_back(std::move(b));
    }
    certs.push_back(AlternatingCircuitCert{{0, 1, 2, 3}});

    for (std::size_t i = 0; i < certs.size(); ++i) {
        CAPTURE(i);
        // f2-based and f3-based certificates still parse against their graphs
        const SkewGraph& ctx = (i == 4) ? oracle::fixture_f2()
                               : (i == 5) ? oracle::fixture_f3()
                                          : g;
        const std::string text = io::serialize_certificate(certs[i], ctx.node_pairs());
        const Certificate back =
            io::parse_certificate(text, ctx.node_pairs(), ctx.arc_pair_count());
        CHECK(io::serialize_certificate(back, ctx.node_pairs()) == text);
        if (i <= 5) CHECK(verify_certificate(ctx, back).ok());
    }
    // the hand-built barrier verifies too
    const Certificate barrier = io::parse_certificate(
        io::serialize_certificate(certs[6], g.node_pairs()), g.node_pairs(), g.arc_pair_count());
    CHECK(verify_certificate(g, barrier).ok());
}

TEST_CASE("cli: check produces verdicts, certificates and exit codes") {
    const std::string f1 = temp_file("f1.ssg", kF1);
    const std::string f3 = temp_file("f3.ssg", kF3);

    CliResult pos = run_cli("check " + f1);
    CHECK(pos.exit_code == 0);
    CHECK(pos.out == "weakly-acyclic\n");

    CliResult neg = run_cli("check " + f3 + " --certificate /tmp/skewac_test_c3.json");
    CHECK(neg.exit_code == 1);
    CHECK(neg.out == "regular-circuit\n");

    CliResult ver = run_cli("verify /tmp/skewac_test_c3.json " + f3);
    CHECK(ver.exit_code == 0);
    CHECK(ver.out == "valid\n");

    SUBCASE("malformed input exits 2") {
        const std::string bad = temp_file("bad.ssg", "ssg 1 1\na 1 99\n");
        CHECK(run_cli("check " + bad).exit_code == 2);
    }
    SUBCASE("usage errors exit 2") { CHECK(run_cli("frobnicate x").exit_code == 2); }
    SUBCASE("a corrupted certificate is rejected with exit 1") {
        // claim the whole node set is Z: the mate condition breaks
        const std::string wrong = temp_file(
            "wrong.json", "{\"type\": \"strong-acyclic\", \"Z\": [1, 2, 3, 5, 6, 7]}");
        CliResult r = run_cli("verify " + wrong + " " + f1);
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("violation") != std::string::npos);
    }
    SUBCASE("invalid certificate json exits 2") {
        const std::string broken = temp_file("broken.json", "{nope");
        CHECK(run_cli("verify " + broken + " " + f1).exit_code == 2);
    }
}

TEST_CASE("cli: producer/consumer closure on every command") {
    const std::string f1 = temp_file("f1.ssg", kF1);
    const std::string f3 = temp_file("f3.ssg", kF3);
    const std::string cert = "/tmp/skewac_test_cert.json";
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"decompose", f1},      {"decompose", f3},        {"decompose-strong", f1},
        {"separator", f1},      {"separator", f3},        {"check", f3},
    };
    for (const auto& [cmd, file] : cases) {
        CAPTURE(cmd);
        CAPTURE(file);
        run_cli(cmd + " " + file + " --certificate " + cert);
        CliResult ver = run_cli("verify " + cert + " " + file);
        CHECK(ver.exit_code == 0);
    }
    // matching route
    const std::string mug =
        temp_file("c4.mug", "mug 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nm 1 3\n");
    run_cli("matching-unique " + mug + " --certificate " + cert);
    CHECK(run_cli("verify " + cert + " " + mug).exit_code == 0);
}

TEST_CASE("cli: bdg inputs are preprocessed and certificates stay consistent") {
    // a bidirected graph with a loop and a 2-cycle
    const std::string bdg = temp_file(
        "loopy.bdg", "bdg 2 3\ne 1 + 1 +\ne 1 - 2 +\ne 2 - 1 +\n");
    const std::string cert = "/tmp/skewac_test_bdgcert.json";
    CliResult res = run_cli("check " + bdg + " --certificate " + cert);
    if (res.exit_code == 1) {
        CliResult ver = run_cli("verify " + cert + " " + bdg);
        CHECK(ver.exit_code == 0);
    } else {
        CHECK(res.exit_code == 0);
    }
}

TEST_CASE("cli: gen emits parseable deterministic instances") {
    CliResult a = run_cli("gen --kind weakly-acyclic-composed --pairs 40 --arcs 90 --seed 9");
    CliResult b = run_cli("gen --kind weakly-acyclic-composed --pairs 40 --arcs 90 --seed 9");
    CHECK(a.out == b.out);
    const std::string path = temp_file("gen.ssg", a.out);
    CHECK(run_cli("check " + path).exit_code == 0);

    CliResult r = run_cli("gen --kind random-bidirected --pairs 6 --arcs 9 --seed 4 --format bdg");
    const std::string bpath = temp_file("gen.bdg", r.out);
    std::istringstream in(r.out);
    CHECK_NOTHROW(io::read_bdg(in, "gen.bdg"));

    for (const std::string kind : {"strongly-acyclic", "strongly-connected"}) {
        CliResult k = run_cli("gen --kind " + kind + " --pairs 12 --arcs 18 --seed 3");
        const std::string kp = temp_file("gen_" + kind + ".ssg", k.out);
        CHECK(run_cli("check " + kp).exit_code == 0);
        CHECK(run_cli("decompose-strong " + kp).exit_code == 0);
    }
    CHECK(run_cli("gen --kind nonsense").exit_code == 2);
}

TEST_CASE("cli: convert round trips through both formats") {
    const std::string f1 = temp_file("f1.ssg", kF1);
    CliResult to_bdg = run_cli("convert " + f1 + " --to bdg");
    const std::string bpath = temp_file("conv.bdg", to_bdg.out);
    CliResult back = run_cli("convert " + bpath + " --to ssg");
    CHECK(back.out == kF1);
}
