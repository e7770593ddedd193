#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(FPO_DATA_DIR) + "/.cli_out.tmp";
    std::string cmd = std::string(FPO_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream os;
    os << in.rdbuf();
    std::remove(out_path.c_str());
    int code = -1;
#ifdef WIFEXITED
    if (WIFEXITED(rc)) code = WEXITSTATUS(rc);
#else
    code = rc;
#endif
    return {code, os.str()};
}

std::string data(const std::string& name) { return std::string(FPO_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("order command") {
    RunResult k3 = run_cli("order " + data("k3.txt") + " --preset chordal");
    CHECK(k3.exit_code == 0);
    CHECK(k3.output == "ORDER: 0 1 2\n");

    RunResult c4 = run_cli("order " + data("c4.txt") + " --preset chordal");
    CHECK(c4.exit_code == 1);
    CHECK(c4.output.rfind("NO\nCERT circuit:", 0) == 0);

    RunResult iso = run_cli("order " + data("iso3.txt") + " --pattern empty");
    CHECK(iso.exit_code == 1);
    CHECK(iso.output == "NO\nCERT invariant-pattern: empty on {0,1,2}\n");

    // Determinism: identical bytes across runs.
    RunResult again = run_cli("order " + data("c4.txt") + " --preset chordal");
    CHECK(again.output == c4.output);
}

TEST_CASE("border and recognize commands") {
    RunResult p5 = run_cli("border " + data("p5b.txt") + " --preset bipartite-permutation");
    CHECK(p5.exit_code == 0);
    CHECK(p5.output.rfind("ORDER-U:", 0) == 0);
    CHECK(p5.output.find("ORDER-V:") != std::string::npos);

    RunResult c6 = run_cli("border " + data("c6b.txt") + " --preset co-circular-arc-bigraph");
    CHECK(c6.exit_code == 1);
    CHECK(c6.output.rfind("NO\nCERT circuit:", 0) == 0);

    RunResult rec = run_cli("recognize " + data("c4.txt") + " --class chordal");
    CHECK(rec.exit_code == 1);
    CHECK(rec.output == data("c4.txt") + " is not chordal\n");
    RunResult rec2 = run_cli("recognize " + data("k22.txt") + " --class co-circular-arc-bigraph");
    CHECK(rec2.exit_code == 0);
    CHECK(rec2.output == data("k22.txt") + " is co-circular-arc-bigraph\n");
}

TEST_CASE("oracle command and engine agreement") {
    RunResult o1 = run_cli("oracle " + data("c4.txt") + " --pattern \"13;13,23\"");
    CHECK(o1.exit_code == 1);
    CHECK(o1.output == "NO (exhaustive)\n");

    RunResult o2 = run_cli("oracle " + data("k3.txt") + " --preset chordal");
    CHECK(o2.exit_code == 0);
    CHECK(o2.output.rfind("YES (exhaustive)\nORDER:", 0) == 0);

    for (const char* file : {"c4.txt", "k3.txt", "iso3.txt"}) {
        for (const char* spec : {"--preset chordal", "--preset interval", "--pattern 13"}) {
            RunResult fast = run_cli("order " + data(file) + " " + spec);
            RunResult slow = run_cli("oracle " + data(file) + " " + spec);
            CHECK(fast.exit_code == slow.exit_code);
        }
    }
}

TEST_CASE("certify command closes the loop") {
    std::string cert_path = data(".cert.tmp");
    RunResult c4 = run_cli("order " + data("c4.txt") + " --preset chordal");
    REQUIRE(c4.exit_code == 1);
    std::ofstream(cert_path) << c4.output;
    RunResult ok = run_cli("certify " + data("c4.txt") + " --preset chordal --cert " + cert_path);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "CERTIFICATE VALID\n");
    // The same certificate does not verify against a different graph.
    RunResult bad = run_cli("certify " + data("k3.txt") + " --preset chordal --cert " + cert_path);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output == "CERTIFICATE INVALID\n");
    std::remove(cert_path.c_str());

    RunResult bc6 = run_cli("border " + data("c6b.txt") + " --preset co-circular-arc-bigraph");
    REQUIRE(bc6.exit_code == 1);
    std::ofstream(cert_path) << bc6.output;
    RunResult bok = run_cli("certify " + data("c6b.txt") +
                            " --preset co-circular-arc-bigraph --cert " + cert_path);
    CHECK(bok.exit_code == 0);
    std::remove(cert_path.c_str());

    RunResult iso = run_cli("order " + data("iso3.txt") + " --pattern empty");
    REQUIRE(iso.exit_code == 1);
    std::ofstream(cert_path) << iso.output;
    RunResult iok = run_cli("certify " + data("iso3.txt") + " --pattern empty --cert " + cert_path);
    CHECK(iok.exit_code == 0);
    // An invariant certificate for a pattern outside the checked set fails.
    RunResult inot = run_cli("certify " + data("iso3.txt") + " --pattern triangle --cert " +
                             cert_path);
    CHECK(inot.exit_code == 1);
    std::remove(cert_path.c_str());
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run_cli("order " + data("k3.txt")).exit_code == 2);  // no pattern source
    CHECK(run_cli("order " + data("k3.txt") + " --preset chordal --pattern 13").exit_code == 2);
    CHECK(run_cli("order " + data("missing.txt") + " --preset chordal").exit_code == 2);
    CHECK(run_cli("order " + data("bad.txt") + " --preset chordal").exit_code == 2);  // self-loop
    CHECK(run_cli("order " + data("k3.txt") + " --pattern 14").exit_code == 2);
    CHECK(run_cli("order " + data("k3.txt") + " --preset nope").exit_code == 2);
    CHECK(run_cli("recognize " + data("k3.txt") + " --class nope").exit_code == 2);
    CHECK(run_cli("border " + data("k3.txt") + " --preset chordal").exit_code == 2);  // kind clash
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
