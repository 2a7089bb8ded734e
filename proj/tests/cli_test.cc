#include "gscforge/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gscforge/overhead.h"

using namespace gscforge;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gsc-forge");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

TEST(Cli, HelpAndUsageErrors) {
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
    EXPECT_EQ(run({"ler", "run", "--kind", "y"}).code, kExitUsage);
    EXPECT_EQ(run({"codes", "gsc", "--a", "2", "--b", "3"}).code, kExitUsage);
}

TEST(Cli, UnknownCodeListsRegistry) {
    auto r = run({"codes", "verify", "--code", "no_such_code"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(contains(r.err, "no_such_code"));
    EXPECT_TRUE(contains(r.err, "steane"));
    EXPECT_TRUE(contains(r.err, "five_qubit"));
}

TEST(Cli, CodesListAndVerify) {
    auto list = run({"codes", "list"});
    EXPECT_EQ(list.code, kExitOk);
    EXPECT_EQ(list.out.rfind("# gsc-forge v1\n", 0), 0u);
    EXPECT_TRUE(contains(list.out, "steane 7 1 3"));
    EXPECT_TRUE(contains(list.out, "five_qubit 5 1 3"));

    auto verify = run({"codes", "verify", "--code", "steane"});
    EXPECT_EQ(verify.code, kExitOk);
    EXPECT_TRUE(contains(verify.out, "distance: 3"));

    EXPECT_EQ(run({"codes", "verify", "--code", "dodecacode", "--budget", "10"}).code, kExitValidation);
}

TEST(Cli, GscEmitMatchesReferenceTable) {
    auto r = run({"codes", "gsc", "--a", "3", "--b", "4", "--emit"});
    ASSERT_EQ(r.code, kExitOk);
    const char *expected[] = {
        "g1 ZZIIIIIIIIII",  "g2 IZZIIIIIIIII",  "g3 IIZZIIIIIIII", "g4 IIIIZZIIIIII",
        "g5 IIIIIZZIIIII",  "g6 IIIIIIZZIIII",  "g7 IIIIIIIIZZII", "g8 IIIIIIIIIZZI",
        "g9 IIIIIIIIIIZZ",  "g10 XXXXXXXXIIII", "g11 IIIIXXXXXXXX", "X_L ZIIIZIIIZIII",
        "Z_L XXXXIIIIIIII",
    };
    std::size_t pos = 0;
    for (const char *line : expected) {
        auto at = r.out.find(std::string(line) + "\n", pos);
        ASSERT_NE(at, std::string::npos) << line;
        pos = at;
    }
    auto json = run({"codes", "gsc", "--a", "3", "--b", "3", "--json"});
    EXPECT_EQ(json.code, kExitOk);
    EXPECT_TRUE(nlohmann::json::parse(json.out).is_object());
}

TEST(Cli, LerRunIsDeterministicAcrossThreadCounts) {
    const std::vector<std::string> args{"ler",  "run",    "--c1",  "five_qubit", "--gsc", "3",      "5",
                                        "--p",  "0.01",   "0.02",  "--shots",    "3000",  "--seed", "11"};
    setenv("GSC_THREADS", "1", 1);
    auto one = run(args);
    setenv("GSC_THREADS", "3", 1);
    auto three = run(args);
    unsetenv("GSC_THREADS");
    ASSERT_EQ(one.code, kExitOk);
    EXPECT_EQ(one.out, three.out);
    EXPECT_TRUE(one.err.empty());
    EXPECT_TRUE(contains(one.out, "# seed: 11"));
    EXPECT_TRUE(contains(one.out, "step,p,shots,failures,ler"));
}

TEST(Cli, MissingSeedIsReported) {
    auto r = run({"dj", "--oracle", "balanced_parity", "--shots", "10"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.err.rfind("seed ", 0), 0u);
}

TEST(Cli, DeutschJozsaVerdicts) {
    auto r = run({"dj", "--shots", "50", "--seed", "3"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "constant0 50 0 0 0 constant"));
    EXPECT_TRUE(contains(r.out, "constant1 50 0 0 0 constant"));
    EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(Cli, OverheadJsonMatchesLibrary) {
    auto r = run({"overhead", "report", "--c1", "steane", "--rc", "reed_muller", "--gsc", "3", "3", "--json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "gsc-forge/overhead/v1");
    auto p = overhead_params(registry_code("steane"), registry_code("reed_muller"), GscParams{3, 3}, 3);
    EXPECT_EQ(j["n2"]["controlled_flip_gsch"], n2_controlled_flip(p));
    EXPECT_EQ(j["n2"]["gsc"], 72);

    auto text = run({"overhead", "report"});
    EXPECT_EQ(text.code, kExitOk);
    EXPECT_TRUE(contains(text.out, "N2 GSC: 72"));
}

TEST(Cli, ProtocolBuildAndDecodeTable) {
    auto build = run({"protocol", "build", "--gate", "flip-gsch", "--c1", "steane", "--gsc", "3", "3"});
    ASSERT_EQ(build.code, kExitOk);
    EXPECT_TRUE(contains(build.out, "# qubits: 16"));
    EXPECT_TRUE(contains(build.out, "# qec_rounds: 3"));

    auto table = run({"decode", "table", "--c1", "five_qubit", "--gsc", "3", "3", "--step", "1"});
    ASSERT_EQ(table.code, kExitOk);
    EXPECT_TRUE(contains(table.out, "# step: 1"));
    EXPECT_EQ(run({"decode", "table", "--gsc", "3", "3", "--step", "3"}).code, kExitUsage);
}

TEST(Cli, VerifyBlueprintAndGates) {
    auto bp = run({"verify", "blueprint", "--kind", "flip", "--c1", "steane", "--c2", "five_qubit", "--seed", "2",
                   "--inputs", "2"});
    EXPECT_EQ(bp.code, kExitOk);
    EXPECT_TRUE(contains(bp.out, "blueprint-cx"));
    EXPECT_TRUE(contains(bp.out, "PASS"));

    auto gates = run({"verify", "gates", "--c1", "four_qubit", "--gsc", "3", "3", "--seed", "1", "--inputs", "1"});
    EXPECT_EQ(gates.code, kExitOk) << gates.out;
    EXPECT_FALSE(contains(gates.out, "FAIL"));
}

TEST(Cli, OutFileIsWritten) {
    const std::string path = testing::TempDir() + "cli_test_circuit.txt";
    auto r = run({"protocol", "build", "--gate", "hadamard", "--c1", "steane", "--gsc", "3", "3", "--out", path});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"protocol", "build", "--out", "/nonexistent/dir/x.txt"}).code, kExitUsage);
}

}  // namespace
