// End-to-end command-line tests through run_cli: byte-exact JSON output,
// text output, exit codes for every error class, --out redirection and
// determinism across reruns.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <quiddity/cli.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = quiddity::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST(CliCheck, JsonVerdicts) {
    auto r = run({"check", "(1,1,1)", "--ring", "z"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"quiddity\":true,\"sign\":\"minus\"}\n");
    EXPECT_EQ(r.err, "");

    EXPECT_EQ(run({"check", "(0,0)", "--ring", "z"}).out,
              "{\"quiddity\":true,\"sign\":\"minus\"}\n");
    EXPECT_EQ(run({"check", "([0,1],[0],[0,-1],[0])", "--ring", "zx"}).out,
              "{\"quiddity\":true,\"sign\":\"plus\"}\n");

    // a false verdict is still a successful evaluation
    auto none = run({"check", "(1,2,3)", "--ring", "z"});
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(none.out, "{\"quiddity\":false}\n");
}

TEST(CliCheck, ResidueRingTwoIsAmbiguous) {
    auto r = run({"check", "(1,1,1)", "--ring", "zmod:2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"quiddity\":true,\"sign\":\"plus\",\"ambiguous\":true}\n");
}

TEST(CliCheck, RealRingUsesTheTolerance) {
    EXPECT_EQ(run({"check", "(0,0.001)", "--ring", "real", "--tol", "0.01"}).out,
              "{\"quiddity\":true,\"sign\":\"minus\"}\n");
    EXPECT_EQ(run({"check", "(0,0.001)", "--ring", "real"}).out, "{\"quiddity\":false}\n");
}

TEST(CliSumCanonEquiv, PinnedJson) {
    EXPECT_EQ(run({"sum", "(1,1,1)", "(1,1,1)", "--ring", "z"}).out,
              "{\"result\":\"(2,1,2,1)\"}\n");
    EXPECT_EQ(run({"canon", "(2,1,2,1)", "--ring", "z"}).out,
              "{\"canonical\":\"(1,2,1,2)\"}\n");
    EXPECT_EQ(run({"equiv", "(1,2,1,2)", "(2,1,2,1)", "--ring", "z"}).out,
              "{\"equivalent\":true}\n");
    EXPECT_EQ(run({"equiv", "(1,1,1)", "(-1,-1,-1)", "--ring", "z"}).out,
              "{\"equivalent\":false}\n");
}

TEST(CliContinuantMatrix, PinnedJsonAcrossRings) {
    EXPECT_EQ(run({"continuant", "(1,1,1)", "--ring", "z"}).out, "{\"continuant\":\"-1\"}\n");
    EXPECT_EQ(run({"continuant", "(0+2i,3)", "--ring", "z2i"}).out,
              "{\"continuant\":\"-1+6i\"}\n");
    EXPECT_EQ(run({"matrix", "(0,0)", "--ring", "z"}).out,
              "{\"m11\":\"-1\",\"m12\":\"0\",\"m21\":\"0\",\"m22\":\"-1\"}\n");
    EXPECT_EQ(run({"matrix", "([0,1],[0])", "--ring", "zx"}).out,
              "{\"m11\":\"[-1]\",\"m12\":\"[0]\",\"m21\":\"[0,1]\",\"m22\":\"[-1]\"}\n");
}

TEST(CliDecompose, WitnessAndIrreducibles) {
    auto r = run({"decompose", "(1,2,1,2)", "--ring", "z"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "{\"reducible\":true,\"transform\":{\"rotation\":0,\"reversed\":true},"
              "\"left\":\"(1,1,1)\",\"right\":\"(1,1,1)\"}\n");

    EXPECT_EQ(run({"decompose", "(1,1,1)", "--ring", "z"}).out, "{\"reducible\":false}\n");
    EXPECT_EQ(run({"irreducible", "(0,2,0,-2)", "--ring", "z"}).out,
              "{\"irreducible\":true}\n");
    EXPECT_EQ(run({"irreducible", "(1,2,1,2)", "--ring", "z"}).out,
              "{\"irreducible\":false}\n");
}

TEST(CliEnumerate, PinnedRecordsAndSummary) {
    auto r = run({"enumerate", "--ring", "z", "--min-size", "4", "--max-size", "4",
                  "--coeff", "3"});
    EXPECT_EQ(r.code, 0);
    auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 18u);  // 17 quiddities plus the summary
    EXPECT_EQ(lines.front(),
              "{\"n\":4,\"tuple\":\"(-3,0,3,0)\",\"sign\":\"plus\",\"irreducible\":true,"
              "\"canonical\":\"(-3,0,3,0)\"}");
    EXPECT_EQ(lines[11],
              "{\"n\":4,\"tuple\":\"(0,3,0,-3)\",\"sign\":\"plus\",\"irreducible\":true,"
              "\"canonical\":\"(-3,0,3,0)\"}");
    EXPECT_EQ(lines.back(),
              "{\"summary\":{\"count\":17,\"irreducible\":9,\"count_by_size\":{\"4\":17},"
              "\"irreducible_by_size\":{\"4\":9}}}");

    // reruns are byte-identical
    auto again = run({"enumerate", "--ring", "z", "--min-size", "4", "--max-size", "4",
                      "--coeff", "3"});
    EXPECT_EQ(again.out, r.out);
}

TEST(CliVerify, CosSuitePinned) {
    auto r = run({"verify", "cos"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"verdict\":\"pass\",\"suite\":\"cos\",\"counts\":{\"cases\":11,"
                     "\"checks\":11}}\n");
}

TEST(CliVerify, SuitesReportPass) {
    auto small = run({"verify", "small-sizes"});
    EXPECT_EQ(small.code, 0);
    auto j = nlohmann::json::parse(small.out);
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["suite"], "small-sizes");
    EXPECT_EQ(j["counts"]["z:quiddities"], 20);
    EXPECT_EQ(j["counts"]["zx:quiddities"], 104);

    auto props = run({"verify", "properties"});
    EXPECT_EQ(props.code, 0);
    EXPECT_EQ(nlohmann::json::parse(props.out)["verdict"], "pass");

    // explicit bounds override the suite defaults
    auto z2i = run({"verify", "z2i", "--coeff", "1", "--max-size", "4"});
    EXPECT_EQ(z2i.code, 0);
    auto zj = nlohmann::json::parse(z2i.out);
    EXPECT_EQ(zj["verdict"], "pass");
    EXPECT_EQ(zj["counts"]["irreducible"], 15);  // 2 triples + 13 zero-family members
}

TEST(CliCos, PinnedJson) {
    auto r = run({"cos", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "{\"n\":4,\"u\":\"1.4142135623730951\",\"tuple\":\"(1.4142135623730951,"
              "1.4142135623730951,1.4142135623730951,1.4142135623730951)\","
              "\"quiddity\":true,\"sign\":\"minus\"}\n");
}

TEST(CliText, PlainTextFormat) {
    EXPECT_EQ(run({"check", "(1,1,1)", "--ring", "z", "--format", "text"}).out,
              "quiddity: yes\nsign: minus\n");
    EXPECT_EQ(run({"check", "(1,1,1)", "--ring", "zmod:2", "--format", "text"}).out,
              "quiddity: yes\nsign: plus\nambiguous: yes\n");
    EXPECT_EQ(run({"decompose", "(1,2,1,2)", "--ring", "z", "--format", "text"}).out,
              "reducible: yes\nrotation: 0\nreversed: yes\nleft: (1,1,1)\nright: (1,1,1)\n");
    EXPECT_EQ(run({"verify", "cos", "--format", "text"}).out,
              "verdict: pass\nsuite: cos\ncases: 11\nchecks: 11\n");
    auto enumerated = run({"enumerate", "--ring", "z", "--max-size", "3", "--coeff", "1",
                           "--format", "text"});
    EXPECT_EQ(enumerated.out,
              "n=2 (0,0) sign=minus irreducible=no canonical=(0,0)\n"
              "n=3 (-1,-1,-1) sign=plus irreducible=yes canonical=(-1,-1,-1)\n"
              "n=3 (1,1,1) sign=minus irreducible=yes canonical=(1,1,1)\n"
              "count: 3\nirreducible: 2\nsize 2: count=1 irreducible=0\n"
              "size 3: count=2 irreducible=2\n");
}

TEST(CliErrors, ParseErrorsCarryThePosition) {
    auto r = run({"check", "(1,a)", "--ring", "z"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "");
    auto j = nlohmann::json::parse(r.err);
    EXPECT_TRUE(j.contains("error"));
    EXPECT_EQ(j["position"], 3);
}

TEST(CliErrors, UsageAndDomainErrorsExitTwo) {
    EXPECT_EQ(run({"check", "(1,1)", "--ring", "q"}).code, 2);       // unknown ring
    EXPECT_EQ(run({"check", "(1,1,1)"}).code, 2);                    // missing --ring
    EXPECT_EQ(run({"verify", "nope"}).code, 2);                      // unknown suite
    EXPECT_EQ(run({}).code, 2);                                      // no subcommand
    EXPECT_EQ(run({"sum", "(1)", "(1,2)", "--ring", "z"}).code, 2);  // operand too short
    EXPECT_EQ(run({"decompose", "(1.5,1.5)", "--ring", "real"}).code, 2);
    EXPECT_EQ(run({"decompose", "(1,1,2)", "--ring", "z"}).code, 2);  // not a quiddity
    EXPECT_NE(run({"check", "(1,1,1)"}).err, "");
}

TEST(CliErrors, CeilingExitsThreeWithTheEstimate) {
    auto r = run({"enumerate", "--ring", "z", "--coeff", "5", "--max-size", "30"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(r.out, "");
    auto j = nlohmann::json::parse(r.err);
    EXPECT_TRUE(j.contains("error"));
    EXPECT_GT(j["estimate"].get<double>(), 1e8);

    // a raised ceiling admits the same box
    auto small = run({"enumerate", "--ring", "z", "--coeff", "1", "--max-size", "2",
                      "--ceiling", "5"});
    EXPECT_EQ(small.code, 3);
    auto ok = run({"enumerate", "--ring", "z", "--coeff", "1", "--max-size", "2",
                   "--ceiling", "10"});
    EXPECT_EQ(ok.code, 0);
}

TEST(CliOut, WritesTheFileInsteadOfStdout) {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "quiddity-cli-out-test.json";
    auto direct = run({"canon", "(2,1,2,1)", "--ring", "z"});
    auto filed = run({"canon", "(2,1,2,1)", "--ring", "z", "--out", path.string()});
    EXPECT_EQ(filed.code, 0);
    EXPECT_EQ(filed.out, "");
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), direct.out);
    fs::remove(path);

    auto bad = run({"canon", "(2,1,2,1)", "--ring", "z", "--out", "/nonexistent-dir/x.json"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("cannot open"), std::string::npos);
}

TEST(CliHelp, ExitsZero) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(CliRoundTrip, CanonOutputFeedsBackIn) {
    auto canon = run({"canon", "(2,1,2,1)", "--ring", "z"});
    std::string tuple = nlohmann::json::parse(canon.out)["canonical"];
    auto check = run({"check", tuple, "--ring", "z"});
    EXPECT_EQ(check.out, "{\"quiddity\":true,\"sign\":\"minus\"}\n");
}
