// Runs the ctildec binary as a subprocess.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun ctildec(const std::string& args, const std::string& input = "") {
    std::string cmd = std::string(CTILDEC_PATH) + " " + args + " 2>/dev/null";
    if (!input.empty()) {
        const std::string path = ::testing::TempDir() + "ctildec_input.json";
        std::ofstream(path) << input;
        cmd += " < " + path;
    } else {
        cmd += " < /dev/null";
    }
    CliRun r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Cli, Reduce) {
    const CliRun r = ctildec("reduce --rank 3 \"s1 t s1 t t\"");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r.out), parse(R"({"word":"s1 t s1","length":3})"));
}

TEST(Cli, ClassifyExample) {
    const CliRun r = ctildec("classify --rank 3 \"s1 u s1\"");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r.out);
    EXPECT_EQ(j["class"], "affine1");
    EXPECT_EQ(j["i"], 1);
    EXPECT_EQ(j["v"], parse("[[1,1]]"));
    EXPECT_EQ(j["affine_length"], 1);
    EXPECT_EQ(j["partition"], "W1");
}

TEST(Cli, ClassifyThenRealizeRoundTrip) {
    const CliRun c = ctildec("classify --rank 4 \"u s2 s1 t u\"");
    ASSERT_EQ(c.code, 0);
    const CliRun r = ctildec("realize --rank 4", c.out);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r.out)["word"], parse(c.out)["word"]);
}

TEST(Cli, EnumerateIdentityOnly) {
    const CliRun r = ctildec("enumerate --rank 3 --max-len 0 --fc-only");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r.out), parse(R"({"word":"","length":0,"affine_length":0})"));
}

TEST(Cli, EnumerateSeries) {
    const CliRun r = ctildec("enumerate --rank 3 --max-len 6 --series");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r.out)["series"], parse("[1,3,5,8,11,13,16]"));
    const CliRun f = ctildec("enumerate --rank 3 --max-len 12 --fc-only --series");
    EXPECT_EQ(parse(f.out)["total"], 101);
}

TEST(Cli, Inject) {
    const CliRun p = ctildec("inject --map p --rank 3 u");
    ASSERT_EQ(p.code, 0);
    EXPECT_EQ(parse(p.out)["word"], "s2 u s2");
    const CliRun j = ctildec("inject --map J --rank 4 \"u s2 u\"");
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(parse(j.out)["word"], "u s3 s2 u s3");
    EXPECT_EQ(parse(j.out)["classification"]["class"], "second");
    const CliRun a = ctildec("inject --map i --rank 3 \"t s1 u\"");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(parse(a.out)["family"], "atilde");
}

TEST(Cli, HeckeMulAndEmbed) {
    const std::string pair = R"({"a":[{"word":"t","coeff":[[0,1,1]]}],"b":[{"word":"t","coeff":[[0,1,1]]}]})";
    const CliRun m = ctildec("hecke mul --rank 3", pair);
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(parse(m.out), parse(R"([{"word":"","coeff":[[1,1,1]]},{"word":"t","coeff":[[0,-1,1],[1,1,1]]}])"));
    const CliRun e = ctildec("hecke embed --rank 3", R"([{"word":"u","coeff":[[0,1,1]]}])");
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(parse(e.out), parse(R"([{"word":"s2 u","coeff":[[-1,1,1],[0,-1,1]]},{"word":"s2 u s2","coeff":[[-1,1,1]]}])"));
}

TEST(Cli, HeckeDecompose) {
    const CliRun r = ctildec("hecke decompose --rank 3 u");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r.out)["a_exp"], -1);
}

TEST(Cli, TlMulEmbedRank) {
    const CliRun m = ctildec("tl mul --rank 3",
                          R"({"a":[{"word":"u","coeff":[[0,1,1]]}],"b":[{"word":"s1 u s1","coeff":[[0,1,1]]}]})");
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(parse(m.out).size(), 7u);
    const CliRun e = ctildec("tl embed --rank 3", R"([{"word":"u","coeff":[[0,1,1]]}])");
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(parse(e.out)[1]["affine_length"], 1);
    const CliRun k = ctildec("tl rank --rank 3", R"([[{"word":"t","coeff":[[0,1,1]]}],[{"word":"t","coeff":[[1,2,1]]}]])");
    ASSERT_EQ(k.code, 0);
    EXPECT_EQ(parse(k.out)["rank"], 1);
}

TEST(Cli, VerifyFcSuite) {
    const CliRun r = ctildec("verify --suite fc --rank 3 --max-len 12");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r.out)["pass"], true);
}

TEST(Cli, VerifyIsDeterministic) {
    const CliRun a = ctildec("verify --suite towers --rank 3 --max-len 6");
    const CliRun b = ctildec("verify --suite towers --rank 3 --max-len 6");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(ctildec("classify --rank 3 \"t s1 t s1\"").code, 2);
    EXPECT_EQ(ctildec("reduce --rank 3 \"s9\"").code, 2);
    EXPECT_EQ(ctildec("reduce --rank 2 t").code, 2);
    EXPECT_EQ(ctildec("frobnicate").code, 2);
    EXPECT_EQ(ctildec("hecke mul --rank 3", "not json").code, 2);
    EXPECT_EQ(ctildec("tl embed --rank 3", R"([{"word":"t s1 t s1","coeff":[[0,1,1]]}])").code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
    EXPECT_EQ(ctildec("enumerate --rank 4 --max-len 12").code, 0);
    EXPECT_EQ(::setenv("CTILDE_MAX_ELEMENTS", "10", 1), 0);
    const int code = ctildec("enumerate --rank 4 --max-len 12").code;
    ::unsetenv("CTILDE_MAX_ELEMENTS");
    EXPECT_EQ(code, 3);
}
