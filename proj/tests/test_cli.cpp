#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <hecke/cli.hpp>

using namespace hecke;

namespace
{

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, OmegaItemFive)
{
    const auto r = run({"omega", "--lambda", "2,1,0", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]\n");
}

TEST(Cli, OmegaTrivial)
{
    const auto r = run({"omega", "--lambda", "0,0,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, LambdaOrderIsIrrelevant)
{
    EXPECT_EQ(run({"omega", "--lambda", "0,1,2"}).out, run({"omega", "--lambda", "2,1,0"}).out);
    EXPECT_EQ(run({"omega", "--lambda", "1,0,1"}).out, run({"omega", "--lambda", "1,1,0"}).out);
}

TEST(Cli, OmegaAtPrimeAndOracle)
{
    const auto closed = run({"omega", "--lambda", "1,1,0", "--prime", "3"});
    const auto oracle = run({"omega", "--lambda", "1,1,0", "--prime", "3", "--oracle"});
    EXPECT_EQ(closed.code, 0);
    EXPECT_EQ(oracle.code, 0);
    EXPECT_EQ(closed.out, "1/27 * sym[1,1,0]\n");
    EXPECT_EQ(oracle.out, closed.out);
}

TEST(Cli, OmegaLatex)
{
    const auto r = run({"omega", "--lambda", "1,1,0", "--format", "latex"});
    EXPECT_EQ(r.out, "\\frac{1}{p^{3}}\\,\\mathit{sym}_{1,1,0}\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"omega"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "1,0,0", "--bogus"}).code, 2);
    EXPECT_EQ(run({"table", "--verbose"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "1,0,0", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "1,0,0", "--oracle"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "1,0,0", "--prime", "4"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "1,-1,0"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "1,1,1,1"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "a,b"}).code, 2);
    EXPECT_EQ(run({"omega", "--lambda", "30,0,0", "--prime", "5", "--oracle"}).code, 2);
    EXPECT_EQ(run({"series", "--genus", "4"}).code, 2);
    EXPECT_EQ(run({"numerator", "--genus", "0"}).code, 2);
    const auto r = run({"omega", "--lambda", "1,0,0", "--bogus"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Help)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify-all"), std::string::npos);
}

TEST(Cli, Table)
{
    const auto r = run({"table"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 28);
    EXPECT_NE(r.out.find("5. omega(t(1,p^1,p^2)) = (2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]"),
              std::string::npos);
    const auto j = Json::parse(run({"table", "--format", "json"}).out);
    ASSERT_EQ(j.size(), 28U);
    EXPECT_EQ(xpoly_from_json(j[4]["value"]), omega_hl({2, 1, 0}, 3));
}

TEST(Cli, Images)
{
    const auto r = run({"images"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Omega(T(p)) = x0 * (1 + sym[1,0,0] + sym[1,1,0] + sym[1,1,1])"), std::string::npos);
    EXPECT_NE(r.out.find("Omega([p]_3) = x0^2 * (1/p^6 * sym[1,1,1])"), std::string::npos);
    EXPECT_NE(r.out.find("sm(1,3) = p^3-1"), std::string::npos);
    const auto j = Json::parse(run({"images", "--format", "json"}).out);
    EXPECT_EQ(xpoly_from_json(j["T1(p^2)"]), sp_image_Ti(1, 3));
    EXPECT_EQ(laurent_from_json(j["sm(1,3)"]), sm(1, 3));
}

TEST(Cli, SeriesAndNumerator)
{
    const auto s = run({"series", "--genus", "1", "--order", "2"});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out, "v^0: 1\nv^1: x0 * (1 + sym[1])\nv^2: x0^2 * (1 + sym[1] + sym[2])\n");
    const auto n2 = run({"numerator", "--genus", "2"});
    EXPECT_EQ(n2.out, "v^0: 1\nv^2: x0^2 * (-1/p * sym[1,1])\n");
    const auto j = Json::parse(run({"numerator", "--genus", "3", "--format", "json"}).out);
    EXPECT_EQ(vseries_from_json(j["numerator"]), p_numerator(3));
    const auto js = Json::parse(run({"series", "--genus", "3", "--order", "3", "--format", "json"}).out);
    EXPECT_EQ(vseries_from_json(js["series"]), r_series(3, 3));
}

TEST(Cli, Presentations)
{
    const auto t1 = run({"theorem1"});
    EXPECT_EQ(t1.code, 0);
    EXPECT_NE(t1.out.find("v^6: p^15 * [p]_3^3"), std::string::npos);
    EXPECT_NE(t1.out.find("v^3: (p^5+p^4) * T(p)*[p]_3"), std::string::npos);
    EXPECT_NE(t1.out.find("spherical images equal P_3 coefficients: yes"), std::string::npos);
    const auto t2 = run({"theorem2"});
    EXPECT_EQ(t2.code, 0);
    EXPECT_NE(t2.out.find("t_1 = -T(p)"), std::string::npos);
    EXPECT_NE(t2.out.find("t_8 = p^24 * [p]_3^4"), std::string::npos);
    EXPECT_NE(t2.out.find("functional equation t_{8-i} = (p^6 [p]_3)^{4-i} t_i: yes"), std::string::npos);
    const auto j = Json::parse(run({"theorem2", "--format", "json"}).out);
    const QCoefficients q = qcoefficients_from_json(j["t"]);
    const QCoefficients direct = q3_in_generators();
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_EQ(q.t[i], direct.t[i]);
    }
    const auto j1 = Json::parse(run({"theorem1", "--format", "json"}).out);
    const auto u = p3_in_generators();
    ASSERT_EQ(j1["coefficients"].size(), u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        EXPECT_EQ(hecke_from_json(j1["coefficients"][i]), u[i]);
    }
}

TEST(Cli, Special)
{
    const auto r = run({"special"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("v^6: p^15"), std::string::npos);
    EXPECT_NE(r.out.find("(1 - p v)"), std::string::npos);
    EXPECT_NE(r.out.find("(1 + (p^4+p^3+p^2+p) v + p^5 v^2)"), std::string::npos);
    EXPECT_NE(r.out.find("product of factors equals nu(P_3): yes"), std::string::npos);
}

TEST(Cli, VerifyAll)
{
    const auto r = run({"verify-all"});
    EXPECT_EQ(r.code, 0);
    for (int id = 1; id <= 10; ++id) {
        EXPECT_NE(r.out.find("PASS  AC" + std::to_string(id) + " "), std::string::npos) << id;
    }
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Deterministic)
{
    for (const std::vector<std::string> &args : std::vector<std::vector<std::string>>{
             {"table"}, {"images", "--format", "json"}, {"theorem2"}, {"numerator", "--genus", "3"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}

TEST(Cli, OutFile)
{
    const auto path = std::filesystem::temp_directory_path() / "hecke_cli_out_test.txt";
    std::filesystem::remove(path);
    const auto r = run({"omega", "--lambda", "2,1,0", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), "(2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]\n");
    std::filesystem::remove(path);
    EXPECT_EQ(run({"table", "--out", "/nonexistent-dir/x.txt"}).code, 2);
}

#ifdef HECKE_CLI_PATH
TEST(Cli, BinaryExitCodes)
{
    auto status = [](const std::string &args) {
        const std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("omega --lambda 2,1,0"), 0);
    EXPECT_EQ(status("omega --lambda 2,1,0 --nope"), 2);
    std::array<char, 256> buf{};
    FILE *pipe = popen((std::string(HECKE_CLI_PATH) + " omega --lambda 2,1,0 --format text").c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
        out += buf.data();
    }
    pclose(pipe);
    EXPECT_EQ(out, "(2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]\n");
}
#endif
