#include "structcon/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::string& args) {
    std::string cmd = std::string(STRUCTCON_CLI) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ExpandKeyJson) {
    CliResult r = cli("expand --basis key --index 0,2,1 --nvars 3 --format json");
    ASSERT_EQ(r.code, 0);
    auto j = structcon::Json::parse(r.out);
    EXPECT_EQ(j.at("terms").size(), 5u);
    EXPECT_EQ(j.dump() + "\n", r.out);
}

TEST(Cli, MobiusThreeChain) {
    CliResult r = cli("mobius --poset dominance-partitions --x 3 --y 1,1,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, PermAndCodeAgree) {
    CliResult a = cli("expand --basis grothendieck --perm 2143 --format csv");
    CliResult b = cli("expand --basis grothendieck --code 1,0,1,0 --format csv");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("\"2,1,1,0\",1/1"), std::string::npos);
}

TEST(Cli, PlethysmSchur) {
    CliResult r = cli("plethysm --f s --flambda 2,1 --g h --gmu 2 --nvars 6 --out schur --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "index,coeff\n\"5,1\",1/1\n\"4,2\",1/1\n\"3,2,1\",1/1\n");
}

TEST(Cli, MultJobsInvariant) {
    CliResult a = cli("mult --basis lascoux --a 0,1,1 --b 1,0,1 --format json --jobs 1");
    CliResult b = cli("mult --basis lascoux --a 0,1,1 --b 1,0,1 --format json --jobs 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    CliResult o = cli("mult --basis lascoux --a 0,1,1 --b 1,0,1 --format json --oracle");
    EXPECT_EQ(a.out, o.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("expand --basis nope --index 1").code, 2);
    EXPECT_EQ(cli("expand --basis s --index 1,x").code, 2);
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("verify --suite nope").code, 2);
    EXPECT_EQ(cli("mult --basis hl --t 1 --a 1 --b 1").code, 1);
    EXPECT_EQ(cli("plethysm --f s --flambda 2,1 --g h --gmu 2 --nvars 3").code, 1);
    EXPECT_EQ(cli("verify --suite bridge").code, 0);
}

TEST(Cli, BridgeRejectsNonSymmetricFromFile) {
    std::string path = testing::TempDir() + "nonsym.json";
    FILE* f = fopen(path.c_str(), "w");
    fputs(R"([{"index":[2,1],"coeff":{"num":"1","den":"1"}}])", f);
    fclose(f);
    EXPECT_EQ(cli("bridge --basis M --nvars 3 --input " + path).code, 1);
}
