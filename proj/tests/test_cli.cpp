#include <gtest/gtest.h>

#include <filesystem>

#include "cag/cli.hpp"

using namespace cag;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cag");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CAG_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("cag_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, CheckCounterexample) {
    auto r = run({"check", data("fig2-left.txt")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "chordal: true\nalpha: 5\nbq: none\n");
}

TEST(Cli, CheckJson) {
    auto r = run({"check", data("fig1-e.txt"), "--json"});
    EXPECT_EQ(r.code, 1);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["chordal"], true);
    EXPECT_EQ(j["alpha"], 4);
    EXPECT_EQ(j["bq"].size(), 4u);
    EXPECT_EQ(j["obstruction"]["family"], "Fig1-e");
}

TEST(Cli, CheckNotChordal) {
    std::string path = temp_path("c4.txt");
    std::ofstream(path) << "a b\nb c\nc d\nd a\n";
    auto r = run({"check", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("chordal: false"), std::string::npos);
}

TEST(Cli, RepresentExample) {
    std::string json = temp_path("fig4.json"), svg = temp_path("fig4.svg");
    auto r = run({"represent", data("fig4.txt"), "--json", json, "--svg", svg});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
    auto v = run({"verify", data("fig4.txt"), "--rep", json});
    EXPECT_EQ(v.code, 0) << v.out << v.err;
    EXPECT_EQ(Json::parse(v.out)["equal"], true);
}

TEST(Cli, RepresentToStdout) {
    auto r = run({"represent", data("fig3-a.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(Json::parse(r.out).contains("arcs"));
}

TEST(Cli, RepresentNegative) {
    EXPECT_EQ(run({"represent", data("fig1-e.txt")}).code, 1);
    auto r = run({"represent", data("fig2-left.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("AlphaTooLarge"), std::string::npos);
}

TEST(Cli, VerifyPinnedTables) {
    EXPECT_EQ(run({"verify", data("fig4.txt"), "--rep", data("fig4b-rep.json")}).code, 0);
    auto r = run({"verify", data("fig4.txt"), "--rep", data("fig4c-rep.json")});
    EXPECT_EQ(r.code, 1);
    Json j = Json::parse(r.out);
    EXPECT_NE(std::find(j["missing"].begin(), j["missing"].end(), Json::array({"h", "j"})), j["missing"].end());
}

TEST(Cli, VerifyMalformed) {
    std::string path = temp_path("bad.json");
    std::ofstream(path) << "{not json";
    EXPECT_EQ(run({"verify", data("fig4.txt"), "--rep", path}).code, 2);
}

TEST(Cli, Oracle) {
    auto no = run({"oracle", data("fig2-left.txt")});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(Json::parse(no.out)["status"], "no");
    auto yes = run({"oracle", data("fig3-a.txt")});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(Json::parse(yes.out)["model"]["order"].size(), 12u);
}

TEST(Cli, GenerateRoundTrips) {
    auto r = run({"generate", "--n", "9", "--seed", "3", "--alpha-max", "3", "--count", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, run({"generate", "--n", "9", "--seed", "3", "--alpha-max", "3", "--count", "4"}).out);
    std::vector<std::string> chunks;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("# graph ", 0) == 0) chunks.emplace_back();
        else chunks.back() += line + "\n";
    }
    ASSERT_EQ(chunks.size(), 4u);
    for (const auto& c : chunks) {
        Graph g = parse_graph(c);
        EXPECT_TRUE(is_chordal(g));
        EXPECT_LE(brute_force_alpha(g), 3);
    }
}

TEST(Cli, Obstruct) {
    auto r = run({"obstruct", data("fig1-g.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["family"], "Fig1-g");
    EXPECT_EQ(run({"obstruct", data("fig4.txt")}).code, 1);
}

TEST(Cli, Selftest) {
    auto r = run({"selftest", "--trials", "5", "--seed", "2", "--suite", "thm1-equivalence", "--suite", "fixtures"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("suite: thm1-equivalence"), std::string::npos);
    EXPECT_NE(r.out.find("suite: fixtures"), std::string::npos);
    EXPECT_EQ(run({"selftest", "--suite", "bogus"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check"}).code, 2);
    EXPECT_EQ(run({"generate", "--n", "0", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"check", data("missing.txt")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
