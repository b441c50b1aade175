#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sep/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sepoly");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = sep::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::path(::testing::TempDir()) /
               ("sepoly_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string cycle(int n, const std::string& name) {
        std::string text;
        for (int i = 1; i <= n; ++i) text += std::to_string(i) + " " + std::to_string(i % n + 1) + "\n";
        return write(name, text);
    }
    std::string k4() { return write("k4.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"); }

    fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

} // namespace

TEST_F(CliTest, GammaA) {
    auto r = run({"gamma-a", cycle(3, "c3.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "gamma: [1, 6]\n"));
    EXPECT_TRUE(contains(r.out, "hstar: [1, 9, 9, 1]\n"));
    EXPECT_TRUE(contains(r.out, "volume: 20\n"));
    EXPECT_TRUE(contains(r.out, "method: formula\n"));

    auto cuts = run({"gamma-a", k4(), "--method", "cuts"});
    EXPECT_EQ(cuts.code, 0);
    EXPECT_TRUE(contains(cuts.out, "method: cut_sum"));
    EXPECT_TRUE(contains(cuts.out, "volume: 70"));

    auto e = run({"gamma-a", cycle(4, "c4.txt"), "--method", "ehrhart"});
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(contains(e.out, "gamma: [1, 8, 6]"));
    EXPECT_TRUE(contains(e.out, "volume: 54"));
}

TEST_F(CliTest, GammaB) {
    auto r = run({"gamma-b", cycle(4, "c4.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "gamma: [1, 16, 16]"));
    EXPECT_TRUE(contains(r.out, "volume: 96"));
    auto i = run({"gamma-b", cycle(4, "c4.txt"), "--method", "interior"});
    EXPECT_TRUE(contains(i.out, "gamma: [1, 16, 16]"));
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({"gamma-a", (dir_ / "missing.txt").string()}).code, 1);
    EXPECT_EQ(run({"gamma-a", write("bad.txt", "1 x\n")}).code, 1);
    EXPECT_EQ(run({"gamma-a"}).code, 1);
    EXPECT_EQ(run({"gamma-a", k4(), "--method", "formula"}).code, 2);
    EXPECT_EQ(run({"gamma-b", cycle(3, "c3.txt")}).code, 2);
    EXPECT_EQ(run({"gamma-a", k4(), "--method", "cuts", "--bound-override", "cut_sum_vertices=3"}).code, 4);
    EXPECT_EQ(run({"gamma-a", k4(), "--bound-override", "nonsense=3"}).code, 1);
    auto dup = write("dup.txt", "1 2\n2 1\n");
    EXPECT_EQ(run({"gamma-a", dup}).code, 0);
    EXPECT_EQ(run({"gamma-a", dup, "--strict"}).code, 1);
}

TEST_F(CliTest, ErrorsGoToStderr) {
    auto r = run({"gamma-a", k4(), "--method", "formula"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, Formats) {
    auto c3 = cycle(3, "c3.txt");
    auto pretty = run({"gamma-a", c3, "--format", "pretty"});
    EXPECT_TRUE(contains(pretty.out, "gamma: 1 + 6x\n"));
    EXPECT_TRUE(contains(pretty.out, "hstar: 1 + 9x + 9x^2 + x^3\n"));
    auto s = run({"gamma-a", c3, "--format", "structured"});
    ASSERT_EQ(s.code, 0);
    auto doc = nlohmann::json::parse(s.out);
    EXPECT_EQ(doc["result"]["gamma"], nlohmann::json::parse("[1, 6]"));
    EXPECT_EQ(doc["result"]["volume"], 20);
    EXPECT_EQ(run({"gamma-a", c3, "--format", "xml"}).code, 1);
}

TEST_F(CliTest, Check) {
    auto r = run({"check", cycle(5, "c5.txt"), "--polytope", "a"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "polynomial: [1, 6, 16, 6, 1]"));
    EXPECT_TRUE(contains(r.out, "palindromic: yes"));
    EXPECT_TRUE(contains(r.out, "gamma-positive: yes"));
    EXPECT_TRUE(contains(r.out, "gamma: [1, 2, 6]"));
    EXPECT_TRUE(contains(r.out, "real-rooted: no"));

    auto p = run({"check", "--poly", "[1, 9, 9, 1]"});
    EXPECT_EQ(p.code, 0);
    EXPECT_TRUE(contains(p.out, "real-rooted: yes"));
    EXPECT_TRUE(contains(p.out, "log-concave: yes"));
    EXPECT_EQ(run({"check", "--poly", "[1, z]"}).code, 1);
}

TEST_F(CliTest, Witness) {
    auto out = (dir_ / "w.txt").string();
    auto r = run({"witness", cycle(5, "c5.txt"), "--export", out});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "f_poly: [1, 10, 20]"));
    EXPECT_TRUE(fs::exists(out));
    auto again = run({"gamma-a", out, "--method", "cuts"});
    EXPECT_EQ(again.code, 0);
    EXPECT_EQ(run({"witness", cycle(4, "c4.txt")}).code, 2);
    auto b = run({"witness", write("p3.txt", "1 2\n2 3\n"), "--type", "b"});
    EXPECT_EQ(b.code, 0);
    EXPECT_TRUE(contains(b.out, "f_poly: [1, 8]"));
}

TEST_F(CliTest, Analyze) {
    auto r = run({"analyze", cycle(4, "c4.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "bipartite: yes"));
    EXPECT_TRUE(contains(r.out, "char_poly: [0, 0, -4, 0, 1]"));
}

TEST_F(CliTest, Batch) {
    auto corpus = dir_ / "corpus";
    fs::create_directories(corpus);
    cycle(3, "corpus/c3.txt");
    cycle(5, "corpus/c5.txt");
    cycle(4, "corpus/c4.txt");
    auto r = run({"batch", corpus.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "name,n,edges,class,gamma,hstar,volume,real_rooted,agreement");
    EXPECT_EQ(rows[1].rfind("c3.txt,3,3,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("c4.txt,4,4,", 0), 0u);
    EXPECT_EQ(rows[3].rfind("c5.txt,5,5,", 0), 0u);
    EXPECT_TRUE(contains(rows[1], ",20,"));
    EXPECT_TRUE(contains(rows[2], ",54,"));
    EXPECT_TRUE(contains(rows[3], ",152,"));

    auto s = run({"batch", corpus.string(), "--format", "structured"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NO_THROW(nlohmann::json::parse(s.out));

    write("corpus/broken.txt", "1 2 3\n");
    auto bad = run({"batch", corpus.string()});
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(contains(bad.err, "broken.txt"));
    EXPECT_TRUE(contains(bad.out, "c5.txt,"));
}

TEST_F(CliTest, BatchEmptyDirectory) {
    auto empty = dir_ / "empty";
    fs::create_directories(empty);
    auto r = run({"batch", empty.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "name,n,edges,class,gamma,hstar,volume,real_rooted,agreement\n");
    EXPECT_EQ(run({"batch", (dir_ / "nope").string()}).code, 1);
}

TEST_F(CliTest, Verify) {
    auto full = run({"verify", cycle(4, "c4.txt"), "--level", "full"});
    EXPECT_EQ(full.code, 0) << full.out;
    EXPECT_TRUE(contains(full.out, "mu.bridge: PASS"));
    EXPECT_TRUE(contains(full.out, "verdict: PASS"));
    EXPECT_FALSE(contains(full.out, "FAIL"));

    auto tree = run({"verify", write("tree.txt", "1 2\n2 3\n2 4\n4 5\n"), "--level", "quick"});
    EXPECT_EQ(tree.code, 0);
    EXPECT_TRUE(contains(tree.out, "a.formula=cut_sum: PASS"));

    auto c6 = run({"verify", cycle(6, "c6.txt"), "--level", "full"});
    EXPECT_EQ(c6.code, 0) << c6.out;
    EXPECT_TRUE(contains(c6.out, "mu.bridge: PASS"));
}

TEST_F(CliTest, Deterministic) {
    auto g = write("g.txt", "1 2\n2 3\n3 4\n4 5\n5 1\n1 3\n2 5\n6 1\n6 4\n");
    auto a = run({"gamma-a", g, "--format", "structured", "--jobs", "1"});
    auto b = run({"gamma-a", g, "--format", "structured", "--jobs", "4"});
    auto c = run({"gamma-a", g, "--format", "structured", "--jobs", "4"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
    EXPECT_EQ(run({"gamma-a", g, "--seed", "7"}).out, run({"gamma-a", g, "--seed", "8"}).out);
}
