#include "polyhex/cli.hpp"
#include "polyhex/error.hpp"
#include "polyhex/graph.hpp"
#include "polyhex/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyhex;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "polyhex");
  std::vector<const char *> argv;
  for (const std::string &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_csv(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("polyhex_cli_test_" + name + ".csv");
}

} // namespace

TEST(ParseRange, Forms) {
  EXPECT_EQ(cli::parse_range("2:12").lo, 2);
  EXPECT_EQ(cli::parse_range("2:12").hi, 12);
  EXPECT_EQ(cli::parse_range("3:3").size(), 1);
  EXPECT_THROW(cli::parse_range("12:2"), InvalidSpec);
  EXPECT_THROW(cli::parse_range("12"), InvalidSpec);
  EXPECT_THROW(cli::parse_range("a:3"), InvalidSpec);
  EXPECT_THROW(cli::parse_range("1:3x"), InvalidSpec);
}

TEST(BuildCommand, ZigzagJson) {
  Result r = run({"build", "--kind", "zigzag", "--m", "2", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["vertex_count"], 8);
  EXPECT_EQ(j["edge_count"], 10);
  EXPECT_EQ(j["edges"].size(), 10u);
}

TEST(BuildCommand, ArmchairJson) {
  Result r = run({"build", "--kind", "armchair", "--m", "5", "--n", "9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["vertex_count"], 110);
  EXPECT_EQ(j["edge_count"], 155);
}

TEST(BuildCommand, Dot) {
  Result r = run({"build", "--kind", "zigzag", "--m", "2", "--n", "1", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph \"TUZC6[2,1]\" {", 0), 0u);
  EXPECT_NE(r.out.find("\"0_0\" -- \"0_1\";"), std::string::npos);
  EXPECT_NE(r.out.find("\"1_3\";"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = r.out.find(" -- ", pos)) != std::string::npos; ++pos)
    ++edges;
  EXPECT_EQ(edges, 10u);
}

TEST(BuildCommand, InvalidM) {
  Result r = run({"build", "--kind", "armchair", "--m", "1", "--n", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("m must be ≥ 2"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(BuildCommand, UsageErrors) {
  EXPECT_EQ(run({"build", "--kind", "chiral", "--m", "2", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"build", "--kind", "zigzag", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"build", "--kind", "zigzag", "--m", "two", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(IndexCommand, ArmchairAzi) {
  Result r = run({"index", "--kind", "armchair", "--m", "5", "--n", "9", "--index", "azi"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["indices"]["azi"]["num"], 106485);
  EXPECT_EQ(j["indices"]["azi"]["den"], 64);
  EXPECT_EQ(j["indices"]["azi"]["decimal"], "1663.828125");
  EXPECT_FALSE(j["indices"].contains("randic"));
}

TEST(IndexCommand, ZigzagAzi) {
  Json j = Json::parse(run({"index", "--kind", "zigzag", "--m", "7", "--n", "5", "--index", "azi"}).out);
  EXPECT_EQ(j["indices"]["azi"]["num"], 80675);
  EXPECT_EQ(j["indices"]["azi"]["den"], 64);
}

TEST(IndexCommand, ArmchairRandic) {
  Json j = Json::parse(run({"index", "--kind", "armchair", "--m", "2", "--n", "1", "--index", "randic"}).out);
  // 4/2 + 8/sqrt(6) + 2/3
  EXPECT_EQ(j["indices"]["randic"]["decimal"], "5.93265299037757");
  EXPECT_FALSE(j["indices"]["randic"].contains("num"));
}

TEST(IndexCommand, FieldOrderAndAll) {
  Result r = run({"index", "--kind", "zigzag", "--m", "2", "--n", "1"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"kind", "m", "n", "vertex_count", "edge_count",
                                            "partition", "indices"}));
  EXPECT_TRUE(j["indices"].contains("azi"));
  EXPECT_TRUE(j["indices"].contains("randic"));
  EXPECT_TRUE(j["indices"].contains("abc"));
}

// JSON graph from `build` fed back through make_graph reproduces the partition `index` reports.
TEST(CliRoundTrip, BuildThenIndexAgreeOnGrid) {
  for (std::string kind : {"armchair", "zigzag"})
    for (int m = 2; m <= 12; ++m)
      for (int n = 1; n <= 12; ++n) {
        std::vector<std::string> tube{"--kind", kind, "--m", std::to_string(m), "--n", std::to_string(n)};
        std::vector<std::string> b{"build"}, x{"index", "--index", "azi"};
        b.insert(b.end(), tube.begin(), tube.end());
        x.insert(x.end(), tube.begin(), tube.end());
        Json g = Json::parse(run(b).out);
        Json rec = Json::parse(run(x).out);

        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto &e : g["edges"])
          edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
        Graph rebuilt = make_graph(g["vertex_count"].get<std::size_t>(), edges);
        EXPECT_EQ(partition_json(edge_partition(rebuilt)), rec["partition"]);
      }
}

TEST(VerifyCommand, FullGridExitsInconsistent) {
  Result r = run({"verify", "--kind", "both", "--m-range", "2:12", "--n-range", "1:12"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["paper_verdict"], "inconsistent");
  ASSERT_EQ(j["forms"].size(), 6u);
  for (const auto &f : j["forms"]) {
    EXPECT_EQ(f["point_count"], 132);
    if (f["provenance"] == "oracle_fitted")
      EXPECT_EQ(f["verdict"], "consistent");
    else
      EXPECT_EQ(f["verdict"], "inconsistent");
  }
}

TEST(VerifyCommand, SinglePoint) {
  Result r = run({"verify", "--kind", "armchair", "--m-range", "2:2", "--n-range", "1:1"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["forms"].size(), 3u);
  for (const auto &f : j["forms"])
    EXPECT_EQ(f["points"].size(), 1u);
  EXPECT_EQ(j["forms"][0]["points"][0]["form_value"]["num"], 807);
  EXPECT_EQ(j["forms"][0]["points"][0]["oracle_value"]["num"], 3801);
}

TEST(VerifyCommand, EmptyRange) {
  Result r = run({"verify", "--m-range", "12:2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("empty range"), std::string::npos);
  EXPECT_EQ(run({"verify", "--m-range", "1:4"}).code, 2);
}

TEST(SweepCommand, GridSizeAndHeader) {
  auto path = temp_csv("grid");
  Result r = run({"sweep", "--kind", "armchair", "--m-range", "2:3", "--n-range", "1:2", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(path));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kSweepHeader);
  std::vector<std::string> rows;
  while (std::getline(in, line))
    rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "armchair,2,1,12,14,3801,32,118.78125,5.93265299037757,9.81861470757191");
  std::filesystem::remove(path);
}

TEST(SweepCommand, ReferenceRowAndOrdering) {
  auto path = temp_csv("reference");
  ASSERT_EQ(run({"sweep", "--kind", "both", "--m-range", "5:5", "--n-range", "9:9", "--indices", "azi", "--out",
                 path.string()})
                .code,
            0);
  std::string csv = slurp(path);
  EXPECT_NE(csv.find("armchair,5,9,110,155,106485,64,1663.828125,,\n"), std::string::npos);
  EXPECT_LT(csv.find("armchair"), csv.find("zigzag"));
  std::filesystem::remove(path);
}

TEST(SweepCommand, AziOnlyColumnMatchesFittedFormAtNOne) {
  auto path = temp_csv("n1");
  ASSERT_EQ(run({"sweep", "--kind", "zigzag", "--m-range", "2:9", "--n-range", "1:1", "--indices", "azi", "--out",
                 path.string()})
                .code,
            0);
  ClosedForm f = fit_closed_form(TubeKind::Zigzag, IndexKind::Azi, default_fit_samples());
  std::istringstream in(slurp(path));
  std::string line;
  std::getline(in, line);
  for (std::int64_t m = 2; m <= 9; ++m) {
    ASSERT_TRUE(std::getline(in, line));
    Rational v = evaluate(f, m, 1);
    std::string expected = "zigzag," + std::to_string(m) + ",1," + std::to_string(4 * m) + "," +
                           std::to_string(5 * m) + "," + std::to_string(v.num()) + "," +
                           std::to_string(v.den()) + "," + v.decimal() + ",,";
    EXPECT_EQ(line, expected);
  }
  std::filesystem::remove(path);
}

TEST(SweepCommand, Deterministic) {
  auto a = temp_csv("det_a"), b = temp_csv("det_b");
  ASSERT_EQ(run({"sweep", "--kind", "both", "--jobs", "1", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"sweep", "--kind", "both", "--jobs", "8", "--out", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(SweepCommand, IoFailure) {
  Result r = run({"sweep", "--m-range", "2:2", "--n-range", "1:1", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}
