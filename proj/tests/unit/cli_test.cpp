#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/reference.hpp"
#include "cli/commands.hpp"
#include "json.hpp"

using permcover::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const auto code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = call(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("permcover_cli_" + name);
}

}  // namespace

TEST(Cli, RadiusGn) {
  EXPECT_EQ(call_json({"radius", "--family", "gn", "--n", "7"})["results"]["radius"], 4);
  EXPECT_EQ(call_json({"radius", "--family", "gn", "--n", "1"})["results"]["radius"], 0);
  const auto j = call_json({"radius", "--family", "gn", "--n", "9", "--oracle"});
  EXPECT_EQ(j["results"]["oracle"], 6);
  EXPECT_EQ(j["command"], "radius");
  EXPECT_TRUE(j.contains("timing"));
  EXPECT_TRUE(j.contains("version"));
}

TEST(Cli, RadiusRelabeled) {
  const auto j = call_json({"radius", "--family", "gn", "--n", "6", "--h", "(1,2)", "--oracle"});
  EXPECT_EQ(j["results"]["upper"], 4);
  EXPECT_EQ(j["results"]["oracle"], 4);
  EXPECT_LE(j["results"]["lower"].get<int>(), 4);
}

TEST(Cli, RadiusDihedral) {
  const auto j = call_json({"radius", "--family", "dn", "--n", "6", "--oracle"})["results"];
  EXPECT_EQ(j["lower"], 3);
  EXPECT_EQ(j["upper"], 3);
  EXPECT_EQ(j["oracle"], 3);
}

TEST(Cli, RadiusComposed) {
  const auto j = call_json({"radius", "--family", "composed", "--n", "5", "--m", "3", "--oracle"})["results"];
  EXPECT_EQ(j["radius"], 1);
  EXPECT_EQ(j["size"], 60);
  EXPECT_EQ(j["oracle"], 1);

  const auto spec = temp_path("spec.json");
  std::ofstream(spec) << R"({"n": 7, "m": 5, "head_kind": "cyclic", "tail_kind": "identity"})";
  const auto k = call_json({"radius", "--family", "composed", "--spec", spec.string()})["results"];
  EXPECT_EQ(k["size"], 105);
  EXPECT_EQ(k["radius"], 3);
  std::filesystem::remove(spec);

  const auto gap = call({"radius", "--family", "composed", "--n", "7", "--m", "5", "--oracle"});
  EXPECT_EQ(gap.code, 4);
  EXPECT_NE(gap.err.find("contradicts"), std::string::npos);
}

TEST(Cli, RadiusExplicitFile) {
  const auto file = temp_path("code.txt");
  std::ofstream(file) << "# identity and reversal\n[1,2,3,4]\n[4,3,2,1]\n";
  const auto j = call_json({"radius", "--family", "explicit", "--file", file.string()})["results"];
  EXPECT_EQ(j["radius"], ref::covering_radius({{1, 2, 3, 4}, {4, 3, 2, 1}}, 4));
  EXPECT_EQ(j["code_size"], 2);
  std::filesystem::remove(file);
  EXPECT_EQ(call({"radius", "--family", "explicit", "--file", file.string()}).code, 2);
}

TEST(Cli, Cover) {
  const auto j = call_json({"cover", "--family", "gn", "--n", "7", "--f", "[5,2,6,3,1,7,4]"})["results"];
  EXPECT_EQ(j["codeword"], "[1,2,3,4,5,6,7]");
  EXPECT_EQ(j["distance"], 4);
  EXPECT_EQ(j["within"], true);
  EXPECT_EQ(call_json({"cover", "--family", "gn", "--f", "[1,2,3,4,5]"})["results"]["distance"], 0);
  const auto c = call_json({"cover", "--family", "composed", "--n", "5", "--m", "3", "--f", "[3,5,1,4,2]"})["results"];
  EXPECT_LE(c["distance"].get<int>(), 1);
  const auto d = call_json({"cover", "--family", "dn", "--n", "6", "--f", "(1,4)"})["results"];
  EXPECT_LE(d["distance"].get<int>(), 3);
}

TEST(Cli, CoverRandomTrialsReproducible) {
  const auto a = call_json({"cover", "--family", "gn", "--n", "500", "--random-trials", "200", "--seed", "9"});
  const auto b = call_json({"cover", "--family", "gn", "--n", "500", "--random-trials", "200", "--seed", "9"});
  EXPECT_EQ(a["results"], b["results"]);
  EXPECT_EQ(a["results"]["violations"], 0);
  const auto c = call_json({"cover", "--family", "composed", "--n", "100", "--m", "10", "--random-trials", "50"});
  EXPECT_EQ(c["results"]["violations"], 0);
}

TEST(Cli, Scan) {
  const auto j = call_json({"scan", "--n", "6"})["results"];
  EXPECT_EQ(j["histogram"], Json::parse(R"({"3":264,"4":456})"));
  EXPECT_EQ(call_json({"scan", "--n", "3"})["results"]["histogram"], Json::parse(R"({"1":6})"));
  EXPECT_EQ(call_json({"scan", "--n", "6", "--jobs", "3"})["results"]["histogram"], j["histogram"]);
  EXPECT_EQ(call({"scan", "--n", "9"}).code, 3);
}

TEST(Cli, ScanCheckpoint) {
  const auto cp = temp_path("scan.cp");
  std::filesystem::remove(cp);
  const auto j = call_json({"scan", "--n", "5", "--checkpoint", cp.string()});
  EXPECT_TRUE(std::filesystem::exists(cp));
  const auto k = call_json({"scan", "--n", "5", "--checkpoint", cp.string(), "--resume"});
  EXPECT_EQ(j["results"]["histogram"], k["results"]["histogram"]);
  std::filesystem::remove(cp);
}

TEST(Cli, Tables) {
  const auto radii = call_json({"table", "--which", "radii", "--n-range", "3:9"})["results"];
  ASSERT_EQ(radii["rows"].size(), 7u);
  for (const auto& row : radii["rows"]) EXPECT_EQ(row[1], row[4]);
  const auto empty = call({"table", "--which", "radii", "--n-range", "5:3"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "n  radius  lower  upper  oracle\n");
  const auto csv = call({"table", "--which", "balls", "--n-range", "4:4", "--csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("4,1,5,"), std::string::npos);
  const auto bounds = call_json({"table", "--which", "bounds", "--n-range", "4:12"})["results"];
  EXPECT_EQ(bounds["rows"].size(), 9u);
}

TEST(Cli, TableOne) {
  const auto r = call({"table", "--which", "table1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "mapping  exposed_by   A_set\n"
            "1->5     g^0          {1}\n"
            "3->6     g^5,g^6      {2,3}\n"
            "6->7     g^2,g^3,g^4  {4,5,6}\n"
            "5->1     g^0,g^1,g^2  {6,7,1}\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"radius", "--family", "nope"}).code, 2);
  EXPECT_EQ(call({"radius", "--family", "gn"}).code, 2);
  EXPECT_EQ(call({"cover", "--family", "gn", "--n", "3", "--f", "[1,1,2]"}).code, 2);
  EXPECT_EQ(call({"cover", "--family", "gn", "--n", "4", "--f", "[1,2,3]"}).code, 2);
  EXPECT_EQ(call({"radius", "--family", "gn", "--n", "14", "--oracle"}).code, 3);
  EXPECT_EQ(call({"radius", "--family", "dn", "--n", "3"}).code, 2);
  EXPECT_EQ(call({"--version"}).code, 0);
  EXPECT_EQ(call({"radius", "--help"}).code, 0);
}

TEST(Cli, CapEnvironmentOverride) {
  ::setenv("PERMCOVER_CAP_N", "6", 1);
  EXPECT_EQ(call({"radius", "--family", "gn", "--n", "7", "--oracle"}).code, 3);
  EXPECT_EQ(call({"scan", "--n", "7"}).code, 3);
  ::setenv("PERMCOVER_CAP_N", "bogus", 1);
  EXPECT_EQ(call({"radius", "--family", "gn", "--n", "7"}).code, 2);
  ::unsetenv("PERMCOVER_CAP_N");
  EXPECT_EQ(call({"radius", "--family", "gn", "--n", "7", "--oracle"}).code, 0);
}
