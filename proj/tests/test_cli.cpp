#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

namespace fano95::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

TEST(Cli, ListJson) {
  const auto r = call({"list", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 95u);
  EXPECT_EQ(j[0]["weights"], Json::parse("[1,1,1,1,1]"));
  EXPECT_EQ(j[17]["weights"], Json::parse("[1,2,2,3,5]"));
  EXPECT_EQ(j[17]["degree"], 12);
  EXPECT_EQ(call({"list", "--format", "json"}).out, r.out);
}

TEST(Cli, ListCsvAndTable) {
  const auto csv = call({"list", "--format", "csv"});
  ASSERT_EQ(csv.code, kOk);
  const auto rows = lines(csv.out);
  ASSERT_EQ(rows.size(), 96u);
  EXPECT_EQ(rows[0], "n,weights,degree,kcube,basket,has_fibration");
  EXPECT_EQ(rows[1], "1,\"1,1,1,1,1\",4,4,\"smooth\",true");
  EXPECT_EQ(rows[7], "7,\"1,1,2,2,3\",8,2/3,\"1/3(1,1,2)×1, 1/2(1,1,1)×4\",true");

  const auto table = call({"list"});
  ASSERT_EQ(table.code, kOk);
  EXPECT_EQ(lines(table.out).size(), 96u);
  EXPECT_EQ(call({"list", "--format", "table"}).out, table.out);
}

TEST(Cli, UnknownFormatIsUsageError) {
  const auto r = call({"list", "--format", "xml"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("xml"), std::string::npos);
}

TEST(Cli, FamilyBounds) {
  EXPECT_EQ(call({"show", "96"}).code, kUsage);
  EXPECT_EQ(call({"show", "0"}).code, kUsage);
  EXPECT_EQ(call({"basket", "-3"}).code, kUsage);
  EXPECT_EQ(call({"fibrations", "x"}).code, kUsage);
  EXPECT_EQ(call({"show"}).code, kUsage);
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, PerFamilyDetail) {
  EXPECT_EQ(call({"basket", "7"}).out, "1/3(1,1,2)×1, 1/2(1,1,1)×4\n");
  EXPECT_EQ(call({"fibrations", "60"}).out, "no chains\n");

  const auto fib = call({"fibrations", "26"});
  EXPECT_EQ(fib.code, kOk);
  EXPECT_NE(fib.out.find("target P(1,1,3)"), std::string::npos);
  EXPECT_NE(fib.out.find("target P(1,1,6)"), std::string::npos);
  EXPECT_NE(call({"fibrations", "1"}).out.find("P^2"), std::string::npos);

  const auto show = lines(call({"show", "18"}).out);
  ASSERT_GE(show.size(), 7u);
  EXPECT_EQ(show[0], "n: 18");
  EXPECT_EQ(show[1], "weights: P(1,2,2,3,5)");
  EXPECT_EQ(show[2], "degree: 12");
  EXPECT_EQ(show[3], "-K^3: 1/5");
  EXPECT_EQ(show[4], "basket: 1/5(1,2,3)×1, 1/2(1,1,1)×6");
}

TEST(Cli, Classify) {
  const auto r = call({"classify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "families: 95\nno chain: 1 2 3 60 75 84 87 93\nno fibration: 3 60 75 84 87 93\n");
}

TEST(Cli, Triple) {
  EXPECT_EQ(call({"triple", "--d0cube", "1/12", "--ecubes", "4", "--a", "3,-1/2", "--b", "1,-1/2", "--c", "1,-1/2"}).out,
            "-1/4\n");
  EXPECT_EQ(call({"triple", "--d0cube", "1/18", "--ecubes", "81/14,4", "--a", "7,-7/9,-1/2", "--b", "1,-1/9,-1/2",
                  "--c", "1,-1/9,-1/2"})
                .out,
            "-1/6\n");
  EXPECT_EQ(call({"triple", "--d0cube", "1/12", "--ecubes", "4", "--a", "0,0", "--b", "0,0", "--c", "0,0"}).out, "0\n");
  EXPECT_EQ(call({"triple", "--d0cube", "2", "--a", "1", "--b", "1", "--c", "1"}).out, "2\n");

  EXPECT_EQ(call({"triple", "--d0cube", "1/12", "--ecubes", "4", "--a", "3", "--b", "1,-1/2", "--c", "1,-1/2"}).code,
            kUsage);
  EXPECT_EQ(call({"triple", "--d0cube", "1/0", "--a", "1", "--b", "1", "--c", "1"}).code, kUsage);
  EXPECT_EQ(call({"triple", "--d0cube", "x", "--a", "1", "--b", "1", "--c", "1"}).code, kUsage);
  EXPECT_EQ(call({"triple", "--a", "1", "--b", "1", "--c", "1"}).code, kUsage);
}

TEST(Cli, Export) {
  const auto dir = std::filesystem::temp_directory_path() / "fano95_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "families.json").string();
  const auto r = call({"export", path});
  ASSERT_EQ(r.code, kOk);
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, database_dump(build_database()));
  const auto j = Json::parse(text);
  EXPECT_EQ(j.size(), 95u);
  EXPECT_EQ(j[90]["kcube"], "1/130");
  EXPECT_EQ(database_from_json(j), build_database());
  EXPECT_EQ(call({"list", "--format", "json"}).out, text);

  EXPECT_EQ(call({"export", (dir / "missing" / "x.json").string()}).code, kIo);
  EXPECT_EQ(call({"export", dir.string()}).code, kIo);
  std::filesystem::remove_all(dir);
}

TEST(Cli, DegreeBoundFromEnvironment) {
  ::setenv("FANO95_DMAX", "200", 1);
  EXPECT_EQ(call({"classify"}).out.rfind("families: 95\n", 0), 0u);
  ::setenv("FANO95_DMAX", "50", 1);
  EXPECT_EQ(call({"classify"}).code, kUsage);
  ::setenv("FANO95_DMAX", "abc", 1);
  EXPECT_EQ(call({"basket", "7"}).code, kUsage);
  ::unsetenv("FANO95_DMAX");
  EXPECT_EQ(call({"basket", "7"}).code, kOk);
}

}  // namespace
}  // namespace fano95::cli
