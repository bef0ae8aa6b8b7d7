#include <array>
#include <cstdio>
#include <memory>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "p1parts/cli.hpp"

using namespace p1parts;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result runOn(const std::string& fixture, RunOptions options = {}) {
  options.inputPath = std::string(P1PARTS_FIXTURES) + "/" + fixture;
  std::ostringstream out, err;
  int code = run(options, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// stdout of the built executable
std::pair<int, std::string> shell(const std::string& args) {
  std::string cmd = std::string(P1PARTS_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Run, TextOutput) {
  Result r = runOn("cubic_char0.txt");
  EXPECT_EQ(r.code, kExitOk);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 19u);
  EXPECT_EQ(ls[17], "(0, 1, 3, 7, 13, 17, ideal(z_1-1,z_2,z_3-1,z_4,z_5-1,y_6^2+y_6), {})");
  EXPECT_EQ(ls[16], "(0, 1, 4, 9, 16, ideal(z_1-1,z_3-1,y_5-1,z_4*y_6^2+y_6+1), {z_2, z_4})");
  EXPECT_NE(r.err.find("parts: 19, leaves: 10"), std::string::npos);
}

TEST(Run, LeavesOnly) {
  RunOptions o;
  o.leavesOnly = true;
  Result r = runOn("cubic_char0.txt", o);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 10u);
  EXPECT_EQ(ls[0], "(0, 2, 6, ideal(z_1,z_2-1,z_3,y_4-1,y_5-1,y_6), {})");
}

TEST(Run, JsonRoundTrip) {
  RunOptions o;
  o.format = OutputFormat::Json;
  Result r = runOn("product_char3.txt", o);
  ASSERT_EQ(r.code, kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["nodes"].size(), 7u);
  const auto& n4 = doc["nodes"][4];
  EXPECT_EQ(n4["id"], 4);
  EXPECT_EQ(n4["prev"], 1);
  EXPECT_EQ(n4["path"], nlohmann::json::parse("[0,1,4]"));
  EXPECT_EQ(n4["eq"], nlohmann::json::parse(R"(["z_1+2","y_3+2","y_4"])"));
  EXPECT_EQ(n4["neq"], nlohmann::json::parse(R"(["z_2"])"));
  EXPECT_TRUE(n4["leaf"].get<bool>());
  EXPECT_EQ(doc["nodes"][0]["prev"], -1);
  EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump() + "\n", r.out);
}

TEST(Run, Dot) {
  RunOptions o;
  o.format = OutputFormat::Dot;
  Result r = runOn("product_char3.txt", o);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("n1 -> n4"), std::string::npos);
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Run, OracleReport) {
  RunOptions o;
  o.oracleCheck = 5;
  Result r = runOn("inverse_char5.txt", o);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("partition valid: 36 tuples scanned, 6 variety points covered once"), std::string::npos);

  EXPECT_EQ(runOn("cubic_char0.txt", o).code, kExitInputError);
  o.oracleCheck = 7;
  EXPECT_EQ(runOn("inverse_char5.txt", o).code, kExitInputError);
}

TEST(Run, Errors) {
  EXPECT_EQ(runOn("does_not_exist.txt").code, kExitInputError);
  RunOptions o;
  o.maxNodes = 4;
  Result r = runOn("cubic_char0.txt", o);
  EXPECT_EQ(r.code, kExitLimit);
  EXPECT_EQ(lines(r.out).size(), 4u);
  EXPECT_NE(r.err.find("node limit"), std::string::npos);
}

TEST(Run, Deterministic) {
  for (auto name : {"cubic_char0.txt", "whitney_char5.txt"}) EXPECT_EQ(runOn(name).out, runOn(name).out);
}

TEST(Executable, FlagsAndExitCodes) {
  const std::string fx = std::string(P1PARTS_FIXTURES) + "/";
  auto [code, out] = shell(fx + "product_char3.txt --leaves --oracle 3");
  EXPECT_EQ(code, 0);
  EXPECT_EQ(lines(out).size(), 4u);
  EXPECT_EQ(shell(fx + "product_char3.txt --format JSON").second.rfind("{\"nodes\":", 0), 0u);
  EXPECT_EQ(shell(fx + "product_char3.txt --format xml").first, 1);
  EXPECT_EQ(shell(fx + "cubic_char0.txt --max-nodes 2").first, 2);
  EXPECT_EQ(shell("").first, 1);
  EXPECT_EQ(shell("--help").first, 0);
}
