#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run shelfcli(const std::string& args) {
  std::string cmd = std::string(SHELFCLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, VerifyShelfOnDihedral) {
  auto r = shelfcli("verify-shelf --rack dihedral:3 --field f5 --json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["subcommand"], "verify-shelf");
  std::map<std::string, bool> got;
  for (const auto& c : j["checks"]) got[c["name"]] = c["value"];
  EXPECT_TRUE(got["self_distributive"]);
  EXPECT_TRUE(got["comult_compatible"]);
  EXPECT_FALSE(got["strict_counit"]);
  EXPECT_TRUE(got["weak_counit"]);
}

TEST(Cli, TrigonometricTable) {
  auto r = shelfcli("table1-verify --json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  int passed = 0;
  for (const auto& c : j["checks"]) passed += c["passed"].get<bool>();
  EXPECT_EQ(passed, 21);
}

TEST(Cli, CentralExtensionCohomology) {
  auto r = shelfcli("cohomology --lie witt:5 --central-ext --degree 2 --field f5");
  ASSERT_EQ(r.status, 0) << r.out;
  auto pos = r.out.find("dim_H: ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GE(std::stoi(r.out.substr(pos + 7)), 1);
}

TEST(Cli, Errors) {
  EXPECT_NE(shelfcli("no-such-command").status, 0);
  EXPECT_NE(shelfcli("").status, 0);
  auto mismatch = shelfcli("verify-shelf --lie witt:5 --field q");
  EXPECT_EQ(mismatch.status, 2);
  EXPECT_NE(mismatch.out.find("mismatch"), std::string::npos);
  EXPECT_EQ(shelfcli("verify-shelf --rack /nonexistent/rack.txt").status, 2);
  EXPECT_EQ(shelfcli("prop46-check").status, 2);
}

TEST(Cli, DeterministicOutput) {
  for (const std::string args : {"hochschild-check --hopf group:Z3 --trials 5 --seed 7 --json",
                                 "deform-check --rack dihedral:3 --field fp:5 --trials 5 --json", "enumerate-2d --json"}) {
    auto a = shelfcli(args), b = shelfcli(args);
    EXPECT_EQ(a.status, 0) << args << '\n' << a.out;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
