#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

namespace {

struct result {
  int status = -1;
  std::string out;
};

result run(const std::string &args) {
  const std::string cmd = std::string(LFG_CLI_PATH) + " " + args + " 2>/dev/null";
  result r;
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has_line(const std::string &text, const std::string &line) {
  return text.find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Cli, CountCsv) {
  const auto r = run("count --variant group --n 3 --k-max 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("# lfg count", 0), 0u);
  EXPECT_TRUE(has_line(r.out, "group,3,1,6")) << r.out;
  EXPECT_TRUE(has_line(r.out, "group,3,2,26")) << r.out;
}

TEST(Cli, CountJson) {
  const auto r = run("count --variant restricted --r 3 --n 2 --k-max 3 --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"args\""), std::string::npos);
  EXPECT_NE(r.out.find("\"restricted\""), std::string::npos);
}

TEST(Cli, OracleVerifySmall) {
  const auto r = run("oracle-verify --n-max 3 --k-max 5 --k-max-restricted 4 --r-max 4");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.find(",false"), std::string::npos);
}

TEST(Cli, SemigroupWalkDriftIsOne) {
  const auto r = run("walk --mode semigroup --n 10 --steps 2000 --trials 2 --seed 1 --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"drift_mean\": 1.0"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("count --variant restricted --n 3 --k-max 4").status, 2);
  EXPECT_EQ(run("count --variant group --r 3 --n 3 --k-max 4").status, 2);
  EXPECT_EQ(run("count --n 3 --k-max 4 --bogus 1").status, 2);
  EXPECT_EQ(run("walk --n 0 --steps 10").status, 2);
  EXPECT_EQ(run("braid-bounds --n 5 --alpha 0.7").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, BudgetErrorsExitThree) {
  EXPECT_EQ(run("oracle-verify --n-max 4 --k-max 8 --max-states 10").status, 3);
}

TEST(Cli, OutputIsReproducible) {
  for (const char *args : {"walk --mode group --n 12 --steps 5000 --trials 3 --seed 7 --format json",
                           "roof-chain --n 30 --steps 20000 --seed 4", "spectrum --n 12", "braid-bounds --n 6",
                           "inequality --v 1.9 --l 0.6 --h 1.0 --format json"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
