#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QFORMS_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("qforms_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

const char* kDependent = R"({"schema":1,"r":3,"m":3,"A":[["1","1","1"],["1","2","3"],["5","8","10"]]})";
const char* kIndependent = R"({"r":2,"m":1,"A":[["1","1"]]})";

}  // namespace

TEST(Cli, CheckS1ExitCodes) {
  const auto dep = run("check-s1 --in " + write_temp("dep", kDependent));
  EXPECT_EQ(dep.status, 1);
  EXPECT_NE(dep.out.find("\"dependent\""), std::string::npos);
  EXPECT_NE(dep.out.find("\"-5\""), std::string::npos);

  const auto ind = run("check-s1 --in " + write_temp("ind", kIndependent));
  EXPECT_EQ(ind.status, 0);
  EXPECT_NE(ind.out.find("\"independent\""), std::string::npos);
}

TEST(Cli, CheckSkAndWitness) {
  const std::string dep = write_temp("dep_k", kDependent);
  EXPECT_EQ(run("check-sk --k 3 --in " + dep).status, 1);
  EXPECT_EQ(run("witness --in " + dep).status, 0);
  EXPECT_EQ(run("witness --k 2 --in " + write_temp("ind_w", kIndependent)).status, 1);
  EXPECT_EQ(run("check-sk --k 9 --in " + dep).status, 2);
}

TEST(Cli, ClassifyM2) {
  const auto r = run("classify-m2 --in " + write_temp("m2", R"({"r":2,"m":2,"A":[["1","1"],["1","1"]]})"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("condA"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("check-s1 --in " + write_temp("bad", "{\"r\": 2,")).status, 2);
  EXPECT_EQ(run("check-s1 --in /nonexistent/instance.json").status, 2);
  EXPECT_EQ(run("check-s1 --in " + write_temp("mismatch", R"({"r":2,"m":1,"A":[["1"]]})")).status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("verify-identity --n 7").status, 2);
  EXPECT_EQ(run("sweep --r 3 --m 3 --k 2 --trials 5").status, 2);
  EXPECT_EQ(run("sweep --r 2 --m 2 --k 2 --trials 5 --mode dependent-constructed").status, 2);
  EXPECT_EQ(run("trace-systems --case C9").status, 2);
}

TEST(Cli, VerifyIdentity) {
  const auto r = run("verify-identity --n 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"holds\""), std::string::npos);
  EXPECT_EQ(run("verify-identity --name det-permanent --summands").status, 0);
}

TEST(Cli, SweepConstructed) {
  const auto r = run("sweep --r 3 --m 3 --k 3 --trials 100 --seed 7 --mode dependent-constructed");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"agreements\": 100"), std::string::npos);
  EXPECT_NE(r.out.find("\"violations\": 0"), std::string::npos);
  EXPECT_NE(r.out.find("generated_at"), std::string::npos);
}

TEST(Cli, ExploratorySweepReportsOnly) {
  const auto r = run("sweep --r 3 --m 3 --k 2 --trials 10 --seed 1 --mode dependent-constructed --allow-exploratory");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"asserted\": false"), std::string::npos);
}

TEST(Cli, TraceSystemsReportsPrintedMismatch) {
  const auto one = run("trace-systems --case C3");
  EXPECT_EQ(one.status, 0);
  const auto all = run("trace-systems");
  EXPECT_EQ(all.status, 1);
  EXPECT_NE(all.out.find("\"forces_zero\": true"), std::string::npos);
}

TEST(Cli, CatalogMatchesCheckedInData) {
  const auto r = run("catalog");
  EXPECT_EQ(r.status, 0);
  std::ifstream in(QFORMS_CATALOG);
  ASSERT_TRUE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(r.out, ss.str());
}
