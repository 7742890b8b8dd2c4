#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#ifdef SHACL2FOL_ZTPTP

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

class Ztptp : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("shacl2fol-ztptp-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& problem, const std::string& flags = "--cpu-limit=10") {
    fs::path p = dir_ / "problem.p";
    std::ofstream(p) << problem;
    std::string cmd = std::string("'") + SHACL2FOL_ZTPTP + "' " + flags + " '" +
                      p.string() + "' 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string status(const std::string& problem) {
    auto out = run(problem).out;
    auto at = out.find("SZS status ");
    if (at == std::string::npos) return "";
    at += 11;
    return out.substr(at, out.find(' ', at) - at);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Ztptp, Basics) {
  EXPECT_EQ(status("fof(a, axiom, p).\nfof(b, axiom, ~p).\n"), "Unsatisfiable");
  EXPECT_EQ(status("fof(a, axiom, ![X]: p(X)).\n"), "Satisfiable");
  EXPECT_EQ(status("fof(a, axiom, p(c)).\nfof(g, conjecture, ?[X]: p(X)).\n"),
            "Theorem");
  EXPECT_EQ(status("fof(g, conjecture, ?[X]: q(X)).\n"), "CounterSatisfiable");
  EXPECT_EQ(status("tff(u, axiom, $distinct(a, b, c)).\nfof(e, axiom, a = b).\n"),
            "Unsatisfiable");
  EXPECT_EQ(status("cnf(c1, axiom, p(X) | q(X)).\ncnf(c2, axiom, ~p(a)).\n"
                   "cnf(c3, axiom, ~q(a)).\n"),
            "Unsatisfiable");
}

TEST_F(Ztptp, SyntaxErrors) {
  auto r = run("fof(a, axiom, p(.\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("SZS status SyntaxError"), std::string::npos);
  EXPECT_EQ(run("fof(a, axiom, p).\n", "--frobnicate").code, 2);
}

TEST_F(Ztptp, FiniteModelSearchOnlyAnswersSatisfiable) {
  const char* defined =
      "fof(d1, axiom, ![X]: (s(X,s0) <=> (s(X,b0) & s(X,b4)))).\n"
      "fof(d2, axiom, ![X]: (s(X,b0) <=> ~?[Y1]: (?[Y2]: (t(X,Y2) & p1(Y2,Y1))"
      " & ~iri(Y1)))).\n"
      "fof(d3, axiom, ![X]: (s(X,b4) <=> ?[Y1]: (X = Y1 | p2(X,Y1)))).\n"
      "fof(e, axiom, ~?[X,Y]: p2(X,Y)).\n"
      "fof(t, axiom, s(n0,s0)).\n"
      "fof(u, axiom, ![X]: t(X,X)).\n"
      "tff(una, axiom, $distinct(n0,s0,b0,b4)).\n";
  for (const char* phase : {"preprocessed", "finite"})
    EXPECT_NE(run(defined, std::string("--cpu-limit=10 --only=") + phase)
                  .out.find("SZS status Satisfiable"),
              std::string::npos)
        << phase;
  auto clash = run("fof(a, axiom, p).\nfof(b, axiom, ~p).\n",
                   "--cpu-limit=2 --only=finite");
  EXPECT_NE(clash.out.find("SZS status GaveUp"), std::string::npos) << clash.out;
  // Needs more elements than the search tries: every domain size fails.
  auto infinite = run(
      "fof(f, axiom, ![X]: ~r(X,X)).\n"
      "fof(g, axiom, ![X,Y,Z]: ((r(X,Y) & r(Y,Z)) => r(X,Z))).\n"
      "fof(h, axiom, ![X]: ?[Y]: r(X,Y)).\n",
      "--cpu-limit=3 --only=finite");
  EXPECT_EQ(infinite.out.find("SZS status Satisfiable"), std::string::npos)
      << infinite.out;
  EXPECT_EQ(run("fof(a, axiom, p).\n", "--only=magic").code, 2);
}

TEST_F(Ztptp, DumpsSmtLibWithDefaultQuantifierWeight) {
  auto r = run("fof(a, axiom, ![X]: ?[Y]: p(X,Y)).\n", "--smt2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(declare-sort U 0)"), std::string::npos);
  EXPECT_NE(r.out.find("forall"), std::string::npos);
  EXPECT_EQ(r.out.find(":weight"), std::string::npos) << r.out;
}

#endif
