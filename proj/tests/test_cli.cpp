#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "eqhom/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = eqhom::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(EQHOM_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
    std::string path = testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, HomologyOfTorus) {
    auto r = run({"homology", fx("t2.cplx")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "H0 = Z^1\nH1 = Z^2\nH2 = Z^1\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CohomologyOfProjectivePlane) {
    auto r = run({"cohomology", fx("rp2.cplx")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "H^0 = Z^1\nH^1 = 0\nH^2 = Z/2\n");
}

TEST(Cli, TwistedCoefficients) {
    auto coeff = temp_file("aug.coeff", "kind: augmentation\n");
    auto r = run({"homology", fx("rp3.cplx"), "--coeff", coeff});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "H0 = Z/2\nH1 = 0\nH2 = Z/2\nH3 = 0\n");
    auto pd = run({"pd-check", fx("rp3.cplx"), "--coeff", coeff});
    EXPECT_EQ(pd.code, 0);
    EXPECT_TRUE(contains(pd.out, "PD OK"));
}

TEST(Cli, GroupHomologyBothMethods) {
    auto r = run({"group-homology", fx("z2.pres"), "--n", "3", "--method", "both"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "bar: H3 = Z/2\nshift: H3 = Z/2\nAGREE\n");
    auto s = run({"group-homology", fx("sym3.pres"), "--n", "3", "--method", "shift"});
    EXPECT_EQ(s.out, "shift: H3 = Z/6\n");
}

TEST(Cli, ShiftChain) {
    auto r = run({"shift-chain", fx("z2.pres"), "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "H3(pi; I^0) = Z/2\nH2(pi; I^1) = Z/2\nH1(pi; I^2) = Z/2\nEQUAL\n");
}

TEST(Cli, PonziFeasible) {
    auto r = run({"ponzi", "f2", "--radius", "4", "--bound", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "FEASIBLE\n"));
    EXPECT_TRUE(contains(r.out, "certificate = verified"));
}

TEST(Cli, PonziInfeasibleIsNotAnError) {
    auto r = run({"ponzi", "z2", "--radius", "6", "--bound", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "INFEASIBLE\n"));
    EXPECT_TRUE(contains(r.out, "(verified)"));
}

TEST(Cli, MinBoundAndFolner) {
    auto r = run({"min-bound", "z2", "--radius", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "t_min = 2\n"));
    auto f = run({"folner", "f2", "--radius", "2"});
    EXPECT_EQ(f.out,
              "R = 1: inner = 1, crossing = 4, ratio = 1/4, flux bound = 1\n"
              "R = 2: inner = 5, crossing = 12, ratio = 5/12, flux bound = 1\n");
    auto b = run({"ball", "z^3", "--radius", "2"});
    EXPECT_TRUE(contains(b.out, "vertices = 25\n"));
}

TEST(Cli, CoverAndPi1) {
    auto c = run({"cover", fx("rp2.cplx")});
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(contains(c.out, "group order = 2\n"));
    EXPECT_TRUE(contains(c.out, "cells0 = 12 (6 x 2)\n"));
    EXPECT_TRUE(contains(c.out, "cover H2 = Z^1\n"));
    auto p = run({"pi1", fx("rp2.cplx")});
    EXPECT_TRUE(contains(p.out, "order = 2\n"));
    auto t = run({"pi1", fx("t2.cplx"), "--max-cosets", "200"});
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(contains(t.out, "order = unknown"));
}

TEST(Cli, EssentialityAndPert) {
    auto e = run({"essential", fx("rp3.cplx")});
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(contains(e.out, "ESSENTIAL\n"));
    EXPECT_FALSE(contains(e.out, "INESSENTIAL"));
    auto b = run({"bs-class", fx("rp3.cplx"), "--power", "3"});
    EXPECT_EQ(b.out, "H^3(M; I^3) = Z/2\nclass = (1)\n");
    auto p = run({"pert", fx("rp3.cplx"), "--power", "3"});
    EXPECT_EQ(p.out, "H^3(cover; Z^1) = Z^1\npert = (0)\n");
}

TEST(Cli, GromovReport) {
    auto r = run({"gromov-report", "--rank", "5", "--radius", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "[H_n(Z^n)]"));
    EXPECT_TRUE(contains(r.out, "[F2 ponzi]"));
    EXPECT_TRUE(contains(r.out, "[tensor argument]"));
    auto kv = run({"gromov-report", "--rank", "5", "--radius", "4", "--format", "kv"});
    EXPECT_TRUE(contains(kv.out, "verdict = certified\n"));
    auto z = run({"gromov-report", "--rank", "5", "--radius", "4", "--factor", "z2"});
    EXPECT_EQ(z.code, 2);
    EXPECT_TRUE(contains(z.out, "verdict: declined"));
}

TEST(Cli, DeterministicOutput) {
    auto a = run({"gromov-report", "--rank", "4", "--radius", "3", "--format", "kv"});
    auto b = run({"gromov-report", "--rank", "4", "--radius", "3", "--format", "kv"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
    for (auto args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"homology"},
             {"homology", fx("t2.cplx"), "--bogus"},
             {"group-homology", fx("z2.pres"), "--n", "2", "--method", "magic"},
             {"homology", "/nonexistent/file.cplx"},
         }) {
        auto r = run(args);
        EXPECT_EQ(r.code, 1);
        EXPECT_EQ(r.err.rfind("error:", 0), 0u) << r.err;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    }
}

TEST(Cli, ParseErrorsInInputs) {
    auto bad = temp_file("bad.cplx", "f 0 1\nq 2\n");
    auto r = run({"homology", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: parse:", 0), 0u);
    auto g = run({"ball", "q7", "--radius", "2"});
    EXPECT_EQ(g.code, 1);
}

TEST(Cli, PreconditionFailures) {
    auto r = run({"essential", fx("rp2.cplx")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: precondition:", 0), 0u);
    EXPECT_EQ(run({"cover", fx("t2.cplx"), "--max-cosets", "200"}).code, 2);
    EXPECT_EQ(run({"ball", "f2", "--radius", "2", "--bogus"}).code, 1);
}

TEST(Cli, BudgetExceeded) {
    auto r = run({"group-homology", fx("sym3.pres"), "--n", "8", "--method", "bar"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(r.err.rfind("error: budget:", 0), 0u);
}

TEST(Cli, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "gromov-report"));
}
