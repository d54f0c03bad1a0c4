#include <gtest/gtest.h>

#include "eqhom/group_homology.hpp"
#include "eqhom/todd_coxeter.hpp"
#include "oracles.hpp"

using namespace eqhom;

namespace {

GroupModelPtr load(const std::string& name) {
    return *todd_coxeter(parse_presentation(oracle::fixture(name + ".pres")), 1000).model;
}

// H_n(Z/m; Z) for n >= 1
std::string cyclic_homology(int m, std::size_t n) { return n % 2 ? "Z/" + std::to_string(m) : "0"; }

}  // namespace

TEST(BarHomology, CyclicGroups) {
    for (int m : {2, 3, 4}) {
        auto g = load("z" + std::to_string(m));
        EXPECT_EQ(bar_homology(g, 0).to_string(), "Z^1");
        for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(bar_homology(g, n).to_string(), cyclic_homology(m, n)) << m << " " << n;
    }
    auto c5 = make_cyclic(5);
    for (std::size_t n = 1; n <= 2; ++n) EXPECT_EQ(bar_homology(c5, n).to_string(), cyclic_homology(5, n));
}

TEST(BarHomology, KleinFourGroup) {
    auto g = load("z2xz2");
    EXPECT_EQ(bar_homology(g, 1).to_string(), "Z/2 + Z/2");
    EXPECT_EQ(bar_homology(g, 2).to_string(), "Z/2");
    EXPECT_EQ(bar_homology(g, 3).to_string(), "Z/2 + Z/2 + Z/2");
}

TEST(BarHomology, SymmetricGroup) {
    auto g = load("sym3");
    EXPECT_EQ(bar_homology(g, 1).to_string(), "Z/2");
    EXPECT_EQ(bar_homology(g, 2).to_string(), "0");
    EXPECT_EQ(bar_homology(g, 3).to_string(), "Z/6");
}

TEST(BarHomology, TorsionKilledByOrder) {
    for (const char* f : {"z2", "z3", "z4", "z2xz2", "sym3"}) {
        auto g = load(f);
        for (std::size_t n = 1; n <= 3; ++n) {
            auto h = bar_homology(g, n);
            EXPECT_EQ(h.free_rank, 0u);
            for (const auto& t : h.torsion) EXPECT_EQ(Integer(Integer(g->order()) % t), 0) << f << " " << n;
        }
    }
}

TEST(BarHomology, ComplexIsExactChainComplex) {
    auto g = load("sym3");
    EXPECT_TRUE(bar_complex(*g, 3, trivial_rep(g)).is_complex());
    EXPECT_TRUE(bar_complex(*g, 3, augmentation_ideal_rep(g)).is_complex());
    auto z4 = load("z4");
    EXPECT_TRUE(bar_complex(*z4, 4, regular_rep(z4)).is_complex());
}

TEST(BarHomology, FreeModuleIsAcyclic) {
    for (const char* f : {"z3", "z2xz2"}) {
        auto g = load(f);
        EXPECT_EQ(bar_homology(*g, 0, regular_rep(g)).to_string(), "Z^1");
        for (std::size_t n = 1; n <= 2; ++n) EXPECT_TRUE(bar_homology(*g, n, regular_rep(g)).is_trivial()) << f;
    }
}

TEST(BarHomology, DegreeZeroIsCoinvariants) {
    auto g = load("z4");
    auto l = augmentation_ideal_rep(g);
    EXPECT_EQ(bar_homology(*g, 0, l), coinvariants(l));
}

TEST(BarHomology, BudgetIsEnforced) {
    auto g = load("sym3");
    EXPECT_THROW(bar_homology(g, 3, Budget{10, 5'000'000}), BudgetExceeded);
    EXPECT_THROW(bar_homology(g, 3, Budget{20000, 1000}), BudgetExceeded);
    EXPECT_THROW(shift_homology(g, 3, InclusionFactor::last, Budget{10, 5'000'000}), BudgetExceeded);
    EXPECT_THROW(bar_homology(*g, 1, trivial_rep(make_cyclic(6))), ModelMismatch);
}

TEST(Coinvariants, Examples) {
    auto z2 = load("z2");
    EXPECT_EQ(coinvariants(trivial_rep(z2)).to_string(), "Z^1");
    EXPECT_EQ(coinvariants(augmentation_ideal_rep(z2)).to_string(), "Z/2");
    EXPECT_EQ(coinvariants(regular_rep(z2)).to_string(), "Z^1");
    // I/I^2 is the abelianization
    for (const char* f : {"z3", "z4", "z2xz2", "sym3"}) {
        auto g = load(f);
        EXPECT_EQ(coinvariants(augmentation_ideal_rep(g)), abelianization(parse_presentation(oracle::fixture(std::string(f) + ".pres"))))
            << f;
    }
}

TEST(ShiftHomology, AgreesWithBar) {
    for (const char* f : {"z2", "z3", "z4", "z2xz2", "sym3"}) {
        auto g = load(f);
        for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(shift_homology(g, n), bar_homology(g, n)) << f << " n=" << n;
    }
}

TEST(ShiftHomology, FirstFactorInclusionAgrees) {
    for (const char* f : {"z2", "z3", "z2xz2", "sym3"}) {
        auto g = load(f);
        for (std::size_t n = 1; n <= 3; ++n)
            EXPECT_EQ(shift_homology(g, n, InclusionFactor::first), shift_homology(g, n, InclusionFactor::last)) << f << n;
    }
}

TEST(ShiftHomology, RejectsDegreeZero) { EXPECT_THROW(shift_homology(load("z2"), 0), PreconditionError); }

TEST(ShiftChain, AllTermsEqual) {
    for (const char* f : {"z2", "z3", "z2xz2"}) {
        auto r = shift_chain_check(load(f), 3);
        ASSERT_EQ(r.values.size(), 3u);
        EXPECT_TRUE(r.all_equal()) << f;
    }
    auto r = shift_chain_check(load("sym3"), 2);
    EXPECT_TRUE(r.all_equal());
    EXPECT_EQ(r.values[0].to_string(), "0");
    EXPECT_THROW(shift_chain_check(load("z2"), 0), PreconditionError);
}

TEST(ProjectiveVanishing, TensorWithRegularIsAcyclic) {
    for (const char* f : {"z2", "z3", "z2xz2"}) {
        auto g = load(f);
        for (std::size_t k = 1; k <= 2; ++k) EXPECT_TRUE(projective_vanishing_check(g, k, 2).all_zero()) << f << k;
    }
    EXPECT_THROW(projective_vanishing_check(load("z2"), 0, 1), PreconditionError);
}

TEST(Abelianization, FromPresentations) {
    EXPECT_EQ(abelianization(parse_presentation("gens: a b\nrels: aaaa aab'b' bab'a\n")).to_string(), "Z/2 + Z/2");
    EXPECT_EQ(abelianization(parse_presentation("gens: a b\nrels: aba'b'\n")).to_string(), "Z^2");
    EXPECT_EQ(abelianization(parse_presentation("gens: a\nrels: aaaaaa\n")).to_string(), "Z/6");
}
