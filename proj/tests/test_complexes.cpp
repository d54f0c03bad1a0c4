#include <gtest/gtest.h>

#include <sstream>

#include "eqhom/cover.hpp"
#include "eqhom/group_homology.hpp"
#include "oracles.hpp"

using namespace eqhom;

namespace {

std::shared_ptr<const SimplicialComplex> load(const std::string& name) {
    return std::make_shared<SimplicialComplex>(load_complex(oracle::fixture(name + ".cplx")));
}

std::vector<std::string> render(const std::vector<AbelianGroupInvariants>& hs, const char* prefix) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < hs.size(); ++k) out.push_back(prefix + std::to_string(k) + " = " + hs[k].to_string());
    return out;
}

std::vector<std::string> golden(const std::string& name) {
    std::istringstream in(oracle::fixture(name + ".golden"));
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) lines.push_back(l);
    return lines;
}

const std::vector<std::string> kFixtures = {"point", "circle", "s2", "s3", "t2", "t3", "rp2", "rp3"};

}  // namespace

TEST(Complexes, HomologyMatchesGoldens) {
    for (const auto& f : kFixtures) EXPECT_EQ(render(homology(*load(f)), "H"), golden(f)) << f;
}

TEST(Complexes, BettiNumbersOverQ) {
    for (const auto& f : kFixtures) {
        auto k = load(f);
        auto hs = homology(*k);
        for (std::size_t d = 0; d < hs.size(); ++d) {
            std::size_t in = d + 1 < hs.size() ? oracle::rational_rank(k->boundary(d + 1)) : 0;
            std::size_t out = d == 0 ? 0 : oracle::rational_rank(k->boundary(d));
            EXPECT_EQ(hs[d].free_rank, k->count(d) - in - out) << f << " degree " << d;
        }
    }
}

TEST(Complexes, EulerCharacteristic) {
    const std::map<std::string, long long> chi = {{"point", 1}, {"circle", 0}, {"s2", 2}, {"s3", 0},
                                                  {"t2", 0},    {"t3", 0},     {"rp2", 1}, {"rp3", 0}};
    for (const auto& f : kFixtures) {
        auto k = load(f);
        long long alt = 0;
        auto hs = homology(*k);
        for (std::size_t d = 0; d < hs.size(); ++d) alt += (d % 2 ? -1 : 1) * static_cast<long long>(hs[d].free_rank);
        EXPECT_EQ(k->euler_characteristic(), chi.at(f)) << f;
        EXPECT_EQ(alt, chi.at(f)) << f;
    }
}

TEST(Complexes, UniversalCoefficients) {
    for (const auto& f : kFixtures) {
        auto k = load(f);
        auto h = homology(*k);
        auto c = cohomology(*k);
        ASSERT_EQ(h.size(), c.size());
        for (std::size_t d = 0; d < h.size(); ++d) {
            AbelianGroupInvariants expect{h[d].free_rank, d ? h[d - 1].torsion : std::vector<Integer>{}};
            EXPECT_EQ(c[d], expect) << f << " degree " << d;
        }
    }
}

TEST(Complexes, BoundarySquaresToZero) {
    for (const auto& f : kFixtures) EXPECT_TRUE(chain_complex(*load(f)).is_complex()) << f;
}

TEST(Complexes, FacesAreClosedUnderSubsets) {
    SimplicialComplex k(std::vector<Simplex>{{0, 1, 2}, {2, 3}});
    EXPECT_EQ(k.count(0), 4u);
    EXPECT_EQ(k.count(1), 4u);
    EXPECT_EQ(k.count(2), 1u);
    EXPECT_EQ(k.maximal_simplices().size(), 2u);
    EXPECT_TRUE(k.find({1, 2}).has_value());
    EXPECT_FALSE(k.find({1, 3}).has_value());
}

TEST(Complexes, LoadErrors) {
    EXPECT_THROW(load_complex(""), ParseError);
    EXPECT_THROW(load_complex("f 0 1\ng 1 2\n"), ParseError);
    EXPECT_THROW(load_complex("f 0 -1\n"), ParseError);
    EXPECT_THROW(load_complex("f 0 x\n"), ParseError);
    EXPECT_THROW(load_complex("f\n"), ParseError);
    EXPECT_THROW(load_complex("orient: manual\nf 0 1\n"), ParseError);
    try {
        load_complex("# c\nf 0 1\nf 1 1 2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("DuplicateVertexInSimplex"), std::string::npos);
    }
    EXPECT_TRUE(parse_complex_file(oracle::fixture("t2.cplx")).orient_auto);
}

TEST(FundamentalGroup, EdgePathPresentation) {
    auto pi = fundamental_group(*load("t2"));
    auto tc = todd_coxeter(pi.presentation, 300);
    EXPECT_TRUE(tc.exceeded());
    // tree edges: |V| - 1
    std::size_t tree = 0;
    for (const auto& g : pi.edge_generator) tree += !g.has_value();
    EXPECT_EQ(tree, load("t2")->vertex_count() - 1);
    EXPECT_EQ(abelianization(pi.presentation).to_string(), "Z^2");
    EXPECT_EQ(abelianization(fundamental_group(*load("rp2")).presentation).to_string(), "Z/2");
    EXPECT_EQ(abelianization(fundamental_group(*load("s3")).presentation).to_string(), "0");
}

TEST(FundamentalGroup, RejectsDisconnected) {
    SimplicialComplex two(std::vector<Simplex>{{0, 1}, {2, 3}});
    EXPECT_THROW(fundamental_group(two), NotConnected);
    EXPECT_THROW(fundamental_group(*load("s2"), 999), PreconditionError);
}

TEST(Cover, ProjectiveSpaces) {
    auto rp2 = build_universal_cover(load("rp2"));
    EXPECT_EQ(rp2.group->order(), 2u);
    EXPECT_EQ(rp2.cover->cell_count(0), 12u);
    EXPECT_EQ(rp2.cover->cell_count(1), 30u);
    EXPECT_EQ(rp2.cover->cell_count(2), 20u);
    EXPECT_EQ(render(rp2.cover->cover_chain_complex().homology(), "H"),
              (std::vector<std::string>{"H0 = Z^1", "H1 = 0", "H2 = Z^1"}));

    auto rp3 = build_universal_cover(load("rp3"));
    EXPECT_EQ(rp3.group->order(), 2u);
    EXPECT_EQ(render(rp3.cover->cover_chain_complex().homology(), "H"),
              (std::vector<std::string>{"H0 = Z^1", "H1 = 0", "H2 = 0", "H3 = Z^1"}));
}

TEST(Cover, EquivariantStructure) {
    for (const char* f : {"rp2", "rp3", "s2"}) {
        auto c = build_universal_cover(load(f));
        EXPECT_TRUE(c.cover->action_is_free()) << f;
        EXPECT_TRUE(c.cover->cover_chain_complex().is_complex()) << f;
        for (std::size_t k = 2; k <= c.cover->dimension(); ++k) EXPECT_TRUE(c.cover->boundary_squares_to_zero(k)) << f;
        for (std::size_t d = 0; d <= c.cover->dimension(); ++d)
            EXPECT_EQ(c.cover->cell_count(d), c.group->order() * load(f)->count(d));
    }
}

TEST(Cover, DeckActionCommutesWithBoundary) {
    auto c = build_universal_cover(load("rp3"));
    auto cc = c.cover->cover_chain_complex();
    for (std::size_t k = 1; k <= 3; ++k) {
        const IntMatrix& d = cc.boundary[k];
        for (std::size_t h = 0; h < c.group->order(); ++h)
            for (std::size_t col = 0; col < d.cols(); ++col)
                for (std::size_t row = 0; row < d.rows(); ++row)
                    EXPECT_EQ(d(row, col), d(c.cover->act(h, row), c.cover->act(h, col)));
    }
}

TEST(Cover, InfiniteGroupsAreRejected) {
    EXPECT_THROW(build_universal_cover(load("t2"), 500), NotFinite);
    auto pi = fundamental_group(*load("t2"));
    EXPECT_THROW(universal_cover(load("t2"), pi, make_free_abelian(2)), NotFinite);
}

TEST(Cover, MismatchedModelIsRejected) {
    auto k = load("rp2");
    auto pi = fundamental_group(*k);
    auto z3 = make_cyclic(3);
    try {
        universal_cover(k, pi, z3);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("PresentationMismatch"), std::string::npos);
    }
}

TEST(LocalCoefficients, TrivialCoefficientsGiveBaseHomology) {
    for (const char* f : {"rp2", "rp3", "s2", "s3"}) {
        auto c = build_universal_cover(load(f));
        EXPECT_EQ(local_homology(*c.cover, trivial_rep(c.group)), homology(*load(f))) << f;
        EXPECT_EQ(local_cohomology(*c.cover, trivial_rep(c.group)), cohomology(*load(f))) << f;
    }
    auto flat = trivial_cover(load("t2"));
    EXPECT_EQ(local_homology(*flat, trivial_rep(flat->group())), homology(*load("t2")));
}

TEST(LocalCoefficients, RegularRepresentationGivesCoverHomology) {
    for (const char* f : {"rp2", "rp3"}) {
        auto c = build_universal_cover(load(f));
        EXPECT_EQ(local_homology(*c.cover, regular_rep(c.group)), c.cover->cover_chain_complex().homology()) << f;
    }
}

TEST(LocalCoefficients, AugmentationIdeal) {
    auto rp2 = build_universal_cover(load("rp2"));
    EXPECT_EQ(render(local_homology(*rp2.cover, augmentation_ideal_rep(rp2.group)), "H"),
              (std::vector<std::string>{"H0 = Z/2", "H1 = 0", "H2 = Z^1"}));
    auto rp3 = build_universal_cover(load("rp3"));
    EXPECT_EQ(render(local_homology(*rp3.cover, augmentation_ideal_rep(rp3.group)), "H"),
              (std::vector<std::string>{"H0 = Z/2", "H1 = 0", "H2 = Z/2", "H3 = 0"}));
    // I ⊗ I is trivial for Z/2
    EXPECT_EQ(local_homology(*rp3.cover, tensor_power(augmentation_ideal_rep(rp3.group), 2)), homology(*load("rp3")));
}

TEST(LocalCoefficients, ComplexesSquareToZero) {
    auto rp3 = build_universal_cover(load("rp3"));
    for (std::size_t p = 0; p <= 2; ++p) {
        auto l = tensor_power(augmentation_ideal_rep(rp3.group), p);
        EXPECT_TRUE(twisted_chain_complex(*rp3.cover, l).is_complex());
        EXPECT_TRUE(twisted_cochain_complex(*rp3.cover, l).is_complex());
    }
}

TEST(LocalCoefficients, ForeignGroupRejected) {
    auto rp2 = build_universal_cover(load("rp2"));
    EXPECT_THROW(local_homology(*rp2.cover, trivial_rep(make_cyclic(3))), ModelMismatch);
}
