#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace plumbook;

namespace {

PageCensus census_of(const fixtures::TreeFixture& f) {
    PlumbingTree t = fixtures::tree(f);
    Decomposition d = fixtures::decomposition(f);
    return page_census(build_open_book(t, d, assemble_diagram(t, d)));
}

}  // namespace

TEST(Ribbon, CensusOfSmallPages) {
    RibbonPage disk;
    EXPECT_EQ(disk.boundary_components(), 1u);
    RibbonPage annulus;
    annulus.add_band(0, 0);
    EXPECT_EQ(annulus.census().genus, 0u);
    EXPECT_EQ(annulus.census().boundary, 2u);
    RibbonPage torus;  // feet a b a b
    torus.add_band(0, 0);
    torus.add_band(1, 2);
    EXPECT_EQ(torus.feet(), (std::vector<std::size_t>{0, 1, 0, 1}));
    EXPECT_EQ(torus.census().genus, 1u);
    EXPECT_EQ(torus.census().boundary, 1u);
    EXPECT_EQ(torus.intersection(0, 1), 1);
    EXPECT_EQ(torus.intersection(1, 0), -1);
    EXPECT_TRUE(torus.intersection_form().is_skew());
}

TEST(Ribbon, EulerCharacteristicIdentity) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        RibbonPage p;
        std::size_t bands = 1 + rng() % 8;
        for (std::size_t b = 0; b < bands; ++b) {
            std::size_t m = p.feet().size();
            std::size_t x = rng() % (m + 1), y = rng() % (m + 1);
            p.add_band(std::min(x, y), std::max(x, y));
        }
        PageCensus c = p.census();
        EXPECT_EQ(2 - 2 * static_cast<long long>(c.genus) - static_cast<long long>(c.boundary), c.euler_characteristic);
        // rank of the intersection form is twice the genus
        AbelianGroup g = cokernel(p.intersection_form());
        EXPECT_EQ(g.free_rank, c.boundary - 1);
    }
}

TEST(OpenBook, HopfBaseIsSphere) {
    AbstractOpenBook b = base_hopf_book();
    EXPECT_EQ(page_census(b).genus, 0u);
    EXPECT_EQ(page_census(b).boundary, 2u);
    ASSERT_EQ(b.monodromy.size(), 1u);
    EXPECT_TRUE(variation_h1(b).cokernel().trivial());
    EXPECT_TRUE(oracle::monodromy_h1(b).trivial());
}

TEST(OpenBook, PlanarStabilizationAddsBoundary) {
    AbstractOpenBook b = base_hopf_book();
    for (int k = 0; k < 3; ++k) {
        auto before = page_census(b);
        planar_stabilize(b, b.page.foot(0).second + 1);
        auto after = page_census(b);
        EXPECT_EQ(after.genus, before.genus);
        EXPECT_EQ(after.boundary, before.boundary + 1);
        EXPECT_TRUE(variation_h1(b).cokernel().trivial());
    }
}

TEST(OpenBook, StabHookAddsGenusOnce) {
    AbstractOpenBook b = base_hopf_book();
    ClassVector K = unit_class(1, 0);
    StabHookResult r = stab_hook(b, K, 0);
    EXPECT_EQ(page_census(b).genus, 1u);
    EXPECT_EQ(page_census(b).boundary, 1u);
    EXPECT_EQ(r.k_plus, (ClassVector{1, 1}));
    EXPECT_EQ(r.k_minus, (ClassVector{1, -1}));
    EXPECT_EQ(std::llabs(b.page.intersection(0, r.band)), 1);
    EXPECT_TRUE(variation_h1(b).cokernel().trivial());
    // a second hook across the same band leaves the genus alone
    stab_hook(b, r.k_plus, 0);
    EXPECT_EQ(page_census(b).genus, 1u);
    EXPECT_EQ(page_census(b).boundary, 2u);
    EXPECT_THROW((void)stab_hook(b, ClassVector{0, 1, 0}, 0), std::invalid_argument);
}

TEST(OpenBook, FixtureCensus) {
    auto e8 = census_of(fixtures::e8());
    EXPECT_EQ(e8.genus, 1u);
    EXPECT_EQ(e8.boundary, 1u);
    auto s4 = census_of(fixtures::star4());
    EXPECT_EQ(s4.genus, 1u);
    EXPECT_EQ(s4.boundary, 2u);
    auto b9 = census_of(fixtures::branched9_two_stage());
    EXPECT_EQ(b9.genus, 2u);
    EXPECT_EQ(b9.boundary, 1u);
    auto b9x = census_of(fixtures::branched9());
    EXPECT_EQ(b9x.genus, 1u);
}

TEST(OpenBook, FixtureWords) {
    EXPECT_EQ(fixtures::labelled_book(fixtures::e8()).word, parse_word(fixtures::e8_reference_word()));
    EXPECT_EQ(fixtures::labelled_book(fixtures::star4()).word, parse_word(fixtures::star4_reference_word()));
    EXPECT_EQ(format_twists(fixtures::labelled_book(fixtures::branched9_two_stage()).word),
              "t_a4 t_a3 t_b2^2 t_c1^2 t_b1^2 t_a1^2 t_a2 t_a3 t_a4");
}

TEST(OpenBook, Branched9ReferenceWordPresentsAnotherGroup) {
    auto lb = fixtures::labelled_book(fixtures::branched9_two_stage());
    AbelianGroup want = cokernel(fixtures::tree(fixtures::branched9()).intersection_matrix());
    EXPECT_EQ(variation_h1(lb.algebra, lb.word).cokernel(), want);
    TwistWord ref = parse_word(fixtures::branched9_reference_word());
    EXPECT_EQ(variation_h1(lb.algebra, ref).cokernel().str(), "Z/2");
}

TEST(OpenBook, RandomTreesCertify) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 150; ++k) {
        PlumbingTree t = random_tree(1 + rng() % 10, rng);
        for (bool greedy : {false, true}) {
            Pipeline p = run_pipeline(t, greedy);
            Certificate c = certify(p);
            EXPECT_TRUE(c.ok()) << to_dsl(t);
            EXPECT_EQ(oracle::monodromy_h1(p.book), c.plumbing) << to_dsl(t);
            EXPECT_EQ(c.census.genus, c.bad_stages);
            if (!greedy) EXPECT_EQ(c.census.genus, p.genus.genus);
            EXPECT_EQ(p.book.monodromy.size(), t.size() + p.book.dim());
        }
    }
}

TEST(OpenBook, ProvenanceAndDot) {
    PlumbingTree t = fixtures::tree(fixtures::e8());
    Pipeline p = run_pipeline(t);
    std::size_t surgery = 0;
    for (const auto& l : p.book.monodromy) surgery += l.source == LetterSource::surgery ? 1 : 0;
    EXPECT_EQ(surgery, t.size());
    std::string dot = page_dot(p.book);
    EXPECT_EQ(dot.rfind("graph page {", 0), 0u);
}

TEST(OpenBook, RejectsForeignDiagram) {
    PlumbingTree t = fixtures::tree(fixtures::branched9());
    Decomposition exact = genus(t).witness;
    Decomposition two = fixtures::decomposition(fixtures::branched9_two_stage());
    EXPECT_THROW((void)build_open_book(t, two, assemble_diagram(t, exact)), DecompositionError);
}
