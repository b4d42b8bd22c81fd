#include <gtest/gtest.h>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

namespace {

const std::string kFixtures = AWFSLAB_FIXTURE_DIR;

const gen::CorpusParams kSmall{{4, 30}, true};

}  // namespace

TEST(Lifting, IdentityFibrationFillerIsTheBottomEdge) {
    SplitReflection r = samples::endpoint_reflection();
    CatRef z = fixtures::bz2();
    Functor Y = constant_functor(r.big(), z, 0);
    Square s{r.R, identity_functor(z), Y * r.R, Y};
    EXPECT_EQ(canonical_lift(r, identity_fibration(z), s), Y);
    Functor id = identity_functor(r.big());
    EXPECT_EQ(canonical_lift(r, identity_fibration(r.big()), Square{r.R, id, r.R, id}), id);
}

TEST(Lifting, FillerRestrictsToTheTopEdge) {
    for (bool twisted : {false, true}) {
        auto s = samples::endpoint_against_bz2(twisted);
        Functor phi = canonical_lift(s.refl, s.fib, s.problem);
        EXPECT_EQ(phi * s.refl.R, s.problem.top);
        EXPECT_EQ(s.fib.p * phi, s.problem.bottom);
    }
}

TEST(Lifting, FixtureFillerIsAnOracleMember) {
    auto refl = io::expect<SplitReflection>(io::parse(kFixtures + "/endpoint.json"), "reflection");
    auto fib = io::expect<SplitFibration>(io::parse(kFixtures + "/interval_over_bz2.json"), "fibration");
    for (const char* name : {"/lift_untwisted.json", "/lift_twisted.json"}) {
        auto problem = io::expect<Square>(io::parse(kFixtures + name), "square");
        FillerSet fs = enumerate_fillers(problem);
        EXPECT_EQ(fs.fillers.size(), 2u) << name;
        EXPECT_TRUE(fs.contains(canonical_lift(refl, fib, problem))) << name;
    }
}

TEST(Lifting, GeneratedProblemsAreOracleMembers) {
    for (const auto& c : gen::lift_corpus(3, 30, kSmall)) {
        Functor phi = canonical_lift(c.refl, c.fib, c.problem);
        EXPECT_TRUE(enumerate_fillers(c.problem).contains(phi));
    }
}

TEST(Lifting, Preconditions) {
    auto s = samples::endpoint_against_bz2(true);
    SplitFibration op = fibration_opfibration_convert(s.fib);
    EXPECT_EQ(raised([&] { canonical_lift(s.refl, op, s.problem); }), ErrorKind::OrientationMismatch);
    const CatRef& I = s.refl.big();
    Functor id_i = identity_functor(I);
    Square bent{s.refl.R, id_i, fixtures::point(I, I->object("a")), id_i};
    EXPECT_EQ(raised([&] { canonical_lift(s.refl, identity_fibration(I), bent); }),
              ErrorKind::NonCommutingProblem);
    SplitReflection id = identity_reflection(s.refl.big());
    EXPECT_EQ(raised([&] { canonical_lift(id, s.fib, s.problem); }), ErrorKind::BoundaryMismatch);
}

TEST(Lifting, CanonicalOperationSatisfiesBothLaws) {
    auto op = canonical_lifting_operation();
    EXPECT_TRUE(check_horizontal_law(op, gen::horizontal_corpus(11, 30, kSmall)).ok());
    EXPECT_TRUE(check_vertical_law(op, gen::vertical_corpus(12, 30, kSmall)).ok());
}

TEST(Lifting, ArbitraryFillerIsDetected) {
    const gen::CorpusParams cp{{5, 40}, true};
    auto op = arbitrary_filler_operation(0);
    auto h = check_horizontal_law(op, gen::horizontal_corpus(1, 100, cp));
    auto v = check_vertical_law(op, gen::vertical_corpus(2, 100, cp));
    EXPECT_FALSE(h.ok() && v.ok());
}

TEST(Lifting, SlicedOverTerminal) {
    auto op = slice_lifting_operation(canonical_lifting_operation(), fixtures::terminal());
    std::vector<SlicedHorizontalCase> hc;
    for (const auto& c : gen::horizontal_corpus(13, 20, kSmall))
        hc.push_back({c, fixtures::to_terminal(c.f.big()), fixtures::to_terminal(c.g2.base())});
    EXPECT_TRUE(check_horizontal_law(op, hc).ok());
    auto vc = gen::vertical_corpus(14, 20, kSmall);
    std::vector<Functor> ext;
    for (const auto& c : vc) ext.push_back(fixtures::to_terminal(c.g2.base()));
    EXPECT_TRUE(check_vertical_law(op, vc, ext).ok());
}

TEST(Lifting, SlicedOverBz2) {
    CatRef z = fixtures::bz2();
    auto op = slice_lifting_operation(canonical_lifting_operation(), z);
    for (bool twisted : {false, true}) {
        auto s = samples::endpoint_against_bz2(twisted);
        Functor b = identity_functor(s.fib.base());
        SliceMorphism phi = op.assign({s.refl, b * s.problem.bottom}, {s.fib, b}, s.problem);
        EXPECT_EQ(phi.f, canonical_lift(s.refl, s.fib, s.problem));
        EXPECT_EQ(phi.a, s.fib.p);
    }
    auto vc = gen::vertical_corpus(15, 20, kSmall);
    std::vector<Functor> ext;
    for (const auto& c : vc) ext.push_back(constant_functor(c.g2.base(), z, 0));
    EXPECT_TRUE(check_vertical_law(op, vc, ext).ok());
}

TEST(Lifting, SlicedExtensionMismatch) {
    auto s = samples::endpoint_against_bz2(true);
    auto op = slice_lifting_operation(canonical_lifting_operation(), fixtures::bz2());
    Functor b = identity_functor(s.fib.base());
    Functor wrong = constant_functor(s.refl.big(), s.fib.base(), 0);
    EXPECT_EQ(raised([&] { op.assign({s.refl, wrong}, {s.fib, b}, s.problem); }), ErrorKind::ExtensionMismatch);
    auto over_point = slice_lifting_operation(canonical_lifting_operation(), fixtures::terminal());
    EXPECT_EQ(raised([&] { over_point.assign({s.refl, s.problem.bottom}, {s.fib, b}, s.problem); }),
              ErrorKind::ExtensionMismatch);
}
