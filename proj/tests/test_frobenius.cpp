#include <gtest/gtest.h>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

namespace {

const std::string kFixtures = AWFSLAB_FIXTURE_DIR;

/// A functor between codiscrete groupoids given by its object map.
Functor codiscrete_map(const CatRef& src, const CatRef& dst, std::vector<Obj> objs) {
    Functor f{src, dst, std::move(objs), {}};
    for (Mor m = 0; m < static_cast<Mor>(src->morphism_count()); ++m)
        f.mor.push_back(dst->hom(f.o(src->dom(m)), f.o(src->cod(m))).front());
    return f;
}

/// r1: 𝟙 → {b, c} picking c and r2: {b, c} → {a, b, c} the inclusion.
struct Tower {
    SplitReflection r1;
    SplitReflection r2;
};

Tower three_stage() {
    CatRef one = fixtures::terminal();
    CatRef T = fixtures::codiscrete({"b", "c"});
    CatRef V = fixtures::codiscrete({"a", "b", "c"});
    SplitReflection r1 = make_reflection(fixtures::point(T, 1), fixtures::to_terminal(T),
                                         {T->hom(0, 1).front(), T->identity(1)});
    SplitReflection r2 = make_reflection(codiscrete_map(T, V, {1, 2}), codiscrete_map(V, T, {0, 0, 1}),
                                         {V->hom(0, 1).front(), V->identity(1), V->identity(2)});
    return {r1, r2};
}

/// {a, b, c} → BZ₃ sending x → y to g^(y - x).
Functor potential(const CatRef& V, const CatRef& z3) {
    const std::vector<std::string> names{"e", "g", "g2"};
    Functor U{V, z3, {0, 0, 0}, {}};
    for (Mor m = 0; m < static_cast<Mor>(V->morphism_count()); ++m)
        U.mor.push_back(z3->morphism(names[(V->cod(m) - V->dom(m) + 3) % 3]));
    return U;
}

SplitFibration interval_over_bz2() {
    return samples::projection(fixtures::interval(), fixtures::bz2(), Orientation::cocartesian);
}

}  // namespace

TEST(Frobenius, SectionIsFixedByTheRetraction) {
    SplitFibration P = samples::projection(fixtures::bz2(), fixtures::interval(), Orientation::cocartesian);
    SplitReflection r = samples::endpoint_reflection();
    FrobeniusTransport t = frobenius_transport(P, r, identity_functor(r.big()));
    EXPECT_TRUE(validate_frobenius_transport(t).ok());
    for (auto [a, d] : t.small.obj_pairs) {
        Obj x = t.big.object_of(a, r.R.o(d));
        ASSERT_NE(x, kNone);
        EXPECT_EQ(t.F.o(x), a);
    }
}

TEST(Frobenius, IdentityReflectionTransportsToIdentity) {
    SplitFibration P = interval_over_bz2();
    CatRef z = P.base();
    FrobeniusTransport t = frobenius_transport(P, identity_reflection(z), identity_functor(z));
    EXPECT_TRUE(validate_frobenius_transport(t).ok());
    EXPECT_EQ(t.reflection.R, identity_functor(t.big.cat));
    EXPECT_EQ(t.reflection.L, identity_functor(t.small.cat));
    EXPECT_EQ(t.reflection.theta, identity_nat(identity_functor(t.big.cat)));
}

TEST(Frobenius, TransportedSectionLiftsAgainstP) {
    auto P = io::expect<SplitFibration>(io::parse(kFixtures + "/bz2_over_interval.json"), "fibration");
    auto r = io::expect<SplitReflection>(io::parse(kFixtures + "/endpoint.json"), "reflection");
    Functor U = identity_functor(r.big());
    FrobeniusTransport t = frobenius_transport(P, r, U);
    ASSERT_TRUE(validate_frobenius_transport(t).ok());
    SplitFibration Pc = oriented(P, Orientation::cartesian);
    Square problem{t.reflection.R, Pc.p, t.small.left, U * t.big.right};
    ASSERT_TRUE(validate_square(problem).ok());
    Functor phi = canonical_lift(t.reflection, Pc, problem);
    EXPECT_TRUE(enumerate_fillers(problem).contains(phi));
}

TEST(Frobenius, ConstructionRequiresAnOpfibration) {
    SplitFibration P = samples::projection(fixtures::chain(2), fixtures::terminal());
    SplitReflection r = identity_reflection(fixtures::terminal());
    EXPECT_EQ(raised([&] { frobenius_transport(P, r, identity_functor(fixtures::terminal())); }),
              ErrorKind::OrientationMismatch);
    SplitFibration Q = interval_over_bz2();
    EXPECT_EQ(raised([&] { frobenius_transport(Q, samples::endpoint_reflection(), Q.p); }),
              ErrorKind::ExtensionMismatch);
}

TEST(Frobenius, PreservesSquares) {
    SplitFibration P = interval_over_bz2();
    SplitReflection r = samples::endpoint_reflection();
    Functor U = constant_functor(r.big(), P.base(), 0);
    Functor id_s = identity_functor(r.small());
    Functor id_t = identity_functor(r.big());
    EXPECT_TRUE(frobenius_preserves_squares(P, reflection_square(r, r, id_s, id_t), U, U).ok());
    for (const auto& c : gen::frobenius_corpus(21, 10, {{4, 30}, true}))
        EXPECT_TRUE(frobenius_preserves_squares(c.P, c.square, c.refl.U, c.U2).ok());
}

TEST(Frobenius, BrokenExtensionIsRefused) {
    SplitFibration P = interval_over_bz2();
    SplitReflection r = samples::endpoint_reflection();
    const CatRef& I = r.big();
    Functor U = constant_functor(I, P.base(), 0);
    Functor twisted{I, P.base(), {0, 0}, {}};
    for (Mor m = 0; m < static_cast<Mor>(I->morphism_count()); ++m)
        twisted.mor.push_back(I->is_identity(m) ? P.base()->identity(0) : P.base()->morphism("s"));
    auto sq = reflection_square(r, r, identity_functor(r.small()), identity_functor(I));
    EXPECT_EQ(raised([&] { frobenius_preserves_squares(P, sq, U, twisted); }), ErrorKind::ExtensionMismatch);
}

TEST(Frobenius, PreservesComposition) {
    Tower tw = three_stage();
    ASSERT_TRUE(validate_split_reflection(tw.r1).ok());
    ASSERT_TRUE(validate_split_reflection(tw.r2).ok());
    CatRef z3 = fixtures::cyclic(3);
    Functor U = potential(tw.r2.big(), z3);
    ASSERT_TRUE(validate_functor(U).ok());
    SplitFibration P = samples::projection(z3, z3);
    EXPECT_TRUE(frobenius_preserves_composition(P, tw.r1, tw.r2, U).ok());
    SplitReflection id = identity_reflection(tw.r2.big());
    EXPECT_TRUE(frobenius_preserves_composition(P, tw.r2, id, U).ok());
    for (const auto& c : gen::frobenius_corpus(22, 10, {{4, 30}, true}))
        EXPECT_TRUE(frobenius_preserves_composition(c.P, c.r1, c.r2, c.V).ok());
}

TEST(Frobenius, BrokenSplittingFailsTheUnitEquation) {
    Tower tw = three_stage();
    CatRef z3 = fixtures::cyclic(3);
    Functor U = potential(tw.r2.big(), z3);
    SplitFibration P = samples::projection(z3, z3);
    SplitFibration broken = with_lift(P, 0, z3->morphism("g"), P.total()->morphism("(g,g)"));
    ASSERT_FALSE(validate_split_fibration(broken).ok());
    ValidationReport rep = frobenius_preserves_composition(broken, tw.r1, tw.r2, U);
    EXPECT_TRUE(rep.has("θ″")) << rep.summary();
}

TEST(Frobenius, StrongChecksOnIdentityCorpus) {
    SplitFibration P = interval_over_bz2();
    const CatRef& A = P.total();
    EXPECT_TRUE(strong_frobenius_checks(P, {{identity_reflection(A), identity_functor(A)}}).ok());
}

// The endpoint reflection extended into 𝕀 × BZ₂ over BZ₂: P sends θ_a to an
// identity, so its lift leaves (a, *) in place while U∘R∘L moves it to (b, *).
TEST(Frobenius, StrongClaimFailsOnEndpointReflection) {
    SplitFibration P = interval_over_bz2();
    SplitReflection r = samples::endpoint_reflection();
    Pullback pb = pullback_category(fixtures::to_terminal(r.big()), fixtures::to_terminal(P.base()));
    Functor U = pb.induced(identity_functor(r.big()), constant_functor(r.big(), P.base(), 0));
    ASSERT_TRUE(same_category(U.dst, P.total()));
    ValidationReport rep = strong_frobenius_checks(P, {{r, U}});
    EXPECT_TRUE(rep.has("URLc = (PUθ_c)_! Uc")) << rep.summary();
}

TEST(Frobenius, PushforwardAlongIdentity) {
    SplitFibration x = samples::projection(fixtures::interval(), fixtures::bz2());
    SplitFibration pushed = pushforward_structure(identity_fibration(x.base()), x);
    EXPECT_TRUE(validate_split_fibration(pushed).ok());
    EXPECT_EQ(pushed.total()->object_count(), x.total()->object_count());
    EXPECT_EQ(pushed.total()->morphism_count(), x.total()->morphism_count());
}

TEST(Frobenius, PushforwardOfTwoThreeFibers) {
    auto s = samples::two_three();
    SplitFibration pushed = pushforward_structure(s.T.fib, s.S.fib);
    EXPECT_TRUE(validate_split_fibration(pushed).ok());
    EXPECT_EQ(pushed.total()->object_count(), 6u);
}

TEST(Frobenius, FillerAgreementOnCorpus) {
    for (const auto& c : gen::witness_corpus(23, 20, {{4, 30}, true})) {
        ValidationReport rep = pushforward_filler_agreement(c.P, c.x, c.problems);
        EXPECT_TRUE(rep.ok()) << rep.summary();
    }
}

TEST(Frobenius, BeckChevalleyOnIdentitySquare) {
    SplitFibration P = samples::projection(fixtures::bz2(), fixtures::bz2());
    auto sq = fibration_square(P, P, identity_functor(P.total()), identity_functor(P.base()));
    auto s = samples::endpoint_against_bz2(true);
    EXPECT_TRUE(beck_chevalley_check(sq, {{s.refl, s.problem.bottom}}).ok());
}

TEST(Frobenius, BeckChevalleyOnFixture) {
    auto sq = io::expect<StructuredSquare>(io::parse(kFixtures + "/bc_square.json"), "square");
    ASSERT_TRUE(sq.fib_left);
    SplitReflection r = samples::endpoint_reflection();
    Functor U = constant_functor(r.big(), sq.fib_left->base(), 0);
    EXPECT_TRUE(beck_chevalley_check(sq, {{r, U}, {identity_reflection(r.big()), U}}).ok());
    for (const auto& c : gen::bc_corpus(24, 5, {{4, 30}, true}))
        EXPECT_TRUE(beck_chevalley_check(c.square, c.corpus).ok());
}

TEST(Frobenius, BeckChevalleyRefusesIncompatibleCleavage) {
    SplitFibration P = samples::projection(fixtures::bz2(), fixtures::bz2());
    Mor s = P.base()->morphism("s");
    SplitFibration Q = P;
    for (Obj e = 0; e < static_cast<Obj>(P.total()->object_count()); ++e)
        Q = with_lift(Q, e, s, P.total()->morphism("(s,s)"));
    ASSERT_TRUE(validate_split_fibration(Q).ok());
    auto sq = fibration_square(P, Q, identity_functor(P.total()), identity_functor(P.base()));
    auto ls = samples::endpoint_against_bz2(true);
    EXPECT_EQ(raised([&] { beck_chevalley_check(sq, {{ls.refl, ls.problem.bottom}}); }),
              ErrorKind::CleavageIncompatible);
}
