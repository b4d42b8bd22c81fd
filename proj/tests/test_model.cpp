#include <gtest/gtest.h>

#include <set>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

namespace {

TypeOver interval_over_bz2() { return {samples::projection(fixtures::interval(), fixtures::bz2())}; }

TypeOver recleaved(const TypeOver& T) {
    SplitFibration q = T.fib;
    Mor s = T.context()->morphism("s");
    for (Obj e = 0; e < static_cast<Obj>(T.total()->object_count()); ++e)
        q = with_lift(q, e, s, T.total()->morphism("(s,s)"));
    return {q};
}

}  // namespace

TEST(Model, TypesAndTerms) {
    TypeOver T = interval_over_bz2();
    EXPECT_TRUE(validate_type(T).ok());
    EXPECT_EQ(raised([&] { make_type(fibration_opfibration_convert(T.fib)); }), ErrorKind::JudgmentMismatch);
    Functor s = samples::constant_section(fixtures::interval(), fixtures::bz2());
    EXPECT_EQ(make_term(T, s).section, s);
    EXPECT_EQ(raised([&] { make_term(T, identity_functor(T.total())); }), ErrorKind::JudgmentMismatch);
    TypeOver over_chain{identity_fibration(fixtures::chain(2))};
    EXPECT_FALSE(validate_type(over_chain).ok());
}

TEST(Model, SubstitutionAlongIdentityAndComposites) {
    TypeOver T = interval_over_bz2();
    CatRef z = T.context();
    Functor pt = fixtures::point(z, 0);
    EXPECT_TRUE(substitution_coherence(T, identity_functor(z), identity_functor(z)).ok());
    EXPECT_TRUE(substitution_coherence(T, identity_functor(z), pt).ok());
    auto tower = samples::bz2_tower();
    EXPECT_TRUE(substitution_coherence(tower.S, identity_functor(tower.T.total()), samples::constant_section(z, z)).ok());
}

TEST(Model, PointSubstitutionIsTheFiber) {
    TypeOver T = interval_over_bz2();
    TypeOver Tp = substitute(fixtures::point(T.context(), 0), T);
    EXPECT_TRUE(validate_type(Tp).ok());
    Fiber f = fiber_of(T.fib.p, 0);
    EXPECT_EQ(Tp.total()->object_count(), f.cat->object_count());
    EXPECT_EQ(Tp.total()->morphism_count(), f.cat->morphism_count());
    EXPECT_EQ(raised([&] { substitute(fixtures::point(fixtures::interval(), 0), T); }), ErrorKind::BoundaryMismatch);
}

TEST(Model, SubstitutedTerm) {
    TypeOver T = interval_over_bz2();
    Functor pt = fixtures::point(T.context(), 0);
    TermOf t = make_term(T, samples::constant_section(fixtures::interval(), T.context(), 1));
    TermOf tp = substitute_term(pt, t);
    EXPECT_EQ(tp.type, substitute(pt, T));
    EXPECT_EQ(tp.type.fib.p * tp.section, identity_functor(pt.src));
}

TEST(Model, SigmaWithIdentityFamily) {
    TypeOver T = interval_over_bz2();
    EXPECT_EQ(sigma_type(T, TypeOver{identity_fibration(T.total())}), T);
}

TEST(Model, SigmaOfProjections) {
    auto t = samples::bz2_tower();
    TypeOver st = sigma_type(t.T, t.S);
    EXPECT_TRUE(validate_type(st).ok());
    EXPECT_EQ(st.fib.p, t.T.fib.p * t.S.fib.p);
    EXPECT_EQ(sigma_type(sigma_type(t.T, t.S), t.R), sigma_type(t.T, sigma_type(t.S, t.R)));
    EXPECT_EQ(raised([&] { sigma_type(t.S, t.T); }), ErrorKind::BoundaryMismatch);
}

TEST(Model, PairsAndProjections) {
    auto t = samples::bz2_tower();
    CatRef z = fixtures::bz2();
    TermOf a = make_term(t.T, samples::constant_section(z, z));
    Pullback pb = pullback_category(t.S.fib.p, a.section);
    Functor inner = samples::constant_section(z, t.T.total()) * a.section;
    TermOf b = make_term(substitute(a.section, t.S), pb.induced(inner, identity_functor(z)));
    TermOf c = pair_term(t.T, t.S, a, b);
    EXPECT_EQ(proj1(t.T, t.S, c).section, a.section);
    EXPECT_EQ(proj2(t.T, t.S, c).section, b.section);
    EXPECT_EQ(raised([&] { pair_term(t.S, t.S, a, b); }), ErrorKind::JudgmentMismatch);
}

TEST(Model, PiOverIdentityExtension) {
    auto s = samples::two_three();
    TypeOver A{identity_fibration(s.T.total())};
    TypeOver Pi = pi_type(A, s.S);
    EXPECT_TRUE(validate_type(Pi).ok());
    EXPECT_EQ(Pi.total()->object_count(), s.S.total()->object_count());
    EXPECT_EQ(Pi.total()->morphism_count(), s.S.total()->morphism_count());
}

TEST(Model, PiOfTwoThreeFibersHasSixPoints) {
    auto s = samples::two_three();
    TypeOver Pi = pi_type(s.T, s.S);
    EXPECT_TRUE(validate_type(Pi).ok());
    EXPECT_EQ(Pi.total()->object_count(), 6u);
    std::set<Obj> points;
    for (const TermOf& body : s.bodies) points.insert(lambda(s.T, s.S, body).section.o(0));
    EXPECT_EQ(points.size(), 6u);
}

TEST(Model, PiOverBz2Validates) {
    auto t = samples::bz2_tower();
    TypeOver Pi = pi_type(t.T, t.S);
    EXPECT_TRUE(validate_type(Pi).ok());
    EXPECT_EQ(Pi.context(), t.T.context());
}

TEST(Model, BetaAndEta) {
    auto s = samples::two_three();
    ValidationReport rep = pi_laws(s.T, s.S, s.bodies, s.args);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    EXPECT_EQ(rep.checked, s.bodies.size() * (s.args.size() + 1));
    EXPECT_EQ(raised([&] { lambda(s.T, s.T, s.bodies.front()); }), ErrorKind::JudgmentMismatch);
}

TEST(Model, PathObjectOfDiscreteType) {
    auto s = samples::two_three();
    PathObject po = id_type(s.T);
    EXPECT_TRUE(validate_path_object(po).ok());
    EXPECT_EQ(po.total->object_count(), 2u);
    EXPECT_EQ(po.total->morphism_count(), 2u);
    EXPECT_TRUE(is_isomorphism(po.r.R));
}

TEST(Model, PathObjectOfBz2OverPoint) {
    PathObject po = id_type(samples::bz2_over_point());
    EXPECT_TRUE(validate_path_object(po).ok());
    EXPECT_EQ(po.total->object_count(), 2u);
    EXPECT_EQ(po.total->morphism_count(), 8u);
    EXPECT_EQ(po.pairs.cat->object_count(), 1u);
    EXPECT_EQ(po.pairs.cat->morphism_count(), 4u);
    EXPECT_TRUE(same_category(po.rho.base(), po.pairs.cat));
    EXPECT_EQ(raised([&] { id_type(TypeOver{identity_fibration(fixtures::chain(2))}); }), ErrorKind::NotAGroupoid);
}

TEST(Model, PathObjectStability) {
    TypeOver T = interval_over_bz2();
    EXPECT_TRUE(path_object_stability(identity_functor(T.context()), T).ok());
    EXPECT_TRUE(path_object_stability(fixtures::point(T.context(), 0), T).ok());
    auto t = samples::bz2_tower();
    EXPECT_TRUE(path_object_stability(fixtures::point(t.T.context(), 0), t.T).ok());
}

TEST(Model, ReflTerm) {
    auto t = samples::bz2_tower();
    PathObject po = id_type(t.T);
    TermOf a = make_term(t.T, samples::constant_section(fixtures::bz2(), t.T.context()));
    TermOf r = refl(po, a);
    EXPECT_TRUE(validate_type(r.type).ok());
    EXPECT_EQ(r.type.fib.p * r.section, identity_functor(t.T.context()));
    EXPECT_EQ(raised([&] { refl(id_type(t.S), a); }), ErrorKind::JudgmentMismatch);
}

TEST(Model, JOnConstantFamily) {
    auto t = samples::bz2_tower();
    PathObject po = id_type(t.T);
    CatRef F = fixtures::interval();
    TypeOver C{samples::projection(F, po.total)};
    Functor s0 = samples::constant_section(F, po.total);
    TermOf J = j_eliminator(po, C, s0 * po.r.R);
    EXPECT_EQ(J.section, s0);
}

TEST(Model, JIsAnOracleFiller) {
    auto t = samples::bz2_tower();
    for (const TypeOver* T : {&t.T, &t.S}) {
        samples::JSample j = samples::j_sample(*T, fixtures::bz2());
        TermOf J = j_eliminator(j.po, j.C, j.d);
        EXPECT_EQ(J.section * j.po.r.R, j.d);
        Square defining{j.po.r.R, j.C.fib.p, j.d, identity_functor(j.po.total)};
        EXPECT_TRUE(enumerate_fillers(defining).contains(J.section));
    }
    samples::JSample j = samples::j_sample(samples::bz2_over_point(), fixtures::bz2());
    EXPECT_EQ(j_eliminator(j.po, j.C, j.d).section * j.po.r.R, j.d);
    EXPECT_EQ(raised([&] { j_eliminator(j.po, j.C, identity_functor(j.po.type.total())); }),
              ErrorKind::JudgmentMismatch);
}

TEST(Model, PiStabilityUnderSubstitution) {
    auto t = samples::bz2_tower();
    CatRef one = fixtures::terminal();
    CatRef z = fixtures::bz2();
    Functor pt = constant_functor(one, z, 0);
    ValidationReport id = pi_pseudostability_check(substitution_square(identity_functor(z), t.T), t.S,
                                                   {{identity_reflection(z), identity_functor(z)}});
    EXPECT_TRUE(id.ok()) << id.summary();
    ValidationReport point = pi_pseudostability_check(substitution_square(pt, t.T), t.S,
                                                      {{identity_reflection(one), identity_functor(one)}});
    EXPECT_TRUE(point.ok()) << point.summary();
}

TEST(Model, PiStabilityReportsIncompatibleCleavage) {
    auto t = samples::bz2_tower();
    TypeOver Tq = recleaved(t.T);
    ASSERT_TRUE(validate_type(Tq).ok());
    auto sq = fibration_square(Tq.fib, t.T.fib, identity_functor(t.T.total()), identity_functor(t.T.context()));
    ValidationReport rep = pi_pseudostability_check(sq, t.S, {});
    EXPECT_TRUE(rep.has("cleavages commute"));
}
