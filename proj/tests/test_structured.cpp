#include <gtest/gtest.h>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

namespace {

SplitFibration bz2_square_projection() { return samples::projection(fixtures::bz2(), fixtures::bz2()); }

}  // namespace

TEST(Structured, Reflections) {
    EXPECT_TRUE(validate_split_reflection(identity_reflection(fixtures::bz2())).ok());
    SplitReflection r = samples::endpoint_reflection();
    EXPECT_TRUE(validate_split_reflection(r).ok());
    EXPECT_TRUE(validate_split_mono(underlying_split_mono(r)).ok());
    SplitReflection bad = r;
    const FinCategory& I = *r.big();
    bad.theta.comp[I.object("a")] = I.identity(I.object("a"));
    EXPECT_FALSE(validate_split_reflection(bad).ok());
}

TEST(Structured, BrokenRetractionIsReported) {
    CatRef i = fixtures::interval();
    SplitMono m{fixtures::point(i, 0), fixtures::point(i, 1) * fixtures::to_terminal(i)};
    EXPECT_FALSE(validate_split_mono(m).ok());
}

TEST(Structured, ProductProjectionsAreFibrations) {
    SplitFibration p = samples::projection(fixtures::discrete({"0", "1"}), fixtures::bz2());
    EXPECT_TRUE(validate_split_fibration(p).ok());
    EXPECT_EQ(p.total()->object_count(), 2u);
    EXPECT_TRUE(validate_split_fibration(identity_fibration(fixtures::chain(3))).ok());
    EXPECT_TRUE(validate_split_fibration(samples::projection(fixtures::interval(), fixtures::bz2(),
                                                             Orientation::cocartesian))
                    .ok());
}

TEST(Structured, ReboundIdentityLiftIsReported) {
    SplitFibration p = bz2_square_projection();
    SplitFibration q = with_lift(p, 0, p.base()->morphism("e"), p.total()->morphism("(s,e)"));
    EXPECT_FALSE(validate_split_fibration(q).ok());
}

TEST(Structured, BrokenSplittingIsReported) {
    CatRef z3 = fixtures::cyclic(3);
    SplitFibration p = samples::projection(z3, z3);
    ASSERT_TRUE(validate_split_fibration(p).ok());
    Mor g = p.base()->morphism("g");
    SplitFibration q = with_lift(p, 0, g, p.total()->morphism("(g,g)"));
    EXPECT_TRUE(validate_split_fibration(q).has("splitting"));
}

TEST(Structured, CompositionWithIdentities) {
    SplitFibration p = bz2_square_projection();
    EXPECT_EQ(compose_split_fibrations(p, identity_fibration(p.base())), p);
    EXPECT_EQ(compose_split_fibrations(identity_fibration(p.total()), p), p);
    SplitFibration q = samples::projection(fixtures::bz2(), p.total());
    SplitFibration qp = compose_split_fibrations(q, p);
    EXPECT_TRUE(validate_split_fibration(qp).ok());
    EXPECT_EQ(qp.p, p.p * q.p);

    SplitReflection r = samples::endpoint_reflection();
    EXPECT_EQ(compose_split_reflections(identity_reflection(r.big()), r), r);
    EXPECT_EQ(compose_split_reflections(r, identity_reflection(r.small())), r);
}

TEST(Structured, CompositionPreconditions) {
    SplitFibration p = bz2_square_projection();
    EXPECT_EQ(raised([&] { compose_split_fibrations(p, identity_fibration(p.base(), Orientation::cocartesian)); }),
              ErrorKind::OrientationMismatch);
    SplitFibration q = samples::projection(fixtures::interval(), fixtures::interval());
    EXPECT_EQ(raised([&] { compose_split_fibrations(p, q); }), ErrorKind::BoundaryMismatch);
    SplitReflection r = samples::endpoint_reflection();
    EXPECT_EQ(raised([&] { compose_split_reflections(r, r); }), ErrorKind::BoundaryMismatch);
}

TEST(Structured, PullbackAlongPoint) {
    SplitFibration p = samples::projection(fixtures::interval(), fixtures::bz2());
    Functor v = fixtures::point(p.base(), 0);
    PulledBackFibration pb = pullback_fibration_square(p, v);
    EXPECT_TRUE(validate_split_fibration(pb.fib).ok());
    EXPECT_EQ(pb.fib.total()->object_count(), 2u);
    EXPECT_EQ(pb.fib.total()->morphism_count(), 4u);
    EXPECT_TRUE(check_structured_square(fibration_square(pb.fib, p, pb.top, v)).ok());
}

TEST(Structured, PullbackAlongIdentity) {
    SplitFibration p = bz2_square_projection();
    PulledBackFibration pb = pullback_fibration_square(p, identity_functor(p.base()));
    EXPECT_TRUE(validate_split_fibration(pb.fib).ok());
    EXPECT_TRUE(is_isomorphism(pb.top));
    EXPECT_EQ(p.p * pb.top, pb.fib.p);
    EXPECT_TRUE(check_structured_square(fibration_square(pb.fib, p, pb.top, identity_functor(p.base()))).ok());
}

TEST(Structured, OrientationConversion) {
    SplitFibration p = bz2_square_projection();
    SplitFibration q = fibration_opfibration_convert(p);
    EXPECT_EQ(q.orientation, Orientation::cocartesian);
    EXPECT_TRUE(validate_split_fibration(q).ok());
    EXPECT_EQ(fibration_opfibration_convert(q), p);
    EXPECT_EQ(oriented(p, Orientation::cartesian), p);
    SplitFibration c = samples::projection(fixtures::chain(2), fixtures::terminal());
    EXPECT_EQ(raised([&] { fibration_opfibration_convert(c); }), ErrorKind::NotAGroupoid);
}

TEST(Structured, PermutedCleavageBreaksSquare) {
    SplitFibration p = bz2_square_projection();
    Mor s = p.base()->morphism("s");
    SplitFibration q = p;
    for (Obj e = 0; e < static_cast<Obj>(p.total()->object_count()); ++e)
        q = with_lift(q, e, s, p.total()->morphism("(s,s)"));
    ASSERT_TRUE(validate_split_fibration(q).ok());
    Functor id_e = identity_functor(p.total());
    Functor id_b = identity_functor(p.base());
    EXPECT_TRUE(check_structured_square(fibration_square(p, p, id_e, id_b)).ok());
    EXPECT_TRUE(check_structured_square(fibration_square(p, q, id_e, id_b)).has("cleavages commute"));
}

TEST(Structured, SquareKindChecks) {
    SplitReflection r = samples::endpoint_reflection();
    Functor id_s = identity_functor(r.small());
    Functor id_t = identity_functor(r.big());
    EXPECT_TRUE(check_structured_square(reflection_square(r, r, id_s, id_t)).ok());
    EXPECT_TRUE(check_structured_square(
                    mono_square(underlying_split_mono(r), underlying_split_mono(r), id_s, id_t))
                    .ok());
    StructuredSquare missing = reflection_square(r, r, id_s, id_t);
    missing.refl_right.reset();
    EXPECT_EQ(raised([&] { check_structured_square(missing); }), ErrorKind::KindMismatch);
    SplitFibration p = bz2_square_projection();
    StructuredSquare mixed = fibration_square(p, fibration_opfibration_convert(p), identity_functor(p.total()),
                                              identity_functor(p.base()));
    EXPECT_EQ(raised([&] { check_structured_square(mixed); }), ErrorKind::KindMismatch);
}
