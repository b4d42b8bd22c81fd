#include <gtest/gtest.h>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

TEST(CoreCat, TerminalAndBz2Validate) {
    EXPECT_TRUE(validate_category(*fixtures::terminal()).ok());
    CatRef z = fixtures::bz2();
    EXPECT_TRUE(validate_category(*z).ok());
    EXPECT_EQ(z->morphism_count(), 2u);
    EXPECT_TRUE(z->is_groupoid());
    Mor s = z->morphism("s");
    EXPECT_EQ(z->compose(s, s), z->identity(0));
    EXPECT_EQ(z->inverse(s), s);
}

TEST(CoreCat, BrokenCompositionIsReported) {
    CategoryBuilder b;
    Obj o = b.add_object("*");
    Mor one = b.add_morphism("1", o, o);
    Mor s = b.add_morphism("s", o, o);
    b.set_identity(o, one);
    b.set_composite(one, one, one);
    b.set_composite(one, s, s);
    b.set_composite(s, one, s);
    b.set_composite(s, s, s);
    b.set_groupoid(true);
    b.set_inverse(one, one);
    b.set_inverse(s, s);
    ValidationReport rep = validate_category(*b.build());
    EXPECT_FALSE(rep.ok());
}

TEST(CoreCat, BuilderRejectsMissingComposite) {
    CategoryBuilder b;
    Obj o = b.add_object("*");
    Mor one = b.add_morphism("1", o, o);
    b.add_morphism("s", o, o);
    b.set_identity(o, one);
    b.set_composite(one, one, one);
    EXPECT_EQ(raised([&] { b.build(); }), ErrorKind::MalformedTable);
}

TEST(CoreCat, BuilderRejectsDuplicateNames) {
    CategoryBuilder b;
    b.add_object("x");
    EXPECT_EQ(raised([&] { b.add_object("x"); }), ErrorKind::MalformedTable);
    EXPECT_EQ(raised([&] { b.add_morphism("f", 0, 3); }), ErrorKind::MalformedTable);
}

TEST(CoreCat, ChainAndCodiscreteValidate) {
    CatRef c = fixtures::chain(4);
    EXPECT_TRUE(validate_category(*c).ok());
    EXPECT_EQ(c->morphism_count(), 10u);
    EXPECT_FALSE(c->is_groupoid());
    EXPECT_EQ(raised([&] { c->inverse(0); }), ErrorKind::NotAGroupoid);
    CatRef i = fixtures::interval();
    EXPECT_TRUE(validate_category(*i).ok());
    EXPECT_EQ(i->morphism_count(), 4u);
}

TEST(CoreCat, ComposeUnitLaws) {
    CatRef z3 = fixtures::cyclic(3);
    CatRef z2 = fixtures::bz2();
    Functor f = functor_from_names(z3, z3, {{"*", "*"}}, {{"e", "e"}, {"g", "g2"}, {"g2", "g"}});
    EXPECT_TRUE(validate_functor(f).ok());
    EXPECT_EQ(f * identity_functor(z3), f);
    EXPECT_EQ(identity_functor(z3) * f, f);
    EXPECT_EQ(f * f, identity_functor(z3));
    Functor c = constant_functor(z3, z2, 0);
    EXPECT_EQ((c * f) * f, c * (f * f));
    EXPECT_EQ(raised([&] { compose_functors(f, c); }), ErrorKind::BoundaryMismatch);
}

TEST(CoreCat, NonFunctorIsReported) {
    CatRef z3 = fixtures::cyclic(3);
    CatRef z2 = fixtures::bz2();
    Functor f{z3, z2, {0}, {z2->identity(0), z2->identity(0), z2->identity(0)}};
    f.mor[z3->morphism("g")] = z2->morphism("s");
    EXPECT_FALSE(validate_functor(f).ok());
}

TEST(CoreCat, PullbackOfDiscreteSetsIsTheProduct) {
    CatRef a = fixtures::discrete({"0", "1"});
    CatRef c = fixtures::discrete({"x", "y", "z"});
    Pullback pb = pullback_category(fixtures::to_terminal(a), fixtures::to_terminal(c));
    EXPECT_EQ(pb.cat->object_count(), 6u);
    EXPECT_EQ(pb.cat->morphism_count(), 6u);
    EXPECT_TRUE(validate_category(*pb.cat).ok());
    EXPECT_EQ(pb.cat->object_name(pb.object_of(1, 2)), "(1,z)");
    EXPECT_EQ(pb.f * pb.left, pb.g * pb.right);
}

TEST(CoreCat, PullbackOfIdentitiesIsTheDiagonal) {
    CatRef i = fixtures::interval();
    Pullback pb = pullback_category(identity_functor(i), identity_functor(i));
    EXPECT_EQ(pb.cat->object_count(), 2u);
    EXPECT_EQ(pb.cat->morphism_count(), 4u);
    EXPECT_TRUE(is_isomorphism(pb.left));
    EXPECT_EQ(inverse_functor(pb.left) * pb.left, identity_functor(pb.cat));
}

TEST(CoreCat, InducedMapIntoPullback) {
    CatRef z = fixtures::bz2();
    Pullback pb = pullback_category(fixtures::to_terminal(z), fixtures::to_terminal(z));
    Functor diag = pb.induced(identity_functor(z), identity_functor(z));
    EXPECT_EQ(pb.left * diag, identity_functor(z));
    EXPECT_EQ(pb.right * diag, identity_functor(z));
    EXPECT_EQ(raised([&] { pb.induced(identity_functor(z), identity_functor(fixtures::interval())); }),
              ErrorKind::BoundaryMismatch);
}

TEST(CoreCat, FiberOfProjection) {
    CatRef i = fixtures::interval();
    CatRef z = fixtures::bz2();
    fixtures::Product p = fixtures::product(i, z);
    Fiber f = fiber_of(p.second, 0);
    EXPECT_EQ(f.cat->object_count(), 2u);
    EXPECT_EQ(f.cat->morphism_count(), 4u);
    EXPECT_TRUE(validate_functor(f.inclusion).ok());
}

TEST(CoreCat, NaturalTransformations) {
    CatRef i = fixtures::interval();
    Functor a = fixtures::point(i, 0);
    Functor b = fixtures::point(i, 1);
    EXPECT_TRUE(validate_nat(identity_nat(a)).ok());
    NatTransformation n{a, b, {i->hom(0, 1).front()}};
    EXPECT_TRUE(validate_nat(n).ok());
    NatTransformation bad{a, b, {i->identity(0)}};
    EXPECT_FALSE(validate_nat(bad).ok());
}
