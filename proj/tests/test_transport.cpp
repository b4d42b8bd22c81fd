#include <gtest/gtest.h>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

TEST(Transport, PushforwardOfTwoThreeFibers) {
    auto s = samples::two_three();
    SectionGroupoid pg = pushforward_object(s.T.fib, s.S.fib.p);
    EXPECT_EQ(pg.cat->object_count(), 6u);
    EXPECT_EQ(pg.cat->morphism_count(), 6u);
    EXPECT_TRUE(validate_category(*pg.cat).ok());
    SplitFibration pushed = pushforward_fibration(s.T.fib, s.S.fib);
    EXPECT_TRUE(validate_split_fibration(pushed).ok());
    EXPECT_EQ(pushed.total()->object_count(), 6u);
}

TEST(Transport, PushforwardAlongIdentity) {
    SplitFibration x = samples::projection(fixtures::interval(), fixtures::bz2());
    SectionGroupoid pg = pushforward_object(identity_fibration(x.base()), x.p);
    EXPECT_EQ(pg.cat->object_count(), x.total()->object_count());
    EXPECT_EQ(pg.cat->morphism_count(), x.total()->morphism_count());
    EXPECT_TRUE(validate_functor(pg.projection).ok());
}

TEST(Transport, AdjunctionOnTwoThree) {
    auto s = samples::two_three();
    CatRef one = fixtures::terminal();
    std::vector<std::pair<Functor, Functor>> pairs{
        {identity_functor(one), s.S.fib.p},
        {fixtures::to_terminal(fixtures::discrete({"p", "q"})), s.S.fib.p},
        {identity_functor(one), identity_functor(s.T.total())},
    };
    auto [w, rep] = adjunction_check(s.T.fib, pairs);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    ASSERT_EQ(w.hom_sizes.size(), 3u);
    EXPECT_EQ(w.hom_sizes[0].first, 6u);
    for (auto [a, b] : w.hom_sizes) EXPECT_EQ(a, b);
}

TEST(Transport, AdjunctionOnBz2Projection) {
    SplitFibration f = samples::projection(fixtures::bz2(), fixtures::terminal());
    SplitFibration x = samples::projection(fixtures::interval(), f.total());
    std::vector<std::pair<Functor, Functor>> pairs{
        {identity_functor(f.base()), x.p},
        {fixtures::to_terminal(fixtures::bz2()), x.p},
        {identity_functor(f.base()), identity_functor(f.total())},
    };
    auto [w, rep] = adjunction_check(f, pairs);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    SliceAdjunction adj = pullback_pushforward_adjunction(f);
    EXPECT_TRUE(check_triangles(adj, identity_functor(f.base()), x.p).ok());
    EXPECT_TRUE(check_right_triangle(f, x.p).ok());
    EXPECT_TRUE(check_left_triangle(adj, fixtures::to_terminal(fixtures::bz2())).ok());
}

TEST(Transport, PushforwardNeedsGroupoids) {
    SplitFibration f = samples::projection(fixtures::chain(2), fixtures::terminal());
    EXPECT_EQ(raised([&] { pushforward_object(f, identity_functor(f.total())); }), ErrorKind::NotAGroupoid);
    SplitFibration g = samples::projection(fixtures::bz2(), fixtures::terminal());
    EXPECT_EQ(raised([&] { pushforward_object(g, identity_functor(fixtures::interval())); }),
              ErrorKind::BoundaryMismatch);
}

TEST(Transport, PullbackArrowsAlongPoint) {
    CatRef z = fixtures::bz2();
    SplitFibration p = samples::projection(fixtures::interval(), z);
    Functor pt = fixtures::point(z, 0);
    SliceMorphism m{p.p, identity_functor(z)};
    SliceMorphism pulled = pullback_arrows(pt, m);
    EXPECT_EQ(pulled.f.src->object_count(), 2u);
    EXPECT_EQ(pulled.f.src->morphism_count(), 4u);
    EXPECT_EQ(pulled.f.dst->object_count(), 1u);
    EXPECT_TRUE(same_category(pulled.a.dst, fixtures::terminal()));
    EXPECT_TRUE(validate_functor(pulled.f).ok());
    SliceMorphism id = pullback_arrows(pt, slice_identity(identity_functor(z)));
    EXPECT_TRUE(is_isomorphism(id.f));
}

TEST(Transport, PushforwardArrowsPreserveIdentities) {
    SplitFibration f = samples::projection(fixtures::bz2(), fixtures::terminal());
    SplitFibration x = samples::projection(fixtures::interval(), f.total());
    SliceMorphism m = pushforward_arrows(f, slice_identity(x.p));
    EXPECT_EQ(m.f, identity_functor(m.f.src));
}

TEST(Transport, MateAlphaOnNonPullbackSquare) {
    CatRef i = fixtures::interval();
    CatRef one = fixtures::terminal();
    Square sq{fixtures::to_terminal(i), identity_functor(one), fixtures::to_terminal(i), identity_functor(one)};
    EXPECT_FALSE(is_pullback_square(sq));
    CatRef z = fixtures::bz2();
    Square a = mate_alpha(sq, slice_identity(fixtures::to_terminal(z)));
    EXPECT_TRUE(validate_square(a).ok());
    EXPECT_EQ(a.top.src->object_count(), 2u);
    EXPECT_EQ(a.top.dst->object_count(), 1u);
    EXPECT_FALSE(is_isomorphism(a.top));
}

TEST(Transport, MateAlphaOnPullbackSquareIsInvertible) {
    CatRef z = fixtures::bz2();
    SplitFibration p = samples::projection(fixtures::interval(), z);
    Functor pt = fixtures::point(z, 0);
    PulledBackFibration pb = pullback_fibration_square(p, pt);
    Square sq{pb.fib.p, p.p, pb.top, pt};
    ASSERT_TRUE(is_pullback_square(sq));
    Square a = mate_alpha(sq, slice_identity(identity_functor(fixtures::terminal())));
    EXPECT_TRUE(is_isomorphism(a.top));
    EXPECT_TRUE(is_isomorphism(a.bottom));
}

TEST(Transport, MateBetaNeedsPullback) {
    CatRef i = fixtures::interval();
    CatRef one = fixtures::terminal();
    SplitFibration f = samples::projection(i, one);
    SplitFibration g = identity_fibration(one);
    Functor z = identity_functor(one);
    EXPECT_EQ(raised([&] { mate_beta(f, g, fixtures::to_terminal(i), identity_functor(one), slice_identity(z)); }),
              ErrorKind::NotAPullback);
}

TEST(Transport, MateBetaOnPullbackSquare) {
    CatRef z = fixtures::bz2();
    SplitFibration g = samples::projection(z, z);
    Functor v = fixtures::point(z, 0);
    PulledBackFibration pb = pullback_fibration_square(g, v);
    SplitFibration x = samples::projection(fixtures::interval(), g.total());
    Functor beta = mate_beta_component(pb.fib, g, pb.top, v, x.p);
    EXPECT_TRUE(is_isomorphism(beta));
    EXPECT_EQ(mate_beta_pasted(pb.fib, g, pb.top, v, x.p), beta);
    Square sq = mate_beta(pb.fib, g, pb.top, v, slice_identity(x.p));
    EXPECT_TRUE(validate_square(sq).ok());
}
