#include <gtest/gtest.h>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

TEST(Squares, IdentityProblemHasOneFiller) {
    CatRef z = fixtures::bz2();
    Functor id = identity_functor(z);
    FillerSet fs = enumerate_fillers(Square{id, id, id, id});
    ASSERT_EQ(fs.fillers.size(), 1u);
    EXPECT_EQ(fs.fillers.front(), id);
}

TEST(Squares, EndpointAgainstIntervalHasTwoFillers) {
    CatRef i = fixtures::interval();
    Obj b = i->object("b");
    Square s{fixtures::point(i, b), fixtures::to_terminal(i), fixtures::point(i, b),
             fixtures::to_terminal(i)};
    ASSERT_TRUE(validate_square(s).ok());
    FillerSet fs = enumerate_fillers(s);
    EXPECT_EQ(fs.fillers.size(), 2u);
    for (const Functor& phi : fs.fillers) {
        EXPECT_TRUE(is_filler(s, phi));
        EXPECT_EQ(phi.o(b), b);
    }
    EXPECT_TRUE(fs.contains(identity_functor(i)));
}

TEST(Squares, IncompatibleCornersHaveNoFiller) {
    CatRef i = fixtures::interval();
    Square s{fixtures::point(i, 1), identity_functor(i), fixtures::point(i, 0), identity_functor(i)};
    EXPECT_FALSE(validate_square(s).ok());
    EXPECT_TRUE(enumerate_fillers(s).fillers.empty());
}

TEST(Squares, BoundaryMismatchIsReported) {
    CatRef i = fixtures::interval();
    CatRef z = fixtures::bz2();
    Square s{identity_functor(i), identity_functor(z), identity_functor(i), identity_functor(i)};
    EXPECT_TRUE(validate_square(s).has("boundary"));
}

TEST(Squares, SliceComposition) {
    CatRef i = fixtures::interval();
    CatRef one = fixtures::terminal();
    Functor a = fixtures::to_terminal(i);
    SliceMorphism m2{identity_functor(i), a};
    EXPECT_EQ(slice_morphism_compose(m2, slice_identity(a)), m2);
    Functor p = fixtures::point(i, 0);
    EXPECT_EQ(slice_morphism_compose(m2, SliceMorphism{p, a}).f, p);
    SliceMorphism n2{p, identity_functor(i)};
    SliceMorphism n1{identity_functor(one), fixtures::point(i, 1)};
    EXPECT_EQ(raised([&] { slice_morphism_compose(n2, n1); }), ErrorKind::NotComposableInSlice);
    SliceMorphism n1_ok{identity_functor(one), p};
    EXPECT_EQ(slice_morphism_compose(n2, n1_ok).f, p);
    CatRef z = fixtures::bz2();
    SliceMorphism other{identity_functor(z), fixtures::to_terminal(z)};
    EXPECT_EQ(raised([&] { slice_morphism_compose(other, m2); }), ErrorKind::NotComposableInSlice);
}

TEST(Squares, IdentityAdjunctionTransposesToItself) {
    CatRef i = fixtures::interval();
    Functor t = fixtures::to_terminal(i);
    Obj b = i->object("b");
    SliceMorphism j{fixtures::point(i, b), t};
    SliceMorphism k{identity_functor(i), t};
    Square prob{j.f, k.f, fixtures::point(i, b), identity_functor(i)};
    ASSERT_TRUE(validate_square(prob).ok());
    SliceAdjunction adj = identity_slice_adjunction();
    EXPECT_TRUE(check_triangles(adj, t, t).ok());
    EXPECT_EQ(transpose_lifting_problem(adj, j, k, prob), prob);
    EXPECT_EQ(untranspose_lifting_problem(adj, j, k, prob), prob);
    for (const Functor& phi : enumerate_fillers(prob).fillers) {
        EXPECT_EQ(transpose_filler(adj, j, k, phi), phi);
        EXPECT_EQ(untranspose_filler(adj, j, k, phi), phi);
    }
}

TEST(Squares, BrokenTriangleIsRefused) {
    CatRef i = fixtures::interval();
    Functor t = fixtures::to_terminal(i);
    Functor swap{i, i, {1, 0}, {}};
    for (Mor m = 0; m < static_cast<Mor>(i->morphism_count()); ++m)
        swap.mor.push_back(i->hom(swap.o(i->dom(m)), swap.o(i->cod(m))).front());
    ASSERT_TRUE(validate_functor(swap).ok());
    SliceAdjunction adj = identity_slice_adjunction();
    adj.counit = [swap](const Functor& x) {
        return same_category(x.src, swap.src) ? swap : identity_functor(x.src);
    };
    EXPECT_FALSE(check_triangles(adj, t, t).ok());
    SliceMorphism j{identity_functor(i), t};
    Square prob{identity_functor(i), identity_functor(i), identity_functor(i), identity_functor(i)};
    EXPECT_EQ(raised([&] { transpose_lifting_problem(adj, j, j, prob); }), ErrorKind::AdjunctionInvalid);
}

TEST(Squares, PastingInterchange) {
    CatRef z = fixtures::cyclic(3);
    Functor id = identity_functor(z);
    Functor f = functor_from_names(z, z, {{"*", "*"}}, {{"e", "e"}, {"g", "g2"}, {"g2", "g"}});
    Square a{f, id, f, id};
    Square b{id, f, f, id};
    Square c{f, f, id, id};
    Square d{f, id, id, f};
    for (const Square* s : {&a, &b, &c, &d}) ASSERT_TRUE(validate_square(*s).ok());
    Square rows = compose_squares_v(compose_squares_h(d, c), compose_squares_h(b, a));
    Square cols = compose_squares_h(compose_squares_v(d, b), compose_squares_v(c, a));
    EXPECT_EQ(rows, cols);
    EXPECT_TRUE(validate_square(rows).ok());
    EXPECT_EQ(compose_squares_h(identity_square_h(a.right), a), a);
    EXPECT_EQ(compose_squares_v(identity_square_v(a.bottom), a), a);
    EXPECT_EQ(raised([&] { compose_squares_h(b, b); }), ErrorKind::BoundaryMismatch);
}
