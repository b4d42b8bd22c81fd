#pragma once

#include <string>
#include <vector>

#include "awfslab/fixtures.hpp"
#include "awfslab/model.hpp"

/// Small named instances shared by the harness, the CLI and the tests.
namespace awfslab::samples {

/// The projection F × B → B with lifts (id, f).
inline SplitFibration projection(const CatRef& F, const CatRef& B, Orientation o = Orientation::cartesian) {
    Pullback pb = pullback_category(fixtures::to_terminal(F), fixtures::to_terminal(B));
    return make_fibration(pb.right, o, [&](Obj e, Mor f) {
        return pb.morphism_of(F->identity(pb.obj_pairs[e].first), f);
    });
}

/// The fibration with identity lifts on a discrete total category.
inline SplitFibration discrete_fibration(const Functor& p) {
    return make_fibration(p, Orientation::cartesian, [&](Obj e, Mor) { return p.src->identity(e); });
}

/// R: 𝟙 → 𝕀 picking `b`, L collapsing 𝕀, θ_a: a → b.
inline SplitReflection endpoint_reflection() {
    CatRef I = fixtures::interval();
    Obj a = I->object("a");
    Obj b = I->object("b");
    Functor R = fixtures::point(I, b);
    Functor L = fixtures::to_terminal(I);
    return make_reflection(R, L, {I->hom(a, b).front(), I->identity(b)});
}

/// The lifting problem of the endpoint reflection against 𝕀 × BZ₂ → BZ₂
/// whose bottom edge 𝕀 → BZ₂ sends a → b to s when `twisted`.
struct LiftSample {
    SplitReflection refl;
    SplitFibration fib;
    Square problem;
};

inline LiftSample endpoint_against_bz2(bool twisted) {
    SplitReflection r = endpoint_reflection();
    CatRef Z = fixtures::bz2();
    SplitFibration P = projection(fixtures::interval(), Z);
    const FinCategory& I = *r.big();
    const Mor s = Z->morphism("s");
    Functor v{r.big(), Z, {0, 0}, {}};
    for (Mor k = 0; k < static_cast<Mor>(I.morphism_count()); ++k)
        v.mor.push_back(twisted && !I.is_identity(k) ? s : Z->identity(0));
    Pullback pb = pullback_category(fixtures::to_terminal(fixtures::interval()), fixtures::to_terminal(Z));
    Functor u{r.small(), P.total(), {pb.object_of(I.object("a"), 0)}, {}};
    u.mor.push_back(P.total()->identity(u.obj[0]));
    return {r, P, Square{r.R, P.p, u, v}};
}

/// T over 𝟙 with two points and S over Γ.T with fibers of size 2 and 3;
/// Π(T, S) has 2·3 objects.
struct TwoThree {
    TypeOver T;
    TypeOver S;
    std::vector<TermOf> bodies;
    std::vector<TermOf> args;
};

inline TwoThree two_three() {
    CatRef one = fixtures::terminal();
    CatRef A = fixtures::discrete({"0", "1"});
    TypeOver T{discrete_fibration(fixtures::to_terminal(A))};
    CatRef X = fixtures::discrete({"x0", "x1", "y0", "y1", "y2"});
    Functor x{X, A, {0, 0, 1, 1, 1}, {0, 0, 1, 1, 1}};
    TypeOver S{discrete_fibration(x)};
    TwoThree out{T, S, {}, {}};
    for (Obj i : {0, 1})
        for (Obj j : {2, 3, 4}) out.bodies.push_back(make_term(S, Functor{A, X, {i, j}, {i, j}}));
    out.args.push_back(make_term(T, Functor{one, A, {0}, {0}}));
    out.args.push_back(make_term(T, Functor{one, A, {1}, {1}}));
    return out;
}

/// T = BZ₂ × BZ₂ → BZ₂ and S = BZ₂ × Γ.T → Γ.T.
struct Bz2Tower {
    TypeOver T;
    TypeOver S;
    TypeOver R;  // over Γ.T.S
};

inline Bz2Tower bz2_tower() {
    CatRef Z = fixtures::bz2();
    TypeOver T{projection(Z, Z)};
    TypeOver S{projection(Z, T.total())};
    TypeOver R{projection(Z, S.total())};
    return {T, S, R};
}

/// BZ₂ as a type over 𝟙.
inline TypeOver bz2_over_point() { return {projection(fixtures::bz2(), fixtures::terminal())}; }

/// The section B → F × B at the object `x` of F.
inline Functor constant_section(const CatRef& F, const CatRef& B, Obj x = 0) {
    Pullback pb = pullback_category(fixtures::to_terminal(F), fixtures::to_terminal(B));
    return pb.induced(constant_functor(B, F, x), identity_functor(B));
}

/// The J data for T: C is F × E pulled back along cod, and d = (r, s0) with
/// s0 the constant section at the first object of F.
struct JSample {
    PathObject po;
    TypeOver C;
    Functor d;
};

inline JSample j_sample(const TypeOver& T, const CatRef& F) {
    PathObject po = id_type(T);
    SplitFibration S = projection(F, T.total());
    Functor s0 = constant_section(F, T.total());
    Pullback pb = pullback_category(S.p, po.r.L);
    return {po, TypeOver{pullback_split_fibration(S, po.r.L)}, pb.induced(s0, po.r.R)};
}

}  // namespace awfslab::samples
