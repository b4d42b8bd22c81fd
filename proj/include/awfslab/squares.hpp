#pragma once

#include <functional>
#include <string>
#include <vector>

#include "awfslab/enumerate.hpp"
#include "awfslab/functor.hpp"

namespace awfslab {

/// A commuting square (top, bottom): left → right, i.e. bottom∘left = right∘top.
///
///     A --top--> C
///     |          |
///   left       right
///     v          v
///     B -bottom> D
struct Square {
    Functor left;
    Functor right;
    Functor top;
    Functor bottom;

    bool operator==(const Square&) const = default;
};

inline ValidationReport validate_square(const Square& s) {
    ValidationReport r;
    ++r.checked;
    if (!same_category(s.left.src, s.top.src) || !same_category(s.left.dst, s.bottom.src) ||
        !same_category(s.right.src, s.top.dst) || !same_category(s.right.dst, s.bottom.dst)) {
        r.add("square boundary", "functor (co)domains do not form a square");
        return r;
    }
    ++r.checked;
    if (s.bottom * s.left != s.right * s.top) r.add("square commutes", "bottom∘left != right∘top");
    return r;
}

inline Square identity_square_h(const Functor& f) {
    return {f, f, identity_functor(f.src), identity_functor(f.dst)};
}

inline Square identity_square_v(const Functor& u) {
    return {identity_functor(u.src), identity_functor(u.dst), u, u};
}

/// Horizontal pasting: s1: f → g followed by s2: g → h.
inline Square compose_squares_h(const Square& s2, const Square& s1) {
    if (s1.right != s2.left) fail(ErrorKind::BoundaryMismatch, "right leg of first square is not the left leg of second");
    return {s1.left, s2.right, s2.top * s1.top, s2.bottom * s1.bottom};
}

/// Vertical pasting: s2 stacked below s1, sharing s1.bottom = s2.top.
inline Square compose_squares_v(const Square& s2, const Square& s1) {
    if (s1.bottom != s2.top) fail(ErrorKind::BoundaryMismatch, "bottom of first square is not the top of second");
    return {s2.left * s1.left, s2.right * s1.right, s1.top, s2.bottom};
}

/// A diagonal filler problem with all of its solutions.
struct FillerSet {
    Square problem;
    std::vector<Functor> fillers;

    bool contains(const Functor& phi) const {
        for (const auto& f : fillers)
            if (f == phi) return true;
        return false;
    }
};

inline bool is_filler(const Square& s, const Functor& phi) {
    return same_category(phi.src, s.left.dst) && same_category(phi.dst, s.right.src) &&
           phi * s.left == s.top && s.right * phi == s.bottom;
}

/// Exhaustive search for every φ: B → C with φ∘left = top and right∘φ = bottom.
inline FillerSet enumerate_fillers(const Square& s) {
    FunctorConstraints c(s.left.dst, s.right.src);
    c.under(s.left, s.top);
    c.over(s.right, s.bottom);
    return {s, enumerate_functors(c)};
}

/// A map `f` in the slice over A, presented with the extension `a` of its
/// codomain: the object dom f carries structure a∘f.
struct SliceMorphism {
    Functor f;
    Functor a;

    Functor structure_dom() const { return a * f; }
    bool operator==(const SliceMorphism&) const = default;
};

inline SliceMorphism slice_identity(const Functor& a) { return {identity_functor(a.src), a}; }

/// (f₂, a₂)∘(f₁, a₁) = (f₂∘f₁, a₂), defined when a₁ = a₂∘f₂.
inline SliceMorphism slice_morphism_compose(const SliceMorphism& m2, const SliceMorphism& m1) {
    if (!same_category(m1.f.dst, m2.f.src) || !same_category(m1.a.dst, m2.a.dst) ||
        m1.a != m2.a * m2.f)
        fail(ErrorKind::NotComposableInSlice, "extension of first map differs from a₂∘f₂");
    return {m2.f * m1.f, m2.a};
}

/// An adjunction between slice categories, given by its action on objects
/// (structure maps into the base) and arrows, with unit and counit.
///
/// `left_map(y, y2, h)` is the image of h: dom y → dom y2 with y2∘h = y; the
/// unit at y is a map dom y → dom right_obj(left_obj(y)) and the counit at x
/// is a map dom left_obj(right_obj(x)) → dom x.
struct SliceAdjunction {
    std::function<Functor(const Functor&)> left_obj;
    std::function<Functor(const Functor&, const Functor&, const Functor&)> left_map;
    std::function<Functor(const Functor&)> right_obj;
    std::function<Functor(const Functor&, const Functor&, const Functor&)> right_map;
    std::function<Functor(const Functor&)> unit;
    std::function<Functor(const Functor&)> counit;
};

inline SliceAdjunction identity_slice_adjunction() {
    SliceAdjunction adj;
    adj.left_obj = [](const Functor& y) { return y; };
    adj.right_obj = [](const Functor& x) { return x; };
    adj.left_map = [](const Functor&, const Functor&, const Functor& h) { return h; };
    adj.right_map = [](const Functor&, const Functor&, const Functor& h) { return h; };
    adj.unit = [](const Functor& y) { return identity_functor(y.src); };
    adj.counit = [](const Functor& x) { return identity_functor(x.src); };
    return adj;
}

/// Checks both triangle identities at a left object y and a right object x.
inline ValidationReport check_triangles(const SliceAdjunction& adj, const Functor& y, const Functor& x) {
    ValidationReport r;
    Functor Fy = adj.left_obj(y);
    Functor lhs1 = adj.counit(Fy) * adj.left_map(y, adj.right_obj(Fy), adj.unit(y));
    ++r.checked;
    if (lhs1 != identity_functor(Fy.src)) r.add("triangle εF∘Fη", "at left object");
    Functor Gx = adj.right_obj(x);
    Functor lhs2 = adj.right_map(adj.left_obj(Gx), x, adj.counit(x)) * adj.unit(Gx);
    ++r.checked;
    if (lhs2 != identity_functor(Gx.src)) r.add("triangle Gε∘ηG", "at right object");
    return r;
}

/// Transposes the problem (u, v): j → G k, where j = (j, y2) is a slice map
/// over the left base and k = (k, x2) over the right base, into the problem
/// (ū, v̄): F j → k with ū = ε∘F u and v̄ = ε∘F v.
inline Square transpose_lifting_problem(const SliceAdjunction& adj, const SliceMorphism& j,
                                        const SliceMorphism& k, const Square& s) {
    const Functor y1 = j.structure_dom();
    const Functor& y2 = j.a;
    const Functor x1 = k.structure_dom();
    const Functor& x2 = k.a;
    auto tri = check_triangles(adj, y2, x1);
    tri.merge(check_triangles(adj, y1, x2));
    if (!tri.ok()) fail(ErrorKind::AdjunctionInvalid, tri.summary());
    const Functor Gx1 = adj.right_obj(x1);
    const Functor Gx2 = adj.right_obj(x2);
    Functor Fj = adj.left_map(y1, y2, j.f);
    Functor Gk = adj.right_map(x1, x2, k.f);
    if (s.left != j.f || s.right != Gk)
        fail(ErrorKind::BoundaryMismatch, "problem legs are not j and G k");
    Functor ubar = adj.counit(x1) * adj.left_map(y1, Gx1, s.top);
    Functor vbar = adj.counit(x2) * adj.left_map(y2, Gx2, s.bottom);
    return {Fj, k.f, ubar, vbar};
}

/// Inverse direction: (ū, v̄): F j → k ↦ (G ū∘η, G v̄∘η): j → G k.
inline Square untranspose_lifting_problem(const SliceAdjunction& adj, const SliceMorphism& j,
                                          const SliceMorphism& k, const Square& t) {
    const Functor y1 = j.structure_dom();
    const Functor& y2 = j.a;
    const Functor x1 = k.structure_dom();
    const Functor& x2 = k.a;
    Functor u = adj.right_map(adj.left_obj(y1), x1, t.top) * adj.unit(y1);
    Functor v = adj.right_map(adj.left_obj(y2), x2, t.bottom) * adj.unit(y2);
    return {j.f, adj.right_map(x1, x2, k.f), u, v};
}

/// A filler ψ: dom F y2 → dom x1 of the transposed problem gives the
/// filler G ψ∘η of the original.
inline Functor untranspose_filler(const SliceAdjunction& adj, const SliceMorphism& j,
                                  const SliceMorphism& k, const Functor& psi) {
    return adj.right_map(adj.left_obj(j.a), k.structure_dom(), psi) * adj.unit(j.a);
}

/// A filler φ of the original problem gives ε∘F φ for the transposed one.
inline Functor transpose_filler(const SliceAdjunction& adj, const SliceMorphism& j,
                                const SliceMorphism& k, const Functor& phi) {
    const Functor x1 = k.structure_dom();
    return adj.counit(x1) * adj.left_map(j.a, adj.right_obj(x1), phi);
}

}  // namespace awfslab
