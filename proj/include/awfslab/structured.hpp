#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "awfslab/squares.hpp"

namespace awfslab {

// ---------------------------------------------------------------- split monos

struct SplitMono {
    Functor i;
    Functor r;
};

inline ValidationReport validate_split_mono(const SplitMono& m) {
    ValidationReport rep;
    rep.merge(validate_functor(m.i), "section");
    rep.merge(validate_functor(m.r), "retraction");
    ++rep.checked;
    if (!same_category(m.i.dst, m.r.src) || !same_category(m.r.dst, m.i.src) ||
        m.r * m.i != identity_functor(m.i.src))
        rep.add("retraction law r∘i = id", "");
    return rep;
}

// ----------------------------------------------------------- split reflections

/// A section R: S → T with left adjoint retraction L and unit θ: 1 ⇒ R∘L
/// whose counit is the identity.
struct SplitReflection {
    Functor R;
    Functor L;
    NatTransformation theta;

    const CatRef& small() const { return R.src; }
    const CatRef& big() const { return R.dst; }
    Mor unit(Obj t) const { return theta.at(t); }

    bool operator==(const SplitReflection&) const = default;
};

inline SplitReflection make_reflection(const Functor& R, const Functor& L, std::vector<Mor> unit) {
    return {R, L, NatTransformation{identity_functor(R.dst), R * L, std::move(unit)}};
}

inline SplitReflection identity_reflection(const CatRef& c) {
    Functor id = identity_functor(c);
    return {id, id, identity_nat(id)};
}

inline SplitMono underlying_split_mono(const SplitReflection& sr) { return {sr.R, sr.L}; }

inline ValidationReport validate_split_reflection(const SplitReflection& sr) {
    ValidationReport rep;
    rep.merge(validate_functor(sr.R), "section");
    rep.merge(validate_functor(sr.L), "retraction");
    if (!rep.ok()) return rep;
    ++rep.checked;
    if (!same_category(sr.R.dst, sr.L.src) || !same_category(sr.L.dst, sr.R.src)) {
        rep.add("reflection boundary", "R and L are not opposite");
        return rep;
    }
    ++rep.checked;
    if (sr.L * sr.R != identity_functor(sr.R.src)) rep.add("identity counit L∘R = id", "");
    ++rep.checked;
    if (sr.theta.source != identity_functor(sr.big()) || sr.theta.target != sr.R * sr.L) {
        rep.add("unit type 1 ⇒ R∘L", "");
        return rep;
    }
    rep.merge(validate_nat(sr.theta), "unit");
    if (!rep.ok()) return rep;
    const FinCategory& S = *sr.small();
    const FinCategory& T = *sr.big();
    for (Obj s = 0; s < static_cast<Obj>(S.object_count()); ++s) {
        ++rep.checked;
        if (sr.unit(sr.R.o(s)) != T.identity(sr.R.o(s)))
            rep.add("triangle θ_R = id", S.object_name(s));
    }
    for (Obj t = 0; t < static_cast<Obj>(T.object_count()); ++t) {
        ++rep.checked;
        if (sr.L.m(sr.unit(t)) != S.identity(sr.L.o(t)))
            rep.add("triangle L(θ) = id", T.object_name(t));
    }
    return rep;
}

/// Composite of s1 (R₁: S → T) followed by s2 (R₂: T → V): section R₂∘R₁,
/// retraction L₁∘L₂ and unit θ_v = R₂(θ¹_{L₂ v})∘θ²_v.
inline SplitReflection compose_split_reflections(const SplitReflection& s2, const SplitReflection& s1) {
    if (!same_category(s1.big(), s2.small()))
        fail(ErrorKind::BoundaryMismatch, "reflections are not composable");
    const FinCategory& V = *s2.big();
    std::vector<Mor> unit;
    for (Obj v = 0; v < static_cast<Obj>(V.object_count()); ++v)
        unit.push_back(V.comp(s2.R.m(s1.unit(s2.L.o(v))), s2.unit(v)));
    return make_reflection(s2.R * s1.R, s1.L * s2.L, std::move(unit));
}

// ---------------------------------------------------------- split fibrations

enum class Orientation { cartesian, cocartesian };

inline std::string to_string(Orientation o) {
    return o == Orientation::cartesian ? "cartesian" : "cocartesian";
}

/// A functor p: E → B with a chosen cleavage. For the cartesian orientation
/// the key (e, f) requires cod f = p e and the lift ends at e; for the
/// cocartesian orientation dom f = p e and the lift starts at e.
struct SplitFibration {
    Functor p;
    Orientation orientation = Orientation::cartesian;
    std::vector<Mor> lifts;

    const CatRef& total() const { return p.src; }
    const CatRef& base() const { return p.dst; }

    bool is_key(Obj e, Mor f) const {
        return orientation == Orientation::cartesian ? base()->cod(f) == p.o(e)
                                                     : base()->dom(f) == p.o(e);
    }
    Mor lift(Obj e, Mor f) const {
        Mor l = lifts[e * base()->morphism_count() + f];
        if (l == kNone)
            fail(ErrorKind::MalformedCleavage, "no lift of " + base()->morphism_name(f) + " at " +
                                                   total()->object_name(e));
        return l;
    }
    /// The far endpoint of the lift: f*e for cartesian, f_! e for cocartesian.
    Obj transport(Obj e, Mor f) const {
        Mor l = lift(e, f);
        return orientation == Orientation::cartesian ? total()->dom(l) : total()->cod(l);
    }

    bool operator==(const SplitFibration&) const = default;
};

/// Builds a cleavage by evaluating `choose(e, f)` at every key.
inline SplitFibration make_fibration(const Functor& p, Orientation o,
                                     const std::function<Mor(Obj, Mor)>& choose) {
    SplitFibration sf{p, o, {}};
    const auto nE = static_cast<Obj>(p.src->object_count());
    const auto nB = static_cast<Mor>(p.dst->morphism_count());
    sf.lifts.assign(static_cast<std::size_t>(nE) * nB, kNone);
    for (Obj e = 0; e < nE; ++e)
        for (Mor f = 0; f < nB; ++f)
            if (sf.is_key(e, f)) sf.lifts[e * nB + f] = choose(e, f);
    return sf;
}

inline SplitFibration identity_fibration(const CatRef& c, Orientation o = Orientation::cartesian) {
    return make_fibration(identity_functor(c), o, [](Obj, Mor f) { return f; });
}

/// Replaces one cleavage entry; used to build adversarial fixtures.
inline SplitFibration with_lift(SplitFibration sf, Obj e, Mor f, Mor l) {
    sf.lifts[e * sf.base()->morphism_count() + f] = l;
    return sf;
}

namespace detail {

inline bool has_universal_property(const SplitFibration& sf, Mor l) {
    const FinCategory& E = *sf.total();
    const FinCategory& B = *sf.base();
    const Functor& p = sf.p;
    const auto nE = static_cast<Obj>(E.object_count());
    if (sf.orientation == Orientation::cartesian) {
        Obj e1 = E.dom(l), e = E.cod(l);
        Mor f = p.m(l);
        for (Obj x = 0; x < nE; ++x)
            for (Mor g : E.hom(x, e))
                for (Mor h : B.hom(p.o(x), p.o(e1))) {
                    if (B.compose(f, h) != p.m(g)) continue;
                    int n = 0;
                    for (Mor k : E.hom(x, e1))
                        if (p.m(k) == h && E.compose(l, k) == g) ++n;
                    if (n != 1) return false;
                }
    } else {
        Obj e = E.dom(l), e1 = E.cod(l);
        Mor f = p.m(l);
        for (Obj x = 0; x < nE; ++x)
            for (Mor g : E.hom(e, x))
                for (Mor h : B.hom(p.o(e1), p.o(x))) {
                    if (B.compose(h, f) != p.m(g)) continue;
                    int n = 0;
                    for (Mor k : E.hom(e1, x))
                        if (p.m(k) == h && E.compose(k, l) == g) ++n;
                    if (n != 1) return false;
                }
    }
    return true;
}

}  // namespace detail

/// Checks lift typing, (co)cartesianness by enumeration and the splitting
/// laws. A missing cleavage entry raises MalformedCleavage.
inline ValidationReport validate_split_fibration(const SplitFibration& sf) {
    ValidationReport rep;
    rep.merge(validate_functor(sf.p), "functor");
    if (!rep.ok()) return rep;
    const FinCategory& E = *sf.total();
    const FinCategory& B = *sf.base();
    const auto nE = static_cast<Obj>(E.object_count());
    const auto nB = static_cast<Mor>(B.morphism_count());
    if (sf.lifts.size() != static_cast<std::size_t>(nE) * nB)
        fail(ErrorKind::MalformedCleavage, "cleavage table has the wrong size");
    const bool cart = sf.orientation == Orientation::cartesian;
    auto key = [&](Obj e, Mor f) { return "(" + E.object_name(e) + ", " + B.morphism_name(f) + ")"; };
    bool typed = true;
    for (Obj e = 0; e < nE; ++e)
        for (Mor f = 0; f < nB; ++f) {
            if (!sf.is_key(e, f)) continue;
            Mor l = sf.lift(e, f);
            ++rep.checked;
            if (sf.p.m(l) != f || (cart ? E.cod(l) != e : E.dom(l) != e)) {
                rep.add("lift lies over f at e", key(e, f));
                typed = false;
                continue;
            }
            ++rep.checked;
            if (!detail::has_universal_property(sf, l))
                rep.add(cart ? "lift is cartesian" : "lift is cocartesian", key(e, f));
        }
    if (!typed) return rep;
    for (Obj e = 0; e < nE; ++e) {
        ++rep.checked;
        if (sf.lift(e, B.identity(sf.p.o(e))) != E.identity(e))
            rep.add("splitting: identity lifts to identity", E.object_name(e));
    }
    for (Obj e = 0; e < nE; ++e)
        for (Mor f = 0; f < nB; ++f) {
            if (!sf.is_key(e, f)) continue;
            Obj e1 = sf.transport(e, f);
            for (Mor g = 0; g < nB; ++g) {
                if (!sf.is_key(e1, g)) continue;
                ++rep.checked;
                // cartesian: lift(e, f∘g) = lift(e, f)∘lift(f*e, g)
                // cocartesian: lift(e, g∘f) = lift(f_! e, g)∘lift(e, f)
                Mor composite = cart ? B.compose(f, g) : B.compose(g, f);
                Mor expected = cart ? E.compose(sf.lift(e, f), sf.lift(e1, g))
                                    : E.compose(sf.lift(e1, g), sf.lift(e, f));
                if (sf.lift(e, composite) != expected)
                    rep.add("splitting: composite lifts to composite",
                            key(e, f) + " then " + B.morphism_name(g));
            }
        }
    return rep;
}

/// q∘p with the cleavage "lift along q first, then lift that lift along p".
inline SplitFibration compose_split_fibrations(const SplitFibration& p, const SplitFibration& q) {
    if (!same_category(p.base(), q.total()))
        fail(ErrorKind::BoundaryMismatch, "base of first fibration is not the total of second");
    if (p.orientation != q.orientation)
        fail(ErrorKind::OrientationMismatch, "cannot compose " + to_string(p.orientation) +
                                                 " with " + to_string(q.orientation));
    return make_fibration(q.p * p.p, p.orientation,
                          [&](Obj e, Mor f) { return p.lift(e, q.lift(p.p.o(e), f)); });
}

/// The pullback of p: E → B along v: B′ → B together with the projection
/// E ×_B B′ → E forming a structured square with p.
struct PulledBackFibration {
    SplitFibration fib;
    Functor top;
    Pullback pb;
};

inline PulledBackFibration pullback_fibration_square(const SplitFibration& sf, const Functor& v) {
    Pullback pb = pullback_category(sf.p, v);
    SplitFibration out = make_fibration(pb.right, sf.orientation, [&](Obj x, Mor f) {
        return pb.morphism_of(sf.lift(pb.obj_pairs[x].first, v.m(f)), f);
    });
    return {out, pb.left, pb};
}

inline SplitFibration pullback_split_fibration(const SplitFibration& sf, const Functor& v) {
    return pullback_fibration_square(sf, v).fib;
}

/// In groupoids every split fibration is a split opfibration and vice versa:
/// the flipped lift of f at e is the inverse of the lift of f⁻¹ at e.
inline SplitFibration fibration_opfibration_convert(const SplitFibration& sf) {
    const FinCategory& E = *sf.total();
    const FinCategory& B = *sf.base();
    if (!E.is_groupoid() || !B.is_groupoid())
        fail(ErrorKind::NotAGroupoid, "orientation conversion needs groupoids");
    Orientation flipped = sf.orientation == Orientation::cartesian ? Orientation::cocartesian
                                                                   : Orientation::cartesian;
    return make_fibration(sf.p, flipped,
                          [&](Obj e, Mor f) { return E.inverse(sf.lift(e, B.inverse(f))); });
}

/// Returns the fibration in the requested orientation, converting through
/// inverses when needed.
inline SplitFibration oriented(const SplitFibration& sf, Orientation o) {
    return sf.orientation == o ? sf : fibration_opfibration_convert(sf);
}

// --------------------------------------------------------- structured squares

enum class StructureKind { mono, reflection, fibration };

inline std::string to_string(StructureKind k) {
    switch (k) {
        case StructureKind::mono: return "mono";
        case StructureKind::reflection: return "reflection";
        case StructureKind::fibration: return "fibration";
    }
    return "unknown";
}

/// A square between two structured maps. For reflections the legs are the
/// sections; for fibrations the projections.
struct StructuredSquare {
    StructureKind kind;
    Square square;
    std::optional<SplitMono> mono_left, mono_right;
    std::optional<SplitReflection> refl_left, refl_right;
    std::optional<SplitFibration> fib_left, fib_right;
};

inline StructuredSquare reflection_square(const SplitReflection& left, const SplitReflection& right,
                                          const Functor& top, const Functor& bottom) {
    StructuredSquare s{StructureKind::reflection, {left.R, right.R, top, bottom}, {}, {}, left, right, {}, {}};
    return s;
}

inline StructuredSquare fibration_square(const SplitFibration& left, const SplitFibration& right,
                                         const Functor& top, const Functor& bottom) {
    StructuredSquare s{StructureKind::fibration, {left.p, right.p, top, bottom}, {}, {}, {}, {}, left, right};
    return s;
}

inline StructuredSquare mono_square(const SplitMono& left, const SplitMono& right, const Functor& top,
                                    const Functor& bottom) {
    StructuredSquare s{StructureKind::mono, {left.i, right.i, top, bottom}, left, right, {}, {}, {}, {}};
    return s;
}

inline ValidationReport check_structured_square(const StructuredSquare& ss) {
    ValidationReport rep;
    const Square& sq = ss.square;
    auto mismatch = [&](const std::string& what) { fail(ErrorKind::KindMismatch, what); };
    switch (ss.kind) {
        case StructureKind::mono:
            if (!ss.mono_left || !ss.mono_right) mismatch("mono square without split mono witnesses");
            if (ss.mono_left->i != sq.left || ss.mono_right->i != sq.right)
                mismatch("square legs are not the witnessed sections");
            break;
        case StructureKind::reflection:
            if (!ss.refl_left || !ss.refl_right) mismatch("reflection square without reflection witnesses");
            if (ss.refl_left->R != sq.left || ss.refl_right->R != sq.right)
                mismatch("square legs are not the witnessed sections");
            break;
        case StructureKind::fibration:
            if (!ss.fib_left || !ss.fib_right) mismatch("fibration square without fibration witnesses");
            if (ss.fib_left->p != sq.left || ss.fib_right->p != sq.right)
                mismatch("square legs are not the witnessed fibrations");
            if (ss.fib_left->orientation != ss.fib_right->orientation)
                mismatch("fibration square between different orientations");
            break;
    }
    rep.merge(validate_square(sq));
    if (!rep.ok()) return rep;
    const Functor& X = sq.top;
    const Functor& Y = sq.bottom;
    switch (ss.kind) {
        case StructureKind::mono: {
            ++rep.checked;
            if (X * ss.mono_left->r != ss.mono_right->r * Y) rep.add("retractions commute", "X∘r != r′∘Y");
            break;
        }
        case StructureKind::reflection: {
            const auto& l = *ss.refl_left;
            const auto& r = *ss.refl_right;
            ++rep.checked;
            if (X * l.L != r.L * Y) rep.add("retractions commute", "X∘L != L′∘Y");
            const FinCategory& T = *l.big();
            for (Obj t = 0; t < static_cast<Obj>(T.object_count()); ++t) {
                ++rep.checked;
                if (Y.m(l.unit(t)) != r.unit(Y.o(t))) rep.add("units commute", T.object_name(t));
            }
            break;
        }
        case StructureKind::fibration: {
            const auto& p = *ss.fib_left;
            const auto& q = *ss.fib_right;
            const FinCategory& E = *p.total();
            const FinCategory& B = *p.base();
            for (Obj e = 0; e < static_cast<Obj>(E.object_count()); ++e)
                for (Mor f = 0; f < static_cast<Mor>(B.morphism_count()); ++f) {
                    if (!p.is_key(e, f)) continue;
                    ++rep.checked;
                    if (X.m(p.lift(e, f)) != q.lift(X.o(e), Y.m(f)))
                        rep.add("cleavages commute",
                                "(" + E.object_name(e) + ", " + B.morphism_name(f) + ")");
                }
            break;
        }
    }
    return rep;
}

}  // namespace awfslab
