#pragma once

#include <string>
#include <vector>

#include "awfslab/lifting.hpp"
#include "awfslab/transport.hpp"

namespace awfslab {

/// A split reflection R: S → T together with an extension U: T → B.
struct ExtendedReflection {
    SplitReflection refl;
    Functor U;
};

/// The reflection over A obtained by pulling a reflection over B back along
/// a split opfibration P: A → B.
///
/// F(a, t) = (Uθ_t)_! a, G(a, t) = (F(a, t), L t), θ_(a,t) = (lift(a, Uθ_t), θ_t);
/// the section is P*R(a, s) = (a, R s).
struct FrobeniusTransport {
    SplitFibration P;
    ExtendedReflection input;
    Pullback big;    // A ×_B T
    Pullback small;  // A ×_B S
    Functor F;       // big → A
    SplitReflection reflection;
    ValidationReport proof;  // the three identities used to show the result is split
};

namespace detail {

inline SplitFibration as_opfibration(const SplitFibration& P) {
    if (P.orientation == Orientation::cocartesian) return P;
    if (!P.total()->is_groupoid() || !P.base()->is_groupoid())
        fail(ErrorKind::OrientationMismatch, "Frobenius transport needs a split opfibration");
    return fibration_opfibration_convert(P);
}

}  // namespace detail

inline FrobeniusTransport frobenius_transport(const SplitFibration& P_in, const SplitReflection& refl,
                                              const Functor& U) {
    FrobeniusTransport out;
    out.P = detail::as_opfibration(P_in);
    out.input = {refl, U};
    const SplitFibration& P = out.P;
    if (!same_category(U.src, refl.big()) || !same_category(U.dst, P.base()))
        fail(ErrorKind::ExtensionMismatch, "extension does not run from the reflection's codomain to the base");
    const FinCategory& A = *P.total();
    const FinCategory& T = *refl.big();
    out.big = pullback_category(P.p, U);
    out.small = pullback_category(P.p, U * refl.R);
    const Pullback& big = out.big;
    const Pullback& small = out.small;

    auto lift_at = [&](Obj x) {
        auto [a, t] = big.obj_pairs[x];
        return P.lift(a, U.m(refl.unit(t)));
    };
    Functor F{big.cat, P.total(), {}, {}};
    Functor G{big.cat, small.cat, {}, {}};
    std::vector<Mor> theta;
    for (Obj x = 0; x < static_cast<Obj>(big.obj_pairs.size()); ++x) {
        auto [a, t] = big.obj_pairs[x];
        Mor l = lift_at(x);
        F.obj.push_back(A.cod(l));
        G.obj.push_back(small.object_of(A.cod(l), refl.L.o(t)));
        theta.push_back(big.morphism_of(l, refl.unit(t)));
    }
    for (Mor m = 0; m < static_cast<Mor>(big.mor_pairs.size()); ++m) {
        auto [alpha, k] = big.mor_pairs[m];
        Obj x = big.cat->dom(m), x1 = big.cat->cod(m);
        Mor target = A.comp(lift_at(x1), alpha);
        Mor over = U.m(refl.R.m(refl.L.m(k)));
        Mor chosen = kNone;
        int n = 0;
        for (Mor chi : A.hom(F.o(x), F.o(x1)))
            if (P.p.m(chi) == over && A.compose(chi, lift_at(x)) == target) {
                chosen = chi;
                ++n;
            }
        if (n != 1) fail(ErrorKind::NotAFibration, "chosen lift is not cocartesian at " + big.cat->object_name(x));
        F.mor.push_back(chosen);
        G.mor.push_back(small.morphism_of(chosen, refl.L.m(k)));
    }
    Functor section = big.induced(small.left, refl.R * small.right);
    out.F = F;
    out.reflection = make_reflection(section, G, theta);
    (void)T;

    ValidationReport& pr = out.proof;
    for (auto [a, s] : small.obj_pairs) {
        ++pr.checked;
        if (P.lift(a, U.m(refl.unit(refl.R.o(s)))) != A.identity(a))
            pr.add("lift of Uθ_Rs is the identity", pair_name(A.object_name(a), refl.small()->object_name(s)));
    }
    ++pr.checked;
    if (G * section != identity_functor(small.cat)) pr.add("G∘P*R = id", "");
    for (Obj y = 0; y < static_cast<Obj>(small.obj_pairs.size()); ++y) {
        ++pr.checked;
        if (out.reflection.unit(section.o(y)) != big.cat->identity(section.o(y)))
            pr.add("θ at P*R(a, s) is the identity pair", small.cat->object_name(y));
    }
    return out;
}

/// The result validated as a split reflection, together with the proof identities.
inline ValidationReport validate_frobenius_transport(const FrobeniusTransport& t) {
    ValidationReport rep;
    rep.merge(validate_split_reflection(t.reflection), "transported reflection");
    rep.merge(t.proof, "construction");
    return rep;
}

/// Transports both sides of a reflection square (X, Y): R → R′ over B and
/// checks that (P*X, P*Y) is again a reflection square.
inline ValidationReport frobenius_preserves_squares(const SplitFibration& P, const StructuredSquare& sq,
                                                    const Functor& U, const Functor& U2) {
    if (sq.kind != StructureKind::reflection || !sq.refl_left || !sq.refl_right)
        fail(ErrorKind::KindMismatch, "expected a square of reflections");
    const Functor& X = sq.square.top;
    const Functor& Y = sq.square.bottom;
    if (!same_category(U2.src, Y.dst) || U2 * Y != U)
        fail(ErrorKind::ExtensionMismatch, "U′∘Y != U");
    ValidationReport rep;
    rep.merge(check_structured_square(sq), "input square");
    if (!rep.ok()) return rep;
    FrobeniusTransport t1 = frobenius_transport(P, *sq.refl_left, U);
    FrobeniusTransport t2 = frobenius_transport(P, *sq.refl_right, U2);
    Functor PX = t2.small.induced(t1.small.left, X * t1.small.right);
    Functor PY = t2.big.induced(t1.big.left, Y * t1.big.right);
    ++rep.checked;
    if (t2.reflection.L * PY != PX * t1.reflection.L) rep.add("G′∘P*Y = P*X∘G", "");
    rep.merge(check_structured_square(reflection_square(t1.reflection, t2.reflection, PX, PY)), "transported square");
    return rep;
}

/// For r1: S → T and r2: T → V with U: V → B, compares the transport of
/// the composite with the composite of the transports (r2 along U, r1 along U∘R₂).
inline ValidationReport frobenius_preserves_composition(const SplitFibration& P, const SplitReflection& r1,
                                                        const SplitReflection& r2, const Functor& U) {
    FrobeniusTransport t2 = frobenius_transport(P, r2, U);
    FrobeniusTransport t1 = frobenius_transport(P, r1, U * r2.R);
    FrobeniusTransport tc = frobenius_transport(P, compose_split_reflections(r2, r1), U);
    SplitReflection pasted = compose_split_reflections(t2.reflection, t1.reflection);
    ValidationReport rep;
    ++rep.checked;
    if (t1.F * t2.reflection.L != tc.F) rep.add("F′∘G = F″", "");
    ++rep.checked;
    if (t1.reflection.L * t2.reflection.L != tc.reflection.L) rep.add("G′∘G = G″", "");
    ++rep.checked;
    if (pasted.R != tc.reflection.R) rep.add("P*R″ = P*R₂∘P*R₁", "");
    const FinCategory& C = *tc.big.cat;
    for (Obj x = 0; x < static_cast<Obj>(C.object_count()); ++x) {
        ++rep.checked;
        if (pasted.unit(x) != tc.reflection.unit(x)) rep.add("θ″ = (P*R∘θ′∘G).θ", C.object_name(x));
    }
    return rep;
}

/// A reflection R: S → T with extension U: T → A into the total of P; its
/// image under P_! carries the extension P∘U.
inline ValidationReport strong_frobenius_checks(const SplitFibration& P_in, const std::vector<ExtendedReflection>& corpus) {
    SplitFibration P = detail::as_opfibration(P_in);
    ValidationReport rep;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [refl, U] = corpus[i];
        const std::string tag = "case " + std::to_string(i);
        if (!same_category(U.dst, P.total())) fail(ErrorKind::ExtensionMismatch, "extension must land in the total category");
        FrobeniusTransport t = frobenius_transport(P, refl, P.p * U);
        // counit (π_S, π_T): P*P_! R → R
        auto counit = check_structured_square(reflection_square(t.reflection, refl, t.small.right, t.big.right));
        rep.merge(counit, tag + " counit square (π_S, π_T)");
        // unit (U∘R ×_B 1, U ×_B 1): R → P*P_! R
        Functor top = t.small.induced(U * refl.R, identity_functor(refl.small()));
        Functor bottom = t.big.induced(U, identity_functor(refl.big()));
        auto unit = check_structured_square(reflection_square(refl, t.reflection, top, bottom));
        rep.merge(unit, tag + " unit square (UR ×_B 1, U ×_B 1)");
        const FinCategory& T = *refl.big();
        for (Obj c = 0; c < static_cast<Obj>(T.object_count()); ++c) {
            ++rep.checked;
            Obj lhs = U.o(refl.R.o(refl.L.o(c)));
            Obj rhs = P.transport(U.o(c), P.p.m(U.m(refl.unit(c))));
            if (lhs != rhs)
                rep.add("URLc = (PUθ_c)_! Uc",
                        tag + " c=" + T.object_name(c) + ": " + P.total()->object_name(lhs) + " vs " +
                            P.total()->object_name(rhs));
        }
    }
    return rep;
}

// --------------------------------------------------------------- pushforward

/// P_* of a split fibration x over A, as a split fibration over B.
inline SplitFibration pushforward_structure(const SplitFibration& P, const SplitFibration& x) {
    return pushforward_fibration(P, x);
}

/// A lifting problem (u, U): R → P_* x in the slice over B.
struct PushforwardProblem {
    ExtendedReflection refl;
    Functor u;  // S → P_* x
};

struct TheoremWitness {
    Functor direct;      // canonical lift against P_* x
    Functor transposed;  // transpose, Frobenius reflection, lift against x, transpose back
};

inline TheoremWitness theorem_witness(const SplitFibration& P, const SplitFibration& x, const SplitFibration& pushed,
                                      const PushforwardProblem& pr) {
    const auto& [refl, U] = pr.refl;
    SplitFibration pc = oriented(pushed, Orientation::cartesian);
    Functor direct = canonical_lift(refl, pc, Square{refl.R, pc.p, pr.u, U});

    SliceAdjunction adj = pullback_pushforward_adjunction(P);
    Functor ubar = left_adjunct(adj, U * refl.R, x.p, pr.u);
    FrobeniusTransport fr = frobenius_transport(P, refl, U);
    SplitFibration xc = oriented(x, Orientation::cartesian);
    Functor psi = canonical_lift(fr.reflection, xc, Square{fr.reflection.R, xc.p, ubar, fr.big.left});
    Functor transposed = right_adjunct(adj, U, x.p, psi);
    return {direct, transposed};
}

/// Both constructions of the filler agree on every problem.
inline ValidationReport pushforward_filler_agreement(const SplitFibration& P, const SplitFibration& x,
                                                     const std::vector<PushforwardProblem>& problems) {
    ValidationReport rep;
    SplitFibration pushed = pushforward_structure(P, x);
    for (std::size_t i = 0; i < problems.size(); ++i) {
        TheoremWitness w = theorem_witness(P, x, pushed, problems[i]);
        ++rep.checked;
        if (w.direct != w.transposed) rep.add("filler agreement", "problem " + std::to_string(i));
    }
    return rep;
}

// ----------------------------------------------------------- Beck-Chevalley

/// For a structured pullback square (X, Y): P → Q of split opfibrations,
/// checks X((Uθ_t)_! a) = (YUθ_t)_! X a on every corpus reflection, and that
/// the α-component square (α_{U∘R}, α_U) is a reflection square.
inline ValidationReport beck_chevalley_check(const StructuredSquare& sq, const std::vector<ExtendedReflection>& corpus) {
    if (sq.kind != StructureKind::fibration || !sq.fib_left || !sq.fib_right)
        fail(ErrorKind::KindMismatch, "expected a square of fibrations");
    require_pullback_square(sq.square);
    auto compat = check_structured_square(sq);
    if (!compat.ok()) fail(ErrorKind::CleavageIncompatible, compat.summary());
    SplitFibration P = detail::as_opfibration(*sq.fib_left);
    SplitFibration Q = detail::as_opfibration(*sq.fib_right);
    const Functor& X = sq.square.top;
    const Functor& Y = sq.square.bottom;
    ValidationReport rep;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [refl, U] = corpus[i];
        const std::string tag = "case " + std::to_string(i);
        FrobeniusTransport t1 = frobenius_transport(P, refl, U);
        FrobeniusTransport t2 = frobenius_transport(Q, refl, Y * U);
        for (auto [a, t] : t1.big.obj_pairs) {
            ++rep.checked;
            Mor f = U.m(refl.unit(t));
            if (X.o(P.transport(a, f)) != Q.transport(X.o(a), Y.m(f)))
                rep.add("X((Uθ)_! a) = (YUθ)_! X a", tag + " at " + pair_name(P.total()->object_name(a), refl.big()->object_name(t)));
        }
        Functor alpha_small = t2.small.induced(X * t1.small.left, t1.small.right);
        Functor alpha_big = t2.big.induced(X * t1.big.left, t1.big.right);
        rep.merge(check_structured_square(reflection_square(t1.reflection, t2.reflection, alpha_small, alpha_big)),
                  tag + " α-component square");
    }
    return rep;
}

}  // namespace awfslab
