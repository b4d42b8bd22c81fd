#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "awfslab/frobenius.hpp"

namespace awfslab {

/// A dependent type over Γ: a cartesian split fibration E → Γ.
struct TypeOver {
    SplitFibration fib;

    const CatRef& context() const { return fib.base(); }
    const CatRef& total() const { return fib.total(); }
    bool operator==(const TypeOver&) const = default;
};

/// A term: a section of the type's fibration.
struct TermOf {
    TypeOver type;
    Functor section;
};

inline TypeOver make_type(const SplitFibration& fib) {
    if (fib.orientation != Orientation::cartesian)
        fail(ErrorKind::JudgmentMismatch, "types are cartesian split fibrations");
    return {fib};
}

inline TermOf make_term(const TypeOver& T, const Functor& section) {
    if (!same_category(section.src, T.context()) || !same_category(section.dst, T.total()) ||
        T.fib.p * section != identity_functor(T.context()))
        fail(ErrorKind::JudgmentMismatch, "not a section of the type");
    return {T, section};
}

inline ValidationReport validate_type(const TypeOver& T) {
    ValidationReport rep;
    ++rep.checked;
    if (!T.context()->is_groupoid()) rep.add("context is a groupoid", "");
    rep.merge(validate_split_fibration(T.fib));
    return rep;
}

// ------------------------------------------------------------- substitution

inline TypeOver substitute(const Functor& sigma, const TypeOver& T) {
    if (!same_category(sigma.dst, T.context())) fail(ErrorKind::BoundaryMismatch, "substitution target is not the context");
    return {pullback_split_fibration(T.fib, sigma)};
}

/// The substitution square (top, σ): T[σ] → T.
inline StructuredSquare substitution_square(const Functor& sigma, const TypeOver& T) {
    PulledBackFibration pf = pullback_fibration_square(T.fib, sigma);
    return fibration_square(pf.fib, T.fib, pf.top, sigma);
}

/// t[σ] as a term of T[σ].
inline TermOf substitute_term(const Functor& sigma, const TermOf& t) {
    Pullback pb = pullback_category(t.type.fib.p, sigma);
    return {{pullback_split_fibration(t.type.fib, sigma)}, pb.induced(t.section * sigma, identity_functor(sigma.src))};
}

/// Checks that U and V present the same type up to the canonical renaming
/// of pairs: `iso` must be an isomorphism over the context that carries the
/// cleavage of U exactly onto that of V.
inline ValidationReport same_type_up_to_pairing(const TypeOver& U, const TypeOver& V, const Functor& iso) {
    ValidationReport rep;
    ++rep.checked;
    if (!same_category(U.context(), V.context())) {
        rep.add("same context", "");
        return rep;
    }
    ++rep.checked;
    if (!is_isomorphism(iso)) rep.add("pairing comparison is invertible", "");
    rep.merge(check_structured_square(fibration_square(U.fib, V.fib, iso, identity_functor(U.context()))),
              "pairing comparison");
    return rep;
}

/// T[id] agrees with T, and T[σ][τ] with T[σ∘τ], under pair renaming.
inline ValidationReport substitution_coherence(const TypeOver& T, const Functor& sigma, const Functor& tau) {
    ValidationReport rep;
    Pullback pid = pullback_category(T.fib.p, identity_functor(T.context()));
    rep.merge(same_type_up_to_pairing(T, substitute(identity_functor(T.context()), T),
                                      pid.induced(identity_functor(T.total()), T.fib.p)),
              "identity substitution");
    Pullback p1 = pullback_category(T.fib.p, sigma);
    Pullback p2 = pullback_category(p1.right, tau);
    Pullback pc = pullback_category(T.fib.p, sigma * tau);
    TypeOver iterated{pullback_split_fibration(pullback_split_fibration(T.fib, sigma), tau)};
    TypeOver direct = substitute(sigma * tau, T);
    rep.merge(same_type_up_to_pairing(iterated, direct, pc.induced(p1.left * p2.left, p2.right)), "composite substitution");
    return rep;
}

// ------------------------------------------------------------------- Σ-types

inline TypeOver sigma_type(const TypeOver& T, const TypeOver& S) {
    if (!same_category(S.context(), T.total())) fail(ErrorKind::BoundaryMismatch, "S is not a type over Γ.T");
    return {compose_split_fibrations(S.fib, T.fib)};
}

/// (a, b) for a: T and b: S[a].
inline TermOf pair_term(const TypeOver& T, const TypeOver& S, const TermOf& a, const TermOf& b) {
    if (a.type != T) fail(ErrorKind::JudgmentMismatch, "first component is not a term of T");
    Pullback pb = pullback_category(S.fib.p, a.section);
    if (b.type != substitute(a.section, S)) fail(ErrorKind::JudgmentMismatch, "second component is not a term of S[a]");
    return make_term(sigma_type(T, S), pb.left * b.section);
}

inline TermOf proj1(const TypeOver& T, const TypeOver& S, const TermOf& c) {
    if (c.type != sigma_type(T, S)) fail(ErrorKind::JudgmentMismatch, "not a term of Σ(T, S)");
    return make_term(T, S.fib.p * c.section);
}

inline TermOf proj2(const TypeOver& T, const TypeOver& S, const TermOf& c) {
    TermOf a = proj1(T, S, c);
    Pullback pb = pullback_category(S.fib.p, a.section);
    return make_term(substitute(a.section, S), pb.induced(c.section, identity_functor(T.context())));
}

// ------------------------------------------------------------------- Π-types

inline TypeOver pi_type(const TypeOver& T, const TypeOver& S) {
    if (!same_category(S.context(), T.total())) fail(ErrorKind::BoundaryMismatch, "S is not a type over Γ.T");
    return {oriented(pushforward_structure(T.fib, S.fib), Orientation::cartesian)};
}

/// A term of S over the extended context Γ.T.
inline TermOf lambda(const TypeOver& T, const TypeOver& S, const TermOf& t) {
    if (t.type != S) fail(ErrorKind::JudgmentMismatch, "body is not a term of S");
    const Functor id = identity_functor(T.context());
    SliceAdjunction adj = pullback_pushforward_adjunction(T.fib);
    Pullback pb = pullback_category(T.fib.p, id);
    return make_term(pi_type(T, S), right_adjunct(adj, id, S.fib.p, t.section * pb.left));
}

/// The generic application λ-body of f: the term of S over Γ.T obtained
/// from the counit.
inline TermOf apply_generic(const TypeOver& T, const TypeOver& S, const TermOf& f) {
    if (f.type != pi_type(T, S)) fail(ErrorKind::JudgmentMismatch, "not a term of Π(T, S)");
    const Functor id = identity_functor(T.context());
    SliceAdjunction adj = pullback_pushforward_adjunction(T.fib);
    Pullback pb = pullback_category(T.fib.p, id);
    Functor k = left_adjunct(adj, id, S.fib.p, f.section);
    return make_term(S, k * pb.induced(identity_functor(T.total()), T.fib.p));
}

/// app(f, a) as a term of S[a].
inline TermOf app(const TypeOver& T, const TypeOver& S, const TermOf& f, const TermOf& a) {
    if (a.type != T) fail(ErrorKind::JudgmentMismatch, "argument is not a term of T");
    TermOf body = apply_generic(T, S, f);
    Pullback pb = pullback_category(S.fib.p, a.section);
    return make_term(substitute(a.section, S), pb.induced(body.section * a.section, identity_functor(T.context())));
}

/// β: app(λ t, a) = t[a]; η: λ(app(f, −)) = f.
inline ValidationReport pi_laws(const TypeOver& T, const TypeOver& S, const std::vector<TermOf>& bodies,
                                const std::vector<TermOf>& args) {
    ValidationReport rep;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        TermOf f = lambda(T, S, bodies[i]);
        for (std::size_t j = 0; j < args.size(); ++j) {
            Pullback pb = pullback_category(S.fib.p, args[j].section);
            Functor expected = pb.induced(bodies[i].section * args[j].section, identity_functor(T.context()));
            ++rep.checked;
            if (app(T, S, f, args[j]).section != expected)
                rep.add("β: app(λ t, a) = t[a]", "body " + std::to_string(i) + ", argument " + std::to_string(j));
        }
        ++rep.checked;
        if (lambda(T, S, apply_generic(T, S, f)).section != f.section)
            rep.add("η: λ(app(f, −)) = f", "body " + std::to_string(i));
    }
    return rep;
}

// -------------------------------------------------------------- Id-types

/// The path object of T: E → Γ, factoring the diagonal E → E ×_Γ E as
/// ρ∘r with r a split reflection and ρ a split fibration.
///
/// Objects of `total` are the vertical morphisms α of E; a morphism α → β
/// is a pair (u, v) over a common base morphism with v∘α = β∘u.
struct PathObject {
    TypeOver type;
    CatRef total;
    std::vector<Mor> object_arrow;             // object ↦ α
    std::vector<std::pair<Mor, Mor>> mor_pairs;  // morphism ↦ (u, v)
    std::map<std::tuple<Obj, Mor, Mor>, Mor> mor_index;
    SplitReflection r;                         // section E → total, retraction cod
    Pullback pairs;                            // E ×_Γ E
    SplitFibration rho;                        // (dom, cod): total → E ×_Γ E
    Functor diagonal;

    Obj object_of(Mor alpha) const {
        for (Obj o = 0; o < static_cast<Obj>(object_arrow.size()); ++o)
            if (object_arrow[o] == alpha) return o;
        return kNone;
    }
    /// The morphism (u, v) out of the object x.
    Mor morphism_of(Obj x, Mor u, Mor v) const {
        auto it = mor_index.find({x, u, v});
        return it == mor_index.end() ? kNone : it->second;
    }
    TypeOver identity_type() const { return {rho}; }
};

inline PathObject id_type(const TypeOver& T) {
    const FinCategory& E = *T.total();
    const FinCategory& G = *T.context();
    if (!E.is_groupoid() || !G.is_groupoid()) fail(ErrorKind::NotAGroupoid, "path objects need groupoids");
    const Functor& p = T.fib.p;
    PathObject po;
    po.type = T;
    std::vector<std::string> names;
    std::vector<Obj> index(E.morphism_count(), kNone);
    for (Mor a = 0; a < static_cast<Mor>(E.morphism_count()); ++a)
        if (G.is_identity(p.m(a))) {
            index[a] = static_cast<Obj>(po.object_arrow.size());
            po.object_arrow.push_back(a);
            names.push_back(E.morphism_name(a));
        }
    std::vector<MorphismRecord> mors;
    std::vector<Mor> ids(po.object_arrow.size(), kNone);
    for (Obj x = 0; x < static_cast<Obj>(po.object_arrow.size()); ++x) {
        Mor alpha = po.object_arrow[x];
        for (Mor u = 0; u < static_cast<Mor>(E.morphism_count()); ++u) {
            if (E.dom(u) != E.dom(alpha)) continue;
            for (Mor v = 0; v < static_cast<Mor>(E.morphism_count()); ++v) {
                if (E.dom(v) != E.cod(alpha) || p.m(u) != p.m(v)) continue;
                Mor beta = E.comp(E.comp(v, alpha), E.inverse(u));
                Mor m = static_cast<Mor>(po.mor_pairs.size());
                po.mor_pairs.push_back({u, v});
                po.mor_index[{x, u, v}] = m;
                mors.push_back({E.morphism_name(alpha) + ":" + pair_name(E.morphism_name(u), E.morphism_name(v)), x, index[beta]});
                if (E.is_identity(u) && E.is_identity(v)) ids[x] = m;
            }
        }
    }
    po.total = make_category(
        names, mors, ids,
        [&](Mor g, Mor f) {
            auto [u2, v2] = po.mor_pairs[g];
            auto [u1, v1] = po.mor_pairs[f];
            return po.mor_index.at({mors[f].dom, E.comp(u2, u1), E.comp(v2, v1)});
        },
        true,
        [&](Mor f) {
            auto [u, v] = po.mor_pairs[f];
            return po.mor_index.at({mors[f].cod, E.inverse(u), E.inverse(v)});
        });

    Functor R{T.total(), po.total, {}, {}};
    for (Obj e = 0; e < static_cast<Obj>(E.object_count()); ++e) R.obj.push_back(index[E.identity(e)]);
    for (Mor k = 0; k < static_cast<Mor>(E.morphism_count()); ++k) R.mor.push_back(po.mor_index.at({R.obj[E.dom(k)], k, k}));
    Functor L{po.total, T.total(), {}, {}};
    for (Mor a : po.object_arrow) L.obj.push_back(E.cod(a));
    for (auto [u, v] : po.mor_pairs) L.mor.push_back(v);
    std::vector<Mor> theta;
    for (Mor a : po.object_arrow) theta.push_back(po.mor_index.at({index[a], a, E.identity(E.cod(a))}));
    po.r = make_reflection(R, L, theta);

    po.pairs = pullback_category(p, p);
    const Pullback& pb = po.pairs;
    Functor rho{po.total, pb.cat, {}, {}};
    for (Mor a : po.object_arrow) rho.obj.push_back(pb.object_of(E.dom(a), E.cod(a)));
    for (auto [u, v] : po.mor_pairs) rho.mor.push_back(pb.morphism_of(u, v));
    po.rho = make_fibration(rho, Orientation::cartesian, [&](Obj x, Mor f) {
        auto [m1, m2] = pb.mor_pairs[f];
        Mor alpha = E.comp(E.inverse(m2), E.comp(po.object_arrow[x], m1));
        return po.mor_index.at({index[alpha], m1, m2});
    });
    po.diagonal = pb.induced(identity_functor(T.total()), identity_functor(T.total()));
    return po;
}

/// r a split reflection, ρ a split fibration, ρ∘r = δ.
inline ValidationReport validate_path_object(const PathObject& po) {
    ValidationReport rep;
    rep.merge(validate_category(*po.total), "path groupoid");
    rep.merge(validate_split_reflection(po.r), "r");
    rep.merge(validate_split_fibration(po.rho), "ρ");
    ++rep.checked;
    if (po.rho.p * po.r.R != po.diagonal) rep.add("ρ∘r = δ", "");
    return rep;
}

/// Id(T[σ]) against the pullback of ρ_T along E[σ] ×_Δ E[σ] → E ×_Γ E: the
/// comparison is an isomorphism over the pair groupoid carrying r and the
/// cleavage of ρ exactly.
inline ValidationReport path_object_stability(const Functor& sigma, const TypeOver& T) {
    ValidationReport rep;
    PathObject base = id_type(T);
    PulledBackFibration sub = pullback_fibration_square(T.fib, sigma);
    TypeOver Ts{sub.fib};
    PathObject moved = id_type(Ts);
    const Functor& q = sub.top;
    Functor w = base.pairs.induced(q * moved.pairs.left, q * moved.pairs.right);
    PulledBackFibration pulled = pullback_fibration_square(base.rho, w);
    Functor Pq{moved.total, base.total, {}, {}};
    for (Mor a : moved.object_arrow) Pq.obj.push_back(base.object_of(q.m(a)));
    for (Mor m = 0; m < static_cast<Mor>(moved.mor_pairs.size()); ++m) {
        auto [u, v] = moved.mor_pairs[m];
        Pq.mor.push_back(base.morphism_of(Pq.o(moved.total->dom(m)), q.m(u), q.m(v)));
    }
    Functor cmp = pulled.pb.induced(Pq, moved.rho.p);
    ++rep.checked;
    if (!is_isomorphism(cmp)) rep.add("Id(T[σ]) ≅ ρ*(E[σ] ×_Δ E[σ])", "comparison is not invertible");
    rep.merge(check_structured_square(fibration_square(moved.rho, pulled.fib, cmp, identity_functor(moved.pairs.cat))),
              "ρ stability");
    ++rep.checked;
    if (Pq * moved.r.R != base.r.R * q) rep.add("r stability", "P(q)∘r′ != r∘q");
    return rep;
}

/// refl(t) as a term of Id over the doubled context, substituted along (t, t).
inline TermOf refl(const PathObject& po, const TermOf& t) {
    if (t.type != po.type) fail(ErrorKind::JudgmentMismatch, "term is not of the path object's type");
    Functor tt = po.diagonal * t.section;
    Pullback pb = pullback_category(po.rho.p, tt);
    TypeOver Id_t{pullback_split_fibration(po.rho, tt)};
    return make_term(Id_t, pb.induced(po.r.R * t.section, identity_functor(t.type.context())));
}

/// J(C, d): the canonical lift of the square (d, id): r → C.
inline TermOf j_eliminator(const PathObject& po, const TypeOver& C, const Functor& d) {
    if (!same_category(C.context(), po.total)) fail(ErrorKind::JudgmentMismatch, "C is not a type over the path object");
    if (!same_category(d.src, po.type.total()) || !same_category(d.dst, C.total()) || C.fib.p * d != po.r.R)
        fail(ErrorKind::JudgmentMismatch, "d is not a term of C over refl");
    Functor J = canonical_lift(po.r, C.fib, Square{po.r.R, C.fib.p, d, identity_functor(po.total)});
    return make_term(C, J);
}

// --------------------------------------------------------------- stability

namespace detail {

/// The pullback of sf along v with pairs ordered (b′, e), the convention
/// of the pullback functor in the slice adjunction.
inline PulledBackFibration base_first_pullback(const SplitFibration& sf, const Functor& v) {
    Pullback pb = pullback_category(v, sf.p);
    SplitFibration out = make_fibration(pb.left, sf.orientation, [&](Obj x, Mor f) {
        return pb.morphism_of(f, sf.lift(pb.obj_pairs[x].second, v.m(f)));
    });
    return {out, pb.right, pb};
}

}  // namespace detail

/// For a structured pullback square (X, σ): T′ → T of context extensions and
/// S over Γ.T: the Beck-Chevalley comparison Π(T, S)[σ] → Π(T′, S[X]) is an
/// isomorphism over Δ carrying the cleavage, and the BC component equality
/// holds on the given corpus.
inline ValidationReport pi_pseudostability_check(const StructuredSquare& sq, const TypeOver& S,
                                                 const std::vector<ExtendedReflection>& corpus) {
    ValidationReport rep;
    if (sq.kind != StructureKind::fibration || !sq.fib_left || !sq.fib_right)
        fail(ErrorKind::KindMismatch, "expected a square of context extensions");
    require_pullback_square(sq.square);
    auto structured = check_structured_square(sq);
    rep.merge(structured, "substitution square");
    if (!structured.ok()) return rep;
    const SplitFibration& Tp = *sq.fib_left;
    const SplitFibration& T = *sq.fib_right;
    const Functor& X = sq.square.top;
    const Functor& sigma = sq.square.bottom;
    TypeOver Pi = pi_type({T}, S);
    PulledBackFibration moved = detail::base_first_pullback(Pi.fib, sigma);
    TypeOver Pip = pi_type({Tp}, {detail::base_first_pullback(S.fib, X).fib});
    Functor beta = mate_beta_component(Tp, T, X, sigma, S.fib.p);
    ++rep.checked;
    if (!is_isomorphism(beta)) {
        rep.add("β is invertible", "");
        return rep;
    }
    ++rep.checked;
    if (Pip.fib.p * beta != moved.fib.p) rep.add("β lies over Δ", "");
    rep.merge(check_structured_square(fibration_square(moved.fib, Pip.fib, beta, identity_functor(sigma.src))),
              "β preserves the cleavage");
    Functor cmp = moved.top * inverse_functor(beta);
    rep.merge(check_structured_square(fibration_square(Pip.fib, Pi.fib, cmp, sigma)), "Π comparison square");
    ++rep.checked;
    if (!is_pullback_square(Square{Pip.fib.p, Pi.fib.p, cmp, sigma})) rep.add("Π comparison square is a pullback", "");
    rep.merge(beck_chevalley_check(sq, corpus), "BC");
    return rep;
}

}  // namespace awfslab
