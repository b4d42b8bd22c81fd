#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awfslab/structured.hpp"

namespace awfslab {

/// f_* x for a split opfibration f: A → B of groupoids and x: X → A.
///
/// Objects are pairs (b, s) with s: A_b → X a section of x over the fiber.
/// A morphism (b, s) → (b′, s′) over β: b → b′ is a family τ_a: s a → s′(β_! a)
/// with x τ_a the chosen lift of β at a, natural in a. Families are stored
/// in fiber order.
struct SectionGroupoid {
    SplitFibration f;  // cocartesian
    Functor x;
    CatRef cat;
    Functor projection;

    std::vector<Fiber> fibers;        // indexed by object of B
    std::vector<int> fiber_pos;       // object of A -> position in its fiber
    std::vector<int> fiber_mor_pos;   // morphism of A -> position in its fiber, or kNone
    std::vector<Obj> obj_base;
    std::vector<Functor> sections;
    std::vector<Mor> mor_base;
    std::vector<Obj> mor_src, mor_tgt;
    std::vector<std::vector<Mor>> families;
    std::map<std::vector<int>, Obj> obj_lookup;
    std::map<std::vector<int>, Mor> mor_lookup;

    static std::vector<int> object_key(Obj b, const Functor& s) {
        std::vector<int> key{b};
        key.insert(key.end(), s.obj.begin(), s.obj.end());
        key.push_back(-2);
        key.insert(key.end(), s.mor.begin(), s.mor.end());
        return key;
    }
    static std::vector<int> morphism_key(Obj src, Obj tgt, Mor beta, const std::vector<Mor>& tau) {
        std::vector<int> key{src, tgt, beta};
        key.insert(key.end(), tau.begin(), tau.end());
        return key;
    }

    Obj find_object(Obj b, const Functor& s) const {
        auto it = obj_lookup.find(object_key(b, s));
        if (it == obj_lookup.end()) fail(ErrorKind::BoundaryMismatch, "not a section over the fiber");
        return it->second;
    }
    Mor find_morphism(Obj src, Obj tgt, Mor beta, const std::vector<Mor>& tau) const {
        auto it = mor_lookup.find(morphism_key(src, tgt, beta, tau));
        if (it == mor_lookup.end()) fail(ErrorKind::BoundaryMismatch, "not a natural family over the lift");
        return it->second;
    }

    /// s(a) for the section at object o and a in its fiber.
    Obj section_at(Obj o, Obj a) const { return sections[o].o(fiber_pos[a]); }
    /// s(k) for a vertical morphism k of A in the fiber of o.
    Mor section_mor(Obj o, Mor k) const { return sections[o].m(fiber_mor_pos[k]); }
    /// τ_a for the morphism m and a in the fiber of its source.
    Mor tau_at(Mor m, Obj a) const { return families[m][fiber_pos[a]]; }

    /// β_! k for a vertical k: a1 → a2 of A over b, as a vertical morphism over cod β.
    Mor push_vertical(Mor k, Mor beta) const {
        const FinCategory& A = *f.total();
        return A.comp(A.comp(f.lift(A.cod(k), beta), k), A.inverse(f.lift(A.dom(k), beta)));
    }
};

namespace detail {

inline void require_groupoid(const CatRef& c, const std::string& what) {
    if (!c->is_groupoid()) fail(ErrorKind::NotAGroupoid, what + " is not a groupoid");
}

}  // namespace detail

inline SectionGroupoid pushforward_object(const SplitFibration& f_in, const Functor& x) {
    detail::require_groupoid(f_in.total(), "total category of f");
    detail::require_groupoid(f_in.base(), "base of f");
    detail::require_groupoid(x.src, "domain of x");
    if (!same_category(x.dst, f_in.total()))
        fail(ErrorKind::BoundaryMismatch, "x does not land in the total category of f");
    if (!validate_functor(f_in.p).ok()) fail(ErrorKind::NotAFibration, "f is not a functor");

    SectionGroupoid pg;
    pg.f = oriented(f_in, Orientation::cocartesian);
    pg.x = x;
    const SplitFibration& f = pg.f;
    const FinCategory& A = *f.total();
    const FinCategory& B = *f.base();
    const FinCategory& X = *x.src;

    pg.fiber_pos.assign(A.object_count(), kNone);
    pg.fiber_mor_pos.assign(A.morphism_count(), kNone);
    for (Obj b = 0; b < static_cast<Obj>(B.object_count()); ++b) {
        pg.fibers.push_back(fiber_of(f.p, b));
        const Functor& inc = pg.fibers.back().inclusion;
        for (Obj i = 0; i < static_cast<Obj>(inc.obj.size()); ++i) pg.fiber_pos[inc.o(i)] = i;
        for (Mor i = 0; i < static_cast<Mor>(inc.mor.size()); ++i) pg.fiber_mor_pos[inc.m(i)] = i;
    }

    std::vector<std::string> obj_names;
    for (Obj b = 0; b < static_cast<Obj>(B.object_count()); ++b) {
        const Fiber& fb = pg.fibers[b];
        FunctorConstraints c(fb.cat, x.src);
        c.over(x, fb.inclusion);
        auto secs = enumerate_functors(c);
        for (std::size_t k = 0; k < secs.size(); ++k) {
            Obj o = static_cast<Obj>(pg.sections.size());
            pg.obj_lookup[SectionGroupoid::object_key(b, secs[k])] = o;
            pg.obj_base.push_back(b);
            pg.sections.push_back(secs[k]);
            obj_names.push_back(pair_name(B.object_name(b), "s" + std::to_string(k)));
        }
    }

    const auto nO = static_cast<Obj>(pg.sections.size());
    std::vector<MorphismRecord> recs;
    for (Obj o1 = 0; o1 < nO; ++o1)
        for (Obj o2 = 0; o2 < nO; ++o2)
            for (Mor beta : B.hom(pg.obj_base[o1], pg.obj_base[o2])) {
                const Functor& inc = pg.fibers[pg.obj_base[o1]].inclusion;
                const auto n = inc.obj.size();
                std::vector<std::vector<Mor>> cands(n);
                for (std::size_t i = 0; i < n; ++i) {
                    Obj a = inc.o(static_cast<Obj>(i));
                    Mor lift = f.lift(a, beta);
                    for (Mor t : X.hom(pg.section_at(o1, a), pg.section_at(o2, A.cod(lift))))
                        if (x.m(t) == lift) cands[i].push_back(t);
                }
                const FinCategory& F = *pg.fibers[pg.obj_base[o1]].cat;
                std::vector<Mor> tau(n, kNone);
                int found = 0;
                std::function<void(std::size_t)> rec = [&](std::size_t i) {
                    if (i == n) {
                        Mor id = static_cast<Mor>(recs.size());
                        pg.mor_lookup[SectionGroupoid::morphism_key(o1, o2, beta, tau)] = id;
                        pg.mor_base.push_back(beta);
                        pg.mor_src.push_back(o1);
                        pg.mor_tgt.push_back(o2);
                        pg.families.push_back(tau);
                        std::string name = obj_names[o1] + ">" + obj_names[o2] + "/" + B.morphism_name(beta);
                        if (found > 0) name += "#" + std::to_string(found);
                        ++found;
                        recs.push_back({name, o1, o2});
                        return;
                    }
                    for (Mor t : cands[i]) {
                        tau[i] = t;
                        bool ok = true;
                        for (Mor k = 0; k < static_cast<Mor>(F.morphism_count()) && ok; ++k) {
                            auto di = static_cast<std::size_t>(F.dom(k));
                            auto ci = static_cast<std::size_t>(F.cod(k));
                            if (std::max(di, ci) != i) continue;
                            Mor ka = inc.m(k);
                            Mor lhs = X.compose(pg.section_mor(o2, pg.push_vertical(ka, beta)), tau[di]);
                            Mor rhs = X.compose(tau[ci], pg.sections[o1].m(k));
                            ok = lhs == rhs;
                        }
                        if (ok) rec(i + 1);
                    }
                    tau[i] = kNone;
                };
                rec(0);
            }

    std::vector<Mor> ids;
    for (Obj o = 0; o < nO; ++o) {
        Obj b = pg.obj_base[o];
        std::vector<Mor> fam;
        for (Obj a : pg.fibers[b].inclusion.obj) fam.push_back(X.identity(pg.section_at(o, a)));
        ids.push_back(pg.find_morphism(o, o, B.identity(b), fam));
    }
    pg.cat = make_category(
        obj_names, recs, ids,
        [&](Mor g, Mor h) {
            std::vector<Mor> fam;
            for (Obj a : pg.fibers[pg.obj_base[pg.mor_src[h]]].inclusion.obj) {
                Obj a2 = f.transport(a, pg.mor_base[h]);
                fam.push_back(X.comp(pg.tau_at(g, a2), pg.tau_at(h, a)));
            }
            return pg.find_morphism(pg.mor_src[h], pg.mor_tgt[g], B.comp(pg.mor_base[g], pg.mor_base[h]), fam);
        },
        true,
        [&](Mor m) {
            Mor binv = B.inverse(pg.mor_base[m]);
            std::vector<Mor> fam;
            for (Obj a2 : pg.fibers[pg.obj_base[pg.mor_tgt[m]]].inclusion.obj)
                fam.push_back(X.inverse(pg.tau_at(m, f.transport(a2, binv))));
            return pg.find_morphism(pg.mor_tgt[m], pg.mor_src[m], binv, fam);
        });
    pg.projection = Functor{pg.cat, f.base(), pg.obj_base, pg.mor_base};
    return pg;
}

/// The transport cleavage on f_* x when x is itself a split fibration:
/// the section s over b is carried along β to a′ ↦ cod of the x-lift of
/// the f-lift of β at a = (β⁻¹)_! a′. Returned in the orientation of x.
inline SplitFibration pushforward_cleavage(const SectionGroupoid& pg, const SplitFibration& x_in) {
    if (x_in.p != pg.x) fail(ErrorKind::BoundaryMismatch, "fibration does not match the pushed map");
    SplitFibration xc = oriented(x_in, Orientation::cocartesian);
    const SplitFibration& f = pg.f;
    const FinCategory& A = *f.total();
    const FinCategory& B = *f.base();
    const FinCategory& X = *pg.x.src;
    SplitFibration out = make_fibration(pg.projection, Orientation::cocartesian, [&](Obj o, Mor beta) {
        Obj b2 = B.cod(beta);
        Mor binv = B.inverse(beta);
        const Fiber& fb2 = pg.fibers[b2];
        const Functor& s = pg.sections[o];
        auto tau_for = [&](Obj a) { return xc.lift(pg.section_at(o, a), f.lift(a, beta)); };
        Functor s2{fb2.cat, pg.x.src, {}, {}};
        for (Obj a2 : fb2.inclusion.obj) s2.obj.push_back(X.cod(tau_for(f.transport(a2, binv))));
        for (Mor k2 : fb2.inclusion.mor) {
            Mor k = pg.push_vertical(k2, binv);
            Mor t1 = tau_for(A.dom(k));
            Mor t2 = tau_for(A.cod(k));
            s2.mor.push_back(X.comp(X.comp(t2, s.m(pg.fiber_mor_pos[k])), X.inverse(t1)));
        }
        Obj o2 = pg.find_object(b2, s2);
        std::vector<Mor> fam;
        for (Obj a : pg.fibers[pg.obj_base[o]].inclusion.obj) fam.push_back(tau_for(a));
        return pg.find_morphism(o, o2, beta, fam);
    });
    return oriented(out, x_in.orientation);
}

/// P_* of a split fibration x over the total of f, as a split fibration over B.
inline SplitFibration pushforward_fibration(const SplitFibration& f, const SplitFibration& x) {
    return pushforward_cleavage(pushforward_object(f, x.p), x);
}

/// The induced map f_* x1 → f_* x2 of h: X1 → X2 over A (postcomposition).
inline Functor pushforward_map(const SectionGroupoid& p1, const SectionGroupoid& p2, const Functor& h) {
    if (p2.x * h != p1.x) fail(ErrorKind::BoundaryMismatch, "map is not over A");
    Functor out{p1.cat, p2.cat, {}, {}};
    for (Obj o = 0; o < static_cast<Obj>(p1.sections.size()); ++o)
        out.obj.push_back(p2.find_object(p1.obj_base[o], h * p1.sections[o]));
    for (Mor m = 0; m < static_cast<Mor>(p1.families.size()); ++m) {
        std::vector<Mor> fam;
        for (Mor t : p1.families[m]) fam.push_back(h.m(t));
        out.mor.push_back(p2.find_morphism(out.o(p1.mor_src[m]), out.o(p1.mor_tgt[m]), p1.mor_base[m], fam));
    }
    return out;
}

/// f_*(h, x2) = (f_* h, projection of f_* x2).
inline SliceMorphism pushforward_arrows(const SplitFibration& f, const SliceMorphism& m) {
    SectionGroupoid p1 = pushforward_object(f, m.structure_dom());
    SectionGroupoid p2 = pushforward_object(f, m.a);
    return {pushforward_map(p1, p2, m.f), p2.projection};
}

/// f*(g, b) = (f*g, f*b) with f*g the induced comparison of pullbacks.
inline SliceMorphism pullback_arrows(const Functor& f, const SliceMorphism& m) {
    Pullback p1 = pullback_category(f, m.structure_dom());
    Pullback p2 = pullback_category(f, m.a);
    return {p2.induced(p1.left, m.f * p1.right), p2.left};
}

// ------------------------------------------------------------- adjunction

/// f* ⊣ f_* between slices over B and over A, for a split fibration f of
/// groupoids.
///
/// Unit at y: y0 ↦ (y y0, a ↦ (a, y0)), with γ ↦ (a ↦ (lift(a, yγ), γ)).
/// Counit at x: (a, (b, s)) ↦ s a, with (α, τ) ↦ s′(α∘lift(a, β)⁻¹)∘τ_a.
inline SliceAdjunction pullback_pushforward_adjunction(const SplitFibration& f_in) {
    SplitFibration f = oriented(f_in, Orientation::cocartesian);
    SliceAdjunction adj;
    adj.left_obj = [f](const Functor& y) { return pullback_category(f.p, y).left; };
    adj.left_map = [f](const Functor&, const Functor& y2, const Functor& h) {
        return pullback_arrows(f.p, SliceMorphism{h, y2}).f;
    };
    adj.right_obj = [f](const Functor& x) { return pushforward_object(f, x).projection; };
    adj.right_map = [f](const Functor& x1, const Functor& x2, const Functor& h) {
        return pushforward_map(pushforward_object(f, x1), pushforward_object(f, x2), h);
    };
    adj.unit = [f](const Functor& y) {
        const FinCategory& Y = *y.src;
        Pullback pb = pullback_category(f.p, y);
        SectionGroupoid pg = pushforward_object(f, pb.left);
        Functor nu{y.src, pg.cat, {}, {}};
        for (Obj y0 = 0; y0 < static_cast<Obj>(Y.object_count()); ++y0) {
            Obj b = y.o(y0);
            const Fiber& fb = pg.fibers[b];
            Functor s{fb.cat, pb.cat, {}, {}};
            for (Obj a : fb.inclusion.obj) s.obj.push_back(pb.object_of(a, y0));
            for (Mor k : fb.inclusion.mor) s.mor.push_back(pb.morphism_of(k, Y.identity(y0)));
            nu.obj.push_back(pg.find_object(b, s));
        }
        for (Mor g = 0; g < static_cast<Mor>(Y.morphism_count()); ++g) {
            Mor beta = y.m(g);
            std::vector<Mor> fam;
            for (Obj a : pg.fibers[y.o(Y.dom(g))].inclusion.obj) fam.push_back(pb.morphism_of(f.lift(a, beta), g));
            nu.mor.push_back(pg.find_morphism(nu.o(Y.dom(g)), nu.o(Y.cod(g)), beta, fam));
        }
        return nu;
    };
    adj.counit = [f](const Functor& x) {
        const FinCategory& A = *f.total();
        const FinCategory& X = *x.src;
        SectionGroupoid pg = pushforward_object(f, x);
        Pullback pb = pullback_category(f.p, pg.projection);
        Functor eps{pb.cat, x.src, {}, {}};
        for (auto [a, o] : pb.obj_pairs) eps.obj.push_back(pg.section_at(o, a));
        for (auto [alpha, m] : pb.mor_pairs) {
            Obj a = A.dom(alpha);
            Mor beta = pg.mor_base[m];
            Mor v = A.comp(alpha, A.inverse(f.lift(a, beta)));
            eps.mor.push_back(X.comp(pg.section_mor(pg.mor_tgt[m], v), pg.tau_at(m, a)));
        }
        return eps;
    };
    return adj;
}

/// h: dom F y → dom x over A ↦ G h∘η_y.
inline Functor right_adjunct(const SliceAdjunction& adj, const Functor& y, const Functor& x, const Functor& h) {
    return adj.right_map(adj.left_obj(y), x, h) * adj.unit(y);
}

/// k: dom y → dom G x over B ↦ ε_x∘F k.
inline Functor left_adjunct(const SliceAdjunction& adj, const Functor& y, const Functor& x, const Functor& k) {
    return adj.counit(x) * adj.left_map(y, adj.right_obj(x), k);
}

/// Gε∘ηG = 1 at x, evaluated componentwise on f_* x: η at (b, s) is the
/// section a ↦ (a, (b, s)) and at τ over β the family a ↦ (lift(a, β), τ),
/// so the identity reads ε(a, o) = s_o(a) and ε(lift(a, β), m) = τ_m(a).
/// Avoids materializing f_* f* f_* x.
inline ValidationReport check_right_triangle(const SplitFibration& f_in, const Functor& x) {
    SplitFibration f = oriented(f_in, Orientation::cocartesian);
    SectionGroupoid pg = pushforward_object(f, x);
    Functor eps = pullback_pushforward_adjunction(f).counit(x);
    Pullback pb = pullback_category(f.p, pg.projection);
    ValidationReport rep;
    for (Obj o = 0; o < static_cast<Obj>(pg.sections.size()); ++o)
        for (Obj a : pg.fibers[pg.obj_base[o]].inclusion.obj) {
            ++rep.checked;
            if (eps.o(pb.object_of(a, o)) != pg.section_at(o, a))
                rep.add("triangle Gε∘ηG", "object " + pg.cat->object_name(o));
        }
    for (Mor m = 0; m < static_cast<Mor>(pg.families.size()); ++m)
        for (Obj a : pg.fibers[pg.obj_base[pg.mor_src[m]]].inclusion.obj) {
            ++rep.checked;
            if (eps.m(pb.morphism_of(f.lift(a, pg.mor_base[m]), m)) != pg.tau_at(m, a))
                rep.add("triangle Gε∘ηG", "morphism " + pg.cat->morphism_name(m));
        }
    return rep;
}

/// εF∘Fη = 1 at y.
inline ValidationReport check_left_triangle(const SliceAdjunction& adj, const Functor& y) {
    ValidationReport r;
    Functor Fy = adj.left_obj(y);
    ++r.checked;
    if (adj.counit(Fy) * adj.left_map(y, adj.right_obj(Fy), adj.unit(y)) != identity_functor(Fy.src))
        r.add("triangle εF∘Fη", "at left object");
    return r;
}

struct AdjunctionWitness {
    SliceAdjunction adjunction;
    std::vector<std::pair<std::size_t, std::size_t>> hom_sizes;
};

/// Certifies f* ⊣ f_* on the given pairs (y over B, x over A): triangle
/// identities, equal hom-set cardinalities and mutually inverse transposes.
inline std::pair<AdjunctionWitness, ValidationReport> adjunction_check(
    const SplitFibration& f, const std::vector<std::pair<Functor, Functor>>& pairs) {
    AdjunctionWitness w{pullback_pushforward_adjunction(f), {}};
    ValidationReport rep;
    const SliceAdjunction& adj = w.adjunction;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [y, x] = pairs[i];
        const std::string tag = "pair " + std::to_string(i);
        rep.merge(check_left_triangle(adj, y), tag);
        rep.merge(check_right_triangle(f, x), tag);
        Functor Fy = adj.left_obj(y);
        Functor Gx = adj.right_obj(x);
        FunctorConstraints c1(Fy.src, x.src);
        c1.over(x, Fy);
        FunctorConstraints c2(y.src, Gx.src);
        c2.over(Gx, y);
        auto h1 = enumerate_functors(c1);
        auto h2 = enumerate_functors(c2);
        w.hom_sizes.push_back({h1.size(), h2.size()});
        ++rep.checked;
        if (h1.size() != h2.size())
            rep.add("hom-set cardinalities", tag + ": " + std::to_string(h1.size()) + " vs " + std::to_string(h2.size()));
        for (const auto& h : h1) {
            ++rep.checked;
            Functor k = right_adjunct(adj, y, x, h);
            if (left_adjunct(adj, y, x, k) != h) rep.add("round trip on Hom(f*y, x)", tag);
        }
        for (const auto& k : h2) {
            ++rep.checked;
            Functor h = left_adjunct(adj, y, x, k);
            if (right_adjunct(adj, y, x, h) != k) rep.add("round trip on Hom(y, f_*x)", tag);
        }
    }
    return {w, rep};
}

// ------------------------------------------------------------------ mates

/// α_y: A ×_B W → C ×_D W, (a, w) ↦ (u a, w), for a square (u, v): f → g
/// and y: W → B.
inline Functor mate_alpha_component(const Square& sq, const Functor& y) {
    Pullback src = pullback_category(sq.left, y);
    Pullback dst = pullback_category(sq.right, sq.bottom * y);
    return dst.induced(sq.top * src.left, src.right);
}

/// The component square (α_{b∘w}, α_b): f*(w) → g*(w) of α at (w, b).
inline Square mate_alpha(const Square& sq, const SliceMorphism& m) {
    if (!validate_square(sq).ok()) fail(ErrorKind::NonCommutingProblem, "square does not commute");
    Functor left = pullback_arrows(sq.left, m).f;
    Functor right = pullback_arrows(sq.right, SliceMorphism{m.f, sq.bottom * m.a}).f;
    return {left, right, mate_alpha_component(sq, m.structure_dom()), mate_alpha_component(sq, m.a)};
}

/// Throws NotAPullback unless A → B ×_D C, a ↦ (f a, u a), is an isomorphism.
inline void require_pullback_square(const Square& sq) {
    if (!validate_square(sq).ok()) fail(ErrorKind::NotAPullback, "square does not commute");
    Pullback pb = pullback_category(sq.bottom, sq.right);
    if (!is_isomorphism(pb.induced(sq.left, sq.top)))
        fail(ErrorKind::NotAPullback, "comparison to the strict pullback is not invertible");
}

inline bool is_pullback_square(const Square& sq) {
    try {
        require_pullback_square(sq);
        return true;
    } catch (const Error&) {
        return false;
    }
}

/// β_z: v* g_* z → f_* u* z, (b, (d, s)) ↦ (b, a ↦ (a, s(u a))).
inline Functor mate_beta_component(const SplitFibration& f_in, const SplitFibration& g_in, const Functor& u,
                                   const Functor& v, const Functor& z) {
    SplitFibration f = oriented(f_in, Orientation::cocartesian);
    SplitFibration g = oriented(g_in, Orientation::cocartesian);
    SectionGroupoid gz = pushforward_object(g, z);
    Pullback vg = pullback_category(v, gz.projection);      // B ×_D g_* z
    Pullback uz = pullback_category(u, z);                   // A ×_C Z
    SectionGroupoid fu = pushforward_object(f, uz.left);     // f_* u* z
    Functor beta{vg.cat, fu.cat, {}, {}};
    for (auto [b, o] : vg.obj_pairs) {
        const Fiber& fb = fu.fibers[b];
        Functor s{fb.cat, uz.cat, {}, {}};
        for (Obj a : fb.inclusion.obj) s.obj.push_back(uz.object_of(a, gz.section_at(o, u.o(a))));
        for (Mor k : fb.inclusion.mor) s.mor.push_back(uz.morphism_of(k, gz.section_mor(o, u.m(k))));
        beta.obj.push_back(fu.find_object(b, s));
    }
    const FinCategory& B = *f.base();
    for (auto [bm, m] : vg.mor_pairs) {
        std::vector<Mor> fam;
        for (Obj a : fu.fibers[B.dom(bm)].inclusion.obj) {
            Mor lift = f.lift(a, bm);
            if (u.m(lift) != g.lift(u.o(a), v.m(bm)))
                fail(ErrorKind::CleavageIncompatible, "u does not carry lifts of f to lifts of g");
            fam.push_back(uz.morphism_of(lift, gz.tau_at(m, u.o(a))));
        }
        Obj src = beta.o(vg.object_of(B.dom(bm), gz.mor_src[m]));
        Obj tgt = beta.o(vg.object_of(B.cod(bm), gz.mor_tgt[m]));
        beta.mor.push_back(fu.find_morphism(src, tgt, bm, fam));
    }
    return beta;
}

/// β_z computed as a mate: the composite
///   f* v* g_* z --α--> g* v_! v* g_* z --g*ε--> g* g_* z --ε--> z
/// is transposed across u_! ⊣ u* and then across f* ⊣ f_*.
inline Functor mate_beta_pasted(const SplitFibration& f, const SplitFibration& g, const Functor& u,
                                const Functor& v, const Functor& z) {
    SectionGroupoid gz = pushforward_object(g, z);
    Pullback vg = pullback_category(v, gz.projection);
    const Functor& w = vg.left;
    Square sq{f.p, g.p, u, v};
    Functor alpha = mate_alpha_component(sq, w);
    Pullback cw = pullback_category(g.p, v * w);
    Pullback cg = pullback_category(g.p, gz.projection);
    Functor g_eps = cg.induced(cw.left, vg.right * cw.right);
    Functor kappa = pullback_pushforward_adjunction(g).counit(z) * g_eps * alpha;
    Pullback fw = pullback_category(f.p, w);
    Pullback uz = pullback_category(u, z);
    Functor h = uz.induced(fw.left, kappa);
    return right_adjunct(pullback_pushforward_adjunction(f), w, uz.left, h);
}

/// The component square (β_{c∘w}, β_c): v*g_*(w) → f_*u*(w) of the mate
/// β at (w, c), for a pullback square (u, v): f → g of split fibrations.
inline Square mate_beta(const SplitFibration& f, const SplitFibration& g, const Functor& u, const Functor& v,
                        const SliceMorphism& m) {
    require_pullback_square(Square{f.p, g.p, u, v});
    Functor left = pullback_arrows(v, pushforward_arrows(g, m)).f;
    Functor right = pushforward_arrows(f, pullback_arrows(u, m)).f;
    return {left, right, mate_beta_component(f, g, u, v, m.structure_dom()), mate_beta_component(f, g, u, v, m.a)};
}

}  // namespace awfslab
