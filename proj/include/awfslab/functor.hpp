#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "awfslab/category.hpp"

namespace awfslab {

/// A functor between finite categories, stored as two total index maps.
struct Functor {
    CatRef src;
    CatRef dst;
    std::vector<Obj> obj;
    std::vector<Mor> mor;

    Obj o(Obj x) const { return obj[x]; }
    Mor m(Mor f) const { return mor[f]; }

    bool operator==(const Functor& other) const {
        return obj == other.obj && mor == other.mor && same_category(src, other.src) &&
               same_category(dst, other.dst);
    }
};

inline Functor identity_functor(const CatRef& c) {
    Functor f{c, c, {}, {}};
    for (Obj x = 0; x < static_cast<Obj>(c->object_count()); ++x) f.obj.push_back(x);
    for (Mor k = 0; k < static_cast<Mor>(c->morphism_count()); ++k) f.mor.push_back(k);
    return f;
}

/// The functor collapsing `src` onto the identity of `target` at `at`.
inline Functor constant_functor(const CatRef& src, const CatRef& dst, Obj at) {
    Functor f{src, dst, std::vector<Obj>(src->object_count(), at),
              std::vector<Mor>(src->morphism_count(), dst->identity(at))};
    return f;
}

/// g∘f.
inline Functor compose_functors(const Functor& g, const Functor& f) {
    if (!same_category(f.dst, g.src))
        fail(ErrorKind::BoundaryMismatch, "target of first functor differs from source of second");
    Functor r{f.src, g.dst, {}, {}};
    r.obj.reserve(f.obj.size());
    r.mor.reserve(f.mor.size());
    for (Obj x : f.obj) r.obj.push_back(g.obj[x]);
    for (Mor k : f.mor) r.mor.push_back(g.mor[k]);
    return r;
}

inline Functor operator*(const Functor& g, const Functor& f) { return compose_functors(g, f); }

/// Builds a functor from name-keyed maps; unknown names raise MalformedTable.
inline Functor functor_from_names(const CatRef& src, const CatRef& dst,
                                  const std::map<std::string, std::string>& objects,
                                  const std::map<std::string, std::string>& morphisms) {
    Functor f{src, dst, std::vector<Obj>(src->object_count(), kNone),
              std::vector<Mor>(src->morphism_count(), kNone)};
    for (const auto& [a, b] : objects) f.obj[src->object(a)] = dst->object(b);
    for (const auto& [a, b] : morphisms) f.mor[src->morphism(a)] = dst->morphism(b);
    for (Obj x = 0; x < static_cast<Obj>(f.obj.size()); ++x)
        if (f.obj[x] == kNone)
            fail(ErrorKind::MalformedTable, "object map misses '" + src->object_name(x) + "'");
    for (Mor k = 0; k < static_cast<Mor>(f.mor.size()); ++k)
        if (f.mor[k] == kNone)
            fail(ErrorKind::MalformedTable, "morphism map misses '" + src->morphism_name(k) + "'");
    return f;
}

inline ValidationReport validate_functor(const Functor& f) {
    ValidationReport r;
    const FinCategory& s = *f.src;
    const FinCategory& t = *f.dst;
    if (f.obj.size() != s.object_count() || f.mor.size() != s.morphism_count()) {
        r.add("functor shape", "map sizes differ from source");
        return r;
    }
    for (Mor k = 0; k < static_cast<Mor>(s.morphism_count()); ++k) {
        ++r.checked;
        if (t.dom(f.m(k)) != f.o(s.dom(k)) || t.cod(f.m(k)) != f.o(s.cod(k)))
            r.add("preserves endpoints", s.morphism_name(k) + " -> " + t.morphism_name(f.m(k)));
    }
    for (Obj x = 0; x < static_cast<Obj>(s.object_count()); ++x) {
        ++r.checked;
        if (f.m(s.identity(x)) != t.identity(f.o(x)))
            r.add("preserves identities", s.object_name(x));
    }
    if (!r.ok()) return r;
    for (Mor g = 0; g < static_cast<Mor>(s.morphism_count()); ++g)
        for (Mor k = 0; k < static_cast<Mor>(s.morphism_count()); ++k) {
            Mor gk = s.compose(g, k);
            if (gk == kNone) continue;
            ++r.checked;
            if (f.m(gk) != t.compose(f.m(g), f.m(k)))
                r.add("preserves composition", s.morphism_name(g) + "∘" + s.morphism_name(k));
        }
    return r;
}

/// Natural transformation between parallel functors; `comp[x]` is the
/// component at object x of the common source.
struct NatTransformation {
    Functor source;
    Functor target;
    std::vector<Mor> comp;

    Mor at(Obj x) const { return comp[x]; }
    bool operator==(const NatTransformation&) const = default;
};

inline NatTransformation identity_nat(const Functor& f) {
    NatTransformation n{f, f, {}};
    for (Obj x = 0; x < static_cast<Obj>(f.src->object_count()); ++x)
        n.comp.push_back(f.dst->identity(f.o(x)));
    return n;
}

inline ValidationReport validate_nat(const NatTransformation& n) {
    ValidationReport r;
    const Functor& F = n.source;
    const Functor& G = n.target;
    if (!same_category(F.src, G.src) || !same_category(F.dst, G.dst)) {
        r.add("parallel functors", "source and target functors differ in (co)domain");
        return r;
    }
    const FinCategory& s = *F.src;
    const FinCategory& t = *F.dst;
    for (Obj x = 0; x < static_cast<Obj>(s.object_count()); ++x) {
        ++r.checked;
        if (t.dom(n.at(x)) != F.o(x) || t.cod(n.at(x)) != G.o(x))
            r.add("component endpoints", s.object_name(x));
    }
    if (!r.ok()) return r;
    for (Mor k = 0; k < static_cast<Mor>(s.morphism_count()); ++k) {
        ++r.checked;
        if (t.compose(n.at(s.cod(k)), F.m(k)) != t.compose(G.m(k), n.at(s.dom(k))))
            r.add("naturality", s.morphism_name(k));
    }
    return r;
}

/// Strict pullback A ×_B C of f: A→B and g: C→B with its projections.
/// Objects and morphisms are pairs ordered lexicographically by index.
struct Pullback {
    CatRef cat;
    Functor left;   // to A
    Functor right;  // to C
    Functor f;
    Functor g;
    std::vector<std::pair<Obj, Obj>> obj_pairs;
    std::vector<std::pair<Mor, Mor>> mor_pairs;
    std::map<std::pair<Obj, Obj>, Obj> obj_index;
    std::map<std::pair<Mor, Mor>, Mor> mor_index;

    Obj object_of(Obj a, Obj c) const {
        auto it = obj_index.find({a, c});
        return it == obj_index.end() ? kNone : it->second;
    }
    Mor morphism_of(Mor x, Mor y) const {
        auto it = mor_index.find({x, y});
        return it == mor_index.end() ? kNone : it->second;
    }

    /// The unique map W → A ×_B C induced by a commuting cone (p, q).
    Functor induced(const Functor& p, const Functor& q) const {
        if (!same_category(p.src, q.src) || !same_category(p.dst, f.src) ||
            !same_category(q.dst, g.src))
            fail(ErrorKind::BoundaryMismatch, "cone legs do not match the pullback");
        Functor h{p.src, cat, {}, {}};
        for (Obj w = 0; w < static_cast<Obj>(p.obj.size()); ++w) {
            Obj o = object_of(p.o(w), q.o(w));
            if (o == kNone) fail(ErrorKind::BoundaryMismatch, "cone does not commute");
            h.obj.push_back(o);
        }
        for (Mor k = 0; k < static_cast<Mor>(p.mor.size()); ++k) {
            Mor m = morphism_of(p.m(k), q.m(k));
            if (m == kNone) fail(ErrorKind::BoundaryMismatch, "cone does not commute");
            h.mor.push_back(m);
        }
        return h;
    }
};

inline Pullback pullback_category(const Functor& f, const Functor& g) {
    if (!same_category(f.dst, g.dst))
        fail(ErrorKind::BoundaryMismatch, "pullback legs have different targets");
    const FinCategory& A = *f.src;
    const FinCategory& C = *g.src;
    Pullback pb;
    pb.f = f;
    pb.g = g;
    std::vector<std::string> names;
    for (Obj a = 0; a < static_cast<Obj>(A.object_count()); ++a)
        for (Obj c = 0; c < static_cast<Obj>(C.object_count()); ++c)
            if (f.o(a) == g.o(c)) {
                pb.obj_index[{a, c}] = static_cast<Obj>(pb.obj_pairs.size());
                pb.obj_pairs.push_back({a, c});
                names.push_back(pair_name(A.object_name(a), C.object_name(c)));
            }
    std::vector<MorphismRecord> mors;
    for (Mor x = 0; x < static_cast<Mor>(A.morphism_count()); ++x)
        for (Mor y = 0; y < static_cast<Mor>(C.morphism_count()); ++y)
            if (f.m(x) == g.m(y)) {
                pb.mor_index[{x, y}] = static_cast<Mor>(pb.mor_pairs.size());
                pb.mor_pairs.push_back({x, y});
                mors.push_back({pair_name(A.morphism_name(x), C.morphism_name(y)),
                                pb.obj_index.at({A.dom(x), C.dom(y)}),
                                pb.obj_index.at({A.cod(x), C.cod(y)})});
            }
    std::vector<Mor> ids;
    for (auto [a, c] : pb.obj_pairs) ids.push_back(pb.mor_index.at({A.identity(a), C.identity(c)}));
    const bool groupoid = A.is_groupoid() && C.is_groupoid();
    pb.cat = make_category(
        names, mors, ids,
        [&](Mor p, Mor q) {
            auto [p1, p2] = pb.mor_pairs[p];
            auto [q1, q2] = pb.mor_pairs[q];
            return pb.mor_index.at({A.compose(p1, q1), C.compose(p2, q2)});
        },
        groupoid,
        [&](Mor p) {
            auto [p1, p2] = pb.mor_pairs[p];
            return pb.mor_index.at({A.inverse(p1), C.inverse(p2)});
        });
    pb.left = Functor{pb.cat, f.src, {}, {}};
    pb.right = Functor{pb.cat, g.src, {}, {}};
    for (auto [a, c] : pb.obj_pairs) {
        pb.left.obj.push_back(a);
        pb.right.obj.push_back(c);
    }
    for (auto [x, y] : pb.mor_pairs) {
        pb.left.mor.push_back(x);
        pb.right.mor.push_back(y);
    }
    return pb;
}

/// True iff the functor is bijective on objects and on morphisms.
inline bool is_isomorphism(const Functor& f) {
    if (f.src->object_count() != f.dst->object_count() ||
        f.src->morphism_count() != f.dst->morphism_count())
        return false;
    std::vector<char> seen_o(f.dst->object_count(), 0), seen_m(f.dst->morphism_count(), 0);
    for (Obj x : f.obj) {
        if (seen_o[x]) return false;
        seen_o[x] = 1;
    }
    for (Mor k : f.mor) {
        if (seen_m[k]) return false;
        seen_m[k] = 1;
    }
    return true;
}

/// Inverse of a functor that is bijective on objects and morphisms.
inline Functor inverse_functor(const Functor& f) {
    if (!is_isomorphism(f)) fail(ErrorKind::BoundaryMismatch, "functor is not invertible");
    Functor g{f.dst, f.src, std::vector<Obj>(f.obj.size()), std::vector<Mor>(f.mor.size())};
    for (Obj x = 0; x < static_cast<Obj>(f.obj.size()); ++x) g.obj[f.obj[x]] = x;
    for (Mor k = 0; k < static_cast<Mor>(f.mor.size()); ++k) g.mor[f.mor[k]] = k;
    return g;
}

/// The fiber of p over b (objects over b, morphisms over id_b) with its
/// inclusion into the total category.
struct Fiber {
    CatRef cat;
    Functor inclusion;
};

inline Fiber fiber_of(const Functor& p, Obj b) {
    const FinCategory& E = *p.src;
    const FinCategory& B = *p.dst;
    std::vector<Obj> objs;
    std::vector<Obj> index(E.object_count(), kNone);
    for (Obj e = 0; e < static_cast<Obj>(E.object_count()); ++e)
        if (p.o(e) == b) {
            index[e] = static_cast<Obj>(objs.size());
            objs.push_back(e);
        }
    std::vector<Mor> mors;
    std::vector<Mor> mindex(E.morphism_count(), kNone);
    for (Mor k = 0; k < static_cast<Mor>(E.morphism_count()); ++k)
        if (p.m(k) == B.identity(b)) {
            mindex[k] = static_cast<Mor>(mors.size());
            mors.push_back(k);
        }
    std::vector<std::string> names;
    for (Obj e : objs) names.push_back(E.object_name(e));
    std::vector<MorphismRecord> recs;
    for (Mor k : mors) recs.push_back({E.morphism_name(k), index[E.dom(k)], index[E.cod(k)]});
    std::vector<Mor> ids;
    for (Obj e : objs) ids.push_back(mindex[E.identity(e)]);
    Fiber fb;
    fb.cat = make_category(
        names, recs, ids, [&](Mor g, Mor f) { return mindex[E.compose(mors[g], mors[f])]; },
        E.is_groupoid(), [&](Mor k) { return mindex[E.inverse(mors[k])]; });
    fb.inclusion = Functor{fb.cat, p.src, objs, mors};
    return fb;
}

}  // namespace awfslab
