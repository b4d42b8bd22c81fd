#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "awfslab/fixtures.hpp"
#include "awfslab/model.hpp"

namespace awfslab::gen {

using Rng = std::mt19937_64;

inline constexpr int kMaxObjects = 8;

/// Size bounds for generated categories.
struct Limits {
    int max_objects = 5;
    int max_morphisms = 40;
};

inline void require_limits(const Limits& lim) {
    if (lim.max_objects < 1 || lim.max_objects > kMaxObjects)
        fail(ErrorKind::SizeOutOfRange, "max objects must lie in [1, " + std::to_string(kMaxObjects) + "], got " +
                                            std::to_string(lim.max_objects));
    if (lim.max_morphisms < 1) fail(ErrorKind::SizeOutOfRange, "max morphisms must be positive");
}

inline bool within(const CatRef& c, const Limits& lim) {
    return static_cast<int>(c->object_count()) <= lim.max_objects &&
           static_cast<int>(c->morphism_count()) <= lim.max_morphisms;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

template <class T>
const T& choose(Rng& rng, const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

// ----------------------------------------------------------------- groupoids

/// A disjoint union of one-object groups Z_n (n ≤ 4) and codiscrete
/// groupoids on 2 or 3 objects, with objects named a, b, c, ... in a random
/// order.
inline CatRef random_groupoid(Rng& rng, const Limits& lim) {
    require_limits(lim);
    for (;;) {
        int n = uniform(rng, 1, lim.max_objects);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
        std::shuffle(names.begin(), names.end(), rng);
        CategoryBuilder b;
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& s : sorted) b.add_object(s);
        int pos = 0;
        int mor_count = 0;
        while (pos < n) {
            int left = n - pos;
            if (left >= 2 && coin(rng)) {
                int k = uniform(rng, 2, std::min(3, left));
                std::vector<Obj> objs;
                for (int i = 0; i < k; ++i) objs.push_back(b.object_named(names[pos + i]));
                std::vector<std::vector<Mor>> idx(k, std::vector<Mor>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        idx[i][j] = b.add_morphism(i == j ? "1" + names[pos + i] : names[pos + i] + ">" + names[pos + j],
                                                   objs[i], objs[j]);
                for (int i = 0; i < k; ++i) b.set_identity(objs[i], idx[i][i]);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        b.set_inverse(idx[i][j], idx[j][i]);
                        for (int l = 0; l < k; ++l) b.set_composite(idx[j][l], idx[i][j], idx[i][l]);
                    }
                mor_count += k * k;
                pos += k;
            } else {
                int order = uniform(rng, 1, 4);
                const std::string& x = names[pos];
                Obj o = b.object_named(x);
                std::vector<Mor> g;
                for (int i = 0; i < order; ++i)
                    g.push_back(b.add_morphism(i == 0 ? "1" + x : x + "^" + std::to_string(i), o, o));
                b.set_identity(o, g[0]);
                for (int i = 0; i < order; ++i) {
                    b.set_inverse(g[i], g[(order - i) % order]);
                    for (int j = 0; j < order; ++j) b.set_composite(g[i], g[j], g[(i + j) % order]);
                }
                mor_count += order;
                pos += 1;
            }
        }
        if (mor_count > lim.max_morphisms) continue;
        b.set_groupoid(true);
        return b.build();
    }
}

/// A random groupoid or, when `categories` is set, possibly a chain.
inline CatRef random_category(Rng& rng, const Limits& lim, bool categories) {
    if (categories && coin(rng)) return fixtures::chain(uniform(rng, 1, std::min(3, lim.max_objects)));
    return random_groupoid(rng, lim);
}

inline Functor random_functor_between(Rng& rng, const CatRef& src, const CatRef& dst) {
    auto f = random_functor(FunctorConstraints(src, dst), rng);
    if (!f) fail(ErrorKind::SizeOutOfRange, "no functor found within the search budget");
    return *f;
}

/// A random φ with g∘φ = v, if one exists.
inline std::optional<Functor> random_functor_over(Rng& rng, const CatRef& src, const Functor& g, const Functor& v) {
    FunctorConstraints c(src, g.src);
    c.over(g, v);
    return random_functor(c, rng);
}

// ---------------------------------------------------------------- fibrations

/// Automorphisms a of F with a∘a = id.
inline std::vector<Functor> involutions(const CatRef& F) {
    std::vector<Functor> out;
    const Functor id = identity_functor(F);
    for (const auto& a : enumerate_functors(FunctorConstraints(F, F)))
        if (is_isomorphism(a) && a * a == id) out.push_back(a);
    return out;
}

/// The Grothendieck construction of the action of B on F through
/// w: B → BZ₂ and an involution `a` of F (Φ(β) = a^{w β}), projected to B.
///
/// Cartesian: a morphism (x, b) → (x′, b′) is (k, β) with k: x → Φ(β)x′,
/// lifts are (1, β). Cocartesian: k: Φ(β)x → x′, lifts are (1, β) out of (x, b).
inline SplitFibration grothendieck_fibration(const CatRef& F, const CatRef& B, const Functor& w, const Functor& a,
                                             Orientation o) {
    const FinCategory& Fc = *F;
    const FinCategory& Bc = *B;
    const FinCategory& Z = *w.dst;
    const auto nF = static_cast<Obj>(Fc.object_count());
    const auto nB = static_cast<Obj>(Bc.object_count());
    auto twisted = [&](Mor beta) { return !Z.is_identity(w.m(beta)); };
    auto phi_o = [&](Mor beta, Obj x) { return twisted(beta) ? a.o(x) : x; };
    auto phi_m = [&](Mor beta, Mor k) { return twisted(beta) ? a.m(k) : k; };
    auto obj = [&](Obj x, Obj b) { return x * nB + b; };
    std::vector<std::string> names;
    for (Obj x = 0; x < nF; ++x)
        for (Obj b = 0; b < nB; ++b) names.push_back(pair_name(Fc.object_name(x), Bc.object_name(b)));
    std::vector<MorphismRecord> mors;
    std::vector<std::pair<Mor, Mor>> pairs;
    std::map<std::pair<Mor, Mor>, Mor> index;
    const bool cart = o == Orientation::cartesian;
    for (Mor beta = 0; beta < static_cast<Mor>(Bc.morphism_count()); ++beta)
        for (Mor k = 0; k < static_cast<Mor>(Fc.morphism_count()); ++k) {
            Obj x, x1;
            if (cart) {
                x = Fc.dom(k);
                Obj target = Fc.cod(k);
                x1 = kNone;
                for (Obj y = 0; y < nF; ++y)
                    if (phi_o(beta, y) == target) x1 = y;
            } else {
                x1 = Fc.cod(k);
                Obj source = Fc.dom(k);
                x = kNone;
                for (Obj y = 0; y < nF; ++y)
                    if (phi_o(beta, y) == source) x = y;
            }
            index[{k, beta}] = static_cast<Mor>(pairs.size());
            pairs.push_back({k, beta});
            mors.push_back({pair_name(Fc.morphism_name(k), Bc.morphism_name(beta)), obj(x, Bc.dom(beta)),
                            obj(x1, Bc.cod(beta))});
        }
    std::vector<Mor> ids;
    for (Obj x = 0; x < nF; ++x)
        for (Obj b = 0; b < nB; ++b) ids.push_back(index.at({Fc.identity(x), Bc.identity(b)}));
    const bool groupoid = Fc.is_groupoid() && Bc.is_groupoid();
    CatRef E = make_category(
        names, mors, ids,
        [&](Mor g, Mor f) {
            auto [k2, b2] = pairs[g];
            auto [k1, b1] = pairs[f];
            Mor k = cart ? Fc.comp(phi_m(b1, k2), k1) : Fc.comp(k2, phi_m(b2, k1));
            return index.at({k, Bc.comp(b2, b1)});
        },
        groupoid,
        [&](Mor f) {
            auto [k, beta] = pairs[f];
            Mor binv = Bc.inverse(beta);
            return index.at({phi_m(binv, Fc.inverse(k)), binv});
        });
    Functor p{E, B, {}, {}};
    for (Obj x = 0; x < nF; ++x)
        for (Obj b = 0; b < nB; ++b) p.obj.push_back(b);
    for (auto [k, beta] : pairs) p.mor.push_back(beta);
    return make_fibration(p, o, [&](Obj e, Mor beta) {
        return index.at({Fc.identity(phi_o(beta, e / nB)), beta});
    });
}

struct FibrationParams {
    Limits total{5, 40};
    int max_fiber_objects = 2;
    bool groupoid_fiber = true;
};

/// A Grothendieck fibration over the given base with a random fiber, twist
/// and involution; retries until the total fits the limits.
inline SplitFibration random_fibration_over(Rng& rng, const CatRef& B, Orientation o, const FibrationParams& fp) {
    auto bz2 = fixtures::bz2();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Limits fl{std::max(1, std::min(fp.max_fiber_objects, fp.total.max_objects / std::max<int>(1, static_cast<int>(B->object_count())))),
                  std::max(1, fp.total.max_morphisms / std::max<int>(1, static_cast<int>(B->morphism_count())))};
        CatRef F = random_groupoid(rng, fl);
        if (static_cast<int>(F->object_count() * B->object_count()) > fp.total.max_objects ||
            static_cast<int>(F->morphism_count() * B->morphism_count()) > fp.total.max_morphisms)
            continue;
        Functor w = random_functor_between(rng, B, bz2);
        Functor a = choose(rng, involutions(F));
        return grothendieck_fibration(F, B, w, a, o);
    }
    // the trivial fiber always fits
    return grothendieck_fibration(fixtures::terminal(), B, constant_functor(B, bz2, 0),
                                  identity_functor(fixtures::terminal()), o);
}

inline SplitFibration random_fibration(Rng& rng, Orientation o, const FibrationParams& fp, bool categories = false) {
    Limits bl{std::max(1, fp.total.max_objects / 2), fp.total.max_morphisms / 2};
    CatRef B = random_category(rng, bl, categories);
    return random_fibration_over(rng, B, o, fp);
}

// ---------------------------------------------------------------- reflections

/// A reflection S → T obtained by adjoining new objects to S, each with an
/// anchor in S. A morphism t → t′ of T is a triple (t, k, t′) with
/// k: L t → L t′ in S. In groupoid mode every such triple is present and
/// the new objects are isomorphic to their anchors; otherwise only triples
/// ending in S and identities on new objects, so each new object has a
/// universal arrow to its anchor.
struct AdjoinedReflection {
    SplitReflection refl;
    std::vector<Obj> anchor;  // T object ↦ L of it
    std::map<std::tuple<Obj, Mor, Obj>, Mor> index;
    bool full = true;

    Mor morphism(Obj t, Mor k, Obj t1) const {
        auto it = index.find({t, k, t1});
        return it == index.end() ? kNone : it->second;
    }
    int new_objects() const {
        return static_cast<int>(anchor.size()) - static_cast<int>(refl.small()->object_count());
    }
};

inline AdjoinedReflection adjoin_retracts(const CatRef& S, const std::vector<Obj>& anchors, bool full) {
    const FinCategory& Sc = *S;
    const auto nS = static_cast<Obj>(Sc.object_count());
    AdjoinedReflection out;
    out.full = full;
    std::vector<std::string> names = Sc.objects();
    out.anchor.resize(nS);
    std::iota(out.anchor.begin(), out.anchor.end(), 0);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        std::string name = Sc.object_name(anchors[i]) + "+" + std::to_string(i);
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
        names.push_back(name);
        out.anchor.push_back(anchors[i]);
    }
    const auto nT = static_cast<Obj>(names.size());
    std::vector<MorphismRecord> mors;
    std::vector<std::tuple<Obj, Mor, Obj>> triples;
    auto add = [&](Obj t, Mor k, Obj t1) {
        std::string name = t < nS && t1 < nS ? Sc.morphism_name(k)
                                             : "[" + names[t] + "|" + Sc.morphism_name(k) + "|" + names[t1] + "]";
        out.index[{t, k, t1}] = static_cast<Mor>(triples.size());
        triples.push_back({t, k, t1});
        mors.push_back({name, t, t1});
    };
    for (Obj t = 0; t < nT; ++t)
        for (Obj t1 = 0; t1 < nT; ++t1) {
            if (!full && t1 >= nS) {
                if (t == t1) add(t, Sc.identity(out.anchor[t]), t);
                continue;
            }
            for (Mor k : Sc.hom(out.anchor[t], out.anchor[t1])) add(t, k, t1);
        }
    std::vector<Mor> ids;
    for (Obj t = 0; t < nT; ++t) ids.push_back(out.index.at({t, Sc.identity(out.anchor[t]), t}));
    const bool groupoid = full && Sc.is_groupoid();
    CatRef T = make_category(
        names, mors, ids,
        [&](Mor g, Mor f) {
            auto [t1, k2, t2] = triples[g];
            auto [t0, k1, t1b] = triples[f];
            (void)t1;
            (void)t1b;
            return out.index.at({t0, Sc.comp(k2, k1), t2});
        },
        groupoid,
        [&](Mor f) {
            auto [t0, k, t1] = triples[f];
            return out.index.at({t1, Sc.inverse(k), t0});
        });
    Functor R{S, T, {}, {}};
    for (Obj s = 0; s < nS; ++s) R.obj.push_back(s);
    for (Mor k = 0; k < static_cast<Mor>(Sc.morphism_count()); ++k)
        R.mor.push_back(out.index.at({Sc.dom(k), k, Sc.cod(k)}));
    Functor L{T, S, out.anchor, {}};
    for (auto [t0, k, t1] : triples) L.mor.push_back(k);
    std::vector<Mor> theta;
    for (Obj t = 0; t < nT; ++t) theta.push_back(out.index.at({t, Sc.identity(out.anchor[t]), out.anchor[t]}));
    out.refl = make_reflection(R, L, theta);
    return out;
}

/// Adjoins between 1 and `max_new` retracts to S with random anchors.
inline AdjoinedReflection random_reflection_on(Rng& rng, const CatRef& S, bool full, int max_new,
                                               const Limits& lim) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        int room = lim.max_objects - static_cast<int>(S->object_count());
        int n = room <= 0 ? 0 : uniform(rng, std::min(1, room), std::min(max_new, room));
        std::vector<Obj> anchors;
        for (int i = 0; i < n; ++i) anchors.push_back(uniform(rng, 0, static_cast<int>(S->object_count()) - 1));
        AdjoinedReflection r = adjoin_retracts(S, anchors, full);
        if (within(r.refl.big(), lim) || n == 0) return r;
    }
    return adjoin_retracts(S, {}, full);
}

struct ReflectionParams {
    Limits total{5, 40};
    int max_small_objects = 2;
    int max_new = 2;
    bool categories = true;
};

inline AdjoinedReflection random_reflection(Rng& rng, const ReflectionParams& rp) {
    Limits sl{std::max(1, std::min(rp.max_small_objects, rp.total.max_objects - 1)), rp.total.max_morphisms / 3};
    bool full = !rp.categories || coin(rng);
    CatRef S = full ? random_groupoid(rng, sl) : random_category(rng, sl, rp.categories);
    return random_reflection_on(rng, S, full, rp.max_new, rp.total);
}

/// A reflection f′ with a structured square (w, x): f′ → f. New objects of
/// f′ go either to R w(anchor) or to a new object of f with anchor w(anchor).
struct ReflectionMorphism {
    AdjoinedReflection source;
    Functor w;
    Functor x;
};

inline ReflectionMorphism random_reflection_morphism_into(Rng& rng, const AdjoinedReflection& f, const ReflectionParams& rp) {
    const FinCategory& S = *f.refl.small();
    Limits sl{std::max(1, std::min(rp.max_small_objects, rp.total.max_objects - 1)), rp.total.max_morphisms / 3};
    CatRef S1 = f.full ? random_groupoid(rng, sl) : random_category(rng, sl, rp.categories);
    Functor w = random_functor_between(rng, S1, f.refl.small());
    AdjoinedReflection src = random_reflection_on(rng, S1, f.full, rp.max_new, rp.total);
    const auto nS1 = static_cast<Obj>(S1->object_count());
    std::vector<Obj> xo;
    for (Obj t = 0; t < static_cast<Obj>(src.anchor.size()); ++t) {
        Obj target = f.refl.R.o(w.o(src.anchor[t]));
        if (t >= nS1) {
            std::vector<Obj> options;
            for (Obj n = static_cast<Obj>(S.object_count()); n < static_cast<Obj>(f.anchor.size()); ++n)
                if (f.anchor[n] == w.o(src.anchor[t])) options.push_back(n);
            if (!options.empty() && coin(rng)) target = choose(rng, options);
        }
        xo.push_back(target);
    }
    Functor x{src.refl.big(), f.refl.big(), xo, {}};
    const FinCategory& T1 = *src.refl.big();
    for (Mor m = 0; m < static_cast<Mor>(T1.morphism_count()); ++m) {
        Mor k = src.refl.L.m(m);
        Mor img = f.morphism(xo[T1.dom(m)], w.m(k), xo[T1.cod(m)]);
        if (img == kNone) fail(ErrorKind::BoundaryMismatch, "reflection morphism has no image");
        x.mor.push_back(img);
    }
    return {src, w, x};
}

// --------------------------------------------------------------- problems

/// A lifting problem (u, v): R → P with u and v chosen at random.
inline std::optional<Square> random_problem(Rng& rng, const SplitReflection& r, const SplitFibration& p) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        Functor v = random_functor_between(rng, r.big(), p.base());
        auto u = random_functor_over(rng, r.small(), p.p, v * r.R);
        if (u) return Square{r.R, p.p, *u, v};
    }
    return std::nullopt;
}

struct CorpusParams {
    Limits total{5, 40};
    bool categories = true;
};

inline std::vector<HorizontalCase> horizontal_corpus(std::uint64_t seed, int cases, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<HorizontalCase> out;
    ReflectionParams rp{cp.total, 2, 2, cp.categories};
    FibrationParams fp{cp.total, 2, true};
    while (static_cast<int>(out.size()) < cases) {
        AdjoinedReflection f = random_reflection(rng, rp);
        ReflectionMorphism fm = random_reflection_morphism_into(rng, f, rp);
        SplitFibration g2 = random_fibration(rng, Orientation::cartesian, fp, cp.categories);
        Limits bl{std::max(1, cp.total.max_objects / 2), cp.total.max_morphisms / 2};
        CatRef B = random_category(rng, bl, cp.categories);
        Functor z = random_functor_between(rng, B, g2.base());
        PulledBackFibration g = pullback_fibration_square(g2, z);
        if (!within(g.fib.total(), cp.total)) continue;
        auto problem = random_problem(rng, f.refl, g.fib);
        if (!problem) continue;
        out.push_back({f.refl, fm.source.refl, g.fib, g2, *problem, fm.w, fm.x, g.top, z});
    }
    return out;
}

inline std::vector<VerticalCase> vertical_corpus(std::uint64_t seed, int cases, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<VerticalCase> out;
    ReflectionParams rp{cp.total, 2, 1, cp.categories};
    FibrationParams fp{{std::max(2, cp.total.max_objects / 2), cp.total.max_morphisms / 4}, 2, true};
    while (static_cast<int>(out.size()) < cases) {
        AdjoinedReflection f1 = random_reflection(rng, rp);
        AdjoinedReflection f2 = random_reflection_on(rng, f1.refl.big(), f1.full, 1, cp.total);
        SplitFibration g2 = random_fibration(rng, Orientation::cartesian, fp, cp.categories);
        SplitFibration g1 = random_fibration_over(rng, g2.total(), Orientation::cartesian, {cp.total, 2, true});
        if (!within(g1.total(), cp.total)) continue;
        SplitFibration gg = compose_split_fibrations(g1, g2);
        SplitReflection ff = compose_split_reflections(f2.refl, f1.refl);
        auto problem = random_problem(rng, ff, gg);
        if (!problem) continue;
        out.push_back({f1.refl, f2.refl, g1, g2, *problem});
    }
    return out;
}

/// (refl, fibration, problem) triples for the canonical lift.
struct LiftCase {
    SplitReflection refl;
    SplitFibration fib;
    Square problem;
};

inline std::vector<LiftCase> lift_corpus(std::uint64_t seed, int cases, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<LiftCase> out;
    ReflectionParams rp{cp.total, 2, 2, cp.categories};
    FibrationParams fp{cp.total, 2, true};
    while (static_cast<int>(out.size()) < cases) {
        AdjoinedReflection f = random_reflection(rng, rp);
        SplitFibration g = random_fibration(rng, Orientation::cartesian, fp, cp.categories);
        auto problem = random_problem(rng, f.refl, g);
        if (problem) out.push_back({f.refl, g, *problem});
    }
    return out;
}

// ---------------------------------------------------------- Frobenius corpora

/// A split opfibration: over groupoids a converted Grothendieck fibration,
/// otherwise a cocartesian one over a chain.
inline SplitFibration random_opfibration(Rng& rng, const FibrationParams& fp, bool categories) {
    if (categories && coin(rng)) {
        CatRef B = fixtures::chain(uniform(rng, 1, 2));
        return random_fibration_over(rng, B, Orientation::cocartesian, fp);
    }
    return fibration_opfibration_convert(random_fibration(rng, Orientation::cartesian, fp, false));
}

inline ExtendedReflection random_extended_reflection(Rng& rng, const CatRef& B, const ReflectionParams& rp) {
    AdjoinedReflection r = random_reflection(rng, rp);
    return {r.refl, random_functor_between(rng, r.refl.big(), B)};
}

struct FrobeniusCase {
    SplitFibration P;
    ExtendedReflection refl;   // R with extension U = U′∘Y
    StructuredSquare square;   // (X, Y): R → R′
    Functor U2;                // extension U′ of R′
    SplitReflection r1;        // r1: S → T and r2: T → V
    SplitReflection r2;
    Functor V;                 // extension of the composite
};

inline std::vector<FrobeniusCase> frobenius_corpus(std::uint64_t seed, int cases, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<FrobeniusCase> out;
    ReflectionParams rp{cp.total, 2, 2, cp.categories};
    FibrationParams fp{cp.total, 2, true};
    while (static_cast<int>(out.size()) < cases) {
        SplitFibration P = random_opfibration(rng, fp, cp.categories);
        const CatRef& B = P.base();
        AdjoinedReflection target = random_reflection(rng, rp);
        Functor U2 = random_functor_between(rng, target.refl.big(), B);
        ReflectionMorphism m = random_reflection_morphism_into(rng, target, rp);
        AdjoinedReflection r2 = random_reflection_on(rng, target.refl.big(), target.full, 1, cp.total);
        Functor V = random_functor_between(rng, r2.refl.big(), B);
        out.push_back({P, {m.source.refl, U2 * m.x}, reflection_square(m.source.refl, target.refl, m.w, m.x), U2,
                       target.refl, r2.refl, V});
    }
    return out;
}

/// (refl, U: T → A) cases over the total of P.
struct StrongCase {
    SplitFibration P;
    std::vector<ExtendedReflection> corpus;
};

inline std::vector<StrongCase> strong_corpus(std::uint64_t seed, int cases, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<StrongCase> out;
    ReflectionParams rp{cp.total, 2, 2, cp.categories};
    FibrationParams fp{cp.total, 2, true};
    while (static_cast<int>(out.size()) < cases) {
        SplitFibration P = random_opfibration(rng, fp, cp.categories);
        out.push_back({P, {random_extended_reflection(rng, P.total(), rp)}});
    }
    return out;
}

// ---------------------------------------------------------- groupoid corpora

/// A fibration f of groupoids with fiber size ≤ 3 and pairs (y over B,
/// x over A) for the adjunction check.
struct AdjunctionCase {
    SplitFibration f;
    std::vector<std::pair<Functor, Functor>> pairs;
};

namespace detail {

/// Keeps the triangle check tractable: it materializes f_* f* f_* x, whose
/// fiber over b has up to |(f_* x)_b|^|A_b| objects.
inline bool small_pushforward(const SplitFibration& f, const Functor& x) {
    SectionGroupoid pg = pushforward_object(f, x);
    if (pg.cat->morphism_count() > 24) return false;
    for (std::size_t b = 0; b < pg.fibers.size(); ++b) {
        double n = 0;
        for (Obj o : pg.obj_base)
            if (o == static_cast<Obj>(b)) n += 1;
        if (std::pow(n, static_cast<double>(pg.fibers[b].cat->object_count())) > 16) return false;
    }
    return true;
}

}  // namespace detail

inline std::vector<AdjunctionCase> adjunction_corpus(std::uint64_t seed, int cases, const CorpusParams&) {
    Rng rng(seed);
    std::vector<AdjunctionCase> out;
    Limits base{2, 4};
    Limits small{2, 4};
    while (static_cast<int>(out.size()) < cases) {
        CatRef B = random_groupoid(rng, base);
        SplitFibration f = random_fibration_over(rng, B, Orientation::cartesian, {{4, 12}, 3, true});
        SplitFibration xf = random_fibration_over(rng, f.total(), Orientation::cartesian, {{6, 16}, 2, true});
        if (!detail::small_pushforward(f, xf.p)) continue;
        Functor y = random_functor_between(rng, random_groupoid(rng, small), B);
        if (!detail::small_pushforward(f, pullback_category(f.p, y).left)) continue;
        out.push_back({f, {{identity_functor(B), xf.p}, {y, xf.p}}});
    }
    return out;
}

/// P over groupoids, a split fibration x over its total, and problems
/// (u, U∘R) against P_* x.
struct WitnessCase {
    SplitFibration P;
    SplitFibration x;
    std::vector<PushforwardProblem> problems;
};

inline std::vector<WitnessCase> witness_corpus(std::uint64_t seed, int problems, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<WitnessCase> out;
    ReflectionParams rp{{4, 30}, 2, 1, false};  // the unit of f* ⊣ f_* needs groupoids
    int total = 0;
    while (total < problems) {
        SplitFibration P = random_fibration_over(rng, random_groupoid(rng, {2, 4}), Orientation::cartesian, {{4, 16}, 2, true});
        SplitFibration x = random_fibration_over(rng, P.total(), Orientation::cartesian, {cp.total, 2, true});
        if (!within(x.total(), cp.total)) continue;
        SplitFibration pushed = pushforward_structure(P, x);
        WitnessCase wc{P, x, {}};
        for (int i = 0; i < 4; ++i) {
            ExtendedReflection r = random_extended_reflection(rng, P.base(), rp);
            auto u = random_functor_over(rng, r.refl.small(), pushed.p, r.U * r.refl.R);
            if (!u) continue;
            wc.problems.push_back({r, *u});
        }
        total += static_cast<int>(wc.problems.size());
        if (!wc.problems.empty()) out.push_back(std::move(wc));
    }
    return out;
}

/// A structured pullback square (X, Y): P → Q of groupoid fibrations with
/// reflections over the base of P and test objects z over the total of Q.
struct BCCase {
    StructuredSquare square;
    std::vector<ExtendedReflection> corpus;
    std::vector<Functor> z;
};

inline std::vector<BCCase> bc_corpus(std::uint64_t seed, int cases, const CorpusParams& cp) {
    Rng rng(seed);
    std::vector<BCCase> out;
    ReflectionParams rp{{4, 30}, 2, 1, cp.categories};
    while (static_cast<int>(out.size()) < cases) {
        SplitFibration Q = random_fibration(rng, Orientation::cartesian, {{4, 24}, 2, true}, false);
        CatRef B = random_groupoid(rng, {2, 8});
        Functor Y = random_functor_between(rng, B, Q.base());
        PulledBackFibration P = pullback_fibration_square(Q, Y);
        if (!within(P.fib.total(), cp.total)) continue;
        BCCase c{fibration_square(P.fib, Q, P.top, Y), {}, {}};
        for (int i = 0; i < 2; ++i) c.corpus.push_back(random_extended_reflection(rng, B, rp));
        c.z.push_back(random_functor_between(rng, random_groupoid(rng, {2, 8}), Q.total()));
        c.z.push_back(identity_functor(Q.total()));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace awfslab::gen
