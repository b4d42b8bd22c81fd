#pragma once

#include <functional>
#include <string>
#include <vector>

#include "awfslab/structured.hpp"

namespace awfslab {

/// The canonical filler of a problem (X, Y): R → P, with R a split
/// reflection S → T and P a cartesian split fibration A → B.
///
/// φ(t) is the domain of the chosen lift ℓ_t of Yθ_t at X L t, and φ(k) for
/// k: t → t′ is the unique χ over Y k with ℓ_{t′}∘χ = X L k∘ℓ_t.
inline Functor canonical_lift(const SplitReflection& sr, const SplitFibration& sf, const Square& problem) {
    if (sf.orientation != Orientation::cartesian)
        fail(ErrorKind::OrientationMismatch, "canonical lift needs a cartesian fibration");
    if (problem.left != sr.R || problem.right != sf.p)
        fail(ErrorKind::BoundaryMismatch, "problem legs are not the reflection and the fibration");
    if (!validate_square(problem).ok())
        fail(ErrorKind::NonCommutingProblem, "P∘X != Y∘R");
    const Functor& X = problem.top;
    const Functor& Y = problem.bottom;
    const FinCategory& T = *sr.big();
    const FinCategory& A = *sf.total();
    const auto nT = static_cast<Obj>(T.object_count());
    std::vector<Mor> ell(nT);
    Functor phi{sr.big(), sf.total(), std::vector<Obj>(nT), std::vector<Mor>(T.morphism_count())};
    for (Obj t = 0; t < nT; ++t) {
        ell[t] = sf.lift(X.o(sr.L.o(t)), Y.m(sr.unit(t)));
        phi.obj[t] = A.dom(ell[t]);
    }
    for (Mor k = 0; k < static_cast<Mor>(T.morphism_count()); ++k) {
        Obj t = T.dom(k), t1 = T.cod(k);
        Mor target = A.comp(X.m(sr.L.m(k)), ell[t]);
        Mor chosen = kNone;
        int n = 0;
        for (Mor chi : A.hom(phi.o(t), phi.o(t1)))
            if (sf.p.m(chi) == Y.m(k) && A.compose(ell[t1], chi) == target) {
                chosen = chi;
                ++n;
            }
        if (n != 1)
            fail(ErrorKind::NotAFibration, "no unique factorization through the lift at " + T.object_name(t1));
        phi.mor[k] = chosen;
    }
    if (!is_filler(problem, phi))
        fail(ErrorKind::NotAFibration, "canonical lift does not fill the problem");
    return phi;
}

/// A lifting operation for (split reflection, split fibration) pairs.
struct LiftingOperation {
    std::string name;
    std::function<Functor(const SplitReflection&, const SplitFibration&, const Square&)> assign;
};

inline LiftingOperation canonical_lifting_operation() {
    return {"canonical", [](const SplitReflection& r, const SplitFibration& p, const Square& s) {
                return canonical_lift(r, p, s);
            }};
}

/// Picks a filler from the exhaustive set by hashing the problem; a valid
/// filler chosen without regard for coherence.
inline LiftingOperation arbitrary_filler_operation(std::uint64_t seed) {
    return {"arbitrary", [seed](const SplitReflection&, const SplitFibration&, const Square& s) {
                FillerSet fs = enumerate_fillers(s);
                if (fs.fillers.empty()) fail(ErrorKind::NonCommutingProblem, "problem has no filler");
                std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
                for (const Functor* f : {&s.top, &s.bottom}) {
                    for (int x : f->obj) h = (h ^ static_cast<std::uint64_t>(x + 1)) * 0x100000001b3ULL;
                    for (int x : f->mor) h = (h ^ static_cast<std::uint64_t>(x + 7)) * 0x100000001b3ULL;
                }
                h ^= fs.fillers.size() * 0x2545F4914F6CDD1DULL;
                return fs.fillers[h % fs.fillers.size()];
            }};
}

/// Data for one instance of the horizontal law: structured squares
/// (w, x): f′ → f of reflections and (y, z): g → g′ of fibrations, and a
/// problem (u, v): f → g.
struct HorizontalCase {
    SplitReflection f;
    SplitReflection f2;
    SplitFibration g;
    SplitFibration g2;
    Square problem;
    Functor w, x;
    Functor y, z;
};

/// Data for one instance of the vertical law: reflections f1: S → T and
/// f2: T → V, fibrations g1: X → Y and g2: Y → Z, and a problem
/// (u, v): f2∘f1 → g2∘g1.
struct VerticalCase {
    SplitReflection f1;
    SplitReflection f2;
    SplitFibration g1;
    SplitFibration g2;
    Square problem;
};

inline ValidationReport check_horizontal_law(const LiftingOperation& op, const std::vector<HorizontalCase>& corpus) {
    ValidationReport rep;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        const std::string tag = "case " + std::to_string(i);
        auto left = check_structured_square(reflection_square(c.f2, c.f, c.w, c.x));
        auto right = check_structured_square(fibration_square(c.g, c.g2, c.y, c.z));
        if (!left.ok() || !right.ok()) {
            rep.merge(left, tag + " reflection square");
            rep.merge(right, tag + " fibration square");
            continue;
        }
        Functor lhs = c.y * op.assign(c.f, c.g, c.problem) * c.x;
        Square moved{c.f2.R, c.g2.p, c.y * c.problem.top * c.w, c.z * c.problem.bottom * c.x};
        Functor rhs = op.assign(c.f2, c.g2, moved);
        ++rep.checked;
        if (lhs != rhs) rep.add("horizontal law y∘φ(u,v)∘x = φ(y∘u∘w, z∘v∘x)", tag);
    }
    return rep;
}

inline ValidationReport check_vertical_law(const LiftingOperation& op, const std::vector<VerticalCase>& corpus) {
    ValidationReport rep;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        const std::string tag = "case " + std::to_string(i);
        SplitReflection ff = compose_split_reflections(c.f2, c.f1);
        SplitFibration gg = compose_split_fibrations(c.g1, c.g2);
        const Functor& u = c.problem.top;
        const Functor& v = c.problem.bottom;
        Functor upper = op.assign(c.f1, gg, Square{c.f1.R, gg.p, u, v * c.f2.R});
        Functor lower = op.assign(ff, c.g2, Square{ff.R, c.g2.p, c.g1.p * u, v});
        Square middle{c.f2.R, c.g1.p, upper, lower};
        ++rep.checked;
        if (!validate_square(middle).ok()) {
            rep.add("intermediate problem commutes", tag);
            continue;
        }
        Functor lhs = op.assign(c.f2, c.g1, middle);
        Functor rhs = op.assign(ff, gg, c.problem);
        ++rep.checked;
        if (lhs != rhs) rep.add("vertical law φ(φ(u, v∘f), φ(g′∘u, v)) = φ(u, v)", tag);
    }
    return rep;
}

// ------------------------------------------------------------------ slicing

/// A reflection together with an extension a: T → A of its codomain.
struct SlicedReflection {
    SplitReflection refl;
    Functor a;
};

/// A fibration together with an extension b: B → A of its codomain.
struct SlicedFibration {
    SplitFibration fib;
    Functor b;
};

/// A lifting operation on the slice over a fixed base: fillers are slice
/// morphisms (φ, b∘g).
struct SlicedLiftingOperation {
    std::string name;
    CatRef base;
    std::function<SliceMorphism(const SlicedReflection&, const SlicedFibration&, const Square&)> assign;
};

inline SlicedLiftingOperation slice_lifting_operation(const LiftingOperation& op, const CatRef& base) {
    return {op.name + "/slice", base,
            [op, base](const SlicedReflection& f, const SlicedFibration& g, const Square& s) {
                if (!same_category(f.a.dst, base) || !same_category(g.b.dst, base))
                    fail(ErrorKind::ExtensionMismatch, "extension does not land in the slice base");
                if (!same_category(g.b.src, s.bottom.dst) || g.b * s.bottom != f.a)
                    fail(ErrorKind::ExtensionMismatch, "b∘v != a");
                return SliceMorphism{op.assign(f.refl, g.fib, s), g.b * g.fib.p};
            }};
}

/// A horizontal law instance in the slice: the reflection f carries the
/// extension `a` and the fibration g2 carries `b2`; the remaining extensions
/// are induced (a∘x for f2, b2∘z for g).
struct SlicedHorizontalCase {
    HorizontalCase base;
    Functor a;
    Functor b2;
};

inline ValidationReport check_horizontal_law(const SlicedLiftingOperation& op,
                                             const std::vector<SlicedHorizontalCase>& corpus) {
    ValidationReport rep;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& sc = corpus[i];
        const auto& c = sc.base;
        const std::string tag = "case " + std::to_string(i);
        SlicedReflection f{c.f, sc.a};
        SlicedReflection f2{c.f2, sc.a * c.x};
        SlicedFibration g{c.g, sc.b2 * c.z};
        SlicedFibration g2{c.g2, sc.b2};
        SliceMorphism phi = op.assign(f, g, c.problem);
        Square moved{c.f2.R, c.g2.p, c.y * c.problem.top * c.w, c.z * c.problem.bottom * c.x};
        SliceMorphism rhs = op.assign(f2, g2, moved);
        SliceMorphism lhs{c.y * phi.f * c.x, sc.b2 * c.g2.p};
        ++rep.checked;
        if (phi.a != sc.b2 * c.z * c.g.p) rep.add("sliced filler extension b∘g", tag);
        ++rep.checked;
        if (lhs != rhs) rep.add("sliced horizontal law", tag);
    }
    return rep;
}

inline ValidationReport check_vertical_law(const SlicedLiftingOperation& op, const std::vector<VerticalCase>& corpus,
                                           const std::vector<Functor>& extensions) {
    ValidationReport rep;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        const Functor& b = extensions[i];  // extension of the base of g2
        const std::string tag = "case " + std::to_string(i);
        SplitReflection ff = compose_split_reflections(c.f2, c.f1);
        SplitFibration gg = compose_split_fibrations(c.g1, c.g2);
        const Functor& u = c.problem.top;
        const Functor& v = c.problem.bottom;
        const Functor a = b * v;
        SliceMorphism upper = op.assign({c.f1, a * c.f2.R}, {gg, b}, Square{c.f1.R, gg.p, u, v * c.f2.R});
        SliceMorphism lower = op.assign({ff, a}, {c.g2, b}, Square{ff.R, c.g2.p, c.g1.p * u, v});
        Square middle{c.f2.R, c.g1.p, upper.f, lower.f};
        ++rep.checked;
        if (!validate_square(middle).ok()) {
            rep.add("intermediate problem commutes", tag);
            continue;
        }
        SliceMorphism lhs = op.assign({c.f2, a}, {c.g1, b * c.g2.p}, middle);
        SliceMorphism rhs = op.assign({ff, a}, {gg, b}, c.problem);
        ++rep.checked;
        if (lhs != rhs) rep.add("sliced vertical law", tag);
    }
    return rep;
}

}  // namespace awfslab
