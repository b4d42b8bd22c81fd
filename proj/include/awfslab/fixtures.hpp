#pragma once

#include <string>
#include <vector>

#include "awfslab/functor.hpp"

namespace awfslab::fixtures {

/// The terminal groupoid: one object `*`, one morphism `1`.
inline CatRef terminal() {
    CategoryBuilder b;
    b.add_object("*");
    b.add_morphism("1", 0, 0);
    b.set_identity(0, 0);
    b.set_composite(0, 0, 0);
    b.set_groupoid(true);
    b.set_inverse(0, 0);
    return b.build();
}

/// The cyclic group Z_n as a one-object groupoid. Morphisms are `e`, `g`,
/// `g2`, ... with `gk` the k-th power of the generator.
inline CatRef cyclic(int n, const std::string& object = "*", const std::string& prefix = "g") {
    CategoryBuilder b;
    b.add_object(object);
    auto name = [&](int k) {
        if (k == 0) return std::string("e");
        if (k == 1) return prefix;
        return prefix + std::to_string(k);
    };
    for (int k = 0; k < n; ++k) b.add_morphism(name(k), 0, 0);
    b.set_identity(0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.set_composite(i, j, (i + j) % n);
    b.set_groupoid(true);
    for (int k = 0; k < n; ++k) b.set_inverse(k, (n - k) % n);
    return b.build();
}

/// BZ₂ with the generator named `s`.
inline CatRef bz2() { return cyclic(2, "*", "s"); }

/// The discrete category on the given object names; identities are `1<name>`.
inline CatRef discrete(const std::vector<std::string>& names) {
    CategoryBuilder b;
    for (const auto& n : names) b.add_object(n);
    for (std::size_t i = 0; i < names.size(); ++i) {
        b.add_morphism("1" + names[i], static_cast<Obj>(i), static_cast<Obj>(i));
        b.set_identity(static_cast<Obj>(i), static_cast<Mor>(i));
        b.set_composite(static_cast<Mor>(i), static_cast<Mor>(i), static_cast<Mor>(i));
    }
    b.set_groupoid(true);
    for (std::size_t i = 0; i < names.size(); ++i) b.set_inverse(static_cast<Mor>(i), static_cast<Mor>(i));
    return b.build();
}

/// The codiscrete groupoid on the given objects: exactly one morphism
/// `x>y` between any two objects.
inline CatRef codiscrete(const std::vector<std::string>& names) {
    CategoryBuilder b;
    const auto n = static_cast<int>(names.size());
    for (const auto& s : names) b.add_object(s);
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.add_morphism(i == j ? "1" + names[i] : names[i] + ">" + names[j], i, j);
    for (int i = 0; i < n; ++i) b.set_identity(i, idx(i, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) b.set_composite(idx(j, k), idx(i, j), idx(i, k));
    b.set_groupoid(true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.set_inverse(idx(i, j), idx(j, i));
    return b.build();
}

/// The interval groupoid 𝕀: objects `a`, `b` and a single isomorphism
/// between them.
inline CatRef interval() { return codiscrete({"a", "b"}); }

/// The chain 0 → 1 → ... → n-1 as a poset category.
inline CatRef chain(int n) {
    CategoryBuilder b;
    for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
    std::vector<std::vector<Mor>> idx(n, std::vector<Mor>(n, kNone));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            idx[i][j] = b.add_morphism(i == j ? "1" + std::to_string(i)
                                              : std::to_string(i) + "<" + std::to_string(j),
                                       i, j);
    for (int i = 0; i < n; ++i) b.set_identity(i, idx[i][i]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) b.set_composite(idx[j][k], idx[i][j], idx[i][k]);
    return b.build();
}

struct Product {
    CatRef cat;
    Functor first;
    Functor second;
};

/// C × D with pair names and both projections.
inline Product product(const CatRef& c, const CatRef& d) {
    auto one = terminal();
    auto to_one = [&](const CatRef& x) { return constant_functor(x, one, 0); };
    Pullback pb = pullback_category(to_one(c), to_one(d));
    return {pb.cat, pb.left, pb.right};
}

/// The functor 𝟙 → C picking out object `x`.
inline Functor point(const CatRef& c, Obj x) {
    auto one = terminal();
    return Functor{one, c, {x}, {c->identity(x)}};
}

/// The unique functor C → 𝟙.
inline Functor to_terminal(const CatRef& c) { return constant_functor(c, terminal(), 0); }

}  // namespace awfslab::fixtures
