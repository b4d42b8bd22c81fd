#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "awfslab/functor.hpp"

namespace awfslab {

/// Admissible images for a functor search. Each object and morphism of the
/// source carries a mask over the target; constraints only ever shrink masks.
class FunctorConstraints {
public:
    FunctorConstraints(CatRef src, CatRef dst)
        : src_(std::move(src)),
          dst_(std::move(dst)),
          obj_mask_(src_->object_count(), std::vector<char>(dst_->object_count(), 1)),
          mor_mask_(src_->morphism_count(), std::vector<char>(dst_->morphism_count(), 1)) {}

    const CatRef& src() const { return src_; }
    const CatRef& dst() const { return dst_; }

    void fix_obj(Obj x, Obj y) {
        for (Obj z = 0; z < static_cast<Obj>(obj_mask_[x].size()); ++z)
            if (z != y) obj_mask_[x][z] = 0;
    }
    void fix_mor(Mor k, Mor l) {
        for (Mor z = 0; z < static_cast<Mor>(mor_mask_[k].size()); ++z)
            if (z != l) mor_mask_[k][z] = 0;
    }

    /// Restrict to φ with g∘φ = v.
    void over(const Functor& g, const Functor& v) {
        if (!same_category(g.src, dst_) || !same_category(v.src, src_) || !same_category(g.dst, v.dst))
            fail(ErrorKind::BoundaryMismatch, "constraint functors do not match the search");
        for (Obj x = 0; x < static_cast<Obj>(obj_mask_.size()); ++x)
            for (Obj y = 0; y < static_cast<Obj>(obj_mask_[x].size()); ++y)
                if (g.o(y) != v.o(x)) obj_mask_[x][y] = 0;
        for (Mor k = 0; k < static_cast<Mor>(mor_mask_.size()); ++k)
            for (Mor l = 0; l < static_cast<Mor>(mor_mask_[k].size()); ++l)
                if (g.m(l) != v.m(k)) mor_mask_[k][l] = 0;
    }

    /// Restrict to φ with φ∘f = u.
    void under(const Functor& f, const Functor& u) {
        if (!same_category(f.dst, src_) || !same_category(u.dst, dst_) || !same_category(f.src, u.src))
            fail(ErrorKind::BoundaryMismatch, "constraint functors do not match the search");
        for (Obj a = 0; a < static_cast<Obj>(f.obj.size()); ++a) fix_obj(f.o(a), u.o(a));
        for (Mor k = 0; k < static_cast<Mor>(f.mor.size()); ++k) fix_mor(f.m(k), u.m(k));
    }

    bool obj_allowed(Obj x, Obj y) const { return obj_mask_[x][y]; }
    bool mor_allowed(Mor k, Mor l) const { return mor_mask_[k][l]; }

private:
    CatRef src_;
    CatRef dst_;
    std::vector<std::vector<char>> obj_mask_;
    std::vector<std::vector<char>> mor_mask_;
};

namespace detail {

/// Depth-first search over functor assignments. Objects are assigned in
/// index order; after each object every morphism whose endpoints are now
/// both assigned is assigned, and composites are checked as soon as all
/// three members of a composable triple carry images.
class FunctorSearch {
public:
    FunctorSearch(const FunctorConstraints& c, std::mt19937_64* rng, std::uint64_t budget)
        : c_(c), S_(*c.src()), T_(*c.dst()), rng_(rng), budget_(budget) {
        const auto n_obj = static_cast<Obj>(S_.object_count());
        const auto n_mor = static_cast<Mor>(S_.morphism_count());
        obj_.assign(n_obj, kNone);
        mor_.assign(n_mor, kNone);
        after_obj_.assign(n_obj, {});
        for (Mor k = 0; k < n_mor; ++k) {
            Obj last = std::max(S_.dom(k), S_.cod(k));
            after_obj_[last].push_back(k);
        }
        std::vector<int> position(n_mor, 0);
        int pos = 0;
        for (Obj x = 0; x < n_obj; ++x)
            for (Mor k : after_obj_[x]) position[k] = pos++;
        triples_at_.assign(n_mor, {});
        for (Mor g = 0; g < n_mor; ++g)
            for (Mor f = 0; f < n_mor; ++f) {
                Mor gf = S_.compose(g, f);
                if (gf == kNone) continue;
                Mor last = g;
                for (Mor z : {f, gf})
                    if (position[z] > position[last]) last = z;
                triples_at_[last].push_back({g, f, gf});
            }
    }

    void run(const std::function<bool(const Functor&)>& visit) {
        visit_ = &visit;
        stop_ = false;
        assign_object(0);
    }

    bool exhausted() const { return budget_ == 0; }

private:
    void assign_object(Obj x) {
        if (stop_) return;
        if (x == static_cast<Obj>(S_.object_count())) {
            Functor f{c_.src(), c_.dst(), obj_, mor_};
            if (!(*visit_)(f)) stop_ = true;
            return;
        }
        std::vector<Obj> cands;
        for (Obj y = 0; y < static_cast<Obj>(T_.object_count()); ++y)
            if (c_.obj_allowed(x, y)) cands.push_back(y);
        if (rng_) std::shuffle(cands.begin(), cands.end(), *rng_);
        for (Obj y : cands) {
            if (stop_ || !tick()) return;
            obj_[x] = y;
            assign_morphism(x, 0);
        }
        obj_[x] = kNone;
    }

    void assign_morphism(Obj x, std::size_t i) {
        if (stop_) return;
        const auto& list = after_obj_[x];
        if (i == list.size()) {
            assign_object(x + 1);
            return;
        }
        Mor k = list[i];
        Obj d = obj_[S_.dom(k)];
        Obj c = obj_[S_.cod(k)];
        std::vector<Mor> cands;
        if (S_.is_identity(k)) {
            Mor id = T_.identity(d);
            if (c_.mor_allowed(k, id)) cands.push_back(id);
        } else {
            for (Mor l : T_.hom(d, c))
                if (c_.mor_allowed(k, l)) cands.push_back(l);
            if (rng_) std::shuffle(cands.begin(), cands.end(), *rng_);
        }
        for (Mor l : cands) {
            if (stop_ || !tick()) return;
            mor_[k] = l;
            bool ok = true;
            for (auto [g, f, gf] : triples_at_[k])
                if (T_.compose(mor_[g], mor_[f]) != mor_[gf]) {
                    ok = false;
                    break;
                }
            if (ok) assign_morphism(x, i + 1);
        }
        mor_[k] = kNone;
    }

    bool tick() {
        if (budget_ == 0) return false;
        --budget_;
        return true;
    }

    const FunctorConstraints& c_;
    const FinCategory& S_;
    const FinCategory& T_;
    std::mt19937_64* rng_;
    std::uint64_t budget_;
    std::vector<Obj> obj_;
    std::vector<Mor> mor_;
    std::vector<std::vector<Mor>> after_obj_;
    std::vector<std::vector<std::tuple<Mor, Mor, Mor>>> triples_at_;
    const std::function<bool(const Functor&)>* visit_ = nullptr;
    bool stop_ = false;
};

inline bool functor_less(const Functor& a, const Functor& b) {
    return std::tie(a.obj, a.mor) < std::tie(b.obj, b.mor);
}

}  // namespace detail

/// Every functor satisfying the constraints, ordered lexicographically by
/// (object map, morphism map).
inline std::vector<Functor> enumerate_functors(const FunctorConstraints& c) {
    std::vector<Functor> out;
    detail::FunctorSearch search(c, nullptr, UINT64_MAX);
    search.run([&](const Functor& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end(), detail::functor_less);
    return out;
}

inline std::size_t count_functors(const FunctorConstraints& c, std::size_t limit = SIZE_MAX) {
    std::size_t n = 0;
    detail::FunctorSearch search(c, nullptr, UINT64_MAX);
    search.run([&](const Functor&) { return ++n < limit; });
    return n;
}

/// A uniformly shuffled depth-first search returning the first solution, or
/// nothing if none exists within `budget` search steps.
inline std::optional<Functor> random_functor(const FunctorConstraints& c, std::mt19937_64& rng,
                                             std::uint64_t budget = 200000) {
    std::optional<Functor> out;
    detail::FunctorSearch search(c, &rng, budget);
    search.run([&](const Functor& f) {
        out = f;
        return false;
    });
    return out;
}

/// Checks the universal property of a pullback against one cone: the cone
/// factors through the pullback, and exactly one mediating functor exists.
inline ValidationReport check_pullback_universal(const Pullback& pb, const Functor& p, const Functor& q) {
    ValidationReport r;
    ++r.checked;
    if (compose_functors(pb.f, p) != compose_functors(pb.g, q)) {
        r.add("cone commutes", "f∘p != g∘q");
        return r;
    }
    FunctorConstraints c(p.src, pb.cat);
    c.over(pb.left, p);
    c.over(pb.right, q);
    auto all = enumerate_functors(c);
    ++r.checked;
    if (all.size() != 1) {
        r.add("unique factorization", std::to_string(all.size()) + " mediating functors");
        return r;
    }
    ++r.checked;
    if (all.front() != pb.induced(p, q)) r.add("induced map", "enumerated factor differs");
    return r;
}

}  // namespace awfslab
