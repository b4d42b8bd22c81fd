#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "awfslab/error.hpp"

namespace awfslab {

using Obj = int;
using Mor = int;
inline constexpr int kNone = -1;

struct MorphismRecord {
    std::string name;
    Obj dom = kNone;
    Obj cod = kNone;

    bool operator==(const MorphismRecord&) const = default;
};

/// A finite category given by explicit tables.
///
/// Objects and morphisms are addressed by dense indices; names are kept for
/// serialization and diagnostics. Composition is stored as a full
/// `|mor| x |mor|` table where `kNone` marks non-composable pairs, with
/// `compose(g, f)` meaning "apply f, then g". Values are immutable once
/// built and are shared through `CatRef`.
class FinCategory {
public:
    FinCategory() = default;

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }

    const std::string& object_name(Obj o) const { return objects_.at(o); }
    const std::string& morphism_name(Mor m) const { return morphisms_.at(m).name; }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<MorphismRecord>& morphisms() const { return morphisms_; }

    Obj dom(Mor m) const { return morphisms_[m].dom; }
    Obj cod(Mor m) const { return morphisms_[m].cod; }
    Mor identity(Obj o) const { return identities_[o]; }
    bool is_identity(Mor m) const { return identities_[morphisms_[m].dom] == m; }

    /// g∘f, or kNone when cod f != dom g.
    Mor compose(Mor g, Mor f) const { return table_[g * morphisms_.size() + f]; }
    /// g∘f, throwing BoundaryMismatch when not composable.
    Mor comp(Mor g, Mor f) const {
        Mor r = compose(g, f);
        if (r == kNone)
            fail(ErrorKind::BoundaryMismatch,
                 "cannot compose " + morphism_name(g) + " after " + morphism_name(f));
        return r;
    }

    bool is_groupoid() const { return groupoid_; }
    Mor inverse(Mor m) const {
        if (!groupoid_) fail(ErrorKind::NotAGroupoid, "category has no inverse table");
        return inverses_[m];
    }

    const std::vector<Mor>& hom(Obj a, Obj b) const { return hom_[a * objects_.size() + b]; }

    std::optional<Obj> find_object(const std::string& name) const {
        auto it = object_index_.find(name);
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<Mor> find_morphism(const std::string& name) const {
        auto it = morphism_index_.find(name);
        if (it == morphism_index_.end()) return std::nullopt;
        return it->second;
    }
    Obj object(const std::string& name) const {
        auto o = find_object(name);
        if (!o) fail(ErrorKind::MalformedTable, "unknown object '" + name + "'");
        return *o;
    }
    Mor morphism(const std::string& name) const {
        auto m = find_morphism(name);
        if (!m) fail(ErrorKind::MalformedTable, "unknown morphism '" + name + "'");
        return *m;
    }

    bool operator==(const FinCategory& other) const {
        return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
               identities_ == other.identities_ && table_ == other.table_ &&
               groupoid_ == other.groupoid_ && inverses_ == other.inverses_;
    }

private:
    friend class CategoryBuilder;

    std::vector<std::string> objects_;
    std::vector<MorphismRecord> morphisms_;
    std::vector<Mor> identities_;
    std::vector<Mor> table_;
    bool groupoid_ = false;
    std::vector<Mor> inverses_;
    std::vector<std::vector<Mor>> hom_;
    std::unordered_map<std::string, Obj> object_index_;
    std::unordered_map<std::string, Mor> morphism_index_;
};

using CatRef = std::shared_ptr<const FinCategory>;

inline bool same_category(const CatRef& a, const CatRef& b) { return a == b || *a == *b; }

/// Incremental construction of a FinCategory. `build()` checks that the
/// tables are syntactically total (every composable pair has an entry,
/// every object an identity, every morphism an inverse when the groupoid
/// flag is set) and throws MalformedTable otherwise. Algebraic laws are
/// not checked here; see validate_category.
class CategoryBuilder {
public:
    Obj add_object(const std::string& name) {
        if (cat_.object_index_.count(name))
            fail(ErrorKind::MalformedTable, "duplicate object '" + name + "'");
        Obj id = static_cast<Obj>(cat_.objects_.size());
        cat_.objects_.push_back(name);
        cat_.object_index_.emplace(name, id);
        return id;
    }

    Mor add_morphism(const std::string& name, Obj dom, Obj cod) {
        if (cat_.morphism_index_.count(name))
            fail(ErrorKind::MalformedTable, "duplicate morphism '" + name + "'");
        if (dom < 0 || cod < 0 || dom >= static_cast<Obj>(cat_.objects_.size()) ||
            cod >= static_cast<Obj>(cat_.objects_.size()))
            fail(ErrorKind::MalformedTable, "morphism '" + name + "' has unknown endpoint");
        Mor id = static_cast<Mor>(cat_.morphisms_.size());
        cat_.morphisms_.push_back({name, dom, cod});
        cat_.morphism_index_.emplace(name, id);
        return id;
    }
    Mor add_morphism(const std::string& name, const std::string& dom, const std::string& cod) {
        return add_morphism(name, object_named(dom), morphism_endpoint(cod, name));
    }

    void set_identity(Obj o, Mor m) { identities_[o] = m; }
    void set_identity(const std::string& o, const std::string& m) {
        identities_[object_named(o)] = morphism_named(m);
    }

    void set_composite(Mor g, Mor f, Mor gf) { composites_[{g, f}] = gf; }
    void set_composite(const std::string& g, const std::string& f, const std::string& gf) {
        set_composite(morphism_named(g), morphism_named(f), morphism_named(gf));
    }

    void set_groupoid(bool flag) { cat_.groupoid_ = flag; }
    void set_inverse(Mor m, Mor inv) { inverses_[m] = inv; }
    void set_inverse(const std::string& m, const std::string& inv) {
        inverses_[morphism_named(m)] = morphism_named(inv);
    }

    Obj object_named(const std::string& name) const {
        auto it = cat_.object_index_.find(name);
        if (it == cat_.object_index_.end())
            fail(ErrorKind::MalformedTable, "unknown object '" + name + "'");
        return it->second;
    }
    Mor morphism_named(const std::string& name) const {
        auto it = cat_.morphism_index_.find(name);
        if (it == cat_.morphism_index_.end())
            fail(ErrorKind::MalformedTable, "unknown morphism '" + name + "'");
        return it->second;
    }

    CatRef build() {
        const auto n_obj = cat_.objects_.size();
        const auto n_mor = cat_.morphisms_.size();
        cat_.identities_.assign(n_obj, kNone);
        for (auto [o, m] : identities_) cat_.identities_[o] = m;
        for (std::size_t o = 0; o < n_obj; ++o)
            if (cat_.identities_[o] == kNone)
                fail(ErrorKind::MalformedTable, "object '" + cat_.objects_[o] + "' has no identity");

        cat_.table_.assign(n_mor * n_mor, kNone);
        for (auto [key, gf] : composites_) {
            auto [g, f] = key;
            if (cat_.morphisms_[g].dom != cat_.morphisms_[f].cod)
                fail(ErrorKind::MalformedTable, "composition entry for non-composable pair (" +
                                                    cat_.morphisms_[g].name + ", " +
                                                    cat_.morphisms_[f].name + ")");
            cat_.table_[g * n_mor + f] = gf;
        }
        for (std::size_t g = 0; g < n_mor; ++g)
            for (std::size_t f = 0; f < n_mor; ++f)
                if (cat_.morphisms_[g].dom == cat_.morphisms_[f].cod &&
                    cat_.table_[g * n_mor + f] == kNone)
                    fail(ErrorKind::MalformedTable, "missing composite (" + cat_.morphisms_[g].name +
                                                        ", " + cat_.morphisms_[f].name + ")");

        if (cat_.groupoid_) {
            cat_.inverses_.assign(n_mor, kNone);
            for (auto [m, inv] : inverses_) cat_.inverses_[m] = inv;
            for (std::size_t m = 0; m < n_mor; ++m)
                if (cat_.inverses_[m] == kNone)
                    fail(ErrorKind::MalformedTable,
                         "groupoid morphism '" + cat_.morphisms_[m].name + "' has no inverse");
        } else if (!inverses_.empty()) {
            fail(ErrorKind::MalformedTable, "inverse table present without groupoid flag");
        }

        cat_.hom_.assign(n_obj * n_obj, {});
        for (std::size_t m = 0; m < n_mor; ++m)
            cat_.hom_[cat_.morphisms_[m].dom * n_obj + cat_.morphisms_[m].cod].push_back(
                static_cast<Mor>(m));

        auto out = std::make_shared<const FinCategory>(std::move(cat_));
        cat_ = FinCategory{};
        identities_.clear();
        composites_.clear();
        inverses_.clear();
        return out;
    }

private:
    Obj morphism_endpoint(const std::string& obj, const std::string& mor) const {
        auto it = cat_.object_index_.find(obj);
        if (it == cat_.object_index_.end())
            fail(ErrorKind::MalformedTable, "morphism '" + mor + "' references unknown object '" + obj + "'");
        return it->second;
    }

    FinCategory cat_;
    std::map<Obj, Mor> identities_;
    std::map<std::pair<Mor, Mor>, Mor> composites_;
    std::map<Mor, Mor> inverses_;
};

/// Builds a category whose composition and inverses are given by callables
/// over morphism indices. Used by every derived construction.
template <class Compose, class Inverse>
CatRef make_category(const std::vector<std::string>& objects,
                     const std::vector<MorphismRecord>& morphisms,
                     const std::vector<Mor>& identities, Compose&& compose, bool groupoid,
                     Inverse&& inverse) {
    CategoryBuilder b;
    for (const auto& o : objects) b.add_object(o);
    for (const auto& m : morphisms) b.add_morphism(m.name, m.dom, m.cod);
    for (std::size_t o = 0; o < objects.size(); ++o) b.set_identity(static_cast<Obj>(o), identities[o]);
    for (std::size_t g = 0; g < morphisms.size(); ++g)
        for (std::size_t f = 0; f < morphisms.size(); ++f)
            if (morphisms[g].dom == morphisms[f].cod)
                b.set_composite(static_cast<Mor>(g), static_cast<Mor>(f),
                                compose(static_cast<Mor>(g), static_cast<Mor>(f)));
    b.set_groupoid(groupoid);
    if (groupoid)
        for (std::size_t m = 0; m < morphisms.size(); ++m)
            b.set_inverse(static_cast<Mor>(m), inverse(static_cast<Mor>(m)));
    return b.build();
}

template <class Compose>
CatRef make_category(const std::vector<std::string>& objects,
                     const std::vector<MorphismRecord>& morphisms,
                     const std::vector<Mor>& identities, Compose&& compose) {
    return make_category(objects, morphisms, identities, std::forward<Compose>(compose), false,
                         [](Mor) { return kNone; });
}

inline std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

/// Checks every category law by full enumeration.
inline ValidationReport validate_category(const FinCategory& c) {
    ValidationReport r;
    const auto n_mor = static_cast<Mor>(c.morphism_count());
    for (Obj o = 0; o < static_cast<Obj>(c.object_count()); ++o) {
        Mor id = c.identity(o);
        ++r.checked;
        if (c.dom(id) != o || c.cod(id) != o)
            r.add("identity endpoints", "id_" + c.object_name(o) + " = " + c.morphism_name(id));
    }
    for (Mor g = 0; g < n_mor; ++g)
        for (Mor f = 0; f < n_mor; ++f) {
            Mor gf = c.compose(g, f);
            if (gf == kNone) continue;
            ++r.checked;
            if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
                r.add("composite endpoints",
                      c.morphism_name(g) + "∘" + c.morphism_name(f) + " = " + c.morphism_name(gf));
        }
    for (Mor f = 0; f < n_mor; ++f) {
        ++r.checked;
        if (c.compose(f, c.identity(c.dom(f))) != f)
            r.add("right identity", c.morphism_name(f));
        if (c.compose(c.identity(c.cod(f)), f) != f)
            r.add("left identity", c.morphism_name(f));
    }
    const auto n_obj = static_cast<Obj>(c.object_count());
    for (Mor f = 0; f < n_mor; ++f)
        for (Obj x = 0; x < n_obj; ++x)
            for (Mor g : c.hom(c.cod(f), x))
                for (Obj y = 0; y < n_obj; ++y)
                    for (Mor h : c.hom(x, y)) {
                        Mor gf = c.compose(g, f);
                        Mor hg = c.compose(h, g);
                        Mor left = gf == kNone ? kNone : c.compose(h, gf);
                        Mor right = hg == kNone ? kNone : c.compose(hg, f);
                        ++r.checked;
                        if (left != right || left == kNone)
                            r.add("associativity", c.morphism_name(h) + "∘(" + c.morphism_name(g) +
                                                       "∘" + c.morphism_name(f) + ")");
                    }
    if (c.is_groupoid()) {
        for (Mor f = 0; f < n_mor; ++f) {
            Mor inv = c.inverse(f);
            ++r.checked;
            if (c.dom(inv) != c.cod(f) || c.cod(inv) != c.dom(f)) {
                r.add("inverse endpoints", c.morphism_name(f));
                continue;
            }
            if (c.compose(inv, f) != c.identity(c.dom(f)))
                r.add("left inverse", c.morphism_name(f) + "^-1∘" + c.morphism_name(f));
            if (c.compose(f, inv) != c.identity(c.cod(f)))
                r.add("right inverse", c.morphism_name(f) + "∘" + c.morphism_name(f) + "^-1");
        }
    }
    return r;
}

}  // namespace awfslab
