#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "awfslab/model.hpp"

namespace awfslab::io {

using json = nlohmann::json;

/// A type with an optional dependent family and terms, as read from a
/// judgment file.
struct Judgment {
    TypeOver type;
    std::optional<TypeOver> family;
    std::vector<Functor> terms;   // sections of `type`
    std::vector<Functor> bodies;  // sections of `family`
};

using Payload = std::variant<CatRef, Functor, NatTransformation, SplitFibration, SplitReflection, Square, Judgment,
                             StructuredSquare>;

inline const char* kind_name(const Payload& p) {
    switch (p.index()) {
        case 0: return "category";
        case 1: return "functor";
        case 2: return "nat";
        case 3: return "fibration";
        case 4: return "reflection";
        case 6: return "judgment";
        default: return "square";
    }
}

struct Fixture {
    Payload payload;
    std::string path;
    std::optional<std::uint64_t> seed;

    std::string kind() const { return kind_name(payload); }
};

// ------------------------------------------------------------------ errors

namespace detail {

[[noreturn]] inline void schema(const std::string& field, const std::string& what) {
    fail(ErrorKind::SchemaError, "field '" + field + "': " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

inline std::string str(const json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string");
    return j.get<std::string>();
}

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

inline json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte);
        fail(ErrorKind::ParseError, origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, p.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Sorted keys, two-space indent, LF newlines, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- encoding

inline json to_json(const FinCategory& c) {
    json j;
    j["kind"] = "category";
    j["objects"] = c.objects();
    json mors = json::array();
    for (const auto& m : c.morphisms())
        mors.push_back({{"name", m.name}, {"dom", c.object_name(m.dom)}, {"cod", c.object_name(m.cod)}});
    j["morphisms"] = mors;
    json ids = json::object();
    for (Obj o = 0; o < static_cast<Obj>(c.object_count()); ++o) ids[c.object_name(o)] = c.morphism_name(c.identity(o));
    j["identities"] = ids;
    json comp = json::array();
    for (Mor g = 0; g < static_cast<Mor>(c.morphism_count()); ++g)
        for (Mor f = 0; f < static_cast<Mor>(c.morphism_count()); ++f)
            if (c.compose(g, f) != kNone)
                comp.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
    j["composition"] = comp;
    j["groupoid"] = c.is_groupoid();
    if (c.is_groupoid()) {
        json inv = json::object();
        for (Mor m = 0; m < static_cast<Mor>(c.morphism_count()); ++m) inv[c.morphism_name(m)] = c.morphism_name(c.inverse(m));
        j["inverses"] = inv;
    }
    return j;
}

inline json to_json(const Functor& f) {
    json j;
    j["kind"] = "functor";
    j["source"] = to_json(*f.src);
    j["target"] = to_json(*f.dst);
    json om = json::object(), mm = json::object();
    for (Obj x = 0; x < static_cast<Obj>(f.obj.size()); ++x) om[f.src->object_name(x)] = f.dst->object_name(f.o(x));
    for (Mor k = 0; k < static_cast<Mor>(f.mor.size()); ++k) mm[f.src->morphism_name(k)] = f.dst->morphism_name(f.m(k));
    j["object_map"] = om;
    j["morphism_map"] = mm;
    return j;
}

inline json to_json(const NatTransformation& n) {
    json j;
    j["kind"] = "nat";
    j["source"] = to_json(n.source);
    j["target"] = to_json(n.target);
    json comp = json::object();
    for (Obj x = 0; x < static_cast<Obj>(n.comp.size()); ++x)
        comp[n.source.src->object_name(x)] = n.source.dst->morphism_name(n.at(x));
    j["components"] = comp;
    return j;
}

inline json to_json(const SplitFibration& sf) {
    json j;
    j["kind"] = "fibration";
    j["functor"] = to_json(sf.p);
    j["orientation"] = to_string(sf.orientation);
    const FinCategory& E = *sf.total();
    const FinCategory& B = *sf.base();
    json lifts = json::array();
    for (Obj e = 0; e < static_cast<Obj>(E.object_count()); ++e)
        for (Mor f = 0; f < static_cast<Mor>(B.morphism_count()); ++f)
            if (sf.is_key(e, f))
                lifts.push_back({{"object", E.object_name(e)},
                                 {"base_morphism", B.morphism_name(f)},
                                 {"lift", E.morphism_name(sf.lift(e, f))}});
    j["lifts"] = lifts;
    return j;
}

inline json to_json(const SplitReflection& sr) {
    json j;
    j["kind"] = "reflection";
    j["section"] = to_json(sr.R);
    j["retraction"] = to_json(sr.L);
    json unit = json::object();
    const FinCategory& T = *sr.big();
    for (Obj t = 0; t < static_cast<Obj>(T.object_count()); ++t) unit[T.object_name(t)] = T.morphism_name(sr.unit(t));
    j["unit"] = unit;
    return j;
}

inline json to_json(const Square& s) {
    return {{"kind", "square"},
            {"left", to_json(s.left)},
            {"right", to_json(s.right)},
            {"top", to_json(s.top)},
            {"bottom", to_json(s.bottom)}};
}

/// A square whose legs are written as reflections or fibrations.
inline json to_json(const StructuredSquare& ss) {
    json j{{"kind", "square"}, {"top", to_json(ss.square.top)}, {"bottom", to_json(ss.square.bottom)}};
    switch (ss.kind) {
        case StructureKind::reflection:
            j["left"] = to_json(*ss.refl_left);
            j["right"] = to_json(*ss.refl_right);
            break;
        case StructureKind::fibration:
            j["left"] = to_json(*ss.fib_left);
            j["right"] = to_json(*ss.fib_right);
            break;
        case StructureKind::mono:
            fail(ErrorKind::KindMismatch, "split mono squares have no file format");
    }
    return j;
}

inline json to_json(const Judgment& jd) {
    json j;
    j["kind"] = "judgment";
    j["type"] = to_json(jd.type.fib);
    if (jd.family) j["family"] = to_json(jd.family->fib);
    if (!jd.terms.empty()) {
        j["terms"] = json::array();
        for (const auto& t : jd.terms) j["terms"].push_back(to_json(t));
    }
    if (!jd.bodies.empty()) {
        j["bodies"] = json::array();
        for (const auto& t : jd.bodies) j["bodies"].push_back(to_json(t));
    }
    return j;
}

inline json to_json(const Fixture& fx) {
    json j = std::visit([](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CatRef>) return to_json(*v);
        else return to_json(v);
    }, fx.payload);
    if (fx.seed) j["seed"] = *fx.seed;
    return j;
}

inline std::string serialize(const Fixture& fx) { return dump(to_json(fx)); }

// ---------------------------------------------------------------- decoding

/// Decodes fixture JSON. A string where an object is expected is a path to
/// another fixture file, relative to the directory of the referring file.
class Decoder {
public:
    explicit Decoder(std::filesystem::path base = {}) : base_(std::move(base)) {}

    json resolve(const json& j, const std::string& where) const {
        if (!j.is_string()) return j;
        std::filesystem::path p = base_ / j.get<std::string>();
        if (!std::filesystem::exists(p)) detail::schema(where, "referenced file '" + p.string() + "' does not exist");
        return parse_text(read_file(p), p.string());
    }

    CatRef category(const json& in, const std::string& where = "category") const {
        json j = resolve(in, where);
        using detail::field;
        using detail::str;
        CategoryBuilder b;
        const json& objs = field(j, "objects", where);
        if (!objs.is_array()) detail::schema(where + ".objects", "expected an array");
        std::set<std::string> seen;
        for (const auto& o : objs) {
            std::string name = str(o, where + ".objects");
            if (!seen.insert(name).second) detail::schema(where + ".objects", "duplicate object '" + name + "'");
            b.add_object(name);
        }
        auto obj = [&](const json& v, const std::string& w) {
            std::string name = str(v, w);
            if (!seen.count(name)) detail::schema(w, "unknown object '" + name + "'");
            return b.object_named(name);
        };
        std::set<std::string> mors;
        const json& ms = field(j, "morphisms", where);
        if (!ms.is_array()) detail::schema(where + ".morphisms", "expected an array");
        for (const auto& m : ms) {
            const std::string w = where + ".morphisms";
            std::string name = str(field(m, "name", w), w + ".name");
            if (!mors.insert(name).second) detail::schema(w, "duplicate morphism '" + name + "'");
            b.add_morphism(name, obj(field(m, "dom", w), w + ".dom"), obj(field(m, "cod", w), w + ".cod"));
        }
        auto mor = [&](const json& v, const std::string& w) {
            std::string name = str(v, w);
            if (!mors.count(name)) detail::schema(w, "unknown morphism '" + name + "'");
            return b.morphism_named(name);
        };
        const json& ids = field(j, "identities", where);
        if (!ids.is_object()) detail::schema(where + ".identities", "expected an object");
        for (auto it = ids.begin(); it != ids.end(); ++it)
            b.set_identity(obj(json(it.key()), where + ".identities"), mor(it.value(), where + ".identities"));
        const json& comp = field(j, "composition", where);
        if (!comp.is_array()) detail::schema(where + ".composition", "expected an array");
        for (const auto& t : comp) {
            const std::string w = where + ".composition";
            if (!t.is_array() || t.size() != 3) detail::schema(w, "entries are [g, f, g∘f]");
            b.set_composite(mor(t[0], w), mor(t[1], w), mor(t[2], w));
        }
        bool groupoid = j.contains("groupoid") && j["groupoid"].is_boolean() && j["groupoid"].get<bool>();
        if (j.contains("inverses")) groupoid = true;
        b.set_groupoid(groupoid);
        if (groupoid) {
            const json& inv = field(j, "inverses", where);
            if (!inv.is_object()) detail::schema(where + ".inverses", "expected an object");
            for (auto it = inv.begin(); it != inv.end(); ++it)
                b.set_inverse(mor(json(it.key()), where + ".inverses"), mor(it.value(), where + ".inverses"));
        }
        try {
            return b.build();
        } catch (const Error& e) {
            detail::schema(where, e.what());
        }
    }

    Functor functor(const json& in, const std::string& where = "functor") const {
        json j = resolve(in, where);
        CatRef src = category(detail::field(j, "source", where), where + ".source");
        CatRef dst = category(detail::field(j, "target", where), where + ".target");
        return functor_between(j, src, dst, where);
    }

    Functor functor_between(const json& in, const CatRef& src, const CatRef& dst, const std::string& where) const {
        json j = resolve(in, where);
        const json& om = detail::field(j, "object_map", where);
        const json& mm = detail::field(j, "morphism_map", where);
        Functor f{src, dst, std::vector<Obj>(src->object_count(), kNone), std::vector<Mor>(src->morphism_count(), kNone)};
        for (Obj x = 0; x < static_cast<Obj>(src->object_count()); ++x) {
            const std::string& n = src->object_name(x);
            if (!om.contains(n)) detail::schema(where + ".object_map", "no image for object '" + n + "'");
            auto y = dst->find_object(detail::str(om[n], where + ".object_map"));
            if (!y) detail::schema(where + ".object_map", "unknown object '" + om[n].get<std::string>() + "'");
            f.obj[x] = *y;
        }
        for (Mor k = 0; k < static_cast<Mor>(src->morphism_count()); ++k) {
            const std::string& n = src->morphism_name(k);
            if (!mm.contains(n)) detail::schema(where + ".morphism_map", "no image for morphism '" + n + "'");
            auto l = dst->find_morphism(detail::str(mm[n], where + ".morphism_map"));
            if (!l) detail::schema(where + ".morphism_map", "unknown morphism '" + mm[n].get<std::string>() + "'");
            f.mor[k] = *l;
        }
        return f;
    }

    NatTransformation nat(const json& in, const std::string& where = "nat") const {
        json j = resolve(in, where);
        Functor F = functor(detail::field(j, "source", where), where + ".source");
        Functor G = functor(detail::field(j, "target", where), where + ".target");
        const json& comp = detail::field(j, "components", where);
        NatTransformation n{F, G, {}};
        for (Obj x = 0; x < static_cast<Obj>(F.src->object_count()); ++x) {
            const std::string& name = F.src->object_name(x);
            if (!comp.contains(name)) detail::schema(where + ".components", "no component at '" + name + "'");
            auto m = F.dst->find_morphism(detail::str(comp[name], where + ".components"));
            if (!m) detail::schema(where + ".components", "unknown morphism '" + comp[name].get<std::string>() + "'");
            n.comp.push_back(*m);
        }
        return n;
    }

    SplitFibration fibration(const json& in, const std::string& where = "fibration") const {
        json j = resolve(in, where);
        Functor p = functor(detail::field(j, "functor", where), where + ".functor");
        std::string o = detail::str(detail::field(j, "orientation", where), where + ".orientation");
        Orientation orient;
        if (o == "cartesian") orient = Orientation::cartesian;
        else if (o == "cocartesian") orient = Orientation::cocartesian;
        else detail::schema(where + ".orientation", "expected 'cartesian' or 'cocartesian'");
        SplitFibration sf = make_fibration(p, orient, [](Obj, Mor) { return kNone; });
        const json& lifts = detail::field(j, "lifts", where);
        if (!lifts.is_array()) detail::schema(where + ".lifts", "expected an array");
        const FinCategory& E = *p.src;
        const FinCategory& B = *p.dst;
        for (const auto& l : lifts) {
            const std::string w = where + ".lifts";
            auto e = E.find_object(detail::str(detail::field(l, "object", w), w + ".object"));
            auto f = B.find_morphism(detail::str(detail::field(l, "base_morphism", w), w + ".base_morphism"));
            auto m = E.find_morphism(detail::str(detail::field(l, "lift", w), w + ".lift"));
            if (!e) detail::schema(w + ".object", "unknown object '" + l["object"].get<std::string>() + "'");
            if (!f) detail::schema(w + ".base_morphism", "unknown morphism '" + l["base_morphism"].get<std::string>() + "'");
            if (!m) detail::schema(w + ".lift", "unknown morphism '" + l["lift"].get<std::string>() + "'");
            if (!sf.is_key(*e, *f)) detail::schema(w, "'" + B.morphism_name(*f) + "' does not lift at '" + E.object_name(*e) + "'");
            sf.lifts[*e * B.morphism_count() + *f] = *m;
        }
        for (Obj e = 0; e < static_cast<Obj>(E.object_count()); ++e)
            for (Mor f = 0; f < static_cast<Mor>(B.morphism_count()); ++f)
                if (sf.is_key(e, f) && sf.lifts[e * B.morphism_count() + f] == kNone)
                    detail::schema(where + ".lifts", "no lift of '" + B.morphism_name(f) + "' at '" + E.object_name(e) + "'");
        return sf;
    }

    SplitReflection reflection(const json& in, const std::string& where = "reflection") const {
        json j = resolve(in, where);
        Functor R = functor(detail::field(j, "section", where), where + ".section");
        Functor L = functor_between(detail::field(j, "retraction", where), R.dst, R.src, where + ".retraction");
        const json& unit = detail::field(j, "unit", where);
        std::vector<Mor> theta;
        for (Obj t = 0; t < static_cast<Obj>(R.dst->object_count()); ++t) {
            const std::string& n = R.dst->object_name(t);
            if (!unit.contains(n)) detail::schema(where + ".unit", "no unit at '" + n + "'");
            auto m = R.dst->find_morphism(detail::str(unit[n], where + ".unit"));
            if (!m) detail::schema(where + ".unit", "unknown morphism '" + unit[n].get<std::string>() + "'");
            theta.push_back(*m);
        }
        return make_reflection(R, L, theta);
    }

    /// The kind of a square leg: "functor", "fibration" or "reflection".
    std::string leg_kind(const json& in, const std::string& where) const {
        json j = resolve(in, where);
        if (j.is_object() && j.contains("kind") && j["kind"].is_string()) return j["kind"].get<std::string>();
        return "functor";
    }

    /// A square of functors, or of fibrations or reflections when both legs
    /// are written as such.
    std::variant<Square, StructuredSquare> any_square(const json& in, const std::string& where = "square") const {
        json j = resolve(in, where);
        const std::string lk = leg_kind(detail::field(j, "left", where), where + ".left");
        const std::string rk = leg_kind(detail::field(j, "right", where), where + ".right");
        if (lk != rk) detail::schema(where + ".right", "legs must have the same kind, found " + lk + " and " + rk);
        if (lk == "functor") return square(j, where);
        Functor top = functor(detail::field(j, "top", where), where + ".top");
        Functor bottom = functor(detail::field(j, "bottom", where), where + ".bottom");
        if (lk == "fibration")
            return fibration_square(fibration(j["left"], where + ".left"), fibration(j["right"], where + ".right"), top,
                                    bottom);
        if (lk == "reflection")
            return reflection_square(reflection(j["left"], where + ".left"), reflection(j["right"], where + ".right"),
                                     top, bottom);
        detail::schema(where + ".left", "unsupported leg kind '" + lk + "'");
    }

    Square square(const json& in, const std::string& where = "square") const {
        json j = resolve(in, where);
        return {functor(detail::field(j, "left", where), where + ".left"),
                functor(detail::field(j, "right", where), where + ".right"),
                functor(detail::field(j, "top", where), where + ".top"),
                functor(detail::field(j, "bottom", where), where + ".bottom")};
    }

    Judgment judgment(const json& in, const std::string& where = "judgment") const {
        json j = resolve(in, where);
        Judgment jd{make_type(fibration(detail::field(j, "type", where), where + ".type")), std::nullopt, {}, {}};
        if (j.contains("family")) jd.family = make_type(fibration(j["family"], where + ".family"));
        if (j.contains("terms"))
            for (const auto& t : j["terms"]) jd.terms.push_back(functor(t, where + ".terms"));
        if (j.contains("bodies"))
            for (const auto& t : j["bodies"]) jd.bodies.push_back(functor(t, where + ".bodies"));
        return jd;
    }

    Fixture fixture(const json& j, const std::string& path) const {
        std::string kind = detail::str(detail::field(j, "kind", ""), "kind");
        Fixture fx{CatRef{}, path, std::nullopt};
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned()) detail::schema("seed", "expected an unsigned integer");
            fx.seed = j["seed"].get<std::uint64_t>();
        }
        if (kind == "category") fx.payload = category(j);
        else if (kind == "functor") fx.payload = functor(j);
        else if (kind == "nat") fx.payload = nat(j);
        else if (kind == "fibration") fx.payload = fibration(j);
        else if (kind == "reflection") fx.payload = reflection(j);
        else if (kind == "square") std::visit([&](auto&& v) { fx.payload = v; }, any_square(j));
        else if (kind == "judgment") fx.payload = judgment(j);
        else detail::schema("kind", "unknown kind '" + kind + "'");
        return fx;
    }

private:
    std::filesystem::path base_;
};

inline Fixture parse_string(const std::string& text, const std::string& origin = "<string>",
                            const std::filesystem::path& base = {}) {
    return Decoder(base).fixture(parse_text(text, origin), origin);
}

inline Fixture parse(const std::filesystem::path& path) {
    return parse_string(read_file(path), path.string(), path.parent_path());
}

template <class T>
const T& expect(const Fixture& fx, const char* kind) {
    if (!std::holds_alternative<T>(fx.payload))
        fail(ErrorKind::SchemaError, fx.path + ": expected a " + kind + " fixture, found " + fx.kind());
    return std::get<T>(fx.payload);
}

/// Runs the module validator matching the payload.
inline ValidationReport validate(const Fixture& fx) {
    return std::visit([](const auto& v) -> ValidationReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CatRef>) return validate_category(*v);
        else if constexpr (std::is_same_v<T, Functor>) {
            ValidationReport r;
            r.merge(validate_category(*v.src), "source");
            r.merge(validate_category(*v.dst), "target");
            r.merge(validate_functor(v));
            return r;
        } else if constexpr (std::is_same_v<T, NatTransformation>) return validate_nat(v);
        else if constexpr (std::is_same_v<T, SplitFibration>) {
            ValidationReport r;
            r.merge(validate_category(*v.total()), "total");
            r.merge(validate_category(*v.base()), "base");
            if (r.ok()) r.merge(validate_split_fibration(v));
            return r;
        } else if constexpr (std::is_same_v<T, SplitReflection>) return validate_split_reflection(v);
        else if constexpr (std::is_same_v<T, Square>) return validate_square(v);
        else if constexpr (std::is_same_v<T, StructuredSquare>) {
            ValidationReport r;
            if (v.kind == StructureKind::fibration) {
                r.merge(validate_split_fibration(*v.fib_left), "left");
                r.merge(validate_split_fibration(*v.fib_right), "right");
            } else if (v.kind == StructureKind::reflection) {
                r.merge(validate_split_reflection(*v.refl_left), "left");
                r.merge(validate_split_reflection(*v.refl_right), "right");
            }
            if (r.ok()) r.merge(check_structured_square(v));
            return r;
        } else {
            ValidationReport r;
            r.merge(validate_type(v.type), "type");
            if (v.family) r.merge(validate_type(*v.family), "family");
            for (std::size_t i = 0; i < v.terms.size(); ++i) {
                ++r.checked;
                if (!same_category(v.terms[i].dst, v.type.total()) || v.type.fib.p * v.terms[i] != identity_functor(v.type.context()))
                    r.add("term is a section", "term " + std::to_string(i));
            }
            for (std::size_t i = 0; i < v.bodies.size(); ++i) {
                ++r.checked;
                if (!v.family || !same_category(v.bodies[i].dst, v.family->total()) ||
                    v.family->fib.p * v.bodies[i] != identity_functor(v.family->context()))
                    r.add("body is a section of the family", "body " + std::to_string(i));
            }
            return r;
        }
    }, fx.payload);
}

}  // namespace awfslab::io
