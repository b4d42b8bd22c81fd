#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "awfslab/generate.hpp"
#include "awfslab/io.hpp"
#include "awfslab/samples.hpp"

namespace awfslab::harness {

/// Every operation the default suite must exercise, as "module.operation".
inline const std::vector<std::string>& operations() {
    static const std::vector<std::string> ops = {
        "core_cat.validate_category",
        "core_cat.compose_functors",
        "core_cat.pullback_category",
        "squares.compose_squares",
        "squares.enumerate_fillers",
        "squares.slice_morphism_compose",
        "squares.transpose_lifting_problem",
        "structured.validate_structures",
        "structured.compose_split_fibrations",
        "structured.compose_split_reflections",
        "structured.pullback_split_fibration",
        "structured.fibration_opfibration_convert",
        "structured.check_structured_square",
        "lifting.canonical_lift",
        "lifting.check_horizontal_law",
        "lifting.check_vertical_law",
        "lifting.slice_lifting_operation",
        "transport.pullback_arrows",
        "transport.pushforward_object",
        "transport.pushforward_arrows",
        "transport.adjunction_check",
        "transport.mate_alpha",
        "transport.mate_beta",
        "frobenius.frobenius_transport",
        "frobenius.frobenius_preserves_squares",
        "frobenius.frobenius_preserves_composition",
        "frobenius.strong_frobenius_checks",
        "frobenius.pushforward_structure",
        "frobenius.beck_chevalley_check",
        "model.substitute",
        "model.sigma_type",
        "model.pi_type",
        "model.lambda_app",
        "model.id_type",
        "model.refl_j",
        "model.pi_pseudostability_check",
        "cli.parse_serialize",
        "cli.generate",
        "cli.run_subcommand",
    };
    return ops;
}

/// Records which operations a run touched.
class Coverage {
public:
    void use(std::string_view op) {
        const auto& ops = operations();
        if (std::find(ops.begin(), ops.end(), op) == ops.end())
            fail(ErrorKind::KindMismatch, "unknown operation tag '" + std::string(op) + "'");
        used_.insert(std::string(op));
    }
    void use(std::initializer_list<std::string_view> ops) {
        for (auto op : ops) use(op);
    }
    void merge(const Coverage& other) { used_.insert(other.used_.begin(), other.used_.end()); }
    bool covers(const std::string& op) const { return used_.count(op) > 0; }
    std::vector<std::string> missing() const {
        std::vector<std::string> out;
        for (const auto& op : operations())
            if (!covers(op)) out.push_back(op);
        return out;
    }

private:
    std::set<std::string> used_;
};

struct CaseResult {
    std::string name;
    ValidationReport report;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CaseResult> parts;
    bool known_unattainable = false;

    bool pass() const {
        return std::all_of(parts.begin(), parts.end(), [](const CaseResult& c) { return c.report.ok(); });
    }
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int lift_cases = 200;
    int law_cases = 200;
    int frobenius_cases = 100;
    int strong_cases = 50;
    int adjunction_cases = 50;
    int witness_problems = 100;
    int bc_cases = 50;
    int max_objects = 5;

    gen::CorpusParams corpus() const { return {{max_objects, 40}, true}; }
};

namespace detail {

/// Runs `body`, turning an escaped Error into a violation.
inline CaseResult run_case(const std::string& name, const std::function<ValidationReport(std::string&)>& body) {
    CaseResult c{name, {}, {}};
    try {
        c.report = body(c.detail);
    } catch (const Error& e) {
        c.report.add("no error raised", e.what());
    }
    return c;
}

inline void expect(ValidationReport& rep, bool ok, const std::string& law, const std::string& witness = {}) {
    ++rep.checked;
    if (!ok) rep.add(law, witness);
}

}  // namespace detail

// ------------------------------------------------------------- criteria

inline CriterionResult criterion_lifting(const SuiteOptions& opt, Coverage& cov) {
    cov.use({"lifting.canonical_lift", "squares.enumerate_fillers", "lifting.check_horizontal_law",
             "lifting.check_vertical_law", "structured.check_structured_square", "structured.validate_structures",
             "structured.compose_split_fibrations", "structured.compose_split_reflections"});
    CriterionResult res{1, "canonical lifting operation", {}, false};
    const gen::CorpusParams cp = opt.corpus();
    res.parts.push_back(detail::run_case("filler membership", [&](std::string& d) {
        ValidationReport rep;
        auto corpus = gen::lift_corpus(opt.seed, opt.lift_cases, cp);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& c = corpus[i];
            const std::string tag = "case " + std::to_string(i);
            rep.merge(validate_split_reflection(c.refl), tag);
            rep.merge(validate_split_fibration(c.fib), tag);
            Functor phi = canonical_lift(c.refl, c.fib, c.problem);
            detail::expect(rep, enumerate_fillers(c.problem).contains(phi), "canonical lift is a filler", tag);
        }
        d = std::to_string(corpus.size()) + " problems";
        return rep;
    }));
    res.parts.push_back(detail::run_case("horizontal law", [&](std::string& d) {
        auto corpus = gen::horizontal_corpus(opt.seed + 1, opt.law_cases, cp);
        d = std::to_string(corpus.size()) + " cases";
        return check_horizontal_law(canonical_lifting_operation(), corpus);
    }));
    res.parts.push_back(detail::run_case("vertical law", [&](std::string& d) {
        auto corpus = gen::vertical_corpus(opt.seed + 2, opt.law_cases, cp);
        d = std::to_string(corpus.size()) + " cases";
        return check_vertical_law(canonical_lifting_operation(), corpus);
    }));
    return res;
}

inline CriterionResult criterion_frobenius(const SuiteOptions& opt, Coverage& cov) {
    cov.use({"frobenius.frobenius_transport", "frobenius.frobenius_preserves_squares",
             "frobenius.frobenius_preserves_composition"});
    CriterionResult res{2, "Frobenius construction", {}, false};
    auto corpus = gen::frobenius_corpus(opt.seed + 3, opt.frobenius_cases, opt.corpus());
    res.parts.push_back(detail::run_case("transport is a split reflection", [&](std::string& d) {
        ValidationReport rep;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& c = corpus[i];
            FrobeniusTransport t = frobenius_transport(c.P, c.refl.refl, c.refl.U);
            rep.merge(validate_frobenius_transport(t), "case " + std::to_string(i));
        }
        d = std::to_string(corpus.size()) + " cases";
        return rep;
    }));
    res.parts.push_back(detail::run_case("preserves squares", [&](std::string&) {
        ValidationReport rep;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& c = corpus[i];
            rep.merge(frobenius_preserves_squares(c.P, c.square, c.refl.U, c.U2), "case " + std::to_string(i));
        }
        return rep;
    }));
    res.parts.push_back(detail::run_case("preserves composition", [&](std::string&) {
        ValidationReport rep;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& c = corpus[i];
            rep.merge(frobenius_preserves_composition(c.P, c.r1, c.r2, c.V), "case " + std::to_string(i));
        }
        return rep;
    }));
    return res;
}

inline CriterionResult criterion_adjunction(const SuiteOptions& opt, Coverage& cov) {
    cov.use({"transport.adjunction_check", "transport.pushforward_object"});
    CriterionResult res{3, "pullback-pushforward adjunction", {}, false};
    res.parts.push_back(detail::run_case("adjunction certified", [&](std::string& d) {
        ValidationReport rep;
        auto corpus = gen::adjunction_corpus(opt.seed + 4, opt.adjunction_cases, {});
        std::size_t homs = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            auto [w, r] = adjunction_check(corpus[i].f, corpus[i].pairs);
            for (auto [a, b] : w.hom_sizes) homs += a + b;
            rep.merge(r, "fibration " + std::to_string(i));
        }
        d = std::to_string(corpus.size()) + " fibrations, " + std::to_string(homs) + " hom elements";
        return rep;
    }));
    return res;
}

inline CriterionResult criterion_witness(const SuiteOptions& opt, Coverage& cov) {
    cov.use({"frobenius.pushforward_structure", "frobenius.frobenius_transport"});
    CriterionResult res{4, "pushforward filler agreement", {}, false};
    res.parts.push_back(detail::run_case("direct = transposed", [&](std::string& d) {
        ValidationReport rep;
        auto corpus = gen::witness_corpus(opt.seed + 5, opt.witness_problems, opt.corpus());
        std::size_t n = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& c = corpus[i];
            rep.merge(validate_split_fibration(pushforward_structure(c.P, c.x)), "case " + std::to_string(i));
            rep.merge(pushforward_filler_agreement(c.P, c.x, c.problems), "case " + std::to_string(i));
            n += c.problems.size();
        }
        d = std::to_string(n) + " problems";
        return rep;
    }));
    return res;
}

inline CriterionResult criterion_beck_chevalley(const SuiteOptions& opt, Coverage& cov) {
    cov.use({"frobenius.beck_chevalley_check", "transport.mate_beta"});
    CriterionResult res{5, "Beck-Chevalley", {}, false};
    auto corpus = gen::bc_corpus(opt.seed + 6, opt.bc_cases, opt.corpus());
    res.parts.push_back(detail::run_case("component equality", [&](std::string& d) {
        ValidationReport rep;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            rep.merge(beck_chevalley_check(corpus[i].square, corpus[i].corpus), "square " + std::to_string(i));
        d = std::to_string(corpus.size()) + " squares";
        return rep;
    }));
    res.parts.push_back(detail::run_case("mate β invertible", [&](std::string&) {
        ValidationReport rep;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& sq = corpus[i].square;
            const auto& f = *sq.fib_left;
            const auto& g = *sq.fib_right;
            for (const auto& z : corpus[i].z) {
                const std::string tag = "square " + std::to_string(i);
                Functor beta = mate_beta_component(f, g, sq.square.top, sq.square.bottom, z);
                detail::expect(rep, is_isomorphism(beta), "β is an isomorphism", tag);
                detail::expect(rep, mate_beta_pasted(f, g, sq.square.top, sq.square.bottom, z) == beta,
                               "β agrees with the pasted mate", tag);
            }
        }
        return rep;
    }));
    return res;
}

inline CriterionResult criterion_strong_frobenius(const SuiteOptions& opt, Coverage& cov) {
    cov.use("frobenius.strong_frobenius_checks");
    CriterionResult res{6, "strong Frobenius", {}, true};
    res.parts.push_back(detail::run_case("unit and counit lifts", [&](std::string& d) {
        ValidationReport rep;
        auto corpus = gen::strong_corpus(opt.seed + 7, opt.strong_cases, opt.corpus());
        int failing = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            auto r = strong_frobenius_checks(corpus[i].P, corpus[i].corpus);
            if (!r.ok()) ++failing;
            rep.merge(r, "case " + std::to_string(i));
        }
        d = std::to_string(failing) + "/" + std::to_string(corpus.size()) + " cases violate URLc = (PUθ_c)_! Uc";
        return rep;
    }));
    return res;
}

inline CriterionResult criterion_model(const SuiteOptions&, Coverage& cov) {
    cov.use({"model.substitute", "model.sigma_type", "model.pi_type", "model.lambda_app", "model.id_type",
             "model.refl_j", "model.pi_pseudostability_check"});
    CriterionResult res{7, "groupoid model", {}, false};
    res.parts.push_back(detail::run_case("Π point count and β/η", [](std::string& d) {
        ValidationReport rep;
        auto s = samples::two_three();
        TypeOver Pi = pi_type(s.T, s.S);
        rep.merge(validate_type(Pi));
        detail::expect(rep, Pi.total()->object_count() == 6, "Π(T, S) has 2·3 objects",
                       std::to_string(Pi.total()->object_count()));
        rep.merge(pi_laws(s.T, s.S, s.bodies, s.args));
        auto tower = samples::bz2_tower();
        TypeOver Pi2 = pi_type(tower.T, tower.S);
        rep.merge(validate_type(Pi2), "Π over BZ₂");
        d = "Π objects " + std::to_string(Pi.total()->object_count());
        return rep;
    }));
    res.parts.push_back(detail::run_case("Id on BZ₂ over 𝟙", [](std::string& d) {
        ValidationReport rep;
        PathObject po = id_type(samples::bz2_over_point());
        rep.merge(validate_path_object(po));
        detail::expect(rep, po.total->object_count() == 2 && po.total->morphism_count() == 8,
                       "path object has 2 objects and 8 morphisms",
                       std::to_string(po.total->object_count()) + "/" + std::to_string(po.total->morphism_count()));
        d = std::to_string(po.total->object_count()) + " objects, " + std::to_string(po.total->morphism_count()) +
            " morphisms";
        return rep;
    }));
    res.parts.push_back(detail::run_case("Σ associativity", [](std::string&) {
        ValidationReport rep;
        auto t = samples::bz2_tower();
        TypeOver lhs = sigma_type(sigma_type(t.T, t.S), t.R);
        TypeOver rhs = sigma_type(t.T, sigma_type(t.S, t.R));
        rep.merge(validate_type(lhs));
        detail::expect(rep, lhs == rhs, "Σ(Σ(T, S), R) = Σ(T, Σ(S, R))");
        return rep;
    }));
    res.parts.push_back(detail::run_case("ρ∘r = δ and J∘r = d", [](std::string&) {
        ValidationReport rep;
        auto t = samples::bz2_tower();
        for (const TypeOver* T : {&t.T, &t.S}) {
            samples::JSample j = samples::j_sample(*T, fixtures::bz2());
            rep.merge(validate_path_object(j.po));
            TermOf J = j_eliminator(j.po, j.C, j.d);
            detail::expect(rep, J.section * j.po.r.R == j.d, "J∘r = d");
            detail::expect(rep, enumerate_fillers(Square{j.po.r.R, j.C.fib.p, j.d, identity_functor(j.po.total)})
                                    .contains(J.section),
                           "J is a filler");
        }
        PathObject po = id_type(t.T);
        TermOf a = make_term(t.T, samples::constant_section(fixtures::bz2(), t.T.context()));
        TermOf r = refl(po, a);
        rep.merge(validate_type(r.type), "refl");
        return rep;
    }));
    res.parts.push_back(detail::run_case("substitution stability", [](std::string&) {
        ValidationReport rep;
        auto t = samples::bz2_tower();
        CatRef one = fixtures::terminal();
        CatRef Z = fixtures::bz2();
        Functor sigma = constant_functor(one, Z, 0);
        TypeOver Ts = substitute(sigma, t.T);
        rep.merge(validate_type(Ts), "T[σ]");
        rep.merge(substitution_coherence(t.T, identity_functor(Z), sigma), "coherence");
        rep.merge(path_object_stability(sigma, t.T), "Id stability");
        rep.merge(pi_pseudostability_check(substitution_square(sigma, t.T), t.S,
                                           {{identity_reflection(one), identity_functor(one)}}),
                  "σ: 𝟙 → BZ₂");
        rep.merge(pi_pseudostability_check(substitution_square(identity_functor(Z), t.T), t.S,
                                           {{identity_reflection(Z), identity_functor(Z)}}),
                  "σ = id");
        auto s = samples::two_three();
        rep.merge(pi_pseudostability_check(substitution_square(identity_functor(one), s.T), s.S,
                                           {{identity_reflection(one), identity_functor(one)}}),
                  "2/3 fibers");
        return rep;
    }));
    return res;
}

namespace detail {

/// BZ₂ with σ∘σ rebound to σ.
inline CatRef broken_bz2() {
    CategoryBuilder b;
    Obj o = b.add_object("*");
    Mor one = b.add_morphism("1", o, o);
    Mor s = b.add_morphism("s", o, o);
    b.set_identity(o, one);
    b.set_composite(one, one, one);
    b.set_composite(one, s, s);
    b.set_composite(s, one, s);
    b.set_composite(s, s, s);
    b.set_groupoid(true);
    b.set_inverse(one, one);
    b.set_inverse(s, s);
    return b.build();
}

/// The projection BZ₃ × BZ₃ → BZ₃ with the lift of g at the unit rebound.
inline SplitFibration broken_splitting() {
    CatRef Z3 = fixtures::cyclic(3);
    SplitFibration P = samples::projection(Z3, Z3);
    const FinCategory& E = *P.total();
    const FinCategory& B = *P.base();
    Mor g = B.morphism("g");
    Obj e = 0;
    Mor good = P.lift(e, g);
    for (Mor m : E.hom(E.dom(good), e))
        if (m != good && P.p.m(m) == g) return with_lift(P, e, g, m);
    return P;
}

}  // namespace detail

inline CriterionResult criterion_mutations(const SuiteOptions& opt, Coverage& cov) {
    cov.use({"core_cat.validate_category", "structured.validate_structures", "squares.transpose_lifting_problem",
             "lifting.check_horizontal_law", "lifting.check_vertical_law"});
    CriterionResult res{8, "oracle sanity", {}, false};
    res.parts.push_back(detail::run_case("broken composition detected", [](std::string&) {
        ValidationReport rep;
        detail::expect(rep, !validate_category(*detail::broken_bz2()).ok(), "σ∘σ = σ is reported");
        return rep;
    }));
    res.parts.push_back(detail::run_case("broken splitting detected", [](std::string&) {
        ValidationReport rep;
        SplitFibration P = detail::broken_splitting();
        detail::expect(rep, validate_split_fibration(samples::projection(fixtures::cyclic(3), fixtures::cyclic(3))).ok(),
                       "unmutated fibration validates");
        detail::expect(rep, !validate_split_fibration(P).ok(), "rebound lift is reported");
        SplitFibration Z = samples::projection(fixtures::bz2(), fixtures::bz2());
        SplitFibration Q = with_lift(Z, 0, Z.base()->morphism("e"), Z.total()->morphism("(s,e)"));
        detail::expect(rep, !validate_split_fibration(Q).ok(), "non-identity lift of an identity is reported");
        return rep;
    }));
    res.parts.push_back(detail::run_case("broken triangle detected", [](std::string&) {
        ValidationReport rep;
        SplitFibration f = samples::projection(fixtures::bz2(), fixtures::terminal());
        SplitFibration xf = samples::projection(fixtures::interval(), f.total());
        const Functor& x = xf.p;
        Functor y = identity_functor(f.base());
        SliceAdjunction adj = pullback_pushforward_adjunction(f);
        detail::expect(rep, check_triangles(adj, y, x).ok(), "valid adjunction passes");
        Pullback pb = pullback_category(fixtures::to_terminal(fixtures::interval()), fixtures::to_terminal(f.total()));
        const CatRef& I = pb.f.src;
        Functor swap{I, I, {1, 0}, {}};
        for (Mor m = 0; m < static_cast<Mor>(I->morphism_count()); ++m)
            swap.mor.push_back(I->hom(swap.o(I->dom(m)), swap.o(I->cod(m))).front());
        Functor twist = pb.induced(swap * pb.left, pb.right);
        SliceAdjunction broken = adj;
        broken.counit = [adj, twist](const Functor& z) {
            Functor e = adj.counit(z);
            return same_category(e.dst, twist.src) ? twist * e : e;
        };
        detail::expect(rep, !check_triangles(broken, y, x).ok(), "twisted counit is reported");
        bool raised = false;
        try {
            SliceMorphism j{identity_functor(f.base()), y};
            SliceMorphism k{x, identity_functor(f.total())};
            transpose_lifting_problem(broken, j, k, Square{});
        } catch (const Error& e) {
            raised = e.kind() == ErrorKind::AdjunctionInvalid;
        }
        detail::expect(rep, raised, "transposition refuses the broken adjunction");
        return rep;
    }));
    res.parts.push_back(detail::run_case("arbitrary filler detected", [&](std::string& d) {
        ValidationReport rep;
        const gen::CorpusParams cp = opt.corpus();
        auto hc = gen::horizontal_corpus(opt.seed + 1, std::min(opt.law_cases, 100), cp);
        auto vc = gen::vertical_corpus(opt.seed + 2, std::min(opt.law_cases, 100), cp);
        auto op = arbitrary_filler_operation(opt.seed);
        auto h = check_horizontal_law(op, hc);
        auto v = check_vertical_law(op, vc);
        detail::expect(rep, !h.ok() || !v.ok(), "arbitrary filler violates a coherence law");
        d = std::to_string(h.violations.size()) + " horizontal, " + std::to_string(v.violations.size()) +
            " vertical violations";
        return rep;
    }));
    return res;
}

inline std::vector<CriterionResult> acceptance(const SuiteOptions& opt, Coverage& cov) {
    return {criterion_lifting(opt, cov),          criterion_frobenius(opt, cov),
            criterion_adjunction(opt, cov),       criterion_witness(opt, cov),
            criterion_beck_chevalley(opt, cov),   criterion_strong_frobenius(opt, cov),
            criterion_model(opt, cov),            criterion_mutations(opt, cov)};
}

// --------------------------------------------------------------- generate

/// Kinds accepted by `generate`.
inline const std::vector<std::string>& generator_kinds() {
    static const std::vector<std::string> kinds = {"groupoid", "category", "functor", "fibration",
                                                   "opfibration", "reflection", "problem"};
    return kinds;
}

/// A random fixture of the given kind with at most `max_objects` objects per
/// category, deterministic in `seed`.
inline io::Fixture generate(const std::string& kind, int max_objects, std::uint64_t seed) {
    gen::Limits lim{max_objects, 40};
    gen::require_limits(lim);
    gen::Rng rng(seed);
    io::Fixture fx{CatRef{}, "", seed};
    gen::FibrationParams fp{lim, std::max(1, std::min(2, max_objects)), true};
    gen::ReflectionParams rp{lim, std::max(1, max_objects / 2), 2, true};
    if (kind == "groupoid") fx.payload = gen::random_groupoid(rng, lim);
    else if (kind == "category") fx.payload = gen::random_category(rng, lim, true);
    else if (kind == "functor") {
        CatRef a = gen::random_groupoid(rng, lim);
        CatRef b = gen::random_groupoid(rng, lim);
        fx.payload = gen::random_functor_between(rng, a, b);
    } else if (kind == "fibration") fx.payload = gen::random_fibration(rng, Orientation::cartesian, fp, false);
    else if (kind == "opfibration") fx.payload = gen::random_opfibration(rng, fp, false);
    else if (kind == "reflection") fx.payload = gen::random_reflection(rng, rp).refl;
    else if (kind == "problem") {
        for (;;) {
            auto r = gen::random_reflection(rng, rp);
            auto p = gen::random_fibration(rng, Orientation::cartesian, fp, true);
            if (auto s = gen::random_problem(rng, r.refl, p)) {
                fx.payload = *s;
                break;
            }
        }
    } else {
        fail(ErrorKind::KindMismatch, "unknown generator kind '" + kind + "'");
    }
    return fx;
}

// ----------------------------------------------------- structural checks

/// Checks of the remaining operations on small instances.
inline std::vector<CaseResult> structural_checks(const SuiteOptions& opt, Coverage& cov) {
    std::vector<CaseResult> out;
    out.push_back(detail::run_case("functor composition and pullbacks", [&](std::string&) {
        cov.use({"core_cat.compose_functors", "core_cat.pullback_category", "core_cat.validate_category"});
        ValidationReport rep;
        gen::Rng rng(opt.seed);
        gen::Limits lim{4, 24};
        for (int i = 0; i < 20; ++i) {
            CatRef a = gen::random_groupoid(rng, lim);
            CatRef b = gen::random_groupoid(rng, lim);
            CatRef c = gen::random_groupoid(rng, lim);
            CatRef d = gen::random_groupoid(rng, lim);
            Functor f = gen::random_functor_between(rng, a, b);
            Functor g = gen::random_functor_between(rng, b, c);
            Functor h = gen::random_functor_between(rng, c, d);
            const std::string tag = "triple " + std::to_string(i);
            detail::expect(rep, (h * g) * f == h * (g * f), "associativity", tag);
            detail::expect(rep, f * identity_functor(a) == f && identity_functor(b) * f == f, "unit laws", tag);
            Pullback pb = pullback_category(g, gen::random_functor_between(rng, d, c));
            rep.merge(validate_category(*pb.cat), tag + " pullback");
            detail::expect(rep, g * pb.left == pb.g * pb.right, "pullback square commutes", tag);
        }
        return rep;
    }));
    out.push_back(detail::run_case("square pasting", [&](std::string&) {
        cov.use("squares.compose_squares");
        ValidationReport rep;
        auto hc = gen::horizontal_corpus(opt.seed + 11, 20, {});
        for (std::size_t i = 0; i < hc.size(); ++i) {
            const auto& c = hc[i];
            const std::string tag = "case " + std::to_string(i);
            Square left{c.f2.R, c.f.R, c.w, c.x};
            Square right{c.g.p, c.g2.p, c.y, c.z};
            Square pasted = compose_squares_h(right, compose_squares_h(c.problem, left));
            rep.merge(validate_square(pasted), tag);
            detail::expect(rep, compose_squares_h(identity_square_h(c.problem.right), c.problem) == c.problem,
                           "horizontal identity", tag);
            Square below = identity_square_v(c.problem.bottom);
            detail::expect(rep, compose_squares_v(below, c.problem) == c.problem, "vertical identity", tag);
        }
        return rep;
    }));
    out.push_back(detail::run_case("slice arrows", [&](std::string&) {
        cov.use({"squares.slice_morphism_compose", "transport.pullback_arrows", "transport.pushforward_arrows",
                 "transport.pushforward_object"});
        ValidationReport rep;
        gen::Rng rng(opt.seed + 12);
        for (int i = 0; i < 10; ++i) {
            const std::string tag = "case " + std::to_string(i);
            SplitFibration f = gen::random_fibration(rng, Orientation::cartesian, {{4, 16}, 2, true}, false);
            SplitFibration x = gen::random_fibration_over(rng, f.total(), Orientation::cartesian, {{4, 16}, 2, true});
            SliceMorphism m2{x.p, identity_functor(f.total())};
            SliceMorphism m1 = slice_identity(x.p);
            SliceMorphism both = slice_morphism_compose(m2, m1);
            detail::expect(rep, both == m2, "identity is a unit", tag);
            if (gen::detail::small_pushforward(f, x.p)) {
                SliceMorphism lhs = pushforward_arrows(f, both);
                SliceMorphism rhs = slice_morphism_compose(pushforward_arrows(f, m2), pushforward_arrows(f, m1));
                detail::expect(rep, lhs == rhs, "f_* preserves composition", tag);
            }
            SliceMorphism n2{f.p, identity_functor(f.base())};
            SliceMorphism n1{x.p, f.p};
            Functor v = gen::random_functor_between(rng, gen::random_groupoid(rng, {3, 12}), f.base());
            SliceMorphism lhs = pullback_arrows(v, slice_morphism_compose(n2, n1));
            SliceMorphism rhs = slice_morphism_compose(pullback_arrows(v, n2), pullback_arrows(v, n1));
            detail::expect(rep, lhs == rhs, "f* preserves composition", tag);
        }
        return rep;
    }));
    out.push_back(detail::run_case("transposition round trip", [&](std::string&) {
        cov.use("squares.transpose_lifting_problem");
        ValidationReport rep;
        SplitFibration P = samples::projection(fixtures::bz2(), fixtures::terminal());
        SplitFibration x = samples::projection(fixtures::bz2(), P.total());
        SplitReflection r = samples::endpoint_reflection();
        Functor U = fixtures::to_terminal(r.big());
        SliceAdjunction adj = pullback_pushforward_adjunction(P);
        SliceMorphism j{r.R, U};
        SliceMorphism k{x.p, identity_functor(P.total())};
        Functor Fj = adj.left_map(U * r.R, U, r.R);
        Functor Fy2 = adj.left_obj(U);
        Functor Fy1 = adj.left_obj(U * r.R);
        FunctorConstraints c(Fy1.src, x.total());
        c.over(x.p, Fy1);
        std::size_t n = 0;
        for (const Functor& top : enumerate_functors(c)) {
            Square t{Fj, x.p, top, Fy2};
            if (!validate_square(t).ok()) continue;
            ++n;
            Square s = untranspose_lifting_problem(adj, j, k, t);
            rep.merge(validate_square(s), "untransposed");
            detail::expect(rep, transpose_lifting_problem(adj, j, k, s) == t, "transpose∘untranspose = id");
            FillerSet fs = enumerate_fillers(s);
            FillerSet ft = enumerate_fillers(t);
            detail::expect(rep, fs.fillers.size() == ft.fillers.size(), "filler sets are in bijection");
            for (const Functor& psi : ft.fillers)
                detail::expect(rep, transpose_filler(adj, j, k, untranspose_filler(adj, j, k, psi)) == psi,
                               "filler round trip");
        }
        detail::expect(rep, n > 0, "at least one transposed problem");
        return rep;
    }));
    out.push_back(detail::run_case("mates on pullback squares", [&](std::string&) {
        cov.use({"transport.mate_alpha", "transport.mate_beta"});
        ValidationReport rep;
        auto corpus = gen::bc_corpus(opt.seed + 13, 5, {});
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& sq = corpus[i].square;
            const std::string tag = "square " + std::to_string(i);
            for (const auto& [refl, U] : corpus[i].corpus) {
                Square a = mate_alpha(sq.square, SliceMorphism{refl.R, U});
                rep.merge(validate_square(a), tag + " α");
                detail::expect(rep, is_isomorphism(a.top) && is_isomorphism(a.bottom), "α components invertible", tag);
            }
            const Functor& z = corpus[i].z.front();
            Square b = mate_beta(*sq.fib_left, *sq.fib_right, sq.square.top, sq.square.bottom, slice_identity(z));
            rep.merge(validate_square(b), tag + " β");
            detail::expect(rep, is_isomorphism(b.top) && is_isomorphism(b.bottom), "β components invertible", tag);
        }
        return rep;
    }));
    out.push_back(detail::run_case("fibration constructions", [&](std::string&) {
        cov.use({"structured.fibration_opfibration_convert", "structured.pullback_split_fibration",
                 "structured.compose_split_fibrations", "structured.compose_split_reflections",
                 "structured.validate_structures"});
        ValidationReport rep;
        gen::Rng rng(opt.seed + 14);
        for (int i = 0; i < 20; ++i) {
            const std::string tag = "case " + std::to_string(i);
            SplitFibration p = gen::random_fibration(rng, Orientation::cartesian, {{5, 40}, 2, true}, false);
            SplitFibration q = fibration_opfibration_convert(p);
            rep.merge(validate_split_fibration(q), tag + " converted");
            detail::expect(rep, fibration_opfibration_convert(q) == p, "conversion is an involution", tag);
            Functor v = gen::random_functor_between(rng, gen::random_groupoid(rng, {3, 12}), p.base());
            rep.merge(validate_split_fibration(pullback_split_fibration(p, v)), tag + " pulled back");
            SplitFibration g = gen::random_fibration_over(rng, p.total(), Orientation::cartesian, {{6, 40}, 2, true});
            rep.merge(validate_split_fibration(compose_split_fibrations(g, p)), tag + " composite");
            auto r1 = gen::random_reflection(rng, {{5, 40}, 2, 1, true});
            auto r2 = gen::random_reflection_on(rng, r1.refl.big(), r1.full, 1, {6, 40});
            rep.merge(validate_split_reflection(compose_split_reflections(r2.refl, r1.refl)), tag + " reflections");
        }
        return rep;
    }));
    out.push_back(detail::run_case("sliced lifting", [&](std::string&) {
        cov.use({"lifting.slice_lifting_operation", "lifting.canonical_lift"});
        ValidationReport rep;
        for (bool twisted : {false, true}) {
            auto s = samples::endpoint_against_bz2(twisted);
            const CatRef& A = s.fib.base();
            auto op = slice_lifting_operation(canonical_lifting_operation(), A);
            Functor b = identity_functor(A);
            SliceMorphism phi = op.assign({s.refl, b * s.problem.bottom}, {s.fib, b}, s.problem);
            detail::expect(rep, phi.f == canonical_lift(s.refl, s.fib, s.problem), "sliced filler is the filler");
            detail::expect(rep, phi.a == b * s.fib.p, "extension is b∘g");
        }
        auto hc = gen::horizontal_corpus(opt.seed + 15, 20, {});
        std::vector<SlicedHorizontalCase> sliced;
        for (const auto& c : hc)
            sliced.push_back({c, fixtures::to_terminal(c.f.big()), fixtures::to_terminal(c.g2.base())});
        rep.merge(check_horizontal_law(slice_lifting_operation(canonical_lifting_operation(), fixtures::terminal()),
                                       sliced),
                  "sliced horizontal law");
        return rep;
    }));
    out.push_back(detail::run_case("serialization and generation", [&](std::string&) {
        cov.use({"cli.parse_serialize", "cli.generate"});
        ValidationReport rep;
        for (const auto& kind : generator_kinds()) {
            io::Fixture a = generate(kind, 4, opt.seed + 16);
            io::Fixture b = generate(kind, 4, opt.seed + 16);
            std::string bytes = io::serialize(a);
            detail::expect(rep, bytes == io::serialize(b), "generation is deterministic", kind);
            rep.merge(io::validate(a), kind);
            detail::expect(rep, io::serialize(io::parse_string(bytes)) == bytes, "round trip", kind);
        }
        return rep;
    }));
    return out;
}

/// The full default suite: acceptance criteria and structural checks.
struct SuiteResult {
    std::vector<CriterionResult> criteria;
    std::vector<CaseResult> structural;
    Coverage coverage;

    bool ok() const {
        for (const auto& c : criteria)
            if (!c.pass() && !c.known_unattainable) return false;
        for (const auto& c : structural)
            if (!c.report.ok()) return false;
        return true;
    }
};

inline SuiteResult default_suite(const SuiteOptions& opt) {
    SuiteResult res;
    res.criteria = acceptance(opt, res.coverage);
    res.structural = structural_checks(opt, res.coverage);
    return res;
}

}  // namespace awfslab::harness
