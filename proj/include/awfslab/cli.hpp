#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "awfslab/harness.hpp"

namespace awfslab::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Whether an error reflects bad input rather than a broken law.
inline bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::AdjunctionInvalid:
        case ErrorKind::MalformedCleavage:
        case ErrorKind::NotAFibration:
        case ErrorKind::CleavageIncompatible:
        case ErrorKind::NotComposableInSlice:
            return false;
        default:
            return true;
    }
}

inline json report_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"law", x.law}, {"witness", x.witness}});
    return {{"ok", r.ok()}, {"checked", r.checked}, {"violations", v}};
}

struct CommonFlags {
    std::uint64_t seed = 0;
    int cases = 0;
    int max_objects = 5;
    std::string format = "text";

    bool as_json() const { return format == "json"; }

    harness::SuiteOptions suite() const {
        harness::SuiteOptions opt;
        opt.seed = seed;
        opt.max_objects = max_objects;
        if (cases > 0)
            opt.lift_cases = opt.law_cases = opt.frobenius_cases = opt.strong_cases = opt.adjunction_cases =
                opt.witness_problems = opt.bc_cases = cases;
        return opt;
    }
};

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("AWFSLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, std::string("AWFSLAB_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

/// Collects the output of one subcommand: a text body and a JSON document.
class Reporter {
public:
    explicit Reporter(std::string command) { doc_["command"] = std::move(command); }

    void line(const std::string& s) { text_ += s + "\n"; }
    json& doc() { return doc_; }

    void report(const std::string& label, const ValidationReport& r) {
        doc_["reports"][label] = report_json(r);
        ok_ = ok_ && r.ok();
        line(label + ": " + (r.ok() ? "ok (" + std::to_string(r.checked) + " checks)" : "VIOLATED"));
        if (!r.ok()) {
            std::string s = r.summary(20);
            std::size_t pos = 0;
            while (pos <= s.size()) {
                std::size_t nl = s.find('\n', pos);
                line("  " + s.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos));
                if (nl == std::string::npos) break;
                pos = nl + 1;
            }
        }
    }

    void flag_violation() { ok_ = false; }

    int finish(std::ostream& out, bool as_json) {
        doc_["ok"] = ok_;
        if (as_json) out << io::dump(doc_);
        else out << text_;
        return ok_ ? kOk : kViolation;
    }

private:
    json doc_ = json::object();
    std::string text_;
    bool ok_ = true;
};

inline std::string describe(const FinCategory& c) {
    return std::to_string(c.object_count()) + " objects, " + std::to_string(c.morphism_count()) + " morphisms";
}

inline void write_fixture(const io::Fixture& fx, const std::string& path, std::ostream& out) {
    std::string bytes = io::serialize(fx);
    if (path.empty() || path == "-") {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::ParseError, path + ": cannot write file");
    f << bytes;
}

// ------------------------------------------------------------- subcommands

inline int run_suite(const CommonFlags& flags, std::ostream& out, const std::vector<int>& only) {
    harness::SuiteOptions opt = flags.suite();
    harness::Coverage cov;
    Reporter rep("suite");
    rep.doc()["seed"] = flags.seed;
    bool ok = true;
    auto emit = [&](const harness::CriterionResult& c) {
        json parts = json::array();
        for (const auto& p : c.parts) {
            parts.push_back({{"name", p.name}, {"detail", p.detail}, {"report", report_json(p.report)}});
        }
        rep.doc()["criteria"].push_back(
            {{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"known_unattainable", c.known_unattainable},
             {"parts", parts}});
        rep.line("criterion " + std::to_string(c.id) + " (" + c.title + "): " + (c.pass() ? "PASS" : "FAIL"));
        for (const auto& p : c.parts)
            rep.line("  " + p.name + (p.detail.empty() ? "" : " [" + p.detail + "]") + ": " +
                     (p.report.ok() ? "ok" : std::to_string(p.report.violations.size()) + " violations"));
        ok = ok && c.pass();
    };
    using Fn = harness::CriterionResult (*)(const harness::SuiteOptions&, harness::Coverage&);
    const std::vector<Fn> all = {harness::criterion_lifting,        harness::criterion_frobenius,
                                 harness::criterion_adjunction,     harness::criterion_witness,
                                 harness::criterion_beck_chevalley, harness::criterion_strong_frobenius,
                                 harness::criterion_model,          harness::criterion_mutations};
    for (std::size_t i = 0; i < all.size(); ++i)
        if (only.empty() || std::find(only.begin(), only.end(), static_cast<int>(i + 1)) != only.end())
            emit(all[i](opt, cov));
    if (!ok) rep.flag_violation();
    return rep.finish(out, flags.as_json());
}

inline int run_validate(const CommonFlags& flags, const std::vector<std::string>& files, std::ostream& out) {
    if (files.empty()) return run_suite(flags, out, {});
    Reporter rep("validate");
    for (const auto& path : files) {
        io::Fixture fx = io::parse(path);
        rep.report(path + " (" + fx.kind() + ")", io::validate(fx));
    }
    return rep.finish(out, flags.as_json());
}

inline json functor_json(const Functor& f) {
    json j = io::to_json(f);
    j.erase("source");
    j.erase("target");
    j.erase("kind");
    return j;
}

inline int run_lift(const CommonFlags& flags, const std::string& refl_path, const std::string& fib_path,
                    const std::string& square_path, std::ostream& out) {
    Reporter rep("lift");
    SplitReflection refl = io::expect<SplitReflection>(io::parse(refl_path), "reflection");
    SplitFibration fib = io::expect<SplitFibration>(io::parse(fib_path), "fibration");
    Square sq = io::expect<Square>(io::parse(square_path), "square");
    ValidationReport inputs;
    inputs.merge(validate_split_reflection(refl), "reflection");
    inputs.merge(validate_split_fibration(fib), "fibration");
    inputs.merge(validate_square(sq), "problem");
    rep.report("inputs", inputs);
    if (!inputs.ok()) return rep.finish(out, flags.as_json());
    if (sq.left != refl.R || sq.right != fib.p)
        fail(ErrorKind::BoundaryMismatch, "square legs are not the reflection's section and the fibration");
    Functor phi = canonical_lift(refl, fib, sq);
    FillerSet fs = enumerate_fillers(sq);
    const bool member = fs.contains(phi);
    rep.doc()["filler"] = functor_json(phi);
    rep.doc()["oracle"] = {{"fillers", fs.fillers.size()}, {"member", member}};
    rep.line("filler:");
    const FinCategory& T = *phi.src;
    const FinCategory& A = *phi.dst;
    for (Obj t = 0; t < static_cast<Obj>(T.object_count()); ++t)
        rep.line("  " + T.object_name(t) + " -> " + A.object_name(phi.o(t)));
    for (Mor k = 0; k < static_cast<Mor>(T.morphism_count()); ++k)
        rep.line("  " + T.morphism_name(k) + " -> " + A.morphism_name(phi.m(k)));
    rep.line(std::string("oracle: ") + (member ? "member" : "NOT a member") + " of " +
             std::to_string(fs.fillers.size()) + " enumerated fillers");
    ValidationReport verdict;
    ++verdict.checked;
    if (!member) verdict.add("canonical lift is a filler", "enumerate_fillers");
    rep.report("verdict", verdict);
    return rep.finish(out, flags.as_json());
}

inline int run_frobenius(const CommonFlags& flags, const std::string& fib_path, const std::string& refl_path,
                         const std::string& ext_path, const std::string& out_path, std::ostream& out) {
    if (fib_path.empty() && refl_path.empty() && ext_path.empty()) return run_suite(flags, out, {2, 6});
    if (fib_path.empty() || refl_path.empty() || ext_path.empty())
        fail(ErrorKind::SchemaError, "--fib, --refl and --extension are required together");
    Reporter rep("frobenius");
    SplitFibration P = io::expect<SplitFibration>(io::parse(fib_path), "fibration");
    SplitReflection refl = io::expect<SplitReflection>(io::parse(refl_path), "reflection");
    Functor U = io::expect<Functor>(io::parse(ext_path), "functor");
    ValidationReport inputs;
    inputs.merge(validate_split_fibration(P), "fibration");
    inputs.merge(validate_split_reflection(refl), "reflection");
    rep.report("inputs", inputs);
    if (!inputs.ok()) return rep.finish(out, flags.as_json());
    FrobeniusTransport t = frobenius_transport(P, refl, U);
    rep.line("P*T: " + describe(*t.big.cat));
    rep.line("P*S: " + describe(*t.small.cat));
    rep.doc()["big_objects"] = t.big.cat->object_count();
    rep.doc()["small_objects"] = t.small.cat->object_count();
    rep.report("transported reflection", validate_frobenius_transport(t));
    if (!out_path.empty()) write_fixture({t.reflection, out_path, std::nullopt}, out_path, out);
    return rep.finish(out, flags.as_json());
}

inline int run_pushforward(const CommonFlags& flags, const std::string& fib_path, const std::string& over_path,
                           const std::string& out_path, std::ostream& out) {
    if (fib_path.empty() && over_path.empty()) return run_suite(flags, out, {3, 4});
    if (fib_path.empty() || over_path.empty()) fail(ErrorKind::SchemaError, "--fib and --over are required together");
    Reporter rep("pushforward");
    SplitFibration P = io::expect<SplitFibration>(io::parse(fib_path), "fibration");
    SplitFibration x = io::expect<SplitFibration>(io::parse(over_path), "fibration");
    ValidationReport inputs;
    inputs.merge(validate_split_fibration(P), "fibration");
    inputs.merge(validate_split_fibration(x), "pushed fibration");
    rep.report("inputs", inputs);
    if (!inputs.ok()) return rep.finish(out, flags.as_json());
    SplitFibration pushed = pushforward_structure(P, x);
    rep.line("P_* x: " + describe(*pushed.total()));
    rep.doc()["objects"] = pushed.total()->object_count();
    rep.doc()["morphisms"] = pushed.total()->morphism_count();
    rep.report("pushforward cleavage", validate_split_fibration(pushed));
    auto [w, adj] = adjunction_check(P, {{identity_functor(P.base()), x.p}});
    rep.report("adjunction", adj);
    if (!out_path.empty()) write_fixture({pushed, out_path, std::nullopt}, out_path, out);
    return rep.finish(out, flags.as_json());
}

inline int run_bc(const CommonFlags& flags, const std::string& square_path, std::optional<std::uint64_t> corpus_seed,
                  std::ostream& out) {
    if (square_path.empty()) return run_suite(flags, out, {5});
    Reporter rep("bc");
    io::Fixture fx = io::parse(square_path);
    const StructuredSquare& sq = io::expect<StructuredSquare>(fx, "fibration square");
    if (sq.kind != StructureKind::fibration) fail(ErrorKind::KindMismatch, "bc needs a square of fibrations");
    const std::uint64_t seed = corpus_seed.value_or(flags.seed);
    gen::Rng rng(seed);
    const int n = flags.cases > 0 ? flags.cases : 10;
    std::vector<ExtendedReflection> corpus;
    gen::ReflectionParams rp{{flags.max_objects, 30}, 2, 1, false};
    for (int i = 0; i < n; ++i) corpus.push_back(gen::random_extended_reflection(rng, sq.fib_left->base(), rp));
    rep.doc()["corpus_seed"] = seed;
    rep.doc()["corpus_size"] = n;
    rep.line("corpus: " + std::to_string(n) + " reflections, seed " + std::to_string(seed));
    rep.report("Beck-Chevalley", beck_chevalley_check(sq, corpus));
    ValidationReport beta;
    const Functor z = identity_functor(sq.fib_right->total());
    Functor b = mate_beta_component(*sq.fib_left, *sq.fib_right, sq.square.top, sq.square.bottom, z);
    ++beta.checked;
    if (!is_isomorphism(b)) beta.add("β is an isomorphism", "at the identity of the total category");
    ++beta.checked;
    if (mate_beta_pasted(*sq.fib_left, *sq.fib_right, sq.square.top, sq.square.bottom, z) != b)
        beta.add("β agrees with the pasted mate", "at the identity of the total category");
    rep.report("mate β", beta);
    return rep.finish(out, flags.as_json());
}

inline int run_model(const CommonFlags& flags, const std::string& path, std::ostream& out) {
    if (path.empty()) return run_suite(flags, out, {7});
    Reporter rep("model");
    io::Judgment jd = io::expect<io::Judgment>(io::parse(path), "judgment");
    rep.report("type", validate_type(jd.type));
    rep.line("Γ.T: " + describe(*jd.type.total()));
    if (jd.type.total()->is_groupoid() && jd.type.context()->is_groupoid()) {
        PathObject po = id_type(jd.type);
        rep.line("Id(T): " + describe(*po.total));
        rep.doc()["id"] = {{"objects", po.total->object_count()}, {"morphisms", po.total->morphism_count()}};
        rep.report("Id(T)", validate_path_object(po));
    }
    for (std::size_t i = 0; i < jd.terms.size(); ++i) make_term(jd.type, jd.terms[i]);
    if (jd.family) {
        const TypeOver& S = *jd.family;
        if (!same_category(S.context(), jd.type.total()))
            fail(ErrorKind::JudgmentMismatch, "family is not a type over the extended context");
        rep.report("family", validate_type(S));
        TypeOver Sg = sigma_type(jd.type, S);
        rep.line("Σ(T, S): " + describe(*Sg.total()));
        rep.report("Σ(T, S)", validate_type(Sg));
        TypeOver Pi = pi_type(jd.type, S);
        rep.line("Π(T, S): " + describe(*Pi.total()));
        rep.doc()["pi"] = {{"objects", Pi.total()->object_count()}, {"morphisms", Pi.total()->morphism_count()}};
        rep.report("Π(T, S)", validate_type(Pi));
        std::vector<TermOf> bodies, args;
        for (const auto& b : jd.bodies) bodies.push_back(make_term(S, b));
        for (const auto& a : jd.terms) args.push_back(make_term(jd.type, a));
        if (!bodies.empty() || !args.empty()) rep.report("β and η", pi_laws(jd.type, S, bodies, args));
    }
    return rep.finish(out, flags.as_json());
}

inline int run_gen(const CommonFlags& flags, const std::string& kind, const std::string& out_path,
                   std::ostream& out) {
    io::Fixture fx = harness::generate(kind, flags.max_objects, flags.seed);
    ValidationReport r = io::validate(fx);
    if (!r.ok()) {
        Reporter rep("gen");
        rep.report("generated " + kind, r);
        return rep.finish(out, flags.as_json());
    }
    write_fixture(fx, out_path, out);
    return kOk;
}

// ----------------------------------------------------------------- driver

/// Parses argv (without the program name) and runs the subcommand. Output
/// goes to `out`, diagnostics to `err`; the result is the exit code.
inline int run_subcommand(const std::vector<std::string>& argv, std::ostream& out = std::cout,
                          std::ostream& err = std::cerr) {
    CLI::App app{"Finite-category checks for algebraic weak factorisation systems", "awfslab"};
    app.require_subcommand(1);
    CommonFlags flags;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", flags.seed, "random seed (default: AWFSLAB_SEED or 0)");
        sub->add_option("--cases", flags.cases, "cases per generated corpus");
        sub->add_option("--max-objects", flags.max_objects, "object bound for generated categories")
            ->check(CLI::Range(1, gen::kMaxObjects));
        sub->add_option("--format", flags.format, "report format")->check(CLI::IsMember({"text", "json"}));
    };

    std::vector<std::string> files;
    auto* validate = app.add_subcommand("validate", "validate fixture files, or run the default suite");
    validate->add_option("files", files, "fixture files");
    common(validate);

    std::string refl, fib, square, ext, over, out_path, kind = "groupoid", judgment;
    std::optional<std::uint64_t> corpus_seed;

    auto* lift = app.add_subcommand("lift", "canonical filler of a lifting problem");
    lift->add_option("--refl", refl, "split reflection")->required();
    lift->add_option("--fib", fib, "split fibration")->required();
    lift->add_option("--square", square, "lifting problem")->required();
    common(lift);

    auto* frob = app.add_subcommand("frobenius", "transport a reflection along a split opfibration");
    frob->add_option("--fib", fib, "split opfibration P");
    frob->add_option("--refl", refl, "split reflection over the base of P");
    frob->add_option("--extension", ext, "extension of the reflection's codomain into the base");
    frob->add_option("--out", out_path, "write the transported reflection here");
    common(frob);

    auto* push = app.add_subcommand("pushforward", "pushforward of a fibration along a split fibration");
    push->add_option("--fib", fib, "split fibration of groupoids");
    push->add_option("--over", over, "fibration over the total category");
    push->add_option("--out", out_path, "write the pushforward here");
    common(push);

    auto* bc = app.add_subcommand("bc", "Beck-Chevalley check on a pullback square of fibrations");
    bc->add_option("--square", square, "square of fibrations");
    bc->add_option("--corpus-seed", corpus_seed, "seed for the reflection corpus (default: --seed)");
    common(bc);

    auto* model = app.add_subcommand("model", "type formers on a judgment file");
    model->add_option("--judgment", judgment, "judgment file");
    common(model);

    auto* gen = app.add_subcommand("gen", "generate a random fixture");
    gen->add_option("--kind", kind, "fixture kind")->check(CLI::IsMember(harness::generator_kinds()));
    gen->add_option("--out", out_path, "output file (default: standard output)");
    common(gen);

    try {
        flags.seed = default_seed();
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (validate->parsed()) return run_validate(flags, files, out);
        if (lift->parsed()) return run_lift(flags, refl, fib, square, out);
        if (frob->parsed()) return run_frobenius(flags, fib, refl, ext, out_path, out);
        if (push->parsed()) return run_pushforward(flags, fib, over, out_path, out);
        if (bc->parsed()) return run_bc(flags, square, corpus_seed, out);
        if (model->parsed()) return run_model(flags, judgment, out);
        if (gen->parsed()) return run_gen(flags, kind, out_path, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        if (flags.as_json())
            out << io::dump({{"ok", false}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}});
        return is_input_error(e.kind()) ? kInputError : kViolation;
    }
    return kInputError;
}

/// The default suite together with a pass through the command line; the
/// coverage of the result includes every operation.
inline harness::SuiteResult full_suite(const harness::SuiteOptions& opt) {
    harness::SuiteResult res = harness::default_suite(opt);
    res.structural.push_back(harness::detail::run_case("command line", [&](std::string& d) {
        res.coverage.use("cli.run_subcommand");
        ValidationReport rep;
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / ("awfslab-suite-" + std::to_string(opt.seed));
        fs::create_directories(dir);
        const std::string file = (dir / "fibration.json").string();
        std::ostringstream sink, diag;
        const std::string seed = std::to_string(opt.seed);
        int code = run_subcommand({"gen", "--kind", "fibration", "--seed", seed, "--out", file}, sink, diag);
        harness::detail::expect(rep, code == kOk, "gen exits 0", diag.str());
        code = run_subcommand({"validate", file}, sink, diag);
        harness::detail::expect(rep, code == kOk, "validate exits 0", sink.str());
        code = run_subcommand({"validate", (dir / "missing.json").string()}, sink, diag);
        harness::detail::expect(rep, code == kInputError, "missing file exits 2");
        fs::remove_all(dir);
        d = "gen, validate";
        return rep;
    }));
    return res;
}

}  // namespace awfslab::cli
