#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "awfslab/awfslab.hpp"
#include "support.hpp"

using namespace awfslab;
using test::raised;

namespace {

const std::string kFixtures = AWFSLAB_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_subcommand(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "awfslab-test-cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, TerminalRoundTripsBytewise) {
    const std::string text = io::read_file(fixture("terminal"));
    io::Fixture fx = io::parse(fixture("terminal"));
    EXPECT_EQ(io::serialize(fx), text);
    EXPECT_EQ(io::expect<CatRef>(fx, "category")->object_count(), 1u);
}

TEST(Cli, Bz2RoundTripsBytewise) {
    const std::string text = io::read_file(fixture("bz2"));
    io::Fixture fx = io::parse(fixture("bz2"));
    EXPECT_EQ(io::serialize(fx), text);
    EXPECT_EQ(*io::expect<CatRef>(fx, "category"), *fixtures::bz2());
}

TEST(Cli, EveryFixtureRoundTripsAndValidates) {
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
        io::Fixture fx = io::parse(entry.path());
        EXPECT_EQ(io::serialize(fx), io::read_file(entry.path())) << entry.path();
        EXPECT_TRUE(io::validate(fx).ok()) << entry.path();
    }
}

TEST(Cli, UnknownMorphismIsASchemaError) {
    std::string text = io::read_file(fixture("bz2"));
    auto pos = text.find("\"s\"", text.find("composition"));
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 3, "\"t\"");
    EXPECT_EQ(raised([&] { io::parse_string(text); }), ErrorKind::SchemaError);
}

TEST(Cli, KindMismatchIsASchemaError) {
    io::Fixture fx = io::parse(fixture("bz2"));
    EXPECT_EQ(raised([&] { io::expect<SplitFibration>(fx, "fibration"); }), ErrorKind::SchemaError);
    EXPECT_EQ(raised([&] { io::parse_string(R"({"kind": "sheaf"})"); }), ErrorKind::SchemaError);
}

TEST(Cli, MalformedJsonReportsLineAndColumn) {
    try {
        io::parse_string("{\n  \"kind\": \"category\",\n  \"objects\": [\n}\n", "broken.json");
        FAIL() << "no error raised";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        EXPECT_NE(std::string(e.what()).find("broken.json:4:"), std::string::npos) << e.what();
    }
}

TEST(Cli, GenerationIsDeterministic) {
    io::Fixture a = harness::generate("fibration", 4, 42);
    io::Fixture b = harness::generate("fibration", 4, 42);
    EXPECT_EQ(io::serialize(a), io::serialize(b));
    EXPECT_TRUE(io::validate(a).ok());
    EXPECT_EQ(io::serialize(io::parse_string(io::serialize(a))), io::serialize(a));
}

TEST(Cli, SingleObjectGroupoid) {
    io::Fixture fx = harness::generate("groupoid", 1, 0);
    const CatRef& c = io::expect<CatRef>(fx, "category");
    EXPECT_EQ(c->object_count(), 1u);
    EXPECT_TRUE(c->is_groupoid());
    EXPECT_TRUE(validate_category(*c).ok());
    EXPECT_EQ(io::serialize(harness::generate("groupoid", 1, 0)), io::serialize(fx));
}

TEST(Cli, OversizeRequestIsRefused) {
    EXPECT_EQ(raised([] { harness::generate("groupoid", gen::kMaxObjects + 1, 0); }), ErrorKind::SizeOutOfRange);
    EXPECT_EQ(raised([] { harness::generate("groupoid", 0, 0); }), ErrorKind::SizeOutOfRange);
}

TEST(Cli, ValidateFixture) {
    Outcome r = run({"validate", fixture("bz2")});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
}

TEST(Cli, ValidateReportsViolation) {
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
    auto path = scratch("broken.json");
    std::ofstream(path) << io::serialize({b.build(), path.string(), std::nullopt});
    Outcome r = run({"validate", path.string()});
    EXPECT_EQ(r.code, cli::kViolation) << r.out;
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run({"validate", fixture("missing")}).code, cli::kInputError);
    EXPECT_EQ(run({"gen", "--max-objects", "9"}).code, cli::kInputError);
    EXPECT_EQ(run({"gen", "--kind", "sheaf"}).code, cli::kInputError);
    EXPECT_EQ(run({"frobenius", "--fib", fixture("bz2_over_interval")}).code, cli::kInputError);
    EXPECT_EQ(run({"nonsense"}).code, cli::kInputError);
}

TEST(Cli, LiftPrintsFillerAndVerdict) {
    Outcome r = run({"lift", "--refl", fixture("endpoint"), "--fib", fixture("interval_over_bz2"), "--square",
                 fixture("lift_twisted")});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("filler:"), std::string::npos);
    EXPECT_NE(r.out.find("oracle: member of 2 enumerated fillers"), std::string::npos) << r.out;
    Outcome j = run({"lift", "--refl", fixture("endpoint"), "--fib", fixture("interval_over_bz2"), "--square",
                 fixture("lift_untwisted"), "--format", "json"});
    EXPECT_EQ(j.code, cli::kOk);
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_TRUE(doc["oracle"]["member"].get<bool>());
}

TEST(Cli, BeckChevalleyReport) {
    Outcome r = run({"bc", "--square", fixture("bc_square"), "--corpus-seed", "7"});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("seed 7"), std::string::npos) << r.out;
}

TEST(Cli, FrobeniusPushforwardAndModel) {
    auto out = scratch("transported.json");
    Outcome f = run({"frobenius", "--fib", fixture("bz2_over_interval"), "--refl", fixture("endpoint"), "--extension",
                 fixture("interval_identity"), "--out", out.string()});
    EXPECT_EQ(f.code, cli::kOk) << f.out << f.err;
    EXPECT_TRUE(io::validate(io::parse(out)).ok());
    Outcome p = run({"pushforward", "--fib", fixture("two_points"), "--over", fixture("two_three_family")});
    EXPECT_EQ(p.code, cli::kOk) << p.out << p.err;
    Outcome m = run({"model", "--judgment", fixture("two_three")});
    EXPECT_EQ(m.code, cli::kOk) << m.out << m.err;
    Outcome t = run({"model", "--judgment", fixture("bz2_tower"), "--format", "json"});
    EXPECT_EQ(t.code, cli::kOk) << t.out << t.err;
}

TEST(Cli, GenerateThenValidate) {
    auto path = scratch("generated.json");
    EXPECT_EQ(run({"gen", "--kind", "reflection", "--seed", "42", "--out", path.string()}).code, cli::kOk);
    EXPECT_EQ(run({"validate", path.string()}).code, cli::kOk);
}

TEST(Cli, BinaryExitCodes) {
    const std::string bin = AWFSLAB_CLI;
    EXPECT_EQ(std::system((bin + " validate " + fixture("bz2") + " > /dev/null").c_str()), 0);
    int missing = std::system((bin + " validate " + fixture("missing") + " > /dev/null 2>&1").c_str());
    ASSERT_TRUE(WIFEXITED(missing));
    EXPECT_EQ(WEXITSTATUS(missing), cli::kInputError);
}

TEST(Cli, FullSuiteCoversEveryOperation) {
    harness::SuiteOptions opt;
    opt.lift_cases = 20;
    opt.law_cases = 20;
    opt.frobenius_cases = 10;
    opt.strong_cases = 5;
    opt.adjunction_cases = 5;
    opt.witness_problems = 10;
    opt.bc_cases = 5;
    harness::SuiteResult res = cli::full_suite(opt);
    EXPECT_TRUE(res.coverage.missing().empty());
    EXPECT_TRUE(res.ok());
}
