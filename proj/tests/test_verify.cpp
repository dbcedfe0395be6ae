#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "robincap/domain_io.hpp"
#include "robincap/json_out.hpp"
#include "robincap/scenario_gen.hpp"
#include "robincap/verify.hpp"
#include "support.hpp"

using namespace robincap;
using robincap::test::Rng;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Scenario scenario(const std::string& text) { return parse_scenario(text); }

}  // namespace

TEST(ScenarioFormat, ParseFields) {
    const Scenario s = load_scenario(test::data_dir() / "scenarios/thm_4_3_pvalent.scn");
    EXPECT_EQ(s.id, "thm_4_3_pvalent");
    EXPECT_EQ(s.kind, ScenarioKind::PValent43);
    EXPECT_EQ(s.valence, 2);
    ASSERT_EQ(s.targets.size(), 2u);
    EXPECT_EQ(s.targets[1], Complex(-0.16));
    EXPECT_EQ(s.weights, (std::vector<double>{1, -1}));
    EXPECT_EQ(s.f().source(), "z^2");
}

TEST(ScenarioFormat, SplitListRespectsParentheses) {
    EXPECT_EQ(split_list(" a, f(b, c) ,d "), (std::vector<std::string>{"a", "f(b, c)", "d"}));
    EXPECT_TRUE(split_list("").empty());
}

TEST(ScenarioFormat, ParseErrors) {
    try {
        scenario("id = x\nkind = TwoPoint21\nid = y\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(scenario("id = x\nkind = TwoPoint21\ncolour = red\n"), InputError);
    EXPECT_THROW(scenario("id = x\nkind = Bogus99\n"), InputError);
    EXPECT_THROW(scenario("id = x\nkind = TwoPoint21\nmap = z +\n"), ParseError);
    EXPECT_THROW(scenario("kind = TwoPoint21\n"), InputError);
    EXPECT_THROW(parse_kind("twopoint21"), InputError);
    for (int k = 0; k < kScenarioKindCount; ++k)
        EXPECT_EQ(parse_kind(to_string(static_cast<ScenarioKind>(k))), static_cast<ScenarioKind>(k));
}

TEST(ScenarioFormat, GoldenRoundTrip) {
    const auto all = load_scenario_dir(test::data_dir() / "scenarios");
    ASSERT_EQ(all.size(), 24u);
    for (const auto& s : all) {
        const std::string text = serialize_scenario(s);
        EXPECT_EQ(serialize_scenario(parse_scenario(text)), text) << s.id;
        const auto golden = test::golden_dir() / "scenarios" / (s.id + ".scn.golden");
        ASSERT_TRUE(std::filesystem::exists(golden)) << golden;
        EXPECT_EQ(text, read_file(golden)) << s.id;
    }
}

TEST(ScenarioFormat, RandomScenariosRoundTrip) {
    for (const auto& s : random_suite(2, 7)) {
        const std::string text = serialize_scenario(s);
        EXPECT_EQ(serialize_scenario(parse_scenario(text)), text) << s.id;
    }
}

TEST(WeightedDerivative, IdentityAndContraction) {
    RobinProvider b(resolve_domain("disk")), g(resolve_domain("disk"));
    const auto id = HolomorphicMap::parse("z");
    Rng rng(61);
    for (int i = 0; i < 10; ++i) EXPECT_NEAR(weighted_derivative(b, g, id, rng.in_disk(0.9)), 1.0, 1e-12);
    EXPECT_NEAR(weighted_derivative(b, g, HolomorphicMap::parse("z/2"), 0.0), 0.5, 1e-12);
}

TEST(WeightedDerivative, AutomorphismsAreIsometries) {
    RobinProvider b(resolve_domain("disk")), g(resolve_domain("disk"));
    Rng rng(62);
    for (int i = 0; i < 10; ++i) {
        const Complex a = rng.in_disk(0.8);
        char text[128];
        std::snprintf(text, sizeof text, "disk_auto(z, %.17g%+.17gi, %.17g)", a.real(), a.imag(), rng.uniform(0, 6));
        const auto f = HolomorphicMap::parse(text);
        EXPECT_NEAR(weighted_derivative(b, g, f, rng.in_disk(0.8)), 1.0, 1e-10) << text;
    }
}

TEST(Verify, HypothesisFailureIsReported) {
    const auto r = verify(scenario(
        "id = shifted\nkind = Schwarzian34\nmap = z + 0.1*z^2 + 0.05\npoints = 0\n"));
    EXPECT_EQ(r.status, VerdictStatus::HypothesisFailed);
    EXPECT_FALSE(r.satisfied);
    EXPECT_FALSE(r.message.empty());

    // f(D) leaves the disk
    const auto out = verify(scenario("id = out\nkind = TwoPoint21\nmap = 2*z\npoints = 0.1\nweights = 1\n"));
    EXPECT_EQ(out.status, VerdictStatus::HypothesisFailed);
}

TEST(Verify, PreimageCountMismatchIsAnError) {
    const auto r = verify(scenario(
        "id = wrong_valence\nkind = PValent43\nmap = z^3\nvalence = 2\ntargets = 0.25, -0.16\nweights = 1, -1\n"));
    EXPECT_EQ(r.status, VerdictStatus::Error);
    EXPECT_NE(r.message.find("preimage count"), std::string::npos) << r.message;
}

TEST(Verify, PickAgainstIndependentFormula) {
    Rng rng(63);
    for (int i = 0; i < 20; ++i) {
        const Complex a1 = rng.in_disk(0.8), a2 = rng.in_disk(0.8), z = rng.in_disk(0.9);
        char text[512];
        std::snprintf(text, sizeof text,
                      "id = pick_%d\nkind = Nehari33\nmap = blaschke(z, %.17g%+.17gi, %.17g%+.17gi)\n"
                      "points = %.17g%+.17gi\nweights = 1\n",
                      i, a1.real(), a1.imag(), a2.real(), a2.imag(), z.real(), z.imag());
        const auto r = verify(scenario(text));
        ASSERT_EQ(r.status, VerdictStatus::Satisfied) << r.message;
        const double independent = std::log(r.detail("pick_rhs") / r.detail("pick_lhs"));
        EXPECT_NEAR(r.margin, independent, 1e-9);
        EXPECT_GE(independent, 0.0);
    }
}

TEST(Verify, MobiusEqualityAndContractionStrict) {
    const auto eq = verify(load_scenario(test::data_dir() / "scenarios/twopoint22_mobius.scn"));
    EXPECT_EQ(eq.status, VerdictStatus::Satisfied);
    EXPECT_TRUE(eq.equality);
    EXPECT_LE(std::abs(eq.margin), 1e-6);
    const auto strict = verify(scenario("id = half\nkind = TwoPoint22\nmap = z/2\npoints = 0.3, -0.2i\nweights = 1, -1\n"));
    EXPECT_EQ(strict.status, VerdictStatus::Satisfied);
    EXPECT_FALSE(strict.equality);
    EXPECT_GT(strict.margin, 0.0);
}

// every generated instance satisfies its inequality up to the numeric budget
TEST(RandomSuite, NeverBelowBudget) {
    const auto suite = random_suite(5, 2024);
    ASSERT_EQ(suite.size(), 5u * kScenarioKindCount);
    std::set<ScenarioKind> kinds;
    for (const auto& r : verify_all(suite, 2)) {
        kinds.insert(r.kind);
        EXPECT_EQ(r.status, VerdictStatus::Satisfied) << r.id << ": " << r.message;
        EXPECT_GE(r.margin, -r.budget) << r.id;
    }
    EXPECT_EQ(kinds.size(), static_cast<std::size_t>(kScenarioKindCount));
}

TEST(RandomSuite, SeededAndDeterministic) {
    EXPECT_EQ(serialize_scenario(random_scenarios(ScenarioKind::Lindelof41, 3, 9)[2]),
              serialize_scenario(random_scenarios(ScenarioKind::Lindelof41, 3, 9)[2]));
    EXPECT_NE(serialize_scenario(random_scenarios(ScenarioKind::Lindelof41, 1, 9)[0]),
              serialize_scenario(random_scenarios(ScenarioKind::Lindelof41, 1, 10)[0]));
}

TEST(VerifyAll, OrderedByIdForAnyThreadCount) {
    auto scenarios = random_scenarios(ScenarioKind::TwoPoint22, 4, 5);
    const auto more = random_scenarios(ScenarioKind::Radius42, 4, 5);
    scenarios.insert(scenarios.begin(), more.rbegin(), more.rend());
    const auto one = verify_all(scenarios, 1), three = verify_all(scenarios, 3);
    ASSERT_EQ(one.size(), scenarios.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        if (i > 0) EXPECT_LT(one[i - 1].id, one[i].id);
        EXPECT_EQ(one[i].id, three[i].id);
        EXPECT_EQ(one[i].margin, three[i].margin);
    }
}

TEST(ReportJson, ValidWithFullPrecision) {
    const Scenario s = load_scenario(test::data_dir() / "scenarios/cor_3_3_pick.scn");
    const auto r = verify(s);
    const std::string text = report_json(r, s);
    EXPECT_EQ(text.find('\n'), std::string::npos);
    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["id"], "cor_3_3_pick");
    EXPECT_EQ(j["status"], "satisfied");
    EXPECT_EQ(j["margin"].get<double>(), r.margin);
    EXPECT_EQ(j["lhs_log"].get<double>(), r.lhs_log);
    EXPECT_EQ(j["inputs"]["map"], "blaschke(z, 0.2, -0.5i)");
    EXPECT_EQ(j["inputs"]["hypothesis_samples"], kHypothesisSamples);
    EXPECT_TRUE(j["details"].contains("pick_lhs"));
    EXPECT_EQ(json17(Json(0.1)), "0.10000000000000001");
    EXPECT_EQ(json17(Json(std::nan(""))), "null");
}
