#include "qshuffle/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qshuffle;

namespace {

IdentityCase make_case(const std::string& id, std::vector<int> params,
                       BraidingKind braiding = BraidingKind::Super) {
    return IdentityCase{id, "", std::move(params), braiding};
}

TEST(RunIdentity, SpotCases) {
    VerifyContext ctx;
    VerifyReport r = run_identity(make_case("CICJ", {1, 2}), ctx);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.residual.is_zero());
    EXPECT_FALSE(r.error.has_value());

    for (int eq : {1, 2}) {
        VerifyReport s = run_identity(make_case("SERRE_SUPER", {eq}), ctx);
        EXPECT_TRUE(s.passed) << eq;
        VerifyReport a = run_identity(make_case("SERRE_ADM", {eq}, BraidingKind::Admissible), ctx);
        EXPECT_TRUE(a.passed) << eq;
    }

    // first imaginary closed form: both sides are (1 - q^-4) xy
    VerifyReport t = run_identity(make_case("THM1", {1, 2}), ctx);
    EXPECT_TRUE(t.passed);
    EXPECT_EQ(damiani_closed_form(1, DamianiKind::Imag, ctx.cat),
              FreeElement::of_word(Word("xy"), LaurentPoly::one() - LaurentPoly::q(-4)));

    VerifyReport bad = run_identity(make_case("NOSUCH", {}), ctx);
    EXPECT_FALSE(bad.passed);
    ASSERT_TRUE(bad.error.has_value());
}

TEST(Selectors, ExpansionAndErrors) {
    auto serre = expand_selectors({"serre"}, 12);
    EXPECT_EQ(serre.size(), 4u);  // two equations per algebra
    auto serre_star = expand_selectors({"SERRE_*"}, 12);
    EXPECT_EQ(serre_star.size(), 4u);
    EXPECT_TRUE(expand_selectors({}, 12).empty());
    EXPECT_TRUE(run_suite({}, 12, false).empty());
    EXPECT_THROW(expand_selectors({"nosuch"}, 12), BadSelectorError);
    // duplicates collapse
    EXPECT_EQ(expand_selectors({"CICJ", "cicj"}, 8).size(),
              expand_selectors({"CICJ"}, 8).size());
}

TEST(Selectors, BudgetControlsParameters) {
    auto cases = expand_selectors({"CICJ"}, 8);
    for (const auto& c : cases) EXPECT_LE(2 * (c.params[0] + c.params[1]), 8);
    std::set<std::vector<int>> seen;
    for (const auto& c : cases) {
        EXPECT_LE(c.params[0], c.params[1]);  // unordered pairs, i <= j
        EXPECT_TRUE(seen.insert(c.params).second);
    }
    EXPECT_TRUE(expand_selectors({"SERRE_SUPER"}, 3).empty());
}

TEST(RunSuite, SerreAllPass) {
    auto reports = run_suite({"serre"}, 12, false);
    ASSERT_EQ(reports.size(), 4u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.kase.id;
}

TEST(RunSuite, CanonicalOrderAndParallelEquivalence) {
    auto serial = run_suite({"all"}, 6, false);
    auto parallel = run_suite({"all"}, 6, true);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].kase.id, parallel[i].kase.id);
        EXPECT_EQ(serial[i].kase.params, parallel[i].kase.params);
        EXPECT_EQ(serial[i].passed, parallel[i].passed);
        EXPECT_EQ(serial[i].residual, parallel[i].residual);
    }
    // registry order, then parameter lex order
    std::size_t i = 0;
    while (i + 1 < serial.size()) {
        if (serial[i].kase.id == serial[i + 1].kase.id) {
            EXPECT_LT(serial[i].kase.params, serial[i + 1].kase.params);
        }
        ++i;
    }
    for (const auto& r : serial) EXPECT_TRUE(r.passed) << r.kase.id;
}

TEST(Registry, IdsAreUniqueAndLabeled) {
    auto cases = expand_selectors({"all"}, 4);
    std::set<std::string> ids;
    for (const auto& c : cases) ids.insert(c.id);
    // one registry family per id; every case carries a statement
    for (const auto& c : cases) EXPECT_FALSE(c.label.empty()) << c.id;
    EXPECT_GE(ids.size(), 10u);
    auto again = expand_selectors({"all"}, 4);
    ASSERT_EQ(cases.size(), again.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
        EXPECT_EQ(cases[i].id, again[i].id);
        EXPECT_EQ(cases[i].params, again[i].params);
    }
}

TEST(RunSuite, FullRegistryAtDeskScale) {
    auto reports = run_suite({"all"}, 10, false);
    EXPECT_GT(reports.size(), 200u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.kase.id;
}

TEST(DualVariant, FlankMixYResolvesDenominator) {
    VerifyContext ctx;
    for (int k = 0; k + 0 <= 4; ++k)
        for (int l = 0; k + l <= 4; ++l) {
            VerifyReport r = run_identity(make_case("FLANK_MIX_Y", {k, l}), ctx);
            ASSERT_TRUE(r.variants.has_value());
            EXPECT_TRUE(r.passed);
            EXPECT_NE(r.variants->a_passed, r.variants->b_passed) << k << "," << l;
            EXPECT_EQ(r.variants->passing(), "denominator q+q^-1");
            EXPECT_TRUE(r.residual.is_zero());
        }
}

TEST(DualVariant, RrEvenAndComRealRootResolveSigns) {
    VerifyContext ctx;
    for (const char* id : {"RR_EVEN_X", "RR_EVEN_Y"}) {
        VerifyReport r = run_identity(make_case(id, {2, 0}), ctx);
        ASSERT_TRUE(r.variants.has_value()) << id;
        EXPECT_TRUE(r.passed) << id;
        EXPECT_FALSE(r.variants->a_passed) << id;  // sign as printed fails
        EXPECT_TRUE(r.variants->b_passed) << id;
    }
    VerifyReport c = run_identity(make_case("COM_REAL_ROOT", {1, 1}), ctx);
    ASSERT_TRUE(c.variants.has_value());
    EXPECT_TRUE(c.passed);
    EXPECT_FALSE(c.variants->a_passed);
    EXPECT_TRUE(c.variants->b_passed);
}

TEST(Reports, DeterministicAndSerializable) {
    VerifyContext ctx;
    VerifyReport r1 = run_identity(make_case("RR_EVEN_X", {3, 1}), ctx);
    VerifyReport r2 = run_identity(make_case("RR_EVEN_X", {3, 1}), ctx);
    EXPECT_EQ(r1.residual, r2.residual);
    EXPECT_EQ(r1.passed, r2.passed);
    nlohmann::json j = r1.to_json();
    EXPECT_EQ(j["id"], "RR_EVEN_X");
    EXPECT_EQ(j["params"], (std::vector<int>{3, 1}));
    EXPECT_EQ(j["braiding"], "super");
    ASSERT_TRUE(j.contains("variants"));
    EXPECT_EQ(j["variants"]["passing"], "square term sign (-1)^(r+1)");
    // residual serializes losslessly
    EXPECT_EQ(FreeElement::from_json(j["residual"]), r1.residual);
}

TEST(Reports, ErrorsAreCapturedNotThrown) {
    VerifyContext ctx;
    // word-length cap exceeded inside the evaluation
    VerifyReport r = run_identity(make_case("CICJ", {7, 7}), ctx);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.error.has_value());
}

TEST(Reports, PreconditionViolations) {
    VerifyContext ctx;
    // parity constraints
    VerifyReport odd = run_identity(make_case("RR_ODD_X", {2, 0}), ctx);
    EXPECT_FALSE(odd.passed);
    ASSERT_TRUE(odd.error.has_value());
    EXPECT_NE(odd.error->find("odd gap"), std::string::npos);
    VerifyReport even = run_identity(make_case("RR_EVEN_Y", {3, 0}), ctx);
    EXPECT_FALSE(even.passed);
    ASSERT_TRUE(even.error.has_value());
    // arity and range
    EXPECT_TRUE(run_identity(make_case("CICJ", {1}), ctx).error.has_value());
    EXPECT_TRUE(run_identity(make_case("THM1", {0, 2}), ctx).error.has_value());
    EXPECT_TRUE(run_identity(make_case("BECK_COMM", {0, 1}), ctx).error.has_value());
    EXPECT_TRUE(run_identity(make_case("J_ORTH", {2, 3}), ctx).error.has_value());
    EXPECT_TRUE(run_identity(make_case("RR3_MIX", {1, 1, 1}), ctx).error.has_value());
    EXPECT_TRUE(run_identity(make_case("SERRE_ADM", {3}, BraidingKind::Admissible), ctx)
                    .error.has_value());
}

}  // namespace
