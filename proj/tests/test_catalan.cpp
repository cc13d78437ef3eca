#include "qshuffle/catalan.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

using namespace qshuffle;

namespace {

// product of brace brackets, highest k first in the written form
LaurentPoly braces(std::initializer_list<int> ks) {
    LaurentPoly r = LaurentPoly::one();
    for (int k : ks) r *= q_brace(k);
    return r;
}

FreeElement from_table(const std::map<std::string, LaurentPoly>& t) {
    FreeElement e;
    for (const auto& [w, c] : t) e.add_term(Word(w), c);
    return e;
}

TEST(CatalanElement, LowDegreeGolden) {
    CatalanTable cat;
    EXPECT_EQ(cat.element(0), FreeElement::unit());
    EXPECT_EQ(cat.element(1), FreeElement::of_word(Word("xy"), q_brace(2)));
    EXPECT_EQ(cat.element(2), from_table({{"xyxy", braces({2, 2})},
                                          {"xxyy", -braces({3, 2, 2})}}));
    EXPECT_EQ(cat.element(3), from_table({{"xyxyxy", braces({2, 2, 2})},
                                          {"xxyyxy", -braces({3, 2, 2, 2})},
                                          {"xyxxyy", -braces({3, 2, 2, 2})},
                                          {"xxyxyy", braces({3, 3, 2, 2, 2})},
                                          {"xxxyyy", -braces({4, 3, 3, 2, 2})}}));
    EXPECT_EQ(cat.element(4), from_table({{"xyxyxyxy", braces({2, 2, 2, 2})},
                                          {"xyxyxxyy", -braces({3, 2, 2, 2, 2})},
                                          {"xyxxyxyy", braces({3, 3, 2, 2, 2, 2})},
                                          {"xxyxyxyy", -braces({3, 3, 3, 2, 2, 2, 2})},
                                          {"xxyyxyxy", -braces({3, 2, 2, 2, 2})},
                                          {"xxyyxxyy", braces({3, 3, 2, 2, 2, 2})},
                                          {"xxxyyxyy", braces({4, 3, 3, 3, 2, 2, 2})},
                                          {"xxyxxyyy", braces({4, 3, 3, 3, 2, 2, 2})},
                                          {"xyxxyyxy", -braces({3, 2, 2, 2, 2})},
                                          {"xyxxxyyy", -braces({4, 3, 3, 2, 2, 2})},
                                          {"xxyxyyxy", braces({3, 3, 2, 2, 2, 2})},
                                          {"xxxyxyyy", -braces({4, 4, 3, 3, 3, 2, 2})},
                                          {"xxxyyyxy", -braces({4, 3, 3, 2, 2, 2})},
                                          {"xxxxyyyy", braces({5, 4, 4, 3, 3, 2, 2})}}));
}

TEST(CatalanCoeff, ExamplesAndAgreementWithElements) {
    CatalanTable cat;
    EXPECT_EQ(cat.coeff(Word("xy")), q_brace(2));
    EXPECT_EQ(cat.coeff(Word("xxyy")), -braces({3, 2, 2}));
    EXPECT_EQ(cat.coeff(Word("xxxyyy")), -braces({4, 3, 3, 2, 2}));
    for (int n = 1; n <= 5; ++n)
        for (Word w : cat.catalan_words(n))
            EXPECT_EQ(cat.coeff(w), cat.element(n).coeff(w)) << w.str();
}

TEST(CatalanCoeff, Preconditions) {
    CatalanTable cat;
    EXPECT_THROW(cat.coeff(Word("yx")), NotCatalanError);
    EXPECT_THROW(cat.coeff(Word("xxy")), NotCatalanError);
    EXPECT_THROW(cat.coeff(Word()), std::invalid_argument);
    EXPECT_THROW(cat.element(-1), std::invalid_argument);
    EXPECT_THROW(cat.element(13), CapExceededError);
}

TEST(CatalanElement, SupportIsExactlyCatalan) {
    CatalanTable cat;
    for (int n = 0; n <= 6; ++n) {
        const FreeElement& c = cat.element(n);
        EXPECT_EQ(c.term_count(), cat.catalan_words(n).size()) << n;
        for (const auto& [w, coeff] : c.terms()) {
            EXPECT_TRUE(is_catalan(w));
            EXPECT_EQ(w.size(), 2 * n);
            EXPECT_FALSE(coeff.is_zero());
        }
    }
}

TEST(CatalanElement, ZetaFixed) {
    CatalanTable cat;
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(zeta(cat.element(n)), cat.element(n)) << n;
}

TEST(CatalanFlank, Examples) {
    CatalanTable cat;
    EXPECT_EQ(cat.flank(0, FlankMode::XLeft), FreeElement::of_letter(Letter::X));
    EXPECT_EQ(cat.flank(0, FlankMode::YRight), FreeElement::of_letter(Letter::Y));
    EXPECT_EQ(cat.flank(1, FlankMode::Both), FreeElement::of_word(Word("xxyy"), q_brace(2)));
    // leading term of x C_3 y
    FreeElement f3 = cat.flank(3, FlankMode::Both);
    EXPECT_EQ(f3.coeff(Word("xxxxyyyy")), -braces({4, 3, 3, 2, 2}));
    EXPECT_EQ(f3.term_count(), 5u);
}

TEST(CatalanCoeffViaForm, AgreesWithRecursion) {
    CatalanTable cat;
    Shuffler sup(BraidingKind::Super);
    EXPECT_EQ(cat.coeff_via_form(Word("xy"), sup), q_brace(2));
    EXPECT_EQ(cat.coeff_via_form(Word("xyxy"), sup), braces({2, 2}));
    EXPECT_EQ(cat.coeff_via_form(Word("xxyyxy"), sup), -braces({3, 2, 2, 2}));
    for (int n = 1; n <= 5; ++n)
        for (Word w : cat.catalan_words(n))
            EXPECT_EQ(cat.coeff_via_form(w, sup), cat.coeff(w)) << w.str();
    Shuffler adm(BraidingKind::Admissible);
    EXPECT_THROW(cat.coeff_via_form(Word("xy"), adm), std::invalid_argument);
}

// For every balanced word v: (q x*(vy) + q^-1 (vy)*x)/(q+q^-1) equals
// -q^-1 sum_i (-1)^i (v with x inserted at i, y appended) {2+2(prefix sum)}_q.
TEST(CatalanClosedForm, BalancedWordExpansion) {
    Shuffler sup(BraidingKind::Super);
    const FreeElement x = FreeElement::of_letter(Letter::X);
    int checked = 0;
    for (int len = 0; len <= 8; len += 2) {
        for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
            Word v = Word::from_key((uint64_t{1} << len) | bits);
            if (!is_balanced(v)) continue;
            ++checked;
            FreeElement vy = FreeElement::of_word(v.pushed_back(Letter::Y));
            FreeElement lhs = (sup.shuffle_elems(x, vy).scaled(LaurentPoly::q(1)) +
                               sup.shuffle_elems(vy, x).scaled(LaurentPoly::q(-1)))
                                  .divided(q_plus_qinv());
            FreeElement rhs;
            int prefix = 0;
            for (int i = 0; i <= v.size(); ++i) {
                if (i > 0) prefix += v.at(i - 1) == Letter::X ? 1 : -1;
                Word w = v.inserted(i, Letter::X).pushed_back(Letter::Y);
                LaurentPoly c = q_brace(2 + 2 * prefix).shifted(-1);  // * q^-1
                rhs += FreeElement::of_word(w, i % 2 == 0 ? -c : c);
            }
            EXPECT_EQ(lhs, rhs) << "v=" << v.str();
        }
    }
    EXPECT_EQ(checked, 1 + 2 + 6 + 20 + 70);
}

// For Catalan v and non-Catalan w the bilinear form of the expansion
// against w vanishes.
TEST(CatalanClosedForm, VanishesOnNonCatalanWords) {
    Shuffler sup(BraidingKind::Super);
    CatalanTable cat;
    const FreeElement x = FreeElement::of_letter(Letter::X);
    for (int n = 1; 2 * n <= 8; ++n) {
        for (Word v : cat.catalan_words(n - 1)) {
            FreeElement vy = FreeElement::of_word(v.pushed_back(Letter::Y));
            FreeElement el = (sup.shuffle_elems(x, vy).scaled(LaurentPoly::q(1)) +
                              sup.shuffle_elems(vy, x).scaled(LaurentPoly::q(-1)))
                                 .divided(q_plus_qinv());
            for (uint64_t bits = 0; bits < (uint64_t{1} << (2 * n)); ++bits) {
                Word w = Word::from_key((uint64_t{1} << (2 * n)) | bits);
                if (is_catalan(w)) continue;
                EXPECT_TRUE(bilinear_form(el, FreeElement::of_word(w)).is_zero())
                    << "v=" << v.str() << " w=" << w.str();
            }
        }
    }
}

TEST(ClassicalCatalanCoeff, ProductFormula) {
    EXPECT_EQ(classical_catalan_coeff(Word("xy")), q_bracket(2));
    EXPECT_EQ(classical_catalan_coeff(Word()), LaurentPoly::one());
    EXPECT_EQ(classical_catalan_coeff(Word("xxyy")),
              q_bracket(1) * q_bracket(2) * q_bracket(3) * q_bracket(2) * q_bracket(1));
    EXPECT_THROW(classical_catalan_coeff(Word("yx")), NotCatalanError);
}

}  // namespace
