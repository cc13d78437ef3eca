#include "qshuffle/word.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace qshuffle;

namespace {

// independent oracle: all words of length n as strings
std::vector<std::string> all_strings(int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& s : out) {
            next.push_back(s + "x");
            next.push_back(s + "y");
        }
        out = std::move(next);
    }
    return out;
}

bool is_catalan_str(const std::string& s) {
    int h = 0;
    for (char ch : s) {
        h += ch == 'x' ? 1 : -1;
        if (h < 0) return false;
    }
    return h == 0;
}

std::string rand_string(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += bit(rng) ? 'y' : 'x';
    return s;
}

TEST(Word, RoundTripAndAccessors) {
    Word w("xxyxy");
    EXPECT_EQ(w.str(), "xxyxy");
    EXPECT_EQ(w.size(), 5);
    EXPECT_EQ(w.front(), Letter::X);
    EXPECT_EQ(w.back(), Letter::Y);
    EXPECT_EQ(w.at(2), Letter::Y);
    EXPECT_TRUE(Word().empty());
    EXPECT_EQ(Word().str(), "");
    EXPECT_THROW(Word("xzy"), std::invalid_argument);
}

TEST(Word, EditOpsAgainstStringOracle) {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 500; ++iter) {
        std::string s = rand_string(rng, 12);
        Word w(s);
        EXPECT_EQ(w.pushed_front(Letter::Y).str(), "y" + s);
        EXPECT_EQ(w.pushed_back(Letter::X).str(), s + "x");
        if (!s.empty()) {
            EXPECT_EQ(w.popped_front().str(), s.substr(1));
            EXPECT_EQ(w.popped_back().str(), s.substr(0, s.size() - 1));
        }
        std::uniform_int_distribution<int> pos(0, static_cast<int>(s.size()));
        int p = pos(rng);
        EXPECT_EQ(w.inserted(p, Letter::X).str(), s.substr(0, p) + "x" + s.substr(p));
        std::string t = rand_string(rng, 8);
        EXPECT_EQ(concat(w, Word(t)).str(), s + t);
        std::string rs;
        for (auto it = s.rbegin(); it != s.rend(); ++it) rs += *it == 'x' ? 'y' : 'x';
        EXPECT_EQ(w.reverse_swap().str(), rs);
    }
}

TEST(Word, CanonicalOrderIsLengthLex) {
    auto ref_less = [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;  // 'x' < 'y' in ASCII
    };
    std::mt19937 rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        std::string a = rand_string(rng, 10), b = rand_string(rng, 10);
        EXPECT_EQ(Word(a) < Word(b), ref_less(a, b)) << a << " vs " << b;
    }
}

TEST(BarPrefixSums, Examples) {
    EXPECT_EQ(bar_prefix_sums(Word("xy")), (std::vector<int>{1, 0}));
    EXPECT_EQ(bar_prefix_sums(Word("xxyy")), (std::vector<int>{1, 2, 1, 0}));
    EXPECT_EQ(bar_prefix_sums(Word("yx")), (std::vector<int>{-1, 0}));
    EXPECT_TRUE(bar_prefix_sums(Word()).empty());
}

TEST(CatalanPredicates, Examples) {
    EXPECT_TRUE(is_catalan(Word("xyxy")));
    EXPECT_TRUE(is_balanced(Word("yx")));
    EXPECT_FALSE(is_catalan(Word("yx")));
    EXPECT_FALSE(is_balanced(Word("xxy")));
    EXPECT_TRUE(is_catalan(Word()));
}

TEST(CatalanPredicates, CatalanImpliesBalanced) {
    for (const auto& s : all_strings(8))
        if (is_catalan(Word(s))) { EXPECT_TRUE(is_balanced(Word(s))); }
}

TEST(EnumerateCatalan, ExamplesAndOrder) {
    auto c0 = enumerate_catalan(0);
    ASSERT_EQ(c0.size(), 1u);
    EXPECT_TRUE(c0[0].empty());

    auto c2 = enumerate_catalan(2);
    ASSERT_EQ(c2.size(), 2u);
    EXPECT_EQ(c2[0].str(), "xxyy");
    EXPECT_EQ(c2[1].str(), "xyxy");

    auto c3 = enumerate_catalan(3);
    std::vector<std::string> got;
    for (Word w : c3) got.push_back(w.str());
    EXPECT_EQ(got, (std::vector<std::string>{"xxxyyy", "xxyxyy", "xxyyxy", "xyxxyy", "xyxyxy"}));
}

TEST(EnumerateCatalan, CountsAndBruteForce) {
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n)
        EXPECT_EQ(enumerate_catalan(n).size(), catalan[n]) << "n=" << n;

    for (int n = 0; n <= 6; ++n) {
        std::vector<std::string> brute;
        for (const auto& s : all_strings(2 * n))
            if (is_catalan_str(s)) brute.push_back(s);
        std::sort(brute.begin(), brute.end());  // same-length sort = canonical order
        std::vector<std::string> got;
        for (Word w : enumerate_catalan(n)) got.push_back(w.str());
        EXPECT_EQ(got, brute) << "n=" << n;
    }
}

TEST(ReverseSwap, InvolutionAndCatalanStability) {
    EXPECT_EQ(Word("xxy").reverse_swap().str(), "xyy");
    EXPECT_EQ(Word("xy").reverse_swap().str(), "xy");
    EXPECT_TRUE(Word().reverse_swap().empty());
    std::mt19937 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        Word w(rand_string(rng, 14));
        EXPECT_EQ(w.reverse_swap().reverse_swap(), w);
    }
    // zeta maps Cat_n onto Cat_n
    for (int n = 0; n <= 6; ++n) {
        auto cats = enumerate_catalan(n);
        std::set<uint64_t> keys;
        for (Word w : cats) keys.insert(w.key());
        for (Word w : cats) {
            Word z = w.reverse_swap();
            EXPECT_TRUE(is_catalan(z)) << w.str();
            EXPECT_TRUE(keys.count(z.key())) << w.str();
        }
    }
}

TEST(WordCap, Enforcement) {
    ASSERT_EQ(word_cap(), 24);
    EXPECT_THROW(enumerate_catalan(13), CapExceededError);
    Word a(std::string(13, 'x')), b(std::string(13, 'y'));
    EXPECT_THROW(concat(a, b), CapExceededError);
    EXPECT_THROW(Word(std::string(25, 'x')), CapExceededError);
    EXPECT_THROW(set_word_cap(0), std::invalid_argument);
    EXPECT_THROW(set_word_cap(32), std::invalid_argument);
    set_word_cap(26);
    EXPECT_NO_THROW(concat(a, b));
    set_word_cap(24);
}

}  // namespace
