/**
 * @file catalan.hpp
 * @brief Catalan elements of the q-shuffle superalgebra.
 *
 * The n-th Catalan element is C_n = sum over Catalan words w of length 2n
 * of w * C(w), where the coefficients are defined by the insertion
 * recursion: every Catalan word of length 2n arises from some v in
 * Cat_{n-1} by inserting x at a position i and appending y, and
 *
 *   C(w) = sum_{v} C(v) * sum_{i} (-1)^i {2 + 2(abar_1 + .. + abar_i)}_q,
 *
 * the inner sum over exactly the insertion positions that reproduce w
 * (several v and several i may contribute). C(empty) = 1.
 */
#pragma once

#include "qshuffle/shuffle.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qshuffle {

class NotCatalanError : public std::invalid_argument {
public:
    explicit NotCatalanError(Word w)
        : std::invalid_argument("word '" + w.str() + "' is not Catalan") {}
};

enum class FlankMode { XLeft, YRight, Both };

/// Caches Catalan elements by degree and coefficients by word.
/// Results are pure; append-only within a run.
class CatalanTable {
public:
    /// C_n, built degree by degree via the insertion pass. C_0 = 1.
    const FreeElement& element(int n) {
        if (n < 0) throw std::invalid_argument("catalan element: n must be >= 0");
        if (2 * n > word_cap()) throw CapExceededError(2 * n);
        while (static_cast<int>(elements_.size()) <= n) {
            if (elements_.empty()) {
                elements_.push_back(FreeElement::unit());
                continue;
            }
            const FreeElement& prev = elements_.back();
            FreeElement next;
            for (const auto& [v, cv] : prev.terms()) {
                int prefix = 0;  // abar_1 + .. + abar_i
                for (int i = 0; i <= v.size(); ++i) {
                    if (i > 0) prefix += v.at(i - 1) == Letter::X ? 1 : -1;
                    Word w = v.inserted(i, Letter::X).pushed_back(Letter::Y);
                    LaurentPoly contrib = cv * q_brace(2 + 2 * prefix);
                    next.add_term(w, i % 2 == 0 ? contrib : -contrib);
                }
            }
            elements_.push_back(std::move(next));
        }
        return elements_[n];
    }

    /// C(w) by the insertion-count recursion, memoized per word.
    /// Requires w Catalan and nonempty.
    LaurentPoly coeff(Word w) {
        if (!is_catalan(w)) throw NotCatalanError(w);
        if (w.empty()) throw std::invalid_argument("catalan coeff: word must be nonempty");
        return coeff_rec(w);
    }

    /// x C_n, C_n y or x C_n y (concatenation products).
    FreeElement flank(int n, FlankMode mode) {
        const FreeElement& c = element(n);
        const FreeElement x = FreeElement::of_letter(Letter::X);
        const FreeElement y = FreeElement::of_letter(Letter::Y);
        switch (mode) {
            case FlankMode::XLeft: return concat_mul(x, c);
            case FlankMode::YRight: return concat_mul(c, y);
            case FlankMode::Both: return concat_mul(x, concat_mul(c, y));
        }
        throw std::logic_error("catalan flank: bad mode");
    }

    /// C(w) through the bilinear-form route:
    ///   C(w) = -q * sum_{v in Cat_{n-1}} C(v) ((q x*(vy) + q^-1 (vy)*x)/(q+q^-1), w).
    /// Cross-check path for coeff(); must agree with it.
    LaurentPoly coeff_via_form(Word w, Shuffler& sh) {
        if (!is_catalan(w)) throw NotCatalanError(w);
        if (w.empty()) throw std::invalid_argument("catalan coeff: word must be nonempty");
        if (sh.table().kind() != BraidingKind::Super)
            throw std::invalid_argument("catalan coeff_via_form: super shuffle required");
        const int n = w.size() / 2;
        const FreeElement x = FreeElement::of_letter(Letter::X);
        const FreeElement wvec = FreeElement::of_word(w);
        LaurentPoly acc;
        for (Word v : catalan_words(n - 1)) {
            LaurentPoly cv = (n == 1) ? LaurentPoly::one() : coeff_rec(v);
            FreeElement vy = FreeElement::of_word(v.pushed_back(Letter::Y));
            FreeElement num = sh.shuffle_elems(x, vy).scaled(LaurentPoly::q(1)) +
                              sh.shuffle_elems(vy, x).scaled(LaurentPoly::q(-1));
            acc += cv * bilinear_form(num.divided(q_plus_qinv()), wvec);
        }
        return -acc.shifted(1);  // * (-q)
    }

    const std::vector<Word>& catalan_words(int n) {
        while (static_cast<int>(cat_words_.size()) <= n)
            cat_words_.push_back(enumerate_catalan(static_cast<int>(cat_words_.size())));
        return cat_words_[n];
    }

private:
    LaurentPoly coeff_rec(Word w) {
        auto it = coeffs_.find(w.key());
        if (it != coeffs_.end()) return it->second;
        const int n = w.size() / 2;
        LaurentPoly total;
        for (Word v : catalan_words(n - 1)) {
            // positions i with  w == a_1..a_i x a_{i+1}..a_m y
            LaurentPoly inner;
            int prefix = 0;
            for (int i = 0; i <= v.size(); ++i) {
                if (i > 0) prefix += v.at(i - 1) == Letter::X ? 1 : -1;
                if (v.inserted(i, Letter::X).pushed_back(Letter::Y) == w) {
                    LaurentPoly b = q_brace(2 + 2 * prefix);
                    inner += i % 2 == 0 ? b : -b;
                }
            }
            if (inner.is_zero()) continue;
            LaurentPoly cv = v.empty() ? LaurentPoly::one() : coeff_rec(v);
            total += cv * inner;
        }
        coeffs_.emplace(w.key(), total);
        return total;
    }

    // deques: element() and catalan_words() hand out references that must
    // survive later cache growth
    std::deque<FreeElement> elements_;
    std::deque<std::vector<Word>> cat_words_;
    std::unordered_map<uint64_t, LaurentPoly> coeffs_;
};

/// Coefficient from the classical (non-super) shuffle algebra's product
/// formula: prod over all prefixes of [1 + abar_1 + .. + abar_i]_q,
/// including the leading [1]_q. Provided for comparison only; no identity
/// about it is part of the verified registry.
inline LaurentPoly classical_catalan_coeff(Word w) {
    if (!is_catalan(w)) throw NotCatalanError(w);
    LaurentPoly r = q_bracket(1);
    int s = 0;
    for (int i = 0; i < w.size(); ++i) {
        s += w.at(i) == Letter::X ? 1 : -1;
        r *= q_bracket(1 + s);
    }
    return r;
}

}  // namespace qshuffle
