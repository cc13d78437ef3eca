/**
 * @file free_element.hpp
 * @brief Elements of the free algebra on {x, y} with Laurent coefficients.
 *
 * Sparse term list sorted by canonical word order; zero coefficients are
 * pruned eagerly, so "identity holds" is exactly "term list is empty".
 */
#pragma once

#include "qshuffle/laurent.hpp"
#include "qshuffle/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qshuffle {

class FreeElement {
public:
    using Term = std::pair<Word, LaurentPoly>;

    FreeElement() = default;

    static FreeElement zero() { return {}; }

    /// The empty word with coefficient 1 (the algebra unit).
    static FreeElement unit() { return of_word(Word()); }

    static FreeElement of_word(Word w, LaurentPoly c = LaurentPoly::one()) {
        FreeElement e;
        if (!c.is_zero()) e.terms_.emplace_back(w, std::move(c));
        return e;
    }

    static FreeElement of_letter(Letter l) { return of_word(Word::single(l)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    LaurentPoly coeff(Word w) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, Word v) { return t.first < v; });
        if (it != terms_.end() && it->first == w) return it->second;
        return {};
    }

    void add_term(Word w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, Word v) { return t.first < v; });
        if (it != terms_.end() && it->first == w) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.emplace(it, w, c);
        }
    }

    friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

    friend FreeElement operator-(const FreeElement& a) {
        FreeElement r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& [w, c] : a.terms_) r.terms_.emplace_back(w, -c);
        return r;
    }

    friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
        FreeElement r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first) r.terms_.push_back(*ia++);
            else if (ib->first < ia->first) r.terms_.push_back(*ib++);
            else {
                LaurentPoly c = ia->second + ib->second;
                if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia; ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    friend FreeElement operator-(const FreeElement& a, const FreeElement& b) { return a + (-b); }

    FreeElement& operator+=(const FreeElement& b) { *this = *this + b; return *this; }
    FreeElement& operator-=(const FreeElement& b) { *this = *this - b; return *this; }

    FreeElement scaled(const LaurentPoly& f) const {
        FreeElement r;
        if (f.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [w, c] : terms_) r.terms_.emplace_back(w, c * f);
        return r;
    }

    FreeElement scaled(const Rational& f) const {
        FreeElement r;
        if (f.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [w, c] : terms_) r.terms_.emplace_back(w, c.scaled(f));
        return r;
    }

    /// Prepends one letter to every word. Order-preserving on homogeneous
    /// input (same-length words keep their relative order), which is what
    /// the shuffle recursion feeds it; general input is re-sorted.
    FreeElement prepended(Letter l) const {
        FreeElement r;
        r.terms_.reserve(terms_.size());
        for (const auto& [w, c] : terms_) r.terms_.emplace_back(w.pushed_front(l), c);
        if (!std::is_sorted(r.terms_.begin(), r.terms_.end(),
                            [](const Term& a, const Term& b) { return a.first < b.first; }))
            r.resort();
        return r;
    }

    /// Divides every coefficient exactly; throws NotDivisibleError if any fails.
    FreeElement divided(const LaurentPoly& den) const {
        FreeElement r;
        r.terms_.reserve(terms_.size());
        for (const auto& [w, c] : terms_) r.terms_.emplace_back(w, exact_div(c, den));
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (!w.empty()) out += "*" + w.str();
        }
        return out;
    }

    /// Array of {"word": ..., "coeff": ...} in canonical word order.
    nlohmann::json to_json() const {
        auto j = nlohmann::json::array();
        for (const auto& [w, c] : terms_)
            j.push_back({{"word", w.str()}, {"coeff", c.to_json()}});
        return j;
    }

    static FreeElement from_json(const nlohmann::json& j) {
        FreeElement e;
        for (const auto& t : j)
            e.add_term(Word(t.at("word").get<std::string>()),
                       LaurentPoly::from_json(t.at("coeff")));
        return e;
    }

private:
    void resort() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
    }

    std::vector<Term> terms_;  // sorted by word, coefficient polys nonzero
};

/// Homogeneous slice of an element: every support word has length `degree`.
struct GradedComponent {
    int degree = 0;
    FreeElement element;
};

/// Bilinear extension of word concatenation (the free product).
inline FreeElement concat_mul(const FreeElement& a, const FreeElement& b) {
    FreeElement r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            r.add_term(concat(wa, wb), ca * cb);
    return r;
}

/// Symmetric bilinear form with the word basis orthonormal.
inline LaurentPoly bilinear_form(const FreeElement& a, const FreeElement& b) {
    LaurentPoly r;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            r += ia->second * ib->second;
            ++ia; ++ib;
        }
    }
    return r;
}

/// The antiautomorphism zeta: reverses every word and swaps x <-> y,
/// coefficients unchanged. An involution; antiautomorphism for both the
/// concatenation product and every braided shuffle product.
inline FreeElement zeta(const FreeElement& a) {
    FreeElement r;
    for (const auto& [w, c] : a.terms()) r.add_term(w.reverse_swap(), c);
    return r;
}

/// Restriction of the support to words of length n.
inline GradedComponent grade_project(const FreeElement& a, int n) {
    if (n < 0) throw std::invalid_argument("grade_project: degree must be >= 0");
    GradedComponent g;
    g.degree = n;
    for (const auto& [w, c] : a.terms())
        if (w.size() == n) g.element.add_term(w, c);
    return g;
}

}  // namespace qshuffle
