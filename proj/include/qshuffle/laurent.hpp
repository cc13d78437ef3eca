/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in q with rational coefficients.
 *
 * Sparse representation: term list sorted by exponent, zero coefficients
 * never stored. This is the coefficient ring for everything else; all
 * identity checks reduce to exact equality here.
 */
#pragma once

#include "qshuffle/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qshuffle {

class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;  // (exponent of q, coefficient)

    LaurentPoly() = default;

    /// Builds from arbitrary (exponent, coefficient) pairs; collects and prunes.
    LaurentPoly(std::initializer_list<Term> ts) {
        for (const auto& t : ts) add_term(t.first, t.second);
    }

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }

    static LaurentPoly monomial(int exp, Rational c = Rational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.emplace_back(exp, std::move(c));
        return p;
    }

    /// q^e
    static LaurentPoly q(int e = 1) { return monomial(e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int min_exp() const { require_nonzero(); return terms_.front().first; }
    int max_exp() const { require_nonzero(); return terms_.back().first; }

    Rational coeff(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exp) return it->second;
        return Rational(0);
    }

    void add_term(int exp, const Rational& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exp) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.emplace(it, exp, c);
        }
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_back(e, -c);
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        // linear merge of two sorted term lists
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first) r.terms_.push_back(*ia++);
            else if (ib->first < ia->first) r.terms_.push_back(*ib++);
            else {
                Rational c = ia->second + ib->second;
                if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia; ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        // accumulate b shifted by each term of a; term lists stay short
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }

    LaurentPoly scaled(const Rational& f) const {
        LaurentPoly r;
        if (f.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, c * f);
        return r;
    }

    /// q-exponent shift: p * q^e.
    LaurentPoly shifted(int e) const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& [ex, c] : terms_) r.terms_.emplace_back(ex + e, c);
        return r;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) throw std::domain_error("LaurentPoly::pow: negative exponent");
        LaurentPoly r = one();
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// JSON object {"<exp>": "num/den", ...}; zero polynomial is {}.
    nlohmann::json to_json() const {
        auto j = nlohmann::json::object();
        for (const auto& [e, c] : terms_) j[std::to_string(e)] = c.str();
        return j;
    }

    static LaurentPoly from_json(const nlohmann::json& j) {
        LaurentPoly p;
        for (auto it = j.begin(); it != j.end(); ++it)
            p.add_term(std::stoi(it.key()), Rational::parse(it.value().get<std::string>()));
        return p;
    }

    /// Plain-text rendering, e.g. "q^-2 - 2 + q^2"; zero renders as "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { out += "-"; a = -a; }
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool unit_coeff = a.is_one() && e != 0;
            if (!unit_coeff) {
                out += a.den() == 1 ? a.num().str() : a.str();
                if (e != 0) out += "*";
            }
            if (e == 1) out += "q";
            else if (e != 0) out += "q^" + std::to_string(e);
        }
        return out;
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no exponent range");
    }

    std::vector<Term> terms_;  // sorted by exponent, coefficients nonzero
};

/// Signals a failed exact division; carries the remainder for diagnostics.
/// Verification code treats this as "identity does not hold", not as a crash.
class NotDivisibleError : public std::runtime_error {
public:
    NotDivisibleError(LaurentPoly rem, const std::string& what)
        : std::runtime_error(what), remainder(std::move(rem)) {}
    LaurentPoly remainder;
};

/// Exact quotient num/den in Q[q, q^-1]. Throws NotDivisibleError if den
/// does not divide num exactly; division by zero is a domain error.
inline LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("exact_div: zero divisor");
    if (num.is_zero()) return {};
    // Shift both so they become ordinary polynomials, then long-divide from the top.
    const int na = num.min_exp(), nb = den.min_exp();
    LaurentPoly r = num.shifted(-na);
    const LaurentPoly d = den.shifted(-nb);
    const int dd = d.max_exp();
    const Rational& lead = d.terms().back().second;
    LaurentPoly quot;
    while (!r.is_zero() && r.max_exp() >= dd) {
        const int qe = r.max_exp() - dd;
        const Rational qc = r.terms().back().second / lead;
        quot.add_term(qe, qc);
        for (const auto& [e, c] : d.terms()) r.add_term(e + qe, -(c * qc));
    }
    if (!r.is_zero())
        throw NotDivisibleError(r.shifted(na), "exact_div: nonzero remainder");
    return quot.shifted(na - nb);
}

/// q + q^-1
inline const LaurentPoly& q_plus_qinv() {
    static const LaurentPoly p{{1, 1}, {-1, 1}};
    return p;
}

/// q - q^-1
inline const LaurentPoly& q_minus_qinv() {
    static const LaurentPoly p{{1, 1}, {-1, -1}};
    return p;
}

/// Brace bracket {n}_q = (q^-n - (-1)^n q^n) / (q + q^-1).
///
/// The division is always exact; a failure indicates an arithmetic bug and
/// is reported as an internal error. Defined for every integer n (negative
/// arguments arise from prefix sums of balanced words).
inline LaurentPoly q_brace(int n) {
    const int sign = (n % 2 == 0) ? -1 : 1;
    LaurentPoly numer = LaurentPoly::q(-n) + LaurentPoly::monomial(n, sign);
    try {
        return exact_div(numer, q_plus_qinv());
    } catch (const NotDivisibleError&) {
        throw std::logic_error("q_brace: (q + q^-1) must divide q^-n - (-1)^n q^n");
    }
}

/// Quantum bracket [n]_q = (q^n - q^-n) / (q - q^-1).
inline LaurentPoly q_bracket(int n) {
    LaurentPoly numer = LaurentPoly::q(n) - LaurentPoly::q(-n);
    try {
        return exact_div(numer, q_minus_qinv());
    } catch (const NotDivisibleError&) {
        throw std::logic_error("q_bracket: (q - q^-1) must divide q^n - q^-n");
    }
}

}  // namespace qshuffle
