/**
 * @file pretty.hpp
 * @brief Human-readable rendering of elements, with brace-product coefficients.
 *
 * Coefficients that factor exactly as +/- {2}_q^a {3}_q^b ... are rendered in
 * that form (bounded search: brackets {k}_q for 2 <= k <= 8, multiplicity
 * <= 6); anything else falls back to the raw Laurent form in parentheses.
 */
#pragma once

#include "qshuffle/free_element.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

struct BraceFactorization {
    int sign = 1;                               // +1 or -1
    std::vector<std::pair<int, int>> factors;   // (k, multiplicity), k descending
};

/// Tries to factor p as +/- prod {k}_q^{m_k}, k in [2, 8], m_k in [0, 6].
/// An empty factor list means p == +/-1.
inline std::optional<BraceFactorization> factor_braces(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    BraceFactorization out;
    LaurentPoly rest = p;
    // every brace product has lowest-exponent coefficient +1
    if (rest.terms().front().second.sign() < 0) {
        out.sign = -1;
        rest = -rest;
    }
    constexpr int kMaxBracket = 8, kMaxMult = 6;
    auto search = [&](auto&& self, const LaurentPoly& r, int k,
                      std::vector<std::pair<int, int>>& acc) -> bool {
        if (r.is_one()) return true;
        if (k < 2) return false;
        const LaurentPoly bk = q_brace(k);
        LaurentPoly cur = r;
        std::vector<LaurentPoly> stack{cur};
        int mult = 0;
        while (mult < kMaxMult) {
            try {
                cur = exact_div(cur, bk);
            } catch (const NotDivisibleError&) {
                break;
            }
            ++mult;
            stack.push_back(cur);
        }
        for (int m = mult; m >= 0; --m) {       // prefer the largest power
            if (m > 0) acc.emplace_back(k, m);
            if (self(self, stack[m], k - 1, acc)) return true;
            if (m > 0) acc.pop_back();
        }
        return false;
    };
    if (!search(search, rest, kMaxBracket, out.factors)) return std::nullopt;
    return out;
}

inline std::string brace_product_str(const BraceFactorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (const auto& [k, m] : f.factors) {
        s += "{" + std::to_string(k) + "}_q";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

/// Renders one coefficient: brace-product form when available, else raw.
inline std::string pretty_coeff(const LaurentPoly& p) {
    if (auto f = factor_braces(p)) {
        std::string s = f->sign < 0 ? "-" : "";
        return s + brace_product_str(*f);
    }
    return "(" + p.str() + ")";
}

/// Renders an element in canonical word order, e.g.
/// "{2}_q^2 xyxy - {3}_q{2}_q^2 xxyy".
inline std::string pretty_element(const FreeElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        auto f = factor_braces(c);
        bool neg = f && f->sign < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string coeff;
        if (f) {
            coeff = brace_product_str(*f);
            if (coeff == "1" && !w.empty()) coeff.clear();
        } else {
            coeff = "(" + c.str() + ")";
        }
        out += coeff;
        if (!w.empty()) {
            if (!coeff.empty()) out += " ";
            out += w.str();
        }
    }
    return out;
}

}  // namespace qshuffle
