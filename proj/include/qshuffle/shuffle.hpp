/**
 * @file shuffle.hpp
 * @brief Braided q-shuffle products on the free algebra.
 *
 * The product is parameterized by a crossing table chi(a, b), one signed
 * monomial per ordered letter pair. Two instances are provided:
 *
 *   Super       chi(x,x) = chi(y,y) = -q^2,  chi(x,y) = chi(y,x) = -q^-2
 *   Admissible  chi(x,x) = chi(y,y) = -q^2,  chi(x,y) = chi(y,x) = +q^-2
 *
 * Normative evaluation is the left-letter peeling recursion
 *
 *   u * v = u1((u2..ur) * v) + [prod_i chi(u_i, v1)] v1(u * (v2..vs)),
 *
 * with 1 * v = v * 1 = v. The letter-insertion expansions and the
 * right-peeling recursion live in test code as independent oracles.
 */
#pragma once

#include "qshuffle/free_element.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qshuffle {

enum class BraidingKind { Admissible, Super };

inline std::string braiding_name(BraidingKind k) {
    return k == BraidingKind::Admissible ? "admissible" : "super";
}

class BraidingTable {
public:
    static BraidingTable make(BraidingKind kind) {
        BraidingTable t;
        t.kind_ = kind;
        const LaurentPoly mq2 = LaurentPoly::monomial(2, -1);
        const LaurentPoly qm2 = LaurentPoly::q(-2);
        t.chi_[idx(Letter::X, Letter::X)] = mq2;
        t.chi_[idx(Letter::Y, Letter::Y)] = mq2;
        const LaurentPoly cross = kind == BraidingKind::Super ? qm2.scaled(-1) : qm2;
        t.chi_[idx(Letter::X, Letter::Y)] = cross;
        t.chi_[idx(Letter::Y, Letter::X)] = cross;
        return t;
    }

    const LaurentPoly& chi(Letter a, Letter b) const { return chi_[idx(a, b)]; }
    BraidingKind kind() const { return kind_; }
    std::string name() const { return braiding_name(kind_); }

private:
    static int idx(Letter a, Letter b) {
        return (static_cast<int>(a) << 1) | static_cast<int>(b);
    }

    BraidingKind kind_ = BraidingKind::Super;
    LaurentPoly chi_[4];
};

inline BraidingTable make_braiding(BraidingKind kind) { return BraidingTable::make(kind); }

/// Evaluates shuffle products for one braiding, memoizing word-level results.
///
/// Word pairs with combined length <= memo_cap are cached (cached and
/// uncached results are identical; the cap only bounds memory). Not
/// thread-safe: concurrent callers use one Shuffler each.
class Shuffler {
public:
    static constexpr int kDefaultMemoCap = 12;

    explicit Shuffler(BraidingKind kind, int memo_cap = kDefaultMemoCap)
        : table_(BraidingTable::make(kind)), memo_cap_(memo_cap) {}

    explicit Shuffler(BraidingTable table, int memo_cap = kDefaultMemoCap)
        : table_(std::move(table)), memo_cap_(memo_cap) {}

    const BraidingTable& table() const { return table_; }
    std::size_t memo_size() const { return memo_.size(); }
    void clear_memo() { memo_.clear(); }

    FreeElement shuffle_words(Word u, Word v) {
        if (u.empty()) return FreeElement::of_word(v);
        if (v.empty()) return FreeElement::of_word(u);
        const int total = u.size() + v.size();
        if (total > word_cap()) throw CapExceededError(total);

        const bool cacheable = total <= memo_cap_;
        const uint64_t key = (u.key() << 32) | v.key();
        if (cacheable) {
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }

        // u1((u2..ur) * v)
        FreeElement result = shuffle_words(u.popped_front(), v).prepended(u.front());
        // crossing factor prod_i chi(u_i, v1)
        LaurentPoly factor = LaurentPoly::one();
        const Letter v1 = v.front();
        for (int i = 0; i < u.size(); ++i) factor *= table_.chi(u.at(i), v1);
        result += shuffle_words(u, v.popped_front()).prepended(v1).scaled(factor);

        if (cacheable) memo_.emplace(key, result);
        return result;
    }

    /// Bilinear extension to elements.
    FreeElement shuffle_elems(const FreeElement& a, const FreeElement& b) {
        FreeElement r;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms())
                r += shuffle_words(wa, wb).scaled(ca * cb);
        return r;
    }

    /// k-fold shuffle power; a^0 is the unit.
    FreeElement shuffle_power(const FreeElement& a, int k) {
        if (k < 0) throw std::invalid_argument("shuffle_power: negative exponent");
        FreeElement r = FreeElement::unit();
        for (int i = 0; i < k; ++i) r = shuffle_elems(r, a);
        return r;
    }

private:
    BraidingTable table_;
    int memo_cap_;
    std::unordered_map<uint64_t, FreeElement> memo_;
};

}  // namespace qshuffle
