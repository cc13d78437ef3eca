/**
 * @file word.hpp
 * @brief Words over the two-letter alphabet {x, y}, plus Catalan combinatorics.
 *
 * A word is bit-packed into a single uint64: key = (1 << len) | bits, with
 * the first letter in the most significant bit position (x = 0, y = 1).
 * Comparing keys as integers is exactly length-lex order with x < y, which
 * is the canonical order used everywhere for serialization.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

enum class Letter : uint8_t { X = 0, Y = 1 };

inline char letter_char(Letter l) { return l == Letter::X ? 'x' : 'y'; }
inline Letter letter_swap(Letter l) { return l == Letter::X ? Letter::Y : Letter::X; }

/// Raised when an operation would produce a word longer than the configured cap.
class CapExceededError : public std::length_error {
public:
    explicit CapExceededError(int len)
        : std::length_error("word length " + std::to_string(len) + " exceeds cap") {}
};

/// Word-length cap, default 24. Overridable via set_word_cap or the
/// QCATALAN_CAP environment variable; clamped to [1, 31] so that pairs
/// of word keys pack into 64 bits for the shuffle memo.
inline int& word_cap_ref() {
    static int cap = [] {
        int c = 24;
        if (const char* env = std::getenv("QCATALAN_CAP")) {
            int v = std::atoi(env);
            if (v >= 1) c = v;
        }
        return c < 1 ? 1 : (c > 31 ? 31 : c);
    }();
    return cap;
}

inline int word_cap() { return word_cap_ref(); }

inline void set_word_cap(int cap) {
    if (cap < 1 || cap > 31) throw std::invalid_argument("word cap must be in [1, 31]");
    word_cap_ref() = cap;
}

class Word {
public:
    Word() = default;  // empty word, the algebra unit

    explicit Word(std::string_view s) {
        check_length(static_cast<int>(s.size()));
        uint64_t bits = 0;
        for (char ch : s) {
            if (ch != 'x' && ch != 'y') throw std::invalid_argument("Word: letters must be 'x' or 'y'");
            bits = (bits << 1) | static_cast<uint64_t>(ch == 'y');
        }
        key_ = (uint64_t{1} << s.size()) | bits;
    }

    static Word single(Letter l) { return Word((uint64_t{1} << 1) | static_cast<uint64_t>(l)); }
    static Word from_key(uint64_t key) {
        if (key == 0) throw std::invalid_argument("Word: invalid key");
        return Word(key);
    }

    int size() const { return std::bit_width(key_) - 1; }
    bool empty() const { return key_ == 1; }
    uint64_t key() const { return key_; }

    /// Letter at position i, counted from the front (0-based).
    Letter at(int i) const { return static_cast<Letter>((bits() >> (size() - 1 - i)) & 1u); }
    Letter front() const { return at(0); }
    Letter back() const { return static_cast<Letter>(bits() & 1u); }

    Word pushed_front(Letter l) const {
        const int n = size();
        check_length(n + 1);
        return Word((uint64_t{1} << (n + 1)) | (static_cast<uint64_t>(l) << n) | bits());
    }

    Word pushed_back(Letter l) const {
        const int n = size();
        check_length(n + 1);
        return Word((uint64_t{1} << (n + 1)) | (bits() << 1) | static_cast<uint64_t>(l));
    }

    Word popped_front() const {
        const int n = size();
        return Word((uint64_t{1} << (n - 1)) | (bits() & ((uint64_t{1} << (n - 1)) - 1)));
    }

    Word popped_back() const {
        const int n = size();
        return Word((uint64_t{1} << (n - 1)) | (bits() >> 1));
    }

    /// New word with letter l inserted so that it lands at position pos.
    Word inserted(int pos, Letter l) const {
        const int n = size();
        check_length(n + 1);
        const uint64_t right_len = static_cast<uint64_t>(n - pos);
        const uint64_t right = bits() & ((uint64_t{1} << right_len) - 1);
        const uint64_t left = bits() >> right_len;
        const uint64_t nb = (left << (right_len + 1)) | (static_cast<uint64_t>(l) << right_len) | right;
        return Word((uint64_t{1} << (n + 1)) | nb);
    }

    friend Word concat(Word a, Word b) {
        const int n = a.size() + b.size();
        check_length(n);
        return Word((uint64_t{1} << n) | (a.bits() << b.size()) | b.bits());
    }

    /// Reverses the letter sequence and exchanges x <-> y (word-level zeta).
    Word reverse_swap() const {
        const int n = size();
        uint64_t nb = 0;
        uint64_t b = bits();
        for (int i = 0; i < n; ++i) {
            nb = (nb << 1) | ((b & 1u) ^ 1u);
            b >>= 1;
        }
        return Word((uint64_t{1} << n) | nb);
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (int i = 0; i < size(); ++i) s += letter_char(at(i));
        return s;
    }

    friend bool operator==(Word a, Word b) { return a.key_ == b.key_; }
    friend bool operator!=(Word a, Word b) { return a.key_ != b.key_; }
    /// Length-lex order with x < y.
    friend bool operator<(Word a, Word b) { return a.key_ < b.key_; }

private:
    explicit Word(uint64_t key) : key_(key) {}

    uint64_t bits() const { return key_ ^ (uint64_t{1} << size()); }

    static void check_length(int len) {
        if (len > word_cap()) throw CapExceededError(len);
    }

    uint64_t key_ = 1;
};

/// Running sums of letter weights with x = +1, y = -1; empty word gives ().
inline std::vector<int> bar_prefix_sums(Word w) {
    std::vector<int> out;
    out.reserve(w.size());
    int s = 0;
    for (int i = 0; i < w.size(); ++i) {
        s += w.at(i) == Letter::X ? 1 : -1;
        out.push_back(s);
    }
    return out;
}

inline int word_weight(Word w) {
    int s = 0;
    for (int i = 0; i < w.size(); ++i) s += w.at(i) == Letter::X ? 1 : -1;
    return s;
}

inline bool is_balanced(Word w) { return word_weight(w) == 0; }

/// Balanced with every prefix sum >= 0; the empty word is Catalan.
inline bool is_catalan(Word w) {
    int s = 0;
    for (int i = 0; i < w.size(); ++i) {
        s += w.at(i) == Letter::X ? 1 : -1;
        if (s < 0) return false;
    }
    return s == 0;
}

/// All Catalan words of length 2n, in length-lex order with x < y.
/// The order is part of the public contract.
inline std::vector<Word> enumerate_catalan(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_catalan: n must be >= 0");
    if (2 * n > word_cap()) throw CapExceededError(2 * n);
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self, Word cur, int height, int remaining) -> void {
        if (remaining == 0) {
            if (height == 0) out.push_back(cur);
            return;
        }
        // x first keeps lex order; prune branches that cannot return to 0
        if (height + 1 <= remaining - 1) self(self, cur.pushed_back(Letter::X), height + 1, remaining - 1);
        if (height >= 1) self(self, cur.pushed_back(Letter::Y), height - 1, remaining - 1);
    };
    rec(rec, w, 0, 2 * n);
    return out;
}

}  // namespace qshuffle
