#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordpower/errors.hpp"

namespace wordpower {

/// Immutable finite word over the alphabet {0, ..., K-1}, one byte per letter.
///
/// All operations return new values; there are no mutators after
/// construction. The external text form is one ASCII digit per letter.
template <std::uint8_t K>
class BasicWord {
    static_assert(K >= 2 && K <= 10, "letters are written as single decimal digits");

public:
    using letter_type = std::uint8_t;
    static constexpr std::uint8_t alphabet_size = K;

    BasicWord() = default;

    explicit BasicWord(std::vector<letter_type> letters) : letters_(std::move(letters)) {
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_[i] >= K) {
                throw ParseError("letter out of alphabet", i);
            }
        }
    }

    BasicWord(std::initializer_list<int> letters) {
        letters_.reserve(letters.size());
        std::size_t i = 0;
        for (int a : letters) {
            if (a < 0 || a >= K) {
                throw ParseError("letter out of alphabet", i);
            }
            letters_.push_back(static_cast<letter_type>(a));
            ++i;
        }
    }

    /// Parses the ASCII form; any character outside '0'..'K-1' is rejected
    /// with the offending index.
    static BasicWord parse(std::string_view text) {
        std::vector<letter_type> out;
        out.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < '0' || c >= static_cast<char>('0' + K)) {
                throw ParseError(std::string("invalid character '") + c + "'", i);
            }
            out.push_back(static_cast<letter_type>(c - '0'));
        }
        BasicWord w;
        w.letters_ = std::move(out);
        return w;
    }

    [[nodiscard]] std::string str() const {
        std::string s(letters_.size(), '0');
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            s[i] = static_cast<char>('0' + letters_[i]);
        }
        return s;
    }

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] letter_type operator[](std::size_t i) const noexcept { return letters_[i]; }
    [[nodiscard]] std::span<const letter_type> letters() const noexcept { return letters_; }
    [[nodiscard]] auto begin() const noexcept { return letters_.cbegin(); }
    [[nodiscard]] auto end() const noexcept { return letters_.cend(); }

    [[nodiscard]] BasicWord substr(std::size_t pos, std::size_t len) const {
        if (pos > size()) {
            throw std::out_of_range("substr start past end of word");
        }
        len = std::min(len, size() - pos);
        return from_trusted({letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                             letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)});
    }
    [[nodiscard]] BasicWord prefix(std::size_t len) const { return substr(0, len); }
    [[nodiscard]] BasicWord suffix(std::size_t len) const {
        len = std::min(len, size());
        return substr(size() - len, len);
    }
    [[nodiscard]] BasicWord drop(std::size_t len) const {
        return substr(std::min(len, size()), size());
    }

    [[nodiscard]] bool starts_with(const BasicWord& p) const noexcept {
        return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
    }
    [[nodiscard]] bool ends_with(const BasicWord& s) const noexcept {
        return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
    }

    /// Index of the first occurrence of `needle` at or after `from`, or npos.
    [[nodiscard]] std::size_t find(const BasicWord& needle, std::size_t from = 0) const noexcept {
        if (needle.size() > size()) {
            return npos;
        }
        for (std::size_t i = from; i + needle.size() <= size(); ++i) {
            if (std::equal(needle.begin(), needle.end(), begin() + static_cast<std::ptrdiff_t>(i))) {
                return i;
            }
        }
        return npos;
    }

    friend BasicWord operator+(const BasicWord& a, const BasicWord& b) {
        std::vector<letter_type> out;
        out.reserve(a.size() + b.size());
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
        return from_trusted(std::move(out));
    }

    friend bool operator==(const BasicWord&, const BasicWord&) = default;
    friend auto operator<=>(const BasicWord&, const BasicWord&) = default;

    /// Builds a word from letters already known to be in range.
    static BasicWord from_trusted(std::vector<letter_type> letters) noexcept {
        BasicWord w;
        w.letters_ = std::move(letters);
        return w;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<letter_type> letters_;
};

using Word = BasicWord<2>;
using Alphabet5Word = BasicWord<5>;

[[nodiscard]] inline Word parse_word(std::string_view text) { return Word::parse(text); }
[[nodiscard]] inline std::string format_word(const Word& w) { return w.str(); }

/// Letterwise 0 <-> 1 swap.
[[nodiscard]] Word complement(const Word& w);

/// The rotation of `w` starting at index `shift`.
[[nodiscard]] Word rotate(const Word& w, std::size_t shift);

/// All distinct rotations of `w`, sorted lexicographically.
[[nodiscard]] std::vector<Word> conjugates(const Word& w);

/// The word of the given length whose letters are the binary digits of
/// `index`, most significant first.
[[nodiscard]] Word word_from_index(std::uint64_t index, std::size_t length);

/// Lazy range over every binary word of `length`, lexicographic order.
[[nodiscard]] inline auto enumerate_words(std::size_t length) {
    if (length >= 63) {
        throw std::length_error("enumeration length must be below 63");
    }
    return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << length) |
           std::views::transform([length](std::uint64_t i) { return word_from_index(i, length); });
}

/// Lazy range over the words of `length` satisfying `keep`, lexicographic order.
template <typename Predicate>
[[nodiscard]] auto enumerate_words(std::size_t length, Predicate keep) {
    return enumerate_words(length) | std::views::filter(std::move(keep));
}

}  // namespace wordpower
