#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordpower/errors.hpp"
#include "wordpower/exponent.hpp"
#include "wordpower/repetition.hpp"
#include "wordpower/word.hpp"

namespace wordpower {

/// Letter-to-word table from the alphabet {0..From-1} into words over
/// {0..To-1}. Letters without an image are outside the domain.
template <std::uint8_t From, std::uint8_t To>
class Morphism {
public:
    using domain_word = BasicWord<From>;
    using image_word = BasicWord<To>;

    Morphism() = default;

    /// Full table: images[a] is the image of letter a.
    explicit Morphism(const std::array<image_word, From>& images) {
        for (std::size_t a = 0; a < From; ++a) {
            images_[a] = images[a];
        }
    }

    [[nodiscard]] bool in_domain(std::uint8_t a) const noexcept { return a < From && images_[a].has_value(); }

    [[nodiscard]] const image_word& image(std::uint8_t a) const {
        if (!in_domain(a)) {
            throw PreconditionError("letter " + std::to_string(a) + " is outside the morphism domain");
        }
        return *images_[a];
    }

    [[nodiscard]] Morphism with_image(std::uint8_t a, image_word img) const {
        if (a >= From) {
            throw PreconditionError("letter " + std::to_string(a) + " is outside the alphabet");
        }
        Morphism m = *this;
        m.images_[a] = std::move(img);
        return m;
    }

    /// True when image(a) starts with a and is longer than one letter.
    [[nodiscard]] bool prolongable(std::uint8_t a) const noexcept
        requires(From == To)
    {
        return in_domain(a) && images_[a]->size() >= 2 && (*images_[a])[0] == a;
    }

    [[nodiscard]] image_word operator()(const domain_word& w) const {
        std::size_t total = 0;
        for (auto a : w) {
            total += image(a).size();
        }
        std::vector<std::uint8_t> out;
        out.reserve(total);
        for (auto a : w) {
            const auto& img = *images_[a];
            out.insert(out.end(), img.begin(), img.end());
        }
        return image_word::from_trusted(std::move(out));
    }

    [[nodiscard]] std::string str() const {
        std::string s;
        for (std::size_t a = 0; a < From; ++a) {
            if (images_[a]) {
                s += std::to_string(a) + ":" + images_[a]->str() + "\n";
            }
        }
        return s;
    }

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    std::array<std::optional<image_word>, From> images_{};
};

template <std::uint8_t From, std::uint8_t To>
[[nodiscard]] BasicWord<To> apply(const Morphism<From, To>& m, const BasicWord<From>& w) {
    return m(w);
}

/// m2 after m1, built letterwise.
template <std::uint8_t A, std::uint8_t B, std::uint8_t C>
[[nodiscard]] Morphism<A, C> compose(const Morphism<B, C>& m2, const Morphism<A, B>& m1) {
    Morphism<A, C> out;
    for (std::uint8_t a = 0; a < A; ++a) {
        if (m1.in_domain(a)) {
            out = out.with_image(a, m2(m1.image(a)));
        }
    }
    return out;
}

/// `m` applied `n` times to `seed`. Throws CapExceeded once an iterate
/// grows past length_cap().
template <std::uint8_t K>
[[nodiscard]] BasicWord<K> iterate(const Morphism<K, K>& m, BasicWord<K> seed, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t next = 0;
        for (auto a : seed) {
            next += m.image(a).size();
        }
        require_within_cap(next, "morphism iterate");
        seed = m(seed);
    }
    return seed;
}

/// First `n` letters of the fixed point m^omega(a).
template <std::uint8_t K>
[[nodiscard]] BasicWord<K> fixed_point_prefix(const Morphism<K, K>& m, std::uint8_t a, std::size_t n) {
    if (!m.prolongable(a)) {
        throw PreconditionError("morphism is not prolongable on letter " + std::to_string(a));
    }
    require_within_cap(n, "fixed point prefix");
    BasicWord<K> w{static_cast<int>(a)};
    // m^k(a) is a prefix of m^{k+1}(a); only the prefix of length n matters.
    while (w.size() < n) {
        w = m(w.prefix(n));
    }
    return w.prefix(n);
}

/// Parses "letter:image" lines. Blank lines and lines starting with '#'
/// are ignored; a repeated letter is an error.
template <std::uint8_t From, std::uint8_t To>
[[nodiscard]] Morphism<From, To> parse_morphism(std::string_view text) {
    Morphism<From, To> m;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) {
            line_end = text.size();
        }
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty() && line.front() != '#') {
            if (line.size() < 2 || line[1] != ':' || line[0] < '0' || line[0] >= static_cast<char>('0' + From)) {
                throw ParseError("expected 'letter:image'", line_start);
            }
            const auto a = static_cast<std::uint8_t>(line[0] - '0');
            if (m.in_domain(a)) {
                throw ParseError("duplicate image for letter " + std::string(1, line[0]), line_start);
            }
            try {
                m = m.with_image(a, BasicWord<To>::parse(line.substr(2)));
            } catch (const ParseError& e) {
                throw ParseError("invalid image letter", line_start + 2 + e.position());
            }
        }
        if (line_end == text.size()) {
            break;
        }
        line_start = line_end + 1;
    }
    return m;
}

/// Thue-Morse morphism 0 -> 01, 1 -> 10.
[[nodiscard]] const Morphism<2, 2>& mu();
/// mu composed with itself.
[[nodiscard]] const Morphism<2, 2>& mu_squared();

/// 4-uniform morphism whose fixed point codes the word a.
[[nodiscard]] const Morphism<5, 5>& morphism_h();
/// Parsing morphism of h^omega(0) = 0 f(h^omega(0)) tail.
[[nodiscard]] const Morphism<5, 5>& morphism_f();
/// Coding {0,1,2} -> 0, {3,4} -> 1.
[[nodiscard]] const Morphism<5, 2>& coding_g();

/// mu^k(w)
[[nodiscard]] Word mu_power(const Word& w, std::size_t k);

/// y with mu(y) == w, when w splits into 2-blocks each 01 or 10.
[[nodiscard]] std::optional<Word> mu_decode(const Word& w);

/// Given an occurrence of exponent > 2 and even period p in mu(w), finds an
/// occurrence in w of period p/2 and length >= ceil(length/2). Returns the
/// leftmost maximal run that qualifies.
[[nodiscard]] PowerOccurrence descend_power(const Word& w, const PowerOccurrence& occ);

struct Factorization {
    Word u;
    Word y;
    Word v;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// The five words allowed as the outer parts of a factorization.
[[nodiscard]] const std::array<Word, 5>& factorization_borders();

/// Every (u, y, v) with x == u mu(y) v, u and v in {e,0,1,00,11} and y
/// threshold-power-free, ordered by (|u|, |v|). Requires 2 < threshold <= 7/3
/// and x threshold-power-free.
[[nodiscard]] std::vector<Factorization> factorize_ks(const Word& x, const Exponent& threshold);

}  // namespace wordpower
