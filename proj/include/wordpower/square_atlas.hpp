#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "wordpower/word.hpp"

namespace wordpower {

enum class AtlasFamily { A, B, None };

[[nodiscard]] std::string_view to_string(AtlasFamily f) noexcept;

/// Base squares {00, 11, 010010, 101101}.
[[nodiscard]] const std::array<Word, 4>& base_set_a();
/// Base squares {001001, 110110}.
[[nodiscard]] const std::array<Word, 2>& base_set_b();

/// When family != None, mu^level(base) is the queried word.
struct AtlasMembership {
    AtlasFamily family = AtlasFamily::None;
    std::size_t level = 0;
    Word base;

    friend bool operator==(const AtlasMembership&, const AtlasMembership&) = default;
};

/// Decodes through mu until a base word is reached or decoding fails.
[[nodiscard]] AtlasMembership atlas_membership(const Word& w);

/// Forward generation: every mu^k(base) of length <= max_length for the
/// bases of `family`, sorted by (length, word).
[[nodiscard]] std::vector<Word> atlas_members(AtlasFamily family, std::size_t max_length);

struct SquareOccurrence {
    std::size_t position = 0;
    Word square;

    friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Every factor xx of w, sorted by (position, length).
[[nodiscard]] std::vector<SquareOccurrence> squares_in(const Word& w);

/// w == xx for some nonempty x.
[[nodiscard]] bool is_square(const Word& w) noexcept;

/// Whether an overlap-free square can occur in an infinite overlap-free
/// binary word, decided by membership in the A/B families. Throws
/// PreconditionError for non-squares and words containing an overlap.
[[nodiscard]] bool is_extendable_square(const Word& w);

/// Largest L <= cap such that some overlap-free word of length L starts
/// with w. Depth-first search; returns cap as soon as it is reached.
[[nodiscard]] std::size_t max_overlap_free_extension(const Word& w, std::size_t cap);

/// For z in {011011, 100100} and a in {0,1}: mu^k(z) a contains an overlap.
[[nodiscard]] bool check_extension_lemma(std::size_t k);

}  // namespace wordpower
