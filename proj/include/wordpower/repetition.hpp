#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "wordpower/exponent.hpp"
#include "wordpower/word.hpp"

namespace wordpower {

/// A factor w[start, start+length) with letter[i] == letter[i+period]
/// throughout.
struct PowerOccurrence {
    std::size_t start = 0;
    std::size_t period = 1;
    std::size_t length = 1;

    [[nodiscard]] Exponent exponent() const {
        return {static_cast<std::int64_t>(length), static_cast<std::int64_t>(period)};
    }
    [[nodiscard]] std::size_t end() const noexcept { return start + length; }

    friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
    friend auto operator<=>(const PowerOccurrence&, const PowerOccurrence&) = default;
};

/// True when `occ` lies inside `w` and has the claimed period.
[[nodiscard]] bool is_valid_occurrence(const Word& w, const PowerOccurrence& occ) noexcept;

/// Least p >= 1 such that w[i] == w[i+p] wherever both are defined.
[[nodiscard]] std::size_t smallest_period(const Word& w);

/// |w| / smallest_period(w).
[[nodiscard]] Exponent exponent_of(const Word& w);

struct MaxExponent {
    Exponent exponent;
    PowerOccurrence witness;
};

/// Largest exponent over all nonempty factors. Ties go to the smallest
/// start, then the smallest period.
[[nodiscard]] MaxExponent max_exponent(const Word& w);

/// Leftmost occurrence (then shortest period) whose exponent reaches
/// `threshold` (strictly exceeds it when `strict`). The witness is extended
/// to the full maximal run at that start and period.
[[nodiscard]] std::optional<PowerOccurrence> find_power(const Word& w, const Exponent& threshold, bool strict);

/// plus == false: no factor of exponent >= threshold.
/// plus == true:  no factor of exponent >  threshold ("2", plus is overlap-free).
[[nodiscard]] bool is_power_free(const Word& w, const Exponent& threshold, bool plus);
[[nodiscard]] inline bool is_power_free(const Word& w, const PowerThreshold& t) {
    return is_power_free(w, t.value, t.plus);
}

[[nodiscard]] inline bool is_overlap_free(const Word& w) { return is_power_free(w, 2, true); }

/// Maximal occurrences with the given period (not extendable left or right
/// at that period), each of length > period, sorted by start.
[[nodiscard]] std::vector<PowerOccurrence> maximal_runs(const Word& w, std::size_t period);

/// Every maximal occurrence meeting the threshold, over all periods, sorted
/// by (start, period).
[[nodiscard]] std::vector<PowerOccurrence> list_repetitions(const Word& w, const Exponent& min_exponent,
                                                            bool strict);

/// True when some suffix of `w` has exponent strictly above 2.
[[nodiscard]] bool ends_with_overlap(const Word& w);

}  // namespace wordpower
