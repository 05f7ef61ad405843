#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "wordpower/exponent.hpp"
#include "wordpower/word.hpp"

namespace wordpower {

// Infinite words are exposed as prefix functions: requesting n letters and
// then m >= n letters agrees on the first n. Every request is checked
// against length_cap().

/// Thue-Morse word t = mu^omega(0).
[[nodiscard]] Word word_t(std::size_t n);

/// s = 001001 followed by the complement of t.
[[nodiscard]] Word word_s(std::size_t n);

/// |A_k| = (4^{k+1} + 3*4^k - 1) / 3.
[[nodiscard]] std::size_t word_a_length(std::size_t k);

/// A_0 = 00, A_{k+1} = 0 mu^2(A_k).
[[nodiscard]] Word word_a_finite(std::size_t k);

/// Prefix of the limit of the A_k.
[[nodiscard]] Word word_a(std::size_t n);

/// g_e(w) = w, g_{0b}(w) = mu^2(g_b(w)), g_{1b}(w) = 0 mu^2(g_b(w)).
[[nodiscard]] Word g_b(const Word& bits, const Word& w);

/// Eventually periodic bit sequence prefix (period)^omega.
struct BitStream {
    Word prefix;
    Word period;

    /// Grammar `[01]*\([01]+\)`, e.g. "01(1)".
    static BitStream parse(std::string_view text);
    [[nodiscard]] std::string str() const { return prefix.str() + "(" + period.str() + ")"; }
    [[nodiscard]] std::uint8_t bit(std::size_t i) const noexcept {
        return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
    }
};

/// Prefix of w_b = lim g_{b_1...b_k}(00).
[[nodiscard]] Word word_wb(const BitStream& bits, std::size_t n);

/// Prefix of g(h^omega(0)), the 4-automatic presentation of a.
[[nodiscard]] Word word_a_automatic(std::size_t n);

struct BetaParams {
    Exponent alpha;
    std::size_t s = 3;
    std::size_t r = 3;
    std::size_t t = 1;
    Exponent beta;

    friend bool operator==(const BetaParams&, const BetaParams&) = default;
};

/// r = floor(alpha + 1); t is the largest positive integer with
/// r - t/2^s > alpha such that mu^s(0) with its first t letters removed
/// begins with 00; beta = r - t/2^s. Requires alpha > 2 and s >= 3. Throws
/// PreconditionError when no such t exists.
[[nodiscard]] BetaParams beta_params(const Exponent& alpha, std::size_t s);

/// Prefix of lim C_k where C_0 = 00 and C_{k+1} is mu^s(0^{r-2} C_k) with
/// its first t letters removed.
[[nodiscard]] Word beta_word(const BetaParams& params, std::size_t n);

/// Generator by CLI name: "t", "s", "a", "a-automatic", "wb:<bits>",
/// "beta:<alpha>:<s>". Throws std::invalid_argument for unknown names.
[[nodiscard]] Word generate(std::string_view name, std::size_t n);

/// True when `name` parses as a generator.
[[nodiscard]] bool is_generator_name(std::string_view name);

}  // namespace wordpower
