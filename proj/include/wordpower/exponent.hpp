#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordpower {

/// Exact positive rational p/q, kept in lowest terms.
class Exponent {
public:
    constexpr Exponent() = default;
    constexpr Exponent(std::int64_t value) : num_(value), den_(1) { validate(); }  // NOLINT implicit n/1
    constexpr Exponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        validate();
        const std::int64_t g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    [[nodiscard]] constexpr std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t denominator() const noexcept { return den_; }

    /// floor(p/q)
    [[nodiscard]] constexpr std::int64_t floor() const noexcept { return num_ / den_; }

    [[nodiscard]] std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Accepts "p/q" or "n".
    static Exponent parse(std::string_view text);

    friend constexpr bool operator==(const Exponent&, const Exponent&) = default;
    friend constexpr std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

private:
    constexpr void validate() const {
        if (num_ <= 0 || den_ <= 0) {
            throw std::domain_error("exponent must be a positive rational");
        }
    }

    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

/// Threshold as written on the command line: "7/3" (alpha-power-free) or
/// "2+" (alpha+-power-free).
struct PowerThreshold {
    Exponent value;
    bool plus = false;

    static PowerThreshold parse(std::string_view text);
    [[nodiscard]] std::string str() const { return value.str() + (plus ? "+" : ""); }
};

}  // namespace wordpower
