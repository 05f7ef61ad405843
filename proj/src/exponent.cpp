#include "wordpower/exponent.hpp"

#include <charconv>

#include "wordpower/errors.hpp"

namespace wordpower {

namespace {

std::int64_t parse_positive(std::string_view text, std::size_t offset) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        const std::size_t bad = text.empty() ? 0 : static_cast<std::size_t>(ptr - text.data());
        throw ParseError("expected a positive integer", offset + bad);
    }
    if (value <= 0) {
        throw ParseError("expected a positive integer", offset);
    }
    return value;
}

}  // namespace

Exponent Exponent::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return {parse_positive(text, 0)};
    }
    return {parse_positive(text.substr(0, slash), 0), parse_positive(text.substr(slash + 1), slash + 1)};
}

PowerThreshold PowerThreshold::parse(std::string_view text) {
    PowerThreshold t;
    if (!text.empty() && text.back() == '+') {
        t.plus = true;
        text.remove_suffix(1);
    }
    t.value = Exponent::parse(text);
    return t;
}

}  // namespace wordpower
