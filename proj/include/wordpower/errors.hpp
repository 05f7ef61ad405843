#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordpower {

/// Malformed text input. Carries the index of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at index " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A requested word would exceed the configured length cap.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Global limit on generated word length. Defaults to 2^20, overridden by
/// the WORDPOWER_CAP environment variable when set.
[[nodiscard]] std::size_t length_cap() noexcept;
void set_length_cap(std::size_t cap) noexcept;

/// Throws CapExceeded when `n` is above length_cap().
void require_within_cap(std::size_t n, const char* what);

}  // namespace wordpower
