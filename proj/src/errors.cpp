#include "wordpower/errors.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace wordpower {

namespace {

constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

std::size_t initial_cap() noexcept {
    const char* env = std::getenv("WORDPOWER_CAP");
    if (env == nullptr) {
        return kDefaultCap;
    }
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        return kDefaultCap;
    }
    return value;
}

std::atomic<std::size_t>& cap_storage() noexcept {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

}  // namespace

std::size_t length_cap() noexcept { return cap_storage().load(std::memory_order_relaxed); }

void set_length_cap(std::size_t cap) noexcept { cap_storage().store(cap, std::memory_order_relaxed); }

void require_within_cap(std::size_t n, const char* what) {
    const std::size_t cap = length_cap();
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": length " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    }
}

}  // namespace wordpower
