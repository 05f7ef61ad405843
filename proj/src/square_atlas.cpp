#include "wordpower/square_atlas.hpp"

#include <algorithm>

#include "wordpower/errors.hpp"
#include "wordpower/morphism.hpp"
#include "wordpower/repetition.hpp"

namespace wordpower {

namespace {

// True when the last 2p+1 letters of buf have period p for some p.
bool suffix_overlap(const std::vector<std::uint8_t>& buf) {
    const std::size_t n = buf.size();
    for (std::size_t p = 1; 2 * p < n; ++p) {
        bool periodic = true;
        for (std::size_t j = 0; j <= p; ++j) {
            if (buf[n - 1 - j] != buf[n - 1 - j - p]) {
                periodic = false;
                break;
            }
        }
        if (periodic) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(AtlasFamily f) noexcept {
    switch (f) {
        case AtlasFamily::A: return "A";
        case AtlasFamily::B: return "B";
        case AtlasFamily::None: break;
    }
    return "none";
}

const std::array<Word, 4>& base_set_a() {
    static const std::array<Word, 4> a{Word{0, 0}, Word{1, 1}, Word::parse("010010"), Word::parse("101101")};
    return a;
}

const std::array<Word, 2>& base_set_b() {
    static const std::array<Word, 2> b{Word::parse("001001"), Word::parse("110110")};
    return b;
}

AtlasMembership atlas_membership(const Word& w) {
    Word current = w;
    std::size_t level = 0;
    while (!current.empty()) {
        if (std::find(base_set_a().begin(), base_set_a().end(), current) != base_set_a().end()) {
            return {AtlasFamily::A, level, current};
        }
        if (std::find(base_set_b().begin(), base_set_b().end(), current) != base_set_b().end()) {
            return {AtlasFamily::B, level, current};
        }
        auto decoded = mu_decode(current);
        if (!decoded) {
            break;
        }
        current = std::move(*decoded);
        ++level;
    }
    return {};
}

std::vector<Word> atlas_members(AtlasFamily family, std::size_t max_length) {
    std::vector<Word> bases;
    if (family == AtlasFamily::A) {
        bases.assign(base_set_a().begin(), base_set_a().end());
    } else if (family == AtlasFamily::B) {
        bases.assign(base_set_b().begin(), base_set_b().end());
    }
    std::vector<Word> out;
    for (Word w : bases) {
        while (w.size() <= max_length) {
            out.push_back(w);
            w = mu()(w);
        }
    }
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

std::vector<SquareOccurrence> squares_in(const Word& w) {
    std::vector<std::pair<std::size_t, std::size_t>> found;  // (position, half length)
    for (std::size_t p = 1; 2 * p <= w.size(); ++p) {
        for (const auto& run : maximal_runs(w, p)) {
            for (std::size_t i = run.start; i + 2 * p <= run.end(); ++i) {
                found.emplace_back(i, p);
            }
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<SquareOccurrence> out;
    out.reserve(found.size());
    for (const auto& [pos, half] : found) {
        out.push_back({pos, w.substr(pos, 2 * half)});
    }
    return out;
}

bool is_square(const Word& w) noexcept {
    const std::size_t half = w.size() / 2;
    return !w.empty() && w.size() % 2 == 0 && std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half),
                                                         w.begin() + static_cast<std::ptrdiff_t>(half));
}

bool is_extendable_square(const Word& w) {
    if (!is_square(w)) {
        throw PreconditionError("'" + w.str() + "' is not a square");
    }
    if (!is_overlap_free(w)) {
        throw PreconditionError("'" + w.str() + "' contains an overlap");
    }
    return atlas_membership(w).family != AtlasFamily::None;
}

std::size_t max_overlap_free_extension(const Word& w, std::size_t cap) {
    if (cap < w.size()) {
        throw PreconditionError("extension cap is shorter than the word");
    }
    if (!is_overlap_free(w)) {
        throw PreconditionError("'" + w.str() + "' contains an overlap");
    }
    std::vector<std::uint8_t> buf(w.begin(), w.end());
    buf.reserve(cap);
    std::size_t best = buf.size();
    // next[d] is the next letter to try at depth d; 2 means exhausted
    std::vector<std::uint8_t> next{0};
    while (!next.empty()) {
        if (buf.size() >= cap) {
            return cap;
        }
        auto& letter = next.back();
        if (letter == 2) {
            next.pop_back();
            if (!next.empty()) {
                buf.pop_back();
            }
            continue;
        }
        buf.push_back(letter++);
        if (suffix_overlap(buf)) {
            buf.pop_back();
            continue;
        }
        best = std::max(best, buf.size());
        next.push_back(0);
    }
    return best;
}

bool check_extension_lemma(std::size_t k) {
    for (const char* z : {"011011", "100100"}) {
        const Word x = mu_power(Word::parse(z), k);
        for (int a : {0, 1}) {
            if (is_overlap_free(x + Word{a})) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace wordpower
