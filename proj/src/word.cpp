#include "wordpower/word.hpp"

#include <algorithm>

namespace wordpower {

Word complement(const Word& w) {
    std::vector<std::uint8_t> out(w.begin(), w.end());
    for (auto& a : out) {
        a ^= 1U;
    }
    return Word::from_trusted(std::move(out));
}

Word rotate(const Word& w, std::size_t shift) {
    if (w.empty()) {
        return w;
    }
    shift %= w.size();
    return w.drop(shift) + w.prefix(shift);
}

std::vector<Word> conjugates(const Word& w) {
    std::vector<Word> out;
    out.reserve(std::max<std::size_t>(w.size(), 1));
    out.push_back(w);
    for (std::size_t i = 1; i < w.size(); ++i) {
        out.push_back(rotate(w, i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Word word_from_index(std::uint64_t index, std::size_t length) {
    std::vector<std::uint8_t> out(length);
    for (std::size_t k = 0; k < length; ++k) {
        out[length - 1 - k] = static_cast<std::uint8_t>((index >> k) & 1U);
    }
    return Word::from_trusted(std::move(out));
}

}  // namespace wordpower
