#include <doctest.h>

#include <set>
#include <vector>

#include "oracle.hpp"
#include "wordpower/repetition.hpp"
#include "wordpower/word.hpp"

using namespace wordpower;

TEST_CASE("complement flips every letter") {
    CHECK(complement(Word{}).str() == "");
    CHECK(complement(parse_word("01")).str() == "10");
    CHECK(complement(parse_word("0110100110010110")).str() == "1001011001101001");
}

TEST_CASE("complement is a length-preserving involution") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& w : enumerate_words(n)) {
            const Word c = complement(w);
            CHECK(c.size() == w.size());
            CHECK(complement(c) == w);
        }
    }
}

TEST_CASE("conjugates") {
    auto as_strings = [](const std::vector<Word>& ws) {
        std::set<std::string> out;
        for (const auto& w : ws) {
            out.insert(w.str());
        }
        return out;
    };
    CHECK(as_strings(conjugates(parse_word("00"))) == std::set<std::string>{"00"});
    CHECK(as_strings(conjugates(parse_word("010010"))) == std::set<std::string>{"010010", "100100", "001001"});
    CHECK(as_strings(conjugates(parse_word("011011"))) == std::set<std::string>{"011011", "110110", "101101"});
    CHECK(conjugates(Word{}).size() == 1);
}

TEST_CASE("conjugate sets are rotation-closed, bounded by |w|, and sized by the primitive root") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& w : enumerate_words(n)) {
            const auto conj = conjugates(w);
            const std::set<Word> set(conj.begin(), conj.end());
            CHECK(conj.size() <= n);
            CHECK(set.count(w) == 1);
            for (const auto& c : conj) {
                CHECK(set.count(rotate(c, 1)) == 1);
            }
            // primitive root length: smallest p dividing n with period p
            const std::size_t p = smallest_period(w);
            const std::size_t root = (n % p == 0) ? p : n;
            CHECK(conj.size() == root);
        }
    }
}

TEST_CASE("enumerate_words is lexicographic and complete") {
    std::vector<std::string> one;
    for (const auto& w : enumerate_words(1)) {
        one.push_back(w.str());
    }
    CHECK(one == std::vector<std::string>{"0", "1"});

    std::vector<std::string> squares;
    for (const auto& w : enumerate_words(2, [](const Word& w) { return w[0] == w[1]; })) {
        squares.push_back(w.str());
    }
    CHECK(squares == std::vector<std::string>{"00", "11"});

    std::vector<std::string> of_squares;
    auto overlap_free_square = [](const Word& w) { return w.prefix(2) == w.suffix(2) && is_overlap_free(w); };
    for (const auto& w : enumerate_words(4, overlap_free_square)) {
        of_squares.push_back(w.str());
    }
    CHECK(of_squares == std::vector<std::string>{"0101", "1010"});

    for (std::size_t n = 0; n <= 16; ++n) {
        std::size_t count = 0;
        Word previous;
        for (const auto& w : enumerate_words(n)) {
            if (count > 0) {
                CHECK(previous < w);
            }
            previous = w;
            ++count;
        }
        CHECK(count == (std::size_t{1} << n));
    }
}

TEST_CASE("parse and format") {
    CHECK(parse_word("00") == Word{0, 0});
    CHECK(parse_word("01101001").size() == 8);
    CHECK(format_word(parse_word("01101001")) == "01101001");
    try {
        (void)parse_word("002");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS((void)parse_word("0 1"), ParseError);
    CHECK_THROWS_AS((void)Alphabet5Word::parse("015"), ParseError);
    CHECK(Alphabet5Word::parse("01234").str() == "01234");
}

TEST_CASE("parse/format round trip on random text") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto text = oracle::random_word(rng, rng() % 64);
        CHECK(format_word(parse_word(text)) == text);
    }
}
