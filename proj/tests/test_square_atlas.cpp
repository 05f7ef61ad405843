#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "wordpower/constructions.hpp"
#include "wordpower/morphism.hpp"
#include "wordpower/square_atlas.hpp"

using namespace wordpower;

namespace {

std::vector<std::pair<std::size_t, std::string>> as_pairs(const std::vector<SquareOccurrence>& sq) {
    std::vector<std::pair<std::size_t, std::string>> out;
    for (const auto& s : sq) {
        out.emplace_back(s.position, s.square.str());
    }
    return out;
}

}  // namespace

TEST_CASE("atlas_membership") {
    CHECK(atlas_membership(parse_word("00")) == AtlasMembership{AtlasFamily::A, 0, parse_word("00")});
    CHECK(atlas_membership(parse_word("01100110")) == AtlasMembership{AtlasFamily::A, 2, parse_word("00")});
    CHECK(atlas_membership(parse_word("011011")).family == AtlasFamily::None);
    CHECK(atlas_membership(parse_word("001001")) == AtlasMembership{AtlasFamily::B, 0, parse_word("001001")});
    CHECK(atlas_membership(Word{}).family == AtlasFamily::None);
    CHECK(atlas_membership(parse_word("0110")).family == AtlasFamily::None);
}

TEST_CASE("membership by decoding agrees with forward generation") {
    std::set<Word> a_members, b_members;
    for (const auto& m : atlas_members(AtlasFamily::A, 16)) {
        a_members.insert(m);
    }
    for (const auto& m : atlas_members(AtlasFamily::B, 16)) {
        b_members.insert(m);
    }
    for (std::size_t n = 1; n <= 16; ++n) {
        for (const auto& w : enumerate_words(n)) {
            const auto m = atlas_membership(w);
            CHECK((m.family == AtlasFamily::A) == (a_members.count(w) == 1));
            CHECK((m.family == AtlasFamily::B) == (b_members.count(w) == 1));
            if (m.family != AtlasFamily::None) {
                CHECK(mu_power(m.base, m.level) == w);
            }
        }
    }
}

TEST_CASE("squares_in") {
    CHECK(squares_in(parse_word("01")).empty());
    CHECK(as_pairs(squares_in(parse_word("01101001"))) ==
          std::vector<std::pair<std::size_t, std::string>>{{1, "11"}, {2, "1010"}, {5, "00"}});
    // fixture from the brute-force oracle
    CHECK(as_pairs(squares_in(parse_word("011011"))) ==
          std::vector<std::pair<std::size_t, std::string>>{{0, "011011"}, {1, "11"}, {4, "11"}});
    CHECK(as_pairs(squares_in(parse_word("0000"))) ==
          std::vector<std::pair<std::size_t, std::string>>{{0, "00"}, {0, "0000"}, {1, "00"}, {2, "00"}});
}

TEST_CASE("squares_in agrees with the brute-force oracle") {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
            const auto text = oracle::from_index(i, n);
            REQUIRE(as_pairs(squares_in(parse_word(text))) == oracle::squares(text));
        }
    }
}

TEST_CASE("is_extendable_square") {
    CHECK(is_extendable_square(parse_word("001001")));
    CHECK_FALSE(is_extendable_square(parse_word("00110011")));
    CHECK_FALSE(is_extendable_square(parse_word("011011")));
    CHECK(is_extendable_square(parse_word("1010")));
    CHECK_FALSE(is_extendable_square(parse_word("100100")));
    CHECK(is_extendable_square(parse_word("01100110")));
    CHECK_THROWS_AS((void)is_extendable_square(parse_word("0110")), PreconditionError);
    CHECK_THROWS_AS((void)is_extendable_square(parse_word("011")), PreconditionError);
    CHECK_THROWS_AS((void)is_extendable_square(parse_word("000000")), PreconditionError);
}

TEST_CASE("max_overlap_free_extension") {
    CHECK(max_overlap_free_extension(parse_word("011011"), 64) == 6);
    CHECK(max_overlap_free_extension(parse_word("0"), 32) == 32);
    CHECK(max_overlap_free_extension(parse_word("001001"), 256) == 256);
    CHECK(max_overlap_free_extension(Word{}, 10) == 10);
    CHECK_THROWS_AS((void)max_overlap_free_extension(parse_word("000"), 10), PreconditionError);
    CHECK_THROWS_AS((void)max_overlap_free_extension(parse_word("0110"), 3), PreconditionError);
}

TEST_CASE("extension search agrees with brute force on short caps") {
    // longest overlap-free extension by exhaustive enumeration of suffixes
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& w : enumerate_words(n, [](const Word& w) { return is_overlap_free(w); })) {
            const std::size_t cap = n + 8;
            std::size_t expected = n;
            for (std::size_t extra = 1; extra <= 8; ++extra) {
                for (std::uint64_t i = 0; i < (std::uint64_t{1} << extra); ++i) {
                    if (oracle::overlap_free(w.str() + oracle::from_index(i, extra))) {
                        expected = n + extra;
                        break;
                    }
                }
            }
            CHECK(max_overlap_free_extension(w, cap) == expected);
        }
    }
}

TEST_CASE("check_extension_lemma") {
    CHECK(check_extension_lemma(0));
    CHECK(check_extension_lemma(1));
    CHECK(check_extension_lemma(4));
    CHECK(mu_power(parse_word("011011"), 4).size() + 1 == 97);
}

TEST_CASE("t has at most one square per position and only A-family squares") {
    const auto sq = squares_in(word_t(1024));
    std::set<std::size_t> seen;
    for (const auto& s : sq) {
        CHECK(seen.insert(s.position).second);
        CHECK(atlas_membership(s.square).family == AtlasFamily::A);
    }
}
