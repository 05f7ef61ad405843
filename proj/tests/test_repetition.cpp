#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wordpower/repetition.hpp"

using namespace wordpower;

namespace {

std::optional<oracle::Occ> as_oracle(const std::optional<PowerOccurrence>& occ) {
    if (!occ) {
        return std::nullopt;
    }
    return oracle::Occ{occ->start, occ->period, occ->length};
}

const std::vector<PowerThreshold>& thresholds() {
    static const std::vector<PowerThreshold> t{
        {Exponent{1}, false}, {Exponent{1}, true},     {Exponent{3, 2}, false}, {Exponent{2}, false},
        {Exponent{2}, true},  {Exponent{7, 3}, false}, {Exponent{7, 3}, true},  {Exponent{5, 2}, false},
        {Exponent{3}, false}, {Exponent{3}, true},
    };
    return t;
}

}  // namespace

TEST_CASE("Exponent arithmetic is exact") {
    CHECK(Exponent(4, 2) == Exponent(2));
    CHECK(Exponent(10, 4).str() == "5/2");
    CHECK(Exponent(7, 3) > Exponent(2));
    CHECK(Exponent(9, 4) < Exponent(7, 3));
    CHECK(Exponent(19, 8) > Exponent(11, 5));
    CHECK(Exponent::parse("7/3") == Exponent(7, 3));
    CHECK(Exponent::parse("3") == Exponent(3));
    CHECK(PowerThreshold::parse("2+").plus);
    CHECK(PowerThreshold::parse("2+").value == Exponent(2));
    CHECK_FALSE(PowerThreshold::parse("7/3").plus);
    CHECK_THROWS_AS((void)Exponent::parse("7/"), ParseError);
    CHECK_THROWS_AS((void)Exponent::parse("a"), ParseError);
    CHECK_THROWS_AS((void)Exponent::parse("0/3"), ParseError);
    CHECK_THROWS((void)Exponent(0, 1));
}

TEST_CASE("smallest_period") {
    CHECK(smallest_period(parse_word("0")) == 1);
    CHECK(smallest_period(parse_word("1001100110")) == 4);
    CHECK(smallest_period(parse_word("011011")) == 3);
    CHECK_THROWS_AS((void)smallest_period(Word{}), PreconditionError);
}

TEST_CASE("exponent_of") {
    CHECK(exponent_of(parse_word("00")) == Exponent(2));
    CHECK(exponent_of(parse_word("1001100110")) == Exponent(5, 2));
    CHECK(exponent_of(parse_word("0110110")) == Exponent(7, 3));
    CHECK_THROWS_AS((void)exponent_of(Word{}), PreconditionError);
}

TEST_CASE("max_exponent") {
    const auto one = max_exponent(parse_word("01"));
    CHECK(one.exponent == Exponent(1));
    CHECK(one.witness.length == 1);

    CHECK(max_exponent(parse_word("0110100110010110")).exponent == Exponent(2));

    const auto cube = max_exponent(parse_word("0110111"));
    CHECK(cube.exponent == Exponent(3));
    CHECK(cube.witness == PowerOccurrence{4, 1, 3});
    CHECK_THROWS_AS((void)max_exponent(Word{}), PreconditionError);
}

TEST_CASE("find_power") {
    CHECK(find_power(parse_word("000"), Exponent(7, 3), false) == PowerOccurrence{0, 1, 3});
    CHECK_FALSE(find_power(parse_word("00"), Exponent(2), true).has_value());
    CHECK(find_power(parse_word("0110110"), Exponent(7, 3), false) == PowerOccurrence{0, 3, 7});
    CHECK_FALSE(find_power(Word{}, Exponent(2), false).has_value());
    CHECK_THROWS_AS((void)find_power(parse_word("01"), Exponent(1, 2), false), PreconditionError);
}

TEST_CASE("is_power_free") {
    CHECK(is_power_free(parse_word("0110100110010110"), Exponent(2), true));
    CHECK(is_power_free(parse_word("001100110"), Exponent(7, 3), false));
    CHECK_FALSE(is_power_free(parse_word("001100110"), Exponent(2), true));
    CHECK(is_power_free(Word{}, Exponent(2), false));
}

TEST_CASE("list_repetitions") {
    CHECK(list_repetitions(parse_word("0101"), Exponent(2), false) == std::vector<PowerOccurrence>{{0, 2, 4}});
    CHECK(list_repetitions(parse_word("01101001"), Exponent(2), false) ==
          std::vector<PowerOccurrence>{{1, 1, 2}, {2, 2, 4}, {5, 1, 2}});
    CHECK(list_repetitions(parse_word("001100110"), Exponent(2), true) == std::vector<PowerOccurrence>{{0, 4, 9}});
}

TEST_CASE("ends_with_overlap") {
    CHECK(ends_with_overlap(parse_word("001100110")));
    CHECK(ends_with_overlap(parse_word("1000")));
    CHECK_FALSE(ends_with_overlap(parse_word("0011")));
    CHECK_FALSE(ends_with_overlap(parse_word("00100")));
}

TEST_CASE("exhaustive oracle equivalence for words of length <= 12") {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
            const auto text = oracle::from_index(i, n);
            const Word w = parse_word(text);
            for (const auto& t : thresholds()) {
                const auto expected =
                    oracle::find_power(text, t.value.numerator(), t.value.denominator(), t.plus);
                REQUIRE(as_oracle(find_power(w, t.value, t.plus)) == expected);
                REQUIRE(is_power_free(w, t.value, t.plus) == !expected.has_value());
            }
            if (n > 0 && n <= 10) {
                const auto [ratio, witness] = oracle::max_exponent(text);
                const auto got = max_exponent(w);
                CHECK(got.exponent == Exponent(static_cast<std::int64_t>(ratio.first),
                                               static_cast<std::int64_t>(ratio.second)));
                CHECK(oracle::Occ{got.witness.start, got.witness.period, got.witness.length} == witness);
            }
            if (n <= 9) {
                for (const auto& t : {PowerThreshold{Exponent{2}, false}, PowerThreshold{Exponent{2}, true},
                                      PowerThreshold{Exponent{3, 2}, false}}) {
                    std::vector<oracle::Occ> got;
                    for (const auto& occ : list_repetitions(w, t.value, t.plus)) {
                        got.push_back({occ.start, occ.period, occ.length});
                    }
                    CHECK(got == oracle::maximal_repetitions(text, t.value.numerator(), t.value.denominator(),
                                                             t.plus));
                }
            }
        }
    }
}

TEST_CASE("smallest_period matches the definition") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto text = oracle::random_word(rng, 1 + rng() % 30);
        std::size_t p = 1;
        while (!oracle::has_period(text, 0, text.size(), p)) {
            ++p;
        }
        CHECK(smallest_period(parse_word(text)) == p);
    }
}

TEST_CASE("power-freeness is inherited by factors") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Word w = parse_word(oracle::random_word(rng, 24));
        for (const auto& t : thresholds()) {
            if (!is_power_free(w, t)) {
                continue;
            }
            for (std::size_t s = 0; s < w.size(); ++s) {
                for (std::size_t len = 0; s + len <= w.size(); ++len) {
                    REQUIRE(is_power_free(w.substr(s, len), t));
                }
            }
        }
    }
}

TEST_CASE("plus-free at alpha implies free at every larger alpha") {
    const std::vector<Exponent> larger{Exponent{2}, Exponent{9, 4}, Exponent{7, 3}, Exponent{5, 2}, Exponent{3}};
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& w : enumerate_words(n)) {
            for (const auto& a : larger) {
                if (!is_power_free(w, a, true)) {
                    continue;
                }
                for (const auto& b : larger) {
                    if (b > a) {
                        CHECK(is_power_free(w, b, false));
                    }
                }
            }
        }
    }
}

TEST_CASE("overlaps are exactly the words of exponent above 2; xx has period |x|") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& w : enumerate_words(n)) {
            const auto text = w.str();
            bool overlap = false;
            for (std::size_t p = 1; 2 * p < n; ++p) {
                overlap = overlap || oracle::has_period(text, 0, n, p);
            }
            CHECK((exponent_of(w) > Exponent{2}) == overlap);
        }
    }
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& x : enumerate_words(n)) {
            const PowerOccurrence occ{0, x.size(), 2 * x.size()};
            CHECK(is_valid_occurrence(x + x, occ));
        }
    }
}
