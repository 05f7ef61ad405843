#include "wordpower/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "wordpower/constructions.hpp"
#include "wordpower/morphism.hpp"
#include "wordpower/repetition.hpp"
#include "wordpower/square_atlas.hpp"
#include "wordpower/word.hpp"

namespace wordpower::verify {

namespace {

// Desk-scale limits.
constexpr std::size_t kScanLength = 4096;
constexpr std::size_t kDfsCap = 256;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(std::string why) {
        if (passed) {
            detail = std::move(why);
        }
        passed = false;
    }
};

std::vector<Word> all_words_up_to(std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_length; ++n) {
        for (const auto& w : enumerate_words(n)) {
            out.push_back(w);
        }
    }
    return out;
}

Outcome check_tmmorph() {
    Outcome o;
    const auto words = all_words_up_to(10);
    std::vector<Word> images;
    images.reserve(words.size());
    for (const auto& w : words) {
        images.push_back(mu()(w));
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            ++pairs;
            if (words[j].starts_with(words[i]) != images[j].starts_with(images[i])) {
                o.fail("prefix mismatch for x=" + words[i].str() + " y=" + words[j].str());
            }
            if (words[j].ends_with(words[i]) != images[j].ends_with(images[i])) {
                o.fail("suffix mismatch for x=" + words[i].str() + " y=" + words[j].str());
            }
        }
    }
    if (o.passed) {
        o.detail = std::to_string(pairs) + " pairs with |x|,|y| <= 10";
    }
    return o;
}

Outcome check_shur() {
    Outcome o;
    const Exponent threshold{7, 3};
    std::size_t count = 0;
    for (const auto& w : all_words_up_to(12)) {
        ++count;
        if (is_power_free(w, threshold, false) != is_power_free(mu()(w), threshold, false)) {
            o.fail("counterexample w=" + w.str());
        }
    }
    if (o.passed) {
        o.detail = std::to_string(count) + " words with |w| <= 12 at 7/3";
    }
    return o;
}

Outcome check_stronger() {
    Outcome o;
    std::size_t occurrences = 0;
    for (const auto& w : all_words_up_to(12)) {
        const Word image = mu()(w);
        for (const auto& occ : list_repetitions(image, 2, true)) {
            ++occurrences;
            if (occ.period % 2 != 0) {
                o.fail("odd period overlap in mu(" + w.str() + ")");
                continue;
            }
            const auto v = descend_power(w, occ);
            if (v.period * 2 != occ.period || v.length < (occ.length + 1) / 2 || !is_valid_occurrence(w, v)) {
                o.fail("bad descent for w=" + w.str());
            }
        }
    }
    if (o.passed) {
        o.detail = std::to_string(occurrences) + " overlaps in mu(w), |w| <= 12, all descended";
    }
    return o;
}

Outcome check_fact() {
    Outcome o;
    const Exponent threshold{7, 3};
    std::size_t count = 0;
    for (const auto& x : enumerate_words(12, [&](const Word& w) { return is_power_free(w, threshold, false); })) {
        ++count;
        if (factorize_ks(x, threshold).empty()) {
            o.fail("no factorization for " + x.str());
        }
    }
    if (o.passed) {
        o.detail = std::to_string(count) + " 7/3-power-free words of length 12 factorized";
    }
    return o;
}

Outcome check_pansiot() {
    Outcome o;
    const Word t = word_t(kScanLength);
    std::set<Word> distinct;
    for (const auto& sq : squares_in(t)) {
        distinct.insert(sq.square);
    }
    for (const auto& sq : distinct) {
        if (atlas_membership(sq).family != AtlasFamily::A) {
            o.fail("square " + sq.str() + " of t is not in the A family");
        }
    }
    const Word long_t = word_t(std::size_t{1} << 14);
    const auto members = atlas_members(AtlasFamily::A, 64);
    for (const auto& m : members) {
        if (long_t.find(m) == Word::npos) {
            o.fail("A-family member " + m.str() + " missing from t");
        }
    }
    if (o.passed) {
        o.detail = std::to_string(distinct.size()) + " distinct squares, " + std::to_string(members.size()) +
                   " family members of length <= 64 found";
    }
    return o;
}

Outcome check_square() {
    Outcome o;
    std::map<std::size_t, std::size_t> per_position;
    for (const auto& sq : squares_in(word_t(kScanLength))) {
        if (++per_position[sq.position] > 1) {
            o.fail("two squares start at position " + std::to_string(sq.position));
        }
    }
    if (o.passed) {
        o.detail = std::to_string(per_position.size()) + " square start positions, each unique";
    }
    return o;
}

Outcome check_conj() {
    Outcome o;
    const auto members = atlas_members(AtlasFamily::A, 24);
    for (std::size_t half = 1; half <= 12; ++half) {
        std::set<Word> squares;
        for (const auto& x : enumerate_words(half)) {
            const Word sq = x + x;
            if (is_overlap_free(sq)) {
                squares.insert(sq);
            }
        }
        std::set<Word> closure;
        for (const auto& m : members) {
            if (m.size() == 2 * half) {
                for (auto& c : conjugates(m)) {
                    closure.insert(std::move(c));
                }
            }
        }
        if (squares != closure) {
            o.fail("set mismatch at length " + std::to_string(2 * half));
        }
    }
    if (o.passed) {
        o.detail = "even lengths 2..24 match";
    }
    return o;
}

Outcome check_extend() {
    Outcome o;
    for (std::size_t k = 0; k <= 4; ++k) {
        if (!check_extension_lemma(k)) {
            o.fail("k=" + std::to_string(k));
        }
    }
    if (o.passed) {
        o.detail = "k = 0..4";
    }
    return o;
}

Outcome check_main() {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t half = 1; half <= 8; ++half) {
        for (const auto& x : enumerate_words(half)) {
            const Word sq = x + x;
            if (!is_overlap_free(sq)) {
                continue;
            }
            ++count;
            const bool member = is_extendable_square(sq);
            const bool reaches = max_overlap_free_extension(sq, kDfsCap) == kDfsCap;
            if (member != reaches) {
                o.fail("dichotomy fails for " + sq.str());
            }
        }
    }
    const Word s = word_s(2048);
    const Word head = Word::parse("001001");
    if (!is_overlap_free(s)) {
        o.fail("s prefix has an overlap");
    }
    if (s.find(head, 1) != Word::npos) {
        o.fail("001001 occurs in s after position 0");
    }
    if (o.passed) {
        o.detail = std::to_string(count) + " overlap-free squares of length <= 16; s prefix clause holds";
    }
    return o;
}

std::set<std::size_t> overlap_starts(const Word& w, std::size_t period) {
    std::set<std::size_t> out;
    for (const auto& run : maximal_runs(w, period)) {
        if (run.exponent() > Exponent{2}) {
            out.insert(run.start);
        }
    }
    return out;
}

Outcome check_finite_overlaps() {
    Outcome o;
    const auto small = overlap_starts(word_a(std::size_t{1} << 12), 4);
    const auto large = overlap_starts(word_a(std::size_t{1} << 14), 4);
    if (small != large) {
        o.fail("period-4 overlap positions differ between prefixes 4^6 and 4^7");
    }
    if (o.passed) {
        o.detail = std::to_string(small.size()) + " period-4 overlaps, stable";
    }
    return o;
}

Outcome check_infinite() {
    Outcome o;
    const Word a = word_a(word_a_length(6));
    if (!is_power_free(a, Exponent{7, 3}, false)) {
        o.fail("a prefix contains a 7/3 power");
    }
    for (std::size_t p : {4U, 16U, 64U}) {
        if (overlap_starts(a, p).empty()) {
            o.fail("no overlap of period " + std::to_string(p));
        }
    }
    const Word marker = Word::parse("00110011");
    for (std::size_t n = 0; n <= 6; ++n) {
        const Word an = word_a_finite(n);
        if (!word_a_finite(n + 1).starts_with(an)) {
            o.fail("A_" + std::to_string(n) + " is not a prefix of its successor");
        }
        if (an.size() != word_a_length(n)) {
            o.fail("length of A_" + std::to_string(n));
        }
        const auto first = an.find(marker);
        if (n >= 1 && (first != 0 || an.find(marker, 1) != Word::npos)) {
            o.fail("00110011 occurs in A_" + std::to_string(n) + " away from position 0");
        }
    }
    if (o.passed) {
        o.detail = "prefix of length " + std::to_string(a.size()) + " is 7/3-power-free with overlaps at 4, 16, 64";
    }
    return o;
}

Outcome check_uncount() {
    Outcome o;
    const Word seed{0, 0};
    const Exponent threshold{7, 3};
    for (std::size_t len = 0; len <= 4; ++len) {
        for (const auto& b : enumerate_words(len)) {
            if (!is_power_free(g_b(b, seed), threshold, false)) {
                o.fail("g_" + b.str() + "(00) contains a 7/3 power");
            }
            const Word p0 = g_b(b + Word{0}, Word{0});
            const Word p1 = g_b(b + Word{1}, Word{0});
            if (p0.starts_with(p1) || p1.starts_with(p0)) {
                o.fail("g_" + b.str() + "0(0) and g_" + b.str() + "1(0) are prefix-comparable");
            }
            if (!ends_with_overlap(g_b(b + Word{1}, seed))) {
                o.fail("g_" + b.str() + "1(00) does not end with an overlap");
            }
        }
    }
    if (o.passed) {
        o.detail = "all bit strings of length <= 4";
    }
    return o;
}

Outcome check_automatic() {
    Outcome o;
    if (word_a_automatic(kScanLength) != word_a(kScanLength)) {
        o.fail("g(h^omega(0)) differs from a");
    }
    for (std::size_t n = 0; n <= 7; ++n) {
        if (word_a_finite(n).size() != word_a_length(n)) {
            o.fail("|A_" + std::to_string(n) + "| formula");
        }
    }
    const Alphabet5Word fixed = fixed_point_prefix(morphism_h(), 0, kScanLength);
    for (const char* f : {"11", "14", "22", "24", "31", "33", "41", "44", "12", "43"}) {
        if (fixed.find(Alphabet5Word::parse(f)) != Alphabet5Word::npos) {
            o.fail(std::string("factor ") + f + " occurs in h^omega(0)");
        }
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto lhs = iterate(morphism_h(), Alphabet5Word{0}, n);
        const auto rhs = Alphabet5Word{0} + morphism_f()(iterate(morphism_h(), Alphabet5Word{0}, n - 1));
        if (rhs.size() != lhs.size() + 1 || !rhs.starts_with(lhs)) {
            o.fail("recursion fails at n=" + std::to_string(n));
        }
    }
    for (std::uint8_t a = 0; a < 5; ++a) {
        const Alphabet5Word letter{a};
        if (coding_g()(morphism_f()(letter)) != mu_squared()(coding_g()(letter))) {
            o.fail("g(f(" + std::to_string(a) + ")) != mu^2(g(" + std::to_string(a) + "))");
        }
    }
    if (o.passed) {
        o.detail = "coding, length formula, forbidden factors, recursion and g.f = mu^2.g hold";
    }
    return o;
}

Outcome check_beta() {
    Outcome o;
    const BetaParams params = beta_params(Exponent{11, 5}, 3);
    if (params.r != 3 || params.t != 5 || params.beta != Exponent{19, 8}) {
        o.fail("beta_params(11/5, 3) is not (3, 5, 19/8)");
    }
    const Word c = beta_word(params, kScanLength);
    if (!is_power_free(c, params.beta, true)) {
        o.fail("beta word contains a beta+ power");
    }
    for (std::size_t p : {8U, 64U}) {
        const auto runs = maximal_runs(c, p);
        if (std::none_of(runs.begin(), runs.end(), [&](const auto& r) { return r.exponent() >= params.beta; })) {
            o.fail("no beta power of period " + std::to_string(p));
        }
    }
    std::mt19937_64 rng(20070107);
    std::size_t defined = 0;
    for (int i = 0; i < 20; ++i) {
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, 1000)(rng);
        const std::int64_t num = std::uniform_int_distribution<std::int64_t>(2 * den + 1, 4 * den - 1)(rng);
        const std::size_t s = std::uniform_int_distribution<std::size_t>(3, 8)(rng);
        const Exponent alpha{num, den};
        try {
            const auto bp = beta_params(alpha, s);
            ++defined;
            // |alpha - beta| <= 8/2^s, cross-multiplied
            const __int128 diff = static_cast<__int128>(bp.beta.numerator()) * alpha.denominator() -
                                  static_cast<__int128>(alpha.numerator()) * bp.beta.denominator();
            const __int128 bound = static_cast<__int128>(8) * alpha.denominator() * bp.beta.denominator();
            if (diff < 0 || (diff << s) > bound) {
                o.fail("|alpha - beta| bound fails for alpha=" + alpha.str());
            }
        } catch (const PreconditionError&) {
        }
    }
    if (o.passed) {
        o.detail = "(3, 5, 19/8); beta word 4096 is beta+-free; bound holds on " + std::to_string(defined) +
                   "/20 random draws with defined parameters";
    }
    return o;
}

const std::vector<std::pair<std::string_view, std::function<Outcome()>>>& registry() {
    static const std::vector<std::pair<std::string_view, std::function<Outcome()>>> suites{
        {"tmmorph", check_tmmorph},
        {"shur", check_shur},
        {"stronger", check_stronger},
        {"fact", check_fact},
        {"pansiot", check_pansiot},
        {"square", check_square},
        {"conj", check_conj},
        {"extend", check_extend},
        {"main", check_main},
        {"finite-overlaps", check_finite_overlaps},
        {"infinite", check_infinite},
        {"uncount", check_uncount},
        {"automatic", check_automatic},
        {"beta", check_beta},
    };
    return suites;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name) {
    for (const auto& [suite, fn] : registry()) {
        if (suite != name) {
            continue;
        }
        const auto begin = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin);
        return {std::string(suite), o.passed, o.detail, elapsed};
    }
    throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace wordpower::verify
