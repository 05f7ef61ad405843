#include "wordpower/morphism.hpp"

namespace wordpower {

const Morphism<2, 2>& mu() {
    static const Morphism<2, 2> m{{Word{0, 1}, Word{1, 0}}};
    return m;
}

const Morphism<2, 2>& mu_squared() {
    static const Morphism<2, 2> m = compose(mu(), mu());
    return m;
}

const Morphism<5, 5>& morphism_h() {
    static const Morphism<5, 5> m{{Alphabet5Word::parse("0134"), Alphabet5Word::parse("2134"),
                                   Alphabet5Word::parse("3234"), Alphabet5Word::parse("2321"),
                                   Alphabet5Word::parse("3421")}};
    return m;
}

const Morphism<5, 5>& morphism_f() {
    static const Morphism<5, 5> m{{Alphabet5Word::parse("1342"), Alphabet5Word::parse("1342"),
                                   Alphabet5Word::parse("2342"), Alphabet5Word::parse("3213"),
                                   Alphabet5Word::parse("4213")}};
    return m;
}

const Morphism<5, 2>& coding_g() {
    static const Morphism<5, 2> m{{Word{0}, Word{0}, Word{0}, Word{1}, Word{1}}};
    return m;
}

Word mu_power(const Word& w, std::size_t k) { return iterate(mu(), w, k); }

std::optional<Word> mu_decode(const Word& w) {
    if (w.size() % 2 != 0) {
        return std::nullopt;
    }
    std::vector<std::uint8_t> out(w.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto a = w[2 * i];
        if (a == w[2 * i + 1]) {
            return std::nullopt;
        }
        out[i] = a;
    }
    return Word::from_trusted(std::move(out));
}

PowerOccurrence descend_power(const Word& w, const PowerOccurrence& occ) {
    const Word image = mu()(w);
    if (!is_valid_occurrence(image, occ)) {
        throw PreconditionError("occurrence is not a periodic factor of mu(w)");
    }
    if (occ.exponent() <= Exponent{2}) {
        throw PreconditionError("occurrence exponent must exceed 2");
    }
    if (occ.period % 2 != 0) {
        throw PreconditionError("occurrence period must be even");
    }
    const std::size_t period = occ.period / 2;
    const std::size_t needed = (occ.length + 1) / 2;
    for (const auto& run : maximal_runs(w, period)) {
        if (run.length >= needed) {
            return run;
        }
    }
    throw std::logic_error("no descended occurrence found in w; the descent guarantee was violated");
}

const std::array<Word, 5>& factorization_borders() {
    static const std::array<Word, 5> borders{Word{}, Word{0}, Word{1}, Word{0, 0}, Word{1, 1}};
    return borders;
}

std::vector<Factorization> factorize_ks(const Word& x, const Exponent& threshold) {
    if (!(threshold > Exponent{2} && threshold <= Exponent{7, 3})) {
        throw PreconditionError("factorization threshold must lie in (2, 7/3]");
    }
    if (!is_power_free(x, threshold, false)) {
        throw PreconditionError("word is not " + threshold.str() + "-power-free");
    }
    std::vector<Factorization> out;
    // borders are listed in nondecreasing length, so the result is ordered by (|u|, |v|)
    for (const auto& u : factorization_borders()) {
        if (!x.starts_with(u)) {
            continue;
        }
        for (const auto& v : factorization_borders()) {
            if (u.size() + v.size() > x.size() || !x.ends_with(v)) {
                continue;
            }
            auto y = mu_decode(x.substr(u.size(), x.size() - u.size() - v.size()));
            if (y && is_power_free(*y, threshold, false)) {
                out.push_back({u, std::move(*y), v});
            }
        }
    }
    return out;
}

}  // namespace wordpower
