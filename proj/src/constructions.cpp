#include "wordpower/constructions.hpp"

#include <bit>
#include <charconv>

#include "wordpower/errors.hpp"
#include "wordpower/morphism.hpp"

namespace wordpower {

namespace {

Word zeros(std::size_t n) { return Word::from_trusted(std::vector<std::uint8_t>(n, 0)); }

// 0 mu^2(w)
Word prepend_zero_mu2(const Word& w) { return Word{0} + mu_squared()(w); }

std::size_t parse_size(std::string_view text, std::size_t offset) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("expected a nonnegative integer", offset);
    }
    return value;
}

}  // namespace

Word word_t(std::size_t n) {
    require_within_cap(n, "word t");
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(std::popcount(i) & 1);
    }
    return Word::from_trusted(std::move(out));
}

Word word_s(std::size_t n) {
    require_within_cap(n, "word s");
    const Word head = Word::parse("001001");
    if (n <= head.size()) {
        return head.prefix(n);
    }
    return head + complement(word_t(n - head.size()));
}

std::size_t word_a_length(std::size_t k) {
    if (k > 30) {
        throw CapExceeded("A_k length overflows for k > 30");
    }
    const std::size_t p = std::size_t{1} << (2 * k);  // 4^k
    return (4 * p + 3 * p - 1) / 3;
}

Word word_a_finite(std::size_t k) {
    require_within_cap(word_a_length(k), "A_k");
    Word a{0, 0};
    for (std::size_t i = 0; i < k; ++i) {
        a = prepend_zero_mu2(a);
    }
    return a;
}

Word word_a(std::size_t n) {
    require_within_cap(n, "word a");
    // A_k is a prefix of A_{k+1}
    Word a{0, 0};
    while (a.size() < n) {
        a = prepend_zero_mu2(a.prefix((n + 2) / 4 + 1));
    }
    return a.prefix(n);
}

Word g_b(const Word& bits, const Word& w) {
    Word out = w;
    for (std::size_t i = bits.size(); i-- > 0;) {
        require_within_cap(4 * out.size() + 1, "g_b");
        out = bits[i] == 1 ? prepend_zero_mu2(out) : mu_squared()(out);
    }
    return out;
}

BitStream BitStream::parse(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        throw ParseError("bit stream needs a '(period)' block", text.size());
    }
    if (text.size() < open + 3 || text.back() != ')') {
        throw ParseError("bit stream period must be nonempty and end with ')'", text.size());
    }
    BitStream b;
    b.prefix = Word::parse(text.substr(0, open));
    try {
        b.period = Word::parse(text.substr(open + 1, text.size() - open - 2));
    } catch (const ParseError& e) {
        throw ParseError("invalid period bit", open + 1 + e.position());
    }
    return b;
}

Word word_wb(const BitStream& bits, std::size_t n) {
    require_within_cap(n, "word w_b");
    // g_{b_1..b_k}(0) is a prefix of g_{b_1..b_k}(00) and of every later
    // g_{b_1..b_j}(0), and has length >= 4^k.
    std::size_t k = 0;
    while ((std::size_t{1} << (2 * k)) < n) {
        ++k;
    }
    Word prefix_bits;
    for (std::size_t i = 0; i < k; ++i) {
        prefix_bits = prefix_bits + Word{bits.bit(i)};
    }
    return g_b(prefix_bits, Word{0}).prefix(n);
}

Word word_a_automatic(std::size_t n) {
    require_within_cap(n, "word a (automatic)");
    if (n == 0) {
        return {};
    }
    return coding_g()(fixed_point_prefix(morphism_h(), 0, n));
}

BetaParams beta_params(const Exponent& alpha, std::size_t s) {
    if (alpha <= Exponent{2}) {
        throw PreconditionError("alpha must exceed 2");
    }
    if (s < 3 || s > 24) {
        throw PreconditionError("s must lie in [3, 24]");
    }
    const std::int64_t scale = std::int64_t{1} << s;
    const std::int64_t r = alpha.floor() + 1;
    // largest integer t with t < (r - alpha) * 2^s
    const __int128 x = (static_cast<__int128>(r) * alpha.denominator() - alpha.numerator()) * scale;
    const __int128 den = alpha.denominator();
    const auto t_bound = static_cast<std::int64_t>(x % den == 0 ? x / den - 1 : x / den);
    const Word block = mu_power(Word{0}, s);
    for (std::int64_t t = std::min(scale - 2, t_bound); t >= 1; --t) {
        const auto i = static_cast<std::size_t>(t);
        if (block[i] == 0 && block[i + 1] == 0) {
            BetaParams params{alpha, s, static_cast<std::size_t>(r), i, Exponent{r * scale - t, scale}};
            if (!(params.beta > alpha)) {
                throw std::logic_error("beta search produced beta <= alpha");
            }
            return params;
        }
    }
    throw PreconditionError("no valid t exists for alpha=" + alpha.str() + ", s=" + std::to_string(s));
}

Word beta_word(const BetaParams& params, std::size_t n) {
    require_within_cap(n, "beta word");
    if (params.r < 3 || params.t == 0 || params.t >= (std::size_t{1} << params.s)) {
        throw PreconditionError("invalid beta parameters");
    }
    const Word padding = zeros(params.r - 2);
    const std::size_t scale = std::size_t{1} << params.s;
    const std::size_t needed = (n + params.t + scale - 1) / scale + 1;
    Word c{0, 0};
    while (c.size() < n) {
        // C_k is a prefix of C_{k+1}, so a prefix of C_k determines a prefix of C_{k+1}
        c = mu_power(padding + c.prefix(needed), params.s).drop(params.t);
    }
    return c.prefix(n);
}

bool is_generator_name(std::string_view name) {
    if (name == "t" || name == "s" || name == "a" || name == "a-automatic") {
        return true;
    }
    return name.starts_with("wb:") || name.starts_with("beta:");
}

Word generate(std::string_view name, std::size_t n) {
    if (name == "t") {
        return word_t(n);
    }
    if (name == "s") {
        return word_s(n);
    }
    if (name == "a") {
        return word_a(n);
    }
    if (name == "a-automatic") {
        return word_a_automatic(n);
    }
    if (name.starts_with("wb:")) {
        return word_wb(BitStream::parse(name.substr(3)), n);
    }
    if (name.starts_with("beta:")) {
        const auto spec = name.substr(5);
        const auto colon = spec.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected beta:<alpha>:<s>", name.size());
        }
        const auto alpha = Exponent::parse(spec.substr(0, colon));
        const auto s = parse_size(spec.substr(colon + 1), 5 + colon + 1);
        return beta_word(beta_params(alpha, s), n);
    }
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

}  // namespace wordpower
