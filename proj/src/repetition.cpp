#include "wordpower/repetition.hpp"

#include <algorithm>

#include "wordpower/errors.hpp"

namespace wordpower {

namespace {

// Calls visit(start, length) for every maximal factor of period p that is
// longer than p, in increasing start order. Stops early when visit returns
// false; the return value reports whether the scan ran to completion.
template <typename Visit>
bool for_each_run(std::span<const std::uint8_t> w, std::size_t p, Visit&& visit) {
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i + p < n) {
        if (w[i] != w[i + p]) {
            ++i;
            continue;
        }
        const std::size_t s = i;
        while (i + p < n && w[i] == w[i + p]) {
            ++i;
        }
        if (!visit(s, (i - s) + p)) {
            return false;
        }
    }
    return true;
}

bool meets(std::size_t length, std::size_t period, const Exponent& threshold, bool strict) {
    const Exponent e{static_cast<std::int64_t>(length), static_cast<std::int64_t>(period)};
    return strict ? e > threshold : e >= threshold;
}

void require_threshold(const Exponent& threshold) {
    if (threshold < Exponent{1}) {
        throw PreconditionError("threshold must be at least 1");
    }
}

std::size_t leading_constant_run(const Word& w) {
    std::size_t len = 1;
    while (len < w.size() && w[len] == w[0]) {
        ++len;
    }
    return len;
}

}  // namespace

bool is_valid_occurrence(const Word& w, const PowerOccurrence& occ) noexcept {
    if (occ.period == 0 || occ.length == 0 || occ.start > w.size() || occ.length > w.size() - occ.start) {
        return false;
    }
    for (std::size_t i = occ.start; i + occ.period < occ.end(); ++i) {
        if (w[i] != w[i + occ.period]) {
            return false;
        }
    }
    return true;
}

std::size_t smallest_period(const Word& w) {
    if (w.empty()) {
        throw PreconditionError("smallest_period of the empty word");
    }
    // failure function: border[i] = longest proper border of w[0..i]
    std::vector<std::size_t> border(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) {
            k = border[k - 1];
        }
        if (w[i] == w[k]) {
            ++k;
        }
        border[i] = k;
    }
    return w.size() - border.back();
}

Exponent exponent_of(const Word& w) {
    return {static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(smallest_period(w))};
}

MaxExponent max_exponent(const Word& w) {
    if (w.empty()) {
        throw PreconditionError("max_exponent of the empty word");
    }
    MaxExponent best{Exponent{1}, PowerOccurrence{0, 1, 1}};
    for (std::size_t p = 1; p < w.size(); ++p) {
        for_each_run(w.letters(), p, [&](std::size_t start, std::size_t length) {
            const PowerOccurrence occ{start, p, length};
            const Exponent e = occ.exponent();
            if (e > best.exponent || (e == best.exponent && start < best.witness.start)) {
                best = {e, occ};
            }
            return true;
        });
    }
    return best;
}

std::optional<PowerOccurrence> find_power(const Word& w, const Exponent& threshold, bool strict) {
    require_threshold(threshold);
    if (w.empty()) {
        return std::nullopt;
    }
    if (!strict && threshold == Exponent{1}) {
        return PowerOccurrence{0, 1, leading_constant_run(w)};
    }
    std::optional<PowerOccurrence> best;
    for (std::size_t p = 1; p < w.size(); ++p) {
        // a factor of period p meeting the threshold is longer than p
        if (best && best->start == 0) {
            break;
        }
        for_each_run(w.letters(), p, [&](std::size_t start, std::size_t length) {
            if (best && start >= best->start) {
                return false;
            }
            if (meets(length, p, threshold, strict)) {
                best = PowerOccurrence{start, p, length};
                return false;
            }
            return true;
        });
    }
    return best;
}

bool is_power_free(const Word& w, const Exponent& threshold, bool plus) {
    require_threshold(threshold);
    if (w.empty()) {
        return true;
    }
    if (!plus && threshold == Exponent{1}) {
        return false;
    }
    for (std::size_t p = 1; p < w.size(); ++p) {
        const bool clean = for_each_run(w.letters(), p, [&](std::size_t, std::size_t length) {
            return !meets(length, p, threshold, plus);
        });
        if (!clean) {
            return false;
        }
    }
    return true;
}

std::vector<PowerOccurrence> maximal_runs(const Word& w, std::size_t period) {
    if (period == 0) {
        throw PreconditionError("period must be positive");
    }
    std::vector<PowerOccurrence> out;
    for_each_run(w.letters(), period, [&](std::size_t start, std::size_t length) {
        out.push_back({start, period, length});
        return true;
    });
    return out;
}

std::vector<PowerOccurrence> list_repetitions(const Word& w, const Exponent& min_exponent, bool strict) {
    require_threshold(min_exponent);
    std::vector<PowerOccurrence> out;
    for (std::size_t p = 1; p < w.size(); ++p) {
        for_each_run(w.letters(), p, [&](std::size_t start, std::size_t length) {
            if (meets(length, p, min_exponent, strict)) {
                out.push_back({start, p, length});
            }
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ends_with_overlap(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p < n; ++p) {
        // suffix of length 2p+1 with period p
        std::size_t i = n - 2 * p - 1;
        bool periodic = true;
        for (; i + p < n; ++i) {
            if (w[i] != w[i + p]) {
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

}  // namespace wordpower
