// wordpower: generate binary words, check power-freeness, classify squares,
// factorize, compute beta parameters and run the verification suites.
//
// Exit codes: 0 success / free, 1 not free / verification failure,
// 2 usage error, 3 length cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "wordpower/constructions.hpp"
#include "wordpower/errors.hpp"
#include "wordpower/morphism.hpp"
#include "wordpower/repetition.hpp"
#include "wordpower/square_atlas.hpp"
#include "wordpower/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wordpower;

constexpr int kExitOk = 0;
constexpr int kExitNotFree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
};

// One report line per call; a whole line is written at once.
class Reporter {
public:
    explicit Reporter(const Options& opts) : json_(opts.json) {}

    void emit(const ordered_json& record, const std::string& human) {
        const std::string line = (json_ ? record.dump() : human) + "\n";
        const std::lock_guard lock(mutex_);
        std::fwrite(line.data(), 1, line.size(), stdout);
        std::fflush(stdout);
    }

private:
    bool json_;
    std::mutex mutex_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Word argument: literal 0/1 text, or @path to a file holding one word.
Word load_word(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::string text = read_file(arg.substr(1));
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
            text.pop_back();
        }
        return parse_word(text);
    }
    return parse_word(arg);
}

// Word-or-generator argument: generator names need a length.
Word load_input(const std::string& arg, std::optional<std::size_t> n) {
    if (is_generator_name(arg)) {
        if (!n) {
            throw UsageError("generator '" + arg + "' needs a length");
        }
        return generate(arg, *n);
    }
    Word w = load_word(arg);
    return n ? w.prefix(*n) : w;
}

ordered_json occurrence_json(const PowerOccurrence& occ) {
    return {{"start", occ.start}, {"period", occ.period}, {"length", occ.length}, {"exponent", occ.exponent().str()}};
}

std::string occurrence_text(const PowerOccurrence& occ) {
    return "start=" + std::to_string(occ.start) + " period=" + std::to_string(occ.period) +
           " length=" + std::to_string(occ.length) + " exponent=" + occ.exponent().str();
}

int cmd_gen(Reporter& out, const std::string& name, std::size_t n) {
    const Word w = generate(name, n);
    out.emit({{"kind", "word"}, {"generator", name}, {"length", w.size()}, {"word", w.str()}}, w.str());
    return kExitOk;
}

int cmd_check(Reporter& out, const std::string& input, const std::string& spec, bool witness) {
    const Word w = load_word(input);
    const auto threshold = PowerThreshold::parse(spec);
    const auto found = find_power(w, threshold.value, threshold.plus);
    ordered_json record{{"kind", "verdict"},
                        {"length", w.size()},
                        {"threshold", threshold.value.str()},
                        {"plus", threshold.plus},
                        {"free", !found.has_value()},
                        {"witness", found ? occurrence_json(*found) : ordered_json(nullptr)}};
    out.emit(record, found ? "not-free " + occurrence_text(*found) : std::string("free"));
    if (witness) {
        for (const auto& occ : list_repetitions(w, threshold.value, threshold.plus)) {
            ordered_json line{{"kind", "occurrence"}};
            line.update(occurrence_json(occ));
            out.emit(line, "occurrence " + occurrence_text(occ));
        }
    }
    return found ? kExitNotFree : kExitOk;
}

int cmd_squares(Reporter& out, const std::string& input, std::optional<std::size_t> n) {
    const Word w = load_input(input, n);
    for (const auto& sq : squares_in(w)) {
        const auto m = atlas_membership(sq.square);
        ordered_json record{{"kind", "membership"},
                            {"position", sq.position},
                            {"square", sq.square.str()},
                            {"family", to_string(m.family)}};
        std::string human = std::to_string(sq.position) + " " + sq.square.str() + " " + std::string(to_string(m.family));
        if (m.family != AtlasFamily::None) {
            record["level"] = m.level;
            record["base"] = m.base.str();
            human += " level=" + std::to_string(m.level) + " base=" + m.base.str();
        }
        out.emit(record, human);
    }
    return kExitOk;
}

int cmd_atlas(Reporter& out, const std::string& input) {
    const Word w = load_word(input);
    const auto m = atlas_membership(w);
    ordered_json record{{"kind", "membership"}, {"word", w.str()}, {"family", to_string(m.family)}};
    std::string human = std::string(to_string(m.family));
    if (m.family != AtlasFamily::None) {
        record["level"] = m.level;
        record["base"] = m.base.str();
        human += " level=" + std::to_string(m.level) + " base=" + m.base.str();
    }
    out.emit(record, human);
    return kExitOk;
}

int cmd_factorize(Reporter& out, const std::string& input, const std::string& spec) {
    const Word x = load_word(input);
    const auto threshold = Exponent::parse(spec);
    for (const auto& f : factorize_ks(x, threshold)) {
        out.emit({{"kind", "factorization"}, {"u", f.u.str()}, {"y", f.y.str()}, {"v", f.v.str()}},
                 "u=" + f.u.str() + " y=" + f.y.str() + " v=" + f.v.str());
    }
    return kExitOk;
}

int cmd_params(Reporter& out, const std::string& alpha_text, std::size_t s) {
    const auto p = beta_params(Exponent::parse(alpha_text), s);
    out.emit({{"kind", "params"},
              {"alpha", p.alpha.str()},
              {"s", p.s},
              {"r", p.r},
              {"t", p.t},
              {"beta", p.beta.str()}},
             "r=" + std::to_string(p.r) + " t=" + std::to_string(p.t) + " beta=" + p.beta.str());
    return kExitOk;
}

template <std::uint8_t From, std::uint8_t To>
std::string run_apply(const Morphism<From, To>& m, const std::string& word_text, std::size_t times) {
    auto w = BasicWord<From>::parse(word_text);
    if constexpr (From == To) {
        return iterate(m, std::move(w), times).str();
    } else {
        if (times != 1) {
            throw UsageError("a morphism between different alphabets can only be applied once");
        }
        return m(w).str();
    }
}

int cmd_apply(Reporter& out, const std::string& table, const std::string& word_text, std::size_t times) {
    std::string result;
    if (table == "mu") {
        result = run_apply(mu(), word_text, times);
    } else if (table == "h") {
        result = run_apply(morphism_h(), word_text, times);
    } else if (table == "f") {
        result = run_apply(morphism_f(), word_text, times);
    } else if (table == "g") {
        result = run_apply(coding_g(), word_text, times);
    } else if (!table.empty() && table.front() == '@') {
        result = run_apply(parse_morphism<5, 5>(read_file(table.substr(1))), word_text, times);
    } else {
        throw UsageError("unknown morphism '" + table + "' (mu, h, f, g or @file)");
    }
    out.emit({{"kind", "word"}, {"morphism", table}, {"length", result.size()}, {"word", result}}, result);
    return kExitOk;
}

int cmd_verify(Reporter& out, const std::vector<std::string>& requested) {
    std::vector<std::string> names;
    for (const auto& r : requested) {
        if (r == "all") {
            names.assign(verify::suite_names().begin(), verify::suite_names().end());
            break;
        }
        names.push_back(r);
    }
    for (const auto& name : names) {
        const auto& known = verify::suite_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw UsageError("unknown verification suite '" + name + "'");
        }
    }
    std::vector<std::future<verify::SuiteResult>> running;
    running.reserve(names.size());
    for (const auto& name : names) {
        running.push_back(std::async(std::launch::async, [name] { return verify::run_suite(name); }));
    }
    bool all_passed = true;
    for (auto& f : running) {
        const auto r = f.get();
        all_passed = all_passed && r.passed;
        out.emit({{"kind", "check"},
                  {"suite", r.name},
                  {"passed", r.passed},
                  {"detail", r.detail},
                  {"elapsed_ms", r.elapsed.count()}},
                 std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.elapsed.count()) +
                     " ms) " + r.detail);
    }
    out.emit({{"kind", "verdict"}, {"passed", all_passed}, {"suites", names.size()}},
             all_passed ? "all passed" : "verification failed");
    return all_passed ? kExitOk : kExitNotFree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary-word repetition toolkit"};
    app.require_subcommand(1);

    Options opts;
    std::size_t cap = 0;
    app.add_flag("--json", opts.json, "Emit JSON lines instead of text");
    app.add_option("--cap", cap, "Global word length cap (overrides WORDPOWER_CAP)");

    std::string gen_name;
    std::size_t gen_n = 0;
    auto* gen = app.add_subcommand("gen", "Print a prefix of a generated word");
    gen->add_option("generator", gen_name, "t, s, a, a-automatic, wb:<bits>, beta:<alpha>:<s>")->required();
    gen->add_option("n", gen_n, "Prefix length")->required();

    std::string check_word;
    std::string check_exp;
    bool check_witness = false;
    auto* check = app.add_subcommand("check", "Check power-freeness of a word");
    check->add_option("word", check_word, "Word or @file")->required();
    check->add_option("exponent", check_exp, "p/q, n, or with '+' for the plus variant")->required();
    check->add_flag("--witness", check_witness, "Also list every maximal repetition meeting the threshold");

    std::string sq_input;
    std::optional<std::size_t> sq_n;
    auto* squares = app.add_subcommand("squares", "List squares with their family classification");
    squares->add_option("input", sq_input, "Word, @file or generator name")->required();
    squares->add_option("n", sq_n, "Prefix length (required for generators)");

    std::string atlas_word;
    auto* atlas = app.add_subcommand("atlas", "Classify a word against the square families");
    atlas->add_option("word", atlas_word, "Word or @file")->required();

    std::string fact_word;
    std::string fact_threshold = "7/3";
    auto* fact = app.add_subcommand("factorize", "List factorizations x = u mu(y) v");
    fact->add_option("word", fact_word, "Word or @file")->required();
    fact->add_option("--threshold", fact_threshold, "Exponent in (2, 7/3]")->capture_default_str();

    std::string params_alpha;
    std::size_t params_s = 3;
    auto* params = app.add_subcommand("params", "Compute (r, t, beta) for alpha and s");
    params->add_option("alpha", params_alpha, "Rational alpha > 2")->required();
    params->add_option("s", params_s, "s >= 3")->required();

    std::string apply_table;
    std::string apply_word;
    std::size_t apply_times = 1;
    auto* apply_cmd = app.add_subcommand("apply", "Apply a morphism to a word");
    apply_cmd->add_option("morphism", apply_table, "mu, h, f, g or @file of 'letter:image' lines")->required();
    apply_cmd->add_option("word", apply_word, "Word over the morphism's domain")->required();
    apply_cmd->add_option("--times", apply_times, "Number of applications")->capture_default_str();

    std::vector<std::string> verify_names;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("suites", verify_names, "Suite names or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cap > 0) {
        set_length_cap(cap);
    }
    Reporter out(opts);
    try {
        if (*gen) {
            return cmd_gen(out, gen_name, gen_n);
        }
        if (*check) {
            return cmd_check(out, check_word, check_exp, check_witness);
        }
        if (*squares) {
            return cmd_squares(out, sq_input, sq_n);
        }
        if (*atlas) {
            return cmd_atlas(out, atlas_word);
        }
        if (*fact) {
            return cmd_factorize(out, fact_word, fact_threshold);
        }
        if (*params) {
            return cmd_params(out, params_alpha, params_s);
        }
        if (*apply_cmd) {
            return cmd_apply(out, apply_table, apply_word, apply_times);
        }
        if (*verify_cmd) {
            return cmd_verify(out, verify_names);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
