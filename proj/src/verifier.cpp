#include "fcc/verifier.hpp"

#include <algorithm>
#include <iterator>
#include <random>

#include "fcc/ball_counting.hpp"

namespace fcc {

VerificationReport check_fcc(const FccCode& code, const FunctionSpec& f, int d_d, int d_f) {
    if (f.q() != code.q() || f.k() != code.k()) throw std::invalid_argument("function and code dimensions must match");
    if (d_d < 0 || d_f < d_d) throw std::invalid_argument("need 0 <= d_d <= d_f");
    const std::uint64_t total = code.size();
    VerificationReport report;
    report.measured_dd = code.n() + 1;
    int measured_df = code.n() + 1;
    bool any_cross = false;
    std::vector<Value> values;
    values.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) values.push_back(f.eval(code.message_at(r)));
    for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = i + 1; j < total; ++j) {
            ++report.pairs_checked;
            int dist = hamming_distance(code.codeword_at(i), code.codeword_at(j));
            report.measured_dd = std::min(report.measured_dd, dist);
            bool differs = !(values[i] == values[j]);
            if (differs) {
                any_cross = true;
                measured_df = std::min(measured_df, dist);
            }
            int required = differs ? d_f : d_d;
            if (dist < required) report.violations.push_back(Violation{code.message_at(i), code.message_at(j), dist, required});
        }
    if (any_cross) report.measured_df = measured_df;
    report.is_valid = report.violations.empty();
    return report;
}

std::optional<Word> decode_data(const FccCode& code, const Word& received) {
    if (received.q() != code.q() || received.size() != code.n()) throw std::invalid_argument("received word length mismatch");
    std::uint64_t best_rank = 0;
    int best = code.n() + 1;
    bool tie = false;
    for (std::uint64_t r = 0; r < code.size(); ++r) {
        int dist = hamming_distance(code.codeword_at(r), received);
        if (dist < best) {
            best = dist;
            best_rank = r;
            tie = false;
        } else if (dist == best) {
            tie = true;
        }
    }
    if (tie) return std::nullopt;
    return code.message_at(best_rank);
}

std::optional<Value> decode_function(const FccCode& code, const FunctionSpec& f, const Word& received) {
    if (received.q() != code.q() || received.size() != code.n()) throw std::invalid_argument("received word length mismatch");
    if (f.q() != code.q() || f.k() != code.k()) throw std::invalid_argument("function and code dimensions must match");
    int best = code.n() + 1;
    std::vector<Value> best_values;
    for (std::uint64_t r = 0; r < code.size(); ++r) {
        int dist = hamming_distance(code.codeword_at(r), received);
        if (dist > best) continue;
        Value v = f.eval(code.message_at(r));
        if (dist < best) {
            best = dist;
            best_values.assign(1, v);
        } else if (std::find(best_values.begin(), best_values.end(), v) == best_values.end()) {
            best_values.push_back(v);
        }
    }
    if (best_values.size() != 1) return std::nullopt;
    return best_values.front();
}

namespace {

// Applies an error at `positions` with nonzero per-position offsets encoded in
// `deltas`, then runs the decode check.
struct SweepCounters {
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::uint64_t ambiguous = 0;
};

template <typename Check>
void for_each_pattern(const Word& codeword, int t, Check&& check) {
    const int n = codeword.size();
    const int q = codeword.q();
    std::vector<int> positions;
    std::vector<std::uint8_t> received(codeword.symbols());
    // weight 0
    check(Word(q, received));
    // choose error positions depth-first, then sweep nonzero offsets per position
    auto assign = [&](auto&& self, std::size_t idx) -> void {
        if (idx == positions.size()) {
            check(Word(q, received));
            return;
        }
        int pos = positions[idx];
        std::uint8_t original = received[static_cast<std::size_t>(pos)];
        for (int delta = 1; delta < q; ++delta) {
            received[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>((original + delta) % q);
            self(self, idx + 1);
        }
        received[static_cast<std::size_t>(pos)] = original;
    };
    auto choose = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            assign(assign, 0);
            return;
        }
        for (int pos = start; pos + remaining <= n; ++pos) {
            positions.push_back(pos);
            self(self, pos + 1, remaining - 1);
            positions.pop_back();
        }
    };
    for (int w = 1; w <= t; ++w) choose(choose, 0, w);
}

}  // namespace

SweepReport exhaustive_error_sweep(const FccCode& code, const FunctionSpec& f, int t_d, int t_f, std::uint64_t budget) {
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    const std::uint64_t patterns_d = ball_size(code.n(), t_d, code.q());
    const std::uint64_t patterns_f = ball_size(code.n(), t_f, code.q());
    std::uint64_t per_codeword, total_checks;
    if (__builtin_add_overflow(patterns_d, patterns_f, &per_codeword) ||
        __builtin_mul_overflow(per_codeword, code.size(), &total_checks) || total_checks > budget)
        throw budget_error("exhaustive sweep exceeds the pattern budget; use monte_carlo_sweep");

    SweepReport report;
    report.mode = "exhaustive";
    for (std::uint64_t r = 0; r < code.size(); ++r) {
        const Word& cw = code.codeword_at(r);
        Word msg = code.message_at(r);
        Value expected = f.eval(msg);
        for_each_pattern(cw, t_d, [&](const Word& received) {
            ++report.trials;
            std::optional<Word> decoded = decode_data(code, received);
            if (decoded && *decoded == msg) ++report.data_successes;
            else {
                ++report.data_failures;
                if (!decoded) ++report.ambiguous_ties;
            }
        });
        for_each_pattern(cw, t_f, [&](const Word& received) {
            ++report.trials;
            std::optional<Value> decoded = decode_function(code, f, received);
            if (decoded && *decoded == expected) ++report.function_successes;
            else {
                ++report.function_failures;
                if (!decoded) ++report.ambiguous_ties;
            }
        });
    }
    return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Word random_error_word(const Word& codeword, int t, std::mt19937_64& rng) {
    const int n = codeword.size();
    const int q = codeword.q();
    // weight w drawn proportional to C(n,w)(q-1)^w, then uniform positions/offsets
    std::vector<double> weight_mass;
    for (int w = 0; w <= t; ++w) weight_mass.push_back(static_cast<double>(ball_size(n, w, q) - (w ? ball_size(n, w - 1, q) : 0)));
    std::discrete_distribution<int> weight_dist(weight_mass.begin(), weight_mass.end());
    int w = weight_dist(rng);
    std::vector<int> all_positions(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all_positions[static_cast<std::size_t>(i)] = i;
    std::vector<int> chosen;
    std::sample(all_positions.begin(), all_positions.end(), std::back_inserter(chosen), w, rng);
    std::vector<std::uint8_t> received(codeword.symbols());
    std::uniform_int_distribution<int> offset_dist(1, q - 1);
    for (int pos : chosen)
        received[static_cast<std::size_t>(pos)] =
            static_cast<std::uint8_t>((received[static_cast<std::size_t>(pos)] + offset_dist(rng)) % q);
    return Word(q, std::move(received));
}

}  // namespace

SweepReport monte_carlo_sweep(const FccCode& code, const FunctionSpec& f, int t_d, int t_f, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    SweepReport report;
    report.mode = "monte-carlo";
    report.seed = seed;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(splitmix64(seed ^ (trial + 1)));
        std::uniform_int_distribution<std::uint64_t> pick(0, code.size() - 1);
        std::uint64_t r = pick(rng);
        const Word& cw = code.codeword_at(r);
        Word msg = code.message_at(r);
        ++report.trials;
        std::optional<Word> data = decode_data(code, random_error_word(cw, t_d, rng));
        if (data && *data == msg) ++report.data_successes;
        else {
            ++report.data_failures;
            if (!data) ++report.ambiguous_ties;
        }
        std::optional<Value> fn = decode_function(code, f, random_error_word(cw, t_f, rng));
        if (fn && *fn == f.eval(msg)) ++report.function_successes;
        else {
            ++report.function_failures;
            if (!fn) ++report.ambiguous_ties;
        }
    }
    return report;
}

}  // namespace fcc
