#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcc/fcc_code.hpp"
#include "fcc/function_spec.hpp"

namespace fcc {

struct Violation {
    Word u;
    Word v;
    int distance = 0;
    int required = 0;
};

struct VerificationReport {
    bool is_valid = false;
    int measured_dd = 0;
    /// Minimum distance across value-differing pairs; absent for constant f.
    std::optional<int> measured_df;
    std::vector<Violation> violations;
    std::uint64_t pairs_checked = 0;
};

/// Full pair sweep of the defining distance conditions: every distinct pair at
/// distance >= d_d, every value-differing pair at distance >= d_f.
VerificationReport check_fcc(const FccCode& code, const FunctionSpec& f, int d_d, int d_f);

/// Nearest-codeword decoding by full codebook scan. Returns the unique nearest
/// codeword's message, or nullopt on a tie between distinct codewords.
std::optional<Word> decode_data(const FccCode& code, const Word& received);

/// f(message of the nearest codeword). Ties among codewords that all share one
/// function value resolve to that value; ties across values return nullopt.
std::optional<Value> decode_function(const FccCode& code, const FunctionSpec& f, const Word& received);

class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SweepReport {
    std::string mode;  // "exhaustive" or "monte-carlo"
    std::uint64_t trials = 0;
    std::uint64_t data_successes = 0;
    std::uint64_t data_failures = 0;
    std::uint64_t function_successes = 0;
    std::uint64_t function_failures = 0;
    std::uint64_t ambiguous_ties = 0;
    std::optional<std::uint64_t> seed;  // monte-carlo only

    bool clean() const { return data_failures == 0 && function_failures == 0; }
};

/// Injects every error pattern of weight <= t_d (data decode) and <= t_f
/// (function decode) into every codeword. Throws budget_error when the pattern
/// count exceeds the budget; use monte_carlo_sweep instead.
SweepReport exhaustive_error_sweep(const FccCode& code, const FunctionSpec& f, int t_d, int t_f,
                                   std::uint64_t budget = 50'000'000);

/// Per trial: a uniform codeword plus uniform errors of weight <= t_d and
/// <= t_f. Deterministic for a fixed seed (splitmix64-seeded mt19937_64 per
/// trial, so trials are independent of evaluation order).
SweepReport monte_carlo_sweep(const FccCode& code, const FunctionSpec& f, int t_d, int t_f, std::uint64_t trials,
                              std::uint64_t seed);

}  // namespace fcc
