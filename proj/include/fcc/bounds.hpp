#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fcc/dcode_search.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/function_spec.hpp"
#include "fcc/linear_code.hpp"

namespace fcc {

using Rational = boost::rational<long long>;

long long ceil_rational(const Rational& r);
std::string rational_to_string(const Rational& r);
/// Decimal rendering with the given number of fractional digits, truncated.
std::string rational_to_decimal(const Rational& r, int digits);

enum class BoundKind { lower, upper };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    Rational value{0};
    std::string note;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::optional<Rational> best_lower;  // max of lower entries
    std::optional<Rational> best_upper;  // min of upper entries

    void add(std::string name, BoundKind kind, Rational value, std::string note = "");
};

/// Irregular Plotkin bound over F_q:
/// N(D) >= 2q / (M^2 (q-1) - a(q-a)) * sum_{i<j} D_ij, with a = M mod q.
Rational plotkin_irregular(const DistanceMatrix& d, int q);

/// Redundancy Plotkin bound for codes whose value-differing pairs sit at
/// distance >= d_f and all pairs at >= d_d, with L the largest preimage size:
/// r >= ((L-1) d_d + (q^k - L) d_f) / (q^(k-1) (q-1)) - k. Requires d_f > d_d.
Rational plotkin_fcc_dp(int k, int q, long long preimage_max, int d_d, int d_f);

/// Aggregates every applicable lower bound on the optimal redundancy
/// r_f(k, t_d, t_f). Caller-supplied vector subsets are bounded through the
/// requirement-matrix search.
BoundReport lower_bound_suite(const FunctionSpec& f, int t_d, int t_f, const std::vector<std::vector<Word>>& sample_sets = {},
                              const SearchOptions& opts = {});

/// Aggregates upper bounds reachable through the given inner code (distance
/// >= 2 t_d + 1 required) plus construction-specific and generic caps.
BoundReport upper_bound_suite(const FunctionSpec& f, const LinearCode& inner, int t_d, int t_f, const SearchOptions& opts = {});

/// Best available upper value for N(M, D) over F_q: exact search when cheap,
/// otherwise the smaller of the repeated-label construction and the
/// Gilbert-Varshamov existence length.
struct NmdUpper {
    int value = 0;
    bool exact = false;
    std::string method;
};
NmdUpper upper_bound_nmd(std::uint64_t m, int dist, int q, const SearchOptions& opts = {});

/// Greedy existence length for an ordered D-code over F_2:
/// min r with 2^r > max_j sum_{i<j} V(r, D_ij - 1).
int gv_dcode_upper(const DistanceMatrix& d);

/// Ball-union counting feasibility test for a length-n encoding protecting the
/// function against t errors: E * (minimal union of l radius-t balls) <= q^n.
struct FeasibilityResult {
    bool feasible = false;
    std::uint64_t union_lower = 0;  // lower bound on the minimal ball union
    bool relaxed = false;           // true when the union bound is a relaxation
    std::string method;
};

FeasibilityResult hamming_feasible_n(const FunctionSpec& f, int t, int n, bool exact_centers = false);
int smallest_feasible_n(const FunctionSpec& f, int t, bool exact_centers = false);

/// Same test with centers constrained to pairwise distance >= d_d and balls of
/// radius t_f.
FeasibilityResult hamming_feasible_n_dp(const FunctionSpec& f, int d_d, int t_f, int n, bool exact_centers = false);
int smallest_feasible_n_dp(const FunctionSpec& f, int d_d, int t_f, bool exact_centers = false);

/// Exact minimal |union of l radius-t balls| in F_2^n over center placements
/// with pairwise distance >= min_center_distance; brute force, l <= 3, n <= 14.
std::uint64_t min_ball_union_exact(int n, int t, int l, int min_center_distance);

}  // namespace fcc
