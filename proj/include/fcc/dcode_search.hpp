#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcc/distance_matrix.hpp"
#include "fcc/word.hpp"

namespace fcc {

struct DcodeCheck {
    bool ok = true;
    // first violating pair when !ok
    int i = -1;
    int j = -1;
    int distance = 0;
    int required = 0;
};

/// True iff d(p_i, p_j) >= D[i][j] for all pairs, in the given order.
DcodeCheck is_dcode(const std::vector<Word>& parities, const DistanceMatrix& d);

enum class SearchStatus { exact, lower_bound_only, infeasible };

struct SearchResult {
    SearchStatus status = SearchStatus::lower_bound_only;
    /// Exact N(D) when status == exact; otherwise a proven lower bound on N(D).
    int length = 0;
    std::optional<std::vector<Word>> witness;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;

    bool exact() const { return status == SearchStatus::exact; }
};

struct SearchOptions {
    int r_max = 24;
    std::uint64_t node_budget = 50'000'000;
    /// Number of workers splitting the top-level branch. Results are merged to
    /// the minimal feasible choice, so successful searches are deterministic;
    /// which subtree trips the node budget first may depend on scheduling.
    int parallel = 1;
    /// Search rows in descending row-sum order instead of the caller's order.
    bool row_sum_heuristic = false;
};

/// Smallest r admitting an ordered D-code p_1..p_M in F_q^r, found by
/// depth-first backtracking with p_1 anchored at the zero word (translating a
/// D-code preserves all pairwise distances). Rows are assigned in order and
/// symbols tried ascending, so witnesses are reproducible. The scan starts at
/// the larger of the irregular Plotkin bound and the largest matrix entry.
SearchResult min_length_dcode(const DistanceMatrix& d, int q, const SearchOptions& opts = {});

/// N(M, D): min_length_dcode on the M x M constant-D matrix.
SearchResult min_length_code(int m, int d, int q, const SearchOptions& opts = {});

/// Length range for a linear [n, k, >= d] code over F_q.
struct LinearLengthResult {
    int lower = 0;                 // Hamming + Singleton packing bound
    std::optional<int> upper;      // realized by a built-in construction
    std::string construction;      // which construction, when upper is set
    bool exact = false;            // lower meets upper
};

/// Packing lower bound (valid for nonlinear codes of size q^k as well) plus
/// the best built-in constructive upper bound: identity for d=1, single parity
/// check for d=2, repetition for k=1, shortened Hamming for d=3 over F_2.
LinearLengthResult min_length_linear(int k, int d, int q);

}  // namespace fcc
