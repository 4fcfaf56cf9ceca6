#pragma once

#include <string>
#include <vector>

#include "fcc/linear_code.hpp"
#include "fcc/word.hpp"

namespace fcc {

/// Graph on codewords with edges exactly between pairs at the code's minimum
/// distance. Components are labeled at build time.
struct MinDistGraph {
    std::vector<Word> vertices;
    int d_min = 0;
    std::vector<std::vector<int>> adjacency;
    std::vector<int> component;  // label per vertex, 0-based
    int components = 0;
};

/// O(M^2) pair sweep; requires at least two distinct codewords.
MinDistGraph build_min_distance_graph(const std::vector<Word>& code);

int component_count(const MinDistGraph& g);

enum class StrictFccVerdict { ruled_out, not_ruled_out };

/// Necessary-condition test: a code whose minimum-distance graph has Q
/// components cannot be a strict FCC for any function with more than Q values.
/// Never claims an FCC exists.
StrictFccVerdict strict_fcc_feasible(const std::vector<Word>& code, int image_size);
StrictFccVerdict strict_fcc_feasible(const MinDistGraph& g, int image_size);

/// Sphere-packing equality M * |B(t)| = q^n; requires odd minimum distance.
bool is_perfect(const std::vector<Word>& code, int q);
bool is_perfect(const LinearCode& code);

/// Singleton equality M = q^(n-d+1).
bool is_mds(const std::vector<Word>& code, int q);
bool is_mds(const LinearCode& code);

/// DOT rendering of the graph for external viewers.
std::string to_dot(const MinDistGraph& g);

}  // namespace fcc
