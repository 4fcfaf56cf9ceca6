#include "fcc/min_distance_graph.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "fcc/ball_counting.hpp"

namespace fcc {

namespace {

int min_pairwise(const std::vector<Word>& code) {
    int best = code.front().size();
    bool any = false;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            int dij = hamming_distance(code[i], code[j]);
            if (dij == 0) throw std::invalid_argument("codewords must be distinct");
            best = std::min(best, dij);
            any = true;
        }
    if (!any) throw std::invalid_argument("need at least two codewords");
    return best;
}

}  // namespace

MinDistGraph build_min_distance_graph(const std::vector<Word>& code) {
    if (code.size() < 2) throw std::invalid_argument("need at least two codewords");
    if (code.size() > 4096) throw std::length_error("code too large for the pair sweep");
    MinDistGraph g;
    g.vertices = code;
    g.d_min = min_pairwise(code);
    const int m = static_cast<int>(code.size());
    g.adjacency.assign(static_cast<std::size_t>(m), {});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (hamming_distance(code[static_cast<std::size_t>(i)], code[static_cast<std::size_t>(j)]) == g.d_min) {
                g.adjacency[static_cast<std::size_t>(i)].push_back(j);
                g.adjacency[static_cast<std::size_t>(j)].push_back(i);
            }
    // BFS component labeling
    g.component.assign(static_cast<std::size_t>(m), -1);
    g.components = 0;
    std::vector<int> queue;
    for (int s = 0; s < m; ++s) {
        if (g.component[static_cast<std::size_t>(s)] >= 0) continue;
        int label = g.components++;
        queue.assign(1, s);
        g.component[static_cast<std::size_t>(s)] = label;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : g.adjacency[static_cast<std::size_t>(v)])
                if (g.component[static_cast<std::size_t>(w)] < 0) {
                    g.component[static_cast<std::size_t>(w)] = label;
                    queue.push_back(w);
                }
        }
    }
    return g;
}

int component_count(const MinDistGraph& g) { return g.components; }

StrictFccVerdict strict_fcc_feasible(const MinDistGraph& g, int image_size) {
    if (image_size < 2) throw std::invalid_argument("strict FCCs need at least two function values");
    return image_size >= g.components + 1 ? StrictFccVerdict::ruled_out : StrictFccVerdict::not_ruled_out;
}

StrictFccVerdict strict_fcc_feasible(const std::vector<Word>& code, int image_size) {
    return strict_fcc_feasible(build_min_distance_graph(code), image_size);
}

bool is_perfect(const std::vector<Word>& code, int q) {
    if (code.size() < 2) throw std::invalid_argument("need at least two codewords");
    int d = min_pairwise(code);
    if (d % 2 == 0) throw std::invalid_argument("perfect-code test needs odd minimum distance");
    int n = code.front().size();
    int t = (d - 1) / 2;
    std::uint64_t covered;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(code.size()), ball_size(n, t, q), &covered)) return false;
    return covered == pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
}

bool is_perfect(const LinearCode& code) { return is_perfect(code.codewords(), code.q()); }

bool is_mds(const std::vector<Word>& code, int q) {
    if (code.size() < 2) throw std::invalid_argument("need at least two codewords");
    int d = min_pairwise(code);
    int n = code.front().size();
    return static_cast<std::uint64_t>(code.size()) == pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(n - d + 1));
}

bool is_mds(const LinearCode& code) { return is_mds(code.codewords(), code.q()); }

std::string to_dot(const MinDistGraph& g) {
    std::ostringstream out;
    out << "graph min_distance {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) out << "  v" << i << " [label=\"" << g.vertices[i].to_string() << "\"];\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (int j : g.adjacency[i])
            if (static_cast<std::size_t>(j) > i) out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace fcc
