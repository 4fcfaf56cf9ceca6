#include "fcc/dcode_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "fcc/ball_counting.hpp"

namespace fcc {

DcodeCheck is_dcode(const std::vector<Word>& parities, const DistanceMatrix& d) {
    d.validate();
    if (static_cast<int>(parities.size()) != d.size()) throw std::invalid_argument("parity count must match matrix size");
    for (int i = 0; i < d.size(); ++i)
        for (int j = i + 1; j < d.size(); ++j) {
            int dist = hamming_distance(parities[static_cast<std::size_t>(i)], parities[static_cast<std::size_t>(j)]);
            if (dist < d.at(i, j)) return DcodeCheck{false, i, j, dist, d.at(i, j)};
        }
    return DcodeCheck{};
}

namespace {

struct SearchCtx {
    const std::vector<std::vector<int>>* req = nullptr;
    int m = 0;
    int r = 0;
    int q = 2;
    std::uint64_t total = 0;  // q^r candidates per row
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};

    int need(int i, int j) const { return (*req)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    // batched budget accounting to keep the atomic off the hot path
    bool spend(std::uint64_t& local) {
        if (++local < 4096) return true;
        nodes.fetch_add(local, std::memory_order_relaxed);
        local = 0;
        if (nodes.load(std::memory_order_relaxed) > budget) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        return !exhausted.load(std::memory_order_relaxed);
    }
    void flush(std::uint64_t& local) {
        nodes.fetch_add(local, std::memory_order_relaxed);
        local = 0;
    }
};

// ---- binary fast path: rows as bit masks, distance via popcount ----

bool dfs_binary(SearchCtx& ctx, int level, std::vector<std::uint64_t>& rows, std::uint64_t& local) {
    for (std::uint64_t v = 0; v < ctx.total; ++v) {
        if (!ctx.spend(local)) return false;
        bool ok = true;
        for (int j = 0; j < level; ++j)
            if (std::popcount(v ^ rows[static_cast<std::size_t>(j)]) < ctx.need(level, j)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        rows[static_cast<std::size_t>(level)] = v;
        if (level == ctx.m - 1) return true;
        if (dfs_binary(ctx, level + 1, rows, local)) return true;
        if (ctx.exhausted.load(std::memory_order_relaxed)) return false;
    }
    return false;
}

// ---- generic path: rows as digit vectors, candidates via an odometer ----

int digit_distance(const std::uint8_t* a, const std::uint8_t* b, int r) {
    int d = 0;
    for (int i = 0; i < r; ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

bool dfs_generic(SearchCtx& ctx, int level, std::vector<std::vector<std::uint8_t>>& rows, std::uint64_t& local) {
    std::vector<std::uint8_t> cand(static_cast<std::size_t>(ctx.r), 0);
    for (std::uint64_t v = 0; v < ctx.total; ++v) {
        if (!ctx.spend(local)) return false;
        bool ok = true;
        for (int j = 0; j < level; ++j)
            if (digit_distance(cand.data(), rows[static_cast<std::size_t>(j)].data(), ctx.r) < ctx.need(level, j)) {
                ok = false;
                break;
            }
        if (ok) {
            rows[static_cast<std::size_t>(level)] = cand;
            if (level == ctx.m - 1) return true;
            if (dfs_generic(ctx, level + 1, rows, local)) return true;
            if (ctx.exhausted.load(std::memory_order_relaxed)) return false;
        }
        for (int pos = ctx.r - 1; pos >= 0; --pos) {  // next candidate in ascending rank
            if (++cand[static_cast<std::size_t>(pos)] == ctx.q) cand[static_cast<std::size_t>(pos)] = 0;
            else break;
        }
    }
    return false;
}

std::vector<std::uint8_t> digits_of(std::uint64_t v, int q, int r) {
    std::vector<std::uint8_t> d(static_cast<std::size_t>(r), 0);
    for (int i = r - 1; i >= 0; --i) {
        d[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % static_cast<std::uint64_t>(q));
        v /= static_cast<std::uint64_t>(q);
    }
    return d;
}

// Search at a fixed length. On success fills `found` with one row per matrix
// index (as digit vectors).
bool search_fixed_length(SearchCtx& ctx, int workers, std::vector<std::vector<std::uint8_t>>& found) {
    const bool binary = ctx.q == 2 && ctx.r <= 63;
    if (ctx.m == 1) {
        found.assign(1, std::vector<std::uint8_t>(static_cast<std::size_t>(ctx.r), 0));
        return true;
    }
    if (workers <= 1 || ctx.m < 2 || ctx.total < 2 * static_cast<std::uint64_t>(workers)) {
        std::uint64_t local = 0;
        bool ok;
        if (binary) {
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(ctx.m), 0);
            ok = dfs_binary(ctx, 1, rows, local);
            if (ok) {
                found.clear();
                for (std::uint64_t v : rows) found.push_back(digits_of(v, 2, ctx.r));
            }
        } else {
            std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(ctx.m),
                                                        std::vector<std::uint8_t>(static_cast<std::size_t>(ctx.r), 0));
            ok = dfs_generic(ctx, 1, rows, local);
            if (ok) found = rows;
        }
        ctx.flush(local);
        return ok;
    }

    // Split the choices for the second row across workers; the smallest
    // successful choice wins, matching the sequential result.
    std::atomic<std::uint64_t> best_v{std::numeric_limits<std::uint64_t>::max()};
    std::mutex best_mtx;
    std::vector<std::vector<std::uint8_t>> best_rows;
    auto run = [&](int tid) {
        std::uint64_t local = 0;
        for (std::uint64_t v = static_cast<std::uint64_t>(tid); v < ctx.total; v += static_cast<std::uint64_t>(workers)) {
            if (ctx.exhausted.load(std::memory_order_relaxed)) break;
            if (v >= best_v.load(std::memory_order_relaxed)) break;
            if (!ctx.spend(local)) break;
            std::vector<std::uint8_t> v_digits = digits_of(v, ctx.q, ctx.r);
            if (digit_distance(v_digits.data(), digits_of(0, ctx.q, ctx.r).data(), ctx.r) < ctx.need(1, 0)) continue;
            bool ok;
            std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(ctx.m),
                                                        std::vector<std::uint8_t>(static_cast<std::size_t>(ctx.r), 0));
            rows[1] = v_digits;
            if (binary) {
                std::vector<std::uint64_t> brows(static_cast<std::size_t>(ctx.m), 0);
                brows[1] = v;
                ok = ctx.m == 2 || dfs_binary(ctx, 2, brows, local);
                if (ok) {
                    rows.clear();
                    for (std::uint64_t b : brows) rows.push_back(digits_of(b, 2, ctx.r));
                }
            } else {
                ok = ctx.m == 2 || dfs_generic(ctx, 2, rows, local);
            }
            if (ok) {
                std::scoped_lock lk(best_mtx);
                if (v < best_v.load(std::memory_order_relaxed)) {
                    best_v.store(v, std::memory_order_relaxed);
                    best_rows = rows;
                }
                break;  // later candidates in this worker are larger
            }
        }
        ctx.flush(local);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
    if (best_v.load() == std::numeric_limits<std::uint64_t>::max()) return false;
    found = best_rows;
    return true;
}

int plotkin_floor_start(const DistanceMatrix& d, int q) {
    long long s = d.upper_sum();
    if (s == 0) return 0;
    long long m = d.size();
    long long a = m % q;
    long long denom = m * m * (q - 1) - a * (q - a);
    long long num = 2LL * q * s;
    return static_cast<int>((num + denom - 1) / denom);  // ceiling
}

}  // namespace

SearchResult min_length_dcode(const DistanceMatrix& d, int q, const SearchOptions& opts) {
    d.validate();
    if (!is_prime(q)) throw std::invalid_argument("field order must be prime");
    auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    const int m = d.size();
    if (m == 0) {
        res.status = SearchStatus::exact;
        res.length = 0;
        res.witness = std::vector<Word>{};
        return res;
    }

    // Row order: caller's order, or descending row sums behind the flag.
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    if (opts.row_sum_heuristic) {
        std::vector<long long> sums(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sums[static_cast<std::size_t>(i)] += d.at(i, j);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)]; });
    }
    std::vector<std::vector<int>> req(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) req[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);

    const int lower_start = std::max(plotkin_floor_start(d, q), d.max_entry());
    if (lower_start > opts.r_max) {
        res.status = SearchStatus::infeasible;
        res.length = lower_start;
        res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }

    std::uint64_t nodes_total = 0;
    for (int r = lower_start; r <= opts.r_max; ++r) {
        if (nodes_total >= opts.node_budget) {
            res.status = SearchStatus::lower_bound_only;
            res.length = r;
            res.nodes = nodes_total;
            res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
        SearchCtx ctx;
        ctx.req = &req;
        ctx.m = m;
        ctx.r = r;
        ctx.q = q;
        ctx.total = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(r));
        ctx.budget = opts.node_budget > nodes_total ? opts.node_budget - nodes_total : 0;
        std::vector<std::vector<std::uint8_t>> found;
        bool ok = search_fixed_length(ctx, opts.parallel, found);
        nodes_total += ctx.nodes.load();
        res.nodes = nodes_total;
        if (ok) {
            std::vector<Word> witness(static_cast<std::size_t>(m), Word::zero(q, r));
            for (int i = 0; i < m; ++i) witness[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = Word(q, found[static_cast<std::size_t>(i)]);
            res.status = SearchStatus::exact;
            res.length = r;
            res.witness = std::move(witness);
            res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
        if (ctx.exhausted.load()) {
            res.status = SearchStatus::lower_bound_only;
            res.length = r;  // everything below r is refuted
            res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
    }
    res.status = SearchStatus::lower_bound_only;
    res.length = opts.r_max + 1;
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SearchResult min_length_code(int m, int dist, int q, const SearchOptions& opts) {
    if (m < 1 || dist < 0) throw std::invalid_argument("need m >= 1 and d >= 0");
    DistanceMatrix d;
    d.kind = DistanceMatrix::Kind::custom;
    for (int i = 0; i < m; ++i) d.labels.push_back(std::to_string(i + 1));
    d.entries.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), dist));
    for (int i = 0; i < m; ++i) d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    return min_length_dcode(d, q, opts);
}

LinearLengthResult min_length_linear(int k, int d, int q) {
    if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
    if (!is_prime(q)) throw std::invalid_argument("field order must be prime");
    LinearLengthResult res;
    const int t = (d - 1) / 2;
    int n = std::max(k, k + d - 1);  // Singleton
    for (;; ++n) {
        if (n > k + 512) throw std::runtime_error("no packing-feasible length found in range");
        std::uint64_t ball = ball_size(n, t, q);
        // q^{n-k} >= ball, with saturation on the power
        std::uint64_t lhs = 1;
        bool saturated = false;
        for (int e = 0; e < n - k && !saturated; ++e) {
            if (lhs > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q)) saturated = true;
            else lhs *= static_cast<std::uint64_t>(q);
        }
        if (saturated || lhs >= ball) break;
    }
    res.lower = n;

    if (d == 1) {
        res.upper = k;
        res.construction = "identity";
    } else if (k == 1) {
        res.upper = d;
        res.construction = "repetition";
    } else if (d == 2) {
        res.upper = k + 1;
        res.construction = "single parity check";
    } else if (d == 3 && q == 2) {
        int r = 1;
        while (((1u << r) - 1u - static_cast<unsigned>(r)) < static_cast<unsigned>(k)) ++r;
        res.upper = k + r;
        res.construction = "shortened Hamming";
    }
    res.exact = res.upper.has_value() && *res.upper == res.lower;
    return res;
}

}  // namespace fcc
