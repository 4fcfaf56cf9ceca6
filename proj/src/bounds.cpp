#include "fcc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "fcc/ball_counting.hpp"
#include "fcc/constructions.hpp"

namespace fcc {

long long ceil_rational(const Rational& r) {
    long long n = r.numerator(), d = r.denominator();  // boost keeps d > 0
    long long q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string rational_to_decimal(const Rational& r, int digits) {
    long long n = r.numerator(), d = r.denominator();
    bool neg = n < 0;
    if (neg) n = -n;
    std::ostringstream out;
    if (neg) out << '-';
    out << n / d;
    if (digits > 0) {
        out << '.';
        long long rem = n % d;
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out << rem / d;
            rem %= d;
        }
    }
    return out.str();
}

void BoundReport::add(std::string name, BoundKind kind, Rational value, std::string note) {
    entries.push_back(BoundEntry{std::move(name), kind, value, std::move(note)});
    if (kind == BoundKind::lower) {
        if (!best_lower || value > *best_lower) best_lower = value;
    } else {
        if (!best_upper || value < *best_upper) best_upper = value;
    }
}

Rational plotkin_irregular(const DistanceMatrix& d, int q) {
    d.validate();
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    long long s = d.upper_sum();
    if (s == 0) return Rational(0);
    long long m = d.size();
    long long a = m % q;
    long long denom = m * m * (q - 1) - a * (q - a);
    return Rational(2LL * q * s, denom);
}

Rational plotkin_fcc_dp(int k, int q, long long preimage_max, int d_d, int d_f) {
    if (d_f <= d_d) throw std::invalid_argument("bound requires d_f > d_d");
    long long qk = static_cast<long long>(pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k)));
    if (preimage_max < 1 || preimage_max > qk) throw std::invalid_argument("preimage size out of range");
    long long denom = (qk / q) * (q - 1);
    long long num = (preimage_max - 1) * d_d + (qk - preimage_max) * d_f;
    return Rational(num, denom) - Rational(k);
}

namespace {

std::uint64_t pow_u64_sat(int q, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q)) return std::numeric_limits<std::uint64_t>::max();
        r *= static_cast<std::uint64_t>(q);
    }
    return r;
}

int largest_representable_length(int q) {
    int n = 0;
    std::uint64_t v = 1;
    while (v <= (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q)) {
        v *= static_cast<std::uint64_t>(q);
        ++n;
    }
    return n;
}

}  // namespace

BoundReport lower_bound_suite(const FunctionSpec& f, int t_d, int t_f, const std::vector<std::vector<Word>>& sample_sets,
                              const SearchOptions& opts) {
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    BoundReport report;
    const int k = f.k(), q = f.q();
    const int e = f.image_size();

    if (e >= 2) report.add("adjacent-pair", BoundKind::lower, Rational(2 * t_f), "value-differing pair at distance 1");
    if (q == 2 && e >= 2 && e <= k)
        report.add("neighborhood-triple", BoundKind::lower, Rational(2 * t_f + t_d), "pigeonholed value among the k unit neighbors");

    LinearLengthResult packing = min_length_linear(k, 2 * t_d + 1, q);
    report.add("data-packing", BoundKind::lower, Rational(packing.lower - k), "sphere packing and Singleton on q^k codewords");

    for (std::size_t i = 0; i < sample_sets.size(); ++i) {
        DistanceMatrix d = build_drm_dp(f, t_d, t_f, sample_sets[i]);
        SearchResult res = min_length_dcode(d, q, opts);
        report.add("subset-matrix[" + std::to_string(i) + "]", BoundKind::lower, Rational(res.length),
                   res.exact() ? "exact minimal parity length for the subset" : "proven lower bound (search not exhausted)");
    }

    if (f.kind() == FunctionSpec::Kind::weight && q == 2 && k > t_f) {
        long long t = t_f;
        report.add("weight-formula", BoundKind::lower,
                   Rational(10 * t * t * t + 30 * t * t + 20 * t + 12, 3 * t * t + 12 * t + 12), "Hamming-weight redundancy formula");
    }

    if (t_f > t_d)
        report.add("plotkin", BoundKind::lower,
                   plotkin_fcc_dp(k, q, static_cast<long long>(f.max_preimage_size()), 2 * t_d + 1, 2 * t_f + 1),
                   "averaged pairwise-distance bound");
    return report;
}

NmdUpper upper_bound_nmd(std::uint64_t m, int dist, int q, const SearchOptions& opts) {
    if (m < 1) throw std::invalid_argument("need at least one codeword");
    if (dist == 0 || m == 1) return NmdUpper{0, true, "trivial"};
    if (m == 2) return NmdUpper{dist, true, "repetition"};

    int label_len = 0;
    while (pow_u64_sat(q, label_len) < m) ++label_len;
    int repeated = dist * label_len;

    int gv = repeated + 1;
    for (int r = dist; r <= repeated; ++r) {
        std::uint64_t space = pow_u64_sat(q, r);
        std::uint64_t ball = ball_size(r, dist - 1, q);
        if (space == std::numeric_limits<std::uint64_t>::max() || space / ball >= m) {
            gv = r;
            break;
        }
    }
    int fallback = std::min(repeated, gv);
    std::string method = gv < repeated ? "existence (Gilbert-Varshamov)" : "repeated labels";

    if (m <= 32 && dist <= 12) {
        SearchOptions inner = opts;
        inner.r_max = fallback;
        inner.node_budget = std::min<std::uint64_t>(opts.node_budget, 5'000'000);
        SearchResult res = min_length_code(static_cast<int>(m), dist, q, inner);
        if (res.exact()) return NmdUpper{res.length, true, "search"};
    }
    return NmdUpper{fallback, false, method};
}

int gv_dcode_upper(const DistanceMatrix& d) {
    d.validate();
    const int m = d.size();
    for (int r = std::max(d.max_entry(), 1); r <= 128; ++r) {
        std::uint64_t space = pow_u64_sat(2, r);
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            std::uint64_t sum = 0;
            for (int i = 0; i < j; ++i) {
                int need = d.at(i, j);
                if (need == 0) continue;
                std::uint64_t v = ball_size(r, need - 1, 2);
                if (__builtin_add_overflow(sum, v, &sum)) {
                    ok = false;
                    break;
                }
            }
            if (ok && sum >= space) ok = false;
        }
        if (ok) return r;
    }
    throw std::runtime_error("no greedy existence length found below 128");
}

BoundReport upper_bound_suite(const FunctionSpec& f, const LinearCode& inner, int t_d, int t_f, const SearchOptions& opts) {
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    if (inner.q() != f.q() || inner.k() != f.k()) throw std::invalid_argument("inner code and function dimensions must match");
    if (inner.min_distance() < 2 * t_d + 1) throw std::invalid_argument("inner code distance below 2 t_d + 1");

    BoundReport report;
    const int k = f.k(), q = f.q(), n = inner.n();
    const int delta = t_f - t_d;
    const std::uint64_t m = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k));

    if (m <= 1024) {
        DistanceMatrix cdrm = build_cdrm(inner, f, t_f, all_messages(f));
        if (m <= 64) {
            SearchResult res = min_length_dcode(cdrm, q, opts);
            if (res.exact())
                report.add("coded-matrix", BoundKind::upper, Rational(res.length + n - k), "exact minimal parity length for the coded matrix");
        }
        if (q == 2)
            report.add("coded-matrix-greedy", BoundKind::upper, Rational(gv_dcode_upper(cdrm) + n - k), "greedy existence length for the coded matrix");
        DistanceMatrix cfdm = build_cfdm(inner, f, t_f);
        SearchResult per_value = min_length_dcode(cfdm, q, opts);
        if (per_value.exact())
            report.add("per-value-parity", BoundKind::upper, Rational(per_value.length + n - k), "one parity word per function value");
    }

    NmdUpper cap = upper_bound_nmd(m, 2 * delta, q, opts);
    report.add("uniform-cap", BoundKind::upper, Rational(cap.value + n - k),
               std::string("coded requirements never exceed 2(t_f - t_d); ") + cap.method);

    if (q == 2 && 2 * delta >= 10 && m <= static_cast<std::uint64_t>(2 * delta) * static_cast<std::uint64_t>(2 * delta)) {
        long double dd = 2.0L * delta;
        long double val = 2.0L * dd / (1.0L - 2.0L * std::sqrt(std::log(dd) / dd));
        report.add("asymptotic-cap", BoundKind::upper, Rational(static_cast<long long>(std::ceil(val)) + n - k),
                   "closed-form cap for large uniform requirements");
    }

    if (is_locally_bounded(f, 2 * t_f, 2))
        report.add("locally-binary", BoundKind::upper, Rational(n - k + 2 * delta), "two-word tail from the max-of-ball rule");

    int lambda = 1;
    for (const Word& u : all_messages(f)) lambda = std::max(lambda, static_cast<int>(function_ball(f, u, 2 * t_f).values.size()));
    if (lambda >= 2) {
        bool contiguous = true;
        try {
            color_map(f, 2 * t_f, lambda);
        } catch (const std::invalid_argument&) {
            contiguous = false;
        }
        if (contiguous) {
            NmdUpper aux = upper_bound_nmd(static_cast<std::uint64_t>(lambda), 2 * delta, q, opts);
            report.add("locally-bounded", BoundKind::upper, Rational(n - k + aux.value),
                       "colored tail with lambda = " + std::to_string(lambda));
        }
    }

    if (f.kind() == FunctionSpec::Kind::weight) {
        NmdUpper aux = upper_bound_nmd(static_cast<std::uint64_t>(2 * t_f + 1), 2 * delta, q, opts);
        report.add("weight-tail", BoundKind::upper, Rational(n - k + aux.value), "weight-residue labeled tail");
        LinearLengthResult best_inner = min_length_linear(k, 2 * t_d + 1, q);
        if (best_inner.upper)
            report.add("weight-optimal-inner", BoundKind::upper, Rational(*best_inner.upper - k + aux.value),
                       "weight-residue tail over a " + best_inner.construction + " inner code");
    }

    if (q == 2 && t_d >= 1) {
        long double denom = 1.0L - (static_cast<long double>(t_d) / k) * std::log2(std::exp(1.0L));
        if (denom > 0) {
            long double logterm = (t_d * std::log2(static_cast<long double>(k)) + t_d) / denom;
            report.add("log-redundancy-inner", BoundKind::upper, Rational(cap.value + static_cast<long long>(std::ceil(logterm))),
                       "existence of an inner code with logarithmic redundancy");
        }
    }
    return report;
}

namespace {

struct UnionBound {
    std::uint64_t value = 0;
    bool relaxed = false;
    std::string method;
};

UnionBound union_lower_plain(std::uint64_t l, int t, int n, int q) {
    if (l == 1) return {ball_size(n, t, q), false, "single ball"};
    if (t == 0) return {l, false, "distinct centers"};
    if (l == 2) return {union2_dist1(n, t, q), false, "two balls at distance 1"};
    if (q == 2 && n >= 2) return {union3_112_binary(n, t), true, "three-ball relaxation"};
    return {std::max<std::uint64_t>(ball_size(n, t, q), l), true, "single-ball relaxation"};
}

UnionBound union_lower_dp(std::uint64_t l, int d_d, int t_f, int n, int q) {
    const int t_d = (d_d - 1) / 2;
    if (l == 1) return {ball_size(n, t_f, q), false, "single ball"};
    if (2 * t_f + 1 <= d_d) return {l * ball_size(n, t_f, q), false, "disjoint balls"};
    if (l == 2) {
        if (d_d <= 1) return {union2_dist1(n, t_f, q), false, "two balls at distance 1"};
        if (q == 2 && d_d == 3 && t_f >= 2 && n >= 3) return {union2_dist3_binary(n, t_f), false, "two balls at distance 3"};
    }
    std::uint64_t best = std::max<std::uint64_t>(ball_size(n, t_f, q), l * ball_size(n, t_d, q));
    if (q == 2 && l >= 3 && t_f >= 1 && n >= 2) best = std::max(best, union3_112_binary(n, t_f));
    return {best, true, "disjoint-packing relaxation"};
}

bool counting_feasible(std::uint64_t e, std::uint64_t union_lb, int q, int n) {
    unsigned __int128 lhs = static_cast<unsigned __int128>(e) * union_lb;
    unsigned __int128 rhs = 1;
    for (int i = 0; i < n; ++i) rhs *= static_cast<unsigned>(q);
    return lhs <= rhs;
}

}  // namespace

std::uint64_t min_ball_union_exact(int n, int t, int l, int min_center_distance) {
    if (n < 1 || n > 14) throw std::invalid_argument("exact center minimization supports n <= 14");
    if (l < 1 || l > 3) throw std::invalid_argument("exact center minimization supports up to 3 centers");
    if (min_center_distance < 1) min_center_distance = 1;
    const std::uint32_t space = 1u << n;
    auto count_union = [&](std::uint32_t c1, std::uint32_t c2, std::uint32_t c3, int centers) {
        std::uint64_t count = 0;
        for (std::uint32_t v = 0; v < space; ++v) {
            if (std::popcount(v ^ c1) <= t) { ++count; continue; }
            if (centers >= 2 && std::popcount(v ^ c2) <= t) { ++count; continue; }
            if (centers >= 3 && std::popcount(v ^ c3) <= t) ++count;
        }
        return count;
    };
    if (l == 1) return count_union(0, 0, 0, 1);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    // up to coordinate permutation and translation: c1 = 0, c2 = a leading ones,
    // c3 = s ones under c2 plus w ones beyond it
    for (int a = min_center_distance; a <= n; ++a) {
        std::uint32_t c2 = (1u << a) - 1u;
        if (l == 2) {
            best = std::min(best, count_union(0, c2, 0, 2));
            continue;
        }
        for (int s = 0; s <= a; ++s)
            for (int w = 0; w <= n - a; ++w) {
                int wt3 = s + w;
                int d23 = (a - s) + w;
                if (wt3 < min_center_distance || d23 < min_center_distance) continue;
                std::uint32_t c3 = ((1u << s) - 1u) | (((1u << w) - 1u) << a);
                best = std::min(best, count_union(0, c2, c3, 3));
            }
    }
    if (best == std::numeric_limits<std::uint64_t>::max()) throw std::invalid_argument("no center placement satisfies the distance floor");
    return best;
}

FeasibilityResult hamming_feasible_n(const FunctionSpec& f, int t, int n, bool exact_centers) {
    if (t < 0 || n < 1) throw std::invalid_argument("need t >= 0 and n >= 1");
    const int q = f.q();
    const std::uint64_t e = static_cast<std::uint64_t>(f.image_size());
    const std::uint64_t l = f.min_preimage_size();
    FeasibilityResult res;
    if (l > pow_u64_sat(q, n)) {  // no room for l distinct centers
        res.feasible = false;
        res.union_lower = pow_u64_sat(q, n);
        res.method = "centers do not fit";
        return res;
    }
    UnionBound ub;
    if (exact_centers && q == 2 && l <= 3 && n <= 14) {
        ub.value = min_ball_union_exact(n, t, static_cast<int>(l), 1);
        ub.relaxed = false;
        ub.method = "exact center minimization";
    } else {
        ub = union_lower_plain(l, t, n, q);
    }
    res.union_lower = ub.value;
    res.relaxed = ub.relaxed;
    res.method = ub.method;
    res.feasible = counting_feasible(e, ub.value, q, n);
    return res;
}

int smallest_feasible_n(const FunctionSpec& f, int t, bool exact_centers) {
    const int cap = largest_representable_length(f.q());
    for (int n = 1; n <= cap; ++n)
        if (hamming_feasible_n(f, t, n, exact_centers).feasible) return n;
    throw std::runtime_error("no feasible length in representable range");
}

FeasibilityResult hamming_feasible_n_dp(const FunctionSpec& f, int d_d, int t_f, int n, bool exact_centers) {
    if (d_d < 1 || t_f < 0 || n < 1) throw std::invalid_argument("need d_d >= 1, t_f >= 0 and n >= 1");
    const int q = f.q();
    const std::uint64_t e = static_cast<std::uint64_t>(f.image_size());
    const std::uint64_t l = f.min_preimage_size();
    FeasibilityResult res;
    if (l >= 2 && n < d_d) {  // two centers at distance >= d_d cannot fit
        res.feasible = false;
        res.union_lower = pow_u64_sat(q, n);
        res.method = "centers do not fit";
        return res;
    }
    UnionBound ub;
    if (exact_centers && q == 2 && l <= 3 && n <= 14) {
        ub.value = min_ball_union_exact(n, t_f, static_cast<int>(l), d_d);
        ub.relaxed = false;
        ub.method = "exact center minimization";
    } else {
        ub = union_lower_dp(l, d_d, t_f, n, q);
    }
    res.union_lower = ub.value;
    res.relaxed = ub.relaxed;
    res.method = ub.method;
    res.feasible = counting_feasible(e, ub.value, q, n);
    return res;
}

int smallest_feasible_n_dp(const FunctionSpec& f, int d_d, int t_f, bool exact_centers) {
    const int cap = largest_representable_length(f.q());
    for (int n = std::max(1, d_d); n <= cap; ++n)
        if (hamming_feasible_n_dp(f, d_d, t_f, n, exact_centers).feasible) return n;
    throw std::runtime_error("no feasible length in representable range");
}

}  // namespace fcc
