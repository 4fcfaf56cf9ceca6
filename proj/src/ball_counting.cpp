#include "fcc/ball_counting.hpp"

#include <limits>
#include <stdexcept>

namespace fcc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ball-count overflow");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ball-count overflow");
    return r;
}

// sum_{i=0}^{t} C(n,i) * (q-1)^i with an empty sum for t < 0
std::uint64_t ball_sum(int n, int t, int q) {
    if (t < 0) return 0;
    std::uint64_t total = 0;
    std::uint64_t pw = 1;
    for (int i = 0; i <= t && i <= n; ++i) {
        total = checked_add(total, checked_mul(binomial(n, i), pw));
        pw = checked_mul(pw, static_cast<std::uint64_t>(q - 1));
    }
    return total;
}

void require_args(int n, int min_n, int t, int min_t) {
    if (n < min_n) throw std::invalid_argument("length too small for this center geometry");
    if (t < min_t) throw std::invalid_argument("radius below the formula's range");
}

}  // namespace

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        // multiply before divide stays exact because result*(n-r+i) is divisible by i
        std::uint64_t num = checked_mul(result, static_cast<std::uint64_t>(n - r + i));
        result = num / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::uint64_t ball_size(int n, int t, int q) {
    if (n < 0 || t < 0 || q < 2) throw std::invalid_argument("ball_size arguments out of range");
    if (t > n) t = n;  // whole space
    return ball_sum(n, t, q);
}

std::uint64_t union2_dist1(int n, int t, int q) {
    require_args(n, 1, t, 0);
    if (t > n) t = n;
    std::uint64_t both = checked_mul(2, ball_sum(n, t, q));
    std::uint64_t overlap = checked_mul(static_cast<std::uint64_t>(q), ball_sum(n - 1, t - 1, q));
    return both - overlap;
}

std::uint64_t inter2_dist2_binary(int n, int t) {
    require_args(n, 2, t, 0);
    if (t > n) t = n;
    return checked_mul(2, ball_sum(n - 1, t - 1, 2));
}

std::uint64_t union3_112_binary(int n, int t) {
    require_args(n, 2, t, 1);
    if (t > n) t = n;
    std::uint64_t plus = checked_add(checked_mul(3, ball_sum(n, t, 2)),
                                     checked_add(binomial(n - 2, t - 1), checked_mul(4, ball_sum(n - 2, t - 2, 2))));
    std::uint64_t minus = checked_mul(6, ball_sum(n - 1, t - 1, 2));
    return plus - minus;
}

std::uint64_t union2_dist3_binary(int n, int t) {
    require_args(n, 3, t, 2);
    if (t > n) t = n;
    std::uint64_t plus = checked_mul(2, ball_sum(n, t, 2));
    std::uint64_t minus = checked_add(checked_mul(8, ball_sum(n - 3, t - 3, 2)), checked_mul(6, binomial(n - 3, t - 2)));
    return plus - minus;
}

}  // namespace fcc
