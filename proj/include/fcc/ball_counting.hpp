#pragma once

#include <cstdint>

namespace fcc {

/// C(n, r) as an exact 64-bit value; throws std::overflow_error if it does not fit.
std::uint64_t binomial(int n, int r);

/// |B(u, t)| = sum_{i<=t} C(n,i)(q-1)^i. Radii above n clamp to the whole space.
std::uint64_t ball_size(int n, int t, int q);

/// |B(u,t) ∪ B(v,t)| for centers at distance 1 over F_q:
/// 2*sum_{i<=t} C(n,i)(q-1)^i - q*sum_{i<=t-1} C(n-1,i)(q-1)^i.
std::uint64_t union2_dist1(int n, int t, int q);

/// |B(u1,t) ∩ B(u2,t)| for binary centers at distance 2: 2*sum_{i<=t-1} C(n-1,i).
std::uint64_t inter2_dist2_binary(int n, int t);

/// |B(u1,t) ∪ B(u2,t) ∪ B(u3,t)| for binary centers with pairwise distances 1,1,2:
/// 3*sum_{i<=t} C(n,i) - 6*sum_{i<=t-1} C(n-1,i) + C(n-2,t-1) + 4*sum_{i<=t-2} C(n-2,i).
/// Requires t >= 1.
std::uint64_t union3_112_binary(int n, int t);

/// |B(u1,t) ∪ B(u2,t)| for binary centers at distance 3:
/// 2*sum_{i<=t} C(n,i) - 8*sum_{i<=t-3} C(n-3,i) - 6*C(n-3,t-2). Requires t >= 2.
std::uint64_t union2_dist3_binary(int n, int t);

}  // namespace fcc
