#pragma once

#include <string>
#include <vector>

#include "fcc/function_spec.hpp"
#include "fcc/linear_code.hpp"
#include "fcc/word.hpp"

namespace fcc {

/// A labeled symmetric matrix of pairwise distance requirements. Rows and
/// columns follow the caller-supplied order; nothing is canonicalized.
struct DistanceMatrix {
    enum class Kind { drm_t, drm_dp, fdm, cdrm, cfdm, custom };

    Kind kind = Kind::custom;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> entries;

    int size() const { return static_cast<int>(entries.size()); }
    int at(int i, int j) const { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    int max_entry() const;
    long long upper_sum() const;  // sum over i < j

    /// Checks square/symmetric/zero-diagonal/nonnegative; throws otherwise.
    void validate() const;
};

std::string kind_name(DistanceMatrix::Kind kind);
DistanceMatrix::Kind kind_from_name(const std::string& name);

/// DRM for an (f, t)-FCC on the given vectors:
/// entry (i, j) = max(2t+1 - d(u_i, u_j), 0) when f(u_i) != f(u_j), else 0.
DistanceMatrix build_drm(const FunctionSpec& f, int t, const std::vector<Word>& vectors);

/// DRM for an (f, t_d, t_f)-FCC: same-value distinct pairs use the t_d level,
/// value-differing pairs the t_f level. Requires 0 <= t_d <= t_f.
DistanceMatrix build_drm_dp(const FunctionSpec& f, int t_d, int t_f, const std::vector<Word>& vectors);

/// min { d(u1, u2) : f(u1) = f_i, f(u2) = f_j } by brute force over preimages.
int function_distance(const FunctionSpec& f, const Value& fi, const Value& fj);

/// E x E matrix over function_distance, values ordered ascending.
DistanceMatrix build_fdm(const FunctionSpec& f, int t);

/// DRM computed on inner-code codewords c_u = uG instead of raw messages.
DistanceMatrix build_cdrm(const LinearCode& code, const FunctionSpec& f, int t_f, const std::vector<Word>& vectors);

/// Coded distance between two function values: min d(c_u1, c_u2) over preimages.
int coded_function_distance(const LinearCode& code, const FunctionSpec& f, const Value& fi, const Value& fj);

/// E x E matrix over coded function distances, values ordered ascending.
DistanceMatrix build_cfdm(const LinearCode& code, const FunctionSpec& f, int t_f);

/// Full-space helper: all q^k messages in rank order.
std::vector<Word> all_messages(const FunctionSpec& f);

}  // namespace fcc
