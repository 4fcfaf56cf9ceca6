#pragma once

#include <optional>
#include <vector>

#include "fcc/fcc_code.hpp"
#include "fcc/function_spec.hpp"
#include "fcc/linear_code.hpp"

namespace fcc {

/// B_f(u, rho): the set of function values attained within distance rho of u.
struct FunctionBall {
    Word center;
    int radius = 0;
    std::vector<Value> values;  // sorted ascending
};

FunctionBall function_ball(const FunctionSpec& f, const Word& u, int rho);

/// True iff |B_f(u, rho)| <= lambda for every u, i.e. f is (rho, lambda)-bounded.
bool is_locally_bounded(const FunctionSpec& f, int rho, int lambda);

/// A coloring of the message space with lambda colors such that messages with
/// different function values within distance rho receive different colors.
struct ColorMap {
    int lambda = 0;
    int rho = 0;
    std::vector<int> colors;         // indexed by message rank
    std::vector<Value> value_order;  // the order the coloring was derived from

    int color(const Word& u) const { return colors[u.rank()]; }
};

/// Col_f(u) = (position of f(u) in value_order) mod lambda. Requires f to be
/// (rho, lambda)-bounded and every function ball to occupy a contiguous run of
/// value_order; violations are reported with the offending message.
ColorMap color_map(const FunctionSpec& f, int rho, int lambda, const std::vector<Value>& value_order);
ColorMap color_map(const FunctionSpec& f, int rho, int lambda);  // ascending value order

/// Step-2 glue of the two-step method: codeword(u) = (c_u, parity[rank(u)]).
/// The inner code must be systematic; parities must share one length. The
/// declared d_d comes from the inner code's measured distance, the declared
/// d_f from the caller (verified downstream, not assumed here).
FccCode construct_two_step(const LinearCode& inner, const FunctionSpec& f, const std::vector<Word>& parities, int declared_df);

/// Lifts a D-code for the coded requirement matrix to one for the raw-message
/// requirement matrix: lifted[u] = (w_u, p_u) with w_u the parity part of c_u.
/// The result is verified against the (t_d, t_f) requirement matrix of f.
std::vector<Word> lift_dcode(const LinearCode& inner, const FunctionSpec& f, int t_d, int t_f, const std::vector<Word>& cdrm_parities);

/// Locally binary construction: appends d_f - d_d ones when f(u) is the
/// maximum of B_f(u, d_f - 1) under ascending value order, zeros otherwise.
FccCode construct_locally_binary(const FunctionSpec& f, const LinearCode& inner, int d_f);
FccCode construct_locally_binary(const FunctionSpec& f, const LinearCode& inner, int d_f, const std::vector<Value>& value_order);

/// Locally bounded construction: codeword(u) = (c_u, aux[Col_f(u)]), where aux
/// holds at least lambda words with pairwise distance >= 2(t_f - t_d).
FccCode construct_locally_bounded(const FunctionSpec& f, const LinearCode& inner, int t_d, int t_f, const std::vector<Word>& aux,
                                  const ColorMap& color);

/// Hamming weight construction: codeword(u) = (c_u, aux[wt(u) mod (2 t_f + 1)]).
/// aux must hold 2 t_f + 1 words with pairwise distance >= 2(t_f - t_d).
FccCode construct_hamming_weight(const LinearCode& inner, const std::vector<Word>& aux, int t_d, int t_f);

/// Concatenation for a linear function: u -> (C(u), D(f(u))). The outer code
/// must have dimension equal to the map's output length; the result is linear
/// of dimension k with declared distances (d(C), d(C) + d(D)).
FccCode construct_linear_fcc(const FunctionSpec& f, const LinearCode& inner, const LinearCode& outer);

/// Subcode D_f of a linear code (codewords whose message part lies in Ker f),
/// the code's minimum distance, and the coset-code distance
/// d(code / D_f) = min weight of v + D_f over codewords v outside D_f.
/// The coset distance is absent when D_f is the whole code.
struct CosetReport {
    std::vector<Word> subcode;  // D_f in message-rank order
    int code_distance = 0;
    std::optional<int> coset_distance;
};

CosetReport coset_subcode_distance(const FccCode& code);

}  // namespace fcc
