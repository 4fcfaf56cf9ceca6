#pragma once

#include <string>
#include <vector>

#include "fcc/fcc_code.hpp"
#include "fcc/function_spec.hpp"
#include "fcc/linear_code.hpp"

namespace fcc::fixtures {

// Functions ------------------------------------------------------------

/// f on F_2^2 with f(00)=0, f(01)=f(10)=1, f(11)=2.
FunctionSpec three_valued_pair();
/// f on F_2^2 with f(00)=0 and 1 elsewhere.
FunctionSpec or_pair();
/// Position of the least frequent bit in F_2^3 (0 for 000/111, 1 for 100/011, ...).
FunctionSpec least_frequent_position();
/// Hamming weight on F_2^3.
FunctionSpec weight3();
/// Parity (weight mod 2) on F_2^4.
FunctionSpec parity4();
/// Hamming weight on F_2^4.
FunctionSpec weight4();
/// OR of four bits.
FunctionSpec or4();
/// Hamming weight on F_2^8.
FunctionSpec weight8();
/// Linear map (u1+u2, u3) on F_2^3.
FunctionSpec xor_pair_map();
/// Linear map [[1,1,1,0],[0,1,1,0]] on F_2^4.
FunctionSpec spread_map4();
/// f(x1,x2,x3) = 2 x1 + (x2 + x3 mod 2) as a lookup table.
FunctionSpec mixed_bits3();

// Linear codes ----------------------------------------------------------

LinearCode ecc_633();            // [6,3,3]
LinearCode hamming_743();        // [7,4,3]
LinearCode inner_734();          // systematic [7,3,4]
LinearCode outer_322();          // [3,2,2]
LinearCode shortened_hamming(int k);  // [k+4, k, 3] for k <= 11
LinearCode repetition(int n);    // [n,1,n] binary
LinearCode hamming_15_11();      // [15,11,3]
LinearCode identity_code(int q, int k);
LinearCode mds_f5_423();         // [4,2,3] over F_5
LinearCode mds_f5_432();         // [4,3,2] over F_5

// Parity assignments ---------------------------------------------------

/// Per-message parities derived from a value -> parity table.
std::vector<Word> parities_by_value(const FunctionSpec& f, const std::vector<std::pair<std::int64_t, std::string>>& table,
                                    int parity_len);

std::vector<Word> aux_452();  // five length-4 binary words at pairwise distance >= 2

// Reference codes ------------------------------------------------------

FccCode ex5_code();              // the 9-symbol two-step code over weight3
FccCode ex5_traditional_code();  // the function-only 9-symbol code
FccCode ex4_code();              // the 9-symbol code over least_frequent_position
FccCode vi_parity_code();        // 16-row locally binary code over parity4
FccCode vii_linear_code();       // the [10,3,4] concatenated code
FccCode viii_t_code();           // length-6 code over least_frequent_position
FccCode viii_dp_code();          // length-9 code over mixed_bits3

// Rendering -------------------------------------------------------------

std::vector<std::string> table_names();
/// Deterministic text rendering of one bundled worked example.
std::string render_table(const std::string& name);

}  // namespace fcc::fixtures
