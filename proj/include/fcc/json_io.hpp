#pragma once

#include <json.hpp>

#include "fcc/bounds.hpp"
#include "fcc/dcode_search.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/fcc_code.hpp"
#include "fcc/function_spec.hpp"
#include "fcc/linear_code.hpp"
#include "fcc/verifier.hpp"

namespace fcc {

using json = nlohmann::json;

// Words travel as digit strings ("0110"); the field order comes from the
// enclosing object.

json linear_code_to_json(const LinearCode& code);
LinearCode linear_code_from_json(const json& j);

json function_spec_to_json(const FunctionSpec& f);
FunctionSpec function_spec_from_json(const json& j);

json distance_matrix_to_json(const DistanceMatrix& d);
DistanceMatrix distance_matrix_from_json(const json& j);

json fcc_code_to_json(const FccCode& code);
FccCode fcc_code_from_json(const json& j);

json search_result_to_json(const SearchResult& result, int q);

json verification_report_to_json(const VerificationReport& report);
json sweep_report_to_json(const SweepReport& report);

json bound_report_to_json(const BoundReport& report);

/// A plain codeword list: {"q": 2, "words": ["0000", ...]}.
json word_list_to_json(const std::vector<Word>& words, int q);
std::vector<Word> word_list_from_json(const json& j);

/// Reads any of the code carriers (word list, linear code, explicit map) and
/// returns its codewords.
struct LoadedCode {
    int q = 2;
    std::vector<Word> words;
};
LoadedCode any_code_from_json(const json& j);

}  // namespace fcc
