#include "fcc/json_io.hpp"

namespace fcc {

namespace {

int get_q(const json& j) { return j.at("q").get<int>(); }

}  // namespace

json linear_code_to_json(const LinearCode& code) {
    return json{{"q", code.q()}, {"k", code.k()}, {"n", code.n()}, {"generator", code.generator().to_rows()}};
}

LinearCode linear_code_from_json(const json& j) {
    int q = get_q(j);
    auto rows = j.at("generator").get<std::vector<std::vector<int>>>();
    LinearCode code(q, Matrix::from_rows(rows, q));
    if (j.contains("k") && j.at("k").get<int>() != code.k()) throw std::invalid_argument("declared k does not match generator");
    if (j.contains("n") && j.at("n").get<int>() != code.n()) throw std::invalid_argument("declared n does not match generator");
    return code;
}

json function_spec_to_json(const FunctionSpec& f) {
    json j{{"q", f.q()}, {"k", f.k()}};
    switch (f.kind()) {
        case FunctionSpec::Kind::table:
            j["kind"] = "table";
            j["values"] = f.table();
            break;
        case FunctionSpec::Kind::weight:
            j["kind"] = "weight";
            break;
        case FunctionSpec::Kind::weight_mod:
            j["kind"] = "weight_mod";
            j["m"] = f.mod();
            break;
        case FunctionSpec::Kind::linear:
            j["kind"] = "linear";
            j["matrix"] = f.map().to_rows();
            break;
    }
    return j;
}

FunctionSpec function_spec_from_json(const json& j) {
    int q = get_q(j);
    int k = j.at("k").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "table") return FunctionSpec::make_table(q, k, j.at("values").get<std::vector<std::int64_t>>());
    if (kind == "weight") return FunctionSpec::make_weight(q, k);
    if (kind == "weight_mod") return FunctionSpec::make_weight_mod(q, k, j.at("m").get<int>());
    if (kind == "linear") return FunctionSpec::make_linear(q, k, Matrix::from_rows(j.at("matrix").get<std::vector<std::vector<int>>>(), q));
    throw std::invalid_argument("unknown function kind: " + kind);
}

json distance_matrix_to_json(const DistanceMatrix& d) {
    return json{{"kind", kind_name(d.kind)}, {"labels", d.labels}, {"entries", d.entries}};
}

DistanceMatrix distance_matrix_from_json(const json& j) {
    DistanceMatrix d;
    d.kind = j.contains("kind") ? kind_from_name(j.at("kind").get<std::string>()) : DistanceMatrix::Kind::custom;
    d.entries = j.at("entries").get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) d.labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < d.entries.size(); ++i) d.labels.push_back(std::to_string(i + 1));
    d.validate();
    return d;
}

json fcc_code_to_json(const FccCode& code) {
    json entries = json::object();
    for (std::uint64_t r = 0; r < code.size(); ++r) entries[code.message_at(r).to_string()] = code.codeword_at(r).to_string();
    return json{{"q", code.q()},       {"k", code.k()},
                {"n", code.n()},       {"dd", code.declared_dd()},
                {"df", code.declared_df()}, {"provenance", code.provenance()},
                {"function", function_spec_to_json(code.function())}, {"entries", entries}};
}

FccCode fcc_code_from_json(const json& j) {
    int q = get_q(j);
    FunctionSpec f = function_spec_from_json(j.at("function"));
    if (f.q() != q) throw std::invalid_argument("function field does not match code field");
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(f.k()));
    std::vector<Word> codewords(total, Word::zero(q, 1));
    std::vector<bool> seen(total, false);
    for (const auto& [msg, cw] : j.at("entries").items()) {
        Word m = Word::from_string(q, msg);
        if (m.size() != f.k()) throw std::invalid_argument("entry message length mismatch");
        codewords[m.rank()] = Word::from_string(q, cw.get<std::string>());
        seen[m.rank()] = true;
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("entries must cover every message in F_q^k");
    return FccCode(f, std::move(codewords), j.at("dd").get<int>(), j.at("df").get<int>(), j.value("provenance", "explicit"));
}

json search_result_to_json(const SearchResult& result, int q) {
    json j;
    switch (result.status) {
        case SearchStatus::exact: j["status"] = "exact"; break;
        case SearchStatus::lower_bound_only: j["status"] = "lower_bound_only"; break;
        case SearchStatus::infeasible: j["status"] = "infeasible"; break;
    }
    j["length"] = result.length;
    j["nodes"] = result.nodes;
    j["elapsed_seconds"] = result.elapsed_seconds;
    j["q"] = q;
    if (result.witness) {
        json w = json::array();
        for (const Word& p : *result.witness) w.push_back(p.to_string());
        j["witness"] = w;
    }
    return j;
}

json verification_report_to_json(const VerificationReport& report) {
    json v = json::array();
    for (const Violation& viol : report.violations)
        v.push_back(json{{"u", viol.u.to_string()}, {"v", viol.v.to_string()}, {"distance", viol.distance}, {"required", viol.required}});
    json j{{"is_valid", report.is_valid},
           {"measured_dd", report.measured_dd},
           {"pairs_checked", report.pairs_checked},
           {"violations", v}};
    if (report.measured_df) j["measured_df"] = *report.measured_df;
    else j["measured_df"] = nullptr;
    return j;
}

json sweep_report_to_json(const SweepReport& report) {
    json j{{"mode", report.mode},
           {"trials", report.trials},
           {"data_successes", report.data_successes},
           {"data_failures", report.data_failures},
           {"function_successes", report.function_successes},
           {"function_failures", report.function_failures},
           {"ambiguous_ties", report.ambiguous_ties}};
    if (report.seed) j["seed"] = *report.seed;
    return j;
}

json bound_report_to_json(const BoundReport& report) {
    json entries = json::array();
    for (const BoundEntry& e : report.entries)
        entries.push_back(json{{"name", e.name},
                               {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
                               {"value", {{"num", e.value.numerator()}, {"den", e.value.denominator()}}},
                               {"decimal", rational_to_decimal(e.value, 4)},
                               {"note", e.note}});
    json j{{"bounds", entries}};
    if (report.best_lower)
        j["best_lower"] = {{"num", report.best_lower->numerator()}, {"den", report.best_lower->denominator()}};
    if (report.best_upper)
        j["best_upper"] = {{"num", report.best_upper->numerator()}, {"den", report.best_upper->denominator()}};
    return j;
}

json word_list_to_json(const std::vector<Word>& words, int q) {
    json w = json::array();
    for (const Word& x : words) w.push_back(x.to_string());
    return json{{"q", q}, {"words", w}};
}

std::vector<Word> word_list_from_json(const json& j) {
    int q = get_q(j);
    std::vector<Word> out;
    for (const auto& s : j.at("words")) out.push_back(Word::from_string(q, s.get<std::string>()));
    return out;
}

LoadedCode any_code_from_json(const json& j) {
    LoadedCode loaded;
    loaded.q = get_q(j);
    if (j.contains("words")) {
        loaded.words = word_list_from_json(j);
    } else if (j.contains("generator")) {
        loaded.words = linear_code_from_json(j).codewords();
    } else if (j.contains("entries")) {
        FccCode code = fcc_code_from_json(j);
        loaded.words = code.codewords();
    } else {
        throw std::invalid_argument("expected a word list, a linear code, or an explicit code map");
    }
    return loaded;
}

}  // namespace fcc
