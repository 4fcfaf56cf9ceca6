#include "fcc/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "fcc/bounds.hpp"
#include "fcc/constructions.hpp"
#include "fcc/dcode_search.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/min_distance_graph.hpp"
#include "fcc/verifier.hpp"

namespace fcc::fixtures {

namespace {

LinearCode from_rows(int q, const std::vector<std::vector<int>>& rows) { return LinearCode(q, Matrix::from_rows(rows, q)); }

std::vector<Word> words_from(int q, const std::vector<std::string>& strings) {
    std::vector<Word> out;
    out.reserve(strings.size());
    for (const std::string& s : strings) out.push_back(Word::from_string(q, s));
    return out;
}

}  // namespace

FunctionSpec three_valued_pair() { return FunctionSpec::make_table(2, 2, {0, 1, 1, 2}); }

FunctionSpec or_pair() { return FunctionSpec::make_table(2, 2, {0, 1, 1, 1}); }

FunctionSpec least_frequent_position() { return FunctionSpec::make_table(2, 3, {0, 3, 2, 1, 1, 2, 3, 0}); }

FunctionSpec weight3() { return FunctionSpec::make_weight(2, 3); }

FunctionSpec parity4() { return FunctionSpec::make_weight_mod(2, 4, 2); }

FunctionSpec weight4() { return FunctionSpec::make_weight(2, 4); }

FunctionSpec or4() {
    std::vector<std::int64_t> values(16, 1);
    values[0] = 0;
    return FunctionSpec::make_table(2, 4, std::move(values));
}

FunctionSpec weight8() { return FunctionSpec::make_weight(2, 8); }

FunctionSpec xor_pair_map() { return FunctionSpec::make_linear(2, 3, Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}, 2)); }

FunctionSpec spread_map4() { return FunctionSpec::make_linear(2, 4, Matrix::from_rows({{1, 1, 1, 0}, {0, 1, 1, 0}}, 2)); }

FunctionSpec mixed_bits3() { return FunctionSpec::make_table(2, 3, {0, 1, 1, 0, 2, 3, 3, 2}); }

LinearCode ecc_633() {
    return from_rows(2, {{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
}

LinearCode hamming_743() {
    return from_rows(2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
}

LinearCode inner_734() {
    return from_rows(2, {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}});
}

LinearCode outer_322() { return from_rows(2, {{1, 0, 1}, {0, 1, 1}}); }

LinearCode shortened_hamming(int k) {
    if (k < 1 || k > 11) throw std::invalid_argument("shortened Hamming fixture supports 1 <= k <= 11");
    // parity rows: the 4-bit patterns of weight >= 2 in ascending numeric order
    std::vector<std::vector<int>> parity;
    for (int v = 0; v < 16 && static_cast<int>(parity.size()) < k; ++v) {
        int w = std::popcount(static_cast<unsigned>(v));
        if (w < 2) continue;
        parity.push_back({(v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1});
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k + 4), 0));
    for (int r = 0; r < k; ++r) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
        for (int c = 0; c < 4; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k + c)] = parity[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return from_rows(2, rows);
}

LinearCode repetition(int n) {
    return from_rows(2, {std::vector<int>(static_cast<std::size_t>(n), 1)});
}

LinearCode hamming_15_11() { return shortened_hamming(11); }

LinearCode identity_code(int q, int k) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return from_rows(q, rows);
}

LinearCode mds_f5_423() { return from_rows(5, {{1, 0, 1, 1}, {0, 1, 1, 2}}); }

LinearCode mds_f5_432() { return from_rows(5, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}); }

std::vector<Word> parities_by_value(const FunctionSpec& f, const std::vector<std::pair<std::int64_t, std::string>>& table,
                                    int parity_len) {
    std::vector<Word> parities;
    for (const Word& u : all_messages(f)) {
        std::int64_t v = f.eval(u).scalar();
        auto it = std::find_if(table.begin(), table.end(), [&](const auto& row) { return row.first == v; });
        if (it == table.end()) throw std::invalid_argument("no parity assigned to value " + std::to_string(v));
        Word p = Word::from_string(f.q(), it->second);
        if (p.size() != parity_len) throw std::invalid_argument("parity length mismatch in fixture table");
        parities.push_back(p);
    }
    return parities;
}

std::vector<Word> aux_452() { return words_from(2, {"0000", "1100", "0011", "1111", "1010"}); }

FccCode ex5_code() {
    FunctionSpec f = weight3();
    return construct_two_step(ecc_633(), f, parities_by_value(f, {{0, "000"}, {1, "110"}, {2, "101"}, {3, "011"}}, 3), 5);
}

FccCode ex5_traditional_code() {
    FunctionSpec f = weight3();
    return construct_two_step(identity_code(2, 3), f,
                              parities_by_value(f, {{0, "000000"}, {1, "111100"}, {2, "110011"}, {3, "001111"}}, 6), 5);
}

FccCode ex4_code() {
    FunctionSpec f = least_frequent_position();
    return construct_two_step(identity_code(2, 3), f,
                              parities_by_value(f, {{0, "000000"}, {1, "111100"}, {2, "110011"}, {3, "001111"}}, 6), 5);
}

FccCode vi_parity_code() { return construct_locally_binary(parity4(), hamming_743(), 5); }

FccCode vii_linear_code() { return construct_linear_fcc(xor_pair_map(), inner_734(), outer_322()); }

FccCode viii_t_code() {
    FunctionSpec f = least_frequent_position();
    return construct_two_step(identity_code(2, 3), f, parities_by_value(f, {{0, "000"}, {1, "110"}, {2, "101"}, {3, "011"}}, 3), 3);
}

FccCode viii_dp_code() {
    FunctionSpec f = mixed_bits3();
    return construct_two_step(ecc_633(), f, parities_by_value(f, {{0, "000"}, {1, "110"}, {2, "101"}, {3, "011"}}, 3), 5);
}

// ----------------------------------------------------------------------
// rendering

namespace {

std::string render_matrix(const DistanceMatrix& d, const std::string& title) {
    std::ostringstream out;
    out << title << "\n";
    std::size_t width = 1;
    for (const std::string& label : d.labels) width = std::max(width, label.size());
    for (int i = 0; i < d.size(); ++i) {
        out << std::string(width - d.labels[static_cast<std::size_t>(i)].size(), ' ') << d.labels[static_cast<std::size_t>(i)] << " |";
        for (int j = 0; j < d.size(); ++j) out << ' ' << d.at(i, j);
        out << "\n";
    }
    return out.str();
}

std::string render_distance_table(const std::vector<Word>& words, const std::string& title) {
    DistanceMatrix d;
    d.kind = DistanceMatrix::Kind::custom;
    const int m = static_cast<int>(words.size());
    d.entries.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (const Word& w : words) d.labels.push_back(w.to_string());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 0 : hamming_distance(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)]);
    return render_matrix(d, title);
}

std::string render_code_rows(const FccCode& code, const std::vector<std::string>& message_order, int inner_k) {
    std::ostringstream out;
    out << "message  codeword\n";
    for (const std::string& msg : message_order) {
        Word u = Word::from_string(code.q(), msg);
        const Word& cw = code.codeword(u);
        std::string s = cw.to_string();
        out << msg << "  " << s.substr(0, static_cast<std::size_t>(inner_k));
        if (inner_k < cw.size()) out << ' ' << s.substr(static_cast<std::size_t>(inner_k));
        out << "\n";
    }
    return out.str();
}

std::string render_verification(const VerificationReport& report, int dd, int df) {
    std::ostringstream out;
    out << "check (d_d=" << dd << ", d_f=" << df << "): " << (report.is_valid ? "valid" : "INVALID") << ", measured d_d="
        << report.measured_dd << ", measured d_f=";
    if (report.measured_df) out << *report.measured_df;
    else out << "inf";
    out << "\n";
    return out.str();
}

const std::vector<std::string> kWeight3Order = {"000", "100", "010", "001", "110", "101", "011", "111"};

std::string render_ex1() {
    FunctionSpec f = three_valued_pair();
    std::vector<Word> u = words_from(2, {"00", "01", "10", "11"});
    std::ostringstream out;
    out << render_matrix(build_drm(f, 1, u), "requirement matrix, t=1, rows 00 01 10 11");
    out << render_matrix(build_drm(f, 1, {u[0], u[1], u[3]}), "requirement matrix, t=1, rows 00 01 11");
    out << render_matrix(build_drm(f, 1, {u[0], u[1], u[2]}), "requirement matrix, t=1, rows 00 01 10");
    return out.str();
}

std::string render_ex2() {
    FunctionSpec f = three_valued_pair();
    std::vector<Word> u = words_from(2, {"00", "01", "10", "11"});
    DistanceMatrix drm = build_drm(f, 1, u);
    std::ostringstream out;
    std::vector<Word> parities = words_from(2, {"000", "110", "110", "101"});
    out << render_distance_table(parities, "pairwise distances of the reference parity set");
    DcodeCheck chk = is_dcode(parities, drm);
    out << "reference parities satisfy the matrix: " << (chk.ok ? "yes" : "no") << "\n";
    SearchResult res = min_length_dcode(drm, 2);
    out << "minimal parity length: " << res.length << (res.exact() ? "" : " (bound only)") << "\n";
    if (res.witness) {
        out << "witness:";
        for (const Word& p : *res.witness) out << ' ' << p.to_string();
        out << "\n";
    }
    out << "systematic encoding with the reference parities:";
    for (std::size_t i = 0; i < u.size(); ++i) out << ' ' << u[i].append(parities[i]).to_string();
    out << "\n";
    return out.str();
}

std::string render_ex3() {
    FunctionSpec f = or_pair();
    std::ostringstream out;
    auto describe = [&](const std::vector<std::string>& strings, const char* tag) {
        std::vector<Word> cws = words_from(2, strings);
        std::vector<Word> ordered(4, Word::zero(2, 4));
        // messages 00,01,10,11 in listed order
        for (std::size_t i = 0; i < 4; ++i) ordered[i] = cws[i];
        FccCode code(f, std::move(ordered), 1, 3, "explicit");
        VerificationReport rep = check_fcc(code, f, 1, 3);
        out << tag << ":";
        for (const Word& w : cws) out << ' ' << w.to_string();
        out << "\n" << render_verification(rep, 1, 3);
    };
    describe({"0000", "0111", "1011", "1111"}, "first code");
    describe({"0000", "0111", "1011", "1101"}, "second code");
    return out.str();
}

std::string render_ex4() {
    FunctionSpec f = least_frequent_position();
    std::ostringstream out;
    out << render_matrix(build_fdm(f, 2), "value distance requirements, t_f=2");
    std::vector<Word> u = words_from(2, {"000", "100", "010", "001"});
    out << render_matrix(build_drm(f, 2, u), "requirement matrix, t_f=2, rows 000 100 010 001");
    SearchResult fdm_n = min_length_dcode(build_fdm(f, 2), 2);
    SearchResult drm_n = min_length_dcode(build_drm(f, 2, u), 2);
    out << "minimal per-value parity length: " << fdm_n.length << "\n";
    out << "minimal subset parity length: " << drm_n.length << "\n";
    FccCode code = ex4_code();
    out << render_code_rows(code, {"000", "111", "100", "011", "010", "101", "001", "110"}, 3);
    out << render_verification(check_fcc(code, f, 3, 5), 3, 5);
    return out.str();
}

std::string render_ex5() {
    FunctionSpec f = weight3();
    LinearCode inner = ecc_633();
    std::vector<Word> reps = words_from(2, {"000", "100", "011", "111"});
    std::ostringstream out;
    out << render_matrix(build_cdrm(inner, f, 2, reps), "coded requirement matrix, t_f=2, rows 000 100 011 111");
    out << render_matrix(build_cfdm(inner, f, 2), "coded value distance matrix, t_f=2");
    SearchResult res = min_length_dcode(build_cdrm(inner, f, 2, reps), 2);
    out << "minimal parity length for the coded matrix: " << res.length << "\n";
    FccCode code = ex5_code();
    out << render_code_rows(code, kWeight3Order, 3);
    out << render_verification(check_fcc(code, f, 3, 5), 3, 5);
    FccCode traditional = ex5_traditional_code();
    out << render_code_rows(traditional, kWeight3Order, 3);
    out << render_verification(check_fcc(traditional, f, 1, 5), 1, 5);
    return out.str();
}

std::string render_ex6() {
    FunctionSpec f = weight3();
    std::vector<Word> u = words_from(2, kWeight3Order);
    return render_matrix(build_drm_dp(f, 1, 2, u), "requirement matrix, t_d=1, t_f=2, rows 000 100 010 001 110 101 011 111");
}

std::string render_ex7() {
    FunctionSpec f = weight3();
    LinearCode inner = ecc_633();
    std::vector<Word> short_parities = parities_by_value(f, {{0, "000"}, {1, "110"}, {2, "101"}, {3, "011"}}, 3);
    std::vector<Word> lifted = lift_dcode(inner, f, 1, 2, short_parities);
    std::ostringstream out;
    out << "lifted parities:";
    std::vector<Word> printed;
    for (const std::string& msg : kWeight3Order) printed.push_back(lifted[Word::from_string(2, msg).rank()]);
    for (const Word& p : printed) out << ' ' << p.to_string();
    out << "\n";
    out << render_distance_table(printed, "pairwise distances of the lifted parities");
    DcodeCheck chk = is_dcode(lifted, build_drm_dp(f, 1, 2, all_messages(f)));
    out << "lifted parities satisfy the full requirement matrix: " << (chk.ok ? "yes" : "no") << "\n";
    BoundReport lower = lower_bound_suite(f, 1, 2);
    Rational weight_bound(0);
    for (const BoundEntry& e : lower.entries)
        if (e.name == "weight-formula") weight_bound = e.value;
    out << "weight-function lower bound: " << rational_to_string(weight_bound) << " = " << rational_to_decimal(weight_bound, 2)
        << ", ceiling " << ceil_rational(weight_bound) << "\n";
    out << "achieved parity length: " << printed.front().size() << "\n";
    out << "optimal redundancy certified: " << (ceil_rational(weight_bound) == printed.front().size() ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_ex8() {
    FunctionSpec f = spread_map4();
    std::ostringstream out;
    out << "image size " << f.image_size() << ", smallest preimage " << f.min_preimage_size() << "\n";
    int n = smallest_feasible_n(f, 2);
    FeasibilityResult fr = hamming_feasible_n(f, 2, n);
    out << "smallest counting-feasible length for t=2: " << n << " (" << fr.method << ", union >= " << fr.union_lower << ")\n";
    return out.str();
}

std::string render_ex9() {
    std::vector<Word> code = words_from(2, {"0000", "0011", "1100", "1111"});
    MinDistGraph g = build_min_distance_graph(code);
    std::ostringstream out;
    out << "minimum distance: " << g.d_min << "\n";
    out << "edges:";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (int j : g.adjacency[i])
            if (static_cast<std::size_t>(j) > i) out << " (" << g.vertices[i].to_string() << "," << g.vertices[static_cast<std::size_t>(j)].to_string() << ")";
    out << "\ncomponents: " << g.components << "\n";
    out << "strict protection ruled out for 2 values: "
        << (strict_fcc_feasible(g, 2) == StrictFccVerdict::ruled_out ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_vi_parity() {
    FunctionSpec f = parity4();
    FccCode code = vi_parity_code();
    std::ostringstream out;
    std::vector<std::string> order = {"0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001",
                                      "0110", "0101", "0011", "1110", "1101", "1011", "0111", "1111"};
    out << render_code_rows(code, order, 4);
    out << render_verification(check_fcc(code, f, 3, 5), 3, 5);
    BoundReport lower = lower_bound_suite(f, 1, 2);
    out << "best lower bound on redundancy: " << rational_to_string(*lower.best_lower) << "\n";
    int achieved = code.n() - code.k();
    out << "achieved redundancy: " << achieved << "\n";
    out << "optimal: " << (ceil_rational(*lower.best_lower) == achieved ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_vi_weight8() {
    LinearCode inner = shortened_hamming(8);
    FccCode code = construct_hamming_weight(inner, aux_452(), 1, 2);
    std::ostringstream out;
    out << "inner [" << inner.n() << "," << inner.k() << "," << inner.min_distance() << "], tail words " << aux_452().size()
        << ", code length " << code.n() << ", redundancy " << code.n() - code.k() << "\n";
    out << render_verification(check_fcc(code, code.function(), 3, 5), 3, 5);
    LinearLengthResult packing = min_length_linear(8, 3, 2);
    SearchResult tail = min_length_code(5, 2, 2);
    out << "minimal inner length: " << packing.lower << (packing.exact ? " (exact)" : "") << "\n";
    out << "minimal tail length: " << tail.length << (tail.exact() ? " (exact)" : "") << "\n";
    out << "redundancy bound: " << *packing.upper << " + " << tail.length << " - 8 = " << *packing.upper + tail.length - 8 << "\n";
    return out.str();
}

std::string render_vii_linear() {
    FunctionSpec f = xor_pair_map();
    FccCode code = vii_linear_code();
    std::ostringstream out;
    std::vector<std::string> order = {"000", "110", "100", "010", "001", "111", "101", "011"};
    out << render_code_rows(code, order, 7);
    KernelResult ker = kernel_of_linear_map(f);
    out << "kernel:";
    for (const Word& w : ker.elements) out << ' ' << w.to_string();
    out << "\n";
    CosetReport coset = coset_subcode_distance(code);
    out << "code distance: " << coset.code_distance << "\n";
    out << "coset distance: ";
    if (coset.coset_distance) out << *coset.coset_distance;
    else out << "inf";
    out << "\n";
    out << render_verification(check_fcc(code, f, 4, 6), 4, 6);
    return out.str();
}

std::string render_viii_plotkin() {
    std::ostringstream out;
    auto table = [&](const FunctionSpec& f, const char* name) {
        out << name << " (largest preimage " << f.max_preimage_size() << "):\n";
        out << "d_d d_f  triple  averaged            ceiling\n";
        for (int dd = 3; dd <= 9; dd += 2) {
            int df = dd + 2;
            int td = (dd - 1) / 2, tf = (df - 1) / 2;
            Rational plot = plotkin_fcc_dp(f.k(), f.q(), static_cast<long long>(f.max_preimage_size()), dd, df);
            out << dd << "   " << df << "    " << 2 * tf + td << "      " << rational_to_string(plot) << " = "
                << rational_to_decimal(plot, 3) << "   " << ceil_rational(plot) << "\n";
        }
    };
    table(weight4(), "weight function");
    table(or4(), "OR function");
    return out.str();
}

std::string render_viii_hamming() {
    FunctionSpec f = least_frequent_position();
    std::ostringstream out;
    int n = smallest_feasible_n(f, 1);
    FeasibilityResult fr = hamming_feasible_n(f, 1, n);
    out << "smallest counting-feasible length for t=1: " << n << " (" << fr.method << ", union >= " << fr.union_lower << ")\n";
    FccCode code = viii_t_code();
    out << render_code_rows(code, {"000", "111", "100", "011", "010", "101", "001", "110"}, 3);
    out << render_verification(check_fcc(code, f, 1, 3), 1, 3);
    return out.str();
}

std::string render_viii_hamming_dp() {
    FunctionSpec f = mixed_bits3();
    std::ostringstream out;
    int n = smallest_feasible_n_dp(f, 3, 2);
    FeasibilityResult fr = hamming_feasible_n_dp(f, 3, 2, n);
    out << "smallest counting-feasible length for d_d=3, t_f=2: " << n << " (" << fr.method << ", union >= " << fr.union_lower
        << ")\n";
    FccCode code = viii_dp_code();
    out << render_code_rows(code, {"000", "011", "010", "001", "100", "111", "101", "110"}, 3);
    out << render_verification(check_fcc(code, f, 3, 5), 3, 5);
    return out.str();
}

}  // namespace

std::vector<std::string> table_names() {
    return {"ex1", "ex2", "ex3", "ex4", "ex5", "ex6", "ex7", "ex8", "ex9", "vi-parity", "vi-weight8", "vii-linear",
            "viii-plotkin", "viii-hamming", "viii-hamming-dp"};
}

std::string render_table(const std::string& name) {
    if (name == "ex1") return render_ex1();
    if (name == "ex2") return render_ex2();
    if (name == "ex3") return render_ex3();
    if (name == "ex4") return render_ex4();
    if (name == "ex5") return render_ex5();
    if (name == "ex6") return render_ex6();
    if (name == "ex7") return render_ex7();
    if (name == "ex8") return render_ex8();
    if (name == "ex9") return render_ex9();
    if (name == "vi-parity") return render_vi_parity();
    if (name == "vi-weight8") return render_vi_weight8();
    if (name == "vii-linear") return render_vii_linear();
    if (name == "viii-plotkin") return render_viii_plotkin();
    if (name == "viii-hamming") return render_viii_hamming();
    if (name == "viii-hamming-dp") return render_viii_hamming_dp();
    throw std::invalid_argument("unknown example name: " + name);
}

}  // namespace fcc::fixtures
