// Command-line front end: constructions, verification, bounds, parity-length
// search, graph checks, error-injection simulation, and the bundled worked
// examples. Exit codes: 0 success/valid, 1 violation found, 2 usage error,
// 3 node/pattern budget exhausted.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fcc/bounds.hpp"
#include "fcc/constructions.hpp"
#include "fcc/dcode_search.hpp"
#include "fcc/fixtures.hpp"
#include "fcc/json_io.hpp"
#include "fcc/min_distance_graph.hpp"
#include "fcc/verifier.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

fcc::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return fcc::json::parse(in);
}

void emit(const fcc::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

struct ProtectionParams {
    int td = -1, tf = -1, dd = -1, df = -1;

    // resolves the t/d pairing and enforces d = 2t + 1 when both were given
    void resolve() {
        if (td >= 0 && dd >= 0 && dd != 2 * td + 1) throw std::invalid_argument("--dd must equal 2*--td + 1 when both are given");
        if (tf >= 0 && df >= 0 && df != 2 * tf + 1) throw std::invalid_argument("--df must equal 2*--tf + 1 when both are given");
        if (td < 0 && dd >= 0) td = (dd - 1) / 2;
        if (tf < 0 && df >= 0) tf = (df - 1) / 2;
        if (dd < 0 && td >= 0) dd = 2 * td + 1;
        if (df < 0 && tf >= 0) df = 2 * tf + 1;
        if (td < 0 || tf < 0) throw std::invalid_argument("protection levels required: --td/--tf or --dd/--df");
        if (td > tf) throw std::invalid_argument("need t_d <= t_f");
    }
};

void add_protection_flags(CLI::App* cmd, ProtectionParams& p) {
    cmd->add_option("--td", p.td, "data error-correction level t_d");
    cmd->add_option("--tf", p.tf, "function error-correction level t_f");
    cmd->add_option("--dd", p.dd, "data minimum distance d_d (= 2 t_d + 1)");
    cmd->add_option("--df", p.df, "function minimum distance d_f (= 2 t_f + 1)");
}

fcc::SearchOptions search_options_from(int max_r, std::uint64_t budget, int parallel, bool heuristic) {
    fcc::SearchOptions opts;
    opts.r_max = max_r;
    opts.node_budget = budget;
    opts.parallel = parallel;
    opts.row_sum_heuristic = heuristic;
    return opts;
}

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("FCC_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000;
}

// derives per-value parities for the two-step method from a search over the
// coded value-distance matrix
std::vector<fcc::Word> derive_value_parities(const fcc::LinearCode& inner, const fcc::FunctionSpec& f, int tf,
                                             const fcc::SearchOptions& opts) {
    fcc::DistanceMatrix cfdm = fcc::build_cfdm(inner, f, tf);
    fcc::SearchResult res = fcc::min_length_dcode(cfdm, f.q(), opts);
    if (!res.exact()) throw fcc::budget_error("parity search not exhausted (proved only length >= " + std::to_string(res.length) + ")");
    std::vector<fcc::Word> parities;
    for (const fcc::Word& u : fcc::all_messages(f)) parities.push_back((*res.witness)[static_cast<std::size_t>(f.image_index(f.eval(u)))]);
    return parities;
}

std::vector<fcc::Word> search_uniform_aux(int count, int dist, int q, const fcc::SearchOptions& opts) {
    fcc::SearchResult res = fcc::min_length_code(count, dist, q, opts);
    if (!res.exact()) throw fcc::budget_error("auxiliary-code search not exhausted");
    return *res.witness;
}

int run_construct(const std::string& method, const std::string& function_path, const std::string& ecc_path,
                  const std::string& aux_path, const std::string& outer_path, ProtectionParams p, int max_r,
                  std::uint64_t budget, int parallel, const std::string& out_path) {
    fcc::SearchOptions opts = search_options_from(max_r, budget, parallel, false);
    std::optional<fcc::FunctionSpec> f;
    if (!function_path.empty()) f = fcc::function_spec_from_json(load_json(function_path));
    if (ecc_path.empty()) throw std::invalid_argument("--ecc is required");
    fcc::LinearCode inner = fcc::linear_code_from_json(load_json(ecc_path));

    std::optional<fcc::FccCode> code;
    if (method == "two-step") {
        p.resolve();
        if (!f) throw std::invalid_argument("--function is required");
        if (inner.min_distance() < p.dd) throw std::invalid_argument("inner code distance below d_d");
        code = fcc::construct_two_step(inner, *f, derive_value_parities(inner, *f, p.tf, opts), p.df);
    } else if (method == "locally-binary") {
        p.resolve();
        if (!f) throw std::invalid_argument("--function is required");
        code = fcc::construct_locally_binary(*f, inner, p.df);
    } else if (method == "locally-bounded") {
        p.resolve();
        if (!f) throw std::invalid_argument("--function is required");
        int lambda = 1;
        for (const fcc::Word& u : fcc::all_messages(*f))
            lambda = std::max(lambda, static_cast<int>(fcc::function_ball(*f, u, 2 * p.tf).values.size()));
        fcc::ColorMap color = fcc::color_map(*f, 2 * p.tf, lambda);
        std::vector<fcc::Word> aux = aux_path.empty() ? search_uniform_aux(lambda, 2 * (p.tf - p.td), f->q(), opts)
                                                      : fcc::word_list_from_json(load_json(aux_path));
        code = fcc::construct_locally_bounded(*f, inner, p.td, p.tf, aux, color);
    } else if (method == "hamming-weight") {
        p.resolve();
        std::vector<fcc::Word> aux = aux_path.empty() ? search_uniform_aux(2 * p.tf + 1, 2 * (p.tf - p.td), inner.q(), opts)
                                                      : fcc::word_list_from_json(load_json(aux_path));
        code = fcc::construct_hamming_weight(inner, aux, p.td, p.tf);
    } else if (method == "linear") {
        if (!f) throw std::invalid_argument("--function is required");
        if (outer_path.empty()) throw std::invalid_argument("--outer is required for the linear method");
        fcc::LinearCode outer = fcc::linear_code_from_json(load_json(outer_path));
        code = fcc::construct_linear_fcc(*f, inner, outer);
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    emit(fcc::fcc_code_to_json(*code), out_path);
    return kExitValid;
}

int run_verify(const std::string& code_path, const std::string& function_path, ProtectionParams p, const std::string& out_path) {
    p.resolve();
    fcc::FccCode code = fcc::fcc_code_from_json(load_json(code_path));
    fcc::FunctionSpec f = function_path.empty() ? code.function() : fcc::function_spec_from_json(load_json(function_path));
    fcc::VerificationReport report = fcc::check_fcc(code, f, p.dd, p.df);
    emit(fcc::verification_report_to_json(report), out_path);
    if (!report.is_valid && !out_path.empty())
        std::cerr << "invalid: " << report.violations.size() << " violating pair(s)\n";
    return report.is_valid ? kExitValid : kExitViolation;
}

int run_bounds(const std::string& function_path, const std::string& ecc_path, ProtectionParams p, bool exact_centers, bool csv,
               int csv_rows, int max_r, std::uint64_t budget, int parallel, const std::string& out_path) {
    p.resolve();
    fcc::FunctionSpec f = fcc::function_spec_from_json(load_json(function_path));
    fcc::SearchOptions opts = search_options_from(max_r, budget, parallel, false);

    if (csv) {
        // ladder of (d_d, d_f) rows stepping both by 2 from the given pair;
        // columns: the triple formula and the averaged bound (exact, decimal,
        // ceiling)
        std::cout << "dd,df,two_tf_plus_td,averaged,averaged_decimal,averaged_ceiling\n";
        long long preimage_max = static_cast<long long>(f.max_preimage_size());
        for (int row = 0, dd = p.dd, df = p.df; row < csv_rows; ++row, dd += 2, df += 2) {
            int td = (dd - 1) / 2, tf = (df - 1) / 2;
            fcc::Rational averaged = fcc::plotkin_fcc_dp(f.k(), f.q(), preimage_max, dd, df);
            std::cout << dd << ',' << df << ',' << 2 * tf + td << ',' << fcc::rational_to_string(averaged) << ','
                      << fcc::rational_to_decimal(averaged, 3) << ',' << fcc::ceil_rational(averaged) << "\n";
        }
        return kExitValid;
    }

    fcc::BoundReport lower = fcc::lower_bound_suite(f, p.td, p.tf, {}, opts);
    fcc::json out{{"lower", fcc::bound_report_to_json(lower)}};
    if (!ecc_path.empty()) {
        fcc::LinearCode inner = fcc::linear_code_from_json(load_json(ecc_path));
        out["upper"] = fcc::bound_report_to_json(fcc::upper_bound_suite(f, inner, p.td, p.tf, opts));
    }
    fcc::FeasibilityResult feas = fcc::hamming_feasible_n_dp(f, p.dd, p.tf, std::max(p.dd, f.k()), exact_centers);
    out["counting"] = fcc::json{{"smallest_feasible_n", fcc::smallest_feasible_n_dp(f, p.dd, p.tf, exact_centers)},
                                {"method", feas.method},
                                {"relaxed", feas.relaxed}};
    emit(out, out_path);
    return kExitValid;
}

int run_ndsearch(const std::string& matrix_path, int q, int max_r, std::uint64_t budget, int parallel, bool heuristic,
                 const std::string& out_path) {
    fcc::DistanceMatrix d = fcc::distance_matrix_from_json(load_json(matrix_path));
    fcc::SearchResult res = fcc::min_length_dcode(d, q, search_options_from(max_r, budget, parallel, heuristic));
    emit(fcc::search_result_to_json(res, q), out_path);
    return res.exact() ? kExitValid : kExitBudget;
}

int run_graph(const std::string& code_path, const std::string& dot_path, const std::string& out_path) {
    fcc::LoadedCode loaded = fcc::any_code_from_json(load_json(code_path));
    fcc::MinDistGraph g = fcc::build_min_distance_graph(loaded.words);
    fcc::json j{{"q", loaded.q},
                {"codewords", loaded.words.size()},
                {"min_distance", g.d_min},
                {"components", g.components}};
    try {
        j["perfect"] = fcc::is_perfect(loaded.words, loaded.q);
    } catch (const std::invalid_argument&) {
        j["perfect"] = nullptr;  // even minimum distance
    }
    j["mds"] = fcc::is_mds(loaded.words, loaded.q);
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw std::invalid_argument("cannot write " + dot_path);
        dot << fcc::to_dot(g);
    }
    emit(j, out_path);
    return kExitValid;
}

int run_simulate(const std::string& code_path, const std::string& function_path, const std::string& mode, ProtectionParams p,
                 std::uint64_t trials, std::uint64_t seed, std::uint64_t budget, const std::string& out_path) {
    p.resolve();
    fcc::FccCode code = fcc::fcc_code_from_json(load_json(code_path));
    fcc::FunctionSpec f = function_path.empty() ? code.function() : fcc::function_spec_from_json(load_json(function_path));
    if (mode != "exhaustive" && mode != "mc") throw std::invalid_argument("mode must be exhaustive or mc");
    fcc::SweepReport report = mode == "exhaustive" ? fcc::exhaustive_error_sweep(code, f, p.td, p.tf, budget)
                                                   : fcc::monte_carlo_sweep(code, f, p.td, p.tf, trials, seed);
    emit(fcc::sweep_report_to_json(report), out_path);
    return report.clean() ? kExitValid : kExitViolation;
}

int run_tables(const std::string& name, bool list) {
    if (list) {
        for (const std::string& n : fcc::fixtures::table_names()) std::cout << n << "\n";
        return kExitValid;
    }
    std::cout << fcc::fixtures::render_table(name);
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"function-correcting codes with data protection: constructions, verification, bounds"};
    app.require_subcommand(1);

    std::string function_path, ecc_path, aux_path, outer_path, code_path, matrix_path, out_path, dot_path;
    std::string method, mode = "exhaustive", example_name;
    bool exact_centers = false, csv = false, heuristic = false, list_tables = false;
    int q = 2, max_r = 24, parallel = 1, csv_rows = 4;
    std::uint64_t budget = default_node_budget(), trials = 1000, seed = 1;
    ProtectionParams p;

    CLI::App* construct = app.add_subcommand("construct", "build a code by one of the named methods");
    construct->add_option("--method", method, "two-step | locally-binary | locally-bounded | hamming-weight | linear")->required();
    construct->add_option("--function", function_path, "function JSON");
    construct->add_option("--ecc", ecc_path, "inner linear code JSON")->required();
    construct->add_option("--aux", aux_path, "auxiliary word-list JSON");
    construct->add_option("--outer", outer_path, "outer linear code JSON (linear method)");
    add_protection_flags(construct, p);
    construct->add_option("--max-r", max_r, "parity-length search cap");
    construct->add_option("--node-budget", budget, "search node budget");
    construct->add_option("--parallel", parallel, "search workers");
    construct->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check the defining distance conditions");
    verify->add_option("--code", code_path, "code JSON")->required();
    verify->add_option("--function", function_path, "function JSON (default: the code's own)");
    add_protection_flags(verify, p);
    verify->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* bounds = app.add_subcommand("bounds", "redundancy bound suites and counting feasibility");
    bounds->add_option("--function", function_path, "function JSON")->required();
    bounds->add_option("--ecc", ecc_path, "inner linear code JSON (enables upper bounds)");
    add_protection_flags(bounds, p);
    bounds->add_flag("--exact-centers", exact_centers, "brute-force ball-union center minimization");
    bounds->add_flag("--csv", csv, "emit the (d_d, d_f) ladder as CSV");
    bounds->add_option("--csv-rows", csv_rows, "ladder length for --csv");
    bounds->add_option("--max-r", max_r, "parity-length search cap");
    bounds->add_option("--node-budget", budget, "search node budget");
    bounds->add_option("--parallel", parallel, "search workers");
    bounds->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* ndsearch = app.add_subcommand("ndsearch", "minimal length of an irregular-distance code");
    ndsearch->add_option("--matrix", matrix_path, "distance matrix JSON")->required();
    ndsearch->add_option("--q", q, "field order");
    ndsearch->add_option("--max-r", max_r, "length cap");
    ndsearch->add_option("--node-budget", budget, "node budget");
    ndsearch->add_option("--parallel", parallel, "workers splitting the top branch");
    ndsearch->add_flag("--heuristic", heuristic, "descending row-sum order");
    ndsearch->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* graph = app.add_subcommand("graph", "minimum-distance graph, components, perfect/MDS checks");
    graph->add_option("--code", code_path, "code JSON (word list, linear code, or explicit map)")->required();
    graph->add_option("--dot", dot_path, "write DOT rendering here");
    graph->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "error-injection decode sweeps");
    simulate->add_option("--code", code_path, "code JSON")->required();
    simulate->add_option("--function", function_path, "function JSON (default: the code's own)");
    simulate->add_option("--mode", mode, "exhaustive | mc");
    add_protection_flags(simulate, p);
    simulate->add_option("--trials", trials, "monte-carlo trials");
    simulate->add_option("--seed", seed, "monte-carlo seed");
    simulate->add_option("--pattern-budget", budget, "exhaustive pattern budget");
    simulate->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* tables = app.add_subcommand("tables", "render a bundled worked example");
    tables->add_option("--example", example_name, "example name (see --list)");
    tables->add_flag("--list", list_tables, "list bundled example names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return run_construct(method, function_path, ecc_path, aux_path, outer_path, p, max_r, budget, parallel, out_path);
        if (verify->parsed()) return run_verify(code_path, function_path, p, out_path);
        if (bounds->parsed())
            return run_bounds(function_path, ecc_path, p, exact_centers, csv, csv_rows, max_r, budget, parallel, out_path);
        if (ndsearch->parsed()) return run_ndsearch(matrix_path, q, max_r, budget, parallel, heuristic, out_path);
        if (graph->parsed()) return run_graph(code_path, dot_path, out_path);
        if (simulate->parsed()) return run_simulate(code_path, function_path, mode, p, trials, seed, budget, out_path);
        if (tables->parsed()) {
            if (!list_tables && example_name.empty()) throw std::invalid_argument("tables needs --example or --list");
            return run_tables(example_name, list_tables);
        }
    } catch (const fcc::budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const fcc::json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
