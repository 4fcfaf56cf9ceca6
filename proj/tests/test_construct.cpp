#include <doctest.h>

#include <random>

#include "fcc/constructions.hpp"
#include "fcc/dcode_search.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/fixtures.hpp"
#include "fcc/verifier.hpp"

using namespace fcc;
namespace fx = fcc::fixtures;

namespace {

Word w(const std::string& s, int q = 2) { return Word::from_string(q, s); }

FunctionSpec random_table(std::mt19937_64& rng, int k, int image_cap) {
    std::vector<std::int64_t> values(std::size_t{1} << k);
    for (auto& v : values) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(image_cap));
    return FunctionSpec::make_table(2, k, std::move(values));
}

}  // namespace

TEST_CASE("function balls") {
    FunctionSpec parity = fx::parity4();
    CHECK(function_ball(parity, w("0110"), 0).values == std::vector<Value>{Value(0)});
    CHECK(function_ball(parity, w("0110"), 4).values == std::vector<Value>{Value(0), Value(1)});

    // weight balls cover the contiguous band of reachable weights
    for (int k : {4, 5, 6}) {
        FunctionSpec weight = FunctionSpec::make_weight(2, k);
        for (const Word& u : all_messages(weight))
            for (int rho = 0; rho <= k; ++rho) {
                FunctionBall ball = function_ball(weight, u, rho);
                int wt = hamming_weight(u);
                std::vector<Value> expected;
                for (int v = std::max(0, wt - rho); v <= std::min(k, wt + rho); ++v) expected.emplace_back(v);
                CHECK(ball.values == expected);
            }
    }
}

TEST_CASE("locally bounded sweep") {
    FunctionSpec constant = FunctionSpec::make_table(2, 3, {4, 4, 4, 4, 4, 4, 4, 4});
    CHECK(is_locally_bounded(constant, 3, 1));
    CHECK(is_locally_bounded(fx::parity4(), 4, 2));
    CHECK(!is_locally_bounded(fx::weight4(), 2, 2));
    for (int t_f : {1, 2}) CHECK(is_locally_bounded(fx::weight8(), 2 * t_f, 4 * t_f + 1));
}

TEST_CASE("color maps") {
    // enough colors for every value: the coloring is just the value index
    FunctionSpec f = fx::three_valued_pair();
    ColorMap wide = color_map(f, 2, 3);
    for (const Word& u : all_messages(f)) CHECK(wide.color(u) == f.image_index(f.eval(u)));

    // weight coloring is the weight residue, wrapping past lambda
    FunctionSpec weight = FunctionSpec::make_weight(2, 6);
    ColorMap residue = color_map(weight, 2, 5);
    for (const Word& u : all_messages(weight)) CHECK(residue.color(u) == hamming_weight(u) % 5);

    // properness: value-differing pairs within the radius get different colors
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        FunctionSpec g = random_table(rng, 4, 3);
        int lambda = 1;
        for (const Word& u : all_messages(g)) lambda = std::max(lambda, static_cast<int>(function_ball(g, u, 2).values.size()));
        ColorMap cm;
        try {
            cm = color_map(g, 2, lambda);
        } catch (const std::invalid_argument&) {
            continue;  // ball not contiguous in ascending order
        }
        std::vector<Word> msgs = all_messages(g);
        for (std::size_t i = 0; i < msgs.size(); ++i)
            for (std::size_t j = i + 1; j < msgs.size(); ++j)
                if (hamming_distance(msgs[i], msgs[j]) <= 2 && !(g.eval(msgs[i]) == g.eval(msgs[j])))
                    CHECK(cm.colors[i] != cm.colors[j]);
    }

    // (1,2)-bounded, three values, but the ball around 000 is {0, 2}: a gap
    FunctionSpec gapped = FunctionSpec::make_table(2, 3, {0, 2, 2, 2, 2, 2, 2, 1});
    REQUIRE(is_locally_bounded(gapped, 1, 2));
    CHECK_THROWS_WITH_AS(color_map(gapped, 1, 2), doctest::Contains("not contiguous"), std::invalid_argument);
}

TEST_CASE("two-step gluing") {
    FccCode code = fx::ex5_code();
    CHECK(code.n() == 9);
    CHECK(code.codeword(w("110")).to_string() == "110011101");
    CHECK(code.provenance() == "two-step");

    // empty parities reproduce the inner code
    FunctionSpec f = fx::weight3();
    LinearCode inner = fx::ecc_633();
    std::vector<Word> empties(8, Word::zero(2, 0));
    FccCode plain = construct_two_step(inner, f, empties, 3);
    for (const Word& u : all_messages(f)) CHECK(plain.codeword(u) == inner.encode(u));

    // distances decompose across the systematic halves
    for (const Word& u : all_messages(f))
        for (const Word& v : all_messages(f)) {
            Word cu = code.codeword(u), cv = code.codeword(v);
            int head = hamming_distance(inner.encode(u), inner.encode(v));
            CHECK(hamming_distance(cu, cv) - head ==
                  hamming_distance(Word(2, {cu[6], cu[7], cu[8]}), Word(2, {cv[6], cv[7], cv[8]})));
        }

    // value-paired parities on the position function give the length-9 code
    FccCode position = fx::ex4_code();
    CHECK(position.codeword(w("100")).to_string() == "100111100");
    CHECK(position.codeword(w("110")).to_string() == "110001111");
    CHECK(check_fcc(position, fx::least_frequent_position(), 3, 5).is_valid);

    LinearCode not_systematic(2, Matrix::from_rows({{1, 1, 0}, {0, 1, 1}}, 2));
    CHECK_THROWS_AS(construct_two_step(not_systematic, FunctionSpec::make_weight(2, 2), {empties[0], empties[0], empties[0], empties[0]}, 3),
                    std::invalid_argument);
}

TEST_CASE("parity lifting") {
    FunctionSpec f = fx::weight3();
    std::vector<Word> short_parities = fx::parities_by_value(f, {{0, "000"}, {1, "110"}, {2, "101"}, {3, "011"}}, 3);

    // identity inner code: lifting is the identity (parities must already
    // satisfy the raw requirement matrix, here the function-only parities)
    std::vector<Word> raw_parities =
        fx::parities_by_value(f, {{0, "000000"}, {1, "111100"}, {2, "110011"}, {3, "001111"}}, 6);
    std::vector<Word> same = lift_dcode(fx::identity_code(2, 3), f, 0, 2, raw_parities);
    CHECK(same == raw_parities);

    std::vector<Word> lifted = lift_dcode(fx::ecc_633(), f, 1, 2, short_parities);
    CHECK(lifted[w("100").rank()].to_string() == "110110");
    CHECK(lifted[w("111").rank()].to_string() == "000011");
    CHECK(is_dcode(lifted, build_drm_dp(f, 1, 2, all_messages(f))).ok);

    // parities that ignore the coded matrix are rejected during verification
    std::vector<Word> broken(8, Word::zero(2, 3));
    CHECK_THROWS_AS(lift_dcode(fx::ecc_633(), f, 1, 2, broken), std::invalid_argument);
}

TEST_CASE("locally binary construction") {
    FccCode code = fx::vi_parity_code();
    CHECK(code.n() == 9);
    CHECK(code.codeword(w("1000")).to_string() == "100011011");
    CHECK(code.codeword(w("1111")).to_string() == "111111100");
    CHECK(check_fcc(code, fx::parity4(), 3, 5).is_valid);

    // d_f must exceed the inner distance
    CHECK_THROWS_AS(construct_locally_binary(fx::parity4(), fx::hamming_743(), 3), std::invalid_argument);
    // the weight function is not locally binary at radius 4
    CHECK_THROWS_AS(construct_locally_binary(fx::weight4(), fx::hamming_743(), 5), std::invalid_argument);

    // constant function: every message is the maximum of its ball
    FunctionSpec constant = FunctionSpec::make_table(2, 4, std::vector<std::int64_t>(16, 3));
    FccCode flat = construct_locally_binary(constant, fx::hamming_743(), 5);
    for (const Word& u : all_messages(constant)) {
        CHECK(flat.codeword(u)[7] == 1);
        CHECK(flat.codeword(u)[8] == 1);
    }

    // a perfect inner code with d_f = d_d + 1 achieves the packing floor
    // n - k + 1, so the one-symbol tail is optimal
    FccCode tight = construct_locally_binary(fx::parity4(), fx::hamming_743(), 4);
    CHECK(tight.n() - tight.k() == 4);
    CHECK(check_fcc(tight, fx::parity4(), 3, 4).is_valid);
}

TEST_CASE("locally bounded construction") {
    // two colors with a repetition tail reproduce the locally binary shape
    FunctionSpec parity = fx::parity4();
    ColorMap cm = color_map(parity, 4, 2);
    FccCode two_colors = construct_locally_bounded(parity, fx::hamming_743(), 1, 2, {w("00"), w("11")}, cm);
    CHECK(two_colors.n() == 9);
    CHECK(check_fcc(two_colors, parity, 3, 5).is_valid);

    // six colors on the weight function over F_2^5 (balls span six weights)
    FunctionSpec weight5 = FunctionSpec::make_weight(2, 5);
    SearchResult aux = min_length_code(6, 2, 2);
    REQUIRE(aux.exact());
    ColorMap residue = color_map(weight5, 4, 6);
    FccCode colored = construct_locally_bounded(weight5, fx::shortened_hamming(5), 1, 2, *aux.witness, residue);
    CHECK(check_fcc(colored, weight5, 3, 5).is_valid);
    CHECK(exhaustive_error_sweep(colored, weight5, 1, 2).clean());

    // a four-word tail costs 3 symbols per unit of (t_f - t_d)
    for (int t : {1, 2, 3}) CHECK(min_length_code(4, 2 * t, 2).length == 3 * t);

    // improper coloring is rejected
    ColorMap bad = cm;
    for (auto& color : bad.colors) color = 0;
    CHECK_THROWS_AS(construct_locally_bounded(parity, fx::hamming_743(), 1, 2, {w("00"), w("11")}, bad), std::invalid_argument);
}

TEST_CASE("weight-residue construction") {
    FccCode code = construct_hamming_weight(fx::shortened_hamming(8), fx::aux_452(), 1, 2);
    CHECK(code.n() == 16);
    CHECK(code.n() - code.k() == 8);
    VerificationReport rep = check_fcc(code, fx::weight8(), 3, 5);
    CHECK(rep.is_valid);
    CHECK(rep.pairs_checked == 256ull * 255 / 2);

    CHECK_THROWS_AS(construct_hamming_weight(fx::shortened_hamming(8), fx::aux_452(), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_hamming_weight(fx::shortened_hamming(8), {w("0000"), w("1100")}, 1, 2), std::invalid_argument);
}

TEST_CASE("linear concatenation") {
    FccCode code = fx::vii_linear_code();
    CHECK(code.n() == 10);
    CHECK(code.declared_dd() == 4);
    CHECK(code.declared_df() == 6);
    CHECK(code.codeword(w("110")).to_string() == "1100110000");

    // closure of the image under addition
    for (const Word& u : all_messages(code.function()))
        for (const Word& v : all_messages(code.function()))
            CHECK(code.codeword(u) + code.codeword(v) == code.codeword(u + v));

    // identity-like map: every distinct pair differs in value, so d >= d_f
    FunctionSpec full_map = FunctionSpec::make_linear(2, 3, Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2));
    FccCode identity_concat = construct_linear_fcc(full_map, fx::inner_734(), LinearCode(2, Matrix::from_rows(
        {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}, 2)));
    VerificationReport rep = check_fcc(identity_concat, full_map, identity_concat.declared_dd(), identity_concat.declared_df());
    CHECK(rep.is_valid);
    CHECK(*rep.measured_df == rep.measured_dd);

    CHECK_THROWS_AS(construct_linear_fcc(fx::weight3(), fx::inner_734(), fx::outer_322()), std::invalid_argument);
    LinearCode mismatched_outer(2, Matrix::from_rows({{1, 0, 1}}, 2));  // one row, but the map emits two symbols
    CHECK_THROWS_AS(construct_linear_fcc(fx::xor_pair_map(), fx::inner_734(), mismatched_outer), std::invalid_argument);
}

TEST_CASE("coset subcode and coset distance") {
    // the four-word code over Ker(f) = {00, 11}
    FunctionSpec pair_sum = FunctionSpec::make_linear(2, 2, Matrix::from_rows({{1, 1}}, 2));
    std::vector<Word> codewords = {w("0000"), w("0111"), w("1011"), w("1100")};  // message-rank order 00,01,10,11
    FccCode code(pair_sum, codewords, 2, 3, "explicit");
    CosetReport report = coset_subcode_distance(code);
    CHECK(report.code_distance == 2);
    REQUIRE(report.coset_distance);
    CHECK(*report.coset_distance == 3);
    CHECK(report.subcode.size() == 2);

    CosetReport concat = coset_subcode_distance(fx::vii_linear_code());
    CHECK(concat.code_distance == 4);
    CHECK(*concat.coset_distance == 6);

    // kernel covering everything leaves no cross-coset pair
    FunctionSpec zero_map = FunctionSpec::make_linear(2, 2, Matrix::from_rows({{0, 0}}, 2));
    FccCode ecc(zero_map, {w("0000"), w("0111"), w("1011"), w("1100")}, 2, 2, "explicit");
    CHECK(!coset_subcode_distance(ecc).coset_distance);

    // a code set that is not closed under addition is caught
    FccCode nonlinear(pair_sum, {w("0000"), w("0111"), w("1011"), w("1101")}, 2, 3, "explicit");
    CHECK_THROWS_AS(coset_subcode_distance(nonlinear), std::invalid_argument);
}

TEST_CASE("random bounded functions construct verifiably") {
    std::mt19937_64 rng(83);
    int built = 0;
    for (int trial = 0; trial < 40 && built < 12; ++trial) {
        FunctionSpec f = random_table(rng, 4, 4);
        int lambda = 1;
        for (const Word& u : all_messages(f)) lambda = std::max(lambda, static_cast<int>(function_ball(f, u, 4).values.size()));
        ColorMap cm;
        try {
            cm = color_map(f, 4, lambda);
        } catch (const std::invalid_argument&) {
            continue;
        }
        SearchResult aux = min_length_code(lambda, 2, 2);
        REQUIRE(aux.exact());
        FccCode code = construct_locally_bounded(f, fx::hamming_743(), 1, 2, *aux.witness, cm);
        CHECK(check_fcc(code, f, 3, 5).is_valid);
        ++built;
    }
    CHECK(built > 0);
}
