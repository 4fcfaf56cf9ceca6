#include <doctest.h>

#include <random>

#include "fcc/fixtures.hpp"
#include "fcc/function_spec.hpp"
#include "fcc/linear_code.hpp"
#include "fcc/word.hpp"

using namespace fcc;
namespace fx = fcc::fixtures;

namespace {

Word w(const std::string& s, int q = 2) { return Word::from_string(q, s); }

Word random_word(std::mt19937_64& rng, int q, int len) {
    std::vector<std::uint8_t> sym(static_cast<std::size_t>(len));
    for (auto& s : sym) s = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(q));
    return Word(q, std::move(sym));
}

}  // namespace

TEST_CASE("word construction and ranks") {
    CHECK(w("0110").rank() == 6);
    CHECK(Word::from_rank(2, 4, 6).to_string() == "0110");
    CHECK(w("0123", 5).rank() == 0 * 125 + 1 * 25 + 2 * 5 + 3);
    CHECK_THROWS_AS(Word(4, {0, 1}), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(Word(2, {0, 2}), std::invalid_argument);  // symbol out of range
    CHECK(Word::zero(2, 0).size() == 0);                      // empty parities are legal
}

TEST_CASE("hamming distance examples") {
    CHECK(hamming_distance(w("0110"), w("0110")) == 0);
    CHECK(hamming_distance(w("00"), w("11")) == 2);
    CHECK(hamming_distance(w("100110"), w("011110")) == 3);
    CHECK_THROWS_AS(hamming_distance(w("00"), w("000")), std::invalid_argument);
    CHECK_THROWS_AS(hamming_distance(w("00"), w("00", 3)), std::invalid_argument);
}

TEST_CASE("hamming distance is a metric") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int q = trial % 2 == 0 ? 2 : 3;
        int len = 1 + static_cast<int>(rng() % 8);
        Word a = random_word(rng, q, len), b = random_word(rng, q, len), c = random_word(rng, q, len);
        CHECK((hamming_distance(a, b) == 0) == (a == b));
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
    }
}

TEST_CASE("hamming weight") {
    CHECK(hamming_weight(w("0000")) == 0);
    CHECK(hamming_weight(w("0110")) == 2);
    CHECK(hamming_weight(w("111000011")) == 5);
    CHECK(hamming_weight(w("102", 3)) == hamming_distance(w("102", 3), Word::zero(3, 3)));
}

TEST_CASE("function evaluation across variants") {
    FunctionSpec table = fx::three_valued_pair();
    CHECK(table.eval(w("01")) == Value(1));
    CHECK(table.eval(w("00")) == Value(0));
    CHECK(table.eval(w("11")) == Value(2));
    CHECK(table.image_size() == 3);

    FunctionSpec weight = FunctionSpec::make_weight(2, 3);
    CHECK(weight.eval(w("000")) == Value(0));
    CHECK(weight.eval(w("110")) == Value(2));

    FunctionSpec mod = FunctionSpec::make_weight_mod(2, 4, 2);
    CHECK(mod.eval(w("1110")) == Value(1));

    FunctionSpec linear = fx::xor_pair_map();
    CHECK(linear.eval(w("110")) == Value(w("00")));
    CHECK(linear.eval(w("100")) == Value(w("10")));
    CHECK_THROWS_AS(linear.eval(w("10")), std::invalid_argument);

    CHECK_THROWS_AS(FunctionSpec::make_table(2, 2, {0, 1, 2}), std::invalid_argument);  // wrong table size
}

TEST_CASE("preimage statistics") {
    FunctionSpec weight = fx::weight4();
    CHECK(weight.max_preimage_size() == 6);
    CHECK(weight.min_preimage_size() == 1);
    CHECK(weight.preimage_size(Value(2)) == 6);
    CHECK_THROWS_AS(weight.preimage_size(Value(9)), std::invalid_argument);
}

TEST_CASE("linear encoding") {
    LinearCode code = fx::ecc_633();
    CHECK(code.encode(w("000")).to_string() == "000000");
    CHECK(code.encode(w("100")).to_string() == "100110");
    CHECK(code.encode(w("011")).to_string() == "011110");
    CHECK_THROWS_AS(code.encode(w("0000")), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Word u = random_word(rng, 2, 3), v = random_word(rng, 2, 3);
        CHECK(code.encode(u + v) == code.encode(u) + code.encode(v));
    }
}

TEST_CASE("minimum distance by exhaustive sweep") {
    CHECK(fx::identity_code(2, 4).min_distance() == 1);
    CHECK(fx::ecc_633().min_distance() == 3);
    CHECK(fx::hamming_743().min_distance() == 3);
    CHECK(fx::mds_f5_423().min_distance() == 3);

    // linearity: min nonzero weight equals the minimum over distinct pairs
    for (const LinearCode& code : {fx::ecc_633(), fx::inner_734(), fx::mds_f5_432()}) {
        std::vector<Word> words = code.codewords();
        int best = code.n();
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, hamming_distance(words[i], words[j]));
        CHECK(best == code.min_distance());
    }
}

TEST_CASE("generator matrices must have full rank") {
    CHECK_THROWS_AS(LinearCode(2, Matrix::from_rows({{1, 0, 1}, {1, 0, 1}}, 2)), std::invalid_argument);
}

TEST_CASE("exhaustive sweeps refuse oversized dimensions") {
    CHECK_THROWS_AS(fx::identity_code(2, 23).min_distance(), std::length_error);
    CHECK_THROWS_AS(fx::identity_code(2, 23).codewords(), std::length_error);
}

TEST_CASE("systematic form") {
    LinearCode code = fx::ecc_633();
    SystematicForm sys = systematic_form(code);
    CHECK(sys.code.generator().to_rows() == code.generator().to_rows());
    CHECK(sys.column_from == std::vector<int>{0, 1, 2, 3, 4, 5});

    // swapping columns 0 and 3 keeps the left block invertible, so row
    // operations alone restore standard form and the code set is unchanged
    std::vector<std::vector<int>> swapped = code.generator().to_rows();
    for (auto& row : swapped) std::swap(row[0], row[3]);
    LinearCode moved(2, Matrix::from_rows(swapped, 2));
    SystematicForm restored = systematic_form(moved);
    CHECK(restored.code.is_systematic());
    CHECK(restored.column_from == std::vector<int>{0, 1, 2, 3, 4, 5});
    std::vector<Word> lhs = restored.code.codewords(), rhs = moved.codewords();
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);

    // a singular left block forces a recorded column move
    LinearCode stuck(2, Matrix::from_rows({{1, 1, 0, 1}, {1, 1, 1, 0}}, 2));
    SystematicForm fixed = systematic_form(stuck);
    CHECK(fixed.code.is_systematic());
    CHECK(fixed.column_from == std::vector<int>{0, 2, 1, 3});
    // the restored set is the original set with coordinates permuted
    std::vector<Word> permuted;
    for (const Word& c : stuck.codewords()) {
        std::vector<std::uint8_t> sym;
        for (int i = 0; i < 4; ++i) sym.push_back(c[fixed.column_from[static_cast<std::size_t>(i)]]);
        permuted.emplace_back(2, std::move(sym));
    }
    std::vector<Word> out = fixed.code.codewords();
    std::sort(out.begin(), out.end());
    std::sort(permuted.begin(), permuted.end());
    CHECK(out == permuted);
}

TEST_CASE("kernel of a linear map") {
    // zero map: kernel is the whole space
    FunctionSpec zero_map = FunctionSpec::make_linear(2, 3, Matrix::from_rows({{0, 0, 0}}, 2));
    CHECK(kernel_of_linear_map(zero_map).elements.size() == 8);

    FunctionSpec parity = FunctionSpec::make_linear(2, 2, Matrix::from_rows({{1, 1}}, 2));
    KernelResult ker = kernel_of_linear_map(parity);
    CHECK(ker.basis.size() == 1);
    CHECK(ker.basis[0].to_string() == "11");

    KernelResult ker3 = kernel_of_linear_map(fx::xor_pair_map());
    REQUIRE(ker3.elements.size() == 2);
    CHECK(ker3.elements[0].to_string() == "000");
    CHECK(ker3.elements[1].to_string() == "110");

    CHECK_THROWS_AS(kernel_of_linear_map(fx::weight3()), std::invalid_argument);
}

TEST_CASE("linear map values agree on kernel cosets") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        int q = trial % 2 == 0 ? 2 : 3;
        int k = 2 + static_cast<int>(rng() % 3);
        int rows = 1 + static_cast<int>(rng() % 2);
        std::vector<std::vector<int>> mat(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(k)));
        for (auto& row : mat)
            for (auto& e : row) e = static_cast<int>(rng() % static_cast<std::uint64_t>(q));
        FunctionSpec f = FunctionSpec::make_linear(q, k, Matrix::from_rows(mat, q));
        KernelResult ker = kernel_of_linear_map(f);
        std::vector<Word> kernel = ker.elements;
        for (const Word& u : all_words(q, k))
            for (const Word& v : all_words(q, k)) {
                bool same_value = f.eval(u) == f.eval(v);
                bool in_kernel = std::find(kernel.begin(), kernel.end(), u - v) != kernel.end();
                CHECK(same_value == in_kernel);
            }
    }
}
