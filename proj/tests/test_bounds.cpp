#include <doctest.h>

#include <random>

#include "fcc/ball_counting.hpp"
#include "fcc/bounds.hpp"
#include "fcc/dcode_search.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/fixtures.hpp"

using namespace fcc;
namespace fx = fcc::fixtures;

TEST_CASE("ball sizes") {
    CHECK(ball_size(5, 0, 2) == 1);
    CHECK(ball_size(7, 1, 2) == 8);
    CHECK(ball_size(3, 1, 2) == 4);
    CHECK(ball_size(4, 9, 2) == 16);   // radius clamps to the whole space
    CHECK(ball_size(3, 1, 3) == 7);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 9) == 0);
}

TEST_CASE("two balls at distance 1") {
    CHECK(union2_dist1(3, 1, 2) == 6);
    CHECK(union2_dist1(3, 0, 2) == 2);
    for (int n = 2; n <= 10; ++n) CHECK(union2_dist1(n, 1, 2) == 2ull * n);
}

TEST_CASE("binary intersections at distance 2") {
    CHECK(inter2_dist2_binary(4, 0) == 0);
    CHECK(inter2_dist2_binary(4, 1) == 2);
    CHECK(inter2_dist2_binary(5, 2) == 10);
}

TEST_CASE("three balls at distances 1,1,2") {
    for (int n = 4; n <= 8; ++n) CHECK(union3_112_binary(n, 1) == 3ull * n - 2);
    for (int n = 6; n <= 10; ++n) CHECK(2 * union3_112_binary(n, 2) == 3ull * n * n - 7ull * n + 10);
    CHECK_THROWS_AS(union3_112_binary(5, 0), std::invalid_argument);
}

TEST_CASE("two balls at distance 3") {
    for (int n = 4; n <= 10; ++n) CHECK(union2_dist3_binary(n, 2) == static_cast<std::uint64_t>(n) * n + n - 4);
    CHECK(union2_dist3_binary(6, 2) == 38);
    CHECK(union2_dist3_binary(9, 2) == 86);
    CHECK_THROWS_AS(union2_dist3_binary(6, 1), std::invalid_argument);
}

TEST_CASE("irregular averaged bound") {
    DistanceMatrix zero;
    zero.labels = {"1", "2"};
    zero.entries = {{0, 0}, {0, 0}};
    CHECK(plotkin_irregular(zero, 2) == Rational(0));

    FunctionSpec f = fx::three_valued_pair();
    std::vector<Word> u;
    for (const Word& m : all_messages(f)) u.push_back(m);
    DistanceMatrix drm = build_drm(f, 1, u);
    CHECK(plotkin_irregular(drm, 2) == Rational(9, 4));
    CHECK(ceil_rational(plotkin_irregular(drm, 2)) == 3);
    CHECK(min_length_dcode(drm, 2).length == 3);

    // constant requirements with an even count collapse to the classic form
    DistanceMatrix constant;
    constant.labels = {"1", "2", "3", "4"};
    constant.entries.assign(4, std::vector<int>(4, 3));
    for (int i = 0; i < 4; ++i) constant.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    CHECK(plotkin_irregular(constant, 2) == Rational(4 * 6 * 3, 16));
}

TEST_CASE("averaged redundancy bound") {
    CHECK(plotkin_fcc_dp(4, 2, 6, 3, 5) == Rational(33, 8));
    CHECK(plotkin_fcc_dp(4, 2, 15, 3, 5) == Rational(15, 8));
    CHECK(fx::weight4().max_preimage_size() == 6);
    CHECK_THROWS_AS(plotkin_fcc_dp(4, 2, 6, 5, 5), std::invalid_argument);
}

TEST_CASE("searched results dominate the averaged bound") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 15; ++trial) {
        DistanceMatrix d;
        int m = 3 + static_cast<int>(rng() % 2);
        for (int i = 0; i < m; ++i) d.labels.push_back(std::to_string(i));
        d.entries.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                int e = static_cast<int>(rng() % 4);
                d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
                d.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
            }
        SearchResult res = min_length_dcode(d, 2);
        REQUIRE(res.exact());
        CHECK(Rational(res.length) >= plotkin_irregular(d, 2));
        if (res.length > 0) CHECK(gv_dcode_upper(d) >= res.length);
    }
}

TEST_CASE("lower bound suite") {
    BoundReport weight = lower_bound_suite(fx::weight3(), 1, 2);
    bool found = false;
    for (const BoundEntry& e : weight.entries)
        if (e.name == "weight-formula") {
            CHECK(e.value == Rational(21, 4));
            found = true;
        }
    CHECK(found);

    BoundReport parity = lower_bound_suite(fx::parity4(), 1, 2);
    REQUIRE(parity.best_lower);
    CHECK(*parity.best_lower == Rational(5));  // the triple bound wins

    // a constant function only keeps the packing terms
    FunctionSpec constant = FunctionSpec::make_table(2, 3, {2, 2, 2, 2, 2, 2, 2, 2});
    BoundReport flat = lower_bound_suite(constant, 0, 1);
    REQUIRE(flat.best_lower);
    CHECK(*flat.best_lower == Rational(0));

    // caller-supplied subsets run through the matrix search
    std::vector<Word> reps;
    for (const char* s : {"000", "100", "011", "111"}) reps.push_back(Word::from_string(2, s));
    BoundReport with_subset = lower_bound_suite(fx::weight3(), 1, 2, {reps});
    bool subset_found = false;
    for (const BoundEntry& e : with_subset.entries)
        if (e.name == "subset-matrix[0]") subset_found = true;
    CHECK(subset_found);
}

TEST_CASE("upper bound suite") {
    BoundReport ex5 = upper_bound_suite(fx::weight3(), fx::ecc_633(), 1, 2);
    REQUIRE(ex5.best_upper);
    CHECK(*ex5.best_upper == Rational(6));  // exact coded-matrix search: 3 + (6 - 3)

    BoundReport hw8 = upper_bound_suite(fx::weight8(), fx::shortened_hamming(8), 1, 2);
    bool second_form = false;
    for (const BoundEntry& e : hw8.entries)
        if (e.name == "weight-optimal-inner") {
            CHECK(e.value == Rational(8));  // 12 + 4 - 8
            second_form = true;
        }
    CHECK(second_form);

    // t_f = t_d: the cap collapses to the inner redundancy
    BoundReport collapsed = upper_bound_suite(fx::weight3(), fx::ecc_633(), 1, 1);
    bool cap_found = false;
    for (const BoundEntry& e : collapsed.entries)
        if (e.name == "uniform-cap") {
            CHECK(e.value == Rational(3));
            cap_found = true;
        }
    CHECK(cap_found);

    CHECK_THROWS_AS(upper_bound_suite(fx::weight3(), fx::identity_code(2, 3), 1, 2), std::invalid_argument);
}

TEST_CASE("suites bracket the reference constructions") {
    struct Case {
        FunctionSpec f;
        LinearCode inner;
        int td, tf, achieved;
    };
    const std::vector<Case> cases = {
        {fx::weight3(), fx::ecc_633(), 1, 2, 6},
        {fx::parity4(), fx::hamming_743(), 1, 2, 5},
        {fx::weight8(), fx::shortened_hamming(8), 1, 2, 8},
    };
    for (const Case& c : cases) {
        BoundReport lower = lower_bound_suite(c.f, c.td, c.tf);
        BoundReport upper = upper_bound_suite(c.f, c.inner, c.td, c.tf);
        REQUIRE(lower.best_lower);
        REQUIRE(upper.best_upper);
        CHECK(*lower.best_lower <= *upper.best_upper);
        CHECK(*lower.best_lower <= Rational(c.achieved));
        CHECK(Rational(c.achieved) <= *upper.best_upper);
    }
}

TEST_CASE("uniform cap helper") {
    CHECK(upper_bound_nmd(4, 2, 2).value == 3);
    CHECK(upper_bound_nmd(4, 2, 2).exact);
    CHECK(upper_bound_nmd(5, 2, 2).value == 4);
    CHECK(upper_bound_nmd(4, 4, 2).value == 6);
    CHECK(upper_bound_nmd(4, 6, 2).value == 9);
    CHECK(upper_bound_nmd(1, 5, 2).value == 0);
    CHECK(upper_bound_nmd(2, 5, 2).value == 5);
    // large instances still get a sound constructive value
    NmdUpper big = upper_bound_nmd(1u << 16, 4, 2);
    CHECK(big.value >= 4);
    CHECK(!big.exact);
}

TEST_CASE("counting feasibility, function-level") {
    FunctionSpec f = fx::least_frequent_position();
    CHECK(smallest_feasible_n(f, 1) == 6);
    FeasibilityResult at6 = hamming_feasible_n(f, 1, 6);
    CHECK(at6.feasible);
    CHECK(at6.union_lower == 12);
    CHECK(!hamming_feasible_n(f, 1, 5).feasible);

    // a bijective function reduces to the classic packing bound
    FunctionSpec bijective = FunctionSpec::make_linear(2, 2, Matrix::from_rows({{1, 0}, {0, 1}}, 2));
    CHECK(smallest_feasible_n(bijective, 1) == 5);

    CHECK(smallest_feasible_n(fx::spread_map4(), 2) == 9);
    CHECK(hamming_feasible_n(fx::spread_map4(), 2, 9).relaxed);
}

TEST_CASE("counting feasibility with a center-distance floor") {
    FunctionSpec f = fx::mixed_bits3();
    CHECK(smallest_feasible_n_dp(f, 3, 2) == 9);
    FeasibilityResult at9 = hamming_feasible_n_dp(f, 3, 2, 9);
    CHECK(at9.union_lower == 86);
    CHECK(!at9.relaxed);
    CHECK(!hamming_feasible_n_dp(f, 3, 2, 8).feasible);

    // balls of radius t_f = t_d are disjoint; the bound is the packing bound
    FeasibilityResult disjoint = hamming_feasible_n_dp(f, 3, 1, 7);
    CHECK(disjoint.method == "disjoint balls");
    CHECK(disjoint.union_lower == 2 * ball_size(7, 1, 2));
}

TEST_CASE("exact center minimization agrees with the closed forms") {
    for (int n = 4; n <= 10; ++n)
        for (int t = 1; t <= 3; ++t) {
            CHECK(min_ball_union_exact(n, t, 2, 1) == union2_dist1(n, t, 2));
            CHECK(min_ball_union_exact(n, t, 3, 1) == union3_112_binary(n, t));
            if (t >= 2) CHECK(min_ball_union_exact(n, t, 2, 3) == union2_dist3_binary(n, t));
        }
    // the brute force confirms the worked value at length 9
    CHECK(min_ball_union_exact(9, 2, 2, 3) == 86);
}

TEST_CASE("suites work over larger prime fields") {
    FunctionSpec weight3ary = FunctionSpec::make_weight(3, 2);
    BoundReport lower = lower_bound_suite(weight3ary, 0, 1);
    REQUIRE(lower.best_lower);
    CHECK(*lower.best_lower >= Rational(2));  // adjacent pair forces 2 t_f

    BoundReport upper = upper_bound_suite(weight3ary, fx::identity_code(3, 2), 0, 1);
    REQUIRE(upper.best_upper);
    CHECK(*lower.best_lower <= *upper.best_upper);
}

TEST_CASE("rational rendering") {
    CHECK(rational_to_string(Rational(33, 8)) == "33/8");
    CHECK(rational_to_string(Rational(6)) == "6");
    CHECK(rational_to_decimal(Rational(33, 8), 3) == "4.125");
    CHECK(rational_to_decimal(Rational(21, 4), 2) == "5.25");
    CHECK(ceil_rational(Rational(9, 4)) == 3);
    CHECK(ceil_rational(Rational(-3, 2)) == -1);
    CHECK(ceil_rational(Rational(4)) == 4);
}
