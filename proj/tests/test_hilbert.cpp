#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "punctual/golden.hpp"
#include "punctual/hilbert.hpp"
#include "punctual/monomial_ideal.hpp"

using namespace punctual;

TEST_CASE("HilbertFunction basics") {
    HilbertFunction H({1, 5, 6, 1});
    CHECK(H.str() == "(1,5,6,1)");
    CHECK(H.sum() == 13);
    CHECK(H.socle_degree() == 3);
    CHECK(H(0) == 1);
    CHECK(H(2) == 6);
    CHECK(H(7) == 0);  // past the socle degree the function is zero
    CHECK(H == HilbertFunction({1, 5, 6, 1}));
    CHECK(H != HilbertFunction({1, 5, 6, 2}));
}

TEST_CASE("Macaulay representation reconstructs its input") {
    for (long h = 0; h <= 60; ++h) {
        for (long d = 1; d <= 5; ++d) {
            auto rep = macaulay_representation(h, d);
            long total = 0;
            long prev_i = d + 1;
            long prev_a = -1;
            for (auto [a, i] : rep) {
                CHECK(i < prev_i);  // indices strictly decrease
                CHECK(a >= i);      // each binomial is nonzero
                if (prev_a >= 0) CHECK(a < prev_a);
                prev_i = i;
                prev_a = a;
                total += binomial_l(a, i);
            }
            CHECK(total == h);
        }
    }
    CHECK_THROWS_AS(macaulay_representation(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_representation(3, 0), std::invalid_argument);
}

TEST_CASE("Macaulay growth bound spot values") {
    // h = C(3,1) at d = 1 grows to at most C(4,2)
    CHECK(macaulay_growth_bound(3, 1) == 6);
    // 4 = C(3,2) + C(1,1) -> C(4,3) + C(2,2)
    CHECK(macaulay_growth_bound(4, 2) == 5);
    // 6 = C(4,2) -> C(5,3)
    CHECK(macaulay_growth_bound(6, 2) == 10);
    // 5 = C(4,3) + C(2,2) -> C(5,4) + C(3,3)
    CHECK(macaulay_growth_bound(5, 3) == 6);
    // a single socle generator can never spread
    for (long d = 1; d <= 8; ++d) CHECK(macaulay_growth_bound(1, d) == 1);
    CHECK(macaulay_growth_bound(0, 3) == 0);
}

TEST_CASE("is_o_sequence agrees with hand checks") {
    CHECK(is_o_sequence(HilbertFunction({1, 3, 3, 2, 1})));
    CHECK(is_o_sequence(HilbertFunction({1, 4, 3, 2, 1})));
    CHECK(is_o_sequence(HilbertFunction({1, 1, 1, 1})));
    // growth(2,1) = 3 < 4
    CHECK_FALSE(is_o_sequence(HilbertFunction({1, 2, 4})));
    // growth(1,1) = 1 < 2
    CHECK_FALSE(is_o_sequence(HilbertFunction({1, 1, 2})));
}

TEST_CASE("every staircase Hilbert function is an O-sequence") {
    for (long k = 1; k <= 7; ++k)
        for (const auto& I : enumerate_monomial_ideals(3, k)) CHECK(is_o_sequence(I.hilbert_function()));
}

TEST_CASE("O-sequence counts match the frozen row") {
    const auto& want = golden::o_sequence_counts();
    for (long k = 1; k <= static_cast<long>(want.size()); ++k)
        CHECK(enumerate_o_sequences(k).size() == static_cast<size_t>(want[k - 1]));
}

TEST_CASE("enumerated O-sequences are valid, distinct, and complete for three variables") {
    for (long k = 1; k <= 8; ++k) {
        auto seqs = enumerate_o_sequences(k);
        std::set<HilbertFunction> uniq(seqs.begin(), seqs.end());
        CHECK(uniq.size() == seqs.size());
        for (const auto& H : seqs) {
            CHECK(H(0) == 1);
            CHECK(H.sum() == k);
            CHECK(is_o_sequence(H));
        }

        // Cross-oracle: O-sequences with H(1) <= 3 are exactly the Hilbert
        // functions of colength-k monomial ideals in three variables.
        HFConstraints c;
        c.max_at = {1, 3};
        auto constrained = enumerate_o_sequences(k, c);
        std::set<HilbertFunction> from_seqs(constrained.begin(), constrained.end());
        std::set<HilbertFunction> from_ideals;
        for (const auto& I : enumerate_monomial_ideals(3, k)) from_ideals.insert(I.hilbert_function());
        CHECK(from_seqs == from_ideals);
    }
}

TEST_CASE("constrained mass-11 enumeration matches the frozen list") {
    HFConstraints c;
    c.min_at = {0, 4, 3, 2};
    auto seqs = enumerate_o_sequences(11, c);
    const auto& want = golden::constrained_o_sequences_k11();
    REQUIRE(seqs.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(seqs[i].h == want[i]);
}

TEST_CASE("constraint combinations restrict consistently") {
    HFConstraints exact;
    exact.exact_h1 = 3;
    for (const auto& H : enumerate_o_sequences(9, exact)) CHECK(H(1) == 3);

    // exact H(1) is the same as min = max at degree 1
    HFConstraints pinched;
    pinched.min_at = {0, 3};
    pinched.max_at = {1, 3};
    CHECK(enumerate_o_sequences(9, exact) == enumerate_o_sequences(9, pinched));

    HFConstraints trail;
    trail.max_trailing = 1;
    for (const auto& H : enumerate_o_sequences(8, trail)) CHECK(H.h.back() <= 1);
}

TEST_CASE("expected dimension formula") {
    CHECK(expected_dimension(3, 10) == 18);
    CHECK(expected_dimension(1, 7) == 0);
    CHECK(expected_dimension(4, 1) == 0);
    CHECK(expected_dimension(5, 13) == 48);
    CHECK_THROWS_AS(expected_dimension(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(expected_dimension(3, 0), std::invalid_argument);
}
