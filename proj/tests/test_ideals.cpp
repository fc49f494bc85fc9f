#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "punctual/checks.hpp"
#include "punctual/errors.hpp"
#include "punctual/golden.hpp"
#include "punctual/monomial_ideal.hpp"

using namespace punctual;

TEST_CASE("minimal generators drop multiples") {
    MonomialIdeal I = minimal_generators(
        2, {Monomial({1, 0}), Monomial({1, 1}), Monomial({0, 2}), Monomial({2, 3})});
    REQUIRE(I.gens.size() == 2);
    CHECK(I.contains(Monomial({1, 1})));
    CHECK(I.contains(Monomial({0, 2})));
    CHECK_FALSE(I.contains(Monomial({0, 1})));

    // containment is exactly divisibility by some generator
    for (int d = 0; d <= 5; ++d)
        for (const auto& m : monomial_basis(2, d)) {
            bool divisible = std::any_of(I.gens.begin(), I.gens.end(),
                                         [&](const Monomial& g) { return divides(g, m); });
            CHECK(I.contains(m) == divisible);
        }
}

TEST_CASE("colength and staircase agree") {
    MonomialIdeal I = curvilinear_ideal(3, 7);
    REQUIRE(I.finite_colength());
    CHECK(I.colength() == 7);
    CHECK(I.hilbert_function() == HilbertFunction({1, 1, 1, 1, 1, 1, 1}));

    auto stairs = I.staircase();
    CHECK(stairs.size() == 7);
    // staircases are downward closed
    std::set<Monomial, GrevlexGreater> in_stairs(stairs.begin(), stairs.end());
    for (const auto& m : stairs)
        for (int i = 1; i <= 3; ++i)
            if (m.e[static_cast<size_t>(i - 1)] > 0)
                CHECK(in_stairs.count(div(m, variable(3, i))) == 1);

    CHECK(ideal_from_staircase(3, stairs) == I);

    MonomialIdeal J = worked_example_ideal();
    CHECK(J.colength() == 10);
    CHECK(J.hilbert_function() == HilbertFunction({1, 3, 3, 2, 1}));

    // a principal ideal in two variables has infinite colength
    MonomialIdeal P = minimal_generators(2, {Monomial({1, 0})});
    CHECK_FALSE(P.finite_colength());
    CHECK_FALSE(P.colength().has_value());
}

TEST_CASE("enumeration counts in two variables are partition numbers") {
    const long partitions[] = {1, 2, 3, 5, 7, 11, 15, 22};
    for (long k = 1; k <= 8; ++k)
        CHECK(enumerate_monomial_ideals(2, k).size() == static_cast<size_t>(partitions[k - 1]));
    for (long k = 1; k <= 8; ++k) CHECK(enumerate_monomial_ideals(1, k).size() == 1);
}

TEST_CASE("enumeration in three variables matches the frozen prefix") {
    const auto& want = golden::monomial_counts_n3();
    for (long k = 1; k <= 7; ++k) {
        auto ideals = enumerate_monomial_ideals(3, k);
        CHECK(ideals.size() == static_cast<size_t>(want[static_cast<size_t>(k - 1)]));
        std::set<MonomialIdeal> uniq(ideals.begin(), ideals.end());
        CHECK(uniq.size() == ideals.size());
        for (const auto& I : ideals) CHECK(I.colength() == k);
    }
}

TEST_CASE("strongly stable enumeration equals the filtered full enumeration") {
    for (long k = 1; k <= 7; ++k) {
        auto stable = enumerate_strongly_stable(3, k);
        for (const auto& I : stable) CHECK(is_strongly_stable(I));

        std::set<MonomialIdeal> expect;
        for (const auto& I : enumerate_monomial_ideals(3, k))
            if (is_strongly_stable(I)) expect.insert(I);
        std::set<MonomialIdeal> got(stable.begin(), stable.end());
        CHECK(got == expect);
        CHECK(stable.size() ==
              static_cast<size_t>(golden::borel_counts_n3()[static_cast<size_t>(k - 1)]));
    }
    // square case prefix
    const auto& nk = golden::borel_counts_nk();
    for (long k = 1; k <= 6; ++k)
        CHECK(enumerate_strongly_stable(static_cast<int>(k), k).size() ==
              static_cast<size_t>(nk[static_cast<size_t>(k - 1)]));
}

TEST_CASE("strong stability spot checks") {
    CHECK(is_strongly_stable(curvilinear_ideal(3, 5)));
    CHECK(is_strongly_stable(minimal_generators(2, {Monomial({1, 0}), Monomial({0, 2})})));
    // x2 in the ideal but x1 not: the move x2 -> x1 escapes
    CHECK_FALSE(is_strongly_stable(minimal_generators(2, {Monomial({0, 1}), Monomial({2, 0})})));
}

TEST_CASE("lex segment ideals realize O-sequences") {
    MonomialIdeal L = lex_segment_ideal(HilbertFunction({1, 1, 1}), 2);
    CHECK(L == minimal_generators(2, {Monomial({1, 0}), Monomial({0, 3})}));

    for (long k = 1; k <= 7; ++k) {
        HFConstraints c;
        c.max_at = {1, 3};
        for (const auto& H : enumerate_o_sequences(k, c)) {
            MonomialIdeal I = lex_segment_ideal(H, 3);
            CHECK(I.hilbert_function() == H);
            CHECK(is_strongly_stable(I));
        }
    }
}

TEST_CASE("mirrored generators preserve the Hilbert function") {
    // reversing the variable order of a staircase keeps colength and HF
    for (const auto& I : enumerate_monomial_ideals(3, 6)) {
        MonomialIdeal M = mirror_ideal(I);
        CHECK(M.hilbert_function() == I.hilbert_function());
        CHECK(mirror_ideal(M) == I);
    }
}

TEST_CASE("enumeration respects the node cap") {
    CHECK_THROWS_AS(enumerate_monomial_ideals(3, 10, 50), ResourceLimitError);
}
