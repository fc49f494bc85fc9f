#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "punctual/monomial.hpp"
#include "punctual/polynomial.hpp"

using namespace punctual;

namespace {

std::vector<Monomial> all_up_to_degree(int n, int dmax) {
    std::vector<Monomial> out;
    for (int d = 0; d <= dmax; ++d)
        for (const auto& m : monomial_basis(n, d)) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("monomial construction and arithmetic") {
    Monomial m({2, 0, 1});
    CHECK(m.n() == 3);
    CHECK(m.degree() == 3);
    CHECK(monomial_to_string(m) == "x1^2*x3");
    CHECK(monomial_to_string(m, 'y') == "y1^2*y3");

    Monomial x2 = variable(3, 2);
    CHECK(monomial_to_string(x2) == "x2");
    CHECK(pure_power(3, 3, 4) == Monomial({0, 0, 4}));
    CHECK(monomial_to_string(Monomial(3)) == "1");

    CHECK(mul(m, x2) == Monomial({2, 1, 1}));
    CHECK(divides(x2, Monomial({0, 2, 0})));
    CHECK_FALSE(divides(m, x2));
    CHECK(div(Monomial({2, 1, 1}), x2) == m);
    CHECK(lcm(m, Monomial({1, 3, 0})) == Monomial({2, 3, 1}));
}

TEST_CASE("grevlex is a multiplicative total order refining degree") {
    GrevlexGreater gt;
    auto mons = all_up_to_degree(3, 4);

    for (const auto& a : mons)
        for (const auto& b : mons) {
            // totality: exactly one of >, ==, <
            int rels = (gt(a, b) ? 1 : 0) + (a == b ? 1 : 0) + (gt(b, a) ? 1 : 0);
            CHECK(rels == 1);
            if (a.degree() > b.degree()) CHECK(gt(a, b));
            if (gt(a, b)) {
                // translation invariance
                Monomial c({1, 2, 0});
                CHECK(gt(mul(a, c), mul(b, c)));
            }
        }
}

TEST_CASE("grevlex pins the degree-two order in three variables") {
    auto deg2 = monomial_basis(3, 2);
    std::sort(deg2.begin(), deg2.end(), GrevlexGreater{});
    std::vector<Monomial> want{Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0}),
                               Monomial({1, 0, 1}), Monomial({0, 1, 1}), Monomial({0, 0, 2})};
    CHECK(deg2 == want);
}

TEST_CASE("monomial_basis is complete and grevlex-descending") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) {
            auto basis = monomial_basis(n, d);
            CHECK(static_cast<long>(basis.size()) == binomial_l(n + d - 1, d));
            CHECK(std::is_sorted(basis.begin(), basis.end(), GrevlexGreater{}));
            for (const auto& m : basis) CHECK(m.degree() == d);
        }
}

TEST_CASE("moves toward earlier variables are grevlex increases") {
    GrevlexGreater gt;
    for (const auto& m : all_up_to_degree(4, 4))
        for (int j = 2; j <= 4; ++j) {
            if (m.e[j - 1] == 0) continue;
            for (int i = 1; i < j; ++i) {
                Monomial moved = mul(div(m, variable(4, j)), variable(4, i));
                CHECK(gt(moved, m));
            }
        }
}

TEST_CASE("polynomial parse and print round-trip") {
    const char* samples[] = {
        "x1^2*x3 - 3/2*x2^3 + 1",
        "x1 + x2 + x3",
        "2*x1^4 - x1^2*x2^2 + 5/7*x3^4",
        "-x1*x2*x3",
    };
    for (const char* s : samples) {
        Polynomial p = parse_polynomial(s, 3, 'x');
        Polynomial again = parse_polynomial(polynomial_to_string(p), 3, 'x');
        CHECK(again.terms == p.terms);
    }
    Polynomial q = parse_polynomial("y1^4 + y2^3", 4, 'y');
    CHECK(polynomial_to_string(q, 'y') == "y1^4 + y2^3");
    CHECK(q.degree() == 4);
    CHECK_FALSE(q.is_homogeneous());

    CHECK_THROWS_AS(parse_polynomial("x5", 3, 'x'), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1 + ", 3, 'x'), std::invalid_argument);

    auto list = parse_polynomial_list("x1^2, x2 - x3", 3, 'x');
    REQUIRE(list.size() == 2);
    CHECK(list[0].is_homogeneous());
}

TEST_CASE("polynomial arithmetic cancels exactly") {
    Polynomial p = parse_polynomial("x1^2 + x2", 2, 'x');
    Polynomial q = parse_polynomial("-x1^2 + x2", 2, 'x');
    Polynomial sum = p + q;
    CHECK(polynomial_to_string(sum) == "2*x2");
    CHECK((p - p).is_zero());

    Polynomial prod = p * q;  // (x2 + x1^2)(x2 - x1^2) = x2^2 - x1^4
    CHECK(prod.terms == parse_polynomial("x2^2 - x1^4", 2, 'x').terms);
}

TEST_CASE("contraction is the coefficient-free module action") {
    // no factorial coefficients: x1 acting on y1^2 gives y1, not 2 y1
    Polynomial f = parse_polynomial("y1^2", 2, 'y');
    Polynomial x1 = parse_polynomial("x1", 2, 'x');
    CHECK(polynomial_to_string(contract(x1, f), 'y') == "y1");

    // vanishing when the exponent does not dominate
    CHECK(contract(parse_polynomial("x2", 2, 'x'), f).is_zero());

    // associativity of the action: a . (b . f) == (a b) . f
    Polynomial a = parse_polynomial("x1*x2", 3, 'x');
    Polynomial b = parse_polynomial("x1 + x3^2", 3, 'x');
    Polynomial g = parse_polynomial("y1^3*y2^2 - 2*y1*y2*y3^3 + y3^5", 3, 'y');
    Polynomial lhs = contract(a, contract(b, g));
    Polynomial rhs = contract(a * b, g);
    CHECK(lhs.terms == rhs.terms);

    // bilinearity over addition
    Polynomial h = parse_polynomial("y2^4", 3, 'y');
    CHECK((contract(b, g) + contract(b, h)).terms == contract(b, g + h).terms);
}
