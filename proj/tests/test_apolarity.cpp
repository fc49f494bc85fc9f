#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "punctual/apolarity.hpp"
#include "punctual/golden.hpp"
#include "punctual/serialize.hpp"
#include "punctual/tangent.hpp"

using namespace punctual;

namespace {

// Degreewise dimension of the span of all contractions of the generators,
// computed directly over the dual monomial basis. Independent of the kernel
// construction used by apolar_ideal.
std::vector<long> partials_dims(const InverseSystem& fs) {
    int top = fs.max_degree();
    std::vector<long> dims(static_cast<size_t>(top) + 1, 0);
    for (int e = 0; e <= top; ++e) {
        auto cols = monomial_basis(fs.n, e);
        std::map<Monomial, size_t, GrevlexGreater> index;
        for (size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
        detail::IncrementalSpan span(cols.size());
        for (const auto& g : fs.generators) {
            int gd = g.degree();
            if (gd < e) continue;
            for (const auto& a : monomial_basis(fs.n, gd - e)) {
                Polynomial part = contract(Polynomial::monomial(a), g);
                std::vector<Rational> v(cols.size(), Rational(0));
                for (const auto& [m, c] : part.terms)
                    if (m.degree() == e) v[index.at(m)] = c;
                span.insert(std::move(v));
            }
        }
        dims[static_cast<size_t>(e)] = static_cast<long>(span.dim());
    }
    return dims;
}

}  // namespace

TEST_CASE("annihilator of a pure power is curvilinear") {
    InverseSystem fs(3, {parse_polynomial("y1^3", 3, 'y')});
    GradedIdeal I = apolar_ideal(fs);
    CHECK(I.quotient_hf == HilbertFunction({1, 1, 1, 1}));
    CHECK(I.colength() == 4);

    ApolarReport r = apolar_local_invariants(fs);
    CHECK(r.k == 4);
    CHECK(r.tau == 1);
    CHECK(r.graded);
    CHECK(r.local_hf == I.quotient_hf);
}

TEST_CASE("graded duality: quotient dimensions equal partials dimensions") {
    for (const auto& w : golden::witness_tangents()) {
        InverseSystem fs = parse_inverse_system(w.dual, 4);
        REQUIRE(fs.graded());
        GradedIdeal I = apolar_ideal(fs);
        auto dims = partials_dims(fs);
        REQUIRE(I.quotient_hf.h.size() == dims.size());
        for (size_t e = 0; e < dims.size(); ++e) CHECK(I.quotient_hf.h[e] == dims[e]);
    }
}

TEST_CASE("socle dimension consistency across modules") {
    for (const auto& w : golden::witness_tangents()) {
        InverseSystem fs = parse_inverse_system(w.dual, 4);
        ApolarReport r = apolar_local_invariants(fs);
        GradedIdeal I = apolar_ideal(fs);
        CHECK(graded_socle_dimension(I) == r.tau);
        CHECK(r.local_hf == I.quotient_hf);
        // the top graded piece consists of socle elements
        CHECK(I.quotient_hf.h.back() <= r.tau);
    }
}

TEST_CASE("witness systems have the frozen positive tangent sums") {
    for (const auto& w : golden::witness_tangents()) {
        InverseSystem fs = parse_inverse_system(w.dual, 4);
        GradedIdeal I = apolar_ideal(fs);
        TangentReport r = tangent_report(I, expected_dimension(I.n, I.colength()));
        CHECK(r.T_pos == w.t_pos);
    }
}

TEST_CASE("seeded generic cubic-plus-quadric sample in five variables") {
    InverseSystem fs = random_inverse_system({3, 2}, 5, 1);
    REQUIRE(fs.generators.size() == 2);
    CHECK(fs.generators[0].degree() == 3);
    CHECK(fs.generators[1].degree() == 2);

    ApolarReport r = apolar_local_invariants(fs);
    CHECK(r.local_hf == HilbertFunction({1, 5, 6, 1}));
    CHECK(r.k == 13);
    CHECK(r.tau == 2);

    // determinism: the same seed reproduces the sample exactly
    InverseSystem again = random_inverse_system({3, 2}, 5, 1);
    for (size_t i = 0; i < fs.generators.size(); ++i)
        CHECK(again.generators[i].terms == fs.generators[i].terms);
}

TEST_CASE("standard form sample is forced for every seed") {
    for (std::uint64_t seed : {1ull, 2ull, 17ull}) {
        ApolarReport r = apolar_local_invariants(standard_form_sample(seed));
        CHECK(r.k == 8);
        CHECK(r.local_hf == HilbertFunction({1, 3, 2, 1, 1}));
    }
}

TEST_CASE("local invariants of an inhomogeneous system") {
    // Ann(y1^2 + y1) = (x1^3) in one variable
    InverseSystem fs(1, {parse_polynomial("y1^2 + y1", 1, 'y')});
    ApolarReport r = apolar_local_invariants(fs);
    CHECK_FALSE(r.graded);
    CHECK(r.k == 3);
    CHECK(r.tau == 1);
    CHECK(r.local_hf == HilbertFunction({1, 1, 1}));
}

TEST_CASE("inverse system validation") {
    CHECK_THROWS_AS(InverseSystem(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(InverseSystem(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(InverseSystem(2, {Polynomial(2)}), std::invalid_argument);
    CHECK_THROWS_AS(InverseSystem(2, {parse_polynomial("y1", 3, 'y')}), std::invalid_argument);
}
