#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "punctual/checks.hpp"
#include "punctual/graded_ideal.hpp"
#include "punctual/monomial_ideal.hpp"
#include "punctual/tangent.hpp"

using namespace punctual;

namespace {

// Independent socle oracle: staircase monomials sent into the ideal by every
// variable.
long socle_by_staircase(const MonomialIdeal& I) {
    long count = 0;
    for (const auto& m : I.staircase()) {
        bool socle = true;
        for (int i = 1; i <= I.n && socle; ++i)
            if (!I.contains(mul(m, variable(I.n, i)))) socle = false;
        if (socle) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("worked example series, both backends") {
    MonomialIdeal I = worked_example_ideal();
    long expected = expected_dimension(3, 10);
    TangentReport syz = tangent_report(I, expected);

    CHECK(syz.series.k == 10);
    CHECK(syz.series.dims.at(1) == 5);
    CHECK(syz.series.dims.at(2) == 3);
    for (int d = 3; d <= syz.series.d_max; ++d) CHECK(syz.series.dims.at(d) == 0);
    CHECK(syz.T_pos == 8);
    CHECK(syz.T_nonneg == 16);
    CHECK(syz.T_zero == 8);
    CHECK(syz.expected == 18);
    CHECK(syz.D == -2);

    TangentReport ker = tangent_report(graded_ideal_from_monomial(I), expected);
    CHECK(ker.series.dims == syz.series.dims);
    CHECK(ker.T_nonneg == syz.T_nonneg);
    CHECK(ker.D == syz.D);
}

TEST_CASE("curvilinear quotients meet the expected dimension exactly") {
    for (int n = 2; n <= 4; ++n)
        for (long k = 2; k <= 9; ++k) {
            TangentReport r = tangent_report(curvilinear_ideal(n, k), expected_dimension(n, k));
            CHECK(r.T_nonneg == (n - 1) * (k - 1));
            CHECK(r.D == 0);
        }
}

TEST_CASE("series bookkeeping identities") {
    MonomialIdeal I = worked_example_ideal();
    TangentReport r = tangent_report(I, 18);
    CHECK(r.series.t_nonneg() == r.series.t_zero() + r.series.t_pos());
    CHECK(r.T_nonneg == r.T_zero + r.T_pos);
    CHECK(r.D == r.T_nonneg - r.expected);
    long total = 0;
    for (const auto& [d, v] : r.series.dims) {
        CHECK(v >= 0);
        total += v;
    }
    CHECK(total == r.series.total());
}

TEST_CASE("syzygy and kernel backends agree on every small staircase") {
    for (int n = 2; n <= 3; ++n)
        for (long k = 1; k <= 6; ++k)
            for (const auto& I : enumerate_monomial_ideals(n, k)) {
                GradedIdeal G = graded_ideal_from_monomial(I);
                HomKernelBackend backend(G);
                int s = I.hilbert_function().socle_degree();
                for (int d = -(s + 1); d <= s; ++d) {
                    INFO("n=" << n << " k=" << k << " d=" << d);
                    CHECK(hom_dim_syzygy(I, d) == backend.dim(d));
                }
            }
    // a larger spot in four variables
    for (const auto& I : enumerate_monomial_ideals(4, 5)) {
        GradedIdeal G = graded_ideal_from_monomial(I);
        HomKernelBackend backend(G);
        int s = I.hilbert_function().socle_degree();
        for (int d = -(s + 1); d <= s; ++d) CHECK(hom_dim_syzygy(I, d) == backend.dim(d));
    }
}

TEST_CASE("graded socle dimension matches the staircase oracle") {
    for (long k = 1; k <= 6; ++k)
        for (const auto& I : enumerate_monomial_ideals(3, k)) {
            long want = socle_by_staircase(I);
            CHECK(graded_socle_dimension(I) == want);
            CHECK(graded_socle_dimension(graded_ideal_from_monomial(I)) == want);
        }
}

TEST_CASE("tangent report on a graded ideal from polynomial generators") {
    // (x1^2 - x2^2, x1 x2) cuts out a length-4 scheme with HF (1,2,1)
    auto gens = parse_polynomial_list("x1^2 - x2^2, x1*x2", 2, 'x');
    GradedIdeal G = graded_ideal_from_generators(gens, 2);
    CHECK(G.quotient_hf == HilbertFunction({1, 2, 1}));
    CHECK(G.colength() == 4);
    TangentReport r = tangent_report(G, expected_dimension(2, 4));
    CHECK(r.T_nonneg >= r.T_pos);
    CHECK(r.series.k == 4);
}
