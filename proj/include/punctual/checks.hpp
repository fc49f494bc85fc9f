#ifndef PUNCTUAL_CHECKS_HPP
#define PUNCTUAL_CHECKS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "punctual/golden.hpp"
#include "punctual/parallel.hpp"
#include "punctual/serialize.hpp"

namespace punctual {

struct CheckResult {
    std::string name;
    bool pass = true;
    Json details = Json::object();

    void fail(const std::string& what, Json got = {}) {
        pass = false;
        Json item{{"claim", what}};
        if (!got.is_null()) item["got"] = std::move(got);
        if (!details.contains("failures")) details["failures"] = Json::array();
        details["failures"].push_back(std::move(item));
    }
};

// (x1, ..., x_{n-1}, x_n^k): the unique curvilinear monomial ideal up to
// permutation, colength k.
inline MonomialIdeal curvilinear_ideal(int n, long k) {
    std::vector<Monomial> gens;
    for (int i = 1; i < n; ++i) gens.push_back(variable(n, i));
    gens.push_back(pure_power(n, n, static_cast<int>(k)));
    return minimal_generators(n, gens);
}

// The worked-example ideal with Hilbert function (1,3,3,2,1).
inline MonomialIdeal worked_example_ideal() {
    return parse_monomial_ideal("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
}

// Monomial ideal with quotient Hilbert function (1, n, 2, ..., 2, 1, ..., 1):
// H(i) = 2 for 2 <= i <= t, H(i) = 1 for t < i <= s. Borel-fixed once the
// variable order is reversed; tangent dimensions do not see the permutation.
inline MonomialIdeal h2eq2_ideal(int n, int s, int t) {
    if (n < 2 || t < 2 || s < t) throw std::invalid_argument("h2eq2_ideal: need n >= 2, 2 <= t <= s");
    std::vector<Monomial> gens;
    gens.push_back(pure_power(n, 2, 2));
    for (int i = 3; i <= n; ++i) {
        gens.push_back(mul(variable(n, 1), variable(n, i)));
        gens.push_back(mul(variable(n, 2), variable(n, i)));
        for (int j = i; j <= n; ++j) gens.push_back(mul(variable(n, i), variable(n, j)));
    }
    gens.push_back(mul(pure_power(n, 1, t), variable(n, 2)));
    gens.push_back(pure_power(n, 1, s + 1));
    return minimal_generators(n, gens);
}

// Dual generators cutting out h2eq2_ideal: two powers plus every linear form,
// so that no linear form lands in the annihilator.
inline InverseSystem h2eq2_system(int n, int s, int t) {
    if (n < 2 || t < 2 || s < t) throw std::invalid_argument("h2eq2_system: need n >= 2, 2 <= t <= s");
    std::vector<Polynomial> gens;
    gens.push_back(Polynomial::monomial(pure_power(n, 1, s)));
    gens.push_back(Polynomial::monomial(mul(pure_power(n, 1, t - 1), variable(n, 2))));
    for (int i = 1; i <= n; ++i) gens.push_back(Polynomial::monomial(variable(n, i)));
    return InverseSystem(n, std::move(gens));
}

// Variable reversal x_i <-> x_{n+1-i}; tangent data is invariant under it.
inline MonomialIdeal mirror_ideal(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.gens) {
        Monomial m = g;
        std::reverse(m.e.begin(), m.e.end());
        gens.push_back(m);
    }
    return minimal_generators(I.n, gens);
}

// Exceptional strongly stable ideals in 3 variables: for every colength the
// tangent threshold is met exactly by the curvilinear ideal plus the frozen
// list, with the recorded Hilbert functions and defects.
inline CheckResult check_prop32(int jobs) {
    CheckResult r{"prop32"};
    Json per_k = Json::array();
    for (long k = 1; k <= 11; ++k) {
        auto ideals = enumerate_strongly_stable(3, k);
        long expected = 2 * (k - 1);
        auto reports = parallel_map<TangentReport>(ideals.size(), jobs, [&](size_t i) {
            return tangent_report(ideals[i], expected);
        });
        std::vector<size_t> hits;
        for (size_t i = 0; i < ideals.size(); ++i)
            if (reports[i].T_nonneg >= expected) hits.push_back(i);

        std::map<MonomialIdeal, std::pair<std::vector<long>, long>> want;
        want[curvilinear_ideal(3, k)] = {std::vector<long>(static_cast<size_t>(k), 1), 0};
        for (const auto& x : golden::exceptional_ideals()) {
            MonomialIdeal I = parse_monomial_ideal(x.gens, 3);
            if (*I.colength() == k) want[I] = {x.hf, x.D};
        }

        Json row{{"k", k}, {"count", hits.size()}};
        if (hits.size() != want.size()) r.fail("exceptional count at k=" + std::to_string(k), Json(hits.size()));
        for (size_t i : hits) {
            auto it = want.find(ideals[i]);
            if (it == want.end()) {
                r.fail("unexpected exceptional ideal at k=" + std::to_string(k), ideal_json(ideals[i]));
                continue;
            }
            if (ideals[i].hilbert_function().h != it->second.first)
                r.fail("Hilbert function mismatch at k=" + std::to_string(k), ideal_json(ideals[i]));
            if (reports[i].D != it->second.second)
                r.fail("defect mismatch at k=" + std::to_string(k), Json(reports[i].D));
            want.erase(it);
        }
        for (const auto& [I, meta] : want) r.fail("missing exceptional ideal at k=" + std::to_string(k), ideal_json(I));
        per_k.push_back(std::move(row));
    }
    r.details["per_k"] = std::move(per_k);
    return r;
}

// Worked example: positive tangent series 5T + 3T^2 on both backends.
inline CheckResult check_sec23() {
    CheckResult r{"sec23"};
    MonomialIdeal I = worked_example_ideal();
    long expected = expected_dimension(3, *I.colength());
    TangentReport syz = tangent_report(I, expected);
    TangentReport ker = tangent_report(graded_ideal_from_monomial(I), expected);
    if (syz.series.dims != ker.series.dims) r.fail("backend series disagree");
    if (syz.series.dims.at(1) != 5) r.fail("Hom_1", Json(syz.series.dims.at(1)));
    if (syz.series.dims.at(2) != 3) r.fail("Hom_2", Json(syz.series.dims.at(2)));
    for (int d = 3; d <= syz.series.d_max; ++d)
        if (syz.series.dims.at(d) != 0) r.fail("Hom_" + std::to_string(d) + " nonzero");
    if (syz.T_pos != 8) r.fail("T_pos", Json(syz.T_pos));
    r.details["syzygy"] = report_json(syz);
    r.details["kernel"] = report_json(ker);
    return r;
}

namespace detail {

// One grid case of the H(2)=2 family: closed-form series against the kernel
// backend, plus the sharp total. The closed form carries no terms above
// degree s-2; with t = s its lone extra term has negative exponent and
// drops, which lowers the total by exactly one.
inline void check_h2eq2_case(CheckResult& r, int n, int s, int t) {
    std::string where = " at (n,s,t)=(" + std::to_string(n) + "," + std::to_string(s) + "," +
                        std::to_string(t) + ")";
    MonomialIdeal I = h2eq2_ideal(n, s, t);
    long k = h2eq2_colength(n, s, t);
    if (*I.colength() != k) r.fail("colength" + where, Json(*I.colength()));
    if (!is_strongly_stable(mirror_ideal(I))) r.fail("not Borel-fixed after mirroring" + where);
    GradedIdeal G = graded_ideal_from_monomial(I);
    HomKernelBackend backend(G);
    std::vector<long> formula = h2eq2_tangent_series(n, s, t);
    long total = 0;
    for (int d = 0; d <= s; ++d) {
        long got = backend.dim(d);
        long want = d < static_cast<int>(formula.size()) ? formula[static_cast<size_t>(d)] : 0;
        if (got != want)
            r.fail("series coefficient at T^" + std::to_string(d) + where,
                   Json{{"got", got}, {"formula", want}});
        total += got;
    }
    long want_total = (k - 1) * (n - 1) - (t < s ? 1 : 2);
    if (total != want_total) r.fail("tangent total" + where, Json{{"got", total}, {"want", want_total}});
}

}  // namespace detail

// Closed-form tangent series of the H(2)=2 family against the kernel backend
// over the full grid, plus one apolarity round trip.
inline CheckResult check_lemma53(int jobs) {
    CheckResult r{"lemma53"};
    std::vector<std::array<int, 3>> cases;
    for (int n = 2; n <= 5; ++n)
        for (int s = 2; s <= 6; ++s)
            for (int t = 2; t <= s; ++t) cases.push_back({n, s, t});
    auto results = parallel_map<CheckResult>(cases.size(), jobs, [&](size_t i) {
        CheckResult c{"case"};
        detail::check_h2eq2_case(c, cases[i][0], cases[i][1], cases[i][2]);
        return c;
    });
    long checked = 0;
    for (const auto& c : results) {
        ++checked;
        if (!c.pass) {
            r.pass = false;
            for (const auto& f : c.details["failures"]) r.details["failures"].push_back(f);
        }
    }
    // The dual construction must cut out the same graded ideal.
    GradedIdeal from_dual = apolar_ideal(h2eq2_system(3, 3, 2));
    GradedIdeal from_monomial = graded_ideal_from_monomial(h2eq2_ideal(3, 3, 2));
    if (from_dual.quotient_hf != from_monomial.quotient_hf) r.fail("dual construction Hilbert function");
    for (const auto& g : h2eq2_ideal(3, 3, 2).gens) {
        auto nf = from_dual.reduce_monomial(g);
        bool zero = std::all_of(nf.begin(), nf.end(), [](const Rational& x) { return x == 0; });
        if (!zero) r.fail("dual construction misses generator " + monomial_to_string(g));
    }
    r.details["cases"] = checked;
    return r;
}

// Every O-sequence with H(3) = 1 and mass at most 12 is negligible.
inline CheckResult check_cor44() {
    CheckResult r{"cor44"};
    auto reports = check_h3eq1_negligible(12);
    for (const auto& m : reports)
        if (m.violating) r.fail("violating stratum", margin_json(m));
    r.details["strata"] = reports.size();
    return r;
}

// Counterexample margins for tau >= 3, tau = 1 (cubics), tau = 2, plus the
// seeded dual samples: generic {cubic, quadric} in five variables and the
// three-variable standard form.
inline CheckResult check_examples5x(std::uint64_t seed) {
    CheckResult r{"examples5x"};

    MarginReport m3 = counterexample_margin(CounterexampleKind::tau_geq_3, 5);
    if (m3.margin != 4 || !m3.violating) r.fail("tau>=3 margin at n=5", margin_json(m3));
    for (int n = 5; n <= 20; ++n)
        if (!counterexample_margin(CounterexampleKind::tau_geq_3, n).violating)
            r.fail("tau>=3 margin not positive at n=" + std::to_string(n));

    for (int n = 3; n <= 20; ++n) {
        MarginReport m1 = counterexample_margin(CounterexampleKind::tau_1, n);
        long cubic = static_cast<long>(n) * (n - 1) * (n - 5) / 6;
        if (m1.margin != cubic)
            r.fail("tau=1 margin formula at n=" + std::to_string(n),
                   Json{{"got", m1.margin}, {"want", cubic}});
    }
    if (counterexample_margin(CounterexampleKind::tau_1, 5).margin != 0) r.fail("tau=1 margin at n=5");
    if (counterexample_margin(CounterexampleKind::tau_1, 6).margin != 5) r.fail("tau=1 margin at n=6");

    MarginReport m2 = counterexample_margin(CounterexampleKind::tau_2, 5);
    if (m2.locus != 52 || m2.expected != 48 || m2.margin != 4) r.fail("tau=2 margin at n=5", margin_json(m2));
    if (h3eq1_bound(HilbertFunction({1, 5, 6, 1}), 5) != 52) r.fail("tau=2 locus bound");
    if (fiber_dim(5, 6, 1) != 9) r.fail("tau=2 fiber dimension");

    ApolarReport generic = apolar_local_invariants(random_inverse_system({3, 2}, 5, seed));
    if (generic.local_hf != HilbertFunction({1, 5, 6, 1}))
        r.fail("generic {cubic, quadric} Hilbert function", apolar_json(generic));
    if (generic.tau != 2) r.fail("generic {cubic, quadric} tau", Json(generic.tau));

    ApolarReport standard = apolar_local_invariants(standard_form_sample(seed));
    if (standard.local_hf != HilbertFunction({1, 3, 2, 1, 1}))
        r.fail("standard form Hilbert function", apolar_json(standard));
    if (standard.k != 8) r.fail("standard form colength", Json(standard.k));

    r.details["generic"] = apolar_json(generic);
    r.details["standard_form"] = apolar_json(standard);
    return r;
}

// Positive tangent sums of the four witness inverse systems.
inline CheckResult check_prop56() {
    CheckResult r{"prop56"};
    Json rows = Json::array();
    for (const auto& w : golden::witness_tangents()) {
        InverseSystem fs = parse_inverse_system(w.dual, 4);
        GradedIdeal G = apolar_ideal(fs);
        HomKernelBackend backend(G);
        long t_pos = 0;
        for (int d = 1; d <= G.s; ++d) t_pos += backend.dim(d);
        rows.push_back(Json{{"dual", w.dual}, {"T_pos", t_pos}, {"want", w.t_pos}});
        if (t_pos != w.t_pos) r.fail(std::string("T_pos of ") + w.dual, Json(t_pos));
    }
    r.details["witnesses"] = std::move(rows);
    return r;
}

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"prop32",    "sec23",      "lemma53",
                                                "cor44",     "examples5x", "prop56"};
    return names;
}

// Dispatch by registered name; seed only feeds the randomized checks.
inline CheckResult run_check(const std::string& name, int jobs, std::uint64_t seed) {
    if (name == "prop32") return check_prop32(jobs);
    if (name == "sec23") return check_sec23();
    if (name == "lemma53") return check_lemma53(jobs);
    if (name == "cor44") return check_cor44();
    if (name == "examples5x") return check_examples5x(seed);
    if (name == "prop56") return check_prop56();
    throw std::invalid_argument("unknown check: " + name);
}

}  // namespace punctual

#endif
