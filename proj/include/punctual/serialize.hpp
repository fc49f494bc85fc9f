#ifndef PUNCTUAL_SERIALIZE_HPP
#define PUNCTUAL_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "punctual/apolarity.hpp"
#include "punctual/hilbert.hpp"
#include "punctual/loci.hpp"
#include "punctual/monomial_ideal.hpp"
#include "punctual/polynomial.hpp"
#include "punctual/regular.hpp"
#include "punctual/tangent.hpp"

namespace punctual {

using Json = nlohmann::json;

// Rationals go out as exact strings; large values must survive the trip.
inline std::string rational_str(const Rational& q) { return to_string(q); }

inline Json hf_json(const HilbertFunction& h) { return Json(h.h); }

inline Json ideal_json(const MonomialIdeal& I) {
    Json gens = Json::array();
    for (const auto& m : I.gens) gens.push_back(monomial_to_string(m, 'x'));
    Json j{{"n", I.n}, {"gens", gens}};
    if (auto k = I.colength()) {
        j["colength"] = *k;
        j["hf"] = hf_json(I.hilbert_function());
    }
    return j;
}

inline Json series_json(const TangentSeries& s) {
    Json dims = Json::object();
    for (const auto& [d, v] : s.dims) dims[std::to_string(d)] = v;
    return Json{{"d_min", s.d_min}, {"d_max", s.d_max}, {"dims", dims}, {"k", s.k}};
}

inline Json report_json(const TangentReport& r) {
    return Json{{"series", series_json(r.series)}, {"T_nonneg", r.T_nonneg},
                {"T_pos", r.T_pos},                {"T_zero", r.T_zero},
                {"expected", r.expected},          {"D", r.D}};
}

inline Json system_json(const InverseSystem& fs) {
    Json arr = Json::array();
    for (const auto& f : fs.generators) arr.push_back(polynomial_to_string(f, 'y'));
    return Json{{"n", fs.n}, {"generators", arr}};
}

inline Json apolar_json(const ApolarReport& r) {
    return Json{{"k", r.k}, {"hf", hf_json(r.local_hf)}, {"tau", r.tau}, {"graded", r.graded}};
}

inline Json margin_json(const MarginReport& m) {
    return Json{{"label", m.label},       {"locus", m.locus}, {"expected", m.expected},
                {"margin", m.margin},     {"verdict", m.verdict()}};
}

inline Json regular_json(const RegularVerdict& v) {
    Json j{{"pass", v.pass}, {"trials_run", v.trials_run}};
    if (!v.pass) {
        Json w = Json::array();
        for (const auto& p : v.witness) {
            Json pt = Json::array();
            for (const auto& x : p) pt.push_back(rational_str(x));
            w.push_back(pt);
        }
        j["witness"] = w;
    }
    return j;
}

inline Json socle_json(const SocleReduction& s) {
    Json lam = Json::array();
    for (const auto& x : s.lambda) lam.push_back(rational_str(x));
    return Json{{"lambda", lam}, {"verification", s.verification}};
}

inline MonomialIdeal parse_monomial_ideal(const std::string& text, int n) {
    std::vector<Monomial> gens;
    for (const auto& p : parse_polynomial_list(text, n, 'x')) {
        if (p.terms.size() != 1 || p.terms.begin()->second != Rational(1))
            throw std::invalid_argument("parse_monomial_ideal: generators must be plain monomials");
        gens.push_back(p.terms.begin()->first);
    }
    return minimal_generators(n, gens);
}

inline InverseSystem parse_inverse_system(const std::string& text, int n) {
    return InverseSystem(n, parse_polynomial_list(text, n, 'y'));
}

}  // namespace punctual

#endif
