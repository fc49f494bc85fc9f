#ifndef PUNCTUAL_CLI_HPP
#define PUNCTUAL_CLI_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "punctual/cache.hpp"
#include "punctual/checks.hpp"
#include "punctual/errors.hpp"
#include "punctual/version.hpp"

namespace punctual::cli {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

// A computed value contradicting a frozen claim or a cached entry.
struct ClaimMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "ascii-table";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int jobs = default_jobs();
    std::string cache_dir = ".punctual-cache";
    long cap = 10'000'000;
};

namespace detail {

inline std::vector<long> split_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(std::stol(piece));
    }
    return out;
}

inline std::vector<Rational> split_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        size_t a = piece.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = piece.find_last_not_of(" \t");
        out.push_back(Rational(piece.substr(a, b - a + 1)));
    }
    return out;
}

}  // namespace detail

inline void emit_json(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// Flat key/value rendering for the non-table commands; nested values are
// emitted as compact JSON so every format stays machine-splittable.
inline void emit_report(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "json") {
        emit_json(j, out);
        return;
    }
    for (const auto& [key, value] : j.items()) {
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        if (format == "csv")
            out << key << "," << text << "\n";
        else
            out << key << ": " << text << "\n";
    }
}

struct Table {
    std::string id;
    std::vector<std::string> col_labels;
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
};

inline void emit_table(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& [label, cells] : t.rows) rows.push_back(Json{{"label", label}, {"cells", cells}});
        emit_json(Json{{"table", t.id}, {"columns", t.col_labels}, {"rows", rows}}, out);
        return;
    }
    if (format == "csv") {
        out << "row";
        for (const auto& c : t.col_labels) out << "," << c;
        out << "\n";
        for (const auto& [label, cells] : t.rows) {
            out << label;
            for (const auto& c : cells) out << "," << c;
            out << "\n";
        }
        return;
    }
    std::vector<size_t> width(t.col_labels.size() + 1, 0);
    width[0] = t.id.size();
    for (const auto& [label, cells] : t.rows) width[0] = std::max(width[0], label.size());
    for (size_t c = 0; c < t.col_labels.size(); ++c) {
        width[c + 1] = t.col_labels[c].size();
        for (const auto& [label, cells] : t.rows)
            if (c < cells.size()) width[c + 1] = std::max(width[c + 1], cells[c].size());
    }
    auto pad = [&](const std::string& s, size_t w) {
        out << s << std::string(w - s.size() + 2, ' ');
    };
    pad(t.id, width[0]);
    for (size_t c = 0; c < t.col_labels.size(); ++c) pad(t.col_labels[c], width[c + 1]);
    out << "\n";
    for (const auto& [label, cells] : t.rows) {
        pad(label, width[0]);
        for (size_t c = 0; c < cells.size(); ++c) pad(cells[c], width[c + 1]);
        out << "\n";
    }
}

// One table cell, recomputed from scratch.
inline long compute_cell(const std::string& row, long k, long cap, int jobs) {
    if (row == "oseq") return static_cast<long>(enumerate_o_sequences(k).size());
    if (row == "monomial_n3")
        return static_cast<long>(enumerate_monomial_ideals(3, k, static_cast<size_t>(cap)).size());
    if (row == "borel_n3") return static_cast<long>(enumerate_strongly_stable(3, k).size());
    if (row == "borel_nk")
        return static_cast<long>(enumerate_strongly_stable(static_cast<int>(k), k).size());
    if (row == "threshold_n3" || row == "threshold_nk") {
        int n = row == "threshold_n3" ? 3 : static_cast<int>(k);
        auto ideals = enumerate_strongly_stable(n, k);
        long expected = static_cast<long>(n - 1) * (k - 1);
        auto flags = parallel_map<char>(ideals.size(), jobs, [&](size_t i) {
            return tangent_report(ideals[i], expected).T_nonneg >= expected ? char(1) : char(0);
        });
        return static_cast<long>(std::count(flags.begin(), flags.end(), char(1)));
    }
    throw std::invalid_argument("unknown table row: " + row);
}

// Cache-aware cell lookup. A deterministic sample of hits (plus the first
// hit of every run) is recomputed and compared, so a poisoned cache cannot
// silently satisfy the diff.
inline long cell_value(const std::string& row, long k, const Options& opt, const Cache& cache,
                       bool& spot_done) {
    Json args{{"row", row}, {"k", k}};
    if (row == "monomial_n3") args["cap"] = opt.cap;
    if (auto hit = cache.get("tables", "cell", args)) {
        bool pick = punctual::detail::fnv1a(args.dump()) % 8 == 0;
        if (pick || !spot_done) {
            spot_done = true;
            long fresh = compute_cell(row, k, opt.cap, opt.jobs);
            if (fresh != hit->get<long>())
                throw ClaimMismatch("cache entry " + args.dump() + " disagrees with fresh computation");
            return fresh;
        }
        return hit->get<long>();
    }
    long v = compute_cell(row, k, opt.cap, opt.jobs);
    cache.put("tables", "cell", args, v);
    return v;
}

inline int cmd_tables(const std::string& which, const Options& opt, std::ostream& out) {
    if (which == "prop32_exceptions") {
        CheckResult pr = check_prop32(opt.jobs);
        Table t;
        t.id = which;
        t.col_labels = {"generators", "hf", "D"};
        long idx = 0;
        t.rows.emplace_back("(every k)",
                            std::vector<std::string>{"x1, x2, x3^k", "(1,...,1)", "0"});
        for (const auto& x : golden::exceptional_ideals()) {
            HilbertFunction hf(x.hf);
            t.rows.emplace_back(std::to_string(++idx),
                                std::vector<std::string>{x.gens, hf.str(), std::to_string(x.D)});
        }
        emit_table(t, opt.format, out);
        if (opt.format == "json")
            emit_json(Json{{"match", pr.pass}, {"details", pr.details}}, out);
        else
            out << "diff: " << (pr.pass ? "clean" : pr.details["failures"].dump()) << "\n";
        return pr.pass ? kOk : kMismatch;
    }

    std::vector<std::pair<std::string, std::string>> row_ids;  // label, row id
    std::vector<const std::vector<long>*> reference;
    if (which == "o_sequences") {
        row_ids = {{"o-sequences", "oseq"}};
        reference = {&golden::o_sequence_counts()};
    } else if (which == "n3_counts") {
        row_ids = {{"monomial ideals", "monomial_n3"},
                   {"strongly stable", "borel_n3"},
                   {"tangent threshold", "threshold_n3"}};
        reference = {&golden::monomial_counts_n3(), &golden::borel_counts_n3(),
                     &golden::threshold_counts_n3()};
    } else if (which == "nk_counts") {
        row_ids = {{"strongly stable", "borel_nk"}, {"tangent threshold", "threshold_nk"}};
        reference = {&golden::borel_counts_nk(), &golden::threshold_counts_nk()};
    } else {
        throw std::invalid_argument("unknown table id: " + which);
    }

    Cache cache = opt.cache_dir.empty() ? Cache() : Cache(opt.cache_dir);
    bool spot_done = false;
    Table t;
    t.id = which;
    for (long k = 1; k <= 11; ++k) t.col_labels.push_back(std::to_string(k));
    Json diff = Json::array();
    for (size_t r = 0; r < row_ids.size(); ++r) {
        std::vector<std::string> cells;
        for (long k = 1; k <= 11; ++k) {
            long v = cell_value(row_ids[r].second, k, opt, cache, spot_done);
            cells.push_back(std::to_string(v));
            long want = (*reference[r])[static_cast<size_t>(k - 1)];
            if (v != want)
                diff.push_back(Json{{"row", row_ids[r].first}, {"k", k}, {"computed", v}, {"reference", want}});
        }
        t.rows.emplace_back(row_ids[r].first, std::move(cells));
    }
    emit_table(t, opt.format, out);
    if (opt.format == "json")
        emit_json(Json{{"match", diff.empty()}, {"diff", diff}}, out);
    else if (diff.empty())
        out << "diff: clean\n";
    else
        for (const auto& d : diff)
            out << "diff: " << d["row"].get<std::string>() << " k=" << d["k"] << " computed "
                << d["computed"] << " reference " << d["reference"] << "\n";
    return diff.empty() ? kOk : kMismatch;
}

inline int cmd_verify(const std::string& name, const Options& opt, std::ostream& out,
                      std::ostream& err) {
    std::vector<std::string> selected;
    if (name == "all")
        selected = check_names();
    else
        selected.push_back(name);
    bool randomized = std::find(selected.begin(), selected.end(), "examples5x") != selected.end();
    if (randomized && !opt.seed_given) {
        err << "verify: examples5x is randomized; --seed is required\n";
        return kUsage;
    }
    Json results = Json::array();
    bool all_pass = true;
    for (const auto& c : selected) {
        CheckResult r = run_check(c, opt.jobs, opt.seed);
        all_pass = all_pass && r.pass;
        results.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"details", r.details}});
    }
    if (opt.format == "json") {
        emit_json(Json{{"results", results}, {"pass", all_pass}}, out);
    } else {
        for (const auto& r : results) {
            out << r["check"].get<std::string>() << ": " << (r["pass"].get<bool>() ? "PASS" : "FAIL")
                << "\n";
            if (!r["pass"].get<bool>()) out << "  " << r["details"].dump() << "\n";
        }
    }
    return all_pass ? kOk : kMismatch;
}

inline int cmd_enumerate(int n, long k, bool strongly_stable, bool count_only, const Options& opt,
                         std::ostream& out) {
    std::vector<MonomialIdeal> ideals =
        strongly_stable ? enumerate_strongly_stable(n, k)
                        : enumerate_monomial_ideals(n, k, static_cast<size_t>(opt.cap));
    if (opt.format == "json") {
        Json j{{"n", n}, {"k", k}, {"strongly_stable", strongly_stable}, {"count", ideals.size()}};
        if (!count_only) {
            Json arr = Json::array();
            for (const auto& I : ideals) arr.push_back(ideal_json(I));
            j["ideals"] = arr;
        }
        emit_json(j, out);
        return kOk;
    }
    if (!count_only) {
        for (const auto& I : ideals) {
            std::string gens;
            for (size_t i = 0; i < I.gens.size(); ++i) {
                if (i) gens += ", ";
                gens += monomial_to_string(I.gens[i]);
            }
            if (opt.format == "csv")
                out << "\"" << gens << "\"," << I.hilbert_function().str() << "\n";
            else
                out << gens << "  |  " << I.hilbert_function().str() << "\n";
        }
    }
    out << (opt.format == "csv" ? "count," : "count: ") << ideals.size() << "\n";
    return kOk;
}

inline int cmd_tangent(const std::string& ideal_text, const std::string& dual_text, int n,
                       bool has_expected, long expected, const std::string& backend,
                       const Options& opt, std::ostream& out) {
    if (ideal_text.empty() == dual_text.empty())
        throw std::invalid_argument("tangent: give exactly one of --ideal or --dual");
    if (n < 1) throw std::invalid_argument("tangent: --n is required");
    Json j;
    TangentReport rep;
    if (!ideal_text.empty()) {
        MonomialIdeal I = parse_monomial_ideal(ideal_text, n);
        if (!I.finite_colength())
            throw std::invalid_argument("tangent: ideal must have finite colength");
        long e = has_expected ? expected : expected_dimension(n, *I.colength());
        if (backend == "syzygy") {
            rep = tangent_report(I, e);
        } else if (backend == "kernel") {
            rep = tangent_report(graded_ideal_from_monomial(I), e);
        } else {
            rep = tangent_report(I, e);
            TangentReport ker = tangent_report(graded_ideal_from_monomial(I), e);
            if (rep.series.dims != ker.series.dims)
                throw ClaimMismatch("tangent backends disagree on " + ideal_text);
        }
        j["ideal"] = ideal_json(I);
    } else {
        if (backend == "syzygy")
            throw std::invalid_argument("tangent: the syzygy backend needs a monomial ideal");
        InverseSystem fs = parse_inverse_system(dual_text, n);
        if (!fs.graded())
            throw std::invalid_argument("tangent: inhomogeneous system; use apolar for local invariants");
        GradedIdeal G = apolar_ideal(fs);
        long e = has_expected ? expected : expected_dimension(n, G.colength());
        rep = tangent_report(G, e);
        j["system"] = system_json(fs);
    }
    j["backend"] = backend;
    j.update(report_json(rep));
    emit_report(j, opt.format, out);
    return kOk;
}

inline int cmd_apolar(const std::string& dual_text, const std::string& random_shape,
                      bool standard_form, int n, const Options& opt, std::ostream& out,
                      std::ostream& err) {
    int sources = (!dual_text.empty()) + (!random_shape.empty()) + standard_form;
    if (sources != 1)
        throw std::invalid_argument("apolar: give exactly one of --dual, --random, --standard-form");
    if ((!random_shape.empty() || standard_form) && !opt.seed_given) {
        err << "apolar: sampling requires --seed\n";
        return kUsage;
    }
    InverseSystem fs = [&] {
        if (!dual_text.empty()) {
            if (n < 1) throw std::invalid_argument("apolar: --n is required with --dual");
            return parse_inverse_system(dual_text, n);
        }
        if (standard_form) return standard_form_sample(opt.seed);
        if (n < 1) throw std::invalid_argument("apolar: --n is required with --random");
        std::vector<int> shape;
        for (long d : detail::split_longs(random_shape)) shape.push_back(static_cast<int>(d));
        return random_inverse_system(shape, n, opt.seed);
    }();
    ApolarReport rep = apolar_local_invariants(fs);
    Json j{{"system", system_json(fs)}};
    j.update(apolar_json(rep));
    if (fs.graded()) {
        GradedIdeal G = apolar_ideal(fs);
        j["socle_dim"] = graded_socle_dimension(G);
        Json gens = Json::array();
        for (const auto& g : G.gens) gens.push_back(polynomial_to_string(g));
        j["apolar_ideal"] = Json{{"n", G.n}, {"gens", gens}};
    }
    emit_report(j, opt.format, out);
    return kOk;
}

inline int cmd_oseq(long k, const std::string& min_text, const std::string& max_text,
                    bool has_h1, long exact_h1, const Options& opt, std::ostream& out) {
    HFConstraints c;
    if (has_h1) c.exact_h1 = exact_h1;
    if (!min_text.empty()) {
        c.min_at = {0};
        for (long v : detail::split_longs(min_text)) c.min_at.push_back(v);
    }
    if (!max_text.empty()) {
        c.max_at = {1};
        for (long v : detail::split_longs(max_text)) c.max_at.push_back(v);
    }
    auto seqs = enumerate_o_sequences(k, c);
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& h : seqs) arr.push_back(hf_json(h));
        emit_json(Json{{"k", k}, {"count", seqs.size()}, {"sequences", arr}}, out);
        return kOk;
    }
    for (const auto& h : seqs) out << h.str() << "\n";
    out << (opt.format == "csv" ? "count," : "count: ") << seqs.size() << "\n";
    return kOk;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return seed + 0x9e3779b97f4a7c15ull * (salt + 1);
}

inline int cmd_regular_check(int n, long k, long map_k, long tau, long trials, long project,
                             const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.seed_given) {
        err << "regular: the sampled check requires --seed\n";
        return kUsage;
    }
    // map_k controls the map's degree range independently of the tuple size k,
    // so undersized maps can be probed for failure witnesses.
    BlockMap F = tau_power(monomial_regular_map(n, map_k > 0 ? map_k : k), tau);
    Json j{{"n", n},          {"k", k},
           {"map_k", map_k > 0 ? map_k : k},
           {"tau", tau},      {"trials", trials},
           {"N", F.base.N()}, {"ambient", F.ambient()}};
    RegularVerdict v;
    if (project > 0) {
        long draws = 0;
        for (; draws < 5; ++draws) {
            QMatrix P = random_projection(static_cast<size_t>(project), F.ambient(),
                                          mix_seed(opt.seed, static_cast<std::uint64_t>(draws)));
            v = check_k_regular(F, k, trials, opt.seed, P);
            if (v.pass) break;
        }
        j["projection"] = project;
        j["projection_draws"] = std::min(draws + 1, 5L);
    } else {
        v = check_k_regular(F, k, trials, opt.seed);
    }
    j.update(regular_json(v));
    emit_report(j, opt.format, out);
    return v.pass ? kOk : kMismatch;
}

inline int cmd_regular_jet(int n, long k, const std::string& curve, const std::string& at,
                           long order, const Options& opt, std::ostream& out) {
    // Curve components use the parameter t; rewrite to the x-alphabet the
    // parser knows.
    std::string rewritten;
    for (char c : curve) {
        if (c == 't')
            rewritten += "x1";
        else
            rewritten += c;
    }
    std::vector<Polynomial> gamma = parse_polynomial_list(rewritten, 1, 'x');
    PolyMap f = monomial_regular_map(n, k);
    long rows = order > 0 ? order : k;
    long span = curvilinear_span_dim(f, gamma, Rational(at), rows);
    emit_report(Json{{"n", n}, {"k", k}, {"jet_order", rows}, {"span_dim", span}}, opt.format, out);
    return kOk;
}

inline int cmd_regular_socle(const std::string& alpha_text, const std::string& beta_text,
                             const Options& opt, std::ostream& out) {
    SocleReduction s =
        socle_reduction_example(detail::split_rationals(alpha_text), detail::split_rationals(beta_text));
    emit_report(socle_json(s), opt.format, out);
    return s.verification ? kOk : kMismatch;
}

inline int cmd_cache(const std::string& action, const Options& opt, std::ostream& out) {
    if (opt.cache_dir.empty()) throw std::invalid_argument("cache: --cache-dir is empty");
    Cache cache(opt.cache_dir);
    if (action == "status") {
        auto entries = cache.entries();
        long current = 0, stale = 0;
        for (const auto& e : entries) (e.current_version ? current : stale)++;
        emit_report(Json{{"dir", cache.dir()}, {"entries", current}, {"stale", stale}}, opt.format, out);
        return kOk;
    }
    if (action == "clear") {
        emit_report(Json{{"removed", cache.clear()}}, opt.format, out);
        return kOk;
    }
    // rebuild: recompute every current entry from its stored key and diff.
    long checked = 0, diffs = 0, skipped = 0;
    for (const auto& e : cache.entries()) {
        if (!e.current_version || e.module != "tables" || e.op != "cell") {
            ++skipped;
            continue;
        }
        long cap = e.args.contains("cap") ? e.args["cap"].get<long>() : opt.cap;
        long fresh = compute_cell(e.args["row"].get<std::string>(), e.args["k"].get<long>(), cap,
                                  opt.jobs);
        ++checked;
        if (fresh != e.value.get<long>()) ++diffs;
        cache.put(e.module, e.op, e.args, fresh);
    }
    emit_report(Json{{"checked", checked}, {"diffs", diffs}, {"skipped", skipped}}, opt.format, out);
    return diffs == 0 ? kOk : kMismatch;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of punctual Hilbert schemes and k-regular maps", "punctual"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options opt;
    auto* seed_opt = app.add_option("--seed", opt.seed, "seed for randomized subcommands");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "ascii-table"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--cache-dir", opt.cache_dir, "cache directory; empty string disables caching")
        ->capture_default_str();
    app.add_option("--cap", opt.cap, "enumeration node cap")->check(CLI::PositiveNumber)->capture_default_str();

    std::string table_id;
    auto* c_tables = app.add_subcommand("tables", "recompute a frozen table and diff it");
    c_tables->fallthrough();
    c_tables->add_option("--id", table_id, "table id")
        ->required()
        ->check(CLI::IsMember({"o_sequences", "n3_counts", "nk_counts", "prop32_exceptions"}));

    std::string check_name;
    auto* c_verify = app.add_subcommand("verify", "run a named claim verification");
    c_verify->fallthrough();
    {
        std::vector<std::string> allowed = check_names();
        allowed.push_back("all");
        c_verify->add_option("check", check_name, "check name")->required()->check(CLI::IsMember(allowed));
    }

    int en_n = 0;
    long en_k = 0;
    bool en_ss = false, en_count = false;
    auto* c_enum = app.add_subcommand("enumerate", "list monomial ideals of a given colength");
    c_enum->fallthrough();
    c_enum->add_option("--n", en_n, "number of variables")->required()->check(CLI::PositiveNumber);
    c_enum->add_option("--k", en_k, "colength")->required()->check(CLI::PositiveNumber);
    c_enum->add_flag("--strongly-stable", en_ss, "restrict to strongly stable ideals");
    c_enum->add_flag("--count", en_count, "print only the count");

    std::string tg_ideal, tg_dual, tg_backend = "both";
    int tg_n = 0;
    long tg_expected = 0;
    auto* c_tangent = app.add_subcommand("tangent", "graded tangent series of a finite quotient");
    c_tangent->fallthrough();
    c_tangent->add_option("--ideal", tg_ideal, "monomial generators, e.g. \"x1^2, x1*x2\"");
    c_tangent->add_option("--dual", tg_dual, "inverse system, e.g. \"y1^4, y2^3\"");
    c_tangent->add_option("--n", tg_n, "number of variables")->required();
    auto* tg_exp_opt = c_tangent->add_option("--expected", tg_expected, "expected dimension for the defect");
    c_tangent->add_option("--backend", tg_backend, "tangent backend")
        ->check(CLI::IsMember({"syzygy", "kernel", "both"}))
        ->capture_default_str();

    std::string ap_dual, ap_random;
    bool ap_standard = false;
    int ap_n = 0;
    auto* c_apolar = app.add_subcommand("apolar", "invariants of an apolar algebra");
    c_apolar->fallthrough();
    c_apolar->add_option("--dual", ap_dual, "inverse system generators");
    c_apolar->add_option("--random", ap_random, "sample a random system with these degrees, e.g. \"3,2\"");
    c_apolar->add_flag("--standard-form", ap_standard, "sample the three-variable standard form");
    c_apolar->add_option("--n", ap_n, "number of variables");

    long os_k = 0, os_h1 = 0;
    std::string os_min, os_max;
    auto* c_oseq = app.add_subcommand("oseq", "enumerate O-sequences of total mass k");
    c_oseq->fallthrough();
    c_oseq->add_option("--k", os_k, "total mass")->required()->check(CLI::PositiveNumber);
    c_oseq->add_option("--min", os_min, "lower bounds from degree 1, e.g. \"4,3,2\"");
    c_oseq->add_option("--max", os_max, "upper bounds from degree 1");
    auto* os_h1_opt = c_oseq->add_option("--h1", os_h1, "exact H(1)");

    auto* c_bounds = app.add_subcommand("bounds", "dimension formulas and counterexample margins");
    c_bounds->fallthrough();
    c_bounds->require_subcommand(1);
    int b_n = 0, b_s = 0, b_t = 0;
    long b_b = 0, b_a = 0, b_tau = 0, b_k = 0, b_cap = 12, b_t0 = 0, b_tpos = 0;
    long b_base = 0, b_fiber = 0;
    std::string b_hf, b_kind;
    auto* cb_gor = c_bounds->add_subcommand("gorenstein", "dimension of the socle-degree-s Gorenstein locus");
    cb_gor->fallthrough();
    cb_gor->add_option("--n", b_n)->required();
    cb_gor->add_option("--b", b_b)->required();
    cb_gor->add_option("--s", b_s)->required();
    auto* cb_h3 = c_bounds->add_subcommand("h3eq1", "stratum bound for H = (1,n,b,1,...,1)");
    cb_h3->fallthrough();
    cb_h3->add_option("--hf", b_hf, "Hilbert function, e.g. \"1,5,6,1\"")->required();
    cb_h3->add_option("--n", b_n)->required();
    auto* cb_scan = c_bounds->add_subcommand("h3eq1-scan", "scan all H(3)=1 strata up to a mass cap");
    cb_scan->fallthrough();
    cb_scan->add_option("--sum-cap", b_cap)->capture_default_str();
    auto* cb_h2 = c_bounds->add_subcommand("h2eq2", "closed-form tangent series of the H(2)=2 family");
    cb_h2->fallthrough();
    cb_h2->add_option("--n", b_n)->required();
    cb_h2->add_option("--s", b_s)->required();
    cb_h2->add_option("--t", b_t)->required();
    auto* cb_fiber = c_bounds->add_subcommand("fiber", "mapping-fiber dimension (n, a, b)");
    cb_fiber->fallthrough();
    cb_fiber->add_option("--n", b_n)->required();
    cb_fiber->add_option("--a", b_a)->required();
    cb_fiber->add_option("--b", b_b)->required();
    auto* cb_nb = c_bounds->add_subcommand("nbound", "ambient dimension bound N(tau, k, n)");
    cb_nb->fallthrough();
    cb_nb->add_option("--tau", b_tau)->required();
    cb_nb->add_option("--k", b_k)->required();
    cb_nb->add_option("--n", b_n)->required();
    auto* cb_margin = c_bounds->add_subcommand("margin", "counterexample margin for a socle type");
    cb_margin->fallthrough();
    cb_margin->add_option("--kind", b_kind)->required()->check(CLI::IsMember({"tau1", "tau2", "tau3"}));
    cb_margin->add_option("--n", b_n)->required();
    auto* cb_est = c_bounds->add_subcommand("estimate", "best locus dimension estimate");
    cb_est->fallthrough();
    cb_est->add_option("--t0", b_t0)->required();
    cb_est->add_option("--tpos", b_tpos)->required();
    auto* cb_est_base = cb_est->add_option("--base", b_base);
    auto* cb_est_fiber = cb_est->add_option("--fiber", b_fiber);

    int rg_n = 0;
    long rg_k = 0, rg_map_k = 0, rg_tau = 1, rg_trials = 100, rg_project = 0, rg_order = 0;
    std::string rg_curve, rg_at = "0", rg_alpha, rg_beta;
    auto* c_regular = app.add_subcommand("regular", "sampled k-regularity of the monomial map");
    c_regular->fallthrough();
    c_regular->require_subcommand(0, 1);
    c_regular->add_option("--n", rg_n, "number of variables");
    c_regular->add_option("--k", rg_k, "tuple size; map uses degrees below k");
    c_regular->add_option("--map-k", rg_map_k, "map degree bound when it differs from --k");
    c_regular->add_option("--tau", rg_tau, "block lift order")->capture_default_str();
    c_regular->add_option("--trials", rg_trials, "sampled tuples")->capture_default_str();
    c_regular->add_option("--project", rg_project, "project to this dimension first");
    auto* c_jet = c_regular->add_subcommand("jet", "span of a curvilinear jet");
    c_jet->fallthrough();
    c_jet->add_option("--n", rg_n)->required();
    c_jet->add_option("--k", rg_k)->required();
    c_jet->add_option("--curve", rg_curve, "univariate components, e.g. \"t, t^2\"")->required();
    c_jet->add_option("--at", rg_at, "expansion point")->capture_default_str();
    c_jet->add_option("--order", rg_order, "jet order; defaults to k");
    auto* c_socle = c_regular->add_subcommand("socle", "length-4 socle reduction instance");
    c_socle->fallthrough();
    c_socle->add_option("--alpha", rg_alpha, "3 rationals")->required();
    c_socle->add_option("--beta", rg_beta, "3 rationals")->required();

    std::string cache_action;
    auto* c_cache = app.add_subcommand("cache", "inspect or rebuild the enumeration cache");
    c_cache->fallthrough();
    c_cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"status", "clear", "rebuild"}));

    std::vector<const char*> argv;
    argv.push_back("punctual");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }
    opt.seed_given = seed_opt->count() > 0;

    try {
        if (*c_tables) return cmd_tables(table_id, opt, out);
        if (*c_verify) return cmd_verify(check_name, opt, out, err);
        if (*c_enum) return cmd_enumerate(en_n, en_k, en_ss, en_count, opt, out);
        if (*c_tangent)
            return cmd_tangent(tg_ideal, tg_dual, tg_n, tg_exp_opt->count() > 0, tg_expected,
                               tg_backend, opt, out);
        if (*c_apolar) return cmd_apolar(ap_dual, ap_random, ap_standard, ap_n, opt, out, err);
        if (*c_oseq) return cmd_oseq(os_k, os_min, os_max, os_h1_opt->count() > 0, os_h1, opt, out);
        if (*c_bounds) {
            if (*cb_gor)
                emit_report(Json{{"value", gorenstein_locus_dim(b_n, b_b, b_s)}}, opt.format, out);
            else if (*cb_h3)
                emit_report(Json{{"value", h3eq1_bound(HilbertFunction(detail::split_longs(b_hf)), b_n)}},
                            opt.format, out);
            else if (*cb_scan) {
                Json arr = Json::array();
                for (const auto& m : check_h3eq1_negligible(b_cap)) arr.push_back(margin_json(m));
                emit_report(Json{{"sum_cap", b_cap}, {"strata", arr}}, opt.format, out);
            } else if (*cb_h2) {
                auto series = h2eq2_tangent_series(b_n, b_s, b_t);
                long total = 0;
                for (long v : series) total += v;
                emit_report(Json{{"series", series},
                                 {"total", total},
                                 {"colength", h2eq2_colength(b_n, b_s, b_t)}},
                            opt.format, out);
            } else if (*cb_fiber)
                emit_report(Json{{"value", fiber_dim(b_n, b_a, b_b)}}, opt.format, out);
            else if (*cb_nb)
                emit_report(Json{{"value", N_bound(b_tau, b_k, b_n)}}, opt.format, out);
            else if (*cb_margin) {
                CounterexampleKind kind = b_kind == "tau1"   ? CounterexampleKind::tau_1
                                          : b_kind == "tau2" ? CounterexampleKind::tau_2
                                                             : CounterexampleKind::tau_geq_3;
                emit_report(margin_json(counterexample_margin(kind, b_n)), opt.format, out);
            } else if (*cb_est) {
                std::optional<long> base, fiber;
                if (cb_est_base->count()) base = b_base;
                if (cb_est_fiber->count()) fiber = b_fiber;
                DimensionEstimate e = dimension_estimates(b_t0, b_tpos, base, fiber);
                Json j{{"T0", e.T0}, {"T_pos", e.T_pos}, {"tangent", *e.tangent}, {"best", e.best}};
                if (e.base_tangent_fiber) j["base_tangent_fiber"] = *e.base_tangent_fiber;
                if (e.tangent_base_fiber) j["tangent_base_fiber"] = *e.tangent_base_fiber;
                if (e.base_fiber) j["base_fiber"] = *e.base_fiber;
                emit_report(j, opt.format, out);
            }
            return kOk;
        }
        if (*c_regular) {
            if (*c_jet) return cmd_regular_jet(rg_n, rg_k, rg_curve, rg_at, rg_order, opt, out);
            if (*c_socle) return cmd_regular_socle(rg_alpha, rg_beta, opt, out);
            if (rg_n < 1 || rg_k < 1)
                throw std::invalid_argument("regular: --n and --k are required for the sampled check");
            return cmd_regular_check(rg_n, rg_k, rg_map_k, rg_tau, rg_trials, rg_project, opt, out, err);
        }
        if (*c_cache) return cmd_cache(cache_action, opt, out);
    } catch (const ClaimMismatch& e) {
        err << "mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const ResourceLimitError& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace punctual::cli

#endif
