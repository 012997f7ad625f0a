#pragma once

// Named checks: a thin table from a check name and its parameters onto the
// library operations. Loading, validation and defaults live here so that
// the command-line front end only parses flags and prints reports.

#include "augalg/json_io.hpp"
#include "augalg/product_cohomology.hpp"
#include "augalg/registry.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace augalg {

struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "axioms",      "ordinary-coprod", "omega-lem",    "main-theo",    "les-exact",         "additive-decomp",
        "hoch-prod",   "nilp-hh",         "gr-centre",    "phi-k-centre", "ss-nilpotence",     "chinese-remainder",
        "hoch-coprod-heuristic"};
    return names;
}

struct CheckRequest {
    std::string name;
    std::string algebra = "trunc-poly:2";
    std::string left = "trunc-poly:2";
    std::string right = "trunc-poly:2";
    std::size_t nmax = 4;
    bool nmax_given = false;
    std::optional<int> cutoff;
    std::string ring = "ext";  // gr-centre: "ext" uses Ext tables, "algebra" the graded algebras

    Json to_json() const {
        Json j{{"name", name}, {"nmax", nmax}, {"ring", ring}};
        if (name == "axioms" || name == "phi-k-centre" || name == "chinese-remainder")
            j["algebra"] = algebra;
        else {
            j["left"] = left;
            j["right"] = right;
        }
        if (cutoff) j["cutoff"] = *cutoff;
        return j;
    }
};

inline CheckRequest make_request(std::string name, std::string algebra = "trunc-poly:2") {
    CheckRequest r;
    r.name = std::move(name);
    r.algebra = std::move(algebra);
    return r;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

/// Source of an algebra: "registry:<name>", a JSON file (algebra or
/// presentation document), or a bare registry name.
struct AlgebraSource {
    std::optional<Json> document;
    std::string registry_name;
};

inline AlgebraSource algebra_source(const std::string& spec) {
    if (spec.rfind("registry:", 0) == 0) return {std::nullopt, spec.substr(9)};
    if (std::filesystem::is_regular_file(spec)) return {read_json_file(spec), {}};
    return {std::nullopt, spec};
}

template <Field K>
Algebra<K> parse_algebra(const K& k, const std::string& spec) {
    auto src = algebra_source(spec);
    if (!src.document) return registry_algebra(k, src.registry_name);
    if (src.document->contains("generators")) return from_presentation(presentation_from_json(k, *src.document)).algebra;
    return algebra_from_json(k, *src.document);
}

/// Loads and validates; an algebra failing the axioms raises AxiomError.
template <Field K>
Algebra<K> load_algebra(const K& k, const std::string& spec) {
    Algebra<K> a = parse_algebra(k, spec);
    auto ax = check_axioms(a);
    if (!ax.pass) throw AxiomError(spec + " violates the algebra axioms: " + ax.to_json().dump());
    return a;
}

namespace detail {

inline void refuse_char_two(unsigned p, const std::string& check) {
    if (p == 2) throw PreconditionError(check + " assumes the characteristic is not two");
}

/// Default cutoff for coproduct checks: 2·nmax plus a guard band of one.
inline int coproduct_cutoff(const CheckRequest& req) { return req.cutoff.value_or(int(2 * req.nmax) + 1); }

}  // namespace detail

/// Runs one named check. Throws UnknownCheck, MalformedInput, AxiomError,
/// CutoffTooSmall or PreconditionError.
template <Field K>
CheckReport run_check(const K& k, const CheckRequest& req) {
    const std::string& n = req.name;
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
        throw UnknownCheck("unknown check '" + n + "'");
    const std::size_t N = req.nmax;
    auto pair = [&] { return std::pair{load_algebra(k, req.left), load_algebra(k, req.right)}; };
    auto product_data = [&] {
        auto [a, b] = pair();
        return product_cohomology(a, b, N);
    };
    CheckReport r;
    if (n == "axioms") {
        r = check_axioms(parse_algebra(k, req.algebra));
        if (!r.pass) throw AxiomError(req.algebra + " violates the algebra axioms: " + r.to_json().dump());
    } else if (n == "ordinary-coprod") {
        auto [a, b] = pair();
        r = ext_coproduct_check(a, b, N);
    } else if (n == "omega-lem") {
        auto [a, b] = pair();
        r = omega_coproduct_check(a, b, req.cutoff.value_or(int(N)));
    } else if (n == "main-theo") {
        auto [a, b] = pair();
        r = main_theo_check(a, b, N);
    } else if (n == "les-exact") {
        auto [a, b] = pair();
        auto pc = product_cohomology(a, b, N);
        r = product_les_check(pc);
        r.absorb("connecting", connecting_formula_check(pc));
        for (const auto& [side, f] : {std::pair{"left", &a}, std::pair{"right", &b}}) {
            auto les = augmentation_les(minimal_bimodule_resolution(adapted(*f).algebra, N + 1));
            r.tables[std::string("augmentation_") + side] = les.record.to_json();
            r.clause(std::string("augmentation_exact_") + side, les.composition_zero && les.record.exact());
        }
    } else if (n == "additive-decomp") {
        r = additive_decomposition_check(product_data());
    } else if (n == "hoch-prod") {
        auto pc = product_data();
        r = hoch_prod_check(pc);
        r.absorb("coherence", c_map_coherence_check(pc));
    } else if (n == "nilp-hh") {
        auto [a, b] = pair();
        r = nilp_check(a, b, N);
    } else if (n == "gr-centre") {
        detail::refuse_char_two(k.characteristic(), n);
        auto [a, b] = pair();
        const int cutoff = req.cutoff.value_or(int(N) + 1);
        if (cutoff < 1) throw CutoffTooSmall("gr-centre cutoff must be positive");
        if (req.ring == "algebra") {
            auto ta = algebra_table(adapted(a).algebra, std::size_t(cutoff), "r");
            auto tb = algebra_table(adapted(b).algebra, std::size_t(cutoff), "s");
            r = gr_centre_check(ta, tb, cutoff);
        } else if (req.ring == "ext") {
            r = gr_centre_check(ext_ring(a, std::size_t(cutoff)).table, ext_ring(b, std::size_t(cutoff)).table, cutoff);
        } else {
            throw MalformedInput("--ring must be 'ext' or 'algebra'");
        }
    } else if (n == "phi-k-centre") {
        r = phi_k_centre_check(load_algebra(k, req.algebra), N);
    } else if (n == "ss-nilpotence") {
        auto [a, b] = pair();
        r = ss_nilpotence_check(a, b, N);
    } else if (n == "chinese-remainder") {
        // I generated by the first radical generator, J by the others
        auto a = adapted(load_algebra(k, req.algebra)).algebra;
        auto gens = radical_generators(a);
        if (gens.size() < 2) throw PreconditionError("chinese-remainder needs at least two radical generators");
        r = chinese_remainder_check(a, ideal_generated(a, {gens[0]}),
                                    ideal_generated(a, std::vector<Vec<K>>(gens.begin() + 1, gens.end())));
    } else if (n == "hoch-coprod-heuristic") {
        detail::refuse_char_two(k.characteristic(), n);
        auto [a, b] = pair();
        r = hoch_coproduct_check(a, b, detail::coproduct_cutoff(req), req.nmax_given ? N : std::min<std::size_t>(N, 2));
    }
    r.params["request"] = req.to_json();
    r.params["field"] = field_json(k);
    return r;
}

/// Runs a check over the field named by `p` (0 for the rationals).
inline CheckReport run_check(unsigned p, const CheckRequest& req) {
    if (p == 0) return run_check(RationalField{}, req);
    return run_check(PrimeField(p), req);
}

/// The suite run by report-all: every check on the built-in pairs it
/// applies to, in a fixed order.
inline std::vector<CheckRequest> report_all_requests(std::size_t nmax) {
    std::vector<CheckRequest> out;
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"trunc-poly:2", "trunc-poly:2"}, {"trunc-poly:3", "trunc-poly:2"}, {"trunc-poly:3", "trunc-poly:3"}};
    auto add = [&](CheckRequest r) {
        r.nmax = nmax;
        out.push_back(std::move(r));
    };
    for (const auto& name : registry_names()) add(make_request("axioms", name));
    for (const auto& name : {"trunc-poly:2", "trunc-poly:3", "rad-square-zero:2"}) add(make_request("phi-k-centre", name));
    add(make_request("chinese-remainder", "rad-square-zero:2"));
    for (const auto& [l, r] : pairs)
        for (const auto& c : {"main-theo", "les-exact", "additive-decomp", "nilp-hh", "ss-nilpotence"}) {
            auto q = make_request(c);
            q.left = l;
            q.right = r;
            add(q);
        }
    auto hp = make_request("hoch-prod");
    add(hp);
    for (const auto& [l, r] : {std::pair{"trunc-poly:2", "trunc-poly:2"}, std::pair{"trunc-poly:3", "trunc-poly:2"}}) {
        auto q = make_request("omega-lem");
        q.left = l;
        q.right = r;
        add(q);
        // the cubic factor puts E^4 at internal degree 6, too large a window at nmax 4
        q.name = "ordinary-coprod";
        add(q);
        if (l == std::string("trunc-poly:3")) out.back().nmax = std::min<std::size_t>(nmax, 3);
    }
    auto gc = make_request("gr-centre");
    add(gc);
    gc.ring = "algebra";
    add(gc);
    auto hc = make_request("hoch-coprod-heuristic");
    hc.cutoff = 6;
    add(hc);
    return out;
}

}  // namespace augalg
