#pragma once

// JSON forms of scalars, matrices, algebras, presentations, resolutions and
// graded ring tables. Every reader is strict: anything structurally off is a
// MalformedInput, and every writer is canonical so that round trips and
// repeated runs are byte-identical.

#include "augalg/cohomology.hpp"
#include "augalg/graded.hpp"

namespace augalg {

inline Json field_json(const RationalField&) { return {{"char", 0}}; }
inline Json field_json(const PrimeField& k) { return {{"char", k.characteristic()}}; }

/// Characteristic named by a document's "field" entry (0 when absent).
inline unsigned field_char(const Json& doc) {
    if (!doc.is_object()) throw MalformedInput("document is not a JSON object");
    if (!doc.contains("field")) return 0;
    const Json& f = doc.at("field");
    if (!f.is_object() || !f.contains("char") || !f.at("char").is_number_integer() ||
        f.at("char").get<long long>() < 0)
        throw MalformedInput("field must be {\"char\": p}");
    return f.at("char").get<unsigned>();
}

template <Field K>
Json scalar_json(const K& k, const Scalar<K>& a) {
    if constexpr (std::is_same_v<K, PrimeField>)
        return k.bind(a).value();
    else
        return k.to_string(a);
}

template <Field K>
Scalar<K> scalar_from_json(const K& k, const Json& j) {
    try {
        if (j.is_string()) return k.parse(j.get<std::string>());
        if (j.is_number_integer()) return k.from_int(j.get<long>());
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
    }
    throw MalformedInput("scalar must be a string or an integer");
}

template <Field K>
Json vec_json(const K& k, const Vec<K>& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(scalar_json(k, a));
    return out;
}

template <Field K>
Vec<K> vec_from_json(const K& k, const Json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw MalformedInput("expected a coordinate list of length " + std::to_string(expected));
    Vec<K> v;
    for (const auto& a : j) v.push_back(scalar_from_json(k, a));
    return v;
}

/// Sparse [row, col, coeff] triples in row-major order.
template <Field K>
Json matrix_json(const Matrix<K>& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) entries.push_back({i, j, scalar_json(m.field(), m(i, j))});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <Field K>
Matrix<K> matrix_from_json(const K& k, const Json& j) {
    try {
        Matrix<K> m(k, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
        for (const auto& e : j.at("entries")) {
            const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
            if (r >= m.rows() || c >= m.cols()) throw MalformedInput("matrix entry out of range");
            m(r, c) = scalar_from_json(k, e.at(2));
        }
        return m;
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("matrix: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Algebras

template <Field K>
Json algebra_json(const Algebra<K>& a) {
    const K& k = a.field();
    Json mul = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto terms = a.product(i, j);
            std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
            for (const auto& t : terms)
                if (!is_zero(t.coeff)) mul.push_back({i, j, t.index, scalar_json(k, t.coeff)});
        }
    Json j;
    j["field"] = field_json(k);
    j["basis"] = a.labels();
    j["unit"] = vec_json(k, a.unit());
    j["mul"] = mul;
    j["aug"] = vec_json(k, a.aug());
    if (a.graded()) j["degrees"] = a.degrees();
    return j;
}

/// Reads an algebra document over k; the document's characteristic must be k's.
template <Field K>
Algebra<K> algebra_from_json(const K& k, const Json& j) {
    if (field_char(j) != k.characteristic()) throw MalformedInput("algebra field does not match the requested field");
    try {
        const auto labels = j.at("basis").get<std::vector<std::string>>();
        if (labels.empty()) throw MalformedInput("algebra basis is empty");
        const std::size_t d = labels.size();
        Algebra<K> a(k, labels);
        for (const auto& t : j.at("mul")) {
            if (!t.is_array() || t.size() != 4) throw MalformedInput("mul entries are [i, j, k, coeff]");
            const auto x = t.at(0).get<std::size_t>(), y = t.at(1).get<std::size_t>(), z = t.at(2).get<std::size_t>();
            if (x >= d || y >= d || z >= d) throw MalformedInput("mul index out of range");
            a.add_product_term(x, y, z, scalar_from_json(k, t.at(3)));
        }
        a.set_unit(vec_from_json(k, j.at("unit"), d));
        a.set_aug(vec_from_json(k, j.at("aug"), d));
        if (j.contains("degrees")) {
            auto deg = j.at("degrees").get<std::vector<int>>();
            if (deg.size() != d) throw MalformedInput("degrees length differs from the basis");
            a.set_degrees(std::move(deg));
        }
        return a;
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("algebra: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Presentations

template <Field K>
Json presentation_json(const Presentation<K>& p) {
    Json gens = Json::array(), rels = Json::array();
    for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    for (const auto& rel : p.relations) {
        Json terms = Json::array();
        for (const auto& [c, w] : rel) terms.push_back({scalar_json(p.field, c), w});
        rels.push_back(terms);
    }
    return {{"field", field_json(p.field)}, {"generators", gens}, {"relations", rels}, {"cutoff", p.cutoff}};
}

template <Field K>
Presentation<K> presentation_from_json(const K& k, const Json& j) {
    if (field_char(j) != k.characteristic()) throw MalformedInput("presentation field does not match the requested field");
    try {
        Presentation<K> p;
        p.field = k;
        for (const auto& g : j.at("generators")) {
            p.generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
            if (p.generators.back().degree <= 0) throw MalformedInput("generator degrees must be positive");
        }
        for (const auto& rel : j.at("relations")) {
            typename Presentation<K>::Polynomial poly;
            for (const auto& t : rel) {
                Word w = t.at(1).get<Word>();
                for (int g : w)
                    if (g < 0 || std::size_t(g) >= p.generators.size()) throw MalformedInput("relation letter out of range");
                poly.push_back({scalar_from_json(k, t.at(0)), std::move(w)});
            }
            p.relations.push_back(std::move(poly));
        }
        p.cutoff = j.at("cutoff").get<int>();
        if (p.cutoff < 0) throw MalformedInput("cutoff must be nonnegative");
        return p;
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("presentation: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Resolution bundles

template <Field K>
Json module_json(const ModuleOver<K>& m) {
    Json act = Json::array();
    for (const auto& a : m.action) act.push_back(matrix_json(a));
    Json j{{"dim", m.dim}, {"action", act}};
    if (!m.degrees.empty()) j["degrees"] = m.degrees;
    return j;
}

template <Field K>
ModuleOver<K> module_from_json(const K& k, std::shared_ptr<const Algebra<K>> ring, const Json& j) {
    ModuleOver<K> m{ring, j.at("dim").get<std::size_t>(), {}, {}};
    for (const auto& a : j.at("action")) m.action.push_back(matrix_from_json(k, a));
    if (m.action.size() != ring->dim()) throw MalformedInput("module action count differs from the ring dimension");
    if (j.contains("degrees")) m.degrees = j.at("degrees").get<std::vector<int>>();
    return m;
}

template <Field K>
Json resolution_json(const Resolution<K>& r) {
    Json j;
    j["kind"] = r.kind;
    j["ring"] = algebra_json(*r.ring);
    if (r.base) j["base"] = algebra_json(*r.base);
    j["target"] = module_json(r.target);
    j["ranks"] = r.ranks;
    j["gen_degrees"] = r.gen_degrees;
    j["gen_labels"] = r.gen_labels;
    Json diff = Json::array(), hom = Json::array();
    for (const auto& d : r.diff) diff.push_back(matrix_json(d));
    for (const auto& h : r.homotopy) hom.push_back(matrix_json(h));
    j["diff"] = diff;
    j["augmentation"] = matrix_json(r.augmentation);
    j["homotopy"] = hom;
    j["small"] = r.small;
    return j;
}

template <Field K>
Resolution<K> resolution_from_json(const K& k, const Json& j) {
    try {
        Resolution<K> r;
        r.kind = j.at("kind").get<std::string>();
        r.ring = std::make_shared<const Algebra<K>>(algebra_from_json(k, j.at("ring")));
        if (j.contains("base")) r.base = std::make_shared<const Algebra<K>>(algebra_from_json(k, j.at("base")));
        r.target = module_from_json(k, r.ring, j.at("target"));
        r.ranks = j.at("ranks").get<std::vector<std::size_t>>();
        r.gen_degrees = j.at("gen_degrees").get<std::vector<std::vector<int>>>();
        r.gen_labels = j.at("gen_labels").get<std::vector<std::vector<std::string>>>();
        for (const auto& d : j.at("diff")) r.diff.push_back(matrix_from_json(k, d));
        for (const auto& h : j.at("homotopy")) r.homotopy.push_back(matrix_from_json(k, h));
        r.augmentation = matrix_from_json(k, j.at("augmentation"));
        r.small = j.at("small").get<bool>();
        if (r.diff.size() != r.ranks.size()) throw MalformedInput("resolution: one differential per degree expected");
        return r;
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("resolution: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Graded ring tables

template <Field K>
Json table_json(const GradedRingTable<K>& t) {
    Json prods = Json::array();
    for (const auto& [pq, tab] : t.products) {
        Json entries = Json::array();
        for (std::size_t ij = 0; ij < tab.size(); ++ij)
            for (std::size_t c = 0; c < tab[ij].size(); ++c)
                if (!is_zero(tab[ij][c])) entries.push_back({ij, c, scalar_json(t.k, tab[ij][c])});
        prods.push_back({{"p", pq.first}, {"q", pq.second}, {"entries", entries}});
    }
    return {{"field", field_json(t.k)}, {"dims", t.dims},          {"labels", t.labels},
            {"unit", vec_json(t.k, t.unit)}, {"graded_signs", t.graded_signs}, {"products", prods}};
}

template <Field K>
GradedRingTable<K> table_from_json(const K& k, const Json& j) {
    if (field_char(j) != k.characteristic()) throw MalformedInput("table field does not match the requested field");
    try {
        GradedRingTable<K> t;
        t.k = k;
        t.dims = j.at("dims").get<std::vector<std::size_t>>();
        t.labels = j.at("labels").get<std::vector<std::vector<std::string>>>();
        if (t.dims.empty()) throw MalformedInput("table has no degrees");
        t.unit = vec_from_json(k, j.at("unit"), t.dims[0]);
        t.graded_signs = j.at("graded_signs").get<bool>();
        for (const auto& e : j.at("products")) {
            const auto p = e.at("p").get<std::size_t>(), q = e.at("q").get<std::size_t>();
            if (p + q >= t.dims.size()) throw MalformedInput("product degree beyond the table");
            std::vector<Vec<K>> tab(t.dims[p] * t.dims[q], Vec<K>(t.dims[p + q], k.zero()));
            for (const auto& x : e.at("entries")) {
                const auto ij = x.at(0).get<std::size_t>(), c = x.at(1).get<std::size_t>();
                if (ij >= tab.size() || c >= t.dims[p + q]) throw MalformedInput("table entry out of range");
                tab[ij][c] = scalar_from_json(k, x.at(2));
            }
            t.products[{p, q}] = std::move(tab);
        }
        return t;
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("table: ") + e.what());
    }
}

}  // namespace augalg
