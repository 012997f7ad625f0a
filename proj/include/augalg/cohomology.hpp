#pragma once

// Ext and Hochschild cohomology from resolutions: Hom complexes, Yoneda
// products by lifting cocycles to chain maps, graded ring tables, the
// functor E on morphisms, φ_k and the long exact sequence coming from
// 0 -> I(Λ) -> Λ -> k -> 0.

#include "augalg/cochain.hpp"
#include "augalg/graded.hpp"
#include "augalg/resolution_ops.hpp"

namespace augalg {

// ---------------------------------------------------------------------------
// Hom complexes

// Hom_B(P_n, M) ≅ M^{r_n}; a cochain stores f(g) at block g.

namespace detail {

template <Field K>
Matrix<K> images_of(const K& k, const Vec<K>& f, std::size_t m_dim, std::size_t rank) {
    Matrix<K> out(k, m_dim, rank);
    for (std::size_t g = 0; g < rank; ++g)
        for (std::size_t i = 0; i < m_dim; ++i) out(i, g) = f[g * m_dim + i];
    return out;
}

template <Field K>
Vec<K> flatten(const Matrix<K>& images) {
    Vec<K> f(images.rows() * images.cols());
    for (std::size_t g = 0; g < images.cols(); ++g)
        for (std::size_t i = 0; i < images.rows(); ++i) f[g * images.rows() + i] = images(i, g);
    return f;
}

}  // namespace detail

/// Evaluates the cochain f ∈ Hom(P_n, M) on an element v of P_n.
template <Field K>
Vec<K> evaluate_cochain(const ModuleOver<K>& m, const Vec<K>& f, std::size_t rank, const Vec<K>& v) {
    return apply_free_to_module(m, detail::images_of(m.field(), f, m.dim, rank), v);
}

/// The coboundary Hom(P_n, M) -> Hom(P_{n+1}, M), f ↦ f ∘ d_{n+1}.
template <Field K>
Matrix<K> hom_coboundary(const Resolution<K>& res, const ModuleOver<K>& m, std::size_t n) {
    const K& k = res.field();
    const std::size_t md = m.dim, rn = res.ranks[n], rn1 = res.ranks[n + 1];
    Matrix<K> out(k, rn1 * md, rn * md);
    const std::size_t d = res.ring->dim();
    const auto& dm = res.diff[n + 1];
    for (std::size_t h = 0; h < rn1; ++h)
        for (std::size_t g = 0; g < rn; ++g)
            for (std::size_t b = 0; b < d; ++b) {
                const auto& c = dm(g * d + b, h);
                if (is_zero(c)) continue;
                const auto& act = m.action[b];
                for (std::size_t i = 0; i < md; ++i)
                    for (std::size_t j = 0; j < md; ++j)
                        if (!is_zero(act(i, j))) out(h * md + i, g * md + j) += c * act(i, j);
            }
    return out;
}

/// Hom(P_*, M) in degrees 0..res.length().
template <Field K>
CochainComplex<K> hom_complex(const Resolution<K>& res, const ModuleOver<K>& m) {
    CochainComplex<K> c{res.field(), {}, {}};
    for (std::size_t n = 0; n <= res.length(); ++n) c.dims.push_back(res.ranks[n] * m.dim);
    for (std::size_t n = 0; n < res.length(); ++n) c.coboundary.push_back(hom_coboundary(res, m, n));
    return c;
}

/// The cochain map Hom(P, M) -> Hom(P, M') induced by a module map φ.
template <Field K>
Matrix<K> induced_cochain_map(const Matrix<K>& phi, std::size_t rank) {
    Matrix<K> out(phi.field(), rank * phi.rows(), rank * phi.cols());
    for (std::size_t g = 0; g < rank; ++g)
        for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < phi.cols(); ++j) out(g * phi.rows() + i, g * phi.cols() + j) = phi(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Lifting cocycles

/// F[i] : P_{n+i} -> P_i as generator images, with aug ∘ F[0] = f.
template <Field K>
struct ChainMap {
    std::size_t shift = 0;
    std::vector<Matrix<K>> components;
};

/// Lifts a cocycle f ∈ Hom(P_n, target) to a chain map P_{n+*} -> P_*,
/// components 0..upto (needs P up to n + upto).
template <Field K>
ChainMap<K> lift_cocycle(const Resolution<K>& res, std::size_t n, const Vec<K>& f, std::size_t upto) {
    const K& k = res.field();
    const ModuleOver<K>& m = res.target;
    ChainMap<K> out{n, {}};
    Factorization<K> aug(res.augmentation_linear());
    Matrix<K> f0(k, res.term_dim(0), res.ranks[n]);
    for (std::size_t h = 0; h < res.ranks[n]; ++h) {
        Vec<K> target(m.dim);
        for (std::size_t i = 0; i < m.dim; ++i) target[i] = f[h * m.dim + i];
        auto x = aug.solve(target);
        if (!x) throw std::runtime_error("lift_cocycle: augmentation not onto");
        f0.set_col(h, *x);
    }
    out.components.push_back(std::move(f0));
    for (std::size_t i = 1; i <= upto && n + i <= res.length(); ++i) {
        auto fact = res.diff_factorization(i);
        Matrix<K> fi(k, res.term_dim(i), res.ranks[n + i]);
        for (std::size_t h = 0; h < res.ranks[n + i]; ++h) {
            Vec<K> dh = res.diff[n + i].col(h);
            Vec<K> rhs = apply_free_map(*res.ring, out.components[i - 1], dh);
            auto x = fact->solve(rhs);
            if (!x) throw PreconditionError("lift_cocycle: input is not a cocycle");
            fi.set_col(h, *x);
        }
        out.components.push_back(std::move(fi));
    }
    return out;
}

/// f ∘ G_p for a cochain f on P_p and a chain map G of shift q: a cochain
/// on P_{p+q}.
template <Field K>
Vec<K> compose_cochain(const Resolution<K>& res, const Vec<K>& f, std::size_t p, const ChainMap<K>& g) {
    const ModuleOver<K>& m = res.target;
    Matrix<K> fi = detail::images_of(res.field(), f, m.dim, res.ranks[p]);
    const auto& gp = g.components.at(p);
    Vec<K> out;
    out.reserve(gp.cols() * m.dim);
    for (std::size_t h = 0; h < gp.cols(); ++h) {
        Vec<K> v = apply_free_to_module(m, fi, gp.col(h));
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Graded ring tables

template <Field K>
struct GradedRingTable {
    K k;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::string>> labels;
    // products[p][q][i * dims[q] + j] = coordinates of x_{p,i} x_{q,j} in degree p+q
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Vec<K>>> products;
    Vec<K> unit;  // degree-0 coordinates
    bool graded_signs = true;

    std::size_t bound() const { return dims.empty() ? 0 : dims.size() - 1; }

    Vec<K> basis(std::size_t p, std::size_t i) const {
        Vec<K> v(dims[p], k.zero());
        v[i] = k.one();
        return v;
    }
    bool has(std::size_t p, std::size_t q) const { return products.count({p, q}) > 0; }
    Vec<K> mul(std::size_t p, const Vec<K>& x, std::size_t q, const Vec<K>& y) const {
        Vec<K> out(dims.at(p + q), k.zero());
        const auto& tab = products.at({p, q});
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (is_zero(y[j])) continue;
                const auto& z = tab[i * dims[q] + j];
                for (std::size_t t = 0; t < z.size(); ++t)
                    if (!is_zero(z[t])) out[t] += x[i] * y[j] * z[t];
            }
        }
        return out;
    }
    Json to_json() const {
        Json j;
        j["dims"] = dims;
        j["labels"] = labels;
        Json prods = Json::array();
        for (const auto& [pq, tab] : products)
            for (std::size_t a = 0; a < tab.size(); ++a)
                for (std::size_t t = 0; t < tab[a].size(); ++t)
                    if (!is_zero(tab[a][t]))
                        prods.push_back({pq.first, a / dims[pq.second], pq.second, a % dims[pq.second], t,
                                         k.to_string(tab[a][t])});
        j["products"] = prods;
        Json u = Json::array();
        for (const auto& x : unit) u.push_back(k.to_string(x));
        j["unit"] = u;
        return j;
    }
};

/// Associativity on all in-range triples of basis elements.
template <Field K>
CheckReport ring_table_check(const GradedRingTable<K>& t, bool expect_graded_commutative) {
    CheckReport r("ring_table");
    r.clause("associativity", true);
    r.clause("unit", true);
    const std::size_t N = t.bound();
    for (std::size_t p = 0; p <= N; ++p)
        for (std::size_t i = 0; i < t.dims[p]; ++i) {
            auto x = t.basis(p, i);
            if (!(t.mul(0, t.unit, p, x) == x) || !(t.mul(p, x, 0, t.unit) == x))
                r.fail("unit", {{"degree", p}, {"index", i}});
        }
    for (std::size_t p = 0; p <= N; ++p)
        for (std::size_t q = 0; p + q <= N; ++q)
            for (std::size_t s = 0; p + q + s <= N; ++s)
                for (std::size_t i = 0; i < t.dims[p]; ++i)
                    for (std::size_t j = 0; j < t.dims[q]; ++j)
                        for (std::size_t l = 0; l < t.dims[s]; ++l) {
                            auto x = t.basis(p, i), y = t.basis(q, j), z = t.basis(s, l);
                            auto lhs = t.mul(p + q, t.mul(p, x, q, y), s, z);
                            auto rhs = t.mul(p, x, q + s, t.mul(q, y, s, z));
                            if (!(lhs == rhs))
                                r.fail("associativity", {{"degrees", {p, q, s}}, {"indices", {i, j, l}}});
                        }
    if (expect_graded_commutative) {
        r.clause("graded_commutative", true);
        for (std::size_t p = 0; p <= N; ++p)
            for (std::size_t q = 0; p + q <= N; ++q)
                for (std::size_t i = 0; i < t.dims[p]; ++i)
                    for (std::size_t j = 0; j < t.dims[q]; ++j) {
                        auto x = t.basis(p, i), y = t.basis(q, j);
                        auto xy = t.mul(p, x, q, y), yx = t.mul(q, y, p, x);
                        if ((p * q) % 2 == 1)
                            for (auto& c : yx) c = -c;
                        if (!(xy == yx)) r.fail("graded_commutative", {{"degrees", {p, q}}, {"indices", {i, j}}});
                    }
    }
    return r;
}

/// Cohomology ring of Hom(P, target) with products [f][g] = [f ∘ lift(g)]
/// in total degrees <= N. The resolution must reach degree N + 1.
template <Field K>
struct CohomologyRing {
    std::shared_ptr<const Resolution<K>> res;
    CochainComplex<K> complex;
    std::vector<CohomologySpace<K>> spaces;
    GradedRingTable<K> table;

    /// Class of x_{p} (coordinates) times y_{q} computed through cocycles.
    Vec<K> product_cocycle(std::size_t p, const Vec<K>& f, std::size_t q, const Vec<K>& g) const {
        auto lift = lift_cocycle(*res, q, g, p);
        return compose_cochain(*res, f, p, lift);
    }
};

template <Field K>
CohomologyRing<K> cohomology_ring(std::shared_ptr<const Resolution<K>> res, std::size_t N,
                                  const std::string& symbol, bool with_products = true) {
    if (res->length() < N + 1) throw PreconditionError("cohomology_ring: resolution too short");
    CohomologyRing<K> ring{res, hom_complex(*res, res->target), {}, {}};
    ring.spaces = ring.complex.cohomology();
    ring.spaces.resize(N + 1);
    auto& t = ring.table;
    t.k = res->field();
    for (std::size_t n = 0; n <= N; ++n) {
        t.dims.push_back(ring.spaces[n].dim());
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < t.dims[n]; ++i)
            labels.push_back(symbol + std::to_string(n) + "_" + std::to_string(i));
        t.labels.push_back(std::move(labels));
    }
    for (std::size_t q = 0; q <= N && with_products; ++q)
        for (std::size_t j = 0; j < t.dims[q]; ++j) {
            auto lift = lift_cocycle(*res, q, ring.spaces[q].representative(j), N - q);
            for (std::size_t p = 0; p + q <= N; ++p) {
                auto& tab = t.products[{p, q}];
                tab.resize(t.dims[p] * t.dims[q]);
                for (std::size_t i = 0; i < t.dims[p]; ++i)
                    tab[i * t.dims[q] + j] =
                        ring.spaces[p + q].coords(compose_cochain(*res, ring.spaces[p].representative(i), p, lift));
            }
        }
    // the unit is the class of the augmentation-compatible identity lift
    Vec<K> one = detail::flatten(res->augmentation);
    t.unit = ring.spaces[0].coords(one);
    return ring;
}

// ---------------------------------------------------------------------------
// Ext and HH

template <Field K>
std::vector<std::size_t> ext_groups(const Algebra<K>& a, std::size_t N) {
    auto res = minimal_resolution(adapted(a).algebra, N + 1);
    auto c = hom_complex(res, res.target);
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= N; ++n) dims.push_back(c.cohomology()[n].dim());
    return dims;
}

template <Field K>
CohomologyRing<K> ext_ring(const Algebra<K>& a, std::size_t N) {
    auto res = std::make_shared<const Resolution<K>>(minimal_resolution(adapted(a).algebra, N + 1));
    return cohomology_ring(res, N, "e");
}

/// E computed from the one-sided reduction of a bimodule resolution, so
/// that its generators line up with those of the bimodule resolution.
template <Field K>
CohomologyRing<K> ext_ring_from_bimodule(const Resolution<K>& bi, std::size_t N) {
    auto res = std::make_shared<const Resolution<K>>(one_sided(bi));
    return cohomology_ring(res, N, "e");
}

template <Field K>
CohomologyRing<K> hh_ring(const Algebra<K>& a, std::size_t N, bool use_bar = false) {
    auto ad = adapted(a).algebra;
    auto res = std::make_shared<const Resolution<K>>(use_bar ? bar_resolution(ad, N + 1)
                                                             : minimal_bimodule_resolution(ad, N + 1));
    return cohomology_ring(res, N, "h");
}

template <Field K>
std::vector<std::size_t> hh_groups(const Algebra<K>& a, std::size_t N, bool use_bar = false) {
    auto ad = adapted(a).algebra;
    auto res = use_bar ? bar_resolution(ad, N + 1) : minimal_bimodule_resolution(ad, N + 1);
    auto spaces = hom_complex(res, res.target).cohomology();
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= N; ++n) dims.push_back(spaces[n].dim());
    return dims;
}

/// Dims of Ext over Λ of (k, k) from the bar resolution: Hom(B ⊗_Λ k, k).
template <Field K>
std::vector<std::size_t> ext_groups_bar(const Algebra<K>& a, std::size_t N) {
    auto res = one_sided(bar_resolution(adapted(a).algebra, N + 1));
    auto spaces = hom_complex(res, res.target).cohomology();
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= N; ++n) dims.push_back(spaces[n].dim());
    return dims;
}

// ---------------------------------------------------------------------------
// The functor E on morphisms

/// E(f) : E(Γ) -> E(Λ) for f : Λ -> Γ, per degree as matrices in the
/// canonical bases of the two Ext rings.
template <Field K>
std::vector<Matrix<K>> ext_functor(const Morphism<K>& f, const CohomologyRing<K>& source_ext,
                                   const CohomologyRing<K>& target_ext) {
    const Resolution<K>& ps = *source_ext.res;  // over Λ
    const Resolution<K>& pt = *target_ext.res;  // over Γ
    const K& k = ps.field();
    const Algebra<K>& lam = *ps.ring;
    const Algebra<K>& gam = *pt.ring;
    const std::size_t N = std::min(source_ext.table.bound(), target_ext.table.bound());
    // Λ acts on P^Γ through f
    auto twisted = [&](const Matrix<K>& images, const Vec<K>& v) {
        Vec<K> out(images.rows(), k.zero());
        const std::size_t d = lam.dim();
        for (std::size_t g = 0; g < images.cols(); ++g)
            for (std::size_t b = 0; b < d; ++b) {
                const auto& c = v[g * d + b];
                if (is_zero(c)) continue;
                Vec<K> fb = f.matrix.col(b);
                Vec<K> img = images.col(g);
                for (std::size_t e = 0; e < gam.dim(); ++e)
                    if (!is_zero(fb[e])) free_add_left_mul(gam, out, e, img, c * fb[e]);
            }
        return out;
    };
    std::vector<Matrix<K>> h;
    Factorization<K> aug(pt.augmentation_linear());
    Matrix<K> h0(k, pt.term_dim(0), ps.ranks[0]);
    for (std::size_t g = 0; g < ps.ranks[0]; ++g) h0.set_col(g, aug.solve_or_throw(ps.augmentation.col(g)));
    h.push_back(std::move(h0));
    for (std::size_t n = 1; n <= N; ++n) {
        auto fact = pt.diff_factorization(n);
        Matrix<K> hn(k, pt.term_dim(n), ps.ranks[n]);
        for (std::size_t g = 0; g < ps.ranks[n]; ++g)
            hn.set_col(g, fact->solve_or_throw(twisted(h[n - 1], ps.diff[n].col(g))));
        h.push_back(std::move(hn));
    }
    std::vector<Matrix<K>> out;
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& from = target_ext.spaces[n];
        const auto& to = source_ext.spaces[n];
        Matrix<K> m(k, to.dim(), from.dim());
        for (std::size_t j = 0; j < from.dim(); ++j) {
            Matrix<K> alpha = detail::images_of(k, from.representative(j), pt.target.dim, pt.ranks[n]);
            Vec<K> pulled;
            for (std::size_t g = 0; g < ps.ranks[n]; ++g) {
                // α ∘ H_n on generator g: α is Γ-linear into k, twisted through f
                Vec<K> v = h[n].col(g);
                pulled.push_back(apply_free_to_module(pt.target, alpha, v)[0]);
            }
            m.set_col(j, to.coords(pulled));
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Checks that a degreewise linear map between ring tables is multiplicative
/// and unital.
template <Field K>
CheckReport ring_hom_check(const std::vector<Matrix<K>>& map, const GradedRingTable<K>& from,
                           const GradedRingTable<K>& to) {
    CheckReport r("ring_hom");
    r.clause("unit", map[0] * from.unit == to.unit);
    r.clause("multiplicative", true);
    const std::size_t N = std::min(map.size() - 1, std::min(from.bound(), to.bound()));
    for (std::size_t p = 0; p <= N; ++p)
        for (std::size_t q = 0; p + q <= N; ++q)
            for (std::size_t i = 0; i < from.dims[p]; ++i)
                for (std::size_t j = 0; j < from.dims[q]; ++j) {
                    auto x = from.basis(p, i), y = from.basis(q, j);
                    auto lhs = map[p + q] * from.mul(p, x, q, y);
                    auto rhs = to.mul(p, map[p] * x, q, map[q] * y);
                    if (!(lhs == rhs)) r.fail("multiplicative", {{"degrees", {p, q}}, {"indices", {i, j}}});
                }
    return r;
}

// ---------------------------------------------------------------------------
// φ_k and the sequence from 0 -> I(Λ) -> Λ -> k -> 0

/// φ_k : HH(Λ) -> E(Λ), f ↦ ε ∘ f on the one-sided reduction.
template <Field K>
std::vector<Matrix<K>> phi_k(const CohomologyRing<K>& hh, const CohomologyRing<K>& ext) {
    const Resolution<K>& bi = *hh.res;
    const Algebra<K>& a = *bi.base;
    const K& k = a.field();
    const std::size_t N = std::min(hh.table.bound(), ext.table.bound());
    std::vector<Matrix<K>> out;
    for (std::size_t n = 0; n <= N; ++n) {
        Matrix<K> m(k, ext.spaces[n].dim(), hh.spaces[n].dim());
        for (std::size_t j = 0; j < hh.spaces[n].dim(); ++j) {
            Vec<K> f = hh.spaces[n].representative(j);
            Vec<K> e(bi.ranks[n], k.zero());
            for (std::size_t g = 0; g < bi.ranks[n]; ++g)
                for (std::size_t i = 0; i < a.dim(); ++i) e[g] += a.aug()[i] * f[g * a.dim() + i];
            m.set_col(j, ext.spaces[n].coords(e));
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// The long exact sequence of Ext_{Λ^e}(Λ, -) applied to 0 -> I -> Λ -> k -> 0,
/// through degree N (the bimodule resolution must reach N + 1).
template <Field K>
LongExactSequence<K> augmentation_les(const Resolution<K>& bi) {
    const Algebra<K>& a = *bi.base;
    const K& k = a.field();
    const std::size_t d = a.dim();
    ModuleOver<K> lam = bi.target;
    std::vector<std::size_t> icoords;
    for (std::size_t i = 1; i < d; ++i) icoords.push_back(i);
    ModuleOver<K> ideal = coordinate_submodule(lam, icoords);
    ModuleOver<K> triv{bi.ring, 1, {}, {}};
    for (std::size_t b = 0; b < bi.ring->dim(); ++b) {
        Matrix<K> t(k, 1, 1);
        t(0, 0) = bi.ring->aug()[b];
        triv.action.push_back(t);
    }
    Matrix<K> incl(k, d, d - 1), eps(k, 1, d);
    for (std::size_t i = 1; i < d; ++i) incl(i, i - 1) = k.one();
    for (std::size_t i = 0; i < d; ++i) eps(0, i) = a.aug()[i];
    auto ca = hom_complex(bi, ideal), cb = hom_complex(bi, lam), cc = hom_complex(bi, triv);
    std::vector<Matrix<K>> i, p;
    for (std::size_t n = 0; n <= bi.length(); ++n) {
        i.push_back(induced_cochain_map(incl, bi.ranks[n]));
        p.push_back(induced_cochain_map(eps, bi.ranks[n]));
    }
    return long_exact_sequence(ca, cb, cc, i, p);
}

}  // namespace augalg

namespace augalg {

/// Graded centre of a ring table in degree p, tested against all basis
/// elements y of degree q with p + q within the bound.
template <Field K>
Subspace<K> table_graded_center(const GradedRingTable<K>& t, std::size_t p, bool graded_signs = true) {
    std::vector<Vec<K>> rows;
    std::size_t total = 0;
    for (std::size_t q = 0; p + q <= t.bound(); ++q) total += t.dims[q] * t.dims[p + q];
    Matrix<K> m(t.k, total, t.dims[p]);
    std::size_t row = 0;
    for (std::size_t q = 0; p + q <= t.bound(); ++q)
        for (std::size_t j = 0; j < t.dims[q]; ++j) {
            auto y = t.basis(q, j);
            const bool flip = graded_signs && (p * q) % 2 == 1;
            for (std::size_t i = 0; i < t.dims[p]; ++i) {
                auto x = t.basis(p, i);
                auto xy = t.mul(p, x, q, y), yx = t.mul(q, y, p, x);
                for (std::size_t c = 0; c < xy.size(); ++c) m(row + c, i) = flip ? Scalar<K>(xy[c] + yx[c]) : Scalar<K>(xy[c] - yx[c]);
            }
            row += t.dims[p + q];
        }
    return kernel_basis(m);
}

/// x^e in a ring table (nullopt when the degree leaves the bound).
template <Field K>
std::optional<Vec<K>> table_power(const GradedRingTable<K>& t, std::size_t p, const Vec<K>& x, std::size_t e) {
    if (e == 0) return t.unit;
    if (p * e > t.bound()) return std::nullopt;
    Vec<K> acc = x;
    for (std::size_t i = 1; i < e; ++i) acc = t.mul(p * i, acc, p, x);
    return acc;
}

/// φ_k for one algebra: a ring homomorphism into the graded centre of E(Λ)
/// whose homogeneous kernel elements have N-th power zero (I(Λ)^N = 0),
/// together with exactness of the augmentation sequence.
template <Field K>
CheckReport phi_k_centre_check(const Algebra<K>& a, std::size_t N) {
    CheckReport r("phi-k-centre");
    r.params["N"] = N;
    const auto nil = nilpotency_index(adapted(a).algebra);
    if (!nil) throw PreconditionError("phi_k_centre_check: augmentation ideal is not nilpotent");
    r.params["nilpotency_index"] = *nil;
    auto hh = hh_ring(a, N);
    auto ext = ext_ring_from_bimodule(*hh.res, N);
    auto phi = phi_k(hh, ext);
    r.absorb("ring_hom", ring_hom_check(phi, hh.table, ext.table));
    bool central = true, nilpotent = true;
    Json ranks = Json::array(), kernels = Json::array();
    for (std::size_t n = 0; n <= N; ++n) {
        ranks.push_back(rank(phi[n]));
        auto centre = table_graded_center(ext.table, n);
        for (std::size_t j = 0; j < phi[n].cols(); ++j) central = central && centre.contains(phi[n].col(j));
        auto ker = kernel_basis(phi[n]);
        kernels.push_back(ker.dim());
        if (n == 0) continue;
        for (std::size_t i = 0; i < ker.dim(); ++i)
            if (auto pw = table_power(hh.table, n, ker.vector(i), *nil)) nilpotent = nilpotent && is_zero_vector<K>(*pw);
    }
    r.tables["HH"] = hh.table.dims;
    r.tables["E"] = ext.table.dims;
    r.tables["phi_rank"] = ranks;
    r.tables["phi_kernel"] = kernels;
    r.clause("image_central", central);
    r.clause("kernel_nilpotent", nilpotent);
    auto les = augmentation_les(*hh.res);
    r.tables["augmentation_les"] = les.record.to_json();
    r.clause("augmentation_les_exact", les.composition_zero && les.record.exact());
    return r;
}

}  // namespace augalg
