#pragma once

// Fiber product Λ*Γ and truncated free product Λ⊔Γ of augmented algebras,
// the Chinese-remainder comparison and the product's universal property.

#include "augalg/graded.hpp"

#include <map>
#include <numeric>
#include <set>

namespace augalg {

/// Reorders the basis by label, keeping the unit first when adapted.
template <Field K>
Algebra<K> sorted_by_label(const Algebra<K>& a) {
    std::vector<std::size_t> order(a.dim());
    std::iota(order.begin(), order.end(), 0);
    auto first = a.is_adapted() ? order.begin() + 1 : order.begin();
    std::stable_sort(first, order.end(), [&](auto x, auto y) { return a.labels()[x] < a.labels()[y]; });
    Matrix<K> f(a.field(), a.dim(), a.dim());
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        f(order[c], c) = a.field().one();
        labels.push_back(a.labels()[order[c]]);
    }
    Algebra<K> b = change_basis(a, f, labels);
    if (a.graded()) {
        std::vector<int> deg;
        for (auto i : order) deg.push_back(a.degrees()[i]);
        b.set_degrees(deg);
    }
    return b;
}

template <Field K>
struct ProductResult {
    Algebra<K> algebra;
    Morphism<K> proj_left, proj_right;
    Morphism<K> incl_left, incl_right;  // λ ↦ (λ, ε(λ))
};

/// Λ*Γ = {(λ, γ) : ε(λ) = ε(γ)} with basis {1} ∪ I(Λ) ∪ I(Γ).
template <Field K>
ProductResult<K> product(const Algebra<K>& left, const Algebra<K>& right) {
    if (!(left.field() == right.field())) throw std::invalid_argument("product: field mismatch");
    const K& k = left.field();
    const Algebra<K> a = adapted(left).algebra, b = adapted(right).algebra;
    const std::size_t da = a.dim(), db = b.dim(), d = da + db - 1;
    std::set<std::string> seen(a.labels().begin() + 1, a.labels().end());
    std::vector<std::string> labels(a.labels().begin(), a.labels().end());
    for (std::size_t j = 1; j < db; ++j) {
        std::string l = b.labels()[j];
        while (seen.count(l)) l += "'";
        seen.insert(l);
        labels.push_back(l);
    }
    auto from_b = [&](std::size_t j) { return j == 0 ? 0 : da - 1 + j; };
    Algebra<K> p(k, labels);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (const auto& t : a.product(i, j)) p.add_product_term(i, j, t.index, t.coeff);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            if (i == 0 && j == 0) continue;
            for (const auto& t : b.product(i, j)) p.add_product_term(from_b(i), from_b(j), from_b(t.index), t.coeff);
        }
    p.set_unit(p.basis_vector(0));
    p.set_aug(p.basis_vector(0));
    if (a.graded() && b.graded()) {
        std::vector<int> deg(a.degrees());
        deg.insert(deg.end(), b.degrees().begin() + 1, b.degrees().end());
        p.set_degrees(deg);
    }
    Matrix<K> pl(k, da, d), pr(k, db, d), il(k, d, da), ir(k, d, db);
    pl(0, 0) = k.one();
    pr(0, 0) = k.one();
    il(0, 0) = k.one();
    ir(0, 0) = k.one();
    for (std::size_t i = 1; i < da; ++i) pl(i, i) = il(i, i) = k.one();
    for (std::size_t j = 1; j < db; ++j) pr(j, from_b(j)) = ir(from_b(j), j) = k.one();
    return {p, make_morphism(p, a, pl), make_morphism(p, b, pr), make_morphism(a, p, il), make_morphism(b, p, ir)};
}

template <Field K>
struct CoproductResult {
    GradedAlgebra<K> algebra;
    Morphism<K> incl_left, incl_right;
    /// Each basis word as (factor, letter) pairs; factor 0 = left, 1 = right.
    std::vector<std::vector<std::pair<int, std::size_t>>> words;
    bool internal_grading = false;
};

/// Free product truncated above weight `cutoff`. The weight of a letter is
/// its internal degree when both factors carry degrees, otherwise 1 (word
/// length). Either way the words above the cutoff span an ideal, so the
/// truncation is an honest algebra.
template <Field K>
CoproductResult<K> coproduct(const Algebra<K>& left, const Algebra<K>& right, int cutoff) {
    if (!(left.field() == right.field())) throw std::invalid_argument("coproduct: field mismatch");
    if (cutoff < 0) throw CutoffTooSmall("coproduct cutoff must be nonnegative");
    if (!is_local(left) || !is_local(right)) throw PreconditionError("coproduct: augmentation ideals must be nilpotent");
    const K& k = left.field();
    const Algebra<K> fac[2] = {adapted(left).algebra, adapted(right).algebra};
    const bool internal = fac[0].graded() && fac[1].graded();
    auto weight = [&](int side, std::size_t letter) { return internal ? fac[side].degrees()[letter] : 1; };
    for (int s = 0; s < 2; ++s)
        for (std::size_t l = 1; l < fac[s].dim(); ++l)
            if (weight(s, l) <= 0) throw PreconditionError("coproduct: letters must have positive degree");

    using Letter = std::pair<int, std::size_t>;
    using WordT = std::vector<Letter>;
    // Enumerate alternating words by weight.
    std::vector<std::vector<WordT>> by_weight(std::size_t(cutoff) + 1);
    by_weight[0].push_back({});
    std::vector<std::pair<WordT, int>> frontier{{{}, 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<WordT, int>> next;
        for (const auto& [w, wt] : frontier)
            for (int s = 0; s < 2; ++s) {
                if (!w.empty() && w.back().first == s) continue;
                for (std::size_t l = 1; l < fac[s].dim(); ++l) {
                    int nw = wt + weight(s, l);
                    if (nw > cutoff) continue;
                    WordT v = w;
                    v.push_back({s, l});
                    by_weight[std::size_t(nw)].push_back(v);
                    next.push_back({v, nw});
                }
            }
        frontier = std::move(next);
    }
    std::vector<WordT> basis;
    std::vector<int> degrees;
    std::map<WordT, std::size_t> index;
    for (std::size_t n = 0; n <= std::size_t(cutoff); ++n) {
        std::sort(by_weight[n].begin(), by_weight[n].end());
        for (auto& w : by_weight[n]) {
            index[w] = basis.size();
            basis.push_back(w);
            degrees.push_back(int(n));
        }
    }
    std::vector<std::string> labels;
    for (const auto& w : basis) {
        if (w.empty()) {
            labels.push_back("1");
            continue;
        }
        std::string s;
        for (const auto& [side, l] : w) s += fac[side].labels()[l];
        labels.push_back(s);
    }
    Algebra<K> c(k, labels);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const WordT& u = basis[i];
            const WordT& v = basis[j];
            if (u.empty() || v.empty() || u.back().first != v.front().first) {
                if (degrees[i] + degrees[j] > cutoff) continue;
                WordT w = u;
                w.insert(w.end(), v.begin(), v.end());
                c.add_product_term(i, j, index.at(w), k.one());
                continue;
            }
            // merge the adjacent letters inside their factor; the result lies in I
            int side = u.back().first;
            for (const auto& t : fac[side].product(u.back().second, v.front().second)) {
                WordT w(u.begin(), u.end() - 1);
                w.push_back({side, t.index});
                w.insert(w.end(), v.begin() + 1, v.end());
                auto it = index.find(w);
                if (it != index.end()) c.add_product_term(i, j, it->second, t.coeff);
            }
        }
    c.set_unit(c.basis_vector(0));
    c.set_aug(c.basis_vector(0));
    c.set_degrees(degrees);

    GradedAlgebra<K> g;
    g.cutoff = cutoff;
    for (int s = 0; s < 2; ++s) {
        Subspace<K> i2 = ideal_power(fac[s], 2);
        for (std::size_t l = 1; l < fac[s].dim(); ++l) {
            if (i2.contains(fac[s].basis_vector(l))) continue;
            auto it = index.find(WordT{{s, l}});
            if (it != index.end()) g.generators.push_back(it->second);
        }
    }
    std::sort(g.generators.begin(), g.generators.end());
    g.algebra = std::move(c);
    g.guard_band = std::max(1, g.max_generator_degree());

    Morphism<K> incl[2];
    for (int s = 0; s < 2; ++s) {
        Matrix<K> m(k, basis.size(), fac[s].dim());
        m(0, 0) = k.one();
        for (std::size_t l = 1; l < fac[s].dim(); ++l) {
            auto it = index.find(WordT{{s, l}});
            if (it != index.end()) m(it->second, l) = k.one();
        }
        incl[s] = make_morphism(fac[s], g.algebra, m);
    }
    return {std::move(g), incl[0], incl[1], std::move(basis), internal};
}

// ---------------------------------------------------------------------------
// Chinese remainder

/// For ideals I, J with I + J = I(Λ) and I ∩ J = IJ, exhibits the natural
/// map Λ/IJ → Λ/I * Λ/J and checks that it is an isomorphism of augmented
/// algebras.
template <Field K>
CheckReport chinese_remainder_check(const Algebra<K>& original, const Subspace<K>& i_orig, const Subspace<K>& j_orig) {
    CheckReport r("chinese-remainder");
    const K& k = original.field();
    auto ad = adapted(original);
    const Algebra<K>& a = ad.algebra;
    auto to_adapted = [&](const Subspace<K>& s) {
        std::vector<Vec<K>> v;
        for (const auto& x : s.vectors()) v.push_back(ad.to_adapted * x);
        return Subspace<K>::span(k, a.dim(), v);
    };
    const Subspace<K> I = to_adapted(i_orig), J = to_adapted(j_orig);
    if (!is_two_sided_ideal(a, I) || !is_two_sided_ideal(a, J))
        throw PreconditionError("chinese_remainder_check: inputs are not two-sided ideals");
    const Subspace<K> aug = augmentation_ideal(a);
    if (!aug.contains(I) || !aug.contains(J))
        throw PreconditionError("chinese_remainder_check: ideals must lie in the augmentation ideal");

    Subspace<K> ij = product_space(a, I, J);
    Subspace<K> sum = subspace_sum(I, J);
    Subspace<K> meet = subspace_intersection(I, J);
    r.tables["dims"] = {{"I", I.dim()}, {"J", J.dim()}, {"I+J", sum.dim()}, {"I∩J", meet.dim()}, {"IJ", ij.dim()}};
    bool hyp = sum == aug && meet == ij;
    if (!hyp) {
        r.fail("hypotheses", {{"reason", "hypotheses not met"},
                              {"I+J=I(A)", sum == aug},
                              {"I∩J=IJ", meet == ij}});
        return r;
    }
    r.clause("hypotheses", true);

    auto lhs = quotient(a, ij);
    auto qi = quotient(a, I);
    auto qj = quotient(a, J);
    auto prod = product(qi.algebra, qj.algebra);
    const std::size_t di = qi.algebra.dim();
    Matrix<K> m(k, prod.algebra.dim(), lhs.algebra.dim());
    for (std::size_t t = 0; t < lhs.kept.size(); ++t) {
        Vec<K> lambda = a.basis_vector(lhs.kept[t]);
        Vec<K> x = qi.projection(lambda), y = qj.projection(lambda);
        m(0, t) = a.epsilon(lambda);
        for (std::size_t s = 1; s < x.size(); ++s) m(s, t) = x[s];
        for (std::size_t s = 1; s < y.size(); ++s) m(di - 1 + s, t) = y[s];
    }
    auto phi = make_morphism(lhs.algebra, prod.algebra, m);
    r.tables["dims"]["A/IJ"] = lhs.algebra.dim();
    r.tables["dims"]["A/I * A/J"] = prod.algebra.dim();
    r.absorb("natural_map", morphism_check(phi));
    bool iso = m.rows() == m.cols() && rank(m) == m.rows();
    r.clause("bijective", iso);
    if (!iso) r.witnesses.push_back({{"clause", "bijective"}, {"rank", rank(m)}, {"rows", m.rows()}, {"cols", m.cols()}});
    return r;
}

/// Universal property of Λ*Γ for test morphisms f: Θ → Λ and g: Θ → Γ
/// (targets in adapted form): (f, g) exists, is a morphism, satisfies both
/// projection identities, and is the unique linear solution.
template <Field K>
CheckReport product_universal_check(const Morphism<K>& f, const Morphism<K>& g) {
    CheckReport r("product-universal");
    const K& k = f.source->field();
    if (!f.target->is_adapted() || !g.target->is_adapted())
        throw PreconditionError("product_universal_check: targets must be adapted");
    auto pr = product(*f.target, *g.target);
    const Algebra<K>& theta = *f.source;
    const std::size_t da = f.target->dim(), dp = pr.algebra.dim();
    Matrix<K> m(k, dp, theta.dim());
    for (std::size_t c = 0; c < theta.dim(); ++c) {
        Vec<K> x = f.matrix.col(c), y = g.matrix.col(c);
        m(0, c) = theta.aug()[c];
        for (std::size_t s = 1; s < da; ++s) m(s, c) = x[s];
        for (std::size_t s = 1; s < y.size(); ++s) m(da - 1 + s, c) = y[s];
    }
    auto fg = make_morphism(theta, pr.algebra, m);
    r.absorb("induced", morphism_check(fg));
    r.clause("left_projection", compose(pr.proj_left, fg).matrix == f.matrix);
    r.clause("right_projection", compose(pr.proj_right, fg).matrix == g.matrix);
    // uniqueness: the stacked projections are injective on the product
    r.clause("unique", rank(vconcat(pr.proj_left.matrix, pr.proj_right.matrix)) == dp);
    return r;
}

}  // namespace augalg
