#pragma once

// The bar resolution, one-sided reduction of bimodule resolutions,
// exactness and smallness certificates, contracting homotopies and Ω.

#include "augalg/resolution.hpp"

namespace augalg {

/// Unnormalized bar resolution of Λ over Λ^e: B_n = Λ^e ⊗ Λ^{⊗n}, with
/// generators [a_1|...|a_n] indexed in mixed radix (a_1 most significant).
template <Field K>
Resolution<K> bar_resolution(const Algebra<K>& a, std::size_t n_max) {
    if (!a.is_adapted()) throw PreconditionError("bar_resolution: basis is not adapted");
    const std::size_t d = a.dim();
    const K& k = a.field();
    Resolution<K> res;
    res.base = std::make_shared<const Algebra<K>>(a);
    res.ring = std::make_shared<const Algebra<K>>(enveloping(a));
    res.target = bimodule_regular(a, res.ring);
    res.kind = "bar";
    res.augmentation = Matrix<K>(k, d, 1);
    res.augmentation.set_col(0, a.unit());
    res.diff.push_back(Matrix<K>(k, 0, 0));
    res.ranks.push_back(1);
    const std::size_t dd = d * d;
    auto word_degree = [&](const std::vector<std::size_t>& w) {
        int s = 0;
        for (auto x : w) s += a.degrees()[x];
        return s;
    };
    auto decode = [&](std::size_t idx, std::size_t n) {
        std::vector<std::size_t> w(n);
        for (std::size_t i = n; i-- > 0;) {
            w[i] = idx % d;
            idx /= d;
        }
        return w;
    };
    auto encode = [&](const std::vector<std::size_t>& w) {
        std::size_t idx = 0;
        for (auto x : w) idx = idx * d + x;
        return idx;
    };
    res.gen_degrees.push_back(a.graded() ? std::vector<int>{0} : std::vector<int>{});
    res.gen_labels.push_back({"[]"});
    std::size_t rank_prev = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t rank = rank_prev * d;
        Matrix<K> m(k, rank_prev * dd, rank);
        std::vector<int> deg;
        std::vector<std::string> labels;
        for (std::size_t g = 0; g < rank; ++g) {
            auto w = decode(g, n);
            if (a.graded()) deg.push_back(word_degree(w));
            std::string lab = "[";
            for (std::size_t i = 0; i < n; ++i) lab += (i ? "|" : "") + a.labels()[w[i]];
            labels.push_back(lab + "]");
            // (a_1 ⊗ 1)[a_2..a_n]
            std::vector<std::size_t> tail(w.begin() + 1, w.end());
            m(encode(tail) * dd + w[0] * d, g) += k.one();
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Scalar<K> sign = (i % 2 == 0) ? -k.one() : k.one();  // (-1)^{i+1}
                for (const auto& t : a.product(w[i], w[i + 1])) {
                    std::vector<std::size_t> v;
                    v.insert(v.end(), w.begin(), w.begin() + i);
                    v.push_back(t.index);
                    v.insert(v.end(), w.begin() + i + 2, w.end());
                    m(encode(v) * dd, g) += sign * t.coeff;
                }
            }
            std::vector<std::size_t> head(w.begin(), w.end() - 1);
            Scalar<K> sign = n % 2 == 0 ? k.one() : -k.one();
            m(encode(head) * dd + w[n - 1], g) += sign;
        }
        res.diff.push_back(std::move(m));
        res.ranks.push_back(rank);
        res.gen_degrees.push_back(std::move(deg));
        res.gen_labels.push_back(std::move(labels));
        rank_prev = rank;
    }
    return res;
}

/// P ⊗_Λ k for a bimodule resolution P of Λ: a one-sided resolution of k.
template <Field K>
Resolution<K> one_sided(const Resolution<K>& bi) {
    if (!bi.bimodule()) throw PreconditionError("one_sided: not a bimodule resolution");
    const Algebra<K>& a = *bi.base;
    const std::size_t d = a.dim();
    const K& k = a.field();
    Resolution<K> res;
    res.ring = bi.base;
    res.target = trivial_module(bi.base);
    res.ranks = bi.ranks;
    res.gen_degrees = bi.gen_degrees;
    res.gen_labels = bi.gen_labels;
    res.small = bi.small;
    res.kind = bi.kind + "_one_sided";
    auto reduce = [&](const Vec<K>& v) {
        Vec<K> out(v.size() / d, k.zero());
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (is_zero(v[c])) continue;
            const std::size_t g = c / (d * d), i = (c / d) % d, j = c % d;
            if (!is_zero(a.aug()[j])) out[g * d + i] += v[c] * a.aug()[j];
        }
        return out;
    };
    res.augmentation = Matrix<K>(k, 1, bi.ranks[0]);
    for (std::size_t g = 0; g < bi.ranks[0]; ++g) res.augmentation(0, g) = a.epsilon(bi.augmentation.col(g));
    res.diff.push_back(Matrix<K>(k, 0, 0));
    for (std::size_t n = 1; n < bi.diff.size(); ++n) {
        Matrix<K> m(k, bi.ranks[n - 1] * d, bi.ranks[n]);
        for (std::size_t g = 0; g < bi.ranks[n]; ++g) m.set_col(g, reduce(bi.diff[n].col(g)));
        res.diff.push_back(std::move(m));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Certificates

template <Field K>
struct ExactnessResult {
    bool dd_zero = true;
    bool augmentation_onto = true;
    std::vector<std::size_t> homology;  // degrees 0..length-1
    bool exact() const {
        return dd_zero && augmentation_onto &&
               std::all_of(homology.begin(), homology.end(), [](std::size_t h) { return h == 0; });
    }
};

/// Homology of P augmented by the target, by rank computations.
template <Field K>
ExactnessResult<K> verify_exact(const Resolution<K>& res) {
    ExactnessResult<K> out;
    Matrix<K> aug = res.augmentation_linear();
    out.augmentation_onto = rank(aug) == res.target.dim;
    Matrix<K> prev = aug;
    for (std::size_t n = 0; n < res.length(); ++n) {
        const Matrix<K>& next = *res.diff_linear(n + 1);
        Matrix<K> comp = prev * next;
        if (!comp.is_zero_matrix()) out.dd_zero = false;
        const std::size_t ker = prev.cols() - rank(prev);
        out.homology.push_back(ker - rank(next));
        prev = next;
    }
    return out;
}

/// im d_n ⊆ I·P_{n-1} for every stored degree (adapted ring: no unit coordinate).
template <Field K>
bool is_small(const Resolution<K>& res) {
    const std::size_t d = res.ring->dim();
    for (std::size_t n = 1; n < res.diff.size(); ++n) {
        const auto& m = res.diff[n];
        for (std::size_t g = 0; g < m.rows() / d; ++g)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!is_zero(m(g * d, c))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Contracting homotopy of a bimodule resolution, as left Λ-module maps

namespace detail {

/// Applies a left-Λ-linear map stored on the left basis (g, (0, y)) of a
/// Λ^e-free module to v. (e_i ⊗ e_j) g = (e_i ⊗ 1)·((1 ⊗ e_j) g).
template <Field K>
Vec<K> apply_left_linear(const Algebra<K>& base, const Algebra<K>& env, const Matrix<K>& s, const Vec<K>& v) {
    const std::size_t d = base.dim();
    Vec<K> out(s.rows(), base.field().zero());
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (is_zero(v[c])) continue;
        const std::size_t g = c / (d * d), i = (c / d) % d, j = c % d;
        free_add_left_mul(env, out, i * d, s.col(g * d + j), v[c]);
    }
    return out;
}

}  // namespace detail

/// s_{-1}(λ) = λ ⊗ 1 in P_0 = Λ^e.
template <Field K>
Vec<K> homotopy_minus_one(const Resolution<K>& res, const Vec<K>& lambda) {
    const std::size_t d = res.base->dim();
    Vec<K> out(d * d, res.field().zero());
    for (std::size_t i = 0; i < d; ++i) out[i * d] = lambda[i];
    return out;
}

template <Field K>
Vec<K> apply_homotopy(const Resolution<K>& res, std::size_t n, const Vec<K>& v) {
    return detail::apply_left_linear(*res.base, *res.ring, res.homotopy.at(n), v);
}

/// Solves for s_0..s_{length-1} with d s + s d = id and s_{-1}(λ) = λ ⊗ 1.
template <Field K>
void build_homotopy(Resolution<K>& res) {
    if (!res.bimodule()) throw PreconditionError("build_homotopy: not a bimodule resolution");
    const Algebra<K>& a = *res.base;
    const std::size_t d = a.dim();
    const K& k = a.field();
    if (res.ranks[0] != 1 || !(res.augmentation.col(0) == a.unit()))
        throw PreconditionError("build_homotopy: P_0 must be Λ^e with generator mapping to 1");
    res.homotopy.clear();
    for (std::size_t n = 0; n < res.length(); ++n) {
        auto fact = res.diff_factorization(n + 1);
        Matrix<K> s(k, res.term_dim(n + 1), res.ranks[n] * d);
        for (std::size_t g = 0; g < res.ranks[n]; ++g)
            for (std::size_t y = 0; y < d; ++y) {
                Vec<K> b(res.term_dim(n), k.zero());
                b[g * d * d + y] = k.one();  // (1 ⊗ e_y) g
                Vec<K> back = n == 0 ? homotopy_minus_one(res, res.apply_augmentation(b))
                                     : apply_homotopy(res, n - 1, res.apply_diff(n, b));
                for (std::size_t i = 0; i < b.size(); ++i) b[i] -= back[i];
                s.set_col(g * d + y, fact->solve_or_throw(b));
            }
        res.homotopy.push_back(std::move(s));
    }
}

/// d_{n+1} s_n + s_{n-1} d_n = id on P_n for every stored s_n.
template <Field K>
CheckReport homotopy_check(const Resolution<K>& res) {
    CheckReport r("homotopy");
    r.clause("identity", true);
    const K& k = res.field();
    for (std::size_t n = 0; n < res.homotopy.size(); ++n)
        for (std::size_t c = 0; c < res.term_dim(n); ++c) {
            Vec<K> b(res.term_dim(n), k.zero());
            b[c] = k.one();
            Vec<K> lhs = res.apply_diff(n + 1, apply_homotopy(res, n, b));
            Vec<K> back = n == 0 ? homotopy_minus_one(res, res.apply_augmentation(b))
                                 : apply_homotopy(res, n - 1, res.apply_diff(n, b));
            for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += back[i];
            if (!(lhs == b)) {
                r.fail("identity", {{"degree", n}, {"coordinate", c}});
                return r;
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Ω = ker(μ : Λ^e -> Λ)

template <Field K>
struct OmegaResult {
    Subspace<K> kernel;          // inside Λ^e
    ModuleOver<K> module;        // over Λ^e, in the RREF basis of `kernel`
    std::vector<Vec<K>> differences;  // s ⊗ 1 - 1 ⊗ s for radical generators s
    bool generated_by_differences = false;
};

template <Field K>
OmegaResult<K> omega_bimodule(const Algebra<K>& a) {
    if (!a.is_adapted()) throw PreconditionError("omega_bimodule: basis is not adapted");
    const std::size_t d = a.dim();
    const K& k = a.field();
    auto env = std::make_shared<const Algebra<K>>(enveloping(a));
    Matrix<K> mu(k, d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : a.product(i, j)) mu(t.index, i * d + j) += t.coeff;
    OmegaResult<K> out;
    out.kernel = kernel_basis(mu);
    out.module = ModuleOver<K>{env, out.kernel.dim(), {}, {}};
    for (std::size_t b = 0; b < d * d; ++b) {
        Matrix<K> act(k, out.kernel.dim(), out.kernel.dim());
        for (std::size_t v = 0; v < out.kernel.dim(); ++v)
            act.set_col(v, out.kernel.coordinates(env->mul(env->basis_vector(b), out.kernel.vector(v))));
        out.module.action.push_back(std::move(act));
    }
    if (a.graded())
        for (std::size_t v = 0; v < out.kernel.dim(); ++v)
            out.module.degrees.push_back(detail::leading_degree<K>(out.kernel.vector(v), env->degrees()));
    std::vector<Vec<K>> closure;
    for (const auto& s : radical_generators(a)) {
        Vec<K> diff = simple_tensor(a, s, a.unit());
        Vec<K> other = simple_tensor(a, a.unit(), s);
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= other[i];
        for (std::size_t b = 0; b < d * d; ++b) closure.push_back(env->mul(env->basis_vector(b), diff));
        out.differences.push_back(std::move(diff));
    }
    out.generated_by_differences = Subspace<K>::span(k, d * d, closure) == out.kernel;
    return out;
}

}  // namespace augalg
