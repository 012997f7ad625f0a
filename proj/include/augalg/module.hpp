#pragma once

// Left modules given by action matrices, and free modules over an algebra
// stored as coordinate vectors: a free module of rank r over B has elements
// of length r * dim B, with coordinate g*dimB + b holding the coefficient of
// e_b * (generator g). Module maps out of a free module are stored by the
// images of the generators.

#include "augalg/algebra.hpp"

namespace augalg {

template <Field K>
struct ModuleOver {
    std::shared_ptr<const Algebra<K>> ring;
    std::size_t dim = 0;
    std::vector<Matrix<K>> action;  // one dim x dim matrix per ring basis element
    std::vector<int> degrees;       // optional internal degrees of the module basis

    const K& field() const { return ring->field(); }

    Vec<K> act(std::size_t b, const Vec<K>& m) const { return action[b] * m; }
    Vec<K> act(const Vec<K>& x, const Vec<K>& m) const {
        Vec<K> out(dim, field().zero());
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (is_zero(x[b])) continue;
            Vec<K> y = action[b] * m;
            for (std::size_t i = 0; i < dim; ++i) out[i] += x[b] * y[i];
        }
        return out;
    }
};

template <Field K>
CheckReport module_check(const ModuleOver<K>& m) {
    CheckReport r("module");
    const auto& a = *m.ring;
    Matrix<K> unit_action(a.field(), m.dim, m.dim);
    for (std::size_t b = 0; b < a.dim(); ++b) {
        if (is_zero(a.unit()[b])) continue;
        Matrix<K> t = m.action[b];
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) unit_action(i, j) += a.unit()[b] * t(i, j);
    }
    r.clause("unit", unit_action == Matrix<K>::identity(a.field(), m.dim));
    r.clause("structure_constants", true);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Matrix<K> lhs = m.action[i] * m.action[j];
            Matrix<K> rhs(a.field(), m.dim, m.dim);
            for (const auto& t : a.product(i, j))
                for (std::size_t x = 0; x < m.dim; ++x)
                    for (std::size_t y = 0; y < m.dim; ++y) rhs(x, y) += t.coeff * m.action[t.index](x, y);
            if (!(lhs == rhs)) r.fail("structure_constants", {{"pair", {a.labels()[i], a.labels()[j]}}});
        }
    return r;
}

/// k with B acting through the augmentation.
template <Field K>
ModuleOver<K> trivial_module(std::shared_ptr<const Algebra<K>> ring) {
    ModuleOver<K> m{ring, 1, {}, {0}};
    for (std::size_t b = 0; b < ring->dim(); ++b) {
        Matrix<K> t(ring->field(), 1, 1);
        t(0, 0) = ring->aug()[b];
        m.action.push_back(t);
    }
    return m;
}

/// Λ as a module over Λ^e: (a ⊗ b) · x = a x b.
template <Field K>
ModuleOver<K> bimodule_regular(const Algebra<K>& base, std::shared_ptr<const Algebra<K>> env) {
    const std::size_t d = base.dim();
    ModuleOver<K> m{env, d, {}, base.degrees()};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix<K> t(base.field(), d, d);
            for (std::size_t x = 0; x < d; ++x) {
                Vec<K> y = base.mul(base.mul(base.basis_vector(i), base.basis_vector(x)), base.basis_vector(j));
                t.set_col(x, y);
            }
            m.action.push_back(std::move(t));
        }
    return m;
}

/// The submodule of a module spanned by a basis subset closed under the
/// action (e.g. I(Λ) inside Λ for an adapted basis), with its inclusion.
template <Field K>
ModuleOver<K> coordinate_submodule(const ModuleOver<K>& m, const std::vector<std::size_t>& coords) {
    ModuleOver<K> s{m.ring, coords.size(), {}, {}};
    for (const auto& t : m.action) {
        Matrix<K> r(m.field(), coords.size(), coords.size());
        for (std::size_t a = 0; a < coords.size(); ++a)
            for (std::size_t b = 0; b < coords.size(); ++b) r(a, b) = t(coords[a], coords[b]);
        s.action.push_back(std::move(r));
    }
    if (!m.degrees.empty())
        for (auto c : coords) s.degrees.push_back(m.degrees[c]);
    return s;
}

// ---------------------------------------------------------------------------
// Free modules

/// out += c * e_b * v for v in a free module of the given rank.
template <Field K>
void free_add_left_mul(const Algebra<K>& ring, Vec<K>& out, std::size_t b, const Vec<K>& v, const Scalar<K>& c) {
    const std::size_t d = ring.dim();
    const std::size_t rank = v.size() / d;
    for (std::size_t g = 0; g < rank; ++g) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto& x = v[g * d + j];
            if (is_zero(x)) continue;
            Scalar<K> cx = c * x;
            for (const auto& t : ring.product(b, j)) out[g * d + t.index] += cx * t.coeff;
        }
    }
}

template <Field K>
Vec<K> free_left_mul(const Algebra<K>& ring, std::size_t b, const Vec<K>& v) {
    Vec<K> out(v.size(), ring.field().zero());
    free_add_left_mul(ring, out, b, v, ring.field().one());
    return out;
}

/// Applies a map given by generator images (columns of `images`) to v.
template <Field K>
Vec<K> apply_free_map(const Algebra<K>& ring, const Matrix<K>& images, const Vec<K>& v) {
    const std::size_t d = ring.dim();
    Vec<K> out(images.rows(), ring.field().zero());
    for (std::size_t g = 0; g < images.cols(); ++g) {
        Vec<K> img;
        bool loaded = false;
        for (std::size_t b = 0; b < d; ++b) {
            const auto& c = v[g * d + b];
            if (is_zero(c)) continue;
            if (!loaded) {
                img = images.col(g);
                loaded = true;
            }
            free_add_left_mul(ring, out, b, img, c);
        }
    }
    return out;
}

/// Full k-linear matrix of a map of free modules given by generator images:
/// column (g, b) is e_b * image(g).
template <Field K>
Matrix<K> free_map_linear(const Algebra<K>& ring, const Matrix<K>& images) {
    const std::size_t d = ring.dim();
    Matrix<K> m(ring.field(), images.rows(), images.cols() * d);
    for (std::size_t g = 0; g < images.cols(); ++g) {
        Vec<K> img = images.col(g);
        for (std::size_t b = 0; b < d; ++b) m.set_col(g * d + b, free_left_mul(ring, b, img));
    }
    return m;
}

/// k-linear matrix of a module map from a free module to M given by
/// generator images in M: column (g, b) is ρ(e_b) image(g).
template <Field K>
Matrix<K> free_to_module_linear(const ModuleOver<K>& m, const Matrix<K>& images) {
    const std::size_t d = m.ring->dim();
    Matrix<K> out(m.field(), m.dim, images.cols() * d);
    for (std::size_t g = 0; g < images.cols(); ++g) {
        Vec<K> img = images.col(g);
        for (std::size_t b = 0; b < d; ++b) out.set_col(g * d + b, m.act(b, img));
    }
    return out;
}

/// Generator images of a module map free(rank) -> M evaluated on v.
template <Field K>
Vec<K> apply_free_to_module(const ModuleOver<K>& m, const Matrix<K>& images, const Vec<K>& v) {
    const std::size_t d = m.ring->dim();
    Vec<K> out(m.dim, m.field().zero());
    for (std::size_t g = 0; g < images.cols(); ++g)
        for (std::size_t b = 0; b < d; ++b) {
            const auto& c = v[g * d + b];
            if (is_zero(c)) continue;
            Vec<K> y = m.act(b, images.col(g));
            for (std::size_t i = 0; i < m.dim; ++i) out[i] += c * y[i];
        }
    return out;
}

}  // namespace augalg
