#pragma once

// Finite-dimensional augmented algebras given by structure constants,
// together with ideals, centres, quotients and augmentation-preserving
// morphisms.

#include "augalg/matrix.hpp"
#include "augalg/report.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace augalg {

template <Field K>
class Algebra {
public:
    using E = Scalar<K>;
    struct Term {
        std::uint32_t index;
        E coeff;
    };

    Algebra() = default;
    Algebra(K k, std::vector<std::string> labels)
        : k_(k), labels_(std::move(labels)), unit_(labels_.size(), k.zero()),
          table_(labels_.size() * labels_.size()), aug_(labels_.size(), k.zero()) {}

    const K& field() const { return k_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec<K>& unit() const { return unit_; }
    const Vec<K>& aug() const { return aug_; }
    /// Internal degrees of the basis elements, empty when ungraded.
    const std::vector<int>& degrees() const { return degrees_; }
    bool graded() const { return !degrees_.empty(); }

    void set_unit(Vec<K> u) { unit_ = std::move(u); }
    void set_aug(Vec<K> a) { aug_ = std::move(a); }
    void set_degrees(std::vector<int> d) { degrees_ = std::move(d); }
    void set_product(std::size_t i, std::size_t j, const Vec<K>& v) {
        auto& t = table_[i * dim() + j];
        t.clear();
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!is_zero(v[c])) t.push_back({std::uint32_t(c), v[c]});
    }
    void add_product_term(std::size_t i, std::size_t j, std::size_t c, const E& coeff) {
        auto& t = table_[i * dim() + j];
        for (auto& term : t)
            if (term.index == c) {
                term.coeff += coeff;
                return;
            }
        if (!is_zero(coeff)) t.push_back({std::uint32_t(c), coeff});
    }

    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    Vec<K> basis_vector(std::size_t i) const {
        Vec<K> v(dim(), k_.zero());
        v[i] = k_.one();
        return v;
    }
    Vec<K> zero_vector() const { return Vec<K>(dim(), k_.zero()); }

    Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const {
        Vec<K> out(dim(), k_.zero());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_zero(a[i])) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (is_zero(b[j])) continue;
                E ab = a[i] * b[j];
                for (const auto& t : product(i, j)) out[t.index] += ab * t.coeff;
            }
        }
        return out;
    }
    /// Adds c * e_i * v to out.
    void add_left_basis_mul(Vec<K>& out, std::size_t i, const Vec<K>& v, const E& c) const {
        for (std::size_t j = 0; j < dim(); ++j) {
            if (is_zero(v[j])) continue;
            E cv = c * v[j];
            for (const auto& t : product(i, j)) out[t.index] += cv * t.coeff;
        }
    }
    void add_right_basis_mul(Vec<K>& out, const Vec<K>& v, std::size_t j, const E& c) const {
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_zero(v[i])) continue;
            E cv = c * v[i];
            for (const auto& t : product(i, j)) out[t.index] += cv * t.coeff;
        }
    }

    E epsilon(const Vec<K>& v) const {
        E s = k_.zero();
        for (std::size_t i = 0; i < dim(); ++i)
            if (!is_zero(v[i]) && !is_zero(aug_[i])) s += v[i] * aug_[i];
        return s;
    }

    /// Matrix of y -> x*y.
    Matrix<K> left_mul_matrix(const Vec<K>& x) const {
        Matrix<K> m(k_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(x, basis_vector(j)));
        return m;
    }
    /// Matrix of y -> y*x.
    Matrix<K> right_mul_matrix(const Vec<K>& x) const {
        Matrix<K> m(k_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(basis_vector(j), x));
        return m;
    }

    /// e_0 is the unit and every other basis element lies in the
    /// augmentation ideal. Most algorithms assume this.
    bool is_adapted() const {
        if (dim() == 0) return false;
        if (!(unit_ == basis_vector(0))) return false;
        return aug_ == basis_vector(0);
    }

    std::string describe(const Vec<K>& v) const {
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_zero(v[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + k_.to_string(v[i]) + ")" + labels_[i];
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        if (a.dim() != b.dim() || !(a.unit_ == b.unit_) || !(a.aug_ == b.aug_)) return false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Vec<K> x = a.mul(a.basis_vector(i), a.basis_vector(j));
                Vec<K> y = b.mul(b.basis_vector(i), b.basis_vector(j));
                if (!(x == y)) return false;
            }
        return true;
    }

private:
    K k_{};
    std::vector<std::string> labels_;
    Vec<K> unit_;
    std::vector<std::vector<Term>> table_;
    Vec<K> aug_;
    std::vector<int> degrees_;
};

// ---------------------------------------------------------------------------
// Axioms

template <Field K>
CheckReport check_axioms(const Algebra<K>& a) {
    CheckReport r("axioms");
    r.params["dim"] = a.dim();
    const std::size_t d = a.dim();
    if (d == 0 || a.unit().size() != d || a.aug().size() != d) {
        r.fail("shape", {{"reason", "empty algebra or unit/augmentation length mismatch"}});
        return r;
    }
    r.clause("shape", true);
    const K& k = a.field();
    std::vector<Vec<K>> prods(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prods[i * d + j] = a.mul(a.basis_vector(i), a.basis_vector(j));

    r.clause("associativity", true);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                Vec<K> left = a.mul(prods[i * d + j], a.basis_vector(l));
                Vec<K> right = a.mul(a.basis_vector(i), prods[j * d + l]);
                if (!(left == right))
                    r.fail("associativity", {{"triple", {a.labels()[i], a.labels()[j], a.labels()[l]}},
                                             {"left", a.describe(left)},
                                             {"right", a.describe(right)}});
            }
    r.clause("unit", true);
    for (std::size_t i = 0; i < d; ++i) {
        Vec<K> e = a.basis_vector(i);
        if (!(a.mul(a.unit(), e) == e) || !(a.mul(e, a.unit()) == e))
            r.fail("unit", {{"element", a.labels()[i]}});
    }
    r.clause("augmentation_unit", a.epsilon(a.unit()) == k.one());
    if (!(a.epsilon(a.unit()) == k.one()))
        r.witnesses.push_back({{"clause", "augmentation_unit"}, {"value", k.to_string(a.epsilon(a.unit()))}});
    r.clause("augmentation_multiplicative", true);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Scalar<K> lhs = a.epsilon(prods[i * d + j]);
            Scalar<K> rhs = a.aug()[i] * a.aug()[j];
            if (!(lhs == rhs))
                r.fail("augmentation_multiplicative", {{"pair", {a.labels()[i], a.labels()[j]}},
                                                       {"eps_product", k.to_string(lhs)},
                                                       {"product_eps", k.to_string(rhs)}});
        }
    return r;
}

// ---------------------------------------------------------------------------
// Basis changes

/// Rewrites the algebra in the basis given by the columns of `f` (old
/// coordinates of the new basis vectors).
template <Field K>
Algebra<K> change_basis(const Algebra<K>& a, const Matrix<K>& f, std::vector<std::string> labels) {
    const K& k = a.field();
    auto inv = solve(f, Matrix<K>::identity(k, a.dim()));
    if (!inv) throw std::invalid_argument("change_basis: matrix not invertible");
    Algebra<K> b(k, std::move(labels));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) b.set_product(i, j, *inv * a.mul(f.col(i), f.col(j)));
    b.set_unit(*inv * a.unit());
    Vec<K> aug(a.dim(), k.zero());
    for (std::size_t j = 0; j < a.dim(); ++j) aug[j] = a.epsilon(f.col(j));
    b.set_aug(aug);
    return b;
}

template <Field K>
struct AdaptedAlgebra {
    Algebra<K> algebra;
    Matrix<K> from_adapted;  // columns: adapted basis in original coordinates
    Matrix<K> to_adapted;
};

/// Basis {1, e_i - eps(e_i) 1 : i chosen greedily}.
template <Field K>
AdaptedAlgebra<K> adapted(const Algebra<K>& a) {
    const K& k = a.field();
    if (a.is_adapted()) {
        auto id = Matrix<K>::identity(k, a.dim());
        return {a, id, id};
    }
    std::vector<Vec<K>> cols{a.unit()};
    std::vector<std::string> labels{"1"};
    Subspace<K> span = Subspace<K>::span(k, a.dim(), cols);
    for (std::size_t i = 0; i < a.dim() && cols.size() < a.dim(); ++i) {
        Vec<K> v = a.basis_vector(i);
        Scalar<K> e = a.aug()[i];
        for (std::size_t c = 0; c < a.dim(); ++c) v[c] -= e * a.unit()[c];
        if (span.contains(v)) continue;
        cols.push_back(v);
        labels.push_back(a.labels()[i]);
        span = Subspace<K>::span(k, a.dim(), cols);
    }
    if (cols.size() != a.dim()) throw std::invalid_argument("adapted: augmentation does not split off the unit");
    Matrix<K> f = Matrix<K>::from_columns(k, a.dim(), cols);
    auto inv = solve(f, Matrix<K>::identity(k, a.dim()));
    return {change_basis(a, f, labels), f, *inv};
}

// ---------------------------------------------------------------------------
// Ideals and related subspaces

template <Field K>
Subspace<K> augmentation_ideal(const Algebra<K>& a) {
    return kernel_basis(Matrix<K>::from_rows(a.field(), a.dim(), {a.aug()}));
}

/// span{u v : u in U, v in V}.
template <Field K>
Subspace<K> product_space(const Algebra<K>& a, const Subspace<K>& u, const Subspace<K>& v) {
    std::vector<Vec<K>> vecs;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) vecs.push_back(a.mul(u.vector(i), v.vector(j)));
    return Subspace<K>::span(a.field(), a.dim(), vecs);
}

template <Field K>
Subspace<K> ideal_power(const Algebra<K>& a, std::size_t n) {
    Subspace<K> ideal = augmentation_ideal(a);
    if (n == 0) return Subspace<K>::full(a.field(), a.dim());
    Subspace<K> p = ideal;
    for (std::size_t i = 1; i < n && p.dim() > 0; ++i) p = product_space(a, p, ideal);
    return p;
}

/// Least N with I^N = 0, or nullopt if I is not nilpotent.
template <Field K>
std::optional<std::size_t> nilpotency_index(const Algebra<K>& a) {
    Subspace<K> ideal = augmentation_ideal(a);
    if (ideal.dim() == 0) return 1;
    Subspace<K> p = ideal;
    for (std::size_t n = 1; n <= a.dim() + 1; ++n) {
        if (p.dim() == 0) return n;
        p = product_space(a, p, ideal);
    }
    return std::nullopt;
}

template <Field K>
bool is_local(const Algebra<K>& a) {
    return nilpotency_index(a).has_value();
}

/// {g : g x = 0 = x g for all x in I}. Multiplying by the unit is the
/// identity, so only the augmentation ideal can annihilate anything.
template <Field K>
Subspace<K> annihilator(const Algebra<K>& a) {
    const std::size_t d = a.dim();
    auto ideal = augmentation_ideal(a).vectors();
    Matrix<K> m(a.field(), 2 * d * ideal.size(), d);
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        Matrix<K> r = a.right_mul_matrix(ideal[i]);
        Matrix<K> l = a.left_mul_matrix(ideal[i]);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                m(2 * d * i + x, y) = r(x, y);
                m(2 * d * i + d + x, y) = l(x, y);
            }
    }
    return kernel_basis(m);
}

template <Field K>
Subspace<K> center(const Algebra<K>& a) {
    const std::size_t d = a.dim();
    Matrix<K> m(a.field(), d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix<K> c = a.right_mul_matrix(a.basis_vector(i)) - a.left_mul_matrix(a.basis_vector(i));
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) m(d * i + x, y) = c(x, y);
    }
    return kernel_basis(m);
}

template <Field K>
bool is_two_sided_ideal(const Algebra<K>& a, const Subspace<K>& s) {
    for (std::size_t v = 0; v < s.dim(); ++v)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!s.contains(a.mul(a.basis_vector(i), s.vector(v)))) return false;
            if (!s.contains(a.mul(s.vector(v), a.basis_vector(i)))) return false;
        }
    return true;
}

/// Two-sided ideal generated by the given elements.
template <Field K>
Subspace<K> ideal_generated(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
    std::vector<Vec<K>> vecs;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec<K> left = a.mul(a.basis_vector(i), g);
            for (std::size_t j = 0; j < a.dim(); ++j) vecs.push_back(a.mul(left, a.basis_vector(j)));
        }
    return Subspace<K>::span(a.field(), a.dim(), vecs);
}

/// Lifts of a basis of I/I^2, chosen greedily from the basis of I.
template <Field K>
std::vector<Vec<K>> radical_generators(const Algebra<K>& a) {
    Subspace<K> ideal = augmentation_ideal(a);
    Subspace<K> acc = product_space(a, ideal, ideal);
    std::vector<Vec<K>> gens;
    std::vector<Vec<K>> candidates;
    if (a.is_adapted())
        for (std::size_t i = 1; i < a.dim(); ++i) candidates.push_back(a.basis_vector(i));
    else
        candidates = ideal.vectors();
    for (const auto& c : candidates) {
        if (acc.contains(c)) continue;
        gens.push_back(c);
        acc = subspace_sum(acc, Subspace<K>::span(a.field(), a.dim(), {c}));
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Enveloping algebra

/// A (x) A^op with basis pairs (i, j) at index i*d + j and product
/// (a (x) b)(c (x) d) = ac (x) db.
template <Field K>
Algebra<K> enveloping(const Algebra<K>& a) {
    const std::size_t d = a.dim();
    const K& k = a.field();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) labels.push_back(a.labels()[i] + "⊗" + a.labels()[j]);
    Algebra<K> e(k, labels);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) {
                    // (e_i (x) e_j)(e_p (x) e_q) = e_i e_p (x) e_q e_j
                    const auto& left = a.product(i, p);
                    const auto& right = a.product(q, j);
                    if (left.empty() || right.empty()) continue;
                    Vec<K> v(d * d, k.zero());
                    for (const auto& s : left)
                        for (const auto& t : right) v[s.index * d + t.index] += s.coeff * t.coeff;
                    e.set_product(i * d + j, p * d + q, v);
                }
    Vec<K> unit(d * d, k.zero()), aug(d * d, k.zero());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            unit[i * d + j] = a.unit()[i] * a.unit()[j];
            aug[i * d + j] = a.aug()[i] * a.aug()[j];
        }
    e.set_unit(unit);
    e.set_aug(aug);
    if (a.graded()) {
        std::vector<int> deg(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) deg[i * d + j] = a.degrees()[i] + a.degrees()[j];
        e.set_degrees(deg);
    }
    return e;
}

/// Simple tensor x (x) y as an element of the enveloping algebra.
template <Field K>
Vec<K> simple_tensor(const Algebra<K>& a, const Vec<K>& x, const Vec<K>& y) {
    const std::size_t d = a.dim();
    Vec<K> v(d * d, a.field().zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!is_zero(y[j])) v[i * d + j] = x[i] * y[j];
    }
    return v;
}

// ---------------------------------------------------------------------------
// Quotients

template <Field K>
struct Morphism {
    std::shared_ptr<const Algebra<K>> source;
    std::shared_ptr<const Algebra<K>> target;
    Matrix<K> matrix;  // target.dim x source.dim

    Vec<K> operator()(const Vec<K>& v) const { return matrix * v; }
};

template <Field K>
Morphism<K> make_morphism(const Algebra<K>& source, const Algebra<K>& target, Matrix<K> m) {
    if (m.rows() != target.dim() || m.cols() != source.dim())
        throw std::invalid_argument("morphism: matrix shape does not match algebras");
    return {std::make_shared<const Algebra<K>>(source), std::make_shared<const Algebra<K>>(target), std::move(m)};
}

template <Field K>
Morphism<K> identity_morphism(const Algebra<K>& a) {
    return make_morphism(a, a, Matrix<K>::identity(a.field(), a.dim()));
}

template <Field K>
CheckReport morphism_check(const Morphism<K>& f) {
    CheckReport r("morphism");
    const auto& s = *f.source;
    const auto& t = *f.target;
    const K& k = s.field();
    r.clause("unit", f(s.unit()) == t.unit());
    if (!(f(s.unit()) == t.unit())) r.witnesses.push_back({{"clause", "unit"}, {"image", t.describe(f(s.unit()))}});
    r.clause("multiplicative", true);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vec<K> lhs = f(s.mul(s.basis_vector(i), s.basis_vector(j)));
            Vec<K> rhs = t.mul(f.matrix.col(i), f.matrix.col(j));
            if (!(lhs == rhs))
                r.fail("multiplicative", {{"pair", {s.labels()[i], s.labels()[j]}},
                                          {"f(ab)", t.describe(lhs)},
                                          {"f(a)f(b)", t.describe(rhs)}});
        }
    r.clause("augmentation", true);
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!(t.epsilon(f.matrix.col(i)) == s.aug()[i]))
            r.fail("augmentation", {{"element", s.labels()[i]},
                                    {"eps_target(f)", k.to_string(t.epsilon(f.matrix.col(i)))},
                                    {"eps_source", k.to_string(s.aug()[i])}});
    return r;
}

/// g after f.
template <Field K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
    if (f.target->dim() != g.source->dim()) throw std::invalid_argument("compose: dimension mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

template <Field K>
struct QuotientResult {
    Algebra<K> algebra;
    Morphism<K> projection;
    std::vector<std::size_t> kept;  // original basis indices representing the quotient basis
};

/// A/J with basis the original basis elements at non-pivot positions of J.
template <Field K>
QuotientResult<K> quotient(const Algebra<K>& a, const Subspace<K>& j) {
    const K& k = a.field();
    std::vector<bool> pivot(a.dim(), false);
    for (auto p : j.pivots()) pivot[p] = true;
    std::vector<std::size_t> kept;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!pivot[i]) {
            kept.push_back(i);
            labels.push_back(a.labels()[i]);
        }
    auto project = [&](const Vec<K>& v) {
        Vec<K> r = j.reduce(v);
        Vec<K> out(kept.size(), k.zero());
        for (std::size_t t = 0; t < kept.size(); ++t) out[t] = r[kept[t]];
        return out;
    };
    Algebra<K> q(k, labels);
    for (std::size_t s = 0; s < kept.size(); ++s)
        for (std::size_t t = 0; t < kept.size(); ++t)
            q.set_product(s, t, project(a.mul(a.basis_vector(kept[s]), a.basis_vector(kept[t]))));
    q.set_unit(project(a.unit()));
    Vec<K> aug(kept.size(), k.zero());
    for (std::size_t t = 0; t < kept.size(); ++t) aug[t] = a.aug()[kept[t]];
    q.set_aug(aug);
    if (a.graded()) {
        std::vector<int> deg;
        for (auto i : kept) deg.push_back(a.degrees()[i]);
        q.set_degrees(deg);
    }
    Matrix<K> m(k, kept.size(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) m.set_col(i, project(a.basis_vector(i)));
    auto proj = make_morphism(a, q, m);
    return {std::move(q), std::move(proj), std::move(kept)};
}

// ---------------------------------------------------------------------------
// Small constructors used throughout

/// k[x]/x^r with basis 1, x, ..., x^{r-1}.
template <Field K>
Algebra<K> truncated_polynomial(K k, std::size_t r, const std::string& var = "x") {
    if (r == 0) throw std::invalid_argument("truncated_polynomial: r must be positive");
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < r; ++i) labels.push_back(i == 1 ? var : var + "^" + std::to_string(i));
    Algebra<K> a(k, labels);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; i + j < r; ++j) a.add_product_term(i, j, i + j, k.one());
    a.set_unit(a.basis_vector(0));
    a.set_aug(a.basis_vector(0));
    std::vector<int> deg(r);
    for (std::size_t i = 0; i < r; ++i) deg[i] = int(i);
    a.set_degrees(deg);
    return a;
}

/// k[x_1..x_n]/(x_1..x_n)^2.
template <Field K>
Algebra<K> rad_square_zero(K k, std::size_t n) {
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(n <= 3 ? std::string(1, "xyz"[i - 1]) : "x" + std::to_string(i));
    Algebra<K> a(k, labels);
    for (std::size_t i = 0; i <= n; ++i) {
        a.add_product_term(0, i, i, k.one());
        if (i) a.add_product_term(i, 0, i, k.one());
    }
    a.set_unit(a.basis_vector(0));
    a.set_aug(a.basis_vector(0));
    std::vector<int> deg(n + 1, 1);
    deg[0] = 0;
    a.set_degrees(deg);
    return a;
}

/// The ground field as a one-dimensional augmented algebra.
template <Field K>
Algebra<K> ground_algebra(K k) {
    return truncated_polynomial(k, 1);
}

}  // namespace augalg
