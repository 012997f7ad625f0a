#pragma once

// Truncated graded-connected algebras, presentations by generators and
// homogeneous relations, and graded centres.

#include "augalg/algebra.hpp"
#include "augalg/errors.hpp"

#include <algorithm>
#include <map>

namespace augalg {

/// A graded-connected algebra cut off above degree `cutoff`. The quotient by
/// everything above the cutoff is a genuine algebra, but ideal-theoretic
/// answers are only reliable up to `trusted()`.
template <Field K>
struct GradedAlgebra {
    Algebra<K> algebra;  // adapted, with degrees set
    int cutoff = 0;
    int guard_band = 0;
    std::vector<std::size_t> generators;  // basis indices generating the algebra

    int trusted() const { return cutoff - guard_band; }
    const K& field() const { return algebra.field(); }

    std::vector<std::size_t> component(int n) const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < algebra.dim(); ++i)
            if (algebra.degrees()[i] == n) idx.push_back(i);
        return idx;
    }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d(std::size_t(cutoff) + 1, 0);
        for (int deg : algebra.degrees()) ++d[std::size_t(deg)];
        return d;
    }
    int max_generator_degree() const {
        int m = 0;
        for (auto g : generators) m = std::max(m, algebra.degrees()[g]);
        return m;
    }
};

using Word = std::vector<int>;

template <Field K>
struct Presentation {
    struct Generator {
        std::string name;
        int degree;
    };
    using Polynomial = std::vector<std::pair<Scalar<K>, Word>>;

    K field{};
    std::vector<Generator> generators;
    std::vector<Polynomial> relations;
    int cutoff = 0;

    int word_degree(const Word& w) const {
        int d = 0;
        for (int g : w) d += generators.at(std::size_t(g)).degree;
        return d;
    }
    std::string word_label(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (int g : w) s += generators[std::size_t(g)].name;
        return s;
    }
};

namespace detail {

/// Words of each degree 0..cutoff in lexicographic order of generator indices.
template <Field K>
std::vector<std::vector<Word>> words_by_degree(const Presentation<K>& p) {
    std::vector<std::vector<Word>> out(std::size_t(p.cutoff) + 1);
    out[0].push_back({});
    for (int n = 1; n <= p.cutoff; ++n) {
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            int dg = p.generators[g].degree;
            if (dg > n) continue;
            for (const auto& w : out[std::size_t(n - dg)]) {
                Word v{int(g)};
                v.insert(v.end(), w.begin(), w.end());
                out[std::size_t(n)].push_back(std::move(v));
            }
        }
        std::sort(out[std::size_t(n)].begin(), out[std::size_t(n)].end());
    }
    return out;
}

}  // namespace detail

/// Degree by degree quotient of the free algebra by the ideal slice
/// spanned by u r v. Normal words are the lexicographically least words
/// completing a basis of the ideal slice.
template <Field K>
GradedAlgebra<K> from_presentation(const Presentation<K>& p) {
    const K& k = p.field;
    if (p.cutoff < 0) throw CutoffTooSmall("cutoff must be nonnegative");
    for (const auto& g : p.generators)
        if (g.degree <= 0) throw MalformedInput("generator '" + g.name + "' must have positive degree");
    std::vector<int> rel_degree;
    for (const auto& r : p.relations) {
        int d = -1;
        for (const auto& [c, w] : r) {
            if (is_zero(c)) continue;
            for (int g : w)
                if (g < 0 || std::size_t(g) >= p.generators.size()) throw MalformedInput("relation uses unknown generator");
            int dw = p.word_degree(w);
            if (d >= 0 && dw != d) throw MalformedInput("inhomogeneous relation");
            d = dw;
        }
        if (d == 0) throw MalformedInput("relation of degree zero");
        if (d > p.cutoff) throw CutoffTooSmall("cutoff " + std::to_string(p.cutoff) + " below relation degree " + std::to_string(d));
        rel_degree.push_back(d);
    }

    auto words = detail::words_by_degree(p);
    const std::size_t top = std::size_t(p.cutoff);
    // Column c of degree n corresponds to words[n][size-1-c] so that RREF
    // pivots fall on the lexicographically greatest words.
    std::vector<std::map<Word, std::size_t>> col_of(top + 1);
    for (std::size_t n = 0; n <= top; ++n)
        for (std::size_t i = 0; i < words[n].size(); ++i) col_of[n][words[n][i]] = words[n].size() - 1 - i;

    std::vector<Subspace<K>> ideal(top + 1);
    ideal[0] = Subspace<K>(k, 1);
    for (std::size_t n = 1; n <= top; ++n) {
        const std::size_t cols = words[n].size();
        std::vector<Vec<K>> rows;
        auto word_at = [&](std::size_t deg, std::size_t col) -> const Word& {
            return words[deg][words[deg].size() - 1 - col];
        };
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            int dg = p.generators[g].degree;
            if (std::size_t(dg) > n) continue;
            const std::size_t m = n - std::size_t(dg);
            for (std::size_t b = 0; b < ideal[m].dim(); ++b) {
                Vec<K> left(cols, k.zero()), right(cols, k.zero());
                for (std::size_t c = 0; c < words[m].size(); ++c) {
                    const auto& coeff = ideal[m].basis()(b, c);
                    if (is_zero(coeff)) continue;
                    const Word& w = word_at(m, c);
                    Word gw{int(g)};
                    gw.insert(gw.end(), w.begin(), w.end());
                    Word wg = w;
                    wg.push_back(int(g));
                    left[col_of[n][gw]] += coeff;
                    right[col_of[n][wg]] += coeff;
                }
                rows.push_back(std::move(left));
                rows.push_back(std::move(right));
            }
        }
        for (std::size_t r = 0; r < p.relations.size(); ++r) {
            if (std::size_t(rel_degree[r]) != n) continue;
            Vec<K> v(cols, k.zero());
            for (const auto& [c, w] : p.relations[r]) v[col_of[n][w]] += c;
            rows.push_back(std::move(v));
        }
        ideal[n] = rows.empty() ? Subspace<K>(k, cols) : Subspace<K>::span(k, cols, rows);
    }

    // Normal words: non-pivot columns, listed in ascending lex order.
    std::vector<std::pair<std::size_t, Word>> basis;  // (degree, word)
    std::vector<std::map<Word, std::size_t>> index_of(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<bool> piv(words[n].size(), false);
        for (auto c : ideal[n].pivots()) piv[c] = true;
        for (std::size_t i = 0; i < words[n].size(); ++i) {
            std::size_t c = words[n].size() - 1 - i;
            if (piv[c]) continue;
            index_of[n][words[n][i]] = basis.size();
            basis.push_back({n, words[n][i]});
        }
    }
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<std::size_t> gens;
    for (const auto& [n, w] : basis) {
        labels.push_back(p.word_label(w));
        degrees.push_back(int(n));
    }
    Algebra<K> a(k, labels);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::size_t n = basis[i].first + basis[j].first;
            if (n > top) continue;
            Word w = basis[i].second;
            w.insert(w.end(), basis[j].second.begin(), basis[j].second.end());
            Vec<K> v(words[n].size(), k.zero());
            v[col_of[n][w]] = k.one();
            v = ideal[n].reduce(std::move(v));
            for (std::size_t c = 0; c < v.size(); ++c) {
                if (is_zero(v[c])) continue;
                const Word& nw = words[n][words[n].size() - 1 - c];
                a.add_product_term(i, j, index_of[n].at(nw), v[c]);
            }
        }
    a.set_unit(a.basis_vector(0));
    a.set_aug(a.basis_vector(0));
    a.set_degrees(degrees);
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        std::size_t n = std::size_t(p.generators[g].degree);
        if (n > top) continue;
        auto it = index_of[n].find(Word{int(g)});
        if (it != index_of[n].end()) gens.push_back(it->second);
    }
    int guard = 0;
    for (const auto& g : p.generators) guard = std::max(guard, g.degree);
    return {std::move(a), p.cutoff, guard, std::move(gens)};
}

/// Per-degree solutions of z g = sign * g z for all generators g, in the
/// coordinates of component(n). With `graded_signs` the sign is
/// (-1)^{|z||g|}; otherwise it is +1 (ordinary centre). Degrees above
/// trusted() are omitted because truncation drops the relevant products.
template <Field K>
std::vector<Subspace<K>> graded_center(const GradedAlgebra<K>& ga, bool graded_signs = true) {
    const auto& a = ga.algebra;
    const K& k = a.field();
    std::vector<Subspace<K>> out;
    for (int n = 0; n <= ga.trusted(); ++n) {
        auto comp = ga.component(n);
        Matrix<K> m(k, a.dim() * ga.generators.size(), comp.size());
        for (std::size_t c = 0; c < comp.size(); ++c) {
            Vec<K> z = a.basis_vector(comp[c]);
            for (std::size_t t = 0; t < ga.generators.size(); ++t) {
                std::size_t g = ga.generators[t];
                Vec<K> gv = a.basis_vector(g);
                Vec<K> zg = a.mul(z, gv), gz = a.mul(gv, z);
                bool odd = graded_signs && (n * a.degrees()[g]) % 2 != 0;
                for (std::size_t r = 0; r < a.dim(); ++r) m(t * a.dim() + r, c) = odd ? Scalar<K>(zg[r] + gz[r]) : Scalar<K>(zg[r] - gz[r]);
            }
        }
        out.push_back(kernel_basis(m));
    }
    return out;
}

/// Per-degree annihilator {g : g x = 0 = x g for generators x}, trusted degrees.
template <Field K>
std::vector<Subspace<K>> graded_annihilator(const GradedAlgebra<K>& ga) {
    const auto& a = ga.algebra;
    std::vector<Subspace<K>> out;
    for (int n = 0; n <= ga.trusted(); ++n) {
        auto comp = ga.component(n);
        Matrix<K> m(a.field(), 2 * a.dim() * ga.generators.size(), comp.size());
        for (std::size_t c = 0; c < comp.size(); ++c) {
            Vec<K> z = a.basis_vector(comp[c]);
            for (std::size_t t = 0; t < ga.generators.size(); ++t) {
                Vec<K> gv = a.basis_vector(ga.generators[t]);
                Vec<K> zg = a.mul(z, gv), gz = a.mul(gv, z);
                for (std::size_t r = 0; r < a.dim(); ++r) {
                    m(2 * t * a.dim() + r, c) = zg[r];
                    m((2 * t + 1) * a.dim() + r, c) = gz[r];
                }
            }
        }
        out.push_back(kernel_basis(m));
    }
    return out;
}

/// Views an adapted algebra carrying degrees (e.g. k[x]/x^r) as a
/// GradedAlgebra. Generators are the basis elements of I outside I^2, which
/// is correct for monomial bases.
template <Field K>
GradedAlgebra<K> as_graded(const Algebra<K>& a, int guard_band = -1) {
    if (!a.graded() || !a.is_adapted()) throw PreconditionError("as_graded: algebra must be adapted and carry degrees");
    GradedAlgebra<K> g;
    g.algebra = a;
    g.cutoff = *std::max_element(a.degrees().begin(), a.degrees().end());
    Subspace<K> i2 = ideal_power(a, 2);
    for (std::size_t i = 1; i < a.dim(); ++i)
        if (!i2.contains(a.basis_vector(i))) g.generators.push_back(i);
    g.guard_band = guard_band >= 0 ? guard_band : g.max_generator_degree();
    return g;
}

}  // namespace augalg
