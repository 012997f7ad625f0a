#pragma once

// Projective resolutions by free modules over a ring B (either an augmented
// algebra or the enveloping algebra of one). The differential d_n : P_n ->
// P_{n-1} is stored as the images of the generators of P_n, and the
// augmentation as the images of the generators of P_0 in the target.

#include <map>
#include <mutex>

#include "augalg/errors.hpp"
#include "augalg/module.hpp"

namespace augalg {

template <Field K>
struct Resolution {
    std::shared_ptr<const Algebra<K>> ring;
    std::shared_ptr<const Algebra<K>> base;  // Λ when ring is its enveloping algebra
    ModuleOver<K> target;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<int>> gen_degrees;  // empty per degree when ungraded
    std::vector<std::vector<std::string>> gen_labels;
    std::vector<Matrix<K>> diff;  // diff[n] for n >= 1; diff[0] is unused
    Matrix<K> augmentation;       // target.dim x ranks[0]
    bool small = false;
    std::string kind;
    // homotopy[n] = s_n on the left basis (g, (0, y)); only for bimodule resolutions
    std::vector<Matrix<K>> homotopy;

    const K& field() const { return ring->field(); }
    std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    std::size_t rank(std::size_t n) const { return ranks.at(n); }
    std::size_t term_dim(std::size_t n) const { return ranks.at(n) * ring->dim(); }
    bool bimodule() const { return base != nullptr; }

    /// k-linear matrix of d_n (n >= 1).
    std::shared_ptr<const Matrix<K>> diff_linear(std::size_t n) const {
        std::lock_guard lock(cache_->mu);
        auto& slot = cache_->linear[n];
        if (!slot) slot = std::make_shared<const Matrix<K>>(free_map_linear(*ring, diff.at(n)));
        return slot;
    }
    std::shared_ptr<const Factorization<K>> diff_factorization(std::size_t n) const {
        auto lin = diff_linear(n);
        std::lock_guard lock(cache_->mu);
        auto& slot = cache_->fact[n];
        if (!slot) slot = std::make_shared<const Factorization<K>>(*lin);
        return slot;
    }
    /// Drops cached linear data; call after editing diff in place.
    void invalidate_cache() { cache_ = std::make_shared<Cache>(); }

    Matrix<K> augmentation_linear() const { return free_to_module_linear(target, augmentation); }

    Vec<K> apply_diff(std::size_t n, const Vec<K>& v) const { return apply_free_map(*ring, diff.at(n), v); }
    Vec<K> apply_augmentation(const Vec<K>& v) const { return apply_free_to_module(target, augmentation, v); }

    /// Internal degree of a homogeneous element of P_n, or nullopt when
    /// ungraded or zero.
    std::optional<int> degree_of(std::size_t n, const Vec<K>& v) const {
        if (!ring->graded() || gen_degrees.size() <= n || gen_degrees[n].size() != ranks[n]) return std::nullopt;
        const std::size_t d = ring->dim();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i])) return gen_degrees[n][i / d] + ring->degrees()[i % d];
        return std::nullopt;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::size_t, std::shared_ptr<const Matrix<K>>> linear;
        std::map<std::size_t, std::shared_ptr<const Factorization<K>>> fact;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

namespace detail {

/// Degree of the first nonzero coordinate, given per-coordinate degrees.
template <Field K>
int leading_degree(const Vec<K>& v, const std::vector<int>& coord_degrees) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) return coord_degrees.empty() ? 0 : coord_degrees[i];
    return 0;
}

/// Lifts of a basis of S/(I·S) for a submodule S given by a spanning list.
/// `act(s, v)` multiplies v by the ring element s. Candidates are tried in
/// order of internal degree, so graded inputs give homogeneous generators.
template <Field K, class Act>
std::vector<Vec<K>> cover_generators(const K& k, std::size_t ambient, std::vector<Vec<K>> span,
                                     const std::vector<Vec<K>>& radical, Act act,
                                     const std::vector<int>& coord_degrees) {
    IncrementalBasis<K> basis(k, ambient);
    for (const auto& s : radical)
        for (const auto& v : span) basis.add(act(s, v));
    std::stable_sort(span.begin(), span.end(), [&](const Vec<K>& a, const Vec<K>& b) {
        return leading_degree<K>(a, coord_degrees) < leading_degree<K>(b, coord_degrees);
    });
    std::vector<Vec<K>> gens;
    for (auto& v : span)
        if (basis.add(v)) gens.push_back(std::move(v));
    return gens;
}

template <Field K>
std::vector<int> free_coord_degrees(const Algebra<K>& ring, const std::vector<int>& gen_deg) {
    if (!ring.graded() || gen_deg.empty()) return {};
    std::vector<int> out;
    for (int g : gen_deg)
        for (int b : ring.degrees()) out.push_back(g + b);
    return out;
}

template <Field K>
Vec<K> free_act(const Algebra<K>& ring, const Vec<K>& s, const Vec<K>& v) {
    Vec<K> out(v.size(), ring.field().zero());
    for (std::size_t b = 0; b < s.size(); ++b)
        if (!is_zero(s[b])) free_add_left_mul(ring, out, b, v, s[b]);
    return out;
}

template <Field K>
void require_local_adapted(const Algebra<K>& a, const char* what) {
    if (!a.is_adapted())
        throw PreconditionError(std::string(what) + ": basis is not adapted (unit first, rest in the augmentation ideal)");
    if (!is_local(a)) throw PreconditionError(std::string(what) + ": augmentation ideal is not nilpotent");
}

/// Continues a resolution whose P_0..P_n are known by covering kernels.
template <Field K>
void extend_minimal(Resolution<K>& res, std::size_t n_max, const std::vector<Vec<K>>& radical) {
    const Algebra<K>& ring = *res.ring;
    const K& k = ring.field();
    while (res.length() < n_max) {
        const std::size_t n = res.length();
        Matrix<K> lin = n == 0 ? res.augmentation_linear() : *res.diff_linear(n);
        auto kernel = kernel_basis(lin).vectors();
        auto coord_deg = free_coord_degrees(ring, res.gen_degrees[n]);
        auto gens = cover_generators<K>(
            k, lin.cols(), std::move(kernel), radical,
            [&](const Vec<K>& s, const Vec<K>& v) { return free_act(ring, s, v); }, coord_deg);
        std::vector<int> deg;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!coord_deg.empty()) deg.push_back(leading_degree<K>(gens[i], coord_deg));
            labels.push_back("g" + std::to_string(n + 1) + "_" + std::to_string(i));
        }
        res.diff.push_back(Matrix<K>::from_columns(k, lin.cols(), gens));
        res.ranks.push_back(gens.size());
        res.gen_degrees.push_back(std::move(deg));
        res.gen_labels.push_back(std::move(labels));
    }
}

}  // namespace detail

/// Lifts of a basis of M / I·M.
template <Field K>
std::vector<Vec<K>> minimal_generators(const ModuleOver<K>& m) {
    const Algebra<K>& ring = *m.ring;
    if (!is_local(ring)) throw PreconditionError("minimal_generators: augmentation ideal is not nilpotent");
    std::vector<Vec<K>> span;
    for (std::size_t i = 0; i < m.dim; ++i) {
        Vec<K> e(m.dim, ring.field().zero());
        e[i] = ring.field().one();
        span.push_back(std::move(e));
    }
    std::vector<int> coord_deg = ring.graded() ? m.degrees : std::vector<int>{};
    return detail::cover_generators<K>(
        ring.field(), m.dim, std::move(span), radical_generators(ring),
        [&](const Vec<K>& s, const Vec<K>& v) { return m.act(s, v); }, coord_deg);
}

template <Field K>
Resolution<K> resolution_from_cover(const ModuleOver<K>& m, std::size_t n_max, const std::string& kind) {
    const Algebra<K>& ring = *m.ring;
    const K& k = ring.field();
    auto gens = minimal_generators(m);
    Resolution<K> res;
    res.ring = m.ring;
    res.target = m;
    res.kind = kind;
    res.small = true;
    res.augmentation = Matrix<K>::from_columns(k, m.dim, gens);
    res.ranks = {gens.size()};
    res.diff.push_back(Matrix<K>(k, 0, 0));
    std::vector<int> deg;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (ring.graded() && !m.degrees.empty()) deg.push_back(detail::leading_degree<K>(gens[i], m.degrees));
        labels.push_back("g0_" + std::to_string(i));
    }
    res.gen_degrees.push_back(std::move(deg));
    res.gen_labels.push_back(std::move(labels));
    detail::extend_minimal(res, n_max, radical_generators(ring));
    return res;
}

/// Minimal resolution P_0..P_{n_max} of a module over a local adapted algebra.
template <Field K>
Resolution<K> minimal_resolution(const ModuleOver<K>& m, std::size_t n_max) {
    detail::require_local_adapted(*m.ring, "minimal_resolution");
    return resolution_from_cover(m, n_max, "minimal");
}

template <Field K>
Resolution<K> minimal_resolution(const Algebra<K>& a, std::size_t n_max) {
    auto ring = std::make_shared<const Algebra<K>>(a);
    return minimal_resolution(trivial_module(ring), n_max);
}

/// Minimal resolution of Λ as a module over its enveloping algebra.
template <Field K>
Resolution<K> minimal_bimodule_resolution(const Algebra<K>& a, std::size_t n_max) {
    detail::require_local_adapted(a, "minimal_bimodule_resolution");
    auto base = std::make_shared<const Algebra<K>>(a);
    auto env = std::make_shared<const Algebra<K>>(enveloping(a));
    auto res = resolution_from_cover(bimodule_regular(a, env), n_max, "minimal_bimodule");
    res.base = base;
    return res;
}

}  // namespace augalg
