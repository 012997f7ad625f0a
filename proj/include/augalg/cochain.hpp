#pragma once

// Cochain complexes of finite-dimensional spaces, their cohomology with
// canonical representatives, and long exact sequences of short exact
// sequences of complexes.

#include "augalg/matrix.hpp"
#include "augalg/report.hpp"

namespace augalg {

/// Cohomology at one degree: Z = ker δ^n, B = im δ^{n-1}. Classes are
/// coordinates in C, the RREF span of the B-reductions of a basis of Z, so
/// two cocycles are cohomologous iff their coordinates agree.
template <Field K>
struct CohomologySpace {
    Subspace<K> cycles, boundaries, complement;

    std::size_t dim() const { return complement.dim(); }
    std::size_t ambient() const { return cycles.ambient_dim(); }
    Vec<K> representative(std::size_t i) const { return complement.vector(i); }
    Vec<K> coords(const Vec<K>& z) const { return complement.coordinates(boundaries.reduce(z)); }
    Vec<K> from_coords(const Vec<K>& c) const {
        Vec<K> v(ambient(), cycles.field().zero());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (is_zero(c[i])) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * complement.basis()(i, j);
        }
        return v;
    }
    bool is_cocycle(const Vec<K>& z) const { return cycles.contains(z); }
    bool is_coboundary(const Vec<K>& z) const { return boundaries.contains(z); }
};

template <Field K>
CohomologySpace<K> cohomology_from(const Matrix<K>& incoming, const Matrix<K>& outgoing) {
    CohomologySpace<K> h;
    h.cycles = kernel_basis(outgoing);
    h.boundaries = image(incoming);
    std::vector<Vec<K>> reduced;
    for (std::size_t i = 0; i < h.cycles.dim(); ++i) reduced.push_back(h.boundaries.reduce(h.cycles.vector(i)));
    h.complement = Subspace<K>::span(outgoing.field(), outgoing.cols(), reduced);
    return h;
}

/// C^0 -> C^1 -> ... with coboundary[n] : C^n -> C^{n+1}.
template <Field K>
struct CochainComplex {
    K k;
    std::vector<std::size_t> dims;
    std::vector<Matrix<K>> coboundary;  // coboundary.size() == dims.size() - 1

    std::size_t top() const { return dims.size() - 1; }

    /// Cohomology in degrees 0..top()-1 (the top degree has no outgoing map).
    std::vector<CohomologySpace<K>> cohomology() const {
        std::vector<CohomologySpace<K>> out;
        for (std::size_t n = 0; n < top(); ++n) {
            Matrix<K> in = n == 0 ? Matrix<K>(k, dims[0], 0) : coboundary[n - 1];
            out.push_back(cohomology_from(in, coboundary[n]));
        }
        return out;
    }
    bool squares_to_zero() const {
        for (std::size_t n = 0; n + 1 < coboundary.size(); ++n)
            if (!(coboundary[n + 1] * coboundary[n]).is_zero_matrix()) return false;
        return true;
    }
};

/// Matrix of a linear map between cohomology spaces induced by a cochain map.
template <Field K>
Matrix<K> induced_map(const CohomologySpace<K>& from, const CohomologySpace<K>& to, const Matrix<K>& f) {
    Matrix<K> m(f.field(), to.dim(), from.dim());
    for (std::size_t i = 0; i < from.dim(); ++i) m.set_col(i, to.coords(f * from.representative(i)));
    return m;
}

/// A long exact sequence H^0(A) -> H^0(B) -> H^0(C) -> H^1(A) -> ... stored
/// as nodes and the maps between consecutive nodes.
struct LESRecord {
    std::vector<std::string> nodes;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> map_ranks;  // map i goes from node i to node i+1
    std::vector<bool> exact_at;          // per node with both maps known
    bool exact() const { return std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; }); }
    Json to_json() const {
        Json j;
        j["nodes"] = nodes;
        j["dims"] = dims;
        j["map_ranks"] = map_ranks;
        j["exact_at"] = exact_at;
        j["exact"] = exact();
        return j;
    }
};

/// Cohomology data for 0 -> A -> B -> C -> 0 (cochain maps i, p per degree).
template <Field K>
struct LongExactSequence {
    std::vector<CohomologySpace<K>> ha, hb, hc;
    std::vector<Matrix<K>> i_star, p_star, connecting;  // connecting[n] : H^n(C) -> H^{n+1}(A)
    LESRecord record;
    bool composition_zero = true;
};

template <Field K>
Vec<K> connecting_image(const CochainComplex<K>& b, const Matrix<K>& i_next,
                        const Matrix<K>& p, std::size_t n, const Vec<K>& z) {
    auto x = solve(p, Matrix<K>::from_columns(p.field(), p.rows(), {z}));
    if (!x) throw std::runtime_error("connecting map: cochain map is not onto");
    Vec<K> dx = b.coboundary[n] * x->col(0);
    auto y = solve(i_next, Matrix<K>::from_columns(p.field(), dx.size(), {dx}));
    if (!y) throw std::runtime_error("connecting map: coboundary not in the image of i");
    return y->col(0);
}

/// Builds the long exact sequence in degrees 0..N where N = top()-1 of the
/// complexes; the connecting map out of H^N(C) needs A to reach N+1.
template <Field K>
LongExactSequence<K> long_exact_sequence(const CochainComplex<K>& a, const CochainComplex<K>& b,
                                         const CochainComplex<K>& c, const std::vector<Matrix<K>>& i,
                                         const std::vector<Matrix<K>>& p) {
    LongExactSequence<K> les;
    les.ha = a.cohomology();
    les.hb = b.cohomology();
    les.hc = c.cohomology();
    const std::size_t N = std::min({les.ha.size(), les.hb.size(), les.hc.size()});
    for (std::size_t n = 0; n < N; ++n) {
        les.composition_zero = les.composition_zero && (p[n] * i[n]).is_zero_matrix();
        les.i_star.push_back(induced_map(les.ha[n], les.hb[n], i[n]));
        les.p_star.push_back(induced_map(les.hb[n], les.hc[n], p[n]));
        if (n + 1 < N) {
            Matrix<K> w(a.k, les.ha[n + 1].dim(), les.hc[n].dim());
            for (std::size_t j = 0; j < les.hc[n].dim(); ++j)
                w.set_col(j, les.ha[n + 1].coords(
                                 connecting_image(b, i[n + 1], p[n], n, les.hc[n].representative(j))));
            les.connecting.push_back(std::move(w));
        }
    }
    auto& rec = les.record;
    std::vector<const Matrix<K>*> maps;
    for (std::size_t n = 0; n < N; ++n) {
        rec.nodes.push_back("H" + std::to_string(n) + "(A)");
        rec.nodes.push_back("H" + std::to_string(n) + "(B)");
        rec.nodes.push_back("H" + std::to_string(n) + "(C)");
        rec.dims.insert(rec.dims.end(), {les.ha[n].dim(), les.hb[n].dim(), les.hc[n].dim()});
        maps.push_back(&les.i_star[n]);
        maps.push_back(&les.p_star[n]);
        if (n < les.connecting.size()) maps.push_back(&les.connecting[n]);
    }
    for (auto* m : maps) rec.map_ranks.push_back(rank(*m));
    // node 0 has incoming zero; node j > 0 has incoming maps[j-1]
    for (std::size_t j = 0; j < maps.size(); ++j) {
        const std::size_t in = j == 0 ? 0 : rec.map_ranks[j - 1];
        const std::size_t ker_out = rec.dims[j] - rec.map_ranks[j];
        rec.exact_at.push_back(in == ker_out);
    }
    return les;
}

}  // namespace augalg
