#pragma once

// The bimodule resolution P⊔Q of Δ = Λ*Γ built from small bimodule
// resolutions P of Λ and Q of Γ. In degree n it is the sum over alternating
// compositions (side_1, m_1), ..., (side_N, m_N) of n of Δ^e-free modules
// on tuples (g_1, ..., g_N) of factor generators, g_i a generator of
// P_{m_i} or Q_{m_i}. Degree zero is Δ^e itself.

#include "augalg/constructions.hpp"
#include "augalg/resolution_ops.hpp"

namespace augalg {

enum class Side : int { P = 0, Q = 1 };

struct Piece {
    Side side;
    std::size_t degree;
    friend bool operator==(const Piece&, const Piece&) = default;
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

using Composition = std::vector<Piece>;

/// One summand of (P⊔Q)_n: its generators occupy [offset, offset + count).
struct PsqBlock {
    Composition pieces;
    std::size_t offset = 0;
    std::size_t count = 0;
    std::vector<std::size_t> radix;  // factor ranks per piece
};

template <Field K>
struct PsqResolution {
    ProductResult<K> product;
    Resolution<K> left, right;  // factor resolutions, with homotopies
    Resolution<K> res;          // over enveloping(Δ), homotopy = σ
    std::vector<std::vector<PsqBlock>> blocks;
    std::vector<std::map<Composition, std::size_t>> block_index;

    std::size_t da() const { return left.base->dim(); }
    std::size_t db() const { return right.base->dim(); }
    std::size_t delta_index(Side s, std::size_t i) const {
        return s == Side::P || i == 0 ? i : da() - 1 + i;
    }
    const Resolution<K>& factor(Side s) const { return s == Side::P ? left : right; }

    std::vector<std::size_t> decode(const PsqBlock& b, std::size_t g) const {
        std::vector<std::size_t> t(b.radix.size());
        std::size_t x = g - b.offset;
        for (std::size_t i = b.radix.size(); i-- > 0;) {
            t[i] = x % b.radix[i];
            x /= b.radix[i];
        }
        return t;
    }
    std::size_t encode(std::size_t n, const Composition& c, const std::vector<std::size_t>& t) const {
        const auto& b = blocks[n][block_index[n].at(c)];
        std::size_t x = 0;
        for (std::size_t i = 0; i < t.size(); ++i) x = x * b.radix[i] + t[i];
        return b.offset + x;
    }
    /// The block holding generator g of degree n.
    const PsqBlock& block_of(std::size_t n, std::size_t g) const {
        for (const auto& b : blocks[n])
            if (g >= b.offset && g < b.offset + b.count) return b;
        throw std::out_of_range("psq generator");
    }
};

namespace detail {

inline void enumerate_compositions(std::size_t n, Side next, Composition& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t m = 1; m <= n; ++m) {
        cur.push_back({next, m});
        enumerate_compositions(n - m, next == Side::P ? Side::Q : Side::P, cur, out);
        cur.pop_back();
    }
}

inline std::string piece_name(const Piece& p) { return (p.side == Side::P ? "P" : "Q") + std::to_string(p.degree); }

}  // namespace detail

/// Alternating compositions of n, each starting with either side.
inline std::vector<Composition> alternating_compositions(std::size_t n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition{}};
    Composition cur;
    detail::enumerate_compositions(n, Side::P, cur, out);
    detail::enumerate_compositions(n, Side::Q, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Accumulates c·(a ⊗ b)·G into a Δ^e-free vector (a, b given in Δ indices).
template <Field K>
void add_term(Vec<K>& out, std::size_t dd, std::size_t g, std::size_t a, std::size_t b, const Scalar<K>& c) {
    out[g * dd * dd + a * dd + b] += c;
}

template <Field K>
class PsqBuilder {
public:
    const PsqResolution<K>& ps;
    const K& k;
    std::size_t dd;

    explicit PsqBuilder(const PsqResolution<K>& p) : ps(p), k(p.left.field()), dd(p.product.algebra.dim()) {}

    std::size_t rank(std::size_t n) const { return ps.res.ranks[n]; }

    /// Factor element v (Λ^e or Γ^e coordinates over the factor's P_m) mapped
    /// into the block `target` of degree n, with each coefficient (x ⊗ y)
    /// turned into `coef(x, y)` ⊗ pattern: mode 0 keeps both factors, mode 1
    /// keeps x and applies ε to y, mode 2 applies ε to x and keeps y.
    void place(Vec<K>& out, Side side, const Vec<K>& v, std::size_t n, const Composition& target,
               const std::vector<std::size_t>& prefix, bool at_end, int mode, const Scalar<K>& sign) {
        const Resolution<K>& f = ps.factor(side);
        const Algebra<K>& base = *f.base;
        const std::size_t d = base.dim();
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (is_zero(v[c])) continue;
            const std::size_t h = c / (d * d), x = (c / d) % d, y = c % d;
            std::size_t a = ps.delta_index(side, x), b = ps.delta_index(side, y);
            Scalar<K> coeff = sign * v[c];
            if (mode == 1) {
                if (is_zero(base.aug()[y])) continue;
                coeff *= base.aug()[y];
                b = 0;
            } else if (mode == 2) {
                if (is_zero(base.aug()[x])) continue;
                coeff *= base.aug()[x];
                a = 0;
            }
            std::size_t g;
            if (target.empty()) {
                g = 0;
            } else {
                std::vector<std::size_t> t = prefix;
                if (at_end)
                    t.push_back(h);
                else
                    t.insert(t.begin(), h);
                // a dropped degree-0 piece contributes no generator index
                if (t.size() > target.size()) {
                    if (at_end)
                        t.pop_back();
                    else
                        t.erase(t.begin());
                }
                g = ps.encode(n, target, t);
            }
            add_term<K>(out, dd, g, a, b, coeff);
        }
    }

    Vec<K> differential(std::size_t n, const PsqBlock& blk, const std::vector<std::size_t>& t) {
        Vec<K> out(rank(n - 1) * dd * dd, k.zero());
        const auto& pieces = blk.pieces;
        const std::size_t N = pieces.size();
        auto factor_diff = [&](std::size_t i) {
            const Resolution<K>& f = ps.factor(pieces[i].side);
            return f.diff[pieces[i].degree].col(t[i]);
        };
        if (N == 1) {
            Composition target;
            if (pieces[0].degree > 1) target = {{pieces[0].side, pieces[0].degree - 1}};
            place(out, pieces[0].side, factor_diff(0), n - 1, target, {}, true, 0, k.one());
            return out;
        }
        {   // d on the first piece, ε applied on its right
            Composition target(pieces.begin() + 1, pieces.end());
            if (pieces[0].degree > 1) target.insert(target.begin(), {pieces[0].side, pieces[0].degree - 1});
            std::vector<std::size_t> rest(t.begin() + 1, t.end());
            place(out, pieces[0].side, factor_diff(0), n - 1, target, rest, false, 1, k.one());
        }
        {   // d on the last piece, ε applied on its left, Koszul sign
            Composition target(pieces.begin(), pieces.end() - 1);
            if (pieces[N - 1].degree > 1) target.push_back({pieces[N - 1].side, pieces[N - 1].degree - 1});
            std::vector<std::size_t> rest(t.begin(), t.end() - 1);
            const std::size_t before = n - pieces[N - 1].degree;
            place(out, pieces[N - 1].side, factor_diff(N - 1), n - 1, target, rest, true, 2,
                  before % 2 == 0 ? k.one() : -k.one());
        }
        return out;
    }

    /// σ_n on the left basis element (1 ⊗ w)·G with G in block blk.
    Vec<K> sigma(std::size_t n, const PsqBlock* blk, const std::vector<std::size_t>& t, std::size_t w) {
        Vec<K> out(rank(n + 1) * dd * dd, k.zero());
        const std::size_t da = ps.da();
        // w lies in the Λ-part (1 or I(Λ)) or in I(Γ)
        const Side w_side = w < da ? Side::P : Side::Q;
        const std::size_t w_local = w < da ? w : w - da + 1;
        if (blk == nullptr) {  // degree 0: σ_0(1 ⊗ w) = s_0 or t_0 with full coefficients
            const Resolution<K>& f = ps.factor(w_side);
            Vec<K> s = f.homotopy.at(0).col(w_local);
            place(out, w_side, s, 1, {{w_side, 1}}, {}, true, 0, k.one());
            return out;
        }
        const auto& pieces = blk->pieces;
        const Piece last = pieces.back();
        const std::size_t prefix_deg = n - last.degree;
        const Scalar<K> prefix_sign = prefix_deg % 2 == 0 ? k.one() : -k.one();
        const Resolution<K>& f_last = ps.factor(last.side);
        const std::size_t dl = f_last.base->dim();
        if (w == 0 || w_side == last.side) {
            Vec<K> s = f_last.homotopy.at(last.degree).col(t.back() * dl + (w == 0 ? 0 : w_local));
            Composition target(pieces.begin(), pieces.end() - 1);
            target.push_back({last.side, last.degree + 1});
            std::vector<std::size_t> prefix(t.begin(), t.end() - 1);
            place(out, last.side, s, n + 1, target, prefix, true, pieces.size() == 1 ? 0 : 2, prefix_sign);
        } else {
            const Resolution<K>& f = ps.factor(w_side);
            Vec<K> s = f.homotopy.at(0).col(w_local);
            Composition target = pieces;
            target.push_back({w_side, 1});
            const Scalar<K> sign = last.degree % 2 == 0 ? prefix_sign : -prefix_sign;
            place(out, w_side, s, n + 1, target, t, true, 2, sign);
        }
        return out;
    }
};

}  // namespace detail

/// Builds (P⊔Q)_0..n_max with δ and σ_0..σ_{n_max-1}. The factor
/// resolutions must be small, start with the enveloping algebra, and reach
/// degree n_max.
template <Field K>
PsqResolution<K> build_psq(Resolution<K> left, Resolution<K> right, std::size_t n_max) {
    for (auto* r : {&left, &right}) {
        if (!r->bimodule()) throw PreconditionError("build_psq: factor resolution is not a bimodule resolution");
        if (!is_small(*r)) throw PreconditionError("build_psq: factor resolution is not small");
        if (r->ranks[0] != 1 || !(r->augmentation.col(0) == r->base->unit()))
            throw PreconditionError("build_psq: P_0 must be the enveloping algebra");
        if (r->length() < n_max) throw PreconditionError("build_psq: factor resolution too short");
        if (r->homotopy.size() < n_max) build_homotopy(*r);
    }
    PsqResolution<K> ps{product(*left.base, *right.base), std::move(left), std::move(right), {}, {}, {}};
    const K& k = ps.left.field();
    const Algebra<K>& delta = ps.product.algebra;
    const std::size_t dd = delta.dim();

    Resolution<K>& res = ps.res;
    res.base = std::make_shared<const Algebra<K>>(delta);
    res.ring = std::make_shared<const Algebra<K>>(enveloping(delta));
    res.target = bimodule_regular(delta, res.ring);
    res.kind = "psq";
    res.augmentation = Matrix<K>(k, dd, 1);
    res.augmentation.set_col(0, delta.unit());
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<PsqBlock> blocks;
        std::map<Composition, std::size_t> index;
        std::vector<std::string> labels;
        std::vector<int> degrees;
        std::size_t offset = 0;
        for (const auto& c : alternating_compositions(n)) {
            PsqBlock b{c, offset, 1, {}};
            for (const auto& p : c) {
                b.radix.push_back(ps.factor(p.side).ranks[p.degree]);
                b.count *= b.radix.back();
            }
            index[c] = blocks.size();
            blocks.push_back(b);
            offset += b.count;
        }
        ps.blocks.push_back(std::move(blocks));
        ps.block_index.push_back(std::move(index));
        for (const auto& b : ps.blocks[n])
            for (std::size_t g = b.offset; g < b.offset + b.count; ++g) {
                auto t = ps.decode(b, g);
                std::string lab;
                int deg = 0;
                for (std::size_t i = 0; i < t.size(); ++i) {
                    const auto& f = ps.factor(b.pieces[i].side);
                    lab += (i ? "|" : "") + detail::piece_name(b.pieces[i]) + ":" + f.gen_labels[b.pieces[i].degree][t[i]];
                    if (delta.graded() && !f.gen_degrees[b.pieces[i].degree].empty())
                        deg += f.gen_degrees[b.pieces[i].degree][t[i]];
                }
                labels.push_back(n == 0 ? "1" : lab);
                degrees.push_back(deg);
            }
        res.ranks.push_back(offset);
        res.gen_labels.push_back(std::move(labels));
        res.gen_degrees.push_back(delta.graded() ? std::move(degrees) : std::vector<int>{});
    }
    detail::PsqBuilder<K> builder(ps);
    res.diff.push_back(Matrix<K>(k, 0, 0));
    for (std::size_t n = 1; n <= n_max; ++n) {
        Matrix<K> m(k, res.ranks[n - 1] * dd * dd, res.ranks[n]);
        for (const auto& b : ps.blocks[n])
            for (std::size_t g = b.offset; g < b.offset + b.count; ++g)
                m.set_col(g, builder.differential(n, b, ps.decode(b, g)));
        res.diff.push_back(std::move(m));
    }
    for (std::size_t n = 0; n < n_max; ++n) {
        Matrix<K> s(k, res.ranks[n + 1] * dd * dd, res.ranks[n] * dd);
        for (std::size_t g = 0; g < res.ranks[n]; ++g) {
            const PsqBlock* b = n == 0 ? nullptr : &ps.block_of(n, g);
            auto t = b ? ps.decode(*b, g) : std::vector<std::size_t>{};
            for (std::size_t w = 0; w < dd; ++w) s.set_col(g * dd + w, builder.sigma(n, b, t, w));
        }
        res.homotopy.push_back(std::move(s));
    }
    res.small = is_small(res);
    return ps;
}

template <Field K>
PsqResolution<K> build_psq(const Algebra<K>& a, const Algebra<K>& b, std::size_t n_max) {
    return build_psq(minimal_bimodule_resolution(adapted(a).algebra, n_max),
                     minimal_bimodule_resolution(adapted(b).algebra, n_max), n_max);
}

/// δ² = 0, σδ + δσ = id, exactness and smallness of P⊔Q.
template <Field K>
CheckReport psq_check(const PsqResolution<K>& ps) {
    CheckReport r("psq");
    auto ex = verify_exact(ps.res);
    r.clause("delta_squared_zero", ex.dd_zero);
    r.clause("exact", ex.exact());
    r.absorb("sigma", homotopy_check(ps.res));
    r.clause("small", ps.res.small);
    Json ranks = Json::array();
    for (auto x : ps.res.ranks) ranks.push_back(x);
    r.tables["ranks"] = ranks;
    Json hom = Json::array();
    for (auto h : ex.homology) hom.push_back(h);
    r.tables["homology"] = hom;
    return r;
}

/// R = (P⊔Q) ⊗_Δ k: a small resolution of k over Δ.
template <Field K>
Resolution<K> tensor_down(const PsqResolution<K>& ps) {
    auto r = one_sided(ps.res);
    r.kind = "psq_tensor_down";
    return r;
}

}  // namespace augalg
