// Acceptance run: one PASS/FAIL line per criterion, all in exact arithmetic.
// Exit status is nonzero when any criterion fails.

#include "augalg/checks.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace augalg;

namespace {

RationalField Q;
using RQ = RationalField;

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

std::string dims_str(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

const std::vector<std::size_t> kOnes{1, 1, 1, 1, 1};
const std::vector<std::size_t> kDoubling{1, 2, 4, 8, 16};

std::vector<std::pair<Algebra<RQ>, Algebra<RQ>>> desk_pairs() {
    return {{truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y")},
            {truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y")},
            {truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 3, "y")}};
}

Outcome ext_truncated_polynomials() {
    Outcome o;
    auto e2 = ext_ring(truncated_polynomial(Q, 2), 4);
    o.require(e2.table.dims == kOnes, "E(k[x]/x^2) dims " + dims_str(e2.table.dims));
    const auto a = e2.table.basis(1, 0);
    for (std::size_t n = 2; n <= 4; ++n) {
        auto p = table_power(e2.table, 1, a, n);
        o.require(p && !is_zero_vector<RQ>(*p), "a^" + std::to_string(n) + " vanishes for k[x]/x^2");
    }
    for (std::size_t r : {3, 4}) {
        auto e = ext_ring(truncated_polynomial(Q, r), 4);
        o.require(e.table.dims == kOnes, "E(k[x]/x^" + std::to_string(r) + ") dims " + dims_str(e.table.dims));
        auto x = e.table.basis(1, 0);
        o.require(is_zero_vector<RQ>(e.table.mul(1, x, 1, x)), "a^2 nonzero for r = " + std::to_string(r));
    }
    return o;
}

Outcome hh_dual_numbers() {
    Outcome o;
    auto hh = hh_ring(truncated_polynomial(Q, 2), 4);
    const auto& t = hh.table;
    o.require(t.dims == std::vector<std::size_t>{2, 1, 1, 1, 1}, "HH dims " + dims_str(t.dims));
    if (!o.ok) return o;
    o.require(ring_table_check(t, true).pass, "ring table axioms or graded commutativity");
    const Vec<RQ> x0 = hh.spaces[0].coords(Vec<RQ>{0, 1}), x1 = t.basis(1, 0), x2 = t.basis(2, 0);
    o.require(!is_zero_vector<RQ>(x0), "x0 is zero");
    o.require(is_zero_vector<RQ>(t.mul(0, x0, 0, x0)), "x0^2 != 0");
    o.require(is_zero_vector<RQ>(t.mul(1, x1, 1, x1)), "x1^2 != 0");
    o.require(is_zero_vector<RQ>(t.mul(0, x0, 1, x1)), "x0 x1 != 0");
    o.require(is_zero_vector<RQ>(t.mul(0, x0, 2, x2)), "x0 x2 != 0");
    // generation: x2^j and x1 x2^j span the positive degrees
    o.require(!is_zero_vector<RQ>(t.mul(2, x2, 2, x2)), "x2^2 = 0");
    o.require(!is_zero_vector<RQ>(t.mul(1, x1, 2, x2)), "x1 x2 = 0");
    return o;
}

Outcome main_theorem() {
    Outcome o;
    for (std::size_t r : {2, 3}) {
        auto rep = main_theo_check(truncated_polynomial(Q, r, "x"), truncated_polynomial(Q, 2, "y"), 4);
        const auto dims = rep.tables["E_minimal"].get<std::vector<std::size_t>>();
        o.require(rep.pass, "main-theo clause failed for r = " + std::to_string(r));
        o.require(dims == kDoubling, "E dims " + dims_str(dims));
        o.require(rep.tables["E_psq"] == rep.tables["E_minimal"], "P⊔Q dims differ from the oracle");
    }
    return o;
}

Outcome ordinary_coproduct() {
    Outcome o;
    auto rep = ext_coproduct_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    o.require(rep.pass, "ordinary-coprod clauses: " + rep.clauses.dump());
    for (const auto& row : rep.tables["cutoffs"])
        o.require(row["trusted_dims"].get<std::vector<std::size_t>>() == std::vector<std::size_t>{1, 2, 2, 2, 2},
                  "trusted dims " + row["trusted_dims"].dump());
    return o;
}

Outcome additive_decomposition() {
    Outcome o;
    for (auto& [a, b] : desk_pairs()) {
        auto rep = additive_decomposition_check(product_cohomology(a, b, 4));
        o.require(rep.pass, "decomposition mismatch: " + rep.tables.dump());
    }
    return o;
}

Outcome nilpotence() {
    Outcome o;
    for (auto& [a, b] : desk_pairs()) {
        auto rep = nilp_check(a, b, 4);
        o.require(rep.pass, "nilp-hh clauses: " + rep.clauses.dump());
    }
    return o;
}

Outcome omega_lemma() {
    Outcome o;
    for (std::size_t r : {2, 3}) {
        auto rep = omega_coproduct_check(truncated_polynomial(Q, r, "x"), truncated_polynomial(Q, 2, "y"), 4);
        o.require(rep.clauses["sum_is_omega"].get<bool>(), "O_left + O_right != Omega");
        o.require(rep.clauses["intersection_zero"].get<bool>(), "O_left ∩ O_right != 0");
    }
    return o;
}

Outcome graded_centre() {
    Outcome o;
    auto e = ext_ring(truncated_polynomial(Q, 2), 5);
    auto poly = gr_centre_check(e.table, e.table, 5);
    o.require(poly.pass && poly.clauses.contains("trivial_in_positive_degrees"), "k[a] ⊔ k[b] centre not trivial");
    auto t = algebra_table(truncated_polynomial(Q, 2), 4, "");
    auto dual = gr_centre_check(t, t, 4);
    o.require(dual.pass && dual.clauses.contains("xy_plus_yx_central"), "xy + yx not central");
    return o;
}

template <Field K>
void resolution_suite(Outcome& o, const K& k, const Algebra<K>& a, const Algebra<K>& b, std::size_t N) {
    auto ps = build_psq(a, b, N + 1);
    o.require(psq_check(ps).pass, "P⊔Q: δ² = 0, σδ + δσ = id or exactness failed");
    const Algebra<K>& delta = ps.product.algebra;
    // dims agree across minimal, bar and P⊔Q-derived resolutions
    auto hh_psq = hom_complex(ps.res, ps.res.target).cohomology();
    auto hh_min = hh_groups(delta, N), hh_bar = hh_groups(delta, N, true);
    auto td = tensor_down(ps);
    auto ext_psq = hom_complex(td, td.target).cohomology();
    auto ext_min = ext_groups(delta, N), ext_bar = ext_groups_bar(delta, N);
    for (std::size_t n = 0; n <= N; ++n) {
        o.require(hh_psq[n].dim() == hh_min[n] && hh_min[n] == hh_bar[n], "HH dims depend on the resolution");
        o.require(ext_psq[n].dim() == ext_min[n] && ext_min[n] == ext_bar[n], "E dims depend on the resolution");
    }
    (void)k;
}

template <Field K>
void linalg_suite(Outcome& o, const K& k, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coin(0, 2), val(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        Matrix<K> m(k, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (coin(rng) == 0) m(i, j) = k.from_int(val(rng));
        auto red = rref(m);
        o.require(rref(red) == red, "RREF not idempotent");
        o.require(rank(m) + kernel_basis(m).dim() == c, "rank-nullity violated");
    }
}

Outcome property_suites() {
    Outcome o;
    for (auto& [a, b] : desk_pairs()) {
        resolution_suite(o, Q, a, b, 3);
        auto pc = product_cohomology(a, b, 4);
        o.require(product_les_check(pc).pass, "product sequence not exact");
        for (const auto* f : {&a, &b}) {
            auto les = augmentation_les(minimal_bimodule_resolution(*f, 5));
            o.require(les.composition_zero && les.record.exact(), "augmentation sequence not exact");
        }
    }
    PrimeField f3(3);
    resolution_suite(o, f3, rad_square_zero(f3, 2), truncated_polynomial(f3, 2, "z"), 2);
    for (const auto& a : {truncated_polynomial(Q, 2), truncated_polynomial(Q, 3), rad_square_zero(Q, 2),
                          product(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y")).algebra})
        o.require(ring_table_check(hh_ring(a, 3).table, true).pass, "HH table not graded commutative");
    linalg_suite(o, Q, 7);
    linalg_suite(o, PrimeField(5), 11);
    linalg_suite(o, PrimeField(2), 13);
    return o;
}

Outcome hochschild_products() {
    Outcome o;
    auto pc = product_cohomology(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    auto rep = hoch_prod_check(pc);
    for (const auto* c : {"r_ideal", "ea_products", "c_map_chain_map", "c_map_products", "ihh_internal_products"})
        o.require(rep.clauses.value(c, false), std::string("hoch-prod clause ") + c);
    o.require(rep.pass, "hoch-prod clauses: " + rep.clauses.dump());
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Ext of truncated polynomial algebras", ext_truncated_polynomials},
        {"HH of k[x]/x^2 and its presentation", hh_dual_numbers},
        {"E of products is the free product of the factors' E", main_theorem},
        {"E of the truncated coproduct", ordinary_coproduct},
        {"additive decomposition of HH of products", additive_decomposition},
        {"nilpotence of positive-degree HH of products", nilpotence},
        {"Omega of a coproduct splits", omega_lemma},
        {"graded centre of free products", graded_centre},
        {"property suites", property_suites},
        {"products in HH of products and the ideal R", hochschild_products},
    };
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.ok;
        std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!o.ok) std::cout << "  [" << o.detail << "]";
        std::cout << "  (" << secs << " s)\n" << std::flush;
    }
    std::cout << "total " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return all ? 0 : 1;
}
