#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mvharm/fischer.hpp"
#include "mvharm/harmonics.hpp"
#include "mvharm/partitions.hpp"
#include "mvharm/polynomial.hpp"
#include "mvharm/rational.hpp"

namespace mvharm {

// One evaluated irreducibility condition; violated means the value landed in
// -N, with N = {1, 2, ...} (zero does not violate).
struct ConditionEntry {
    int i = 0;
    int j = 0;  // 0 for the single-index condition (2)
    Rational value;
    bool violated = false;
};

struct ConditionReport {
    std::vector<Rational> lambda;
    int k = 0;
    std::vector<ConditionEntry> cond1;  // pairs i < j
    std::vector<ConditionEntry> cond2;  // single index i
    bool irreducible_sufficient = true;

    const ConditionEntry* first_violation() const {
        for (const auto& e : cond1)
            if (e.violated) return &e;
        for (const auto& e : cond2)
            if (e.violated) return &e;
        return nullptr;
    }
};

// Sufficient conditions for the generalized Verma module V_lambda to be
// irreducible, with lambda written in the customary weakly decreasing order:
// (1) lambda_i + lambda_j - i - j not in -N for i < j, and
// (2) lambda_i - i not in -N.
// These are the rho-shifted pairings with the non-Levi coroots; for the
// shifted weight of a partition they pass throughout m >= 2k - 1.
inline ConditionReport check_weight(const std::vector<Rational>& lambda,
                                    int k) {
    if (static_cast<int>(lambda.size()) != k)
        throw error("weight length must equal k");
    ConditionReport rep;
    rep.lambda = lambda;
    rep.k = k;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            ConditionEntry e;
            e.i = i;
            e.j = j;
            e.value = lambda[static_cast<std::size_t>(i - 1)] +
                      lambda[static_cast<std::size_t>(j - 1)] - i - j;
            e.violated = is_negative_integer(e.value);
            if (e.violated) rep.irreducible_sufficient = false;
            rep.cond1.push_back(std::move(e));
        }
    }
    for (int i = 1; i <= k; ++i) {
        ConditionEntry e;
        e.i = i;
        e.value = lambda[static_cast<std::size_t>(i - 1)] - i;
        e.violated = is_negative_integer(e.value);
        if (e.violated) rep.irreducible_sufficient = false;
        rep.cond2.push_back(std::move(e));
    }
    return rep;
}

// Specialization to the shifted weight of a partition; identical to
// check_weight(shift(a, m, k), k).
inline ConditionReport check_partition(const Partition& a, int m, int k) {
    return check_weight(shift(a, m, k), k);
}

// Graded dimension of the free module: gl_dim(a, k) copies of the degree-g
// monomials in the k(k+1)/2 commuting squares r_ij.
inline Integer verma_graded_dim(const Partition& a, int k, int g) {
    if (g < 0) throw error("grade must be >= 0");
    int symbols = k * (k + 1) / 2;
    return gl_dim(a, k) * binomial(g + symbols - 1, g);
}

// All exponent matrices with |n| = g, ascending in the lexicographic order
// of the entry sequence.
inline std::vector<ExponentMatrix> exponent_matrices_of_total(int k, int g) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) pairs.push_back({i, j});
    std::vector<ExponentMatrix> out;
    ExponentMatrix current;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == pairs.size()) {
            auto [i, j] = pairs[idx];
            current.add(i, j, remaining);
            out.push_back(current);
            current.add(i, j, -remaining);
            return;
        }
        auto [i, j] = pairs[idx];
        for (int n = 0; n <= remaining; ++n) {
            self(self, idx + 1, remaining - n);
            current.add(i, j, 1);
        }
        current.add(i, j, -(remaining + 1));
    };
    if (!pairs.empty()) rec(rec, 0, g);
    return out;
}

// The realized module: the gl(k)-orbit of the simplicial space (closure
// under the lowering operators h_ij, i > j), a concrete weight basis of the
// copies of the highest-weight module the simplicial vectors generate.
inline std::vector<Polynomial> gl_orbit(Ambient amb,
                                        const std::vector<Polynomial>& seeds) {
    SpanSolver<Monomial, MonomialDesc> span;
    std::vector<Polynomial> frontier;
    auto offer = [&](const Polynomial& p) {
        if (p.is_zero()) return;
        SpanSolver<Monomial, MonomialDesc>::Vec vec;
        for (const auto& [mon, c] : p.terms()) vec[mon] = c;
        if (span.insert(std::move(vec)).independent) frontier.push_back(p);
    };
    for (const auto& s : seeds) offer(s);
    auto lowering = lowering_eulers(amb);
    std::size_t next = 0;
    while (next < frontier.size()) {
        Polynomial p = frontier[next++];
        for (const auto& h : lowering) offer(apply(h, p));
    }
    std::vector<Polynomial> out;
    for (const auto& row : span.reduced_basis()) {
        Polynomial p(amb);
        for (const auto& [mon, c] : row) p.add_term(mon, c);
        out.push_back(std::move(p));
    }
    return out;
}

struct CollapseRecord {
    int g = 0;
    Integer free_dim = 0;      // verma_graded_dim(a, k, g), one copy
    Integer copies = 0;        // multiplicity: dim of the simplicial space
    Integer realized_dim = 0;  // rank of {r^{2n} w : |n| = g, w in orbit}
    bool collapsed = false;    // realized_dim < copies * free_dim
};

struct CollapseReport {
    Partition a;
    int k = 0;
    int m = 0;
    int G = 0;
    Integer simplicial_dim = 0;
    Integer orbit_dim = 0;  // simplicial_dim * gl_dim(a, k) when healthy
    std::vector<CollapseRecord> records;

    bool empty() const { return simplicial_dim == 0; }

    bool any_collapse() const {
        for (const auto& rec : records)
            if (rec.collapsed) return true;
        return false;
    }
};

// Compares the free graded dimension of the generalized Verma module against
// the rank its image actually attains inside polynomials, grade by grade up
// to G. Strict deficit at any grade is a collapse witness for non-directness.
inline CollapseReport collapse_detect(Ambient amb, const Partition& a,
                                      int G = 2,
                                      long cap = default_resource_cap) {
    CollapseReport rep;
    rep.a = a;
    rep.k = amb.k;
    rep.m = amb.m;
    rep.G = G;
    auto simp = simplicial_basis(amb, a, cap);
    rep.simplicial_dim = simp.dimension();
    if (rep.simplicial_dim == 0) return rep;
    auto orbit = gl_orbit(amb, simp.basis);
    rep.orbit_dim = static_cast<long>(orbit.size());

    for (int g = 0; g <= G; ++g) {
        CollapseRecord rec;
        rec.g = g;
        rec.free_dim = verma_graded_dim(a, amb.k, g);
        rec.copies = rep.simplicial_dim;
        SpanSolver<Monomial, MonomialDesc> span;
        for (const auto& n : exponent_matrices_of_total(amb.k, g)) {
            Polynomial rn = n.polynomial(amb);
            for (const auto& w : orbit) {
                Polynomial member = rn * w;
                SpanSolver<Monomial, MonomialDesc>::Vec vec;
                for (const auto& [mon, c] : member.terms()) vec[mon] = c;
                span.insert(std::move(vec));
            }
        }
        rec.realized_dim = span.rank();
        rec.collapsed = rec.realized_dim < rec.copies * rec.free_dim;
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

}  // namespace mvharm
