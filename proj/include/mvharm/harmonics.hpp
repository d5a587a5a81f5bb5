#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mvharm/linalg.hpp"
#include "mvharm/partitions.hpp"
#include "mvharm/polynomial.hpp"
#include "mvharm/rational.hpp"
#include "mvharm/weyl.hpp"

namespace mvharm {

// Rank computations over the rationals grow fast; anything above this many
// ambient monomials per multidegree fails loudly instead of grinding.
inline constexpr long default_resource_cap = 20000;

inline Integer pspace_dim(Ambient amb, const MultiDegree& d) {
    Integer out = 1;
    for (int i = 0; i < d.size(); ++i)
        out *= binomial(d[i] + amb.m - 1, amb.m - 1);
    return out;
}

inline void check_cap(Ambient amb, const MultiDegree& d, long cap) {
    Integer dim = pspace_dim(amb, d);
    if (dim > cap)
        throw resource_error("ambient dimension " + dim.get_str() +
                             " at multidegree " + d.str() + " exceeds cap " +
                             std::to_string(cap));
}

// All monomials of the given multidegree, leading (canonically largest)
// first.
inline std::vector<Monomial> monomial_basis(Ambient amb, const MultiDegree& d,
                                            long cap = default_resource_cap) {
    if (d.size() != amb.k) throw error("multidegree length must equal k");
    if (!d.non_negative()) throw error("multidegree must be non-negative");
    check_cap(amb, d, cap);
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> factors;
    auto rec = [&](auto&& self, int vec, int coord, int remaining) -> void {
        if (coord == amb.m) {
            if (remaining != 0) return;
            if (vec + 1 == amb.k) {
                out.push_back(Monomial::from_sorted(factors));
                return;
            }
            self(self, vec + 1, 0, d[vec + 1]);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            if (e > 0) factors.push_back({{vec + 1, coord + 1}, e});
            self(self, vec, coord + 1, remaining - e);
            if (e > 0) factors.pop_back();
        }
    };
    if (amb.k >= 1) rec(rec, 0, 0, d[0]);
    std::sort(out.begin(), out.end(), MonomialDesc{});
    return out;
}

namespace detail {

struct OpMonKey {
    int op;
    Monomial mon;

    friend bool operator==(const OpMonKey&, const OpMonKey&) = default;
    friend std::strong_ordering operator<=>(const OpMonKey&,
                                            const OpMonKey&) = default;
};

}  // namespace detail

// Exact basis of the joint kernel of ops restricted to span(domain), in
// reduced echelon form w.r.t. the canonical monomial order. Found by
// inserting operator images into a span tracker: each dependent image yields
// one kernel relation.
inline std::vector<Polynomial> joint_kernel(
    Ambient amb, const std::vector<WeylElement>& ops,
    const std::vector<Monomial>& domain) {
    SpanSolver<detail::OpMonKey> images;
    std::vector<Polynomial> relations;
    for (const auto& mon : domain) {
        Polynomial p = Polynomial::monomial(amb, mon);
        SpanSolver<detail::OpMonKey>::Vec vec;
        for (std::size_t t = 0; t < ops.size(); ++t) {
            Polynomial image = apply(ops[t], p);
            for (const auto& [im, c] : image.terms())
                vec[{static_cast<int>(t), im}] = c;
        }
        auto res = images.insert(std::move(vec));
        if (!res.independent) {
            Polynomial rel = p;
            for (const auto& [i, c] : res.combination)
                rel.add_term(domain[static_cast<std::size_t>(i)], -c);
            relations.push_back(std::move(rel));
        }
    }
    // canonicalize to the unique reduced echelon basis of the kernel
    SpanSolver<Monomial, MonomialDesc> canon;
    for (const auto& rel : relations) {
        SpanSolver<Monomial, MonomialDesc>::Vec vec;
        for (const auto& [mon, c] : rel.terms()) vec[mon] = c;
        canon.insert(std::move(vec));
    }
    std::vector<Polynomial> out;
    for (const auto& row : canon.reduced_basis()) {
        Polynomial p(amb);
        for (const auto& [mon, c] : row) p.add_term(mon, c);
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<WeylElement> all_laplacians(Ambient amb) {
    std::vector<WeylElement> ops;
    for (int i = 1; i <= amb.k; ++i)
        for (int j = i; j <= amb.k; ++j) ops.push_back(laplacian(amb, i, j));
    return ops;
}

// Raising part of the triangular split: the h_ij with i < j.
inline std::vector<WeylElement> raising_eulers(Ambient amb) {
    std::vector<WeylElement> ops;
    for (int i = 1; i <= amb.k; ++i)
        for (int j = i + 1; j <= amb.k; ++j) ops.push_back(euler(amb, i, j));
    return ops;
}

inline std::vector<WeylElement> lowering_eulers(Ambient amb) {
    std::vector<WeylElement> ops;
    for (int i = 1; i <= amb.k; ++i)
        for (int j = 1; j < i; ++j) ops.push_back(euler(amb, i, j));
    return ops;
}

struct HarmonicBasis {
    MultiDegree d;
    std::vector<Polynomial> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Basis of the joint kernel of all mixed Laplacians within the multidegree-d
// slice.
inline HarmonicBasis harmonic_basis(Ambient amb, const MultiDegree& d,
                                    long cap = default_resource_cap) {
    auto domain = monomial_basis(amb, d, cap);
    return {d, joint_kernel(amb, all_laplacians(amb), domain)};
}

struct SimplicialBasis {
    Partition a;
    std::vector<Polynomial> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Basis of the harmonics of multidegree a that the raising Euler operators
// also annihilate. Inadmissible partitions simply come out zero-dimensional.
inline SimplicialBasis simplicial_basis(Ambient amb, const Partition& a,
                                        long cap = default_resource_cap) {
    if (a.length() > amb.k) throw error("partition longer than k");
    std::vector<int> degrees;
    for (int i = 1; i <= amb.k; ++i) degrees.push_back(a.part(i));
    MultiDegree d(degrees);
    auto domain = monomial_basis(amb, d, cap);
    std::vector<WeylElement> ops = all_laplacians(amb);
    for (auto& h : raising_eulers(amb)) ops.push_back(std::move(h));
    return {a, joint_kernel(amb, ops, domain)};
}

struct IsotypicRecord {
    MultiDegree d;
    Integer lhs = 0;  // dim of the harmonic slice at d
    Integer rhs = 0;  // sum over partitions of simplicial dim times Kostka
    bool match = false;
};

namespace detail {

// Per-partition simplicial dimensions are shared across multidegrees of the
// same total, so scans cache them.
class SimplicialDimCache {
public:
    explicit SimplicialDimCache(Ambient amb, long cap)
        : amb_(amb), cap_(cap) {}

    Integer dim(const Partition& a) {
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        Integer d = simplicial_basis(amb_, a, cap_).dimension();
        cache_.emplace(a, d);
        return d;
    }

private:
    Ambient amb_;
    long cap_;
    std::map<Partition, Integer> cache_;
};

inline IsotypicRecord isotypic_record(Ambient amb, const MultiDegree& d,
                                      SimplicialDimCache& dims, long cap) {
    IsotypicRecord rec;
    rec.d = d;
    rec.lhs = harmonic_basis(amb, d, cap).dimension();
    for (const auto& a : partitions_of(d.total(), amb.k)) {
        Integer mult = kostka(a, d.degrees);
        if (mult == 0) continue;
        rec.rhs += dims.dim(a) * mult;
    }
    rec.match = rec.lhs == rec.rhs;
    return rec;
}

}  // namespace detail

// The two sides of the tensor decomposition at one multidegree: the harmonic
// slice dimension against the weight-multiplicity expansion over simplicial
// carriers.
inline IsotypicRecord isotypic_dimension_check(Ambient amb,
                                               const MultiDegree& d,
                                               long cap = default_resource_cap) {
    if (d.size() != amb.k) throw error("multidegree length must equal k");
    if (!d.non_negative()) throw error("multidegree must be non-negative");
    detail::SimplicialDimCache dims(amb, cap);
    return detail::isotypic_record(amb, d, dims, cap);
}

// All multidegrees of length k with total degree <= D, in scan order.
inline std::vector<MultiDegree> multidegrees_up_to(int k, int D) {
    std::vector<MultiDegree> out;
    for (int n = 0; n <= D; ++n)
        for (auto& c : compositions_of(n, k)) out.push_back(MultiDegree(c));
    return out;
}

inline std::vector<IsotypicRecord> isotypic_scan(
    Ambient amb, int D, long cap = default_resource_cap) {
    detail::SimplicialDimCache dims(amb, cap);
    std::vector<IsotypicRecord> out;
    for (const auto& d : multidegrees_up_to(amb.k, D))
        out.push_back(detail::isotypic_record(amb, d, dims, cap));
    return out;
}

}  // namespace mvharm
