#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvharm/harmonics.hpp"
#include "mvharm/linalg.hpp"
#include "mvharm/parallel.hpp"
#include "mvharm/polynomial.hpp"
#include "mvharm/rational.hpp"
#include "mvharm/weyl.hpp"

namespace mvharm {

// (P, Q) = [P(d) Q](0). Diagonal on monomials: distinct monomials pair to
// zero, x^alpha with itself to alpha!.
inline Rational fischer_ip(const Polynomial& p, const Polynomial& q) {
    require_same_ambient(p.ambient(), q.ambient());
    Rational out(0);
    const auto& a = p.terms();
    const auto& b = q.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    MonomialDesc before;
    while (ia != a.end() && ib != b.end()) {
        if (before(ia->first, ib->first)) {
            ++ia;
        } else if (before(ib->first, ia->first)) {
            ++ib;
        } else {
            Integer scale = 1;
            for (const auto& [v, e] : ia->first.factors())
                scale *= factorial(static_cast<unsigned long>(e));
            out += ia->second * ib->second * Rational(scale);
            ++ia;
            ++ib;
        }
    }
    return out;
}

// Exponents n_ij (1 <= i <= j <= k) of the product of mixed squares
// r_11^{2 n_11} r_12^{2 n_12} ... ; zero entries are not stored.
class ExponentMatrix {
public:
    using Entry = std::pair<std::pair<int, int>, int>;

    ExponentMatrix() = default;

    int get(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    void add(int i, int j, int delta) {
        if (i > j) std::swap(i, j);
        if (i < 1) throw error("exponent matrix index out of range");
        auto [it, inserted] = entries_.try_emplace({i, j}, 0);
        it->second += delta;
        if (it->second < 0) throw error("negative exponent matrix entry");
        if (it->second == 0) entries_.erase(it);
    }

    const std::map<std::pair<int, int>, int>& entries() const {
        return entries_;
    }

    int total() const {
        int t = 0;
        for (const auto& [ij, n] : entries_) t += n;
        return t;
    }

    bool is_zero() const { return entries_.empty(); }

    // Multidegree of the polynomial r^{2n}: each factor r2_ij raises d_i and
    // d_j by one (the diagonal by two).
    MultiDegree contribution(int k) const {
        MultiDegree d = MultiDegree::zero(k);
        for (const auto& [ij, n] : entries_) {
            d[ij.first - 1] += n;
            d[ij.second - 1] += n;
        }
        return d;
    }

    Polynomial polynomial(Ambient amb) const {
        Polynomial out = Polynomial::one(amb);
        for (const auto& [ij, n] : entries_) {
            Polynomial r(amb);
            for (int s = 1; s <= amb.m; ++s) {
                Monomial mon = Monomial::variable({ij.first, s})
                                   .times(Monomial::variable({ij.second, s}));
                r.add_term(mon, 1);
            }
            for (int t = 0; t < n; ++t) out = out * r;
        }
        return out;
    }

    friend bool operator==(const ExponentMatrix&,
                           const ExponentMatrix&) = default;
    friend auto operator<=>(const ExponentMatrix& a, const ExponentMatrix& b) {
        return a.entries_ <=> b.entries_;
    }

    // e.g. "r11*r12^2"; the empty matrix renders as "1".
    std::string str() const {
        if (entries_.empty()) return "1";
        std::string out;
        for (const auto& [ij, n] : entries_) {
            if (!out.empty()) out += "*";
            out += "r" + std::to_string(ij.first) + std::to_string(ij.second);
            if (n != 1) out += "^" + std::to_string(n);
        }
        return out;
    }

private:
    std::map<std::pair<int, int>, int> entries_;
};

// All exponent matrices whose multidegree contribution fits under d
// componentwise, ascending in the lexicographic order of the entry sequence
// (n_11, n_12, ..., n_kk).
inline std::vector<ExponentMatrix> exponent_matrices_within(
    const MultiDegree& d) {
    int k = d.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) pairs.push_back({i, j});
    std::vector<ExponentMatrix> out;
    ExponentMatrix current;
    MultiDegree used = MultiDegree::zero(k);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == pairs.size()) {
            out.push_back(current);
            return;
        }
        auto [i, j] = pairs[idx];
        int room = i == j ? (d[i - 1] - used[i - 1]) / 2
                          : std::min(d[i - 1] - used[i - 1],
                                     d[j - 1] - used[j - 1]);
        for (int n = 0; n <= room; ++n) {
            self(self, idx + 1);
            if (n < room) {
                current.add(i, j, 1);
                used[i - 1] += i == j ? 2 : 1;
                if (i != j) used[j - 1] += 1;
            }
        }
        current.add(i, j, -room);
        used[i - 1] -= i == j ? 2 * room : room;
        if (i != j) used[j - 1] -= room;
    };
    rec(rec, 0);
    return out;
}

struct FischerComponent {
    ExponentMatrix n;
    Polynomial harmonic;
};

struct HarmonicSplit {
    Polynomial h;
    std::map<std::pair<int, int>, Polynomial> q;
};

// Shared engine for harmonic splits and full decompositions. Caches, per
// multidegree, the column span of T^2 on the monomial basis, where
// T = sum r2_ij D_ij. T is Fischer self-adjoint with kernel exactly the
// harmonics, so solving T^2 S = T P gives H = P - T S as the orthogonal
// projection of P onto the harmonics and Q_ij = D_ij S as the minimum-norm
// lift (solutions of T u = P - H differ by harmonics, which every D_ij
// kills, so Q is independent of the solver's choice).
class Decomposer {
public:
    explicit Decomposer(Ambient amb, long cap = default_resource_cap)
        : amb_(amb), cap_(cap), t_(WeylElement::zero(amb)) {
        for (int i = 1; i <= amb.k; ++i)
            for (int j = i; j <= amb.k; ++j)
                t_ += compose(rsquared(amb, i, j), laplacian(amb, i, j));
    }

    const Ambient& ambient() const { return amb_; }

    HarmonicSplit split(const Polynomial& p) {
        HarmonicSplit out{Polynomial::zero(amb_), {}};
        if (p.is_zero()) {
            out.h = p;
            return out;
        }
        MultiDegree d =
            MultiDegree::of(p.terms().begin()->first, amb_.k);
        if (!p.is_homogeneous(d))
            throw error("harmonic_split requires a homogeneous input");
        Polynomial tp = apply(t_, p);
        if (tp.is_zero()) {  // already harmonic
            out.h = p;
            return out;
        }
        Slice& slice = slice_for(d);
        auto combo = slice.t2_columns.express(to_vec(tp));
        if (!combo)
            throw error("internal: T P outside the column span of T^2");
        Polynomial s(amb_);
        for (const auto& [idx, c] : *combo)
            s.add_term(slice.domain[static_cast<std::size_t>(idx)], c);
        out.h = p - apply(t_, s);
        for (int i = 1; i <= amb_.k; ++i) {
            for (int j = i; j <= amb_.k; ++j) {
                Polynomial qij = apply(laplacian(amb_, i, j), s);
                if (!qij.is_zero())
                    out.q.emplace(std::make_pair(i, j), std::move(qij));
            }
        }
        return out;
    }

    // P = sum over components of r^{2n} H_n, recursing lexicographically
    // through the (i, j) pairs. Components are merged by exponent matrix and
    // returned in ascending order.
    std::vector<FischerComponent> decompose(const Polynomial& p) {
        std::map<ExponentMatrix, Polynomial> acc;
        for (const auto& [d, part] : p.multidegree_split())
            decompose_rec(part, ExponentMatrix(), acc);
        std::vector<FischerComponent> out;
        for (auto& [n, h] : acc) {
            if (h.is_zero()) continue;
            out.push_back({n, std::move(h)});
        }
        return out;
    }

private:
    struct Slice {
        std::vector<Monomial> domain;
        SpanSolver<Monomial, MonomialDesc> t2_columns;
    };

    static SpanSolver<Monomial, MonomialDesc>::Vec to_vec(const Polynomial& p) {
        SpanSolver<Monomial, MonomialDesc>::Vec vec;
        for (const auto& [mon, c] : p.terms()) vec[mon] = c;
        return vec;
    }

    Slice& slice_for(const MultiDegree& d) {
        auto it = slices_.find(d);
        if (it != slices_.end()) return it->second;
        Slice slice;
        slice.domain = monomial_basis(amb_, d, cap_);
        for (const auto& mon : slice.domain) {
            Polynomial image =
                apply(t_, apply(t_, Polynomial::monomial(amb_, mon)));
            slice.t2_columns.insert(to_vec(image));
        }
        return slices_.emplace(d, std::move(slice)).first->second;
    }

    void decompose_rec(const Polynomial& p, const ExponentMatrix& n,
                       std::map<ExponentMatrix, Polynomial>& acc) {
        if (p.is_zero()) return;
        HarmonicSplit parts = split(p);
        if (!parts.h.is_zero()) {
            auto [it, inserted] = acc.try_emplace(n, parts.h);
            if (!inserted) it->second += parts.h;
        }
        for (const auto& [ij, qij] : parts.q) {
            ExponentMatrix next = n;
            next.add(ij.first, ij.second, 1);
            decompose_rec(qij, next, acc);
        }
    }

    Ambient amb_;
    long cap_;
    WeylElement t_;
    std::map<MultiDegree, Slice> slices_;
};

inline HarmonicSplit harmonic_split(const Polynomial& p,
                                    long cap = default_resource_cap) {
    Decomposer dec(p.ambient(), cap);
    return dec.split(p);
}

inline std::vector<FischerComponent> fischer_decompose(
    const Polynomial& p, long cap = default_resource_cap) {
    Decomposer dec(p.ambient(), cap);
    return dec.decompose(p);
}

inline Polynomial reassemble(Ambient amb,
                             const std::vector<FischerComponent>& components) {
    Polynomial out(amb);
    for (const auto& comp : components)
        out += comp.n.polynomial(amb) * comp.harmonic;
    return out;
}

// One spanning-family member r^{2n} h, where h is the harmonic_index-th
// basis vector of the harmonic slice at hdeg = d - contribution(n).
struct FamilyMember {
    ExponentMatrix n;
    MultiDegree hdeg;
    int harmonic_index = 0;
};

struct MultidegreeRecord {
    MultiDegree d;
    Integer ambient_dim = 0;
    int family_size = 0;
    int rank = 0;
    std::vector<FamilyMember> members;
    // Each witness w satisfies sum w_i member_i = 0 with some w_i nonzero.
    std::vector<std::vector<Rational>> witnesses;

    bool collapsed() const { return !witnesses.empty(); }
};

// Assembles the spanning family {r^{2n} h} at one multidegree and measures
// its exact rank; every linear dependence is recorded as a witness.
inline MultidegreeRecord directness_at(Ambient amb, const MultiDegree& d,
                                       long cap = default_resource_cap) {
    MultidegreeRecord rec;
    rec.d = d;
    rec.ambient_dim = pspace_dim(amb, d);
    check_cap(amb, d, cap);

    std::map<MultiDegree, HarmonicBasis> hcache;
    auto harmonics_at = [&](const MultiDegree& hd) -> const HarmonicBasis& {
        auto it = hcache.find(hd);
        if (it == hcache.end())
            it = hcache.emplace(hd, harmonic_basis(amb, hd, cap)).first;
        return it->second;
    };

    SpanSolver<Monomial, MonomialDesc> span;
    for (const auto& n : exponent_matrices_within(d)) {
        MultiDegree hd = d;
        MultiDegree used = n.contribution(amb.k);
        for (int i = 0; i < amb.k; ++i) hd[i] -= used[i];
        const HarmonicBasis& hb = harmonics_at(hd);
        if (hb.basis.empty()) continue;
        Polynomial rn = n.polynomial(amb);
        for (int idx = 0; idx < hb.dimension(); ++idx) {
            Polynomial member = rn * hb.basis[static_cast<std::size_t>(idx)];
            SpanSolver<Monomial, MonomialDesc>::Vec vec;
            for (const auto& [mon, c] : member.terms()) vec[mon] = c;
            auto res = span.insert(std::move(vec));
            rec.members.push_back({n, hd, idx});
            if (!res.independent) {
                std::vector<Rational> w(rec.members.size(), Rational(0));
                w.back() = 1;
                for (const auto& [i, c] : res.combination)
                    w[static_cast<std::size_t>(i)] = -c;
                rec.witnesses.push_back(std::move(w));
            }
        }
    }
    rec.family_size = static_cast<int>(rec.members.size());
    rec.rank = span.rank();
    // pad earlier witnesses to the final family size
    for (auto& w : rec.witnesses) w.resize(rec.members.size(), Rational(0));
    return rec;
}

struct DirectnessReport {
    int k = 0;
    int m = 0;
    int D = 0;
    bool semistable = false;
    std::vector<MultidegreeRecord> records;  // sorted by multidegree

    bool direct() const {
        for (const auto& rec : records)
            if (rec.collapsed()) return false;
        return true;
    }

    int witness_count() const {
        int n = 0;
        for (const auto& rec : records)
            n += static_cast<int>(rec.witnesses.size());
        return n;
    }
};

inline bool semistable(int m, int k) { return m >= 2 * k - 1; }

// Rank analysis of the assembled families at every multidegree of total
// degree <= D. Empty witness lists throughout certify directness up to D.
inline DirectnessReport directness_report(Ambient amb, int D,
                                          long cap = default_resource_cap,
                                          int jobs = 1) {
    DirectnessReport rep;
    rep.k = amb.k;
    rep.m = amb.m;
    rep.D = D;
    rep.semistable = semistable(amb.m, amb.k);
    auto grid = multidegrees_up_to(amb.k, D);
    rep.records = parallel_map(grid, jobs, [&](const MultiDegree& d) {
        return directness_at(amb, d, cap);
    });
    return rep;
}

}  // namespace mvharm
