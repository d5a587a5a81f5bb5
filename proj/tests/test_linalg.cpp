#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "mvharm/linalg.hpp"

using namespace mvharm;

namespace {

using Solver = SpanSolver<int>;

Solver::Vec vec(std::initializer_list<std::pair<int, long>> entries) {
    Solver::Vec v;
    for (auto [k, c] : entries)
        if (c != 0) v[k] = Rational(c);
    return v;
}

Solver::Vec axpy(Solver::Vec base, const Rational& c, const Solver::Vec& other) {
    for (const auto& [k, x] : other) {
        base[k] += c * x;
        if (base[k] == 0) base.erase(k);
    }
    return base;
}

}  // namespace

TEST_CASE("independent inserts raise the rank") {
    Solver s;
    CHECK(s.rank() == 0);
    auto r0 = s.insert(vec({{0, 1}, {1, 2}}));
    CHECK(r0.independent);
    CHECK(r0.index == 0);
    auto r1 = s.insert(vec({{1, 1}}));
    CHECK(r1.independent);
    CHECK(r1.index == 1);
    CHECK(s.rank() == 2);
    CHECK(s.inserted() == 2);
}

TEST_CASE("dependent insert reports the exact combination") {
    Solver s;
    s.insert(vec({{0, 1}, {1, 2}}));
    s.insert(vec({{1, 3}, {2, 1}}));
    // 2*(first) - 1*(second): (2, 4, 0) - (0, 3, 1) = (2, 1, -1)
    Solver::Vec dep = vec({{0, 2}, {1, 1}, {2, -1}});
    auto r = s.insert(dep);
    CHECK_FALSE(r.independent);
    CHECK(r.index == 2);
    REQUIRE(r.combination.size() == 2);
    CHECK(r.combination.at(0) == Rational(2));
    CHECK(r.combination.at(1) == Rational(-1));
    CHECK(s.rank() == 2);
    CHECK(s.inserted() == 3);
}

TEST_CASE("zero vector is dependent with the empty combination") {
    Solver s;
    s.insert(vec({{0, 1}}));
    auto r = s.insert(Solver::Vec{});
    CHECK_FALSE(r.independent);
    CHECK(r.combination.empty());
}

TEST_CASE("express does not mutate the span") {
    Solver s;
    s.insert(vec({{0, 1}, {1, 1}}));
    s.insert(vec({{1, 1}, {2, 1}}));
    int rank_before = s.rank();

    auto combo = s.express(vec({{0, 1}, {2, -1}}));  // first - second
    REQUIRE(combo.has_value());
    CHECK(combo->at(0) == Rational(1));
    CHECK(combo->at(1) == Rational(-1));

    CHECK_FALSE(s.express(vec({{3, 1}})).has_value());
    CHECK_FALSE(s.contains(vec({{0, 1}})));
    CHECK(s.contains(vec({{0, 1}, {1, 2}, {2, 1}})));
    CHECK(s.rank() == rank_before);
    CHECK(s.inserted() == 2);
}

TEST_CASE("combinations reproduce the inserted vector exactly") {
    std::mt19937 rng(55501);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> key(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
        Solver s;
        std::vector<Solver::Vec> originals;
        for (int i = 0; i < 12; ++i) {
            Solver::Vec v;
            int nnz = 1 + (i % 4);
            for (int t = 0; t < nnz; ++t) {
                long c = coeff(rng);
                if (c != 0) v[key(rng)] += Rational(c);
            }
            for (auto it = v.begin(); it != v.end();)
                it = it->second == 0 ? v.erase(it) : std::next(it);
            originals.push_back(v);
            auto r = s.insert(v);
            if (!r.independent) {
                Solver::Vec rebuilt;
                for (const auto& [idx, c] : r.combination)
                    rebuilt = axpy(std::move(rebuilt), c,
                                   originals[static_cast<std::size_t>(idx)]);
                CHECK(rebuilt == v);
            }
        }
    }
}

TEST_CASE("reduced basis is canonical regardless of insertion order") {
    std::vector<Solver::Vec> rows = {
        vec({{0, 2}, {1, 4}, {3, 2}}),
        vec({{1, 1}, {2, 1}}),
        vec({{0, 1}, {1, 3}, {2, 1}, {3, 1}}),  // sum of the first two halves
        vec({{2, 5}, {3, 1}}),
    };
    std::sort(rows.begin(), rows.end());
    std::vector<std::vector<Solver::Vec>> bases;
    do {
        Solver s;
        for (const auto& r : rows) s.insert(r);
        bases.push_back(s.reduced_basis());
    } while (std::next_permutation(rows.begin(), rows.end()));
    for (const auto& b : bases) CHECK(b == bases.front());
    CHECK(bases.front().size() == 3);
}

TEST_CASE("reduced basis rows have unit pivots and cleared pivot columns") {
    std::mt19937 rng(77007);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> key(0, 5);
    Solver s;
    for (int i = 0; i < 10; ++i) {
        Solver::Vec v;
        for (int t = 0; t < 3; ++t) v[key(rng)] += Rational(coeff(rng));
        for (auto it = v.begin(); it != v.end();)
            it = it->second == 0 ? v.erase(it) : std::next(it);
        s.insert(v);
    }
    auto basis = s.reduced_basis();
    CHECK(static_cast<int>(basis.size()) == s.rank());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        REQUIRE_FALSE(basis[r].empty());
        auto pivot = basis[r].begin()->first;
        CHECK(basis[r].begin()->second == Rational(1));
        if (r + 1 < basis.size()) CHECK(pivot < basis[r + 1].begin()->first);
        for (std::size_t other = 0; other < basis.size(); ++other) {
            if (other == r) continue;
            CHECK(basis[other].find(pivot) == basis[other].end());
        }
    }
}
