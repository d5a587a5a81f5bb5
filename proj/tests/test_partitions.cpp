#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "mvharm/partitions.hpp"

using namespace mvharm;

namespace {

// Independent Kostka oracle: direct enumeration of semistandard tableaux of
// shape a and content d (rows weakly increase, columns strictly increase).
long ssyt_count(const Partition& a, std::vector<int> content) {
    std::vector<std::vector<int>> rows(
        static_cast<std::size_t>(a.length()));
    for (int i = 1; i <= a.length(); ++i)
        rows[static_cast<std::size_t>(i - 1)].assign(
            static_cast<std::size_t>(a.part(i)), 0);
    long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == a.length()) {
            ++count;
            return;
        }
        if (c == a.part(r + 1)) {
            self(self, r + 1, 0);
            return;
        }
        for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
            if (content[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (c > 0 && v < rows[static_cast<std::size_t>(r)]
                                 [static_cast<std::size_t>(c - 1)])
                continue;
            if (r > 0 && static_cast<int>(
                             rows[static_cast<std::size_t>(r - 1)].size()) >
                             c &&
                v <= rows[static_cast<std::size_t>(r - 1)]
                         [static_cast<std::size_t>(c)])
                continue;
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                v;
            --content[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1);
            ++content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace

TEST_CASE("partition construction normalizes and validates") {
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition({0, 0}) == Partition());
    CHECK(Partition({3}).length() == 1);
    CHECK(Partition({3, 2}).size() == 5);
    CHECK(Partition({3, 2}).part(1) == 3);
    CHECK(Partition({3, 2}).part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), error);
    CHECK_THROWS_AS(Partition({2, -1}), error);
}

TEST_CASE("partition parse and render") {
    CHECK(Partition::parse("2,1") == Partition({2, 1}));
    CHECK(Partition::parse(" 4 , 4 , 1 ") == Partition({4, 4, 1}));
    CHECK(Partition::parse("0") == Partition());
    CHECK(Partition({2, 1}).str() == "2,1");
    CHECK(Partition().str() == "0");
    CHECK_THROWS_AS(Partition::parse(""), parse_error);
    CHECK_THROWS_AS(Partition::parse("2,"), parse_error);
    CHECK_THROWS_AS(Partition::parse("2;1"), parse_error);
    CHECK_THROWS_AS(Partition::parse("a"), parse_error);
    CHECK_THROWS_AS(Partition::parse("1,2"), error);  // not decreasing
}

TEST_CASE("transpose matches column counts and is an involution") {
    CHECK(transpose(Partition()) == Partition());
    CHECK(transpose(Partition({2, 1})) == Partition({2, 1}));
    CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(transpose(Partition({4})) == Partition({1, 1, 1, 1}));
    for (const auto& a : partitions_bounded(4, 4))
        CHECK(transpose(transpose(a)) == a);
}

TEST_CASE("admissibility counts the first two columns") {
    CHECK(is_admissible(Partition({5}), 2));
    CHECK(is_admissible(Partition({1}), 1));
    CHECK_FALSE(is_admissible(Partition({2}), 1));
    CHECK(is_admissible(Partition({1, 1}), 2));
    CHECK_FALSE(is_admissible(Partition({1, 1, 1}), 2));
    CHECK(is_admissible(Partition({2, 2}), 4));

    // monotone in m
    for (const auto& a : partitions_bounded(3, 3))
        for (int m = 1; m <= 5; ++m)
            if (is_admissible(a, m)) CHECK(is_admissible(a, m + 1));
}

TEST_CASE("shift pads with m/2") {
    auto w = shift(Partition(), 3, 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == rat(3, 2));
    CHECK(w[1] == rat(3, 2));

    auto v = shift(Partition({2, 1}), 4, 2);
    CHECK(v[0] == Rational(4));
    CHECK(v[1] == Rational(3));

    auto u = shift(Partition({1}), 3, 2);
    CHECK(u[0] == rat(5, 2));
    CHECK(u[1] == rat(3, 2));

    CHECK_THROWS_AS(shift(Partition({1, 1, 1}), 3, 2), error);
}

TEST_CASE("gl dimension formula") {
    CHECK(gl_dim(Partition(), 3) == 1);
    CHECK(gl_dim(Partition({1}), 2) == 2);
    CHECK(gl_dim(Partition({2, 1}), 2) == 2);
    CHECK(gl_dim(Partition({1}), 3) == 3);
    CHECK(gl_dim(Partition({1, 1}), 3) == 3);
    CHECK(gl_dim(Partition({2}), 3) == 6);
    CHECK(gl_dim(Partition({2, 1}), 3) == 8);
}

TEST_CASE("kostka numbers match the tableau oracle") {
    CHECK(kostka(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka(Partition({1, 1}), {2, 0}) == 0);
    CHECK(kostka(Partition({2}), {1, 1}) == 1);
    CHECK(kostka(Partition({3, 1}), {2, 1, 1}) == 2);
    CHECK(kostka(Partition({2, 2}), {1, 1, 1, 1}) == 2);
    CHECK(kostka(Partition({2, 1}), {0, 1, 1, 1}) == 2);

    for (const auto& a : partitions_bounded(3, 3)) {
        if (a.size() > 6) continue;
        // kostka(a, a) = 1 (the superstandard filling)
        std::vector<int> self(a.parts());
        while (static_cast<int>(self.size()) < 3) self.push_back(0);
        if (a.size() > 0) CHECK(kostka(a, self) == 1);
        for (const auto& c : compositions_of(a.size(), 3)) {
            INFO("shape " << a.str());
            CHECK(kostka(a, c) == ssyt_count(a, c));
        }
    }
}

TEST_CASE("kostka is invariant under permuting the content") {
    for (const auto& a : partitions_bounded(3, 3)) {
        if (a.size() > 5) continue;
        for (auto c : compositions_of(a.size(), 3)) {
            Integer base = kostka(a, c);
            std::sort(c.begin(), c.end());
            do {
                CHECK(kostka(a, c) == base);
            } while (std::next_permutation(c.begin(), c.end()));
        }
    }
}

TEST_CASE("weight multiplicities sum to the module dimension") {
    for (int k = 2; k <= 3; ++k) {
        for (const auto& a : partitions_bounded(k, 3)) {
            Integer total = 0;
            for (const auto& c : compositions_of(a.size(), k))
                total += kostka(a, c);
            INFO("shape " << a.str() << " k=" << k);
            CHECK(total == gl_dim(a, k));
        }
    }
}

TEST_CASE("kostka degenerate cases") {
    CHECK(kostka(Partition({2, 1}), {1, 1}) == 0);  // size mismatch
    CHECK(kostka(Partition(), {0, 0}) == 1);
    CHECK(kostka(Partition({1}), {0, 1}) == 1);
    CHECK(kostka(Partition({3}), {1, 1, 1}) == 1);
    CHECK(kostka(Partition({1, 1, 1}), {1, 1, 1}) == 1);
    CHECK(kostka(Partition({1, 1, 1}), {2, 1, 0}) == 0);
}

TEST_CASE("partition and composition enumeration") {
    auto p4 = partitions_of(4, 2);
    std::vector<Partition> expected = {Partition({4}), Partition({3, 1}),
                                       Partition({2, 2})};
    CHECK(p4 == expected);

    auto p0 = partitions_of(0, 2);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());

    auto c2 = compositions_of(2, 2);
    std::vector<std::vector<int>> cexp = {{0, 2}, {1, 1}, {2, 0}};
    CHECK(c2 == cexp);

    auto b = partitions_bounded(2, 2);
    CHECK(b.size() == 6);  // (), (1), (1,1), (2), (2,1), (2,2)
}
