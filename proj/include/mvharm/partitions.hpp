#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mvharm/rational.hpp"

namespace mvharm {

// Weakly decreasing non-negative integer sequence. Stored normalized with
// trailing zeros stripped, so (2,1) and (2,1,0) compare equal; a declared
// length is supplied where it matters (shift, gl_dim).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw error("partition parts must be >= 0");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw error("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            std::size_t start = pos;
            long value = 0;
            bool any = false;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000000) throw parse_error("part too large", pos);
                ++pos;
                any = true;
            }
            if (!any) throw parse_error("expected a part", start);
            parts.push_back(static_cast<int>(value));
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos < text.size()) {
                if (text[pos] != ',')
                    throw parse_error("expected ',' between parts", pos);
                ++pos;
                if (pos == text.size())
                    throw parse_error("trailing comma", pos - 1);
            }
        }
        if (parts.empty()) throw parse_error("empty partition text", 0);
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    // i is 1-based; zero beyond the stored parts.
    int part(int i) const {
        if (i < 1 || i > length()) return 0;
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string str() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

// Column counts of the Young diagram: (a')_j = #{i : a_i >= j}.
inline Partition transpose(const Partition& a) {
    std::vector<int> cols;
    int rows = a.length();
    for (int j = 1; j <= a.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= rows; ++i)
            if (a.part(i) >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

// The stability condition on Young diagrams: the first two columns fit into
// m boxes.
inline bool is_admissible(const Partition& a, int m) {
    Partition t = transpose(a);
    return t.part(1) + t.part(2) <= m;
}

// Highest weight of the shifted module: entries a_i + m/2, padded with m/2
// up to length k.
inline std::vector<Rational> shift(const Partition& a, int m, int k) {
    if (a.length() > k) throw error("partition longer than k");
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) w.push_back(a.part(i) + rat(m, 2));
    return w;
}

// Weyl dimension formula for gl(k) with highest weight a (padded with zeros):
// product over i < j of (a_i - a_j + j - i) / (j - i).
inline Integer gl_dim(const Partition& a, int k) {
    if (a.length() > k) throw error("partition longer than k");
    Rational out(1);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            out *= rat(a.part(i) - a.part(j) + j - i, j - i);
    if (!is_integer(out)) throw error("gl_dim: non-integer product");
    return out.get_num();
}

namespace detail {

inline Integer kostka_rec(
    const std::vector<int>& shape, const std::vector<int>& content,
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo);

// Sums over all ways to peel a horizontal strip of the last content entry
// off the shape.
inline Integer kostka_strip_sum(
    const std::vector<int>& shape, std::vector<int> content,
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
    int strip = content.back();
    content.pop_back();
    while (!content.empty() && content.back() == 0) content.pop_back();
    Integer total = 0;
    // enumerate b with a_{i+1} <= b_i <= a_i and |a| - |b| = strip
    std::vector<int> b(shape.size());
    auto rec = [&](auto&& self, std::size_t i, int removed) -> void {
        if (removed > strip) return;
        if (i == shape.size()) {
            if (removed != strip) return;
            std::vector<int> trimmed = b;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            total += kostka_rec(trimmed, content, memo);
            return;
        }
        int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
        int hi = shape[i];
        if (i > 0) hi = std::min(hi, b[i - 1]);  // keep b a partition
        for (int v = lo; v <= hi; ++v) {
            b[i] = v;
            self(self, i + 1, removed + (shape[i] - v));
        }
        b[i] = 0;
    };
    rec(rec, 0, 0);
    return total;
}

inline Integer kostka_rec(
    const std::vector<int>& shape, const std::vector<int>& content,
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
    if (content.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, content);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer value = kostka_strip_sum(shape, content, memo);
    memo.emplace(std::move(key), value);
    return value;
}

}  // namespace detail

// Number of semistandard Young tableaux of shape a and content d. Content is
// taken as given apart from dropped zeros (relabeling values preserves the
// count), so permutation invariance is a real property, not a normalization
// artifact.
inline Integer kostka(const Partition& a, const std::vector<int>& d) {
    int total = 0;
    for (int e : d) {
        if (e < 0) return 0;
        total += e;
    }
    if (total != a.size()) return 0;
    std::vector<int> content;
    for (int e : d)
        if (e > 0) content.push_back(e);
    while (!content.empty() && content.back() == 0) content.pop_back();
    static thread_local std::map<
        std::pair<std::vector<int>, std::vector<int>>, Integer>
        memo;
    return detail::kostka_rec(a.parts(), content, memo);
}

// All partitions of n with at most k parts, in lexicographically decreasing
// order of the part vectors.
inline std::vector<Partition> partitions_of(int n, int k) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part, int slots) -> void {
        if (remaining == 0) {
            out.push_back(Partition(parts));
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p, slots - 1);
            parts.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n, k);
    return out;
}

// All partitions with at most k parts and every part <= max_part, ordered by
// total size then lexicographically decreasing.
inline std::vector<Partition> partitions_bounded(int k, int max_part) {
    std::vector<Partition> out;
    for (int n = 0; n <= k * max_part; ++n) {
        for (auto& a : partitions_of(n, k))
            if (a.part(1) <= max_part) out.push_back(std::move(a));
    }
    return out;
}

// All length-k tuples of non-negative integers summing to n, lexicographically
// increasing.
inline std::vector<std::vector<int>> compositions_of(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> entry(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == k - 1) {
            entry[static_cast<std::size_t>(i)] = remaining;
            out.push_back(entry);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            entry[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    if (k >= 1 && n >= 0) rec(rec, 0, n);
    return out;
}

}  // namespace mvharm
