#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mvharm/rational.hpp"

namespace mvharm {

// Incremental exact span tracker over sparse rational vectors with keys of
// type Key, ordered by Cmp. Maintains a reduced echelon basis (pivots
// normalized to 1 and cleared from every other row, pivot = first key in Cmp
// order) and, per row, its expression as a combination of the originally
// inserted vectors. Dependent inserts therefore come with an exact linear
// relation, which is how kernels and witnesses are extracted everywhere in
// this library.
template <typename Key, typename Cmp = std::less<Key>>
class SpanSolver {
public:
    using Vec = std::map<Key, Rational, Cmp>;
    using Combo = std::map<int, Rational>;  // index of insert -> coefficient

    struct InsertResult {
        int index;         // index assigned to this insert
        bool independent;  // false when the vector was already in the span
        // When dependent: vec == sum combination[i] * original_i with i < index.
        Combo combination;
    };

    // Every insert consumes an index, dependent or not.
    InsertResult insert(Vec vec) {
        int index = inserted_++;
        Combo expr;
        expr[index] = 1;
        reduce(vec, expr);
        if (vec.empty()) {
            Combo combination;
            for (const auto& [i, c] : expr)
                if (i != index) combination[i] = -c;
            return {index, false, std::move(combination)};
        }
        normalize(vec, expr);
        back_eliminate(vec, expr);
        pivot_of_row_[vec.begin()->first] = static_cast<int>(rows_.size());
        rows_.push_back({std::move(vec), std::move(expr)});
        return {index, true, {}};
    }

    // Expresses vec over the original inserted vectors without mutating the
    // solver. Returns nullopt when vec is outside the span.
    std::optional<Combo> express(Vec vec) const {
        Combo expr;
        reduce(vec, expr);
        if (!vec.empty()) return std::nullopt;
        for (auto& [i, c] : expr) c = -c;
        return expr;
    }

    bool contains(Vec vec) const {
        Combo expr;
        reduce(vec, expr);
        return vec.empty();
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return inserted_; }

    // Reduced echelon rows in pivot order.
    std::vector<Vec> reduced_basis() const {
        std::vector<Vec> out;
        out.reserve(rows_.size());
        for (const auto& [pivot, idx] : pivot_of_row_)
            out.push_back(rows_[static_cast<std::size_t>(idx)].v);
        return out;
    }

private:
    struct Row {
        Vec v;
        Combo expr;  // v == sum expr[i] * original_i
    };

    // Shared by Vec and Combo; a template because the two coincide when Key
    // is int.
    template <typename Map>
    static void axpy(Map& target, const Rational& c, const Map& source) {
        for (const auto& [key, value] : source) {
            auto [it, inserted] = target.try_emplace(key, 0);
            it->second += c * value;
            if (sgn(it->second) == 0) target.erase(it);
        }
    }

    // Clears every pivot key from vec. Row tails hold no pivot keys and no
    // keys before their own pivot, so a single forward sweep suffices.
    void reduce(Vec& vec, Combo& expr) const {
        auto it = vec.begin();
        while (it != vec.end()) {
            auto pivot_it = pivot_of_row_.find(it->first);
            if (pivot_it == pivot_of_row_.end()) {
                ++it;
                continue;
            }
            Key key = it->first;
            const Row& row = rows_[static_cast<std::size_t>(pivot_it->second)];
            Rational c = -it->second;  // row pivot entry is 1
            axpy(vec, c, row.v);
            axpy(expr, c, row.expr);
            it = vec.upper_bound(key);
        }
    }

    static void normalize(Vec& vec, Combo& expr) {
        Rational inv = 1 / vec.begin()->second;
        if (inv == 1) return;
        for (auto& [key, value] : vec) value *= inv;
        for (auto& [key, value] : expr) value *= inv;
    }

    void back_eliminate(const Vec& vec, const Combo& expr) {
        const Key& pivot = vec.begin()->first;
        for (auto& row : rows_) {
            auto it = row.v.find(pivot);
            if (it == row.v.end()) continue;
            Rational c = -it->second;
            axpy(row.v, c, vec);
            axpy(row.expr, c, expr);
        }
    }

    std::vector<Row> rows_;
    std::map<Key, int, Cmp> pivot_of_row_;
    int inserted_ = 0;
};

}  // namespace mvharm
