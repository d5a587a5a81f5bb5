#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvharm/linalg.hpp"
#include "mvharm/polynomial.hpp"
#include "mvharm/rational.hpp"

namespace mvharm {

// One normal-ordered word x^a * d^b.
struct WeylKey {
    Monomial x;
    Monomial d;

    friend bool operator==(const WeylKey&, const WeylKey&) = default;
    friend std::strong_ordering operator<=>(const WeylKey& lhs,
                                            const WeylKey& rhs) {
        if (auto c = lhs.x <=> rhs.x; c != 0) return c;
        return lhs.d <=> rhs.d;
    }
};

struct WeylKeyDesc {
    bool operator()(const WeylKey& a, const WeylKey& b) const { return b < a; }
};

// Element of the Weyl algebra on the k*m variables, kept in normal order
// (every x-factor left of every d-factor). Canonical form is unique, so
// equality and span questions reduce to coefficient linear algebra.
class WeylElement {
public:
    using TermMap = std::map<WeylKey, Rational, WeylKeyDesc>;

    explicit WeylElement(Ambient amb) : amb_(amb) {}

    static WeylElement zero(Ambient amb) { return WeylElement(amb); }

    static WeylElement scalar(Ambient amb, const Rational& c) {
        WeylElement w(amb);
        w.add_term({Monomial::one(), Monomial::one()}, c);
        return w;
    }

    // Multiplication operator by the monomial x^mon.
    static WeylElement multiplication(Ambient amb, const Monomial& mon) {
        WeylElement w(amb);
        w.add_term({mon, Monomial::one()}, 1);
        return w;
    }

    static WeylElement differentiation(Ambient amb, const Monomial& mon) {
        WeylElement w(amb);
        w.add_term({Monomial::one(), mon}, 1);
        return w;
    }

    const Ambient& ambient() const { return amb_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const WeylKey& key, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    WeylElement& operator+=(const WeylElement& other) {
        require_same_ambient(amb_, other.amb_);
        for (const auto& [key, c] : other.terms_) add_term(key, c);
        return *this;
    }

    WeylElement& operator-=(const WeylElement& other) {
        require_same_ambient(amb_, other.amb_);
        for (const auto& [key, c] : other.terms_) add_term(key, -c);
        return *this;
    }

    WeylElement& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
        } else {
            for (auto& [key, coeff] : terms_) coeff *= c;
        }
        return *this;
    }

    friend WeylElement operator+(WeylElement lhs, const WeylElement& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend WeylElement operator-(WeylElement lhs, const WeylElement& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend WeylElement operator*(const Rational& c, WeylElement w) {
        w *= c;
        return w;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.amb_ == b.amb_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    Ambient amb_;
    TermMap terms_;
};

namespace detail {

inline void check_pair_index(const Ambient& amb, int i, int j) {
    if (i < 1 || i > amb.k || j < 1 || j > amb.k)
        throw error("operator index out of range");
}

// Falling factorial e * (e-1) * ... * (e-b+1); zero when b > e.
inline Integer falling(int e, int b) {
    if (b > e) return 0;
    Integer out = 1;
    for (int s = 0; s < b; ++s) out *= e - s;
    return out;
}

}  // namespace detail

// Mixed Laplacian: sum over coordinates s of d{i}_s d{j}_s.
inline WeylElement laplacian(Ambient amb, int i, int j) {
    detail::check_pair_index(amb, i, j);
    WeylElement w(amb);
    for (int s = 1; s <= amb.m; ++s) {
        Monomial d = Monomial::variable({i, s}).times(Monomial::variable({j, s}));
        w.add_term({Monomial::one(), d}, 1);
    }
    return w;
}

// Multiplication by the mixed square: sum over s of x{i}_s x{j}_s.
inline WeylElement rsquared(Ambient amb, int i, int j) {
    detail::check_pair_index(amb, i, j);
    WeylElement w(amb);
    for (int s = 1; s <= amb.m; ++s) {
        Monomial x = Monomial::variable({i, s}).times(Monomial::variable({j, s}));
        w.add_term({x, Monomial::one()}, 1);
    }
    return w;
}

// Mixed Euler operator: sum over s of x{i}_s d{j}_s, plus m/2 on the diagonal.
inline WeylElement euler(Ambient amb, int i, int j) {
    detail::check_pair_index(amb, i, j);
    WeylElement w(amb);
    for (int s = 1; s <= amb.m; ++s)
        w.add_term({Monomial::variable({i, s}), Monomial::variable({j, s})}, 1);
    if (i == j) w.add_term({Monomial::one(), Monomial::one()}, rat(amb.m, 2));
    return w;
}

inline Polynomial apply(const WeylElement& w, const Polynomial& p) {
    require_same_ambient(w.ambient(), p.ambient());
    Polynomial out(p.ambient());
    for (const auto& [key, c] : w.terms()) {
        for (const auto& [mon, q] : p.terms()) {
            // d^b on x^mon: falling factorials per variable.
            Integer scale = 1;
            Monomial lowered = mon;
            bool killed = false;
            for (const auto& [v, b] : key.d.factors()) {
                int e = mon.exponent(v);
                if (e < b) {
                    killed = true;
                    break;
                }
                scale *= detail::falling(e, b);
                for (int s = 0; s < b; ++s) lowered.decrement(v);
            }
            if (killed) continue;
            out.add_term(key.x.times(lowered), c * q * Rational(scale));
        }
    }
    return out;
}

namespace detail {

// Expands d^b * x^c into normal order and feeds each resulting word
// x^{c-t} d^{b-t} with its integer coefficient to sink. The sum runs over
// componentwise t <= min(b, c) with coefficient prod C(b_v,t_v) C(c_v,t_v) t_v!.
inline void normal_order_cross(
    const Monomial& b, const Monomial& c,
    const std::function<void(const Monomial&, const Monomial&, const Integer&)>&
        sink) {
    std::vector<std::pair<VarIndex, std::pair<int, int>>> shared;
    for (const auto& [v, eb] : b.factors()) {
        int ec = c.exponent(v);
        if (ec > 0) shared.push_back({v, {eb, ec}});
    }
    std::vector<int> t(shared.size(), 0);
    while (true) {
        Integer coeff = 1;
        Monomial xs = c, ds = b;
        for (std::size_t idx = 0; idx < shared.size(); ++idx) {
            const auto& [v, ebec] = shared[idx];
            const auto& [eb, ec] = ebec;
            int tv = t[idx];
            coeff *= binomial(eb, tv) * binomial(ec, tv) * factorial(
                static_cast<unsigned long>(tv));
            for (int s = 0; s < tv; ++s) {
                xs.decrement(v);
                ds.decrement(v);
            }
        }
        sink(xs, ds, coeff);
        // next t in the box [0, min(eb, ec)] per shared variable
        std::size_t idx = 0;
        for (; idx < shared.size(); ++idx) {
            const auto& [v, ebec] = shared[idx];
            int cap = std::min(ebec.first, ebec.second);
            if (t[idx] < cap) {
                ++t[idx];
                break;
            }
            t[idx] = 0;
        }
        if (idx == shared.size()) break;
    }
}

}  // namespace detail

inline WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
    require_same_ambient(w1.ambient(), w2.ambient());
    WeylElement out(w1.ambient());
    for (const auto& [ka, ca] : w1.terms()) {
        for (const auto& [kb, cb] : w2.terms()) {
            Rational c = ca * cb;
            detail::normal_order_cross(
                ka.d, kb.x,
                [&](const Monomial& xs, const Monomial& ds, const Integer& n) {
                    out.add_term({ka.x.times(xs), ds.times(kb.d)},
                                 c * Rational(n));
                });
        }
    }
    return out;
}

inline WeylElement commutator(const WeylElement& w1, const WeylElement& w2) {
    return compose(w1, w2) - compose(w2, w1);
}

// Exact coefficients c with W = sum c_i basis_i, or nullopt when W is outside
// the span. The zero operator always yields the zero vector.
inline std::optional<std::vector<Rational>> span_membership(
    const WeylElement& w, const std::vector<WeylElement>& basis) {
    SpanSolver<WeylKey, WeylKeyDesc> solver;
    for (const auto& b : basis) {
        require_same_ambient(w.ambient(), b.ambient());
        SpanSolver<WeylKey, WeylKeyDesc>::Vec vec;
        for (const auto& [key, c] : b.terms()) vec[key] = c;
        solver.insert(std::move(vec));
    }
    SpanSolver<WeylKey, WeylKeyDesc>::Vec target;
    for (const auto& [key, c] : w.terms()) target[key] = c;
    auto combo = solver.express(std::move(target));
    if (!combo) return std::nullopt;
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [i, c] : *combo) out[static_cast<std::size_t>(i)] = c;
    return out;
}

// Named spanning set of the full invariant algebra: laplacians and squares
// over i <= j, Euler operators over all (i, j). Deterministic order.
inline std::vector<std::pair<std::string, WeylElement>> sp_spanning_set(
    Ambient amb) {
    std::vector<std::pair<std::string, WeylElement>> out;
    auto name = [](char tag, int i, int j) {
        return std::string(1, tag) + std::to_string(i) + std::to_string(j);
    };
    for (int i = 1; i <= amb.k; ++i)
        for (int j = i; j <= amb.k; ++j)
            out.push_back({name('D', i, j), laplacian(amb, i, j)});
    for (int i = 1; i <= amb.k; ++i)
        for (int j = i; j <= amb.k; ++j)
            out.push_back({name('R', i, j), rsquared(amb, i, j)});
    for (int i = 1; i <= amb.k; ++i)
        for (int j = 1; j <= amb.k; ++j)
            out.push_back({name('H', i, j), euler(amb, i, j)});
    return out;
}

inline std::vector<std::pair<std::string, WeylElement>> gl_spanning_set(
    Ambient amb) {
    std::vector<std::pair<std::string, WeylElement>> out;
    for (int i = 1; i <= amb.k; ++i)
        for (int j = 1; j <= amb.k; ++j)
            out.push_back({"H" + std::to_string(i) + std::to_string(j),
                           euler(amb, i, j)});
    return out;
}

struct ClosureReport {
    int k = 0;
    int m = 0;
    int span_dim = 0;
    int expected_span_dim = 0;
    int gl_dim = 0;
    int expected_gl_dim = 0;
    int pairs_checked = 0;
    bool closed = false;     // every pairwise bracket back in the span
    bool gl_closed = false;  // Euler brackets back in the Euler span
    std::vector<std::pair<std::string, std::string>> failures;

    bool ok() const {
        return closed && gl_closed && span_dim == expected_span_dim &&
               gl_dim == expected_gl_dim;
    }
};

// Checks every pairwise commutator of the spanning set for membership in its
// span and measures both span dimensions.
inline ClosureReport closure_report(Ambient amb) {
    ClosureReport rep;
    rep.k = amb.k;
    rep.m = amb.m;
    rep.expected_span_dim = amb.k * (2 * amb.k + 1);
    rep.expected_gl_dim = amb.k * amb.k;

    auto span_dim_of = [](const std::vector<std::pair<std::string, WeylElement>>&
                              set) {
        SpanSolver<WeylKey, WeylKeyDesc> solver;
        for (const auto& [name, w] : set) {
            SpanSolver<WeylKey, WeylKeyDesc>::Vec vec;
            for (const auto& [key, c] : w.terms()) vec[key] = c;
            solver.insert(std::move(vec));
        }
        return solver.rank();
    };

    auto closure_of = [&rep](
        const std::vector<std::pair<std::string, WeylElement>>& set) {
        std::vector<WeylElement> basis;
        basis.reserve(set.size());
        for (const auto& [name, w] : set) basis.push_back(w);
        bool ok = true;
        for (std::size_t a = 0; a < set.size(); ++a) {
            for (std::size_t b = a + 1; b < set.size(); ++b) {
                ++rep.pairs_checked;
                if (!span_membership(commutator(set[a].second, set[b].second),
                                     basis)) {
                    ok = false;
                    rep.failures.push_back({set[a].first, set[b].first});
                }
            }
        }
        return ok;
    };

    auto sp = sp_spanning_set(amb);
    auto gl = gl_spanning_set(amb);
    rep.span_dim = span_dim_of(sp);
    rep.gl_dim = span_dim_of(gl);
    rep.closed = closure_of(sp);
    rep.gl_closed = closure_of(gl);
    return rep;
}

inline std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    auto word = [](const WeylKey& key) {
        std::string out;
        for (const auto& [v, e] : key.x.factors()) {
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(v.vec) + "_" + std::to_string(v.coord);
            if (e != 1) out += "^" + std::to_string(e);
        }
        for (const auto& [v, e] : key.d.factors()) {
            if (!out.empty()) out += "*";
            out += "d" + std::to_string(v.vec) + "_" + std::to_string(v.coord);
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    };
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
            first = false;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        std::string w = word(key);
        if (w.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += w;
        }
    }
    return out;
}

namespace detail {

// Parser for the operator expression language of the CLI: literals D{i}{j},
// R{i}{j}, H{i}{j} with single-digit indices, commutators [A,B], sums with
// +/- and optional rational scalar factors q*A.
class OperatorParser {
public:
    OperatorParser(const std::string& text, Ambient amb)
        : text_(text), amb_(amb) {}

    WeylElement run() {
        skip_ws();
        WeylElement out = parse_expr();
        skip_ws();
        if (!at_end()) throw parse_error("trailing input", pos_);
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    WeylElement parse_expr() {
        skip_ws();
        int sign = 1;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        WeylElement out = parse_term();
        if (sign < 0) out *= -1;
        while (true) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
            int s = peek() == '-' ? -1 : 1;
            ++pos_;
            WeylElement t = parse_term();
            if (s < 0) t *= -1;
            out += t;
        }
        return out;
    }

    WeylElement parse_term() {
        skip_ws();
        if (at_end()) throw parse_error("expected an operator term", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational c = parse_rational_token();
            skip_ws();
            if (at_end() || peek() != '*')
                throw parse_error("expected '*' after scalar", pos_);
            ++pos_;
            WeylElement w = parse_atom();
            w *= c;
            return w;
        }
        return parse_atom();
    }

    Rational parse_rational_token() {
        long num = parse_digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t dpos = pos_;
            long den = parse_digits();
            if (den == 0) throw parse_error("zero denominator", dpos);
            return rat(num, den);
        }
        return Rational(num);
    }

    long parse_digits() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a number", pos_);
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000000L) throw parse_error("number too large", pos_);
            ++pos_;
        }
        return value;
    }

    WeylElement parse_atom() {
        skip_ws();
        if (at_end()) throw parse_error("expected an operator", pos_);
        char c = peek();
        if (c == '[') {
            ++pos_;
            WeylElement a = parse_expr();
            skip_ws();
            if (at_end() || peek() != ',')
                throw parse_error("expected ',' in commutator", pos_);
            ++pos_;
            WeylElement b = parse_expr();
            skip_ws();
            if (at_end() || peek() != ']')
                throw parse_error("expected ']'", pos_);
            ++pos_;
            return commutator(a, b);
        }
        if (c == 'D' || c == 'R' || c == 'H') {
            ++pos_;
            int i = parse_single_digit("first operator index");
            int j = parse_single_digit("second operator index");
            if (i < 1 || i > amb_.k || j < 1 || j > amb_.k)
                throw parse_error("operator index out of range", pos_ - 1);
            if (c == 'D') return laplacian(amb_, i, j);
            if (c == 'R') return rsquared(amb_, i, j);
            return euler(amb_, i, j);
        }
        throw parse_error("expected 'D', 'R', 'H' or '['", pos_);
    }

    int parse_single_digit(const std::string& what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected " + what, pos_);
        int d = peek() - '0';
        ++pos_;
        return d;
    }

    const std::string& text_;
    Ambient amb_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline WeylElement parse_operator(const std::string& text, Ambient amb) {
    return detail::OperatorParser(text, amb).run();
}

}  // namespace mvharm
