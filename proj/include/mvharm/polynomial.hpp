#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvharm/rational.hpp"

namespace mvharm {

// A variable x{i}_{j}: component j of the i-th vector variable. Both indices
// are 1-based.
struct VarIndex {
    int vec;
    int coord;

    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

// The ambient polynomial space: k vector variables, each with m coordinates.
struct Ambient {
    int k = 1;
    int m = 1;

    Ambient() = default;
    Ambient(int k_, int m_) : k(k_), m(m_) {
        if (k < 1 || m < 1) throw error("ambient requires k >= 1 and m >= 1");
    }

    bool contains(VarIndex v) const {
        return v.vec >= 1 && v.vec <= k && v.coord >= 1 && v.coord <= m;
    }

    friend bool operator==(const Ambient&, const Ambient&) = default;

    std::string str() const {
        return "(k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
    }
};

inline void require_same_ambient(const Ambient& a, const Ambient& b) {
    if (!(a == b))
        throw error("ambient mismatch: " + a.str() + " vs " + b.str());
}

// Exponent vector with the zero exponents omitted, kept sorted by variable.
class Monomial {
public:
    using Factor = std::pair<VarIndex, int>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial variable(VarIndex v, int exponent = 1) {
        Monomial mon;
        if (exponent < 0) throw error("negative exponent");
        if (exponent > 0) mon.factors_.push_back({v, exponent});
        return mon;
    }

    // Factors must be sorted by VarIndex with positive exponents; merges are
    // not performed here.
    static Monomial from_sorted(std::vector<Factor> factors) {
        Monomial mon;
        mon.factors_ = std::move(factors);
        return mon;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    int degree_in_vector(int vec) const {
        int d = 0;
        for (const auto& [v, e] : factors_)
            if (v.vec == vec) d += e;
        return d;
    }

    int exponent(VarIndex v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    Monomial times(const Monomial& other) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + other.factors_.size());
        auto a = factors_.begin(), ae = factors_.end();
        auto b = other.factors_.begin(), be = other.factors_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.factors_.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                out.factors_.push_back(*b++);
            } else {
                out.factors_.push_back({a->first, a->second + b->second});
                ++a;
                ++b;
            }
        }
        return out;
    }

    // Lowers the exponent of v by one, dropping the factor at zero. Returns
    // false when v does not occur.
    bool decrement(VarIndex v) {
        for (auto it = factors_.begin(); it != factors_.end(); ++it) {
            if (it->first == v) {
                if (--it->second == 0) factors_.erase(it);
                return true;
            }
        }
        return false;
    }

    Monomial with_increment(VarIndex v) const {
        return times(variable(v));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Graded lexicographic order on (vector, coordinate) pairs: total degree
    // first, then the dense exponent sequence. This is the canonical term
    // order of the whole library.
    friend std::strong_ordering operator<=>(const Monomial& lhs,
                                            const Monomial& rhs) {
        if (int c = lhs.degree() - rhs.degree(); c != 0)
            return c < 0 ? std::strong_ordering::less
                         : std::strong_ordering::greater;
        auto a = lhs.factors_.begin(), ae = lhs.factors_.end();
        auto b = rhs.factors_.begin(), be = rhs.factors_.end();
        while (a != ae || b != be) {
            if (a == ae) return std::strong_ordering::less;
            if (b == be) return std::strong_ordering::greater;
            if (a->first != b->first)
                return a->first < b->first ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
            if (a->second != b->second)
                return a->second > b->second ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
            ++a;
            ++b;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<Factor> factors_;
};

// Leading-term-first comparator; polynomial term maps iterate from the
// canonically largest monomial down.
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return b < a;
    }
};

// Degrees (d_1, ..., d_k) in each of the k vector variables.
struct MultiDegree {
    std::vector<int> degrees;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> d) : degrees(std::move(d)) {}

    static MultiDegree zero(int k) { return MultiDegree(std::vector<int>(k, 0)); }

    static MultiDegree of(const Monomial& mon, int k) {
        MultiDegree d = zero(k);
        for (const auto& [v, e] : mon.factors()) d.degrees[v.vec - 1] += e;
        return d;
    }

    int size() const { return static_cast<int>(degrees.size()); }

    int total() const {
        int t = 0;
        for (int d : degrees) t += d;
        return t;
    }

    bool non_negative() const {
        return std::all_of(degrees.begin(), degrees.end(),
                           [](int d) { return d >= 0; });
    }

    int operator[](int i) const { return degrees[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return degrees[static_cast<std::size_t>(i)]; }

    MultiDegree plus(int i, int delta) const {
        MultiDegree out = *this;
        out.degrees[static_cast<std::size_t>(i)] += delta;
        return out;
    }

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

    // Total degree first, then lexicographic; a deterministic report order.
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.degrees < b.degrees;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees[i]);
        }
        return s + ")";
    }
};

// Sparse multivariate polynomial over the rationals in the k*m variables
// x{i}_{j}. Canonical form: no zero coefficients, terms ordered leading
// first, coefficients in lowest terms. Two equal polynomials have identical
// term maps, so equality is representational.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDesc>;

    explicit Polynomial(Ambient amb) : amb_(amb) {}

    static Polynomial zero(Ambient amb) { return Polynomial(amb); }

    static Polynomial constant(Ambient amb, const Rational& c) {
        Polynomial p(amb);
        p.add_term(Monomial::one(), c);
        return p;
    }

    static Polynomial one(Ambient amb) { return constant(amb, 1); }

    static Polynomial variable(Ambient amb, VarIndex v) {
        if (!amb.contains(v)) throw error("variable index out of range");
        Polynomial p(amb);
        p.add_term(Monomial::variable(v), 1);
        return p;
    }

    static Polynomial monomial(Ambient amb, const Monomial& mon,
                               const Rational& c = 1) {
        Polynomial p(amb);
        p.add_term(mon, c);
        return p;
    }

    const Ambient& ambient() const { return amb_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& mon) const {
        auto it = terms_.find(mon);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial::one()); }

    int total_degree() const {
        int d = 0;
        for (const auto& [mon, c] : terms_) d = std::max(d, mon.degree());
        return d;
    }

    void add_term(const Monomial& mon, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(mon, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& other) {
        require_same_ambient(amb_, other.amb_);
        for (const auto& [mon, c] : other.terms_) add_term(mon, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        require_same_ambient(amb_, other.amb_);
        for (const auto& [mon, c] : other.terms_) add_term(mon, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
        } else {
            for (auto& [mon, coeff] : terms_) coeff *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        require_same_ambient(lhs.amb_, rhs.amb_);
        Polynomial out(lhs.amb_);
        for (const auto& [ma, ca] : lhs.terms_)
            for (const auto& [mb, cb] : rhs.terms_)
                out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    friend Polynomial operator*(const Rational& c, Polynomial p) {
        p *= c;
        return p;
    }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial out = p;
        for (auto& [mon, c] : out.terms_) c = -c;
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.amb_ == b.amb_ && a.terms_ == b.terms_;
    }

    Polynomial derivative(VarIndex v) const {
        if (!amb_.contains(v)) throw error("variable index out of range");
        Polynomial out(amb_);
        for (const auto& [mon, c] : terms_) {
            int e = mon.exponent(v);
            if (e == 0) continue;
            Monomial lowered = mon;
            lowered.decrement(v);
            out.add_term(lowered, c * e);
        }
        return out;
    }

    bool is_homogeneous(const MultiDegree& d) const {
        for (const auto& [mon, c] : terms_)
            if (!(MultiDegree::of(mon, amb_.k) == d)) return false;
        return true;
    }

    // Splits into homogeneous parts; the parts sum back to the input.
    std::map<MultiDegree, Polynomial> multidegree_split() const {
        std::map<MultiDegree, Polynomial> parts;
        for (const auto& [mon, c] : terms_) {
            MultiDegree d = MultiDegree::of(mon, amb_.k);
            auto it = parts.find(d);
            if (it == parts.end())
                it = parts.emplace(d, Polynomial(amb_)).first;
            it->second.add_term(mon, c);
        }
        return parts;
    }

    std::string str() const;

    static Polynomial parse(const std::string& text, int k, int m);

private:
    Ambient amb_;
    TermMap terms_;
};

inline std::string render_monomial(const Monomial& mon) {
    std::string out;
    bool first = true;
    for (const auto& [v, e] : mon.factors()) {
        if (!first) out += "*";
        first = false;
        out += "x" + std::to_string(v.vec) + "_" + std::to_string(v.coord);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mon, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
            first = false;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (mon.is_one()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += render_monomial(mon);
        }
    }
    return out;
}

namespace detail {

// Recursive-descent parser for the polynomial text grammar: terms joined by
// +/-, each an optional rational coefficient and '*'-separated variable
// powers x{i}_{j}[^e] with e >= 1.
class PolyParser {
public:
    PolyParser(const std::string& text, Ambient amb)
        : text_(text), amb_(amb) {}

    Polynomial run() {
        Polynomial result(amb_);
        skip_ws();
        if (at_end()) throw parse_error("empty input", pos_);
        int sign = consume_sign().value_or(+1);
        while (true) {
            parse_term(sign, result);
            skip_ws();
            if (at_end()) break;
            auto s = consume_sign();
            if (!s) throw parse_error("expected '+' or '-'", pos_);
            sign = *s;
            skip_ws();
            if (at_end()) throw parse_error("dangling sign", pos_);
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                             peek() == '\r'))
            ++pos_;
    }

    std::optional<int> consume_sign() {
        if (at_end()) return std::nullopt;
        if (peek() == '+') {
            ++pos_;
            return +1;
        }
        if (peek() == '-') {
            ++pos_;
            return -1;
        }
        return std::nullopt;
    }

    long parse_uint() {
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

    Rational parse_coefficient() {
        std::size_t start = pos_;
        long num = parse_uint();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            long den = parse_uint();
            if (den == 0) throw parse_error("zero denominator", den_pos);
            (void)start;
            return rat(num, den);
        }
        return Rational(num);
    }

    Monomial parse_varpow() {
        // caller guarantees peek() == 'x'
        ++pos_;
        std::size_t idx_pos = pos_;
        long i = parse_uint();
        if (at_end() || peek() != '_')
            throw parse_error("expected '_' in variable token", pos_);
        ++pos_;
        std::size_t coord_pos = pos_;
        long j = parse_uint();
        if (i < 1 || i > amb_.k)
            throw parse_error("vector index out of range", idx_pos);
        if (j < 1 || j > amb_.m)
            throw parse_error("coordinate index out of range", coord_pos);
        int exp = 1;
        std::size_t mark = pos_;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t exp_pos = pos_;
            long e = parse_uint();
            if (e < 1) throw parse_error("exponent must be >= 1", exp_pos);
            if (e > 1000) throw parse_error("exponent too large", exp_pos);
            exp = static_cast<int>(e);
        } else {
            pos_ = mark;  // no exponent: the token ends at the variable
        }
        return Monomial::variable({static_cast<int>(i), static_cast<int>(j)},
                                  exp);
    }

    void parse_term(int sign, Polynomial& result) {
        skip_ws();
        Rational coeff(sign);
        Monomial mon;
        bool have_coeff = false;
        if (at_end()) throw parse_error("expected a term", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_coefficient();
            have_coeff = true;
        } else if (peek() == 'x') {
            mon = mon.times(parse_varpow());
        } else {
            throw parse_error("expected a term", pos_);
        }
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
            if (at_end() || peek() != 'x')
                throw parse_error("expected a variable after '*'", pos_);
            mon = mon.times(parse_varpow());
        }
        (void)have_coeff;
        result.add_term(mon, coeff);
    }

    const std::string& text_;
    Ambient amb_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text, int k, int m) {
    return detail::PolyParser(text, Ambient(k, m)).run();
}

}  // namespace mvharm
