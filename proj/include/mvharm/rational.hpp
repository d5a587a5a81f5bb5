#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvharm {

// Exact arithmetic types. All coefficients in this library are rationals in
// lowest terms with positive denominator (mpq_class canonical form).
using Integer = mpz_class;
using Rational = mpq_class;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; `position` is a 0-based byte offset.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A configured resource cap was exceeded. Always a hard error, never a
// silent truncation.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Membership in -N with N = {1, 2, 3, ...}; zero and non-integers excluded.
inline bool is_negative_integer(const Rational& q) {
    return is_integer(q) && sgn(q) < 0;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Binomial coefficient with the usual conventions C(n, k) = 0 for n < k or
// negative n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q" with an optional leading sign. Strict: nothing but an
// optional space padding around the token.
inline Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_spaces = [&] {
        while (pos < n && text[pos] == ' ') ++pos;
    };
    auto read_integer = [&](const char* what) {
        if (pos >= n || text[pos] < '0' || text[pos] > '9')
            throw parse_error(std::string("expected ") + what, pos);
        Integer value = 0;
        while (pos < n && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    };
    skip_spaces();
    bool negative = false;
    if (pos < n && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer num = read_integer("a numerator");
    Integer den = 1;
    skip_spaces();
    if (pos < n && text[pos] == '/') {
        ++pos;
        skip_spaces();
        std::size_t den_pos = pos;
        den = read_integer("a denominator");
        if (den == 0) throw parse_error("zero denominator", den_pos);
    }
    skip_spaces();
    if (pos != n) throw parse_error("trailing input", pos);
    Rational q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

}  // namespace mvharm
