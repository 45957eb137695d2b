#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace padic {

// Exact unbounded scalars. mpq_class keeps the reduced-form invariant
// (den > 0, gcd(|num|, den) = 1, zero as 0/1) across all arithmetic;
// the constructors below canonicalize raw num/den input on entry.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "a" or "a/b": optional sign, digits, optional "/" and unsigned digits.
inline Rational parse_rational(const std::string& s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("parse_rational: malformed rational \"" + s + "\"");
    };
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return fail();
    // mpz rejects a leading '+'
    Integer num(s[0] == '+' ? s.substr(1, i - 1) : s.substr(0, i));
    Integer den(1);
    if (i < s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return fail();
        den = Integer(s.substr(den_begin));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in \"" + s + "\"");
    }
    return make_rational(num, den);
}

/// Canonical rendering: reduced, sign on the numerator, "a" when den == 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Height of a reduced rational a/b: max(|a|, b).
inline Integer height(const Rational& q) {
    Integer a = abs(q.get_num());
    const Integer& b = q.get_den();
    return a > b ? a : b;
}

inline Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime; no reduction needed.
    return r;
}

} // namespace padic
