#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "prime.hpp"
#include "rational.hpp"

namespace padic {

/// p-adic valuation: an integer, or +infinity exactly for input 0.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(long long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }

    long long value() const {
        if (infinite_) throw std::domain_error("Valuation: +infinity has no finite value");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    // +infinity compares greater than every finite valuation.
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) {
            return (a.infinite_ ? 1 : 0) <=> (b.infinite_ ? 1 : 0);
        }
        return a.value_ <=> b.value_;
    }

    std::string str() const { return infinite_ ? "+inf" : std::to_string(value_); }

private:
    Valuation(bool inf, long long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long long value_;
};

/// A p-adic absolute value: either the distinguished zero or p^e for an
/// integer e. Only the exponent is stored; products, quotients, powers and
/// comparisons are all decided on exponents.
class AbsValue {
public:
    static AbsValue zero(std::uint64_t p) { return AbsValue(p, true, 0); }
    static AbsValue one(std::uint64_t p) { return AbsValue(p, false, 0); }
    static AbsValue power(std::uint64_t p, long long e) { return AbsValue(p, false, e); }

    std::uint64_t p() const { return p_; }
    bool is_zero() const { return zero_; }

    long long exponent() const {
        if (zero_) throw std::domain_error("AbsValue: zero has no exponent");
        return exp_;
    }

    friend AbsValue operator*(const AbsValue& a, const AbsValue& b) {
        check_same_prime(a, b, "multiply");
        if (a.zero_ || b.zero_) return zero(a.p_);
        return power(a.p_, a.exp_ + b.exp_);
    }

    friend AbsValue operator/(const AbsValue& a, const AbsValue& b) {
        check_same_prime(a, b, "divide");
        if (b.zero_) throw std::domain_error("AbsValue: division by the zero absolute value");
        if (a.zero_) return zero(a.p_);
        return power(a.p_, a.exp_ - b.exp_);
    }

    AbsValue pow(long long k) const {
        if (zero_) {
            if (k <= 0) throw std::domain_error("AbsValue: zero to a non-positive power");
            return *this;
        }
        return power(p_, exp_ * k);
    }

    friend bool operator==(const AbsValue& a, const AbsValue& b) {
        check_same_prime(a, b, "compare");
        if (a.zero_ != b.zero_) return false;
        return a.zero_ || a.exp_ == b.exp_;
    }

    // zero < every finite value; finite values compare on exponents.
    friend std::strong_ordering operator<=>(const AbsValue& a, const AbsValue& b) {
        check_same_prime(a, b, "compare");
        if (a.zero_ || b.zero_) {
            return (a.zero_ ? 0 : 1) <=> (b.zero_ ? 0 : 1);
        }
        return a.exp_ <=> b.exp_;
    }

    /// "p^e", or the literal "0" for the zero absolute value.
    std::string str() const {
        if (zero_) return "0";
        return std::to_string(p_) + "^" + std::to_string(exp_);
    }

private:
    AbsValue(std::uint64_t p, bool z, long long e) : p_(p), zero_(z), exp_(e) {}

    static void check_same_prime(const AbsValue& a, const AbsValue& b, const char* what) {
        if (a.p_ != b.p_) {
            throw std::invalid_argument(std::string("AbsValue: cannot ") + what + " values for p=" +
                                        std::to_string(a.p_) + " and p=" + std::to_string(b.p_));
        }
    }

    std::uint64_t p_;
    bool zero_;
    long long exp_;
};

inline AbsValue max(const AbsValue& a, const AbsValue& b) { return a < b ? b : a; }

/// v_p(q): the exponent of p in q, +infinity for q = 0.
inline Valuation valuation(const PrimeContext& ctx, const Rational& q) {
    if (q == 0) return Valuation::infinity();
    Integer p(static_cast<unsigned long>(ctx.p()));
    Integer stripped;
    long long v_num = static_cast<long long>(mpz_remove(stripped.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
    long long v_den = static_cast<long long>(mpz_remove(stripped.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
    return Valuation::finite(v_num - v_den);
}

/// |q|_p = p^(-v_p(q)); |0|_p is the distinguished zero.
inline AbsValue abs_p(const PrimeContext& ctx, const Rational& q) {
    Valuation v = valuation(ctx, q);
    if (v.is_infinite()) return AbsValue::zero(ctx.p());
    return AbsValue::power(ctx.p(), -v.value());
}

} // namespace padic
