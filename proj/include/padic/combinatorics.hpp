#pragma once

#include <stdexcept>
#include <string>

#include "prime.hpp"
#include "rational.hpp"
#include "valuation.hpp"

namespace padic {

/// Legendre's formula: v_p(n!) = sum_{i>=1} floor(n / p^i).
inline long long legendre_factorial_valuation(const PrimeContext& ctx, unsigned long n) {
    std::uint64_t p = ctx.p();
    long long sum = 0;
    for (std::uint64_t q = n / p; q > 0; q /= p) sum += static_cast<long long>(q);
    return sum;
}

/// Exact binomial coefficient C(n, k).
inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        throw std::invalid_argument("binomial: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// v_p(C(n, k)) by Kummer's theorem: the number of carries when adding
/// k and n-k in base p. Cross-checked against the Legendre difference
/// v_p(n!) - v_p(k!) - v_p((n-k)!); the two routes agreeing is an exact
/// identity, so a mismatch is an arithmetic bug.
inline long long binomial_valuation(const PrimeContext& ctx, unsigned long n, unsigned long k) {
    if (k > n) {
        throw std::invalid_argument("binomial_valuation: k = " + std::to_string(k) + " exceeds n = " +
                                    std::to_string(n));
    }
    std::uint64_t p = ctx.p();
    std::uint64_t a = k;
    std::uint64_t b = n - k;
    long long carries = 0;
    std::uint64_t carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        std::uint64_t digit = a % p + b % p + carry;
        carry = digit >= p ? 1 : 0;
        carries += static_cast<long long>(carry);
        a /= p;
        b /= p;
    }
    long long legendre = legendre_factorial_valuation(ctx, n) - legendre_factorial_valuation(ctx, k) -
                         legendre_factorial_valuation(ctx, n - k);
    if (carries != legendre) {
        throw std::logic_error("binomial_valuation: Kummer carry count " + std::to_string(carries) +
                               " disagrees with Legendre difference " + std::to_string(legendre));
    }
    return carries;
}

} // namespace padic
