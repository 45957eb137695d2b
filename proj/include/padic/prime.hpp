#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin primality test, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// The prime p everything is valuated against. Construction fails fast on
/// non-prime input so bad configuration files never reach the arithmetic.
class PrimeContext {
public:
    explicit PrimeContext(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) {
            throw std::invalid_argument("PrimeContext: " + std::to_string(p) + " is not prime");
        }
    }

    std::uint64_t p() const { return p_; }

    friend bool operator==(const PrimeContext& a, const PrimeContext& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeContext& a, const PrimeContext& b) { return a.p_ != b.p_; }

private:
    std::uint64_t p_;
};

} // namespace padic
