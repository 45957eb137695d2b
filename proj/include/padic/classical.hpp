#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "combinatorics.hpp"

namespace padic {

// Comparator bounds over R and C. These involve irrational square roots, so
// unlike everything p-adic they are evaluated in floating point.

enum class Field { R, C };

inline std::int64_t gerzon(std::int64_t d, Field field) {
    if (d < 1) throw std::invalid_argument("gerzon: d must be positive");
    return field == Field::C ? d * d : d * (d + 1) / 2;
}

struct ClassicalWelch {
    double sum_bound;
    double max_bound;
};

/// Sum and max Welch bounds for n > d unit vectors at tensor order m:
/// sum >= n^2 / C(d+m-1, m),  max^2m >= (n / C(d+m-1, m) - 1) / (n - 1).
inline ClassicalWelch classical_welch(std::int64_t d, std::int64_t n, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("classical_welch: m must be positive");
    if (n <= d) {
        throw std::invalid_argument("classical_welch: requires n > d, got n = " + std::to_string(n) + ", d = " +
                                    std::to_string(d));
    }
    double dim = binomial(static_cast<unsigned long>(d + m - 1), static_cast<unsigned long>(m)).get_d();
    double nn = static_cast<double>(n);
    return ClassicalWelch{nn * nn / dim, (nn / dim - 1.0) / (nn - 1.0)};
}

struct BoundValue {
    double value;
    bool applicable;
};

struct ClassicalBounds {
    Field field;
    std::int64_t gerzon_bound;
    BoundValue bukh_cox;
    BoundValue orthoplex;
    BoundValue levenstein;
    BoundValue exponential;
};

/// The four coherence lower bounds for n unit vectors in K^d, each with its
/// side-condition flag (n > d for Bukh-Cox, n > Z(d,K) for Orthoplex and
/// Levenstein). The internal parameter m = dim_R(K)/2 (1/2 over R, 1 over C)
/// is unrelated to the tensor order.
inline ClassicalBounds classical_secondary_bounds(std::int64_t d, std::int64_t n, Field field) {
    if (d < 1) throw std::invalid_argument("classical_secondary_bounds: d must be positive");
    if (n < 2) throw std::invalid_argument("classical_secondary_bounds: n must be at least 2");
    const double m = field == Field::C ? 1.0 : 0.5;
    const double nn = static_cast<double>(n);
    const double dd = static_cast<double>(d);

    ClassicalBounds out{field, gerzon(d, field),
                        BoundValue{0.0, n > d},
                        BoundValue{1.0 / std::sqrt(dd), n > gerzon(d, field)},
                        BoundValue{0.0, n > gerzon(d, field)},
                        BoundValue{1.0 - 2.0 * std::pow(nn, -1.0 / (dd - 1.0)), true}};

    if (out.bukh_cox.applicable) {
        double z = static_cast<double>(gerzon(n - d, field));
        out.bukh_cox.value = z / (nn * (1.0 + m * (nn - dd - 1.0) * std::sqrt(1.0 / m + nn - dd)) - z);
    }
    if (out.levenstein.applicable) {
        out.levenstein.value = std::sqrt((nn * (m + 1.0) - dd * (m * dd + 1.0)) / ((nn - dd) * (m * dd + 1.0)));
    }
    return out;
}

} // namespace padic
