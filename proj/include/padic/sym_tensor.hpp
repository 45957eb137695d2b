#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace padic {

/// Exponent tuple of a degree-m monomial on d letters.
using MultiIndex = std::vector<unsigned>;

/// Default ceiling on dim Sym^m; dense D x D exact matrices beyond this are
/// not desk scale. Callers may pass a larger cap explicitly.
inline constexpr std::size_t kDefaultSymDimCap = 10000;

/// dim Sym^m(Q_p^d) = C(d+m-1, m).
inline Integer sym_dim(std::size_t d, std::size_t m) {
    if (d < 1 || m < 1) throw std::invalid_argument("sym_dim: d and m must be positive");
    return binomial(static_cast<unsigned long>(d + m - 1), static_cast<unsigned long>(m));
}

namespace detail {

inline std::size_t sym_dim_checked(std::size_t d, std::size_t m, std::size_t cap) {
    Integer dim = sym_dim(d, m);
    if (dim > static_cast<unsigned long>(cap)) {
        throw std::invalid_argument("Sym^m dimension " + dim.get_str() + " exceeds the cap " +
                                    std::to_string(cap) + " (d=" + std::to_string(d) + ", m=" + std::to_string(m) +
                                    ")");
    }
    return static_cast<std::size_t>(dim.get_ui());
}

} // namespace detail

/// All degree-m multi-indices on d letters in colexicographic order. This
/// fixed order is the basis order of every Sym^m coefficient list.
inline std::vector<MultiIndex> enumerate_multi_indices(std::size_t d, std::size_t m) {
    if (d < 1 || m < 1) throw std::invalid_argument("enumerate_multi_indices: d and m must be positive");
    std::vector<MultiIndex> out;
    MultiIndex alpha(d, 0);
    // Colex ascending: the last coordinate varies slowest, smallest value
    // first; for a fixed tail the prefix runs through colex order of the
    // remaining degree on the remaining letters.
    auto rec_colex = [&](auto&& self, std::size_t len, unsigned degree) -> void {
        if (len == 1) {
            alpha[0] = degree;
            out.push_back(alpha);
            return;
        }
        for (unsigned v = 0; v <= degree; ++v) {
            alpha[len - 1] = v;
            self(self, len - 1, degree - v);
        }
        alpha[len - 1] = 0;
    };
    rec_colex(rec_colex, d, static_cast<unsigned>(m));
    return out;
}

/// m! / prod(alpha_i!), the weight that makes monomial coordinates reproduce
/// the tensor inner product.
inline Integer multinomial(std::size_t m, const MultiIndex& alpha) {
    unsigned long total = 0;
    for (unsigned a : alpha) total += a;
    if (total != m) {
        throw std::invalid_argument("multinomial: multi-index degree " + std::to_string(total) +
                                    " does not match m = " + std::to_string(m));
    }
    Integer r(1);
    unsigned long partial = 0;
    for (unsigned a : alpha) {
        partial += a;
        r *= binomial(partial, a);
    }
    return r;
}

/// An element of Sym^m(Q_p^d) in monomial coordinates over the colex order.
struct SymVector {
    PrimeContext ctx;
    std::size_t d;
    std::size_t m;
    std::vector<Rational> coeffs;
};

/// tau^(tensor m): coefficient at alpha is the monomial prod_i tau_i^alpha_i.
inline SymVector lift(const Vector& tau, std::size_t m, std::size_t cap = kDefaultSymDimCap) {
    const std::size_t d = tau.dim();
    detail::sym_dim_checked(d, m, cap);
    std::vector<MultiIndex> indices = enumerate_multi_indices(d, m);
    SymVector out{tau.ctx, d, m, {}};
    out.coeffs.reserve(indices.size());
    for (const MultiIndex& alpha : indices) {
        Rational c = 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (alpha[i] > 0) c *= rat_pow(tau.coords[i], alpha[i]);
        }
        out.coeffs.push_back(c);
    }
    return out;
}

/// Multinomial-weighted inner product on monomial coordinates; satisfies
/// sym_inner(lift(x,m), lift(y,m)) = inner(x,y)^m.
inline Rational sym_inner(const SymVector& u, const SymVector& v) {
    if (u.ctx != v.ctx || u.d != v.d || u.m != v.m) {
        throw std::invalid_argument("sym_inner: shape mismatch");
    }
    std::vector<MultiIndex> indices = enumerate_multi_indices(u.d, u.m);
    if (u.coeffs.size() != indices.size() || v.coeffs.size() != indices.size()) {
        throw std::invalid_argument("sym_inner: coefficient count does not match dim Sym^m");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (u.coeffs[i] == 0 || v.coeffs[i] == 0) continue;
        sum += Rational(multinomial(u.m, indices[i])) * u.coeffs[i] * v.coeffs[i];
    }
    return sum;
}

/// D x D matrix (D = dim Sym^m) of x -> sum_j sym_inner(x, lift(tau_j)) lift(tau_j)
/// in monomial coordinates: entry [alpha][beta] = sum_j L_j[alpha] w(beta) L_j[beta]
/// where L_j = lift(tau_j, m) and w is the multinomial weight. The weight sits on
/// the input slot, so the matrix need not be symmetric; tightness (= b*I) is
/// unaffected.
inline Matrix sym_frame_matrix(const FrameConfig& config, std::size_t m, std::size_t cap = kDefaultSymDimCap) {
    const std::size_t dim = detail::sym_dim_checked(config.d, m, cap);
    std::vector<MultiIndex> indices = enumerate_multi_indices(config.d, m);
    std::vector<Integer> weights;
    weights.reserve(dim);
    for (const MultiIndex& beta : indices) weights.push_back(multinomial(m, beta));

    Matrix s(dim, dim);
    for (const Vector& tau : config.vectors) {
        SymVector l = lift(tau, m, cap);
        for (std::size_t a = 0; a < dim; ++a) {
            if (l.coeffs[a] == 0) continue;
            for (std::size_t b = 0; b < dim; ++b) {
                if (l.coeffs[b] == 0) continue;
                s.at(a, b) += l.coeffs[a] * Rational(weights[b]) * l.coeffs[b];
            }
        }
    }
    return s;
}

/// Tightness of the order-m lifted configuration; for m = 1 the verdict and b
/// agree with check_tight.
inline TightnessReport check_sym_tight(const FrameConfig& config, std::size_t m,
                                       std::size_t cap = kDefaultSymDimCap) {
    return detail::check_scalar_identity(sym_frame_matrix(config, m, cap));
}

} // namespace padic
