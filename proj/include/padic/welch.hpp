#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "sym_tensor.hpp"
#include "valuation.hpp"

namespace padic {

/// Raised when a checker's shape precondition fails (e.g. Zauner needs n = d^2).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OffDiagMax {
    std::size_t j;
    std::size_t k;
    AbsValue value;
};

/// Verdict of the order-m p-adic Welch bound
///
///   max{ |sum_l <tau_l,tau_l>^{2m}|, max_{j!=k} |<tau_j,tau_k>|^{2m} }
///     >= |sum_j <tau_j,tau_j>^m|^2 / |C(d+m-1, m)|
///
/// under order-m lifted tightness. The bound fields are meaningful only when
/// precondition.is_tight; max_offdiag is absent for n = 1 (empty pair set),
/// in which case lhs is the diagonal term alone.
struct WelchReport {
    std::size_t m;
    TightnessReport precondition;
    bool unit_inner;
    AbsValue diag_term;
    std::optional<OffDiagMax> max_offdiag;
    AbsValue lhs;
    AbsValue rhs;
    bool holds;
    bool equality;
};

namespace detail {

inline std::optional<OffDiagMax> max_offdiagonal(const PrimeContext& ctx, const Matrix& g, std::size_t two_m) {
    std::optional<OffDiagMax> best;
    for (std::size_t j = 0; j < g.rows(); ++j) {
        for (std::size_t k = 0; k < g.cols(); ++k) {
            if (j == k) continue;
            AbsValue v = abs_p(ctx, g.at(j, k)).pow(static_cast<long long>(two_m));
            if (!best || best->value < v) best = OffDiagMax{j, k, v};
        }
    }
    return best;
}

/// Shared tail of welch_general/welch_unit once the precondition and the
/// diagonal/|n| numerator are settled.
inline WelchReport finish_welch(const FrameConfig& config, std::size_t m, TightnessReport pre, const Matrix& g,
                                bool unit, const Rational& diag_sum_2m, const Rational& rhs_numerator_base) {
    const PrimeContext& ctx = config.ctx;
    AbsValue zero = AbsValue::zero(ctx.p());
    if (!pre.is_tight) {
        return WelchReport{m, std::move(pre), unit, zero, std::nullopt, zero, zero, false, false};
    }
    AbsValue diag_term = abs_p(ctx, diag_sum_2m);
    std::optional<OffDiagMax> off = max_offdiagonal(ctx, g, 2 * m);
    AbsValue lhs = off ? max(diag_term, off->value) : diag_term;
    Integer dim = binomial(static_cast<unsigned long>(config.d + m - 1), static_cast<unsigned long>(m));
    AbsValue rhs = abs_p(ctx, rhs_numerator_base).pow(2) / abs_p(ctx, Rational(dim));
    return WelchReport{m,   std::move(pre), unit, diag_term, std::move(off), lhs, rhs, lhs >= rhs,
                       lhs == rhs};
}

inline std::optional<std::size_t> first_non_unit(const Matrix& g) {
    for (std::size_t j = 0; j < g.rows(); ++j) {
        if (g.at(j, j) != 1) return j;
    }
    return std::nullopt;
}

inline TightnessReport welch_precondition(const FrameConfig& config, std::size_t m) {
    // For m = 1 the lifted operator is the frame operator itself.
    return m == 1 ? check_tight(config) : check_sym_tight(config, m);
}

} // namespace detail

/// General form of the order-m bound: diagonal term |sum_l <tau_l,tau_l>^{2m}|
/// and rhs numerator |sum_j <tau_j,tau_j>^m|^2. A failed tightness
/// precondition yields a report carrying the witness; no bound is asserted.
inline WelchReport welch_general(const FrameConfig& config, std::size_t m) {
    if (m < 1) throw std::invalid_argument("welch_general: m must be positive");
    TightnessReport pre = detail::welch_precondition(config, m);
    Matrix g = gram(config);
    Rational diag_sum_2m = 0;
    Rational diag_sum_m = 0;
    for (std::size_t l = 0; l < config.n(); ++l) {
        diag_sum_2m += rat_pow(g.at(l, l), 2 * m);
        diag_sum_m += rat_pow(g.at(l, l), m);
    }
    bool unit = !detail::first_non_unit(g).has_value();
    return detail::finish_welch(config, m, std::move(pre), g, unit, diag_sum_2m, diag_sum_m);
}

/// Unit-inner-product form: diagonal term |n| and rhs |n|^2 / |C(d+m-1,m)|.
/// Agrees with welch_general whenever its hypothesis <tau_j,tau_j> = 1 holds;
/// a non-unit diagonal is rejected naming the offending index.
inline WelchReport welch_unit(const FrameConfig& config, std::size_t m) {
    if (m < 1) throw std::invalid_argument("welch_unit: m must be positive");
    Matrix g = gram(config);
    if (auto bad = detail::first_non_unit(g)) {
        throw std::invalid_argument("welch_unit: <tau_" + std::to_string(*bad) + ", tau_" + std::to_string(*bad) +
                                    "> = " + to_string(g.at(*bad, *bad)) + ", expected 1");
    }
    TightnessReport pre = detail::welch_precondition(config, m);
    Rational n_value(static_cast<unsigned long>(config.n()));
    return detail::finish_welch(config, m, std::move(pre), g, true, n_value, n_value);
}

/// Verdict for the existence questions at m = 1: (i) unit inner products,
/// (ii) tightness, (iii) Welch equality; with_norms adds (iv) sup-norm one.
/// All conditions are evaluated; nothing short-circuits.
struct QReport {
    bool unit_inner;
    std::optional<std::size_t> non_unit_index;
    TightnessReport tight;
    bool equality;
    bool norms_ok;
    std::optional<std::size_t> bad_norm_index;
    bool with_norms;
    std::optional<WelchReport> welch;
    bool ok;
};

namespace detail {

inline QReport q_check(const FrameConfig& config, bool with_norms) {
    QReport r{true, std::nullopt, check_tight(config), false, true, std::nullopt, with_norms, std::nullopt, false};
    Matrix g = gram(config);
    if (auto bad = first_non_unit(g)) {
        r.unit_inner = false;
        r.non_unit_index = bad;
    }
    for (std::size_t j = 0; j < config.n(); ++j) {
        if (max_norm(config.vectors[j]) != AbsValue::one(config.ctx.p())) {
            r.norms_ok = false;
            r.bad_norm_index = j;
            break;
        }
    }
    if (r.unit_inner && r.tight.is_tight) {
        r.welch = welch_unit(config, 1);
        r.equality = r.welch->equality;
    }
    r.ok = r.unit_inner && r.tight.is_tight && r.equality && (!with_norms || r.norms_ok);
    return r;
}

} // namespace detail

inline QReport q1_check(const FrameConfig& config) { return detail::q_check(config, false); }
inline QReport q2_check(const FrameConfig& config) { return detail::q_check(config, true); }

/// Zauner-type verdict for a collection of d^2 vectors. The off-diagonal
/// target |n| is read as |d^2|_p unless an explicit n override is supplied;
/// the report records which reading was used.
struct ZaunerReport {
    ZaunerReport(bool strong_, std::size_t d_, AbsValue target_, std::string interpretation)
        : strong(strong_), d(d_), target(std::move(target_)), target_interpretation(std::move(interpretation)) {}

    bool strong;
    std::size_t d;
    AbsValue target;
    std::string target_interpretation;
    bool cond_unit = true;
    std::optional<std::size_t> unit_witness;
    bool cond_tight = false;
    TightnessReport tight{false, Rational(0), std::nullopt};
    bool b_is_zero = false;
    bool cond_angle = true;
    bool angle_vacuous = false;
    std::optional<std::pair<std::size_t, std::size_t>> angle_witness;
    std::optional<AbsValue> angle_found;
    bool cond_norm = true;
    std::optional<std::size_t> norm_witness;
    bool verdict = false;
};

inline ZaunerReport zauner_check(const FrameConfig& config, bool strong,
                                 std::optional<Integer> target_n = std::nullopt) {
    const std::size_t n = config.n();
    if (n != config.d * config.d) {
        throw ShapeError("zauner_check: need n = d^2 vectors, got n = " + std::to_string(n) + " with d = " +
                         std::to_string(config.d));
    }
    const PrimeContext& ctx = config.ctx;
    Integer target_int = target_n ? *target_n : Integer(static_cast<unsigned long>(n));

    ZaunerReport r(strong, config.d, abs_p(ctx, Rational(target_int)),
                   target_n ? "|n|_p with explicit n = " + target_int.get_str() : "|d^2|_p (default reading)");
    r.angle_vacuous = (n == 1);

    Matrix g = gram(config);
    if (auto bad = detail::first_non_unit(g)) {
        r.cond_unit = false;
        r.unit_witness = bad;
    }
    r.tight = check_tight(config);
    r.cond_tight = r.tight.is_tight;
    r.b_is_zero = r.tight.is_tight && r.tight.b == 0;
    for (std::size_t j = 0; j < n && r.cond_angle; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            AbsValue found = abs_p(ctx, g.at(j, k)).pow(2);
            if (found != r.target) {
                r.cond_angle = false;
                r.angle_witness = std::make_pair(j, k);
                r.angle_found = found;
                break;
            }
        }
    }
    if (strong) {
        for (std::size_t j = 0; j < n; ++j) {
            if (max_norm(config.vectors[j]) != AbsValue::one(ctx.p())) {
                r.cond_norm = false;
                r.norm_witness = j;
                break;
            }
        }
    }
    r.verdict = r.cond_unit && r.cond_tight && r.cond_angle && (!strong || r.cond_norm);
    return r;
}

/// Equiangularity verdict: every <tau_j,tau_j> = a exactly and every
/// off-diagonal |<tau_j,tau_k>|^2 = gamma.
struct EquiangularReport {
    Rational a;
    AbsValue gamma;
    bool diag_ok;
    std::optional<std::size_t> diag_witness;
    std::optional<Rational> diag_found;
    bool offdiag_ok;
    std::optional<std::pair<std::size_t, std::size_t>> offdiag_witness;
    std::optional<AbsValue> offdiag_found;
    bool ok;
};

inline EquiangularReport equiangular_check(const FrameConfig& config, const Rational& a, const AbsValue& gamma) {
    if (gamma.p() != config.ctx.p()) {
        throw std::invalid_argument("equiangular_check: gamma is a p-adic value for a different prime");
    }
    EquiangularReport r{a,    gamma,        true,         std::nullopt, std::nullopt,
                        true, std::nullopt, std::nullopt, false};
    Matrix g = gram(config);
    const std::size_t n = config.n();
    for (std::size_t j = 0; j < n; ++j) {
        if (g.at(j, j) != a) {
            r.diag_ok = false;
            r.diag_witness = j;
            r.diag_found = g.at(j, j);
            break;
        }
    }
    for (std::size_t j = 0; j < n && r.offdiag_ok; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            AbsValue found = abs_p(config.ctx, g.at(j, k)).pow(2);
            if (found != gamma) {
                r.offdiag_ok = false;
                r.offdiag_witness = std::make_pair(j, k);
                r.offdiag_found = found;
                break;
            }
        }
    }
    r.ok = r.diag_ok && r.offdiag_ok;
    return r;
}

} // namespace padic
