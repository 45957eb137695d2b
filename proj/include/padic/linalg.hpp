#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prime.hpp"
#include "rational.hpp"
#include "valuation.hpp"

namespace padic {

/// A rational-coordinate vector viewed inside Q_p^d.
struct Vector {
    PrimeContext ctx;
    std::vector<Rational> coords;

    std::size_t dim() const { return coords.size(); }
};

/// Sum-of-products inner product: symmetric bilinear, no conjugation.
/// Isotropic vectors (<x,x> = 0) are legal inputs everywhere.
inline Rational inner(const Vector& x, const Vector& y) {
    if (x.ctx != y.ctx) throw std::invalid_argument("inner: prime mismatch");
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(x.dim()) + " vs " +
                                    std::to_string(y.dim()) + ")");
    }
    Rational sum = 0;
    for (std::size_t j = 0; j < x.coords.size(); ++j) sum += x.coords[j] * y.coords[j];
    return sum;
}

/// Coordinate sup-norm on Q_p^d: max_j |x_j|_p; zero for the zero vector.
inline AbsValue max_norm(const Vector& x) {
    AbsValue best = AbsValue::zero(x.ctx.p());
    for (const Rational& c : x.coords) {
        AbsValue a = abs_p(x.ctx, c);
        if (best < a) best = a;
    }
    return best;
}

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: zero dimension");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
        return c;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

inline Rational trace(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace: non-square matrix");
    Rational sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m.at(i, i);
    return sum;
}

/// An ordered collection tau_1..tau_n in Q_p^d.
struct FrameConfig {
    PrimeContext ctx;
    std::size_t d;
    std::vector<Vector> vectors;

    FrameConfig(PrimeContext context, std::size_t dim, std::vector<Vector> vecs)
        : ctx(context), d(dim), vectors(std::move(vecs)) {
        if (d == 0) throw std::invalid_argument("FrameConfig: d must be positive");
        if (vectors.empty()) throw std::invalid_argument("FrameConfig: need at least one vector");
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (vectors[j].ctx != ctx) {
                throw std::invalid_argument("FrameConfig: vector " + std::to_string(j) + " has a different prime");
            }
            if (vectors[j].dim() != d) {
                throw std::invalid_argument("FrameConfig: vector " + std::to_string(j) + " has " +
                                            std::to_string(vectors[j].dim()) + " coordinates, expected " +
                                            std::to_string(d));
            }
        }
    }

    std::size_t n() const { return vectors.size(); }

    friend bool operator==(const FrameConfig& a, const FrameConfig& b) {
        if (a.ctx != b.ctx || a.d != b.d || a.n() != b.n()) return false;
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (a.vectors[j].coords != b.vectors[j].coords) return false;
        }
        return true;
    }
};

/// n x n matrix of pairwise inner products.
inline Matrix gram(const FrameConfig& config) {
    const std::size_t n = config.n();
    Matrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        g.at(j, j) = inner(config.vectors[j], config.vectors[j]);
        for (std::size_t k = j + 1; k < n; ++k) {
            Rational v = inner(config.vectors[j], config.vectors[k]);
            g.at(j, k) = v;
            g.at(k, j) = v;
        }
    }
    return g;
}

/// Matrix of the frame operator x -> sum_j <x, tau_j> tau_j, i.e. sum_j tau_j tau_j^T.
inline Matrix frame_operator(const FrameConfig& config) {
    Matrix s(config.d, config.d);
    for (const Vector& v : config.vectors) {
        for (std::size_t a = 0; a < config.d; ++a) {
            if (v.coords[a] == 0) continue;
            for (std::size_t b = 0; b < config.d; ++b) s.at(a, b) += v.coords[a] * v.coords[b];
        }
    }
    return s;
}

inline Vector apply(const Matrix& m, const Vector& x) {
    if (m.cols() != x.dim()) throw std::invalid_argument("apply: shape mismatch");
    Vector y{x.ctx, std::vector<Rational>(m.rows(), Rational(0))};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) y.coords[r] += m.at(r, c) * x.coords[c];
    }
    return y;
}

struct TightnessWitness {
    std::size_t row;
    std::size_t col;
    Rational expected;
    Rational found;
};

/// Verdict of the exact equality check S = b*I. When not tight, the first
/// violating entry (row-major) is reported; when tight, b is the common
/// diagonal value (b = 0 is legal and accepted).
struct TightnessReport {
    bool is_tight;
    Rational b;
    std::optional<TightnessWitness> witness;
};

namespace detail {

inline TightnessReport check_scalar_identity(const Matrix& s) {
    Rational b = s.at(0, 0);
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) {
            Rational expected = (r == c) ? b : Rational(0);
            if (s.at(r, c) != expected) {
                return TightnessReport{false, b, TightnessWitness{r, c, expected, s.at(r, c)}};
            }
        }
    }
    return TightnessReport{true, b, std::nullopt};
}

} // namespace detail

/// Tight iff the frame operator equals b*I exactly, with b read from entry (0,0).
inline TightnessReport check_tight(const FrameConfig& config) {
    return detail::check_scalar_identity(frame_operator(config));
}

} // namespace padic
