#include <doctest.h>

#include <random>
#include <stdexcept>

#include <padic/sym_tensor.hpp>

#include "support/generators.hpp"

using namespace padic;

TEST_CASE("sym_dim: examples") {
    for (std::size_t d = 1; d <= 10; ++d) CHECK(sym_dim(d, 1) == static_cast<unsigned long>(d));
    CHECK(sym_dim(2, 2) == 3);
    CHECK(sym_dim(3, 2) == 6);
    CHECK_THROWS_AS(sym_dim(0, 1), std::invalid_argument);
}

TEST_CASE("multi-index enumeration is colexicographic and complete") {
    CHECK(enumerate_multi_indices(1, 4) == std::vector<MultiIndex>{{4}});
    CHECK(enumerate_multi_indices(2, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_multi_indices(3, 1) == std::vector<MultiIndex>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    for (std::size_t d = 1; d <= 6; ++d) {
        for (std::size_t m = 1; m <= 5; ++m) {
            std::vector<MultiIndex> indices = enumerate_multi_indices(d, m);
            CHECK(sym_dim(d, m) == static_cast<unsigned long>(indices.size()));
            for (const MultiIndex& alpha : indices) {
                unsigned degree = 0;
                for (unsigned a : alpha) degree += a;
                CHECK(degree == m);
            }
            // strictly increasing in colex order: last differing position decides
            for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
                const MultiIndex& a = indices[i];
                const MultiIndex& b = indices[i + 1];
                std::size_t pos = d;
                while (pos-- > 0) {
                    if (a[pos] != b[pos]) break;
                }
                CHECK(a[pos] < b[pos]);
            }
        }
    }
}

TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(2, {1, 1}) == 2);
    CHECK(multinomial(2, {2, 0}) == 1);
    CHECK(multinomial(3, {1, 1, 1}) == 6);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), std::invalid_argument);

    // row sums over all degree-m indices equal d^m
    for (std::size_t d = 1; d <= 6; ++d) {
        for (std::size_t m = 1; m <= 5; ++m) {
            Integer sum = 0;
            for (const MultiIndex& alpha : enumerate_multi_indices(d, m)) sum += multinomial(m, alpha);
            Integer expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), d, m);
            CHECK(sum == expected);
        }
    }
}

TEST_CASE("lift: examples") {
    PrimeContext p2(2);
    SymVector e1_cubed = lift(Vector{p2, {Rational(1), Rational(0)}}, 3);
    CHECK(e1_cubed.coeffs.size() == 4);
    CHECK(e1_cubed.coeffs[0] == 1);
    for (std::size_t i = 1; i < 4; ++i) CHECK(e1_cubed.coeffs[i] == 0);

    SymVector sq = lift(Vector{p2, {Rational(1), Rational(2)}}, 2);
    CHECK(sq.coeffs == std::vector<Rational>{Rational(1), Rational(2), Rational(4)});

    SymVector zero = lift(Vector{p2, {Rational(0), Rational(0)}}, 5);
    for (const Rational& c : zero.coeffs) CHECK(c == 0);
}

TEST_CASE("sym_inner: worked example and orthogonality") {
    PrimeContext p2(2);
    Vector x{p2, {Rational(1), Rational(2)}};
    Vector y{p2, {Rational(3), Rational(4)}};
    CHECK(sym_inner(lift(x, 2), lift(y, 2)) == 121);
    CHECK(inner(x, y) == 11);

    Vector e1{p2, {Rational(1), Rational(0), Rational(0)}};
    Vector e2{p2, {Rational(0), Rational(1), Rational(0)}};
    for (std::size_t m = 1; m <= 4; ++m) CHECK(sym_inner(lift(e1, m), lift(e2, m)) == 0);

    SymVector a = lift(e1, 2);
    SymVector b = lift(Vector{p2, {Rational(1), Rational(1)}}, 2);
    CHECK_THROWS_AS(sym_inner(a, b), std::invalid_argument);
}

TEST_CASE("power identity: sym_inner of lifts equals inner to the m-th power") {
    std::mt19937_64 rng(501);
    for (std::uint64_t p : {2ull, 7ull}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 250; ++trial) {
            std::uniform_int_distribution<std::size_t> pick_d(1, 4);
            std::size_t d = pick_d(rng);
            Vector x = gen::random_vector(rng, ctx, d, 1000);
            Vector y = gen::random_vector(rng, ctx, d, 1000);
            Rational base = inner(x, y);
            for (std::size_t m = 1; m <= 3; ++m) {
                CHECK(sym_inner(lift(x, m), lift(y, m)) == rat_pow(base, m));
            }
        }
    }
}

TEST_CASE("lifted frame matrix traces match the inner power sums") {
    std::mt19937_64 rng(502);
    PrimeContext ctx(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> pick_d(1, 3), pick_n(1, 4);
        FrameConfig c = gen::random_config(rng, ctx, pick_d(rng), pick_n(rng), 15);
        for (std::size_t m = 1; m <= 3; ++m) {
            Rational diag_powers = 0;
            Rational pair_powers = 0;
            for (const Vector& tau : c.vectors) diag_powers += rat_pow(inner(tau, tau), m);
            for (const Vector& tau : c.vectors) {
                for (const Vector& sigma : c.vectors) pair_powers += rat_pow(inner(tau, sigma), 2 * m);
            }
            Matrix lifted = sym_frame_matrix(c, m);
            CHECK(trace(lifted) == diag_powers);
            CHECK(trace(lifted * lifted) == pair_powers);
        }
    }
}

TEST_CASE("check_sym_tight at m = 1 agrees with check_tight") {
    std::mt19937_64 rng(503);
    PrimeContext ctx(2);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> pick_d(1, 4), pick_n(1, 5);
        FrameConfig c = trial % 3 == 0 ? gen::random_tight_config(rng, ctx, 3, 6)
                                       : gen::random_config(rng, ctx, pick_d(rng), pick_n(rng), 10);
        TightnessReport plain = check_tight(c);
        TightnessReport lifted = check_sym_tight(c, 1);
        CHECK(plain.is_tight == lifted.is_tight);
        CHECK(plain.b == lifted.b);
        if (!plain.is_tight) {
            CHECK(plain.witness->row == lifted.witness->row);
            CHECK(plain.witness->col == lifted.witness->col);
            CHECK(plain.witness->found == lifted.witness->found);
        }
    }
}

TEST_CASE("check_sym_tight: ONB is not lifted-tight at m = 2") {
    PrimeContext p5(5);
    TightnessReport r = check_sym_tight(gen::onb(p5, 2), 2);
    CHECK_FALSE(r.is_tight);
    REQUIRE(r.witness.has_value());
}

TEST_CASE("check_sym_tight: one-dimensional lifts are tight with b = t^2m") {
    PrimeContext p2(2);
    Rational t = make_rational(3, 4);
    for (std::size_t m = 1; m <= 4; ++m) {
        FrameConfig c(p2, 1, {Vector{p2, {t}}});
        TightnessReport r = check_sym_tight(c, m);
        CHECK(r.is_tight);
        CHECK(r.b == rat_pow(t, 2 * m));
    }
}

TEST_CASE("sym dimension cap rejects oversized spaces") {
    PrimeContext p2(2);
    Vector big{p2, std::vector<Rational>(50, Rational(1))};
    CHECK_THROWS_AS(lift(big, 3), std::invalid_argument); // dim 22100 > default cap
    CHECK_NOTHROW(lift(big, 3, 30000));                   // explicit cap override
}
