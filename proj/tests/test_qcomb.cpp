// Copyright 2026 The wenum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "wenum/qcomb.hpp"

#include <random>

using namespace wenum;

namespace {
TPoly poly(std::initializer_list<long> ascending) {
    std::vector<BigInt> c;
    for (long x : ascending) c.emplace_back(x);
    return TPoly::from_coeffs(std::move(c));
}
}  // namespace

TEST_CASE("gaussian_binomial values") {
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 3) == 130);  // frozen from the brute-force subspace oracle
    for (long s : {0L, 1L, 5L, 9L}) CHECK(gaussian_binomial(s, 0, 3) == 1);
    CHECK(gaussian_binomial(4, -1, 2) == 0);
    CHECK(gaussian_binomial(4, 5, 2) == 0);
    CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), std::invalid_argument);
}

TEST_CASE("q-Pascal identity and symmetry") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (long s = 1; s <= 8; ++s)
            for (long r = 0; r <= s; ++r) {
                BigInt qr;
                mpz_ui_pow_ui(qr.get_mpz_t(), q, static_cast<unsigned long>(r));
                CHECK(gaussian_binomial(s, r, q) ==
                      qr * gaussian_binomial(s - 1, r, q) + gaussian_binomial(s - 1, r - 1, q));
                CHECK(gaussian_binomial(s, r, q) == gaussian_binomial(s, s - r, q));
            }
    }
}

TEST_CASE("falling_product") {
    CHECK(falling_product(0, 7) == poly({1}));
    CHECK(falling_product(2, 2) == poly({2, -3, 1}));    // (T-1)(T-2)
    CHECK(falling_product(3, 2) == poly({-8, 14, -7, 1}));  // (T-1)(T-2)(T-4)

    for (std::uint64_t q : {2, 3, 5})
        for (unsigned r = 0; r <= 4; ++r) {
            const TPoly p = falling_product(r, q);
            BigInt qj = 1;
            for (unsigned j = 0; j < r; ++j) {
                CHECK(p.eval(qj) == 0);
                qj *= q;
            }
            CHECK(p.eval(qj) > 0);  // at T = q^r
        }
}

TEST_CASE("polynomial arithmetic") {
    const TPoly p = poly({-8, 14, -7, 1});
    CHECK(p.eval(8) == 168);
    CHECK(p.eval(0) == -8);
    CHECK(poly({-1, 1}) * poly({-2, 1}) == poly({2, -3, 1}));
    CHECK(poly({1, 2}) + poly({3, -2}) == poly({4}));
    CHECK(poly({1, 2}) - poly({1, 2}) == TPoly());
    CHECK(poly({1, 2, 3}).scaled(BigInt(0)) == TPoly());
    CHECK(TPoly().degree() == -1);
    CHECK(p.to_string() == "T^3-7T^2+14T-8");
    CHECK(poly({0, 14}).to_string() == "14T");
}

TEST_CASE("lagrange interpolation reproduces the golden polynomials") {
    const TPoly cubic = lagrange_interpolate({{1, 0}, {2, 0}, {4, 0}, {8, 168}});
    CHECK(cubic == poly({-8, 14, -7, 1}));

    CHECK(lagrange_interpolate({{1, 5}}) == poly({5}));

    // degree-1 result despite 5 nodes
    const TPoly line = lagrange_interpolate({{1, 0}, {2, 14}, {4, 42}, {8, 98}, {16, 210}});
    CHECK(line == poly({-14, 14}));

    CHECK_THROWS_AS(lagrange_interpolate({{1, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_interpolate({{0, 0}, {2, 1}}), integrality_error);
}

TEST_CASE("interpolation inverts evaluation on random integer polynomials") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t nodes = 1 + trial % 6;
        std::vector<BigInt> c(nodes);
        for (BigInt& x : c) x = coeff(rng);
        const TPoly p = TPoly::from_coeffs(std::move(c));
        std::vector<std::pair<BigInt, BigInt>> pts;
        for (std::size_t i = 0; i < nodes; ++i) {
            const BigInt t = static_cast<long>(3 * i) - 4;
            pts.emplace_back(t, p.eval(t));
        }
        CHECK(lagrange_interpolate(pts) == p);
    }
}

TEST_CASE("factored printing") {
    CHECK(format_factored(poly({-7, 7}), 2) == "7(T-1)");
    CHECK(format_factored(poly({14, -21, 7}), 2) == "7(T-1)(T-2)");
    CHECK(format_factored(poly({-8, 14, -7, 1}), 2) == "(T-1)(T-2)(T-4)");
    CHECK(format_factored(poly({21, -42, 28, -8, 1}), 2) == "(T-1)(T^3-7T^2+21T-21)");
    CHECK(format_factored(poly({1}), 2) == "1");
    CHECK(format_factored(TPoly(), 2) == "0");
    CHECK(format_factored(poly({1, 1}), 2) == "T+1");  // no q-power roots
}
