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
#include "wenum/linalg.hpp"
#include "wenum/qcomb.hpp"
#include "helpers.hpp"

#include <random>

using namespace wenum;
using wenum::testing::brute_force_subspaces;

namespace {

MatrixGF random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<std::uint32_t> pick(0,
                                                      static_cast<std::uint32_t>(f->order() - 1));
    MatrixGF m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, pick(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on simple matrices") {
    const FieldPtr f2 = make_field(2, 1);
    MatrixGF id(f2, 3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1);
    const RrefResult r_id = rref(id);
    CHECK(r_id.matrix == id);
    CHECK(r_id.rank == 3);
    CHECK(r_id.pivots == std::vector<std::size_t>{0, 1, 2});

    const MatrixGF zero(f2, 2, 4);
    const RrefResult r_zero = rref(zero);
    CHECK(r_zero.matrix == zero);
    CHECK(r_zero.rank == 0);

    // over GF(3), row2 = 2*row1
    const FieldPtr f3 = make_field(3, 1);
    const MatrixGF a = MatrixGF::from_rows(f3, {{1, 2}, {2, 1}});
    const RrefResult ra = rref(a);
    CHECK(ra.rank == 1);
    CHECK(ra.matrix == MatrixGF::from_rows(f3, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    std::mt19937_64 rng(12345);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const FieldPtr f = q == 4 ? make_field(2, 2) : make_field(q, 1);
        for (int trial = 0; trial < 25; ++trial) {
            const MatrixGF a = random_matrix(rng, f, 1 + trial % 5, 1 + (trial * 7) % 6);
            const RrefResult ra = rref(a);
            CHECK(rref(ra.matrix).matrix == ra.matrix);
            CHECK(rank(a) == rank(a.transpose()));
        }
    }
}

TEST_CASE("nullspace") {
    const FieldPtr f2 = make_field(2, 1);
    MatrixGF id(f2, 3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1);
    CHECK(nullspace(id).rows() == 0);

    const MatrixGF zero_row(f2, 1, 4);
    const MatrixGF ns = nullspace(zero_row);
    CHECK(ns.rows() == 4);
    CHECK(rank(ns) == 4);

    std::mt19937_64 rng(777);
    for (std::uint64_t q : {2, 3, 5}) {
        const FieldPtr f = make_field(q, 1);
        for (int trial = 0; trial < 20; ++trial) {
            const MatrixGF a = random_matrix(rng, f, 1 + trial % 4, 2 + trial % 5);
            const MatrixGF ns2 = nullspace(a);
            CHECK(ns2.rows() == a.cols() - rank(a));
            CHECK(rref(ns2).matrix == ns2);  // canonical
            for (std::size_t i = 0; i < ns2.rows(); ++i) {
                const std::vector<std::uint32_t> prod = matrix_times_col(a, ns2.row(i));
                CHECK(weight(prod) == 0);
            }
        }
    }
}

TEST_CASE("subspace stream counts match Gaussian binomials (q <= 4, k <= 4)") {
    for (std::uint64_t q : {2, 3, 4}) {
        const FieldPtr f = q == 4 ? make_field(2, 2) : make_field(q, 1);
        for (std::size_t k = 0; k <= 4; ++k)
            for (std::size_t r = 0; r <= k; ++r) {
                std::size_t count = 0;
                for_each_subspace(f, k, r, [&](const SubspaceHandle& h) {
                    CHECK(h.r == r);
                    CHECK(h.basis.rows() == r);
                    CHECK(h.basis.cols() == k);
                    CHECK(rref(h.basis).matrix == h.basis);  // already canonical
                    ++count;
                });
                CHECK(BigInt(static_cast<unsigned long>(count)) ==
                      gaussian_binomial(static_cast<long>(k), static_cast<long>(r), q));
            }
    }
}

TEST_CASE("stream agrees with the brute-force subspace oracle") {
    // GF(3), k=4, r=2: all rank-2 2x4 matrices canonicalized into a set
    const FieldPtr f3 = make_field(3, 1);
    const auto oracle = brute_force_subspaces(f3, 4, 2);
    CHECK(oracle.size() == 130);

    std::set<std::vector<std::uint32_t>> streamed;
    for_each_subspace(f3, 4, 2, [&](const SubspaceHandle& h) {
        std::vector<std::uint32_t> flat;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) flat.push_back(h.basis.at(i, j));
        CHECK(streamed.insert(std::move(flat)).second);  // no duplicates
    });
    CHECK(streamed == oracle);

    // GF(2), k=3, r=1: the 7 one-dimensional subspaces
    std::size_t count = 0;
    for_each_subspace(make_field(2, 1), 3, 1, [&](const SubspaceHandle&) { ++count; });
    CHECK(count == 7);
}

TEST_CASE("subspace stream edge cases and determinism") {
    const FieldPtr f5 = make_field(5, 1);
    SubspaceStream zero_dim(f5, 3, 0);
    const auto h = zero_dim.next();
    REQUIRE(h.has_value());
    CHECK(h->r == 0);
    CHECK(h->basis.rows() == 0);
    CHECK_FALSE(zero_dim.next().has_value());

    CHECK_THROWS_AS(SubspaceStream(f5, 2, 3), std::invalid_argument);

    SubspaceStream s1(f5, 3, 2), s2(f5, 3, 2);
    while (true) {
        const auto a = s1.next(), b = s2.next();
        CHECK(a.has_value() == b.has_value());
        if (!a) break;
        CHECK(a->basis == b->basis);
    }
}

TEST_CASE("mixed-field matrix operations are rejected") {
    const MatrixGF a(make_field(2, 1), 2, 2);
    const MatrixGF b(make_field(3, 1), 2, 2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(MatrixGF(make_field(2, 1), 1, 1).set(0, 0, 5), std::invalid_argument);
}

TEST_CASE("matrix text format round trip") {
    const FieldPtr f9 = extend_field(make_field(3, 1), 2);
    std::mt19937_64 rng(99);
    const MatrixGF a = random_matrix(rng, f9, 3, 5);
    const MatrixGF b = parse_matrix(write_matrix(a));
    CHECK(a == b);

    const MatrixGF c = parse_matrix("q= 2^1 2 3 0,1\n1 0 1\n0 1 1\n");
    CHECK(c.rows() == 2);
    CHECK(c.at(0, 2) == 1);

    CHECK_THROWS_AS(parse_matrix("r= 2^1 1 1 0,1\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("q= 2^1 1 2 0,1\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("q= 2^1 1 1 0,1\n7\n"), std::invalid_argument);
}

TEST_CASE("matrix files may carry a non-canonical modulus") {
    // canonical GF(9) modulus is y^2+1; this file uses y^2+y+2
    const MatrixGF m = parse_matrix("q= 3^2 1 2 2,1,1\n3 4\n");
    CHECK(m.field()->modulus() == std::vector<std::uint32_t>{2, 1, 1});
    CHECK(m.field()->order() == 9);
    CHECK_FALSE(m.field()->same_as(*make_field(3, 2)));
    CHECK(parse_matrix(write_matrix(m)) == m);

    CHECK_THROWS_AS(parse_matrix("q= 3^2 1 1 0,0,1\n3\n"), std::invalid_argument);  // y^2
}
