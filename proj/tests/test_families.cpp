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
#include "wenum/families.hpp"
#include "helpers.hpp"

#include <set>

using namespace wenum;
using namespace wenum::testing;

namespace {

TPoly poly(std::initializer_list<long> ascending) {
    std::vector<BigInt> c;
    for (long x : ascending) c.emplace_back(x);
    return TPoly::from_coeffs(std::move(c));
}

FieldPtr field_of_order(std::uint64_t q) {
    switch (q) {
        case 4: return make_field(2, 2);
        case 8: return make_field(2, 3);
        case 9: return make_field(3, 2);
        default: return make_field(q, 1);
    }
}

}  // namespace

TEST_CASE("simplex constructor") {
    const FieldPtr f2 = make_field(2, 1);
    const LinearCode s23 = simplex_code(f2, 3);
    CHECK(s23.length() == 7);
    CHECK(s23.dimension() == 3);
    CHECK(s23.nondegenerate());

    // no column repeats (q=2: representatives are the vectors themselves)
    std::set<std::vector<std::uint32_t>> cols;
    for (std::size_t j = 0; j < 7; ++j) CHECK(cols.insert(s23.generator().col(j)).second);

    // canonical representatives: first nonzero coordinate 1, projectively distinct
    for (std::uint64_t q : {3, 4}) {
        const FieldPtr f = q == 4 ? make_field(2, 2) : make_field(q, 1);
        const LinearCode sx = simplex_code(f, 2);
        CHECK(sx.length() == q + 1);
        CHECK(sx.dimension() == 2);
        std::set<std::vector<std::uint32_t>> reps;
        for (std::size_t j = 0; j < sx.length(); ++j) {
            const auto col = sx.generator().col(j);
            std::size_t first = 0;
            while (col[first] == 0) ++first;
            CHECK(col[first] == 1);
            CHECK(reps.insert(col).second);
        }
    }

    const LinearCode s1 = simplex_code(f2, 1);
    CHECK(s1.length() == 1);
    CHECK(s1.dimension() == 1);
    CHECK(s1.generator().at(0, 0) == 1);
}

TEST_CASE("rm1 constructor") {
    const FieldPtr f2 = make_field(2, 1);
    const LinearCode rm = rm1_code(f2, 4);
    CHECK(rm.length() == 8);
    CHECK(rm.dimension() == 4);
    for (std::size_t j = 0; j < 8; ++j) CHECK(rm.generator().at(0, j) == 1);  // all-one row

    // the lower rows list all vectors of GF(2)^3 as columns, lexicographically
    std::set<std::vector<std::uint32_t>> cols;
    for (std::size_t j = 0; j < 8; ++j) {
        const std::vector<std::uint32_t> col = rm.generator().col(j);
        CHECK(cols.insert({col.begin() + 1, col.end()}).second);
    }

    const LinearCode rm32 = rm1_code(make_field(3, 1), 2);
    CHECK(rm32.length() == 3);
    CHECK(rm32.dimension() == 2);

    const LinearCode rm_s1 = rm1_code(f2, 1);
    CHECK(rm_s1.length() == 1);
    CHECK(rm_s1.dimension() == 1);
    CHECK(rm_s1.generator().at(0, 0) == 1);
}

TEST_CASE("closed-form GWE tables") {
    const GWETable s23 = simplex_gwe_formula(2, 3);
    CHECK(s23.rows[0].counts[0] == 1);
    CHECK(s23.rows[1].counts[4] == 7);
    CHECK(s23.rows[2].counts[6] == 7);
    CHECK(s23.rows[3].counts[7] == 1);

    // ternary [13,3]: r=1 subcodes all have weight (27-9)/2 = 9, count [3 1]_3 = 13
    const GWETable s33 = simplex_gwe_formula(3, 3);
    CHECK(s33.rows[1].counts[9] == 13);
    CHECK(s33.rows[1].total() == 13);

    const GWETable rm24 = rm1_gwe_formula(2, 4);
    CHECK(rm24.rows[2].counts[6] == 28);  // 2^2 [3 2]_2
    CHECK(rm24.rows[2].counts[8] == 7);   // [3 1]_2
    CHECK(rm24.rows[4].counts[8] == 1);
    CHECK(rm24.rows[4].total() == 1);
    CHECK(rm24.rows[0].counts[0] == 1);

    const GWETable rm32 = rm1_gwe_formula(3, 2);
    CHECK(rm32.rows[1].counts[2] == 3);
    CHECK(rm32.rows[1].counts[3] == 1);

    CHECK_THROWS_AS(simplex_gwe_formula(6, 2), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(rm1_gwe_formula(2, 0), std::invalid_argument);
}

TEST_CASE("formula tables equal enumeration-derived tables") {
    std::vector<std::pair<std::uint64_t, unsigned>> grid;
    for (std::uint64_t q : {2, 3, 4, 5})
        for (unsigned s : {1u, 2u, 3u}) grid.emplace_back(q, s);
    grid.emplace_back(2, 4);
    for (const auto& [q, s] : grid) {
        INFO("q ", q, " s ", s);
        const FieldPtr f = field_of_order(q);
        CHECK(simplex_gwe_formula(q, s) == gwe_compute(simplex_code(f, s)));
        CHECK(rm1_gwe_formula(q, s) == gwe_compute(rm1_code(f, s)));
        CHECK(simplex_ewe_formula(q, s) == ewe_from_gwe(simplex_gwe_formula(q, s)));
        CHECK(rm1_ewe_formula(q, s) == ewe_from_gwe(rm1_gwe_formula(q, s)));
    }
}

TEST_CASE("closed-form EWE tables match the golden lists") {
    const EWETable s23 = simplex_ewe_formula(2, 3);
    REQUIRE(s23.polys.size() == 8);
    CHECK(s23.polys[0] == poly({1}));
    CHECK(s23.polys[4] == poly({-7, 7}));
    CHECK(s23.polys[6] == poly({14, -21, 7}));
    CHECK(s23.polys[7] == poly({-8, 14, -7, 1}));
    for (std::size_t w : {1, 2, 3, 5}) CHECK(s23.polys[w] == TPoly());

    const EWETable rm24 = rm1_ewe_formula(2, 4);
    REQUIRE(rm24.polys.size() == 9);
    CHECK(rm24.polys[0] == poly({1}));
    CHECK(rm24.polys[4] == poly({-14, 14}));
    CHECK(rm24.polys[6] == poly({56, -84, 28}));
    CHECK(rm24.polys[7] == poly({-64, 112, -56, 8}));
    CHECK(rm24.polys[8] == poly({21, -42, 28, -8, 1}));

    for (std::uint64_t q : {2, 3, 4, 5}) {
        const EWETable e = simplex_ewe_formula(q, 1);
        CHECK(e.polys[0] == poly({1}));
        CHECK(e.polys[1] == poly({-1, 1}));
        const EWETable r = rm1_ewe_formula(q, 1);
        CHECK(r.polys[1] == poly({-1, 1}));
    }
}

TEST_CASE("binary rm1 shortened at the first coordinate has the simplex distribution") {
    const FieldPtr f2 = make_field(2, 1);
    const LinearCode rm = rm1_code(f2, 4);
    WeightVector shortened;
    shortened.counts.assign(rm.length(), 0);  // length 7 after deleting coordinate 0
    for (const auto& word : all_words(rm)) {
        if (word[0] != 0) continue;
        const std::vector<std::uint32_t> tail(word.begin() + 1, word.end());
        shortened.counts[weight(tail)] += 1;
    }
    CHECK(shortened == weight_distribution(simplex_code(f2, 3)));
}
