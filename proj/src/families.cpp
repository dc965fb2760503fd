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

#include "wenum/families.hpp"

namespace wenum {

namespace {

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void check_family_params(std::uint64_t q, unsigned s) {
    if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
    if (q < 2) throw std::invalid_argument("family parameter q must be >= 2");
    // q must be a prime power
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::invalid_argument("family parameter q must be a prime power");
}

// all vectors of GF(q)^d in lexicographic index order (first entry most
// significant), as an odometer on the last coordinate
bool next_vector(std::vector<std::uint32_t>& v, std::uint64_t q) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] + 1 < q) {
            ++v[i];
            return true;
        }
        v[i] = 0;
    }
    return false;
}

}  // namespace

LinearCode simplex_code(const FieldPtr& field, unsigned s) {
    if (!field) throw std::invalid_argument("null field");
    if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
    const std::uint64_t q = field->order();
    const std::size_t n = static_cast<std::size_t>((pow_u64(q, s) - 1) / (q - 1));
    MatrixGF g(field, s, n);
    std::vector<std::uint32_t> v(s, 0);
    std::size_t col = 0;
    while (next_vector(v, q)) {
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] != 1) continue;  // canonical representative only
        for (unsigned i = 0; i < s; ++i) g.set(i, col, v[i]);
        ++col;
    }
    if (col != n) throw std::logic_error("projective point count mismatch");
    return {field, std::move(g)};
}

LinearCode rm1_code(const FieldPtr& field, unsigned s) {
    if (!field) throw std::invalid_argument("null field");
    if (s < 1) throw std::invalid_argument("family parameter s must be >= 1");
    const std::uint64_t q = field->order();
    const std::size_t n = static_cast<std::size_t>(pow_u64(q, s - 1));
    MatrixGF g(field, s, n);
    std::vector<std::uint32_t> v(s - 1, 0);
    std::size_t col = 0;
    do {
        g.set(0, col, 1);
        for (unsigned i = 0; i + 1 < s; ++i) g.set(i + 1, col, v[i]);
        ++col;
    } while (next_vector(v, q));
    return {field, std::move(g)};
}

GWETable simplex_gwe_formula(std::uint64_t q, unsigned s) {
    check_family_params(q, s);
    GWETable g;
    g.q = q;
    g.k = s;
    g.n = static_cast<std::size_t>((pow_u64(q, s) - 1) / (q - 1));
    g.rows.assign(s + 1, WeightVector{std::vector<BigInt>(g.n + 1, 0)});
    for (unsigned r = 0; r <= s; ++r) {
        const std::size_t w =
            static_cast<std::size_t>((pow_u64(q, s) - pow_u64(q, s - r)) / (q - 1));
        g.rows[r].counts[w] = gaussian_binomial(s, r, q);
    }
    return g;
}

GWETable rm1_gwe_formula(std::uint64_t q, unsigned s) {
    check_family_params(q, s);
    GWETable g;
    g.q = q;
    g.k = s;
    g.n = static_cast<std::size_t>(pow_u64(q, s - 1));
    g.rows.assign(s + 1, WeightVector{std::vector<BigInt>(g.n + 1, 0)});
    for (unsigned r = 0; r <= s; ++r) {
        // subcodes with full support, one per codimension-(r-1) subspace of
        // the deleted hyperplane; vanishes at r = 0
        g.rows[r].counts[g.n] += gaussian_binomial(s - 1, static_cast<long>(r) - 1, q);
        // subcodes whose support complement is an affine subspace of
        // codimension r; vanishes at r = s
        if (r < s) {
            const std::size_t w =
                static_cast<std::size_t>(pow_u64(q, s - 1) - pow_u64(q, s - 1 - r));
            g.rows[r].counts[w] +=
                BigInt(static_cast<unsigned long>(pow_u64(q, r))) *
                gaussian_binomial(s - 1, r, q);
        }
    }
    return g;
}

EWETable simplex_ewe_formula(std::uint64_t q, unsigned s) {
    check_family_params(q, s);
    EWETable e;
    e.q = q;
    e.k = s;
    e.n = static_cast<std::size_t>((pow_u64(q, s) - 1) / (q - 1));
    e.polys.assign(e.n + 1, TPoly());
    for (unsigned r = 0; r <= s; ++r) {
        const std::size_t w =
            static_cast<std::size_t>((pow_u64(q, s) - pow_u64(q, s - r)) / (q - 1));
        e.polys[w] = e.polys[w] + falling_product(r, q).scaled(gaussian_binomial(s, r, q));
    }
    return e;
}

EWETable rm1_ewe_formula(std::uint64_t q, unsigned s) {
    check_family_params(q, s);
    EWETable e;
    e.q = q;
    e.k = s;
    e.n = static_cast<std::size_t>(pow_u64(q, s - 1));
    e.polys.assign(e.n + 1, TPoly());
    for (unsigned r = 1; r <= s; ++r)
        e.polys[e.n] = e.polys[e.n] +
                       falling_product(r, q).scaled(
                           gaussian_binomial(s - 1, static_cast<long>(r) - 1, q));
    for (unsigned r = 0; r < s; ++r) {
        const std::size_t w =
            static_cast<std::size_t>(pow_u64(q, s - 1) - pow_u64(q, s - 1 - r));
        e.polys[w] = e.polys[w] +
                     falling_product(r, q).scaled(
                         BigInt(static_cast<unsigned long>(pow_u64(q, r))) *
                         gaussian_binomial(s - 1, r, q));
    }
    return e;
}

}  // namespace wenum
