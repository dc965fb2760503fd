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

// Independent brute-force oracles for the enumeration engines. Everything
// here recomputes from first principles (plain odometers, full row-vector
// products, rank filters) and must stay independent of the streaming paths
// it is used to check.

#ifndef WENUM_TESTS_HELPERS_HPP
#define WENUM_TESTS_HELPERS_HPP

#include <random>
#include <set>

#include "wenum/codes.hpp"

namespace wenum::testing {

inline bool next_tuple(std::vector<std::uint32_t>& v, std::uint64_t q) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] + 1 < q) {
            ++v[i];
            return true;
        }
        v[i] = 0;
    }
    return false;
}

// weight distribution the slow way: every message, full product, no sharing
inline WeightVector dumb_weight_distribution(const LinearCode& code) {
    const std::uint64_t q = code.field()->order();
    WeightVector wv;
    wv.counts.assign(code.length() + 1, 0);
    std::vector<std::uint32_t> x(code.dimension(), 0);
    do {
        wv.counts[weight(row_times_matrix(x, code.generator()))] += 1;
    } while (next_tuple(x, q));
    return wv;
}

// all q^k codewords, message-odometer order
inline std::vector<std::vector<std::uint32_t>> all_words(const LinearCode& code) {
    const std::uint64_t q = code.field()->order();
    std::vector<std::vector<std::uint32_t>> words;
    std::vector<std::uint32_t> x(code.dimension(), 0);
    do {
        words.push_back(row_times_matrix(x, code.generator()));
    } while (next_tuple(x, q));
    return words;
}

// canonical forms of the row spaces of all full-rank r x k matrices
inline std::set<std::vector<std::uint32_t>> brute_force_subspaces(const FieldPtr& field,
                                                                  std::size_t k,
                                                                  std::size_t r) {
    const std::uint64_t q = field->order();
    std::set<std::vector<std::uint32_t>> canon;
    std::vector<std::uint32_t> entries(r * k, 0);
    do {
        MatrixGF m(field, r, k);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) m.set(i, j, entries[i * k + j]);
        const RrefResult rr = rref(m);
        if (rr.rank != r) continue;
        std::vector<std::uint32_t> flat;
        flat.reserve(r * k);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) flat.push_back(rr.matrix.at(i, j));
        canon.insert(std::move(flat));
    } while (next_tuple(entries, q));
    return canon;
}

inline LinearCode random_code(std::mt19937_64& rng, const FieldPtr& field, std::size_t n,
                              std::size_t k, bool require_nondegenerate = true) {
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(field->order() - 1));
    for (;;) {
        MatrixGF g(field, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) g.set(i, j, pick(rng));
        if (rank(g) != k) continue;
        LinearCode code(field, std::move(g));
        if (require_nondegenerate && !code.nondegenerate()) continue;
        return code;
    }
}

}  // namespace wenum::testing

#endif
