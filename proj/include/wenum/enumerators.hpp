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

#ifndef WENUM_ENUMERATORS_HPP
#define WENUM_ENUMERATORS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wenum/codes.hpp"

namespace wenum {

/// A conversion input violates the table invariants (non-integral or negative
/// solve step, wrong constant term, degree above k, nonzero value at T = 1).
struct table_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-dimension weight distributions of the subcodes of an [n,k] code:
/// rows[r].counts[w] counts the r-dimensional subcodes of weight w.
struct GWETable {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t q = 2;
    std::vector<WeightVector> rows;  // r = 0..k

    friend bool operator==(const GWETable& a, const GWETable& b) = default;
};

/// The weight distribution of every extension of the code in one object:
/// polys[w] evaluated at q^m counts the weight-w words over GF(q^m).
struct EWETable {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t q = 2;
    std::vector<TPoly> polys;  // w = 0..n

    friend bool operator==(const EWETable& a, const EWETable& b) = default;
};

/// All per-dimension distributions, r = 0..k, by subspace enumeration.
GWETable gwe_compute(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// polys[w] = Σ_r (∏_{j<r} (T − q^j)) · rows[r].counts[w].
EWETable ewe_from_gwe(const GWETable& g);

/// Inverse of ewe_from_gwe by triangular solve over the nodes T = q^r:
/// every division must be exact and every recovered count nonnegative,
/// otherwise the input is not the table of any [n,k] code and a table_error
/// is thrown.
GWETable gwe_from_ewe(const EWETable& e);

/// Independent route: enumerate the extension codes for m = 1..k (m = 0 is
/// the analytic single-word case) and interpolate each weight's counts.
EWETable ewe_by_interpolation(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                              unsigned workers = 1);

/// counts[w] = polys[w](q^m): the weight distribution of the m-th extension.
WeightVector ewe_eval(const EWETable& e, unsigned m);

nlohmann::ordered_json to_json(const WeightVector& wv);
nlohmann::ordered_json to_json(const GWETable& g);
nlohmann::ordered_json to_json(const EWETable& e);

/// Human-readable table: one "w: ..." line per nonzero entry.
std::string format_table(const GWETable& g);
std::string format_table(const EWETable& e);
std::string format_distribution(const WeightVector& wv);

}  // namespace wenum

#endif
