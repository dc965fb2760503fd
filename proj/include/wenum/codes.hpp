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

#ifndef WENUM_CODES_HPP
#define WENUM_CODES_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wenum/linalg.hpp"
#include "wenum/qcomb.hpp"

namespace wenum {

/// Default cap on enumerated words/subcodes per operation.
constexpr std::uint64_t kDefaultBudget = 1ull << 26;

/// An enumeration would exceed the configured budget. Hard error, never
/// silent truncation; shrink the instance or raise the budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact weight counts, indexed by weight w in [0, n].
struct WeightVector {
    std::vector<BigInt> counts;

    BigInt total() const;
    friend bool operator==(const WeightVector& a, const WeightVector& b) = default;
};

/// A linear [n,k] code over GF(q), held as a full-rank k x n generator matrix.
/// Rank-deficient generators are rejected (a silently reduced dimension would
/// corrupt every subspace count downstream). k = 0 is legal: the zero code.
class LinearCode {
  public:
    LinearCode(FieldPtr field, MatrixGF generator);

    const FieldPtr& field() const { return field_; }
    const MatrixGF& generator() const { return gen_; }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    /// True when no generator column is zero (required by the geometry view).
    bool nondegenerate() const { return nondegenerate_; }

  private:
    FieldPtr field_;
    MatrixGF gen_;
    bool nondegenerate_;
};

LinearCode code_from_matrix(FieldPtr field, MatrixGF generator);

std::vector<std::size_t> support(const std::vector<std::uint32_t>& word);
std::size_t weight(const std::vector<std::uint32_t>& word);

/// counts[w] = number of codewords of weight w, by streaming all q^k messages.
/// Throws budget_error when q^k > budget. `workers` > 1 partitions the message
/// space by the first coordinate.
WeightVector weight_distribution(const LinearCode& code,
                                 std::uint64_t budget = kDefaultBudget,
                                 unsigned workers = 1);

/// The same code read over the degree-m tower extension of its field; the
/// generator entries embed as-is (constant polynomials).
LinearCode extend_code(const LinearCode& code, unsigned m);

/// An r-dimensional subcode of a parent code: the row space of H·G, where H
/// is the basis of a message-space handle. The basis rows are codewords and
/// have rank r.
struct Subcode {
    std::size_t r = 0;
    MatrixGF basis;          // r x n
    SubspaceHandle handle;   // message-space side of the correspondence
};

Subcode subcode_of(const LinearCode& code, SubspaceHandle handle);

/// Support and weight of the subcode selected by a message-space handle:
/// the union of the supports of the rows of H·G (a coordinate that is zero on
/// every basis row is zero on the whole span).
std::pair<std::vector<std::size_t>, std::size_t> subcode_support(const LinearCode& code,
                                                                 const SubspaceHandle& handle);

/// counts[w] = number of r-dimensional subcodes of weight w, aggregated over
/// the canonical subspace stream. Throws budget_error when [k over r]_q > budget.
WeightVector generalized_weight_distribution(const LinearCode& code, std::size_t r,
                                             std::uint64_t budget = kDefaultBudget);

/// Coordinate expansion of a word of code⊗GF(q^m) on the tower basis: row j
/// holds the degree-j coefficients. Every row is a word of the base code.
MatrixGF coordinate_rows(const LinearCode& base_code, unsigned m,
                         const std::vector<std::uint32_t>& word);

/// Unique message x with x·G = word, if word is in the code.
std::vector<std::uint32_t> message_of(const LinearCode& code,
                                      const std::vector<std::uint32_t>& word);

}  // namespace wenum

#endif
