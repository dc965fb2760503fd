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

#ifndef WENUM_LINALG_HPP
#define WENUM_LINALG_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wenum/gf.hpp"

namespace wenum {

/// Dense matrix over a finite field. Entries are element indices of `field`.
/// Empty matrices (0 rows and/or 0 columns) are legal and have rank 0.
class MatrixGF {
  public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled
    static MatrixGF from_rows(FieldPtr field,
                              const std::vector<std::vector<std::uint32_t>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v);

    std::vector<std::uint32_t> row(std::size_t r) const;
    std::vector<std::uint32_t> col(std::size_t c) const;
    MatrixGF transpose() const;

    /// Rows of `other` appended below; fields must match.
    MatrixGF stacked(const MatrixGF& other) const;

    friend MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);
    friend bool operator==(const MatrixGF& a, const MatrixGF& b);

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// b = x A for a row vector x of length A.rows().
std::vector<std::uint32_t> row_times_matrix(const std::vector<std::uint32_t>& x,
                                            const MatrixGF& a);
/// y = A xᵀ for a vector x of length A.cols().
std::vector<std::uint32_t> matrix_times_col(const MatrixGF& a,
                                            const std::vector<std::uint32_t>& x);

struct RrefResult {
    MatrixGF matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; rank = number of nonzero rows.
RrefResult rref(const MatrixGF& a);
std::size_t rank(const MatrixGF& a);

/// RREF basis of {x : A xᵀ = 0}; dimension cols − rank, one basis vector per row.
MatrixGF nullspace(const MatrixGF& a);

/// An r-dimensional subspace of GF(q)^k in canonical form: the unique RREF
/// basis. Equal handles ⇔ equal subspaces.
struct SubspaceHandle {
    std::size_t r;
    MatrixGF basis;                    // r x k, RREF, full rank
    std::vector<std::size_t> pivots;   // sorted
};

bool operator==(const SubspaceHandle& a, const SubspaceHandle& b);

/// Streams every r-dimensional subspace of GF(q)^k exactly once as a canonical
/// RREF basis, ordered lexicographically by pivot-column set and then by the
/// free entries. Total count is the Gaussian binomial [k over r]_q.
class SubspaceStream {
  public:
    SubspaceStream(FieldPtr field, std::size_t k, std::size_t r);
    std::optional<SubspaceHandle> next();

  private:
    FieldPtr field_;
    std::size_t k_, r_;
    bool done_;
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> free_cells_;  // row-major
    std::vector<std::uint32_t> free_values_;

    void reset_cells();
    SubspaceHandle make_handle() const;
    bool advance();
};

void for_each_subspace(const FieldPtr& field, std::size_t k, std::size_t r,
                       const std::function<void(const SubspaceHandle&)>& fn);

/// Text format: first line "q= <notation> <rows> <cols> <modulus>", then one
/// row per line with entries as element indices.
std::string write_matrix(const MatrixGF& a);
MatrixGF read_matrix(std::istream& in);
MatrixGF parse_matrix(const std::string& text);

}  // namespace wenum

#endif
