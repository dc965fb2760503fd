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

#ifndef WENUM_GEOMETRY_HPP
#define WENUM_GEOMETRY_HPP

#include <optional>
#include <string>

#include "wenum/families.hpp"

namespace wenum {

/// The columns of a nondegenerate generator matrix read as points of the
/// projective space of dimension k−1: one canonical representative (first
/// nonzero coordinate scaled to 1) per column. Repeated columns give repeated
/// points; the rank condition guarantees the points span the space.
struct ProjectiveSystem {
    FieldPtr field;
    std::size_t k = 0;
    std::vector<std::vector<std::uint32_t>> points;
};

/// Throws std::invalid_argument when the generator has a zero column.
ProjectiveSystem projective_system(const LinearCode& code);

/// Basis (RREF) of the linear subspace behind the codimension-r projective
/// subspace matched to a message-space handle: the nullspace of the handle's
/// basis matrix.
MatrixGF subcode_to_subspace(const LinearCode& code, const SubspaceHandle& handle);

/// Rank test: the point joins the span without raising its dimension.
bool point_in_subspace(const MatrixGF& basis, const std::vector<std::uint32_t>& point);

/// Outcome of one support-structure check. `witness` is a column index that
/// broke the expected set equality, -1 when none.
struct SupportReport {
    bool pass = false;
    std::size_t r = 0;
    std::size_t weight = 0;
    std::vector<std::size_t> complement;  // [n] minus the support
    bool full_support = false;
    long witness = -1;
    std::string detail;
};

/// Checks that the columns missing from the subcode's support are exactly the
/// points lying in the matched codimension-r subspace. With a family given,
/// additionally checks the family's subspace structure: for the simplex
/// family the complement must be the full point set of a projective subspace
/// of codimension r; for rm1 either the support is everything or the
/// complement is an affine subspace of codimension r (all representatives
/// have first coordinate 1 and their differences span a space of dimension
/// s−1−r, with q^{s−1−r} points).
SupportReport verify_support_complement(const LinearCode& code, const SubspaceHandle& handle,
                                        std::optional<FamilyKind> family = std::nullopt);

/// Checks a word of code⊗GF(q^m): its coordinate rows on the tower basis span
/// a subcode with the same support, and when the weight equals the family's
/// full-rank extension weight, the support complement is the point set of a
/// codimension-m subspace (projective for simplex, affine for rm1).
SupportReport verify_extension_word_support(const LinearCode& code, unsigned m,
                                            const std::vector<std::uint32_t>& word,
                                            std::optional<FamilyKind> family = std::nullopt);

}  // namespace wenum

#endif
