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

#ifndef WENUM_FAMILIES_HPP
#define WENUM_FAMILIES_HPP

#include "wenum/enumerators.hpp"

namespace wenum {

enum class FamilyKind { simplex, rm1 };

/// The [(q^s−1)/(q−1), s] code whose generator columns are the canonical
/// representatives (first nonzero coordinate 1) of the nonzero vectors of
/// GF(q)^s up to scalars, in lexicographic order. Its columns are exactly the
/// points of the projective space of dimension s−1 over GF(q), once each.
LinearCode simplex_code(const FieldPtr& field, unsigned s);

/// The [q^{s−1}, s] code whose generator has the all-one row on top and all
/// vectors of GF(q)^{s−1} as the remaining column positions, in lexicographic
/// order. Its columns are the points of the affine space of dimension s−1:
/// the projective points outside the hyperplane X_1 = 0.
LinearCode rm1_code(const FieldPtr& field, unsigned s);

/// Closed forms, expanded directly from the single-term (per r) weight data
/// of the two families; independent of the enumeration pipeline so the two
/// routes can check each other.
GWETable simplex_gwe_formula(std::uint64_t q, unsigned s);
GWETable rm1_gwe_formula(std::uint64_t q, unsigned s);
EWETable simplex_ewe_formula(std::uint64_t q, unsigned s);
EWETable rm1_ewe_formula(std::uint64_t q, unsigned s);

}  // namespace wenum

#endif
