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

#ifndef WENUM_GF_HPP
#define WENUM_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wenum {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(p^k), or a degree-m extension GF(q)[y]/(g(y)) of another
/// field ("tower"). Elements are integer indices in [0, order()): the base-b
/// digits of an index, ascending, are the coefficients of the residue
/// polynomial, where b is the coefficient field's order. Index 0 is the zero
/// element and index 1 the one element. For a tower, the embedding of the
/// base field is the numeric identity on indices (constant polynomials).
///
/// Fields are immutable after construction and safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
  public:
    // largest supported order; element indices stay in 32 bits
    static constexpr std::uint64_t max_order = 1ull << 20;

    std::uint64_t order() const { return q_; }
    std::uint64_t characteristic() const { return p_; }
    /// Degree over the coefficient field (k for GF(p^k), m for a tower).
    unsigned degree() const { return k_; }
    bool is_tower() const { return base_ != nullptr; }
    /// Base field of a tower; null for a plain GF(p^k).
    const FieldPtr& base() const { return base_; }
    /// Order of the coefficient field (p, or base()->order() for towers).
    std::uint64_t coeff_order() const { return cbase_; }
    /// Modulus coefficients, ascending degree, length degree()+1, monic.
    /// Entries are element indices of the coefficient field.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws std::domain_error on 0
    std::uint32_t pow(std::uint32_t a, long long e) const;

    /// i-th polynomial coefficient of an element, as a coefficient-field index.
    std::uint32_t coeff(std::uint32_t a, unsigned i) const;
    /// Element with the given coefficients (ascending; missing ones are 0).
    std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;
    /// Embedding of a base-field element into this tower (identity on indices).
    std::uint32_t embed(std::uint32_t base_element) const;

    /// Structural equality: same construction parameters all the way down.
    bool same_as(const Field& other) const;

    /// "p^k" for plain fields, "p^k:m" (recursively) for towers.
    std::string notation() const;
    /// Modulus as comma-separated coefficient indices, ascending degree.
    std::string modulus_string() const;

    struct ctor_key;  // construction goes through the factory functions
    Field(ctor_key, std::uint64_t p, unsigned k, FieldPtr base,
          std::vector<std::uint32_t> modulus);

  private:
    std::uint64_t p_;      // characteristic
    unsigned k_;           // degree over the coefficient field
    std::uint64_t q_;      // order = cbase_^k_
    std::uint64_t cbase_;  // coefficient field order
    FieldPtr base_;        // null unless tower
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> cpow_;  // cbase_^i, i = 0..k_

    bool xor_add_;  // characteristic 2: index addition is XOR
    std::vector<std::uint32_t> add_table_, neg_table_;
    std::vector<std::uint32_t> exp_, log_;  // discrete log tables when q_ fits

    std::uint32_t cadd(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t csub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t cneg(std::uint32_t a) const;
    std::uint32_t cmul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t digit(std::uint32_t a, unsigned i) const;
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const;
    void build_tables();
};

/// GF(p^k) with the lexicographically smallest monic irreducible modulus
/// (smallest coefficient vector read as a base-p integer, ascending digits).
/// Deterministic: equal arguments give structurally equal fields.
FieldPtr make_field(std::uint64_t p, unsigned k);
/// Same, with an explicit modulus (validated monic irreducible of degree k).
FieldPtr make_field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

/// Degree-m extension of `base` with the lex-smallest irreducible modulus.
FieldPtr extend_field(const FieldPtr& base, unsigned m);
FieldPtr extend_field(const FieldPtr& base, unsigned m, std::vector<std::uint32_t> modulus);

/// Lex-smallest monic degree-d polynomial over `field` with no monic divisor
/// of degree in [1, d/2]. Coefficients ascending, length d+1. Exhaustive trial
/// division; fine while order^d stays desk-sized.
std::vector<std::uint32_t> find_irreducible(const FieldPtr& field, unsigned d);

/// Parse "p^k" or "p^k:m[:m...]" field notation.
FieldPtr parse_field_notation(const std::string& s);

/// Field element tagged with its field. Convenience layer over the index API;
/// mixing elements of different fields throws std::invalid_argument.
class Element {
  public:
    Element(FieldPtr field, std::uint32_t index);

    const FieldPtr& field() const { return field_; }
    std::uint32_t index() const { return index_; }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator/(const Element& a, const Element& b);
    Element operator-() const;
    friend bool operator==(const Element& a, const Element& b);

  private:
    FieldPtr field_;
    std::uint32_t index_;
};

}  // namespace wenum

#endif
