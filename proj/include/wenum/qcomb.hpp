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

#ifndef WENUM_QCOMB_HPP
#define WENUM_QCOMB_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wenum {

using BigInt = mpz_class;

/// Exact interpolation produced a non-integer coefficient, or a triangular
/// solve hit a non-exact division: some upstream enumeration is wrong.
struct integrality_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gaussian binomial [s over r]_q: the number of r-dimensional subspaces of an
/// s-dimensional space over GF(q). Zero when r < 0 or r > s. Exact; divides
/// after each factor pair so intermediates stay small.
BigInt gaussian_binomial(long s, long r, std::uint64_t q);

/// Integer polynomial in one variable T; coefficients ascending degree, kept
/// canonical (no trailing zeros, zero polynomial = empty list).
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(BigInt constant);
    explicit TPoly(long constant);
    static TPoly from_coeffs(std::vector<BigInt> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    BigInt eval(const BigInt& t) const;  // Horner

    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly scaled(const BigInt& c) const;
    friend bool operator==(const TPoly& a, const TPoly& b);

    /// Expanded human form, descending degree: "T^3-7T^2+14T-8".
    std::string to_string() const;
    /// Coefficients as decimal strings, ascending degree.
    std::vector<std::string> coeff_strings() const;

  private:
    std::vector<BigInt> c_;
    void trim();
};

/// ∏_{j=0}^{r-1} (T − q^j); the empty product (r = 0) is the constant 1.
TPoly falling_product(unsigned r, std::uint64_t q);

/// Unique polynomial of degree < |nodes| through all (t, v) points, computed
/// in exact rational arithmetic. Throws std::invalid_argument on duplicate
/// nodes and integrality_error if any coefficient is not an integer.
TPoly lagrange_interpolate(const std::vector<std::pair<BigInt, BigInt>>& nodes);

/// Factored human form: peels off (T − q^j) factors and prints the rest
/// expanded, e.g. "7(T-1)(T-2)" or "(T-1)(T^3-7T^2+21T-21)".
std::string format_factored(const TPoly& p, std::uint64_t q);

}  // namespace wenum

#endif
