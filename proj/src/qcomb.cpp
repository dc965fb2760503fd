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

#include "wenum/qcomb.hpp"

#include <algorithm>
#include <sstream>

namespace wenum {

BigInt gaussian_binomial(long s, long r, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (r < 0 || r > s) return 0;
    const BigInt bq(static_cast<unsigned long>(q));
    BigInt res = 1;
    BigInt qs, qd;
    for (long i = 0; i < r; ++i) {
        // partial products are [s over i+1]_q, so each division is exact
        mpz_pow_ui(qs.get_mpz_t(), bq.get_mpz_t(), static_cast<unsigned long>(s - i));
        mpz_pow_ui(qd.get_mpz_t(), bq.get_mpz_t(), static_cast<unsigned long>(i + 1));
        res *= qs - 1;
        mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), BigInt(qd - 1).get_mpz_t());
    }
    return res;
}

TPoly::TPoly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

TPoly::TPoly(long constant) : TPoly(BigInt(constant)) {}

TPoly TPoly::from_coeffs(std::vector<BigInt> coeffs) {
    TPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt TPoly::eval(const BigInt& t) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return TPoly::from_coeffs(std::move(c));
}

TPoly operator-(const TPoly& a, const TPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return TPoly::from_coeffs(std::move(c));
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return TPoly::from_coeffs(std::move(c));
}

TPoly TPoly::scaled(const BigInt& s) const {
    if (s == 0) return {};
    std::vector<BigInt> c = c_;
    for (BigInt& x : c) x *= s;
    return from_coeffs(std::move(c));
}

bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

std::string TPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? "-" : "+");
        }
        a = abs(a);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            out << "T";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<std::string> TPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const BigInt& x : c_) out.push_back(x.get_str());
    return out;
}

TPoly falling_product(unsigned r, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("falling_product: q must be >= 2");
    TPoly p(1);
    BigInt qj = 1;
    for (unsigned j = 0; j < r; ++j) {
        p = p * TPoly::from_coeffs({-qj, 1});
        qj *= static_cast<unsigned long>(q);
    }
    return p;
}

TPoly lagrange_interpolate(const std::vector<std::pair<BigInt, BigInt>>& nodes) {
    const std::size_t n = nodes.size();
    if (n == 0) return {};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::invalid_argument("lagrange_interpolate: duplicate nodes");

    // master polynomial N(T) = prod (T - t_j)
    std::vector<BigInt> master(n + 1, 0);
    master[0] = 1;
    std::size_t deg = 0;
    for (const auto& [t, v] : nodes) {
        (void)v;
        for (std::size_t i = deg + 2; i-- > 1;) master[i] = master[i - 1] - t * master[i];
        master[0] *= -t;
        ++deg;
    }

    std::vector<mpq_class> acc(n, 0);
    std::vector<BigInt> li(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (nodes[i].second == 0) continue;
        // L_i = N / (T - t_i) by synthetic division (remainder is 0 by design)
        const BigInt& ti = nodes[i].first;
        BigInt carry = master[n];
        for (std::size_t d = n; d-- > 0;) {
            li[d] = carry;
            carry = master[d] + ti * carry;
        }
        BigInt denom = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= nodes[i].first - nodes[j].first;
        mpq_class w(nodes[i].second, denom);
        w.canonicalize();
        for (std::size_t d = 0; d < n; ++d)
            if (li[d] != 0) acc[d] += w * mpq_class(li[d]);
    }

    std::vector<BigInt> coeffs(n);
    for (std::size_t d = 0; d < n; ++d) {
        mpq_class c = acc[d];
        c.canonicalize();
        if (c.get_den() != 1)
            throw integrality_error("lagrange_interpolate: non-integral coefficient at T^" +
                                    std::to_string(d));
        coeffs[d] = c.get_num();
    }
    return TPoly::from_coeffs(std::move(coeffs));
}

std::string format_factored(const TPoly& p, std::uint64_t q) {
    if (p.is_zero()) return "0";
    if (p.degree() == 0) return p.coeff(0).get_str();
    // peel off (T - q^j) factors, smallest root first
    TPoly rest = p;
    std::vector<BigInt> roots;
    BigInt qj = 1;
    for (int j = 0; j <= p.degree(); ++j) {
        while (rest.degree() >= 1 && rest.eval(qj) == 0) {
            // synthetic division by (T - qj)
            std::vector<BigInt> c(static_cast<std::size_t>(rest.degree()), 0);
            BigInt carry = rest.coeff(static_cast<std::size_t>(rest.degree()));
            for (std::size_t d = c.size(); d-- > 0;) {
                c[d] = carry;
                carry = rest.coeff(d) + qj * carry;
            }
            rest = TPoly::from_coeffs(std::move(c));
            roots.push_back(qj);
        }
        qj *= static_cast<unsigned long>(q);
    }
    if (roots.empty()) return p.to_string();
    std::ostringstream out;
    if (rest.degree() == 0) {
        if (rest.coeff(0) == -1)
            out << "-";
        else if (rest.coeff(0) != 1)
            out << rest.coeff(0).get_str();
    }
    for (const BigInt& root : roots) out << "(T-" << root.get_str() << ")";
    if (rest.degree() > 0) out << "(" << rest.to_string() << ")";
    return out.str();
}

}  // namespace wenum
