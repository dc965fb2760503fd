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

#include "wenum/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wenum {

namespace {

constexpr std::uint64_t kLogTableMax = 1ull << 16;
constexpr std::uint64_t kAddTableMax = 1024;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// f mod g over `field`, g monic; true if the remainder is zero.
bool divides(const Field& field, const std::vector<std::uint32_t>& g,
             const std::vector<std::uint32_t>& f) {
    const std::size_t e = g.size() - 1;
    std::vector<std::uint32_t> r = f;
    for (std::size_t pos = r.size(); pos-- > e;) {
        const std::uint32_t c = r[pos];
        if (c == 0) continue;
        r[pos] = 0;
        for (std::size_t t = 0; t < e; ++t)
            r[pos - e + t] = field.sub(r[pos - e + t], field.mul(c, g[t]));
    }
    return std::all_of(r.begin(), r.begin() + static_cast<long>(e),
                       [](std::uint32_t x) { return x == 0; });
}

// Monic polynomial of degree d whose low coefficients are the base-q digits
// of `index`, ascending.
std::vector<std::uint32_t> monic_from_index(std::uint64_t q, unsigned d, std::uint64_t index) {
    std::vector<std::uint32_t> f(d + 1);
    for (unsigned i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    f[d] = 1;
    return f;
}

bool is_irreducible(const Field& field, const std::vector<std::uint32_t>& f) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    const std::uint64_t q = field.order();
    for (unsigned e = 1; e <= d / 2; ++e) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= q;
        for (std::uint64_t gi = 0; gi < count; ++gi)
            if (divides(field, monic_from_index(q, e, gi), f)) return false;
    }
    return true;
}

}  // namespace

struct Field::ctor_key {};

Field::Field(ctor_key, std::uint64_t p, unsigned k, FieldPtr base,
             std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), base_(std::move(base)), modulus_(std::move(modulus)) {
    cbase_ = base_ ? base_->order() : p_;
    cpow_.resize(k_ + 1);
    cpow_[0] = 1;
    for (unsigned i = 1; i <= k_; ++i) {
        cpow_[i] = cpow_[i - 1] * cbase_;
        if (cpow_[i] > max_order)
            throw std::invalid_argument("field order exceeds the 2^20 limit");
    }
    q_ = cpow_[k_];
    xor_add_ = (p_ == 2);
    build_tables();
}

std::uint32_t Field::cadd(std::uint32_t a, std::uint32_t b) const {
    if (base_) return base_->add(a, b);
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p_);
}

std::uint32_t Field::csub(std::uint32_t a, std::uint32_t b) const {
    if (base_) return base_->sub(a, b);
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + p_ - b) % p_);
}

std::uint32_t Field::cneg(std::uint32_t a) const {
    if (base_) return base_->neg(a);
    return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
}

std::uint32_t Field::cmul(std::uint32_t a, std::uint32_t b) const {
    if (base_) return base_->mul(a, b);
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
}

std::uint32_t Field::digit(std::uint32_t a, unsigned i) const {
    return static_cast<std::uint32_t>(a / cpow_[i] % cbase_);
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i)
        r += cadd(digit(a, i), digit(b, i)) * static_cast<std::uint32_t>(cpow_[i]);
    return r;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t da = digit(a, i);
        if (da == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = cadd(prod[i + j], cmul(da, digit(b, j)));
    }
    // modulus is monic: y^k = -(low part of modulus)
    for (std::size_t pos = prod.size(); pos-- > k_;) {
        const std::uint32_t c = prod[pos];
        if (c == 0) continue;
        prod[pos] = 0;
        for (unsigned t = 0; t < k_; ++t)
            prod[pos - k_ + t] = csub(prod[pos - k_ + t], cmul(c, modulus_[t]));
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i) r += prod[i] * static_cast<std::uint32_t>(cpow_[i]);
    return r;
}

std::uint32_t Field::pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    if (!xor_add_) {
        neg_table_.resize(q_);
        for (std::uint64_t a = 0; a < q_; ++a) {
            std::uint32_t r = 0;
            for (unsigned i = 0; i < k_; ++i)
                r += cneg(digit(static_cast<std::uint32_t>(a), i)) *
                     static_cast<std::uint32_t>(cpow_[i]);
            neg_table_[a] = r;
        }
        if (q_ <= kAddTableMax) {
            add_table_.resize(q_ * q_);
            for (std::uint64_t a = 0; a < q_; ++a)
                for (std::uint64_t b = 0; b < q_; ++b)
                    add_table_[a * q_ + b] = add_slow(static_cast<std::uint32_t>(a),
                                                      static_cast<std::uint32_t>(b));
        }
    }
    if (q_ > kLogTableMax) return;
    // first generator of the multiplicative group, in index order
    const std::uint64_t m = q_ - 1;
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint64_t ord = 1;
        std::uint32_t x = g;
        while (x != 1 && ord <= m) {
            x = mul_slow(x, g);
            ++ord;
        }
        if (x == 1 && ord == m) {
            exp_.resize(m);
            log_.assign(q_, 0);
            std::uint32_t cur = 1;
            for (std::uint64_t i = 0; i < m; ++i) {
                exp_[i] = cur;
                log_[cur] = static_cast<std::uint32_t>(i);
                cur = mul_slow(cur, g);
            }
            return;
        }
    }
    throw std::logic_error("no multiplicative generator found (modulus not irreducible?)");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (xor_add_) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::uint64_t>(a) * q_ + b];
    return add_slow(a, b);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::neg(std::uint32_t a) const {
    if (xor_add_) return a;
    return neg_table_[a];
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        const std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        const std::uint64_t m = q_ - 1;
        return exp_[s >= m ? s - m : s];
    }
    return mul_slow(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!exp_.empty()) {
        const std::uint64_t m = q_ - 1;
        return exp_[(m - log_[a]) % m];
    }
    return pow_slow(a, q_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("negative power of zero");
    }
    const std::uint64_t m = q_ - 1;
    const std::uint64_t r = static_cast<std::uint64_t>(((e % static_cast<long long>(m)) +
                                                        static_cast<long long>(m)) %
                                                       static_cast<long long>(m));
    if (!exp_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * r % m];
    return pow_slow(a, r);
}

std::uint32_t Field::coeff(std::uint32_t a, unsigned i) const {
    if (i >= k_) throw std::out_of_range("coefficient index");
    return digit(a, i);
}

std::uint32_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > k_) throw std::invalid_argument("too many coefficients");
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= cbase_) throw std::invalid_argument("coefficient out of range");
        r += c[i] * static_cast<std::uint32_t>(cpow_[i]);
    }
    return r;
}

std::uint32_t Field::embed(std::uint32_t base_element) const {
    if (!base_) throw std::invalid_argument("embed: not a tower field");
    if (base_element >= cbase_) throw std::invalid_argument("embed: index out of range");
    return base_element;  // constant polynomial
}

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    if (p_ != other.p_ || k_ != other.k_ || q_ != other.q_ || modulus_ != other.modulus_)
        return false;
    if (static_cast<bool>(base_) != static_cast<bool>(other.base_)) return false;
    return !base_ || base_->same_as(*other.base_);
}

std::string Field::notation() const {
    if (!base_) return std::to_string(p_) + "^" + std::to_string(k_);
    return base_->notation() + ":" + std::to_string(k_);
}

std::string Field::modulus_string() const {
    std::string s;
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
    }
    return s;
}

FieldPtr make_field(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return make_field(p, 1, {0, 1});
    FieldPtr prime = make_field(p, 1);
    return make_field(p, k, find_irreducible(prime, k));
}

FieldPtr make_field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus.size() != k + 1 || modulus[k] != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    for (std::uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (k > 1) {
        FieldPtr prime = make_field(p, 1);
        if (!is_irreducible(*prime, modulus))
            throw std::invalid_argument("modulus is reducible");
    }
    return std::make_shared<Field>(Field::ctor_key{}, p, k, nullptr, std::move(modulus));
}

FieldPtr extend_field(const FieldPtr& base, unsigned m) {
    if (!base) throw std::invalid_argument("null base field");
    if (m < 1) throw std::invalid_argument("tower degree must be >= 1");
    return extend_field(base, m, find_irreducible(base, m));
}

FieldPtr extend_field(const FieldPtr& base, unsigned m, std::vector<std::uint32_t> modulus) {
    if (!base) throw std::invalid_argument("null base field");
    if (m < 1) throw std::invalid_argument("tower degree must be >= 1");
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (std::uint32_t c : modulus)
        if (c >= base->order()) throw std::invalid_argument("modulus coefficient out of range");
    if (m > 1 && !is_irreducible(*base, modulus))
        throw std::invalid_argument("modulus is reducible");
    return std::make_shared<Field>(Field::ctor_key{}, base->characteristic(), m, base,
                                   std::move(modulus));
}

std::vector<std::uint32_t> find_irreducible(const FieldPtr& field, unsigned d) {
    if (!field) throw std::invalid_argument("null field");
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    const std::uint64_t q = field->order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> f = monic_from_index(q, d, idx);
        if (is_irreducible(*field, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // cannot happen
}

FieldPtr parse_field_notation(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    const auto caret = parts[0].find('^');
    if (caret == std::string::npos)
        throw std::invalid_argument("bad field notation: " + s);
    std::uint64_t p = 0;
    unsigned long k = 0;
    try {
        p = std::stoull(parts[0].substr(0, caret));
        k = std::stoul(parts[0].substr(caret + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field notation: " + s);
    }
    FieldPtr f = make_field(p, static_cast<unsigned>(k));
    for (std::size_t i = 1; i < parts.size(); ++i) {
        unsigned long m = 0;
        try {
            m = std::stoul(parts[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field notation: " + s);
        }
        f = extend_field(f, static_cast<unsigned>(m));
    }
    return f;
}

Element::Element(FieldPtr field, std::uint32_t index) : field_(std::move(field)), index_(index) {
    if (!field_) throw std::invalid_argument("null field");
    if (index_ >= field_->order()) throw std::invalid_argument("element index out of range");
}

namespace {
const Field& common_field(const Element& a, const Element& b) {
    if (!a.field()->same_as(*b.field()))
        throw std::invalid_argument("operands belong to different fields");
    return *a.field();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).add(a.index(), b.index())};
}
Element operator-(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).sub(a.index(), b.index())};
}
Element operator*(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).mul(a.index(), b.index())};
}
Element operator/(const Element& a, const Element& b) {
    const Field& f = common_field(a, b);
    return {a.field(), f.mul(a.index(), f.inv(b.index()))};
}
Element Element::operator-() const { return {field_, field_->neg(index_)}; }
bool operator==(const Element& a, const Element& b) {
    return a.field()->same_as(*b.field()) && a.index() == b.index();
}

}  // namespace wenum
