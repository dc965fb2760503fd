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

#include "wenum/codes.hpp"

#include <algorithm>
#include <thread>

namespace wenum {

BigInt WeightVector::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

LinearCode::LinearCode(FieldPtr field, MatrixGF generator)
    : field_(std::move(field)), gen_(std::move(generator)) {
    if (!field_) throw std::invalid_argument("null field");
    if (!gen_.field()->same_as(*field_))
        throw std::invalid_argument("generator matrix field mismatch");
    if (rank(gen_) != gen_.rows())
        throw std::invalid_argument("generator matrix is rank-deficient");
    nondegenerate_ = true;
    for (std::size_t j = 0; j < gen_.cols(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < gen_.rows(); ++i)
            if (gen_.at(i, j)) {
                nonzero = true;
                break;
            }
        if (!nonzero) {
            nondegenerate_ = false;
            break;
        }
    }
}

LinearCode code_from_matrix(FieldPtr field, MatrixGF generator) {
    return {std::move(field), std::move(generator)};
}

std::vector<std::size_t> support(const std::vector<std::uint32_t>& word) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i]) s.push_back(i);
    return s;
}

std::size_t weight(const std::vector<std::uint32_t>& word) {
    return static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [](std::uint32_t x) { return x != 0; }));
}

namespace {

BigInt pow_big(std::uint64_t base, std::size_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

// Streams all q^k codewords depth-first. Stepping the digit at `level` from
// element index a to a+1 (cyclically) adds a precomputed delta row, so the
// word is updated in place and restored after each loop.
class WordStream {
  public:
    WordStream(const LinearCode& code)
        : f_(*code.field()),
          n_(code.length()),
          k_(code.dimension()),
          q_(code.field()->order()) {
        delta_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) {
            delta_[i].resize(q_);
            const std::vector<std::uint32_t> row = code.generator().row(i);
            for (std::uint64_t a = 0; a < q_; ++a) {
                const std::uint32_t from = static_cast<std::uint32_t>(a);
                const std::uint32_t to = static_cast<std::uint32_t>((a + 1) % q_);
                const std::uint32_t d = f_.sub(to, from);
                std::vector<std::uint32_t> dr(n_);
                for (std::size_t j = 0; j < n_; ++j) dr[j] = f_.mul(d, row[j]);
                delta_[i][a] = std::move(dr);
            }
        }
    }

    // counts weights of all words with first digit in [a_lo, a_hi)
    void count_range(const LinearCode& code, std::uint32_t a_lo, std::uint32_t a_hi,
                     std::vector<std::uint64_t>& counts) const {
        if (k_ == 0) {
            counts[0] += 1;
            return;
        }
        std::vector<std::uint32_t> word(n_, 0);
        const std::vector<std::uint32_t> row0 = code.generator().row(0);
        for (std::uint32_t a = a_lo; a < a_hi; ++a) {
            for (std::size_t j = 0; j < n_; ++j) word[j] = f_.mul(a, row0[j]);
            descend(1, word, counts);
        }
    }

  private:
    void descend(std::size_t level, std::vector<std::uint32_t>& word,
                 std::vector<std::uint64_t>& counts) const {
        if (level == k_) {
            counts[weight(word)] += 1;
            return;
        }
        for (std::uint64_t a = 0; a < q_; ++a) {
            descend(level + 1, word, counts);
            const std::vector<std::uint32_t>& d = delta_[level][a];
            for (std::size_t j = 0; j < n_; ++j) word[j] = f_.add(word[j], d[j]);
        }
    }

    const Field& f_;
    std::size_t n_, k_;
    std::uint64_t q_;
    std::vector<std::vector<std::vector<std::uint32_t>>> delta_;
};

}  // namespace

WeightVector weight_distribution(const LinearCode& code, std::uint64_t budget,
                                 unsigned workers) {
    const std::uint64_t q = code.field()->order();
    const std::size_t k = code.dimension();
    if (pow_big(q, k) > budget)
        throw budget_error("weight_distribution: " + std::to_string(q) + "^" +
                           std::to_string(k) + " words exceed the budget of " +
                           std::to_string(budget));
    const WordStream stream(code);
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    const unsigned nw =
        k == 0 ? 1 : static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), q));
    if (nw <= 1) {
        stream.count_range(code, 0, k == 0 ? 0 : static_cast<std::uint32_t>(q), counts);
    } else {
        std::vector<std::vector<std::uint64_t>> parts(nw,
                                                      std::vector<std::uint64_t>(counts.size(), 0));
        std::vector<std::thread> threads;
        threads.reserve(nw);
        for (unsigned w = 0; w < nw; ++w) {
            const std::uint32_t lo = static_cast<std::uint32_t>(q * w / nw);
            const std::uint32_t hi = static_cast<std::uint32_t>(q * (w + 1) / nw);
            threads.emplace_back([&, w, lo, hi] { stream.count_range(code, lo, hi, parts[w]); });
        }
        for (auto& t : threads) t.join();
        for (const auto& part : parts)
            for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    }
    WeightVector wv;
    wv.counts.assign(counts.begin(), counts.end());
    return wv;
}

LinearCode extend_code(const LinearCode& code, unsigned m) {
    const FieldPtr ext = extend_field(code.field(), m);
    MatrixGF g(ext, code.dimension(), code.length());
    for (std::size_t i = 0; i < code.dimension(); ++i)
        for (std::size_t j = 0; j < code.length(); ++j)
            g.set(i, j, code.generator().at(i, j));  // constant-polynomial embedding
    return {ext, std::move(g)};
}

Subcode subcode_of(const LinearCode& code, SubspaceHandle handle) {
    if (handle.basis.cols() != code.dimension())
        throw std::invalid_argument("handle dimension mismatch");
    MatrixGF basis = handle.basis * code.generator();
    return {handle.r, std::move(basis), std::move(handle)};
}

std::pair<std::vector<std::size_t>, std::size_t> subcode_support(const LinearCode& code,
                                                                 const SubspaceHandle& handle) {
    if (handle.basis.cols() != code.dimension())
        throw std::invalid_argument("handle dimension mismatch");
    const MatrixGF rows = handle.basis * code.generator();
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < rows.cols(); ++j)
        for (std::size_t i = 0; i < rows.rows(); ++i)
            if (rows.at(i, j)) {
                s.push_back(j);
                break;
            }
    const std::size_t w = s.size();
    return {std::move(s), w};
}

WeightVector generalized_weight_distribution(const LinearCode& code, std::size_t r,
                                             std::uint64_t budget) {
    if (r > code.dimension())
        throw std::invalid_argument("subcode dimension exceeds code dimension");
    const BigInt total = gaussian_binomial(static_cast<long>(code.dimension()),
                                           static_cast<long>(r), code.field()->order());
    if (total > budget)
        throw budget_error("generalized_weight_distribution: " + total.get_str() +
                           " subcodes exceed the budget of " + std::to_string(budget));
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    for_each_subspace(code.field(), code.dimension(), r, [&](const SubspaceHandle& h) {
        counts[subcode_support(code, h).second] += 1;
    });
    WeightVector wv;
    wv.counts.assign(counts.begin(), counts.end());
    return wv;
}

MatrixGF coordinate_rows(const LinearCode& base_code, unsigned m,
                         const std::vector<std::uint32_t>& word) {
    if (word.size() != base_code.length()) throw std::invalid_argument("word length mismatch");
    const FieldPtr ext = extend_field(base_code.field(), m);
    MatrixGF rows(base_code.field(), m, base_code.length());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= ext->order()) throw std::invalid_argument("word entry out of range");
        for (unsigned j = 0; j < m; ++j) rows.set(j, i, ext->coeff(word[i], j));
    }
    return rows;
}

std::vector<std::uint32_t> message_of(const LinearCode& code,
                                      const std::vector<std::uint32_t>& word) {
    if (word.size() != code.length()) throw std::invalid_argument("word length mismatch");
    const std::size_t k = code.dimension();
    // solve Gᵀ xᵀ = wordᵀ; rank(G) = k makes the solution unique if it exists
    MatrixGF aug(code.field(), code.length(), k + 1);
    for (std::size_t i = 0; i < code.length(); ++i) {
        for (std::size_t j = 0; j < k; ++j) aug.set(i, j, code.generator().at(j, i));
        aug.set(i, k, word[i]);
    }
    const RrefResult rr = rref(aug);
    std::vector<std::uint32_t> x(k, 0);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == k) throw std::invalid_argument("word is not in the code");
        x[rr.pivots[i]] = rr.matrix.at(i, k);
    }
    return x;
}

}  // namespace wenum
