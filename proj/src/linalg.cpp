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

#include "wenum/linalg.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace wenum {

namespace {
void check_same_field(const MatrixGF& a, const MatrixGF& b) {
    if (!a.field()->same_as(*b.field()))
        throw std::invalid_argument("matrices belong to different fields");
}
}  // namespace

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("null field");
}

MatrixGF MatrixGF::from_rows(FieldPtr field,
                             const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    MatrixGF m(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void MatrixGF::set(std::size_t r, std::size_t c, std::uint32_t v) {
    if (v >= field_->order()) throw std::invalid_argument("entry out of field range");
    a_[r * cols_ + c] = v;
}

std::vector<std::uint32_t> MatrixGF::row(std::size_t r) const {
    return {a_.begin() + static_cast<long>(r * cols_),
            a_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<std::uint32_t> MatrixGF::col(std::size_t c) const {
    std::vector<std::uint32_t> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

MatrixGF MatrixGF::stacked(const MatrixGF& other) const {
    check_same_field(*this, other);
    if (cols_ != other.cols_ && other.rows_ != 0)
        throw std::invalid_argument("column count mismatch");
    MatrixGF s(field_, rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.set(i, j, at(i, j));
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.set(rows_ + i, j, other.at(i, j));
    return s;
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    const Field& f = *a.field();
    MatrixGF c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const std::uint32_t ail = a.at(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.a_[i * c.cols_ + j] = f.add(c.at(i, j), f.mul(ail, b.at(l, j)));
        }
    return c;
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
}

std::vector<std::uint32_t> row_times_matrix(const std::vector<std::uint32_t>& x,
                                            const MatrixGF& a) {
    if (x.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
    const Field& f = *a.field();
    std::vector<std::uint32_t> b(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            b[j] = f.add(b[j], f.mul(x[i], a.at(i, j)));
    }
    return b;
}

std::vector<std::uint32_t> matrix_times_col(const MatrixGF& a,
                                            const std::vector<std::uint32_t>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("dimension mismatch");
    const Field& f = *a.field();
    std::vector<std::uint32_t> y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) && x[j]) y[i] = f.add(y[i], f.mul(a.at(i, j), x[j]));
    return y;
}

RrefResult rref(const MatrixGF& a) {
    MatrixGF m = a;
    const Field& f = *a.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m.at(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) {
                const std::uint32_t t = m.at(r, j);
                m.set(r, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        const std::uint32_t piv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < cols; ++j) m.set(r, j, f.mul(piv, m.at(r, j)));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint32_t v = m.at(i, c);
            if (v == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(v, m.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const MatrixGF& a) { return rref(a).rank; }

MatrixGF nullspace(const MatrixGF& a) {
    const RrefResult rr = rref(a);
    const Field& f = *a.field();
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    MatrixGF basis(a.field(), cols - rr.rank, cols);
    std::size_t bi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        basis.set(bi, c, 1);
        for (std::size_t i = 0; i < rr.rank; ++i)
            basis.set(bi, rr.pivots[i], f.neg(rr.matrix.at(i, c)));
        ++bi;
    }
    return rref(basis).matrix;  // canonical form
}

bool operator==(const SubspaceHandle& a, const SubspaceHandle& b) {
    return a.r == b.r && a.basis == b.basis;
}

SubspaceStream::SubspaceStream(FieldPtr field, std::size_t k, std::size_t r)
    : field_(std::move(field)), k_(k), r_(r), done_(false) {
    if (!field_) throw std::invalid_argument("null field");
    if (r_ > k_) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    pivots_.resize(r_);
    for (std::size_t i = 0; i < r_; ++i) pivots_[i] = i;
    reset_cells();
}

void SubspaceStream::reset_cells() {
    free_cells_.clear();
    std::vector<bool> is_pivot(k_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = pivots_[i] + 1; j < k_; ++j)
            if (!is_pivot[j]) free_cells_.emplace_back(i, j);
    free_values_.assign(free_cells_.size(), 0);
}

SubspaceHandle SubspaceStream::make_handle() const {
    MatrixGF basis(field_, r_, k_);
    for (std::size_t i = 0; i < r_; ++i) basis.set(i, pivots_[i], 1);
    for (std::size_t t = 0; t < free_cells_.size(); ++t)
        basis.set(free_cells_[t].first, free_cells_[t].second, free_values_[t]);
    return {r_, std::move(basis), pivots_};
}

// Odometer over free values (last cell fastest), then the next pivot set in
// lexicographic order.
bool SubspaceStream::advance() {
    const std::uint32_t qmax = static_cast<std::uint32_t>(field_->order() - 1);
    for (std::size_t t = free_values_.size(); t-- > 0;) {
        if (free_values_[t] < qmax) {
            ++free_values_[t];
            return true;
        }
        free_values_[t] = 0;
    }
    // next r-combination of [0, k)
    if (r_ == 0) return false;
    std::size_t i = r_;
    while (i-- > 0) {
        if (pivots_[i] < k_ - (r_ - i)) {
            ++pivots_[i];
            for (std::size_t j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            reset_cells();
            return true;
        }
    }
    return false;
}

std::optional<SubspaceHandle> SubspaceStream::next() {
    if (done_) return std::nullopt;
    SubspaceHandle h = make_handle();
    done_ = !advance();
    return h;
}

void for_each_subspace(const FieldPtr& field, std::size_t k, std::size_t r,
                       const std::function<void(const SubspaceHandle&)>& fn) {
    SubspaceStream stream(field, k, r);
    while (auto h = stream.next()) fn(*h);
}

std::string write_matrix(const MatrixGF& a) {
    std::ostringstream out;
    out << "q= " << a.field()->notation() << " " << a.rows() << " " << a.cols() << " "
        << a.field()->modulus_string() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << " ";
            out << a.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

MatrixGF read_matrix(std::istream& in) {
    std::string tag, notation;
    std::size_t rows = 0, cols = 0;
    if (!(in >> tag) || tag != "q=") throw std::invalid_argument("matrix file: expected 'q='");
    if (!(in >> notation >> rows >> cols))
        throw std::invalid_argument("matrix file: bad header");
    FieldPtr field = parse_field_notation(notation);
    // optional modulus: next token containing ',' or a lone digit string when k=1
    std::string rest;
    std::getline(in, rest);
    std::istringstream hdr(rest);
    std::string modtok;
    if (hdr >> modtok) {
        std::vector<std::uint32_t> modulus;
        std::istringstream ms(modtok);
        std::string piece;
        while (std::getline(ms, piece, ',')) modulus.push_back(std::stoul(piece));
        if (modulus != field->modulus()) {
            // explicit non-canonical modulus: rebuild the top field level
            if (field->is_tower())
                field = extend_field(field->base(), field->degree(), modulus);
            else
                field = make_field(field->characteristic(), field->degree(), modulus);
        }
    }
    MatrixGF m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t v;
            if (!(in >> v)) throw std::invalid_argument("matrix file: not enough entries");
            if (v >= field->order())
                throw std::invalid_argument("matrix file: entry out of field range");
            m.set(i, j, static_cast<std::uint32_t>(v));
        }
    return m;
}

MatrixGF parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

}  // namespace wenum
