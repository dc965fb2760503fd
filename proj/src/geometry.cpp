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

#include "wenum/geometry.hpp"

#include <algorithm>

namespace wenum {

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& supp, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - supp.size());
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s < supp.size() && supp[s] == i)
            ++s;
        else
            out.push_back(i);
    }
    return out;
}

SupportReport fail(SupportReport rep, long witness, std::string detail) {
    rep.pass = false;
    rep.witness = witness;
    rep.detail = std::move(detail);
    return rep;
}

// membership equality plus the per-family subspace structure of the complement
SupportReport check_handle_geometry(const LinearCode& code, const SubspaceHandle& handle,
                                    const std::optional<FamilyKind>& family) {
    const std::uint64_t q = code.field()->order();
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();

    SupportReport rep;
    rep.r = handle.r;

    const auto [supp, wt] = subcode_support(code, handle);
    rep.weight = wt;
    rep.complement = complement_of(supp, n);
    rep.full_support = rep.complement.empty();

    const ProjectiveSystem sys = projective_system(code);
    const MatrixGF sub = subcode_to_subspace(code, handle);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
        if (point_in_subspace(sub, sys.points[i])) members.push_back(i);

    if (members != rep.complement) {
        std::vector<std::size_t> diff;
        std::set_symmetric_difference(members.begin(), members.end(), rep.complement.begin(),
                                      rep.complement.end(), std::back_inserter(diff));
        return fail(std::move(rep), diff.empty() ? -1 : static_cast<long>(diff[0]),
                    "support complement differs from the subspace point set");
    }

    if (family == FamilyKind::simplex) {
        const std::size_t expected =
            static_cast<std::size_t>((pow_u64(q, k - handle.r) - 1) / (q - 1));
        if (rep.complement.size() != expected)
            return fail(std::move(rep), -1,
                        "projective complement has the wrong number of points");
    } else if (family == FamilyKind::rm1) {
        if (!rep.full_support) {
            const std::size_t expected = pow_u64(q, k - 1 - handle.r);
            if (rep.complement.size() != expected)
                return fail(std::move(rep), -1,
                            "affine complement has the wrong number of points");
            const Field& f = *code.field();
            for (std::size_t i : rep.complement)
                if (sys.points[i][0] != 1)
                    return fail(std::move(rep), static_cast<long>(i),
                                "complement point lies in the deleted hyperplane");
            // differences of affine points must span a space of dim k-1-r
            MatrixGF diffs(code.field(), rep.complement.size(), k);
            const std::vector<std::uint32_t>& p0 = sys.points[rep.complement[0]];
            for (std::size_t t = 0; t < rep.complement.size(); ++t)
                for (std::size_t j = 0; j < k; ++j)
                    diffs.set(t, j, f.sub(sys.points[rep.complement[t]][j], p0[j]));
            if (rank(diffs) != k - 1 - handle.r)
                return fail(std::move(rep), -1,
                            "affine complement does not span a codimension-" +
                                std::to_string(handle.r) + " subspace");
        }
    }

    rep.pass = true;
    rep.detail = "ok";
    return rep;
}

}  // namespace

ProjectiveSystem projective_system(const LinearCode& code) {
    if (!code.nondegenerate())
        throw std::invalid_argument("projective system needs a nondegenerate code");
    const Field& f = *code.field();
    ProjectiveSystem sys;
    sys.field = code.field();
    sys.k = code.dimension();
    sys.points.reserve(code.length());
    for (std::size_t j = 0; j < code.length(); ++j) {
        std::vector<std::uint32_t> p = code.generator().col(j);
        std::size_t first = 0;
        while (p[first] == 0) ++first;
        const std::uint32_t scale = f.inv(p[first]);
        for (std::uint32_t& x : p) x = f.mul(scale, x);
        sys.points.push_back(std::move(p));
    }
    return sys;
}

MatrixGF subcode_to_subspace(const LinearCode& code, const SubspaceHandle& handle) {
    if (handle.basis.cols() != code.dimension())
        throw std::invalid_argument("handle dimension mismatch");
    return nullspace(handle.basis);
}

bool point_in_subspace(const MatrixGF& basis, const std::vector<std::uint32_t>& point) {
    MatrixGF stacked = basis.stacked(MatrixGF::from_rows(basis.field(), {point}));
    return rank(stacked) == basis.rows();
}

SupportReport verify_support_complement(const LinearCode& code, const SubspaceHandle& handle,
                                        std::optional<FamilyKind> family) {
    return check_handle_geometry(code, handle, family);
}

SupportReport verify_extension_word_support(const LinearCode& code, unsigned m,
                                            const std::vector<std::uint32_t>& word,
                                            std::optional<FamilyKind> family) {
    const std::uint64_t q = code.field()->order();
    const std::size_t k = code.dimension();
    const MatrixGF rows = coordinate_rows(code, m, word);

    // the rows span a subcode with the same support as the word
    std::vector<std::size_t> word_supp = support(word);
    MatrixGF messages(code.field(), m, k);
    for (unsigned j = 0; j < m; ++j) {
        const std::vector<std::uint32_t> msg = message_of(code, rows.row(j));
        for (std::size_t c = 0; c < k; ++c) messages.set(j, c, msg[c]);
    }
    const RrefResult rr = rref(messages);
    MatrixGF basis(code.field(), rr.rank, k);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t c = 0; c < k; ++c) basis.set(i, c, rr.matrix.at(i, c));
    const SubspaceHandle handle{rr.rank, std::move(basis), rr.pivots};

    const auto [sub_supp, sub_wt] = subcode_support(code, handle);
    (void)sub_wt;
    SupportReport rep = check_handle_geometry(code, handle, family);
    rep.weight = weight(word);
    if (sub_supp != word_supp) {
        std::vector<std::size_t> diff;
        std::set_symmetric_difference(sub_supp.begin(), sub_supp.end(), word_supp.begin(),
                                      word_supp.end(), std::back_inserter(diff));
        return fail(std::move(rep), diff.empty() ? -1 : static_cast<long>(diff[0]),
                    "word support differs from the spanned subcode support");
    }
    if (!rep.pass) return rep;

    // at the codimension-m extension weight the expansion must use all m
    // dimensions, so the complement checks above ran with r = m
    if (family == FamilyKind::simplex && m <= k) {
        const std::size_t full_weight =
            static_cast<std::size_t>((pow_u64(q, k) - pow_u64(q, k - m)) / (q - 1));
        if (weight(word) == full_weight && handle.r != m)
            return fail(std::move(rep), -1, "expected a subcode of dimension m");
    } else if (family == FamilyKind::rm1 && m + 1 <= k) {
        const std::size_t full_weight = pow_u64(q, k - 1) - pow_u64(q, k - 1 - m);
        if (weight(word) == full_weight && handle.r != m)
            return fail(std::move(rep), -1, "expected a subcode of dimension m");
    }

    return rep;
}

}  // namespace wenum
