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

#include "wenum/enumerators.hpp"

#include <sstream>

namespace wenum {

namespace {

BigInt pow_big(std::uint64_t base, std::size_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

void check_ewe(const EWETable& e) {
    if (e.polys.size() != e.n + 1) throw table_error("EWE table has wrong length");
    if (!(e.polys[0] == TPoly(1))) throw table_error("A_0(T) must be exactly 1");
    for (std::size_t w = 0; w <= e.n; ++w) {
        if (e.polys[w].degree() > static_cast<int>(e.k))
            throw table_error("A_" + std::to_string(w) + "(T) has degree above k");
        if (w >= 1 && e.polys[w].eval(1) != 0)
            throw table_error("A_" + std::to_string(w) + "(T) is not divisible by T-1");
    }
}

}  // namespace

GWETable gwe_compute(const LinearCode& code, std::uint64_t budget) {
    GWETable g;
    g.n = code.length();
    g.k = code.dimension();
    g.q = code.field()->order();
    g.rows.reserve(g.k + 1);
    for (std::size_t r = 0; r <= g.k; ++r)
        g.rows.push_back(generalized_weight_distribution(code, r, budget));
    return g;
}

EWETable ewe_from_gwe(const GWETable& g) {
    EWETable e;
    e.n = g.n;
    e.k = g.k;
    e.q = g.q;
    e.polys.assign(g.n + 1, TPoly());
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
        const TPoly factor = falling_product(static_cast<unsigned>(r), g.q);
        for (std::size_t w = 0; w <= g.n; ++w) {
            const BigInt& c = g.rows[r].counts[w];
            if (c != 0) e.polys[w] = e.polys[w] + factor.scaled(c);
        }
    }
    return e;
}

GWETable gwe_from_ewe(const EWETable& e) {
    check_ewe(e);
    GWETable g;
    g.n = e.n;
    g.k = e.k;
    g.q = e.q;
    g.rows.assign(e.k + 1, WeightVector{std::vector<BigInt>(e.n + 1, 0)});
    // A_w(q^r) = Σ_{i<=r} counts_i(w) ∏_{j<i}(q^r − q^j); solve upward in r
    for (std::size_t w = 0; w <= e.n; ++w) {
        for (std::size_t r = 0; r <= e.k; ++r) {
            const BigInt t = pow_big(e.q, r);
            BigInt rest = e.polys[w].eval(t);
            BigInt prod = 1;
            for (std::size_t i = 0; i < r; ++i) {
                rest -= g.rows[i].counts[w] * prod;
                prod *= t - pow_big(e.q, i);
            }
            if (prod == 0) throw table_error("degenerate solve node");
            BigInt quot, rem;
            mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), rest.get_mpz_t(),
                        prod.get_mpz_t());
            if (rem != 0)
                throw table_error("non-integral subcode count at w=" + std::to_string(w) +
                                  ", r=" + std::to_string(r));
            if (quot < 0)
                throw table_error("negative subcode count at w=" + std::to_string(w) +
                                  ", r=" + std::to_string(r));
            g.rows[r].counts[w] = quot;
        }
    }
    return g;
}

EWETable ewe_by_interpolation(const LinearCode& code, std::uint64_t budget, unsigned workers) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint64_t q = code.field()->order();
    // nodes T = q^m, m = 0..k; m = 0 is the one-word field-of-size-1 case
    std::vector<WeightVector> dists;
    dists.reserve(k + 1);
    WeightVector trivial;
    trivial.counts.assign(n + 1, 0);
    trivial.counts[0] = 1;
    dists.push_back(std::move(trivial));
    for (unsigned m = 1; m <= k; ++m)
        dists.push_back(weight_distribution(extend_code(code, m), budget, workers));

    EWETable e;
    e.n = n;
    e.k = k;
    e.q = q;
    e.polys.reserve(n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
        std::vector<std::pair<BigInt, BigInt>> nodes;
        nodes.reserve(k + 1);
        for (std::size_t m = 0; m <= k; ++m)
            nodes.emplace_back(pow_big(q, m), dists[m].counts[w]);
        e.polys.push_back(lagrange_interpolate(nodes));
    }
    return e;
}

WeightVector ewe_eval(const EWETable& e, unsigned m) {
    const BigInt t = pow_big(e.q, m);
    WeightVector wv;
    wv.counts.reserve(e.n + 1);
    for (const TPoly& p : e.polys) wv.counts.push_back(p.eval(t));
    return wv;
}

nlohmann::ordered_json to_json(const WeightVector& wv) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BigInt& c : wv.counts) arr.push_back(c.get_str());
    return arr;
}

nlohmann::ordered_json to_json(const GWETable& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["k"] = g.k;
    j["q"] = g.q;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const WeightVector& wv : g.rows) rows.push_back(to_json(wv));
    j["A"] = std::move(rows);  // keyed by r
    return j;
}

nlohmann::ordered_json to_json(const EWETable& e) {
    nlohmann::ordered_json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["q"] = e.q;
    nlohmann::ordered_json polys = nlohmann::ordered_json::array();
    for (const TPoly& p : e.polys) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const std::string& s : p.coeff_strings()) coeffs.push_back(s);
        polys.push_back(std::move(coeffs));
    }
    j["A"] = std::move(polys);  // keyed by w, coefficients ascending
    return j;
}

std::string format_distribution(const WeightVector& wv) {
    std::ostringstream out;
    for (std::size_t w = 0; w < wv.counts.size(); ++w)
        if (wv.counts[w] != 0) out << w << ": " << wv.counts[w].get_str() << "\n";
    return out.str();
}

std::string format_table(const GWETable& g) {
    std::ostringstream out;
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
        out << "r=" << r << ":";
        bool any = false;
        for (std::size_t w = 0; w <= g.n; ++w)
            if (g.rows[r].counts[w] != 0) {
                out << " " << w << ":" << g.rows[r].counts[w].get_str();
                any = true;
            }
        if (!any) out << " -";
        out << "\n";
    }
    return out.str();
}

std::string format_table(const EWETable& e) {
    std::ostringstream out;
    for (std::size_t w = 0; w <= e.n; ++w)
        out << "A_" << w << "(T) = " << format_factored(e.polys[w], e.q) << "\n";
    return out.str();
}

}  // namespace wenum
