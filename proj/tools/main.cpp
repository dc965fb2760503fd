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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wenum/geometry.hpp"

using namespace wenum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("WENUM_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("WENUM_BUDGET is not a number");
        }
    }
    return kDefaultBudget;
}

struct Options {
    std::string input;
    std::string family;
    std::uint64_t q = 0;
    unsigned s = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    bool json = false;
    std::string route;
    std::string emit = "code";
    std::string r_spec = "all";
    unsigned m = 0;
    bool with_gwe = false;
    std::string with_ewe;
};

void add_source_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--input", o.input, "generator matrix file");
    cmd->add_option("--family", o.family, "simplex or rm1")
        ->check(CLI::IsMember({"simplex", "rm1"}));
    cmd->add_option("--q", o.q, "field order (prime power)");
    cmd->add_option("--s", o.s, "family parameter s (code dimension)");
}

void add_common_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--budget", o.budget, "enumeration budget in words/subcodes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "machine-readable output");
}

FieldPtr field_of_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw std::invalid_argument("q must be a prime power");
    return make_field(p, k);
}

std::optional<FamilyKind> family_kind(const Options& o) {
    if (o.family == "simplex") return FamilyKind::simplex;
    if (o.family == "rm1") return FamilyKind::rm1;
    return std::nullopt;
}

LinearCode resolve_code(const Options& o) {
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw std::invalid_argument("cannot open " + o.input);
        MatrixGF g = read_matrix(in);
        FieldPtr f = g.field();
        return {std::move(f), std::move(g)};
    }
    const auto kind = family_kind(o);
    if (!kind) throw std::invalid_argument("need --input or --family with --q and --s");
    if (o.q < 2 || o.s < 1) throw std::invalid_argument("--family needs --q and --s");
    const FieldPtr f = field_of_order(o.q);
    return *kind == FamilyKind::simplex ? simplex_code(f, o.s) : rm1_code(f, o.s);
}

EWETable ewe_by_route(const Options& o, const LinearCode& code, const std::string& route) {
    if (route == "convert") return ewe_from_gwe(gwe_compute(code, o.budget));
    if (route == "interpolate") return ewe_by_interpolation(code, o.budget, o.workers);
    if (route == "formula") {
        const auto kind = family_kind(o);
        if (!kind)
            throw std::invalid_argument("--route formula needs a --family code source");
        return *kind == FamilyKind::simplex ? simplex_ewe_formula(o.q, o.s)
                                            : rm1_ewe_formula(o.q, o.s);
    }
    throw std::invalid_argument("unknown route " + route);
}

GWETable gwe_by_route(const Options& o, const LinearCode& code, const std::string& route) {
    if (route == "enumerate") return gwe_compute(code, o.budget);
    if (route == "formula") {
        const auto kind = family_kind(o);
        if (!kind)
            throw std::invalid_argument("--route formula needs a --family code source");
        return *kind == FamilyKind::simplex ? simplex_gwe_formula(o.q, o.s)
                                            : rm1_gwe_formula(o.q, o.s);
    }
    throw std::invalid_argument("unknown route " + route);
}

int cmd_enumerate(const Options& o) {
    LinearCode code = resolve_code(o);
    if (o.m > 0) code = extend_code(code, o.m);
    const WeightVector wd = weight_distribution(code, o.budget, o.workers);
    nlohmann::ordered_json j;
    if (o.json) {
        j["kind"] = "enumeration";
        j["field"] = code.field()->notation();
        j["n"] = code.length();
        j["k"] = code.dimension();
        j["counts"] = to_json(wd);
    } else {
        std::cout << format_distribution(wd);
    }
    if (o.with_gwe) {
        const GWETable g = gwe_compute(code, o.budget);
        if (o.json)
            j["gwe"] = to_json(g);
        else
            std::cout << "\n" << format_table(g);
    }
    if (!o.with_ewe.empty()) {
        const EWETable e = ewe_by_route(o, code, o.with_ewe);
        if (o.json)
            j["ewe"] = to_json(e);
        else
            std::cout << "\n" << format_table(e);
    }
    if (o.json) std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_ewe(const Options& o) {
    const LinearCode code = resolve_code(o);
    const EWETable e = ewe_by_route(o, code, o.route.empty() ? "convert" : o.route);
    if (o.json)
        std::cout << to_json(e).dump() << "\n";
    else
        std::cout << format_table(e);
    return kExitOk;
}

int cmd_gwe(const Options& o) {
    const LinearCode code = resolve_code(o);
    const GWETable g = gwe_by_route(o, code, o.route.empty() ? "enumerate" : o.route);
    if (o.json)
        std::cout << to_json(g).dump() << "\n";
    else
        std::cout << format_table(g);
    return kExitOk;
}

int cmd_family(const Options& o) {
    if (!family_kind(o)) throw std::invalid_argument("family subcommand needs a family name");
    const LinearCode code = resolve_code(o);
    if (o.emit == "code") {
        if (o.json) {
            nlohmann::ordered_json j;
            j["kind"] = "code";
            j["field"] = code.field()->notation();
            j["modulus"] = code.field()->modulus_string();
            j["n"] = code.length();
            j["k"] = code.dimension();
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < code.dimension(); ++i)
                rows.push_back(code.generator().row(i));
            j["G"] = std::move(rows);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << write_matrix(code.generator());
        }
        return kExitOk;
    }
    if (o.emit == "gwe") {
        Options oo = o;
        oo.route = "formula";
        return cmd_gwe(oo);
    }
    if (o.emit == "ewe") {
        Options oo = o;
        oo.route = "formula";
        return cmd_ewe(oo);
    }
    throw std::invalid_argument("unknown --emit value " + o.emit);
}

std::vector<std::size_t> r_values(const Options& o, std::size_t k) {
    if (o.r_spec == "all") {
        std::vector<std::size_t> all(k + 1);
        for (std::size_t r = 0; r <= k; ++r) all[r] = r;
        return all;
    }
    const unsigned long r = std::stoul(o.r_spec);
    if (r > k) throw std::invalid_argument("--r exceeds the code dimension");
    return {r};
}

int cmd_verify_supports(const Options& o) {
    const LinearCode code = resolve_code(o);
    const auto kind = family_kind(o);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (std::size_t r : r_values(o, code.dimension())) {
        std::size_t index = 0;
        for_each_subspace(code.field(), code.dimension(), r, [&](const SubspaceHandle& h) {
            const SupportReport rep = verify_support_complement(code, h, kind);
            if (!rep.pass) ++failures;
            if (o.json) {
                nlohmann::ordered_json row;
                row["r"] = r;
                row["index"] = index;
                row["pass"] = rep.pass;
                row["weight"] = rep.weight;
                row["complement"] = rep.complement.size();
                row["full_support"] = rep.full_support;
                if (!rep.pass) row["detail"] = rep.detail;
                rows.push_back(std::move(row));
            } else {
                std::cout << "r=" << r << " #" << index << " "
                          << (rep.pass ? "pass" : "FAIL") << " weight=" << rep.weight
                          << " complement=" << rep.complement.size()
                          << (rep.full_support ? " full-support" : "")
                          << (rep.pass ? "" : " " + rep.detail) << "\n";
            }
            ++index;
        });
    }
    if (o.json) {
        nlohmann::ordered_json j;
        j["kind"] = "verify-supports";
        j["pass"] = failures == 0;
        j["handles"] = std::move(rows);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (failures == 0 ? "all handles pass" : "FAILURES: " + std::to_string(failures))
                  << "\n";
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

int cmd_verify_extension(const Options& o) {
    const LinearCode code = resolve_code(o);
    const auto kind = family_kind(o);
    if (o.m < 1) throw std::invalid_argument("verify extension needs --m >= 1");
    const LinearCode ext = extend_code(code, o.m);
    {
        // word enumeration budget, same accounting as weight_distribution
        BigInt words;
        mpz_ui_pow_ui(words.get_mpz_t(), ext.field()->order(), ext.dimension());
        if (words > o.budget)
            throw budget_error("verify extension: " + words.get_str() +
                               " words exceed the budget of " + std::to_string(o.budget));
    }
    std::size_t failures = 0, total = 0;
    std::vector<std::size_t> weight_histogram(code.length() + 1, 0);
    std::vector<std::uint32_t> msg(ext.dimension(), 0);
    bool more = true;
    while (more) {
        const std::vector<std::uint32_t> word = row_times_matrix(msg, ext.generator());
        const SupportReport rep = verify_extension_word_support(code, o.m, word, kind);
        ++total;
        weight_histogram[rep.weight] += 1;
        if (!rep.pass) {
            ++failures;
            if (!o.json)
                std::cout << "FAIL weight=" << rep.weight << " " << rep.detail << "\n";
        }
        more = false;
        for (std::size_t i = msg.size(); i-- > 0;) {
            if (msg[i] + 1 < ext.field()->order()) {
                ++msg[i];
                more = true;
                break;
            }
            msg[i] = 0;
        }
    }
    if (o.json) {
        nlohmann::ordered_json j;
        j["kind"] = "verify-extension";
        j["m"] = o.m;
        j["words"] = total;
        j["pass"] = failures == 0;
        j["weights"] = weight_histogram;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << total << " words checked, "
                  << (failures == 0 ? "all pass" : std::to_string(failures) + " FAILURES")
                  << "\n";
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

int cmd_verify_all(const Options& o) {
    const LinearCode code = resolve_code(o);
    const auto kind = family_kind(o);
    struct Check {
        std::string name;
        std::string status;  // pass / FAIL / skip
    };
    std::vector<Check> checks;
    const auto record = [&](const std::string& name, bool ok) {
        checks.push_back({name, ok ? "pass" : "FAIL"});
    };

    const GWETable computed = gwe_compute(code, o.budget);
    const EWETable converted = ewe_from_gwe(computed);
    const EWETable interpolated = ewe_by_interpolation(code, o.budget, o.workers);
    record("ewe convert = ewe interpolate", converted == interpolated);
    record("gwe round trip through ewe", gwe_from_ewe(converted) == computed);

    if (kind) {
        const GWETable formula_g = *kind == FamilyKind::simplex
                                       ? simplex_gwe_formula(o.q, o.s)
                                       : rm1_gwe_formula(o.q, o.s);
        const EWETable formula_e = *kind == FamilyKind::simplex
                                       ? simplex_ewe_formula(o.q, o.s)
                                       : rm1_ewe_formula(o.q, o.s);
        record("gwe formula = gwe enumerate", formula_g == computed);
        record("ewe formula = ewe convert", formula_e == converted);
    }

    bool supports_ok = true;
    for (std::size_t r = 0; r <= code.dimension(); ++r)
        for_each_subspace(code.field(), code.dimension(), r, [&](const SubspaceHandle& h) {
            if (!verify_support_complement(code, h, kind).pass) supports_ok = false;
        });
    record("support complements (all r, all handles)", supports_ok);

    // prediction at the first node outside the interpolation set
    const unsigned mpred = static_cast<unsigned>(code.dimension()) + 1;
    BigInt words;
    mpz_ui_pow_ui(words.get_mpz_t(), code.field()->order(),
                  static_cast<unsigned long>(mpred) * code.dimension());
    if (words > o.budget) {
        checks.push_back({"prediction at m=k+1", "skip (budget)"});
    } else {
        const WeightVector predicted = ewe_eval(converted, mpred);
        const WeightVector actual =
            weight_distribution(extend_code(code, mpred), o.budget, o.workers);
        BigInt expect_total;
        mpz_ui_pow_ui(expect_total.get_mpz_t(), code.field()->order(),
                      static_cast<unsigned long>(mpred) * code.dimension());
        record("prediction at m=k+1",
               predicted == actual && predicted.total() == expect_total);
    }

    std::size_t failures = 0;
    for (const Check& c : checks)
        if (c.status == "FAIL") ++failures;
    if (o.json) {
        nlohmann::ordered_json j;
        j["kind"] = "verify-all";
        j["pass"] = failures == 0;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Check& c : checks) arr.push_back({{"name", c.name}, {"status", c.status}});
        j["checks"] = std::move(arr);
        std::cout << j.dump() << "\n";
    } else {
        for (const Check& c : checks) std::cout << c.name << ": " << c.status << "\n";
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight enumerators of linear codes over finite fields"};
    app.require_subcommand(1);

    Options o;
    try {
        o.budget = default_budget();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* enumerate = app.add_subcommand("enumerate", "weight distribution of a code");
    add_source_flags(enumerate, o);
    add_common_flags(enumerate, o);
    enumerate->add_option("--m", o.m, "extend the code to GF(q^m) first");
    enumerate->add_flag("--gwe", o.with_gwe, "also print the generalized tables");
    enumerate->add_option("--ewe", o.with_ewe, "also print the extended table by this route")
        ->check(CLI::IsMember({"formula", "convert", "interpolate"}));

    CLI::App* ewe = app.add_subcommand("ewe", "extended weight enumerator");
    add_source_flags(ewe, o);
    add_common_flags(ewe, o);
    ewe->add_option("--route", o.route, "formula | convert | interpolate")
        ->check(CLI::IsMember({"formula", "convert", "interpolate"}));

    CLI::App* gwe = app.add_subcommand("gwe", "generalized weight enumerators");
    add_source_flags(gwe, o);
    add_common_flags(gwe, o);
    gwe->add_option("--route", o.route, "formula | enumerate")
        ->check(CLI::IsMember({"formula", "enumerate"}));

    CLI::App* family = app.add_subcommand("family", "construct a family code");
    family->add_option("name", o.family, "simplex or rm1")
        ->required()
        ->check(CLI::IsMember({"simplex", "rm1"}));
    family->add_option("--q", o.q, "field order (prime power)")->required();
    family->add_option("--s", o.s, "family parameter s")->required();
    family->add_option("--emit", o.emit, "code | gwe | ewe")
        ->check(CLI::IsMember({"code", "gwe", "ewe"}));
    add_common_flags(family, o);

    CLI::App* verify = app.add_subcommand("verify", "check the support-structure results");
    verify->require_subcommand(1);
    CLI::App* supports = verify->add_subcommand("supports", "subcode support complements");
    add_source_flags(supports, o);
    add_common_flags(supports, o);
    supports->add_option("--r", o.r_spec, "subcode dimension or 'all'");
    CLI::App* extension = verify->add_subcommand("extension", "extension word supports");
    add_source_flags(extension, o);
    add_common_flags(extension, o);
    extension->add_option("--m", o.m, "extension degree")->required();
    CLI::App* all = verify->add_subcommand("all", "route equality, round trips, geometry");
    add_source_flags(all, o);
    add_common_flags(all, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(o);
        if (ewe->parsed()) return cmd_ewe(o);
        if (gwe->parsed()) return cmd_gwe(o);
        if (family->parsed()) return cmd_family(o);
        if (verify->parsed()) {
            if (supports->parsed()) return cmd_verify_supports(o);
            if (extension->parsed()) return cmd_verify_extension(o);
            if (all->parsed()) return cmd_verify_all(o);
        }
        throw std::invalid_argument("no subcommand");
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
