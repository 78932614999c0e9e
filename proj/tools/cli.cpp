/*
 * Copyright 2026 The skewcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

#include "skewcodes/bounds.hpp"
#include "skewcodes/codes.hpp"
#include "skewcodes/error.hpp"
#include "skewcodes/text.hpp"

namespace skewcodes::cli {

using nlohmann::json;

namespace {

constexpr const char* kSyntaxHelp = R"HELP(Syntax:
  Elements      integers (mod p), w, w^k, -w^k, or [c0,c1,...] over GF(p).
                w is the class of x modulo the field polynomial (prime fields:
                the smallest primitive root).
  Polynomials   ascending coefficient list [a0,a1,...,an] or an expression in
                X, e.g. "X^4 + X^3 + w*X^2 + 1", "(X-5)(X-3)". Products are skew.
  Matrices      [[a,b],[c,d]], or I<n> for the identity.
  Exit codes    0 ok, 2 usage, 3 budget exceeded, 4 precondition failed.
  SKEWCODES_BUDGET overrides the default enumeration budget (2^24).)HELP";

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q) {
    if (q < 2) fail("q must be a prime power >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t s = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++s;
    }
    if (r != 1) fail("q = " + std::to_string(q) + " is not a prime power");
    return {p, s};
}

const std::string& param(const JobConfig& c, const std::string& key) {
    auto it = c.params.find(key);
    if (it == c.params.end() || it->second.empty()) fail("missing required option --" + key);
    return it->second;
}

std::optional<std::string> opt_param(const JobConfig& c, const std::string& key) {
    auto it = c.params.find(key);
    if (it == c.params.end() || it->second.empty()) return std::nullopt;
    return it->second;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail("--" + what + " expects an integer, got '" + s + "'");
    }
}

std::vector<std::int64_t> to_int_list(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    std::string t = s;
    if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(to_int(item, what));
    }
    return out;
}

Field build_field(const JobConfig& c) {
    if (c.p == 0) fail("a field is required: give --q, or --p and --s");
    return Field::create(c.p, c.s, c.modulus);
}

RingCtx build_ring(const JobConfig& c, const Field& f, bool with_derivation = true) {
    if (c.theta_t >= f.s()) fail("--theta must lie in [0, s-1]");
    const Elem beta = with_derivation ? parse_elem(f, c.beta) : kZero;
    return RingCtx(f, c.theta_t, beta);
}

std::uint64_t budget_of(const JobConfig& c) { return c.budget ? c.budget : default_budget(); }

json elem_list(const Field& f, std::span<const Elem> v) {
    json a = json::array();
    for (Elem e : v) a.push_back(format_elem(f, e));
    return a;
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(elem_list(m.field(), m.row(r)));
    return a;
}

json vecs_json(const Field& f, const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(elem_list(f, v));
    return a;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::vector<std::string> elem_strings(const Field& f, const std::vector<Elem>& v) {
    std::vector<std::string> out;
    for (Elem e : v) out.push_back(format_elem(f, e));
    return out;
}

void print_matrix(std::ostream& os, const Field& f, const std::vector<Vec>& rows, const std::string& indent) {
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (Elem e : r) cells.push_back(format_elem(f, e));
        os << indent << "(" << join(cells, " ") << ")\n";
    }
}

json code_record(const JobConfig& cfg, const SkewPoly& g, const std::optional<SkewPoly>& f, std::size_t n,
                 std::size_t k, std::size_t d, const std::vector<Elem>& consta) {
    const Field& F = g.field();
    json r;
    r["q"] = F.q();
    r["n"] = n;
    r["k"] = k;
    r["d"] = d;
    r["g"] = coeff_strings(g);
    r["g_text"] = format_poly(g);
    r["f"] = f ? json(coeff_strings(*f)) : json(nullptr);
    r["theta_t"] = cfg.theta_t;
    r["beta"] = format_elem(F, g.ctx().beta());
    r["mds"] = (d == n - k + 1);
    r["constacyclic_a"] = elem_list(F, consta);
    return r;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

// ---------------------------------------------------------------- commands

void cmd_mds_search(const JobConfig& cfg, std::ostream& os) {
    const Field F = build_field(cfg);
    const RingCtx R = build_ring(cfg, F);
    const auto n = static_cast<std::size_t>(to_int(param(cfg, "n"), "n"));
    MdsSearchOptions opts;
    const std::string conv = opt_param(cfg, "generator").value_or("field-generator");
    if (conv == "field-generator")
        opts.convention = GeneratorConvention::field_generator;
    else if (conv == "primitive")
        opts.convention = GeneratorConvention::primitive;
    else
        fail("--generator must be 'field-generator' or 'primitive'");
    opts.include_non_mds = opt_param(cfg, "all").value_or("false") == "true";
    opts.jobs = cfg.jobs;
    opts.budget = budget_of(cfg);
    const auto rows = mds_search(R, n, opts);

    if (cfg.format == "json") {
        json j;
        j["command"] = "mds-search";
        j["q"] = F.q();
        j["n"] = n;
        j["theta_t"] = cfg.theta_t;
        j["generator"] = conv;
        j["codes"] = json::array();
        for (const auto& r : rows) {
            std::optional<SkewPoly> f;
            if (!r.constacyclic.empty())
                f = SkewPoly::monomial(R, kOne, static_cast<int>(n)) - SkewPoly::constant(R, r.constacyclic.front());
            json rec = code_record(cfg, r.g, f, r.n, r.k, r.d, r.constacyclic);
            rec["provenance"] = json{{"c", r.c}, {"l", r.l}, {"w", format_elem(F, r.w)}};
            j["codes"].push_back(std::move(rec));
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "q,n,k,d,g,constacyclic_a\n";
        for (const auto& r : rows) {
            const std::string a = r.constacyclic.empty() ? "none" : join(elem_strings(F, r.constacyclic), ";");
            os << F.q() << "," << r.n << "," << r.k << "," << r.d << "," << csv_escape(format_poly(r.g, "x")) << ","
               << csv_escape(a) << "\n";
        }
    } else {
        os << "q | n | k | d | g | a with g | x^n - a\n";
        for (const auto& r : rows) {
            const std::string a = r.constacyclic.empty() ? "none" : join(elem_strings(F, r.constacyclic), ", ");
            os << F.q() << " | " << r.n << " | " << r.k << " | " << r.d << " | " << format_poly(r.g, "x") << " | "
               << a << (r.mds ? "" : "  (not MDS)") << "\n";
        }
    }
}

void cmd_enumerate(const JobConfig& cfg, std::ostream& os) {
    const Field F = build_field(cfg);
    const RingCtx R = build_ring(cfg, F);
    const SkewPoly f = parse_poly(R, param(cfg, "f"));
    if (!f.is_monic()) fail("f must be monic");
    const auto n = static_cast<std::size_t>(f.degree());
    const std::uint64_t budget = budget_of(cfg);
    const bool all_divisors = opt_param(cfg, "all").value_or("false") == "true";

    std::vector<SkewPoly> gens;
    std::size_t listing = 0;
    if (all_divisors) {
        gens = enumerate_right_divisors(f, budget, cfg.jobs);
        listing = gens.size();
    } else {
        ProgramListing pl = program_listing(f, budget, cfg.jobs);
        gens = std::move(pl.generators);
        listing = pl.count;
    }
    struct Row {
        SkewGCCode code;
        std::size_t d;
        std::vector<Elem> consta;
    };
    std::vector<Row> rows;
    for (const auto& g : gens) {
        SkewGCCode c = code_from_generator_poly(g, f);
        const std::size_t d = minimum_distance(c, budget, cfg.jobs);
        rows.push_back({std::move(c), d, constacyclic_moduli(g, n)});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.code.k != b.code.k) return a.code.k < b.code.k;
        return canonical_less(a.code.g, b.code.g);
    });
    bool all_mds = true;
    for (const auto& r : rows) all_mds = all_mds && (r.d == r.code.n - r.code.k + 1);
    const std::size_t per_code = (!all_divisors && !R.is_commutative()) ? F.q() - 1 : 1;

    if (cfg.format == "json") {
        json j;
        j["command"] = "enumerate";
        j["q"] = F.q();
        j["n"] = n;
        j["theta_t"] = cfg.theta_t;
        j["beta"] = format_elem(F, R.beta());
        j["f"] = coeff_strings(f);
        j["distinct"] = rows.size();
        j["listing_count"] = listing;
        j["all_mds"] = all_mds;
        j["codes"] = json::array();
        for (const auto& r : rows) {
            json rec = code_record(cfg, r.code.g, f, r.code.n, r.code.k, r.d, r.consta);
            rec["generator_matrix"] = matrix_json(r.code.G);
            j["codes"].push_back(std::move(rec));
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "q,n,k,d,g,f,theta_t,beta,mds,constacyclic_a\n";
        for (const auto& r : rows) {
            const std::string a = r.consta.empty() ? "none" : join(elem_strings(F, r.consta), ";");
            os << F.q() << "," << r.code.n << "," << r.code.k << "," << r.d << "," << csv_escape(format_coeffs(r.code.g))
               << "," << csv_escape(format_coeffs(f)) << "," << cfg.theta_t << "," << format_elem(F, R.beta()) << ","
               << (r.d == r.code.n - r.code.k + 1 ? "true" : "false") << "," << csv_escape(a) << "\n";
        }
    } else {
        std::vector<std::string> ks, ds;
        for (const auto& r : rows) {
            os << format_poly(r.code.g) << "\n\n";
            print_matrix(os, F, r.code.G.row_list(), "  ");
            os << "\nCode of type: " << r.code.n << " " << r.code.k << " " << r.d << "\n-------------\n";
            for (std::size_t m = 0; m < per_code; ++m) {
                ks.push_back(std::to_string(r.code.k));
                ds.push_back(std::to_string(r.d));
            }
        }
        os << "Spectrum of the distances for " << format_poly(f) << "\n";
        os << "n = " << n << "\nk = [" << join(ks, ", ") << "]\nd = [" << join(ds, ", ") << "]\n";
        os << "distinct codes: " << rows.size() << "\n";
        os << "program listing count: " << listing << "\n";
        os << "all MDS: " << (all_mds ? "yes" : "no") << "\n";
    }
}

void cmd_decompose(const JobConfig& cfg, std::ostream& os) {
    const Field F = build_field(cfg);
    const RingCtx R = build_ring(cfg, F);
    const SkewPoly f = parse_poly(R, param(cfg, "f"));
    if (!is_invariant(f)) fail_precondition("f is not invariant (Rf != fR), so it has no factorization into invariant factors and F_q^n does not split into kernels");
    const Decomposition D = decompose(f);
    const DecompositionCheck ck = check_decomposition(D);
    const auto n = static_cast<std::size_t>(f.degree());

    if (cfg.format == "json") {
        json j;
        j["command"] = "decompose";
        j["q"] = F.q();
        j["n"] = n;
        j["theta_t"] = cfg.theta_t;
        j["beta"] = format_elem(F, R.beta());
        j["f"] = coeff_strings(f);
        j["components"] = json::array();
        for (const auto& c : D.components) {
            json cj;
            cj["factor"] = coeff_strings(c.factor);
            cj["factor_text"] = format_poly(c.factor);
            cj["multiplicity"] = c.multiplicity;
            cj["fq_linear"] = c.fq_linear;
            cj["fp_dimension"] = c.fp_dimension;
            cj["basis"] = vecs_json(F, c.basis);
            j["components"].push_back(std::move(cj));
        }
        j["checks"] = {{"dimensions", ck.dimensions},   {"direct_sum", ck.direct_sum},
                       {"idempotent", ck.idempotent},   {"orthogonal", ck.orthogonal},
                       {"partition", ck.partition},     {"annihilates", ck.annihilates},
                       {"fixes_exactly", ck.fixes_exactly}};
        os << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        os << "component,factor,multiplicity,fq_linear,fp_dimension,row\n";
        for (std::size_t i = 0; i < D.components.size(); ++i) {
            const auto& c = D.components[i];
            for (const auto& v : c.basis)
                os << i + 1 << "," << csv_escape(format_coeffs(c.factor)) << "," << c.multiplicity << ","
                   << (c.fq_linear ? "true" : "false") << "," << c.fp_dimension << "," << csv_escape(format_vec(F, v))
                   << "\n";
        }
        return;
    }
    os << "f = " << format_poly(f) << "\nfactorization:";
    for (const auto& c : D.components) os << " (" << format_poly(c.factor) << ")^" << c.multiplicity;
    os << "\n";
    for (std::size_t i = 0; i < D.components.size(); ++i) {
        const auto& c = D.components[i];
        os << "\nU_" << i + 1 << " = Ker (" << format_poly(c.factor) << ")^" << c.multiplicity << "(T_f): "
           << (c.fq_linear ? "F_q-dimension " + std::to_string(c.basis.size())
                           : "not F_q-linear, F_p-dimension " + std::to_string(c.fp_dimension))
           << "\n";
        print_matrix(os, F, c.basis, "  ");
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "\nidempotents e_i = b_i(T_f) f^_i(T_f) over GF(" << F.p() << "):\n"
       << "  dim U_i = multiplicity * deg f_i: " << yn(ck.dimensions) << "\n"
       << "  direct sum equals F_q^n:         " << yn(ck.direct_sum) << "\n"
       << "  e_i^2 = e_i:                      " << yn(ck.idempotent) << "\n"
       << "  e_i e_j = 0 (i != j):             " << yn(ck.orthogonal) << "\n"
       << "  sum of e_i = id:                  " << yn(ck.partition) << "\n"
       << "  e_i(U_j) = 0 (i != j):            " << yn(ck.annihilates) << "\n"
       << "  e_i(v) = v exactly on U_i:        " << yn(ck.fixes_exactly) << "\n";
}

void cmd_dual(const JobConfig& cfg, std::ostream& os) {
    const Field F = build_field(cfg);
    const RingCtx R = build_ring(cfg, F);
    const SkewPoly f = parse_poly(R, param(cfg, "f"));
    const SkewPoly g = parse_poly(R, param(cfg, "g"));
    const SkewGCCode C = code_from_generator_poly(g.monic(), f);
    const DualResult dr = dual_code(C);
    const PseudoLinearMap t2 = dual_pseudolinear_map(PseudoLinearMap::for_poly(f));

    if (cfg.format == "json") {
        json j;
        j["command"] = "dual";
        j["q"] = F.q();
        j["n"] = C.n;
        j["k"] = C.k;
        j["generator_matrix"] = matrix_json(C.G);
        j["dual_matrix"] = matrix_json(dr.H);
        j["via_stacked_columns"] = dr.via_stacked_columns;
        j["h_prime"] = dr.h_prime ? json(coeff_strings(*dr.h_prime)) : json(nullptr);
        j["dual_map"] = {{"matrix", matrix_json(t2.matrix())},
                         {"theta_t", t2.theta().t()},
                         {"beta", format_elem(F, t2.beta())}};
        os << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        os << "row,vector\n";
        for (std::size_t r = 0; r < dr.H.rows(); ++r) os << r + 1 << "," << csv_escape(format_vec(F, dr.H.row(r))) << "\n";
        return;
    }
    os << "code [" << C.n << "," << C.k << "] generated by " << format_poly(C.g) << "\n";
    os << "dual code (" << (dr.via_stacked_columns ? "columns of the stacked h' matrix" : "null space of G") << "):\n";
    print_matrix(os, F, dr.H.row_list(), "  ");
    if (dr.h_prime) os << "h' = " << format_poly(*dr.h_prime) << "\n";
    os << "dual map T': theta exponent " << t2.theta().t() << ", beta " << format_elem(F, t2.beta()) << ", matrix\n";
    print_matrix(os, F, t2.matrix().row_list(), "  ");
}

void cmd_minpoly(const JobConfig& cfg, std::ostream& os) {
    const Field F = build_field(cfg);
    const RingCtx R = build_ring(cfg, F);
    const Matrix M = parse_matrix(F, param(cfg, "M"));
    const PseudoLinearMap t(M, R.theta(), R.beta());
    const SkewPoly mt = semilinear_minimal_poly(t);
    const Matrix B = theta_conjugate_product(M, R.theta());
    const SkewPoly mb = matrix_minimal_poly(B);

    if (cfg.format == "json") {
        json j;
        j["command"] = "minpoly";
        j["q"] = F.q();
        j["n"] = M.rows();
        j["theta_t"] = cfg.theta_t;
        j["minimal_polynomial"] = coeff_strings(mt);
        j["minimal_polynomial_text"] = format_poly(mt);
        j["B"] = matrix_json(B);
        j["minimal_polynomial_B"] = coeff_strings(mb);
        os << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        os << "polynomial,coefficients\n";
        os << "m_T," << csv_escape(format_coeffs(mt)) << "\n";
        os << "m_B," << csv_escape(format_coeffs(mb)) << "\n";
        return;
    }
    os << format_poly(mt) << "\n";
}

void cmd_bound(const JobConfig& cfg, std::ostream& os) {
    const Field F = build_field(cfg);
    const RingCtx R = build_ring(cfg, F, false);
    const SkewPoly f = parse_poly(R, param(cfg, "f"));
    const SkewPoly g = parse_poly(R, param(cfg, "g"));
    const SkewGCCode C = code_from_generator_poly(g.monic(), f);
    const std::int64_t m = to_int(opt_param(cfg, "ext").value_or("1"), "ext");
    if (m < 1) fail("--ext must be positive");
    std::optional<BetaSpec> spec;
    if (m == 1) {
        spec = BetaSpec::in_base(F, parse_elem(F, cfg.beta));
    } else {
        const Extension E = extend_field(F, static_cast<std::uint32_t>(m));
        spec = BetaSpec{parse_elem(E.field, cfg.beta), E.embed};
    }
    const std::int64_t l = to_int(opt_param(cfg, "l").value_or("0"), "l");
    const auto cs = to_int_list(param(cfg, "c"), "c");
    const auto ss = to_int_list(opt_param(cfg, "ss").value_or(""), "ss");
    const auto delta = static_cast<int>(to_int(param(cfg, "delta"), "delta"));
    const BoundResult res = verify_bound_general(C, *spec, l, cs, ss, delta);
    const bool want_d = opt_param(cfg, "distance").value_or("false") == "true";
    std::optional<std::size_t> d;
    if (want_d) d = minimum_distance(C, budget_of(cfg), cfg.jobs);

    if (cfg.format == "json") {
        json j;
        j["command"] = "bound";
        j["q"] = F.q();
        j["n"] = C.n;
        j["k"] = C.k;
        j["verified"] = res.ok();
        if (res.ok()) {
            const auto& c = *res.certificate;
            j["certificate"] = {{"beta", format_elem(c.beta_field, c.beta)},
                                {"extension_degree", m},
                                {"l", c.l},
                                {"cs", c.cs},
                                {"ss", c.ss},
                                {"delta", c.delta},
                                {"claimed_bound", c.claimed_bound}};
        } else {
            const auto& fl = *res.failure;
            j["failure"] = {{"condition", fl.condition == BoundFailure::Condition::root ? "root" : "norm"},
                            {"message", fl.message}};
            if (fl.condition == BoundFailure::Condition::root) {
                j["failure"]["exponent"] = fl.exponent;
                j["failure"]["index"] = fl.index;
            } else {
                j["failure"]["i"] = fl.norm_i;
                j["failure"]["j"] = fl.norm_j;
            }
        }
        j["minimum_distance"] = d ? json(*d) : json(nullptr);
        os << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        os << "verified,claimed_bound,failure,minimum_distance\n";
        os << (res.ok() ? "true" : "false") << "," << (res.ok() ? std::to_string(res.certificate->claimed_bound) : "")
           << "," << csv_escape(res.ok() ? "" : res.failure->message) << "," << (d ? std::to_string(*d) : "") << "\n";
        return;
    }
    if (res.ok())
        os << "VERIFIED: d >= " << res.certificate->claimed_bound << "\n";
    else
        os << "FAILURE at " << (res.failure->condition == BoundFailure::Condition::root ? "root" : "norm")
           << " condition: " << res.failure->message << "\n";
    if (d) os << "minimum distance: " << *d << "\n";
}

}  // namespace

json to_json(const JobConfig& c) {
    json j;
    j["command"] = c.command;
    j["p"] = c.p;
    j["s"] = c.s;
    j["modulus"] = c.modulus ? json(*c.modulus) : json(nullptr);
    j["theta_t"] = c.theta_t;
    j["beta"] = c.beta;
    j["params"] = c.params;
    j["format"] = c.format;
    j["out"] = c.out;
    j["jobs"] = c.jobs;
    j["budget"] = c.budget;
    return j;
}

JobConfig config_from_json(const json& j) {
    JobConfig c;
    c.command = j.at("command").get<std::string>();
    c.p = j.at("p").get<std::uint32_t>();
    c.s = j.at("s").get<std::uint32_t>();
    if (!j.at("modulus").is_null()) c.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    c.theta_t = j.at("theta_t").get<std::uint32_t>();
    c.beta = j.at("beta").get<std::string>();
    c.params = j.at("params").get<std::map<std::string, std::string>>();
    c.format = j.at("format").get<std::string>();
    c.out = j.at("out").get<std::string>();
    c.jobs = j.at("jobs").get<unsigned>();
    c.budget = j.at("budget").get<std::uint64_t>();
    return c;
}

int execute(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "pretty" && cfg.format != "csv" && cfg.format != "json")
            fail("--format must be csv, json or pretty");
        std::ostringstream buf;
        if (cfg.command == "mds-search")
            cmd_mds_search(cfg, buf);
        else if (cfg.command == "enumerate")
            cmd_enumerate(cfg, buf);
        else if (cfg.command == "decompose")
            cmd_decompose(cfg, buf);
        else if (cfg.command == "dual")
            cmd_dual(cfg, buf);
        else if (cfg.command == "minpoly")
            cmd_minpoly(cfg, buf);
        else if (cfg.command == "bound")
            cmd_bound(cfg, buf);
        else
            fail("unknown command '" + cfg.command + "'");
        if (cfg.out.empty()) {
            out << buf.str();
        } else {
            std::ofstream file(cfg.out);
            if (!file) fail("cannot open output file " + cfg.out);
            file << buf.str();
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::budget_exceeded: return kBudget;
            case ErrorKind::precondition: return kPrecondition;
            case ErrorKind::invalid_argument: return kUsage;
        }
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew polynomial rings and skew generalized cyclic codes over finite fields", "skewcodes"};
    app.footer(kSyntaxHelp);
    app.require_subcommand(1);

    std::uint32_t q = 0, p = 0, s = 0, theta = 0;
    std::string modulus, beta = "0", format = "pretty", outpath;
    unsigned jobs = 1;
    std::uint64_t budget = 0;
    std::map<std::string, std::string> params;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--q", q, "field order (prime power)");
        sub->add_option("--p", p, "field characteristic");
        sub->add_option("--s", s, "extension degree over GF(p)");
        sub->add_option("--modulus", modulus, "field polynomial over GF(p), ascending, e.g. [1,1,0,1]");
        sub->add_option("--theta", theta, "θ(a) = a^(p^t): the exponent t");
        sub->add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
        sub->add_option("--out", outpath, "write output to this file");
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
        sub->add_option("--budget", budget, "enumeration budget (default 2^24 or SKEWCODES_BUDGET)");
    };
    auto str_opt = [&](CLI::App* sub, const std::string& name, const std::string& help) {
        sub->add_option_function<std::string>("--" + name, [&params, name](const std::string& v) { params[name] = v; },
                                              help);
    };
    auto flag_opt = [&](CLI::App* sub, const std::string& name, const std::string& help) {
        sub->add_flag_callback("--" + name, [&params, name] { params[name] = "true"; }, help);
    };

    auto* mds = app.add_subcommand("mds-search", "MDS codes from consecutive powers of w");
    common(mds);
    str_opt(mds, "n", "code length, 2 <= n <= q-1");
    str_opt(mds, "generator", "w convention: field-generator (w = 1 over prime fields) or primitive");
    flag_opt(mds, "all", "also list non-MDS codes");

    auto* en = app.add_subcommand("enumerate", "all skew GC codes of f from its right divisors");
    common(en);
    en->add_option("--beta", beta, "derivation parameter β");
    str_opt(en, "f", "monic modulus polynomial");
    flag_opt(en, "all", "list every monic right divisor (θ = id: not only factor powers)");

    auto* de = app.add_subcommand("decompose", "kernel decomposition F_q^n = U_1 + ... + U_t and idempotents");
    common(de);
    de->add_option("--beta", beta, "derivation parameter β");
    str_opt(de, "f", "invariant monic polynomial");

    auto* du = app.add_subcommand("dual", "dual code and dual pseudo-linear map");
    common(du);
    du->add_option("--beta", beta, "derivation parameter β");
    str_opt(du, "f", "monic modulus polynomial");
    str_opt(du, "g", "right divisor of f");

    auto* mp = app.add_subcommand("minpoly", "minimal polynomial of a semi-linear map v -> θ(v)M");
    common(mp);
    mp->add_option("--beta", beta, "derivation parameter β (must vanish unless θ = id)");
    str_opt(mp, "M", "square matrix, e.g. [[0,1],[1,0]] or I2");

    auto* bo = app.add_subcommand("bound", "check the hypotheses of the BCH-type distance bounds");
    common(bo);
    bo->add_option("--beta", beta, "evaluation base β (in the extension of degree --ext)");
    str_opt(bo, "f", "monic modulus polynomial");
    str_opt(bo, "g", "right divisor of f");
    str_opt(bo, "l", "offset l >= 0 (default 0)");
    str_opt(bo, "c", "step(s) c_1[,c_2,...], all positive");
    str_opt(bo, "ss", "extra ranges s_2[,s_3,...]");
    str_opt(bo, "delta", "designed distance δ >= 2");
    str_opt(bo, "ext", "extension degree of the field holding β (default 1)");
    flag_opt(bo, "distance", "also compute the true minimum distance");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    JobConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (q != 0) {
            const auto [pp, ss] = split_prime_power(q);
            if ((p && p != pp) || (s && s != ss)) fail("--q disagrees with --p/--s");
            p = pp;
            s = ss;
        }
        if (p != 0 && s == 0) s = 1;
        cfg.p = p;
        cfg.s = s;
        if (!modulus.empty()) {
            std::vector<std::uint32_t> mod;
            for (auto v : to_int_list(modulus, "modulus")) {
                if (v < 0) fail("--modulus coefficients must be nonnegative");
                mod.push_back(static_cast<std::uint32_t>(v));
            }
            cfg.modulus = mod;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    cfg.theta_t = theta;
    cfg.beta = beta;
    cfg.params = params;
    cfg.format = format;
    cfg.out = outpath;
    cfg.jobs = jobs;
    cfg.budget = budget;
    return execute(cfg, out, err);
}

}  // namespace skewcodes::cli
