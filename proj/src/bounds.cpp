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

#include "skewcodes/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "skewcodes/error.hpp"
#include "skewcodes/parallel.hpp"

namespace skewcodes {

namespace {

constexpr std::uint64_t kGridLimit = std::uint64_t{1} << 16;

// Enumerates the grid i_1 ∈ [0, δ−2], i_k ∈ [0, s_k] and calls fn(index, exponent).
template <class Fn>
bool for_each_grid_point(std::int64_t l, const std::vector<std::int64_t>& cs, const std::vector<std::int64_t>& ss,
                         int delta, Fn&& fn) {
    std::vector<std::int64_t> hi{delta - 2};
    hi.insert(hi.end(), ss.begin(), ss.end());
    std::uint64_t size = 1;
    for (auto h : hi) {
        size *= static_cast<std::uint64_t>(h + 1);
        if (size > kGridLimit) fail_budget("bound index grid exceeds 2^16 points");
    }
    std::vector<std::int64_t> idx(hi.size(), 0);
    for (;;) {
        std::int64_t e = l;
        for (std::size_t k = 0; k < idx.size(); ++k) e += idx[k] * cs[k];
        if (!fn(idx, e)) return false;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] > hi[k]) idx[k++] = 0;
        if (k == idx.size()) return true;
    }
}

void check_bound_args(const std::vector<std::int64_t>& cs, const std::vector<std::int64_t>& ss, std::int64_t l,
                      int delta) {
    if (cs.empty()) fail("at least one step c is required");
    if (ss.size() + 1 != cs.size()) fail("need exactly one s_k for each step after the first");
    for (auto c : cs)
        if (c <= 0) fail("steps c_j must be positive");
    for (auto s : ss)
        if (s < 0) fail("s_k must be nonnegative");
    if (l < 0) fail("l must be nonnegative");
    if (delta < 2) fail("designed distance must be at least 2");
}

}  // namespace

BetaSpec BetaSpec::in_base(const Field& f, Elem b) {
    std::vector<Elem> id(f.q());
    for (std::uint32_t i = 0; i < f.q(); ++i) id[i] = Elem(i);
    return {b, Embedding(f, f, std::move(id))};
}

BoundResult verify_bound_general(const SkewGCCode& c, const BetaSpec& beta, std::int64_t l,
                                 const std::vector<std::int64_t>& cs, const std::vector<std::int64_t>& ss,
                                 int delta) {
    check_bound_args(cs, ss, l, delta);
    if (c.ctx.has_derivation()) fail_precondition("distance bounds need a zero derivation");
    if (!(beta.embed.base() == c.f.field())) fail("β's embedding does not start at the code's field");
    const Field& E = beta.embed.extension();
    if (!E.contains(beta.beta) || beta.beta.is_zero()) fail("β must be a nonzero element of its field");
    const Automorphism theta_e(E, c.ctx.theta().t());

    BoundResult out;
    for_each_grid_point(l, cs, ss, delta, [&](const std::vector<std::int64_t>& idx, std::int64_t e) {
        if (!skew_eval(c.g, E.pow(beta.beta, e), beta.embed).is_zero()) {
            BoundFailure bf{BoundFailure::Condition::root, e, idx, 0, 0, {}};
            bf.message = "g(β^" + std::to_string(e) + ") != 0";
            out.failure = std::move(bf);
            return false;
        }
        return true;
    });
    if (out.failure) return out;
    for (std::size_t j = 0; j < cs.size(); ++j) {
        const Elem bc = E.pow(beta.beta, cs[j]);
        for (std::uint64_t i = 1; i < c.n; ++i) {
            if (norm(i, bc, theta_e) == kOne) {
                BoundFailure bf{BoundFailure::Condition::norm, 0, {}, i, j + 1, {}};
                bf.message = "N_" + std::to_string(i) + "(β^" + std::to_string(cs[j]) + ") = 1";
                out.failure = std::move(bf);
                return out;
            }
        }
    }
    int claimed = delta;
    for (auto s : ss) claimed += static_cast<int>(s);
    out.certificate = BoundCertificate{beta.beta, E, l, cs, ss, delta, claimed};
    return out;
}

BoundResult verify_bound1(const SkewGCCode& c, const BetaSpec& beta, std::int64_t l, std::int64_t cstep,
                          int delta) {
    return verify_bound_general(c, beta, l, {cstep}, {}, delta);
}

bool order_gcd_predicate(const Field& f, Elem beta, std::int64_t c, std::size_t n) {
    if (beta.is_zero()) fail("β must be nonzero");
    if (c <= 0) fail("c must be positive");
    const std::uint64_t ord = f.order(beta);
    return ord >= n && std::gcd(ord, static_cast<std::uint64_t>(c)) == 1;
}

SkewPoly mds_generator(const RingCtx& ctx, Elem beta, std::int64_t l, const std::vector<std::int64_t>& cs,
                       const std::vector<std::int64_t>& ss, std::size_t n, int delta) {
    check_bound_args(cs, ss, l, delta);
    const Field& F = ctx.field();
    if (ctx.has_derivation()) fail_precondition("the MDS construction needs a zero derivation");
    if (F.q() < n + 1) fail_precondition("the MDS construction needs q >= n + 1");
    if (beta.is_zero() || !F.contains(beta)) fail("β must be a nonzero field element");
    for (std::size_t j = 0; j < cs.size(); ++j) {
        const Elem bc = F.pow(beta, cs[j]);
        for (std::uint64_t i = 1; i < n; ++i)
            if (norm(i, bc, ctx.theta()) == kOne)
                fail_precondition("norm condition fails: N_" + std::to_string(i) + "(β^" + std::to_string(cs[j]) + ") = 1");
    }
    SkewPoly g = SkewPoly::one(ctx);
    for_each_grid_point(l, cs, ss, delta, [&](const std::vector<std::int64_t>&, std::int64_t e) {
        g = lclm(g, SkewPoly(ctx, {F.neg(F.pow(beta, e)), kOne}));
        return true;
    });
    if (g.degree() >= static_cast<int>(n)) fail_precondition("generator degree reaches the code length");
    return g;
}

std::vector<Elem> constacyclic_moduli(const SkewPoly& g, std::size_t n) {
    if (g.degree() > static_cast<int>(n)) fail("deg g exceeds n");
    const Field& F = g.field();
    std::vector<Elem> out;
    for (std::uint32_t a = 1; a < F.q(); ++a) {
        const SkewPoly m = SkewPoly::monomial(g.ctx(), kOne, static_cast<int>(n)) -
                           SkewPoly::constant(g.ctx(), Elem(a));
        if (right_divides(g, m)) out.push_back(Elem(a));
    }
    return out;
}

std::vector<MdsRow> mds_search(const RingCtx& ctx, std::size_t n, const MdsSearchOptions& opts) {
    const Field& F = ctx.field();
    const std::uint32_t q = F.q();
    if (n < 2 || n > q - 1) fail("mds search needs 2 <= n <= q-1 (q = " + std::to_string(q) + ")");
    if (ctx.has_derivation()) fail_precondition("the MDS search needs a zero derivation");
    const Elem w = (opts.convention == GeneratorConvention::field_generator && F.is_prime_field()) ? kOne : F.primitive();

    struct Key {
        std::int64_t c, l;
        std::size_t k;
    };
    std::vector<Key> keys;
    for (std::int64_t c = 1; c <= static_cast<std::int64_t>(q) - 2; ++c) {
        if (std::gcd(c, static_cast<std::int64_t>(q - 1)) != 1) continue;
        for (std::int64_t l = 0; l <= static_cast<std::int64_t>(q) - 2; ++l)
            for (std::size_t k = 1; k < n; ++k) keys.push_back({c, l, k});
    }
    std::vector<std::optional<SkewPoly>> gens(keys.size());
    parallel_for(keys.size(), opts.jobs, [&](std::size_t i) {
        const auto [c, l, k] = keys[i];
        const Elem wc = F.pow(w, c);
        Elem root = F.pow(w, l);
        SkewPoly g = SkewPoly::one(ctx);
        for (std::size_t j = 0; j + k < n; ++j) {
            const SkewPoly lin(ctx, {F.neg(root), kOne});
            g = ctx.is_commutative() ? g * lin : lclm(g, lin);
            root = F.mul(root, wc);
        }
        if (g.degree() >= 1 && g.degree() < static_cast<int>(n)) gens[i] = std::move(g);
    });
    std::map<std::vector<Elem>, std::size_t> unique;  // coefficients -> first key index
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i]) unique.emplace(std::vector<Elem>(gens[i]->coeffs().begin(), gens[i]->coeffs().end()), i);
    std::vector<SkewPoly> polys;
    std::vector<std::size_t> origin;
    for (auto& [_, i] : unique) {
        polys.push_back(*gens[i]);
        origin.push_back(i);
    }

    std::vector<MdsRow> rows(polys.size(), MdsRow{0, 0, 0, SkewPoly(ctx), {}, false});
    parallel_for(polys.size(), opts.jobs, [&](std::size_t i) {
        const SkewPoly& g = polys[i];
        const std::size_t k = n - static_cast<std::size_t>(g.degree());
        const std::size_t d = minimum_distance(generator_matrix(g, n), opts.budget);
        const Key& key = keys[origin[i]];
        rows[i] = MdsRow{n, k, d, g, constacyclic_moduli(g, n), d == n - k + 1, key.c, key.l, w};
    });
    std::vector<MdsRow> out;
    for (auto& r : rows)
        if (r.mds || opts.include_non_mds) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), [](const MdsRow& a, const MdsRow& b) {
        if (a.k != b.k) return a.k < b.k;
        return canonical_less(a.g, b.g);
    });
    return out;
}

}  // namespace skewcodes
