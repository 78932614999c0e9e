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

#include "skewcodes/codes.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "skewcodes/error.hpp"
#include "skewcodes/parallel.hpp"

namespace skewcodes {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// F_p-span of a subspace given by an F_q-basis (fq_linear) or an F_p-basis.
Matrix fp_span(const Field& f, std::size_t n, const std::vector<Vec>& basis, bool fq_linear) {
    std::vector<Vec> rows;
    for (const auto& v : basis) {
        if (fq_linear) {
            Elem m = kOne;
            for (std::uint32_t j = 0; j < f.s(); ++j) {
                rows.push_back(flatten_vector(f, vec_scale(f, m, v)));
                m = f.mul(m, f.primitive());
            }
        } else {
            rows.push_back(flatten_vector(f, v));
        }
    }
    return Matrix::from_rows(f.prime_subfield(), n * f.s(), rows);
}

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SKEWCODES_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultBudget;
}

Vec poly_to_vec(const SkewPoly& p, std::size_t n) {
    if (p.degree() >= static_cast<int>(n)) fail("polynomial degree exceeds the code length");
    Vec v(n, kZero);
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coeff(i);
    return v;
}

SkewPoly vec_to_poly(const RingCtx& ctx, std::span<const Elem> v) {
    return SkewPoly(ctx, Vec(v.begin(), v.end()));
}

Matrix generator_matrix(const SkewPoly& g, std::size_t n) {
    const int dg = g.degree();
    if (dg < 0 || static_cast<std::size_t>(dg) >= n) fail("generator degree must lie in [0, n-1]");
    const std::size_t k = n - static_cast<std::size_t>(dg);
    std::vector<Vec> rows;
    SkewPoly r = g;
    for (std::size_t j = 0; j < k; ++j) {
        rows.push_back(poly_to_vec(r, n));
        r = r.mul_x_left();
    }
    return Matrix::from_rows(g.field(), n, rows);
}

SkewGCCode code_from_generator_poly(const SkewPoly& g, const SkewPoly& f) {
    if (!(g.ctx() == f.ctx())) fail("g and f live in different rings");
    if (!f.is_monic() || f.degree() < 1) fail("f must be monic of positive degree");
    if (!g.is_monic()) fail("g must be monic");
    const auto n = static_cast<std::size_t>(f.degree());
    if (g.degree() < 1 || g.degree() >= f.degree())
        fail("deg g must satisfy 1 <= deg g <= n-1 (k = 0 and k = n are rejected)");
    if (!right_divides(g, f)) fail("g does not right-divide f");
    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    const PseudoLinearMap t = PseudoLinearMap::for_poly(f);
    std::vector<Vec> rows;
    Vec v = poly_to_vec(g, n);
    for (std::size_t j = 0; j < k; ++j) {
        rows.push_back(v);
        v = t(v);
    }
    Matrix G = Matrix::from_rows(f.field(), n, rows);
    if (rank(G) != k) fail_precondition("generator rows are dependent");
    return {f.ctx(), f, g, n, k, std::move(G)};
}

bool is_invariant_code(const Matrix& G, const PseudoLinearMap& t) {
    if (G.cols() != t.n()) fail("matrix width does not match the map");
    for (std::size_t r = 0; r < G.rows(); ++r)
        if (!in_row_space(G, t(G.row(r)))) return false;
    return true;
}

std::vector<SkewPoly> enumerate_right_divisors(const SkewPoly& f, std::uint64_t budget, unsigned jobs) {
    if (!f.is_monic() || f.degree() < 1) fail("f must be monic of positive degree");
    const RingCtx& ctx = f.ctx();
    const Field& F = f.field();
    const auto n = static_cast<std::size_t>(f.degree());
    const std::uint32_t q = F.q();
    if (checked_pow(q, n, budget) > budget)
        fail_budget("divisor scan needs q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                    " candidates, above the budget " + std::to_string(budget));

    // Task per (degree d, constant term c0): scan the middle coefficients.
    struct Task {
        std::size_t d;
        std::uint32_t c0;
    };
    std::vector<Task> tasks;
    for (std::size_t d = 1; d < n; ++d)
        for (std::uint32_t c0 = 1; c0 < q; ++c0) tasks.push_back({d, c0});
    std::vector<std::vector<SkewPoly>> found(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t ti) {
        const auto [d, c0] = tasks[ti];
        std::vector<std::uint32_t> mid(d - 1, 0);
        for (;;) {
            std::vector<Elem> c(d + 1);
            c[0] = Elem(c0);
            for (std::size_t j = 1; j < d; ++j) c[j] = Elem(mid[j - 1]);
            c[d] = kOne;
            SkewPoly g(ctx, std::move(c));
            if (right_divide(f, g).remainder.is_zero()) found[ti].push_back(std::move(g));
            std::size_t j = 0;
            while (j < mid.size() && ++mid[j] == q) mid[j++] = 0;
            if (j == mid.size()) break;
        }
    });
    std::vector<SkewPoly> out;
    for (auto& v : found)
        for (auto& g : v) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const SkewPoly& a, const SkewPoly& b) { return canonical_less(a, b); });
    return out;
}

ProgramListing program_listing(const SkewPoly& f, std::uint64_t budget, unsigned jobs) {
    ProgramListing out{{}, 0};
    if (f.ctx().is_commutative()) {
        // Powers of each irreducible factor.
        for (const auto& fp : invariant_factorization(f).factors) {
            SkewPoly p = SkewPoly::one(f.ctx());
            for (int j = 1; j <= fp.multiplicity; ++j) {
                p = p * fp.factor;
                if (p.degree() < f.degree()) out.generators.push_back(p);
            }
        }
        out.count = out.generators.size();
        return out;
    }
    out.generators = enumerate_right_divisors(f, budget, jobs);
    out.count = out.generators.size() * (f.field().q() - 1);
    return out;
}

std::size_t minimum_distance(const Matrix& G, std::uint64_t budget, unsigned jobs) {
    const Field& F = G.field();
    const std::size_t k = G.rows();
    const std::size_t n = G.cols();
    const std::uint32_t q = F.q();
    if (k == 0) fail("minimum distance of the zero code is undefined");
    if (checked_pow(q, k, budget) > budget)
        fail_budget("distance enumeration needs q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                    " codewords, above the budget " + std::to_string(budget));
    if (rank(G) != k) fail("generator matrix rows must be independent");

    // scaled[r][c] = c·row_r
    std::vector<std::vector<Vec>> scaled(k, std::vector<Vec>(q));
    for (std::size_t r = 0; r < k; ++r)
        for (std::uint32_t c = 0; c < q; ++c) scaled[r][c] = vec_scale(F, Elem(c), G.row(r));

    // Projective enumeration: the first nonzero message symbol is 1.
    // Tasks fix the leading index i0 and, when present, the next symbol.
    struct Task {
        std::size_t i0;
        std::uint32_t next;
    };
    std::vector<Task> tasks;
    for (std::size_t i0 = 0; i0 < k; ++i0) {
        if (i0 + 1 < k)
            for (std::uint32_t c = 0; c < q; ++c) tasks.push_back({i0, c});
        else
            tasks.push_back({i0, 0});
    }
    std::atomic<std::size_t> best{n + 1};
    parallel_for(tasks.size(), jobs, [&](std::size_t ti) {
        const auto [i0, next] = tasks[ti];
        Vec cur = G.row_vec(i0);
        std::size_t first_free = i0 + 1;
        if (i0 + 1 < k) {
            cur = vec_add(F, cur, scaled[i0 + 1][next]);
            first_free = i0 + 2;
        }
        std::vector<std::uint32_t> digit(k > first_free ? k - first_free : 0, 0);
        std::size_t local = n + 1;
        for (;;) {
            const std::size_t w = hamming_weight(cur);
            if (w < local) local = w;
            // Weight 1 cannot be beaten.
            if (local <= 1 || best.load(std::memory_order_relaxed) <= 1) break;
            std::size_t j = 0;
            for (; j < digit.size(); ++j) {
                const std::size_t r = first_free + j;
                const std::uint32_t old = digit[j];
                const std::uint32_t nw = (old + 1 == q) ? 0 : old + 1;
                for (std::size_t c = 0; c < n; ++c)
                    cur[c] = F.add(F.sub(cur[c], scaled[r][old][c]), scaled[r][nw][c]);
                digit[j] = nw;
                if (nw != 0) break;
            }
            if (j == digit.size()) break;
        }
        std::size_t prev = best.load();
        while (local < prev && !best.compare_exchange_weak(prev, local)) {
        }
    });
    return best.load();
}

DualResult dual_code(const SkewGCCode& c) {
    const Field& F = c.f.field();
    const std::size_t n = c.n;
    const Matrix ns = Matrix::from_rows(F, n, null_space(c.G));
    const DivResult d = left_divide(c.f, c.g);
    if (!d.remainder.is_zero()) return {ns, false, std::nullopt};

    const SkewPoly& h = d.quotient;
    const PseudoLinearMap t = PseudoLinearMap::for_poly(c.f);
    std::vector<Vec> rows;
    Vec v = poly_to_vec(h, n);
    for (std::size_t j = 0; j < n; ++j) {
        rows.push_back(v);
        v = t(v);
    }
    const Matrix stacked = Matrix::from_rows(F, n, rows);
    const Rref rr = rref(stacked);
    std::vector<Vec> cols;
    for (std::size_t pc : rr.pivots) {
        Vec col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = stacked.at(r, pc);
        cols.push_back(std::move(col));
    }
    Matrix H = Matrix::from_rows(F, n, cols);
    if (!row_space_equal(H, ns)) return {ns, false, h};
    return {std::move(H), true, h};
}

PseudoLinearMap dual_pseudolinear_map(const PseudoLinearMap& t) {
    const Automorphism inv = t.theta().inverse();
    Matrix m = t.matrix().transpose().map([&](Elem e) { return inv(e); });
    return PseudoLinearMap(std::move(m), inv, inv(t.beta()));
}

Decomposition decompose(const SkewPoly& f) {
    if (!f.is_monic() || f.degree() < 1) fail("f must be monic of positive degree");
    if (!is_invariant(f)) fail_precondition("f is not invariant (Rf != fR), so F_q^n has no kernel decomposition");
    const PseudoLinearMap t = PseudoLinearMap::for_poly(f);
    const Field& F = f.field();
    const auto n = static_cast<std::size_t>(f.degree());
    Decomposition out{f, invariant_factorization(f), {}};
    for (const auto& fp : out.factorization.factors) {
        SkewPoly power = fp.factor.pow(static_cast<unsigned>(fp.multiplicity));
        const DivResult d = left_divide(f, power);
        if (!d.remainder.is_zero()) fail_precondition("factor power does not left-divide f");
        SkewPoly cof = d.quotient;
        const Bezout bz = lgcd_bezout(power, cof);
        if (bz.gcd.degree() != 0) fail_precondition("factor power and cofactor are not coprime");
        const KernelResult ker = kernel_of_poly(power, t);
        const SkewPoly& b = bz.v;
        Matrix e = flatten_additive_map(F, n, [&](std::span<const Elem> v) {
            return apply_poly_T(b, t, apply_poly_T(cof, t, v));
        });
        out.components.push_back(Component{fp.factor, fp.multiplicity, std::move(power), std::move(cof), bz.u,
                                           bz.v, ker.basis, ker.is_fq_linear, ker.fp_dimension, std::move(e)});
    }
    return out;
}

DecompositionCheck check_decomposition(const Decomposition& d) {
    const Field& F = d.f.field();
    const Field fp = F.prime_subfield();
    const auto n = static_cast<std::size_t>(d.f.degree());
    const std::size_t ns = n * F.s();
    DecompositionCheck r{true, true, true, true, true, true, true};
    std::vector<Matrix> spans;
    Matrix all(fp, 0, ns);
    Matrix sum(fp, ns, ns);
    for (const auto& c : d.components) {
        if (c.fp_dimension != static_cast<std::size_t>(c.multiplicity * c.factor.degree()) * F.s()) r.dimensions = false;
        spans.push_back(fp_span(F, n, c.basis, c.fq_linear));
        all = stack(all, spans.back());
        sum = sum + c.idempotent;
        if (!(c.idempotent * c.idempotent == c.idempotent)) r.idempotent = false;
    }
    if (rank(all) != ns) r.direct_sum = false;
    if (!(sum == Matrix::identity(fp, ns))) r.partition = false;
    const Matrix id = Matrix::identity(fp, ns);
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const Matrix& ei = d.components[i].idempotent;
        for (std::size_t j = 0; j < d.components.size(); ++j) {
            if (i == j) continue;
            if (!(ei * d.components[j].idempotent).is_zero()) r.orthogonal = false;
            if (!(spans[j] * ei).is_zero()) r.annihilates = false;
        }
        // Fixed space of e_i is {v : v(e_i - I) = 0}.
        const Matrix fixed = Matrix::from_rows(fp, ns, left_kernel(ei - id));
        if (!row_space_equal(fixed, spans[i])) r.fixes_exactly = false;
    }
    return r;
}

std::vector<SubspaceGroup> code_component_split(const SkewGCCode& c, const Decomposition& d) {
    if (!(c.f == d.f)) fail("code and decomposition come from different f");
    const Field& F = c.f.field();
    const std::size_t n = c.n;
    const Matrix cspan = fp_span(F, n, c.G.row_list(), true);
    std::vector<SubspaceGroup> out;
    for (const auto& comp : d.components) {
        const Matrix inter = intersect_row_spaces(cspan, fp_span(F, n, comp.basis, comp.fq_linear));
        std::vector<Vec> vs;
        for (std::size_t r = 0; r < inter.rows(); ++r) vs.push_back(unflatten_vector(F, inter.row(r)));
        out.push_back(regroup_fp_subspace(F, n, vs));
    }
    return out;
}

SkewPoly normalize_to_unit_constant(const SkewPoly& c, const SkewGCCode& code) {
    if (c.is_zero()) fail("cannot normalize the zero word");
    if (!(c.ctx() == code.ctx)) fail("word and code live in different rings");
    if (code.ctx.has_derivation()) fail_precondition("normalization needs a zero derivation");
    if (code.f.coeff(0).is_zero()) fail_precondition("f must have a nonzero constant term");
    if (!in_row_space(code.G, poly_to_vec(c, code.n))) fail("word is not in the code");
    const Field& F = c.field();
    std::size_t i0 = 0;
    while (c.coeff(i0).is_zero()) ++i0;
    const Elem binv = F.inv(c.coeff(i0));
    // c = b X^{i0} u with u_j = θ^{-i0}(b^{-1} c_{i0+j}).
    const Automorphism back = code.ctx.theta().power(-static_cast<std::int64_t>(i0));
    std::vector<Elem> u(c.size() - i0);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = back(F.mul(binv, c.coeff(i0 + j)));
    return SkewPoly(c.ctx(), std::move(u));
}

}  // namespace skewcodes
