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

#include "skewcodes/skew_poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "skewcodes/error.hpp"

namespace skewcodes {

RingCtx::RingCtx(Field field, std::uint32_t theta_t, Elem beta)
    : theta_(std::move(field), theta_t), beta_(beta) {
    if (!theta_.field().contains(beta)) fail("derivation parameter outside the field");
    // δ vanishes for θ = id; keep a single representative of that ring.
    if (theta_.is_identity()) beta_ = kZero;
}

// SkewPoly basics

SkewPoly::SkewPoly(RingCtx ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (auto c : c_) {
        if (!field().contains(c)) fail("coefficient outside " + field().describe());
    }
    trim();
}

SkewPoly SkewPoly::monomial(const RingCtx& ctx, Elem c, int d) {
    if (d < 0) fail("negative monomial degree");
    std::vector<Elem> v(static_cast<std::size_t>(d) + 1, kZero);
    v.back() = c;
    return SkewPoly(ctx, std::move(v));
}

SkewPoly SkewPoly::from_ints(const RingCtx& ctx, std::initializer_list<std::int64_t> c) {
    std::vector<Elem> v;
    v.reserve(c.size());
    for (auto x : c) v.push_back(ctx.field().from_int(x));
    return SkewPoly(ctx, std::move(v));
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void SkewPoly::check_ctx(const SkewPoly& o) const {
    if (!(ctx_ == o.ctx_)) fail("skew polynomials from different rings");
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) fail("the zero polynomial has no monic associate");
    return scale_left(field().inv(lead()));
}

SkewPoly SkewPoly::scale_left(Elem c) const {
    SkewPoly r(ctx_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field().mul(c, c_[i]);
    r.trim();
    return r;
}

SkewPoly SkewPoly::mul_x_left() const {
    if (is_zero()) return *this;
    const Field& f = field();
    const auto& th = ctx_.theta();
    const bool has_delta = ctx_.has_derivation();
    const Derivation delta = ctx_.delta();
    SkewPoly r(ctx_);
    r.c_.assign(c_.size() + 1, kZero);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        r.c_[j + 1] = th(c_[j]);
        if (has_delta) r.c_[j] = f.add(r.c_[j], delta(c_[j]));
    }
    r.trim();
    return r;
}

SkewPoly SkewPoly::pow(unsigned e) const {
    SkewPoly r = one(ctx_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::size_t SkewPoly::weight() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem e) { return !e.is_zero(); }));
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_ctx(o);
    SkewPoly r(ctx_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field().add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r(*this);
    for (auto& c : r.c_) c = field().neg(c);
    return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator*(const SkewPoly& o) const { return skew_mul(*this, o); }

bool canonical_less(const SkewPoly& a, const SkewPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

// Ring operations

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.ctx() == b.ctx())) fail("skew polynomials from different rings");
    SkewPoly acc = SkewPoly::zero(a.ctx());
    if (a.is_zero() || b.is_zero()) return acc;
    SkewPoly xb = b;  // X^i · b
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a.coeff(i).is_zero()) acc = acc + xb.scale_left(a.coeff(i));
        if (i + 1 < a.size()) xb = xb.mul_x_left();
    }
    return acc;
}

DivResult right_divide(const SkewPoly& a, const SkewPoly& b) {
    if (b.is_zero()) fail("division by the zero polynomial");
    if (!(a.ctx() == b.ctx())) fail("skew polynomials from different rings");
    const Field& f = a.field();
    const auto& th = a.ctx().theta();
    SkewPoly r = a;
    std::vector<Elem> q;
    if (a.degree() >= b.degree()) q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, kZero);
    // X^d · b for every shift d that can occur.
    std::vector<SkewPoly> shifted;
    shifted.push_back(b);
    while (r.degree() >= b.degree()) {
        const int d = r.degree() - b.degree();
        while (static_cast<int>(shifted.size()) <= d) shifted.push_back(shifted.back().mul_x_left());
        const Elem c = f.div(r.lead(), th.power(d)(b.lead()));
        q[static_cast<std::size_t>(d)] = c;
        r = r - shifted[static_cast<std::size_t>(d)].scale_left(c);
    }
    return {SkewPoly(a.ctx(), std::move(q)), r};
}

DivResult left_divide(const SkewPoly& a, const SkewPoly& b) {
    if (b.is_zero()) fail("division by the zero polynomial");
    if (!(a.ctx() == b.ctx())) fail("skew polynomials from different rings");
    const Field& f = a.field();
    const auto& th = a.ctx().theta();
    const int m = b.degree();
    const Automorphism undo = th.power(-m);
    SkewPoly r = a;
    std::vector<Elem> q;
    if (a.degree() >= m) q.assign(static_cast<std::size_t>(a.degree() - m) + 1, kZero);
    while (r.degree() >= m) {
        const int d = r.degree() - m;
        const Elem c = undo(f.div(r.lead(), b.lead()));
        q[static_cast<std::size_t>(d)] = c;
        // b · (c X^d) = (b · c) X^d
        r = r - skew_mul(b, SkewPoly::monomial(a.ctx(), c, d));
    }
    return {SkewPoly(a.ctx(), std::move(q)), r};
}

bool right_divides(const SkewPoly& divisor, const SkewPoly& a) { return right_divide(a, divisor).remainder.is_zero(); }

SkewPoly reduce_mod(const SkewPoly& a, const SkewPoly& f) { return right_divide(a, f).remainder; }

namespace {

// Right-division Euclid tracking r_i = u_i·a + v_i·b. Returns the last nonzero
// remainder state and the annihilating pair (u, v) with u·a + v·b = 0.
struct EuclidState {
    SkewPoly r0, u0, v0;
    SkewPoly u1, v1;
};

EuclidState run_euclid(const SkewPoly& a, const SkewPoly& b) {
    const RingCtx& ctx = a.ctx();
    SkewPoly r0 = a, r1 = b;
    SkewPoly u0 = SkewPoly::one(ctx), v0 = SkewPoly::zero(ctx);
    SkewPoly u1 = SkewPoly::zero(ctx), v1 = SkewPoly::one(ctx);
    while (!r1.is_zero()) {
        auto [q, r] = right_divide(r0, r1);
        SkewPoly u2 = u0 - q * u1;
        SkewPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {r0, u0, v0, u1, v1};
}

}  // namespace

Bezout lgcd_bezout(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.ctx() == b.ctx())) fail("skew polynomials from different rings");
    if (a.is_zero() && b.is_zero()) fail("lgcd of two zero polynomials");
    EuclidState st = run_euclid(a, b);
    const Elem inv = a.field().inv(st.r0.lead());
    return {st.r0.scale_left(inv), st.u0.scale_left(inv), st.v0.scale_left(inv)};
}

SkewPoly lclm(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.ctx() == b.ctx())) fail("skew polynomials from different rings");
    if (a.is_zero() || b.is_zero()) fail("lclm with a zero polynomial");
    EuclidState st = run_euclid(a, b);
    return (st.u1 * a).monic();
}

// Norms and evaluation

Elem norm(std::uint64_t i, Elem b, const Automorphism& theta) {
    const Field& f = theta.field();
    Elem acc = kOne;
    for (std::uint64_t j = 0; j < i; ++j) acc = f.mul(theta(acc), b);
    return acc;
}

FieldElem norm(std::uint64_t i, const FieldElem& b, const Automorphism& theta) {
    if (!(b.field() == theta.field())) fail("norm: element and automorphism over different fields");
    return {b.field(), norm(i, b.value(), theta)};
}

namespace {

// Σ c_i N_i(b) with N_{i+1} = θ(N_i)·b + δ(N_i): the remainder of X^i modulo X − b.
Elem eval_in(const Field& f, std::span<const Elem> coeffs, Elem b, const Automorphism& th, const Derivation& delta,
             bool has_delta) {
    Elem acc = kZero;
    Elem n = kOne;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) acc = f.add(acc, f.mul(coeffs[i], n));
        Elem next = f.mul(th(n), b);
        if (has_delta) next = f.add(next, delta(n));
        n = next;
    }
    return acc;
}

}  // namespace

Elem skew_eval(const SkewPoly& p, Elem b) {
    const RingCtx& ctx = p.ctx();
    if (!p.field().contains(b)) fail("evaluation point outside the field");
    return eval_in(p.field(), p.coeffs(), b, ctx.theta(), ctx.delta(), ctx.has_derivation());
}

Elem skew_eval(const SkewPoly& p, Elem b, const Embedding& into) {
    if (!(into.base() == p.field())) fail("embedding base does not match the polynomial's field");
    const Field& ext = into.extension();
    if (!ext.contains(b)) fail("evaluation point outside the extension field");
    std::vector<Elem> c;
    c.reserve(p.size());
    for (auto x : p.coeffs()) c.push_back(into(x));
    const Automorphism th(ext, p.ctx().theta().t());
    const Derivation delta(th, into(p.ctx().beta()));
    return eval_in(ext, c, b, th, delta, !delta.is_zero());
}

// Invariance

bool is_invariant(const SkewPoly& p) {
    if (p.is_zero()) fail("invariance of the zero polynomial is undefined");
    const RingCtx& ctx = p.ctx();
    const SkewPoly w = SkewPoly::constant(ctx, ctx.field().primitive());
    return right_divides(p, p * w) && right_divides(p, p * SkewPoly::x(ctx));
}

SkewPoly substitute_shift(const SkewPoly& p, const RingCtx& target, Elem shift) {
    if (!(p.field() == target.field())) fail("substitution into a ring over another field");
    const SkewPoly z = SkewPoly(target, {shift, kOne});
    SkewPoly r = SkewPoly::zero(target);
    for (std::size_t i = p.size(); i-- > 0;) r = r * z + SkewPoly::constant(target, p.coeff(i));
    return r;
}

namespace {

std::vector<FactorPower> sorted(std::vector<FactorPower> v) {
    std::sort(v.begin(), v.end(),
              [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
    return v;
}

// Factorization in F_q[X; θ] (no derivation).
Factorization factor_no_derivation(const SkewPoly& f) {
    const RingCtx& ctx = f.ctx();
    const Field& field = ctx.field();
    const std::uint32_t k = ctx.theta().order();
    const std::uint32_t sub = std::gcd(field.s(), ctx.theta().t() == 0 ? field.s() : ctx.theta().t());

    std::size_t t = 0;
    while (f.coeff(t).is_zero()) ++t;
    // f = c · X^t with c = Σ f_i X^{i−t}; invariant f forces c ∈ F_q^θ[X^k].
    std::vector<Elem> b;
    for (std::size_t i = t; i < f.size(); ++i) {
        const Elem c = f.coeff(i);
        if ((i - t) % k != 0) {
            if (!c.is_zero()) fail_precondition("invariant polynomial not of the form X^t·b(X^k)");
            continue;
        }
        if (!ctx.theta().fixes(c)) fail_precondition("invariant polynomial has coefficients outside the fixed field");
        b.push_back(c);
    }
    const RingCtx comm = RingCtx::commutative(field);
    std::vector<FactorPower> out;
    if (t > 0) out.push_back({SkewPoly::x(ctx), static_cast<int>(t)});
    for (auto& fp : factor_over_subfield(SkewPoly(comm, b), sub)) {
        std::vector<Elem> lifted(static_cast<std::size_t>(fp.factor.degree()) * k + 1, kZero);
        for (std::size_t j = 0; j < fp.factor.size(); ++j) lifted[j * k] = fp.factor.coeff(j);
        out.push_back({SkewPoly(ctx, std::move(lifted)), fp.multiplicity});
    }
    return {sorted(std::move(out))};
}

}  // namespace

Factorization invariant_factorization(const SkewPoly& f) {
    if (f.is_zero() || !f.is_monic()) fail("invariant factorization needs a monic polynomial");
    if (!is_invariant(f)) fail_precondition("f is not invariant (Rf != fR), so it has no invariant factorization");
    const RingCtx& ctx = f.ctx();
    if (!ctx.has_derivation()) return factor_no_derivation(f);

    // X -> X − β carries F_q[X;θ,δ_β] isomorphically onto F_q[X;θ].
    const RingCtx plain = ctx.without_derivation();
    const Elem beta = ctx.beta();
    Factorization inner = factor_no_derivation(substitute_shift(f, plain, ctx.field().neg(beta)));
    std::vector<FactorPower> out;
    for (auto& fp : inner.factors) out.push_back({substitute_shift(fp.factor, ctx, beta), fp.multiplicity});
    return {sorted(std::move(out))};
}

std::pair<SkewPoly, SkewPoly> x_inverse_mod_f(const SkewPoly& f) {
    if (f.is_zero() || !f.is_monic() || f.degree() < 1) fail("x_inverse_mod_f needs a monic f of degree >= 1");
    if (f.coeff(0).is_zero()) fail("X is not invertible modulo Rf when f(0) = 0");
    const RingCtx& ctx = f.ctx();
    const Field& field = f.field();
    const int n = f.degree();
    // With f = X^n − f_{n−1}X^{n−1} − … − f_0: f_j = −a_j.
    const Elem f0_inv = field.inv(field.neg(f.coeff(0)));
    std::vector<Elem> alpha(static_cast<std::size_t>(n), kZero);
    alpha[static_cast<std::size_t>(n - 1)] = f0_inv;
    for (int j = 1; j < n; ++j) {
        // −f_0^{-1} f_j = f_0^{-1} a_j
        alpha[static_cast<std::size_t>(j - 1)] = field.mul(f0_inv, f.coeff(static_cast<std::size_t>(j)));
    }
    SkewPoly a(ctx, alpha);

    if (!ctx.has_derivation()) {
        const Automorphism undo = ctx.theta().inverse();
        for (auto& c : alpha) c = undo(c);
        return {a, SkewPoly(ctx, std::move(alpha))};
    }
    // X·β = 1 + λf for a scalar λ; search λ so that 1 + λf is a left multiple of X.
    const SkewPoly x = SkewPoly::x(ctx);
    for (std::uint32_t l = 1; l < field.q(); ++l) {
        auto [quo, rem] = left_divide(SkewPoly::one(ctx) + f.scale_left(Elem(l)), x);
        if (rem.is_zero()) return {a, quo};
    }
    fail_precondition("X has no right inverse modulo Rf");
}

// Commutative factorization over a subfield

namespace {

SkewPoly cmod(const SkewPoly& a, const SkewPoly& m) { return right_divide(a, m).remainder; }

SkewPoly cgcd(const SkewPoly& a, const SkewPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    return lgcd_bezout(a, b).gcd;
}

SkewPoly derivative(const SkewPoly& a) {
    const Field& f = a.field();
    std::vector<Elem> d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i)), a.coeff(i)));
    return SkewPoly(a.ctx(), std::move(d));
}

SkewPoly pth_root(const SkewPoly& a) {
    const Field& f = a.field();
    std::vector<Elem> r;
    for (std::size_t i = 0; i < a.size(); i += f.p()) r.push_back(f.frobenius(a.coeff(i), f.s() - 1));
    return SkewPoly(a.ctx(), std::move(r));
}

SkewPoly powmod(SkewPoly base, std::uint64_t e, const SkewPoly& m) {
    SkewPoly r = SkewPoly::one(m.ctx());
    base = cmod(base, m);
    while (e) {
        if (e & 1) r = cmod(r * base, m);
        base = cmod(base * base, m);
        e >>= 1;
    }
    return r;
}

void squarefree(const SkewPoly& f, int mult, std::vector<FactorPower>& out) {
    if (f.degree() < 1) return;
    const SkewPoly one = SkewPoly::one(f.ctx());
    const SkewPoly fp = derivative(f);
    if (fp.is_zero()) {
        squarefree(pth_root(f), mult * static_cast<int>(f.field().p()), out);
        return;
    }
    SkewPoly c = cgcd(f, fp);
    SkewPoly w = right_divide(f, c).quotient;
    int i = 1;
    while (w.degree() > 0) {
        SkewPoly y = cgcd(w, c);
        SkewPoly z = right_divide(w, y).quotient;
        if (z.degree() > 0) out.push_back({z.monic(), i * mult});
        ++i;
        w = y;
        c = right_divide(c, y).quotient;
    }
    if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.field().p()), out);
}

struct SubfieldCtx {
    std::uint32_t degree;           // over GF(p)
    std::uint64_t order;            // Q = p^degree
    std::vector<Elem> elements;
};

void equal_degree(const SkewPoly& g, int d, const SubfieldCtx& sf, std::mt19937_64& rng, std::vector<SkewPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const Field& f = g.field();
    const RingCtx& ctx = g.ctx();
    std::uniform_int_distribution<std::size_t> pick(0, sf.elements.size() - 1);
    for (;;) {
        std::vector<Elem> coeffs(static_cast<std::size_t>(g.degree()));
        for (auto& c : coeffs) c = sf.elements[pick(rng)];
        SkewPoly a(ctx, coeffs);
        if (a.degree() < 1) continue;
        SkewPoly b(ctx);
        if (sf.order % 2 == 1) {
            // a^{(Q^d − 1)/2} = (a^{1 + Q + … + Q^{d−1}})^{(Q − 1)/2}
            SkewPoly nrm = SkewPoly::one(ctx);
            SkewPoly ai = cmod(a, g);
            for (int j = 0; j < d; ++j) {
                nrm = cmod(nrm * ai, g);
                ai = powmod(ai, sf.order, g);
            }
            b = powmod(nrm, (sf.order - 1) / 2, g) - SkewPoly::one(ctx);
        } else {
            // Absolute trace to GF(2): Σ_{j < degree·d} a^{2^j}.
            b = SkewPoly::zero(ctx);
            SkewPoly ai = cmod(a, g);
            for (std::uint32_t j = 0; j < sf.degree * static_cast<std::uint32_t>(d); ++j) {
                b = b + ai;
                ai = cmod(ai * ai, g);
            }
        }
        SkewPoly h = cgcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, sf, rng, out);
            equal_degree(right_divide(g, h).quotient, d, sf, rng, out);
            return;
        }
        (void)f;
    }
}

}  // namespace

std::vector<FactorPower> factor_over_subfield(const SkewPoly& b, std::uint32_t sub_degree) {
    if (!b.ctx().is_commutative()) fail("commutative factorization needs θ = id");
    if (b.is_zero()) fail("cannot factor the zero polynomial");
    const Field& field = b.field();
    if (sub_degree == 0 || field.s() % sub_degree != 0) fail("subfield degree must divide the field degree");
    SubfieldCtx sf{sub_degree, 1, {}};
    for (std::uint32_t i = 0; i < sub_degree; ++i) sf.order *= field.p();
    for (std::uint32_t a = 0; a < field.q(); ++a) {
        if (field.frobenius(Elem(a), sub_degree) == Elem(a)) sf.elements.push_back(Elem(a));
    }
    for (auto c : b.coeffs()) {
        if (field.frobenius(c, sub_degree) != c) fail("polynomial has coefficients outside the subfield");
    }

    std::vector<FactorPower> sqf;
    squarefree(b.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eed);
    std::vector<FactorPower> out;
    const RingCtx& ctx = b.ctx();
    const SkewPoly x = SkewPoly::x(ctx);
    for (const auto& [part, mult] : sqf) {
        SkewPoly rest = part;
        SkewPoly h = cmod(x, rest);
        for (int d = 1; rest.degree() >= 2 * d; ++d) {
            h = powmod(h, sf.order, rest);
            SkewPoly g = cgcd(h - x, rest);
            if (g.degree() > 0) {
                std::vector<SkewPoly> pieces;
                equal_degree(g, d, sf, rng, pieces);
                for (auto& pc : pieces) out.push_back({pc, mult});
                rest = right_divide(rest, g).quotient;
                h = cmod(h, rest);
            }
        }
        if (rest.degree() > 0) out.push_back({rest.monic(), mult});
    }
    // Merge repeated factors coming from different square-free layers.
    std::sort(out.begin(), out.end(),
              [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
    std::vector<FactorPower> merged;
    for (auto& fp : out) {
        if (!merged.empty() && merged.back().factor == fp.factor) {
            merged.back().multiplicity += fp.multiplicity;
        } else {
            merged.push_back(fp);
        }
    }
    return merged;
}

}  // namespace skewcodes
