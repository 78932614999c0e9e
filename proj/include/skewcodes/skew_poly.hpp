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

/// The skew polynomial ring R = F_q[X; θ, δ] with X·a = θ(a)X + β(θ(a) − a).

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewcodes/field.hpp"

namespace skewcodes {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class RingCtx {
public:
    RingCtx(Field field, std::uint32_t theta_t, Elem beta = kZero);
    /// F_q[X] with θ = id.
    static RingCtx commutative(Field field) { return RingCtx(std::move(field), 0, kZero); }

    const Field& field() const { return theta_.field(); }
    const Automorphism& theta() const { return theta_; }
    Elem beta() const { return beta_; }
    Derivation delta() const { return Derivation(theta_, beta_); }
    bool has_derivation() const { return !delta().is_zero(); }
    bool is_commutative() const { return theta_.is_identity(); }

    /// Same field and θ, no derivation.
    RingCtx without_derivation() const { return RingCtx(field(), theta_.t(), kZero); }

    friend bool operator==(const RingCtx& a, const RingCtx& b) {
        return a.theta_ == b.theta_ && a.beta_ == b.beta_;
    }

private:
    Automorphism theta_;
    Elem beta_;
};

class SkewPoly {
public:
    explicit SkewPoly(RingCtx ctx) : ctx_(std::move(ctx)) {}
    SkewPoly(RingCtx ctx, std::vector<Elem> coeffs);

    static SkewPoly zero(const RingCtx& ctx) { return SkewPoly(ctx); }
    static SkewPoly constant(const RingCtx& ctx, Elem c) { return SkewPoly(ctx, {c}); }
    static SkewPoly one(const RingCtx& ctx) { return constant(ctx, kOne); }
    /// c·X^d.
    static SkewPoly monomial(const RingCtx& ctx, Elem c, int d);
    static SkewPoly x(const RingCtx& ctx) { return monomial(ctx, kOne, 1); }
    /// Integer-coefficient convenience, reduced into the prime field.
    static SkewPoly from_ints(const RingCtx& ctx, std::initializer_list<std::int64_t> c);

    const RingCtx& ctx() const { return ctx_; }
    const Field& field() const { return ctx_.field(); }
    std::span<const Elem> coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == kOne; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }
    Elem lead() const { return c_.empty() ? kZero : c_.back(); }

    /// lc^{-1}·p, generating the same left ideal.
    SkewPoly monic() const;
    /// c·p (coefficients scaled on the left).
    SkewPoly scale_left(Elem c) const;
    /// X·p.
    SkewPoly mul_x_left() const;
    SkewPoly pow(unsigned e) const;

    /// Number of nonzero coefficients.
    std::size_t weight() const;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& o) const;

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

    /// Orders by degree, then lexicographically by encoded coefficients from the top.
    friend bool canonical_less(const SkewPoly& a, const SkewPoly& b);

private:
    void trim();
    void check_ctx(const SkewPoly& o) const;

    RingCtx ctx_;
    std::vector<Elem> c_;
};

struct DivResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

struct Bezout {
    SkewPoly gcd;  // monic, Ra + Rb = R·gcd
    SkewPoly u;    // gcd = u·a + v·b
    SkewPoly v;
};

struct FactorPower {
    SkewPoly factor;
    int multiplicity;
};

/// Invariant factorization f = f_1^{α_1} ··· f_t^{α_t}.
struct Factorization {
    std::vector<FactorPower> factors;
};

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

/// a = q·b + r with deg r < deg b.
DivResult right_divide(const SkewPoly& a, const SkewPoly& b);
/// a = b·q + r with deg r < deg b.
DivResult left_divide(const SkewPoly& a, const SkewPoly& b);

bool right_divides(const SkewPoly& divisor, const SkewPoly& a);

/// Monic generator of Ra + Rb with left Bezout cofactors.
Bezout lgcd_bezout(const SkewPoly& a, const SkewPoly& b);
/// Monic generator of Ra ∩ Rb.
SkewPoly lclm(const SkewPoly& a, const SkewPoly& b);

/// N_i(b) = θ^{i-1}(b) ··· θ(b)·b.
Elem norm(std::uint64_t i, Elem b, const Automorphism& theta);
FieldElem norm(std::uint64_t i, const FieldElem& b, const Automorphism& theta);

/// Σ p_i N_i(b): the remainder of p on right division by X − b (δ = 0).
Elem skew_eval(const SkewPoly& p, Elem b);
/// Same, with b in an extension of p's field; θ acts there as x -> x^{p^t}.
Elem skew_eval(const SkewPoly& p, Elem b, const Embedding& into);

/// Rp = pR.
bool is_invariant(const SkewPoly& p);

/// Factorization into distinct monic invariant factors irreducible in N(R),
/// sorted by (degree, coefficients).
Factorization invariant_factorization(const SkewPoly& f);

/// Left-inverse and right-inverse of X modulo Rf: α·X ≡ 1 and X·β ≡ 1.
std::pair<SkewPoly, SkewPoly> x_inverse_mod_f(const SkewPoly& f);

/// Remainder of right division by f.
SkewPoly reduce_mod(const SkewPoly& a, const SkewPoly& f);

/// Image of p under the ring map X -> X + shift into `target` (same field and θ).
/// With shift = β this carries F_q[X;θ] onto F_q[X;θ,δ_β] and back with −β.
SkewPoly substitute_shift(const SkewPoly& p, const RingCtx& target, Elem shift);

/// Distinct-degree/equal-degree factorization of a commutative polynomial whose
/// coefficients lie in the subfield GF(p^sub_degree). Returns monic irreducible
/// factors over that subfield with multiplicities, sorted canonically.
std::vector<FactorPower> factor_over_subfield(const SkewPoly& b, std::uint32_t sub_degree);

}  // namespace skewcodes
