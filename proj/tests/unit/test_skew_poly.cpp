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

#include <doctest.h>

#include "skewcodes/error.hpp"
#include "skewcodes/skew_poly.hpp"
#include "skewcodes/text.hpp"
#include "support/oracle.hpp"

using namespace skewcodes;
namespace T = skewcodes::testing;

TEST_SUITE("skew_poly") {

TEST_CASE("commutation rule X·a = θ(a)X + β(θ(a) − a)") {
    const Field f = Field::from_order(8);
    for (std::uint32_t t = 0; t < 3; ++t)
        for (std::uint32_t b = 0; b < 8; ++b) {
            const RingCtx R(f, t, Elem(b));
            for (std::uint32_t a = 0; a < 8; ++a) {
                const SkewPoly lhs = SkewPoly::x(R) * SkewPoly::constant(R, Elem(a));
                const Elem th = f.frobenius(Elem(a), t);
                const Elem d = t == 0 ? kZero : f.mul(Elem(b), f.sub(th, Elem(a)));
                CHECK(lhs == SkewPoly(R, {d, th}));
            }
        }
}

TEST_CASE("product matches the naive reference expansion") {
    T::Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        const RingCtx R = T::random_ring(rng);
        const T::RefField F(R.field());
        const SkewPoly a = T::random_poly(R, 5, rng), b = T::random_poly(R, 5, rng);
        CHECK(T::to_raw(a * b) == T::ref_skew_mul(F, R.theta().t(), R.beta().raw, T::to_raw(a), T::to_raw(b)));
    }
}

TEST_CASE("right and left division multiply back") {
    T::Rng rng(12);
    for (int it = 0; it < 300; ++it) {
        const RingCtx R = T::random_ring(rng);
        const SkewPoly a = T::random_poly(R, 7, rng);
        SkewPoly b = T::random_poly(R, 4, rng);
        if (b.is_zero()) b = SkewPoly::one(R);
        const auto rd = right_divide(a, b);
        CHECK(rd.quotient * b + rd.remainder == a);
        CHECK(rd.remainder.degree() < b.degree());
        const auto ld = left_divide(a, b);
        CHECK(b * ld.quotient + ld.remainder == a);
        CHECK(ld.remainder.degree() < b.degree());
    }
}

TEST_CASE("division by zero is rejected") {
    const RingCtx R(Field::from_order(4), 1);
    CHECK_THROWS_AS(right_divide(SkewPoly::one(R), SkewPoly::zero(R)), Error);
    CHECK_THROWS_AS(left_divide(SkewPoly::one(R), SkewPoly::zero(R)), Error);
}

TEST_CASE("Bezout cofactors and lclm") {
    T::Rng rng(13);
    for (int it = 0; it < 300; ++it) {
        const RingCtx R = T::random_ring(rng);
        const SkewPoly c = T::random_monic(R, 2, rng);
        const SkewPoly a = T::random_poly(R, 3, rng) * c, b = T::random_poly(R, 3, rng) * c;
        if (a.is_zero() || b.is_zero()) continue;
        const Bezout bz = lgcd_bezout(a, b);
        CHECK(bz.gcd.is_monic());
        CHECK(bz.u * a + bz.v * b == bz.gcd);
        CHECK(right_divides(bz.gcd, a));
        CHECK(right_divides(bz.gcd, b));
        CHECK(right_divides(c, bz.gcd));
        const SkewPoly m = lclm(a, b);
        CHECK(right_divides(a, m));
        CHECK(right_divides(b, m));
        CHECK(m.degree() == a.degree() + b.degree() - bz.gcd.degree());
    }
}

TEST_CASE("evaluation equals the remainder modulo X − b") {
    T::Rng rng(14);
    for (int it = 0; it < 300; ++it) {
        const RingCtx R = T::random_ring(rng);
        const SkewPoly p = T::random_poly(R, 6, rng);
        const Elem b = T::random_elem(R.field(), rng);
        const SkewPoly lin(R, {R.field().neg(b), kOne});
        CHECK(SkewPoly::constant(R, skew_eval(p, b)) == right_divide(p, lin).remainder);
    }
}

TEST_CASE("norms") {
    const Field f = Field::from_order(7);
    const Automorphism id(f, 0);
    CHECK(norm(3, f.pow(Elem(5), 4), id) == kOne);  // 2^3 = 1 in F_7
    for (std::uint32_t b = 1; b < 7; ++b)
        for (std::uint64_t i = 0; i < 8; ++i) CHECK(norm(i, Elem(b), id) == f.pow(Elem(b), static_cast<std::int64_t>(i)));
    const Field f8 = Field::from_order(8);
    const Automorphism fr(f8, 1);
    // N_3(b) = b^{1+2+4} = b^7 = 1 for b != 0
    for (std::uint32_t b = 1; b < 8; ++b) CHECK(norm(3, Elem(b), fr) == kOne);
    const FieldElem fe(f8, Elem(3));
    CHECK(norm(2, fe, fr).value() == f8.mul(f8.frobenius(Elem(3), 1), Elem(3)));
}

TEST_CASE("evaluation at an element of an extension field") {
    const Field f = Field::from_order(4);
    const Extension e = extend_field(f, 2);
    const RingCtx R(f, 1);
    T::Rng rng(15);
    for (int it = 0; it < 50; ++it) {
        const SkewPoly p = T::random_poly(R, 5, rng);
        const Elem b = T::random_elem(f, rng);
        CHECK(skew_eval(p, e.embed(b), e.embed) == e.embed(skew_eval(p, b)));
    }
}

TEST_CASE("invariance of known polynomials") {
    const Field f4 = Field::from_order(4);
    const RingCtx R0(f4, 1);
    CHECK(is_invariant(parse_poly(R0, "X^8+X^6+X^2+1")));
    CHECK(is_invariant(parse_poly(R0, "X^2+1")));
    CHECK(is_invariant(parse_poly(R0, "X")));
    CHECK_FALSE(is_invariant(parse_poly(R0, "X+w")));
    CHECK_FALSE(is_invariant(parse_poly(RingCtx(f4, 1, parse_elem(f4, "w")), "X^8+X^6+X^2+1")));
    const RingCtx R8(Field::from_order(8), 1);
    CHECK_FALSE(is_invariant(parse_poly(R8, "[1,0,w,1,1]")));
    CHECK(is_invariant(parse_poly(R8, "X^3+1")));
}

TEST_CASE("invariant factorization multiplies back into invariant factors") {
    T::Rng rng(16);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        const RingCtx R = T::random_ring(rng);
        if (R.field().q() > 27) continue;
        const SkewPoly f = T::random_invariant(R, 3, rng);
        REQUIRE(is_invariant(f));
        const Factorization fac = invariant_factorization(f);
        SkewPoly prod = SkewPoly::one(R);
        for (const auto& fp : fac.factors) {
            CHECK(fp.factor.is_monic());
            CHECK(is_invariant(fp.factor));
            CHECK(fp.multiplicity >= 1);
            prod = prod * fp.factor.pow(static_cast<unsigned>(fp.multiplicity));
        }
        CHECK(prod == f);
        for (std::size_t i = 0; i + 1 < fac.factors.size(); ++i)
            CHECK(canonical_less(fac.factors[i].factor, fac.factors[i + 1].factor));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("factorizations of X^8 + X^6 + X^2 + 1 over F_4") {
    const Field f4 = Field::from_order(4);
    const RingCtx R0(f4, 1);
    auto fac = invariant_factorization(parse_poly(R0, "X^8+X^6+X^2+1"));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].factor == parse_poly(R0, "X^2+1"));
    CHECK(fac.factors[0].multiplicity == 2);
    CHECK(fac.factors[1].factor == parse_poly(R0, "X^4+X^2+1"));
    // With β = 1 the linear factor X + 1 is itself invariant.
    const RingCtx R1(f4, 1, kOne);
    fac = invariant_factorization(parse_poly(R1, "X^8+X^6+X^2+1"));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].factor == parse_poly(R1, "X+1"));
    CHECK(fac.factors[0].multiplicity == 4);
}

TEST_CASE("non-invariant input to the factorization is rejected") {
    const RingCtx R(Field::from_order(8), 1);
    CHECK_THROWS_AS(invariant_factorization(parse_poly(R, "[1,0,w,1,1]")), Error);
}

TEST_CASE("inverses of X modulo Rf") {
    T::Rng rng(17);
    for (int it = 0; it < 200; ++it) {
        const RingCtx R = T::random_ring(rng);
        SkewPoly f = T::random_monic(R, 1 + static_cast<int>(rng() % 5), rng);
        if (f.coeff(0).is_zero()) continue;
        const SkewPoly x = SkewPoly::x(R);
        try {
            const auto [a, b] = x_inverse_mod_f(f);
            CHECK(reduce_mod(a * x, f) == SkewPoly::one(R));
            CHECK(right_divides(f, x * b - SkewPoly::one(R)));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::precondition);
            CHECK(R.has_derivation());
        }
    }
    const RingCtx R(Field::from_order(7), 0);
    CHECK_THROWS_AS(x_inverse_mod_f(parse_poly(R, "X^2+X")), Error);
}

TEST_CASE("shift substitution is a ring isomorphism onto the derivation ring") {
    T::Rng rng(18);
    for (int it = 0; it < 200; ++it) {
        const RingCtx R = T::random_ring(rng);
        const RingCtx B = R.without_derivation();
        const SkewPoly a = T::random_poly(B, 4, rng), b = T::random_poly(B, 4, rng);
        const Elem beta = R.beta();
        CHECK(substitute_shift(a * b, R, beta) == substitute_shift(a, R, beta) * substitute_shift(b, R, beta));
        CHECK(substitute_shift(substitute_shift(a, R, beta), B, R.field().neg(beta)) == a);
    }
}

TEST_CASE("commutative factorization over a subfield") {
    const Field f = Field::from_order(9);
    const RingCtx C = RingCtx::commutative(f);
    const SkewPoly p = parse_poly(C, "(X^2+1)^2 (X+1)(X^3+2X+1)");
    const auto fac = factor_over_subfield(p, 1);
    SkewPoly prod = SkewPoly::one(C);
    for (const auto& fp : fac) prod = prod * fp.factor.pow(static_cast<unsigned>(fp.multiplicity));
    CHECK(prod == p);
    CHECK(fac.size() == 3);
}

TEST_CASE("ring context equality and normalisation") {
    const Field f = Field::from_order(4);
    CHECK(RingCtx(f, 0, Elem(2)) == RingCtx::commutative(f));
    CHECK_FALSE(RingCtx(f, 1, Elem(2)) == RingCtx(f, 1));
    const SkewPoly a = SkewPoly::one(RingCtx(f, 1)), b = SkewPoly::one(RingCtx(f, 1, kOne));
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("basic polynomial accessors") {
    const RingCtx R(Field::from_order(5), 0);
    const SkewPoly p = SkewPoly::from_ints(R, {1, 0, 3, 0, 0});
    CHECK(p.degree() == 2);
    CHECK(p.weight() == 2);
    CHECK(SkewPoly::zero(R).degree() == kZeroDegree);
    CHECK(p.monic().is_monic());
    CHECK(p.monic().coeff(0) == R.field().inv(Elem(3)));
    CHECK(SkewPoly::x(R).pow(3) == SkewPoly::monomial(R, kOne, 3));
}

}
