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

#include <cmath>
#include <numeric>

#include "skewcodes/error.hpp"
#include "skewcodes/field.hpp"
#include "support/oracle.hpp"

using namespace skewcodes;
using skewcodes::testing::RefField;

TEST_SUITE("field") {

TEST_CASE("arithmetic agrees with schoolbook reference on all pairs") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u}) {
        const Field f = Field::from_order(q);
        const RefField r(f);
        CAPTURE(q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(f.add(Elem(a), Elem(b)).raw == r.add(a, b));
                REQUIRE(f.mul(Elem(a), Elem(b)).raw == r.mul(a, b));
                REQUIRE(f.sub(Elem(a), Elem(b)).raw == r.sub(a, b));
            }
        for (std::uint32_t a = 1; a < q; ++a) REQUIRE(f.mul(Elem(a), f.inv(Elem(a))) == kOne);
    }
}

TEST_CASE("default moduli are irreducible and w is primitive") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u, 32u, 49u, 81u, 125u, 256u, 343u, 1024u}) {
        const Field f = Field::from_order(q);
        CAPTURE(q);
        CHECK(is_irreducible_mod_p(f.modulus(), f.p()));
        CHECK(f.order(f.primitive()) == q - 1);
        for (std::uint32_t k = 0; k < q - 1; k += 1 + q / 17) CHECK(f.log(f.exp(k)) == k);
    }
}

TEST_CASE("prime field primitive element is the smallest primitive root") {
    CHECK(Field::from_order(7).primitive() == Elem(3));
    CHECK(Field::from_order(5).primitive() == Elem(2));
    CHECK(Field::from_order(3).primitive() == Elem(2));
}

TEST_CASE("GF(4) and GF(8) use x^2+x+1 and x^3+x+1") {
    CHECK(Field::from_order(4).modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field::from_order(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    const Field f8 = Field::from_order(8);
    const Elem w = f8.primitive();
    CHECK(f8.add(f8.pow(w, 3), f8.add(w, kOne)) == kZero);
}

TEST_CASE("custom modulus is honoured and reducible ones are rejected") {
    const Field f = Field::create(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
    const Elem w = f.primitive();
    CHECK(f.add(f.pow(w, 3), f.add(f.pow(w, 2), kOne)) == kZero);
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);
    CHECK_THROWS_AS(Field::from_order(6), Error);
    CHECK_THROWS_AS(Field::create(4, 1), Error);
}

TEST_CASE("pow handles negative exponents and 0^0") {
    const Field f = Field::from_order(9);
    for (std::uint32_t a = 1; a < 9; ++a) CHECK(f.mul(f.pow(Elem(a), -3), f.pow(Elem(a), 3)) == kOne);
    CHECK(f.pow(kZero, 0) == kOne);
    CHECK(f.pow(kZero, 5) == kZero);
}

TEST_CASE("Frobenius is a field automorphism with the right fixed field") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 27u, 64u}) {
        const Field f = Field::from_order(q);
        for (std::uint32_t t = 0; t < f.s(); ++t) {
            const Automorphism th(f, t);
            std::size_t fixed = 0;
            for (std::uint32_t a = 0; a < q; ++a) {
                if (th.fixes(Elem(a))) ++fixed;
                for (std::uint32_t b = 0; b < q; b += 3) {
                    CHECK(th(f.mul(Elem(a), Elem(b))) == f.mul(th(Elem(a)), th(Elem(b))));
                    CHECK(th(f.add(Elem(a), Elem(b))) == f.add(th(Elem(a)), th(Elem(b))));
                }
                CHECK(th.inverse()(th(Elem(a))) == Elem(a));
                CHECK(th.power(th.order())(Elem(a)) == Elem(a));
            }
            std::uint32_t expect = 1;
            for (std::uint32_t i = 0; i < std::gcd(f.s(), t == 0 ? f.s() : t); ++i) expect *= f.p();
            CHECK(fixed == expect);
        }
    }
}

TEST_CASE("derivation satisfies the twisted Leibniz rule") {
    const Field f = Field::from_order(8);
    for (std::uint32_t b = 0; b < 8; ++b) {
        const Derivation d(Automorphism(f, 1), Elem(b));
        for (std::uint32_t x = 0; x < 8; ++x)
            for (std::uint32_t y = 0; y < 8; ++y) {
                const Elem lhs = d(f.mul(Elem(x), Elem(y)));
                const Elem rhs = f.add(f.mul(d(Elem(x)), Elem(y)), f.mul(d.theta()(Elem(x)), d(Elem(y))));
                CHECK(lhs == rhs);
            }
    }
    CHECK(Derivation(Automorphism(f, 0), Elem(3)).is_zero());
}

TEST_CASE("FieldElem refuses mixed fields") {
    const FieldElem a(Field::from_order(4), Elem(2));
    const FieldElem b(Field::from_order(8), Elem(2));
    CHECK_THROWS_AS(a + b, Error);
    CHECK((a * a.inverse()).value() == kOne);
    CHECK(element_order(a) == 3);
}

TEST_CASE("extension embeddings are ring homomorphisms commuting with Frobenius") {
    for (auto [q, m] : {std::pair{2u, 3u}, {4u, 2u}, {7u, 2u}, {3u, 2u}, {8u, 2u}}) {
        const Field base = Field::from_order(q);
        const Extension e = extend_field(base, m);
        CHECK(e.field.q() == static_cast<std::uint32_t>(std::pow(q, m) + 0.5));
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(e.embed(base.mul(Elem(a), Elem(b))) == e.field.mul(e.embed(Elem(a)), e.embed(Elem(b))));
                CHECK(e.embed(base.add(Elem(a), Elem(b))) == e.field.add(e.embed(Elem(a)), e.embed(Elem(b))));
            }
            for (std::uint32_t t = 0; t < base.s(); ++t)
                CHECK(e.embed(base.frobenius(Elem(a), t)) == e.field.frobenius(e.embed(Elem(a)), t));
        }
    }
}

TEST_CASE("from_int reduces into the prime field") {
    const Field f = Field::from_order(7);
    CHECK(f.from_int(-1) == Elem(6));
    CHECK(f.from_int(15) == Elem(1));
    const Field g = Field::from_order(9);
    CHECK(g.in_prime_subfield(g.from_int(5)));
}

}
