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
#include "skewcodes/text.hpp"
#include "support/oracle.hpp"

using namespace skewcodes;
namespace T = skewcodes::testing;

TEST_SUITE("text") {

TEST_CASE("element syntax") {
    const Field f8 = Field::from_order(8);
    CHECK(parse_elem(f8, "0") == kZero);
    CHECK(parse_elem(f8, "1") == kOne);
    CHECK(parse_elem(f8, "w") == f8.primitive());
    CHECK(parse_elem(f8, "w^3") == f8.pow(f8.primitive(), 3));
    CHECK(parse_elem(f8, "w^7") == kOne);
    CHECK(parse_elem(f8, "[0,1,1]") == f8.from_coeffs(std::vector<std::uint32_t>{0, 1, 1}));
    CHECK(format_elem(f8, f8.pow(f8.primitive(), 5)) == "w^5");
    CHECK(format_elem(f8, f8.primitive()) == "w");
    const Field f7 = Field::from_order(7);
    CHECK(parse_elem(f7, "-1") == Elem(6));
    CHECK(parse_elem(f7, "10") == Elem(3));
    CHECK(format_elem(f7, Elem(5)) == "5");
    CHECK_THROWS_AS(parse_elem(f8, "v"), Error);
    CHECK_THROWS_AS(parse_elem(f8, "[1,0,0,1]"), Error);
}

TEST_CASE("element round trip") {
    for (std::uint32_t q : {2u, 4u, 7u, 9u, 16u, 27u})  {
        const Field f = Field::from_order(q);
        for (std::uint32_t a = 0; a < q; ++a) CHECK(parse_elem(f, format_elem(f, Elem(a))) == Elem(a));
    }
}

TEST_CASE("polynomial syntax") {
    const RingCtx R(Field::from_order(7), 0);
    CHECK(parse_poly(R, "(X-5)(X-3)") == parse_poly(R, "X^2 - 8X + 15"));
    CHECK(parse_poly(R, "[1,0,1]") == parse_poly(R, "x^2+1"));
    CHECK(parse_poly(R, "X^6-1").degree() == 6);
    CHECK(format_poly(parse_poly(R, "X^2+6")) == "X^2 + 6");
    CHECK(format_poly(parse_poly(R, "0")) == "0");
    CHECK_THROWS_AS(parse_poly(R, "X^"), Error);
    CHECK_THROWS_AS(parse_poly(R, "(X+1"), Error);
    const RingCtx S(Field::from_order(8), 1);
    const SkewPoly p = parse_poly(S, "X^4 + X^3 + w*X^2 + 1");
    CHECK(format_coeffs(p) == "[1,0,w,1,1]");
    CHECK(format_poly(p) == "X^4 + X^3 + w*X^2 + 1");
    // Products are taken in the skew ring.
    CHECK(parse_poly(S, "X w") == parse_poly(S, "w^2 X"));
}

TEST_CASE("polynomial round trip") {
    T::Rng rng(51);
    for (int it = 0; it < 300; ++it) {
        const RingCtx R = T::random_ring(rng);
        const SkewPoly p = T::random_poly(R, 6, rng);
        CHECK(parse_poly(R, format_poly(p)) == p);
        CHECK(parse_poly(R, format_coeffs(p)) == p);
    }
}

TEST_CASE("matrix syntax") {
    const Field f = Field::from_order(4);
    const Matrix m = parse_matrix(f, "[[1,w],[0,w^2]]");
    CHECK(m.rows() == 2);
    CHECK(m.at(0, 1) == f.primitive());
    CHECK(parse_matrix(f, format_matrix(m)) == m);
    CHECK(parse_matrix(f, "I3") == Matrix::identity(f, 3));
    CHECK(parse_matrix(f, "02").is_zero());
    CHECK_THROWS_AS(parse_matrix(f, "[[1,0],[1]]"), Error);
}

}
