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

/// Parsing and printing of field elements, skew polynomials and matrices.
///
/// Elements: integers (reduced mod p), "w", "w^k", "-w^k", or a coefficient
/// vector "[c0,c1,...]" in the polynomial basis. Polynomials: a coefficient
/// list "[a0,a1,...]" (ascending) or an expression in X such as
/// "X^4 + X^3 + w*X^2 + 1" or "(X-5)(X-3)". Products are taken in the skew ring.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skewcodes/linalg.hpp"
#include "skewcodes/skew_poly.hpp"

namespace skewcodes {

Elem parse_elem(const Field& f, std::string_view text);
/// Integers for prime fields, "0", "1", "w", "w^k" otherwise.
std::string format_elem(const Field& f, Elem a);

SkewPoly parse_poly(const RingCtx& ctx, std::string_view text);
/// Descending, e.g. "X^4 + X^3 + w*X^2 + 1".
std::string format_poly(const SkewPoly& p, std::string_view var = "X");
/// Ascending coefficient list, e.g. "[1,0,w,1,1]".
std::string format_coeffs(const SkewPoly& p);
std::vector<std::string> coeff_strings(const SkewPoly& p);

/// "[[a,b],[c,d]]", "I<n>" (identity) or "0<n>" (zero).
Matrix parse_matrix(const Field& f, std::string_view text);
std::string format_matrix(const Matrix& m);
std::string format_vec(const Field& f, std::span<const Elem> v);

}  // namespace skewcodes
