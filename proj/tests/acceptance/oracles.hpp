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

// Test-side re-implementations used as oracles by the property suites.
#pragma once

#include <vector>

#include "skewcodes/field.hpp"
#include "skewcodes/linalg.hpp"
#include "skewcodes/skew_poly.hpp"

namespace skewcodes::acceptance {

/// T(v) = θ(v)M + β(θ(v) − v), written out coordinate by coordinate.
inline Vec oracle_T(const Matrix& m, const Automorphism& th, Elem beta, const Vec& v) {
    const Field& F = m.field();
    const std::size_t n = v.size();
    Vec tv(n);
    for (std::size_t i = 0; i < n; ++i) tv[i] = th(v[i]);
    Vec out(n, kZero);
    for (std::size_t j = 0; j < n; ++j) {
        Elem acc = F.mul(beta, F.sub(tv[j], v[j]));
        for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, F.mul(tv[i], m.at(i, j)));
        out[j] = acc;
    }
    return out;
}

/// Companion matrix of monic f: ones above the diagonal, last row −f_0 … −f_{n−1}.
inline Matrix oracle_companion(const SkewPoly& f) {
    const Field& F = f.field();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Matrix m(F, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = kOne;
    for (std::size_t j = 0; j < n; ++j) m.at(n - 1, j) = F.neg(f.coeff(j));
    return m;
}

/// p(T)(v) = Σ p_i T^i(v).
inline Vec oracle_poly_T(const SkewPoly& p, const Matrix& m, const Automorphism& th, Elem beta, const Vec& v) {
    const Field& F = m.field();
    Vec acc(v.size(), kZero), cur = v;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) cur = oracle_T(m, th, beta, cur);
        for (std::size_t j = 0; j < v.size(); ++j) acc[j] = F.add(acc[j], F.mul(p.coeff(i), cur[j]));
    }
    return acc;
}

/// Vectors v·w^j for each spanning vector and j < s: an F_p spanning set.
inline std::vector<Vec> fp_span(const Field& F, const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    Elem wj = kOne;
    for (std::uint32_t j = 0; j < F.s(); ++j) {
        for (const auto& v : vs) out.push_back(vec_scale(F, wj, v));
        wj = F.mul(wj, F.primitive());
    }
    return out;
}

/// F_p-matrix whose rows are the flattened vectors.
inline Matrix flat_matrix(const Field& F, std::size_t n, const std::vector<Vec>& vs) {
    std::vector<Vec> rows;
    for (const auto& v : vs) rows.push_back(flatten_vector(F, v));
    return Matrix::from_rows(F.prime_subfield(), n * F.s(), rows);
}

/// Unit vectors of F_q^n over F_p: e_i·w^j.
inline std::vector<Vec> fp_basis(const Field& F, std::size_t n) {
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, kZero);
        e[i] = kOne;
        units.push_back(e);
    }
    return fp_span(F, units);
}

/// Rf = fR, tested on ring generators: f·X and f·w must be left multiples of f.
inline bool oracle_invariant(const SkewPoly& f) {
    const RingCtx& R = f.ctx();
    const SkewPoly fx = f * SkewPoly::x(R);
    const SkewPoly fw = f * SkewPoly::constant(R, R.field().primitive());
    return right_divide(fx, f).remainder.is_zero() && right_divide(fw, f).remainder.is_zero();
}

}  // namespace skewcodes::acceptance
