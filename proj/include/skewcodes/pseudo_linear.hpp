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

/// Pseudo-linear maps T(v) = (v)Θ·M + β((v)Θ − v) on F_q^n and polynomials in them.

#pragma once

#include <vector>

#include "skewcodes/linalg.hpp"
#include "skewcodes/skew_poly.hpp"

namespace skewcodes {

class PseudoLinearMap {
public:
    PseudoLinearMap(Matrix m, Automorphism theta, Elem beta = kZero);
    /// T_f, built from the companion matrix of f in f's ring.
    static PseudoLinearMap for_poly(const SkewPoly& f);

    const Matrix& matrix() const { return m_; }
    const Automorphism& theta() const { return theta_; }
    Elem beta() const { return beta_; }
    const Field& field() const { return m_.field(); }
    std::size_t n() const { return m_.rows(); }
    bool is_semilinear() const { return beta_.is_zero() || theta_.is_identity(); }
    /// The skew polynomial ring whose polynomials act through this map.
    RingCtx ring() const { return RingCtx(field(), theta_.t(), beta_); }

    Vec operator()(std::span<const Elem> v) const;
    /// T^k(v).
    Vec power(std::span<const Elem> v, std::size_t k) const;

    friend bool operator==(const PseudoLinearMap& a, const PseudoLinearMap& b) {
        return a.m_ == b.m_ && a.theta_ == b.theta_ && a.beta_ == b.beta_;
    }

private:
    Matrix m_;
    Automorphism theta_;
    Elem beta_;
};

/// Companion matrix with superdiagonal ones and bottom row (−a_0, …, −a_{n−1}).
Matrix companion_matrix(const SkewPoly& f);

Vec apply_T(const PseudoLinearMap& t, std::span<const Elem> v);

/// p(T)(v) = Σ p_i T^i(v), coefficients acting on the left.
Vec apply_poly_T(const SkewPoly& p, const PseudoLinearMap& t, std::span<const Elem> v);

/// GF(p)-matrix of v -> p(T)(v) (row convention).
Matrix poly_operator_matrix(const SkewPoly& p, const PseudoLinearMap& t);

struct KernelResult {
    std::vector<Vec> basis;  // F_q-basis when is_fq_linear, else an F_p-basis
    bool is_fq_linear;
    std::size_t fp_dimension;
};

/// Kernel of v -> h(T)(v), computed over GF(p).
KernelResult kernel_of_poly(const SkewPoly& h, const PseudoLinearMap& t);

/// B = M_{θ^{k−1}} ··· M_θ M with k the order of θ.
Matrix theta_conjugate_product(const Matrix& m, const Automorphism& theta);

/// Monic minimal polynomial of a square matrix, as a commutative polynomial.
SkewPoly matrix_minimal_poly(const Matrix& b);

/// m_T = m_B(X^k) for a semi-linear map with invertible matrix.
SkewPoly semilinear_minimal_poly(const PseudoLinearMap& t);

}  // namespace skewcodes
