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

#include "skewcodes/pseudo_linear.hpp"

#include "skewcodes/error.hpp"

namespace skewcodes {

PseudoLinearMap::PseudoLinearMap(Matrix m, Automorphism theta, Elem beta)
    : m_(std::move(m)), theta_(std::move(theta)), beta_(beta) {
    if (!m_.is_square()) fail("pseudo-linear map needs a square matrix");
    if (!(m_.field() == theta_.field())) fail("matrix and automorphism over different fields");
    if (!field().contains(beta_)) fail("derivation parameter outside the field");
}

PseudoLinearMap PseudoLinearMap::for_poly(const SkewPoly& f) {
    return PseudoLinearMap(companion_matrix(f), f.ctx().theta(), f.ctx().beta());
}

Vec PseudoLinearMap::operator()(std::span<const Elem> v) const {
    if (v.size() != n()) fail("vector length does not match the map");
    const Field& f = field();
    Vec tv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) tv[i] = theta_(v[i]);
    Vec out = vec_mul(f, tv, m_);
    if (!beta_.is_zero()) {
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.add(out[i], f.mul(beta_, f.sub(tv[i], v[i])));
    }
    return out;
}

Vec PseudoLinearMap::power(std::span<const Elem> v, std::size_t k) const {
    Vec cur(v.begin(), v.end());
    for (std::size_t i = 0; i < k; ++i) cur = (*this)(cur);
    return cur;
}

Matrix companion_matrix(const SkewPoly& f) {
    if (!f.is_monic() || f.degree() < 1) fail("companion matrix needs a monic polynomial of degree >= 1");
    const Field& field = f.field();
    const auto n = static_cast<std::size_t>(f.degree());
    Matrix a(field, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) a.at(i, i + 1) = kOne;
    for (std::size_t j = 0; j < n; ++j) a.at(n - 1, j) = field.neg(f.coeff(j));
    return a;
}

Vec apply_T(const PseudoLinearMap& t, std::span<const Elem> v) { return t(v); }

Vec apply_poly_T(const SkewPoly& p, const PseudoLinearMap& t, std::span<const Elem> v) {
    if (!(p.ctx() == t.ring())) fail("polynomial ring does not match the map's (θ, β)");
    if (v.size() != t.n()) fail("vector length does not match the map");
    const Field& f = t.field();
    Vec acc(v.size(), kZero);
    Vec cur(v.begin(), v.end());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p.coeff(i).is_zero()) acc = vec_add(f, acc, vec_scale(f, p.coeff(i), cur));
        if (i + 1 < p.size()) cur = t(cur);
    }
    return acc;
}

Matrix poly_operator_matrix(const SkewPoly& p, const PseudoLinearMap& t) {
    return flatten_additive_map(t.field(), t.n(), [&](std::span<const Elem> v) { return apply_poly_T(p, t, v); });
}

KernelResult kernel_of_poly(const SkewPoly& h, const PseudoLinearMap& t) {
    const Field& f = t.field();
    const Matrix op = poly_operator_matrix(h, t);
    std::vector<Vec> fp_basis;
    for (const auto& flat : left_kernel(op)) fp_basis.push_back(unflatten_vector(f, flat));
    SubspaceGroup g = regroup_fp_subspace(f, t.n(), fp_basis);
    return {std::move(g.basis), g.fq_linear, g.fp_dimension};
}

Matrix theta_conjugate_product(const Matrix& m, const Automorphism& theta) {
    if (!m.is_square()) fail("θ-conjugate product needs a square matrix");
    if (!(m.field() == theta.field())) fail("matrix and automorphism over different fields");
    Matrix b = m;
    for (std::uint32_t j = 1; j < theta.order(); ++j) {
        const Automorphism tj = theta.power(j);
        b = m.map([&](Elem e) { return tj(e); }) * b;
    }
    return b;
}

SkewPoly matrix_minimal_poly(const Matrix& b) {
    if (!b.is_square()) fail("minimal polynomial needs a square matrix");
    const Field& f = b.field();
    const RingCtx comm = RingCtx::commutative(f);
    const std::size_t n = b.rows();
    SkewPoly acc = SkewPoly::one(comm);
    for (std::size_t i = 0; i < n; ++i) {
        // Krylov sequence e_i, e_i B, e_i B², … until the first dependency.
        std::vector<Vec> seq;
        Vec v(n, kZero);
        v[i] = kOne;
        for (;;) {
            seq.push_back(v);
            const Matrix k = Matrix::from_rows(f, n, seq);
            if (rank(k) < seq.size()) break;
            v = vec_mul(f, v, b);
        }
        // Kernel vector of the sequence rows: Σ y_l v_l = 0 with y_last != 0.
        const auto ker = left_kernel(Matrix::from_rows(f, n, seq));
        const Vec& y = ker.front();
        const Elem inv = f.inv(y.back());
        std::vector<Elem> coeffs(y.size());
        for (std::size_t l = 0; l < y.size(); ++l) coeffs[l] = f.mul(inv, y[l]);
        acc = lclm(acc, SkewPoly(comm, std::move(coeffs)));
    }
    return acc;
}

SkewPoly semilinear_minimal_poly(const PseudoLinearMap& t) {
    if (!t.is_semilinear()) fail("minimal polynomial is only available for semi-linear maps (δ = 0)");
    if (rank(t.matrix()) != t.n()) fail_precondition("semi-linear minimal polynomial needs an invertible matrix");
    const Matrix b = theta_conjugate_product(t.matrix(), t.theta());
    const SkewPoly mb = matrix_minimal_poly(b);
    const std::uint32_t k = t.theta().order();
    const RingCtx ctx(t.field(), t.theta().t(), kZero);
    std::vector<Elem> lifted(static_cast<std::size_t>(mb.degree()) * k + 1, kZero);
    for (std::size_t j = 0; j < mb.size(); ++j) lifted[j * k] = mb.coeff(j);
    return SkewPoly(ctx, std::move(lifted));
}

}  // namespace skewcodes
