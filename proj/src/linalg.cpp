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

#include "skewcodes/linalg.hpp"

#include <algorithm>
#include <random>

#include "skewcodes/error.hpp"

namespace skewcodes {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, kZero) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = kOne;
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail("matrix rows of unequal length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!field.contains(rows[r][c])) fail("matrix entry outside the field");
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) fail("matrix product over different fields");
    if (cols_ != o.rows_) fail("matrix product dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) fail("matrix sum shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) fail("matrix difference shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::map(const std::function<Elem(Elem)>& fn) const {
    Matrix r(*this);
    for (auto& e : r.data_) e = fn(e);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Rref rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        }
        const Elem inv = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(inv, a.at(r, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const Elem factor = a.at(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> null_space(const Matrix& m) {
    const Field& f = m.field();
    Rref red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), kZero);
        v[free] = kOne;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = f.neg(red.reduced.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> left_kernel(const Matrix& m) { return null_space(m.transpose()); }

Matrix row_space_basis(const Matrix& m) {
    Rref red = rref(m);
    Matrix b(m.field(), red.rank, m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = red.reduced.at(i, j);
    }
    return b;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) fail("row-space comparison over different fields");
    if (a.cols() != b.cols()) fail("row-space comparison with different column counts");
    return row_space_basis(a) == row_space_basis(b);
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()) || a.cols() != b.cols()) fail("cannot stack matrices of different shapes");
    Matrix s(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) s.at(a.rows() + r, c) = b.at(r, c);
    }
    return s;
}

bool in_row_space(const Matrix& m, std::span<const Elem> v) {
    if (v.size() != m.cols()) fail("vector length does not match matrix width");
    Matrix one = Matrix::from_rows(m.field(), m.cols(), {Vec(v.begin(), v.end())});
    return rank(stack(m, one)) == rank(m);
}

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b) {
    // (x, y) with x·A + y·B = 0 gives x·A in both spaces.
    const Matrix ab = stack(a, b);
    std::vector<Vec> rows;
    for (const auto& xy : left_kernel(ab)) {
        Vec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(a.rows()));
        rows.push_back(vec_mul(a.field(), x, a));
    }
    return row_space_basis(Matrix::from_rows(a.field(), a.cols(), rows));
}

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) fail("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

Vec vec_mul(const Field& f, std::span<const Elem> v, const Matrix& m) {
    if (v.size() != m.rows()) fail("vector length does not match matrix height");
    Vec r(m.cols(), kZero);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
    }
    return r;
}

std::size_t hamming_weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); }));
}

Vec flatten_vector(const Field& f, std::span<const Elem> v) {
    const std::uint32_t s = f.s();
    Vec out(v.size() * s);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::uint32_t j = 0; j < s; ++j) out[i * s + j] = Elem(f.coeff(v[i], j));
    }
    return out;
}

Vec unflatten_vector(const Field& f, std::span<const Elem> flat) {
    const std::uint32_t s = f.s();
    if (flat.size() % s != 0) fail("flattened vector length is not a multiple of the extension degree");
    Vec out(flat.size() / s);
    std::vector<std::uint32_t> c(s);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::uint32_t j = 0; j < s; ++j) c[j] = flat[i * s + j].raw;
        out[i] = f.from_coeffs(c);
    }
    return out;
}

Matrix flatten_additive_map(const Field& f, std::size_t n, const AdditiveMap& map) {
    const std::uint32_t s = f.s();
    const Field fp = f.prime_subfield();
    Matrix m(fp, n * s, n * s);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < s; ++j) {
            Vec e(n, kZero);
            e[i] = f.exp(0);
            if (j > 0) {
                std::vector<std::uint32_t> c(s, 0);
                c[j] = 1;
                e[i] = f.from_coeffs(c);
            }
            const Vec img = map(e);
            if (img.size() != n) fail("additive map changed the vector length");
            const Vec flat = flatten_vector(f, img);
            for (std::size_t c = 0; c < flat.size(); ++c) m.at(i * s + j, c) = flat[c];
        }
    }
    // Spot-check additivity on a few pseudo-random pairs.
    std::mt19937_64 rng(0xadd);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    for (int trial = 0; trial < 8; ++trial) {
        Vec u(n), v(n);
        for (auto& x : u) x = Elem(pick(rng));
        for (auto& x : v) x = Elem(pick(rng));
        const Vec lhs = map(vec_add(f, u, v));
        const Vec rhs = vec_add(f, map(u), map(v));
        if (lhs != rhs) fail("map is not additive");
    }
    return m;
}

SubspaceGroup regroup_fp_subspace(const Field& f, std::size_t n, const std::vector<Vec>& fp_basis) {
    const Field fp = f.prime_subfield();
    const std::size_t ns = n * f.s();
    std::vector<Vec> flat;
    for (const auto& v : fp_basis) flat.push_back(flatten_vector(f, v));
    const Matrix span = Matrix::from_rows(fp, ns, flat);
    const std::size_t dim = rank(span);

    bool closed = true;
    if (f.s() > 1) {
        const Elem w = f.primitive();
        for (const auto& v : fp_basis) {
            if (!in_row_space(span, flatten_vector(f, vec_scale(f, w, v)))) {
                closed = false;
                break;
            }
        }
    }
    if (!closed) return {fp_basis, false, dim};
    if (fp_basis.empty()) return {{}, true, 0};
    Matrix fq_basis = row_space_basis(Matrix::from_rows(f, n, fp_basis));
    return {fq_basis.row_list(), true, dim};
}

}  // namespace skewcodes
