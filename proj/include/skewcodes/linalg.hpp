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

/// Dense exact linear algebra over a finite field. Vectors are rows; a matrix
/// M acts on the right, v -> v·M.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "skewcodes/field.hpp"

namespace skewcodes {

using Vec = std::vector<Elem>;

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { auto s = row(r); return {s.begin(), s.end()}; }
    std::vector<Vec> row_list() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    /// Entrywise image under a field map.
    Matrix map(const std::function<Elem(Elem)>& fn) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct Rref {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m·vᵀ = 0}.
std::vector<Vec> null_space(const Matrix& m);
/// Basis of {v : v·m = 0}.
std::vector<Vec> left_kernel(const Matrix& m);

/// Nonzero rows of rref(m).
Matrix row_space_basis(const Matrix& m);
bool row_space_equal(const Matrix& a, const Matrix& b);
bool in_row_space(const Matrix& m, std::span<const Elem> v);
/// Basis of rowspace(a) ∩ rowspace(b).
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b);
/// Rows of a followed by rows of b.
Matrix stack(const Matrix& a, const Matrix& b);

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a);
Vec vec_mul(const Field& f, std::span<const Elem> v, const Matrix& m);
std::size_t hamming_weight(std::span<const Elem> v);

/// Coordinates of v ∈ F_q^n over F_p in the basis {x^j e_i}, index i·s + j.
Vec flatten_vector(const Field& f, std::span<const Elem> v);
Vec unflatten_vector(const Field& f, std::span<const Elem> flat);

using AdditiveMap = std::function<Vec(std::span<const Elem>)>;

/// Matrix over GF(p) of an additive map on F_q^n, rows being the images of
/// the basis vectors x^j e_i. Spot-checks additivity on sampled pairs.
Matrix flatten_additive_map(const Field& f, std::size_t n, const AdditiveMap& map);

/// F_p-subspace of F_q^n given by F_q^n vectors; returns the F_q-span basis if
/// the F_p-span is closed under multiplication by the field generator.
struct SubspaceGroup {
    std::vector<Vec> basis;  // F_q-basis if fq_linear, else F_p-basis
    bool fq_linear;
    std::size_t fp_dimension;
};
SubspaceGroup regroup_fp_subspace(const Field& f, std::size_t n, const std::vector<Vec>& fp_basis);

}  // namespace skewcodes
